//! Closed-form oracles for the classical variety families, used by
//! `verify --tables` to cross-check the root-system computations.
//!
//! These are written from the textbook dimension formulas and the
//! invariant-table entries directly, independent of the Cartan-matrix
//! enumeration they check. `None` means the tables do not cover the
//! node (node 1 of the C series).

use cicrit::roots::DynkinType;

/// Expected dim G/P from the classical closed forms.
pub fn closed_form_dim(dynkin: DynkinType, rank: u64, node: u64) -> Option<u64> {
    let (l, k) = (rank, node);
    match dynkin {
        DynkinType::A => Some(k * (l + 1 - k)),
        DynkinType::B => Some(k * (4 * l - 3 * k + 1) / 2),
        DynkinType::C => {
            if k == 1 {
                None
            } else {
                Some(k * (4 * l - 3 * k + 1) / 2)
            }
        }
        DynkinType::D => {
            if k <= l - 2 {
                Some(k * (4 * l - 3 * k - 1) / 2)
            } else {
                Some(l * (l - 1) / 2)
            }
        }
        _ => None,
    }
}

/// Expected `m = index - 3` from the invariant-table row.
pub fn table_m(dynkin: DynkinType, rank: u64, node: u64) -> Option<i64> {
    let (l, k) = (rank as i64, node as i64);
    match dynkin {
        DynkinType::A => Some(l - 2),
        DynkinType::B => Some(if k < l { 2 * l - k - 3 } else { 2 * l - 3 }),
        DynkinType::C => {
            if k == 1 {
                None
            } else {
                Some(2 * l - k - 2)
            }
        }
        DynkinType::D => Some(if k <= l - 2 { 2 * l - k - 4 } else { 2 * l - 5 }),
        _ => None,
    }
}

/// Every classical (type, rank, node) triple with rank at most `rank_max`.
pub fn classical_descriptors(rank_max: u32) -> Vec<(DynkinType, u32, u32)> {
    let mut out = Vec::new();
    let series = [
        (DynkinType::A, 1u32),
        (DynkinType::B, 2),
        (DynkinType::C, 3),
        (DynkinType::D, 4),
    ];
    for (dynkin, min_rank) in series {
        for rank in min_rank..=rank_max {
            for node in 1..=rank {
                out.push((dynkin, rank, node));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_dimensions() {
        assert_eq!(closed_form_dim(DynkinType::A, 6, 2), Some(10));
        assert_eq!(closed_form_dim(DynkinType::D, 5, 5), Some(10));
        assert_eq!(closed_form_dim(DynkinType::B, 3, 3), Some(6));
        assert_eq!(closed_form_dim(DynkinType::C, 3, 3), Some(6));
        assert_eq!(closed_form_dim(DynkinType::C, 5, 1), None);
    }

    #[test]
    fn known_m_values() {
        assert_eq!(table_m(DynkinType::A, 11, 1), Some(9));
        assert_eq!(table_m(DynkinType::C, 8, 3), Some(11));
        assert_eq!(table_m(DynkinType::B, 6, 6), Some(9));
        assert_eq!(table_m(DynkinType::D, 6, 3), Some(5));
    }
}
