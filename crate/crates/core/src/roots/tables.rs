//! Stored invariant tables keyed by (type, node family).
//!
//! Positivity values p(V) go back to Goldstein's co-ampleness
//! computations, the sp_V values to the classification of linear
//! Schubert subvarieties. They are data, not derived quantities; the
//! crate computes nothing that would replace them. Exceptional-type
//! entries known only as lower bounds carry the `lower_bound` flag and
//! every consumer uses them conservatively (a lower bound on sp_V
//! weakens a degree exclusion, never strengthens it).

use super::{DynkinType, TableValue, VarietyDescriptor};
use crate::{Error, Result};

fn unavailable(desc: &VarietyDescriptor, what: &str) -> Error {
    Error::DataUnavailable(format!("no {what} table entry for {desc}"))
}

/// Positivity p(V) of the tangent bundle.
///
/// The D row of the source table lists a single value 2l-3 spanning
/// both node families (k <= l-2 and the spinor nodes); that merged
/// cell is stored as-is for every D node. The F4 row lists "8, 9, 10"
/// without a node mapping, so all F4 nodes carry the certified lower
/// bound 8.
pub(crate) fn positivity(desc: &VarietyDescriptor) -> Result<TableValue> {
    let l = desc.rank();
    let k = desc.node();
    match desc.dynkin() {
        DynkinType::A => Ok(TableValue::exact(l)),
        DynkinType::B => {
            if k < l {
                Ok(TableValue::exact(2 * l - 2))
            } else {
                Ok(TableValue::exact(2 * l - 1))
            }
        }
        DynkinType::C => {
            if k == 1 {
                // SGr(1; 2l) is P^{2l-1}; the table covers it only as
                // an A-type row.
                Err(unavailable(desc, "positivity"))
            } else {
                Ok(TableValue::exact(2 * l - k))
            }
        }
        DynkinType::D => Ok(TableValue::exact(2 * l - 3)),
        DynkinType::E => Ok(TableValue::exact(match l {
            6 => 11,
            7 => 17,
            _ => 29,
        })),
        DynkinType::F => Ok(TableValue::at_least(8)),
        DynkinType::G => Err(unavailable(desc, "positivity")),
    }
}

/// Dimension sp_V of a maximal linear Schubert subspace.
///
/// `Ok(None)` means the variety is covered by the tables but no sp_V
/// value is recorded (F4); consumers must skip sp-based criteria then.
pub(crate) fn max_linear_subspace(desc: &VarietyDescriptor) -> Result<Option<TableValue>> {
    let l = desc.rank();
    let k = desc.node();
    match desc.dynkin() {
        DynkinType::A => Ok(Some(TableValue::exact(k.max(l - k + 1)))),
        DynkinType::B => {
            if k < l {
                Ok(Some(TableValue::exact(k.max(l - k))))
            } else {
                Ok(Some(TableValue::exact(l - 1)))
            }
        }
        DynkinType::C => {
            if k == 1 {
                Err(unavailable(desc, "sp"))
            } else if k < l {
                Ok(Some(TableValue::exact(k.max(l - k))))
            } else {
                Ok(Some(TableValue::exact(l - 1)))
            }
        }
        DynkinType::D => {
            if k <= l - 2 {
                Ok(Some(TableValue::exact(k.max(l - k))))
            } else {
                Ok(Some(TableValue::exact(l - 1)))
            }
        }
        DynkinType::E => Ok(Some(match l {
            6 => TableValue::at_least(3),
            _ => TableValue::at_least(4),
        })),
        DynkinType::F => Ok(None),
        DynkinType::G => Err(unavailable(desc, "sp")),
    }
}

/// Rank thresholds from which Pic(V) -> Pic(X) restricts isomorphically
/// for smooth 2-codimensional X.
pub(crate) fn picard_iso(desc: &VarietyDescriptor) -> bool {
    let l = desc.rank();
    match desc.dynkin() {
        DynkinType::A => l >= 6,
        DynkinType::B => l >= 4,
        DynkinType::C => l >= 6,
        DynkinType::D => l >= 5,
        DynkinType::E | DynkinType::F => true,
        DynkinType::G => false,
    }
}

/// Codimension bound of the split-normal-bundle criterion, when the
/// type/rank row exists: floor((l+1)/3) with per-type rank floors for
/// the classical series, fixed values for E6/E7/E8, nothing for F4/G2.
pub(crate) fn split_codim_bound(dynkin: DynkinType, rank: u32) -> Option<u32> {
    match dynkin {
        DynkinType::A | DynkinType::C if rank >= 6 => Some((rank + 1) / 3),
        DynkinType::B | DynkinType::D if rank >= 5 => Some((rank + 1) / 3),
        DynkinType::E => Some(if rank == 8 { 3 } else { 2 }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desc(dynkin: DynkinType, rank: u32, node: u32) -> VarietyDescriptor {
        VarietyDescriptor::new(dynkin, rank, node).unwrap()
    }

    #[test]
    fn positivity_rows() {
        assert_eq!(positivity(&desc(DynkinType::A, 9, 4)).unwrap(), TableValue::exact(9));
        assert_eq!(positivity(&desc(DynkinType::B, 6, 2)).unwrap(), TableValue::exact(10));
        assert_eq!(positivity(&desc(DynkinType::B, 6, 6)).unwrap(), TableValue::exact(11));
        assert_eq!(positivity(&desc(DynkinType::C, 8, 3)).unwrap(), TableValue::exact(13));
        assert_eq!(positivity(&desc(DynkinType::D, 7, 2)).unwrap(), TableValue::exact(11));
        assert_eq!(positivity(&desc(DynkinType::D, 7, 7)).unwrap(), TableValue::exact(11));
        assert_eq!(positivity(&desc(DynkinType::E, 6, 1)).unwrap(), TableValue::exact(11));
    }

    #[test]
    fn sp_rows() {
        assert_eq!(
            max_linear_subspace(&desc(DynkinType::A, 11, 1)).unwrap(),
            Some(TableValue::exact(11))
        );
        assert_eq!(
            max_linear_subspace(&desc(DynkinType::A, 7, 5)).unwrap(),
            Some(TableValue::exact(5))
        );
        assert_eq!(
            max_linear_subspace(&desc(DynkinType::B, 6, 6)).unwrap(),
            Some(TableValue::exact(5))
        );
        assert_eq!(
            max_linear_subspace(&desc(DynkinType::C, 6, 6)).unwrap(),
            Some(TableValue::exact(5))
        );
        assert_eq!(
            max_linear_subspace(&desc(DynkinType::D, 8, 7)).unwrap(),
            Some(TableValue::exact(7))
        );
        assert_eq!(max_linear_subspace(&desc(DynkinType::F, 4, 1)).unwrap(), None);
    }

    #[test]
    fn picard_thresholds() {
        assert!(!picard_iso(&desc(DynkinType::A, 5, 1)));
        assert!(picard_iso(&desc(DynkinType::A, 6, 1)));
        assert!(picard_iso(&desc(DynkinType::B, 4, 1)));
        assert!(!picard_iso(&desc(DynkinType::C, 5, 2)));
        assert!(picard_iso(&desc(DynkinType::D, 5, 1)));
        assert!(picard_iso(&desc(DynkinType::F, 4, 1)));
    }

    #[test]
    fn codim_bounds() {
        assert_eq!(split_codim_bound(DynkinType::A, 6), Some(2));
        assert_eq!(split_codim_bound(DynkinType::A, 5), None);
        assert_eq!(split_codim_bound(DynkinType::B, 5), Some(2));
        assert_eq!(split_codim_bound(DynkinType::D, 11), Some(4));
        assert_eq!(split_codim_bound(DynkinType::E, 7), Some(2));
        assert_eq!(split_codim_bound(DynkinType::E, 8), Some(3));
        assert_eq!(split_codim_bound(DynkinType::F, 4), None);
        assert_eq!(split_codim_bound(DynkinType::G, 2), None);
    }
}
