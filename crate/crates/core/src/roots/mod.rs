//! Dynkin/Cartan data for the simple types, positive-root enumeration,
//! and the invariants of a rational homogeneous variety G/P for a
//! maximal parabolic P.
//!
//! Nodes follow the Bourbaki numbering throughout:
//!
//! ```text
//! A_l   1 - 2 - ... - l
//! B_l   1 - 2 - ... - (l-1) => l          (double edge, alpha_l short)
//! C_l   1 - 2 - ... - (l-1) <= l          (double edge, alpha_l long)
//! D_l   1 - 2 - ... - (l-2) - (l-1)
//!                        \
//!                         (l)             (fork at node l-2)
//! E_l   1 - 3 - 4 - 5 - 6 [- 7 [- 8]]
//!               |
//!               2
//! F_4   1 - 2 => 3 - 4                    (alpha_1, alpha_2 long)
//! G_2   1 <<= 2                           (triple edge, alpha_1 short)
//! ```
//!
//! Marking node k of A_l gives Gr(k; l+1); node k of B_l gives
//! OGr(k; 2l+1); node k of C_l gives SGr(k; 2l); node k <= l-2 of D_l
//! gives OGr(k; 2l) and the fork nodes give the two spinor families.
//!
//! The dimension and Fano index are computed from the root system.
//! The positivity p(V), the maximal linear Schubert subspace dimension
//! sp_V, the Picard-restriction thresholds, and the split-criterion
//! codimension bounds are stored table data; exceptional entries that
//! are only known as lower bounds carry an explicit flag.

mod cartan;
mod tables;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Simple Dynkin series. Exceptional types are pinned down together
/// with the rank (E6/E7/E8, F4, G2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl DynkinType {
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(DynkinType::A),
            "B" => Ok(DynkinType::B),
            "C" => Ok(DynkinType::C),
            "D" => Ok(DynkinType::D),
            "E" | "E6" | "E7" | "E8" => Ok(DynkinType::E),
            "F" | "F4" => Ok(DynkinType::F),
            "G" | "G2" => Ok(DynkinType::G),
            other => Err(Error::InvalidDescriptor(format!(
                "unknown Dynkin type {other:?}"
            ))),
        }
    }

    fn rank_ok(self, rank: u32) -> bool {
        match self {
            DynkinType::A => rank >= 1,
            DynkinType::B => rank >= 2,
            DynkinType::C => rank >= 3,
            DynkinType::D => rank >= 4,
            DynkinType::E => (6..=8).contains(&rank),
            DynkinType::F => rank == 4,
            DynkinType::G => rank == 2,
        }
    }
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DynkinType::A => "A",
            DynkinType::B => "B",
            DynkinType::C => "C",
            DynkinType::D => "D",
            DynkinType::E => "E",
            DynkinType::F => "F",
            DynkinType::G => "G",
        };
        f.write_str(s)
    }
}

/// A rational homogeneous variety G/P: simple type, rank, and the
/// marked simple root of the maximal parabolic (Bourbaki numbering).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct VarietyDescriptor {
    dynkin: DynkinType,
    rank: u32,
    node: u32,
}

impl VarietyDescriptor {
    pub fn new(dynkin: DynkinType, rank: u32, node: u32) -> Result<Self> {
        if !dynkin.rank_ok(rank) {
            return Err(Error::InvalidDescriptor(format!(
                "rank {rank} is not valid for type {dynkin}"
            )));
        }
        if node < 1 || node > rank {
            return Err(Error::InvalidDescriptor(format!(
                "node {node} out of range 1..={rank}"
            )));
        }
        Ok(VarietyDescriptor { dynkin, rank, node })
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn node(&self) -> u32 {
        self.node
    }
}

impl<'de> Deserialize<'de> for VarietyDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            dynkin: DynkinType,
            rank: u32,
            node: u32,
        }
        let raw = Raw::deserialize(de)?;
        VarietyDescriptor::new(raw.dynkin, raw.rank, raw.node).map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Display for VarietyDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{} node {}", self.dynkin, self.rank, self.node)
    }
}

/// A tabulated invariant that may only be known as a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableValue {
    pub value: u32,
    pub lower_bound: bool,
}

impl TableValue {
    pub fn exact(value: u32) -> Self {
        TableValue {
            value,
            lower_bound: false,
        }
    }

    pub fn at_least(value: u32) -> Self {
        TableValue {
            value,
            lower_bound: true,
        }
    }
}

/// Derived and tabulated invariants of G/P.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyInvariants {
    /// dim G/P, the number of positive roots supported on the node.
    pub dim: u64,
    /// Fano index: degree of the anticanonical class on a line.
    pub index: u64,
    /// `m = index - 3`, the threshold constant of the degree criteria.
    pub m: i64,
    /// Positivity p(V) of the tangent bundle.
    pub p: TableValue,
    /// Dimension sp_V of a maximal linear Schubert subspace, when the
    /// tables provide one.
    pub sp: Option<TableValue>,
    /// Whether restriction Pic(V) -> Pic(X) is an isomorphism for
    /// smooth 2-codimensional X at this rank.
    pub picard_iso: bool,
    /// Codimension bound of the split-normal-bundle criterion, when
    /// the tables provide one.
    pub codim_bound: Option<u32>,
}

/// Codimension bound of the split-normal-bundle criterion for this
/// type and rank, when the tables provide a row.
pub fn split_codim_bound(dynkin: DynkinType, rank: u32) -> Option<u32> {
    tables::split_codim_bound(dynkin, rank)
}

/// All positive roots of the given simple type as coefficient vectors
/// over the simple roots.
pub fn positive_roots(dynkin: DynkinType, rank: u32) -> Result<Vec<Vec<u16>>> {
    if !dynkin.rank_ok(rank) {
        return Err(Error::InvalidDescriptor(format!(
            "rank {rank} is not valid for type {dynkin}"
        )));
    }
    Ok(cartan::positive_roots_unchecked(dynkin, rank))
}

/// dim G/P: the number of positive roots whose coefficient on the
/// marked node is at least 1.
pub fn variety_dim(desc: &VarietyDescriptor) -> u64 {
    let roots = cartan::positive_roots_unchecked(desc.dynkin, desc.rank);
    let idx = desc.node as usize - 1;
    roots.iter().filter(|beta| beta[idx] >= 1).count() as u64
}

/// Fano index `c1(V) . l`: the sum over the positive roots supported
/// on the node of their pairing against the marked coroot.
pub fn fano_index(desc: &VarietyDescriptor) -> u64 {
    let roots = cartan::positive_roots_unchecked(desc.dynkin, desc.rank);
    let cartan = cartan::cartan_matrix(desc.dynkin, desc.rank);
    let idx = desc.node as usize - 1;
    let total: i64 = roots
        .iter()
        .filter(|beta| beta[idx] >= 1)
        .map(|beta| {
            beta.iter()
                .enumerate()
                .map(|(i, &c)| i64::from(c) * cartan[i][idx])
                .sum::<i64>()
        })
        .sum();
    debug_assert!(total > 0);
    total as u64
}

/// Assembles the invariants of G/P.
///
/// Fails with `DataUnavailable` for the (type, node) pairs the stored
/// tables do not cover: all of G2, and node 1 of C_l (that variety is
/// the projective space P^{2l-1}, whose row lives in the A family).
pub fn invariants(desc: &VarietyDescriptor) -> Result<VarietyInvariants> {
    let p = tables::positivity(desc)?;
    let sp = tables::max_linear_subspace(desc)?;
    let picard_iso = tables::picard_iso(desc);
    let codim_bound = tables::split_codim_bound(desc.dynkin, desc.rank);
    let dim = variety_dim(desc);
    let index = fano_index(desc);
    Ok(VarietyInvariants {
        dim,
        index,
        m: index as i64 - 3,
        p,
        sp,
        picard_iso,
        codim_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desc(dynkin: DynkinType, rank: u32, node: u32) -> VarietyDescriptor {
        VarietyDescriptor::new(dynkin, rank, node).unwrap()
    }

    #[test]
    fn descriptor_validation() {
        assert!(VarietyDescriptor::new(DynkinType::A, 0, 1).is_err());
        assert!(VarietyDescriptor::new(DynkinType::C, 2, 1).is_err());
        assert!(VarietyDescriptor::new(DynkinType::E, 9, 1).is_err());
        assert!(VarietyDescriptor::new(DynkinType::A, 3, 4).is_err());
        assert!(VarietyDescriptor::new(DynkinType::A, 3, 0).is_err());
    }

    #[test]
    fn projective_space_dimension_and_index() {
        for l in 1..=10 {
            let d = desc(DynkinType::A, l, 1);
            assert_eq!(variety_dim(&d), u64::from(l));
            assert_eq!(fano_index(&d), u64::from(l) + 1);
        }
    }

    #[test]
    fn grassmannian_dimension() {
        // Gr(2; 7) has dimension 10.
        assert_eq!(variety_dim(&desc(DynkinType::A, 6, 2)), 10);
    }

    #[test]
    fn spinor_variety_dimension() {
        // D5 node 5 is the 10-dimensional spinor variety.
        assert_eq!(variety_dim(&desc(DynkinType::D, 5, 5)), 10);
    }

    #[test]
    fn odd_orthogonal_lagrangian_index() {
        // OGr(l; 2l+1) has index 2l.
        for l in 2..=8 {
            assert_eq!(fano_index(&desc(DynkinType::B, l, l)), u64::from(2 * l));
        }
    }

    #[test]
    fn famous_varieties_match_classical_values() {
        // (descriptor, dim, index): E8 adjoint variety, Cayley plane,
        // Freudenthal variety, 10-dimensional spinor variety.
        let anchors = [
            (desc(DynkinType::E, 8, 8), 57, 29),
            (desc(DynkinType::E, 6, 1), 16, 12),
            (desc(DynkinType::E, 7, 7), 27, 18),
            (desc(DynkinType::D, 5, 5), 10, 8),
        ];
        for (v, dim, index) in anchors {
            assert_eq!(variety_dim(&v), dim, "{v}");
            assert_eq!(fano_index(&v), index, "{v}");
        }
    }

    #[test]
    fn invariants_projective_space() {
        let inv = invariants(&desc(DynkinType::A, 11, 1)).unwrap();
        assert_eq!(inv.dim, 11);
        assert_eq!(inv.index, 12);
        assert_eq!(inv.m, 9);
        assert_eq!(inv.p, TableValue::exact(11));
        assert_eq!(inv.sp, Some(TableValue::exact(11)));
        assert!(inv.picard_iso);
        assert_eq!(inv.codim_bound, Some(4));
    }

    #[test]
    fn invariants_symplectic_grassmannian() {
        let inv = invariants(&desc(DynkinType::C, 8, 3)).unwrap();
        assert_eq!(inv.m, 11);
        assert_eq!(inv.p, TableValue::exact(13));
        assert_eq!(inv.sp, Some(TableValue::exact(5)));
    }

    #[test]
    fn invariants_e8() {
        for node in 1..=8 {
            let inv = invariants(&desc(DynkinType::E, 8, node)).unwrap();
            assert_eq!(inv.p, TableValue::exact(29));
            assert_eq!(inv.sp, Some(TableValue::at_least(4)));
            assert!(inv.picard_iso);
            assert_eq!(inv.codim_bound, Some(3));
        }
    }

    #[test]
    fn invariants_f4_flags_and_gaps() {
        let inv = invariants(&desc(DynkinType::F, 4, 2)).unwrap();
        assert_eq!(inv.p, TableValue::at_least(8));
        assert_eq!(inv.sp, None);
        assert!(inv.picard_iso);
        assert_eq!(inv.codim_bound, None);
    }

    #[test]
    fn invariants_unavailable_rows() {
        assert!(matches!(
            invariants(&desc(DynkinType::G, 2, 1)),
            Err(Error::DataUnavailable(_))
        ));
        assert!(matches!(
            invariants(&desc(DynkinType::C, 8, 1)),
            Err(Error::DataUnavailable(_))
        ));
    }

    #[test]
    fn descriptor_serde_roundtrip() {
        let d = desc(DynkinType::D, 6, 3);
        let json = serde_json::to_string(&d).unwrap();
        let back: VarietyDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(d, back);
        let bad = r#"{"dynkin":"C","rank":2,"node":1}"#;
        assert!(serde_json::from_str::<VarietyDescriptor>(bad).is_err());
    }
}
