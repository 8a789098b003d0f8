//! Decision procedures for the complete-intersection question,
//! combined into a single verdict with a reproducible audit trail.
//!
//! For a 2-codimensional datum (d, n) on G/P the evaluation order is:
//! the rank-dependent Hartshorne-type degree branches (n-independent),
//! then the Ran-type splitting branches when the discriminant is
//! non-positive, then the exclusions (degree lower bound, Segre
//! positivity) when it is positive. The verdict cites the first
//! satisfied criterion; `applied` records every criterion that was
//! evaluated, satisfied or not. All comparisons are exact.

use serde::{Deserialize, Serialize};

use crate::exact::{Int, Rational};
use crate::plane::{degree_lower_bound, BundleNumerics};
use crate::roots::{invariants, split_codim_bound, DynkinType, VarietyDescriptor, VarietyInvariants};
use crate::{Error, Result};

/// Complete-intersection criteria, in precedence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CriterionId {
    #[serde(rename = "hart-i")]
    HartI,
    #[serde(rename = "hart-ii")]
    HartII,
    #[serde(rename = "ran-i")]
    RanI,
    #[serde(rename = "ran-ii")]
    RanII,
    #[serde(rename = "homog-split")]
    HomogSplit,
    #[serde(rename = "generators")]
    Generators,
}

impl CriterionId {
    pub fn as_str(self) -> &'static str {
        match self {
            CriterionId::HartI => "hart-i",
            CriterionId::HartII => "hart-ii",
            CriterionId::RanI => "ran-i",
            CriterionId::RanII => "ran-ii",
            CriterionId::HomogSplit => "homog-split",
            CriterionId::Generators => "generators",
        }
    }
}

/// Reasons a positive-discriminant datum is unrealizable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExclusionReason {
    #[serde(rename = "thmDgt-bound")]
    DegreeBound,
    #[serde(rename = "segre-positivity")]
    SegrePositivity,
}

impl ExclusionReason {
    pub fn as_str(self) -> &'static str {
        match self {
            ExclusionReason::DegreeBound => "thmDgt-bound",
            ExclusionReason::SegrePositivity => "segre-positivity",
        }
    }
}

/// Taxonomy of the (d, n)-plane figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Region {
    /// Positive discriminant, Segre positivity fails: below the lower
    /// parabola in exact form.
    EmptyBelowExclusion,
    /// Positive discriminant, Segre-positive, but left of the degree
    /// lower bound: the comet tail.
    CometRegion,
    /// Positive discriminant, Segre-positive, right of the degree
    /// bound: the shaded comet body, undecided.
    CheckerRegion,
    /// Non-positive discriminant, e(m) <= 0, n > 2m.
    #[serde(rename = "HorizLines_e_m_neg")]
    HorizLinesEmNeg,
    /// Non-positive discriminant, e(m) <= 0 and n <= 2m.
    #[serde(rename = "Grid_nLow_eNeg")]
    GridNLowENeg,
    /// Non-positive discriminant, e(m) > 0 and n <= 2m.
    #[serde(rename = "VertLines_nLow")]
    VertLinesNLow,
    /// Non-positive discriminant, neither splitting branch applies.
    UnknownRegion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Verdict {
    CompleteIntersection { criterion: CriterionId },
    ExcludedNoSuchSubvariety { reason: ExclusionReason },
    Unknown,
}

/// One evaluated criterion with its rendered inputs and outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppliedCriterion {
    pub id: String,
    pub inputs: String,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub delta: i128,
    pub region: Region,
    pub verdict: Verdict,
    pub applied: Vec<AppliedCriterion>,
    pub notes: Vec<String>,
}

/// The three varieties on which the second degree branch is disabled:
/// OGr(3;12) = D6 node 3, OGr(3;13) = B6 node 3, SGr(3;12) = C6 node 3.
pub fn hart_branch_ii_exception(desc: &VarietyDescriptor) -> bool {
    let key = (desc.dynkin(), desc.rank(), desc.node());
    matches!(
        key,
        (DynkinType::D, 6, 3) | (DynkinType::B, 6, 3) | (DynkinType::C, 6, 3)
    )
}

fn region_of(b: &BundleNumerics, inv: &VarietyInvariants) -> Result<Region> {
    let delta = b.discriminant();
    if delta > 0 {
        let segre_excluded = if inv.p.value >= 3 {
            b.angle_exclusion(inv.p.value)?
        } else {
            false
        };
        if segre_excluded {
            return Ok(Region::EmptyBelowExclusion);
        }
        let in_tail = match degree_lower_bound(inv, false) {
            Ok(bound) => Rational::from_integer(Int::from(b.d())) <= bound,
            Err(Error::DataUnavailable(_)) => false,
            Err(e) => return Err(e),
        };
        Ok(if in_tail {
            Region::CometRegion
        } else {
            Region::CheckerRegion
        })
    } else {
        let e_m_nonpos = b.e_value(inv.m) <= 0;
        let n_low = i128::from(b.n()) <= 2 * i128::from(inv.m);
        Ok(match (e_m_nonpos, n_low) {
            (true, true) => Region::GridNLowENeg,
            (true, false) => Region::HorizLinesEmNeg,
            (false, true) => Region::VertLinesNLow,
            (false, false) => Region::UnknownRegion,
        })
    }
}

/// Classifies the 2-codimensional datum (d, n) on the given G/P.
///
/// Requires the Picard restriction to be an isomorphism at this rank;
/// that is the standing hypothesis of every criterion used here.
pub fn classify(desc: &VarietyDescriptor, d: u64, n: u64) -> Result<ClassificationResult> {
    let inv = invariants(desc)?;
    if !inv.picard_iso {
        return Err(Error::PicardRestriction(format!(
            "{desc} is below the rank threshold"
        )));
    }
    if inv.m < 1 {
        return Err(Error::Precondition(format!(
            "criteria need m >= 1, but {desc} has m = {}",
            inv.m
        )));
    }
    let b = BundleNumerics::new(d, n)?;
    let delta = b.discriminant();
    let ell = desc.rank();
    let m = i128::from(inv.m);
    let m2 = m * m;
    let d_i = i128::from(d);
    let n_i = i128::from(n);

    let mut applied = Vec::new();
    let mut notes = Vec::new();
    let mut ci: Option<CriterionId> = None;
    let push = |applied: &mut Vec<AppliedCriterion>,
                    ci: &mut Option<CriterionId>,
                    id: CriterionId,
                    inputs: String,
                    satisfied: bool| {
        applied.push(AppliedCriterion {
            id: id.as_str().into(),
            inputs,
            satisfied,
        });
        if satisfied && ci.is_none() {
            *ci = Some(id);
        }
    };

    let region = region_of(&b, &inv)?;

    // Degree branches, independent of n.
    if ell >= 11 {
        let sat = d_i <= m2;
        push(
            &mut applied,
            &mut ci,
            CriterionId::HartI,
            format!("d = {d} vs m^2 = {m2}"),
            sat,
        );
    }
    if (6..=10).contains(&ell) {
        notes.push(
            "hart-ii rank range taken as 6 <= l <= 10 (theorem form); the \
             alternative stated range 7..=10 is not used"
                .into(),
        );
        if hart_branch_ii_exception(desc) {
            notes.push(format!(
                "hart-ii disabled: {desc} is one of the three excepted varieties"
            ));
            push(
                &mut applied,
                &mut ci,
                CriterionId::HartII,
                "disabled on this variety".into(),
                false,
            );
        } else {
            let sat = 10 * d_i <= 3 * m2;
            push(
                &mut applied,
                &mut ci,
                CriterionId::HartII,
                format!("10 d = {} vs 3 m^2 = {}", 10 * d_i, 3 * m2),
                sat,
            );
        }
    }

    // Splitting branches in the non-positive discriminant regime.
    if delta <= 0 {
        let ran_i = d_i + m2 <= n_i * m;
        push(
            &mut applied,
            &mut ci,
            CriterionId::RanI,
            format!("d + m^2 = {} vs n m = {}", d_i + m2, n_i * m),
            ran_i,
        );
        let ran_ii = n_i <= 2 * m;
        let witness = b.e_nonneg_witness()?;
        let witness_text = match witness {
            Some(k) => format!("e({k}) = {} >= 0", b.e_value(k as i64)),
            None => "no k in [1, n/2] with e(k) >= 0".into(),
        };
        push(
            &mut applied,
            &mut ci,
            CriterionId::RanII,
            format!("n = {n} vs 2 m = {}; {witness_text}", 2 * m),
            ran_ii,
        );
    }

    // Exclusions in the positive regime.
    let mut exclusion: Option<ExclusionReason> = None;
    if delta > 0 {
        match degree_lower_bound(&inv, false) {
            Ok(bound) => {
                let sat = Rational::from_integer(Int::from(d)) <= bound;
                applied.push(AppliedCriterion {
                    id: ExclusionReason::DegreeBound.as_str().into(),
                    inputs: format!("d = {d} vs sp^2 (p-1)^2 / 240 = {bound}"),
                    satisfied: sat,
                });
                if sat {
                    exclusion = Some(ExclusionReason::DegreeBound);
                }
            }
            Err(Error::DataUnavailable(_)) => {
                notes.push("degree lower bound skipped: no sp value for this variety".into());
            }
            Err(e) => return Err(e),
        }
        if inv.p.value >= 3 {
            let window = inv.p.value as usize - 2;
            let segre = b.segre_numbers(window);
            let first_nonpos = segre
                .iter()
                .enumerate()
                .skip(1)
                .find(|(_, s)| !num_traits::Signed::is_positive(*s));
            let sat = first_nonpos.is_some();
            let inputs = match first_nonpos {
                Some((j, s)) => format!("s_{j} = {s} <= 0 within j <= {window}"),
                None => format!("s_j > 0 for all j <= {window}"),
            };
            applied.push(AppliedCriterion {
                id: ExclusionReason::SegrePositivity.as_str().into(),
                inputs,
                satisfied: sat,
            });
            if sat && exclusion.is_none() {
                exclusion = Some(ExclusionReason::SegrePositivity);
            }
        }
    }

    let verdict = if let Some(criterion) = ci {
        Verdict::CompleteIntersection { criterion }
    } else if let Some(reason) = exclusion {
        Verdict::ExcludedNoSuchSubvariety { reason }
    } else {
        Verdict::Unknown
    };

    Ok(ClassificationResult {
        delta,
        region,
        verdict,
        applied,
        notes,
    })
}

/// Split-normal-bundle criterion: with codimension bound from the
/// per-type table, a smooth subvariety of codimension `delta_codim`
/// whose normal bundle splits is a complete intersection. Line
/// bundles on a cyclic Picard group are automatically ordered, so no
/// further hypothesis enters.
pub fn homog_split_ci(desc: &VarietyDescriptor, delta_codim: u32) -> Result<bool> {
    if delta_codim < 2 {
        return Err(Error::Precondition("codimension must be >= 2".into()));
    }
    match desc.dynkin() {
        DynkinType::F | DynkinType::G => Err(Error::DataUnavailable(format!(
            "no split-criterion row for {desc}"
        ))),
        _ => Ok(split_codim_bound(desc.dynkin(), desc.rank())
            .is_some_and(|bound| delta_codim <= bound)),
    }
}

/// Few-generators criterion: `l >= 7`, `delta <= (l+1)/4`, and the
/// defining ideal generated by `a` ordered line-bundle sections with
/// `a <= (l+1)/2 - delta` or `a <= l+1 - 4 delta`. Comparisons are
/// exact rational ones (cleared denominators).
pub fn generators_ci(ell: u32, delta_codim: u32, a: u32) -> Result<bool> {
    if a < delta_codim {
        return Err(Error::Precondition(format!(
            "cannot generate a codimension-{delta_codim} ideal with {a} elements"
        )));
    }
    let (l, dta, a) = (i64::from(ell), i64::from(delta_codim), i64::from(a));
    Ok(l >= 7 && 4 * dta <= l + 1 && (2 * a + 2 * dta <= l + 1 || a + 4 * dta <= l + 1))
}

/// Main-lemma splitting test for a bundle generated by `a` ordered
/// line bundles.
///
/// With explicit ranks `(e, f)` of the kernel and the quotient
/// (`a = e + f` required) it checks `3 delta + f + a <= l + 1` or
/// `3 delta + e + a <= l + 1`. Without them it is the normal-bundle
/// form `f = delta`, `e = a - delta`, checking
/// `a - delta <= l+1-5 delta` or `a - delta <= (l+1)/2 - 2 delta`.
pub fn hauptlemma_split(
    ell: u32,
    delta_codim: u32,
    a: u32,
    ranks: Option<(u32, u32)>,
) -> Result<bool> {
    let (l, dta, a_i) = (i64::from(ell), i64::from(delta_codim), i64::from(a));
    match ranks {
        Some((e, f)) => {
            if e + f != a {
                return Err(Error::RankMismatch { a, e, f });
            }
            let (e, f) = (i64::from(e), i64::from(f));
            Ok(3 * dta + f + a_i <= l + 1 || 3 * dta + e + a_i <= l + 1)
        }
        None => {
            if a < delta_codim {
                return Err(Error::Precondition(format!(
                    "normal-bundle form needs a >= delta, got a = {a}, delta = {delta_codim}"
                )));
            }
            let rel = a_i - dta;
            Ok(rel <= l + 1 - 5 * dta || 2 * rel <= l + 1 - 4 * dta)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::VarietyDescriptor;

    fn desc(t: DynkinType, rank: u32, node: u32) -> VarietyDescriptor {
        VarietyDescriptor::new(t, rank, node).unwrap()
    }

    #[test]
    fn hart_i_boundary() {
        let r = classify(&desc(DynkinType::A, 11, 1), 81, 10).unwrap();
        assert_eq!(
            r.verdict,
            Verdict::CompleteIntersection {
                criterion: CriterionId::HartI
            }
        );
        let r = classify(&desc(DynkinType::A, 11, 1), 82, 10).unwrap();
        assert_ne!(
            r.verdict,
            Verdict::CompleteIntersection {
                criterion: CriterionId::HartI
            }
        );
    }

    #[test]
    fn ran_i_example() {
        let r = classify(&desc(DynkinType::A, 7, 1), 10, 8).unwrap();
        assert_eq!(r.delta, -24);
        assert_eq!(
            r.verdict,
            Verdict::CompleteIntersection {
                criterion: CriterionId::RanI
            }
        );
    }

    #[test]
    fn segre_exclusion_example() {
        let r = classify(&desc(DynkinType::A, 6, 1), 5, 2).unwrap();
        assert_eq!(r.delta, 16);
        assert_eq!(
            r.verdict,
            Verdict::ExcludedNoSuchSubvariety {
                reason: ExclusionReason::SegrePositivity
            }
        );
        assert_eq!(r.region, Region::EmptyBelowExclusion);
    }

    #[test]
    fn degree_bound_exclusion() {
        // On P^10: m = 8, so 10 d = 200 > 3 m^2 = 192 rules out
        // hart-ii, delta = 79 > 0, and d = 20 <= 100 * 81 / 240, so
        // the degree bound fires (and precedes the Segre test).
        let r = classify(&desc(DynkinType::A, 10, 1), 20, 1).unwrap();
        assert_eq!(
            r.verdict,
            Verdict::ExcludedNoSuchSubvariety {
                reason: ExclusionReason::DegreeBound
            }
        );
    }

    #[test]
    fn picard_gate() {
        assert!(matches!(
            classify(&desc(DynkinType::A, 5, 1), 4, 4),
            Err(Error::PicardRestriction(_))
        ));
    }

    #[test]
    fn exception_list_falls_through() {
        for d in [desc(DynkinType::D, 6, 3), desc(DynkinType::B, 6, 3), desc(DynkinType::C, 6, 3)] {
            assert!(hart_branch_ii_exception(&d));
            // A datum that hart-ii would have accepted on a
            // non-excepted variety of the same rank.
            let inv = invariants(&d).unwrap();
            let m2 = (inv.m * inv.m) as u64;
            let degree = 3 * m2 / 10;
            let r = classify(&d, degree.max(1), 2 * inv.m as u64).unwrap();
            if let Verdict::CompleteIntersection { criterion } = r.verdict {
                assert_ne!(criterion, CriterionId::HartII, "{d}");
            }
            assert!(r
                .applied
                .iter()
                .any(|a| a.id == "hart-ii" && !a.satisfied));
        }
        assert!(!hart_branch_ii_exception(&desc(DynkinType::D, 6, 2)));
    }

    #[test]
    fn hart_i_monotone_in_degree() {
        let v = desc(DynkinType::A, 12, 1);
        let mut last_ci = true;
        for d in 1..=120u64 {
            let r = classify(&v, d, 7).unwrap();
            let is_hart_i = matches!(
                r.verdict,
                Verdict::CompleteIntersection {
                    criterion: CriterionId::HartI
                }
            );
            if !last_ci {
                assert!(!is_hart_i, "hart-i reappeared at d = {d}");
            }
            last_ci = is_hart_i;
        }
    }

    #[test]
    fn verdict_is_single_valued_on_a_grid() {
        // Ran triggers need delta <= 0, exclusions need delta > 0, so
        // the two families can never both fire.
        let v = desc(DynkinType::A, 7, 1);
        for d in 1..=60u64 {
            for n in 1..=25u64 {
                let r = classify(&v, d, n).unwrap();
                let ran_sat = r
                    .applied
                    .iter()
                    .any(|a| (a.id == "ran-i" || a.id == "ran-ii") && a.satisfied);
                let excl_sat = r
                    .applied
                    .iter()
                    .any(|a| (a.id == "thmDgt-bound" || a.id == "segre-positivity") && a.satisfied);
                assert!(!(ran_sat && excl_sat), "overlap at d={d} n={n}");
            }
        }
    }

    #[test]
    fn homog_split_rows() {
        assert!(homog_split_ci(&desc(DynkinType::E, 8, 1), 3).unwrap());
        assert!(homog_split_ci(&desc(DynkinType::A, 6, 1), 2).unwrap());
        assert!(!homog_split_ci(&desc(DynkinType::A, 5, 1), 2).unwrap());
        assert!(!homog_split_ci(&desc(DynkinType::E, 7, 1), 3).unwrap());
        assert!(matches!(
            homog_split_ci(&desc(DynkinType::G, 2, 1), 2),
            Err(Error::DataUnavailable(_))
        ));
        assert!(matches!(
            homog_split_ci(&desc(DynkinType::F, 4, 1), 2),
            Err(Error::DataUnavailable(_))
        ));
        assert!(homog_split_ci(&desc(DynkinType::A, 6, 1), 1).is_err());
    }

    #[test]
    fn generators_rows() {
        assert!(generators_ci(11, 3, 3).unwrap());
        assert!(generators_ci(7, 2, 2).unwrap());
        assert!(!generators_ci(7, 3, 3).unwrap());
        assert!(!generators_ci(6, 2, 2).unwrap());
        assert!(generators_ci(9, 3, 2).is_err());
    }

    #[test]
    fn hauptlemma_rows() {
        assert!(hauptlemma_split(11, 2, 4, Some((2, 2))).unwrap());
        assert!(!hauptlemma_split(6, 2, 4, Some((2, 2))).unwrap());
        assert!(hauptlemma_split(14, 2, 4, None).unwrap());
        assert!(matches!(
            hauptlemma_split(11, 2, 5, Some((2, 2))),
            Err(Error::RankMismatch { .. })
        ));
        assert!(hauptlemma_split(11, 3, 2, None).is_err());
    }

    #[test]
    fn result_serde_roundtrip() {
        let r = classify(&desc(DynkinType::A, 7, 1), 10, 8).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: ClassificationResult = serde_json::from_str(&json).unwrap();
        assert_eq!(r, back);
        assert!(json.contains("\"ran-i\""));
        assert!(json.contains("Grid_nLow_eNeg"));
    }
}
