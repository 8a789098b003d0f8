//! Arithmetic of the (d, n)-plane for a rank-2 normal bundle datum:
//! discriminant, twisted second Chern numbers e(k), the integer Segre
//! recurrence, the angle exclusion, and degree lower bounds.
//!
//! Everything that decides something here is integer or rational
//! arithmetic. In particular the angle bound is implemented exactly
//! through Segre positivity (the sign pattern of a Chebyshev-like
//! recurrence), not through a cosine comparison.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::exact::{Int, Rational};
use crate::roots::VarietyInvariants;
use crate::search;
use crate::{Error, Result};

/// Upper limit for d and n; keeps all derived quantities inside i128.
const MAX_INPUT: u64 = 1_000_000_000_000_000_000;

/// The pair (d, n): degree of the subvariety and determinant twist of
/// its rank-2 normal bundle. Both are strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleNumerics {
    d: u64,
    n: u64,
}

impl BundleNumerics {
    pub fn new(d: u64, n: u64) -> Result<Self> {
        if d < 1 || n < 1 {
            return Err(Error::InvalidInput("both d and n must be >= 1".into()));
        }
        if d > MAX_INPUT || n > MAX_INPUT {
            return Err(Error::InvalidInput(format!(
                "d and n must be <= {MAX_INPUT}"
            )));
        }
        Ok(BundleNumerics { d, n })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Discriminant `4d - n^2`.
    pub fn discriminant(&self) -> i128 {
        4 * self.d as i128 - (self.n as i128) * (self.n as i128)
    }

    /// `e(k) = d - n k + k^2`, the second Chern number of the twist by
    /// `O(-k)` of the normalized bundle.
    pub fn e_value(&self, k: i64) -> i128 {
        let k = k as i128;
        self.d as i128 - self.n as i128 * k + k * k
    }

    /// The smallest integer `k` in `[1, n/2]` with `e(k) >= 0`, which
    /// is the numerical shadow of the splitting-degree argument in the
    /// non-positive discriminant regime.
    ///
    /// Requires `discriminant <= 0`; a positive discriminant is an
    /// error, not an absent witness. `None` means no k in the range
    /// qualifies (this happens exactly when `d < n - 1`); genuine
    /// subvarieties always admit a witness, so `None` certifies that
    /// the datum is unrealizable.
    pub fn e_nonneg_witness(&self) -> Result<Option<u64>> {
        if self.discriminant() > 0 {
            return Err(Error::Precondition(
                "e_nonneg_witness requires discriminant <= 0".into(),
            ));
        }
        // e is decreasing on [1, n/2] (its vertex sits at n/2), so the
        // range holds a witness iff e(1) >= 0, and 1 is then smallest.
        Ok((self.n >= 2 && self.e_value(1) >= 0).then_some(1))
    }

    /// Unnormalized Segre numbers `s_j = sum_{a=0..j} z^a zbar^{j-a}`
    /// of the Chern roots, via `s_0 = 1`, `s_1 = n`,
    /// `s_j = n s_{j-1} - d s_{j-2}`.
    pub fn segre_numbers(&self, j_max: usize) -> Vec<Int> {
        let n = Int::from(self.n);
        let d = Int::from(self.d);
        let mut s = Vec::with_capacity(j_max + 1);
        s.push(Int::one());
        if j_max >= 1 {
            s.push(n.clone());
        }
        for j in 2..=j_max {
            let next = &n * &s[j - 1] - &d * &s[j - 2];
            s.push(next);
        }
        s
    }

    /// Exact form of the angle bound: in the positive-discriminant
    /// regime, a genuine subvariety of a variety with positivity `p_v`
    /// forces `s_j > 0` for `j = 1..=p_v-2`. Returns true when some
    /// `s_j <= 0` in that window, i.e. the datum is excluded.
    pub fn angle_exclusion(&self, p_v: u32) -> Result<bool> {
        if self.discriminant() <= 0 {
            return Err(Error::Precondition(
                "angle_exclusion requires discriminant > 0".into(),
            ));
        }
        if p_v < 3 {
            return Err(Error::Precondition("angle_exclusion requires p_v >= 3".into()));
        }
        let s = self.segre_numbers(p_v as usize - 2);
        Ok(s[1..].iter().any(|sj| !sj.is_positive()))
    }
}

/// Lower bound on the degree of a subvariety whose normal-bundle datum
/// has positive discriminant.
///
/// * `sharp = false`: the closed form `sp^2 (p-1)^2 / 240`, exact.
/// * `sharp = true`: `delta_min(sp) (p-1)^2 / (4 pi^2)` as a certified
///   rational lower bound (the pi enclosure is rounded down).
///
/// Lower-bound sp values are used as-is; that only weakens the bound.
pub fn degree_lower_bound(inv: &VarietyInvariants, sharp: bool) -> Result<Rational> {
    let p = inv.p.value;
    if p < 2 {
        return Err(Error::Precondition("degree_lower_bound needs p >= 2".into()));
    }
    let sp = inv
        .sp
        .ok_or_else(|| Error::DataUnavailable("no sp value for this variety".into()))?
        .value;
    let pm1 = Int::from(p - 1);
    let factor = &pm1 * &pm1;
    if sharp {
        let delta_min = search::delta_min(sp)?.delta;
        let numerator = Rational::from_integer(Int::from(delta_min) * factor);
        let denom = crate::exact::pi()
            .pow(2)
            .scale(&Rational::from_integer(Int::from(4)));
        let bound = denom.recip()?.scale(&numerator);
        Ok(bound.lo().clone())
    } else {
        let sp_big = Int::from(sp);
        Ok(Rational::new(&sp_big * &sp_big * factor, Int::from(240)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{invariants, DynkinType, VarietyDescriptor};

    fn b(d: u64, n: u64) -> BundleNumerics {
        BundleNumerics::new(d, n).unwrap()
    }

    #[test]
    fn discriminant_values() {
        assert_eq!(b(4, 4).discriminant(), 0);
        assert_eq!(b(9, 6).discriminant(), 0);
        assert_eq!(b(3, 1).discriminant(), 11);
    }

    #[test]
    fn e_values() {
        assert_eq!(b(7, 3).e_value(0), 7);
        assert_eq!(b(9, 6).e_value(3), 0);
        assert_eq!(b(4, 5).e_value(1), 0);
    }

    #[test]
    fn witness_examples() {
        assert_eq!(b(4, 4).e_nonneg_witness().unwrap(), Some(1));
        assert_eq!(b(10, 8).e_nonneg_witness().unwrap(), Some(1));
        assert_eq!(b(6, 5).e_nonneg_witness().unwrap(), Some(1));
        // d < n - 1 leaves no k in range: e is negative on [1, n/2].
        assert_eq!(b(1, 10).e_nonneg_witness().unwrap(), None);
        // Positive discriminant violates the precondition.
        assert!(b(3, 1).e_nonneg_witness().is_err());
    }

    #[test]
    fn witness_exists_when_d_large_enough() {
        for n in 2..=60u64 {
            for d in 1..=n * n / 4 {
                let w = b(d, n).e_nonneg_witness().unwrap();
                // Independent brute scan of the whole range.
                let scanned = (1..=n / 2).find(|&k| b(d, n).e_value(k as i64) >= 0);
                assert_eq!(w, scanned, "d={d} n={n}");
                if d >= n - 1 {
                    let k = w.expect("witness must exist for d >= n-1");
                    assert!(k >= 1 && k <= n / 2);
                    assert!(b(d, n).e_value(k as i64) >= 0);
                } else {
                    assert_eq!(w, None);
                }
            }
        }
    }

    #[test]
    fn witness_is_constant_time_for_huge_inputs() {
        assert_eq!(b(1, 1_000_000_000_000_000_000).e_nonneg_witness().unwrap(), None);
        assert_eq!(
            b(999_999_999_999_999_999, 1_000_000_000_000_000_000)
                .e_nonneg_witness()
                .unwrap(),
            Some(1)
        );
    }

    #[test]
    fn segre_examples() {
        let ints = |v: &[i64]| v.iter().map(|&x| Int::from(x)).collect::<Vec<_>>();
        assert_eq!(b(1, 2).segre_numbers(3), ints(&[1, 2, 3, 4]));
        assert_eq!(b(1, 1).segre_numbers(5), ints(&[1, 1, 0, -1, -1, 0]));
        assert_eq!(b(5, 2).segre_numbers(2), ints(&[1, 2, -1]));
    }

    #[test]
    fn segre_chebyshev_identity() {
        // s_j^2 - s_{j-1} s_{j+1} = d^j for the recurrence seeded by
        // s_0 = 1, s_1 = n.
        for d in [1u64, 2, 7, 30] {
            for n in [1u64, 3, 10, 50] {
                let s = b(d, n).segre_numbers(13);
                for j in 1..=12usize {
                    let lhs = &s[j] * &s[j] - &s[j - 1] * &s[j + 1];
                    assert_eq!(lhs, Int::from(d).pow(j as u32), "d={d} n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn angle_exclusion_examples() {
        assert!(b(5, 2).angle_exclusion(6).unwrap());
        assert!(!b(100, 19).angle_exclusion(6).unwrap());
        assert!(b(1, 1).angle_exclusion(4).unwrap());
        assert!(b(4, 4).angle_exclusion(5).is_err());
        assert!(b(5, 2).angle_exclusion(2).is_err());
    }

    #[test]
    fn angle_exclusion_monotone_in_p() {
        for d in 1..=40u64 {
            for n in 1..=12u64 {
                if b(d, n).discriminant() <= 0 {
                    continue;
                }
                let mut excluded = false;
                for p_v in 3..=12 {
                    let now = b(d, n).angle_exclusion(p_v).unwrap();
                    assert!(!excluded || now, "exclusion lost at p_v={p_v} d={d} n={n}");
                    excluded = now;
                }
            }
        }
    }

    #[test]
    fn positive_discriminant_means_e_positive() {
        for d in 1..=100u64 {
            for n in 1..=100u64 {
                if b(d, n).discriminant() > 0 {
                    for k in -250i64..=250 {
                        assert!(b(d, n).e_value(k) > 0, "d={d} n={n} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn plain_degree_bound_examples() {
        let p18 = invariants(&VarietyDescriptor::new(DynkinType::A, 18, 1).unwrap()).unwrap();
        let bound = degree_lower_bound(&p18, false).unwrap();
        assert_eq!(bound, Rational::new(Int::from(7803), Int::from(20)));

        let a6 = invariants(&VarietyDescriptor::new(DynkinType::A, 6, 1).unwrap()).unwrap();
        assert_eq!(
            degree_lower_bound(&a6, false).unwrap(),
            Rational::new(Int::from(15), Int::from(4))
        );
    }

    #[test]
    fn sharp_degree_bound_brackets_float_estimate() {
        use num_traits::ToPrimitive;
        // sp = 4, p = 5: 12 * 16 / (4 pi^2) = 48/pi^2 = 4.8634...
        let inv = VarietyInvariants {
            dim: 0,
            index: 8,
            m: 5,
            p: crate::roots::TableValue::exact(5),
            sp: Some(crate::roots::TableValue::exact(4)),
            picard_iso: true,
            codim_bound: None,
        };
        let bound = degree_lower_bound(&inv, true).unwrap();
        let f = bound.to_f64().unwrap();
        assert!(f > 4.8633 && f < 4.8635, "got {f}");
        // Certified lower rounding: the bound must not exceed the true value.
        assert!(f <= 48.0 / (std::f64::consts::PI * std::f64::consts::PI) + 1e-12);
    }

    #[test]
    fn grassmannian_remark_formula() {
        // Gr(k; l+1) with k >= (l+1)/2 has sp = k, p = l, so the plain
        // bound is k^2 (l-1)^2 / 240.
        let inv = invariants(&VarietyDescriptor::new(DynkinType::A, 9, 6).unwrap()).unwrap();
        let bound = degree_lower_bound(&inv, false).unwrap();
        assert_eq!(
            bound,
            Rational::new(Int::from(36u32 * 64), Int::from(240))
        );
    }
}
