//! Euler characteristics of normalized rank-2 bundles on projective
//! space and the Schwartzenberger integrality test.
//!
//! A rank-2 bundle on P^p with Chern roots r1, r2 has
//! `chi(F(k)) = C(r1+k+p, p) + C(r2+k+p, p)`. After twisting we may
//! take `c1 = r1 + r2` equal to 0 or 1 and write `d = r1 r2`, so the
//! characteristic is a symmetric function of the roots and evaluates
//! exactly through power sums, without ever touching the (generally
//! irrational) roots themselves. Integrality of every `chi(F(k))` is
//! necessary for a bundle with the given Chern data to exist, never
//! sufficient: the tests here are purely numerical conditions, and
//! Schneider-style tables built on them carry an integrality-only
//! meaning with no stability information.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{self, factorial, Int, Rational};
use crate::{Error, Result};

/// Chern data of a normalized rank-2 bundle on P^p.
///
/// `c1` is 0 or 1 and `d` is the second Chern number. The discriminant
/// `4d - c1^2` is then automatically congruent to 0 or 3 mod 4. `d`
/// may be any integer, including non-positive values, so searches can
/// probe freely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleOnProjSpace {
    p: u32,
    c1: u8,
    d: Int,
}

impl BundleOnProjSpace {
    pub fn new(p: u32, c1: u8, d: impl Into<Int>) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidInput("projective dimension p must be >= 1".into()));
        }
        if c1 > 1 {
            return Err(Error::InvalidInput(format!(
                "normalized first Chern number must be 0 or 1, got {c1}"
            )));
        }
        Ok(BundleOnProjSpace { p, c1, d: d.into() })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn c1(&self) -> u8 {
        self.c1
    }

    pub fn d(&self) -> &Int {
        &self.d
    }

    /// Discriminant `4d - c1^2`, invariant under twisting.
    pub fn delta(&self) -> Int {
        Int::from(4) * &self.d - Int::from(self.c1 * self.c1)
    }

    /// Exact Euler characteristic of the twist by `O(k)`.
    ///
    /// Expands `C(r+k+p, p)` as a polynomial in the Chern root `r` and
    /// sums over both roots via Newton power sums with `e1 = c1`,
    /// `e2 = d`.
    pub fn euler_char(&self, k: i64) -> Rational {
        let q = exact::binomial_poly(k, self.p);
        let sums = exact::power_sums(
            &Rational::from_integer(Int::from(self.c1)),
            &Rational::from_integer(self.d.clone()),
            self.p as usize,
        );
        let mut chi = Rational::zero();
        for (j, coeff) in q.coeffs().iter().enumerate() {
            chi += coeff * &sums[j];
        }
        chi
    }

    /// Schwartzenberger condition: is `chi(F(k))` an integer for every
    /// integer `k`?
    ///
    /// `chi` is a degree-p polynomial in `k`, and a degree-p polynomial
    /// that is integral at p+1 consecutive integers is integral at all
    /// of them, so checking `k = 0, ..., p` decides.
    pub fn is_integral_all_twists(&self) -> bool {
        TwistBasis::new(self.p).is_integral(self.c1, &self.d)
    }
}

/// Precomputed integer data for testing integrality of all twists on a
/// fixed P^p.
///
/// Row `k` holds the integer coefficients of
/// `p! * C(x+k+p, p) = (x+k+p)...(x+k+1)`, so
/// `p! * chi(F(k)) = sum_j rows[k][j] * powsum_j(c1, d)` and
/// integrality of `chi(F(k))` is a single divisibility check. The
/// discriminant search calls this for thousands of candidates per
/// dimension, which is why the hot path avoids rational arithmetic.
pub struct TwistBasis {
    p: u32,
    factorial_p: Int,
    rows: Vec<Vec<Int>>,
}

impl TwistBasis {
    pub fn new(p: u32) -> Self {
        assert!(p >= 1);
        let rows = (0..=i64::from(p))
            .map(|k| rising_product_coeffs(k, p))
            .collect();
        TwistBasis {
            p,
            factorial_p: factorial(p),
            rows,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// True iff every twist `k = 0..=p` has integral Euler characteristic.
    pub fn is_integral(&self, c1: u8, d: &Int) -> bool {
        let sums = integer_power_sums(c1, d, self.p as usize);
        self.rows.iter().all(|row| {
            let mut acc = Int::zero();
            for (coeff, ps) in row.iter().zip(&sums) {
                acc += coeff * ps;
            }
            acc.mod_floor(&self.factorial_p).is_zero()
        })
    }
}

/// Coefficients of `(x+k+p)(x+k+p-1)...(x+k+1)` in ascending powers of x.
fn rising_product_coeffs(k: i64, p: u32) -> Vec<Int> {
    let mut coeffs = vec![Int::one()];
    for i in 1..=i64::from(p) {
        let c = Int::from(k + i);
        let mut next = vec![Int::zero(); coeffs.len() + 1];
        for (idx, a) in coeffs.iter().enumerate() {
            next[idx + 1] += a;
            next[idx] += a * &c;
        }
        coeffs = next;
    }
    coeffs
}

/// Newton power sums specialized to integer symmetric values.
fn integer_power_sums(c1: u8, d: &Int, j_max: usize) -> Vec<Int> {
    let mut sums = Vec::with_capacity(j_max + 1);
    sums.push(Int::from(2));
    if j_max >= 1 {
        sums.push(Int::from(c1));
    }
    for j in 2..=j_max {
        let mut next = &sums[j - 1] * Int::from(c1);
        next -= d * &sums[j - 2];
        sums.push(next);
    }
    sums
}

/// A terminating witness for the discriminant search: `d = p!` with
/// `c1 = 0` always passes the integrality test, because the window
/// `k = 0..=p` has an integer constant term and every power-sum term
/// `p_j`, `j >= 2`, is divisible by `p!`.
pub fn factorial_witness(p: u32) -> BundleOnProjSpace {
    BundleOnProjSpace {
        p,
        c1: 0,
        d: factorial(p),
    }
}
