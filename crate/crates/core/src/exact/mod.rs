//! Arbitrary-precision integers and rationals, factorials, binomial
//! polynomials, Newton-identity power sums, and certified rational
//! enclosures of the transcendental constants pi and e.
//!
//! Everything here is pure and deterministic; values are immutable
//! after construction. All rationals are kept in canonical form
//! (reduced, positive denominator), which `num_rational::Ratio`
//! guarantees after every operation.

mod interval;
mod poly;

pub use interval::{euler_number, pi, Interval};
pub use poly::Polynomial;

use num_traits::One;

use crate::{Error, Result};

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Exact factorial.
pub fn factorial(n: u32) -> Int {
    let mut acc = Int::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// The polynomial `x -> (x+t+p)(x+t+p-1)...(x+t+1) / p!` in the
/// indeterminate `x`, where `t` is `top_shift`.
///
/// Evaluated at an integer `x` this is the binomial coefficient
/// `C(x+t+p, p)`. The result has degree exactly `p` and leading
/// coefficient `1/p!`.
pub fn binomial_poly(top_shift: i64, p: u32) -> Polynomial {
    assert!(p >= 1, "binomial_poly requires p >= 1");
    let mut poly = Polynomial::one();
    for i in 1..=i64::from(p) {
        poly = poly.mul_linear(&Rational::from_integer(Int::from(top_shift + i)));
    }
    poly.scale(&Rational::new(Int::one(), factorial(p)))
}

/// Power sums `p_j = r1^j + r2^j` of the two roots of
/// `x^2 - e1 x + e2`, computed from the elementary symmetric values
/// via Newton's identity `p_j = e1 p_{j-1} - e2 p_{j-2}`.
///
/// Returns `[p_0, ..., p_{j_max}]` with `p_0 = 2` and `p_1 = e1`.
pub fn power_sums(e1: &Rational, e2: &Rational, j_max: usize) -> Vec<Rational> {
    let mut sums = Vec::with_capacity(j_max + 1);
    sums.push(Rational::from_integer(Int::from(2)));
    if j_max >= 1 {
        sums.push(e1.clone());
    }
    for j in 2..=j_max {
        let next = e1 * &sums[j - 1] - e2 * &sums[j - 2];
        sums.push(next);
    }
    sums
}

/// Certified check of the Stirling lower bound `p! >= sqrt(2 pi p) (p/e)^p`.
///
/// Squaring both (positive) sides avoids interval square roots:
/// `(p!)^2 e^{2p} >= 2 pi p^{2p+1}`. The comparison is performed with
/// the rational enclosures of pi and e and must be conclusive.
pub fn stirling_inequality_holds(p: u32) -> Result<bool> {
    if p == 0 {
        return Err(Error::Precondition("stirling check needs p >= 1".into()));
    }
    let fact2 = {
        let f = factorial(p);
        Rational::from_integer(&f * &f)
    };
    let lhs = euler_number().pow(2 * p).scale(&fact2);
    let p_big = Int::from(p);
    let rhs_factor = Rational::from_integer(Int::from(2) * p_big.pow(2 * p + 1));
    let rhs = pi().scale(&rhs_factor);
    lhs.try_gt(&rhs)
}

/// True when `q` is an integer.
pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}
