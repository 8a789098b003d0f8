use std::cmp::Ordering;

use num_traits::{One, Pow, Zero};

use super::{Int, Rational};
use crate::{Error, Result};

/// Closed interval with exact rational endpoints.
///
/// Transcendental constants are represented by such enclosures, and
/// every comparison against them must be conclusive: an overlapping
/// comparison is an error, never a guess. Verdicts in this crate may
/// therefore depend on interval arithmetic but never on rounding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(value: Rational) -> Self {
        Interval {
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().cloned().unwrap();
        let hi = products.iter().max().cloned().unwrap();
        Interval { lo, hi }
    }

    pub fn pow(&self, exp: u32) -> Interval {
        if exp == 0 {
            return Interval::point(Rational::one());
        }
        // Powering a reduced fraction needs no re-reduction, so raise
        // the endpoints directly instead of multiplying intervals.
        let e = exp as i32;
        let zero = Rational::zero();
        let (plo, phi) = (Pow::pow(&self.lo, e), Pow::pow(&self.hi, e));
        if self.lo >= zero {
            Interval { lo: plo, hi: phi }
        } else if self.hi <= zero {
            if exp.is_multiple_of(2) {
                Interval { lo: phi, hi: plo }
            } else {
                Interval { lo: plo, hi: phi }
            }
        } else if exp % 2 == 1 {
            Interval { lo: plo, hi: phi }
        } else {
            Interval {
                lo: zero,
                hi: plo.max(phi),
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Interval {
        let a = &self.lo * factor;
        let b = &self.hi * factor;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    /// Reciprocal of a strictly positive interval.
    pub fn recip(&self) -> Result<Interval> {
        if self.lo <= Rational::zero() {
            return Err(Error::Precondition(
                "interval reciprocal needs a strictly positive interval".into(),
            ));
        }
        Ok(Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    /// Conclusive strict comparison `self > other`.
    pub fn try_gt(&self, other: &Interval) -> Result<bool> {
        if self.lo > other.hi {
            Ok(true)
        } else if self.hi <= other.lo {
            Ok(false)
        } else {
            Err(Error::Inconclusive(format!(
                "[{}, {}] vs [{}, {}]",
                self.lo, self.hi, other.lo, other.hi
            )))
        }
    }

    /// Conclusive ordering of the enclosed value against an exact rational.
    pub fn try_cmp(&self, q: &Rational) -> Result<Ordering> {
        if &self.lo > q {
            Ok(Ordering::Greater)
        } else if &self.hi < q {
            Ok(Ordering::Less)
        } else if self.lo == self.hi && &self.lo == q {
            Ok(Ordering::Equal)
        } else {
            Err(Error::Inconclusive(format!(
                "[{}, {}] vs {}",
                self.lo, self.hi, q
            )))
        }
    }
}

/// Parse a plain decimal literal into an exact rational.
fn rational_from_decimal(text: &str) -> Rational {
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    let numer: Int = digits.parse().expect("decimal literal");
    let denom = Int::from(10u32).pow(frac_part.len() as u32);
    Rational::new(numer, denom)
}

fn enclosure_from_truncation(truncated: &str) -> Interval {
    let lo = rational_from_decimal(truncated);
    let frac_len = truncated.split_once('.').map_or(0, |(_, f)| f.len());
    let ulp = Rational::new(Int::one(), Int::from(10u32).pow(frac_len as u32));
    let hi = &lo + ulp;
    Interval::new(lo, hi)
}

// 50 correct decimal digits each; the true constants continue with
// 58209... and 95749..., so [truncation, truncation + 10^-50] encloses.
const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";
const E_50: &str = "2.71828182845904523536028747135266249775724709369995";

/// Certified enclosure of pi, 50 correct decimal digits.
pub fn pi() -> Interval {
    enclosure_from_truncation(PI_50)
}

/// Certified enclosure of Euler's number e, 50 correct decimal digits.
pub fn euler_number() -> Interval {
    enclosure_from_truncation(E_50)
}
