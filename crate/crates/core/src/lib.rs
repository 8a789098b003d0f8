//! Exact-arithmetic criteria for complete intersections in rational
//! homogeneous varieties.
//!
//! The crate decides, with integer and arbitrary-precision rational
//! arithmetic only, when a smooth low-codimensional subvariety of a
//! rational homogeneous variety G/P must be a complete intersection,
//! and when given Chern data cannot be realised by any subvariety at
//! all. The main ingredients:
//!
//! * [`exact`]: big rationals, dense univariate polynomials, Newton
//!   power sums, and certified rational enclosures of pi and e.
//! * [`integrality`]: Riemann-Roch Euler characteristics of rank-2
//!   bundles on projective space and the Schwartzenberger integrality
//!   test over all twists.
//! * [`search`]: brute-force minimal positive discriminants per
//!   dimension (Schneider-style table), the quadratic lower bound
//!   check, and the estimate-crossover computation.
//! * [`roots`]: Dynkin/Cartan data, positive-root enumeration, and the
//!   dimension, Fano index and positivity invariants of G/P for a
//!   maximal parabolic.
//! * [`plane`]: the (d, n)-plane arithmetic: discriminant, e(k), Segre
//!   number recurrence, angle exclusion and degree lower bounds.
//! * [`classify`]: the decision procedures combined into one verdict
//!   with an audit trail.
//! * [`plot`]: deterministic SVG rendering of the (d, n)-plane.

pub mod classify;
pub mod error;
pub mod exact;
pub mod integrality;
pub mod plane;
pub mod plot;
pub mod roots;
pub mod search;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
