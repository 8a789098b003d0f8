//! Implementation of the `cicrit` command line tool: variety
//! inspection, classification, minimal-discriminant tables, bound
//! verification, and SVG rendering of the (d, n)-plane.
//!
//! Every successful invocation emits exactly one output envelope (JSON
//! mode) or a flat table (CSV/plain modes). Exit codes: 0 success,
//! 1 usage error, 2 data unavailable, 3 verification failure.

pub mod envelope;
pub mod oracle;
pub mod run;

pub use envelope::{Format, OutputEnvelope, SCHEMA_VERSION};
pub use run::{exit_code_for, CommandOutput};
