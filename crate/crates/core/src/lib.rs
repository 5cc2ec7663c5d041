//! Exact rational calculus of polyhedral convex sets, polyhedral convex
//! functions and polyhedral convex multifunctions.
//!
//! Everything is computed over arbitrary-precision rationals; no operation
//! uses floating point. The modules build on each other bottom-up:
//!
//! - [`linalg`]: rationals, matrices, row reduction.
//! - [`lp`]: exact simplex, the decision engine for emptiness and optimization.
//! - [`polyhedron`]: H/V representations, projection, images, redundancy removal.
//! - [`multifunction`]: set-valued maps given by their graphs.
//! - [`convex_function`]: epigraph functions and optimal value functions.
//! - [`relint`]: relative interiors by the binding-index-set formula.
//! - [`oracle`]: brute-force checkers that share no code path with the above.
//! - [`check`]: seeded property suites pairing each construction with an oracle.

pub mod check;
pub mod convex_function;
mod error;
pub mod linalg;
pub mod lp;
pub mod multifunction;
pub mod oracle;
pub mod polyhedron;
pub mod random;
pub mod relint;

pub use error::{Error, Result};
