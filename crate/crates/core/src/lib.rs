//! Exact Chern-number calculus for Hodge-theoretic Euler characteristics.
//!
//! * [`poly`]: graded polynomials in `c_1..c_n`, truncated at top weight.
//! * [`symchern`]: partitions, Schur determinants, Segre and power-sum classes.
//! * [`hrr`]: Todd class and the `χ^p = χ(X, Ω^p)` functionals.
//! * [`cone`]: positivity generators and exact LP certificates.
//! * [`varieties`]: Chern numbers of standard manifolds and sign audits.

pub mod cone;
pub mod error;
pub mod hrr;
pub mod par;
pub mod poly;
pub mod rational;
mod series;
pub mod symchern;
pub mod varieties;

pub use error::{Error, Result};
pub use par::Execution;
pub use poly::{ChernFunctional, GradedPoly, Monomial};
pub use rational::Rational;
pub use symchern::{Convention, Partition};

/// Default cap on dimensions accepted by corpus and certificate entry points.
pub const DEFAULT_MAX_DIM: usize = 6;
