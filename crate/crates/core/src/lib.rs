//! Exact polynomial algebra and high-precision numerics for Mahler measures
//! of families of polynomials defining genus 2 and genus 3 curves.
//!
//! The crate is organized around a pipeline:
//!
//! * [`poly`] — exact univariate/bivariate polynomial algebra over the
//!   rationals and over `Q[k]`, Newton polygons, temperedness, Sturm counts.
//! * [`families`] — construction and validation of the one-parameter
//!   families of genus 2/3 curves, and branch-point distributions.
//! * [`curvealg`] — genus-1 quotient models, Weierstrass/Jacobian forms,
//!   j-invariants as rational functions of the parameter, minimal models
//!   and conductors.
//! * [`numerics`] — arbitrary-precision real/complex arithmetic, certified
//!   root isolation and tanh-sinh quadrature.
//! * [`mahler`] — Mahler measure computation for every polynomial shape
//!   used by the search: univariate, reciprocal quadratic, general bivariate.
//! * [`lfun`] — L'(E,0) for elliptic curves over Q and L'(chi_{-f},-1) for
//!   odd real characters.
//! * [`relations`] — rational-proportion and integer-relation detection,
//!   j-invariant matching, and family scans.

pub mod arith;
pub mod curvealg;
pub mod error;
pub mod families;
pub mod lfun;
pub mod mahler;
pub mod numerics;
pub mod poly;
pub mod relations;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Exact rational scalar used by all symbolic code.
pub type Rat = num_rational::BigRational;
/// Exact integer scalar.
pub type Int = num_bigint::BigInt;

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Convenience constructor for integer rationals.
pub fn rint(n: i64) -> Rat {
    Rat::from(Int::from(n))
}
