//! Arbitrary-precision numerics: contexts, reals, complexes, certified root
//! isolation, quadrature and special functions.

pub mod complex;
pub mod context;
pub mod quad;
pub mod real;
pub mod roots;
pub mod special;

pub use complex::BigComplex;
pub use context::PrecisionContext;
pub use quad::{integrate, EndpointSingularity, EvalResult, EvalSignal};
pub use real::BigReal;
pub use roots::{classify_unit_circle, isolate_roots, CertifiedRoot};
