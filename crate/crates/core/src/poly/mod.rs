//! Exact polynomial and rational-function algebra over Q, Q[k] and Q[k][x]:
//! Newton polygons, cyclotomic tests, resultants and Sturm sequences.

pub mod cyclotomic;
pub mod kx;
pub mod newton;
pub mod parampoly;
pub mod parse;
pub mod print;
pub mod ratfunc;
pub mod resultant;
pub mod sturm;
pub mod unipoly;

pub use kx::PolyXK;
pub use newton::{is_tempered, NewtonPolygon};
pub use parampoly::{BivarPoly, ParamPoly};
pub use parse::parse_poly;
pub use ratfunc::RatFuncK;
pub use resultant::{disc_resultant_y, resultant_y};
pub use sturm::sturm_count_on_circle;
pub use unipoly::UniPoly;
