//! Mahler measures for every polynomial shape in the search: univariate,
//! reciprocal quadratic-in-y, and general bivariate (including the shifted
//! nonreciprocal families and cubic-in-y quotients).

pub mod general;
pub mod reciprocal;
pub mod split;
pub mod univariate;

pub use general::{mahler_cubic_in_y, mahler_general};
pub use reciprocal::mahler_reciprocal_quadratic;
pub use univariate::mahler_univariate;

use crate::numerics::{BigReal, PrecisionContext};
use crate::poly::BivarPoly;
use crate::Result;

/// Dispatch on shape: reciprocal y-quadratics take the fast explicit-branch
/// path, everything else the general path.
pub fn mahler_measure(p: &BivarPoly, ctx: &PrecisionContext) -> Result<BigReal> {
    if p.y_degree() == 2 && p.to_parampoly().is_reciprocal() {
        return mahler_reciprocal_quadratic(p, ctx);
    }
    if p.y_degree() == 0 {
        return mahler_univariate(&p.y_coeff(0), ctx);
    }
    mahler_general(p, ctx)
}
