//! L-functions: L'(E, 0) for elliptic curves over Q and d_f = L'(chi_{-f}, -1)
//! for real odd primitive characters.

pub mod ap;
pub mod cache;
pub mod character;
pub mod lseries;

pub use ap::ap_count;
pub use character::{dirichlet_dval, OddCharacter};
pub use lseries::{lprime_at_zero, lprime_for_curve, LPrimeResult, LSeriesData};
