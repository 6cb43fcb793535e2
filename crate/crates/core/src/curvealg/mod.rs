pub mod quotient;
pub mod tate;
pub mod weierstrass;

pub use quotient::{derive_quotient_data, genus1_weierstrass, jacobian_of_quartic, quotient_by_sigma, QuotientData, QuotientModel};
pub use tate::{minimal_model, minimal_model_int, EllipticCurveQ, LocalData};
pub use weierstrass::WModelK;
