//! Polynomials, rational functions and vector fields in `x, y, z`.

pub(crate) mod pairs;
mod poly;
mod ratfunc;
mod vfield;

pub use poly::{Exp, Poly3};
pub use ratfunc::RatFunc3;
pub use vfield::VField3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("zero denominator")]
    ZeroDenominator,
}
