//! Cubic Hopf-pitchfork systems, the modified Chua oscillator and the JSON envelope.

mod chua;
mod cubic;
mod scalar;

pub use chua::{
    chua_exact, chua_float, chua_pipeline, ChuaConstants, ChuaError, ChuaOutput, ChuaParams,
    ChuaReport, ClosedFormComparison, ClosedFormDisplay, Derived, Mode,
};
pub use cubic::{
    classical_nf_cubic, cubic_exponents, extract_coefficients, membership_relations, ClassicalNf,
    CubicError, CubicSystem, Exp3, ExtractedCoefficients, Membership,
};
pub use scalar::Scalar;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "solenoid-nf/1";

/// Top-level JSON wrapper carrying the format version.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: String,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Envelope<T> {
    pub fn new(body: T) -> Self {
        Envelope {
            schema: SCHEMA.to_string(),
            body,
        }
    }
}
