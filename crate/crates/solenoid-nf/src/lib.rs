//! Exact normal forms for solenoidal Hopf-zero singularities.

pub mod exactnum;
pub mod frontend;
pub mod liealg;
pub mod linalg;
pub mod normalform;
pub mod polycalc;
pub mod representations;
