use std::fmt::{Debug, Display};

use serde::Serialize;

use crate::exactnum::Rational;

/// Field operations shared by the exact and floating pipelines.
pub trait Scalar: Clone + Debug + Display + PartialEq + Serialize {
    /// Comparison tolerance; zero for exact arithmetic.
    const TOLERANCE: f64;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_q(q: &Rational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_negligible(&self) -> bool;
    fn to_f64(&self) -> f64;

    fn from_i64(n: i64) -> Self {
        Self::from_q(&Rational::from_int(n))
    }

    fn near(&self, o: &Self) -> bool {
        self.sub(o).is_negligible()
    }
}

impl Scalar for Rational {
    const TOLERANCE: f64 = 0.0;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_q(q: &Rational) -> Self {
        q.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
}

impl Scalar for f64 {
    const TOLERANCE: f64 = 1e-9;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_q(q: &Rational) -> Self {
        q.to_f64()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_negligible(&self) -> bool {
        self.abs() <= Self::TOLERANCE
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}
