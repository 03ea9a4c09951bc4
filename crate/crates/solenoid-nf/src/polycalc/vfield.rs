use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Poly3, RatFunc3};
use crate::exactnum::Rational;

/// Vector field `x ∂x + y ∂y + z ∂z` with rational-function components.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct VField3 {
    pub x: RatFunc3,
    pub y: RatFunc3,
    pub z: RatFunc3,
}

impl VField3 {
    pub fn new(x: RatFunc3, y: RatFunc3, z: RatFunc3) -> Self {
        VField3 { x, y, z }
    }

    pub fn from_polys(x: Poly3, y: Poly3, z: Poly3) -> Self {
        VField3::new(x.into(), y.into(), z.into())
    }

    pub fn zero() -> Self {
        VField3::new(RatFunc3::zero(), RatFunc3::zero(), RatFunc3::zero())
    }

    pub fn components(&self) -> [&RatFunc3; 3] {
        [&self.x, &self.y, &self.z]
    }

    fn from_array(c: [RatFunc3; 3]) -> Self {
        let [x, y, z] = c;
        VField3 { x, y, z }
    }

    fn map(&self, f: impl Fn(&RatFunc3) -> RatFunc3) -> Self {
        VField3::from_array(self.components().map(f))
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn is_polynomial(&self) -> bool {
        self.components().iter().all(|c| c.is_polynomial())
    }

    pub fn polys(&self) -> Option<[Poly3; 3]> {
        Some([self.x.as_poly()?, self.y.as_poly()?, self.z.as_poly()?])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|f| f.scale(c))
    }

    pub fn mul_fn(&self, g: &RatFunc3) -> Self {
        self.map(|f| f * g)
    }

    pub fn gradient(f: &RatFunc3) -> Self {
        VField3::new(f.derivative(0), f.derivative(1), f.derivative(2))
    }

    pub fn divergence(&self) -> RatFunc3 {
        &(&self.x.derivative(0) + &self.y.derivative(1)) + &self.z.derivative(2)
    }

    pub fn curl(&self) -> Self {
        VField3::new(
            &self.z.derivative(1) - &self.y.derivative(2),
            &self.x.derivative(2) - &self.z.derivative(0),
            &self.y.derivative(0) - &self.x.derivative(1),
        )
    }

    pub fn cross(&self, o: &VField3) -> Self {
        VField3::new(
            &(&self.y * &o.z) - &(&self.z * &o.y),
            &(&self.z * &o.x) - &(&self.x * &o.z),
            &(&self.x * &o.y) - &(&self.y * &o.x),
        )
    }

    pub fn dot(&self, o: &VField3) -> RatFunc3 {
        &(&(&self.x * &o.x) + &(&self.y * &o.y)) + &(&self.z * &o.z)
    }

    /// Directional derivative `self · ∇f`.
    pub fn apply(&self, f: &RatFunc3) -> RatFunc3 {
        self.dot(&VField3::gradient(f))
    }

    /// `[u, v]_i = Σ_j (u_j ∂_j v_i − v_j ∂_j u_i)`.
    pub fn lie_bracket(&self, v: &VField3) -> Self {
        let u = self;
        let comp = |ui: &RatFunc3, vi: &RatFunc3| &u.apply(vi) - &v.apply(ui);
        VField3::new(comp(&u.x, &v.x), comp(&u.y, &v.y), comp(&u.z, &v.z))
    }

    pub fn eval_f64(&self, p: [f64; 3]) -> [f64; 3] {
        self.components().map(|c| c.eval_f64(p))
    }
}

impl Add for &VField3 {
    type Output = VField3;
    fn add(self, rhs: &VField3) -> VField3 {
        VField3::new(&self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }
}

impl Sub for &VField3 {
    type Output = VField3;
    fn sub(self, rhs: &VField3) -> VField3 {
        VField3::new(&self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl Neg for &VField3 {
    type Output = VField3;
    fn neg(self) -> VField3 {
        self.map(|c| -c)
    }
}

impl fmt::Display for VField3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ∂x + ({}) ∂y + ({}) ∂z", self.x, self.y, self.z)
    }
}

impl fmt::Debug for VField3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VField3[{}, {}, {}]", self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot() -> VField3 {
        VField3::from_polys(Poly3::zero(), Poly3::z(), -&Poly3::y())
    }

    #[test]
    fn rotation_is_solenoidal_with_constant_curl() {
        let r = rot();
        assert!(r.divergence().is_zero());
        let c = r.curl();
        assert_eq!(
            c,
            VField3::from_polys(
                Poly3::constant(Rational::from_int(-2)),
                Poly3::zero(),
                Poly3::zero()
            )
        );
    }

    #[test]
    fn gradient_is_curl_free() {
        let f = RatFunc3::new(&Poly3::x() * &Poly3::y(), &Poly3::z() + &Poly3::one()).unwrap();
        assert!(VField3::gradient(&f).curl().is_zero());
    }

    #[test]
    fn bracket_with_itself_vanishes() {
        let v = VField3::from_polys(Poly3::x().pow(2), Poly3::rho2(), Poly3::y());
        assert!(v.lie_bracket(&v).is_zero());
    }

    #[test]
    fn euler_field_bracket() {
        // [x∂x, x²∂x] = x²∂x
        let e = VField3::from_polys(Poly3::x(), Poly3::zero(), Poly3::zero());
        let q = VField3::from_polys(Poly3::x().pow(2), Poly3::zero(), Poly3::zero());
        assert_eq!(e.lie_bracket(&q), q);
    }
}
