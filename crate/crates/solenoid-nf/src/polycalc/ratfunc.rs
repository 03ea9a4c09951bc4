use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Poly3, PolyError};
use crate::exactnum::Rational;

/// Quotient of two polynomials.
///
/// The denominator is kept monic (leading coefficient 1 under graded lex
/// order). Common monomial factors are cancelled, and a denominator that
/// divides the numerator exactly is removed. No general gcd is taken, so
/// equality is decided by cross-multiplication.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RatRepr")]
pub struct RatFunc3 {
    num: Poly3,
    den: Poly3,
}

#[derive(Deserialize)]
struct RatRepr {
    num: Poly3,
    #[serde(default = "Poly3::one")]
    den: Poly3,
}

impl TryFrom<RatRepr> for RatFunc3 {
    type Error = PolyError;
    fn try_from(r: RatRepr) -> Result<Self, PolyError> {
        RatFunc3::new(r.num, r.den)
    }
}

impl RatFunc3 {
    pub fn new(num: Poly3, den: Poly3) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly3::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly3::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly3::constant(c))
    }

    pub fn from_poly(p: Poly3) -> Self {
        RatFunc3 {
            num: p,
            den: Poly3::one(),
        }
    }

    fn normalized(mut num: Poly3, mut den: Poly3) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mc = num.monomial_content();
        let dc = den.monomial_content();
        let common = [mc[0].min(dc[0]), mc[1].min(dc[1]), mc[2].min(dc[2])];
        if common != [0, 0, 0] {
            num = num.shift_down(common);
            den = den.shift_down(common);
        }
        let (_, lc) = den.leading().expect("nonzero denominator");
        if !lc.is_one() {
            let inv = lc.recip().expect("nonzero leading coefficient");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        if den.as_constant().is_none() {
            if let Some(q) = num.div_exact(&den) {
                return Self::from_poly(q);
            }
        }
        RatFunc3 { num, den }
    }

    pub fn num(&self) -> &Poly3 {
        &self.num
    }

    pub fn den(&self) -> &Poly3 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some()
    }

    /// The polynomial value when the denominator is constant.
    pub fn as_poly(&self) -> Option<Poly3> {
        let d = self.den.as_constant()?;
        Some(self.num.scale(&d.recip().ok()?))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if self.is_polynomial() {
            return Self::from_poly(self.num.scale(c));
        }
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc3) -> Result<RatFunc3, PolyError> {
        if rhs.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn derivative(&self, var: usize) -> RatFunc3 {
        if self.is_polynomial() {
            return Self::from_poly(self.num.derivative(var));
        }
        let n = &(&self.num.derivative(var) * &self.den) - &(&self.num * &self.den.derivative(var));
        Self::normalized(n, &self.den * &self.den)
    }

    /// Explicit simplification pass for display; arithmetic already keeps this form.
    pub fn reduce(&self) -> RatFunc3 {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    pub fn eval_f64(&self, p: [f64; 3]) -> f64 {
        self.num.eval_f64(p) / self.den.eval_f64(p)
    }
}

impl PartialEq for RatFunc3 {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for &RatFunc3 {
    type Output = RatFunc3;
    fn add(self, rhs: &RatFunc3) -> RatFunc3 {
        if self.den == rhs.den {
            if self.is_polynomial() {
                return RatFunc3::from_poly(&self.num + &rhs.num);
            }
            return RatFunc3::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc3::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc3 {
    type Output = RatFunc3;
    fn sub(self, rhs: &RatFunc3) -> RatFunc3 {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc3 {
    type Output = RatFunc3;
    fn mul(self, rhs: &RatFunc3) -> RatFunc3 {
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFunc3::from_poly(&self.num * &rhs.num);
        }
        RatFunc3::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc3 {
    type Output = RatFunc3;
    fn neg(self) -> RatFunc3 {
        RatFunc3 {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<Poly3> for RatFunc3 {
    fn from(p: Poly3) -> Self {
        RatFunc3::from_poly(p)
    }
}

impl fmt::Display for RatFunc3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc3({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc3::new(Poly3::one(), Poly3::zero()).unwrap_err(),
            PolyError::ZeroDenominator
        );
    }

    #[test]
    fn cancels_exact_divisor() {
        let r = Poly3::rho2();
        let f = RatFunc3::new(&r * &Poly3::x(), r.scale(&Rational::from_int(2))).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(
            f.as_poly().unwrap(),
            Poly3::x().scale(&Rational::frac(1, 2))
        );
    }

    #[test]
    fn quotient_rule() {
        // d/dy (z/y) = -z/y^2
        let f = RatFunc3::new(Poly3::z(), Poly3::y()).unwrap();
        let expect = RatFunc3::new(-&Poly3::z(), Poly3::y().pow(2)).unwrap();
        assert_eq!(f.derivative(1), expect);
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let a = RatFunc3::new(Poly3::x(), &Poly3::y() + &Poly3::z()).unwrap();
        let b = RatFunc3::new(
            &Poly3::x() * &(&Poly3::y() - &Poly3::z()),
            &Poly3::y().pow(2) - &Poly3::z().pow(2),
        )
        .unwrap();
        assert_eq!(a, b);
    }
}
