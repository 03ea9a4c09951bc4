use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::RepError;
use crate::exactnum::Rational;
use crate::liealg::{BasisIndex, Family, LieElement};
use crate::polycalc::Poly3;

/// Polynomial in `x` and `r`, where `r` stands for `y² + z²`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BivarPoly {
    #[serde(with = "crate::polycalc::pairs")]
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn r() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, xe: u32, re: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(xe, re, &c);
        p
    }

    pub fn add_term(&mut self, xe: u32, re: u32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((xe, re)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(xe, re));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, xe: u32, re: u32) -> Rational {
        self.terms
            .get(&(xe, re))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(a, b), v) in &self.terms {
            out.add_term(a, b, &(v * c));
        }
        out
    }

    pub fn d_dx(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), v) in &self.terms {
            if a > 0 {
                out.add_term(a - 1, b, &(v * &Rational::from_int(a)));
            }
        }
        out
    }

    pub fn d_dr(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), v) in &self.terms {
            if b > 0 {
                out.add_term(a, b - 1, &(v * &Rational::from_int(b)));
            }
        }
        out
    }

    /// Division by `r`, when every term carries a factor of `r`.
    pub fn div_r(&self) -> Option<Self> {
        let mut out = Self::zero();
        for (&(a, b), v) in &self.terms {
            if b == 0 {
                return None;
            }
            out.add_term(a, b - 1, v);
        }
        Some(out)
    }

    /// Substitutes `r = y² + z²`.
    pub fn to_cartesian(&self) -> Poly3 {
        let mut p = Poly3::zero();
        for (&(a, b), v) in &self.terms {
            p = &p + &(&Poly3::monomial(v.clone(), [a, 0, 0]) * &Poly3::rho2().pow(b));
        }
        p
    }

    /// `f^l_k = x^{l+1} r^{k-l+1}` for the F family (and H through the embedding).
    pub fn f_basis(idx: &BasisIndex) -> Self {
        let g = idx.to_general();
        assert_eq!(g.family, Family::F, "f_basis expects an F or H index");
        Self::monomial(Rational::one(), (g.l + 1) as u32, (g.k - g.l + 1) as u32)
    }
}

/// `{f, g} = ∂_r f ∂_x g - ∂_r g ∂_x f`.
pub fn poisson_bracket(f: &BivarPoly, g: &BivarPoly) -> BivarPoly {
    &(&f.d_dr() * &g.d_dx()) - &(&g.d_dr() * &f.d_dx())
}

/// Inverse of `F^l_k ↦ f^l_k`: sends `x^a r^b` to `F^{a-1}_{a+b-2}`.
pub fn phi(f: &BivarPoly) -> Result<LieElement, RepError> {
    let mut out = LieElement::zero();
    for (&(a, b), c) in f.terms() {
        let (l, k) = (a as i64 - 1, a as i64 + b as i64 - 2);
        let idx =
            BasisIndex::new(Family::F, l, k).map_err(|_| RepError::NotInPoissonAlgebra(a, b))?;
        out.add_term(idx, c);
    }
    Ok(out)
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(a, b), v) in &rhs.terms {
            out.add_term(a, b, v);
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        self + &(-rhs)
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(a1, b1), v1) in &self.terms {
            for (&(a2, b2), v2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, &(v1 * v2));
            }
        }
        out
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), v) in self.terms.iter().rev() {
            let neg = v.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut factors = Vec::new();
            let av = v.abs();
            if !av.is_one() || (a == 0 && b == 0) {
                factors.push(av.to_string());
            }
            for (s, e) in [("x", a), ("r", b)] {
                match e {
                    0 => {}
                    1 => factors.push(s.to_string()),
                    _ => factors.push(format!("{s}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}
