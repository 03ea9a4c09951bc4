use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::Rational;

/// Exponent vector `[i, j, k]` for `x^i y^j z^k`.
pub type Exp = [u32; 3];

/// Sparse polynomial in `x, y, z` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is mathematical
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly3 {
    terms: BTreeMap<Exp, Rational>,
}

fn total(e: &Exp) -> u32 {
    e[0] + e[1] + e[2]
}

/// Graded lexicographic key, `x > y > z`.
fn grlex(e: &Exp) -> (u32, Exp) {
    (total(e), *e)
}

impl Poly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: Rational, e: Exp) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// The coordinate `x` (0), `y` (1) or `z` (2).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(Rational::one(), e)
    }

    pub fn x() -> Self {
        Self::var(0)
    }

    pub fn y() -> Self {
        Self::var(1)
    }

    pub fn z() -> Self {
        Self::var(2)
    }

    /// `y² + z²`.
    pub fn rho2() -> Self {
        &Self::monomial(Rational::one(), [0, 2, 0]) + &Self::monomial(Rational::one(), [0, 0, 2])
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exp, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exp) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant value if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(total).max()
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly3 {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| total(e) == d)
                .map(|(e, c)| (*e, c.clone())),
        )
    }

    /// Leading term under graded lexicographic order.
    pub fn leading(&self) -> Option<(Exp, Rational)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| grlex(e))
            .map(|(e, c)| (*e, c.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Poly3 {
        if c.is_zero() {
            return Self::zero();
        }
        Poly3 {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly3 {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Poly3 {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut ne = *e;
            ne[var] -= 1;
            out.add_term(ne, c * &Rational::from_int(e[var]));
        }
        out
    }

    pub fn eval(&self, p: &[Rational; 3]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for i in 0..3 {
                    v = &v * &p[i].pow(e[i] as i32).expect("nonnegative power");
                }
                v
            })
            .sum()
    }

    pub fn eval_f64(&self, p: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                c.to_f64()
                    * p[0].powi(e[0] as i32)
                    * p[1].powi(e[1] as i32)
                    * p[2].powi(e[2] as i32)
            })
            .sum()
    }

    /// Substitutes `x, y, z` by the given polynomials.
    pub fn substitute(&self, s: &[Poly3; 3]) -> Poly3 {
        let mut cache: [Vec<Poly3>; 3] = [vec![Self::one()], vec![Self::one()], vec![Self::one()]];
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut m = Self::constant(c.clone());
            for i in 0..3 {
                while cache[i].len() <= e[i] as usize {
                    let next = cache[i].last().expect("nonempty") * &s[i];
                    cache[i].push(next);
                }
                m = &m * &cache[i][e[i] as usize];
            }
            out = &out + &m;
        }
        out
    }

    /// `p(-x, -y, -z)`.
    pub fn reflect(&self) -> Poly3 {
        Poly3 {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if total(e) % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly3) -> Option<Poly3> {
        let (de, dc) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.leading() {
            if (0..3).any(|i| re[i] < de[i]) {
                return None;
            }
            let qe = [re[0] - de[0], re[1] - de[1], re[2] - de[2]];
            let qc = rc.checked_div(&dc).ok()?;
            let t = Self::monomial(qc, qe);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Exp {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return [0; 3];
        };
        it.fold(*first, |a, e| {
            [a[0].min(e[0]), a[1].min(e[1]), a[2].min(e[2])]
        })
    }

    pub fn shift_down(&self, m: Exp) -> Poly3 {
        Poly3 {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] - m[0], e[1] - m[1], e[2] - m[2]], c.clone()))
                .collect(),
        }
    }
}

impl Add for &Poly3 {
    type Output = Poly3;
    fn add(self, rhs: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly3 {
    type Output = Poly3;
    fn sub(self, rhs: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &Poly3 {
    type Output = Poly3;
    fn mul(self, rhs: &Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly3 {
    type Output = Poly3;
    fn neg(self) -> Poly3 {
        Poly3 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Add for Poly3 {
    type Output = Poly3;
    fn add(self, rhs: Poly3) -> Poly3 {
        &self + &rhs
    }
}

impl Sub for Poly3 {
    type Output = Poly3;
    fn sub(self, rhs: Poly3) -> Poly3 {
        &self - &rhs
    }
}

impl Mul for Poly3 {
    type Output = Poly3;
    fn mul(self, rhs: Poly3) -> Poly3 {
        &self * &rhs
    }
}

impl Neg for Poly3 {
    type Output = Poly3;
    fn neg(self) -> Poly3 {
        -&self
    }
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by_key(|(e, _)| std::cmp::Reverse(grlex(e)));
        for (i, (e, c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !a.is_one() || total(e) == 0 {
                factors.push(a.to_string());
            }
            for (v, &p) in ["x", "y", "z"].iter().zip(e.iter()) {
                match p {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{p}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly3({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    e: Exp,
    c: Rational,
}

impl Serialize for Poly3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(e, c)| TermRepr {
                e: *e,
                c: c.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<TermRepr>::deserialize(d)?;
        Ok(Poly3::from_terms(v.into_iter().map(|t| (t.e, t.c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn mul_and_derivative() {
        let p = &Poly3::x() + &Poly3::y();
        let sq = p.pow(2);
        assert_eq!(sq.coeff(&[1, 1, 0]), q(2));
        assert_eq!(sq.derivative(0), p.scale(&q(2)));
    }

    #[test]
    fn exact_division() {
        let r = Poly3::rho2();
        let p = &r * &(&Poly3::x() - &Poly3::one());
        assert_eq!(p.div_exact(&r), Some(&Poly3::x() - &Poly3::one()));
        assert_eq!(Poly3::x().div_exact(&r), None);
    }

    #[test]
    fn substitution_and_reflection() {
        let p = &Poly3::x().pow(3) + &Poly3::y();
        let s = [Poly3::y(), Poly3::z(), Poly3::x()];
        assert_eq!(p.substitute(&s), &Poly3::y().pow(3) + &Poly3::z());
        assert_eq!(p.reflect(), -&p);
    }

    #[test]
    fn display_is_graded() {
        let p = &(&Poly3::x().pow(2) - &Poly3::z()) + &Poly3::constant(Rational::frac(1, 2));
        assert_eq!(p.to_string(), "x^2 - z + 1/2");
    }

    #[test]
    fn json_roundtrip() {
        let p = &Poly3::rho2().scale(&Rational::frac(-3, 4)) + &Poly3::x();
        let s = serde_json::to_string(&p).unwrap();
        let back: Poly3 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
