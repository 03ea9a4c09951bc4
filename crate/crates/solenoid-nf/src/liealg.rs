//! Indexed Lie algebras of solenoidal Hopf-zero vector fields.
//!
//! Two algebras share this module. The general one is spanned by
//!
//! ```text
//! F^l_k = x^l ρ^{2(k-l)} ((k-l+1) x ∂x - (l+1)/2 ρ ∂ρ),   -1 <= l <= k
//! Θ^l_k = x^l ρ^{2(k-l)} ∂θ,                               0 <= l <= k
//! ```
//!
//! with `ρ² = y² + z²` and `∂θ = z ∂y - y ∂z`. The Z2-equivariant one is the
//! subalgebra `H^l_k = F^{2l}_k`, `𝛩^l_k = Θ^{2l}_k`. Brackets are evaluated
//! from closed-form structure constants; [`expand_cartesian`] gives the
//! Cartesian field used as an independent check.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactnum::Rational;
use crate::polycalc::{Poly3, VField3};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("invalid basis index {0}^{1}_{2}")]
    InvalidIndex(Family, i64, i64),
    #[error("cannot mix general and Z2 families in one element")]
    MixedAlgebra,
    #[error("grading {0} applies to Z2 families only, got {1}")]
    NonZ2Grading(&'static str, Family),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    F,
    T,
    H,
    TZ2,
}

impl Family {
    pub fn algebra(self) -> Algebra {
        match self {
            Family::F | Family::T => Algebra::General,
            Family::H | Family::TZ2 => Algebra::Z2,
        }
    }

    /// True for the rotational families `T` and `TZ2`.
    pub fn is_angular(self) -> bool {
        matches!(self, Family::T | Family::TZ2)
    }

    fn symbol(self) -> &'static str {
        match self {
            Family::F => "F",
            Family::T => "Θ",
            Family::H => "H",
            Family::TZ2 => "𝛩",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algebra {
    General,
    Z2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub family: Family,
    pub l: i64,
    pub k: i64,
}

impl BasisIndex {
    pub fn new(family: Family, l: i64, k: i64) -> Result<Self, LieError> {
        let ok = k >= 0
            && match family {
                Family::F => -1 <= l && l <= k,
                Family::T => 0 <= l && l <= k,
                Family::H => 0 <= 2 * l && 2 * l <= k && k >= 1,
                Family::TZ2 => 0 <= 2 * l && 2 * l <= k,
            };
        if ok {
            Ok(BasisIndex { family, l, k })
        } else {
            Err(LieError::InvalidIndex(family, l, k))
        }
    }

    pub fn f(l: i64, k: i64) -> Self {
        Self::new(Family::F, l, k).expect("valid F index")
    }

    pub fn t(l: i64, k: i64) -> Self {
        Self::new(Family::T, l, k).expect("valid Θ index")
    }

    pub fn h(l: i64, k: i64) -> Self {
        Self::new(Family::H, l, k).expect("valid H index")
    }

    pub fn tz2(l: i64, k: i64) -> Self {
        Self::new(Family::TZ2, l, k).expect("valid 𝛩 index")
    }

    pub fn algebra(&self) -> Algebra {
        self.family.algebra()
    }

    /// The unit rotation `Θ^0_0` of the given algebra.
    pub fn rotation(alg: Algebra) -> Self {
        match alg {
            Algebra::General => Self::t(0, 0),
            Algebra::Z2 => Self::tz2(0, 0),
        }
    }

    pub fn is_rotation(&self) -> bool {
        self.family.is_angular() && self.l == 0 && self.k == 0
    }

    /// Image in the general algebra: `H^l_k ↦ F^{2l}_k`, `𝛩^l_k ↦ Θ^{2l}_k`.
    pub fn to_general(&self) -> BasisIndex {
        match self.family {
            Family::H => Self::f(2 * self.l, self.k),
            Family::TZ2 => Self::t(2 * self.l, self.k),
            _ => *self,
        }
    }

    /// Total polynomial degree of the Cartesian expansion.
    pub fn poly_degree(&self) -> i64 {
        let g = self.to_general();
        2 * g.k - g.l + 1
    }

    /// All valid indices of a family with `k <= kmax`.
    pub fn enumerate(family: Family, kmax: i64) -> Vec<BasisIndex> {
        let mut out = Vec::new();
        for k in 0..=kmax {
            for l in -1..=k {
                if let Ok(i) = Self::new(family, l, k) {
                    out.push(i);
                }
            }
        }
        out
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}_{}", self.family, self.l, self.k)
    }
}

#[derive(Serialize, Deserialize)]
struct IndexRepr {
    fam: Family,
    l: i64,
    k: i64,
}

impl Serialize for BasisIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        IndexRepr {
            fam: self.family,
            l: self.l,
            k: self.k,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BasisIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = IndexRepr::deserialize(d)?;
        BasisIndex::new(r.fam, r.l, r.k).map_err(serde::de::Error::custom)
    }
}

/// Closed-form bracket of two basis elements: `[a, b] = c · idx`.
///
/// Returns `Ok(None)` when the bracket vanishes.
pub fn structure_constant(
    a: &BasisIndex,
    b: &BasisIndex,
) -> Result<Option<(i64, BasisIndex)>, LieError> {
    use Family::*;
    if a.algebra() != b.algebra() {
        return Err(LieError::MixedAlgebra);
    }
    let (l, k, m, n) = (a.l, a.k, b.l, b.k);
    let (c, fam) = match (a.family, b.family) {
        (F, F) => ((k - l + 1) * (m + 1) - (n - m + 1) * (l + 1), F),
        (F, T) => ((k - l + 1) * m - (l + 1) * (n - m), T),
        (T, F) => (-((n - m + 1) * l - (m + 1) * (k - l)), T),
        (H, H) => ((2 * m + 1) * (k + 2) - (2 * l + 1) * (n + 2), H),
        (H, TZ2) => (2 * m * (k + 2) - n * (2 * l + 1), TZ2),
        (TZ2, H) => (-(2 * l * (n + 2) - k * (2 * m + 1)), TZ2),
        (T, T) | (TZ2, TZ2) => return Ok(None),
        _ => unreachable!("same algebra"),
    };
    if c == 0 {
        return Ok(None);
    }
    let idx = BasisIndex::new(fam, l + m, k + n)?;
    Ok(Some((c, idx)))
}

/// Finite linear combination of basis elements from a single algebra.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LieElement {
    terms: BTreeMap<BasisIndex, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(idx: BasisIndex) -> Self {
        Self::term(idx, Rational::one())
    }

    pub fn term(idx: BasisIndex, c: Rational) -> Self {
        let mut e = Self::zero();
        e.terms.insert(idx, c);
        e.terms.retain(|_, v| !v.is_zero());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (BasisIndex, Rational)>>(
        it: I,
    ) -> Result<Self, LieError> {
        let mut e = Self::zero();
        let mut alg = None;
        for (idx, c) in it {
            match alg {
                None => alg = Some(idx.algebra()),
                Some(a) if a != idx.algebra() => return Err(LieError::MixedAlgebra),
                _ => {}
            }
            e.add_term(idx, &c);
        }
        Ok(e)
    }

    /// Adds `c · idx`; the caller guarantees algebra homogeneity.
    pub fn add_term(&mut self, idx: BasisIndex, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(idx).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &Rational)> {
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

    pub fn coeff(&self, idx: &BasisIndex) -> Rational {
        self.terms.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn algebra(&self) -> Option<Algebra> {
        self.terms.keys().next().map(BasisIndex::algebra)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LieElement {
            terms: self.terms.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn add(&self, other: &LieElement) -> Result<Self, LieError> {
        check_same(self, other)?;
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(*i, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LieElement) -> Result<Self, LieError> {
        self.add(&other.neg())
    }

    /// Keeps the terms selected by `keep`.
    pub fn filter(&self, keep: impl Fn(&BasisIndex) -> bool) -> Self {
        LieElement {
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| keep(i))
                .map(|(i, c)| (*i, c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&BasisIndex, &Rational) -> Rational) -> Self {
        let mut out = Self::zero();
        for (i, c) in &self.terms {
            out.add_term(*i, &f(i, c));
        }
        out
    }

    /// Image in the general algebra.
    pub fn to_general(&self) -> Self {
        let mut out = Self::zero();
        for (i, c) in &self.terms {
            out.add_term(i.to_general(), c);
        }
        out
    }
}

fn check_same(a: &LieElement, b: &LieElement) -> Result<(), LieError> {
    match (a.algebra(), b.algebra()) {
        (Some(x), Some(y)) if x != y => Err(LieError::MixedAlgebra),
        _ => Ok(()),
    }
}

/// Bilinear extension of [`structure_constant`].
pub fn bracket(e1: &LieElement, e2: &LieElement) -> Result<LieElement, LieError> {
    bracket_filtered(e1, e2, |_| true)
}

/// Bracket keeping only result indices accepted by `keep`.
pub fn bracket_filtered(
    e1: &LieElement,
    e2: &LieElement,
    keep: impl Fn(&BasisIndex) -> bool,
) -> Result<LieElement, LieError> {
    check_same(e1, e2)?;
    let mut out = LieElement::zero();
    for (a, ca) in &e1.terms {
        for (b, cb) in &e2.terms {
            if let Some((c, idx)) = structure_constant(a, b)? {
                if keep(&idx) {
                    out.add_term(idx, &(&(ca * cb) * &Rational::from_int(c)));
                }
            }
        }
    }
    Ok(out)
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (i, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{i}")?;
            } else {
                write!(f, "({c}){i}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieElement[{self}]")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    #[serde(flatten)]
    idx: BasisIndex,
    c: Rational,
}

impl Serialize for LieElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(i, c)| TermRepr {
                idx: *i,
                c: c.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LieElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<TermRepr>::deserialize(d)?;
        LieElement::from_terms(v.into_iter().map(|t| (t.idx, t.c)))
            .map_err(serde::de::Error::custom)
    }
}

/// Cartesian expansion of a basis element.
pub fn expand_cartesian(idx: &BasisIndex) -> VField3 {
    let g = idx.to_general();
    let (l, k) = (g.l, g.k);
    let r = Poly3::rho2();
    if g.family == Family::T {
        let pre = &Poly3::x().pow(l as u32) * &r.pow((k - l) as u32);
        return VField3::from_polys(Poly3::zero(), &pre * &Poly3::z(), -&(&pre * &Poly3::y()));
    }
    if l == -1 {
        let c = Rational::from_int(k + 2);
        return VField3::from_polys(
            r.pow((k + 1) as u32).scale(&c),
            Poly3::zero(),
            Poly3::zero(),
        );
    }
    let pre = &Poly3::x().pow(l as u32) * &r.pow((k - l) as u32);
    let half = Rational::frac(-(l + 1), 2);
    VField3::from_polys(
        &pre * &Poly3::x().scale(&Rational::from_int(k - l + 1)),
        &pre * &Poly3::y().scale(&half),
        &pre * &Poly3::z().scale(&half),
    )
}

pub fn expand_element(e: &LieElement) -> VField3 {
    let mut comps = [Poly3::zero(), Poly3::zero(), Poly3::zero()];
    for (i, c) in e.terms() {
        let v = expand_cartesian(i)
            .polys()
            .expect("basis fields are polynomial");
        for (acc, p) in comps.iter_mut().zip(v.iter()) {
            *acc = &*acc + &p.scale(c);
        }
    }
    let [x, y, z] = comps;
    VField3::from_polys(x, y, z)
}

/// Coefficient polynomials in `(x, ρ)` for the `∂x`, `∂ρ`, `∂θ` slots.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CylindricalForm {
    #[serde(with = "crate::polycalc::pairs")]
    pub dx: BTreeMap<(u32, u32), Rational>,
    #[serde(with = "crate::polycalc::pairs")]
    pub drho: BTreeMap<(u32, u32), Rational>,
    #[serde(with = "crate::polycalc::pairs")]
    pub dtheta: BTreeMap<(u32, u32), Rational>,
}

fn add_slot(slot: &mut BTreeMap<(u32, u32), Rational>, key: (u32, u32), c: Rational) {
    if c.is_zero() {
        return;
    }
    let v = slot.entry(key).or_insert_with(Rational::zero);
    *v += &c;
    if v.is_zero() {
        slot.remove(&key);
    }
}

pub fn expand_cylindrical(idx: &BasisIndex) -> CylindricalForm {
    let mut out = CylindricalForm::default();
    out.add(idx, &Rational::one());
    out
}

pub fn expand_cylindrical_element(e: &LieElement) -> CylindricalForm {
    let mut out = CylindricalForm::default();
    for (i, c) in e.terms() {
        out.add(i, c);
    }
    out
}

impl CylindricalForm {
    fn add(&mut self, idx: &BasisIndex, c: &Rational) {
        let g = idx.to_general();
        let (l, k) = (g.l, g.k);
        if g.family == Family::T {
            add_slot(&mut self.dtheta, (l as u32, 2 * (k - l) as u32), c.clone());
            return;
        }
        let rho = 2 * (k - l) as u32;
        add_slot(
            &mut self.dx,
            ((l + 1) as u32, rho),
            c * &Rational::from_int(k - l + 1),
        );
        if l >= 0 {
            add_slot(
                &mut self.drho,
                (l as u32, rho + 1),
                c * &Rational::frac(-(l + 1), 2),
            );
        }
    }

    /// Back to Cartesian form using `ρ² = y² + z²`, `ρ∂ρ = y∂y + z∂z`, `∂θ = z∂y - y∂z`.
    pub fn to_cartesian(&self) -> Option<VField3> {
        let even = |slot: &BTreeMap<(u32, u32), Rational>, shift: i64| -> Option<Poly3> {
            let mut p = Poly3::zero();
            for (&(a, b), c) in slot {
                let e = b as i64 + shift;
                if e < 0 || e % 2 != 0 {
                    return None;
                }
                p = &p
                    + &(&Poly3::monomial(c.clone(), [a, 0, 0])
                        * &Poly3::rho2().pow((e / 2) as u32));
            }
            Some(p)
        };
        let fx = even(&self.dx, 0)?;
        let radial = even(&self.drho, -1)?;
        let ang = even(&self.dtheta, 0)?;
        Some(VField3::from_polys(
            fx,
            &(&radial * &Poly3::y()) + &(&ang * &Poly3::z()),
            &(&radial * &Poly3::z()) - &(&ang * &Poly3::y()),
        ))
    }

    /// Display such as `2xρ²∂x − ½ρ³∂ρ`.
    pub fn pretty(&self) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (slot, d) in [(&self.dx, "∂x"), (&self.drho, "∂ρ"), (&self.dtheta, "∂θ")] {
            if slot.is_empty() {
                continue;
            }
            let mut terms: Vec<_> = slot.iter().collect();
            terms.sort_by_key(|(&(a, b), _)| std::cmp::Reverse((a + b, a)));
            if terms.len() == 1 {
                let (&(a, b), c) = terms[0];
                parts.push((
                    c.is_negative(),
                    format!("{}{}", monomial(&c.abs(), a, b), d),
                ));
            } else {
                let mut s = String::new();
                for (n, (&(a, b), c)) in terms.into_iter().enumerate() {
                    s.push_str(match (n, c.is_negative()) {
                        (0, true) => "−",
                        (0, false) => "",
                        (_, true) => " − ",
                        (_, false) => " + ",
                    });
                    s.push_str(&monomial(&c.abs(), a, b));
                }
                parts.push((false, format!("({s}){d}")));
            }
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (neg, s)) in parts.into_iter().enumerate() {
            out.push_str(match (n, neg) {
                (0, true) => "−",
                (0, false) => "",
                (_, true) => " − ",
                (_, false) => " + ",
            });
            out.push_str(&s);
        }
        out
    }
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).expect("digit") as usize])
        .collect()
}

fn monomial(c: &Rational, a: u32, b: u32) -> String {
    let mut s = String::new();
    if a == 0 && b == 0 && !c.is_integer() {
        return format!("({c})");
    }
    if *c == Rational::frac(1, 2) {
        s.push('½');
    } else if c.is_integer() {
        if !c.is_one() {
            s.push_str(&c.to_string());
        }
    } else {
        s.push_str(&format!("({c})"));
    }
    for (v, p) in [("x", a), ("ρ", b)] {
        match p {
            0 => {}
            1 => s.push_str(v),
            _ => {
                s.push_str(v);
                s.push_str(&superscript(p));
            }
        }
    }
    s
}

/// First integrals of a basis field.
#[derive(Clone, Debug, PartialEq)]
pub enum FirstIntegral {
    Single(Poly3),
    /// The rotational families preserve both `x` and `y² + z²`.
    Pair(Poly3, Poly3),
}

pub fn first_integral(idx: &BasisIndex) -> FirstIntegral {
    let g = idx.to_general();
    if g.family == Family::T {
        return FirstIntegral::Pair(Poly3::x(), Poly3::rho2());
    }
    FirstIntegral::Single(
        &Poly3::x().pow((g.l + 1) as u32) * &Poly3::rho2().pow((g.k - g.l + 1) as u32),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grading {
    /// Polynomial degree minus one; defined on every family.
    Degree,
    /// `δ(H^m_n) = n`, `δ(𝛩^m_n) = n + 1`.
    SecondLevel,
    /// `δ(H^m_n) = r(n-2m) + m`, `δ(𝛩^m_n) = r(n-2m) + r + m + 1`.
    RAdapted(i64),
}

impl Grading {
    pub fn name(&self) -> &'static str {
        match self {
            Grading::Degree => "degree",
            Grading::SecondLevel => "second_level",
            Grading::RAdapted(_) => "r_adapted",
        }
    }
}

pub fn grading(idx: &BasisIndex, scheme: Grading) -> Result<i64, LieError> {
    let (m, n) = (idx.l, idx.k);
    match (scheme, idx.family) {
        (Grading::Degree, _) => Ok(idx.poly_degree() - 1),
        (Grading::SecondLevel, Family::H) => Ok(n),
        (Grading::SecondLevel, Family::TZ2) => Ok(n + 1),
        (Grading::RAdapted(r), Family::H) => Ok(r * (n - 2 * m) + m),
        (Grading::RAdapted(r), Family::TZ2) => Ok(r * (n - 2 * m) + r + m + 1),
        (s, f) => Err(LieError::NonZ2Grading(s.name(), f)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn index_invariants() {
        assert!(BasisIndex::new(Family::F, -1, 0).is_ok());
        assert!(BasisIndex::new(Family::F, -2, 3).is_err());
        assert!(BasisIndex::new(Family::T, -1, 3).is_err());
        assert!(BasisIndex::new(Family::H, 0, 0).is_err());
        assert!(BasisIndex::new(Family::H, 1, 1).is_err());
        assert!(BasisIndex::new(Family::TZ2, 0, 0).is_ok());
        assert!(BasisIndex::new(Family::TZ2, 1, 1).is_err());
    }

    #[test]
    fn expansions() {
        let r = Poly3::rho2();
        let f01 = expand_cartesian(&BasisIndex::f(0, 1));
        let expect = VField3::from_polys(
            &r * &Poly3::x().scale(&q(2, 1)),
            &r * &Poly3::y().scale(&q(-1, 2)),
            &r * &Poly3::z().scale(&q(-1, 2)),
        );
        assert_eq!(f01, expect);
        assert_eq!(
            expand_cartesian(&BasisIndex::t(0, 0)),
            VField3::from_polys(Poly3::zero(), Poly3::z(), -&Poly3::y())
        );
        let h12 = expand_cartesian(&BasisIndex::h(1, 2));
        assert_eq!(h12, expand_cartesian(&BasisIndex::f(2, 2)));
        let x2 = Poly3::x().pow(2);
        assert_eq!(
            h12,
            VField3::from_polys(
                Poly3::x().pow(3),
                &x2 * &Poly3::y().scale(&q(-3, 2)),
                &x2 * &Poly3::z().scale(&q(-3, 2))
            )
        );
    }

    #[test]
    fn cylindrical_displays() {
        assert_eq!(
            expand_cylindrical(&BasisIndex::h(0, 1)).pretty(),
            "2xρ²∂x − ½ρ³∂ρ"
        );
        assert_eq!(expand_cylindrical(&BasisIndex::tz2(1, 2)).pretty(), "x²∂θ");
        assert_eq!(expand_cylindrical(&BasisIndex::tz2(0, 0)).pretty(), "∂θ");
        assert_eq!(expand_cylindrical(&BasisIndex::f(-1, 1)).pretty(), "3ρ⁴∂x");
    }

    #[test]
    fn cylindrical_roundtrip() {
        for fam in [Family::F, Family::T, Family::H, Family::TZ2] {
            for idx in BasisIndex::enumerate(fam, 4) {
                let back = expand_cylindrical(&idx).to_cartesian().unwrap();
                assert_eq!(back, expand_cartesian(&idx), "{idx}");
            }
        }
    }

    #[test]
    fn bracket_examples() {
        let h01 = LieElement::basis(BasisIndex::h(0, 1));
        let h12 = LieElement::basis(BasisIndex::h(1, 2));
        assert_eq!(
            bracket(&h01, &h12).unwrap(),
            LieElement::term(BasisIndex::h(1, 3), q(5, 1))
        );
        let t12 = LieElement::basis(BasisIndex::tz2(1, 2));
        assert_eq!(
            bracket(&h01, &t12).unwrap(),
            LieElement::term(BasisIndex::tz2(1, 3), q(4, 1))
        );
        let rot = LieElement::basis(BasisIndex::tz2(0, 0));
        for (m, n) in [(0, 1), (1, 2), (1, 3)] {
            let h = LieElement::basis(BasisIndex::h(m, n));
            assert!(bracket(&rot, &h).unwrap().is_zero());
        }
    }

    #[test]
    fn mixed_algebra_rejected() {
        let a = LieElement::basis(BasisIndex::h(0, 1));
        let b = LieElement::basis(BasisIndex::f(0, 1));
        assert_eq!(bracket(&a, &b), Err(LieError::MixedAlgebra));
        assert!(LieElement::from_terms([
            (BasisIndex::h(0, 1), q(1, 1)),
            (BasisIndex::t(0, 0), q(1, 1))
        ])
        .is_err());
    }

    #[test]
    fn gradings() {
        assert_eq!(grading(&BasisIndex::h(1, 3), Grading::SecondLevel), Ok(3));
        assert_eq!(grading(&BasisIndex::tz2(1, 3), Grading::SecondLevel), Ok(4));
        assert_eq!(grading(&BasisIndex::h(1, 2), Grading::RAdapted(1)), Ok(1));
        assert_eq!(grading(&BasisIndex::h(0, 1), Grading::RAdapted(1)), Ok(1));
        assert_eq!(grading(&BasisIndex::tz2(0, 1), Grading::RAdapted(2)), Ok(5));
        assert!(grading(&BasisIndex::f(0, 1), Grading::SecondLevel).is_err());
    }

    #[test]
    fn first_integral_examples() {
        let r = Poly3::rho2();
        assert_eq!(
            first_integral(&BasisIndex::f(0, 1)),
            FirstIntegral::Single(&Poly3::x() * &r.pow(2))
        );
        assert_eq!(
            first_integral(&BasisIndex::h(0, 1)),
            FirstIntegral::Single(&Poly3::x() * &r.pow(2))
        );
        assert_eq!(
            first_integral(&BasisIndex::t(1, 3)),
            FirstIntegral::Pair(Poly3::x(), r)
        );
    }

    #[test]
    fn json_shape() {
        let e = LieElement::term(BasisIndex::h(1, 2), q(3, 4));
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"[{"fam":"H","l":1,"k":2,"c":"3/4"}]"#);
        let back: LieElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
        assert!(
            serde_json::from_str::<LieElement>(r#"[{"fam":"H","l":2,"k":2,"c":"1"}]"#).is_err()
        );
    }
}
