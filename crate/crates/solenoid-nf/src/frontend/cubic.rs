use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Scalar;
use crate::exactnum::Rational;
use crate::liealg::{expand_cartesian, BasisIndex, LieElement};
use crate::linalg::{self, Matrix};
use crate::polycalc::{Poly3, VField3};

pub type Exp3 = [u32; 3];

/// The ten cubic exponents, `x³` first.
pub fn cubic_exponents() -> Vec<Exp3> {
    let mut out = Vec::with_capacity(10);
    for i in (0..=3).rev() {
        for j in (0..=3 - i).rev() {
            out.push([i, j, 3 - i - j]);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CubicError {
    #[error("{field}: exponent {exp:?} has degree {degree}, expected 3")]
    NotCubic {
        field: &'static str,
        exp: Exp3,
        degree: u32,
    },
    #[error("{field}: exponent {exp:?} listed twice")]
    Duplicate { field: &'static str, exp: Exp3 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Term<S> {
    e: Exp3,
    c: S,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CubicRepr<S> {
    #[serde(default = "Vec::new")]
    a: Vec<Term<S>>,
    #[serde(default = "Vec::new")]
    b: Vec<Term<S>>,
    #[serde(default = "Vec::new")]
    c: Vec<Term<S>>,
}

/// Cubic part of `ẋ = Σa xⁱyʲzᵏ, ẏ = z + Σb xⁱyʲzᵏ, ż = -y + Σc xⁱyʲzᵏ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "CubicRepr<S>",
    into = "CubicRepr<S>",
    bound(serialize = "S: Scalar", deserialize = "S: Scalar + Deserialize<'de>")
)]
pub struct CubicSystem<S: Scalar = Rational> {
    coeffs: [BTreeMap<Exp3, S>; 3],
}

impl<S: Scalar> TryFrom<CubicRepr<S>> for CubicSystem<S> {
    type Error = CubicError;

    fn try_from(r: CubicRepr<S>) -> Result<Self, CubicError> {
        let mut sys = CubicSystem::zero();
        for (comp, (field, terms)) in [("a", r.a), ("b", r.b), ("c", r.c)].into_iter().enumerate() {
            for t in terms {
                let degree = t.e.iter().sum();
                if degree != 3 {
                    return Err(CubicError::NotCubic {
                        field,
                        exp: t.e,
                        degree,
                    });
                }
                if sys.coeffs[comp].insert(t.e, t.c).is_some() {
                    return Err(CubicError::Duplicate { field, exp: t.e });
                }
            }
        }
        sys.prune();
        Ok(sys)
    }
}

impl<S: Scalar> From<CubicSystem<S>> for CubicRepr<S> {
    fn from(s: CubicSystem<S>) -> Self {
        let list = |m: &BTreeMap<Exp3, S>| -> Vec<Term<S>> {
            cubic_exponents()
                .into_iter()
                .filter_map(|e| m.get(&e).map(|c| Term { e, c: c.clone() }))
                .collect()
        };
        CubicRepr {
            a: list(&s.coeffs[0]),
            b: list(&s.coeffs[1]),
            c: list(&s.coeffs[2]),
        }
    }
}

impl<S: Scalar> CubicSystem<S> {
    pub fn zero() -> Self {
        CubicSystem {
            coeffs: Default::default(),
        }
    }

    /// Builds a system from `(component, exponent, coefficient)` triples, component 0, 1, 2 for a, b, c.
    pub fn from_terms<I: IntoIterator<Item = (usize, Exp3, S)>>(
        terms: I,
    ) -> Result<Self, CubicError> {
        let mut repr = CubicRepr {
            a: vec![],
            b: vec![],
            c: vec![],
        };
        for (comp, e, c) in terms {
            let list = match comp {
                0 => &mut repr.a,
                1 => &mut repr.b,
                _ => &mut repr.c,
            };
            list.push(Term { e, c });
        }
        Self::try_from(repr)
    }

    fn prune(&mut self) {
        for m in &mut self.coeffs {
            m.retain(|_, c| *c != S::zero());
        }
    }

    /// Coefficient of `x^i y^j z^k` in component `comp` (0 = a, 1 = b, 2 = c).
    pub fn coeff(&self, comp: usize, e: Exp3) -> S {
        self.coeffs[comp].get(&e).cloned().unwrap_or_else(S::zero)
    }

    pub fn set(&mut self, comp: usize, e: Exp3, c: S) {
        assert_eq!(e.iter().sum::<u32>(), 3, "cubic exponent expected");
        self.coeffs[comp].insert(e, c);
        self.prune();
    }

    pub fn a(&self, i: u32, j: u32, k: u32) -> S {
        self.coeff(0, [i, j, k])
    }

    pub fn b(&self, i: u32, j: u32, k: u32) -> S {
        self.coeff(1, [i, j, k])
    }

    pub fn c(&self, i: u32, j: u32, k: u32) -> S {
        self.coeff(2, [i, j, k])
    }
}

impl CubicSystem<Rational> {
    /// The cubic part as a polynomial vector field.
    pub fn to_vfield(&self) -> VField3 {
        let poly = |m: &BTreeMap<Exp3, Rational>| {
            Poly3::from_terms(m.iter().map(|(e, c)| (*e, c.clone())))
        };
        VField3::from_polys(
            poly(&self.coeffs[0]),
            poly(&self.coeffs[1]),
            poly(&self.coeffs[2]),
        )
    }

    pub fn from_vfield(v: &VField3) -> Option<Self> {
        let polys = v.polys()?;
        let mut sys = Self::zero();
        for (comp, p) in polys.iter().enumerate() {
            for (e, c) in p.terms() {
                if e.iter().sum::<u32>() != 3 {
                    return None;
                }
                sys.coeffs[comp].insert(*e, c.clone());
            }
        }
        Some(sys)
    }
}

/// Defects of the two linear relations that put the cubic classical normal
/// form inside the solenoidal conservative algebra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Membership<S> {
    pub holds: bool,
    /// `a102 + a120 + b012 + 3b030 + 3c003 + c021` and `c201 + b210 + 3a300`.
    pub residuals: [S; 2],
    /// The first relation in the commonly quoted form
    /// `a102 + 2c021 + 6c003 + 6b030 + 2b012 + 2a120`, kept for comparison.
    pub quoted_residual: S,
}

pub fn membership_relations<S: Scalar>(sys: &CubicSystem<S>) -> Membership<S> {
    let lin = |terms: &[(i64, S)]| {
        terms
            .iter()
            .fold(S::zero(), |acc, (k, v)| acc.add(&S::from_i64(*k).mul(v)))
    };
    let r1 = lin(&[
        (1, sys.a(1, 0, 2)),
        (1, sys.a(1, 2, 0)),
        (1, sys.b(0, 1, 2)),
        (3, sys.b(0, 3, 0)),
        (3, sys.c(0, 0, 3)),
        (1, sys.c(0, 2, 1)),
    ]);
    let r2 = lin(&[
        (1, sys.c(2, 0, 1)),
        (1, sys.b(2, 1, 0)),
        (3, sys.a(3, 0, 0)),
    ]);
    let quoted = lin(&[
        (1, sys.a(1, 0, 2)),
        (2, sys.c(0, 2, 1)),
        (6, sys.c(0, 0, 3)),
        (6, sys.b(0, 3, 0)),
        (2, sys.b(0, 1, 2)),
        (2, sys.a(1, 2, 0)),
    ]);
    Membership {
        holds: r1.is_negligible() && r2.is_negligible(),
        residuals: [r1, r2],
        quoted_residual: quoted,
    }
}

/// Coefficients of `H^0_1, 𝛩^0_1, H^1_2, 𝛩^1_2` in the cubic normal form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtractedCoefficients<S> {
    pub a0: S,
    pub b0: S,
    pub a1: S,
    pub b1: S,
    /// False when the relations fail; the values are then only the projection
    /// onto the four algebra directions.
    pub in_algebra: bool,
}

pub fn extract_coefficients<S: Scalar>(sys: &CubicSystem<S>) -> ExtractedCoefficients<S> {
    let lin = |terms: &[(i64, S)], d: i64| {
        terms
            .iter()
            .fold(S::zero(), |acc, (k, v)| acc.add(&S::from_i64(*k).mul(v)))
            .div(&S::from_i64(d))
    };
    ExtractedCoefficients {
        a0: lin(
            &[
                (1, sys.c(0, 2, 1)),
                (3, sys.c(0, 0, 3)),
                (3, sys.b(0, 3, 0)),
                (1, sys.b(0, 1, 2)),
            ],
            -4,
        ),
        b0: lin(
            &[
                (-3, sys.c(0, 3, 0)),
                (-1, sys.c(0, 1, 2)),
                (1, sys.b(0, 2, 1)),
                (3, sys.b(0, 0, 3)),
            ],
            8,
        ),
        a1: sys.a(3, 0, 0),
        b1: lin(&[(1, sys.b(2, 0, 1)), (-1, sys.c(2, 1, 0))], 2),
        in_algebra: membership_relations(sys).holds,
    }
}

/// Rotation-equivariant cubic part split into algebra and complementary directions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassicalNf {
    /// Component along `H^0_1, H^1_2, 𝛩^0_1, 𝛩^1_2`.
    pub algebra_part: LieElement,
    /// Coefficients of `xρ²∂x` and `x²(y∂y + z∂z)`.
    pub complement: [Rational; 2],
    pub resonant: VField3,
    /// Cubic generator `Y` with `v + [Y, z∂y - y∂z] = resonant`.
    pub generator: VField3,
}

fn monomial_field(comp: usize, e: Exp3) -> VField3 {
    let mut polys = [Poly3::zero(), Poly3::zero(), Poly3::zero()];
    polys[comp] = Poly3::monomial(Rational::one(), e);
    let [x, y, z] = polys;
    VField3::from_polys(x, y, z)
}

fn coords(v: &VField3, basis: &[(usize, Exp3)]) -> Vec<Rational> {
    let p = v.polys().expect("polynomial field");
    basis.iter().map(|(comp, e)| p[*comp].coeff(e)).collect()
}

fn field_from_coords(c: &[Rational], basis: &[(usize, Exp3)]) -> VField3 {
    let mut out = VField3::zero();
    for (ci, (comp, e)) in c.iter().zip(basis) {
        if !ci.is_zero() {
            out = &out + &monomial_field(*comp, *e).scale(ci);
        }
    }
    out
}

fn columns_to_matrix(cols: &[Vec<Rational>]) -> Matrix {
    linalg::transpose(&cols.to_vec())
}

/// Classical normal form at cubic order by the semisimple splitting
/// `cubic fields = ker ad ⊕ im ad` of the rotation `z∂y - y∂z`.
pub fn classical_nf_cubic(sys: &CubicSystem<Rational>) -> ClassicalNf {
    let basis: Vec<(usize, Exp3)> = (0..3)
        .flat_map(|c| cubic_exponents().into_iter().map(move |e| (c, e)))
        .collect();
    let rot = expand_cartesian(&BasisIndex::tz2(0, 0));
    let ad_cols: Vec<Vec<Rational>> = basis
        .iter()
        .map(|(c, e)| coords(&monomial_field(*c, *e).lie_bracket(&rot), &basis))
        .collect();
    let ad = columns_to_matrix(&ad_cols);
    let kernel = linalg::nullspace(&ad);

    let v = coords(&sys.to_vfield(), &basis);
    let mut cols = kernel.clone();
    cols.extend(ad_cols);
    let sol = linalg::solve(&columns_to_matrix(&cols), &v)
        .expect("kernel and image span the cubic fields");
    let (ka, y) = sol.split_at(kernel.len());
    let mut res = vec![Rational::zero(); basis.len()];
    for (k, a) in kernel.iter().zip(ka) {
        for (r, ki) in res.iter_mut().zip(k) {
            *r += &(a * ki);
        }
    }
    let resonant = field_from_coords(&res, &basis);
    let generator = field_from_coords(&y.iter().map(|c| -c).collect::<Vec<_>>(), &basis);

    let algebra = [
        BasisIndex::h(0, 1),
        BasisIndex::h(1, 2),
        BasisIndex::tz2(0, 1),
        BasisIndex::tz2(1, 2),
    ];
    let r = Poly3::rho2();
    let x = Poly3::x();
    let e1 = VField3::from_polys(&x * &r, Poly3::zero(), Poly3::zero());
    let x2 = x.pow(2);
    let e2 = VField3::from_polys(Poly3::zero(), &x2 * &Poly3::y(), &x2 * &Poly3::z());
    let mut dirs: Vec<Vec<Rational>> = algebra
        .iter()
        .map(|i| coords(&expand_cartesian(i), &basis))
        .collect();
    dirs.push(coords(&e1, &basis));
    dirs.push(coords(&e2, &basis));
    let d = linalg::solve(&columns_to_matrix(&dirs), &res)
        .expect("resonant cubic fields are spanned by six directions");
    let algebra_part =
        LieElement::from_terms(algebra.iter().copied().zip(d.iter().cloned())).expect("Z2 indices");
    ClassicalNf {
        algebra_part,
        complement: [d[4].clone(), d[5].clone()],
        resonant,
        generator,
    }
}
