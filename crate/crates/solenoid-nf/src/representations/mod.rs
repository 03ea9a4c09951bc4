//! Hamiltonian, Euler, vector-potential and Clebsch representations.
//!
//! Every constructor recombines its potentials and compares the result with
//! the Cartesian expansion before returning, so a [`PotentialSet`] in hand is
//! always a verified identity. Angular potentials such as `½ arctan(z/y)` are
//! stored only through their rational gradients.

mod bivar;

pub use bivar::{phi, poisson_bracket, BivarPoly};

use serde::{Deserialize, Serialize};

use crate::exactnum::Rational;
use crate::liealg::{expand_cartesian, expand_element, BasisIndex, Family, LieElement};
use crate::normalform::NFReport;
use crate::polycalc::{Poly3, RatFunc3, VField3};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("x^{0} r^{1} is not in the Poisson algebra")]
    NotInPoissonAlgebra(u32, u32),
    #[error("{0} representation does not reproduce the field")]
    VerificationFailed(PotentialKind),
    #[error("zero element has no curl certificate")]
    ZeroElement,
    #[error("normal form output contains {0}, which is outside the normal-form style")]
    NotInStyle(BasisIndex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialKind {
    Hamiltonian,
    Euler,
    VectorPotential,
    Clebsch,
}

impl std::fmt::Display for PotentialKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PotentialKind::Hamiltonian => "hamiltonian",
            PotentialKind::Euler => "euler",
            PotentialKind::VectorPotential => "vector_potential",
            PotentialKind::Clebsch => "clebsch",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VectorPotentialVariant {
    ClosedForm,
    Constructive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Part {
    Scalar(RatFunc3),
    Vector(VField3),
    /// Gradient of a non-rational potential.
    AngularGradient(VField3),
    Bivar(BivarPoly),
}

impl Part {
    fn gradient(&self) -> Option<VField3> {
        match self {
            Part::Scalar(f) => Some(VField3::gradient(f)),
            Part::AngularGradient(g) => Some(g.clone()),
            _ => None,
        }
    }

    fn scalar(&self) -> Option<&RatFunc3> {
        match self {
            Part::Scalar(f) => Some(f),
            _ => None,
        }
    }
}

impl std::fmt::Display for Part {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Part::Scalar(g) => write!(f, "{g}"),
            Part::Vector(v) => write!(f, "{v}"),
            Part::AngularGradient(g) => write!(f, "potential with gradient {g}"),
            Part::Bivar(b) => write!(f, "{b}"),
        }
    }
}

/// One weighted summand of a representation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PotentialTerm {
    pub coeff: Rational,
    pub parts: Vec<(String, Part)>,
}

impl PotentialTerm {
    fn new(parts: Vec<(&str, Part)>) -> Self {
        PotentialTerm {
            coeff: Rational::one(),
            parts: parts.into_iter().map(|(n, p)| (n.to_string(), p)).collect(),
        }
    }

    pub fn part(&self, name: &str) -> Option<&Part> {
        self.parts.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    fn nth(&self, i: usize) -> &Part {
        &self.parts[i].1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PotentialSet {
    pub kind: PotentialKind,
    pub terms: Vec<PotentialTerm>,
    pub conventions: Vec<String>,
}

impl PotentialSet {
    fn build(
        kind: PotentialKind,
        terms: Vec<PotentialTerm>,
        conventions: &[&str],
        target: &VField3,
    ) -> Result<Self, RepError> {
        let set = PotentialSet {
            kind,
            terms,
            conventions: conventions.iter().map(|s| s.to_string()).collect(),
        };
        if set.recombine().as_ref() != Some(target) {
            return Err(RepError::VerificationFailed(kind));
        }
        Ok(set)
    }

    /// Rebuilds the vector field from the stored potentials.
    pub fn recombine(&self) -> Option<VField3> {
        let mut acc = VField3::zero();
        for t in &self.terms {
            let v = match self.kind {
                PotentialKind::Euler => t.nth(0).gradient()?.cross(&t.nth(1).gradient()?),
                PotentialKind::VectorPotential => match t.nth(0) {
                    Part::Vector(a) => a.curl(),
                    _ => return None,
                },
                PotentialKind::Clebsch => {
                    let f1 = t.nth(0).scalar()?;
                    let g2 = t.nth(1).gradient()?;
                    &g2.mul_fn(f1) + &t.nth(2).gradient()?
                }
                PotentialKind::Hamiltonian => match (t.nth(0), t.nth(1)) {
                    (Part::Bivar(h), Part::Bivar(g)) => hamiltonian_field(h, g)?,
                    _ => return None,
                },
            };
            acc = &acc + &v.scale(&t.coeff);
        }
        Some(acc)
    }

    /// Each Euler potential is annihilated by the field it represents.
    pub fn euler_potentials_are_invariant(&self) -> bool {
        let Some(field) = self.recombine() else {
            return false;
        };
        self.kind == PotentialKind::Euler
            && self.terms.len() == 1
            && self.terms[0]
                .parts
                .iter()
                .all(|(_, p)| p.gradient().is_some_and(|g| field.dot(&g).is_zero()))
    }
}

fn rat(p: Poly3) -> RatFunc3 {
    RatFunc3::from_poly(p)
}

fn xpow(e: i64) -> Poly3 {
    Poly3::x().pow(e as u32)
}

fn rpow(e: i64) -> Poly3 {
    Poly3::rho2().pow(e as u32)
}

/// `(0, -z, y) / (2(y² + z²))`, the gradient of `½ arctan(z/y)`.
pub fn half_angle_gradient() -> VField3 {
    let den = Poly3::rho2().scale(&Rational::from_int(2));
    VField3::new(
        RatFunc3::zero(),
        RatFunc3::new(-&Poly3::z(), den.clone()).expect("nonzero"),
        RatFunc3::new(Poly3::y(), den).expect("nonzero"),
    )
}

/// Field of the Hamiltonian triple `ẋ = ∂_r H`, `ṙ = -∂_x H`, `θ̇ = G`.
fn hamiltonian_field(h: &BivarPoly, g: &BivarPoly) -> Option<VField3> {
    // ρ̇ = ṙ / (2ρ), so the radial part is (y, z) · (-∂_x H) / (2r)
    let radial = h
        .d_dx()
        .div_r()?
        .scale(&Rational::frac(-1, 2))
        .to_cartesian();
    let ang = g.to_cartesian();
    Some(VField3::from_polys(
        h.d_dr().to_cartesian(),
        &(&radial * &Poly3::y()) + &(&ang * &Poly3::z()),
        &(&radial * &Poly3::z()) - &(&ang * &Poly3::y()),
    ))
}

/// `H = Σ a f^l_k` over the F/H terms and `G = Σ b x^m r^{n-m}` over the rotational terms.
pub fn hamiltonian_form(element: &LieElement) -> Result<PotentialSet, RepError> {
    let mut h = BivarPoly::zero();
    let mut g = BivarPoly::zero();
    for (i, c) in element.terms() {
        let gi = i.to_general();
        match gi.family {
            Family::F => h = &h + &BivarPoly::f_basis(&gi).scale(c),
            _ => g.add_term(gi.l as u32, (gi.k - gi.l) as u32, c),
        }
    }
    let term = PotentialTerm::new(vec![("H", Part::Bivar(h)), ("G", Part::Bivar(g))]);
    PotentialSet::build(
        PotentialKind::Hamiltonian,
        vec![term],
        &[],
        &expand_element(element),
    )
}

fn euler_term(idx: &BasisIndex) -> PotentialTerm {
    let g = idx.to_general();
    let (l, k) = (g.l, g.k);
    if g.family == Family::F {
        let alpha = &xpow(l + 1) * &rpow(k - l + 1);
        return PotentialTerm::new(vec![
            ("alpha", Part::Scalar(rat(alpha))),
            ("beta", Part::AngularGradient(half_angle_gradient())),
        ]);
    }
    let beta = rpow(k - l + 1).scale(&Rational::frac(-1, 2 * (l + 1) * (k - l + 1)));
    PotentialTerm::new(vec![
        ("alpha", Part::Scalar(rat(xpow(l + 1)))),
        ("beta", Part::Scalar(rat(beta))),
    ])
}

const EULER_CHART: &str =
    "angular potential ½arctan(z/y) stored as its gradient; valid where y ≠ 0";

/// `F^l_k = ∇(x^{l+1} ρ^{2(k-l+1)}) × ∇(½ arctan(z/y))`,
/// `Θ^l_k = ∇(x^{l+1}) × ∇(-ρ^{2(k-l+1)} / (2(l+1)(k-l+1)))`.
pub fn euler_form(idx: &BasisIndex) -> Result<PotentialSet, RepError> {
    let conv: &[&str] = if idx.family.is_angular() {
        &[]
    } else {
        &[EULER_CHART]
    };
    PotentialSet::build(
        PotentialKind::Euler,
        vec![euler_term(idx)],
        conv,
        &expand_cartesian(idx),
    )
}

fn vector_potential_field(idx: &BasisIndex, variant: VectorPotentialVariant) -> VField3 {
    let g = idx.to_general();
    let (l, k) = (g.l, g.k);
    let d = k - l;
    match (g.family, variant) {
        (Family::F, VectorPotentialVariant::ClosedForm) => {
            let pre = (&xpow(l + 1) * &rpow(d)).scale(&Rational::frac(1, 2));
            VField3::from_polys(Poly3::zero(), -&(&pre * &Poly3::z()), &pre * &Poly3::y())
        }
        (_, VectorPotentialVariant::ClosedForm) => {
            let ax = (&xpow(l) * &rpow(d + 1)).scale(&Rational::frac(1, 2 * (d + 1)));
            VField3::from_polys(ax, Poly3::zero(), Poly3::zero())
        }
        (Family::F, VectorPotentialVariant::Constructive) => {
            // S = Σ_j C(k-l, j) y^{2j} z^{2(k-l-j)+1} / (2(k-l-j)+1)
            let mut s = Poly3::zero();
            let mut binom = Rational::one();
            for j in 0..=d {
                let e = 2 * (d - j) + 1;
                s = &s
                    + &Poly3::monomial(
                        &binom / &Rational::from_int(e),
                        [0, 2 * j as u32, e as u32],
                    );
                binom = &binom * &Rational::frac(d - j, j + 1);
            }
            let ax = if l >= 0 {
                (&(&xpow(l) * &Poly3::y()) * &s).scale(&Rational::frac(-(l + 1), 2))
            } else {
                Poly3::zero()
            };
            let ay = (&xpow(l + 1) * &s).scale(&Rational::from_int(-(d + 1)));
            VField3::from_polys(ax, ay, Poly3::zero())
        }
        (_, VectorPotentialVariant::Constructive) => {
            let y = Poly3::y();
            let bx = (&xpow(l) * &(&rpow(d + 1) - &y.pow(2 * (d + 1) as u32)))
                .scale(&Rational::frac(1, 2 * (d + 1)));
            let by = (&xpow(l + 1) * &y.pow((2 * d + 1) as u32)).scale(&Rational::frac(-1, l + 1));
            VField3::from_polys(bx, by, Poly3::zero())
        }
    }
}

/// Vector potential with `curl A = expand(idx)`.
pub fn vector_potential(
    idx: &BasisIndex,
    variant: VectorPotentialVariant,
) -> Result<PotentialSet, RepError> {
    let a = vector_potential_field(idx, variant);
    let name = match (idx.family.is_angular(), variant) {
        (_, VectorPotentialVariant::ClosedForm) => "A",
        (false, VectorPotentialVariant::Constructive) => "A",
        (true, VectorPotentialVariant::Constructive) => "B",
    };
    let conv: &[&str] = match variant {
        VectorPotentialVariant::Constructive => &["integration functions p1 = p2 = 0"],
        VectorPotentialVariant::ClosedForm => &[],
    };
    PotentialSet::build(
        PotentialKind::VectorPotential,
        vec![PotentialTerm::new(vec![(name, Part::Vector(a))])],
        conv,
        &expand_cartesian(idx),
    )
}

fn clebsch_term(idx: &BasisIndex) -> PotentialTerm {
    let g = idx.to_general();
    let (l, k) = (g.l, g.k);
    let d = k - l;
    let q = Rational::frac;
    let (f1, f2, f3) = if g.family.is_angular() {
        let pre = &xpow(l) * &rpow(d);
        (
            RatFunc3::new(Poly3::z(), Poly3::y()).expect("nonzero"),
            rat(&pre * &Poly3::y().pow(2)),
            rat(-&(&pre * &(&Poly3::y() * &Poly3::z()))),
        )
    } else if l == 0 {
        let f2 = (&Poly3::x() * &rpow(k)).scale(&Rational::from_int(k + 1));
        let f3 = &(&xpow(2) * &rpow(k)).scale(&Rational::from_int(k + 1))
            - &rpow(k + 1).scale(&q(1, 4 * (k + 1)));
        (rat(-&Poly3::x()), rat(f2), rat(f3))
    } else {
        let f1 = if l > 0 {
            rat(xpow(l))
        } else {
            RatFunc3::new(Poly3::one(), Poly3::x()).expect("nonzero")
        };
        let f2 = &rpow(d + 1).scale(&q(-(l + 1), 4 * (d + 1)))
            - &(&xpow(2) * &rpow(d)).scale(&q(-(d + 1), -l));
        let f3 = (&rpow(d) * &Poly3::x().pow((l + 2) as u32)).scale(&q(d + 1, l));
        (f1, rat(f2), rat(f3))
    };
    let names = if g.family.is_angular() {
        ["g1", "g2", "g3"]
    } else {
        ["f1", "f2", "f3"]
    };
    PotentialTerm::new(vec![
        (names[0], Part::Scalar(f1)),
        (names[1], Part::Scalar(f2)),
        (names[2], Part::Scalar(f3)),
    ])
}

const CLEBSCH_DENOMINATORS: &str =
    "identity compared with denominators cleared (y ≠ 0, x ≠ 0 where 1/y, 1/x occur)";

/// Clebsch potentials with `f1 ∇f2 + ∇f3 = expand(idx)`.
pub fn clebsch(idx: &BasisIndex) -> Result<PotentialSet, RepError> {
    PotentialSet::build(
        PotentialKind::Clebsch,
        vec![clebsch_term(idx)],
        &[CLEBSCH_DENOMINATORS],
        &expand_cartesian(idx),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialVerdict {
    NonPotential,
    /// Zero curl because the element has a nonzero `F^0_0` part, whose linear
    /// part `x∂x - ½(y∂y + z∂z)` is not a Hopf-zero singularity.
    ExcludedNotHopfZero,
    /// Zero curl on a Hopf-zero element.
    Potential,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NonPotentialCertificate {
    pub curl: VField3,
    pub verdict: PotentialVerdict,
}

pub fn nonpotential_certificate(element: &LieElement) -> Result<NonPotentialCertificate, RepError> {
    if element.is_zero() {
        return Err(RepError::ZeroElement);
    }
    let curl = expand_element(element).curl();
    let verdict = if !curl.is_zero() {
        PotentialVerdict::NonPotential
    } else if !element.to_general().coeff(&BasisIndex::f(0, 0)).is_zero() {
        PotentialVerdict::ExcludedNotHopfZero
    } else {
        PotentialVerdict::Potential
    };
    Ok(NonPotentialCertificate { curl, verdict })
}

/// Which representation to build for an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    Hamiltonian,
    Euler,
    VectorPotential(VectorPotentialVariant),
    Clebsch,
}

/// Term-by-term representation of a whole element, verified against its expansion.
pub fn represent(element: &LieElement, form: Form) -> Result<PotentialSet, RepError> {
    if let Form::Hamiltonian = form {
        return hamiltonian_form(element);
    }
    let target = expand_element(element);
    let weighted = |f: &dyn Fn(&BasisIndex) -> PotentialTerm| -> Vec<PotentialTerm> {
        element
            .terms()
            .map(|(i, c)| {
                let mut t = f(i);
                t.coeff = c.clone();
                t
            })
            .collect()
    };
    let angular_only = element.terms().all(|(i, _)| i.family.is_angular());
    match form {
        Form::Euler => {
            let conv: &[&str] = if angular_only { &[] } else { &[EULER_CHART] };
            PotentialSet::build(PotentialKind::Euler, weighted(&euler_term), conv, &target)
        }
        Form::VectorPotential(v) => {
            let name = if v == VectorPotentialVariant::Constructive {
                "A/B"
            } else {
                "A"
            };
            let conv: &[&str] = match v {
                VectorPotentialVariant::Constructive => &["integration functions p1 = p2 = 0"],
                VectorPotentialVariant::ClosedForm => &[],
            };
            let term = |i: &BasisIndex| {
                PotentialTerm::new(vec![(name, Part::Vector(vector_potential_field(i, v)))])
            };
            PotentialSet::build(
                PotentialKind::VectorPotential,
                weighted(&term),
                conv,
                &target,
            )
        }
        Form::Clebsch => PotentialSet::build(
            PotentialKind::Clebsch,
            weighted(&clebsch_term),
            &[CLEBSCH_DENOMINATORS],
            &target,
        ),
        Form::Hamiltonian => unreachable!(),
    }
}

/// The four representations of a normal form, assembled term by term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NfRepresentations {
    pub hamiltonian: PotentialSet,
    pub euler: PotentialSet,
    pub vector_potential: PotentialSet,
    pub clebsch: PotentialSet,
}

pub fn nf_representations(report: &NFReport) -> Result<NfRepresentations, RepError> {
    if let Some((i, _)) = report
        .output
        .terms()
        .find(|(i, _)| !crate::normalform::is_style(i))
    {
        return Err(RepError::NotInStyle(*i));
    }
    let w = &report.output;
    Ok(NfRepresentations {
        hamiltonian: represent(w, Form::Hamiltonian)?,
        euler: represent(w, Form::Euler)?,
        vector_potential: represent(w, Form::VectorPotential(VectorPotentialVariant::ClosedForm))?,
        clebsch: represent(w, Form::Clebsch)?,
    })
}
