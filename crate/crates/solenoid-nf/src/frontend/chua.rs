use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::cubic::{
    extract_coefficients, membership_relations, CubicSystem, Exp3, ExtractedCoefficients,
    Membership,
};
use super::Scalar;
use crate::exactnum::Rational;
use crate::liealg::{BasisIndex, LieElement};
use crate::normalform::{second_level_nf, NFInput, NFReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    Float,
}

/// Parameters of the modified Chua oscillator
/// `ẋ = -γx - βy, ẏ = z - y + x + μ₁z²y, ż = α(-cz + y - az³) + μ₂z²y`.
///
/// `c` and `β` are fixed by the Hopf-zero conditions. `μ₁, μ₂` default to the
/// values that are claimed to make the cubic normal form solenoidal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChuaParams {
    pub alpha: Rational,
    pub gamma: Rational,
    pub a: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu1: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu2: Option<Rational>,
}

impl ChuaParams {
    pub fn new(alpha: Rational, gamma: Rational, a: Rational) -> Self {
        ChuaParams {
            alpha,
            gamma,
            a,
            mu1: None,
            mu2: None,
        }
    }

    pub fn with_mu(mut self, mu1: Rational, mu2: Rational) -> Self {
        self.mu1 = Some(mu1);
        self.mu2 = Some(mu2);
        self
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ChuaError {
    #[error("alpha must be nonzero")]
    AlphaZero,
    #[error("gamma must be nonzero")]
    GammaZero,
    #[error("a must be nonzero")]
    AZero,
    #[error("gamma = -1 leaves c and beta undefined")]
    GammaMinusOne,
    #[error("alpha = 2(gamma+1)^2 is excluded")]
    AlphaTwiceSquare,
    #[error("2 alpha = (gamma+1)^2 is excluded")]
    TwoAlphaSquare,
    #[error("alpha = -gamma-1 is excluded")]
    AlphaMinusGammaMinusOne,
    #[error("omega0^2 = {0} is not positive; the origin is not a Hopf-zero point")]
    OmegaSqNotPositive(Rational),
    #[error("omega0^2 = {0} is not the square of a rational; rerun with --mode float")]
    IrrationalOmega(Rational),
    #[error("linear part could not be brought to z d/dy - y d/dz")]
    NotJordan,
}

/// A derived constant together with the formula that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Derived<S> {
    pub value: S,
    pub provenance: String,
}

fn derived<S>(value: S, provenance: &str) -> Derived<S> {
    Derived {
        value,
        provenance: provenance.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChuaConstants<S> {
    pub c: Derived<Rational>,
    pub beta: Derived<Rational>,
    pub omega0_sq: Derived<Rational>,
    pub omega0: Derived<S>,
    pub mu1: Derived<S>,
    pub mu2: Derived<S>,
}

/// The closed-form `C^(∞)` coefficients quoted for this oscillator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormDisplay<S> {
    pub h01: S,
    pub h12: S,
    pub t01: S,
    pub t12: S,
}

/// Comparison of scale-invariant ratios `𝛩^0_1 / H^0_1` and `𝛩^1_2 / H^1_2`.
///
/// Rescaling `x` and `ρ` multiplies each pair by the same factor, so these
/// ratios do not depend on the normalisation of the linear transformation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormComparison<S> {
    pub display: ClosedFormDisplay<S>,
    pub display_ratios: [Option<S>; 2],
    pub pipeline_ratios: [Option<S>; 2],
    pub ratios_match: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChuaReport<S: Scalar> {
    pub params: ChuaParams,
    pub mode: Mode,
    pub constants: ChuaConstants<S>,
    /// Columns of the linear change of variables, before the time rescale by `ω₀`.
    pub transformation: [[S; 3]; 3],
    pub cubic: CubicSystem<S>,
    pub membership: Membership<S>,
    pub coefficients: ExtractedCoefficients<S>,
    /// Second-level normal form of the cubic truncation, when the relations
    /// hold and the arithmetic is exact.
    pub normal_form: Option<NFReport>,
    pub closed_form: ClosedFormComparison<S>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ChuaOutput {
    Exact(Box<ChuaReport<Rational>>),
    Float(Box<ChuaReport<f64>>),
}

type Vec3<S> = [S; 3];
type Mat3<S> = [[S; 3]; 3];

fn cross<S: Scalar>(u: &Vec3<S>, v: &Vec3<S>) -> Vec3<S> {
    [
        u[1].mul(&v[2]).sub(&u[2].mul(&v[1])),
        u[2].mul(&v[0]).sub(&u[0].mul(&v[2])),
        u[0].mul(&v[1]).sub(&u[1].mul(&v[0])),
    ]
}

fn dot<S: Scalar>(u: &Vec3<S>, v: &Vec3<S>) -> S {
    u[0].mul(&v[0]).add(&u[1].mul(&v[1])).add(&u[2].mul(&v[2]))
}

fn mat_vec<S: Scalar>(m: &Mat3<S>, v: &Vec3<S>) -> Vec3<S> {
    [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)]
}

fn mat_mul<S: Scalar>(a: &Mat3<S>, b: &Mat3<S>) -> Mat3<S> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(S::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
    })
}

fn transpose<S: Scalar>(m: &Mat3<S>) -> Mat3<S> {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

fn inverse<S: Scalar>(m: &Mat3<S>) -> Option<Mat3<S>> {
    let c = transpose(m);
    // rows of the inverse are cross products of columns
    let rows = [
        cross(&c[1], &c[2]),
        cross(&c[2], &c[0]),
        cross(&c[0], &c[1]),
    ];
    let det = dot(&c[0], &rows[0]);
    if det.is_negligible() {
        return None;
    }
    Some(std::array::from_fn(|i| {
        std::array::from_fn(|j| rows[i][j].div(&det))
    }))
}

fn nonzero_cross<S: Scalar>(vs: &[Vec3<S>; 3]) -> Option<Vec3<S>> {
    [(0, 2), (0, 1), (1, 2)]
        .into_iter()
        .map(|(i, j)| cross(&vs[i], &vs[j]))
        .find(|v| v.iter().any(|c| !c.is_negligible()))
}

type Cubic<S> = BTreeMap<Exp3, S>;

/// Expands the product of three linear forms in `(x, y, z)`.
fn cubic_product<S: Scalar>(c: &S, l: [&Vec3<S>; 3]) -> Cubic<S> {
    let mut out = Cubic::new();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut e = [0u32; 3];
                e[i] += 1;
                e[j] += 1;
                e[k] += 1;
                let v = c.mul(&l[0][i]).mul(&l[1][j]).mul(&l[2][k]);
                let slot = out.entry(e).or_insert_with(S::zero);
                *slot = slot.add(&v);
            }
        }
    }
    out
}

fn add_scaled<S: Scalar>(acc: &mut Cubic<S>, c: &S, p: &Cubic<S>) {
    for (e, v) in p {
        let slot = acc.entry(*e).or_insert_with(S::zero);
        *slot = slot.add(&c.mul(v));
    }
}

struct Validated {
    c: Rational,
    beta: Rational,
    omega0_sq: Rational,
}

fn validate(p: &ChuaParams) -> Result<Validated, ChuaError> {
    let (al, g) = (&p.alpha, &p.gamma);
    let g1 = g + &Rational::one();
    let g1sq = &g1 * &g1;
    let two = Rational::from_int(2);
    if al.is_zero() {
        return Err(ChuaError::AlphaZero);
    }
    if g.is_zero() {
        return Err(ChuaError::GammaZero);
    }
    if p.a.is_zero() {
        return Err(ChuaError::AZero);
    }
    if g1.is_zero() {
        return Err(ChuaError::GammaMinusOne);
    }
    if *al == &two * &g1sq {
        return Err(ChuaError::AlphaTwiceSquare);
    }
    if &two * al == g1sq {
        return Err(ChuaError::TwoAlphaSquare);
    }
    if (al + &g1).is_zero() {
        return Err(ChuaError::AlphaMinusGammaMinusOne);
    }
    let omega0_sq = -(&(&g1sq * &g1) + &(al * &(&(&two * g) + &Rational::one()))) / g1.clone();
    if !omega0_sq.is_positive() {
        return Err(ChuaError::OmegaSqNotPositive(omega0_sq));
    }
    Ok(Validated {
        c: -(g1.clone() / al.clone()),
        beta: -(g * &(al + &g1)) / g1,
        omega0_sq,
    })
}

fn run<S: Scalar>(
    p: &ChuaParams,
    mode: Mode,
    v: Validated,
    omega0: S,
) -> Result<ChuaReport<S>, ChuaError> {
    let q = S::from_q;
    let (al, g, a) = (q(&p.alpha), q(&p.gamma), q(&p.a));
    let g1 = g.add(&S::one());
    let g1sq = g1.mul(&g1);
    let two = S::from_i64(2);
    let three = S::from_i64(3);
    let den = two.mul(&al).sub(&g1sq).mul(&al.sub(&two.mul(&g1sq)));
    let pre = three.mul(&omega0).mul(&al).mul(&al).mul(&a).div(&den);
    let mu1_formula = pre.mul(&two.mul(&al).add(&g1sq));
    let mu2_formula = pre.mul(&g1).mul(&three.mul(&al).sub(&g1sq));
    let (mu1, mu1_src) = match &p.mu1 {
        Some(m) => (q(m), "user supplied"),
        None => (
            mu1_formula,
            "3 ω0 α² a (2α + (γ+1)²) / ((2α − (γ+1)²)(α − 2(γ+1)²))",
        ),
    };
    let (mu2, mu2_src) = match &p.mu2 {
        Some(m) => (q(m), "user supplied"),
        None => (
            mu2_formula,
            "3 ω0 α² a (γ+1)(3α − (γ+1)²) / ((2α − (γ+1)²)(α − 2(γ+1)²))",
        ),
    };

    let (c, beta) = (q(&v.c), q(&v.beta));
    let lin: Mat3<S> = [
        [g.neg(), beta.neg(), S::zero()],
        [S::one(), S::one().neg(), S::one()],
        [S::zero(), al.clone(), al.mul(&c).neg()],
    ];
    // kernel direction, normalised to unit z component
    let mut v0 = nonzero_cross(&lin).ok_or(ChuaError::NotJordan)?;
    if !v0[2].is_negligible() {
        let z = v0[2].clone();
        v0 = std::array::from_fn(|i| v0[i].div(&z));
    }
    let left = nonzero_cross(&transpose(&lin)).ok_or(ChuaError::NotJordan)?;
    let lv = dot(&left, &v0);
    if lv.is_negligible() {
        return Err(ChuaError::NotJordan);
    }
    // projection of e_z onto the invariant plane along v0
    let t3: Vec3<S> = std::array::from_fn(|i| {
        let ez = if i == 2 { S::one() } else { S::zero() };
        ez.sub(&v0[i].mul(&left[2]).div(&lv))
    });
    let t2: Vec3<S> = mat_vec(&lin, &t3).map(|x| x.div(&omega0));
    let cols = [v0, t2, t3];
    let t = transpose(&cols);
    let tinv = inverse(&t).ok_or(ChuaError::NotJordan)?;
    let jordan = mat_mul(&tinv, &mat_mul(&lin, &t));
    let expect: Mat3<S> = [
        [S::zero(), S::zero(), S::zero()],
        [S::zero(), S::zero(), omega0.clone()],
        [S::zero(), omega0.neg(), S::zero()],
    ];
    if !(0..3).all(|i| (0..3).all(|j| jordan[i][j].near(&expect[i][j]))) {
        return Err(ChuaError::NotJordan);
    }

    // cubic terms μ₁z²y ∂y + (μ₂z²y - αaz³) ∂z in the new coordinates, time scaled by ω₀
    let (ly, lz) = (&t[1], &t[2]);
    let mut old: [Cubic<S>; 3] = Default::default();
    old[1] = cubic_product(&mu1, [lz, lz, ly]);
    old[2] = cubic_product(&mu2, [lz, lz, ly]);
    add_scaled(
        &mut old[2],
        &al.mul(&a).neg(),
        &cubic_product(&S::one(), [lz, lz, lz]),
    );
    let mut terms = Vec::new();
    for (i, row) in tinv.iter().enumerate() {
        let mut acc = Cubic::new();
        for (k, old_k) in old.iter().enumerate() {
            add_scaled(&mut acc, &row[k].div(&omega0), old_k);
        }
        terms.extend(
            acc.into_iter()
                .filter(|(_, c)| !c.is_negligible())
                .map(|(e, c)| (i, e, c)),
        );
    }
    let cubic = CubicSystem::from_terms(terms).expect("cubic exponents");
    let membership = membership_relations(&cubic);
    let coefficients = extract_coefficients(&cubic);

    let apg1 = al.add(&g1);
    let k1 = al
        .mul(&al)
        .mul(&al)
        .mul(&a)
        .mul(&al.add(&g1sq))
        .div(&omega0.mul(&apg1).mul(&two.mul(&al).sub(&g1sq)));
    let k2_num = S::from_i64(4)
        .mul(&g)
        .add(&S::from_i64(5))
        .mul(&g1sq)
        .add(&al.mul(&three.mul(&g).add(&S::from_i64(5))));
    let k2 = three
        .mul(&al)
        .mul(&al)
        .mul(&al)
        .mul(&a)
        .mul(&k2_num)
        .div(&two.mul(&apg1).mul(&den));
    let display = ClosedFormDisplay {
        h01: k1.mul(&three.mul(&g1)).div(&two.mul(&g)),
        h12: k1.mul(&two.mul(&al).mul(&g)).div(&g1.mul(&apg1)),
        t01: k2.mul(&g1sq).div(&S::from_i64(4).mul(&g)),
        t12: k2.mul(&al).div(&apg1),
    };
    let ratio = |n: &S, d: &S| (!d.is_negligible()).then(|| n.div(d));
    let display_ratios = [
        ratio(&display.t01, &display.h01),
        ratio(&display.t12, &display.h12),
    ];
    let pipeline_ratios = [
        ratio(&coefficients.b0, &coefficients.a0),
        ratio(&coefficients.b1, &coefficients.a1),
    ];
    let ratios_match = display_ratios
        .iter()
        .zip(&pipeline_ratios)
        .all(|(d, p)| match (d, p) {
            (Some(d), Some(p)) => d.near(p),
            _ => false,
        });

    Ok(ChuaReport {
        params: p.clone(),
        mode,
        constants: ChuaConstants {
            c: derived(v.c, "c = −(γ+1)/α"),
            beta: derived(v.beta, "β = −γ(α+γ+1)/(γ+1)"),
            omega0_sq: derived(v.omega0_sq, "ω0² = −((γ+1)³ + α(2γ+1))/(γ+1)"),
            omega0: derived(omega0, "positive square root of ω0²"),
            mu1: derived(mu1, mu1_src),
            mu2: derived(mu2, mu2_src),
        },
        transformation: cols,
        cubic,
        membership,
        coefficients,
        normal_form: None,
        closed_form: ClosedFormComparison {
            display,
            display_ratios,
            pipeline_ratios,
            ratios_match,
        },
    })
}

/// Exact pipeline; requires `ω₀²` to be the square of a rational.
pub fn chua_exact(p: &ChuaParams) -> Result<ChuaReport<Rational>, ChuaError> {
    let v = validate(p)?;
    let omega0 = v
        .omega0_sq
        .nth_root_exact(2)
        .ok_or_else(|| ChuaError::IrrationalOmega(v.omega0_sq.clone()))?;
    let mut report = run(p, Mode::Exact, v, omega0)?;
    if report.membership.holds {
        let c = &report.coefficients;
        let series = LieElement::from_terms([
            (BasisIndex::tz2(0, 0), Rational::one()),
            (BasisIndex::h(0, 1), c.a0.clone()),
            (BasisIndex::h(1, 2), c.a1.clone()),
            (BasisIndex::tz2(0, 1), c.b0.clone()),
            (BasisIndex::tz2(1, 2), c.b1.clone()),
        ])
        .expect("Z2 indices");
        report.normal_form = second_level_nf(&NFInput { series, degree: 3 }).ok();
    }
    Ok(report)
}

/// Double-precision pipeline with tolerance `1e-9`.
pub fn chua_float(p: &ChuaParams) -> Result<ChuaReport<f64>, ChuaError> {
    let v = validate(p)?;
    let omega0 = v.omega0_sq.to_f64().sqrt();
    run(p, Mode::Float, v, omega0)
}

pub fn chua_pipeline(p: &ChuaParams, mode: Mode) -> Result<ChuaOutput, ChuaError> {
    Ok(match mode {
        Mode::Exact => ChuaOutput::Exact(Box::new(chua_exact(p)?)),
        Mode::Float => ChuaOutput::Float(Box::new(chua_float(p)?)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn instance() -> ChuaParams {
        ChuaParams::new(q(-16, 3), q(1, 1), q(1, 1))
    }

    #[test]
    fn derived_constants() {
        let r = chua_exact(&instance()).unwrap();
        assert_eq!(r.constants.c.value, q(3, 8));
        assert_eq!(r.constants.beta.value, q(5, 3));
        assert_eq!(r.constants.omega0_sq.value, q(4, 1));
        assert_eq!(r.constants.omega0.value, q(2, 1));
        assert_eq!(r.constants.mu1.value, q(-64, 11));
        assert_eq!(r.constants.mu2.value, q(-384, 11));
        assert_eq!(r.transformation[0], [q(-5, 8), q(3, 8), q(1, 1)]);
    }

    #[test]
    fn quoted_mu_leaves_complement() {
        let r = chua_exact(&instance()).unwrap();
        assert!(!r.membership.holds);
        assert!(r.normal_form.is_none());
    }

    #[test]
    fn mu_on_membership_line() {
        let r = chua_exact(&instance().with_mu(q(-16, 1), q(0, 1))).unwrap();
        assert!(r.membership.holds);
        assert!(r.normal_form.is_some());
        assert_eq!(
            r.closed_form.display_ratios,
            [Some(q(-3, 8)), Some(q(-9, 8))]
        );
    }

    #[test]
    fn float_agrees_with_exact() {
        let e = chua_exact(&instance()).unwrap();
        let f = chua_float(&instance()).unwrap();
        assert!((f.coefficients.a0 - e.coefficients.a0.to_f64()).abs() < 1e-9);
        assert!((f.membership.residuals[0] - e.membership.residuals[0].to_f64()).abs() < 1e-9);
    }

    #[test]
    fn parameter_errors() {
        let err =
            |al: Rational, g: Rational| chua_exact(&ChuaParams::new(al, g, q(1, 1))).unwrap_err();
        assert_eq!(err(q(0, 1), q(1, 1)), ChuaError::AlphaZero);
        assert_eq!(err(q(8, 1), q(1, 1)), ChuaError::AlphaTwiceSquare);
        assert_eq!(err(q(2, 1), q(1, 1)), ChuaError::TwoAlphaSquare);
        assert_eq!(err(q(-2, 1), q(1, 1)), ChuaError::AlphaMinusGammaMinusOne);
        assert!(matches!(
            err(q(1, 1), q(1, 1)),
            ChuaError::OmegaSqNotPositive(_)
        ));
        assert!(matches!(
            err(q(-5, 1), q(1, 1)),
            ChuaError::IrrationalOmega(_)
        ));
        assert!(chua_float(&ChuaParams::new(q(-5, 1), q(1, 1), q(1, 1))).is_ok());
    }
}
