//! Graded normal forms in the Z2-equivariant algebra.
//!
//! Every computation is truncated to second-level grade `<= N`
//! (`δ(H^m_n) = n`, `δ(𝛩^m_n) = n + 1`). The reduction runs in two stages:
//!
//! 1. [`second_level_nf`] removes what `ad(a^0_1 H^0_1)` can reach.
//! 2. [`unique_nf`] rescales the leading part to `±H^0_1 ± H^r_{2r}` and
//!    normalizes in the r-adapted grading, reusing generators that were in the
//!    kernel at lower grades.
//!
//! Terms outside the normal-form style that survive are reported as
//! obstructions; nothing is dropped silently.

mod engine;
mod lemma;
mod report;

pub use engine::{apply_transformation, apply_transformation_with, truncate, Truncation};
pub use lemma::{
    leading_term, lemma_generators, symmetry_generator, symmetry_literal, LemmaGenerator,
};
pub use report::{GeneratorStep, NFInput, NFReport, Obstruction, Rescale, ScaleFactor, Stage};

use crate::exactnum::Rational;
use crate::liealg::{BasisIndex, Family, Grading, LieElement, LieError};
use crate::representations::BivarPoly;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NfError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("leading term H^0_1 absent (a^0_1 = 0)")]
    LeadingTermAbsent,
    #[error("rotation Θ^0_0 must have coefficient 1, got {0}")]
    RotationCoefficient(Rational),
    #[error("series must lie in the Z2 algebra")]
    NotZ2,
    #[error("generator term {0} is linear; transformation is not near-identity")]
    NotNearIdentity(BasisIndex),
    #[error("r undefined: all a^(2)_i vanish")]
    RUndefined,
    #[error("transformation undefined for these indices (m={m}, n={n}, r={r})")]
    LemmaUndefined { m: i64, n: i64, r: i64 },
    #[error("degree bound must be at least 1, got {0}")]
    InvalidDegree(i64),
    #[error("rescale factor {0} is not a rational power; cannot apply exactly")]
    SymbolicRescale(Rational),
    #[error("output is not in normal-form style: {0}")]
    NotInStyle(BasisIndex),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// Members of the unique normal-form style:
/// `Θ^0_0, H^0_1, 𝛩^0_1, H^m_{2m}, 𝛩^m_{2m}`.
pub fn is_style(idx: &BasisIndex) -> bool {
    match idx.family {
        Family::H => (idx.l == 0 && idx.k == 1) || (idx.l >= 1 && idx.k == 2 * idx.l),
        Family::TZ2 => (idx.l == 0 && idx.k <= 1) || (idx.l >= 1 && idx.k == 2 * idx.l),
        _ => false,
    }
}

/// Reduction by `ad(a^0_1 H^0_1)`, grade by grade in the second-level grading.
pub fn second_level_nf(input: &NFInput) -> Result<NFReport, NfError> {
    input.validate()?;
    let n = input.degree;
    let w = truncate(&input.series, n);
    let (out, gens) = engine::reduce(w, Grading::SecondLevel, 1, false, n, Stage::SecondLevel)?;
    let mut report = NFReport::new(input.clone(), out, gens);
    report.s = detect_s(&report.output);
    report.r = detect_r(&report.output);
    report.obstructions = report::obstructions(&report.output, Grading::SecondLevel);
    Ok(report)
}

fn detect_r(e: &LieElement) -> Option<i64> {
    e.terms()
        .filter(|(i, _)| i.family == Family::H && i.l >= 1 && i.k == 2 * i.l)
        .map(|(i, _)| i.l)
        .min()
}

fn detect_s(e: &LieElement) -> Option<i64> {
    e.terms()
        .filter(|(i, _)| i.family == Family::TZ2 && i.l >= 1 && i.k == 2 * i.l)
        .map(|(i, _)| i.l)
        .min()
}

/// Scales `x` so that `|a_r| = 1` and `ρ` so that `|a^0_1| = 1`, keeping signs.
///
/// The induced map `H^m_n, 𝛩^m_n ↦ λ^{2m} μ^{2(n-2m)}` is an automorphism, so
/// the rest of the series is transformed consistently. When `λ²` is not
/// rational the x-scale is recorded but left unapplied.
pub fn detect_and_rescale(report: &NFReport) -> Result<NFReport, NfError> {
    let w = &report.output;
    let r = detect_r(w).ok_or(NfError::RUndefined)?;
    let a01 = w.coeff(&BasisIndex::h(0, 1));
    let ar = w.coeff(&BasisIndex::h(r, 2 * r));
    let x_base = ar.abs().recip().map_err(|_| NfError::RUndefined)?;
    let rho_base = a01.abs().recip().map_err(|_| NfError::LeadingTermAbsent)?;
    let applied = x_base.nth_root_exact(r as u32).is_some();
    let rescale = Rescale {
        x: ScaleFactor {
            base: x_base,
            exp: Rational::frac(1, 2 * r),
            sign: ar.signum(),
        },
        rho: ScaleFactor {
            base: rho_base,
            exp: Rational::frac(1, 2),
            sign: a01.signum(),
        },
        applied,
    };
    let mut out = report.clone();
    out.output = rescale.apply(w)?;
    out.r = Some(r);
    out.rescale = Some(rescale);
    out.obstructions = report::obstructions(&out.output, Grading::SecondLevel);
    Ok(out)
}

/// The unique normal form through second-level grade `N`.
pub fn unique_nf(input: &NFInput) -> Result<NFReport, NfError> {
    let second = second_level_nf(input)?;
    let scaled = detect_and_rescale(&second)?;
    let r = scaled.r.ok_or(NfError::RUndefined)?;
    let w = scaled.output.clone();
    let grading = Grading::RAdapted(r);
    let (out, gens) = engine::reduce(w, grading, r, true, input.degree, Stage::Unique)?;
    let mut report = scaled;
    report.output = out;
    report.generators.extend(gens);
    report.obstructions = report::obstructions(&report.output, grading);
    Ok(report)
}

/// First integral `Σ a x^{2m+1} r^{n-2m+1}` over the H terms of the output, in `(x, r = ρ²)`.
pub fn nf_first_integral(report: &NFReport) -> BivarPoly {
    let mut h = BivarPoly::zero();
    for (i, c) in report.output.terms() {
        if i.family == Family::H {
            h = &h + &BivarPoly::f_basis(i).scale(c);
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::bracket;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn base_series() -> Vec<(BasisIndex, Rational)> {
        vec![
            (BasisIndex::tz2(0, 0), q(1, 1)),
            (BasisIndex::h(0, 1), q(1, 1)),
        ]
    }

    fn input(extra: &[(BasisIndex, Rational)], degree: i64) -> NFInput {
        let mut t = base_series();
        t.extend_from_slice(extra);
        NFInput {
            series: LieElement::from_terms(t).unwrap(),
            degree,
        }
    }

    #[test]
    fn style_input_is_unchanged() {
        let inp = input(
            &[
                (BasisIndex::h(1, 2), q(2, 1)),
                (BasisIndex::tz2(1, 2), q(-3, 1)),
            ],
            6,
        );
        let rep = second_level_nf(&inp).unwrap();
        assert_eq!(rep.output, inp.series);
        assert!(rep.generators.is_empty());
        assert!(rep.obstructions.is_empty());
    }

    #[test]
    fn removes_h03() {
        let inp = input(&[(BasisIndex::h(0, 3), q(7, 1))], 6);
        let rep = second_level_nf(&inp).unwrap();
        assert!(rep.output.coeff(&BasisIndex::h(0, 3)).is_zero());
        assert!(rep.obstructions.is_empty());
        assert!(rep.replay_matches().unwrap());
    }

    #[test]
    fn h18_is_obstructed() {
        let inp = input(&[(BasisIndex::h(1, 8), q(1, 1))], 8);
        let rep = second_level_nf(&inp).unwrap();
        assert_eq!(rep.output.coeff(&BasisIndex::h(1, 8)), q(1, 1));
        assert_eq!(rep.obstructions.len(), 1);
        assert_eq!(rep.obstructions[0].index, BasisIndex::h(1, 8));
    }

    #[test]
    fn missing_leading_term() {
        let inp = NFInput {
            series: LieElement::from_terms([
                (BasisIndex::tz2(0, 0), q(1, 1)),
                (BasisIndex::h(1, 2), q(1, 1)),
            ])
            .unwrap(),
            degree: 4,
        };
        assert_eq!(
            second_level_nf(&inp).unwrap_err(),
            NfError::LeadingTermAbsent
        );
    }

    #[test]
    fn rescale_examples() {
        let inp = input(
            &[
                (BasisIndex::h(1, 2), q(16, 1)),
                (BasisIndex::h(2, 4), q(32, 1)),
            ],
            6,
        );
        let rep = detect_and_rescale(&second_level_nf(&inp).unwrap()).unwrap();
        let rs = rep.rescale.clone().unwrap();
        assert!(rs.applied);
        assert_eq!(rs.x.base, q(1, 16));
        assert_eq!(rep.output.coeff(&BasisIndex::h(1, 2)), q(1, 1));
        assert_eq!(rep.output.coeff(&BasisIndex::h(2, 4)), q(1, 8));

        let neg = input(&[(BasisIndex::h(1, 2), q(-1, 1))], 4);
        let rep = detect_and_rescale(&second_level_nf(&neg).unwrap()).unwrap();
        assert_eq!(rep.output.coeff(&BasisIndex::h(1, 2)), q(-1, 1));
        assert_eq!(rep.rescale.unwrap().x.sign, -1);

        let none = input(&[(BasisIndex::tz2(1, 2), q(1, 1))], 4);
        assert_eq!(
            detect_and_rescale(&second_level_nf(&none).unwrap()).unwrap_err(),
            NfError::RUndefined
        );
    }

    #[test]
    fn symbolic_rescale_is_recorded() {
        let inp = input(&[(BasisIndex::h(2, 4), q(2, 1))], 6);
        let rep = detect_and_rescale(&second_level_nf(&inp).unwrap()).unwrap();
        let rs = rep.rescale.unwrap();
        assert!(!rs.applied);
        assert_eq!(rs.x.base, q(1, 2));
        assert_eq!(rep.output.coeff(&BasisIndex::h(2, 4)), q(2, 1));
    }

    #[test]
    fn unique_nf_of_normal_form_is_identity() {
        let inp = input(
            &[
                (BasisIndex::h(1, 2), q(1, 1)),
                (BasisIndex::h(2, 4), q(1, 3)),
                (BasisIndex::tz2(1, 2), q(2, 1)),
            ],
            8,
        );
        let rep = unique_nf(&inp).unwrap();
        assert_eq!(rep.output, inp.series);
        assert!(rep.generators.is_empty());
        assert!(rep.replay_matches().unwrap());
    }

    #[test]
    fn first_integral_of_leading_part() {
        let inp = input(&[(BasisIndex::h(1, 2), q(1, 1))], 4);
        let rep = unique_nf(&inp).unwrap();
        let s = nf_first_integral(&rep);
        // x r² + x³ r
        let expect = &BivarPoly::monomial(q(1, 1), 1, 2) + &BivarPoly::monomial(q(1, 1), 3, 1);
        assert_eq!(s, expect);
    }

    #[test]
    fn lemma_examples() {
        let g = lemma_generators(1, 3, 1, Family::H).unwrap();
        assert_eq!(g.generator, LieElement::term(BasisIndex::h(1, 2), q(1, 5)));
        assert_eq!(g.target, BasisIndex::h(2, 4));
        assert!(g.verify(1).unwrap());
        assert_eq!(
            lemma_generators(0, 2, 1, Family::H).unwrap_err(),
            NfError::LemmaUndefined { m: 0, n: 2, r: 1 }
        );
        for m in 0..3 {
            let g = lemma_generators(m, 2 * m + 1, 2, Family::H);
            if let Ok(g) = g {
                assert_eq!(g.generator.len(), 1);
                assert!(g.verify(2).unwrap());
            }
        }
    }

    #[test]
    fn symmetry_generator_commutes() {
        for k in 1..=2 {
            for r in 1..=2 {
                let s = symmetry_generator(k, r).unwrap();
                assert!(bracket(&s, &leading_term(r)).unwrap().is_zero());
            }
        }
    }
}
