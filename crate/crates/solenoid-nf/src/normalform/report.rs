use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::engine::{apply_transformation_with, truncate, Truncation};
use super::{is_style, NfError};
use crate::exactnum::Rational;
use crate::liealg::{grading, Algebra, BasisIndex, Family, Grading, LieElement};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NFInput {
    pub series: LieElement,
    /// Truncation bound on the second-level grade.
    pub degree: i64,
}

impl NFInput {
    pub fn validate(&self) -> Result<(), NfError> {
        if self.degree < 1 {
            return Err(NfError::InvalidDegree(self.degree));
        }
        if self.series.algebra() != Some(Algebra::Z2) {
            return Err(NfError::NotZ2);
        }
        let rot = self.series.coeff(&BasisIndex::tz2(0, 0));
        if !rot.is_one() {
            return Err(NfError::RotationCoefficient(rot));
        }
        if self.series.coeff(&BasisIndex::h(0, 1)).is_zero() {
            return Err(NfError::LeadingTermAbsent);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    SecondLevel,
    Unique,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorStep {
    pub stage: Stage,
    pub grade: i64,
    pub generator: LieElement,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Obstruction {
    pub grade: i64,
    pub index: BasisIndex,
    pub coeff: Rational,
}

/// A positive factor `base^exp` together with the sign it leaves in place.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaleFactor {
    pub base: Rational,
    pub exp: Rational,
    pub sign: i32,
}

/// Coordinate scaling `x ↦ λx`, `ρ ↦ μρ` with `λ = x.base^x.exp`, `μ = rho.base^rho.exp`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Rescale {
    #[serde(flatten)]
    pub x: ScaleFactor,
    pub rho: ScaleFactor,
    /// False when `λ²` is irrational and the x-scale was only recorded.
    pub applied: bool,
}

impl Rescale {
    /// Coefficient map `c ↦ c λ^{2m} μ^{2(n-2m)}` on `H^m_n` and `𝛩^m_n`.
    pub fn apply(&self, e: &LieElement) -> Result<LieElement, NfError> {
        let lambda2 = if self.applied {
            // exp = 1/(2r), so λ² = base^{1/r}
            let r = (self.x.exp.denom() / 2u32)
                .to_u32()
                .ok_or_else(|| NfError::Internal("rescale exponent".into()))?;
            Some(
                self.x
                    .base
                    .nth_root_exact(r)
                    .ok_or_else(|| NfError::SymbolicRescale(self.x.base.clone()))?,
            )
        } else {
            None
        };
        let mu2 = &self.rho.base;
        let mut out = LieElement::zero();
        for (i, c) in e.terms() {
            let mut v = c * &mu2.pow((i.k - 2 * i.l) as i32).expect("nonzero base");
            if let Some(l2) = &lambda2 {
                v = &v * &l2.pow(i.l as i32).expect("nonzero base");
            }
            out.add_term(*i, &v);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NFReport {
    pub input: NFInput,
    pub output: LieElement,
    pub r: Option<i64>,
    pub s: Option<i64>,
    pub generators: Vec<GeneratorStep>,
    pub obstructions: Vec<Obstruction>,
    pub rescale: Option<Rescale>,
}

impl NFReport {
    pub(super) fn new(input: NFInput, output: LieElement, generators: Vec<GeneratorStep>) -> Self {
        NFReport {
            input,
            output,
            r: None,
            s: None,
            generators,
            obstructions: Vec::new(),
            rescale: None,
        }
    }

    /// Applies second-level generators, the rescale, then unique-stage generators.
    pub fn replay(&self) -> Result<LieElement, NfError> {
        let trunc = Truncation::second_level(self.input.degree);
        let mut w = truncate(&self.input.series, self.input.degree);
        for step in self
            .generators
            .iter()
            .filter(|g| g.stage == Stage::SecondLevel)
        {
            w = apply_transformation_with(&w, &step.generator, &trunc)?;
        }
        if let Some(rs) = &self.rescale {
            w = rs.apply(&w)?;
        }
        for step in self.generators.iter().filter(|g| g.stage == Stage::Unique) {
            w = apply_transformation_with(&w, &step.generator, &trunc)?;
        }
        Ok(w)
    }

    pub fn replay_matches(&self) -> Result<bool, NfError> {
        Ok(self.replay()? == self.output)
    }

    pub fn is_in_style(&self) -> bool {
        self.output.terms().all(|(i, _)| is_style(i))
    }

    /// Coefficient of `H^i_{2i}` (or `H^0_1` for `i = 0`).
    pub fn a(&self, i: i64) -> Rational {
        let idx = if i == 0 {
            BasisIndex::h(0, 1)
        } else {
            BasisIndex::h(i, 2 * i)
        };
        self.output.coeff(&idx)
    }

    /// Coefficient of `𝛩^i_{2i}` (or `𝛩^0_1` for `i = 0`).
    pub fn b(&self, i: i64) -> Rational {
        let idx = if i == 0 {
            BasisIndex::tz2(0, 1)
        } else {
            BasisIndex::tz2(i, 2 * i)
        };
        self.output.coeff(&idx)
    }
}

pub(super) fn obstructions(out: &LieElement, g: Grading) -> Vec<Obstruction> {
    let mut v: Vec<Obstruction> = out
        .terms()
        .filter(|(i, _)| !is_style(i) && matches!(i.family, Family::H | Family::TZ2))
        .map(|(i, c)| Obstruction {
            grade: grading(i, g).expect("Z2 index"),
            index: *i,
            coeff: c.clone(),
        })
        .collect();
    v.sort_by_key(|o| (o.grade, o.index));
    v
}
