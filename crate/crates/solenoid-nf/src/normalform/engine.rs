use std::collections::BTreeMap;

use super::report::{GeneratorStep, Stage};
use super::{is_style, NfError};
use crate::exactnum::Rational;
use crate::liealg::{bracket_filtered, grading, Algebra, BasisIndex, Family, Grading, LieElement};
use crate::linalg::{self, Matrix};

/// Ideal of discarded terms: everything with `grading > max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub grading: Grading,
    pub max: i64,
}

impl Truncation {
    pub fn second_level(max: i64) -> Self {
        Truncation {
            grading: Grading::SecondLevel,
            max,
        }
    }

    pub fn keeps(&self, idx: &BasisIndex) -> bool {
        grading(idx, self.grading).is_ok_and(|g| g <= self.max)
    }
}

/// Drops terms of second-level grade above `n`.
pub fn truncate(e: &LieElement, n: i64) -> LieElement {
    let t = Truncation::second_level(n);
    e.filter(|i| t.keeps(i))
}

/// `exp(ad gen) field`, truncated at second-level grade `n` for Z2 input and
/// at polynomial degree `n + 1` otherwise.
pub fn apply_transformation(
    field: &LieElement,
    gen: &LieElement,
    n: i64,
) -> Result<LieElement, NfError> {
    let alg = field.algebra().or(gen.algebra());
    let grading = match alg {
        Some(Algebra::General) => Grading::Degree,
        _ => Grading::SecondLevel,
    };
    apply_transformation_with(field, gen, &Truncation { grading, max: n })
}

pub fn apply_transformation_with(
    field: &LieElement,
    gen: &LieElement,
    trunc: &Truncation,
) -> Result<LieElement, NfError> {
    for (i, _) in gen.terms() {
        if grading(i, Grading::Degree)? < 1 {
            return Err(NfError::NotNearIdentity(*i));
        }
    }
    let keep = |i: &BasisIndex| trunc.keeps(i);
    let mut out = field.filter(keep);
    let mut term = out.clone();
    let mut j = 1i64;
    loop {
        term = bracket_filtered(gen, &term, keep)?.scale(&Rational::frac(1, j));
        if term.is_zero() {
            return Ok(out);
        }
        out = out.add(&term)?;
        j += 1;
    }
}

/// Z2 basis without the rotation, truncated at second-level grade `n`, grouped by `g`.
fn graded_basis(g: Grading, n: i64) -> BTreeMap<i64, Vec<BasisIndex>> {
    let mut by_grade: BTreeMap<i64, Vec<BasisIndex>> = BTreeMap::new();
    for fam in [Family::H, Family::TZ2] {
        for idx in BasisIndex::enumerate(fam, n) {
            if idx.is_rotation() || grading(&idx, Grading::SecondLevel).expect("Z2") > n {
                continue;
            }
            by_grade
                .entry(grading(&idx, g).expect("Z2"))
                .or_default()
                .push(idx);
        }
    }
    for v in by_grade.values_mut() {
        v.sort();
    }
    by_grade
}

/// Elimination preference: lower rank is removed first when there is a choice.
fn removal_rank(idx: &BasisIndex) -> (u8, BasisIndex) {
    let rank = if !is_style(idx) {
        0
    } else if idx.family == Family::TZ2 && idx.l >= 1 {
        1
    } else if idx.family == Family::H && idx.l >= 1 {
        2
    } else if idx.family == Family::TZ2 {
        3
    } else {
        4
    };
    (rank, *idx)
}

fn min_sl(e: &LieElement) -> i64 {
    e.terms()
        .map(|(i, _)| grading(i, Grading::SecondLevel).expect("Z2"))
        .min()
        .unwrap_or(i64::MAX)
}

/// Grade-by-grade reduction of `w` against its leading part of grade `lead_grade`.
///
/// At grade `g` the candidate generators are the grade `g - lead_grade` basis
/// elements and, when `chain` is set, the combinations whose brackets with `w`
/// vanished at every lower grade. Targets are ordered by [`removal_rank`] and
/// the image is row-reduced in that order, so the complement left in the
/// output prefers style elements. Free variables are set to zero.
pub(super) fn reduce(
    mut w: LieElement,
    g: Grading,
    lead_grade: i64,
    chain: bool,
    n: i64,
    stage: Stage,
) -> Result<(LieElement, Vec<GeneratorStep>), NfError> {
    let trunc = Truncation::second_level(n);
    let basis = graded_basis(g, n);
    let max_grade = basis.keys().copied().max().unwrap_or(0);
    let mut kernel: Vec<LieElement> = Vec::new();
    let mut steps = Vec::new();
    let useful = |y: &LieElement| min_sl(y) < n;

    for grade in (lead_grade + 1)..=max_grade {
        let mut targets = basis.get(&grade).cloned().unwrap_or_default();
        targets.sort_by_key(removal_rank);
        let mut cands: Vec<LieElement> = basis
            .get(&(grade - lead_grade))
            .map(|v| v.iter().map(|i| LieElement::basis(*i)).collect())
            .unwrap_or_default();
        if chain {
            cands.append(&mut kernel);
        }
        cands.retain(useful);
        if cands.is_empty() {
            continue;
        }
        let col: BTreeMap<BasisIndex, usize> =
            targets.iter().enumerate().map(|(c, i)| (*i, c)).collect();
        let d = targets.len();
        let p = cands.len();
        let at_grade = |i: &BasisIndex| trunc.keeps(i) && grading(i, g).is_ok_and(|x| x == grade);

        // rows: candidate images in target coordinates, followed by an identity block
        let mut m: Matrix = linalg::zeros(p, d + p);
        for (row, y) in cands.iter().enumerate() {
            let img = bracket_filtered(y, &w, at_grade)?;
            for (i, c) in img.terms() {
                let c_idx = *col.get(i).ok_or_else(|| {
                    NfError::Internal(format!("bracket left the graded basis at {i}"))
                })?;
                m[row][c_idx] = c.clone();
            }
            m[row][d + row] = Rational::one();
        }
        let red = linalg::rref(&m);

        let mut y = LieElement::zero();
        let mut next_kernel = Vec::new();
        for (row, &pc) in red.pivots.iter().enumerate() {
            let combo = &red.matrix[row][d..];
            if pc < d {
                let wc = w.coeff(&targets[pc]);
                if wc.is_zero() {
                    continue;
                }
                for (j, cj) in combo.iter().enumerate() {
                    if !cj.is_zero() {
                        y = y.add(&cands[j].scale(&-(&wc * cj)))?;
                    }
                }
            } else if chain {
                let mut k = LieElement::zero();
                for (j, cj) in combo.iter().enumerate() {
                    if !cj.is_zero() {
                        k = k.add(&cands[j].scale(cj))?;
                    }
                }
                if !k.is_zero() {
                    next_kernel.push(k);
                }
            }
        }
        kernel = next_kernel;

        if !y.is_zero() {
            w = apply_transformation_with(&w, &y, &trunc)?;
            steps.push(GeneratorStep {
                stage,
                grade,
                generator: y,
            });
            for &pc in red.pivots.iter().filter(|&&pc| pc < d) {
                if !w.coeff(&targets[pc]).is_zero() {
                    return Err(NfError::Internal(format!(
                        "{} survived elimination",
                        targets[pc]
                    )));
                }
            }
        }
    }
    Ok((w, steps))
}
