use super::NfError;
use crate::exactnum::{pochhammer, Rational};
use crate::liealg::{bracket, BasisIndex, Family, LieElement};

/// `ℍ_r = H^0_1 + H^r_{2r}`.
pub fn leading_term(r: i64) -> LieElement {
    LieElement::from_terms([
        (BasisIndex::h(0, 1), Rational::one()),
        (BasisIndex::h(r, 2 * r), Rational::one()),
    ])
    .expect("same algebra")
}

/// A generator `Y` with `[Y, ℍ_r] + source = residual · target`.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaGenerator {
    pub source: BasisIndex,
    pub generator: LieElement,
    pub residual: Rational,
    pub target: BasisIndex,
}

impl LemmaGenerator {
    /// Checks the defining identity with the bracket engine.
    pub fn verify(&self, r: i64) -> Result<bool, NfError> {
        let lhs =
            bracket(&self.generator, &leading_term(r))?.add(&LieElement::basis(self.source))?;
        Ok(lhs == LieElement::term(self.target, self.residual.clone()))
    }
}

/// Transformation moving `H^m_n` (or `𝛩^m_n`) onto `H^p_{2p}` (or `𝛩^p_{2p}`),
/// `p = nr + m - 2mr`, modulo the image of `ad ℍ_r`.
///
/// ```text
/// Y = Σ_{j=0}^{n-2m-1} (-1)^j (A)^j_{4r+1} / (D)^{j+1}_{4r+1} · B^{jr+m}_{2jr-j+n-1}
/// residual = (-1)^n (A)^{n-2m}_{4r+1} / (D)^{n-2m}_{4r+1}
/// ```
///
/// with `A = 4mr - 2nr + 4m - n + 1`, `D = 6m - n + 2` for H and
/// `A = 4mr - 2nr + 4m - n + 2r + 1`, `D = 6m - n + 1` for 𝛩.
pub fn lemma_generators(m: i64, n: i64, r: i64, family: Family) -> Result<LemmaGenerator, NfError> {
    let undefined = NfError::LemmaUndefined { m, n, r };
    if r < 1 || !matches!(family, Family::H | Family::TZ2) {
        return Err(undefined);
    }
    let source = BasisIndex::new(family, m, n).map_err(|_| undefined.clone())?;
    let (a, d) = match family {
        Family::H => (4 * m * r - 2 * n * r + 4 * m - n + 1, 6 * m - n + 2),
        _ => (4 * m * r - 2 * n * r + 4 * m - n + 2 * r + 1, 6 * m - n + 1),
    };
    let steps = n - 2 * m;
    let step = 4 * r + 1;
    if (0..steps).any(|i| d + i * step == 0) {
        return Err(undefined);
    }
    let (a, d, b) = (
        Rational::from_int(a),
        Rational::from_int(d),
        Rational::from_int(step),
    );
    let mut generator = LieElement::zero();
    for j in 0..steps {
        let idx = BasisIndex::new(family, j * r + m, 2 * j * r - j + n - 1)
            .map_err(|_| undefined.clone())?;
        if idx.is_rotation() {
            return Err(undefined);
        }
        let mut c = pochhammer(&a, j as u32, &b) / pochhammer(&d, (j + 1) as u32, &b);
        if j % 2 == 1 {
            c = -c;
        }
        generator.add_term(idx, &c);
    }
    let mut residual = pochhammer(&a, steps as u32, &b) / pochhammer(&d, steps as u32, &b);
    if n % 2 == 1 {
        residual = -residual;
    }
    let p = n * r + m - 2 * m * r;
    let target = BasisIndex::new(family, p, 2 * p).map_err(|_| undefined)?;
    Ok(LemmaGenerator {
        source,
        generator,
        residual,
        target,
    })
}

/// `𝛩^k_{6k} + (8kr + 2k) 𝕽^{k+r}_{6k+2r}`, which commutes with `ℍ_r`.
pub fn symmetry_generator(k: i64, r: i64) -> Result<LieElement, NfError> {
    let rk = lemma_generators(k + r, 6 * k + 2 * r, r, Family::TZ2)?;
    let c = Rational::from_int(8 * k * r + 2 * k);
    Ok(LieElement::basis(BasisIndex::tz2(k, 6 * k)).add(&rk.generator.scale(&c))?)
}

/// `[𝛩^k_{6k}, H^r_{2r}] + [𝕽^{k+s}_{6k+2s}, ℍ_r]`, evaluated as written.
pub fn symmetry_literal(k: i64, r: i64, s: i64) -> Result<LieElement, NfError> {
    let first = bracket(
        &LieElement::basis(BasisIndex::tz2(k, 6 * k)),
        &LieElement::basis(BasisIndex::h(r, 2 * r)),
    )?;
    let rk = lemma_generators(k + s, 6 * k + 2 * s, r, Family::TZ2)?;
    Ok(first.add(&bracket(&rk.generator, &leading_term(r))?)?)
}
