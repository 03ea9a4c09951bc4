//! Unique normal form: a normal form conjugated by a random generator is recovered.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solenoid_nf::exactnum::Rational;
use solenoid_nf::liealg::{grading, BasisIndex, Family, Grading, LieElement};
use solenoid_nf::normalform::{apply_transformation, unique_nf, NFInput};

fn main() {
    let n = 8;
    let q = Rational::frac;
    let seed = LieElement::from_terms([
        (BasisIndex::tz2(0, 0), q(1, 1)),
        (BasisIndex::h(0, 1), q(1, 1)),
        (BasisIndex::h(1, 2), q(1, 1)),
        (BasisIndex::h(2, 4), q(1, 3)),
        (BasisIndex::tz2(1, 2), q(2, 1)),
    ])
    .unwrap();

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut y = LieElement::zero();
    for fam in [Family::H, Family::TZ2] {
        for idx in BasisIndex::enumerate(fam, n) {
            let g = grading(&idx, Grading::SecondLevel).unwrap();
            if (2..=n - 2).contains(&g) && rng.gen_bool(0.3) {
                y.add_term(
                    idx,
                    &Rational::frac(rng.gen_range(-3..=3), rng.gen_range(1..=3)),
                );
            }
        }
    }
    let conjugated = apply_transformation(&seed, &y, n).unwrap();
    println!("conjugated has {} terms", conjugated.len());
    let report = unique_nf(&NFInput {
        series: conjugated,
        degree: n,
    })
    .unwrap();
    println!("recovered  {}", report.output);
    println!("seed       {seed}");
}
