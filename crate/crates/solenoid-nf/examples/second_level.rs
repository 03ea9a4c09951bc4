//! Second-level normal form with the obstruction report.

use solenoid_nf::exactnum::Rational;
use solenoid_nf::liealg::{BasisIndex, LieElement};
use solenoid_nf::normalform::{second_level_nf, NFInput};

fn main() {
    let q = Rational::frac;
    let series = LieElement::from_terms([
        (BasisIndex::tz2(0, 0), q(1, 1)),
        (BasisIndex::h(0, 1), q(1, 1)),
        (BasisIndex::h(0, 2), q(3, 1)),
        (BasisIndex::h(1, 3), q(-1, 2)),
        (BasisIndex::tz2(0, 2), q(2, 1)),
        (BasisIndex::h(1, 2), q(1, 1)),
    ])
    .unwrap();
    let report = second_level_nf(&NFInput { series, degree: 8 }).unwrap();
    println!("output  {}", report.output);
    println!("r = {:?}, s = {:?}", report.r, report.s);
    for o in &report.obstructions {
        println!("obstruction ({}){} at grade {}", o.coeff, o.index, o.grade);
    }
    println!(
        "replay reproduces output: {}",
        report.replay_matches().unwrap()
    );
}
