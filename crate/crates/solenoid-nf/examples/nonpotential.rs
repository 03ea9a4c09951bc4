//! Curl certificates: Hopf-zero elements never have a scalar potential.

use solenoid_nf::exactnum::Rational;
use solenoid_nf::liealg::{BasisIndex, LieElement};
use solenoid_nf::representations::nonpotential_certificate;

fn main() {
    let samples = [
        LieElement::basis(BasisIndex::t(0, 0)),
        LieElement::from_terms([
            (BasisIndex::f(0, 1), Rational::one()),
            (BasisIndex::t(2, 3), Rational::frac(-1, 2)),
        ])
        .unwrap(),
        LieElement::basis(BasisIndex::f(-1, 0)),
        LieElement::basis(BasisIndex::f(0, 0)),
    ];
    for e in samples {
        let cert = nonpotential_certificate(&e).unwrap();
        println!("{e}: {:?}, curl = {}", cert.verdict, cert.curl);
    }
}
