//! Near-identity changes of variables as truncated `exp(ad Y)`.

use solenoid_nf::exactnum::Rational;
use solenoid_nf::liealg::{BasisIndex, LieElement};
use solenoid_nf::normalform::apply_transformation;

fn main() {
    let field = LieElement::from_terms([
        (BasisIndex::tz2(0, 0), Rational::one()),
        (BasisIndex::h(0, 1), Rational::one()),
        (BasisIndex::h(1, 2), Rational::one()),
    ])
    .unwrap();
    let y = LieElement::term(BasisIndex::h(0, 2), Rational::frac(1, 2));
    let there = apply_transformation(&field, &y, 6).unwrap();
    let back = apply_transformation(&there, &y.neg(), 6).unwrap();
    println!("field       {field}");
    println!("exp(ad Y)   {there}");
    println!("and back    {back}");
    assert_eq!(back, field);
}
