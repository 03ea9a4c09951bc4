//! Closed-form brackets checked against the Lie bracket of the expanded fields.

use solenoid_nf::liealg::{bracket, expand_element, BasisIndex, Family, LieElement};

fn main() {
    let a = LieElement::basis(BasisIndex::h(0, 1));
    let b = LieElement::basis(BasisIndex::h(1, 2));
    let ab = bracket(&a, &b).expect("same algebra");
    println!("[{a}, {b}] = {ab}");

    let mut checked = 0;
    for fa in [Family::F, Family::T] {
        for fb in [Family::F, Family::T] {
            for i in BasisIndex::enumerate(fa, 3) {
                for j in BasisIndex::enumerate(fb, 3) {
                    let (ei, ej) = (LieElement::basis(i), LieElement::basis(j));
                    let closed = expand_element(&bracket(&ei, &ej).unwrap());
                    let direct = expand_element(&ei).lie_bracket(&expand_element(&ej));
                    assert_eq!(closed, direct, "{i} {j}");
                    checked += 1;
                }
            }
        }
    }
    println!("{checked} pairs agree with the Cartesian bracket");
}
