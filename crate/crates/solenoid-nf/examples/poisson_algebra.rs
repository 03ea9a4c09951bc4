//! The Poisson bracket on functions of `(x, r = y² + z²)` and its isomorphism onto the F family.

use solenoid_nf::liealg::{bracket, BasisIndex, LieElement};
use solenoid_nf::representations::{phi, poisson_bracket, BivarPoly};

fn main() {
    let f = BivarPoly::f_basis(&BasisIndex::f(0, 1));
    let g = BivarPoly::f_basis(&BasisIndex::f(1, 2));
    let fg = poisson_bracket(&f, &g);
    println!("{{{f}, {g}}} = {fg}");

    let lhs = phi(&fg).unwrap();
    let rhs = bracket(
        &LieElement::basis(BasisIndex::f(0, 1)),
        &LieElement::basis(BasisIndex::f(1, 2)),
    )
    .unwrap();
    println!("phi of the bracket: {lhs}");
    println!("field bracket:      {rhs}");
    assert_eq!(lhs, rhs);
}
