//! Exact rationals, polynomials and rational functions underneath everything else.

use solenoid_nf::exactnum::{pochhammer, Rational};
use solenoid_nf::polycalc::{Poly3, RatFunc3, VField3};

fn main() {
    let q = Rational::frac;
    println!("(1/3)^4_2 = {}", pochhammer(&q(1, 3), 4, &q(2, 1)));
    let p = &Poly3::x().pow(2) - &Poly3::rho2().scale(&q(1, 2));
    println!("p = {p}, dp/dx = {}", p.derivative(0));
    let f = RatFunc3::new(Poly3::z(), Poly3::y()).unwrap();
    let g = VField3::gradient(&f);
    println!("grad(z/y) = {g}, curl = {}", g.curl());
}
