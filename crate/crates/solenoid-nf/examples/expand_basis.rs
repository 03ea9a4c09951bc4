//! Cartesian and cylindrical forms of basis fields, with divergence and first integrals.

use solenoid_nf::liealg::{
    expand_cartesian, expand_cylindrical, first_integral, BasisIndex, FirstIntegral,
};
use solenoid_nf::polycalc::RatFunc3;

fn main() {
    for idx in [
        BasisIndex::h(0, 1),
        BasisIndex::h(1, 2),
        BasisIndex::tz2(1, 2),
        BasisIndex::f(-1, 1),
    ] {
        let v = expand_cartesian(&idx);
        println!("{idx}: {}", expand_cylindrical(&idx).pretty());
        println!("  cartesian  {v}");
        println!("  div        {}", v.divergence());
        let integrals = match first_integral(&idx) {
            FirstIntegral::Single(p) => vec![p],
            FirstIntegral::Pair(p, q) => vec![p, q],
        };
        for p in integrals {
            let d = v.apply(&RatFunc3::from_poly(p.clone()));
            println!("  conserved  {p}  (derivative {d})");
        }
    }
}
