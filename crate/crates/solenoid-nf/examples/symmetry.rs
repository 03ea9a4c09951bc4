//! Symmetries of the leading part `ℍ_r = H^0_1 + H^r_{2r}`.

use solenoid_nf::liealg::bracket;
use solenoid_nf::normalform::{leading_term, symmetry_generator, symmetry_literal};

fn main() {
    for k in [1, 2] {
        for r in [1, 2] {
            let s = symmetry_generator(k, r).unwrap();
            let c = bracket(&s, &leading_term(r)).unwrap();
            println!("k={k} r={r}: [{s}, ℍ_r] = {c}");
            let lit = symmetry_literal(k, r, r).unwrap();
            println!("        unweighted sum with s=r: {lit}");
        }
    }
}
