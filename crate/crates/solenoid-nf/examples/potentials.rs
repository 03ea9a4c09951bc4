//! Euler potentials, vector potentials and Clebsch triples for single basis fields.

use solenoid_nf::liealg::BasisIndex;
use solenoid_nf::representations::{
    clebsch, euler_form, vector_potential, PotentialSet, VectorPotentialVariant,
};

fn show(label: &str, set: &PotentialSet) {
    println!("{label}");
    for t in &set.terms {
        for (name, part) in &t.parts {
            println!("  {name} = {part}");
        }
    }
    for c in &set.conventions {
        println!("  note: {c}");
    }
}

fn main() {
    let idx = BasisIndex::f(1, 2);
    show("euler", &euler_form(&idx).unwrap());
    show(
        "vector potential (closed form)",
        &vector_potential(&idx, VectorPotentialVariant::ClosedForm).unwrap(),
    );
    show(
        "vector potential (constructive)",
        &vector_potential(&idx, VectorPotentialVariant::Constructive).unwrap(),
    );
    show("clebsch", &clebsch(&idx).unwrap());
    show("clebsch, rotation", &clebsch(&BasisIndex::t(0, 1)).unwrap());
}
