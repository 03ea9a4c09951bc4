//! Cubic Hopf-pitchfork systems: membership relations, coefficients and the homological solve.

use solenoid_nf::exactnum::Rational;
use solenoid_nf::frontend::{
    classical_nf_cubic, extract_coefficients, membership_relations, CubicSystem,
};

fn main() {
    let q = Rational::frac;
    let sys: CubicSystem = serde_json::from_str(
        r#"{"a":[{"e":[3,0,0],"c":"1"},{"e":[1,0,2],"c":"4"}],
            "b":[{"e":[2,1,0],"c":"-3"},{"e":[0,0,3],"c":"1/2"}],
            "c":[{"e":[0,2,1],"c":"-4"}]}"#,
    )
    .unwrap();
    let m = membership_relations(&sys);
    println!("in algebra: {} residuals {:?}", m.holds, m.residuals);
    let c = extract_coefficients(&sys);
    println!("a0 = {}, b0 = {}, a1 = {}, b1 = {}", c.a0, c.b0, c.a1, c.b1);
    let nf = classical_nf_cubic(&sys);
    println!("resonant algebra part {}", nf.algebra_part);
    println!("complement {:?}", nf.complement);

    let mut off = sys.clone();
    off.set(0, [1, 2, 0], q(1, 1));
    println!(
        "with a120 = 1: residuals {:?}",
        membership_relations(&off).residuals
    );
}
