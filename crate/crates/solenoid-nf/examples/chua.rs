//! The modified Chua oscillator at an exact parameter point and in floating point.

use solenoid_nf::exactnum::Rational;
use solenoid_nf::frontend::{chua_exact, chua_float, ChuaParams};

fn main() {
    let q = Rational::frac;
    let p = ChuaParams::new(q(-16, 3), q(1, 1), q(1, 1));
    let r = chua_exact(&p).unwrap();
    println!(
        "c = {}, beta = {}, omega0 = {}",
        r.constants.c.value, r.constants.beta.value, r.constants.omega0.value
    );
    println!(
        "mu1 = {}, mu2 = {}",
        r.constants.mu1.value, r.constants.mu2.value
    );
    println!(
        "membership {} residuals {:?}",
        r.membership.holds, r.membership.residuals
    );
    println!(
        "ratios {:?} vs closed form {:?}",
        r.closed_form.pipeline_ratios, r.closed_form.display_ratios
    );

    let on_line = chua_exact(&p.clone().with_mu(q(-16, 1), q(0, 1))).unwrap();
    println!("mu = (-16, 0): membership {}", on_line.membership.holds);
    if let Some(nf) = on_line.normal_form {
        println!("normal form {}", nf.output);
    }

    let f = chua_float(&ChuaParams::new(q(-5, 1), q(1, 1), q(1, 1))).unwrap();
    println!(
        "float omega0 = {:.6}, residuals {:?}",
        f.constants.omega0.value, f.membership.residuals
    );
}
