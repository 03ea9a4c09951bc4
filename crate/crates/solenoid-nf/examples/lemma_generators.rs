//! Generators that move `H^m_n` and `𝛩^m_n` onto the diagonal `B^p_{2p}` modulo `ad ℍ_r`.

use solenoid_nf::liealg::Family;
use solenoid_nf::normalform::lemma_generators;

fn main() {
    for r in [1, 2] {
        for (m, n, fam) in [
            (0, 3, Family::H),
            (1, 3, Family::H),
            (0, 2, Family::TZ2),
            (1, 4, Family::TZ2),
            (0, 2, Family::H),
        ] {
            match lemma_generators(m, n, r, fam) {
                Ok(g) => {
                    let ok = g.verify(r).unwrap();
                    println!(
                        "r={r} {}: Y = {}, residual ({}){} verified={ok}",
                        g.source, g.generator, g.residual, g.target
                    );
                }
                Err(e) => println!("r={r} {fam}^{m}_{n}: {e}"),
            }
        }
    }
}
