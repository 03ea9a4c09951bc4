//! JSON shape `[{"e":[a,b],"c":"p/q"}]` for maps keyed by exponent pairs.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::Rational;

#[derive(Serialize, Deserialize)]
struct Term {
    e: [u32; 2],
    c: Rational,
}

pub fn serialize<S: Serializer>(
    m: &BTreeMap<(u32, u32), Rational>,
    s: S,
) -> Result<S::Ok, S::Error> {
    let v: Vec<Term> = m
        .iter()
        .map(|(&(a, b), c)| Term {
            e: [a, b],
            c: c.clone(),
        })
        .collect();
    v.serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(
    d: D,
) -> Result<BTreeMap<(u32, u32), Rational>, D::Error> {
    let mut out = BTreeMap::new();
    for t in Vec::<Term>::deserialize(d)? {
        if !t.c.is_zero() && out.insert((t.e[0], t.e[1]), t.c).is_some() {
            return Err(serde::de::Error::custom(format!(
                "exponent {:?} listed twice",
                t.e
            )));
        }
    }
    Ok(out)
}
