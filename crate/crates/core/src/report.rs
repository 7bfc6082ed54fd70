//! Serde helpers: every number leaves the crate as a decimal string so
//! arbitrary-precision values survive JSON consumers.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::Serializer;

pub fn decimal<S: Serializer, T: Display>(x: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub fn decimal_seq<S: Serializer, T: Display, A: AsRef<[T]>>(xs: &A, s: S) -> Result<S::Ok, S::Error> {
    let xs = xs.as_ref();
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn decimal_map<S: Serializer, K: Display, T: Display>(
    map: &BTreeMap<K, T>,
    s: S,
) -> Result<S::Ok, S::Error> {
    let mut out = s.serialize_map(Some(map.len()))?;
    for (k, v) in map {
        out.serialize_entry(&k.to_string(), &v.to_string())?;
    }
    out.end()
}
