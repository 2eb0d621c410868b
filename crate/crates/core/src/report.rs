//! Serialization helpers shared by report types.

use std::fmt::Display;

use serde::Serializer;

/// Serializes big integers and rationals as decimal strings.
pub fn as_string<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn opt_as_string<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}
