//! Serialization helpers shared by the certificate types.

use crate::pairing::Nat;
use serde::Serializer;

/// Naturals go out as decimal strings; they routinely exceed any JSON
/// number type.
pub fn nat_string<S: Serializer>(n: &Nat, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(n)
}

pub fn opt_nat_string<S: Serializer>(n: &Option<Nat>, s: S) -> Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.collect_str(n),
        None => s.serialize_none(),
    }
}

/// Serializes through `Display`, e.g. formulas in their text notation.
pub fn display_string<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
