//! Cantor pairing on arbitrary-precision naturals.
//!
//! Both Gödel numberings in this crate (programs and formulas) are built on
//! `pair`/`unpair`, so every natural decodes to exactly one syntax tree.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Natural numbers. Program indices, formula codes and runtime values all
/// live here; the constructions routinely produce numbers with hundreds of
/// digits, so there is no fixed-width fallback.
pub type Nat = BigUint;

/// `pair(a, b) = (a + b)(a + b + 1) / 2 + b`.
pub fn pair(a: &Nat, b: &Nat) -> Nat {
    let s = a + b;
    let tri = (&s * (&s + 1u32)) >> 1;
    tri + b
}

/// Two-sided inverse of [`pair`].
pub fn unpair(z: &Nat) -> (Nat, Nat) {
    // w = floor((sqrt(8z + 1) - 1) / 2) is the index of the anti-diagonal.
    let disc: Nat = (z << 3) + 1u32;
    let w: Nat = (disc.sqrt() - 1u32) >> 1;
    let tri = (&w * (&w + 1u32)) >> 1;
    let b = z - tri;
    let a = w - &b;
    (a, b)
}

/// Encodes a finite sequence: `[]` is 0, `x :: rest` is `pair(x, code(rest)) + 1`.
pub fn encode_list<'a, I>(items: I) -> Nat
where
    I: IntoIterator<Item = &'a Nat>,
    I::IntoIter: DoubleEndedIterator,
{
    items
        .into_iter()
        .rev()
        .fold(Nat::zero(), |acc, x| pair(x, &acc) + 1u32)
}

/// Inverse of [`encode_list`]; total on all naturals.
pub fn decode_list(code: &Nat) -> Vec<Nat> {
    let mut out = Vec::new();
    let mut rest = code.clone();
    while !rest.is_zero() {
        let (head, tail) = unpair(&(rest - Nat::one()));
        out.push(head);
        rest = tail;
    }
    out
}

/// Splits `code` into `(code / base, code % base)`.
pub(crate) fn split_tag(code: &Nat, base: u32) -> (Nat, u32) {
    let payload = code / base;
    let tag = code % base;
    let tag = tag.to_u32_digits().first().copied().unwrap_or(0);
    (payload, tag)
}

pub(crate) fn join_tag(payload: &Nat, tag: u32, base: u32) -> Nat {
    payload * base + tag
}
