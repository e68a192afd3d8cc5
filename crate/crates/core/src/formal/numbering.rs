//! Gödel numbering of terms and formulas. Both maps are bijections onto the
//! naturals, so every number is the code of exactly one term and of exactly
//! one formula.

use super::syntax::{Formula, Symbol, Term, Var};
use crate::pairing::{decode_list, encode_list, join_tag, pair, split_tag, unpair, Nat};

const TERM_TAGS: u32 = 4;
const FORMULA_TAGS: u32 = 10;

/// `4 * payload + tag`: `Var` 0 (variable code), `Num` 1 (the numeral),
/// `Diag` 2 and `Neg` 3 (argument code).
pub fn term_number(t: &Term) -> Nat {
    match t {
        Term::Var(v) => join_tag(&v.0, 0, TERM_TAGS),
        Term::Num(n) => join_tag(n, 1, TERM_TAGS),
        Term::Diag(a) => join_tag(&term_number(a), 2, TERM_TAGS),
        Term::Neg(a) => join_tag(&term_number(a), 3, TERM_TAGS),
    }
}

pub fn term_of(code: &Nat) -> Term {
    let (payload, tag) = split_tag(code, TERM_TAGS);
    match tag {
        0 => Term::Var(Var(payload)),
        1 => Term::Num(payload),
        2 => Term::diag(term_of(&payload)),
        3 => Term::neg(term_of(&payload)),
        _ => unreachable!("tag is a residue mod 4"),
    }
}

/// `10 * payload + tag`.
///
/// | tag | formula | payload |
/// |-----|---------|---------|
/// | 0 | `Pred(s, ts)` | `pair(s, list(ts))` |
/// | 1 | `Less(a, b)` | `pair(a, b)` |
/// | 2 | `Not(f)` | `f` |
/// | 3..6 | `And Or Imp Iff` | `pair(a, b)` |
/// | 7, 8 | `ForAll(v, f)`, `Exists(v, f)` | `pair(v, f)` |
/// | 9 | `Unquote(t)` | `t` |
pub fn goedel_number(f: &Formula) -> Nat {
    let (payload, tag) = match f {
        Formula::Pred(s, ts) => {
            let codes: Vec<Nat> = ts.iter().map(term_number).collect();
            (pair(&s.0, &encode_list(&codes)), 0)
        }
        Formula::Less(a, b) => (pair(&term_number(a), &term_number(b)), 1),
        Formula::Not(g) => (goedel_number(g), 2),
        Formula::And(a, b) => (pair(&goedel_number(a), &goedel_number(b)), 3),
        Formula::Or(a, b) => (pair(&goedel_number(a), &goedel_number(b)), 4),
        Formula::Imp(a, b) => (pair(&goedel_number(a), &goedel_number(b)), 5),
        Formula::Iff(a, b) => (pair(&goedel_number(a), &goedel_number(b)), 6),
        Formula::ForAll(v, g) => (pair(&v.0, &goedel_number(g)), 7),
        Formula::Exists(v, g) => (pair(&v.0, &goedel_number(g)), 8),
        Formula::Unquote(t) => (term_number(t), 9),
    };
    join_tag(&payload, tag, FORMULA_TAGS)
}

/// Inverse of [`goedel_number`].
pub fn formula_of(code: &Nat) -> Formula {
    let (payload, tag) = split_tag(code, FORMULA_TAGS);
    let two = |p: &Nat| {
        let (a, b) = unpair(p);
        (formula_of(&a), formula_of(&b))
    };
    match tag {
        0 => {
            let (s, list) = unpair(&payload);
            let terms = decode_list(&list).iter().map(term_of).collect();
            Formula::Pred(Symbol(s), terms)
        }
        1 => {
            let (a, b) = unpair(&payload);
            Formula::less(term_of(&a), term_of(&b))
        }
        2 => Formula::not(formula_of(&payload)),
        3..=6 => {
            let (a, b) = two(&payload);
            match tag {
                3 => Formula::and(a, b),
                4 => Formula::or(a, b),
                5 => Formula::imp(a, b),
                _ => Formula::iff(a, b),
            }
        }
        7 | 8 => {
            let (v, body) = unpair(&payload);
            let body = formula_of(&body);
            if tag == 7 {
                Formula::forall(Var(v), body)
            } else {
                Formula::exists(Var(v), body)
            }
        }
        9 => Formula::unquote(term_of(&payload)),
        _ => unreachable!("tag is a residue mod 10"),
    }
}
