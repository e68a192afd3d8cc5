//! The diagonalization lemma as a construction with a checkable certificate.

use super::numbering::goedel_number;
use super::syntax::{Formula, Symbol, Term, Var};
use super::transform::{reduce_diag, replace_free, substitute, unquote_step};
use super::FormalError;
use crate::pairing::Nat;
use crate::report::{display_string, nat_string};
use num_traits::Zero;
use serde::Serialize;

/// Everything needed to re-check `C` against `E(⌜C⌝)` by rewriting alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCertificate {
    #[serde(serialize_with = "display_string")]
    pub e: Formula,
    #[serde(serialize_with = "display_string")]
    pub v: Var,
    /// `E[v := D(v)]`.
    #[serde(serialize_with = "display_string")]
    pub g: Formula,
    #[serde(serialize_with = "nat_string")]
    pub g_number: Nat,
    /// `G[v := ⌜G⌝]`, the fixed point.
    #[serde(serialize_with = "display_string")]
    pub c: Formula,
    #[serde(serialize_with = "nat_string")]
    pub c_number: Nat,
    /// `C` after reducing every `D` and `Neg` redex.
    #[serde(serialize_with = "display_string")]
    pub reduced: Formula,
    /// `E[v := ⌜C⌝]` in normal form.
    #[serde(serialize_with = "display_string")]
    pub target: Formula,
}

impl LemmaCertificate {
    /// The reduced fixed point is literally the normalized target.
    pub fn holds(&self) -> bool {
        self.reduced == self.target
    }

    /// Rebuilds the certificate from `e` and `v` and compares every field.
    pub fn recheck(&self) -> bool {
        match diagonal_sentence(&self.e, &self.v) {
            Ok(fresh) => fresh == *self && fresh.holds(),
            Err(_) => false,
        }
    }

    /// `E` applied to the numeral `⌜C⌝`, before normalization.
    pub fn literal_target(&self) -> Formula {
        replace_free(&self.e, &self.v, &Term::Num(self.c_number.clone()))
    }
}

/// Builds the fixed point `C` of `E` in the variable `v`.
///
/// `E` must have `v` as its only free variable and contain no `D(numeral)`.
pub fn diagonal_sentence(e: &Formula, v: &Var) -> Result<LemmaCertificate, FormalError> {
    let free = e.free_vars();
    if free.len() != 1 || !free.contains(v) {
        return Err(FormalError::Precondition(format!(
            "`{e}` must have exactly the free variable {v}, found {{{}}}",
            free.iter()
                .map(Var::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    if e.any_term(&Term::has_diag_numeral) {
        return Err(FormalError::Precondition(format!(
            "`{e}` already contains a diag redex"
        )));
    }
    // D(v) has only v free, and free occurrences of v are never under a
    // binder for v, so nothing is captured.
    let g = replace_free(e, v, &Term::diag(Term::Var(v.clone())));
    let g_number = goedel_number(&g);
    let c = substitute(&g, v, &Term::Num(g_number.clone()))?;
    let c_number = goedel_number(&c);
    let reduced = reduce_diag(&c)?;
    let target = reduce_diag(&substitute(e, v, &Term::Num(c_number.clone()))?)?;
    Ok(LemmaCertificate {
        e: e.clone(),
        v: v.clone(),
        g,
        g_number,
        c,
        c_number,
        reduced,
        target,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedSentence {
    /// `∀y ¬Prov(y, x)`.
    Goedel,
    /// `∀y (Prov(y, x) → ∃w (w < y ∧ Prov(w, neg x)))`.
    Rosser,
    /// `¬T(x)`.
    Tarski,
    /// `¬∃m (m < n ∧ Prflen(m, x))`, for `n ≥ 1`.
    Parikh(Nat),
    /// `unq(x) → A`, for closed `A`.
    Curry(Formula),
}

impl NamedSentence {
    pub fn name(&self) -> &'static str {
        match self {
            NamedSentence::Goedel => "goedel",
            NamedSentence::Rosser => "rosser",
            NamedSentence::Tarski => "tarski",
            NamedSentence::Parikh(_) => "parikh",
            NamedSentence::Curry(_) => "curry",
        }
    }

    /// The formula `E(x)` whose fixed point is the named sentence.
    pub fn formula(&self) -> Result<Formula, FormalError> {
        let x = || Term::Var(Var::x());
        let y = || Term::Var(Var::y());
        Ok(match self {
            NamedSentence::Goedel => Formula::forall(
                Var::y(),
                Formula::not(Formula::pred(Symbol::prov(), vec![y(), x()])),
            ),
            NamedSentence::Rosser => {
                let w = Term::Var(Var::w());
                Formula::forall(
                    Var::y(),
                    Formula::imp(
                        Formula::pred(Symbol::prov(), vec![y(), x()]),
                        Formula::exists(
                            Var::w(),
                            Formula::and(
                                Formula::less(w.clone(), y()),
                                Formula::pred(Symbol::prov(), vec![w, Term::neg(x())]),
                            ),
                        ),
                    ),
                )
            }
            NamedSentence::Tarski => Formula::not(Formula::pred(Symbol::truth(), vec![x()])),
            NamedSentence::Parikh(n) => {
                if n.is_zero() {
                    return Err(FormalError::Precondition(
                        "the length bound must be at least 1".into(),
                    ));
                }
                let m = Term::Var(Var::m());
                Formula::not(Formula::exists(
                    Var::m(),
                    Formula::and(
                        Formula::less(m.clone(), Term::Num(n.clone())),
                        Formula::pred(Symbol::prflen(), vec![m, x()]),
                    ),
                ))
            }
            NamedSentence::Curry(a) => {
                if !a.is_closed() {
                    return Err(FormalError::Precondition(format!(
                        "the consequent `{a}` must be closed"
                    )));
                }
                Formula::imp(Formula::unquote(x()), a.clone())
            }
        })
    }
}

pub fn named_sentence(kind: &NamedSentence) -> Result<LemmaCertificate, FormalError> {
    diagonal_sentence(&kind.formula()?, &Var::x())
}

/// For a Curry sentence `C`: one unquote step turns the reduced `C` into
/// `C → A`.
pub fn curry_unfolding(cert: &LemmaCertificate) -> Formula {
    unquote_step(&cert.reduced)
}
