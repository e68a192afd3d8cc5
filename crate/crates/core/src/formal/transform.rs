//! Substitution and the meta-level reductions of `Diag`, `Neg` and `Unquote`.

use super::numbering::{formula_of, goedel_number};
use super::syntax::{Formula, Term, Var};
use super::FormalError;
use crate::pairing::Nat;

/// Replaces the free occurrences of `v` in `f` by the closed term `t`.
/// Occurrences under a binder for `v` are left alone.
pub fn substitute(f: &Formula, v: &Var, t: &Term) -> Result<Formula, FormalError> {
    if !t.is_closed() {
        return Err(FormalError::OpenTerm(t.to_string()));
    }
    Ok(replace_free(f, v, t))
}

/// Substitution without the closedness check. Callers guarantee that no free
/// variable of `t` can be captured, e.g. because `v` is its only variable.
pub(crate) fn replace_free(f: &Formula, v: &Var, t: &Term) -> Formula {
    let term = |s: &Term| replace_in_term(s, v, t);
    let go = |g: &Formula| replace_free(g, v, t);
    match f {
        Formula::Pred(s, ts) => Formula::Pred(s.clone(), ts.iter().map(term).collect()),
        Formula::Less(a, b) => Formula::less(term(a), term(b)),
        Formula::Unquote(a) => Formula::unquote(term(a)),
        Formula::Not(g) => Formula::not(go(g)),
        Formula::And(a, b) => Formula::and(go(a), go(b)),
        Formula::Or(a, b) => Formula::or(go(a), go(b)),
        Formula::Imp(a, b) => Formula::imp(go(a), go(b)),
        Formula::Iff(a, b) => Formula::iff(go(a), go(b)),
        Formula::ForAll(w, g) if w == v => Formula::ForAll(w.clone(), g.clone()),
        Formula::Exists(w, g) if w == v => Formula::Exists(w.clone(), g.clone()),
        Formula::ForAll(w, g) => Formula::forall(w.clone(), go(g)),
        Formula::Exists(w, g) => Formula::exists(w.clone(), go(g)),
    }
}

fn replace_in_term(s: &Term, v: &Var, t: &Term) -> Term {
    match s {
        Term::Var(w) if w == v => t.clone(),
        Term::Var(_) | Term::Num(_) => s.clone(),
        Term::Diag(a) => Term::diag(replace_in_term(a, v, t)),
        Term::Neg(a) => Term::neg(replace_in_term(a, v, t)),
    }
}

/// `diag(n)`: the code of the formula coded by `n` with its single free
/// variable replaced by the numeral `n`.
pub fn diag_meta(n: &Nat) -> Result<Nat, FormalError> {
    let f = formula_of(n);
    let free = f.free_vars();
    let mut vars = free.iter();
    match (vars.next(), vars.next()) {
        (Some(v), None) => Ok(goedel_number(&replace_free(&f, v, &Term::Num(n.clone())))),
        _ => Err(FormalError::FreeVariables {
            formula: f.to_string(),
            found: free.iter().map(|v| v.to_string()).collect(),
        }),
    }
}

/// Rewrites every `Diag(Num k)` to `Num(diag(k))` and every `Neg(Num k)` to
/// the code of the negation of the formula coded by `k`, innermost first.
/// `Unquote` is left in place; terms inside it are reduced.
pub fn reduce_diag(f: &Formula) -> Result<Formula, FormalError> {
    map_terms(f, &reduce_term)
}

fn reduce_term(t: &Term) -> Result<Term, FormalError> {
    match t {
        Term::Var(_) | Term::Num(_) => Ok(t.clone()),
        Term::Diag(a) => match reduce_term(a)? {
            Term::Num(k) => diag_meta(&k)
                .map(Term::Num)
                .map_err(|e| FormalError::Redex {
                    redex: Term::diag(Term::Num(k)).to_string(),
                    reason: Box::new(e),
                }),
            other => Ok(Term::diag(other)),
        },
        Term::Neg(a) => match reduce_term(a)? {
            Term::Num(k) => Ok(Term::Num(goedel_number(&Formula::not(formula_of(&k))))),
            other => Ok(Term::neg(other)),
        },
    }
}

fn map_terms(
    f: &Formula,
    op: &impl Fn(&Term) -> Result<Term, FormalError>,
) -> Result<Formula, FormalError> {
    let go = |g: &Formula| map_terms(g, op);
    Ok(match f {
        Formula::Pred(s, ts) => {
            Formula::Pred(s.clone(), ts.iter().map(op).collect::<Result<_, _>>()?)
        }
        Formula::Less(a, b) => Formula::less(op(a)?, op(b)?),
        Formula::Unquote(a) => Formula::unquote(op(a)?),
        Formula::Not(g) => Formula::not(go(g)?),
        Formula::And(a, b) => Formula::and(go(a)?, go(b)?),
        Formula::Or(a, b) => Formula::or(go(a)?, go(b)?),
        Formula::Imp(a, b) => Formula::imp(go(a)?, go(b)?),
        Formula::Iff(a, b) => Formula::iff(go(a)?, go(b)?),
        Formula::ForAll(v, g) => Formula::forall(v.clone(), go(g)?),
        Formula::Exists(v, g) => Formula::exists(v.clone(), go(g)?),
    })
}

/// One unfolding: each `Unquote(Num k)` becomes the formula coded by `k`.
/// The inserted formulas are not unfolded further.
pub fn unquote_step(f: &Formula) -> Formula {
    match f {
        Formula::Unquote(Term::Num(k)) => formula_of(k),
        Formula::Pred(..) | Formula::Less(..) | Formula::Unquote(_) => f.clone(),
        Formula::Not(g) => Formula::not(unquote_step(g)),
        Formula::And(a, b) => Formula::and(unquote_step(a), unquote_step(b)),
        Formula::Or(a, b) => Formula::or(unquote_step(a), unquote_step(b)),
        Formula::Imp(a, b) => Formula::imp(unquote_step(a), unquote_step(b)),
        Formula::Iff(a, b) => Formula::iff(unquote_step(a), unquote_step(b)),
        Formula::ForAll(v, g) => Formula::forall(v.clone(), unquote_step(g)),
        Formula::Exists(v, g) => Formula::exists(v.clone(), unquote_step(g)),
    }
}
