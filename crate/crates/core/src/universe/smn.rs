//! Program specialization.

use super::expr::{decode, encode, Expr, ProgramIndex};
use crate::pairing::Nat;
use num_traits::{One, Zero};
use std::rc::Rc;

/// Fixes the first argument of `body` to `y`: `Var(1)` becomes `Const(y)`
/// and every `Var(k)` with `k ≥ 2` shifts down to `Var(k - 1)`.
///
/// The language has no binders, so this is plain structural replacement.
/// Node count is preserved, which makes the specialized program take exactly
/// as much fuel as the original on the extended argument list.
pub fn specialize(body: &Expr, y: &Nat) -> Expr {
    let go = |e: &Rc<Expr>| Rc::new(specialize(e, y));
    match body {
        Expr::Var(i) if i.is_one() => Expr::Const(y.clone()),
        Expr::Var(i) if i.is_zero() => Expr::Var(i.clone()),
        Expr::Var(i) => Expr::Var(i - Nat::one()),
        Expr::Const(n) => Expr::Const(n.clone()),
        Expr::Succ(e) => Expr::Succ(go(e)),
        Expr::Pred(e) => Expr::Pred(go(e)),
        Expr::Fst(e) => Expr::Fst(go(e)),
        Expr::Snd(e) => Expr::Snd(go(e)),
        Expr::IfZero(c, t, e) => Expr::IfZero(go(c), go(t), go(e)),
        Expr::Pair(a, b) => Expr::Pair(go(a), go(b)),
        Expr::Run(a, b) => Expr::Run(go(a), go(b)),
        Expr::Smn(a, b) => Expr::Smn(go(a), go(b)),
    }
}

/// The S-m-n function on indices: the program computing `x ↦ φ_p(y, x)`.
pub fn smn_meta(p: &Nat, y: &Nat) -> ProgramIndex {
    ProgramIndex(encode(&specialize(&decode(p), y)))
}
