//! Prefix notation for program bodies:
//! `(ifz (run p x) 1 (run 2208 2208))`, numerals for `Const`, `%1 %2` for
//! `Var`, and `succ pred ifz pair fst snd run smn` as heads.

use super::expr::Expr;
use crate::pairing::Nat;
use crate::sexpr::{self, ParseError, Sexp};
use std::fmt;
use std::rc::Rc;

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(i) => write!(f, "%{i}"),
            Expr::Const(n) => write!(f, "{n}"),
            Expr::Succ(e) => write!(f, "(succ {e})"),
            Expr::Pred(e) => write!(f, "(pred {e})"),
            Expr::Fst(e) => write!(f, "(fst {e})"),
            Expr::Snd(e) => write!(f, "(snd {e})"),
            Expr::IfZero(c, t, e) => write!(f, "(ifz {c} {t} {e})"),
            Expr::Pair(a, b) => write!(f, "(pair {a} {b})"),
            Expr::Run(a, b) => write!(f, "(run {a} {b})"),
            Expr::Smn(a, b) => write!(f, "(smn {a} {b})"),
        }
    }
}

pub fn parse_program(text: &str) -> Result<Expr, ParseError> {
    from_sexp(&sexpr::parse(text)?)
}

fn numeral(text: &str, pos: usize) -> Result<Nat, ParseError> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(
            pos,
            format!("expected a numeral, found `{text}`"),
        ));
    }
    Ok(text.parse().expect("digits"))
}

fn from_sexp(s: &Sexp) -> Result<Expr, ParseError> {
    match s {
        Sexp::Atom { text, pos } => match text.strip_prefix('%') {
            Some(idx) => Ok(Expr::Var(numeral(idx, pos + 1)?)),
            None => Ok(Expr::Const(numeral(text, *pos)?)),
        },
        Sexp::List { items, pos } => {
            let Some((
                Sexp::Atom {
                    text: head,
                    pos: head_pos,
                },
                args,
            )) = items.split_first()
            else {
                return Err(ParseError::new(*pos, "expected an operator"));
            };
            let arity = match head.as_str() {
                "succ" | "pred" | "fst" | "snd" => 1,
                "pair" | "run" | "smn" => 2,
                "ifz" => 3,
                other => {
                    return Err(ParseError::new(
                        *head_pos,
                        format!("unknown operator `{other}`"),
                    ))
                }
            };
            if args.len() != arity {
                return Err(ParseError::new(
                    *pos,
                    format!("`{head}` takes {arity} argument(s), got {}", args.len()),
                ));
            }
            let a: Vec<Rc<Expr>> = args
                .iter()
                .map(|a| from_sexp(a).map(Rc::new))
                .collect::<Result<_, _>>()?;
            let e = match head.as_str() {
                "succ" => Expr::Succ(a[0].clone()),
                "pred" => Expr::Pred(a[0].clone()),
                "fst" => Expr::Fst(a[0].clone()),
                "snd" => Expr::Snd(a[0].clone()),
                "pair" => Expr::Pair(a[0].clone(), a[1].clone()),
                "run" => Expr::Run(a[0].clone(), a[1].clone()),
                "smn" => Expr::Smn(a[0].clone(), a[1].clone()),
                "ifz" => Expr::IfZero(a[0].clone(), a[1].clone(), a[2].clone()),
                _ => unreachable!(),
            };
            Ok(e)
        }
    }
}
