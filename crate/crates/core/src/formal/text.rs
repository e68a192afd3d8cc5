//! Prefix notation for formulas, e.g. `(forall y (not (Prov y x)))`.
//!
//! Connectives are `not and or imp iff forall exists lt unq`; term operators
//! are `diag` and `neg`. Predicate symbols come from the fixed table or are
//! written `S<code>`; variables are `x y z w m u` or `v<code>`.

use super::syntax::{Formula, Symbol, Term, Var};
use crate::pairing::Nat;
use crate::sexpr::{self, ParseError, Sexp};
use std::fmt;

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Num(n) => write!(f, "{n}"),
            Term::Diag(t) => write!(f, "(diag {t})"),
            Term::Neg(t) => write!(f, "(neg {t})"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Pred(s, ts) => {
                write!(f, "({s}")?;
                for t in ts {
                    write!(f, " {t}")?;
                }
                f.write_str(")")
            }
            Formula::Less(a, b) => write!(f, "(lt {a} {b})"),
            Formula::Not(g) => write!(f, "(not {g})"),
            Formula::And(a, b) => write!(f, "(and {a} {b})"),
            Formula::Or(a, b) => write!(f, "(or {a} {b})"),
            Formula::Imp(a, b) => write!(f, "(imp {a} {b})"),
            Formula::Iff(a, b) => write!(f, "(iff {a} {b})"),
            Formula::ForAll(v, g) => write!(f, "(forall {v} {g})"),
            Formula::Exists(v, g) => write!(f, "(exists {v} {g})"),
            Formula::Unquote(t) => write!(f, "(unq {t})"),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    formula(&sexpr::parse(text)?)
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    term(&sexpr::parse(text)?)
}

fn arity_error(head: &str, want: usize, got: usize, pos: usize) -> ParseError {
    ParseError::new(pos, format!("`{head}` takes {want} argument(s), got {got}"))
}

fn term(s: &Sexp) -> Result<Term, ParseError> {
    match s {
        Sexp::Atom { text, pos } => {
            if text.bytes().all(|b| b.is_ascii_digit()) {
                return Ok(Term::Num(text.parse::<Nat>().expect("digits")));
            }
            Var::named(text)
                .map(Term::Var)
                .ok_or_else(|| ParseError::new(*pos, format!("unknown variable `{text}`")))
        }
        Sexp::List { items, pos } => {
            let Some((
                Sexp::Atom {
                    text: head,
                    pos: head_pos,
                },
                args,
            )) = items.split_first()
            else {
                return Err(ParseError::new(*pos, "expected a term operator"));
            };
            let build: fn(Term) -> Term = match head.as_str() {
                "diag" => Term::diag,
                "neg" => Term::neg,
                other => {
                    return Err(ParseError::new(
                        *head_pos,
                        format!("unknown term operator `{other}`"),
                    ))
                }
            };
            match args {
                [a] => Ok(build(term(a)?)),
                _ => Err(arity_error(head, 1, args.len(), *pos)),
            }
        }
    }
}

fn variable(s: &Sexp) -> Result<Var, ParseError> {
    match s {
        Sexp::Atom { text, pos } => Var::named(text)
            .ok_or_else(|| ParseError::new(*pos, format!("expected a variable, found `{text}`"))),
        Sexp::List { pos, .. } => Err(ParseError::new(*pos, "expected a variable")),
    }
}

fn formula(s: &Sexp) -> Result<Formula, ParseError> {
    let (head, head_pos, args, pos) = match s {
        Sexp::List { items, pos } => match items.split_first() {
            Some((Sexp::Atom { text, pos: hp }, args)) => (text.as_str(), *hp, args, *pos),
            _ => {
                return Err(ParseError::new(
                    *pos,
                    "expected a connective or predicate symbol",
                ))
            }
        },
        Sexp::Atom { text, pos } => {
            return Err(ParseError::new(
                *pos,
                format!("expected a formula, found `{text}`"),
            ))
        }
    };
    let want = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(arity_error(head, n, args.len(), pos))
        }
    };
    let binary = |build: fn(Formula, Formula) -> Formula| -> Result<Formula, ParseError> {
        want(2)?;
        Ok(build(formula(&args[0])?, formula(&args[1])?))
    };
    match head {
        "not" => {
            want(1)?;
            Ok(Formula::not(formula(&args[0])?))
        }
        "and" => binary(Formula::and),
        "or" => binary(Formula::or),
        "imp" => binary(Formula::imp),
        "iff" => binary(Formula::iff),
        "forall" | "exists" => {
            want(2)?;
            let v = variable(&args[0])?;
            let body = formula(&args[1])?;
            Ok(if head == "forall" {
                Formula::forall(v, body)
            } else {
                Formula::exists(v, body)
            })
        }
        "lt" => {
            want(2)?;
            Ok(Formula::less(term(&args[0])?, term(&args[1])?))
        }
        "unq" => {
            want(1)?;
            Ok(Formula::unquote(term(&args[0])?))
        }
        name => {
            let sym = Symbol::named(name).ok_or_else(|| {
                ParseError::new(head_pos, format!("unknown predicate symbol `{name}`"))
            })?;
            let terms = args.iter().map(term).collect::<Result<_, _>>()?;
            Ok(Formula::Pred(sym, terms))
        }
    }
}
