//! First-order formulas over a fixed signature, their Gödel numbers, and the
//! diagonalization lemma.
//!
//! The only arithmetic the engine needs is the meta-level function
//! `diag(n)`, represented in the object language by the term `D(t)`. A fixed
//! point is certified syntactically: reducing `D` and `Neg` redexes in `C`
//! yields exactly `E(⌜C⌝)`.

mod lemma;
mod numbering;
mod syntax;
mod text;
mod transform;

pub use lemma::{
    curry_unfolding, diagonal_sentence, named_sentence, LemmaCertificate, NamedSentence,
};
pub use numbering::{formula_of, goedel_number, term_number, term_of};
pub use syntax::{Formula, Symbol, Term, Var, SYMBOLS, VARIABLE_NAMES};
pub use text::{parse_formula, parse_term};
pub use transform::{diag_meta, reduce_diag, substitute, unquote_step};

use crate::sexpr::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormalError {
    #[error("cannot substitute the open term `{0}`")]
    OpenTerm(String),
    #[error("`{formula}` must have exactly one free variable, found {found:?}")]
    FreeVariables { formula: String, found: Vec<String> },
    #[error("cannot reduce `{redex}`: {reason}")]
    Redex {
        redex: String,
        reason: Box<FormalError>,
    },
    #[error("{0}")]
    Precondition(String),
    #[error("malformed formula {0}")]
    Parse(#[from] ParseError),
}
