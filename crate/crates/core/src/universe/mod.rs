//! A toy computable universe.
//!
//! Programs are unary bodies over a small first-order language; every
//! natural number is the Gödel number of exactly one body, so `φ_n` is
//! defined for every `n`. `Run` (universal application) and `Smn`
//! (specialization) are primitives, which is what makes the recursion
//! theorem a three-line construction here.

mod eval;
mod expr;
mod kleene;
mod notation;
mod smn;

pub use eval::{eval, eval_expr, eval_traced, Evaluation, Outcome};
pub use expr::{decode, encode, Expr, ProgramIndex};
pub use kleene::{
    bounded_halting_matrix, check_fixed_point, halting_diagonal, halts_within, kleene_construction,
    outcomes_agree, quine, recursion_fixed_point, refute_halting, rice_contradiction,
    FixedPointCheck, HaltingVerdict, KleeneConstruction, RefutationWitness, RiceReport,
    RiceVerdict, Sample, GUARD_OVERHEAD, OMEGA, PROJECTION, QUINE_TRANSFORMER, RICE_SAMPLES,
};
pub use notation::parse_program;
pub use smn::{smn_meta, specialize};
