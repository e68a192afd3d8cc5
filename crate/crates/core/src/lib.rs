//! Diagonal arguments and fixed points, executable.
//!
//! - [`diagonal`]: finite Cantor and Diagonal theorems with checkable
//!   certificates.
//! - [`instances`]: the classical paradoxes as concrete tables.
//! - [`universe`]: a small programming language with Gödel numbering,
//!   S-m-n, Kleene's recursion theorem, a quine, and the halting and Rice
//!   refutations.
//! - [`formal`]: formulas, their Gödel numbers, and the diagonalization
//!   lemma with syntactic certificates.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod diagonal;
pub mod formal;
pub mod instances;
pub mod matrix_file;
pub mod pairing;
pub mod report;
pub mod sexpr;
pub mod universe;
