//! Constructions on top of the interpreter: Kleene's fixed point, the quine,
//! the diagonal refutation of a halting decider, Rice's theorem and the
//! fuel-bounded halting table.

use super::eval::{eval, Outcome};
use super::expr::{encode, Expr, ProgramIndex};
use super::smn::smn_meta;
use crate::instances::DescribesMatrix;
use crate::pairing::Nat;
use serde::Serialize;

/// `Run(Var 1, Var 1)`: applied to its own code it never halts.
pub const OMEGA: u64 = 2208;

/// `Var 1`, the projection `(y, x) ↦ y` when read as a binary body.
pub const PROJECTION: u64 = 10;

/// `Smn(Const 10, Var 1)`: maps `y` to the index of the constant program `y`.
pub const QUINE_TRANSFORMER: u64 = 62269;

/// Extra node visits `g` spends around its simulated call of the candidate
/// before reaching the `Const 1` branch.
pub const GUARD_OVERHEAD: u64 = 7;

/// Intermediate indices of the fixed-point construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KleeneConstruction {
    /// The transformer.
    pub h: ProgramIndex,
    /// Binary `d(m, x) = φ_{h(φ_m(m))}(x)`.
    pub d: ProgramIndex,
    /// Unary `t(m) = smn(d, m)`.
    pub t: ProgramIndex,
    /// `φ_t(t)`, the fixed point.
    pub n0: ProgramIndex,
}

/// Builds `n0` with `φ_{n0} = φ_{h(n0)}` whenever `h` is total.
pub fn kleene_construction(h: &ProgramIndex) -> KleeneConstruction {
    let d_body = Expr::run(
        Expr::run(
            Expr::constant(h.0.clone()),
            Expr::run(Expr::var(1), Expr::var(1)),
        ),
        Expr::var(2),
    );
    let d = encode(&d_body);
    let t = encode(&Expr::smn(Expr::constant(d.clone()), Expr::var(1)));
    let n0 = smn_meta(&d, &t);
    KleeneConstruction {
        h: h.clone(),
        d: ProgramIndex(d),
        t: ProgramIndex(t),
        n0,
    }
}

pub fn recursion_fixed_point(h: &ProgramIndex) -> ProgramIndex {
    kleene_construction(h).n0
}

/// A program that prints its own index on every input.
pub fn quine() -> ProgramIndex {
    recursion_fixed_point(&ProgramIndex::from(QUINE_TRANSFORMER))
}

/// Two outcomes describe the same partial-function value: equal values, or
/// both undefined.
pub fn outcomes_agree(a: &Outcome, b: &Outcome) -> bool {
    match (a, b) {
        (Outcome::Value(x), Outcome::Value(y)) => x == y,
        (Outcome::Value(_), _) | (_, Outcome::Value(_)) => false,
        _ => true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sample {
    #[serde(serialize_with = "crate::report::nat_string")]
    pub input: Nat,
    pub fixed_point: Outcome,
    pub transformed: Outcome,
    pub fuel: u64,
}

/// Bounded evidence that `φ_{n0}` and `φ_{h(n0)}` are the same function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointCheck {
    pub h_of_n0: Outcome,
    pub samples: Vec<Sample>,
    pub agrees: bool,
}

/// Compares `φ_{n0}(i)` with `φ_{h(n0)}(i)` on each input, first at `fuel`
/// and, for any disagreement, again at `retry_fuel`. `n0` spends a bounded
/// amount of extra fuel computing `h(n0)`, so a single budget can cut one
/// side off while the other finishes.
pub fn check_fixed_point(
    h: &ProgramIndex,
    n0: &ProgramIndex,
    inputs: &[Nat],
    fuel: u64,
    retry_fuel: u64,
) -> FixedPointCheck {
    let h_of_n0 = eval(h, std::slice::from_ref(&n0.0), retry_fuel);
    let transformed = h_of_n0.value().cloned().map(ProgramIndex);
    let run_pair = |x: &Nat, budget: u64| {
        let direct = eval(n0, std::slice::from_ref(x), budget);
        let via = match &transformed {
            Some(p) => eval(p, std::slice::from_ref(x), budget),
            None => h_of_n0.clone(),
        };
        (direct, via)
    };
    let samples: Vec<Sample> = inputs
        .iter()
        .map(|x| {
            let (mut direct, mut via) = run_pair(x, fuel);
            let mut used = fuel;
            if !outcomes_agree(&direct, &via) && retry_fuel > fuel {
                (direct, via) = run_pair(x, retry_fuel);
                used = retry_fuel;
            }
            Sample {
                input: x.clone(),
                fixed_point: direct,
                transformed: via,
                fuel: used,
            }
        })
        .collect();
    let agrees = transformed.is_some()
        && samples
            .iter()
            .all(|s| outcomes_agree(&s.fixed_point, &s.transformed));
    FixedPointCheck {
        h_of_n0,
        samples,
        agrees,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HaltingVerdict {
    /// The candidate said `g(⌜g⌝)` halts; `g` then ran for the whole budget.
    SaidHaltButDiverged { fuel: u64 },
    /// The candidate said `g(⌜g⌝)` diverges; `g` returned 1.
    SaidDivergeButHalted,
    /// The candidate gave no answer on `(⌜g⌝, ⌜g⌝)` within the budget.
    CandidateNotTotal,
}

/// Why `candidate` is not a total halting decider.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefutationWitness {
    pub candidate: ProgramIndex,
    pub g_index: ProgramIndex,
    pub candidate_answer: Outcome,
    pub g_run: Outcome,
    pub candidate_fuel: u64,
    pub g_fuel: u64,
    pub verdict: HaltingVerdict,
}

impl RefutationWitness {
    /// The verdict follows from the two recorded outcomes.
    pub fn is_consistent(&self) -> bool {
        match (&self.candidate_answer, &self.g_run, self.verdict) {
            (
                Outcome::Value(v),
                Outcome::Diverged,
                HaltingVerdict::SaidHaltButDiverged { fuel },
            ) => *v != Nat::from(0u32) && fuel == self.g_fuel,
            (Outcome::Value(v), Outcome::Value(r), HaltingVerdict::SaidDivergeButHalted) => {
                *v == Nat::from(0u32) && *r == Nat::from(1u32)
            }
            (Outcome::Diverged | Outcome::Stuck, _, HaltingVerdict::CandidateNotTotal) => true,
            _ => false,
        }
    }
}

/// The diagonal program against `candidate`:
/// `g(x) = if candidate(x, x) == 0 then 1 else Ω`.
pub fn halting_diagonal(candidate: &ProgramIndex) -> Expr {
    Expr::if_zero(
        Expr::run(
            Expr::smn(Expr::constant(candidate.0.clone()), Expr::var(1)),
            Expr::var(1),
        ),
        Expr::constant(1u32),
        Expr::run(Expr::constant(OMEGA), Expr::constant(OMEGA)),
    )
}

/// Runs `candidate` (binary, read as "does program n halt on m") on
/// `(⌜g⌝, ⌜g⌝)` and `g` on `⌜g⌝`. Any non-zero answer counts as "halts".
///
/// `g` gets `fuel + GUARD_OVERHEAD`, so whenever the candidate answers
/// within `fuel`, `g` can replay that answer and finish.
pub fn refute_halting(candidate: &ProgramIndex, fuel: u64) -> RefutationWitness {
    let g_index = ProgramIndex::of(&halting_diagonal(candidate));
    let c = g_index.0.clone();
    let candidate_answer = eval(candidate, &[c.clone(), c.clone()], fuel);
    let g_fuel = fuel.saturating_add(GUARD_OVERHEAD);
    let g_run = eval(&g_index, &[c], g_fuel);
    let verdict = match (&candidate_answer, &g_run) {
        (Outcome::Value(v), _) if *v == Nat::from(0u32) => HaltingVerdict::SaidDivergeButHalted,
        (Outcome::Value(_), _) => HaltingVerdict::SaidHaltButDiverged { fuel: g_fuel },
        _ => HaltingVerdict::CandidateNotTotal,
    };
    RefutationWitness {
        candidate: candidate.clone(),
        g_index,
        candidate_answer,
        g_run,
        candidate_fuel: fuel,
        g_fuel,
        verdict,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RiceVerdict {
    /// Decider says `n0 ∈ A`, yet `φ_{n0}` behaves like `b ∉ A`.
    ClaimsMember,
    /// Decider says `n0 ∉ A`, yet `φ_{n0}` behaves like `a ∈ A`.
    ClaimsNonMember,
    /// Decider gave no answer on `n0`.
    DeciderNotTotal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RiceReport {
    pub decider: ProgramIndex,
    pub a: ProgramIndex,
    pub b: ProgramIndex,
    pub h: ProgramIndex,
    pub n0: ProgramIndex,
    pub decider_on_n0: Outcome,
    pub h_of_n0: Outcome,
    pub samples: Vec<Sample>,
    pub verdict: RiceVerdict,
    /// `φ_{n0}` matched `φ_{h(n0)}` on every sample.
    pub agrees: bool,
}

impl RiceReport {
    /// The contradiction is exhibited: a definite answer, `h(n0)` the
    /// opposite program, and matching samples.
    pub fn exhibits_contradiction(&self) -> bool {
        let expected = match self.verdict {
            RiceVerdict::ClaimsMember => &self.b,
            RiceVerdict::ClaimsNonMember => &self.a,
            RiceVerdict::DeciderNotTotal => return false,
        };
        self.h_of_n0.value() == Some(&expected.0) && self.agrees
    }
}

pub const RICE_SAMPLES: u64 = 4;

/// Assumes `decider` decides `A = {x | φ_x ∈ 𝒜}` with `a ∈ A`, `b ∉ A`, and
/// builds `h(x) = a if x ∉ A else b` and its fixed point `n0`.
pub fn rice_contradiction(
    decider: &ProgramIndex,
    a: &ProgramIndex,
    b: &ProgramIndex,
    fuel: u64,
) -> RiceReport {
    let h_body = Expr::if_zero(
        Expr::run(Expr::constant(decider.0.clone()), Expr::var(1)),
        Expr::constant(a.0.clone()),
        Expr::constant(b.0.clone()),
    );
    let h = ProgramIndex::of(&h_body);
    let n0 = recursion_fixed_point(&h);
    let decider_on_n0 = eval(decider, std::slice::from_ref(&n0.0), fuel);
    let verdict = match &decider_on_n0 {
        Outcome::Value(v) if *v == Nat::from(0u32) => RiceVerdict::ClaimsNonMember,
        Outcome::Value(_) => RiceVerdict::ClaimsMember,
        _ => RiceVerdict::DeciderNotTotal,
    };
    let inputs: Vec<Nat> = (0..RICE_SAMPLES).map(Nat::from).collect();
    let check = check_fixed_point(&h, &n0, &inputs, fuel, fuel.saturating_mul(10));
    RiceReport {
        decider: decider.clone(),
        a: a.clone(),
        b: b.clone(),
        h,
        n0,
        decider_on_n0,
        h_of_n0: check.h_of_n0,
        samples: check.samples,
        verdict,
        agrees: check.agrees,
    }
}

pub fn halts_within(program: u64, input: u64, fuel: u64) -> bool {
    eval(&ProgramIndex::from(program), &[Nat::from(input)], fuel).is_value()
}

/// `rel[i][j] = 1` iff program `j` reaches a value on input `i` within
/// `fuel`. Column `j` is a finite under-approximation of the halting set
/// `W_j`.
pub fn bounded_halting_matrix(n: usize, fuel: u64) -> DescribesMatrix {
    assert!(n >= 1, "bounded_halting_matrix needs n >= 1");
    let labels = (0..n).map(|j| j.to_string()).collect();
    let rel = (0..n as u64)
        .map(|i| (0..n as u64).map(|j| halts_within(j, i, fuel)).collect())
        .collect();
    DescribesMatrix::new(labels, rel).expect("square by construction")
}
