//! Random generators and independent reference implementations shared by the
//! integration tests. Nothing here calls the library's pairing, evaluator or
//! numbering code, so agreement with the library is real evidence.

#![allow(dead_code)]

use lawvere::diagonal::{Carrier, EndoMap, EvalMatrix, Section};
use lawvere::formal::{Formula, Symbol, Term, Var, SYMBOLS};
use lawvere::universe::Expr;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rand = ChaCha8Rng;

pub fn rng(seed: u64) -> Rand {
    Rand::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Matrices

pub fn random_cells(rng: &mut impl Rng, t: usize, s: usize, y: usize) -> Vec<Vec<usize>> {
    (0..t)
        .map(|_| (0..s).map(|_| rng.gen_range(0..y)).collect())
        .collect()
}

pub fn matrix(t: usize, s: usize, y: usize, cells: Vec<Vec<usize>>) -> EvalMatrix {
    EvalMatrix::new(
        Carrier::new(t).unwrap(),
        Carrier::new(s).unwrap(),
        Carrier::new(y).unwrap(),
        cells,
    )
    .unwrap()
}

/// Every map `{0..y} -> {0..y}`, as index sequences.
pub fn all_maps(y: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..y {
        out = out
            .into_iter()
            .flat_map(|m| {
                (0..y).map(move |v| {
                    let mut m = m.clone();
                    m.push(v);
                    m
                })
            })
            .collect();
    }
    out
}

pub fn fixed_point_free_maps(y: usize) -> Vec<EndoMap> {
    all_maps(y)
        .into_iter()
        .filter(|m| m.iter().enumerate().all(|(i, &v)| i != v))
        .map(|m| EndoMap::new(Carrier::new(y).unwrap(), m).unwrap())
        .collect()
}

/// A random onto `β: T -> S` with a right inverse, `|S| <= |T|`.
pub fn random_section(rng: &mut impl Rng, t: usize, s: usize) -> Section {
    let mut rows: Vec<usize> = (0..t).collect();
    rows.shuffle(rng);
    let beta_bar: Vec<usize> = rows[..s].to_vec();
    let mut beta: Vec<usize> = (0..t).map(|_| rng.gen_range(0..s)).collect();
    for (col, &row) in beta_bar.iter().enumerate() {
        beta[row] = col;
    }
    Section::new(t, s, beta, beta_bar).unwrap()
}

/// Brute force: the columns of `cells` equal to `g`.
pub fn columns_equal_to(cells: &[Vec<usize>], g: &[usize]) -> Vec<usize> {
    let cols = cells.first().map_or(0, Vec::len);
    (0..cols)
        .filter(|&s| cells.iter().zip(g).all(|(row, &v)| row[s] == v))
        .collect()
}

// ---------------------------------------------------------------------------
// Reference arithmetic and evaluation

pub fn n(v: u64) -> BigUint {
    BigUint::from(v)
}

pub fn ref_pair(a: &BigUint, b: &BigUint) -> BigUint {
    let s = a + b;
    (&s * (&s + 1u32)) / 2u32 + b
}

pub fn ref_unpair(z: &BigUint) -> (BigUint, BigUint) {
    // w = floor((sqrt(8z + 1) - 1) / 2)
    let w = ((z * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    let b = z - (&w * (&w + 1u32)) / 2u32;
    (w - &b, b)
}

/// Recursive evaluator for `Run`/`Smn`-free bodies. `None` means stuck.
pub fn ref_eval(e: &Expr, args: &[BigUint]) -> Option<BigUint> {
    Some(match e {
        Expr::Var(i) => {
            let i: usize = i.try_into().ok()?;
            args.get(i.checked_sub(1)?)?.clone()
        }
        Expr::Const(c) => c.clone(),
        Expr::Succ(a) => ref_eval(a, args)? + 1u32,
        Expr::Pred(a) => {
            let v = ref_eval(a, args)?;
            if v.is_zero() {
                v
            } else {
                v - BigUint::one()
            }
        }
        Expr::IfZero(c, t, f) => {
            if ref_eval(c, args)?.is_zero() {
                ref_eval(t, args)?
            } else {
                ref_eval(f, args)?
            }
        }
        Expr::Pair(a, b) => ref_pair(&ref_eval(a, args)?, &ref_eval(b, args)?),
        Expr::Fst(a) => ref_unpair(&ref_eval(a, args)?).0,
        Expr::Snd(a) => ref_unpair(&ref_eval(a, args)?).1,
        Expr::Run(..) | Expr::Smn(..) => panic!("reference evaluator is first-order only"),
    })
}

/// Nodes visited by [`ref_eval`], i.e. the fuel a halting run needs.
pub fn ref_cost(e: &Expr, args: &[BigUint]) -> u64 {
    match e {
        Expr::Var(_) | Expr::Const(_) => 1,
        Expr::Succ(a) | Expr::Pred(a) | Expr::Fst(a) | Expr::Snd(a) => 1 + ref_cost(a, args),
        Expr::IfZero(c, t, f) => {
            let branch = if ref_eval(c, args).is_some_and(|v| v.is_zero()) {
                t
            } else {
                f
            };
            1 + ref_cost(c, args) + ref_cost(branch, args)
        }
        Expr::Pair(a, b) => 1 + ref_cost(a, args) + ref_cost(b, args),
        Expr::Run(..) | Expr::Smn(..) => panic!("first-order only"),
    }
}

// ---------------------------------------------------------------------------
// Program generators

/// First-order bodies over `Var 1 ..= Var vars`: total, no `Run`/`Smn`.
pub fn safe_body(rng: &mut impl Rng, depth: u32, vars: u64) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.6) {
            Expr::var(rng.gen_range(1..=vars))
        } else {
            Expr::constant(rng.gen_range(0u32..20))
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..7) {
        0 => Expr::succ(safe_body(rng, d, vars)),
        1 => Expr::pred(safe_body(rng, d, vars)),
        2 => Expr::if_zero(
            safe_body(rng, d, vars),
            safe_body(rng, d, vars),
            safe_body(rng, d, vars),
        ),
        3 => Expr::pair(safe_body(rng, d, vars), safe_body(rng, d, vars)),
        4 => Expr::fst(safe_body(rng, d, vars)),
        5 => Expr::snd(safe_body(rng, d, vars)),
        _ => Expr::var(rng.gen_range(1..=vars)),
    }
}

fn big_leaf(rng: &mut Rand) -> BigUint {
    if rng.gen_bool(0.1) {
        BigUint::from(rng.gen::<u128>()) * BigUint::from(rng.gen::<u64>())
    } else {
        BigUint::from(rng.gen_range(0u32..1000))
    }
}

/// Any body of depth at most `depth`, with occasionally huge leaves.
pub fn any_tree(rng: &mut Rand, depth: u32) -> Expr {
    if depth <= 1 || rng.gen_bool(0.2) {
        return if rng.gen_bool(0.5) {
            Expr::Var(big_leaf(rng))
        } else {
            Expr::Const(big_leaf(rng))
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..8) {
        0 => Expr::succ(any_tree(rng, d)),
        1 => Expr::pred(any_tree(rng, d)),
        2 => Expr::if_zero(any_tree(rng, d), any_tree(rng, d), any_tree(rng, d)),
        3 => Expr::pair(any_tree(rng, d), any_tree(rng, d)),
        4 => Expr::fst(any_tree(rng, d)),
        5 => Expr::snd(any_tree(rng, d)),
        6 => Expr::run(any_tree(rng, d), any_tree(rng, d)),
        _ => Expr::smn(any_tree(rng, d), any_tree(rng, d)),
    }
}

// ---------------------------------------------------------------------------
// Formula generators

fn term_leaf(rng: &mut Rand, vars: &[Var]) -> Term {
    if rng.gen_bool(0.5) {
        Term::Var(vars.choose(rng).unwrap().clone())
    } else {
        Term::num(rng.gen_range(0u32..50))
    }
}

fn random_term(rng: &mut Rand, depth: u32, vars: &[Var]) -> Term {
    if depth == 0 {
        return term_leaf(rng, vars);
    }
    match rng.gen_range(0..6) {
        0 => Term::neg(random_term(rng, depth - 1, vars)),
        // D only ever wraps a variable other than x.
        1 => {
            let others: Vec<&Var> = vars.iter().filter(|v| **v != Var::x()).collect();
            match others.choose(rng) {
                Some(v) => Term::diag(Term::Var((*v).clone())),
                None => term_leaf(rng, vars),
            }
        }
        _ => term_leaf(rng, vars),
    }
}

fn random_atom(rng: &mut Rand, vars: &[Var]) -> Formula {
    match rng.gen_range(0..4) {
        0 => Formula::less(random_term(rng, 2, vars), random_term(rng, 2, vars)),
        1 => Formula::unquote(random_term(rng, 1, vars)),
        _ => {
            let (name, arity) = SYMBOLS[rng.gen_range(0..SYMBOLS.len())];
            let terms = (0..arity).map(|_| random_term(rng, 2, vars)).collect();
            Formula::pred(Symbol::named(name).unwrap(), terms)
        }
    }
}

pub fn random_formula(rng: &mut Rand, depth: u32, vars: &[Var]) -> Formula {
    if depth <= 1 || rng.gen_bool(0.2) {
        return random_atom(rng, vars);
    }
    let d = depth - 1;
    match rng.gen_range(0..8) {
        0 => Formula::not(random_formula(rng, d, vars)),
        1 => Formula::and(random_formula(rng, d, vars), random_formula(rng, d, vars)),
        2 => Formula::or(random_formula(rng, d, vars), random_formula(rng, d, vars)),
        3 => Formula::imp(random_formula(rng, d, vars), random_formula(rng, d, vars)),
        4 => Formula::iff(random_formula(rng, d, vars), random_formula(rng, d, vars)),
        5 => Formula::forall(
            vars.choose(rng).unwrap().clone(),
            random_formula(rng, d, vars),
        ),
        6 => Formula::exists(
            vars.choose(rng).unwrap().clone(),
            random_formula(rng, d, vars),
        ),
        _ => random_atom(rng, vars),
    }
}

/// A random formula of depth at most `depth` whose only free variable is
/// `x`, with no `D(numeral)` and no `D` over a term mentioning `x`.
pub fn random_lemma_input(rng: &mut Rand, depth: u32) -> Formula {
    let vars = [Var::x(), Var::y(), Var::code(2)];
    // Up to two quantifiers and one conjunction are added below.
    let inner_depth = depth.saturating_sub(3).max(1);
    let mut f = random_formula(rng, inner_depth, &vars);
    // Close every variable except x.
    for v in f.free_vars() {
        if v != Var::x() {
            f = if rng.gen_bool(0.5) {
                Formula::forall(v, f)
            } else {
                Formula::exists(v, f)
            };
        }
    }
    if !f.free_vars().contains(&Var::x()) {
        f = Formula::and(Formula::pred(Symbol::p(), vec![Term::Var(Var::x())]), f);
    }
    f
}

/// Some term of `f` contains `Neg`.
pub fn mentions_neg(f: &Formula) -> bool {
    fn term(t: &Term) -> bool {
        match t {
            Term::Neg(_) => true,
            Term::Diag(a) => term(a),
            Term::Var(_) | Term::Num(_) => false,
        }
    }
    f.any_term(&term)
}

/// Independent substitution used as an oracle: replaces free `v` by `t`.
pub fn ref_substitute(f: &Formula, v: &Var, t: &Term) -> Formula {
    fn term(s: &Term, v: &Var, t: &Term) -> Term {
        match s {
            Term::Var(w) if w == v => t.clone(),
            Term::Diag(a) => Term::diag(term(a, v, t)),
            Term::Neg(a) => Term::neg(term(a, v, t)),
            other => other.clone(),
        }
    }
    let go = |g: &Formula| ref_substitute(g, v, t);
    match f {
        Formula::Pred(s, ts) => {
            Formula::Pred(s.clone(), ts.iter().map(|s| term(s, v, t)).collect())
        }
        Formula::Less(a, b) => Formula::less(term(a, v, t), term(b, v, t)),
        Formula::Unquote(a) => Formula::unquote(term(a, v, t)),
        Formula::Not(g) => Formula::not(go(g)),
        Formula::And(a, b) => Formula::and(go(a), go(b)),
        Formula::Or(a, b) => Formula::or(go(a), go(b)),
        Formula::Imp(a, b) => Formula::imp(go(a), go(b)),
        Formula::Iff(a, b) => Formula::iff(go(a), go(b)),
        Formula::ForAll(w, g) => {
            Formula::forall(w.clone(), if w == v { (**g).clone() } else { go(g) })
        }
        Formula::Exists(w, g) => {
            Formula::exists(w.clone(), if w == v { (**g).clone() } else { go(g) })
        }
    }
}

// ---------------------------------------------------------------------------
// Golden CLI reports

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

pub fn golden_cases() -> Vec<GoldenCase> {
    let case = |name, args| GoldenCase { name, args };
    vec![
        case("demo-powerset", &["demo", "powerset"][..]),
        case("demo-russell", &["demo", "russell"]),
        case("demo-grelling", &["demo", "grelling"]),
        case("demo-strong-liar", &["demo", "strong-liar"]),
        case("demo-richard", &["demo", "richard"]),
        case("demo-nonre", &["demo", "nonre"]),
        case("universe-quine", &["universe", "quine"]),
        case(
            "universe-recursion",
            &["universe", "recursion", "--h", "(succ %1)"],
        ),
        case(
            "universe-refute-halt-always-1",
            &["universe", "refute-halt", "--candidate", "11"],
        ),
        case(
            "universe-refute-halt-always-0",
            &["universe", "refute-halt", "--candidate", "1"],
        ),
        case(
            "universe-refute-halt-self-loop",
            &["universe", "refute-halt", "--candidate", "(run %1 %1)"],
        ),
        case(
            "universe-rice",
            &[
                "universe",
                "rice",
                "--decider",
                "11",
                "--a",
                "10",
                "--b",
                "1",
            ],
        ),
        case(
            "universe-halt-matrix",
            &["universe", "halt-matrix", "--n", "8", "--fuel", "100"],
        ),
        case("formal-goedel", &["formal", "goedel"]),
        case("formal-rosser", &["formal", "rosser"]),
        case("formal-tarski", &["formal", "tarski", "--print-number"]),
        case("formal-parikh", &["formal", "parikh", "--n", "100"]),
        case("formal-curry", &["formal", "curry", "--a", "(P 0)"]),
    ]
}

pub fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
}

pub fn run_cli(args: &[&str]) -> std::process::Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_lawvere"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Runs the case and compares stdout with the checked-in report. With
/// `LAWVERE_BLESS=1` the report is written instead.
pub fn check_golden(case: &GoldenCase) -> Result<(), String> {
    let out = run_cli(case.args);
    if out.status.code() != Some(0) {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let path = golden_path(case.name);
    if std::env::var_os("LAWVERE_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &out.stdout).unwrap();
        return Ok(());
    }
    let expected = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != out.stdout {
        return Err(format!("report differs from {}", path.display()));
    }
    Ok(())
}
