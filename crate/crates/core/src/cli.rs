//! Command-line front end. Every command prints one JSON report:
//!
//! ```json
//! {"command": [..], "inputs_digest": "<sha256>", "certificate": {..}, "verified": true}
//! ```
//!
//! Exit status is 0 when the certificate re-verifies, 1 when it does not or
//! the construction does not apply, and 2 for malformed input.

use crate::diagonal::{
    cantor_witness, representing_columns, weak_diagonal_fixed_point, Construction, DiagonalError,
    EvalMatrix, FixedPointWitness, NonRepresentabilityReport,
};
use crate::formal::{self, Formula, LemmaCertificate, NamedSentence};
use crate::instances::{self, demo, DescribesMatrix};
use crate::matrix_file::MatrixFile;
use crate::pairing::Nat;
use crate::universe::{
    self, check_fixed_point, eval_traced, kleene_construction, quine, refute_halting,
    rice_contradiction, Evaluation, FixedPointCheck, KleeneConstruction, Outcome, ProgramIndex,
    RefutationWitness, RiceReport, RiceVerdict,
};
use clap::{Parser, Subcommand};
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::path::PathBuf;

pub const QUINE_FUEL: u64 = 1_000_000;
pub const QUINE_INPUTS: [u64; 3] = [0, 1, 2];
pub const RECURSION_INPUTS: u64 = 6;
pub const DEFAULT_FUEL: u64 = 100_000;
pub const RETRY_FUEL: u64 = 1_000_000;
pub const NONRE_SIZE: usize = 16;
pub const NONRE_FUEL: u64 = 1_000;

#[derive(Parser, Debug)]
#[command(
    name = "lawvere",
    version,
    about = "Diagonal arguments with checkable certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the diagonal construction on a JSON matrix file.
    Diagonal {
        #[arg(long)]
        input: PathBuf,
        /// Use the file's `beta`/`beta_bar` section instead of the diagonal.
        #[arg(long)]
        section: bool,
    },
    /// Bundled instances of the diagonal argument.
    Demo {
        #[command(subcommand)]
        which: DemoCommand,
    },
    /// Constructions in the toy computable universe.
    Universe {
        #[command(subcommand)]
        which: UniverseCommand,
    },
    /// Fixed points of the diagonalization lemma.
    Formal {
        #[command(subcommand)]
        which: FormalCommand,
        /// Also print the Gödel numbers of G and C as separate fields.
        #[arg(long, global = true)]
        print_number: bool,
    },
}

#[derive(Subcommand, Debug)]
enum DemoCommand {
    /// Divisor sets over {0..7} miss {n | n is not in S_n}.
    Powerset,
    /// Hereditarily finite sets: the Russell class is no set among them.
    Russell,
    /// Heterological adjectives.
    Grelling,
    /// The strong Liar over {T, M, F}.
    StrongLiar,
    /// Richard's diagonal real.
    Richard,
    /// Bounded halting table: the diagonal is no column.
    Nonre,
}

#[derive(Subcommand, Debug)]
enum UniverseCommand {
    /// The self-printing program.
    Quine,
    /// Kleene fixed point of a transformer.
    Recursion {
        #[arg(long, value_parser = parse_code)]
        h: Nat,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
        #[arg(long, default_value_t = RETRY_FUEL)]
        retry_fuel: u64,
    },
    /// Diagonal refutation of a candidate halting decider.
    RefuteHalt {
        #[arg(long, value_parser = parse_code)]
        candidate: Nat,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
    },
    /// Rice's theorem against a candidate decider, with `a` in the property
    /// and `b` outside it.
    Rice {
        #[arg(long, value_parser = parse_code)]
        decider: Nat,
        #[arg(long, value_parser = parse_code)]
        a: Nat,
        #[arg(long, value_parser = parse_code)]
        b: Nat,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
    },
    /// Fuel-bounded halting table of programs 0..n on inputs 0..n.
    HaltMatrix {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=4096))]
        n: u64,
        #[arg(long)]
        fuel: u64,
    },
}

#[derive(Subcommand, Debug)]
enum FormalCommand {
    /// "I am not provable."
    Goedel,
    /// "For every proof of me there is a shorter proof of my negation."
    Rosser,
    /// "I am not true."
    Tarski,
    /// "I have no proof shorter than n."
    Parikh {
        #[arg(long, value_parser = parse_positive)]
        n: Nat,
    },
    /// "If I am true then A."
    Curry {
        #[arg(long, value_parser = parse_closed_formula)]
        a: Formula,
    },
}

/// A program given as a decimal index or in s-expression notation.
fn parse_code(text: &str) -> Result<Nat, String> {
    let t = text.trim();
    if t.starts_with('(') || t.starts_with('%') {
        return universe::parse_program(t)
            .map(|e| universe::encode(&e))
            .map_err(|e| e.to_string());
    }
    if !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) {
        return Ok(t.parse().expect("digits"));
    }
    Err(format!("`{text}` is neither a decimal index nor a program"))
}

fn parse_positive(text: &str) -> Result<Nat, String> {
    let t = text.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{text}` is not a natural number"));
    }
    let n: Nat = t.parse().expect("digits");
    if n == Nat::from(0u32) {
        return Err("must be at least 1".into());
    }
    Ok(n)
}

fn parse_closed_formula(text: &str) -> Result<Formula, String> {
    let f = formal::parse_formula(text).map_err(|e| e.to_string())?;
    if !f.is_closed() {
        return Err(format!(
            "`{f}` has free variables; the consequent must be closed"
        ));
    }
    Ok(f)
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Report<'a, C: Serialize> {
    command: &'a [String],
    inputs_digest: String,
    certificate: C,
    verified: bool,
}

struct Emitted {
    json: String,
    verified: bool,
}

fn digest(inputs: &[u8]) -> String {
    hex::encode(Sha256::digest(inputs))
}

fn emit<C: Serialize>(
    command: &[String],
    inputs: &[u8],
    certificate: C,
    verified: bool,
) -> Emitted {
    let report = Report {
        command,
        inputs_digest: digest(inputs),
        certificate,
        verified,
    };
    let mut json = serde_json::to_string_pretty(&report).expect("reports serialize");
    json.push('\n');
    Emitted { json, verified }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_command<I, S>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                CommandOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CommandOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let echo = argv.get(1..).unwrap_or_default();
    match dispatch(cli.command, echo) {
        Ok(out) => CommandOutput {
            code: if out.verified { 0 } else { 1 },
            stdout: out.json,
            stderr: String::new(),
        },
        Err(message) => CommandOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}

fn dispatch(command: Command, echo: &[String]) -> Result<Emitted, String> {
    match command {
        Command::Diagonal { input, section } => diagonal_command(echo, &input, section),
        Command::Demo { which } => Ok(demo_command(echo, which)),
        Command::Universe { which } => Ok(universe_command(echo, which)),
        Command::Formal {
            which,
            print_number,
        } => formal_command(echo, which, print_number),
    }
}

// ---------------------------------------------------------------------------
// Tables

#[derive(Serialize)]
struct Disagreement {
    column: String,
    row: String,
    g: String,
    f: String,
}

#[derive(Serialize)]
struct Preimage {
    value: String,
    rows: Vec<String>,
}

/// A non-representability report with every index replaced by its label.
#[derive(Serialize)]
struct TableCertificate {
    construction: Construction,
    rows: Vec<String>,
    g: Vec<String>,
    preimages: Vec<Preimage>,
    witness: Vec<Disagreement>,
    representing_columns: Vec<String>,
}

fn table_certificate(f: &EvalMatrix, report: &NonRepresentabilityReport) -> TableCertificate {
    let row = |t: usize| f.rows().label(t);
    let y = |v: usize| f.y().label(v);
    let values = report.g.values();
    let preimages = (0..f.y().size())
        .map(|v| Preimage {
            value: y(v),
            rows: (0..values.len())
                .filter(|&t| values[t] == v)
                .map(row)
                .collect(),
        })
        .filter(|p| !p.rows.is_empty())
        .collect();
    let witness = report
        .witness
        .iter()
        .enumerate()
        .map(|(s, &t)| Disagreement {
            column: f.cols().label(s),
            row: row(t),
            g: y(values[t]),
            f: y(f.get(t, s)),
        })
        .collect();
    let representing = representing_columns(&report.g, f)
        .unwrap_or_default()
        .into_iter()
        .map(|s| f.cols().label(s))
        .collect();
    TableCertificate {
        construction: report.construction,
        rows: (0..f.rows().size()).map(row).collect(),
        g: values.iter().map(|&v| y(v)).collect(),
        preimages,
        witness,
        representing_columns: representing,
    }
}

fn table_verified(f: &EvalMatrix, report: &NonRepresentabilityReport) -> bool {
    report.verify(f) && matches!(representing_columns(&report.g, f), Ok(cols) if cols.is_empty())
}

#[derive(Serialize)]
struct NotApplicable {
    fixed_points: Vec<String>,
    diagonal_fixed_point: Option<LabelledFixedPoint>,
}

#[derive(Serialize)]
struct LabelledFixedPoint {
    representing_column: String,
    value: String,
}

fn diagonal_command(echo: &[String], path: &PathBuf, section: bool) -> Result<Emitted, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let text =
        String::from_utf8(bytes.clone()).map_err(|_| format!("{}: not UTF-8", path.display()))?;
    let input = MatrixFile::parse(&text)
        .and_then(|m| m.validate())
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let sec = match (section, &input.section) {
        (false, _) => None,
        (true, Some(s)) => Some(s),
        (true, None) => {
            return Err(format!(
                "{}: --section needs `beta` and `beta_bar`",
                path.display()
            ))
        }
    };
    match cantor_witness(&input.f, &input.alpha, sec) {
        Ok(report) => {
            let verified = table_verified(&input.f, &report);
            Ok(emit(
                echo,
                &bytes,
                table_certificate(&input.f, &report),
                verified,
            ))
        }
        Err(DiagonalError::NotApplicable { fixed_points }) => {
            let weak = if input.f.is_square() {
                weak_diagonal_fixed_point(&input.f, &input.alpha).map_err(|e| e.to_string())?
            } else {
                None
            };
            let label = |w: FixedPointWitness| LabelledFixedPoint {
                representing_column: input.f.cols().label(w.representing_column),
                value: input.f.y().label(w.value),
            };
            let cert = NotApplicable {
                fixed_points: fixed_points.iter().map(|&v| input.f.y().label(v)).collect(),
                diagonal_fixed_point: weak.map(label),
            };
            Ok(emit(echo, &bytes, cert, false))
        }
        Err(e) => Err(format!("{}: {e}", path.display())),
    }
}

#[derive(Serialize)]
struct DemoCertificate<X: Serialize> {
    #[serde(flatten)]
    summary: X,
    table: TableCertificate,
}

fn relation_demo<X: Serialize>(
    echo: &[String],
    m: &DescribesMatrix,
    summary: impl FnOnce(&[bool]) -> X,
) -> Emitted {
    let (g, report) = instances::relation_instance(m);
    let f = m.to_eval_matrix();
    let verified = table_verified(&f, &report);
    let inputs = serde_json::to_vec(m).expect("serializes");
    let cert = DemoCertificate {
        summary: summary(&g),
        table: table_certificate(&f, &report),
    };
    emit(echo, &inputs, cert, verified)
}

fn selected(labels: &[String], keep: &[bool]) -> Vec<String> {
    labels
        .iter()
        .zip(keep)
        .filter(|(_, &k)| k)
        .map(|(l, _)| l.clone())
        .collect()
}

fn demo_command(echo: &[String], which: DemoCommand) -> Emitted {
    match which {
        DemoCommand::Powerset => {
            #[derive(Serialize)]
            struct Summary {
                family: Vec<String>,
                diagonal_set: Vec<usize>,
            }
            let fam = demo::divisor_family();
            let m = fam.membership_matrix();
            let show = |s: &std::collections::BTreeSet<usize>| {
                let items: Vec<String> = s.iter().map(usize::to_string).collect();
                format!("{{{}}}", items.join(","))
            };
            let (g, report) = instances::powerset_instance(&fam);
            let f = m.to_eval_matrix();
            let verified = table_verified(&f, &report)
                && fam
                    .subsets()
                    .iter()
                    .all(|s| (0..fam.universe()).any(|n| s.contains(&n) != g[n]));
            let cert = DemoCertificate {
                summary: Summary {
                    family: fam.subsets().iter().map(show).collect(),
                    diagonal_set: (0..g.len()).filter(|&n| g[n]).collect(),
                },
                table: table_certificate(&f, &report),
            };
            let inputs = serde_json::to_vec(&m).expect("serializes");
            emit(echo, &inputs, cert, verified)
        }
        DemoCommand::Russell => {
            #[derive(Serialize)]
            struct Summary {
                sets: Vec<String>,
                non_self_membered: Vec<String>,
            }
            let m = demo::hereditarily_finite_sets();
            relation_demo(echo, &m, |g| Summary {
                sets: m.labels().to_vec(),
                non_self_membered: selected(m.labels(), g),
            })
        }
        DemoCommand::Grelling => {
            #[derive(Serialize)]
            struct Summary {
                adjectives: Vec<String>,
                heterological: Vec<String>,
            }
            let m = demo::grelling();
            relation_demo(echo, &m, |g| Summary {
                adjectives: m.labels().to_vec(),
                heterological: selected(m.labels(), g),
            })
        }
        DemoCommand::StrongLiar => {
            #[derive(Serialize)]
            struct Summary {
                sentences: Vec<String>,
                diagonal: Vec<String>,
                negated: Vec<String>,
            }
            let m = demo::strong_liar();
            let (g, report) = instances::strong_liar_instance(&m);
            let f = m.to_eval_matrix();
            let verified = table_verified(&f, &report);
            let n = m.labels().len();
            let cert = DemoCertificate {
                summary: Summary {
                    sentences: m.labels().to_vec(),
                    diagonal: (0..n).map(|i| format!("{:?}", m.cells()[i][i])).collect(),
                    negated: g.iter().map(|t| format!("{t:?}")).collect(),
                },
                table: table_certificate(&f, &report),
            };
            emit(echo, demo::STRONG_LIAR_JSON.as_bytes(), cert, verified)
        }
        DemoCommand::Richard => {
            #[derive(Serialize)]
            struct Summary {
                reals: Vec<String>,
                pi_column: String,
                f_4_15: u8,
                diagonal_digits: String,
                richard_digits: String,
            }
            let m = demo::richard();
            let (digits, report) = instances::richard_instance(&m);
            let f = m.to_eval_matrix();
            let n = m.size();
            let verified =
                table_verified(&f, &report) && (0..n).all(|i| digits[i] == 9 - m.get(i, i));
            let to_string =
                |ds: &mut dyn Iterator<Item = u8>| ds.map(|d| char::from(b'0' + d)).collect();
            let cert = DemoCertificate {
                summary: Summary {
                    reals: m.labels().to_vec(),
                    pi_column: m.labels()[15].clone(),
                    f_4_15: m.get(4, 15),
                    diagonal_digits: to_string(&mut (0..n).map(|i| m.get(i, i))),
                    richard_digits: to_string(&mut digits.iter().copied()),
                },
                table: table_certificate(&f, &report),
            };
            emit(echo, demo::RICHARD_JSON.as_bytes(), cert, verified)
        }
        DemoCommand::Nonre => halting_table(echo, NONRE_SIZE, NONRE_FUEL),
    }
}

fn halting_table(echo: &[String], n: usize, fuel: u64) -> Emitted {
    #[derive(Serialize)]
    struct Summary {
        programs: usize,
        fuel: u64,
        /// Row `i`, character `j`: program `j` halts on `i` within `fuel`.
        halts: Vec<String>,
        diagonal_set: Vec<String>,
    }
    let m = universe::bounded_halting_matrix(n, fuel);
    let rows = m
        .rel()
        .iter()
        .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
        .collect();
    relation_demo(echo, &m, |g| Summary {
        programs: n,
        fuel,
        halts: rows,
        diagonal_set: selected(m.labels(), g),
    })
}

// ---------------------------------------------------------------------------
// Universe

#[derive(Serialize)]
struct Program {
    index: ProgramIndex,
    body: String,
}

fn program(index: &ProgramIndex) -> Program {
    Program {
        index: index.clone(),
        body: index.body().to_string(),
    }
}

#[derive(Serialize)]
struct Run {
    #[serde(serialize_with = "crate::report::nat_string")]
    input: Nat,
    outcome: Outcome,
    fuel_used: u64,
    fuel: u64,
}

fn run_on(p: &ProgramIndex, input: u64, fuel: u64) -> Run {
    let Evaluation { outcome, fuel_used } = eval_traced(p, &[Nat::from(input)], fuel);
    Run {
        input: Nat::from(input),
        outcome,
        fuel_used,
        fuel,
    }
}

fn universe_command(echo: &[String], which: UniverseCommand) -> Emitted {
    match which {
        UniverseCommand::Quine => {
            #[derive(Serialize)]
            struct Cert {
                quine: Program,
                construction: KleeneConstruction,
                runs: Vec<Run>,
            }
            let q = quine();
            let runs: Vec<Run> = QUINE_INPUTS
                .iter()
                .map(|&i| run_on(&q, i, QUINE_FUEL))
                .collect();
            let verified = runs.iter().all(|r| r.outcome.value() == Some(q.as_nat()));
            let construction =
                kleene_construction(&ProgramIndex::from(universe::QUINE_TRANSFORMER));
            let verified = verified && construction.n0 == q;
            emit(
                echo,
                q.to_string().as_bytes(),
                Cert {
                    quine: program(&q),
                    construction,
                    runs,
                },
                verified,
            )
        }
        UniverseCommand::Recursion {
            h,
            fuel,
            retry_fuel,
        } => {
            #[derive(Serialize)]
            struct Cert {
                transformer: Program,
                construction: KleeneConstruction,
                fixed_point: Program,
                check: FixedPointCheck,
            }
            let h = ProgramIndex(h);
            let construction = kleene_construction(&h);
            let inputs: Vec<Nat> = (0..RECURSION_INPUTS).map(Nat::from).collect();
            let check = check_fixed_point(&h, &construction.n0, &inputs, fuel, retry_fuel);
            let verified = check.agrees;
            let inputs = format!("h={h} fuel={fuel} retry_fuel={retry_fuel}");
            let cert = Cert {
                transformer: program(&h),
                fixed_point: program(&construction.n0),
                construction,
                check,
            };
            emit(echo, inputs.as_bytes(), cert, verified)
        }
        UniverseCommand::RefuteHalt { candidate, fuel } => {
            #[derive(Serialize)]
            struct Cert {
                candidate: Program,
                g: Program,
                refutation: RefutationWitness,
            }
            let candidate = ProgramIndex(candidate);
            let w = refute_halting(&candidate, fuel);
            let verified = w.is_consistent()
                && w.g_index == ProgramIndex::of(&universe::halting_diagonal(&candidate));
            let inputs = format!("candidate={candidate} fuel={fuel}");
            let cert = Cert {
                candidate: program(&candidate),
                g: program(&w.g_index),
                refutation: w,
            };
            emit(echo, inputs.as_bytes(), cert, verified)
        }
        UniverseCommand::Rice {
            decider,
            a,
            b,
            fuel,
        } => {
            #[derive(Serialize)]
            struct Cert {
                decider: Program,
                a: Program,
                b: Program,
                transformer: Program,
                report: RiceReport,
            }
            let (decider, a, b) = (ProgramIndex(decider), ProgramIndex(a), ProgramIndex(b));
            let report = rice_contradiction(&decider, &a, &b, fuel);
            let verified = match report.verdict {
                RiceVerdict::DeciderNotTotal => !report.decider_on_n0.is_value(),
                _ => report.exhibits_contradiction(),
            };
            let inputs = format!("decider={decider} a={a} b={b} fuel={fuel}");
            let cert = Cert {
                decider: program(&decider),
                a: program(&a),
                b: program(&b),
                transformer: program(&report.h),
                report,
            };
            emit(echo, inputs.as_bytes(), cert, verified)
        }
        UniverseCommand::HaltMatrix { n, fuel } => halting_table(echo, n as usize, fuel),
    }
}

// ---------------------------------------------------------------------------
// Formal

#[derive(Serialize)]
struct FormalCertificate {
    sentence: &'static str,
    #[serde(flatten)]
    lemma: LemmaView,
    #[serde(skip_serializing_if = "Option::is_none")]
    unquoted: Option<String>,
}

/// The lemma certificate with the Gödel numbers shown only on request.
#[derive(Serialize)]
struct LemmaView {
    e: String,
    v: String,
    g: String,
    c: String,
    c_digits: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    g_number: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c_number: Option<String>,
    reduced: String,
    target: String,
}

fn lemma_view(cert: &LemmaCertificate, print_number: bool) -> LemmaView {
    LemmaView {
        e: cert.e.to_string(),
        v: cert.v.to_string(),
        g: cert.g.to_string(),
        c: cert.c.to_string(),
        c_digits: cert.c_number.to_string().len(),
        g_number: print_number.then(|| cert.g_number.to_string()),
        c_number: print_number.then(|| cert.c_number.to_string()),
        reduced: cert.reduced.to_string(),
        target: cert.target.to_string(),
    }
}

fn formal_command(
    echo: &[String],
    which: FormalCommand,
    print_number: bool,
) -> Result<Emitted, String> {
    let kind = match which {
        FormalCommand::Goedel => NamedSentence::Goedel,
        FormalCommand::Rosser => NamedSentence::Rosser,
        FormalCommand::Tarski => NamedSentence::Tarski,
        FormalCommand::Parikh { n } => NamedSentence::Parikh(n),
        FormalCommand::Curry { a } => NamedSentence::Curry(a),
    };
    let cert = formal::named_sentence(&kind).map_err(|e| e.to_string())?;
    let mut verified = cert.recheck();
    let unquoted = match &kind {
        NamedSentence::Curry(a) => {
            let unfolded = formal::curry_unfolding(&cert);
            verified &= unfolded == Formula::imp(cert.c.clone(), a.clone());
            Some(unfolded.to_string())
        }
        _ => None,
    };
    let inputs = cert.e.to_string();
    let view = FormalCertificate {
        sentence: kind.name(),
        lemma: lemma_view(&cert, print_number),
        unquoted,
    };
    Ok(emit(echo, inputs.as_bytes(), view, verified))
}
