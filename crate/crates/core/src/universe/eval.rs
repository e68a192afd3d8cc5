//! Fuel-bounded big-step evaluation.
//!
//! Every node visit costs one unit of fuel, and the budget is shared by all
//! nested `Run` calls. The machine keeps its continuation on the heap, so an
//! evaluation that recurses a million levels deep runs out of fuel rather
//! than out of stack.

use super::expr::{decode, lookup, Expr, ProgramIndex};
use super::smn::smn_meta;
use crate::pairing::{pair, unpair, Nat};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

/// Result of a bounded evaluation. `Diverged` and `Stuck` both mean
/// "undefined" for the partial function a program computes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Outcome {
    Value(Nat),
    /// Fuel ran out.
    Diverged,
    /// A `Var` referred past the supplied arguments (or was `Var(0)`).
    Stuck,
}

impl Outcome {
    pub fn is_value(&self) -> bool {
        matches!(self, Outcome::Value(_))
    }

    pub fn value(&self) -> Option<&Nat> {
        match self {
            Outcome::Value(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Value(v) => write!(f, "value {v}"),
            Outcome::Diverged => f.write_str("diverged"),
            Outcome::Stuck => f.write_str("stuck"),
        }
    }
}

impl Serialize for Outcome {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(1))?;
        match self {
            Outcome::Value(v) => m.serialize_entry("value", &v.to_string())?,
            Outcome::Diverged => m.serialize_entry("undefined", "diverged")?,
            Outcome::Stuck => m.serialize_entry("undefined", "stuck")?,
        }
        m.end()
    }
}

/// An outcome together with the fuel it consumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub outcome: Outcome,
    pub fuel_used: u64,
}

type Env = Rc<[Nat]>;

enum Frame {
    Succ,
    Pred,
    Fst,
    Snd,
    IfZero {
        then: Rc<Expr>,
        other: Rc<Expr>,
        env: Env,
    },
    PairLeft {
        right: Rc<Expr>,
        env: Env,
    },
    PairRight {
        left: Nat,
    },
    RunProgram {
        arg: Rc<Expr>,
        env: Env,
    },
    RunArg {
        program: Nat,
    },
    SmnProgram {
        arg: Rc<Expr>,
        env: Env,
    },
    SmnArg {
        program: Nat,
    },
}

enum Control {
    Eval(Rc<Expr>, Env),
    Return(Nat),
}

struct Machine {
    fuel: u64,
    used: u64,
    stack: Vec<Frame>,
    bodies: HashMap<Nat, Rc<Expr>>,
}

impl Machine {
    fn body(&mut self, program: Nat) -> Rc<Expr> {
        self.bodies
            .entry(program)
            .or_insert_with_key(|p| Rc::new(decode(p)))
            .clone()
    }

    fn run(&mut self, root: Rc<Expr>, env: Env) -> Outcome {
        let mut control = Control::Eval(root, env);
        loop {
            control = match control {
                Control::Eval(expr, env) => {
                    if self.used == self.fuel {
                        return Outcome::Diverged;
                    }
                    self.used += 1;
                    match &*expr {
                        Expr::Var(i) => match lookup(&env, i) {
                            Some(v) => Control::Return(v.clone()),
                            None => return Outcome::Stuck,
                        },
                        Expr::Const(n) => Control::Return(n.clone()),
                        Expr::Succ(e) => self.push(Frame::Succ, e, env),
                        Expr::Pred(e) => self.push(Frame::Pred, e, env),
                        Expr::Fst(e) => self.push(Frame::Fst, e, env),
                        Expr::Snd(e) => self.push(Frame::Snd, e, env),
                        Expr::IfZero(c, t, e) => {
                            let frame = Frame::IfZero {
                                then: t.clone(),
                                other: e.clone(),
                                env: env.clone(),
                            };
                            self.push(frame, c, env)
                        }
                        Expr::Pair(a, b) => {
                            let frame = Frame::PairLeft {
                                right: b.clone(),
                                env: env.clone(),
                            };
                            self.push(frame, a, env)
                        }
                        Expr::Run(p, x) => {
                            let frame = Frame::RunProgram {
                                arg: x.clone(),
                                env: env.clone(),
                            };
                            self.push(frame, p, env)
                        }
                        Expr::Smn(p, y) => {
                            let frame = Frame::SmnProgram {
                                arg: y.clone(),
                                env: env.clone(),
                            };
                            self.push(frame, p, env)
                        }
                    }
                }
                Control::Return(v) => match self.stack.pop() {
                    None => return Outcome::Value(v),
                    Some(frame) => self.resume(frame, v),
                },
            }
        }
    }

    fn push(&mut self, frame: Frame, next: &Rc<Expr>, env: Env) -> Control {
        self.stack.push(frame);
        Control::Eval(next.clone(), env)
    }

    fn resume(&mut self, frame: Frame, v: Nat) -> Control {
        match frame {
            Frame::Succ => Control::Return(v + 1u32),
            Frame::Pred => Control::Return(if v.is_zero() { v } else { v - Nat::one() }),
            Frame::Fst => Control::Return(unpair(&v).0),
            Frame::Snd => Control::Return(unpair(&v).1),
            Frame::IfZero { then, other, env } => {
                Control::Eval(if v.is_zero() { then } else { other }, env)
            }
            Frame::PairLeft { right, env } => self.push(Frame::PairRight { left: v }, &right, env),
            Frame::PairRight { left } => Control::Return(pair(&left, &v)),
            Frame::RunProgram { arg, env } => self.push(Frame::RunArg { program: v }, &arg, env),
            Frame::RunArg { program } => {
                let body = self.body(program);
                Control::Eval(body, Rc::from(vec![v]))
            }
            Frame::SmnProgram { arg, env } => self.push(Frame::SmnArg { program: v }, &arg, env),
            Frame::SmnArg { program } => Control::Return(smn_meta(&program, &v).0),
        }
    }
}

/// Evaluates `body` on `args` with at most `fuel` node visits.
pub fn eval_expr(body: &Expr, args: &[Nat], fuel: u64) -> Evaluation {
    let mut m = Machine {
        fuel,
        used: 0,
        stack: Vec::new(),
        bodies: HashMap::new(),
    };
    let outcome = m.run(Rc::new(body.clone()), Rc::from(args.to_vec()));
    Evaluation {
        outcome,
        fuel_used: m.used,
    }
}

/// Runs program `p` on `args` with at most `fuel` node visits.
pub fn eval_traced(p: &ProgramIndex, args: &[Nat], fuel: u64) -> Evaluation {
    eval_expr(&p.body(), args, fuel)
}

pub fn eval(p: &ProgramIndex, args: &[Nat], fuel: u64) -> Outcome {
    eval_traced(p, args, fuel).outcome
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::expr::encode;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    fn p(v: u64) -> ProgramIndex {
        ProgramIndex::from(v)
    }

    #[test]
    fn constants_and_projections() {
        assert_eq!(eval(&p(21), &[n(5)], 10), Outcome::Value(n(2)));
        assert_eq!(eval(&p(10), &[n(7)], 10), Outcome::Value(n(7)));
        assert_eq!(eval(&p(10), &[], 10), Outcome::Stuck);
        assert_eq!(eval(&p(0), &[n(1)], 10), Outcome::Stuck);
    }

    #[test]
    fn self_application_diverges() {
        for fuel in [0, 1, 5, 100, 10_000, 1_000_000] {
            assert_eq!(eval(&p(2208), &[n(2208)], fuel), Outcome::Diverged);
        }
    }

    #[test]
    fn arithmetic_and_pairs() {
        let e = Expr::pred(Expr::pred(Expr::succ(Expr::constant(0u32))));
        assert_eq!(eval_expr(&e, &[], 10).outcome, Outcome::Value(n(0)));

        let e = Expr::pair(Expr::var(1), Expr::var(2));
        assert_eq!(
            eval_expr(&e, &[n(1), n(2)], 10).outcome,
            Outcome::Value(n(8))
        );
        let e = Expr::fst(Expr::var(1));
        assert_eq!(eval_expr(&e, &[n(7)], 10).outcome, Outcome::Value(n(2)));
        let e = Expr::snd(Expr::var(1));
        assert_eq!(eval_expr(&e, &[n(7)], 10).outcome, Outcome::Value(n(1)));
    }

    #[test]
    fn if_zero_only_evaluates_the_taken_branch() {
        let omega = Expr::run(Expr::constant(2208u32), Expr::constant(2208u32));
        let e = Expr::if_zero(Expr::var(1), Expr::constant(1u32), omega);
        assert_eq!(eval_expr(&e, &[n(0)], 100).outcome, Outcome::Value(n(1)));
        assert_eq!(eval_expr(&e, &[n(3)], 100).outcome, Outcome::Diverged);
    }

    #[test]
    fn fuel_accounting() {
        // Var, Const: one visit each.
        let ev = eval_expr(&Expr::var(1), &[n(3)], 1);
        assert_eq!(
            ev,
            Evaluation {
                outcome: Outcome::Value(n(3)),
                fuel_used: 1
            }
        );
        assert_eq!(
            eval_expr(&Expr::var(1), &[n(3)], 0).outcome,
            Outcome::Diverged
        );
        // Run(Const 21, Const 0): Run, Const, Const, then body Const 2.
        let e = Expr::run(Expr::constant(21u32), Expr::constant(0u32));
        assert_eq!(eval_expr(&e, &[], 4).outcome, Outcome::Value(n(2)));
        assert_eq!(eval_expr(&e, &[], 3).outcome, Outcome::Diverged);
    }

    #[test]
    fn run_passes_a_single_argument() {
        // Program Var 2 is stuck under Run, which supplies one argument.
        let e = Expr::run(Expr::constant(encode(&Expr::var(2))), Expr::constant(4u32));
        assert_eq!(eval_expr(&e, &[n(1), n(2)], 10).outcome, Outcome::Stuck);
    }

    #[test]
    fn deep_non_tail_recursion_runs_out_of_fuel_not_stack() {
        // φ(x) = succ(run(x, x)) on itself nests without bound.
        let body = Expr::succ(Expr::run(Expr::var(1), Expr::var(1)));
        let code = encode(&body);
        let ev = eval_traced(&ProgramIndex(code.clone()), &[code], 3_000_000);
        assert_eq!(ev.outcome, Outcome::Diverged);
        assert_eq!(ev.fuel_used, 3_000_000);
    }
}
