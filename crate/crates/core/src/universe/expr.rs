use crate::pairing::{join_tag, pair, split_tag, unpair, Nat};
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use std::rc::Rc;

/// A program body. Bodies are closed expressions over the positional
/// arguments `Var(1)`, `Var(2)`, ..; there are no binders.
///
/// `Var(0)` exists only so that every natural decodes to some body; it
/// always evaluates to `Stuck`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Var(Nat),
    Const(Nat),
    Succ(Rc<Expr>),
    Pred(Rc<Expr>),
    IfZero(Rc<Expr>, Rc<Expr>, Rc<Expr>),
    Pair(Rc<Expr>, Rc<Expr>),
    Fst(Rc<Expr>),
    Snd(Rc<Expr>),
    /// Run program `p` (a value) on the single argument `x`.
    Run(Rc<Expr>, Rc<Expr>),
    /// Specialize binary program `p` to its first argument `y`.
    Smn(Rc<Expr>, Rc<Expr>),
}

const TAGS: u32 = 10;

impl Expr {
    pub fn var(i: u64) -> Expr {
        Expr::Var(Nat::from(i))
    }

    pub fn constant(n: impl Into<Nat>) -> Expr {
        Expr::Const(n.into())
    }

    pub fn succ(e: Expr) -> Expr {
        Expr::Succ(Rc::new(e))
    }

    pub fn pred(e: Expr) -> Expr {
        Expr::Pred(Rc::new(e))
    }

    pub fn if_zero(c: Expr, t: Expr, e: Expr) -> Expr {
        Expr::IfZero(Rc::new(c), Rc::new(t), Rc::new(e))
    }

    pub fn pair(a: Expr, b: Expr) -> Expr {
        Expr::Pair(Rc::new(a), Rc::new(b))
    }

    pub fn fst(e: Expr) -> Expr {
        Expr::Fst(Rc::new(e))
    }

    pub fn snd(e: Expr) -> Expr {
        Expr::Snd(Rc::new(e))
    }

    pub fn run(p: Expr, x: Expr) -> Expr {
        Expr::Run(Rc::new(p), Rc::new(x))
    }

    pub fn smn(p: Expr, y: Expr) -> Expr {
        Expr::Smn(Rc::new(p), Rc::new(y))
    }

    fn tag(&self) -> u32 {
        match self {
            Expr::Var(_) => 0,
            Expr::Const(_) => 1,
            Expr::Succ(_) => 2,
            Expr::Pred(_) => 3,
            Expr::IfZero(..) => 4,
            Expr::Pair(..) => 5,
            Expr::Fst(_) => 6,
            Expr::Snd(_) => 7,
            Expr::Run(..) => 8,
            Expr::Smn(..) => 9,
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Expr::Var(_) | Expr::Const(_) => 1,
            Expr::Succ(e) | Expr::Pred(e) | Expr::Fst(e) | Expr::Snd(e) => 1 + e.size(),
            Expr::IfZero(c, t, e) => 1 + c.size() + t.size() + e.size(),
            Expr::Pair(a, b) | Expr::Run(a, b) | Expr::Smn(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Var(_) | Expr::Const(_) => 1,
            Expr::Succ(e) | Expr::Pred(e) | Expr::Fst(e) | Expr::Snd(e) => 1 + e.depth(),
            Expr::IfZero(c, t, e) => 1 + c.depth().max(t.depth()).max(e.depth()),
            Expr::Pair(a, b) | Expr::Run(a, b) | Expr::Smn(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Largest `i` such that `Var(i)` occurs, or 0.
    pub fn arity(&self) -> Nat {
        match self {
            Expr::Var(i) => i.clone(),
            Expr::Const(_) => Nat::zero(),
            Expr::Succ(e) | Expr::Pred(e) | Expr::Fst(e) | Expr::Snd(e) => e.arity(),
            Expr::IfZero(c, t, e) => c.arity().max(t.arity()).max(e.arity()),
            Expr::Pair(a, b) | Expr::Run(a, b) | Expr::Smn(a, b) => a.arity().max(b.arity()),
        }
    }
}

/// Gödel number of a body: `10 * payload + tag`.
///
/// | tag | node | payload |
/// |-----|------|---------|
/// | 0 | `Var(i)` | `i` |
/// | 1 | `Const(n)` | `n` |
/// | 2, 3, 6, 7 | `Succ`, `Pred`, `Fst`, `Snd` | child code |
/// | 4 | `IfZero(c, t, e)` | `pair(c, pair(t, e))` |
/// | 5, 8, 9 | `Pair`, `Run`, `Smn` | `pair(a, b)` |
pub fn encode(e: &Expr) -> Nat {
    let payload = match e {
        Expr::Var(i) => i.clone(),
        Expr::Const(n) => n.clone(),
        Expr::Succ(c) | Expr::Pred(c) | Expr::Fst(c) | Expr::Snd(c) => encode(c),
        Expr::IfZero(c, t, f) => pair(&encode(c), &pair(&encode(t), &encode(f))),
        Expr::Pair(a, b) | Expr::Run(a, b) | Expr::Smn(a, b) => pair(&encode(a), &encode(b)),
    };
    join_tag(&payload, e.tag(), TAGS)
}

/// Inverse of [`encode`]. Total: every natural is the code of exactly one body.
pub fn decode(n: &Nat) -> Expr {
    let (payload, tag) = split_tag(n, TAGS);
    let one = |p: &Nat| Rc::new(decode(p));
    let two = |p: &Nat| {
        let (a, b) = unpair(p);
        (Rc::new(decode(&a)), Rc::new(decode(&b)))
    };
    match tag {
        0 => Expr::Var(payload),
        1 => Expr::Const(payload),
        2 => Expr::Succ(one(&payload)),
        3 => Expr::Pred(one(&payload)),
        4 => {
            let (c, rest) = unpair(&payload);
            let (t, f) = unpair(&rest);
            Expr::IfZero(one(&c), one(&t), one(&f))
        }
        5 => {
            let (a, b) = two(&payload);
            Expr::Pair(a, b)
        }
        6 => Expr::Fst(one(&payload)),
        7 => Expr::Snd(one(&payload)),
        8 => {
            let (a, b) = two(&payload);
            Expr::Run(a, b)
        }
        9 => {
            let (a, b) = two(&payload);
            Expr::Smn(a, b)
        }
        _ => unreachable!("tag is a residue mod 10"),
    }
}

/// A program, named by the Gödel number of its (unary) body. Every natural
/// is a program.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProgramIndex(pub Nat);

impl ProgramIndex {
    pub fn of(body: &Expr) -> ProgramIndex {
        ProgramIndex(encode(body))
    }

    pub fn body(&self) -> Expr {
        decode(&self.0)
    }

    pub fn as_nat(&self) -> &Nat {
        &self.0
    }
}

impl From<u64> for ProgramIndex {
    fn from(n: u64) -> Self {
        ProgramIndex(Nat::from(n))
    }
}

impl From<Nat> for ProgramIndex {
    fn from(n: Nat) -> Self {
        ProgramIndex(n)
    }
}

impl serde::Serialize for ProgramIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl fmt::Display for ProgramIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Positional argument lookup; `None` for `Var(0)` or past the end.
pub(crate) fn lookup<'a>(args: &'a [Nat], i: &Nat) -> Option<&'a Nat> {
    if i.is_zero() {
        return None;
    }
    let idx = (i - Nat::one()).to_usize()?;
    args.get(idx)
}
