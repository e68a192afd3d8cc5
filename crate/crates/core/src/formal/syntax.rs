use crate::pairing::Nat;
use num_traits::ToPrimitive;
use std::collections::BTreeSet;
use std::fmt;

/// A variable, identified by its numeric code. Codes 0..6 print as
/// `x y z w m u`; the rest as `v<code>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub Nat);

pub const VARIABLE_NAMES: [&str; 6] = ["x", "y", "z", "w", "m", "u"];

impl Var {
    pub fn code(code: u64) -> Var {
        Var(Nat::from(code))
    }

    pub fn named(name: &str) -> Option<Var> {
        if let Some(i) = VARIABLE_NAMES.iter().position(|&n| n == name) {
            return Some(Var::code(i as u64));
        }
        let digits = name.strip_prefix('v')?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        digits.parse().ok().map(Var)
    }

    pub fn x() -> Var {
        Var::code(0)
    }

    pub fn y() -> Var {
        Var::code(1)
    }

    pub fn w() -> Var {
        Var::code(3)
    }

    pub fn m() -> Var {
        Var::code(4)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.to_usize().and_then(|i| VARIABLE_NAMES.get(i)) {
            Some(name) => f.write_str(name),
            None => write!(f, "v{}", self.0),
        }
    }
}

/// A predicate symbol. The table is fixed so Gödel numbers are reproducible;
/// codes past the table print as `S<code>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub Nat);

/// `(name, arity)`; the position is the symbol's code. Predicates are
/// uninterpreted, so the arity is informational.
pub const SYMBOLS: [(&str, usize); 6] = [
    ("P", 1),
    ("Q", 1),
    ("R", 2),
    ("T", 1),
    ("Prov", 2),
    ("Prflen", 2),
];

impl Symbol {
    pub fn code(code: u64) -> Symbol {
        Symbol(Nat::from(code))
    }

    pub fn named(name: &str) -> Option<Symbol> {
        if let Some(i) = SYMBOLS.iter().position(|&(n, _)| n == name) {
            return Some(Symbol::code(i as u64));
        }
        let digits = name.strip_prefix('S')?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        digits.parse().ok().map(Symbol)
    }

    fn known(name: &str) -> Symbol {
        Symbol::named(name).expect("symbol in table")
    }

    pub fn prov() -> Symbol {
        Symbol::known("Prov")
    }

    pub fn prflen() -> Symbol {
        Symbol::known("Prflen")
    }

    pub fn truth() -> Symbol {
        Symbol::known("T")
    }

    pub fn p() -> Symbol {
        Symbol::known("P")
    }

    pub fn q() -> Symbol {
        Symbol::known("Q")
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.to_usize().and_then(|i| SYMBOLS.get(i)) {
            Some((name, _)) => f.write_str(name),
            None => write!(f, "S{}", self.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    /// A numeral.
    Num(Nat),
    /// `D(t)`: the code of the formula coded by `t` with its free variable
    /// replaced by the numeral `t`.
    Diag(Box<Term>),
    /// `Neg(t)`: the code of the negation of the formula coded by `t`.
    Neg(Box<Term>),
}

impl Term {
    pub fn var(v: Var) -> Term {
        Term::Var(v)
    }

    pub fn num(n: impl Into<Nat>) -> Term {
        Term::Num(n.into())
    }

    pub fn diag(t: Term) -> Term {
        Term::Diag(Box::new(t))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Num(_) => true,
            Term::Diag(t) | Term::Neg(t) => t.is_closed(),
        }
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Num(_) => {}
            Term::Diag(t) | Term::Neg(t) => t.collect_vars(out),
        }
    }

    /// Some `Diag(Num _)` occurs inside.
    pub fn has_diag_numeral(&self) -> bool {
        match self {
            Term::Diag(t) => matches!(**t, Term::Num(_)) || t.has_diag_numeral(),
            Term::Neg(t) => t.has_diag_numeral(),
            Term::Var(_) | Term::Num(_) => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Pred(Symbol, Vec<Term>),
    Less(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    ForAll(Var, Box<Formula>),
    Exists(Var, Box<Formula>),
    /// The formula whose code is the value of the term.
    Unquote(Term),
}

impl Formula {
    pub fn pred(sym: Symbol, terms: Vec<Term>) -> Formula {
        Formula::Pred(sym, terms)
    }

    pub fn less(a: Term, b: Term) -> Formula {
        Formula::Less(a, b)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn forall(v: Var, f: Formula) -> Formula {
        Formula::ForAll(v, Box::new(f))
    }

    pub fn exists(v: Var, f: Formula) -> Formula {
        Formula::Exists(v, Box::new(f))
    }

    pub fn unquote(t: Term) -> Formula {
        Formula::Unquote(t)
    }

    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<Var>) {
        match self {
            Formula::Pred(_, ts) => ts.iter().for_each(|t| t.collect_vars(out)),
            Formula::Less(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Unquote(t) => t.collect_vars(out),
            Formula::Not(f) => f.collect_free(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.collect_free(out);
                b.collect_free(out);
            }
            Formula::ForAll(v, f) | Formula::Exists(v, f) => {
                let mut inner = f.free_vars();
                inner.remove(v);
                out.extend(inner);
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Applies `f` to every term in the formula.
    pub fn any_term(&self, f: &impl Fn(&Term) -> bool) -> bool {
        match self {
            Formula::Pred(_, ts) => ts.iter().any(f),
            Formula::Less(a, b) => f(a) || f(b),
            Formula::Unquote(t) => f(t),
            Formula::Not(g) | Formula::ForAll(_, g) | Formula::Exists(_, g) => g.any_term(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.any_term(f) || b.any_term(f)
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Pred(..) | Formula::Less(..) | Formula::Unquote(_) => 1,
            Formula::Not(g) | Formula::ForAll(_, g) | Formula::Exists(_, g) => 1 + g.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }
}
