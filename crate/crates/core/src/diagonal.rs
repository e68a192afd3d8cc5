//! Finite Cantor and Diagonal theorems.
//!
//! An [`EvalMatrix`] tabulates `f : T × S → Y`; its columns are the maps
//! `T → Y` that `f` can represent. Composing the diagonal (or a section
//! `t ↦ (t, β(t))`) with an endomap `α` on `Y` produces a map `g : T → Y`.
//! When `α` has no fixed point, `g` is never a column and
//! [`cantor_witness`] records, for every column, the row where they differ.
//! When `g` does turn out to be a column, [`weak_diagonal_fixed_point`]
//! reads a fixed point of `α` off the matrix.
//!
//! Everything is index based: carriers are `0..size`, optionally labelled.

use serde::Serialize;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagonalError {
    #[error("carrier must have at least one element")]
    EmptyCarrier,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("{what}: expected size {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{what}: index {index} out of range for a carrier of size {size}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },
    #[error("beta is not onto: beta(beta_bar({s})) = {got}, expected {s}")]
    NotRightInverse { s: usize, got: usize },
    #[error(
        "alpha has fixed points {fixed_points:?}, so the diagonal construction proves nothing"
    )]
    NotApplicable { fixed_points: Vec<usize> },
}

pub type Result<T, E = DiagonalError> = std::result::Result<T, E>;

/// A finite set `{0, .., size - 1}` with optional display labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Carrier {
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Carrier {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(DiagonalError::EmptyCarrier);
        }
        Ok(Carrier { size, labels: None })
    }

    pub fn labelled<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(DiagonalError::EmptyCarrier);
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(DiagonalError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Carrier {
            size: labels.len(),
            labels: Some(labels),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of element `i`, or its index when the carrier is unlabelled.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    fn check_index(&self, what: &'static str, index: usize) -> Result<()> {
        if index < self.size {
            Ok(())
        } else {
            Err(DiagonalError::IndexOutOfRange {
                what,
                index,
                size: self.size,
            })
        }
    }

    fn check_same_size(&self, what: &'static str, other: &Carrier) -> Result<()> {
        if self.size == other.size {
            Ok(())
        } else {
            Err(DiagonalError::DimensionMismatch {
                what,
                expected: self.size,
                found: other.size,
            })
        }
    }
}

/// A total map `α : Y → Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndoMap {
    carrier: Carrier,
    map: Vec<usize>,
}

impl EndoMap {
    pub fn new(carrier: Carrier, map: Vec<usize>) -> Result<Self> {
        if map.len() != carrier.size() {
            return Err(DiagonalError::DimensionMismatch {
                what: "alpha",
                expected: carrier.size(),
                found: map.len(),
            });
        }
        for &y in &map {
            carrier.check_index("alpha", y)?;
        }
        Ok(EndoMap { carrier, map })
    }

    pub fn identity(carrier: Carrier) -> Self {
        let map = (0..carrier.size()).collect();
        EndoMap { carrier, map }
    }

    /// The cyclic shift `y ↦ y + 1 mod n`, fixed-point-free whenever `n ≥ 2`.
    pub fn shift(carrier: Carrier) -> Self {
        let n = carrier.size();
        let map = (0..n).map(|y| (y + 1) % n).collect();
        EndoMap { carrier, map }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, y: usize) -> usize {
        self.map[y]
    }
}

/// The table of `f : T × S → Y`; `cell[t][s] = f(t, s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalMatrix {
    rows: Carrier,
    cols: Carrier,
    y: Carrier,
    cell: Vec<Vec<usize>>,
}

impl EvalMatrix {
    pub fn new(rows: Carrier, cols: Carrier, y: Carrier, cell: Vec<Vec<usize>>) -> Result<Self> {
        if cell.len() != rows.size() {
            return Err(DiagonalError::DimensionMismatch {
                what: "f rows",
                expected: rows.size(),
                found: cell.len(),
            });
        }
        for row in &cell {
            if row.len() != cols.size() {
                return Err(DiagonalError::DimensionMismatch {
                    what: "f columns",
                    expected: cols.size(),
                    found: row.len(),
                });
            }
            for &v in row {
                y.check_index("f", v)?;
            }
        }
        Ok(EvalMatrix {
            rows,
            cols,
            y,
            cell,
        })
    }

    /// A square matrix over unlabelled carriers.
    pub fn square(y_size: usize, cell: Vec<Vec<usize>>) -> Result<Self> {
        let n = cell.len();
        EvalMatrix::new(
            Carrier::new(n)?,
            Carrier::new(n)?,
            Carrier::new(y_size)?,
            cell,
        )
    }

    pub fn rows(&self) -> &Carrier {
        &self.rows
    }

    pub fn cols(&self) -> &Carrier {
        &self.cols
    }

    pub fn y(&self) -> &Carrier {
        &self.y
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cell
    }

    pub fn get(&self, t: usize, s: usize) -> usize {
        self.cell[t][s]
    }

    pub fn column(&self, s: usize) -> Vec<usize> {
        self.cell.iter().map(|row| row[s]).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows.size() == self.cols.size()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(DiagonalError::DimensionMismatch {
                what: "square matrix (S = T)",
                expected: self.rows.size(),
                found: self.cols.size(),
            })
        }
    }
}

/// An onto map `β : T → S` together with a chosen right inverse `β̄`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    beta: Vec<usize>,
    beta_bar: Vec<usize>,
}

impl Section {
    /// Checks ranges and `β(β̄(s)) = s` for every `s`.
    pub fn new(
        t_size: usize,
        s_size: usize,
        beta: Vec<usize>,
        beta_bar: Vec<usize>,
    ) -> Result<Self> {
        if beta.len() != t_size {
            return Err(DiagonalError::DimensionMismatch {
                what: "beta",
                expected: t_size,
                found: beta.len(),
            });
        }
        if beta_bar.len() != s_size {
            return Err(DiagonalError::DimensionMismatch {
                what: "beta_bar",
                expected: s_size,
                found: beta_bar.len(),
            });
        }
        for &b in &beta {
            if b >= s_size {
                return Err(DiagonalError::IndexOutOfRange {
                    what: "beta",
                    index: b,
                    size: s_size,
                });
            }
        }
        for (s, &t) in beta_bar.iter().enumerate() {
            if t >= t_size {
                return Err(DiagonalError::IndexOutOfRange {
                    what: "beta_bar",
                    index: t,
                    size: t_size,
                });
            }
            if beta[t] != s {
                return Err(DiagonalError::NotRightInverse { s, got: beta[t] });
            }
        }
        Ok(Section { beta, beta_bar })
    }

    /// `β = β̄ = id`, which turns the section back into the diagonal.
    pub fn identity(n: usize) -> Self {
        Section {
            beta: (0..n).collect(),
            beta_bar: (0..n).collect(),
        }
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn beta_bar(&self) -> &[usize] {
        &self.beta_bar
    }

    fn check_against(&self, f: &EvalMatrix) -> Result<()> {
        Section::new(
            f.rows().size(),
            f.cols().size(),
            self.beta.clone(),
            self.beta_bar.clone(),
        )
        .map(drop)
    }
}

/// A map `g : T → Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YMap {
    domain: Carrier,
    y: Carrier,
    values: Vec<usize>,
}

impl YMap {
    pub fn new(domain: Carrier, y: Carrier, values: Vec<usize>) -> Result<Self> {
        if values.len() != domain.size() {
            return Err(DiagonalError::DimensionMismatch {
                what: "g",
                expected: domain.size(),
                found: values.len(),
            });
        }
        for &v in &values {
            y.check_index("g", v)?;
        }
        Ok(YMap { domain, y, values })
    }

    pub fn domain(&self) -> &Carrier {
        &self.domain
    }

    pub fn y(&self) -> &Carrier {
        &self.y
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Diagonal,
    Section,
}

/// Certifies that `g` is none of the columns of `f`: for every column `s`,
/// `witness[s]` is a row where `g` and that column disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonRepresentabilityReport {
    pub construction: Construction,
    pub g: YMap,
    pub witness: Vec<usize>,
}

impl NonRepresentabilityReport {
    /// Re-checks every recorded inequality against `f`.
    pub fn verify(&self, f: &EvalMatrix) -> bool {
        self.witness.len() == f.cols().size()
            && self.g.values.len() == f.rows().size()
            && self
                .witness
                .iter()
                .enumerate()
                .all(|(s, &t)| t < f.rows().size() && self.g.values[t] != f.get(t, s))
    }
}

/// A fixed point `value` of `α`, found at `f(t, t)` for a column `t`
/// representing the diagonal construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FixedPointWitness {
    pub representing_column: usize,
    pub value: usize,
}

impl FixedPointWitness {
    pub fn verify(&self, f: &EvalMatrix, alpha: &EndoMap) -> bool {
        let t = self.representing_column;
        t < f.rows().size()
            && t < f.cols().size()
            && self.value < alpha.carrier().size()
            && f.get(t, t) == self.value
            && alpha.apply(self.value) == self.value
    }
}

/// `g(t) = α(f(t, t))`.
pub fn compose_diagonal(f: &EvalMatrix, alpha: &EndoMap) -> Result<YMap> {
    f.require_square()?;
    f.y()
        .check_same_size("alpha carrier vs Y", alpha.carrier())?;
    let values = (0..f.rows().size())
        .map(|t| alpha.apply(f.get(t, t)))
        .collect();
    Ok(YMap {
        domain: f.rows().clone(),
        y: f.y().clone(),
        values,
    })
}

/// `g(t) = α(f(t, β(t)))`.
pub fn compose_with_section(f: &EvalMatrix, alpha: &EndoMap, sec: &Section) -> Result<YMap> {
    f.y()
        .check_same_size("alpha carrier vs Y", alpha.carrier())?;
    sec.check_against(f)?;
    let values = sec
        .beta()
        .iter()
        .enumerate()
        .map(|(t, &s)| alpha.apply(f.get(t, s)))
        .collect();
    Ok(YMap {
        domain: f.rows().clone(),
        y: f.y().clone(),
        values,
    })
}

/// All columns `s` with `g(-) = f(-, s)`, ascending. Empty means `g` is not
/// representable.
pub fn representing_columns(g: &YMap, f: &EvalMatrix) -> Result<Vec<usize>> {
    f.rows().check_same_size("g domain vs T", g.domain())?;
    f.y().check_same_size("g codomain vs Y", g.y())?;
    Ok((0..f.cols().size())
        .filter(|&s| (0..f.rows().size()).all(|t| g.values[t] == f.get(t, s)))
        .collect())
}

/// All `y` with `α(y) = y`, ascending.
pub fn fixed_points(alpha: &EndoMap) -> Vec<usize> {
    alpha
        .map()
        .iter()
        .enumerate()
        .filter(|&(y, &ay)| y == ay)
        .map(|(y, _)| y)
        .collect()
}

/// Builds `g` (diagonal form, or section form when `sec` is given) and the
/// row-by-row proof that it is not a column: column `s` disagrees with `g`
/// at row `s` (diagonal) or `β̄(s)` (section).
pub fn cantor_witness(
    f: &EvalMatrix,
    alpha: &EndoMap,
    sec: Option<&Section>,
) -> Result<NonRepresentabilityReport> {
    let fixed = fixed_points(alpha);
    if !fixed.is_empty() {
        return Err(DiagonalError::NotApplicable {
            fixed_points: fixed,
        });
    }
    let (construction, g, witness) = match sec {
        None => {
            let g = compose_diagonal(f, alpha)?;
            (Construction::Diagonal, g, (0..f.cols().size()).collect())
        }
        Some(sec) => {
            let g = compose_with_section(f, alpha, sec)?;
            (Construction::Section, g, sec.beta_bar().to_vec())
        }
    };
    let report = NonRepresentabilityReport {
        construction,
        g,
        witness,
    };
    // With α fixed-point-free this cannot fail; it is the proof step itself.
    debug_assert!(report.verify(f));
    Ok(report)
}

/// The Diagonal Theorem in its weak form: only the constructed `g` needs to
/// be representable. Picks the smallest representing column.
pub fn weak_diagonal_fixed_point(
    f: &EvalMatrix,
    alpha: &EndoMap,
) -> Result<Option<FixedPointWitness>> {
    let g = compose_diagonal(f, alpha)?;
    let cols = representing_columns(&g, f)?;
    Ok(cols.first().map(|&t| {
        let value = f.get(t, t);
        debug_assert_eq!(alpha.apply(value), value);
        FixedPointWitness {
            representing_column: t,
            value,
        }
    }))
}
