//! The classical diagonal paradoxes as finite tables fed to
//! [`crate::diagonal`]: Cantor's powerset theorem, Russell, Grelling and the
//! Liar (all one relation), the strong Liar over `{T, M, F}`, and Richard's
//! digit table.

use crate::diagonal::{
    cantor_witness, Carrier, DiagonalError, EndoMap, EvalMatrix, NonRepresentabilityReport,
};
use crate::matrix_file::{MatrixFile, MatrixFileError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("table must be non-empty")]
    Empty,
    #[error("{what} must be square: {rows} rows but row {row} has {len} entries")]
    NotSquare {
        what: &'static str,
        rows: usize,
        row: usize,
        len: usize,
    },
    #[error("subset {subset} mentions element {element}, outside a universe of size {size}")]
    ElementOutOfRange {
        subset: usize,
        element: usize,
        size: usize,
    },
    #[error("{0} is not a decimal digit")]
    BadDigit(u8),
    #[error("expansion `{0}` is not of the form 0.ddd..")]
    BadExpansion(String),
    #[error("expansion `{expansion}` has {found} decimals, need {needed}")]
    ShortExpansion {
        expansion: String,
        found: usize,
        needed: usize,
    },
    #[error("relation entries must be 0 or 1, found {0}")]
    NotABit(usize),
    #[error(transparent)]
    Diagonal(#[from] DiagonalError),
    #[error(transparent)]
    MatrixFile(#[from] MatrixFileError),
}

fn check_square<T>(what: &'static str, rows: &[Vec<T>]) -> Result<usize, InstanceError> {
    let n = rows.len();
    if n == 0 {
        return Err(InstanceError::Empty);
    }
    for (row, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(InstanceError::NotSquare {
                what,
                rows: n,
                row,
                len: r.len(),
            });
        }
    }
    Ok(n)
}

fn bits() -> Carrier {
    Carrier::labelled(["0", "1"]).expect("two distinct labels")
}

fn negation() -> EndoMap {
    EndoMap::new(bits(), vec![1, 0]).expect("valid map")
}

/// A proposed enumeration `S_0, .., S_{n-1}` of subsets of `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFamily {
    universe: usize,
    subsets: Vec<BTreeSet<usize>>,
}

impl SubsetFamily {
    /// One subset per element of the universe, so `universe = subsets.len()`.
    pub fn new(subsets: Vec<BTreeSet<usize>>) -> Result<Self, InstanceError> {
        let universe = subsets.len();
        if universe == 0 {
            return Err(InstanceError::Empty);
        }
        for (subset, s) in subsets.iter().enumerate() {
            if let Some(&element) = s.iter().find(|&&e| e >= universe) {
                return Err(InstanceError::ElementOutOfRange {
                    subset,
                    element,
                    size: universe,
                });
            }
        }
        Ok(SubsetFamily { universe, subsets })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn subsets(&self) -> &[BTreeSet<usize>] {
        &self.subsets
    }

    /// `rel[n][m] = (n ∈ S_m)`.
    pub fn membership_matrix(&self) -> DescribesMatrix {
        let labels = (0..self.universe).map(|m| format!("S{m}")).collect();
        let rel = (0..self.universe)
            .map(|n| self.subsets.iter().map(|s| s.contains(&n)).collect())
            .collect();
        DescribesMatrix { labels, rel }
    }
}

/// `rel[i][j]` is true iff item `j` describes (contains, is true of) item `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescribesMatrix {
    labels: Vec<String>,
    rel: Vec<Vec<bool>>,
}

impl DescribesMatrix {
    pub fn new(labels: Vec<String>, rel: Vec<Vec<bool>>) -> Result<Self, InstanceError> {
        let n = check_square("relation", &rel)?;
        Carrier::labelled(labels.iter().cloned())?;
        if labels.len() != n {
            return Err(DiagonalError::DimensionMismatch {
                what: "labels",
                expected: n,
                found: labels.len(),
            }
            .into());
        }
        Ok(DescribesMatrix { labels, rel })
    }

    /// Reads a 0/1 matrix file (square, with `t_labels` naming the items).
    pub fn from_matrix_file(file: &MatrixFile) -> Result<Self, InstanceError> {
        file.validate()?;
        let rel = file
            .f
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| match v {
                        0 => Ok(false),
                        1 => Ok(true),
                        other => Err(InstanceError::NotABit(other)),
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<bool>>, _>>()?;
        DescribesMatrix::new(file.t_labels.clone(), rel)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rel(&self) -> &[Vec<bool>] {
        &self.rel
    }

    pub fn size(&self) -> usize {
        self.rel.len()
    }

    pub fn to_eval_matrix(&self) -> EvalMatrix {
        let items = Carrier::labelled(self.labels.iter().cloned()).expect("validated labels");
        let cell = self
            .rel
            .iter()
            .map(|row| row.iter().map(|&b| usize::from(b)).collect())
            .collect();
        EvalMatrix::new(items.clone(), items, bits(), cell).expect("validated shape")
    }
}

/// `G = {n | n ∉ S_n}` together with the certificate that no `S_m` equals it.
pub fn powerset_instance(fam: &SubsetFamily) -> (Vec<bool>, NonRepresentabilityReport) {
    let g: Vec<bool> = (0..fam.universe)
        .map(|n| !fam.subsets[n].contains(&n))
        .collect();
    let f = fam.membership_matrix().to_eval_matrix();
    let report = cantor_witness(&f, &negation(), None).expect("negation has no fixed point");
    (g, report)
}

/// The heterological set: items that do not describe themselves. Covers
/// Russell (membership), Grelling (adjectives) and the Liar (sentences).
pub fn relation_instance(m: &DescribesMatrix) -> (Vec<bool>, NonRepresentabilityReport) {
    let f = m.to_eval_matrix();
    let report = cantor_witness(&f, &negation(), None).expect("negation has no fixed point");
    let het = report.g.values().iter().map(|&v| v == 1).collect();
    (het, report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Truth {
    T,
    M,
    F,
}

impl Truth {
    pub const ALL: [Truth; 3] = [Truth::T, Truth::M, Truth::F];

    pub fn index(self) -> usize {
        match self {
            Truth::T => 0,
            Truth::M => 1,
            Truth::F => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<Truth> {
        Truth::ALL.get(i).copied()
    }

    /// `T ↦ F`, `M ↦ T`, `F ↦ T`.
    pub fn strong_liar_negation(self) -> Truth {
        match self {
            Truth::T => Truth::F,
            Truth::M | Truth::F => Truth::T,
        }
    }
}

pub fn truth_carrier() -> Carrier {
    Carrier::labelled(["T", "M", "F"]).expect("distinct labels")
}

pub fn strong_liar_alpha() -> EndoMap {
    let map = Truth::ALL
        .iter()
        .map(|t| t.strong_liar_negation().index())
        .collect();
    EndoMap::new(truth_carrier(), map).expect("valid map")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriValuedMatrix {
    labels: Vec<String>,
    cells: Vec<Vec<Truth>>,
}

impl TriValuedMatrix {
    pub fn new(labels: Vec<String>, cells: Vec<Vec<Truth>>) -> Result<Self, InstanceError> {
        let n = check_square("three-valued table", &cells)?;
        Carrier::labelled(labels.iter().cloned())?;
        if labels.len() != n {
            return Err(DiagonalError::DimensionMismatch {
                what: "labels",
                expected: n,
                found: labels.len(),
            }
            .into());
        }
        Ok(TriValuedMatrix { labels, cells })
    }

    /// Unlabelled table; items are named `s0, s1, ..`.
    pub fn from_cells(cells: Vec<Vec<Truth>>) -> Result<Self, InstanceError> {
        let labels = (0..cells.len()).map(|i| format!("s{i}")).collect();
        TriValuedMatrix::new(labels, cells)
    }

    /// Reads a matrix file whose `y_labels` are `T`, `M`, `F` in that order.
    pub fn from_matrix_file(file: &MatrixFile) -> Result<Self, InstanceError> {
        file.validate()?;
        if file.y_labels != ["T", "M", "F"] {
            return Err(DiagonalError::DimensionMismatch {
                what: "y_labels (expected [T, M, F])",
                expected: 3,
                found: file.y_labels.len(),
            }
            .into());
        }
        let cells = file
            .f
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| Truth::from_index(v).expect("validated"))
                    .collect()
            })
            .collect();
        TriValuedMatrix::new(file.t_labels.clone(), cells)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cells(&self) -> &[Vec<Truth>] {
        &self.cells
    }

    pub fn to_eval_matrix(&self) -> EvalMatrix {
        let items = Carrier::labelled(self.labels.iter().cloned()).expect("validated labels");
        let cell = self
            .cells
            .iter()
            .map(|row| row.iter().map(|t| t.index()).collect())
            .collect();
        EvalMatrix::new(items.clone(), items, truth_carrier(), cell).expect("validated shape")
    }
}

pub fn strong_liar_instance(m: &TriValuedMatrix) -> (Vec<Truth>, NonRepresentabilityReport) {
    let f = m.to_eval_matrix();
    let report = cantor_witness(&f, &strong_liar_alpha(), None)
        .expect("strong liar negation has no fixed point");
    let g = report
        .g
        .values()
        .iter()
        .map(|&v| Truth::from_index(v).expect("index in {T, M, F}"))
        .collect();
    (g, report)
}

/// `digits[i][j]` is digit `i` of the `j`-th real: row 0 is the units digit,
/// row `k ≥ 1` the `k`-th decimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitMatrix {
    labels: Vec<String>,
    digits: Vec<Vec<u8>>,
}

impl DigitMatrix {
    pub fn new(labels: Vec<String>, digits: Vec<Vec<u8>>) -> Result<Self, InstanceError> {
        let n = check_square("digit table", &digits)?;
        if let Some(&d) = digits.iter().flatten().find(|&&d| d > 9) {
            return Err(InstanceError::BadDigit(d));
        }
        Carrier::labelled(labels.iter().cloned())?;
        if labels.len() != n {
            return Err(DiagonalError::DimensionMismatch {
                what: "labels",
                expected: n,
                found: labels.len(),
            }
            .into());
        }
        Ok(DigitMatrix { labels, digits })
    }

    /// Builds the table from `n` decimal expansions `0.d1d2..`; each must
    /// carry at least `n - 1` decimals.
    pub fn from_expansions(reals: &[(String, String)]) -> Result<Self, InstanceError> {
        let n = reals.len();
        if n == 0 {
            return Err(InstanceError::Empty);
        }
        let mut columns = Vec::with_capacity(n);
        for (_, expansion) in reals {
            let (int, frac) = expansion
                .split_once('.')
                .ok_or_else(|| InstanceError::BadExpansion(expansion.clone()))?;
            if int != "0" || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(InstanceError::BadExpansion(expansion.clone()));
            }
            if frac.len() < n - 1 {
                return Err(InstanceError::ShortExpansion {
                    expansion: expansion.clone(),
                    found: frac.len(),
                    needed: n - 1,
                });
            }
            let col: Vec<u8> = std::iter::once(0)
                .chain(frac.bytes().take(n - 1).map(|b| b - b'0'))
                .collect();
            columns.push(col);
        }
        let digits = (0..n)
            .map(|i| columns.iter().map(|c| c[i]).collect())
            .collect();
        let labels = reals.iter().map(|(l, _)| l.clone()).collect();
        DigitMatrix::new(labels, digits)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, position: usize, real: usize) -> u8 {
        self.digits[position][real]
    }

    pub fn size(&self) -> usize {
        self.digits.len()
    }

    pub fn to_eval_matrix(&self) -> EvalMatrix {
        let positions = Carrier::new(self.size()).expect("non-empty");
        let reals = Carrier::labelled(self.labels.iter().cloned()).expect("validated labels");
        let cell = self
            .digits
            .iter()
            .map(|row| row.iter().map(|&d| usize::from(d)).collect())
            .collect();
        EvalMatrix::new(positions, reals, decimal_digits(), cell).expect("validated shape")
    }
}

fn decimal_digits() -> Carrier {
    Carrier::labelled((0..10).map(|d| d.to_string())).expect("distinct labels")
}

/// `i ↦ 9 - i` on decimal digits.
pub fn nines_complement() -> EndoMap {
    EndoMap::new(decimal_digits(), (0..10).map(|i| 9 - i).collect()).expect("valid map")
}

pub fn richard_instance(m: &DigitMatrix) -> (Vec<u8>, NonRepresentabilityReport) {
    let report = cantor_witness(&m.to_eval_matrix(), &nines_complement(), None)
        .expect("9 - i has no fixed point");
    let digits = report.g.values().iter().map(|&v| v as u8).collect();
    (digits, report)
}

/// Bundled demonstration tables.
pub mod demo {
    use super::*;
    use serde::Deserialize;

    pub const GRELLING_JSON: &str = include_str!("../data/grelling.json");
    pub const STRONG_LIAR_JSON: &str = include_str!("../data/strong_liar.json");
    pub const RICHARD_JSON: &str = include_str!("../data/richard.json");
    pub const SECTION_JSON: &str = include_str!("../data/section_demo.json");

    #[derive(Deserialize)]
    struct RichardFile {
        reals: Vec<RichardReal>,
    }

    #[derive(Deserialize)]
    struct RichardReal {
        label: String,
        expansion: String,
    }

    pub fn grelling() -> DescribesMatrix {
        let file = MatrixFile::parse(GRELLING_JSON).expect("bundled file parses");
        DescribesMatrix::from_matrix_file(&file).expect("bundled file is valid")
    }

    pub fn strong_liar() -> TriValuedMatrix {
        let file = MatrixFile::parse(STRONG_LIAR_JSON).expect("bundled file parses");
        TriValuedMatrix::from_matrix_file(&file).expect("bundled file is valid")
    }

    /// Sixteen reals; column 15 is π/10.
    pub fn richard() -> DigitMatrix {
        let file: RichardFile = serde_json::from_str(RICHARD_JSON).expect("bundled file parses");
        let reals: Vec<(String, String)> = file
            .reals
            .into_iter()
            .map(|r| (r.label, r.expansion))
            .collect();
        DigitMatrix::from_expansions(&reals).expect("bundled file is valid")
    }

    /// `S_m = {n | n divides m}` over `{0, .., 7}`, with `0 | 0`.
    pub fn divisor_family() -> SubsetFamily {
        let n = 8;
        let subsets = (0..n)
            .map(|m| {
                (0..n)
                    .filter(|&d| if d == 0 { m == 0 } else { m % d == 0 })
                    .collect()
            })
            .collect();
        SubsetFamily::new(subsets).expect("in range")
    }

    /// The first eight hereditarily finite sets under the Ackermann coding:
    /// set `j` contains set `i` iff bit `i` of `j` is set.
    pub fn hereditarily_finite_sets() -> DescribesMatrix {
        let n = 8usize;
        let labels = (0..n).map(hf_label).collect();
        let rel = (0..n)
            .map(|i| (0..n).map(|j| (j >> i) & 1 == 1).collect())
            .collect();
        DescribesMatrix::new(labels, rel).expect("square")
    }

    fn hf_label(code: usize) -> String {
        let members: Vec<String> = (0..usize::BITS as usize)
            .filter(|&i| (code >> i) & 1 == 1)
            .map(hf_label)
            .collect();
        format!("{{{}}}", members.join(","))
    }
}
