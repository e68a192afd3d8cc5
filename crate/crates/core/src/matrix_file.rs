//! JSON matrix files:
//!
//! ```json
//! {"y_labels": [..], "t_labels": [..], "s_labels": [..],
//!  "alpha": [ints], "f": [[ints]], "beta": [ints], "beta_bar": [ints]}
//! ```
//!
//! Indices are 0-based. `beta`/`beta_bar` are optional and only used for the
//! section form. Validation errors name the offending field.

use crate::diagonal::{Carrier, DiagonalError, EndoMap, EvalMatrix, Section};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatrixFileError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {source}")]
    Field {
        field: &'static str,
        #[source]
        source: DiagonalError,
    },
    #[error("field `{field}`: {message}")]
    Missing {
        field: &'static str,
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub y_labels: Vec<String>,
    pub t_labels: Vec<String>,
    pub s_labels: Vec<String>,
    pub alpha: Vec<usize>,
    pub f: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_bar: Option<Vec<usize>>,
}

/// A validated matrix file.
#[derive(Debug, Clone)]
pub struct MatrixInput {
    pub f: EvalMatrix,
    pub alpha: EndoMap,
    pub section: Option<Section>,
}

fn field(field: &'static str) -> impl FnOnce(DiagonalError) -> MatrixFileError {
    move |source| MatrixFileError::Field { field, source }
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self, MatrixFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn validate(&self) -> Result<MatrixInput, MatrixFileError> {
        let y = Carrier::labelled(self.y_labels.iter().cloned()).map_err(field("y_labels"))?;
        let t = Carrier::labelled(self.t_labels.iter().cloned()).map_err(field("t_labels"))?;
        let s = Carrier::labelled(self.s_labels.iter().cloned()).map_err(field("s_labels"))?;
        let alpha = EndoMap::new(y.clone(), self.alpha.clone()).map_err(field("alpha"))?;
        let f = EvalMatrix::new(t.clone(), s.clone(), y, self.f.clone()).map_err(field("f"))?;
        let section = match (&self.beta, &self.beta_bar) {
            (None, None) => None,
            (Some(beta), Some(beta_bar)) => Some(
                Section::new(t.size(), s.size(), beta.clone(), beta_bar.clone())
                    .map_err(field("beta"))?,
            ),
            (Some(_), None) => {
                return Err(MatrixFileError::Missing {
                    field: "beta_bar",
                    message: "required when `beta` is given".into(),
                })
            }
            (None, Some(_)) => {
                return Err(MatrixFileError::Missing {
                    field: "beta",
                    message: "required when `beta_bar` is given".into(),
                })
            }
        };
        Ok(MatrixInput { f, alpha, section })
    }
}
