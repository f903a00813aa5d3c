//! All serialization: the JSON problem-document format for states and
//! operators, and the JSON mirrors of the report types.
//!
//! Complex numbers are two-element arrays [re, im]; matrices are arrays of
//! row arrays. Top-level keys: "state", "A", "B", optional "psi_perp". A
//! document may carry any subset of the keys, so one format serves both the
//! state file and the operators file.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use uncertainty_core::{BoundReport, HermitianOperator, MusVerdict, StateVector, C64};

use crate::error::{CliError, Result};

/// Raw parsed document, before validation.
#[derive(Debug, Clone, Default, Deserialize)]
pub struct ProblemDocument {
    pub state: Option<Vec<[f64; 2]>>,
    #[serde(rename = "A")]
    pub a: Option<Vec<Vec<[f64; 2]>>>,
    #[serde(rename = "B")]
    pub b: Option<Vec<Vec<[f64; 2]>>>,
    pub psi_perp: Option<Vec<[f64; 2]>>,
}

/// Parses raw bytes as a problem document. Never panics on malformed input.
pub fn parse_problem_document(bytes: &[u8]) -> Result<ProblemDocument> {
    serde_json::from_slice(bytes).map_err(|e| CliError::Validation(format!("malformed JSON: {e}")))
}

/// Merges two documents (state file first, operators file second); later
/// keys win.
pub fn merge_documents(first: ProblemDocument, second: ProblemDocument) -> ProblemDocument {
    ProblemDocument {
        state: second.state.or(first.state),
        a: second.a.or(first.a),
        b: second.b.or(first.b),
        psi_perp: second.psi_perp.or(first.psi_perp),
    }
}

fn vector_from_pairs(pairs: &[[f64; 2]], what: &str) -> Result<DVector<C64>> {
    if pairs.iter().flatten().any(|x| !x.is_finite()) {
        return Err(CliError::Validation(format!("{what}: non-finite entry")));
    }
    Ok(DVector::from_iterator(
        pairs.len(),
        pairs.iter().map(|p| C64::new(p[0], p[1])),
    ))
}

fn matrix_from_rows(rows: &[Vec<[f64; 2]>], what: &str) -> Result<DMatrix<C64>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Validation(format!(
            "{what}: matrix is not square"
        )));
    }
    if rows.iter().flatten().flatten().any(|x| !x.is_finite()) {
        return Err(CliError::Validation(format!("{what}: non-finite entry")));
    }
    let mut m = DMatrix::<C64>::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            m[(i, j)] = C64::new(p[0], p[1]);
        }
    }
    Ok(m)
}

/// Validated state from the "state" key. A norm inside [0.9, 1.1] is
/// renormalized (the returned flag reports it, for a warning); anything
/// further from 1 is rejected.
pub fn state_from_document(doc: &ProblemDocument) -> Result<(StateVector, bool)> {
    let pairs = doc
        .state
        .as_ref()
        .ok_or_else(|| CliError::Validation("missing \"state\" key".into()))?;
    let raw = vector_from_pairs(pairs, "state")?;
    let norm = raw.norm();
    if !(0.9..=1.1).contains(&norm) {
        return Err(CliError::Validation(format!(
            "state norm {norm} outside [0.9, 1.1]"
        )));
    }
    let renormalized = (norm - 1.0).abs() > 1e-12;
    let state = StateVector::normalize(raw)?;
    Ok((state, renormalized))
}

/// Validated Hermitian operators from the "A" and "B" keys.
pub fn operators_from_document(
    doc: &ProblemDocument,
) -> Result<(HermitianOperator, HermitianOperator)> {
    let a_rows = doc
        .a
        .as_ref()
        .ok_or_else(|| CliError::Validation("missing \"A\" key".into()))?;
    let b_rows = doc
        .b
        .as_ref()
        .ok_or_else(|| CliError::Validation("missing \"B\" key".into()))?;
    let a = HermitianOperator::new(matrix_from_rows(a_rows, "A")?)
        .map_err(|e| CliError::Validation(format!("A: {e}")))?;
    let b = HermitianOperator::new(matrix_from_rows(b_rows, "B")?)
        .map_err(|e| CliError::Validation(format!("B: {e}")))?;
    if a.dim() != b.dim() {
        return Err(CliError::Validation(format!(
            "A is {}-dimensional but B is {}-dimensional",
            a.dim(),
            b.dim()
        )));
    }
    Ok((a, b))
}

/// Validated perpendicular state from the "psi_perp" key, same norm policy
/// as the state.
pub fn perp_from_document(doc: &ProblemDocument) -> Result<(StateVector, bool)> {
    let pairs = doc
        .psi_perp
        .as_ref()
        .ok_or_else(|| CliError::Validation("missing \"psi_perp\" key".into()))?;
    let raw = vector_from_pairs(pairs, "psi_perp")?;
    let norm = raw.norm();
    if !(0.9..=1.1).contains(&norm) {
        return Err(CliError::Validation(format!(
            "psi_perp norm {norm} outside [0.9, 1.1]"
        )));
    }
    let renormalized = (norm - 1.0).abs() > 1e-12;
    let state = StateVector::normalize(raw)?;
    Ok((state, renormalized))
}

/// JSON mirror of a [`BoundReport`], field names as in the type.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReportJson {
    pub relation: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    pub sign_choice: i8,
    pub term_commutator: f64,
    pub term_perp: f64,
    pub perp_term_vanishes: bool,
}

impl From<&BoundReport> for BoundReportJson {
    fn from(r: &BoundReport) -> Self {
        Self {
            relation: r.relation.as_str(),
            lhs: r.lhs,
            rhs: r.rhs,
            gap: r.gap,
            sign_choice: r.sign_choice,
            term_commutator: r.term_commutator,
            term_perp: r.term_perp,
            perp_term_vanishes: r.perp_term_vanishes,
        }
    }
}

/// JSON mirror of a [`MusVerdict`].
#[derive(Debug, Clone, Serialize)]
pub struct MusVerdictJson {
    pub is_product_mus: bool,
    pub is_sum_mus: bool,
    pub gamma: Option<f64>,
    #[serde(rename = "residual_AiB")]
    pub residual_aib: f64,
    #[serde(rename = "branch_AiB")]
    pub branch_aib: i8,
    #[serde(rename = "residual_AigB")]
    pub residual_aigb: Option<f64>,
    #[serde(rename = "residual_A2B2")]
    pub residual_a2b2: f64,
    pub residual_var_lhs: Option<f64>,
    pub residual_var_rhs: Option<f64>,
    pub tol: f64,
}

impl From<&MusVerdict> for MusVerdictJson {
    fn from(v: &MusVerdict) -> Self {
        Self {
            is_product_mus: v.is_product_mus,
            is_sum_mus: v.is_sum_mus,
            gamma: v.gamma,
            residual_aib: v.residual_aib,
            branch_aib: v.branch_aib,
            residual_aigb: v.residual_aigb,
            residual_a2b2: v.residual_a2b2,
            residual_var_lhs: v.residual_var_lhs,
            residual_var_rhs: v.residual_var_rhs,
            tol: v.tol,
        }
    }
}

/// Formats a float with 17 significant digits so it round-trips through
/// text bit-exactly.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}
