//! The three uncertainty relations (Heisenberg–Robertson product,
//! Maccone–Pati sum, and the weaker sum relation) plus the construction of
//! the orthogonal state that saturates the sum relation.
//!
//! Sign convention used throughout: with c = i⟨\[A,B\]⟩ (real), the sign choice
//! is σ = +1 for c ≥ 0 and −1 otherwise, so σ·c = |c| is the non-negative
//! commutator term. The same σ fixes the ± inside |⟨ψ|A±iB|ψ⊥⟩|² and the ∓
//! of the saturating vector |f⟩ = (C−iσD)|ψ⟩, which obeys ‖f‖² = lhs − |c|.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::hilbert::{commutator_mean, project_out, variance, HermitianOperator, StateVector};
use crate::{tol, C64};

/// Which uncertainty relation a [`BoundReport`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Product,
    MpSum,
    WeakSum,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Product => "product",
            Relation::MpSum => "mp_sum",
            Relation::WeakSum => "weak_sum",
        }
    }
}

/// One evaluation of an uncertainty relation.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub relation: Relation,
    pub lhs: f64,
    pub rhs: f64,
    /// lhs − rhs, exactly as computed.
    pub gap: f64,
    /// +1 or −1, chosen so the commutator term is non-negative.
    pub sign_choice: i8,
    /// ±i⟨\[A,B\]⟩ after the sign choice, i.e. |i⟨\[A,B\]⟩| ≥ 0.
    pub term_commutator: f64,
    /// |⟨ψ|A±iB|ψ⊥⟩|²; zero when the relation has no ψ⊥ term.
    pub term_perp: f64,
    /// True when a supplied ψ⊥ is numerically orthogonal to (A±iB)|ψ⟩, so
    /// the Maccone–Pati bound degenerates to the weak bound. Always false
    /// for the product and weak relations.
    pub perp_term_vanishes: bool,
}

/// Centered operators C = A−⟨A⟩, D = B−⟨B⟩ for a given state.
#[derive(Debug, Clone)]
pub struct CenteredPair {
    c: DMatrix<C64>,
    d: DMatrix<C64>,
}

impl CenteredPair {
    pub fn new(psi: &StateVector, a: &HermitianOperator, b: &HermitianOperator) -> Result<Self> {
        let mean_a = crate::hilbert::expectation(psi, a)?;
        let mean_b = crate::hilbert::expectation(psi, b)?;
        let id = DMatrix::<C64>::identity(a.dim(), a.dim());
        Ok(Self {
            c: a.matrix() - &id * C64::new(mean_a, 0.0),
            d: b.matrix() - &id * C64::new(mean_b, 0.0),
        })
    }

    pub fn c(&self) -> &DMatrix<C64> {
        &self.c
    }

    pub fn d(&self) -> &DMatrix<C64> {
        &self.d
    }

    /// |f⟩ = (C − iσD)|ψ⟩ for branch sign σ ∈ {+1, −1}.
    pub fn f_vector(&self, psi: &StateVector, sigma: f64) -> DVector<C64> {
        &self.c * psi.amplitudes() - (&self.d * psi.amplitudes()) * C64::new(0.0, sigma)
    }
}

/// σ = +1 for c ≥ 0, else −1 (ties default to +1).
pub fn sign_choice(c: f64) -> f64 {
    if c >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

fn relation_inputs(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
) -> Result<(f64, f64, f64, f64)> {
    let var_a = variance(psi, a)?;
    let var_b = variance(psi, b)?;
    let c = commutator_mean(psi, a, b)?;
    Ok((var_a, var_b, c, sign_choice(c)))
}

/// Heisenberg–Robertson in square-root form: ΔAΔB ≥ ½|⟨\[A,B\]⟩|.
///
/// For a common eigenstate of A and B both sides come out 0 rather than an
/// error; that degenerate case is what the sum relations remedy.
pub fn product_bound(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
) -> Result<BoundReport> {
    let (var_a, var_b, c, sigma) = relation_inputs(psi, a, b)?;
    let lhs = (var_a * var_b).sqrt();
    let term_commutator = sigma * c;
    let rhs = 0.5 * term_commutator;
    Ok(BoundReport {
        relation: Relation::Product,
        lhs,
        rhs,
        gap: lhs - rhs,
        sign_choice: sigma as i8,
        term_commutator,
        term_perp: 0.0,
        perp_term_vanishes: false,
    })
}

/// Weaker sum relation: ΔA² + ΔB² ≥ |i⟨\[A,B\]⟩|.
///
/// Its gap equals ‖(C−iσD)ψ‖² (the Cauchy–Schwarz vector of the
/// Maccone–Pati proof), which is what ties saturation to eigenstates of
/// A∓iB.
pub fn weak_sum_bound(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
) -> Result<BoundReport> {
    let (var_a, var_b, c, sigma) = relation_inputs(psi, a, b)?;
    let lhs = var_a + var_b;
    let term_commutator = sigma * c;
    Ok(BoundReport {
        relation: Relation::WeakSum,
        lhs,
        rhs: term_commutator,
        gap: lhs - term_commutator,
        sign_choice: sigma as i8,
        term_commutator,
        term_perp: 0.0,
        perp_term_vanishes: false,
    })
}

/// Maccone–Pati sum relation:
/// ΔA² + ΔB² ≥ ±i⟨\[A,B\]⟩ + |⟨ψ|A±iB|ψ⊥⟩|².
///
/// `psi_perp` must be orthogonal to `psi` within [`tol::PERP_ADMISSION`]
/// (loose enough to accept states deserialized from rounded decimal text).
/// A ψ⊥ orthogonal to (A±iB)|ψ⟩ is accepted (the inequality still holds,
/// with a vanishing second term) and flagged via `perp_term_vanishes`.
pub fn mp_sum_bound(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
    psi_perp: &StateVector,
) -> Result<BoundReport> {
    if psi.dim() != psi_perp.dim() {
        return Err(Error::DimensionMismatch {
            expected: psi.dim(),
            found: psi_perp.dim(),
        });
    }
    let overlap = psi.amplitudes().dotc(psi_perp.amplitudes()).norm();
    if overlap > tol::PERP_ADMISSION {
        return Err(Error::PerpNotOrthogonal { overlap });
    }
    let (var_a, var_b, c, sigma) = relation_inputs(psi, a, b)?;
    let lhs = var_a + var_b;
    let term_commutator = sigma * c;
    // ⟨ψ|(A+iσB)|ψ⊥⟩ = ⟨(A−iσB)ψ|ψ⊥⟩
    let apsi = a.apply(psi)?;
    let bpsi = b.apply(psi)?;
    let lowered = &apsi - &bpsi * C64::new(0.0, sigma);
    let amp = lowered.dotc(psi_perp.amplitudes());
    let term_perp = amp.norm_sqr();
    let rhs = term_commutator + term_perp;
    Ok(BoundReport {
        relation: Relation::MpSum,
        lhs,
        rhs,
        gap: lhs - rhs,
        sign_choice: sigma as i8,
        term_commutator,
        term_perp,
        perp_term_vanishes: term_perp < tol::PERP_TERM_VANISHES,
    })
}

/// The orthogonal state |f⟩ ∝ (C−iσD)|ψ⟩ that turns the Maccone–Pati
/// inequality into an equality.
///
/// Fails with [`Error::AlreadySaturated`] when (C−iσD)|ψ⟩ is numerically
/// null: the state already saturates the sum relation and no ψ⊥ is needed.
pub fn saturating_perp(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
) -> Result<StateVector> {
    let c = commutator_mean(psi, a, b)?;
    let sigma = sign_choice(c);
    let pair = CenteredPair::new(psi, a, b)?;
    let f = pair.f_vector(psi, sigma);
    if f.norm() <= tol::NULL_VECTOR {
        return Err(Error::AlreadySaturated);
    }
    // f ⊥ ψ exactly in exact arithmetic; re-project so the numerical
    // orthogonality survives even when ‖f‖ is small.
    let f = project_out(psi, &f)?;
    if f.norm() <= tol::NULL_VECTOR {
        return Err(Error::AlreadySaturated);
    }
    StateVector::normalize(f)
}
