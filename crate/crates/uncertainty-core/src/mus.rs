//! Minimum-uncertainty-state predicates and the variational residuals that
//! characterize them: saturation of the product and weak-sum relations,
//! eigenstate residuals for A∓iB, A±iγB and A²+B², and the two variational
//! eigenvalue equations (minimizing the sum of variances, maximizing the
//! Maccone–Pati right-hand side).

use nalgebra::DMatrix;

use crate::bounds::{saturating_perp, sign_choice, weak_sum_bound, CenteredPair};
use crate::error::{Error, Result};
use crate::hilbert::{commutator_mean, variance, HermitianOperator, StateVector};
use crate::{tol, C64};

/// Everything the MUS analysis knows about one (state, A, B) triple.
///
/// `gamma`, `residual_var_lhs` and `residual_var_rhs` are absent in the
/// degenerate cases (ΔB ≈ 0, a common eigenstate, a vanishing RHS
/// denominator) so every present value is finite.
#[derive(Debug, Clone, PartialEq)]
pub struct MusVerdict {
    pub is_product_mus: bool,
    pub is_sum_mus: bool,
    /// ΔA/ΔB; absent when ΔB < 1e-13.
    pub gamma: Option<f64>,
    /// min over both branches of ‖(C∓iD)ψ‖.
    pub residual_aib: f64,
    /// Branch sign s of the smaller residual, i.e. the s in C+isD.
    pub branch_aib: i8,
    /// min over both branches of ‖(C∓iγD)ψ‖; absent with `gamma`.
    pub residual_aigb: Option<f64>,
    /// Eigenstate residual of A²+B².
    pub residual_a2b2: f64,
    pub residual_var_lhs: Option<f64>,
    pub residual_var_rhs: Option<f64>,
    pub tol: f64,
}

/// Saturation predicate for the product relation:
/// |ΔAΔB − ½|⟨\[A,B\]⟩|| ≤ tol.
pub fn is_product_mus(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
    tol: f64,
) -> Result<bool> {
    let var_a = variance(psi, a)?;
    let var_b = variance(psi, b)?;
    let c = commutator_mean(psi, a, b)?;
    Ok(((var_a * var_b).sqrt() - 0.5 * c.abs()).abs() <= tol)
}

/// Saturation predicate for the weak sum relation: gap ≤ tol.
///
/// By the gap identity this is equivalent to ‖(C−iσD)ψ‖² ≤ tol, which is
/// what makes sum-MUS the eigenstates of A∓iB.
pub fn is_sum_mus(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
    tol: f64,
) -> Result<bool> {
    Ok(weak_sum_bound(psi, a, b)?.gap <= tol)
}

/// ‖Mψ − ⟨ψ|M|ψ⟩ψ‖; zero exactly when ψ is an eigenvector of M.
///
/// `normal` is the caller's claim that M is a normal matrix (so zero
/// residual means membership in an orthogonal eigenbasis); when set, the
/// claim is verified and a violation is an error. A∓iγB is generically
/// *not* normal, so those callers pass false.
pub fn eigenstate_residual(psi: &StateVector, m: &DMatrix<C64>, normal: bool) -> Result<f64> {
    if m.nrows() != m.ncols() || m.nrows() != psi.dim() {
        return Err(Error::DimensionMismatch {
            expected: psi.dim(),
            found: m.nrows(),
        });
    }
    if normal {
        let comm = m * m.adjoint() - m.adjoint() * m;
        let defect = comm.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if defect > 1e-10 {
            return Err(Error::NotNormal { defect });
        }
    }
    let mpsi = m * psi.amplitudes();
    let lambda = psi.amplitudes().dotc(&mpsi);
    Ok((mpsi - psi.amplitudes() * lambda).norm())
}

/// Residual of the eigenvalue equation for minimizing ΔA²+ΔB²:
/// ‖((C²+D²)/(ΔA²+ΔB²))ψ − ψ‖. Zero for the states where the sum of
/// variances is stationary.
pub fn variational_residual_lhs(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
) -> Result<f64> {
    let denom = variance(psi, a)? + variance(psi, b)?;
    if denom <= 1e-13 {
        return Err(Error::DegenerateCommonEigenstate);
    }
    let pair = CenteredPair::new(psi, a, b)?;
    let num = pair.c() * pair.c() + pair.d() * pair.d();
    let op = num / C64::new(denom, 0.0);
    let residual = (&op * psi.amplitudes() - psi.amplitudes()).norm();
    Ok(residual)
}

/// Residual of the eigenvalue equation for maximizing the Maccone–Pati RHS:
/// ‖((A²+B²)/(±i⟨\[A,B\]⟩ + |⟨ψ|A±iB|ψ⊥⟩|²))ψ − ψ‖.
///
/// A and B enter uncentered, exactly as the RHS functional is written; for
/// nonzero means this deliberately differs from [`variational_residual_lhs`].
pub fn variational_residual_rhs(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
    psi_perp: &StateVector,
) -> Result<f64> {
    let c = commutator_mean(psi, a, b)?;
    let sigma = sign_choice(c);
    let apsi = a.apply(psi)?;
    let bpsi = b.apply(psi)?;
    let lowered = &apsi - &bpsi * C64::new(0.0, sigma);
    let term_perp = lowered.dotc(psi_perp.amplitudes()).norm_sqr();
    rhs_residual_with_denominator(psi, a, b, sigma * c + term_perp)
}

fn rhs_residual_with_denominator(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
    denom: f64,
) -> Result<f64> {
    if denom <= 1e-13 {
        return Err(Error::ZeroDenominator);
    }
    let num = a.matrix() * a.matrix() + b.matrix() * b.matrix();
    let op = num / C64::new(denom, 0.0);
    Ok((&op * psi.amplitudes() - psi.amplitudes()).norm())
}

/// The ψ⊥ that maximizes the Maccone–Pati RHS: normalized (A−iσB)|ψ⟩.
///
/// Coincides with [`saturating_perp`] when ⟨A⟩ = ⟨B⟩ = 0; for nonzero means
/// it is generally *not* orthogonal to ψ (the variational stationarity
/// condition does not enforce orthogonality), which callers can see from the
/// overlap of the returned state.
pub fn rhs_maximizing_perp(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
) -> Result<StateVector> {
    let c = commutator_mean(psi, a, b)?;
    let sigma = sign_choice(c);
    let apsi = a.apply(psi)?;
    let bpsi = b.apply(psi)?;
    let w = &apsi - &bpsi * C64::new(0.0, sigma);
    if w.norm() <= tol::NULL_VECTOR {
        return Err(Error::AnnihilatedState);
    }
    StateVector::normalize(w)
}

/// Runs the full battery for one (ψ, A, B) triple.
///
/// `psi_perp` feeds the RHS-maximization residual; when absent the saturating
/// perpendicular is used, and when ψ itself already saturates (no such
/// state exists) the residual falls back to a vanishing ψ⊥ term.
pub fn analyze(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
    tol: f64,
    psi_perp: Option<&StateVector>,
) -> Result<MusVerdict> {
    let var_a = variance(psi, a)?;
    let var_b = variance(psi, b)?;
    let delta_a = var_a.sqrt();
    let delta_b = var_b.sqrt();
    let c = commutator_mean(psi, a, b)?;
    let sigma = sign_choice(c);

    let is_product = ((delta_a * delta_b) - 0.5 * c.abs()).abs() <= tol;
    let gap = (var_a + var_b) - sigma * c;
    let is_sum = gap <= tol;

    let pair = CenteredPair::new(psi, a, b)?;
    let res_minus = pair.f_vector(psi, 1.0).norm(); // C − iD
    let res_plus = pair.f_vector(psi, -1.0).norm(); // C + iD
    let (residual_aib, branch_aib) = if res_plus <= res_minus {
        (res_plus, 1i8)
    } else {
        (res_minus, -1i8)
    };

    let (gamma, residual_aigb) = if delta_b < 1e-13 {
        (None, None)
    } else {
        let g = delta_a / delta_b;
        let gd = pair.d() * C64::new(g, 0.0);
        let psi_amp = psi.amplitudes();
        let base = pair.c() * psi_amp;
        let gdpsi = &gd * psi_amp;
        let plus = (&base + &gdpsi * C64::new(0.0, 1.0)).norm();
        let minus = (&base - &gdpsi * C64::new(0.0, 1.0)).norm();
        (Some(g), Some(plus.min(minus)))
    };

    let a2b2 = a.matrix() * a.matrix() + b.matrix() * b.matrix();
    let residual_a2b2 = eigenstate_residual(psi, &a2b2, true)?;

    let residual_var_lhs = match variational_residual_lhs(psi, a, b) {
        Ok(r) => Some(r),
        Err(Error::DegenerateCommonEigenstate) => None,
        Err(e) => return Err(e),
    };

    let rhs_attempt = match psi_perp {
        Some(perp) => variational_residual_rhs(psi, a, b, perp),
        None => match saturating_perp(psi, a, b) {
            Ok(perp) => variational_residual_rhs(psi, a, b, &perp),
            // already saturated: the ψ⊥ term is identically zero
            Err(Error::AlreadySaturated) => rhs_residual_with_denominator(psi, a, b, sigma * c),
            Err(e) => return Err(e),
        },
    };
    let residual_var_rhs = match rhs_attempt {
        Ok(r) => Some(r),
        Err(Error::ZeroDenominator) => None,
        Err(e) => return Err(e),
    };

    Ok(MusVerdict {
        is_product_mus: is_product,
        is_sum_mus: is_sum,
        gamma,
        residual_aib,
        branch_aib,
        residual_aigb,
        residual_a2b2,
        residual_var_lhs,
        residual_var_rhs,
        tol,
    })
}
