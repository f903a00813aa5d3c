//! Dense complex vectors and Hermitian matrices: the substrate every other
//! module consumes.
//!
//! All operations are pure functions on immutable inputs; there is no shared
//! mutable state anywhere in this module.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::{tol, C64};

/// A normalized pure state over a finite basis.
///
/// Invariants: Euclidean norm 1 within [`tol::STATE_NORM`], dim ≥ 2.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: DVector<C64>,
}

impl StateVector {
    /// Wraps an already-normalized amplitude vector, verifying the invariants.
    pub fn new(amplitudes: DVector<C64>) -> Result<Self> {
        if amplitudes.len() < 2 {
            return Err(Error::InvalidDimension {
                dim: amplitudes.len(),
                min: 2,
            });
        }
        let norm = amplitudes.norm();
        let deviation = (norm - 1.0).abs();
        // a NaN norm must fail validation too
        if deviation.is_nan() || deviation > tol::STATE_NORM {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { amplitudes })
    }

    /// Rescales a raw vector to unit norm.
    ///
    /// Fails with [`Error::NullVector`] when the norm is below
    /// [`tol::NULL_VECTOR`]; callers that sample raw vectors (see
    /// `random_perp`) must handle that and resample.
    pub fn normalize(raw: DVector<C64>) -> Result<Self> {
        if raw.len() < 2 {
            return Err(Error::InvalidDimension {
                dim: raw.len(),
                min: 2,
            });
        }
        let norm = raw.norm();
        if !(norm.is_finite() && norm > tol::NULL_VECTOR) {
            return Err(Error::NullVector);
        }
        Ok(Self {
            amplitudes: raw / C64::new(norm, 0.0),
        })
    }

    /// Basis state |k⟩ of the given dimension.
    pub fn basis_state(dim: usize, k: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension { dim, min: 2 });
        }
        if k >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: k,
            });
        }
        let mut v = DVector::<C64>::zeros(dim);
        v[k] = C64::new(1.0, 0.0);
        Ok(Self { amplitudes: v })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }
}

/// A complex square matrix with `M = M†` within [`tol::HERMITICITY`].
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    entries: DMatrix<C64>,
}

impl HermitianOperator {
    pub fn new(entries: DMatrix<C64>) -> Result<Self> {
        if entries.nrows() != entries.ncols() {
            return Err(Error::DimensionMismatch {
                expected: entries.nrows(),
                found: entries.ncols(),
            });
        }
        if entries.nrows() < 2 {
            return Err(Error::InvalidDimension {
                dim: entries.nrows(),
                min: 2,
            });
        }
        // non-finite entries would slip through the max-norm fold below
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NotHermitian { defect: f64::NAN });
        }
        let magnitude = entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if magnitude > tol::ENTRY_LIMIT {
            return Err(Error::EntryTooLarge { magnitude });
        }
        let defect = hermiticity_defect(&entries);
        if defect > tol::HERMITICITY {
            return Err(Error::NotHermitian { defect });
        }
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.entries
    }

    /// `M ψ` as a raw vector.
    pub fn apply(&self, psi: &StateVector) -> Result<DVector<C64>> {
        check_dims(self.dim(), psi.dim())?;
        Ok(&self.entries * psi.amplitudes())
    }
}

/// Max-norm of `M - M†`.
pub fn hermiticity_defect(m: &DMatrix<C64>) -> f64 {
    let diff = m - m.adjoint();
    diff.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// ⟨ψ|M|ψ⟩ for Hermitian `M`.
///
/// The raw inner product is real up to rounding; the imaginary residual is
/// discarded (it stays below [`tol::IMAG_RESIDUAL`] for valid inputs).
pub fn expectation(psi: &StateVector, m: &HermitianOperator) -> Result<f64> {
    let mpsi = m.apply(psi)?;
    let z = psi.amplitudes().dotc(&mpsi);
    debug_assert!(
        z.im.abs() <= tol::IMAG_RESIDUAL * (1.0 + z.norm()),
        "imag residual {}",
        z.im
    );
    Ok(z.re)
}

/// ⟨M²⟩ − ⟨M⟩², clamped to ≥ 0.
///
/// ⟨M²⟩ is evaluated as ‖Mψ‖², which keeps the result non-negative up to
/// rounding; cancellation on near-eigenstates is clamped at zero so no
/// negative variance ever escapes.
pub fn variance(psi: &StateVector, m: &HermitianOperator) -> Result<f64> {
    let mpsi = m.apply(psi)?;
    let mean = psi.amplitudes().dotc(&mpsi).re;
    let second = mpsi.norm_squared();
    let var = second - mean * mean;
    debug_assert!(
        var >= -tol::VARIANCE_CLAMP * (1.0 + second),
        "variance {var} too negative"
    );
    Ok(var.max(0.0))
}

/// The real number i⟨ψ|\[A,B\]|ψ⟩.
///
/// \[A,B\] is anti-Hermitian for Hermitian A, B, so i⟨\[A,B\]⟩ is real; it is
/// computed as −2·Im⟨Aψ|Bψ⟩, which is exactly real and exactly antisymmetric
/// under A ↔ B.
pub fn commutator_mean(
    psi: &StateVector,
    a: &HermitianOperator,
    b: &HermitianOperator,
) -> Result<f64> {
    check_dims(a.dim(), b.dim())?;
    let apsi = a.apply(psi)?;
    let bpsi = b.apply(psi)?;
    Ok(-2.0 * apsi.dotc(&bpsi).im)
}

/// ⟨u|v⟩, conjugate-linear in the first argument.
pub fn inner(u: &DVector<C64>, v: &DVector<C64>) -> Result<C64> {
    check_dims(u.len(), v.len())?;
    Ok(u.dotc(v))
}

/// (𝟙 − |ψ⟩⟨ψ|) v, the component of `v` orthogonal to `psi`.
pub fn project_out(psi: &StateVector, v: &DVector<C64>) -> Result<DVector<C64>> {
    check_dims(psi.dim(), v.len())?;
    let overlap = psi.amplitudes().dotc(v);
    Ok(v - psi.amplitudes() * overlap)
}

/// Dense Hermitian eigendecomposition, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct Eigensystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<StateVector>,
}

/// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian
/// operator. Reconstruction satisfies ‖M − VΛV†‖_max < 1e-10·‖M‖_max.
pub fn hermitian_eigensystem(m: &HermitianOperator) -> Result<Eigensystem> {
    let eig = m.matrix().clone().symmetric_eigen();
    let n = m.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = Vec::with_capacity(n);
    for &k in &order {
        eigenvalues.push(eig.eigenvalues[k]);
        let col = eig.eigenvectors.column(k).into_owned();
        eigenvectors.push(StateVector::normalize(col)?);
    }
    Ok(Eigensystem {
        eigenvalues,
        eigenvectors,
    })
}
