//! Seeded sampling: Haar-random unitaries, the projector construction of
//! random orthogonal states, and the θ-family of spin-1 states.
//!
//! Every sampling call takes an explicit [`RandomSource`]; there is no global
//! RNG state, so equal seeds reproduce byte-identical sample streams. Each
//! thread owns its source; independent streams may run in parallel.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::hilbert::{project_out, StateVector};
use crate::{tol, C64};

/// Deterministic RNG handle: a seed plus an opaque ChaCha12 stream.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha12Rng,
}

impl RandomSource {
    pub fn from_seed(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha12Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream `idx` of the same seed. Streams never overlap, so
    /// per-row streams give scheduling-independent output.
    pub fn stream(seed: u64, idx: u64) -> Self {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(idx);
        Self { seed, rng }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn standard_normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.rng)
    }

    /// Standard complex Gaussian: re, im ~ N(0, 1/2).
    fn complex_gaussian(&mut self) -> C64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        C64::new(self.standard_normal() * s, self.standard_normal() * s)
    }
}

/// A complex square matrix with ‖U†U − I‖_max below [`tol::UNITARITY`].
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    entries: DMatrix<C64>,
}

impl UnitaryMatrix {
    pub fn new(entries: DMatrix<C64>) -> Result<Self> {
        if entries.nrows() != entries.ncols() {
            return Err(Error::DimensionMismatch {
                expected: entries.nrows(),
                found: entries.ncols(),
            });
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NotUnitary { defect: f64::NAN });
        }
        let defect = unitarity_defect(&entries);
        if defect > tol::UNITARITY {
            return Err(Error::NotUnitary { defect });
        }
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.entries
    }
}

/// Max-norm of U†U − I.
pub fn unitarity_defect(u: &DMatrix<C64>) -> f64 {
    let gram = u.adjoint() * u;
    let mut defect = 0.0f64;
    for i in 0..u.nrows() {
        for j in 0..u.ncols() {
            let expect = if i == j {
                C64::new(1.0, 0.0)
            } else {
                C64::new(0.0, 0.0)
            };
            defect = defect.max((gram[(i, j)] - expect).norm());
        }
    }
    defect
}

/// Haar-distributed unitary via the Ginibre-QR construction: QR-factor a
/// matrix of independent standard complex Gaussians and absorb the phases of
/// the R diagonal so the triangular factor has positive real diagonal.
pub fn haar_unitary(dim: usize, rng: &mut RandomSource) -> Result<UnitaryMatrix> {
    if dim < 2 {
        return Err(Error::InvalidDimension { dim, min: 2 });
    }
    // fill row-major so the draw order is part of the determinism contract
    let mut entries = Vec::with_capacity(dim * dim);
    for _ in 0..dim * dim {
        entries.push(rng.complex_gaussian());
    }
    let g = DMatrix::from_row_slice(dim, dim, &entries);
    let qr = g.qr();
    let q = qr.q();
    let r = qr.r();
    let mut u = q;
    for k in 0..dim {
        let d = r[(k, k)];
        let phase = if d.norm() > 0.0 {
            d / C64::new(d.norm(), 0.0)
        } else {
            C64::new(1.0, 0.0)
        };
        for i in 0..dim {
            u[(i, k)] *= phase;
        }
    }
    UnitaryMatrix::new(u)
}

/// Random state orthogonal to `psi`: normalize (𝟙 − |ψ⟩⟨ψ|) U|1⟩ for a Haar
/// unitary U, |1⟩ the first basis vector.
///
/// Resamples when the projected norm is numerically null; after
/// [`tol::PERP_RESAMPLE_LIMIT`] consecutive failures (probability ~0, signals
/// a broken RNG) it fails loudly.
pub fn random_perp(psi: &StateVector, rng: &mut RandomSource) -> Result<StateVector> {
    let dim = psi.dim();
    for _ in 0..tol::PERP_RESAMPLE_LIMIT {
        let u = haar_unitary(dim, rng)?;
        let candidate = u.matrix().column(0).into_owned();
        let projected = project_out(psi, &candidate)?;
        if projected.norm() <= tol::NULL_VECTOR {
            continue;
        }
        let perp = StateVector::normalize(projected)?;
        debug_assert!(psi.amplitudes().dotc(perp.amplitudes()).norm() < tol::PERP_INTERNAL);
        return Ok(perp);
    }
    Err(Error::RandomPerpExhausted(tol::PERP_RESAMPLE_LIMIT))
}

/// The spin-1 sweep family |ψ(θ)⟩ = (cosθ, 1, sinθ)/√2 in basis order
/// (|1⟩, |0⟩, |−1⟩); normalized for every θ since cos² + sin² = 1.
pub fn theta_state(theta: f64) -> StateVector {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let v = DVector::from_vec(vec![
        C64::new(theta.cos() * s, 0.0),
        C64::new(s, 0.0),
        C64::new(theta.sin() * s, 0.0),
    ]);
    StateVector::new(v).expect("cos²θ + sin²θ = 1 keeps the family normalized")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn haar_output_is_unitary() {
        let mut rng = RandomSource::from_seed(7);
        for dim in [2usize, 3, 5, 8] {
            let u = haar_unitary(dim, &mut rng).unwrap();
            assert!(unitarity_defect(u.matrix()) < 1e-12, "dim {dim}");
        }
    }

    #[test]
    fn haar_rejects_dim_one() {
        let mut rng = RandomSource::from_seed(7);
        assert!(matches!(
            haar_unitary(1, &mut rng),
            Err(Error::InvalidDimension { .. })
        ));
    }

    #[test]
    fn haar_second_moment_dim_3() {
        // E|U11|² = 1/d; Monte-Carlo check with 3 standard errors.
        let mut rng = RandomSource::from_seed(11);
        let n = 20_000usize;
        let mut sum = 0.0;
        for _ in 0..n {
            let u = haar_unitary(3, &mut rng).unwrap();
            sum += u.matrix()[(0, 0)].norm_sqr();
        }
        let mean = sum / n as f64;
        // Var(|U11|²) = 2/(d(d+1)) − 1/d² = 1/18 for d = 3
        let se = (1.0 / 18.0 / n as f64).sqrt();
        assert!(
            (mean - 1.0 / 3.0).abs() < 3.0 * se,
            "mean {mean}, band ±{}",
            3.0 * se
        );
    }

    #[test]
    fn haar_fourth_moment_dim_2() {
        // E|U11|⁴ = 2/(d(d+1)) = 1/3 for d = 2.
        let mut rng = RandomSource::from_seed(13);
        let n = 20_000usize;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for _ in 0..n {
            let u = haar_unitary(2, &mut rng).unwrap();
            let x = u.matrix()[(0, 0)].norm_sqr().powi(2);
            sum += x;
            sum_sq += x * x;
        }
        let mean = sum / n as f64;
        let var = (sum_sq / n as f64 - mean * mean).max(0.0);
        let se = (var / n as f64).sqrt();
        assert!(
            (mean - 1.0 / 3.0).abs() < 3.0 * se,
            "mean {mean}, band ±{}",
            3.0 * se
        );
    }

    #[test]
    fn random_perp_is_orthogonal_and_spans_complement() {
        let mut rng = RandomSource::from_seed(42);
        let psi = theta_state(0.3);
        for _ in 0..100 {
            let perp = random_perp(&psi, &mut rng).unwrap();
            let overlap = psi.amplitudes().dotc(perp.amplitudes()).norm();
            assert!(overlap < 1e-10, "overlap {overlap}");
            assert_relative_eq!(perp.amplitudes().norm(), 1.0, epsilon = 1e-12);
        }

        // psi = e1: output must stay in span(e2, e3)
        let e1 = StateVector::basis_state(3, 0).unwrap();
        let perp = random_perp(&e1, &mut rng).unwrap();
        assert!(perp.amplitudes()[0].norm() < 1e-12);
    }

    #[test]
    fn random_perp_reproducible_across_runs() {
        let psi = theta_state(0.0);
        let mut a = RandomSource::from_seed(42);
        let mut b = RandomSource::from_seed(42);
        let pa = random_perp(&psi, &mut a).unwrap();
        let pb = random_perp(&psi, &mut b).unwrap();
        assert_eq!(pa.amplitudes(), pb.amplitudes());
    }

    #[test]
    fn streams_are_independent_of_each_other() {
        let psi = theta_state(1.1);
        let mut s0 = RandomSource::stream(5, 0);
        let mut s1 = RandomSource::stream(5, 1);
        let p0 = random_perp(&psi, &mut s0).unwrap();
        let p1 = random_perp(&psi, &mut s1).unwrap();
        assert_ne!(p0.amplitudes(), p1.amplitudes());
    }

    #[test]
    fn theta_state_examples() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = theta_state(0.0);
        assert_relative_eq!(psi.amplitudes()[0].re, s, epsilon = 1e-15);
        assert_relative_eq!(psi.amplitudes()[1].re, s, epsilon = 1e-15);
        assert_relative_eq!(psi.amplitudes()[2].re, 0.0, epsilon = 1e-15);

        let psi = theta_state(std::f64::consts::FRAC_PI_2);
        assert!(psi.amplitudes()[0].re.abs() < 1e-15);
        assert_relative_eq!(psi.amplitudes()[1].re, s, epsilon = 1e-15);
        assert_relative_eq!(psi.amplitudes()[2].re, s, epsilon = 1e-15);

        let psi = theta_state(std::f64::consts::FRAC_PI_4);
        assert_relative_eq!(psi.amplitudes()[0].re, 0.5, epsilon = 1e-15);
        assert_relative_eq!(psi.amplitudes()[1].re, s, epsilon = 1e-15);
        assert_relative_eq!(psi.amplitudes()[2].re, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn theta_state_normalized_on_grid() {
        for k in 0..1000 {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / 1000.0;
            let norm = theta_state(theta).amplitudes().norm();
            assert!((norm - 1.0).abs() < 1e-14, "theta {theta}: norm {norm}");
        }
    }
}
