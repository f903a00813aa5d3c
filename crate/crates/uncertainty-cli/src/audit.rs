//! Statistical audit of the Haar sampler: unitarity defects, per-cell
//! second moments against the exact Haar value 1/d, and a left-invariance
//! check under a fixed unitary.

use nalgebra::DMatrix;
use serde::Serialize;

use uncertainty_core::{haar_unitary, unitarity_defect, RandomSource, C64};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Serialize)]
pub struct LeftInvariance {
    /// mean |(VU)₁₁|² for a fixed Fourier-matrix V.
    pub statistic: f64,
    pub within_band: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HaarAudit {
    pub dim: usize,
    pub samples: usize,
    pub seed: u64,
    pub max_unitarity_defect: f64,
    /// Exact Haar second moment E|U_ij|² = 1/d.
    pub expected_mean_abs_sq: f64,
    /// Standard error of a single cell's sample mean.
    pub standard_error: f64,
    /// 3·SE acceptance band half-width.
    pub band_halfwidth: f64,
    pub mean_abs_sq: Vec<Vec<f64>>,
    pub cells_within_band: bool,
    pub left_invariance: LeftInvariance,
    pub pass: bool,
}

fn fourier_matrix(dim: usize) -> DMatrix<C64> {
    let omega = 2.0 * std::f64::consts::PI / dim as f64;
    let scale = 1.0 / (dim as f64).sqrt();
    DMatrix::from_fn(dim, dim, |i, j| {
        let arg = omega * (i * j) as f64;
        C64::new(arg.cos() * scale, arg.sin() * scale)
    })
}

/// Draws `samples` Haar unitaries and reports the audit statistics.
pub fn run_haar_audit(dim: usize, samples: usize, seed: u64) -> Result<HaarAudit> {
    if samples < 1000 {
        return Err(CliError::Validation(format!(
            "haar-audit needs at least 1000 samples, got {samples}"
        )));
    }
    if dim < 2 {
        return Err(CliError::Validation(format!("dim must be ≥ 2, got {dim}")));
    }
    let mut rng = RandomSource::from_seed(seed);
    let fixed = fourier_matrix(dim);
    let mut sums = vec![vec![0.0f64; dim]; dim];
    let mut left_sum = 0.0f64;
    let mut max_defect = 0.0f64;
    for _ in 0..samples {
        let u = haar_unitary(dim, &mut rng)?;
        max_defect = max_defect.max(unitarity_defect(u.matrix()));
        for (i, row) in sums.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell += u.matrix()[(i, j)].norm_sqr();
            }
        }
        let rotated_entry: C64 = (0..dim).map(|k| fixed[(0, k)] * u.matrix()[(k, 0)]).sum();
        left_sum += rotated_entry.norm_sqr();
    }
    let n = samples as f64;
    let mean_abs_sq: Vec<Vec<f64>> = sums
        .iter()
        .map(|row| row.iter().map(|s| s / n).collect())
        .collect();
    let expected = 1.0 / dim as f64;
    // Var(|U_ij|²) = 2/(d(d+1)) − 1/d² for Haar
    let d = dim as f64;
    let variance = 2.0 / (d * (d + 1.0)) - 1.0 / (d * d);
    let se = (variance / n).sqrt();
    let band = 3.0 * se;
    let cells_within_band = mean_abs_sq
        .iter()
        .flatten()
        .all(|m| (m - expected).abs() < band);
    let left_stat = left_sum / n;
    let left_ok = (left_stat - expected).abs() < band;
    let pass = max_defect < 1e-12 && cells_within_band && left_ok;
    Ok(HaarAudit {
        dim,
        samples,
        seed,
        max_unitarity_defect: max_defect,
        expected_mean_abs_sq: expected,
        standard_error: se,
        band_halfwidth: band,
        mean_abs_sq,
        cells_within_band,
        left_invariance: LeftInvariance {
            statistic: left_stat,
            within_band: left_ok,
        },
        pass,
    })
}
