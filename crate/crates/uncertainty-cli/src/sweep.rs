//! The θ-sweep experiment: one record per θ with the three bound curves, a
//! cloud of Maccone–Pati right-hand sides over random perpendicular states,
//! and the eigenstate residuals that mark the minimum-uncertainty angles.

use uncertainty_core::{
    eigenstate_residual, mp_sum_bound, random_perp, theta_state, variance, weak_sum_bound,
    CenteredPair, HermitianOperator, RandomSource, SpinTriple, StateVector,
};

use crate::error::{CliError, Result};
use crate::io::format_f64;

/// Which spin components play A and B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ObservablePair {
    pub a: SpinAxis,
    pub b: SpinAxis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinAxis {
    X,
    Y,
    Z,
}

impl SpinAxis {
    fn pick(self, spin: &SpinTriple) -> HermitianOperator {
        match self {
            SpinAxis::X => spin.jx.clone(),
            SpinAxis::Y => spin.jy.clone(),
            SpinAxis::Z => spin.jz.clone(),
        }
    }
}

impl std::str::FromStr for ObservablePair {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let axis = |ch: char| match ch.to_ascii_lowercase() {
            'x' => Ok(SpinAxis::X),
            'y' => Ok(SpinAxis::Y),
            'z' => Ok(SpinAxis::Z),
            other => Err(format!("unknown spin axis '{other}'")),
        };
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != 2 {
            return Err(format!(
                "observable pair must be two axis letters, got '{s}'"
            ));
        }
        let a = axis(chars[0])?;
        let b = axis(chars[1])?;
        if a == b {
            return Err("observable pair must use two different axes".into());
        }
        Ok(ObservablePair { a, b })
    }
}

impl Default for ObservablePair {
    fn default() -> Self {
        ObservablePair {
            a: SpinAxis::Z,
            b: SpinAxis::Y,
        }
    }
}

/// Sweep parameters; defaults run the spin-1 Jz/Jy experiment.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub theta_min: f64,
    pub theta_max: f64,
    pub steps: usize,
    pub perp_samples: usize,
    pub j: f64,
    pub hbar: f64,
    pub pair: ObservablePair,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            theta_min: 0.0,
            theta_max: 2.0 * std::f64::consts::PI,
            steps: 200,
            perp_samples: 30,
            j: 1.0,
            hbar: 1.0,
            pair: ObservablePair::default(),
        }
    }
}

/// One θ row.
#[derive(Debug, Clone)]
pub struct SweepRecord {
    pub theta: f64,
    pub lhs: f64,
    pub weak_rhs: f64,
    pub two_dadb: f64,
    pub mp_rhs: Vec<f64>,
    pub residual_aib: f64,
    pub residual_a2b2: f64,
    pub is_sum_mus: bool,
}

/// The swept state family. For j = 1 this is exactly
/// (cosθ|1⟩ + sinθ|−1⟩ + |0⟩)/√2; for other j the analogous
/// cosθ|+j⟩ + sinθ|−j⟩ + |m_mid⟩ is normalized explicitly.
pub fn family_state(j: f64, theta: f64) -> Result<StateVector> {
    if (j - 1.0).abs() < 1e-12 {
        return Ok(theta_state(theta));
    }
    let dim = (2.0 * j) as usize + 1;
    let mut v = nalgebra::DVector::<uncertainty_core::C64>::zeros(dim);
    v[0] += uncertainty_core::C64::new(theta.cos(), 0.0);
    v[dim - 1] += uncertainty_core::C64::new(theta.sin(), 0.0);
    v[dim / 2] += uncertainty_core::C64::new(1.0, 0.0);
    StateVector::normalize(v).map_err(|e| CliError::Validation(format!("θ = {theta}: {e}")))
}

/// Runs the sweep. Each row draws its perpendicular states from an
/// independent RNG stream derived from (seed, row index), so the output is
/// identical no matter how rows are scheduled.
pub fn run_sweep(config: &RunConfig) -> Result<Vec<SweepRecord>> {
    if config.steps < 2 {
        return Err(CliError::Validation(format!(
            "steps must be at least 2, got {}",
            config.steps
        )));
    }
    if config.perp_samples < 1 {
        return Err(CliError::Validation(
            "perp-samples must be at least 1".into(),
        ));
    }
    if !config.theta_min.is_finite()
        || !config.theta_max.is_finite()
        || config.theta_max - config.theta_min <= 0.0
    {
        return Err(CliError::Validation(format!(
            "invalid θ range [{}, {}]",
            config.theta_min, config.theta_max
        )));
    }
    if !(config.j > 0.0 && config.j <= 50.0) {
        return Err(CliError::Validation(format!(
            "j must lie in (0, 50], got {}",
            config.j
        )));
    }
    let spin = uncertainty_core::spin_operators(config.j, config.hbar)?;
    let a = config.pair.a.pick(&spin);
    let b = config.pair.b.pick(&spin);
    let a2b2 = HermitianOperator::new(a.matrix() * a.matrix() + b.matrix() * b.matrix())?;

    let dtheta = (config.theta_max - config.theta_min) / (config.steps - 1) as f64;
    let mut records = Vec::with_capacity(config.steps);
    for row in 0..config.steps {
        let theta = config.theta_min + dtheta * row as f64;
        let psi = family_state(config.j, theta)?;

        let weak = weak_sum_bound(&psi, &a, &b)?;
        let var_a = variance(&psi, &a)?;
        let var_b = variance(&psi, &b)?;
        let two_dadb = 2.0 * (var_a * var_b).sqrt();

        let mut rng = RandomSource::stream(config.seed, row as u64);
        let mut mp_rhs = Vec::with_capacity(config.perp_samples);
        for _ in 0..config.perp_samples {
            let perp = random_perp(&psi, &mut rng)?;
            mp_rhs.push(mp_sum_bound(&psi, &a, &b, &perp)?.rhs);
        }

        let pair = CenteredPair::new(&psi, &a, &b)?;
        let f = pair.f_vector(&psi, f64::from(weak.sign_choice));
        let residual_aib = f.norm();
        let residual_a2b2 = eigenstate_residual(&psi, a2b2.matrix(), true)?;

        records.push(SweepRecord {
            theta,
            lhs: weak.lhs,
            weak_rhs: weak.rhs,
            two_dadb,
            mp_rhs,
            residual_aib,
            residual_a2b2,
            is_sum_mus: weak.gap <= uncertainty_core::tol::MUS_DEFAULT,
        });
    }
    Ok(records)
}

/// CSV with the fixed column order
/// theta, lhs, weak_rhs, two_dadb, residual_AiB, residual_A2B2, is_sum_mus,
/// mp_rhs_1 … mp_rhs_k; 17 significant digits per number.
pub fn sweep_to_csv(records: &[SweepRecord]) -> String {
    let k = records.first().map_or(0, |r| r.mp_rhs.len());
    let mut out = String::new();
    out.push_str("theta,lhs,weak_rhs,two_dadb,residual_AiB,residual_A2B2,is_sum_mus");
    for i in 1..=k {
        out.push_str(&format!(",mp_rhs_{i}"));
    }
    out.push('\n');
    for r in records {
        out.push_str(&format_f64(r.theta));
        for x in [
            r.lhs,
            r.weak_rhs,
            r.two_dadb,
            r.residual_aib,
            r.residual_a2b2,
        ] {
            out.push(',');
            out.push_str(&format_f64(x));
        }
        out.push(',');
        out.push_str(if r.is_sum_mus { "true" } else { "false" });
        for x in &r.mp_rhs {
            out.push(',');
            out.push_str(&format_f64(*x));
        }
        out.push('\n');
    }
    out
}

/// Sweep records as a JSON array (same fields as the CSV columns).
pub fn sweep_to_json(records: &[SweepRecord]) -> String {
    use serde_json::json;
    let rows: Vec<_> = records
        .iter()
        .map(|r| {
            json!({
                "theta": r.theta,
                "lhs": r.lhs,
                "weak_rhs": r.weak_rhs,
                "two_dadb": r.two_dadb,
                "residual_AiB": r.residual_aib,
                "residual_A2B2": r.residual_a2b2,
                "is_sum_mus": r.is_sum_mus,
                "mp_rhs": r.mp_rhs,
            })
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("sweep records serialize");
    s.push('\n');
    s
}

/// A matplotlib script rendering the four curves plus the ψ⊥ dot cloud from
/// the CSV written alongside it.
pub fn plot_script(csv_path: &str) -> String {
    format!(
        r#"#!/usr/bin/env python3
"""Render the θ-sweep curves from {csv}."""

import csv

import matplotlib.pyplot as plt

thetas, lhs, weak, two_dadb = [], [], [], []
cloud_x, cloud_y = [], []
mus_x, mus_y = [], []
eig_x, eig_y = [], []

with open("{csv}", newline="") as fh:
    reader = csv.DictReader(fh)
    mp_cols = [c for c in reader.fieldnames if c.startswith("mp_rhs_")]
    for row in reader:
        t = float(row["theta"])
        thetas.append(t)
        lhs.append(float(row["lhs"]))
        weak.append(float(row["weak_rhs"]))
        two_dadb.append(float(row["two_dadb"]))
        for c in mp_cols:
            cloud_x.append(t)
            cloud_y.append(float(row[c]))
        if row["is_sum_mus"] == "true":
            mus_x.append(t)
            mus_y.append(float(row["lhs"]))
        if float(row["residual_A2B2"]) < 1e-8:
            eig_x.append(t)
            eig_y.append(float(row["lhs"]))

fig, ax = plt.subplots(figsize=(7, 4.5))
ax.scatter(cloud_x, cloud_y, s=2, c="black", alpha=0.35, label="MP RHS (random $\\psi^\\perp$)")
ax.plot(thetas, lhs, c="green", lw=1.6, label="$\\Delta A^2+\\Delta B^2$")
ax.plot(thetas, weak, c="red", lw=1.6, label="$|i\\langle[A,B]\\rangle|$")
ax.plot(thetas, two_dadb, c="blue", lw=1.6, label="$2\\Delta A\\Delta B$")
ax.scatter(mus_x, mus_y, s=60, c="cyan", zorder=5, label="$A\\mp iB$ eigenstates")
ax.scatter(eig_x, eig_y, s=60, c="magenta", marker="x", zorder=6, label="$A^2+B^2$ eigenstates")
ax.set_xlabel("$\\theta$")
ax.set_ylabel("bound value")
ax.legend(loc="upper right", fontsize=8)
fig.tight_layout()
fig.savefig("{csv}.png", dpi=160)
print("wrote {csv}.png")
"#,
        csv = csv_path
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_config() {
        let mut config = RunConfig {
            steps: 1,
            ..RunConfig::default()
        };
        assert!(run_sweep(&config).is_err());
        config.steps = 5;
        config.perp_samples = 0;
        assert!(run_sweep(&config).is_err());
        config.perp_samples = 1;
        config.theta_max = config.theta_min;
        assert!(run_sweep(&config).is_err());
    }

    #[test]
    fn small_sweep_satisfies_record_invariants() {
        let config = RunConfig {
            steps: 9,
            perp_samples: 5,
            ..RunConfig::default()
        };
        let records = run_sweep(&config).unwrap();
        assert_eq!(records.len(), 9);
        for r in &records {
            let max_mp = r.mp_rhs.iter().cloned().fold(f64::MIN, f64::max);
            let min_mp = r.mp_rhs.iter().cloned().fold(f64::MAX, f64::min);
            assert!(r.lhs >= max_mp - 1e-10);
            assert!(min_mp >= r.weak_rhs - 1e-10);
            assert!(r.lhs >= r.two_dadb - 1e-10);
            assert!(r.two_dadb >= r.weak_rhs - 2e-10);
        }
        // θ = π/4 is row 1 of 9 over [0, 2π]: an exact sum-MUS angle
        assert!(records[1].is_sum_mus);
        assert!(records[1].residual_aib < 1e-9);
        assert!(records[1].residual_a2b2 < 1e-8);

        // cyan dots sit exactly on the green/red crossings, and the magenta
        // crosses coincide there: row by row, a vanishing A∓iB residual, a
        // vanishing gap, and a vanishing A²+B² residual pick the same rows
        let mut saturating_rows = 0;
        for r in &records {
            let gap_zero = r.lhs - r.weak_rhs < 1e-9;
            assert_eq!(r.residual_aib < 1e-9, gap_zero, "θ = {}", r.theta);
            assert_eq!(r.is_sum_mus, gap_zero);
            if gap_zero {
                saturating_rows += 1;
                assert!(r.residual_a2b2 < 1e-8);
            }
        }
        assert_eq!(saturating_rows, 2, "π/4 and 5π/4");
    }

    #[test]
    fn sweep_is_deterministic() {
        let config = RunConfig {
            steps: 5,
            perp_samples: 3,
            ..RunConfig::default()
        };
        let a = sweep_to_csv(&run_sweep(&config).unwrap());
        let b = sweep_to_csv(&run_sweep(&config).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn pair_parsing() {
        let p: ObservablePair = "zy".parse().unwrap();
        assert_eq!(p, ObservablePair::default());
        assert!("zz".parse::<ObservablePair>().is_err());
        assert!("q".parse::<ObservablePair>().is_err());
        assert!("xyz".parse::<ObservablePair>().is_err());
    }

    #[test]
    fn family_state_generalizes() {
        // j = 1/2: the family is still normalized away from the degenerate angle
        let psi = family_state(0.5, 0.3).unwrap();
        assert!((psi.amplitudes().norm() - 1.0).abs() < 1e-12);
        // degenerate angle for j = 1/2: cosθ = 0, sinθ = −1 cancels the mid term
        assert!(family_state(0.5, 1.5 * std::f64::consts::PI).is_err());
    }
}
