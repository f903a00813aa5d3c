//! Continuous-variable checks on a uniform 1-D grid: the Riccati-derived
//! Gaussians that extremize the sum relation for position/momentum, and
//! finite-difference residuals of the differential equations they satisfy.
//!
//! The module verifies closed forms, it does not integrate ODEs. Residual
//! derivatives use second-order central differences with the two boundary
//! points excluded, so halving the spacing quarters the residuals, which is
//! itself a tested invariant. Grid moments (⟨x⟩, ⟨p⟩, Δx², Δp²) use a fourth-order
//! stencil so their error stays well under the residual tolerances.

use crate::error::{Error, Result};
use crate::C64;

/// Default number of grid points (odd, so a center point exists).
pub const DEFAULT_N: usize = 4001;

/// Default half-width of the grid in units of √ħ.
pub const DEFAULT_HALFWIDTH: f64 = 12.0;

/// Minimum distance from the Gaussian center to the grid edge, in units of
/// √ħ, for the boundary-decay invariant to hold.
pub const MIN_DECAY_HALFWIDTH: f64 = 8.0;

/// Uniform 1-D grid with an odd number of points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
    pub hbar: f64,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n_points: usize, hbar: f64) -> Result<Self> {
        if n_points < 101 {
            return Err(Error::InvalidDimension {
                dim: n_points,
                min: 101,
            });
        }
        if n_points.is_multiple_of(2) {
            return Err(Error::InvalidDimension {
                dim: n_points,
                min: n_points + 1,
            });
        }
        // NaN bounds must not slip past the span check
        if !x_min.is_finite() || !x_max.is_finite() || x_max - x_min <= 0.0 {
            return Err(Error::NonPositive {
                name: "x_max - x_min",
                value: x_max - x_min,
            });
        }
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::NonPositive {
                name: "hbar",
                value: hbar,
            });
        }
        Ok(Self {
            x_min,
            x_max,
            n_points,
            hbar,
        })
    }

    /// Grid of `n_points` spanning `center ± halfwidth·√ħ`.
    pub fn centered(center: f64, halfwidth: f64, n_points: usize, hbar: f64) -> Result<Self> {
        if !(halfwidth.is_finite() && halfwidth > 0.0) {
            return Err(Error::NonPositive {
                name: "halfwidth",
                value: halfwidth,
            });
        }
        let w = halfwidth * hbar.sqrt();
        Self::new(center - w, center + w, n_points, hbar)
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + self.spacing() * i as f64
    }

    fn is_symmetric_about_zero(&self) -> bool {
        (self.x_min + self.x_max).abs() < 1e-12 * (self.x_max - self.x_min)
    }
}

/// Complex samples ψ(xᵢ) with unit trapezoidal L2 norm and Gaussian decay at
/// both boundaries.
#[derive(Debug, Clone, PartialEq)]
pub struct GridWavefunction {
    grid: Grid1D,
    values: Vec<C64>,
}

impl GridWavefunction {
    /// Normalizes raw samples (trapezoidal quadrature), fixes the global
    /// phase so the peak value is real positive, and enforces the
    /// boundary-decay invariant.
    pub fn new(grid: Grid1D, mut values: Vec<C64>) -> Result<Self> {
        if values.len() != grid.n_points {
            return Err(Error::DimensionMismatch {
                expected: grid.n_points,
                found: values.len(),
            });
        }
        let norm_sq = trapezoid_norm_squared(&grid, &values);
        if norm_sq.sqrt() <= 1e-300 {
            return Err(Error::NullVector);
        }
        let scale = 1.0 / norm_sq.sqrt();
        for v in &mut values {
            *v *= C64::new(scale, 0.0);
        }
        // global phase: real positive at the modulus peak
        let peak = values
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .map(|(i, _)| i)
            .unwrap();
        let phase = values[peak] / C64::new(values[peak].norm(), 0.0);
        if phase.norm() > 0.0 {
            let correction = phase.conj();
            for v in &mut values {
                *v *= correction;
            }
        }
        let edge = values[0].norm().max(values[grid.n_points - 1].norm());
        if edge >= 1e-10 {
            return Err(Error::GridTooNarrow {
                required: 1e-10,
                available: edge,
            });
        }
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn norm_squared(&self) -> f64 {
        trapezoid_norm_squared(&self.grid, &self.values)
    }

    /// ⟨x⟩ by trapezoidal quadrature.
    pub fn x_mean(&self) -> f64 {
        self.weighted_moment(|x| x)
    }

    /// Δx² by trapezoidal quadrature.
    pub fn x_variance(&self) -> f64 {
        let mean = self.x_mean();
        self.weighted_moment(|x| (x - mean) * (x - mean))
    }

    fn weighted_moment(&self, f: impl Fn(f64) -> f64) -> f64 {
        let h = self.grid.spacing();
        let n = self.grid.n_points;
        let mut sum = 0.0;
        for i in 0..n {
            let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
            sum += w * f(self.grid.x(i)) * self.values[i].norm_sqr();
        }
        sum * h
    }

    /// ⟨p⟩ = Re ∫ ψ*(−iħψ′) dx with a fourth-order derivative stencil.
    pub fn p_mean(&self) -> f64 {
        let h = self.grid.spacing();
        let n = self.grid.n_points;
        let hbar = self.grid.hbar;
        let mut sum = 0.0;
        for i in 2..n - 2 {
            let d1 = fourth_order_first_derivative(&self.values, i, h);
            let integrand = self.values[i].conj() * d1 * C64::new(0.0, -hbar);
            sum += integrand.re;
        }
        sum * h
    }

    /// Δp² = ħ²∫|ψ′|² dx − ⟨p⟩², fourth-order stencil.
    pub fn p_variance(&self) -> f64 {
        let h = self.grid.spacing();
        let n = self.grid.n_points;
        let hbar = self.grid.hbar;
        let mut sum = 0.0;
        for i in 2..n - 2 {
            let d1 = fourth_order_first_derivative(&self.values, i, h);
            sum += d1.norm_sqr();
        }
        let p2 = hbar * hbar * sum * h;
        let pm = self.p_mean();
        (p2 - pm * pm).max(0.0)
    }

    /// Logarithmic derivative ψ′/ψ at interior point i (fourth-order
    /// stencil, same as the moments); None where |ψ| is too small to divide.
    pub fn log_derivative(&self, i: usize) -> Option<C64> {
        if i < 2 || i + 2 >= self.grid.n_points {
            return None;
        }
        let psi = self.values[i];
        if psi.norm() < 1e-12 {
            return None;
        }
        let h = self.grid.spacing();
        let d1 = fourth_order_first_derivative(&self.values, i, h);
        Some(d1 / psi)
    }
}

fn trapezoid_norm_squared(grid: &Grid1D, values: &[C64]) -> f64 {
    let h = grid.spacing();
    let n = grid.n_points;
    let mut sum = 0.5 * (values[0].norm_sqr() + values[n - 1].norm_sqr());
    for v in values.iter().take(n - 1).skip(1) {
        sum += v.norm_sqr();
    }
    sum * h
}

fn fourth_order_first_derivative(values: &[C64], i: usize, h: f64) -> C64 {
    (values[i - 2] - values[i + 2] + (values[i + 1] - values[i - 1]) * C64::new(8.0, 0.0))
        / C64::new(12.0 * h, 0.0)
}

fn central_second_derivative(values: &[C64], i: usize, h: f64) -> C64 {
    (values[i + 1] + values[i - 1] - values[i] * C64::new(2.0, 0.0)) / C64::new(h * h, 0.0)
}

fn central_first_derivative(values: &[C64], i: usize, h: f64) -> C64 {
    (values[i + 1] - values[i - 1]) / C64::new(2.0 * h, 0.0)
}

/// Which of the two extremizations a Riccati solution belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RiccatiKind {
    /// Minimization of ΔA²+ΔB² (general means a, b).
    L,
    /// Maximization of the Maccone–Pati RHS (zero means).
    R,
}

/// Linear solution u = c_linear·x + c_const of the Riccati equation, with
/// the eigenvalue m it forces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiccatiSolution {
    pub kind: RiccatiKind,
    pub c_linear: C64,
    pub c_const: C64,
    pub m_value: f64,
}

/// Coefficients of the linear Riccati solution: for kind L,
/// u = −x/ħ + (a+ib)/ħ with m = ħ; for kind R, u = −x/ħ with m′ = ħ.
pub fn riccati_solution(
    kind: RiccatiKind,
    a_mean: f64,
    b_mean: f64,
    hbar: f64,
) -> Result<RiccatiSolution> {
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::NonPositive {
            name: "hbar",
            value: hbar,
        });
    }
    let c_linear = C64::new(-1.0 / hbar, 0.0);
    let c_const = match kind {
        RiccatiKind::L => C64::new(a_mean / hbar, b_mean / hbar),
        RiccatiKind::R => C64::new(0.0, 0.0),
    };
    Ok(RiccatiSolution {
        kind,
        c_linear,
        c_const,
        m_value: hbar,
    })
}

impl RiccatiSolution {
    /// Residual of the defining Riccati equation at x; analytically zero for
    /// the returned coefficients.
    pub fn equation_residual(&self, x: f64, a_mean: f64, b_mean: f64, hbar: f64) -> C64 {
        let u = self.c_linear * C64::new(x, 0.0) + self.c_const;
        let du = self.c_linear;
        match self.kind {
            RiccatiKind::L => {
                let rhs =
                    (b_mean * b_mean + (x - a_mean) * (x - a_mean) - self.m_value) / (hbar * hbar);
                du + u * u - u * C64::new(0.0, 2.0 * b_mean / hbar) - C64::new(rhs, 0.0)
            }
            RiccatiKind::R => {
                let rhs = (x * x - self.m_value) / (hbar * hbar);
                du + u * u - C64::new(rhs, 0.0)
            }
        }
    }
}

/// The Gaussian ψ_L ∝ exp[−x²/(2ħ) + ((a+ib)/ħ)x] that minimizes the sum of
/// variances, evaluated on the grid with ⟨x⟩ = a, ⟨p⟩ = b.
pub fn gaussian_psi_l(grid: &Grid1D, a_mean: f64, b_mean: f64) -> Result<GridWavefunction> {
    let hbar = grid.hbar;
    let needed = MIN_DECAY_HALFWIDTH * hbar.sqrt();
    let right = grid.x_max - a_mean;
    let left = a_mean - grid.x_min;
    if right < needed || left < needed {
        return Err(Error::GridTooNarrow {
            required: needed,
            available: right.min(left),
        });
    }
    let values = (0..grid.n_points)
        .map(|i| {
            let x = grid.x(i);
            // exp[−x²/(2ħ) + (a+ib)x/ħ] ∝ exp[−(x−a)²/(2ħ)]·exp[ibx/ħ]
            let amplitude = (-(x - a_mean) * (x - a_mean) / (2.0 * hbar)).exp();
            let phase = b_mean * x / hbar;
            C64::new(amplitude * phase.cos(), amplitude * phase.sin())
        })
        .collect();
    GridWavefunction::new(*grid, values)
}

/// The zero-mean Gaussian ψ_R ∝ exp[−x²/(2ħ)] that maximizes the
/// Maccone–Pati RHS; requires a grid symmetric about 0.
pub fn gaussian_psi_r(grid: &Grid1D) -> Result<GridWavefunction> {
    if !grid.is_symmetric_about_zero() {
        return Err(Error::AsymmetricGrid);
    }
    gaussian_psi_l(grid, 0.0, 0.0)
}

/// Relative L2 residual of
/// ψ″ − (2ib/ħ)ψ′ − (m/ħ²)(b²/m + (x−a)²/m − 1)ψ = 0
/// over interior points, scaled by ‖ħ²ψ″‖₂.
pub fn ode_residual_l(
    psi: &GridWavefunction,
    a_mean: f64,
    b_mean: f64,
    m_value: f64,
) -> Result<f64> {
    if !(m_value.is_finite() && m_value > 0.0) {
        return Err(Error::NonPositive {
            name: "m_value",
            value: m_value,
        });
    }
    let grid = psi.grid();
    let h = grid.spacing();
    let hbar = grid.hbar;
    let values = psi.values();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 1..grid.n_points - 1 {
        let x = grid.x(i);
        let d2 = central_second_derivative(values, i, h);
        let d1 = central_first_derivative(values, i, h);
        let potential = (b_mean * b_mean + (x - a_mean) * (x - a_mean) - m_value) / (hbar * hbar);
        let r = d2 - d1 * C64::new(0.0, 2.0 * b_mean / hbar) - values[i] * C64::new(potential, 0.0);
        num += (r * C64::new(hbar * hbar, 0.0)).norm_sqr();
        den += (d2 * C64::new(hbar * hbar, 0.0)).norm_sqr();
    }
    if den <= 0.0 {
        return Err(Error::ZeroDenominator);
    }
    Ok((num / den).sqrt())
}

/// Relative L2 residual of (x² − m′)ψ − ħ²ψ″ = 0 over interior points,
/// scaled by ‖ħ²ψ″‖₂.
pub fn eigen_residual_r(psi: &GridWavefunction, m_prime: f64) -> Result<f64> {
    if !(m_prime.is_finite() && m_prime > 0.0) {
        return Err(Error::NonPositive {
            name: "m_prime",
            value: m_prime,
        });
    }
    let grid = psi.grid();
    let h = grid.spacing();
    let hbar = grid.hbar;
    let values = psi.values();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 1..grid.n_points - 1 {
        let x = grid.x(i);
        let d2 = central_second_derivative(values, i, h) * C64::new(hbar * hbar, 0.0);
        let r = values[i] * C64::new(x * x - m_prime, 0.0) - d2;
        num += r.norm_sqr();
        den += d2.norm_sqr();
    }
    if den <= 0.0 {
        return Err(Error::ZeroDenominator);
    }
    Ok((num / den).sqrt())
}
