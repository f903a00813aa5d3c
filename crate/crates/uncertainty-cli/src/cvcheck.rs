//! The continuous-variable check: grid Gaussians, Riccati coefficients,
//! finite-difference residuals of the two defining equations, and the
//! m = m′ = ħ confirmation.

use serde::Serialize;

use uncertainty_core::cvgrid::{
    eigen_residual_r, gaussian_psi_l, gaussian_psi_r, ode_residual_l, riccati_solution, Grid1D,
    RiccatiKind,
};
use uncertainty_core::{fock_state, ladder_operators, position_momentum, variance};

use crate::error::Result;

#[derive(Debug, Clone, Serialize)]
pub struct RiccatiJson {
    pub kind: &'static str,
    pub c_linear: [f64; 2],
    pub c_const: [f64; 2],
    pub m_value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GridJson {
    pub n_points: usize,
    pub halfwidth: f64,
    pub spacing: f64,
    pub x_min: f64,
    pub x_max: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CvReport {
    pub hbar: f64,
    pub a_mean: f64,
    pub b_mean: f64,
    pub grid: GridJson,
    pub riccati_l: RiccatiJson,
    pub riccati_r: RiccatiJson,
    pub ode_residual_l: f64,
    pub eigen_residual_r: f64,
    pub grid_x_mean: f64,
    pub grid_p_mean: f64,
    pub grid_var_x: f64,
    pub grid_var_p: f64,
    /// Vacuum Δx², Δp² from the truncated-Fock route, for the consistency
    /// cross-check against the grid values.
    pub fock_dim: usize,
    pub fock_var_x: f64,
    pub fock_var_p: f64,
    pub fock_consistent: bool,
    /// True when both residuals are below 1e-3, confirming m = m′ = ħ.
    pub m_equals_hbar_confirmed: bool,
}

pub struct CvParams {
    pub hbar: f64,
    pub a_mean: f64,
    pub b_mean: f64,
    pub grid_n: usize,
    pub grid_halfwidth: f64,
    pub fock_dim: usize,
}

impl Default for CvParams {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            a_mean: 1.0,
            b_mean: 0.5,
            grid_n: uncertainty_core::cvgrid::DEFAULT_N,
            grid_halfwidth: uncertainty_core::cvgrid::DEFAULT_HALFWIDTH,
            fock_dim: 20,
        }
    }
}

pub fn run_cv_check(p: &CvParams) -> Result<CvReport> {
    if p.grid_n > 1_000_001 {
        return Err(crate::error::CliError::Validation(format!(
            "grid-n {} exceeds the 1000001-point limit",
            p.grid_n
        )));
    }
    if p.fock_dim > 10_000 {
        return Err(crate::error::CliError::Validation(format!(
            "fock-dim {} exceeds the 10000-level limit",
            p.fock_dim
        )));
    }
    // ψ_L lives on a grid centered at its mean, ψ_R on one symmetric about 0
    let grid_l = Grid1D::centered(p.a_mean, p.grid_halfwidth, p.grid_n, p.hbar)?;
    let grid_r = Grid1D::centered(0.0, p.grid_halfwidth, p.grid_n, p.hbar)?;

    let sol_l = riccati_solution(RiccatiKind::L, p.a_mean, p.b_mean, p.hbar)?;
    let sol_r = riccati_solution(RiccatiKind::R, 0.0, 0.0, p.hbar)?;

    let psi_l = gaussian_psi_l(&grid_l, p.a_mean, p.b_mean)?;
    let psi_r = gaussian_psi_r(&grid_r)?;

    let res_l = ode_residual_l(&psi_l, p.a_mean, p.b_mean, sol_l.m_value)?;
    let res_r = eigen_residual_r(&psi_r, sol_r.m_value)?;

    let alg = ladder_operators(p.fock_dim, p.hbar)?;
    let (x, momentum) = position_momentum(&alg)?;
    let vac = fock_state(&alg, 0)?;
    let fock_var_x = variance(&vac, &x)?;
    let fock_var_p = variance(&vac, &momentum)?;
    let grid_var_x = psi_r.x_variance();
    let grid_var_p = psi_r.p_variance();
    let fock_consistent =
        (grid_var_x - fock_var_x).abs() < 1e-4 && (grid_var_p - fock_var_p).abs() < 1e-4;

    Ok(CvReport {
        hbar: p.hbar,
        a_mean: p.a_mean,
        b_mean: p.b_mean,
        grid: GridJson {
            n_points: grid_l.n_points,
            halfwidth: p.grid_halfwidth,
            spacing: grid_l.spacing(),
            x_min: grid_l.x_min,
            x_max: grid_l.x_max,
        },
        riccati_l: RiccatiJson {
            kind: "L",
            c_linear: [sol_l.c_linear.re, sol_l.c_linear.im],
            c_const: [sol_l.c_const.re, sol_l.c_const.im],
            m_value: sol_l.m_value,
        },
        riccati_r: RiccatiJson {
            kind: "R",
            c_linear: [sol_r.c_linear.re, sol_r.c_linear.im],
            c_const: [sol_r.c_const.re, sol_r.c_const.im],
            m_value: sol_r.m_value,
        },
        ode_residual_l: res_l,
        eigen_residual_r: res_r,
        grid_x_mean: psi_l.x_mean(),
        grid_p_mean: psi_l.p_mean(),
        grid_var_x,
        grid_var_p,
        fock_dim: p.fock_dim,
        fock_var_x,
        fock_var_p,
        fock_consistent,
        m_equals_hbar_confirmed: res_l < 1e-3 && res_r < 1e-3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_check_confirms_m_equals_hbar() {
        let report = run_cv_check(&CvParams::default()).unwrap();
        assert!(report.m_equals_hbar_confirmed);
        assert!(report.ode_residual_l < 1e-3);
        assert!(report.eigen_residual_r < 1e-3);
        assert_eq!(report.riccati_l.c_linear, [-1.0, 0.0]);
        assert_eq!(report.riccati_l.c_const, [1.0, 0.5]);
        assert_eq!(report.riccati_l.m_value, 1.0);
        assert_eq!(report.riccati_r.c_const, [0.0, 0.0]);
        assert_eq!(report.riccati_r.m_value, 1.0);
        assert!(report.fock_consistent);
        assert!((report.grid_x_mean - 1.0).abs() < 1e-6);
        assert!((report.grid_p_mean - 0.5).abs() < 1e-6);
    }

    #[test]
    fn hbar_scaling_reported() {
        let report = run_cv_check(&CvParams {
            hbar: 2.0,
            a_mean: 0.0,
            b_mean: 0.0,
            ..CvParams::default()
        })
        .unwrap();
        assert_eq!(report.riccati_l.m_value, 2.0);
        assert_eq!(report.riccati_r.m_value, 2.0);
        assert!(report.m_equals_hbar_confirmed);
        assert_eq!(report.riccati_l.c_linear, [-0.5, 0.0]);
    }

    #[test]
    fn narrow_grid_is_rejected() {
        let res = run_cv_check(&CvParams {
            grid_halfwidth: 5.0,
            ..CvParams::default()
        });
        assert!(res.is_err());
    }
}
