//! Fixtures shared by unit tests: spin-1 matrices written out literally so
//! assertions do not route through `operator_factory`'s ladder construction.

use nalgebra::dmatrix;

use crate::hilbert::{HermitianOperator, StateVector};
use crate::operators::{fock_state, ladder_operators, position_momentum};
use crate::C64;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn r(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn jz() -> HermitianOperator {
    HermitianOperator::new(dmatrix![
        r(1.0), r(0.0), r(0.0);
        r(0.0), r(0.0), r(0.0);
        r(0.0), r(0.0), r(-1.0);
    ])
    .unwrap()
}

pub fn jy() -> HermitianOperator {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    HermitianOperator::new(dmatrix![
        r(0.0), c(0.0, -s), r(0.0);
        c(0.0, s), r(0.0), c(0.0, -s);
        r(0.0), c(0.0, s), r(0.0);
    ])
    .unwrap()
}

/// x, p at ħ = 1 on a 20-level truncation, plus the vacuum.
pub fn position_momentum_hbar1() -> (HermitianOperator, HermitianOperator, StateVector) {
    let alg = ladder_operators(20, 1.0).unwrap();
    let (x, p) = position_momentum(&alg).unwrap();
    let vac = fock_state(&alg, 0).unwrap();
    (x, p, vac)
}
