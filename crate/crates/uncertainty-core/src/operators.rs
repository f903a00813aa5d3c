//! Concrete observables: spin-j angular momentum triples, truncated-Fock
//! ladder operators, quadratures, dimensionful position/momentum, and the
//! standard Fock-space states built on them.
//!
//! Truncation contract: results computed from a [`FockAlgebra`] are trusted
//! only for states with negligible amplitude on the top two Fock levels
//! (see [`fock_tail_amplitude`] and `tol::FOCK_TAIL`); the commutator
//! \[a,a†\] deviates from the identity at the corner entry, where it equals
//! 1 − N.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::hilbert::{HermitianOperator, StateVector};
use crate::C64;

/// Angular momentum triple for spin j, basis ordered by descending m
/// (|j⟩ first), so Jz = ħ·diag(j, j−1, …, −j).
#[derive(Debug, Clone)]
pub struct SpinTriple {
    pub jx: HermitianOperator,
    pub jy: HermitianOperator,
    pub jz: HermitianOperator,
    pub j: f64,
    pub hbar: f64,
}

impl SpinTriple {
    pub fn dim(&self) -> usize {
        self.jz.dim()
    }
}

/// Truncated annihilation/creation pair on an N-level Fock space.
#[derive(Debug, Clone)]
pub struct FockAlgebra {
    pub a: DMatrix<C64>,
    pub a_dagger: DMatrix<C64>,
    pub n: usize,
    pub hbar: f64,
}

/// Builds Jx, Jy, Jz for a positive half-integer j via the ladder-operator
/// construction.
pub fn spin_operators(j: f64, hbar: f64) -> Result<SpinTriple> {
    let two_j = 2.0 * j;
    if !(two_j.fract() == 0.0 && two_j >= 1.0 && two_j.is_finite()) {
        return Err(Error::NotHalfInteger { j });
    }
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::NonPositive {
            name: "hbar",
            value: hbar,
        });
    }
    let dim = two_j as usize + 1;
    // J+ in descending-m order: ⟨m+1|J+|m⟩ = ħ√(j(j+1) − m(m+1)) sits one
    // row above the diagonal.
    let mut jp = DMatrix::<C64>::zeros(dim, dim);
    for k in 1..dim {
        let m = j - k as f64;
        jp[(k - 1, k)] = C64::new(hbar * (j * (j + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
    }
    let jm = jp.adjoint();
    let jx = (&jp + &jm) * C64::new(0.5, 0.0);
    let jy = (&jp - &jm) * C64::new(0.0, -0.5);
    let mut jz = DMatrix::<C64>::zeros(dim, dim);
    for k in 0..dim {
        jz[(k, k)] = C64::new(hbar * (j - k as f64), 0.0);
    }
    Ok(SpinTriple {
        jx: HermitianOperator::new(jx)?,
        jy: HermitianOperator::new(jy)?,
        jz: HermitianOperator::new(jz)?,
        j,
        hbar,
    })
}

/// Truncated ladder operators: a|n⟩ = √n |n−1⟩ for n < N.
pub fn ladder_operators(n: usize, hbar: f64) -> Result<FockAlgebra> {
    if n < 2 {
        return Err(Error::InvalidDimension { dim: n, min: 2 });
    }
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::NonPositive {
            name: "hbar",
            value: hbar,
        });
    }
    let mut a = DMatrix::<C64>::zeros(n, n);
    for k in 1..n {
        a[(k - 1, k)] = C64::new((k as f64).sqrt(), 0.0);
    }
    let a_dagger = a.adjoint();
    Ok(FockAlgebra {
        a,
        a_dagger,
        n,
        hbar,
    })
}

/// Quadratures X1 = (a+a†)/2, X2 = (a−a†)/(2i).
pub fn quadratures(alg: &FockAlgebra) -> Result<(HermitianOperator, HermitianOperator)> {
    let x1 = (&alg.a + &alg.a_dagger) * C64::new(0.5, 0.0);
    let x2 = (&alg.a - &alg.a_dagger) * C64::new(0.0, -0.5);
    Ok((HermitianOperator::new(x1)?, HermitianOperator::new(x2)?))
}

/// Dimensionful x = √(ħ/2)(a+a†) and p = i√(ħ/2)(a†−a), so \[x,p\] ≈ iħ on
/// low-occupancy states.
pub fn position_momentum(alg: &FockAlgebra) -> Result<(HermitianOperator, HermitianOperator)> {
    let s = (alg.hbar / 2.0).sqrt();
    let x = (&alg.a + &alg.a_dagger) * C64::new(s, 0.0);
    let p = (&alg.a_dagger - &alg.a) * C64::new(0.0, s);
    Ok((HermitianOperator::new(x)?, HermitianOperator::new(p)?))
}

/// Fock number state |k⟩ in the truncation of `alg`.
pub fn fock_state(alg: &FockAlgebra, k: usize) -> Result<StateVector> {
    StateVector::basis_state(alg.n, k)
}

/// Coherent state |α⟩ from its Fock coefficients αⁿ/√(n!), renormalized on
/// the truncation.
pub fn coherent_state(alg: &FockAlgebra, alpha: C64) -> Result<StateVector> {
    let mut v = DVector::<C64>::zeros(alg.n);
    let mut coeff = C64::new(1.0, 0.0);
    v[0] = coeff;
    for k in 1..alg.n {
        coeff *= alpha / C64::new((k as f64).sqrt(), 0.0);
        v[k] = coeff;
    }
    StateVector::normalize(v)
}

/// Squeezed vacuum S(r)|0⟩ for real squeezing parameter r, from the analytic
/// even-level coefficients (−tanh r)ᵏ √((2k)!)/(2ᵏ k!), renormalized on the
/// truncation. ΔX1² = e^(−2r)/4 and ΔX2² = e^(2r)/4 up to truncation noise.
pub fn squeezed_vacuum(alg: &FockAlgebra, r: f64) -> Result<StateVector> {
    let mut v = DVector::<C64>::zeros(alg.n);
    let t = -r.tanh();
    // ratio c_{2k}/c_{2k-2} = t·√((2k−1)/(2k)) keeps factorials out.
    let mut coeff = 1.0f64;
    v[0] = C64::new(coeff, 0.0);
    let mut k = 1usize;
    while 2 * k < alg.n {
        coeff *= t * (((2 * k - 1) as f64) / ((2 * k) as f64)).sqrt();
        v[2 * k] = C64::new(coeff, 0.0);
        k += 1;
    }
    StateVector::normalize(v)
}

/// Largest amplitude on the top two Fock levels; results from a truncated
/// algebra are inside the documented validity contract only when this is
/// below `tol::FOCK_TAIL`.
pub fn fock_tail_amplitude(psi: &StateVector) -> f64 {
    let n = psi.dim();
    psi.amplitudes()[n - 1]
        .norm()
        .max(psi.amplitudes()[n - 2].norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{commutator_mean, expectation, hermitian_eigensystem, variance};
    use crate::tol;
    use approx::assert_relative_eq;

    fn max_entry(m: &DMatrix<C64>) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn spin_half_gives_pauli_over_two() {
        let s = spin_operators(0.5, 1.0).unwrap();
        assert_eq!(s.dim(), 2);
        assert_relative_eq!(s.jx.matrix()[(0, 1)].re, 0.5, epsilon = 1e-15);
        assert_relative_eq!(s.jy.matrix()[(0, 1)].im, -0.5, epsilon = 1e-15);
        assert_relative_eq!(s.jz.matrix()[(0, 0)].re, 0.5, epsilon = 1e-15);
        assert_relative_eq!(s.jz.matrix()[(1, 1)].re, -0.5, epsilon = 1e-15);
    }

    #[test]
    fn spin_one_matches_ladder_construction() {
        let s = spin_operators(1.0, 1.0).unwrap();
        let root_half = std::f64::consts::FRAC_1_SQRT_2;
        assert_relative_eq!(s.jz.matrix()[(0, 0)].re, 1.0);
        assert_relative_eq!(s.jz.matrix()[(1, 1)].re, 0.0);
        assert_relative_eq!(s.jz.matrix()[(2, 2)].re, -1.0);
        assert_relative_eq!(s.jy.matrix()[(0, 1)].im, -root_half, epsilon = 1e-15);
        assert_relative_eq!(s.jy.matrix()[(1, 0)].im, root_half, epsilon = 1e-15);

        let eig = hermitian_eigensystem(&s.jy).unwrap();
        for (got, want) in eig.eigenvalues.iter().zip([-1.0, 0.0, 1.0]) {
            assert_relative_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn spin_commutation_relations() {
        for &two_j in &[1u32, 2, 3, 4, 5, 6] {
            let j = f64::from(two_j) / 2.0;
            let s = spin_operators(j, 1.0).unwrap();
            let (x, y, z) = (s.jx.matrix(), s.jy.matrix(), s.jz.matrix());
            let i = C64::new(0.0, 1.0);
            assert!(max_entry(&(x * y - y * x - z * i)) < 1e-12, "j = {j}");
            assert!(max_entry(&(y * z - z * y - x * i)) < 1e-12, "j = {j}");
            assert!(max_entry(&(z * x - x * z - y * i)) < 1e-12, "j = {j}");
        }
    }

    #[test]
    fn spin_rejects_bad_j() {
        assert!(matches!(
            spin_operators(0.7, 1.0),
            Err(Error::NotHalfInteger { .. })
        ));
        assert!(matches!(
            spin_operators(0.0, 1.0),
            Err(Error::NotHalfInteger { .. })
        ));
    }

    #[test]
    fn ladder_entries_and_truncation_corner() {
        let alg = ladder_operators(2, 1.0).unwrap();
        assert_eq!(alg.a[(0, 1)], C64::new(1.0, 0.0));
        assert_eq!(alg.a[(1, 0)], C64::new(0.0, 0.0));

        let alg = ladder_operators(4, 1.0).unwrap();
        for k in 1..4 {
            assert_relative_eq!(alg.a[(k - 1, k)].re, (k as f64).sqrt(), epsilon = 1e-15);
        }

        let alg = ladder_operators(20, 1.0).unwrap();
        let comm = &alg.a * &alg.a_dagger - &alg.a_dagger * &alg.a;
        for k in 0..19 {
            assert_relative_eq!(comm[(k, k)].re, 1.0, epsilon = 1e-12);
        }
        assert_relative_eq!(comm[(19, 19)].re, -19.0, epsilon = 1e-12);
    }

    #[test]
    fn ladder_rejects_small_n() {
        assert!(matches!(
            ladder_operators(1, 1.0),
            Err(Error::InvalidDimension { .. })
        ));
    }

    #[test]
    fn quadratures_on_vacuum() {
        let alg = ladder_operators(20, 1.0).unwrap();
        let (x1, x2) = quadratures(&alg).unwrap();
        let vac = fock_state(&alg, 0).unwrap();
        assert_relative_eq!(expectation(&vac, &x1).unwrap(), 0.0, epsilon = 1e-14);
        assert_relative_eq!(variance(&vac, &x1).unwrap(), 0.25, epsilon = 1e-14);
        assert_relative_eq!(variance(&vac, &x2).unwrap(), 0.25, epsilon = 1e-14);
        assert_relative_eq!(
            commutator_mean(&vac, &x1, &x2).unwrap(),
            -0.5,
            epsilon = 1e-14
        );
    }

    #[test]
    fn quadrature_sum_identity_off_corner() {
        // 4(X1² + X2²) = 2(a†a + aa†) away from the truncated block.
        let alg = ladder_operators(12, 1.0).unwrap();
        let (x1, x2) = quadratures(&alg).unwrap();
        let lhs = (x1.matrix() * x1.matrix() + x2.matrix() * x2.matrix()) * C64::new(4.0, 0.0);
        let rhs = (&alg.a_dagger * &alg.a + &alg.a * &alg.a_dagger) * C64::new(2.0, 0.0);
        let diff = &lhs - &rhs;
        for i in 0..11 {
            for j in 0..11 {
                assert!(diff[(i, j)].norm() < 1e-12, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn position_momentum_scaling() {
        let alg = ladder_operators(20, 1.0).unwrap();
        let (x, p) = position_momentum(&alg).unwrap();
        let vac = fock_state(&alg, 0).unwrap();
        let sum = variance(&vac, &x).unwrap() + variance(&vac, &p).unwrap();
        assert_relative_eq!(sum, 1.0, epsilon = 1e-13);

        let alg2 = ladder_operators(20, 2.0).unwrap();
        let (x, p) = position_momentum(&alg2).unwrap();
        let vac = fock_state(&alg2, 0).unwrap();
        let sum = variance(&vac, &x).unwrap() + variance(&vac, &p).unwrap();
        assert_relative_eq!(sum, 2.0, epsilon = 1e-13);

        // ⟨n|x²+p²|n⟩ = ħ(2n+1)
        let alg = ladder_operators(20, 1.0).unwrap();
        let (x, p) = position_momentum(&alg).unwrap();
        let one = fock_state(&alg, 1).unwrap();
        let sum = variance(&one, &x).unwrap() + variance(&one, &p).unwrap();
        assert_relative_eq!(sum, 3.0, epsilon = 1e-13);
    }

    #[test]
    fn position_momentum_proportional_to_quadratures() {
        let hbar = 1.7;
        let alg = ladder_operators(10, hbar).unwrap();
        let (x1, x2) = quadratures(&alg).unwrap();
        let (x, p) = position_momentum(&alg).unwrap();
        let s = C64::new((2.0 * hbar).sqrt(), 0.0);
        assert!(max_entry(&(x.matrix() - x1.matrix() * s)) < 1e-14);
        assert!(max_entry(&(p.matrix() - x2.matrix() * s)) < 1e-14);
    }

    #[test]
    fn coherent_state_variances() {
        let alg = ladder_operators(40, 1.0).unwrap();
        let (x1, x2) = quadratures(&alg).unwrap();
        let psi = coherent_state(&alg, C64::new(1.0, 0.5)).unwrap();
        assert!(fock_tail_amplitude(&psi) < tol::FOCK_TAIL);
        assert_relative_eq!(expectation(&psi, &x1).unwrap(), 1.0, epsilon = 1e-10);
        assert_relative_eq!(expectation(&psi, &x2).unwrap(), 0.5, epsilon = 1e-10);
        assert_relative_eq!(variance(&psi, &x1).unwrap(), 0.25, epsilon = 1e-10);
        assert_relative_eq!(variance(&psi, &x2).unwrap(), 0.25, epsilon = 1e-10);
    }

    #[test]
    fn squeezed_vacuum_variances() {
        let r = 0.5;
        let alg = ladder_operators(40, 1.0).unwrap();
        let (x1, x2) = quadratures(&alg).unwrap();
        let psi = squeezed_vacuum(&alg, r).unwrap();
        assert_relative_eq!(
            variance(&psi, &x1).unwrap(),
            (-2.0 * r).exp() / 4.0,
            epsilon = 1e-9
        );
        assert_relative_eq!(
            variance(&psi, &x2).unwrap(),
            (2.0 * r).exp() / 4.0,
            epsilon = 1e-9
        );
        // only even levels populated
        assert_eq!(psi.amplitudes()[1], C64::new(0.0, 0.0));
        assert_eq!(psi.amplitudes()[3], C64::new(0.0, 0.0));
    }
}
