//! Numerical laboratory for product and sum uncertainty relations.
//!
//! The crate evaluates the Heisenberg–Robertson product bound, the
//! Maccone–Pati sum bound and the weaker sum bound for arbitrary pairs of
//! Hermitian observables, constructs the orthogonal state that saturates the
//! sum bound, classifies minimum-uncertainty states through saturation
//! predicates and variational residuals, and cross-checks the
//! position–momentum specialization on a finite-difference grid.
//!
//! Building blocks:
//!
//! - [`hilbert`]: dense complex states/operators, expectations, variances,
//!   commutator means, Hermitian eigendecomposition;
//! - [`operators`]: spin-j triples, truncated-Fock ladder operators,
//!   quadratures, position/momentum, coherent and squeezed states;
//! - [`random`]: seeded Haar-random unitaries and random orthogonal states;
//! - [`bounds`]: the three uncertainty relations and the saturating
//!   perpendicular state;
//! - [`mus`]: minimum-uncertainty-state predicates and residuals;
//! - [`cvgrid`]: grid Gaussians and finite-difference residuals of their
//!   defining differential equations.
//!
//! Everything is a pure function over immutable inputs except RNG sampling,
//! which mutates an explicit, seedable [`random::RandomSource`].

pub mod bounds;
pub mod cvgrid;
pub mod error;
pub mod hilbert;
pub mod mus;
pub mod operators;
pub mod random;
pub mod tol;

#[cfg(test)]
pub(crate) mod test_support;

/// Complex scalar stored as a (re, im) pair of 64-bit floats.
pub type C64 = num_complex::Complex<f64>;

pub use bounds::{
    mp_sum_bound, product_bound, saturating_perp, sign_choice, weak_sum_bound, BoundReport,
    CenteredPair, Relation,
};
pub use error::{Error, Result};
pub use hilbert::{
    commutator_mean, expectation, hermitian_eigensystem, inner, project_out, variance, Eigensystem,
    HermitianOperator, StateVector,
};
pub use mus::{
    analyze, eigenstate_residual, is_product_mus, is_sum_mus, rhs_maximizing_perp,
    variational_residual_lhs, variational_residual_rhs, MusVerdict,
};
pub use operators::{
    coherent_state, fock_state, fock_tail_amplitude, ladder_operators, position_momentum,
    quadratures, spin_operators, squeezed_vacuum, FockAlgebra, SpinTriple,
};
pub use random::{
    haar_unitary, random_perp, theta_state, unitarity_defect, RandomSource, UnitaryMatrix,
};
