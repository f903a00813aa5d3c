//! Pinned numerical tolerances.
//!
//! Every threshold used by validated constructors and predicates lives here;
//! nothing downstream invents its own magic numbers. All matrices in this
//! crate are tiny (dim of order 100 at most), so the strict constructor
//! tolerances are affordable.

/// Max-norm tolerance for `M - M†` at `HermitianOperator` construction.
pub const HERMITICITY: f64 = 1e-12;

/// Allowed deviation of a `StateVector` norm from 1.
pub const STATE_NORM: f64 = 1e-12;

/// Below this Euclidean norm a raw vector is treated as null and cannot be
/// normalized.
pub const NULL_VECTOR: f64 = 1e-13;

/// Max-norm tolerance for `U†U - I` at `UnitaryMatrix` construction.
pub const UNITARITY: f64 = 1e-12;

/// Admission tolerance on |⟨ψ⊥|ψ⟩| for user-supplied perpendicular states
/// (looser than the internal construction tolerance so states deserialized
/// from decimal text survive).
pub const PERP_ADMISSION: f64 = 1e-8;

/// Orthogonality guaranteed by `random_perp` and `saturating_perp` outputs.
pub const PERP_INTERNAL: f64 = 1e-10;

/// Residual imaginary part allowed on quantities that are real by symmetry
/// (expectations of Hermitian operators, i⟨\[A,B\]⟩).
pub const IMAG_RESIDUAL: f64 = 1e-10;

/// Negative variance window clamped to zero (floating-point cancellation on
/// eigenstates).
pub const VARIANCE_CLAMP: f64 = 1e-12;

/// |gap| of `mp_sum_bound` with the saturating perpendicular state.
pub const SATURATION_GAP: f64 = 1e-9;

/// Default MUS predicate tolerance for exactly representable inputs.
pub const MUS_DEFAULT: f64 = 1e-9;

/// Default MUS predicate tolerance for truncated-Fock inputs, where
/// truncation noise dominates.
pub const MUS_TRUNCATED_FOCK: f64 = 1e-6;

/// Fock amplitude on the top two levels above which truncated results are
/// outside the documented low-occupancy validity contract.
pub const FOCK_TAIL: f64 = 1e-8;

/// Below this squared magnitude the ψ⊥ term of the Maccone–Pati bound is
/// reported as vanishing (ψ⊥ orthogonal to (A±iB)ψ).
pub const PERP_TERM_VANISHES: f64 = 1e-18;

/// Resample limit for `random_perp` before declaring the RNG broken.
pub const PERP_RESAMPLE_LIMIT: u32 = 16;

/// Largest accepted operator entry magnitude. Keeps every quadratic form in
/// the crate (variances, commutator means, bound terms) inside f64 range,
/// so no public output can overflow to inf or NaN.
pub const ENTRY_LIMIT: f64 = 1e100;
