//! Numerical toolkit for cohomogeneity-one isometric actions on Minkowski
//! space `M^{n+1}`.
//!
//! The crate models the isometry group `O(n,1) x M^{n+1}` and its Lie
//! algebra, carries a catalog of the connected cohomogeneity-one actions on
//! the Minkowski plane and on three-dimensional Minkowski space (plus the
//! parabolic family acting on every higher dimension), labels orbits by
//! geometric invariants, classifies arbitrary subalgebras of `iso(M^3)` up
//! to orbit equivalence with explicit conjugating isometries, and replays
//! the structural facts behind the catalog as randomized verification
//! checks.
//!
//! The default `std` feature only enables `std::error::Error` and faster
//! float intrinsics; the crate itself is `no_std + alloc` compatible.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod catalog;
pub mod classify;
pub mod geometry;
pub mod lie;
pub mod linalg;
pub mod sample;
pub mod verify;

pub use catalog::{
    catalog_list, cohomogeneity, cohomogeneity_with_witness, expected_stratum_kinds,
    group_element, label_distance, orbit_dimension, orbit_label, orbit_sample,
    orbit_sample_with_params, ActionClass, ActionSpec, KPrime, OrbitLabel, Stratum,
};
pub use classify::{
    classify_m2, classify_m3, extract_lambda, pi1_to_standard, ClassificationResult, Verdict,
};
pub use geometry::{causal_class, lorentz_inner, quadric_label, CausalClass, MinkVector, RegionLabel, Sign};
pub use lie::{
    bracket, cartan_involution, exp_iso, iwasawa_generators, IsoElement, IwasawaBasis, LieElement,
    LorentzMatrix, SoMatrix, Subalgebra,
};
pub use verify::{
    check_isometry, commuting_identity_check, dense_open_experiment, nonequivalence_witness,
    orbit_count_experiment, p_lambda_congruence_check, p_lambda_congruence_with_boost,
    VerificationReport, VerificationStatus, Witness,
};

/// Errors across the crate. Numerical routines that merely *measure*
/// (residuals, ranks, labels) prefer returning values; errors are reserved
/// for structurally invalid inputs.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Vectors and matrices must live in `M^{n+1}` with `n >= 1`.
    AmbientDimTooSmall { found: usize },
    /// Some coordinate was NaN or infinite.
    NonFiniteInput,
    /// Two objects that must share an ambient dimension do not.
    DimensionMismatch { expected: usize, found: usize },
    /// Cylinder radii must be positive.
    NonPositiveRadius { r: f64 },
    /// The matrix fails `J X^T J = -X` beyond tolerance.
    NotSoMatrix { residual: f64 },
    /// The matrix fails `x^T J x = J` beyond tolerance.
    NotLorentzMatrix { residual: f64 },
    /// An isometry's linear part drifted off the group during computation.
    CorruptedIsometry { residual: f64 },
    /// Subalgebras need at least one basis element.
    EmptyBasis,
    /// The proposed basis is numerically dependent.
    DependentBasis,
    /// An action was given the wrong number of parameters.
    WrongParamCount { expected: usize, found: usize },
    /// The catalog has no entries for this ambient dimension.
    UnsupportedAmbientDim { dim: usize },
    /// The graph-family parameter must be nonnegative here.
    NegativeLambda { lambda: f64 },
    /// Block sizes for the partial parabolic family must satisfy
    /// `2 <= m <= n-2`.
    BlockSizeOutOfRange { m: usize, n: usize },
    /// The action class is not defined in this ambient dimension.
    WrongAmbientForClass { class_dim: usize, found: usize },
    /// No shared invariant null line; the plane-adapting step requires one.
    NoInvariantNullLine,
    /// Structural precondition of a narrow helper was not met (for example
    /// a line generator without the expected normal form).
    NotSemiCanonical,
    /// Comparing a parameter value with itself; the check would be vacuous.
    DegenerateComparison,
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::AmbientDimTooSmall { found } => {
                write!(f, "ambient dimension {found} is too small (need at least 2)")
            }
            Error::NonFiniteInput => write!(f, "input contains NaN or infinite entries"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NonPositiveRadius { r } => write!(f, "radius must be positive, got {r}"),
            Error::NotSoMatrix { residual } => {
                write!(f, "matrix is not in so(n,1): identity residual {residual:e}")
            }
            Error::NotLorentzMatrix { residual } => {
                write!(f, "matrix is not Lorentz: identity residual {residual:e}")
            }
            Error::CorruptedIsometry { residual } => {
                write!(f, "isometry drifted off the group: residual {residual:e}")
            }
            Error::EmptyBasis => write!(f, "subalgebra basis is empty"),
            Error::DependentBasis => write!(f, "subalgebra basis is numerically dependent"),
            Error::WrongParamCount { expected, found } => {
                write!(f, "expected {expected} parameters, found {found}")
            }
            Error::UnsupportedAmbientDim { dim } => {
                write!(f, "no catalog entries for ambient dimension {dim}")
            }
            Error::NegativeLambda { lambda } => {
                write!(f, "parameter lambda must be nonnegative, got {lambda}")
            }
            Error::BlockSizeOutOfRange { m, n } => {
                write!(f, "block size {m} out of range for so({n},1) (need 2 <= m <= n-2)")
            }
            Error::WrongAmbientForClass { class_dim, found } => {
                write!(f, "action class lives in ambient dimension {class_dim}, got {found}")
            }
            Error::NoInvariantNullLine => {
                write!(f, "no shared invariant null line found")
            }
            Error::NotSemiCanonical => {
                write!(f, "input is not in the normal form this step requires")
            }
            Error::DegenerateComparison => {
                write!(f, "the two parameter values coincide; nothing to compare")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
