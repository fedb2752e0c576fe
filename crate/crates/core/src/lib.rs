//! Exact arithmetic for dual-complex numbers, the k-Pell family of
//! sequences and dual-complex k-Pell quaternions, plus a verifier that
//! checks identities over these objects by exact evaluation.
//!
//! The algebra is generic over a [`Scalar`] ring. Exact work uses
//! [`Rational`] or, for Binet forms, [`QuadraticElement`]; `f64` is
//! available for quick approximate evaluation.

pub mod dual_complex;
pub mod error;
pub mod identity;
pub mod quadratic;
pub mod quaternion;
pub mod scalar;
pub mod sequence;
pub mod verifier;

pub use dual_complex::{ConjugationKind, DualComplex};
pub use error::{Error, Result};
pub use identity::{identity_sides, Bindings, IdentityId, Param};
pub use quadratic::{make_alpha_beta, QuadraticElement};
pub use quaternion::{
    binet_quaternion, build_quaternion, gamma_coefficient, DCKPellQuaternion, GammaCoefficient,
    HatPair,
};
pub use scalar::{format_rational, parse_rational, rat_arith, RatOp, Rational, Scalar};
pub use sequence::{
    dc_number, seq_binet, seq_prefix_sum, seq_term, seq_term_fast, SequenceFamily, SequenceSpec,
};
pub use verifier::{
    adjudicate, check_one, sweep, CheckResult, Counterexample, IdentityReport, SweepConfig, Verdict,
};

/// Dual-complex numbers with exact rational coefficients.
pub type DualComplexQ = DualComplex<Rational>;
/// Dual-complex numbers over ℚ(√D), used for Binet evaluation.
pub type DualComplexSurd = DualComplex<QuadraticElement>;
/// Dual-complex numbers with floating-point coefficients.
pub type DualComplexF64 = DualComplex<f64>;
