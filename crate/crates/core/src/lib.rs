//! Exact arithmetic in biquadratic extensions `F(√a1, √a2)` of the
//! rationals, the action of the Klein four-group ring on their unit groups,
//! constructive Hilbert 90 style witnesses, a norm-form identity for
//! quadratic forms, and a lab for checking the corresponding statements on
//! finite modules.
//!
//! Everything is generic over an exact scalar type implementing
//! [`Scalar`]; the aliases at the crate root default to [`Rational`].
//!
//! ```
//! use biquad90::{BiquadConfig, Rational, Scalar, kernel_membership};
//!
//! let k: BiquadConfig = BiquadConfig::new(Rational::from_int(2), Rational::from_int(3))?;
//! let e = &k.r1() * &k.r2();
//! assert!(kernel_membership(&e)?.in_kernel());
//! # Ok::<(), biquad90::Error>(())
//! ```

pub mod error;
pub mod field;
pub mod group_ring;
pub mod hilbert90;
pub mod module_lab;
pub mod qform;
pub mod scalar;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use field::{
    GaloisElement, Intermediate, NormTarget, SquareParam, Subfield, SubfieldMembership, BASIS_NAMES,
};
pub use hilbert90::{
    coboundary_witness, crossed_hom_check, kernel_decompose, kernel_membership,
    norm_product_witness, qh90_witness,
};
pub use module_lab::{
    enumerate_modules, verify_theorem3, FiniteKleinModule, Theorem3Report, Verdict,
};
pub use qform::{
    pythagorean_triple, qform_decompose, qform_value, represent_by_split_form, QformBranch,
};
pub use scalar::{
    checked_div, checked_inv, is_square, parse_rational, rational_arith, RationalOp, Scalar,
};

/// Arbitrary-precision rationals, the default scalar.
pub type Rational = num_rational::BigRational;

pub type BiquadConfig<T = Rational> = field::BiquadConfig<T>;
pub type ExtElement<T = Rational> = field::ExtElement<T>;
pub type GroupRingElement<I = BigInt> = group_ring::GroupRingElement<I>;
pub type CrossedHom<T = Rational> = hilbert90::CrossedHom<T>;
pub type Factorization<T = Rational> = hilbert90::Factorization<T>;
pub type NormWitness<T = Rational> = hilbert90::NormWitness<T>;
pub type KernelReport<T = Rational> = hilbert90::KernelReport<T>;
pub type QuadExtElement<T = Rational> = qform::QuadExtElement<T>;
pub type QformDecomposition<T = Rational> = qform::QformDecomposition<T>;
