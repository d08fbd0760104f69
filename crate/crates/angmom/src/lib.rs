//! Exact-arithmetic angular momentum kernel.
//!
//! Provides factorials and binomials over big integers, Clebsch-Gordan
//! coefficients and Wigner 6j symbols via Racah's closed-form sums over
//! big-integer rationals, squared moduli of stretched Wigner d-functions,
//! the terminating Gauss hypergeometric series, and U(d) irrep dimensions
//! for two-row Young diagrams.
//!
//! Square roots are deferred to the [`SqrtRational`] boundary, so selection
//! rules produce exact zeros and recoupling identities can be checked in
//! exact rational arithmetic. Clebsch-Gordan coefficients follow the
//! Condon-Shortley phase convention throughout.

mod error;
mod factorial;
mod half;
mod hyp2f1;
mod sqrt_rational;
mod wigner;
mod wigner_d;
mod young;

pub use error::AngmomError;
pub use factorial::{binomial, factorial};
pub use half::HalfInt;
pub use hyp2f1::gauss_2f1_terminating;
pub use sqrt_rational::{ratio_to_f64, sqrt_ratio_to_f64, SqrtRational};
pub use wigner::{clebsch_gordan, triangle_ok, wigner_6j};
pub use wigner_d::wigner_d_stretched_sq;
pub use young::{sym_dim, weyl_dim, YoungTwoRow};

/// Arbitrary-precision rational, the carrier for every Racah-type sum.
pub type BigRational = num_rational::Ratio<num_bigint::BigInt>;
