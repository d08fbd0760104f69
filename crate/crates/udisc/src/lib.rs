//! Success probabilities of the optimal universal programmable
//! unambiguous discriminator between two unknown pure states.
//!
//! The [`discriminator`] module is the analytic engine: Jordan overlaps
//! from 6j recoupling, optimal failure parameters, blockwise expectation
//! values, the closed-form success probability for arbitrary copy counts,
//! priors, dimension and overlap, plus both asymptotic limits and a
//! Monte-Carlo average over Haar-random inputs.
//!
//! The [`oracle`] module independently rebuilds everything by brute force
//! in the full qubit product space: explicit input states, coupled bases,
//! the optimal POVM, direct expectation values, grid searches over the
//! failure parameters, and Born-rule sampling. Every analytic formula is
//! validated against it.

pub mod discriminator;
mod error;
pub mod oracle;

pub use error::UdiscError;

pub type Result<T> = std::result::Result<T, UdiscError>;
