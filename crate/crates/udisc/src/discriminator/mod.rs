//! Analytic engine: Jordan overlaps, optimal failure parameters, block
//! expectations, the closed-form success probability, asymptotic limits,
//! and the Monte-Carlo average over Haar-random inputs.

mod blocks;
mod config;
mod psp;
mod sampling;

pub use blocks::{
    block_expectation, block_expectation_lemma, dim_weights, jordan_overlap_exact,
    jordan_overlaps, optimal_q, BlockData, Regime, Side,
};
pub use config::{CopyConfig, Overlap, Priors};
pub use psp::{
    limit_data_infinite, limit_program_infinite, pascal_extract, psp, BlockContribution,
    PspBreakdown, PspEvaluator,
};
pub use sampling::{asp_monte_carlo, sample_overlap_sq, MonteCarloEstimate};
