//! The closed-form success probability and its asymptotic limits.

use angmom::{ratio_to_f64, BigRational};
use nalgebra::{DMatrix, DVector};

use super::blocks::{
    block_coefficients, block_expectation_at, jordan_overlaps, q_parameters, Side,
};
use super::config::{CopyConfig, Overlap, Priors};
use crate::discriminator::dim_weights;
use crate::{Result, UdiscError};

/// One block's additive share of the success probability.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlockContribution {
    pub k: u32,
    pub side: Side,
    pub contribution: f64,
}

/// The assembled success probability: `total = a (1-s^2)^{n_C} + (b+c) (1-s^2)^{n_2}`
/// with the prefactor sums `a`, `b`, `c` reported alongside the per-block
/// contributions.
///
/// At `s = 1` the prefactors diverge while the total vanishes; they are
/// reported as zero there by convention.
#[derive(Clone, Debug, PartialEq)]
pub struct PspBreakdown {
    pub coeff_a: f64,
    pub coeff_b: f64,
    pub coeff_c: f64,
    pub per_block: Vec<BlockContribution>,
    pub total: f64,
}

/// Precomputed per-configuration state: Jordan overlaps, weight ratio and
/// the exact-rational block polynomials, so sweeps over priors and overlap
/// stay cheap.
#[derive(Clone, Debug)]
pub struct PspEvaluator {
    config: CopyConfig,
    overlaps: Vec<f64>,
    weight_ratio: f64,
    side1_coeffs: Vec<Vec<f64>>,
    side2_coeffs: Vec<Vec<f64>>,
}

impl PspEvaluator {
    pub fn new(config: &CopyConfig) -> Result<Self> {
        let overlaps = jordan_overlaps(config)?;
        let (w1, w2) = dim_weights(config);
        let weight_ratio = ratio_to_f64(&BigRational::new(w1, w2));
        let side1_coeffs = (1..=config.n_c())
            .map(|k| block_coefficients(config.n1(), config.n_c(), k))
            .collect();
        let side2_coeffs = (1..=config.max_block())
            .map(|k| block_coefficients(config.n_a(), config.n2(), k))
            .collect();
        Ok(PspEvaluator {
            config: *config,
            overlaps,
            weight_ratio,
            side1_coeffs,
            side2_coeffs,
        })
    }

    pub fn config(&self) -> &CopyConfig {
        &self.config
    }

    /// Jordan overlaps `O_k`, `k = 1..=n_C`.
    pub fn overlaps(&self) -> &[f64] {
        &self.overlaps
    }

    /// Optimal failure parameters for the cached overlaps.
    pub fn failure_parameters(&self, priors: &Priors) -> Result<Vec<(f64, f64)>> {
        priors.require_nondegenerate()?;
        Ok(self
            .overlaps
            .iter()
            .map(|&o| {
                let (q1, q2, _) = q_parameters(o, self.weight_ratio, priors);
                (q1, q2)
            })
            .collect())
    }

    pub fn evaluate(&self, priors: &Priors, overlap: &Overlap) -> Result<PspBreakdown> {
        priors.require_nondegenerate()?;
        let t = overlap.overlap_sq();
        let sin_sq = 1.0 - t;
        let n_c = self.config.n_c();
        let v2 = self.config.n2();

        let mut per_block = Vec::with_capacity((n_c + self.config.max_block() + 2) as usize);
        per_block.push(BlockContribution { k: 0, side: Side::Side1, contribution: 0.0 });
        let mut total = 0.0;
        let mut hat_a = 0.0;
        let mut hat_b = 0.0;
        let mut hat_c = 0.0;
        // cot^2(beta/2); only used away from s = 1
        let ratio = if sin_sq > 0.0 { t / sin_sq } else { 0.0 };

        for k in 1..=n_c {
            let (q1, q2, _) = q_parameters(self.overlaps[(k - 1) as usize], self.weight_ratio, priors);
            let coeffs1 = &self.side1_coeffs[(k - 1) as usize];
            let c1 = priors.eta1() * (1.0 - q1) * block_expectation_at(coeffs1, n_c, t);
            per_block.push(BlockContribution { k, side: Side::Side1, contribution: c1 });
            total += c1;

            let coeffs2 = &self.side2_coeffs[(k - 1) as usize];
            let c2 = priors.eta2() * (1.0 - q2) * block_expectation_at(coeffs2, v2, t);
            per_block.push(BlockContribution { k, side: Side::Side2, contribution: c2 });
            total += c2;

            if sin_sq > 0.0 {
                hat_a += priors.eta1() * (1.0 - q1) * poly_eval(coeffs1, ratio);
                hat_b += priors.eta2() * (1.0 - q2) * poly_eval(coeffs2, ratio);
            }
        }
        for k in (n_c + 1)..=self.config.max_block() {
            let coeffs2 = &self.side2_coeffs[(k - 1) as usize];
            let c2 = priors.eta2() * block_expectation_at(coeffs2, v2, t);
            per_block.push(BlockContribution { k, side: Side::Side2, contribution: c2 });
            total += c2;
            if sin_sq > 0.0 {
                hat_c += priors.eta2() * poly_eval(coeffs2, ratio);
            }
        }

        Ok(PspBreakdown {
            coeff_a: hat_a,
            coeff_b: hat_b,
            coeff_c: hat_c,
            per_block,
            total,
        })
    }
}

/// `sum_j coeffs[j] r^j`, all terms nonnegative.
fn poly_eval(coeffs: &[f64], r: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c)
}

/// Success probability of the optimal universal unambiguous discriminator
/// on pure inputs.
pub fn psp(config: &CopyConfig, priors: &Priors, overlap: &Overlap) -> Result<PspBreakdown> {
    PspEvaluator::new(config)?.evaluate(priors, overlap)
}

/// Limit of the success probability as the data register grows without
/// bound, with `m` copies in each program register: `1 - s^(2m)`.
pub fn limit_data_infinite(m: u32, overlap: &Overlap) -> f64 {
    1.0 - overlap.overlap_sq().powi(m as i32)
}

/// Limit of the success probability as both program registers grow without
/// bound, with `n` copies in the data register: the three-branch
/// unambiguous-discrimination value for known states with overlap `s^n`.
pub fn limit_program_infinite(n: u32, priors: &Priors, overlap: &Overlap) -> f64 {
    let c2n = overlap.overlap_sq().powi(n as i32);
    let lower = c2n / (1.0 + c2n);
    let upper = 1.0 / (1.0 + c2n);
    if priors.eta1() < lower {
        priors.eta2() * (1.0 - c2n)
    } else if priors.eta1() <= upper {
        1.0 - 2.0 * (priors.eta1() * priors.eta2()).sqrt() * overlap.s().powi(n as i32)
    } else {
        priors.eta1() * (1.0 - c2n)
    }
}

/// Extracts the polynomial coefficients of the data-register-infinite
/// limit by evaluating the success probability at `n_A = n_C = m`,
/// `n_B = n_large` over a beta grid and solving the least-squares system
/// `P = sum_{k=1..m} a_k (cos^2)^{m-k} (sin^2)^k`.
pub fn pascal_extract(m: u32, n_large: u32, beta_grid: &[f64]) -> Result<Vec<f64>> {
    if m == 0 || m > 6 {
        return Err(UdiscError::InvalidArgument(format!(
            "pascal extraction supports 1 <= m <= 6, got {m}"
        )));
    }
    if n_large < 100 {
        return Err(UdiscError::InvalidArgument(format!(
            "need n_large >= 100 to approach the limit, got {n_large}"
        )));
    }
    if beta_grid.len() < m as usize {
        return Err(UdiscError::InvalidArgument(format!(
            "grid of {} points cannot determine {m} coefficients",
            beta_grid.len()
        )));
    }
    let config = CopyConfig::new(m, n_large, m, 2)?;
    let evaluator = PspEvaluator::new(&config)?;
    // The limit is independent of the priors; fit at balanced ones.
    let priors = Priors::balanced();

    let rows = beta_grid.len();
    let mut design = DMatrix::zeros(rows, m as usize);
    let mut target = DVector::zeros(rows);
    for (i, &beta) in beta_grid.iter().enumerate() {
        let overlap = Overlap::from_beta(beta)?;
        let t = overlap.overlap_sq();
        for k in 1..=m {
            design[(i, (k - 1) as usize)] =
                t.powi((m - k) as i32) * (1.0 - t).powi(k as i32);
        }
        target[i] = evaluator.evaluate(&priors, &overlap)?.total;
    }

    let svd = design.svd(true, true);
    let max_sv = svd.singular_values.max();
    let min_sv = svd.singular_values.min();
    if !(min_sv > 1e-12 * max_sv) {
        return Err(UdiscError::IllConditioned {
            detail: format!("singular values span [{min_sv:.3e}, {max_sv:.3e}]"),
        });
    }
    let solution = svd
        .solve(&target, 0.0)
        .map_err(|e| UdiscError::IllConditioned { detail: e.to_string() })?;
    Ok(solution.iter().copied().collect())
}
