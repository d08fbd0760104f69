//! Monte-Carlo average of the success probability over Haar-random
//! unknown states.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{CopyConfig, Overlap, Priors};
use super::psp::PspEvaluator;
use crate::{Result, UdiscError};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    pub std_err: f64,
    pub samples: u64,
}

/// Draws `t = |<phi1|phi2>|^2` for an independent Haar pair in dimension
/// `d`: density `(d-1)(1-t)^(d-2)` on `[0, 1]`, uniform for qubits.
pub fn sample_overlap_sq<R: Rng + ?Sized>(d: u32, rng: &mut R) -> f64 {
    let u: f64 = rng.random();
    1.0 - u.powf(1.0 / (d as f64 - 1.0))
}

/// Average success probability over Haar-random input pairs, estimated by
/// seeded Monte Carlo; returns the sample mean and its standard error.
pub fn asp_monte_carlo(
    config: &CopyConfig,
    priors: &Priors,
    samples: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if samples == 0 {
        return Err(UdiscError::InvalidArgument("need at least one sample".into()));
    }
    let evaluator = PspEvaluator::new(config)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Vec::with_capacity(samples as usize);
    for _ in 0..samples {
        let t = sample_overlap_sq(config.d(), &mut rng);
        let overlap = Overlap::from_s(t.sqrt().min(1.0))?;
        values.push(evaluator.evaluate(priors, &overlap)?.total);
    }
    let mean = values.iter().sum::<f64>() / samples as f64;
    let std_err = if samples > 1 {
        let variance = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>()
            / (samples as f64 - 1.0);
        (variance / samples as f64).sqrt()
    } else {
        0.0
    };
    Ok(MonteCarloEstimate { mean, std_err, samples })
}
