//! The optimal measurement, assembled explicitly from the Jordan pairs.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::coupled::JordanStructure;
use super::dense::{DenseKet, DenseOperator};
use crate::discriminator::{BlockData, CopyConfig, Priors};
use crate::{Result, UdiscError};

/// The three measurement operators plus the projector onto the combined
/// support `H = H_1 u H_2` they act on.
pub struct Povm {
    pub pi1: DenseOperator,
    pub pi2: DenseOperator,
    pub pi0: DenseOperator,
    pub span_projector: DenseOperator,
}

impl Povm {
    /// Assembles the measurement from a prepared Jordan structure and the
    /// per-block failure parameters (`blocks[i].k == i + 1`).
    ///
    /// Within each paired block the conclusive elements project on the
    /// vectors orthogonal to the other hypothesis' basis vector; the
    /// relative phase is fixed so the cross inner product is real
    /// positive. Blocks beyond `n_C` belong only to hypothesis 2 and are
    /// claimed whole.
    pub fn build(structure: &JordanStructure, blocks: &[BlockData]) -> Result<Self> {
        let config = &structure.config;
        let dim = 1usize << config.total();
        let mut pi1 = DenseOperator::zeros(dim);
        let mut pi2 = DenseOperator::zeros(dim);
        let mut span = DenseOperator::zeros(dim);

        for vector in &structure.side1[0] {
            span.add_projector(&vector.embedding, 1.0);
        }
        for block in blocks {
            let k = block.k as usize;
            for (v1, v2) in structure.side1[k].iter().zip(&structure.side2[k]) {
                // the pair's own inner product, so any basis phase works
                let g = v1.embedding.inner(&v2.embedding);
                let gap = 1.0 - g.norm_sqr();
                if gap < 1e-12 {
                    return Err(UdiscError::DegenerateBlock { k: block.k, gap });
                }
                let scale = Complex64::new(1.0 / gap.sqrt(), 0.0);
                // orthogonal to the side-2 vector: (v1 - <v2|v1> v2) / sqrt(gap)
                let mut perp2 = v1.embedding.clone();
                perp2.add_scaled(-g.conj(), &v2.embedding);
                perp2.scale(scale);
                pi1.add_projector(&perp2, (1.0 - block.q1) / gap);
                // orthogonal to the side-1 vector: (v2 - <v1|v2> v1) / sqrt(gap)
                let mut perp1 = v2.embedding.clone();
                perp1.add_scaled(-g, &v1.embedding);
                perp1.scale(scale);
                pi2.add_projector(&perp1, (1.0 - block.q2) / gap);
                // the 2D block span: v1 together with its orthogonal complement
                span.add_projector(&v1.embedding, 1.0);
                span.add_projector(&perp1, 1.0);
            }
        }
        // identity on H_2-perp: blocks only hypothesis 2 can reach
        for block2 in structure.side2.iter().skip(structure.side1.len()) {
            for vector in block2 {
                pi2.add_projector(&vector.embedding, 1.0);
                span.add_projector(&vector.embedding, 1.0);
            }
        }
        let mut pi0 = span.clone();
        pi0.sub_assign(&pi1);
        pi0.sub_assign(&pi2);
        Ok(Povm { pi1, pi2, pi0, span_projector: span })
    }
}

/// Convenience wrapper building the Jordan structure on the fly.
pub fn build_povm(config: &CopyConfig, blocks: &[BlockData]) -> Result<Povm> {
    Povm::build(&JordanStructure::build(config)?, blocks)
}

/// Direct success probability
/// `eta1 <Phi1|Pi1|Phi1> + eta2 <Phi2|Pi2|Phi2>` on explicit states.
pub fn psp_direct(povm: &Povm, state1: &DenseKet, state2: &DenseKet, priors: &Priors) -> f64 {
    priors.eta1() * povm.pi1.expectation(state1).re
        + priors.eta2() * povm.pi2.expectation(state2).re
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BornCounts {
    pub outcome1: u64,
    pub outcome2: u64,
    pub inconclusive: u64,
}

/// Samples measurement outcomes with Born-rule probabilities,
/// deterministically per seed.
pub fn born_sample(povm: &Povm, state: &DenseKet, shots: u64, seed: u64) -> Result<BornCounts> {
    let p1 = povm.pi1.expectation(state).re.max(0.0);
    let p2 = povm.pi2.expectation(state).re.max(0.0);
    let p0 = povm.pi0.expectation(state).re.max(0.0);
    if (p1 + p2 + p0 - 1.0).abs() > 1e-9 {
        return Err(UdiscError::InternalConsistency {
            detail: format!("outcome probabilities sum to {}", p1 + p2 + p0),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = BornCounts { outcome1: 0, outcome2: 0, inconclusive: 0 };
    for _ in 0..shots {
        let u: f64 = rng.random();
        if u < p1 {
            counts.outcome1 += 1;
        } else if u < p1 + p2 {
            counts.outcome2 += 1;
        } else {
            counts.inconclusive += 1;
        }
    }
    Ok(counts)
}

/// Grid search over the per-block failure parameters against the averaged
/// states (normalized projectors onto the two supports).
#[derive(Clone, Debug)]
pub struct QScanResult {
    /// argmax of the averaged success per block, `k = 1..=n_C`.
    pub best_q1: Vec<f64>,
    /// grid spacing per block, the resolution of the argmax.
    pub grid_step: Vec<f64>,
    /// averaged success probability at the argmax.
    pub best_asp: f64,
}

/// Scans `q1 in [O_k^2, 1]` per block and maximizes
/// `eta1 Tr(rho1 Pi1) + eta2 Tr(rho2 Pi2)` with `rho_i` the normalized
/// projectors onto the two supports, everything evaluated from the
/// explicit vectors. The argmax is the ground truth for the three-regime
/// optimal parameters.
pub fn asp_q_scan(config: &CopyConfig, priors: &Priors, grid_steps: u32) -> Result<QScanResult> {
    priors.require_nondegenerate()?;
    if grid_steps == 0 {
        return Err(UdiscError::InvalidArgument("need at least one grid step".into()));
    }
    let structure = JordanStructure::build(config)?;
    let dim = 1usize << config.total();
    let dim_h1: usize = structure.side1.iter().map(Vec::len).sum();
    let dim_h2: usize = structure.side2.iter().map(Vec::len).sum();

    let mut support1 = DenseOperator::zeros(dim);
    for block in &structure.side1 {
        for vector in block {
            support1.add_projector(&vector.embedding, 1.0);
        }
    }
    let mut support2 = DenseOperator::zeros(dim);
    for block in &structure.side2 {
        for vector in block {
            support2.add_projector(&vector.embedding, 1.0);
        }
    }

    // per-block trace constants of the two conclusive elements
    let n_c = config.n_c() as usize;
    let mut weight1 = vec![0.0; n_c];
    let mut weight2 = vec![0.0; n_c];
    for k in 1..=n_c {
        let g = structure.pair_overlaps[k];
        let gap = 1.0 - g.norm_sqr();
        if gap < 1e-12 {
            return Err(UdiscError::DegenerateBlock { k: k as u32, gap });
        }
        let scale = Complex64::new(1.0 / gap.sqrt(), 0.0);
        for (v1, v2) in structure.side1[k].iter().zip(&structure.side2[k]) {
            let mut perp2 = v1.embedding.clone();
            perp2.add_scaled(-g.conj(), &v2.embedding);
            perp2.scale(scale);
            weight1[k - 1] += support1.expectation(&perp2).re / (gap * dim_h1 as f64);
            let mut perp1 = v2.embedding.clone();
            perp1.add_scaled(-g, &v1.embedding);
            perp1.scale(scale);
            weight2[k - 1] += support2.expectation(&perp1).re / (gap * dim_h2 as f64);
        }
    }
    // hypothesis-2-only blocks contribute independently of q
    let mut base = 0.0;
    for block2 in structure.side2.iter().skip(structure.side1.len()) {
        for vector in block2 {
            base += support2.expectation(&vector.embedding).re / dim_h2 as f64;
        }
    }

    let mut best_q1 = Vec::with_capacity(n_c);
    let mut grid_step = Vec::with_capacity(n_c);
    let mut best_asp = priors.eta2() * base;
    for k in 1..=n_c {
        let o_sq = structure.pair_overlaps[k].norm_sqr();
        let step = (1.0 - o_sq) / grid_steps as f64;
        let mut best_value = f64::NEG_INFINITY;
        let mut best_point = o_sq;
        for i in 0..=grid_steps {
            let q1 = o_sq + step * i as f64;
            let q2 = if q1 > 0.0 { o_sq / q1 } else { 0.0 };
            let value = priors.eta1() * (1.0 - q1) * weight1[k - 1]
                + priors.eta2() * (1.0 - q2) * weight2[k - 1];
            if value > best_value {
                best_value = value;
                best_point = q1;
            }
        }
        best_q1.push(best_point);
        grid_step.push(step);
        best_asp += best_value;
    }
    Ok(QScanResult { best_q1, grid_step, best_asp })
}
