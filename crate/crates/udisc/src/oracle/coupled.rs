//! Coupled angular-momentum bases of the two register groupings and the
//! Jordan pairing between them.

use angmom::{clebsch_gordan, HalfInt};
use num_complex::Complex64;

use super::dense::DenseKet;
use super::states::{dicke_state, product_dim};
use crate::discriminator::{CopyConfig, Side};
use crate::{Result, UdiscError};

/// One coupled basis vector `|J M>` embedded in the full qubit product
/// space, built by coupling the symmetric subspaces of the two register
/// groups of its scheme.
#[derive(Clone, Debug)]
pub struct CoupledBasisVector {
    pub total_j: HalfInt,
    pub total_m: HalfInt,
    pub scheme: Side,
    pub embedding: DenseKet,
}

/// Coupled basis of the given scheme, ordered by block index `k`
/// ascending, then `M` descending within each block.
///
/// Side 1 couples the symmetric subspace on (A u B) with the one on C;
/// side 2 couples A with (B u C). Total spin is `J = N/2 - k` with
/// `k = 0..=min` over the two group sizes. Qubit registers only.
pub fn coupled_basis(config: &CopyConfig, scheme: Side) -> Result<Vec<CoupledBasisVector>> {
    Ok(blocks_for_side(config, scheme)?.into_iter().flatten().collect())
}

fn blocks_for_side(config: &CopyConfig, scheme: Side) -> Result<Vec<Vec<CoupledBasisVector>>> {
    if config.d() != 2 {
        return Err(UdiscError::UnsupportedDimension { d: config.d() });
    }
    product_dim(config)?;
    let (n_left, n_right) = match scheme {
        Side::Side1 => (config.n1(), config.n_c()),
        Side::Side2 => (config.n_a(), config.n2()),
    };
    let j_left = HalfInt::from_twice(n_left as i32);
    let j_right = HalfInt::from_twice(n_right as i32);
    let dickes_left: Vec<DenseKet> = (0..=n_left).map(|r| dicke_state(n_left, r)).collect();
    let dickes_right: Vec<DenseKet> = (0..=n_right).map(|r| dicke_state(n_right, r)).collect();

    let total = config.total() as i32;
    let mut blocks = Vec::new();
    for k in 0..=n_left.min(n_right) {
        let t_j = total - 2 * k as i32;
        let total_j = HalfInt::from_twice(t_j);
        let mut vectors = Vec::with_capacity(t_j as usize + 1);
        let mut t_m = t_j;
        while t_m >= -t_j {
            let total_m = HalfInt::from_twice(t_m);
            let mut embedding = DenseKet::zeros(1usize << config.total());
            let mut t_m_left = -(n_left as i32);
            while t_m_left <= n_left as i32 {
                let t_m_right = t_m - t_m_left;
                if t_m_right.abs() <= n_right as i32 {
                    let cg = clebsch_gordan(
                        j_left,
                        HalfInt::from_twice(t_m_left),
                        j_right,
                        HalfInt::from_twice(t_m_right),
                        total_j,
                        total_m,
                    )?
                    .to_f64();
                    if cg != 0.0 {
                        let r_left = ((n_left as i32 - t_m_left) / 2) as usize;
                        let r_right = ((n_right as i32 - t_m_right) / 2) as usize;
                        let pair = dickes_left[r_left].tensor(&dickes_right[r_right]);
                        embedding.add_scaled(Complex64::new(cg, 0.0), &pair);
                    }
                }
                t_m_left += 2;
            }
            vectors.push(CoupledBasisVector { total_j, total_m, scheme, embedding });
            t_m -= 2;
        }
        blocks.push(vectors);
    }
    Ok(blocks)
}

/// The Jordan pairing of the two schemes: both coupled bases, grouped by
/// block, plus the common inner product of each paired block.
pub struct JordanStructure {
    pub config: CopyConfig,
    /// Blocks `k = 0..=n_C` of side 1, `M` descending within each.
    pub side1: Vec<Vec<CoupledBasisVector>>,
    /// Blocks `k = 0..=min(n_A, n_2)` of side 2.
    pub side2: Vec<Vec<CoupledBasisVector>>,
    /// `<side1 kM | side2 kM>` for `k = 0..=n_C`, verified M-independent.
    pub pair_overlaps: Vec<Complex64>,
}

impl JordanStructure {
    pub fn build(config: &CopyConfig) -> Result<Self> {
        let side1 = blocks_for_side(config, Side::Side1)?;
        let side2 = blocks_for_side(config, Side::Side2)?;
        let mut pair_overlaps = Vec::with_capacity(side1.len());
        for (k, block1) in side1.iter().enumerate() {
            let block2 = &side2[k];
            let per_m: Vec<Complex64> = block1
                .iter()
                .zip(block2)
                .map(|(v1, v2)| v1.embedding.inner(&v2.embedding))
                .collect();
            let mean = per_m.iter().sum::<Complex64>() / per_m.len() as f64;
            let spread = per_m.iter().map(|g| (g - mean).norm()).fold(0.0, f64::max);
            if spread > 1e-10 {
                return Err(UdiscError::InternalConsistency {
                    detail: format!(
                        "Jordan overlap varies with M in block k = {k}: spread {spread:.3e}"
                    ),
                });
            }
            pair_overlaps.push(mean);
        }
        Ok(JordanStructure { config: *config, side1, side2, pair_overlaps })
    }

    /// Worst M-dependence of the paired overlaps, for reporting.
    pub fn overlap_spread(&self) -> f64 {
        let mut worst = 0.0f64;
        for (block1, (block2, &mean)) in
            self.side1.iter().zip(self.side2.iter().zip(&self.pair_overlaps))
        {
            for (v1, v2) in block1.iter().zip(block2) {
                worst = worst.max((v1.embedding.inner(&v2.embedding) - mean).norm());
            }
        }
        worst
    }
}

/// Moduli of the Jordan overlaps `O_k`, `k = 1..=n_C`, computed directly
/// from the explicit bases. This is the brute-force counterpart of the
/// 6j recoupling route.
pub fn gram_overlaps(config: &CopyConfig) -> Result<Vec<f64>> {
    let structure = JordanStructure::build(config)?;
    Ok(structure.pair_overlaps[1..].iter().map(|g| g.norm()).collect())
}

/// Applies the collective `J^2 = (sum_i S_i)^2` to a qubit product-space
/// vector, via `J^2 = 3N/4 - N(N-1)/4 + sum_{i<j} SWAP_ij`.
pub fn apply_total_spin_squared(ket: &DenseKet, qubits: u32) -> DenseKet {
    let n = qubits as usize;
    let dim = ket.dim();
    let diagonal = 0.75 * n as f64 - (n * (n - 1)) as f64 / 4.0;
    let mut out = DenseKet::zeros(dim);
    out.add_scaled(Complex64::new(diagonal, 0.0), ket);
    for i in 0..n {
        for j in (i + 1)..n {
            for index in 0..dim {
                let amp = ket.amplitude(index);
                if amp != Complex64::ZERO {
                    let bit_i = (index >> i) & 1;
                    let bit_j = (index >> j) & 1;
                    let swapped = if bit_i == bit_j {
                        index
                    } else {
                        index ^ (1 << i) ^ (1 << j)
                    };
                    out.set(swapped, out.amplitude(swapped) + amp);
                }
            }
        }
    }
    out
}
