//! Per-block quantities: Jordan overlaps, optimal failure parameters, and
//! the two independent evaluations of the block expectation values.

use angmom::{
    clebsch_gordan, ratio_to_f64, sym_dim, weyl_dim, wigner_6j, wigner_d_stretched_sq,
    BigRational, HalfInt, SqrtRational, YoungTwoRow,
};
use num_bigint::BigInt;

use super::config::{CopyConfig, Priors};
use crate::Result;

/// Which grouping of the registers a quantity belongs to: side 1 couples
/// (A u B) with C, side 2 couples A with (B u C).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Side1,
    Side2,
}

impl Side {
    pub fn index(&self) -> u8 {
        match self {
            Side::Side1 => 1,
            Side::Side2 => 2,
        }
    }
}

/// Branch of the optimal failure parameter, per block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Q1Saturated,
    Interior,
    Q2Saturated,
}

/// Everything the success probability needs per Young diagram `[N-k, k]`.
#[derive(Clone, Debug)]
pub struct BlockData {
    pub k: u32,
    pub diagram: YoungTwoRow,
    /// U(d) dimension of the block (the multiplicity range of the POVM sums).
    pub dim_block: BigInt,
    /// Jordan overlap `O_k` between the paired bases of the two sides.
    pub overlap_o: f64,
    pub q1: f64,
    pub q2: f64,
    pub regime: Regime,
}

/// Jordan overlap `O_k` as an exact signed square root:
/// `sqrt((n1+1)(n2+1)) * {n_A/2 n_B/2 n1/2; n_C/2 N/2-k n2/2}`, taken in
/// absolute value. The recoupling between the two groupings of the three
/// registers is exactly this 6j symbol.
pub fn jordan_overlap_exact(config: &CopyConfig, k: u32) -> Result<SqrtRational> {
    let ja = HalfInt::from_twice(config.n_a() as i32);
    let jb = HalfInt::from_twice(config.n_b() as i32);
    let jc = HalfInt::from_twice(config.n_c() as i32);
    let j1 = HalfInt::from_twice(config.n1() as i32);
    let j2 = HalfInt::from_twice(config.n2() as i32);
    let jtot = HalfInt::from_twice((config.total() - 2 * k) as i32);
    let sixj = wigner_6j(ja, jb, j1, jc, jtot, j2)?;
    let weight = BigRational::from_integer(BigInt::from(
        (config.n1() as u64 + 1) * (config.n2() as u64 + 1),
    ));
    Ok((SqrtRational::sqrt_of(weight) * sixj).abs())
}

/// Jordan overlaps `O_k` for `k = 1..=n_C`.
pub fn jordan_overlaps(config: &CopyConfig) -> Result<Vec<f64>> {
    (1..=config.n_c())
        .map(|k| Ok(jordan_overlap_exact(config, k)?.to_f64()))
        .collect()
}

/// Support dimensions of the two averaged input states,
/// `w1 = dim(H_1) = sym(n1, d) * sym(n_C, d)` and
/// `w2 = dim(H_2) = sym(n_A, d) * sym(n_2, d)`.
///
/// These are the effective prior weights entering the optimal failure
/// parameters; they coincide exactly when `n_A = n_C`, which is what makes
/// the success probability dimension-independent in that case.
pub fn dim_weights(config: &CopyConfig) -> (BigInt, BigInt) {
    let d = config.d();
    let w1 = sym_dim(config.n1() as u64, d) * sym_dim(config.n_c() as u64, d);
    let w2 = sym_dim(config.n_a() as u64, d) * sym_dim(config.n2() as u64, d);
    (w1, w2)
}

/// Three-regime optimal failure parameters per block (`k = 1..=n_C`):
/// `q1 = 1` below the lower prior boundary, `q1 = sqrt(eta2 w1 / (eta1 w2)) O_k`
/// between the boundaries, `q1 = O_k^2` above the upper one, and always
/// `q2 = O_k^2 / q1`.
pub fn optimal_q(config: &CopyConfig, priors: &Priors) -> Result<Vec<BlockData>> {
    priors.require_nondegenerate()?;
    let overlaps = jordan_overlaps(config)?;
    let (w1, w2) = dim_weights(config);
    let weight_ratio = ratio_to_f64(&BigRational::new(w1, w2));
    let total = config.total() as u64;
    overlaps
        .iter()
        .enumerate()
        .map(|(i, &overlap_o)| {
            let k = i as u32 + 1;
            let diagram = YoungTwoRow::new(total - k as u64, k as u64)?;
            let dim_block = weyl_dim(&diagram, config.d())?;
            let (q1, q2, regime) = q_parameters(overlap_o, weight_ratio, priors);
            Ok(BlockData { k, diagram, dim_block, overlap_o, q1, q2, regime })
        })
        .collect()
}

/// The regime selection for a single block. `weight_ratio = w1 / w2`.
pub(crate) fn q_parameters(overlap_o: f64, weight_ratio: f64, priors: &Priors) -> (f64, f64, Regime) {
    let o_sq = overlap_o * overlap_o;
    let lower = weight_ratio * o_sq / (1.0 + weight_ratio * o_sq);
    let upper = weight_ratio / (weight_ratio + o_sq);
    let (q1, regime) = if priors.eta1() < lower {
        (1.0, Regime::Q1Saturated)
    } else if priors.eta1() > upper {
        (o_sq, Regime::Q2Saturated)
    } else {
        let interior = (priors.eta2() / priors.eta1() * weight_ratio).sqrt() * overlap_o;
        (interior.clamp(o_sq, 1.0), Regime::Interior)
    };
    let q2 = if q1 > 0.0 { o_sq / q1 } else { 0.0 };
    (q1, q2, regime)
}

/// Exact coefficients of the stable polynomial form of the block
/// expectation: with `t = cos^2(beta/2)`,
/// `E(u, v, k) = sum_j coeff_j t^j (1-t)^(v-j)` for `j = 0..=v-k`, where
/// `coeff_j = (N-2k+1) u! v! / (k! (N-k+1)!) C(u-k+j, j) C(v-k, j)`.
///
/// Computed in exact rationals and converted once.
pub(crate) fn block_coefficients(u: u32, v: u32, k: u32) -> Vec<f64> {
    use angmom::{binomial, factorial};
    if k > u.min(v) {
        return Vec::new();
    }
    let (u, v, k) = (u as u64, v as u64, k as u64);
    let n = u + v;
    let prefactor = BigRational::new(
        BigInt::from(n - 2 * k + 1) * factorial(u) * factorial(v),
        factorial(k) * factorial(n - k + 1),
    );
    (0..=(v - k))
        .map(|j| {
            let coeff = binomial(u - k + j, j as i64) * binomial(v - k, j as i64);
            ratio_to_f64(&(&prefactor * BigRational::from_integer(coeff)))
        })
        .collect()
}

/// Expectation of the block projector `[u+v-k, k]` on `u` copies of one
/// state joined with `v` copies of the other, via the stable all-positive
/// polynomial in `t = cos^2(beta/2)`.
///
/// Exactly zero for `k > min(u, v)`, where no such block exists.
pub fn block_expectation(u: u32, v: u32, k: u32, beta: f64) -> f64 {
    block_expectation_at(&block_coefficients(u, v, k), v, (beta / 2.0).cos().powi(2))
}

/// Polynomial evaluation at a given `t = cos^2(beta/2)`; coefficients from
/// [`block_coefficients`].
pub(crate) fn block_expectation_at(coeffs: &[f64], v: u32, t: f64) -> f64 {
    let one_minus_t = 1.0 - t;
    let mut sum = 0.0;
    let mut compensation = 0.0;
    for (j, &coeff) in coeffs.iter().enumerate() {
        let term = coeff * t.powi(j as i32) * one_minus_t.powi((v - j as u32) as i32);
        let y = term - compensation;
        let total = sum + y;
        compensation = (total - sum) - y;
        sum = total;
    }
    sum
}

/// The same expectation through the coupling route: a sum of squared
/// stretched Wigner-d moduli weighted by squared Clebsch-Gordan
/// coefficients. Kept as an independent cross-check of the closed form.
pub fn block_expectation_lemma(u: u32, v: u32, k: u32, beta: f64) -> Result<f64> {
    if k > u.min(v) {
        return Ok(0.0);
    }
    let ju = HalfInt::from_twice(u as i32);
    let jv = HalfInt::from_twice(v as i32);
    let jtot = HalfInt::from_twice((u + v - 2 * k) as i32);
    let mut sum = 0.0;
    let mut tl = -(v as i32);
    while tl <= v as i32 {
        let l = HalfInt::from_twice(tl);
        let m = ju + l;
        if m.abs() <= jtot {
            let weight = wigner_d_stretched_sq(jv, l, beta)?;
            let cg = clebsch_gordan(ju, ju, jv, l, jtot, m)?;
            sum += weight * ratio_to_f64(&cg.squared());
        }
        tl += 2;
    }
    Ok(sum)
}
