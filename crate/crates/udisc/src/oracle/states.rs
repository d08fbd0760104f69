//! Input-state construction in the full product space.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::dense::DenseKet;
use crate::discriminator::CopyConfig;
use crate::{Result, UdiscError};

/// Which total input state to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    /// Data register carries copies of the first state.
    State1,
    /// Data register carries copies of the second state.
    State2,
}

/// Dimension cap for dense oracle runs; `UDISC_MAX_DIM` overrides the
/// default of 16384 (qubits up to N = 14).
pub fn max_dim() -> u128 {
    std::env::var("UDISC_MAX_DIM")
        .ok()
        .and_then(|raw| raw.parse().ok())
        .unwrap_or(16_384)
}

pub(crate) fn check_dim(dim: u128) -> Result<usize> {
    let cap = max_dim();
    if dim > cap {
        return Err(UdiscError::ResourceCap { dim, cap });
    }
    Ok(dim as usize)
}

pub(crate) fn product_dim(config: &CopyConfig) -> Result<usize> {
    let dim = (config.d() as u128)
        .checked_pow(config.total())
        .ok_or(UdiscError::ResourceCap { dim: u128::MAX, cap: max_dim() })?;
    check_dim(dim)
}

/// The qubit pair of the Euler parametrization: `phi1 = |0>` and
/// `phi2 = e^{-i(alpha+gamma)/2} cos(beta/2) |0> + e^{i(alpha-gamma)/2} sin(beta/2) |1>`,
/// so `|<phi1|phi2>| = cos(beta/2)`.
pub fn euler_pair(beta: f64, alpha: f64, gamma: f64) -> (DenseKet, DenseKet) {
    let phi1 = DenseKet::from_amplitudes(vec![Complex64::new(1.0, 0.0), Complex64::ZERO]);
    let half = beta / 2.0;
    let phi2 = DenseKet::from_amplitudes(vec![
        Complex64::from_polar(half.cos(), -(alpha + gamma) / 2.0),
        Complex64::from_polar(half.sin(), (alpha - gamma) / 2.0),
    ]);
    (phi1, phi2)
}

/// Total input state per the register layout A (x) B (x) C: program
/// register A holds `phi1`, C holds `phi2`, and the data register B holds
/// whichever state `which` selects.
pub fn build_input_state(
    phi1: &DenseKet,
    phi2: &DenseKet,
    config: &CopyConfig,
    which: InputKind,
) -> Result<DenseKet> {
    if phi1.dim() != config.d() as usize || phi2.dim() != config.d() as usize {
        return Err(UdiscError::InvalidArgument(format!(
            "single-copy states must have dimension d = {}, got {} and {}",
            config.d(),
            phi1.dim(),
            phi2.dim()
        )));
    }
    product_dim(config)?;
    let data = match which {
        InputKind::State1 => phi1,
        InputKind::State2 => phi2,
    };
    let mut state = repeated_tensor(phi1, config.n_a());
    for _ in 0..config.n_b() {
        state = state.tensor(data);
    }
    for _ in 0..config.n_c() {
        state = state.tensor(phi2);
    }
    Ok(state)
}

fn repeated_tensor(single: &DenseKet, copies: u32) -> DenseKet {
    let mut state = single.clone();
    for _ in 1..copies {
        state = state.tensor(single);
    }
    state
}

/// Symmetric `n`-qubit state with a fixed number of excitations
/// (`|1>` entries), amplitude `1/sqrt(C(n, r))` on each matching bitstring.
pub(crate) fn dicke_state(n: u32, excitations: u32) -> DenseKet {
    let dim = 1usize << n;
    let weight = angmom::binomial(n as u64, excitations as i64)
        .to_f64()
        .expect("binomial fits f64");
    let amplitude = Complex64::new(1.0 / weight.sqrt(), 0.0);
    let mut ket = DenseKet::zeros(dim);
    for index in 0..dim {
        if (index as u64).count_ones() == excitations {
            ket.set(index, amplitude);
        }
    }
    ket
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn euler_pair_overlap_modulus() {
        for &beta in &[0.0, 0.7, FRAC_PI_2, 2.9, PI] {
            for &(alpha, gamma) in &[(0.0, 0.0), (1.3, 5.1), (4.0, 2.2)] {
                let (phi1, phi2) = euler_pair(beta, alpha, gamma);
                let overlap = phi1.inner(&phi2).norm();
                assert!((overlap - (beta / 2.0).cos()).abs() < 1e-15);
                assert!((phi2.norm() - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn input_state_inner_product_rule() {
        // <Phi1|Phi2> = <phi1|phi2>^{n_B}: A and C slots coincide.
        let config = CopyConfig::new(2, 2, 1, 2).unwrap();
        let (phi1, phi2) = euler_pair(1.1, 0.4, 2.0);
        let state1 = build_input_state(&phi1, &phi2, &config, InputKind::State1).unwrap();
        let state2 = build_input_state(&phi1, &phi2, &config, InputKind::State2).unwrap();
        let expected = phi1.inner(&phi2).powu(config.n_b());
        let got = state1.inner(&state2);
        assert!((got - expected).norm() < 1e-14);
        assert!((state1.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn identical_inputs_coincide() {
        let config = CopyConfig::new(1, 1, 1, 2).unwrap();
        let (phi1, _) = euler_pair(0.0, 0.0, 0.0);
        let state1 = build_input_state(&phi1, &phi1, &config, InputKind::State1).unwrap();
        let state2 = build_input_state(&phi1, &phi1, &config, InputKind::State2).unwrap();
        assert!((state1.inner(&state2).norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn orthogonal_inputs_give_orthogonal_totals() {
        let config = CopyConfig::new(1, 1, 1, 2).unwrap();
        let (phi1, phi2) = euler_pair(PI, 0.3, 0.9);
        let state1 = build_input_state(&phi1, &phi2, &config, InputKind::State1).unwrap();
        let state2 = build_input_state(&phi1, &phi2, &config, InputKind::State2).unwrap();
        assert!(state1.inner(&state2).norm() < 1e-15);
    }

    #[test]
    fn cap_is_enforced() {
        let config = CopyConfig::new(8, 8, 8, 2).unwrap();
        let (phi1, phi2) = euler_pair(1.0, 0.0, 0.0);
        assert!(matches!(
            build_input_state(&phi1, &phi2, &config, InputKind::State1),
            Err(UdiscError::ResourceCap { .. })
        ));
    }

    #[test]
    fn dicke_states_are_orthonormal() {
        for n in 1..=5u32 {
            for r in 0..=n {
                let a = dicke_state(n, r);
                assert!((a.norm() - 1.0).abs() < 1e-14);
                for r2 in (r + 1)..=n {
                    let b = dicke_state(n, r2);
                    assert!(a.inner(&b).norm() < 1e-15);
                }
            }
        }
    }
}
