//! Brute-force verifier: explicit construction of the input states,
//! coupled/Jordan bases and the optimal POVM in the full qubit product
//! space, with direct expectation values, grid optimality scans and
//! Born-rule sampling.

mod coupled;
mod dense;
mod povm;
mod states;
mod verify;

pub use coupled::{
    apply_total_spin_squared, coupled_basis, gram_overlaps, CoupledBasisVector, JordanStructure,
};
pub use dense::{DenseKet, DenseOperator};
pub use povm::{asp_q_scan, born_sample, build_povm, psp_direct, BornCounts, Povm, QScanResult};
pub use states::{build_input_state, euler_pair, max_dim, InputKind};
pub use verify::{verify_config, VerifyCheck, VerifyOptions, VerifyReport};
