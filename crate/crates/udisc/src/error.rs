#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum UdiscError {
    #[error(transparent)]
    Angmom(#[from] angmom::AngmomError),
    #[error("every register needs at least one copy, got ({n_a}, {n_b}, {n_c})")]
    EmptyRegister { n_a: u32, n_b: u32, n_c: u32 },
    #[error("Hilbert space dimension must be at least 2, got {d}")]
    BadDimension { d: u32 },
    #[error("priors must be probabilities summing to one, got ({eta1}, {eta2})")]
    BadPriors { eta1: f64, eta2: f64 },
    #[error("degenerate prior eta1 = {eta1}: the optimal parameters are undefined")]
    DegeneratePriors { eta1: f64 },
    #[error("{name} = {value} outside [{lo}, {hi}]")]
    OutOfRange { name: &'static str, value: f64, lo: f64, hi: f64 },
    #[error("product space dimension {dim} exceeds the oracle cap {cap} (set UDISC_MAX_DIM to raise it)")]
    ResourceCap { dim: u128, cap: u128 },
    #[error("the oracle only supports qubit registers (d = 2), got d = {d}")]
    UnsupportedDimension { d: u32 },
    #[error("block k = {k} is degenerate: 1 - O_k^2 = {gap:.3e}")]
    DegenerateBlock { k: u32, gap: f64 },
    #[error("ill-conditioned system: {detail}")]
    IllConditioned { detail: String },
    #[error("internal consistency failure: {detail}")]
    InternalConsistency { detail: String },
    #[error("{0}")]
    InvalidArgument(String),
}
