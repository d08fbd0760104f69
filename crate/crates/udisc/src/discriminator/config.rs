use std::f64::consts::PI;

use crate::{Result, UdiscError};

/// Register shape of the discriminator: program registers A and C with
/// `n_A` and `n_C` copies, data register B with `n_B` copies, all states
/// living in a `d`-dimensional Hilbert space.
///
/// The construction canonicalizes `n_A >= n_C` by swapping the program
/// registers and recording the swap; all formulas assume that ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CopyConfig {
    n_a: u32,
    n_b: u32,
    n_c: u32,
    d: u32,
    swapped: bool,
}

impl CopyConfig {
    pub fn new(n_a: u32, n_b: u32, n_c: u32, d: u32) -> Result<Self> {
        if n_a == 0 || n_b == 0 || n_c == 0 {
            return Err(UdiscError::EmptyRegister { n_a, n_b, n_c });
        }
        if d < 2 {
            return Err(UdiscError::BadDimension { d });
        }
        let swapped = n_a < n_c;
        let (n_a, n_c) = if swapped { (n_c, n_a) } else { (n_a, n_c) };
        Ok(CopyConfig { n_a, n_b, n_c, d, swapped })
    }

    pub fn n_a(&self) -> u32 {
        self.n_a
    }

    pub fn n_b(&self) -> u32 {
        self.n_b
    }

    pub fn n_c(&self) -> u32 {
        self.n_c
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// True when the constructor swapped A and C to restore `n_A >= n_C`.
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    /// `n_1 = n_A + n_B`, the copies spanned by the first grouping.
    pub fn n1(&self) -> u32 {
        self.n_a + self.n_b
    }

    /// `n_2 = n_B + n_C`, the copies spanned by the second grouping.
    pub fn n2(&self) -> u32 {
        self.n_b + self.n_c
    }

    /// Total copy count `N = n_A + n_B + n_C`.
    pub fn total(&self) -> u32 {
        self.n_a + self.n_b + self.n_c
    }

    /// Largest block index on the second side, `min(n_A, n_2)`.
    pub fn max_block(&self) -> u32 {
        self.n_a.min(self.n2())
    }

    pub fn with_dimension(&self, d: u32) -> Result<Self> {
        CopyConfig::new(self.n_a, self.n_b, self.n_c, d)
    }
}

impl std::fmt::Display for CopyConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}; d={})", self.n_a, self.n_b, self.n_c, self.d)
    }
}

/// A priori probabilities of the two hypotheses.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Priors {
    eta1: f64,
    eta2: f64,
}

impl Priors {
    pub fn new(eta1: f64, eta2: f64) -> Result<Self> {
        let in_range = (0.0..=1.0).contains(&eta1) && (0.0..=1.0).contains(&eta2);
        if !in_range || (eta1 + eta2 - 1.0).abs() > 1e-12 {
            return Err(UdiscError::BadPriors { eta1, eta2 });
        }
        Ok(Priors { eta1, eta2 })
    }

    pub fn from_eta1(eta1: f64) -> Result<Self> {
        Priors::new(eta1, 1.0 - eta1)
    }

    pub fn balanced() -> Self {
        Priors { eta1: 0.5, eta2: 0.5 }
    }

    pub fn eta1(&self) -> f64 {
        self.eta1
    }

    pub fn eta2(&self) -> f64 {
        self.eta2
    }

    /// The optimal parameters divide by `eta1` and `eta2`; reject the
    /// endpoints where the discrimination problem collapses.
    pub fn require_nondegenerate(&self) -> Result<()> {
        if self.eta1 <= 0.0 || self.eta1 >= 1.0 {
            return Err(UdiscError::DegeneratePriors { eta1: self.eta1 });
        }
        Ok(())
    }
}

/// Overlap of the two unknown states, carried both as the angle `beta`
/// and as `s = cos(beta/2) = |<phi1|phi2>|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Overlap {
    beta: f64,
    s: f64,
}

impl Overlap {
    pub fn from_beta(beta: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&beta) {
            return Err(UdiscError::OutOfRange { name: "beta", value: beta, lo: 0.0, hi: PI });
        }
        Ok(Overlap { beta, s: (beta / 2.0).cos() })
    }

    pub fn from_s(s: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&s) {
            return Err(UdiscError::OutOfRange { name: "s", value: s, lo: 0.0, hi: 1.0 });
        }
        Ok(Overlap { beta: 2.0 * s.acos(), s })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `|<phi1|phi2>|`.
    pub fn s(&self) -> f64 {
        self.s
    }

    /// `cos^2(beta/2) = s^2`.
    pub fn overlap_sq(&self) -> f64 {
        self.s * self.s
    }

    /// `sin^2(beta/2) = 1 - s^2`.
    pub fn sin_sq_half(&self) -> f64 {
        1.0 - self.s * self.s
    }
}
