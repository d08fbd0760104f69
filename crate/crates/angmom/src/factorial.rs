use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `n!` as an exact big integer, memoized.
///
/// The table only ever grows; readers share a lock and the table is safe
/// to use from multiple threads.
pub fn factorial(n: u64) -> BigInt {
    let n = n as usize;
    {
        let table = FACTORIALS.read().unwrap();
        if let Some(value) = table.get(n) {
            return value.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let next = table.last().unwrap() * (table.len() as u64);
        table.push(next);
    }
    table[n].clone()
}

/// Binomial coefficient `C(n, k)`, exactly; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = k as u64;
    factorial(n) / (factorial(k) * factorial(n - k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn factorial_20_against_repeated_multiplication() {
        // Independent oracle: plain left-to-right product.
        let mut expected = BigInt::one();
        for i in 1..=20u64 {
            expected *= i;
        }
        assert_eq!(expected, BigInt::from(2_432_902_008_176_640_000u64));
        assert_eq!(factorial(20), expected);
    }

    #[test]
    fn factorial_is_thread_safe() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || factorial(50 + i * 13)))
            .collect();
        for handle in handles {
            let value = handle.join().unwrap();
            assert!(value > BigInt::zero());
        }
        assert_eq!(factorial(141), factorial(140) * 141u64);
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(9, 0), BigInt::from(1));
        assert_eq!(binomial(7, 9), BigInt::zero());
        assert_eq!(binomial(7, -1), BigInt::zero());
    }

    proptest! {
        #[test]
        fn pascal_rule(n in 1u64..80, k in 0i64..80) {
            let lhs = binomial(n, k);
            let rhs = binomial(n - 1, k - 1) + binomial(n - 1, k);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn binomial_symmetry(n in 0u64..80, k in 0i64..80) {
            prop_assert_eq!(binomial(n, k), binomial(n, n as i64 - k));
        }
    }
}
