use num_bigint::BigInt;
use num_traits::One;

use crate::{binomial, AngmomError};

/// Two-row Young diagram `[row1, row2]` with `row1 >= row2 >= 0`.
///
/// Two rows are all the copy-count decompositions need: every block is
/// labeled by a diagram of the form `[N-k, k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct YoungTwoRow {
    row1: u64,
    row2: u64,
}

impl YoungTwoRow {
    pub fn new(row1: u64, row2: u64) -> Result<Self, AngmomError> {
        if row1 < row2 {
            return Err(AngmomError::InvalidDiagram { row1, row2 });
        }
        Ok(YoungTwoRow { row1, row2 })
    }

    pub fn row1(&self) -> u64 {
        self.row1
    }

    pub fn row2(&self) -> u64 {
        self.row2
    }

    pub fn cells(&self) -> u64 {
        self.row1 + self.row2
    }
}

impl std::fmt::Display for YoungTwoRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.row1, self.row2)
    }
}

/// Dimension of the U(d) irrep labeled by a two-row diagram, via the
/// hook-content product `prod_cells (d + col - row) / hook(cell)`.
pub fn weyl_dim(diagram: &YoungTwoRow, d: u32) -> Result<BigInt, AngmomError> {
    if d == 0 || (diagram.row2 > 0 && d < 2) {
        return Err(AngmomError::DimensionTooSmall {
            d,
            rows: if diagram.row2 > 0 { 2 } else { 1 },
        });
    }
    let (r1, r2) = (diagram.row1 as i64, diagram.row2 as i64);
    let mut numerator = BigInt::one();
    let mut denominator = BigInt::one();
    for col in 1..=r1 {
        numerator *= d as i64 + col - 1;
        let hook = r1 - col + if col <= r2 { 1 } else { 0 } + 1;
        denominator *= hook;
    }
    for col in 1..=r2 {
        numerator *= d as i64 + col - 2;
        denominator *= r2 - col + 1;
    }
    let (quotient, remainder) = num_integer::Integer::div_rem(&numerator, &denominator);
    debug_assert!(remainder == BigInt::from(0), "hook-content is an exact integer");
    Ok(quotient)
}

/// Dimension of the n-copy symmetric subspace of a d-level system,
/// `C(n + d - 1, d - 1)`.
pub fn sym_dim(n: u64, d: u32) -> BigInt {
    binomial(n + d as u64 - 1, d as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetric_qubit_singlet() {
        let diagram = YoungTwoRow::new(1, 1).unwrap();
        assert_eq!(weyl_dim(&diagram, 2).unwrap(), BigInt::from(1));
    }

    #[test]
    fn adjoint_of_su3() {
        let diagram = YoungTwoRow::new(2, 1).unwrap();
        assert_eq!(weyl_dim(&diagram, 3).unwrap(), BigInt::from(8));
    }

    #[test]
    fn single_row_qubit_multiplet() {
        for n in 0..=20u64 {
            let diagram = YoungTwoRow::new(n, 0).unwrap();
            assert_eq!(weyl_dim(&diagram, 2).unwrap(), BigInt::from(n + 1));
        }
    }

    #[test]
    fn invalid_inputs() {
        assert!(YoungTwoRow::new(1, 2).is_err());
        let two_rows = YoungTwoRow::new(3, 1).unwrap();
        assert!(weyl_dim(&two_rows, 1).is_err());
        assert!(weyl_dim(&YoungTwoRow::new(3, 0).unwrap(), 0).is_err());
    }

    /// Independent enumerator: count semistandard Young tableaux directly.
    /// Rows weakly increase, columns strictly increase, entries in 1..=d.
    fn count_ssyt(r1: u64, r2: u64, d: u32) -> u64 {
        fn fill_row(len: u64, d: u32, min_per_col: &[u32]) -> Vec<Vec<u32>> {
            // all weakly increasing rows with row[i] >= min_per_col[i]
            let mut rows = vec![];
            let mut current = vec![0u32; len as usize];
            fn rec(
                idx: usize,
                len: usize,
                d: u32,
                min_per_col: &[u32],
                current: &mut Vec<u32>,
                out: &mut Vec<Vec<u32>>,
            ) {
                if idx == len {
                    out.push(current.clone());
                    return;
                }
                let lower = min_per_col[idx].max(if idx > 0 { current[idx - 1] } else { 1 });
                for value in lower..=d {
                    current[idx] = value;
                    rec(idx + 1, len, d, min_per_col, current, out);
                }
            }
            rec(0, len as usize, d, min_per_col, &mut current, &mut rows);
            rows
        }
        let first_rows = fill_row(r1, d, &vec![1; r1 as usize]);
        let mut count = 0;
        for first in &first_rows {
            let min_second: Vec<u32> = first.iter().take(r2 as usize).map(|&v| v + 1).collect();
            count += fill_row(r2, d, &min_second).len() as u64;
        }
        count
    }

    #[test]
    fn hook_content_matches_tableau_enumeration() {
        for r1 in 0..=6u64 {
            for r2 in 0..=r1.min(4) {
                for d in 2..=4u32 {
                    let diagram = YoungTwoRow::new(r1, r2).unwrap();
                    assert_eq!(
                        weyl_dim(&diagram, d).unwrap(),
                        BigInt::from(count_ssyt(r1, r2, d)),
                        "[{r1},{r2}] d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn sym_dim_small_cases() {
        assert_eq!(sym_dim(1, 5), BigInt::from(5));
        assert_eq!(sym_dim(2, 2), BigInt::from(3));
        assert_eq!(sym_dim(3, 3), BigInt::from(10));
    }

    /// Stars-and-bars oracle: multisets of size n from d symbols.
    #[test]
    fn sym_dim_matches_multiset_enumeration() {
        fn count_multisets(n: u64, d: u32) -> u64 {
            if n == 0 {
                return 1;
            }
            // recursion over the count of the first symbol
            (0..=n).map(|take| if d == 1 { u64::from(take == n) } else { count_multisets(n - take, d - 1) }).sum()
        }
        for n in 0..=6 {
            for d in 1..=4 {
                assert_eq!(sym_dim(n, d), BigInt::from(count_multisets(n, d)), "n={n} d={d}");
            }
        }
    }
}
