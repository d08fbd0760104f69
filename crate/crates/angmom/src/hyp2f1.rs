use crate::AngmomError;

/// Terminating Gauss hypergeometric series
/// `2F1(a, b; 1; z) = sum_{j=0}^{|b|} (a)_j (b)_j / (j!)^2 z^j` for `b <= 0`.
///
/// Evaluated left to right with compensated summation; the third parameter
/// is fixed to 1, matching the only form the success-probability closed
/// forms require.
pub fn gauss_2f1_terminating(a: i64, b: i64, z: f64) -> Result<f64, AngmomError> {
    if b > 0 {
        return Err(AngmomError::NonTerminatingSeries { b });
    }
    let order = (-b) as u64;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut compensation = 0.0f64;
    for j in 0..order {
        let ratio = ((a + j as i64) * (b + j as i64)) as f64 / ((j + 1) * (j + 1)) as f64;
        term *= ratio * z;
        // Kahan update
        let y = term - compensation;
        let t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_series_is_one() {
        assert_eq!(gauss_2f1_terminating(7, 0, 123.0).unwrap(), 1.0);
    }

    #[test]
    fn zero_argument_is_one() {
        assert_eq!(gauss_2f1_terminating(3, -5, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn linear_case_by_hand() {
        // b = -1 terminates after two terms: 1 + a*b*z = 1 + 2*(-1)*(-3) = 7
        assert_eq!(gauss_2f1_terminating(2, -1, -3.0).unwrap(), 7.0);
    }

    #[test]
    fn positive_b_is_rejected() {
        assert!(gauss_2f1_terminating(2, 1, 0.5).is_err());
    }

    /// For a = u-k+1 >= 1, b = k-v <= 0, z = -r <= 0 every series term is
    /// positive and the sum equals
    /// `sum_j C(u-k+j, j) C(v-k, j) r^j`; the two evaluations must agree
    /// to near machine precision.
    #[test]
    fn matches_all_positive_reformulation() {
        use crate::binomial;
        use num_traits::ToPrimitive;
        for u in 0i64..=10 {
            for v in 0i64..=10 {
                for k in 0..=u.min(v) {
                    for &r in &[0.0f64, 0.3, 1.0, 4.7] {
                        let direct = gauss_2f1_terminating(u - k + 1, k - v, -r).unwrap();
                        let mut positive = 0.0;
                        let mut power = 1.0;
                        for j in 0..=(v - k) {
                            let coeff = binomial((u - k + j) as u64, j)
                                * binomial((v - k) as u64, j);
                            positive += coeff.to_f64().unwrap() * power;
                            power *= r;
                        }
                        assert!(
                            (direct - positive).abs() <= 1e-13 * positive.abs().max(1.0),
                            "u={u} v={v} k={k} r={r}: {direct} vs {positive}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn quadratic_case_against_expansion() {
        // 2F1(a, -2; 1; z) = 1 + a*(-2)*z + a(a+1)*(-2)(-1)/4 * z^2
        for &(a, z) in &[(3i64, 0.7), (5, -1.3), (1, 2.0)] {
            let expected = 1.0 - 2.0 * a as f64 * z
                + (a * (a + 1)) as f64 / 2.0 * z * z;
            let got = gauss_2f1_terminating(a, -2, z).unwrap();
            assert!((got - expected).abs() < 1e-12 * expected.abs().max(1.0));
        }
    }
}
