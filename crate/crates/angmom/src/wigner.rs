//! Clebsch-Gordan coefficients and Wigner 6j symbols via Racah's
//! single-sum formulas, evaluated over exact big-integer rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{factorial, AngmomError, BigRational, HalfInt, SqrtRational};

/// Triangle rule `|a - b| <= c <= a + b` with an integer perimeter.
pub fn triangle_ok(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    (a + b + c).is_integer()
        && !(a + b - c).is_negative()
        && !(a - b + c).is_negative()
        && !(-a + b + c).is_negative()
}

fn fact(x: HalfInt) -> BigInt {
    factorial(x.factorial_arg())
}

/// `(a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!`, the triangle coefficient.
fn delta_sq(a: HalfInt, b: HalfInt, c: HalfInt) -> BigRational {
    let num = fact(a + b - c) * fact(a - b + c) * fact(-a + b + c);
    let den = fact(a + b + c + HalfInt::from_int(1));
    BigRational::new(num, den)
}

fn validate_spin_projection(j: HalfInt, m: HalfInt) -> Result<(), AngmomError> {
    if j.is_negative() {
        return Err(AngmomError::NegativeSpin { j });
    }
    if !j.admits_projection(m) {
        return Err(AngmomError::InvalidProjection { j, m });
    }
    Ok(())
}

/// Clebsch-Gordan coefficient `<j1 m1; j2 m2 | J M>` in the
/// Condon-Shortley convention, as an exact signed square root.
///
/// Selection-rule failures (`M != m1 + m2`, triangle violations) return
/// exact zero; malformed spin/projection pairs are domain errors.
pub fn clebsch_gordan(
    j1: HalfInt,
    m1: HalfInt,
    j2: HalfInt,
    m2: HalfInt,
    big_j: HalfInt,
    big_m: HalfInt,
) -> Result<SqrtRational, AngmomError> {
    validate_spin_projection(j1, m1)?;
    validate_spin_projection(j2, m2)?;
    validate_spin_projection(big_j, big_m)?;

    if m1 + m2 != big_m || !triangle_ok(j1, j2, big_j) {
        return Ok(SqrtRational::zero());
    }

    let radicand = delta_sq(j1, j2, big_j)
        * BigRational::from_integer(BigInt::from(big_j.multiplicity()))
        * BigRational::from_integer(
            fact(big_j + big_m)
                * fact(big_j - big_m)
                * fact(j1 - m1)
                * fact(j1 + m1)
                * fact(j2 - m2)
                * fact(j2 + m2),
        );

    // Racah sum over t; all factorial arguments are integers once the
    // selection rules above have passed.
    let t_min = 0i32
        .max((j2 - big_j - m1).twice() / 2)
        .max((j1 + m2 - big_j).twice() / 2);
    let t_max = ((j1 + j2 - big_j).twice() / 2)
        .min((j1 - m1).twice() / 2)
        .min((j2 + m2).twice() / 2);

    let mut sum = BigRational::zero();
    for t in t_min..=t_max {
        let th = HalfInt::from_int(t);
        let denom = fact(th)
            * fact(j1 + j2 - big_j - th)
            * fact(j1 - m1 - th)
            * fact(j2 + m2 - th)
            * fact(big_j - j2 + m1 + th)
            * fact(big_j - j1 - m2 + th);
        let term = BigRational::new(BigInt::one(), denom);
        if t % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }

    Ok(SqrtRational::scale_sqrt(sum, radicand))
}

/// Wigner 6j symbol `{j1 j2 j3; j4 j5 j6}` via the Racah single-sum
/// formula, as an exact signed square root.
///
/// Any triad violating the triangle rule yields exact zero.
pub fn wigner_6j(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j4: HalfInt,
    j5: HalfInt,
    j6: HalfInt,
) -> Result<SqrtRational, AngmomError> {
    for j in [j1, j2, j3, j4, j5, j6] {
        if j.is_negative() {
            return Err(AngmomError::NegativeSpin { j });
        }
    }
    let triads = [(j1, j2, j3), (j1, j5, j6), (j4, j2, j6), (j4, j5, j3)];
    if triads.iter().any(|&(a, b, c)| !triangle_ok(a, b, c)) {
        return Ok(SqrtRational::zero());
    }

    let radicand: BigRational = triads
        .iter()
        .map(|&(a, b, c)| delta_sq(a, b, c))
        .product();

    let a = [
        (j1 + j2 + j3).twice() / 2,
        (j1 + j5 + j6).twice() / 2,
        (j4 + j2 + j6).twice() / 2,
        (j4 + j5 + j3).twice() / 2,
    ];
    let b = [
        (j1 + j2 + j4 + j5).twice() / 2,
        (j2 + j3 + j5 + j6).twice() / 2,
        (j3 + j1 + j6 + j4).twice() / 2,
    ];
    let t_min = *a.iter().max().unwrap();
    let t_max = *b.iter().min().unwrap();

    let mut sum = BigRational::zero();
    for t in t_min..=t_max {
        let num = factorial(t as u64 + 1);
        let mut den = BigInt::one();
        for ai in a {
            den *= factorial((t - ai) as u64);
        }
        for bi in b {
            den *= factorial((bi - t) as u64);
        }
        let term = BigRational::new(num, den);
        if t % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }

    Ok(SqrtRational::scale_sqrt(sum, radicand))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn stretched_cg_is_one() {
        let cg = clebsch_gordan(h(1), h(1), h(1), h(1), h(2), h(2)).unwrap();
        assert_eq!(cg, SqrtRational::from_int(1));
    }

    #[test]
    fn selection_rule_zero_is_exact() {
        let cg = clebsch_gordan(h(1), h(1), h(1), h(-1), h(2), h(2)).unwrap();
        assert_eq!(cg.sign(), 0);
        assert!(cg.is_zero());
    }

    #[test]
    fn two_spin_half_triplet_component() {
        // <1/2 1/2; 1/2 -1/2 | 1 0> = +sqrt(1/2)
        let cg = clebsch_gordan(h(1), h(1), h(1), h(-1), h(2), h(0)).unwrap();
        assert_eq!(cg, SqrtRational::sqrt_of(ratio(1, 2)));
        // Condon-Shortley: <1/2 -1/2; 1/2 1/2 | 0 0> = -sqrt(1/2)
        let cg = clebsch_gordan(h(1), h(-1), h(1), h(1), h(0), h(0)).unwrap();
        assert_eq!(cg, -SqrtRational::sqrt_of(ratio(1, 2)));
    }

    #[test]
    fn malformed_inputs_are_domain_errors() {
        assert!(clebsch_gordan(h(-1), h(1), h(1), h(1), h(2), h(2)).is_err());
        // projection parity mismatch: j = 1, m = 1/2
        assert!(clebsch_gordan(h(2), h(1), h(1), h(1), h(3), h(2)).is_err());
        // |m| > j
        assert!(clebsch_gordan(h(1), h(3), h(1), h(1), h(2), h(2)).is_err());
        assert!(wigner_6j(h(1), h(1), h(1), h(1), h(1), h(-2)).is_err());
    }

    #[test]
    fn cg_unitarity_exact() {
        // For fixed (m1, m2), sum over J of CG^2 is exactly 1.
        for tj1 in 0i32..=6 {
            for tj2 in 0..=6 {
                for tm1 in (-tj1..=tj1).step_by(2) {
                    for tm2 in (-tj2..=tj2).step_by(2) {
                        let mut total = BigRational::zero();
                        let tm = tm1 + tm2;
                        let mut tj = (tj1 - tj2).abs();
                        while tj <= tj1 + tj2 {
                            if tm.abs() <= tj {
                                let cg = clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm))
                                    .unwrap();
                                total += cg.squared();
                            }
                            tj += 2;
                        }
                        assert_eq!(total, BigRational::one(), "j1=2*{tj1} j2=2*{tj2}");
                    }
                }
            }
        }
    }

    #[test]
    fn cg_matches_lowering_recursion() {
        // Applying J- to |J M> relates three coefficients:
        // sqrt((J+M)(J-M+1)) <m1 m2|J M-1>
        //   = sqrt((j1-m1)(j1+m1+1)) <m1+1 m2|J M>
        //   + sqrt((j2-m2)(j2+m2+1)) <m1 m2+1|J M>
        // Seeded at the stretched state, this determines every value;
        // checked here as an exact identity.
        let lower = |tj: i32, tm: i32| ratio((((tj + tm) / 2) * ((tj - tm) / 2 + 1)) as i64, 1);
        for tj1 in 0i32..=4 {
            for tj2 in 0..=4 {
                let mut tj = (tj1 - tj2).abs();
                while tj <= tj1 + tj2 {
                    for tm in (-tj + 2..=tj).step_by(2) {
                        for tm1 in (-tj1..=tj1).step_by(2) {
                            let tm2 = tm - tm1;
                            if tm2.abs() > tj2 {
                                continue;
                            }
                            let lhs = SqrtRational::sqrt_of(lower(tj, tm))
                                * clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm - 2))
                                    .unwrap();
                            let up1 = if tm1 + 2 <= tj1 {
                                SqrtRational::sqrt_of(lower(tj1, tm1 + 2))
                                    * clebsch_gordan(h(tj1), h(tm1 + 2), h(tj2), h(tm2), h(tj), h(tm))
                                        .unwrap()
                            } else {
                                SqrtRational::zero()
                            };
                            let up2 = if tm2 + 2 <= tj2 {
                                SqrtRational::sqrt_of(lower(tj2, tm2 + 2))
                                    * clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2 + 2), h(tj), h(tm))
                                        .unwrap()
                            } else {
                                SqrtRational::zero()
                            };
                            let rhs = up1.checked_add(&up2).expect("compatible radicands");
                            assert_eq!(lhs, rhs, "tj1={tj1} tj2={tj2} tj={tj} tm={tm} tm1={tm1}");
                        }
                    }
                    tj += 2;
                }
            }
        }
    }

    #[test]
    fn sixj_half_half_one() {
        let v = wigner_6j(h(1), h(1), h(2), h(1), h(1), h(2)).unwrap();
        assert_eq!(v, SqrtRational::from_ratio(ratio(1, 6)));
    }

    #[test]
    fn sixj_triangle_violation_zero() {
        let v = wigner_6j(h(1), h(1), h(6), h(1), h(1), h(2)).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn sixj_known_values() {
        assert_eq!(
            wigner_6j(h(2), h(2), h(2), h(2), h(2), h(2)).unwrap(),
            SqrtRational::from_ratio(ratio(1, 6))
        );
        assert_eq!(
            wigner_6j(h(1), h(2), h(1), h(1), h(0), h(1)).unwrap(),
            SqrtRational::from_ratio(ratio(1, 2))
        );
    }

    /// Recoupling oracle: couple three spins explicitly in the product
    /// space and compare <(j1,(j2 j3)j23) J M | ((j1 j2)j12, j3) J M>
    /// against (-1)^(j1+j2+j3+J) sqrt((2j12+1)(2j23+1)) {j1 j2 j12; j3 J j23}.
    #[test]
    fn sixj_matches_explicit_recoupling_of_three_spin_halves() {
        let half = h(1);
        let dim = 8usize; // (C^2)^{x3}
        // basis index: bit 0 = spin 1 (MSB convention unimportant, fixed here)
        let amp = |m: i32, bit: usize, idx: usize| -> f64 {
            let down = (idx >> bit) & 1;
            let expect_down = if m < 0 { 1 } else { 0 };
            if down == expect_down {
                1.0
            } else {
                0.0
            }
        };
        // |((j1 j2) j12, j3) J M> amplitudes in the product basis
        let coupled_12 = |tj12: i32, tj: i32, tm: i32| -> Vec<f64> {
            let mut v = vec![0.0; dim];
            for tm12 in (-tj12..=tj12).step_by(2) {
                let tm3 = tm - tm12;
                if tm3.abs() > 1 {
                    continue;
                }
                let outer = clebsch_gordan(h(tj12), h(tm12), half, h(tm3), h(tj), h(tm))
                    .unwrap()
                    .to_f64();
                for tm1 in [-1, 1] {
                    let tm2 = tm12 - tm1;
                    if tm2.abs() > 1 {
                        continue;
                    }
                    let inner = clebsch_gordan(half, h(tm1), half, h(tm2), h(tj12), h(tm12))
                        .unwrap()
                        .to_f64();
                    for (idx, slot) in v.iter_mut().enumerate() {
                        *slot += outer
                            * inner
                            * amp(tm1, 2, idx)
                            * amp(tm2, 1, idx)
                            * amp(tm3, 0, idx);
                    }
                }
            }
            v
        };
        let coupled_23 = |tj23: i32, tj: i32, tm: i32| -> Vec<f64> {
            let mut v = vec![0.0; dim];
            for tm23 in (-tj23..=tj23).step_by(2) {
                let tm1 = tm - tm23;
                if tm1.abs() > 1 {
                    continue;
                }
                let outer = clebsch_gordan(half, h(tm1), h(tj23), h(tm23), h(tj), h(tm))
                    .unwrap()
                    .to_f64();
                for tm2 in [-1, 1] {
                    let tm3 = tm23 - tm2;
                    if tm3.abs() > 1 {
                        continue;
                    }
                    let inner = clebsch_gordan(half, h(tm2), half, h(tm3), h(tj23), h(tm23))
                        .unwrap()
                        .to_f64();
                    for (idx, slot) in v.iter_mut().enumerate() {
                        *slot += outer
                            * inner
                            * amp(tm1, 2, idx)
                            * amp(tm2, 1, idx)
                            * amp(tm3, 0, idx);
                    }
                }
            }
            v
        };
        for tj12 in [0, 2] {
            for tj23 in [0, 2] {
                for tj in [1, 3] {
                    if !triangle_ok(h(tj12), half, h(tj)) || !triangle_ok(half, h(tj23), h(tj)) {
                        continue;
                    }
                    let tm = tj.min(1);
                    let a = coupled_12(tj12, tj, tm);
                    let b = coupled_23(tj23, tj, tm);
                    let overlap: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
                    let phase = if ((3 + tj) / 2) % 2 == 0 { 1.0 } else { -1.0 };
                    let weight = (((tj12 + 1) * (tj23 + 1)) as f64).sqrt();
                    let sixj = wigner_6j(half, half, h(tj12), half, h(tj), h(tj23))
                        .unwrap()
                        .to_f64();
                    assert!(
                        (overlap - phase * weight * sixj).abs() < 1e-12,
                        "tj12={tj12} tj23={tj23} tj={tj}: {overlap} vs {}",
                        phase * weight * sixj
                    );
                }
            }
        }
    }

    #[test]
    fn sixj_orthogonality_exact() {
        // sum_x (2x+1) {j1 j2 x; j3 j4 j5} {j1 j2 x; j3 j4 j6}
        //   = delta(j5, j6) / (2 j5 + 1), exactly.
        for tj1 in 0i32..=6 {
            for tj2 in 0..=6 {
                for tj3 in 0..=6 {
                    for tj4 in 0..=6 {
                        for tj5 in 0..=6 {
                            for tj6 in 0..=6 {
                                if !triangle_ok(h(tj1), h(tj4), h(tj5))
                                    || !triangle_ok(h(tj3), h(tj2), h(tj5))
                                    || !triangle_ok(h(tj1), h(tj4), h(tj6))
                                    || !triangle_ok(h(tj3), h(tj2), h(tj6))
                                {
                                    continue;
                                }
                                let mut total = SqrtRational::zero();
                                let mut tx = (tj1 - tj2).abs();
                                while tx <= tj1 + tj2 {
                                    let a = wigner_6j(h(tj1), h(tj2), h(tx), h(tj3), h(tj4), h(tj5))
                                        .unwrap();
                                    let b = wigner_6j(h(tj1), h(tj2), h(tx), h(tj3), h(tj4), h(tj6))
                                        .unwrap();
                                    let term = SqrtRational::from_int((tx + 1) as i64) * a * b;
                                    total = total
                                        .checked_add(&term)
                                        .expect("orthogonality terms share a radicand class");
                                    tx += 2;
                                }
                                let expected = if tj5 == tj6 {
                                    SqrtRational::from_ratio(ratio(1, (tj5 + 1) as i64))
                                } else {
                                    SqrtRational::zero()
                                };
                                assert_eq!(
                                    total, expected,
                                    "tj: {tj1} {tj2} {tj3} {tj4} {tj5} {tj6}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
