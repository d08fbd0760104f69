use num_traits::ToPrimitive;

use crate::{binomial, AngmomError, HalfInt};

/// Squared modulus of the stretched Wigner d-function,
/// `|d^j_{l,j}(beta)|^2 = C(2j, j+l) cos^{2(j+l)}(beta/2) sin^{2(j-l)}(beta/2)`.
///
/// Only the squared modulus is exposed: the Euler phases of the full
/// D-function cancel in every expression built on top of this kernel.
pub fn wigner_d_stretched_sq(j: HalfInt, l: HalfInt, beta: f64) -> Result<f64, AngmomError> {
    if j.is_negative() {
        return Err(AngmomError::NegativeSpin { j });
    }
    if !j.admits_projection(l) {
        return Err(AngmomError::InvalidProjection { j, m: l });
    }
    let jp = (j + l).twice() / 2; // j + l
    let jm = (j - l).twice() / 2; // j - l
    let weight = binomial(j.twice() as u64, jp as i64)
        .to_f64()
        .expect("binomial fits in f64 for supported spins");
    let (sin_half, cos_half) = (beta / 2.0).sin_cos();
    Ok(weight * cos_half.powi(2 * jp) * sin_half.powi(2 * jm))
}
