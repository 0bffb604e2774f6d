//! The single frozen map from raw automaton values to unknot-normalized invariants.
//!
//! The raw value `Π [2j+1] <singlet|U|singlet>` of a link whose caps all carry
//! color `j` is divided by `[2j+1]` and multiplied by `q^{WRITHE_EXPONENT · w}`.
//! For color 1/2 the result is the Jones polynomial at `t = q`, read on the
//! branch `t^{1/4} = -i q^{1/4}` (see [`crate::oracle::eval_at_root_kauffman`]).

use num_complex::Complex64;

use crate::qtensor::{QContext, Spin};

/// Power of `q` per unit of writhe.
pub const WRITHE_EXPONENT: f64 = 0.0;

/// Constant factor applied to raw values of color `color`.
pub fn calibration_constant(color: Spin, ctx: &QContext) -> f64 {
    1.0 / ctx.q_int(color.twice() + 1)
}

pub fn calibrate(raw: Complex64, color: Spin, writhe: i64, ctx: &QContext) -> Complex64 {
    raw * calibration_constant(color, ctx) * ctx.q_pow(WRITHE_EXPONENT * writhe as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_maps_to_one() {
        for k in 3..20 {
            let ctx = QContext::new(k).unwrap();
            for t in 0..=ctx.level() {
                let j = Spin::from_twice(t);
                let raw = Complex64::new(ctx.q_dim(j).unwrap(), 0.0);
                assert!((calibrate(raw, j, 0, &ctx) - 1.0).norm() < 1e-12);
            }
        }
    }
}
