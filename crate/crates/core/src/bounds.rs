//! Lower-bound bookkeeping: the instance's edge gain against the earlier
//! published bounds, and the limiting ratio.

use num_integer::Roots;
use serde::Serialize;

use crate::params::{Mode, Params};

/// Coefficient of the published upper bound `n + 1.98 sqrt(n) (1 + o(1))`.
pub const BOROS_UPPER_COEFFICIENT: f64 = 1.98;

/// The limiting ratio `sqrt(2 + 2/5)` the construction approaches.
pub fn limit_constant() -> f64 {
    (2.0f64 + 2.0 / 5.0).sqrt()
}

/// `n + floor((sqrt(8n - 23) + 1) / 2)`, with an integer square root so no
/// floating-point floor error can creep in.
pub fn shi_bound(n: u128) -> u128 {
    assert!(n >= 3, "shi bound is stated for n >= 3");
    n + (8 * n - 23).sqrt().div_ceil(2)
}

/// Side-by-side numbers for one instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundReport {
    pub t: u64,
    pub n: u128,
    /// `n + 36t` (strict) or `n + 36t - 2` (simple).
    pub lower_bound: u128,
    /// `(lower_bound - n) / sqrt(n)`.
    pub ratio: f64,
    pub shi_bound: u128,
    pub boros_upper_coefficient: f64,
    pub limit_constant: f64,
}

pub fn bound_report(params: &Params) -> BoundReport {
    let gain: u128 = match params.mode {
        Mode::Strict => 36 * params.t as u128,
        Mode::Simple => 36 * params.t as u128 - 2,
    };
    let lower_bound = params.n + gain;
    let ratio = gain as f64 / (params.n as f64).sqrt();
    BoundReport {
        t: params.t,
        n: params.n,
        lower_bound,
        ratio,
        shi_bound: shi_bound(params.n),
        boros_upper_coefficient: BOROS_UPPER_COEFFICIENT,
        limit_constant: limit_constant(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{validate_params, ParamInput};

    #[test]
    fn shi_bound_examples() {
        // 8*12-23 = 73, isqrt = 8, (8+1)/2 = 4
        assert_eq!(shi_bound(12), 16);
        assert_eq!(shi_bound(3), 4);
        assert_eq!(shi_bound(5), 7);
        // perfect square case: 8*4-23 = 9
        assert_eq!(shi_bound(4), 6);
    }

    #[test]
    fn ratio_at_r1() {
        let p = validate_params(ParamInput::R(1), None, Mode::Strict, false).unwrap();
        let rep = bound_report(&p);
        let expected = 51444.0 / (1_228_323_094.0f64).sqrt();
        assert!((rep.ratio - expected).abs() / expected < 1e-12);
        assert!((rep.ratio - 1.4678).abs() < 1e-4);
        assert_eq!(rep.lower_bound, 1_228_323_094 + 51444);
    }

    #[test]
    fn limit_constant_value() {
        assert!((limit_constant() - 1.549_193_338_482_966_8).abs() < 1e-15);
    }

    #[test]
    fn simple_mode_gain() {
        let p = validate_params(ParamInput::R(1), None, Mode::Simple, false).unwrap();
        let rep = bound_report(&p);
        assert_eq!(rep.lower_bound, 1_228_323_094 + 51442);
    }
}
