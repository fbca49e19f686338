//! Exact evaluators for the closed-form bounds and parameter choices of the
//! letter method.
//!
//! Nothing here uses floating point. A `t`-th root of a rational is bracketed
//! by integer bisection and rounded in the direction that keeps the bound
//! valid: `k` and all upper bounds round up, `r` rounds down.
//!
//! # The explicit constant for `K_{H,t}`
//!
//! Write `P = n^{d(1-1/t)} ex^{1/t}`, `A = ex^{1/t} n^{d+1-d/t} = P n` and
//! `x = (t/8)(n^d / ex)^{1/t}`, where `ex = ex_d(n, H) >= 1`. With `c = 8`,
//! `k = ceil(16 P)` and `r = floor(x)`.
//!
//! * If `x >= 1` the counting argument gives `f_{d+1}(n, k, K_{H,t}) < r <= x`,
//!   so the lettering inequality `ex_{d+1} <= k (f + n)` yields
//!   `ex_{d+1} <= (16 P + 1)(x + n) = 2 t n^d + 16 A + x + n`.
//!   Since `x <= (t/8) n^d` and `n <= n^d <= (t/2) n^d`, this is at most
//!   `16 A + (2 + 1/8 + 1/2) t n^d <= 16 (A + t n^d)`.
//! * If `x < 1` then `ex > (t/8)^t n^d`, hence `A > (t/8) n^{d+1}` and
//!   `ex_{d+1} <= n^{d+1} < (8/t) A <= 4 A`.
//!
//! Either way `ex_{d+1}(n, K_{H,t}) <= 16 (ex^{1/t} n^{d+1-d/t} + t n^d)`, so
//! [`KHT_CONSTANT`] is 16.
//!
//! For `K_{H,t,s,r}` no constant is derived; [`KHTSR_EMPIRICAL_CONSTANT`] is
//! the value that the exact searches on the small grid are checked against.

use num::bigint::BigUint;
use num::rational::BigRational;
use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, ceil_to_uint, factorial, pow_u, ratio, rational_from_uint, root_ceil, root_floor};

/// Constant `C` in `ex_{d+1}(n, K_{H,t}) <= C (ex^{1/t} n^{d+1-d/t} + t n^d)`.
pub const KHT_CONSTANT: u64 = 16;

/// Constant used with [`theorem6_bound`]; chosen empirically, not derived.
pub const KHTSR_EMPIRICAL_CONSTANT: u64 = 2;

/// Numerator and denominator of the rational upper approximation of `e`.
pub const E_UPPER: (u64, u64) = (27_182_818_285, 10_000_000_000);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("ex value must be at least 1")]
    DegenerateEx,
    #[error("t must be at least 2, got {0}")]
    InvalidT(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// The constant replacing `e` in the parameter formulas.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ConstantMode {
    /// `c = 8`, which needs only `t! > (t/8)^t`
    #[default]
    Eight,
    /// `c = 2.7182818285`, slightly above `e`
    EUpper,
    Custom(BigRational),
}

impl ConstantMode {
    pub fn value(&self) -> BigRational {
        match self {
            ConstantMode::Eight => ratio(8, 1),
            ConstantMode::EUpper => ratio(E_UPPER.0, E_UPPER.1),
            ConstantMode::Custom(c) => c.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    pub n: u64,
    pub d: u32,
    pub t: u32,
    pub ex_value: u64,
    #[serde(with = "arith::fraction")]
    pub constant_c: BigRational,
    /// `ceil(2c n^{d(1-1/t)} ex^{1/t})`
    #[serde(with = "arith::decimal")]
    pub k: BigUint,
    /// `floor((t/c) (n^d / ex)^{1/t})`
    #[serde(with = "arith::decimal")]
    pub r: BigUint,
    /// `ceil(t (n^d / ex)^{1/t})`, the shape of the letter-count bound
    #[serde(with = "arith::decimal")]
    pub o_form: BigUint,
}

fn check_t(t: u32) -> Result<(), BoundsError> {
    if t < 2 {
        Err(BoundsError::InvalidT(t))
    } else {
        Ok(())
    }
}

fn int(value: &BigUint) -> BigRational {
    rational_from_uint(value)
}

/// `k` and `r` for the counting argument, computed exactly.
pub fn kst_parameters(n: u64, d: u32, t: u32, ex_value: u64, mode: &ConstantMode) -> Result<BoundParams, BoundsError> {
    check_t(t)?;
    if ex_value == 0 {
        return Err(BoundsError::DegenerateEx);
    }
    let c = mode.value();
    if c <= BigRational::zero() {
        return Err(BoundsError::InvalidParameter("constant must be positive".into()));
    }
    let nd = pow_u(n, d as u64);
    // k^t >= (2c)^t n^{d(t-1)} ex
    let k_power =
        arith::rational_pow(&(c.clone() * ratio(2, 1)), t) * int(&pow_u(n, (d * (t - 1)) as u64)) * ratio(ex_value, 1);
    let k = root_ceil(&k_power, t);
    // r^t <= (t/c)^t n^d / ex
    let r_power = arith::rational_pow(&(ratio(t, 1) / c.clone()), t) * int(&nd) / ratio(ex_value, 1);
    let r = root_floor(&r_power, t);
    let o_power = ratio(BigInt::from(t).pow(t), 1) * int(&nd) / ratio(ex_value, 1);
    let o_form = root_ceil(&o_power, t);
    Ok(BoundParams { n, d, t, ex_value, constant_c: c, k, r, o_form })
}

/// An upper-rounded bound with a flag for the asymptotic hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    #[serde(with = "arith::decimal")]
    pub value: BigUint,
    /// instance-level stand-in for the hypothesis, e.g. `ex < n^d`
    pub hypothesis_holds: bool,
}

/// `ceil(C (ex^{1/t} n^{d+1-d/t} + t n^d))`, the bound for `ex_{d+1}(n, K_{H,t})`.
///
/// The hypothesis flag is `ex < n^d`; at `ex = n^d` the bound has
/// `n^{d+1}` scale and says nothing.
pub fn theorem3_bound(
    n: u64,
    d: u32,
    t: u32,
    ex_value: u64,
    constant: &BigRational,
) -> Result<BoundValue, BoundsError> {
    check_t(t)?;
    // ex^{1/t} n^{d+1-d/t} = (ex n^{(d+1)t - d})^{1/t}
    let main = root_ceil(&int(&(BigUint::from(ex_value) * pow_u(n, ((d + 1) * t - d) as u64))), t);
    let nd = pow_u(n, d as u64);
    let total = int(&(main + BigUint::from(t) * &nd)) * constant;
    Ok(BoundValue { value: ceil_to_uint(&total), hypothesis_holds: BigUint::from(ex_value) < nd })
}

/// Both forms of the `K_{H,t,s,r}` bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KhtsrBound {
    /// `ceil(C ex n^{2-1/t})`
    #[serde(with = "arith::decimal")]
    pub general: BigUint,
    /// `ceil(C n^{d+1-1/t})`, the form for `ex = O(n^{d-1})`
    #[serde(with = "arith::decimal")]
    pub low_ex: BigUint,
}

pub fn theorem6_bound(
    n: u64,
    d: u32,
    t: u32,
    ex_value: u64,
    constant: &BigRational,
) -> Result<KhtsrBound, BoundsError> {
    check_t(t)?;
    // ex n^{2-1/t} = (ex^t n^{2t-1})^{1/t}
    let general_root = root_ceil(&int(&(pow_u(ex_value, t as u64) * pow_u(n, (2 * t - 1) as u64))), t);
    let low_root = root_ceil(&int(&pow_u(n, ((d + 1) * t - 1) as u64)), t);
    Ok(KhtsrBound {
        general: ceil_to_uint(&(int(&general_root) * constant)),
        low_ex: ceil_to_uint(&(int(&low_root) * constant)),
    })
}

/// Outcome of [`factorial_bound_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorialReport {
    pub t_max: u64,
    /// individual inequalities and identities checked
    pub checks: u64,
    pub passed: bool,
    pub first_failure: Option<FactorialFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorialFailure {
    pub t: u64,
    pub step: String,
}

/// Checks `8^t t! > t^t` for `2 <= t <= t_max` and, for the same `t`, every
/// inequality of the doubling argument that carries `t` to `2t` and `2t + 1`:
///
/// * `(2t)! > (t/4)^t 4^t (t/8)^t = (t/4)^{2t} 2^t > (t/4)^{2t}`
/// * `(2t+1)! > (t/4)^{2t} 2^t (2t+1) > (t/4)^{2t} (1 + 1/(2t))^{2t} (2t+1)/8`
///   `= ((2t+1)/8)^{2t+1}`
pub fn factorial_bound_check(t_max: u64) -> Result<FactorialReport, BoundsError> {
    if t_max < 2 {
        return Err(BoundsError::InvalidParameter("t_max must be at least 2".into()));
    }
    let mut checks = 0;
    let mut first_failure = None;
    let mut fact = factorial(1);
    for t in 2..=t_max {
        fact *= t;
        let steps = factorial_steps(t, &fact);
        checks += steps.len() as u64;
        if let Some((step, _)) = steps.iter().find(|(_, ok)| !ok) {
            first_failure = Some(FactorialFailure { t, step: (*step).to_string() });
            break;
        }
    }
    Ok(FactorialReport { t_max, checks, passed: first_failure.is_none(), first_failure })
}

// Each step cross-multiplied into integers.
fn factorial_steps(t: u64, fact_t: &BigUint) -> Vec<(&'static str, bool)> {
    let even_fact: BigUint = fact_t * (t + 1..=2 * t).fold(BigUint::one(), |acc, i| acc * i);
    let odd_fact = &even_fact * (2 * t + 1);
    let t_2t = pow_u(t, 2 * t);
    let odd_pow = pow_u(2 * t + 1, 2 * t + 1);
    let (p2, p8, p16) = (pow_u(2, t), pow_u(8, t), pow_u(16, t));
    vec![
        ("8^t t! > t^t", &p8 * fact_t > pow_u(t, t)),
        ("(2t)! > (t/4)^t 4^t (t/8)^t", &p8 * &even_fact > t_2t),
        ("(t/4)^t 4^t (t/8)^t = (t/4)^{2t} 2^t", &t_2t * &p16 == &t_2t * &p2 * &p8),
        ("(2t)! > (t/4)^{2t}", &p16 * &even_fact > t_2t),
        ("(2t+1)! > (t/4)^{2t} 2^t (2t+1)", &p8 * &odd_fact > &t_2t * (2 * t + 1)),
        (
            "(t/4)^{2t} 2^t (2t+1) > (t/4)^{2t} (1+1/(2t))^{2t} (2t+1)/8",
            &p2 * 8u32 * pow_u(2 * t, 2 * t) > pow_u(2 * t + 1, 2 * t),
        ),
        (
            "(t/4)^{2t} (1+1/(2t))^{2t} (2t+1)/8 = ((2t+1)/8)^{2t+1}",
            &t_2t * &odd_pow * pow_u(8, 2 * t + 1) == &odd_pow * &p16 * pow_u(2 * t, 2 * t) * 8u32,
        ),
        ("(2t+1)! > ((2t+1)/8)^{2t+1}", pow_u(8, 2 * t + 1) * &odd_fact > odd_pow),
    ]
}
