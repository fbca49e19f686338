//! Exact integer and rational helpers shared by the audits.
//!
//! Everything here is float-free. Roots of rationals are bracketed by
//! integer bisection so that `floor`/`ceil` are exact.

use num::bigint::BigUint;
use num::rational::BigRational;
use num::{BigInt, One, Signed, ToPrimitive, Zero};

/// `C(n, k)` as an exact big integer (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` for small arguments where the result is known to fit.
pub fn binomial_u64(n: u64, k: u64) -> u64 {
    binomial(n, k).to_u64().expect("binomial coefficient exceeds u64")
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn pow_u(base: u64, exp: u64) -> BigUint {
    num::pow(BigUint::from(base), exp as usize)
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn rational_from_uint(value: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(value.clone()))
}

pub fn rational_pow(base: &BigRational, exp: u32) -> BigRational {
    num::pow(base.clone(), exp as usize)
}

/// Smallest integer `m >= 0` with `m^t >= value`.
pub fn root_ceil(value: &BigRational, t: u32) -> BigUint {
    assert!(t >= 1, "root index must be positive");
    if !value.is_positive() {
        return BigUint::zero();
    }
    let (mut lo, mut hi) = (BigUint::zero(), upper_bracket(value));
    // invariant: lo^t < value <= hi^t
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1u32;
        if pow_cmp_ge(&mid, t, value) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Largest integer `m >= 0` with `m^t <= value`.
pub fn root_floor(value: &BigRational, t: u32) -> BigUint {
    assert!(t >= 1, "root index must be positive");
    if !value.is_positive() {
        return BigUint::zero();
    }
    let (mut lo, mut hi) = (BigUint::zero(), upper_bracket(value) + 1u32);
    // invariant: lo^t <= value < hi^t
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1u32;
        if pow_cmp_le(&mid, t, value) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Ceiling of a non-negative rational.
pub fn ceil_to_uint(value: &BigRational) -> BigUint {
    if !value.is_positive() {
        return BigUint::zero();
    }
    value.ceil().to_integer().to_biguint().expect("positive ceiling")
}

pub fn floor_to_uint(value: &BigRational) -> BigUint {
    if !value.is_positive() {
        return BigUint::zero();
    }
    value.floor().to_integer().to_biguint().expect("positive floor")
}

// ceil(value) is always >= value^(1/t) once value >= 1, and 1 works below that.
fn upper_bracket(value: &BigRational) -> BigUint {
    ceil_to_uint(value).max(BigUint::one())
}

fn pow_cmp_ge(m: &BigUint, t: u32, value: &BigRational) -> bool {
    let lhs = BigInt::from(num::pow(m.clone(), t as usize)) * value.denom();
    &lhs >= value.numer()
}

fn pow_cmp_le(m: &BigUint, t: u32, value: &BigRational) -> bool {
    let lhs = BigInt::from(num::pow(m.clone(), t as usize)) * value.denom();
    &lhs <= value.numer()
}

/// Iterator over all `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations { n, current: if k <= n { Some((0..k).collect()) } else { None } }
}

pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Serde adapter writing big integers as decimal strings.
pub mod decimal {
    use num::bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// Serde adapter writing exact rationals as `p/q` strings.
pub mod fraction {
    use num::rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&format_args!("{}/{}", value.numer(), value.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}
