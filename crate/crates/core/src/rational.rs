//! Exact rational helpers shared by every module.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Arbitrary-precision rational; the only number type on solver paths.
pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `p/q` or an integer. Surrounding whitespace is not accepted.
pub fn parse_rational(s: &str) -> Option<Q> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid = |t: &str| {
        let digits = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Q::new(num, den))
}

/// Lowest-terms string: `p/q`, or `p` when the denominator is 1.
pub fn fmt_rational(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Rescales a matrix by a positive factor so every entry is an integer.
pub fn integral_scaling(rows: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let d = Q::from_integer(common_denominator(rows.iter().flatten()));
    rows.iter()
        .map(|r| r.iter().map(|x| x * &d).collect())
        .collect()
}

pub fn is_nonneg(x: &Q) -> bool {
    !x.is_negative()
}
