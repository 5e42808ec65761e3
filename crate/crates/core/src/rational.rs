//! Exact rational scalars: aliases, parsing, formatting and integer
//! square-root bounds.
//!
//! Every number in this crate is either a [`BigInt`](num::BigInt) or a
//! [`BigRational`](num::BigRational) kept in lowest terms. Floating point is
//! never used; the few places that need square roots only ever need the floor
//! of a square root of a nonnegative rational, which is computed exactly.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Arbitrary-precision rational, always in lowest terms.
pub type Rat = BigRational;

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Parse a rational written as `"p"` or `"p/q"` (optionally signed).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int> {
        t.trim()
            .parse::<Int>()
            .map_err(|_| Error::input(format!("cannot parse integer `{t}`")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::input(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Format a rational in lowest terms: `"p"` when integral, else `"p/q"`.
pub fn format_rat(x: &Rat) -> String {
    // BigRational's Display already prints `p` or `p/q` with positive q.
    x.to_string()
}

/// Floor of the real square root of a nonnegative rational.
///
/// `m = floor_sqrt(p/q)` is the largest integer with `m^2 * q <= p`.
pub fn floor_sqrt(x: &Rat) -> Result<Int> {
    if x.is_negative() {
        return Err(Error::domain("square root of a negative rational"));
    }
    let (p, q) = (x.numer(), x.denom());
    let mut m = (p / q).sqrt();
    // The seed is within one of the truth; fix up exactly.
    while (&m + 1u32) * (&m + 1u32) * q <= *p {
        m += 1u32;
    }
    while &m * &m * q > *p {
        m -= 1u32;
    }
    Ok(m)
}

/// Largest integer `<= c + sqrt(u)`, for rational `c` and nonnegative `u`.
pub fn floor_plus_sqrt(c: &Rat, u: &Rat) -> Result<Int> {
    let leq = |m: &Int| -> bool {
        // m <= c + sqrt(u)  <=>  m <= c, or (m - c)^2 <= u
        let mr = Rat::from_integer(m.clone());
        if mr <= *c {
            true
        } else {
            let d = &mr - c;
            &d * &d <= *u
        }
    };
    let mut m = c.floor().to_integer() + floor_sqrt(u)?;
    while leq(&(&m + 1u32)) {
        m += 1u32;
    }
    while !leq(&m) {
        m -= 1u32;
    }
    Ok(m)
}

/// Smallest integer `>= c - sqrt(u)`, for rational `c` and nonnegative `u`.
pub fn ceil_minus_sqrt(c: &Rat, u: &Rat) -> Result<Int> {
    Ok(-floor_plus_sqrt(&-c.clone(), u)?)
}

/// Exact `gcd` treating zero as the absorbing element: `gcd(0, n) = |n|`.
pub fn gcd_int(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// True iff `x` is an integer.
pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Sign of a rational as -1, 0, 1.
pub fn sign(x: &Rat) -> i32 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
