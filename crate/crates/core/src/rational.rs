//! Scalars: arbitrary-precision rationals over a characteristic-zero field.
//!
//! `num_rational::BigRational` already maintains the invariants we need
//! (always reduced, positive denominator, canonical zero), so the module is
//! a thin layer of constructors and parsing on top of it.

use alloc::string::String;
use alloc::string::ToString;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

pub fn is_one(r: &Rat) -> bool {
    r.is_one()
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn render(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Parses `p` or `p/q` with optional sign.
pub fn parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => BigInt::from_str(s).ok().map(Rat::from_integer),
    }
}

/// Absolute value, used by pivoting heuristics.
pub fn abs(r: &Rat) -> Rat {
    r.abs()
}
