//! Exact rational scalars.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, and zero as `0/1`, so the type is used directly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Canonical text: `a` for integers, `a/b` otherwise.
pub fn to_text(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, s),
    };
    let value = match body.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                return None;
            }
            Scalar::new(a, b)
        }
        None => Scalar::from_integer(body.parse().ok()?),
    };
    Some(if neg { -value } else { value })
}

/// Residue of `c` modulo the prime `p`, or `None` when the denominator
/// vanishes modulo `p`.
pub fn reduce_mod(c: &Scalar, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = residue(c.numer(), &pb);
    let den = residue(c.denom(), &pb);
    if den == 0 {
        return None;
    }
    Some(crate::algebra::modular::mul_mod(num, crate::algebra::modular::inv_mod(den, p)?, p))
}

fn residue(v: &BigInt, p: &BigInt) -> u64 {
    let mut r = v % p;
    if r.is_negative() {
        r += p;
    }
    u64::try_from(r).expect("residue fits in u64")
}
