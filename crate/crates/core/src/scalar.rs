//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground field: arbitrary-precision rationals, always in lowest terms
/// with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `(-1)^n` as a scalar.
pub fn sign(n: i64) -> Scalar {
    if n.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

/// Koszul parity helper: true when `(-1)^n = -1`.
pub fn is_odd(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`. The denominator must be nonzero.
pub fn parse(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::Scalar(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(num, den))
}

/// Renders as `"p"` for integers, `"p/q"` otherwise.
pub fn render(q: &Scalar) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn is_negative(q: &Scalar) -> bool {
    q.is_negative()
}

pub fn factorial(n: usize) -> Scalar {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Scalar::from_integer(acc)
}
