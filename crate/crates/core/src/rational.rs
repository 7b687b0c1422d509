//! Exact rational scalars and their text forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses an integer (`"3"`), a decimal (`"-0.125"`, `"1e-3"` is not
/// accepted) or a fraction (`"7/3"`).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let (neg, whole) = match whole.strip_prefix('-') {
            Some(w) => (true, w),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        if (whole.is_empty() && frac.is_empty())
            || !whole.bytes().all(|c| c.is_ascii_digit())
            || !frac.bytes().all(|c| c.is_ascii_digit())
        {
            return Err(err());
        }
        let digits = format!("{whole}{frac}");
        let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| err())? };
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = t.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(n))
}

/// Canonical `"p/q"` form; integers are written as `"p/1"`.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering rounded (half away from zero) to `digits` significant
/// digits, e.g. `5/24` at 12 digits is `"0.208333333333"`.
pub fn to_decimal_string(r: &Rational, digits: usize) -> String {
    assert!(digits > 0);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let x = r.abs();
    // exponent e with 10^e <= x < 10^(e+1)
    let ten = BigInt::from(10);
    let mut e: i64 = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
    loop {
        let p = pow10(e);
        if x < p {
            e -= 1;
        } else if x >= pow10(e + 1) {
            e += 1;
        } else {
            break;
        }
    }
    // scaled = round(x * 10^(digits-1-e))
    let shift = digits as i64 - 1 - e;
    let scaled = x * pow10(shift);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut m = if rem * 2 >= *scaled.denom() { q + 1 } else { q };
    let mut shift = shift;
    if m == num_traits::pow(ten.clone(), digits) {
        m /= &ten;
        shift -= 1;
    }
    let mut s = m.to_string();
    let out = if shift <= 0 {
        s.push_str(&"0".repeat((-shift) as usize));
        s
    } else {
        let shift = shift as usize;
        if s.len() <= shift {
            s = format!("{}{}", "0".repeat(shift - s.len() + 1), s);
        }
        let (i, f) = s.split_at(s.len() - shift);
        let f = f.trim_end_matches('0');
        if f.is_empty() {
            i.to_string()
        } else {
            format!("{i}.{f}")
        }
    };
    if neg {
        format!("-{out}")
    } else {
        out
    }
}

fn pow10(e: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    to_decimal_string(r, 17).parse().unwrap_or(f64::NAN)
}
