//! Exact parsing of decimal literals into rationals.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Parses a decimal literal such as `0.75`, `-3`, `.5` or `1.25e-3` exactly.
pub fn parse_decimal(input: &str) -> Result<BigRational> {
    let err = || Error::Parse {
        what: "decimal",
        input: input.to_string(),
    };
    let s = input.trim();
    let (negative, s) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = s[pos + 1..].parse().map_err(|_| err())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(err());
    }

    let digits = format!("{int_part}{frac_part}");
    let magnitude = digits.parse::<BigUint>().map_err(|_| err())?;
    let scale = exponent - frac_part.len() as i64;
    if scale.unsigned_abs() > 100_000 {
        return Err(err());
    }
    let ten = BigUint::from(10u32);
    let power = num_traits::pow(ten, scale.unsigned_abs() as usize);

    let mut numer = BigInt::from(magnitude);
    let mut denom = BigInt::one();
    if scale >= 0 {
        numer *= BigInt::from(power);
    } else {
        denom = BigInt::from(power);
    }
    if negative && !numer.is_zero() {
        numer = -numer;
    }
    Ok(BigRational::new(numer, denom))
}
