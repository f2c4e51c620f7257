//! Exact rational scalars and parsing helpers.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number used throughout the certification paths.
pub type Rat = BigRational;

pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `x^k` for possibly negative `k`.
pub fn rat_powi(x: &Rat, k: i64) -> Rat {
    if k >= 0 {
        num_traits::pow::pow(x.clone(), k as usize)
    } else {
        num_traits::pow::pow(x.clone(), (-k) as usize).recip()
    }
}

/// The rational with the smallest denominator in `[lo, hi]` (ties broken by
/// smallest numerator), via the continued-fraction walk.
pub fn simplest_rat_in(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    if lo.is_negative() && !hi.is_negative() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_rat_in(&-hi.clone(), &-lo.clone());
    }
    // 0 ≤ lo ≤ hi from here on
    let c = lo.ceil();
    if c <= *hi {
        return c;
    }
    // no integer inside: both endpoints share floor(lo) and are non-integer
    let int = lo.floor();
    // recurse on the reciprocal of the fractional parts (hi first: the
    // interval flips under x ↦ 1/x)
    let inner = simplest_rat_in(&(hi - &int).recip(), &(lo - &int).recip());
    int + inner.recip()
}

/// Parses "p/q", an integer, or a decimal literal ("3.25", "-1e-3") into an
/// exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = |m: &str| Error::Parse {
        line: 0,
        message: format!("{m}: {s:?}"),
    };
    if s.is_empty() {
        return Err(err("empty number"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err("bad numerator"))?;
        let d: BigInt = den.trim().parse().map_err(|_| err("bad denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(Rat::new(n, d));
    }
    // decimal literal, optional exponent
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e.parse().map_err(|_| err("bad exponent"))?;
            (m, exp)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let negative = int_part.starts_with('-');
    let digits: String = int_part
        .trim_start_matches(['-', '+'])
        .chars()
        .chain(frac_part.chars())
        .collect();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(err("bad decimal"));
    }
    let mut value = Rat::new(
        digits.parse::<BigInt>().map_err(|_| err("bad digits"))?,
        BigInt::one(),
    );
    let shift = exp - frac_part.len() as i64;
    value *= rat_powi(&rat_i64(10), shift);
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Decimal rendering of a rational, exact when the denominator is 2^a·5^b,
/// otherwise truncated to `digits` fractional digits. Returns the string and
/// a bound on the absolute truncation error.
pub fn rat_to_decimal(x: &Rat, digits: u32) -> (String, Rat) {
    let scale = rat_powi(&rat_i64(10), digits as i64);
    let scaled = x * &scale;
    let floor = scaled.floor().to_integer();
    let exact = Rat::from_integer(floor.clone()) == scaled;
    let mut err = Rat::zero();
    let mut int = floor;
    if !exact {
        // round to nearest
        let frac = &scaled - Rat::from_integer(int.clone());
        if frac >= rat_frac(1, 2) {
            int += 1;
        }
        err = scale.recip() / rat_i64(2);
    }
    let neg = int.sign() == Sign::Minus;
    let mag = int.magnitude().to_string();
    let mag = if mag.len() <= digits as usize {
        format!("0.{:0>width$}", mag, width = digits as usize)
    } else {
        let (i, f) = mag.split_at(mag.len() - digits as usize);
        format!("{i}.{f}")
    };
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&mag);
    // trim trailing zeros but keep at least one fractional digit
    while out.ends_with('0') && !out.ends_with(".0") {
        out.pop();
    }
    (out, err)
}

/// Exact "p/q" rendering.
pub fn rat_to_frac_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Approximate f64 value (round-to-nearest; not for certification).
pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// All signs of a slice of rationals, dropping zeros.
pub fn nonzero_signs(v: &[Rat]) -> Vec<i8> {
    v.iter()
        .filter(|x| !x.is_zero())
        .map(|x| if x.is_positive() { 1 } else { -1 })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rat("1/4").unwrap(), rat_frac(1, 4));
        assert_eq!(parse_rat("3.25").unwrap(), rat_frac(13, 4));
        assert_eq!(parse_rat("-0.5").unwrap(), rat_frac(-1, 2));
        assert_eq!(parse_rat("2e-2").unwrap(), rat_frac(1, 50));
        assert_eq!(parse_rat("7").unwrap(), rat_i64(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
    }

    #[test]
    fn decimal_rendering_reports_error_radius() {
        let (s, e) = rat_to_decimal(&rat_frac(1, 4), 6);
        assert_eq!(s, "0.25");
        assert!(e.is_zero());
        let (s, e) = rat_to_decimal(&rat_frac(1, 3), 6);
        assert_eq!(s, "0.333333");
        assert!(e > Rat::zero());
    }
}
