//! Exact decimal literals enclosed as intervals.

use super::Interval;
use crate::error::{Error, Result};

/// A decimal literal `mantissa * 10^exp10`, read without rounding.
struct Decimal {
    negative: bool,
    mantissa: u128,
    exp10: i32,
}

fn parse(s: &str) -> Option<Decimal> {
    let s = s.trim();
    let (negative, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (num, exp) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], body[i + 1..].parse::<i32>().ok()?),
        None => (body, 0),
    };
    let (int_part, frac_part) = match num.split_once('.') {
        Some((a, b)) => (a, b),
        None => (num, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits: String = int_part.chars().chain(frac_part.chars()).collect();
    if !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = digits.trim_start_matches('0');
    let mantissa = if digits.is_empty() {
        0
    } else {
        digits.parse::<u128>().ok()?
    };
    Some(Decimal {
        negative,
        mantissa,
        exp10: exp - frac_part.len() as i32,
    })
}

/// `m * 2^e` with `m` odd (or zero).
fn normalize(mut m: u128, mut e: i64) -> (u128, i64) {
    if m == 0 {
        return (0, 0);
    }
    let tz = m.trailing_zeros();
    m >>= tz;
    e += tz as i64;
    (m, e)
}

/// Decompose a finite non-negative double into `m * 2^e`.
fn decompose(v: f64) -> (u128, i64) {
    let bits = v.to_bits();
    let exp_bits = ((bits >> 52) & 0x7ff) as i64;
    let frac = (bits & ((1u64 << 52) - 1)) as u128;
    if exp_bits == 0 {
        normalize(frac, -1074)
    } else {
        normalize(frac | (1u128 << 52), exp_bits - 1075)
    }
}

/// Is the double `v` exactly equal to the decimal `d` (ignoring sign)?
fn exactly_equal(v: f64, d: &Decimal) -> bool {
    let (vm, ve) = decompose(v.abs());
    if d.mantissa == 0 {
        return vm == 0;
    }
    // Compare vm * 2^ve with mantissa * 5^k * 2^k, moving the power of five
    // to whichever side keeps everything an integer.
    let k = d.exp10 as i64;
    let five = 5u128.checked_pow(k.unsigned_abs() as u32);
    let Some(five) = five else { return false };
    let (lhs, rhs) = if k >= 0 {
        let Some(r) = d.mantissa.checked_mul(five) else {
            return false;
        };
        (normalize(vm, ve), normalize(r, k))
    } else {
        let Some(l) = vm.checked_mul(five) else {
            return false;
        };
        (normalize(l, ve - k), normalize(d.mantissa, 0))
    };
    lhs == rhs
}

impl Interval {
    /// Tightest double interval containing the exact value of a decimal
    /// literal such as `"0.32"` or `"-1.301"`.
    pub fn from_decimal(s: &str) -> Result<Interval> {
        let d = parse(s).ok_or_else(|| Error::Decimal(s.to_string()))?;
        let v: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Decimal(s.to_string()))?;
        if !v.is_finite() {
            return Err(Error::Decimal(s.to_string()));
        }
        let v = if d.negative { -v.abs() } else { v.abs() };
        if exactly_equal(v, &d) {
            Ok(Interval::point(v))
        } else {
            // Correct rounding puts the exact value within half an ulp.
            Ok(Interval::new(v.next_down(), v.next_up()))
        }
    }
}

/// Shorthand for [`Interval::from_decimal`] on literals known to be valid.
pub fn dec(s: &str) -> Interval {
    Interval::from_decimal(s).unwrap_or_else(|e| panic!("{e}"))
}
