//! Exact rational arithmetic.
//!
//! Every objective value in this crate is a [`Rational`]: an
//! arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. Comparisons and arithmetic are exact; floating point only
//! appears when a value is rendered as a decimal approximation for display.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Significant digits used for decimal rendering of exact values.
pub const DECIMAL_SIG_DIGITS: usize = 12;

/// Arbitrary-precision rational, stored reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`. `den` may be negative (the sign moves to the
    /// numerator) but must be nonzero.
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "denominator must be nonzero");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Rational {
        assert!(!den.is_zero(), "denominator must be nonzero");
        Rational(BigRational::new(num, den))
    }

    pub(crate) fn from_ratio(r: BigRational) -> Rational {
        Rational(r)
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Rational {
        assert!(!self.is_zero(), "cannot invert zero");
        Rational(self.0.recip())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Renders as `p/q` even when the value is an integer (`4` -> `4/1`).
    pub fn fraction_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    /// Decimal approximation with [`DECIMAL_SIG_DIGITS`] significant digits.
    pub fn decimal_string(&self) -> String {
        self.decimal_string_sig(DECIMAL_SIG_DIGITS)
    }

    /// Decimal approximation rounded (half away from zero) to `sig`
    /// significant digits, trailing zeros trimmed. Falls back to scientific
    /// notation outside a sane plain-decimal magnitude range.
    pub fn decimal_string_sig(&self, sig: usize) -> String {
        assert!(sig >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let a = self.0.numer().abs();
        let b = self.0.denom().clone();

        // decimal exponent e with 10^e <= a/b < 10^(e+1)
        let mut e = decimal_digits(&a) as i64 - decimal_digits(&b) as i64;
        while cmp_to_pow10(&a, &b, e) == Ordering::Less {
            e -= 1;
        }
        while cmp_to_pow10(&a, &b, e + 1) != Ordering::Less {
            e += 1;
        }

        // round a/b * 10^(sig-1-e) to the nearest integer
        let shift = sig as i64 - 1 - e;
        let (num_s, den_s) = if shift >= 0 {
            (a * pow10(shift as u64), b)
        } else {
            (a, b * pow10((-shift) as u64))
        };
        let (mut q, r) = num_s.div_rem(&den_s);
        if &r * BigInt::from(2) >= den_s {
            q += 1;
        }
        let mut digits = q.to_string();
        if digits.len() > sig {
            // rounding carried into a new leading digit (e.g. 9.99 -> 10)
            digits.truncate(sig);
            e += 1;
        }

        let body = if (-8..=20).contains(&e) {
            render_plain(&digits, e)
        } else {
            render_scientific(&digits, e)
        };
        if self.is_negative() {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn decimal_digits(x: &BigInt) -> usize {
    // x is non-negative here
    x.to_string().trim_start_matches('-').len()
}

fn pow10(k: u64) -> BigInt {
    BigInt::from(10u32).pow(k as u32)
}

/// Compares a/b (positive) against 10^k.
fn cmp_to_pow10(a: &BigInt, b: &BigInt, k: i64) -> Ordering {
    if k >= 0 {
        a.cmp(&(b * pow10(k as u64)))
    } else {
        (a * pow10((-k) as u64)).cmp(b)
    }
}

fn render_plain(digits: &str, e: i64) -> String {
    if e >= 0 {
        let int_len = (e + 1) as usize;
        if int_len >= digits.len() {
            let mut s = digits.to_string();
            s.push_str(&"0".repeat(int_len - digits.len()));
            s
        } else {
            let frac = digits[int_len..].trim_end_matches('0');
            if frac.is_empty() {
                digits[..int_len].to_string()
            } else {
                format!("{}.{}", &digits[..int_len], frac)
            }
        }
    } else {
        let frac = format!("{}{}", "0".repeat((-e - 1) as usize), digits);
        let frac = frac.trim_end_matches('0');
        format!("0.{frac}")
    }
}

fn render_scientific(digits: &str, e: i64) -> String {
    let rest = digits[1..].trim_end_matches('0');
    if rest.is_empty() {
        format!("{}e{}", &digits[..1], e)
    } else {
        format!("{}.{}e{}", &digits[..1], rest, e)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` (integer `p`, positive integer `q`), integer literals,
    /// and plain decimal literals (`2.5` parses exactly to `5/2`, never via
    /// binary floating point).
    fn from_str(s: &str) -> Result<Rational, Error> {
        let t = s.trim();
        let bad = || Error::Parse(format!("invalid rational literal '{s}'"));
        if t.is_empty() {
            return Err(bad());
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if !q.is_positive() {
                return Err(Error::Parse(format!(
                    "invalid rational literal '{s}': denominator must be a positive integer"
                )));
            }
            return Ok(Rational(BigRational::new(p, q)));
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let mut num: BigInt = if int_part.is_empty() {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        num *= pow10(frac_part.len() as u64);
        if !frac_part.is_empty() {
            num += frac_part.parse::<BigInt>().map_err(|_| bad())?;
        }
        if neg {
            num = -num;
        }
        Ok(Rational(BigRational::new(num, pow10(frac_part.len() as u64))))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::from_int(n)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

macro_rules! forward_binop {
    ($Op:ident, $method:ident) => {
        impl $Op for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $Op<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $Op<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $Op<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
