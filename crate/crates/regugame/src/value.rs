//! Exact rational arithmetic for prices, costs, utilities and probabilities.
//!
//! Every quantity in the library is a [`Value`]: an arbitrary-precision
//! rational number. Inputs written as decimal literals (`0.2`, `12`, `-4.25`)
//! are parsed exactly, so thresholds such as `8/3` come out as true fractions
//! instead of floating-point approximations. Comparisons are exact; convert
//! with [`Value::to_f64`] only at the edges (display, tolerance checks).

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// An exact rational quantity (currency, utility or probability).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Value(BigRational);

/// Error produced when a string cannot be read as a number.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid number `{input}`: {reason}")]
pub struct ParseValueError {
    pub input: String,
    pub reason: String,
}

impl Value {
    pub fn zero() -> Self {
        Value(BigRational::zero())
    }

    pub fn one() -> Self {
        Value(BigRational::one())
    }

    /// Exact ratio `numer / denom`. Panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Value(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Parses an integer (`16`), decimal (`-4.25`, `2.5e-3`) or fraction (`8/3`).
    pub fn parse(input: &str) -> Result<Self, ParseValueError> {
        let s = input.trim();
        let err = |reason: &str| ParseValueError {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Err(err("empty string"));
        }
        if let Some((numer, denom)) = s.split_once('/') {
            let n: BigInt = numer
                .trim()
                .parse()
                .map_err(|_| err("fraction numerator is not an integer"))?;
            let d: BigInt = denom
                .trim()
                .parse()
                .map_err(|_| err("fraction denominator is not an integer"))?;
            if d.is_zero() {
                return Err(err("fraction denominator is zero"));
            }
            return Ok(Value(BigRational::new(n, d)));
        }
        // Decimal with optional exponent: [sign] digits [. digits] [e[sign]digits]
        let (mantissa, exponent) = match s.split_once(['e', 'E']) {
            Some((m, e)) => {
                let exp: i64 = e.parse().map_err(|_| err("bad exponent"))?;
                (m, exp)
            }
            None => (s, 0),
        };
        let (sign, digits) = match mantissa.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = match digits.split_once('.') {
            Some((i, f)) => (i, f),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(err("no digits"));
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(err("unexpected character"));
        }
        let joined = format!("{int_part}{frac_part}");
        let unscaled: BigInt = joined.parse().map_err(|_| err("bad digits"))?;
        let scale = frac_part.len() as i64 - exponent;
        let mut numer = BigInt::from(sign) * unscaled;
        let mut denom = BigInt::one();
        match scale.cmp(&0) {
            Ordering::Greater => denom = pow10(scale as u32),
            Ordering::Less => numer *= pow10((-scale) as u32),
            Ordering::Equal => {}
        }
        Ok(Value(BigRational::new(numer, denom)))
    }

    /// Converts a finite float to the exact rational its shortest decimal
    /// representation denotes, so `0.2_f64` becomes exactly `1/5`.
    pub fn from_f64_decimal(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        Value::parse(&format!("{x}")).ok()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Value {
        Value(self.0.abs())
    }

    pub fn min(self, other: Value) -> Value {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Value) -> Value {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Reduced fraction form: `16`, `8/3`, `-4/3`.
    pub fn fraction_string(&self) -> String {
        if self.0.is_integer() {
            self.0.numer().to_string()
        } else {
            format!("{}/{}", self.0.numer(), self.0.denom())
        }
    }

    /// Decimal form: exact when the expansion terminates (`16`, `2.5`,
    /// `0.0425`), otherwise rounded to 12 significant digits.
    pub fn decimal_string(&self) -> String {
        match terminating_exponent(self.0.denom()) {
            Some(k) => {
                let scaled = (self.0.numer() * pow10(k)) / self.0.denom();
                render_scaled(&scaled, k, true)
            }
            None => self.round_significant(12).decimal_string(),
        }
    }

    /// Fixed-point rendering with `places` digits after the point (`1.5556`).
    pub fn decimal_places(&self, places: u32) -> String {
        let scaled = (&self.0 * BigRational::from(pow10(places))).round();
        render_scaled(scaled.numer(), places, false)
    }

    /// Rounds to `digits` significant decimal digits, half away from zero.
    pub fn round_significant(&self, digits: u32) -> Value {
        if self.0.is_zero() {
            return Value::zero();
        }
        let e = self.floor_log10();
        let shift = digits as i64 - 1 - e;
        let factor = if shift >= 0 {
            BigRational::from(pow10(shift as u32))
        } else {
            BigRational::new(BigInt::one(), pow10((-shift) as u32))
        };
        let rounded = (&self.0 * &factor).round();
        Value(rounded / factor)
    }

    /// Largest `e` with `10^e <= |self|`. Panics on zero.
    fn floor_log10(&self) -> i64 {
        assert!(!self.0.is_zero());
        let digits = |n: &BigInt| n.magnitude().to_string().len() as i64;
        let mut e = digits(self.0.numer()) - digits(self.0.denom());
        let abs = self.0.abs();
        let pow = |e: i64| -> BigRational {
            if e >= 0 {
                BigRational::from(pow10(e as u32))
            } else {
                BigRational::new(BigInt::one(), pow10((-e) as u32))
            }
        };
        while pow(e) > abs {
            e -= 1;
        }
        while pow(e + 1) <= abs {
            e += 1;
        }
        e
    }
}

impl Default for Value {
    fn default() -> Self {
        Value::zero()
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.decimal_string())
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fraction_string())
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value(BigRational::from(BigInt::from(n)))
    }
}

impl From<i32> for Value {
    fn from(n: i32) -> Self {
        Value::from(n as i64)
    }
}

impl FromStr for Value {
    type Err = ParseValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Value::parse(s)
    }
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10).pow(k)
}

/// If `den` is of the form `2^a * 5^b`, returns `max(a, b)`: the number of
/// decimal places an exact expansion needs. Otherwise `None`.
fn terminating_exponent(den: &BigInt) -> Option<u32> {
    let mut d = den.clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut a = 0u32;
    let mut b = 0u32;
    while (&d % &two).is_zero() {
        d /= &two;
        a += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        b += 1;
    }
    if d.is_one() {
        Some(a.max(b))
    } else {
        None
    }
}

/// Renders `scaled / 10^places`, optionally trimming trailing zeros.
fn render_scaled(scaled: &BigInt, places: u32, trim: bool) -> String {
    let negative = scaled.is_negative();
    let mut digits = scaled.magnitude().to_string();
    let places = places as usize;
    if digits.len() <= places {
        digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
    }
    let point = digits.len() - places;
    let (int_part, mut frac_part) = (digits[..point].to_string(), digits[point..].to_string());
    if trim {
        while frac_part.ends_with('0') {
            frac_part.pop();
        }
    }
    let body = if frac_part.is_empty() {
        int_part
    } else {
        format!("{int_part}.{frac_part}")
    };
    if negative && body.chars().any(|c| c != '0' && c != '.') {
        format!("-{body}")
    } else {
        body
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Value {
            type Output = Value;
            fn $method(self, rhs: Value) -> Value {
                Value((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Value> for Value {
            type Output = Value;
            fn $method(self, rhs: &Value) -> Value {
                Value((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Value> for &Value {
            type Output = Value;
            fn $method(self, rhs: Value) -> Value {
                Value((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Value> for &Value {
            type Output = Value;
            fn $method(self, rhs: &Value) -> Value {
                Value((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Value {
    type Output = Value;
    fn neg(self) -> Value {
        Value(-self.0)
    }
}

impl Neg for &Value {
    type Output = Value;
    fn neg(self) -> Value {
        Value(-&self.0)
    }
}

impl AddAssign<&Value> for Value {
    fn add_assign(&mut self, rhs: &Value) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Value> for Value {
    fn sub_assign(&mut self, rhs: &Value) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Value {
    fn sum<I: Iterator<Item = Value>>(iter: I) -> Value {
        iter.fold(Value::zero(), |acc, v| acc + v)
    }
}

impl<'a> Sum<&'a Value> for Value {
    fn sum<I: Iterator<Item = &'a Value>>(iter: I) -> Value {
        iter.fold(Value::zero(), |acc, v| acc + v)
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            if let Some(n) = self.0.numer().to_i64() {
                return serializer.serialize_i64(n);
            }
        }
        if terminating_exponent(self.0.denom()).is_some() {
            let f = self.to_f64();
            if Value::from_f64_decimal(f).as_ref() == Some(self) {
                return serializer.serialize_f64(f);
            }
        }
        serializer.serialize_str(&self.fraction_string())
    }
}

struct ValueVisitor;

impl Visitor<'_> for ValueVisitor {
    type Value = Value;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a number, or a string like \"8/3\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Value, E> {
        Ok(Value::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Value, E> {
        Ok(Value(BigRational::from(BigInt::from(v))))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Value, E> {
        Value::from_f64_decimal(v).ok_or_else(|| E::custom("number is not finite"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Value, E> {
        Value::parse(v).map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Value, D::Error> {
        deserializer.deserialize_any(ValueVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Value {
        Value::parse(s).unwrap()
    }

    #[test]
    fn parses_integers_decimals_fractions() {
        assert_eq!(v("16"), Value::from(16));
        assert_eq!(v("-4.25"), Value::ratio(-17, 4));
        assert_eq!(v("8/3"), Value::ratio(8, 3));
        assert_eq!(v("0.2"), Value::ratio(1, 5));
        assert_eq!(v("2.5e-3"), Value::ratio(1, 400));
        assert_eq!(v("1e3"), Value::from(1000));
        assert!(Value::parse("").is_err());
        assert!(Value::parse("1/0").is_err());
        assert!(Value::parse("abc").is_err());
    }

    #[test]
    fn f64_decimal_bridge_is_exact_for_typed_literals() {
        assert_eq!(Value::from_f64_decimal(0.2).unwrap(), Value::ratio(1, 5));
        assert_eq!(Value::from_f64_decimal(12.0).unwrap(), Value::from(12));
        assert!(Value::from_f64_decimal(f64::NAN).is_none());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(v("16").decimal_string(), "16");
        assert_eq!(v("5/2").decimal_string(), "2.5");
        assert_eq!(v("17/400").decimal_string(), "0.0425");
        assert_eq!(v("-3/4").decimal_string(), "-0.75");
        assert_eq!(v("0").decimal_string(), "0");
        assert_eq!(v("8/3").decimal_string(), "2.66666666667");
        assert_eq!(v("14/9").decimal_places(4), "1.5556");
        assert_eq!(v("17/43").decimal_places(4), "0.3953");
        assert_eq!(v("4/11").decimal_places(4), "0.3636");
    }

    #[test]
    fn fraction_rendering() {
        assert_eq!(v("8/3").fraction_string(), "8/3");
        assert_eq!(v("16").fraction_string(), "16");
        assert_eq!(v("-8/6").fraction_string(), "-4/3");
    }

    #[test]
    fn arithmetic_is_exact() {
        let r = v("0.6");
        let p_min = (v("8") - v("12")) + &(v("4") / &r);
        assert_eq!(p_min, v("8/3"));
        assert_eq!(&r * &p_min, v("1.6"));
    }

    #[test]
    fn ordering_and_sign() {
        assert!(v("8/3") < v("3"));
        assert!(v("-1").is_negative());
        assert!(!v("0").is_negative());
        assert_eq!(v("5").min(v("3")), v("3"));
        assert_eq!(v("-2").abs(), v("2"));
    }

    #[test]
    fn serde_round_trip() {
        for s in ["16", "-4", "2.5", "0.2", "8/3", "1/7"] {
            let x = v(s);
            let json = serde_json::to_string(&x).unwrap();
            let back: Value = serde_json::from_str(&json).unwrap();
            assert_eq!(back, x, "round trip through {json}");
        }
        let from_number: Value = serde_json::from_str("0.5").unwrap();
        assert_eq!(from_number, Value::ratio(1, 2));
        let from_fraction: Value = serde_json::from_str("\"14/9\"").unwrap();
        assert_eq!(from_fraction, Value::ratio(14, 9));
    }

    #[test]
    fn significant_rounding() {
        assert_eq!(v("14/9").round_significant(5), v("1.5556"));
        assert_eq!(v("-14/9").round_significant(5), v("-1.5556"));
        assert_eq!(v("12345").round_significant(2), v("12000"));
        assert_eq!(v("0").round_significant(3), v("0"));
    }
}
