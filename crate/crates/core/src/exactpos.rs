//! Exact x-coordinates of the form `q + k·ε`.
//!
//! `q` is an arbitrary-precision rational and `ε` is a formal positive
//! infinitesimal, so a [`Position`] is just the pair `(q, k)` ordered
//! lexicographically. Every comparison made by the rest of the crate goes
//! through this ordering; there is no floating point anywhere in the
//! classification logic.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A point `base + eps·ε` on the real line.
///
/// Field order matters: the derived `Ord` compares `base` first and only
/// falls back to `eps` on ties, which is exactly the ordering of the reals
/// once `ε` is taken smaller than any positive rational in play.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    base: BigRational,
    eps: i64,
}

impl Position {
    pub fn new(base: BigRational, eps: i64) -> Self {
        Position { base, eps }
    }

    pub fn from_int(base: i64, eps: i64) -> Self {
        Position { base: BigRational::from_integer(BigInt::from(base)), eps }
    }

    /// A position with no infinitesimal part.
    pub fn rational(base: BigRational) -> Self {
        Position { base, eps: 0 }
    }

    pub fn base(&self) -> &BigRational {
        &self.base
    }

    pub fn eps(&self) -> i64 {
        self.eps
    }

    /// Translate by a rational amount; the ε-coefficient is untouched.
    pub fn shift(&self, r: &BigRational) -> Position {
        Position { base: &self.base + r, eps: self.eps }
    }

    pub fn shift_int(&self, r: i64) -> Position {
        self.shift(&BigRational::from_integer(BigInt::from(r)))
    }

    /// Approximate value with `ε` replaced by `eps_value`. Only used for drawing.
    pub fn to_f64(&self, eps_value: f64) -> f64 {
        ratio_to_f64(&self.base) + self.eps as f64 * eps_value
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl Add for &Position {
    type Output = Position;

    fn add(self, other: &Position) -> Position {
        Position { base: &self.base + &other.base, eps: self.eps + other.eps }
    }
}

impl Sub for &Position {
    type Output = Position;

    fn sub(self, other: &Position) -> Position {
        Position { base: &self.base - &other.base, eps: self.eps - other.eps }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        match self.eps.cmp(&0) {
            std::cmp::Ordering::Equal => Ok(()),
            std::cmp::Ordering::Greater => write!(f, "+{}*eps", self.eps),
            std::cmp::Ordering::Less => write!(f, "-{}*eps", -self.eps),
        }
    }
}

/// Parse an exact rational from `"26/5"`, `"-3"` or a terminating decimal
/// such as `"5.2"`.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_digits}{frac_part}");
        let numer = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        let value = BigRational::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    let value = BigRational::from_str(s).map_err(|_| bad())?;
    Ok(value)
}

impl FromStr for Position {
    type Err = Error;

    /// Accepts the [`Display`](fmt::Display) form: `"p/q"`, `"p/q+k*eps"`,
    /// `"p/q-k*eps"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let Some(head) = s.strip_suffix("*eps") else {
            return Ok(Position::rational(parse_rational(s)?));
        };
        // The sign joining base and coefficient is the last +/- past index 0.
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(|| Error::Parse(format!("invalid position {s:?}")))?;
        let base = parse_rational(&head[..split])?;
        let coeff: i64 =
            head[split + 1..].parse().map_err(|_| Error::Parse(format!("invalid ε coefficient in {s:?}")))?;
        let eps = if head.as_bytes()[split] == b'-' { -coeff } else { coeff };
        Ok(Position::new(base, eps))
    }
}

impl Serialize for Position {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Position {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(v) => Ok(Position::from_int(v, 0)),
            Raw::Text(s) => s.parse().map_err(de::Error::custom),
        }
    }
}

/// `true` when the rational is an integer.
pub(crate) fn is_integer(r: &BigRational) -> bool {
    r.denom().is_one()
}

/// `true` when `r` is a multiple of the positive integer `m`.
pub(crate) fn is_multiple_of(r: &BigRational, m: i64) -> bool {
    if !is_integer(r) {
        return false;
    }
    let m = BigInt::from(m);
    (r.numer() % &m).is_zero()
}
