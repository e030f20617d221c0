//! Canonical binary digit strings, least significant digit first.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

/// Binary digits of a nonnegative integer; index `k` holds the digit of `2^k`.
///
/// The stored form is canonical: the top digit, if any, is a `1`, and the
/// empty string is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    digits: Vec<bool>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseBitsError {
    #[error("empty number literal")]
    Empty,
    #[error("invalid digit {0:?} in binary literal")]
    InvalidBinaryDigit(char),
    #[error("invalid decimal literal {0:?}")]
    InvalidDecimal(String),
}

impl BitString {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_u64(mut n: u64) -> Self {
        let mut digits = Vec::with_capacity(64 - n.leading_zeros() as usize);
        while n != 0 {
            digits.push(n & 1 == 1);
            n >>= 1;
        }
        Self { digits }
    }

    pub fn from_biguint(n: &BigUint) -> Self {
        let digits = (0..n.bits()).map(|k| n.bit(k)).collect();
        Self { digits }
    }

    /// Builds from LSB-first digits, dropping any zeros above the top `1`.
    pub fn from_lsb_digits<I: IntoIterator<Item = bool>>(digits: I) -> Self {
        let mut digits: Vec<bool> = digits.into_iter().collect();
        while digits.last() == Some(&false) {
            digits.pop();
        }
        Self { digits }
    }

    /// Parses a human-order (most significant first) string of `0`/`1`.
    pub fn from_msb_str(s: &str) -> Result<Self, ParseBitsError> {
        if s.is_empty() {
            return Err(ParseBitsError::Empty);
        }
        let digits = s
            .chars()
            .rev()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ParseBitsError::InvalidBinaryDigit(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_lsb_digits(digits))
    }

    pub fn digits(&self) -> &[bool] {
        &self.digits
    }

    /// Digit `a_k`; positions past the top read as zero.
    pub fn digit(&self, k: usize) -> bool {
        self.digits.get(k).copied().unwrap_or(false)
    }

    /// Number of stored digits, i.e. the position of the top `1` plus one.
    pub fn bit_len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.digits.iter().filter(|&&d| d).count()
    }

    pub fn to_u64(&self) -> Option<u64> {
        if self.digits.len() > 64 {
            return None;
        }
        Some(
            self.digits
                .iter()
                .rev()
                .fold(0u64, |acc, &d| (acc << 1) | u64::from(d)),
        )
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut n = BigUint::default();
        for (k, &d) in self.digits.iter().enumerate() {
            if d {
                n.set_bit(k as u64, true);
            }
        }
        n
    }

    /// `block` (LSB-first) concatenated `times` times, then canonicalized.
    pub fn repeat_block(block: &[bool], times: usize) -> Self {
        Self::from_lsb_digits(block.iter().copied().cycle().take(block.len() * times))
    }

    /// Most significant first, `0` for zero.
    pub fn to_msb_string(&self) -> String {
        if self.digits.is_empty() {
            return "0".to_owned();
        }
        self.digits
            .iter()
            .rev()
            .map(|&d| if d { '1' } else { '0' })
            .collect()
    }
}

impl AsRef<[bool]> for BitString {
    fn as_ref(&self) -> &[bool] {
        &self.digits
    }
}

impl From<u64> for BitString {
    fn from(n: u64) -> Self {
        Self::from_u64(n)
    }
}

impl From<&BigUint> for BitString {
    fn from(n: &BigUint) -> Self {
        Self::from_biguint(n)
    }
}

/// Accepts decimal, or binary with a `0b` prefix (most significant first).
impl FromStr for BitString {
    type Err = ParseBitsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(bin) = s.strip_prefix("0b") {
            return Self::from_msb_str(bin);
        }
        if s.is_empty() {
            return Err(ParseBitsError::Empty);
        }
        if !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseBitsError::InvalidDecimal(s.to_owned()));
        }
        let n = BigUint::from_str(s).map_err(|_| ParseBitsError::InvalidDecimal(s.to_owned()))?;
        Ok(Self::from_biguint(&n))
    }
}

/// Renders the value in decimal.
impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_u64() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}", self.to_biguint()),
        }
    }
}
