//! Closed-form classification from the binary digits of `n`.
//!
//! Every function here that takes digits accepts any `AsRef<[bool]>`
//! (LSB-first), canonical or not: zeros above the top `1` never change a
//! window count or a parity, so padded inputs classify the same as their
//! canonical [`BitString`].
//!
//! The verdict reports `Z mod 8` for the 4-stripped factorial, `n! = 4^x · Z`.
//! That residue is `2^γ̄ · 3^α₃ · (−1)^α₅ mod 8`. The residue of the odd
//! part (`n! = 2^γ · Z_odd`) is the same expression with `γ̄ = 0`, exposed as
//! [`Verdict::odd_part_mod8`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::BitString;

/// Counts of 3-bit windows by value class over all positions `k ≥ 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WindowProfile {
    /// windows equal to 3 or 4
    pub alpha3: u64,
    /// windows equal to 5 or 6
    pub alpha5: u64,
    /// windows equal to 7
    pub alpha7: u64,
}

/// Residue of the 4-stripped part of a factorial, one of `1, 2, 3, 5, 6, 7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Residue8(u8);

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0} is not a residue of a 4-stripped integer mod 8")]
pub struct InvalidResidue(pub u8);

impl Residue8 {
    pub const ONE: Self = Self(1);
    pub const TWO: Self = Self(2);
    pub const THREE: Self = Self(3);
    pub const FIVE: Self = Self(5);
    pub const SIX: Self = Self(6);
    pub const SEVEN: Self = Self(7);

    /// All residues in ascending order.
    pub const ALL: [Self; 6] = [
        Self::ONE,
        Self::TWO,
        Self::THREE,
        Self::FIVE,
        Self::SIX,
        Self::SEVEN,
    ];

    pub const fn new(value: u8) -> Option<Self> {
        match value {
            1 | 2 | 3 | 5 | 6 | 7 => Some(Self(value)),
            _ => None,
        }
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    /// Position in [`Residue8::ALL`].
    pub const fn index(self) -> usize {
        match self.0 {
            1 => 0,
            2 => 1,
            3 => 2,
            5 => 3,
            6 => 4,
            _ => 5,
        }
    }

    /// `true` for residue 7, the only class that is not a sum of three squares.
    pub const fn is_rejecting(self) -> bool {
        self.0 == 7
    }
}

impl TryFrom<u8> for Residue8 {
    type Error = InvalidResidue;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        Self::new(value).ok_or(InvalidResidue(value))
    }
}

impl From<Residue8> for u8 {
    fn from(r: Residue8) -> u8 {
        r.0
    }
}

impl fmt::Display for Residue8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Residue8 {
    type Err = InvalidResidue;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: u8 = s.trim().parse().map_err(|_| InvalidResidue(0))?;
        Self::try_from(v)
    }
}

const fn residue_entry(gamma: bool, alpha3: bool, alpha5: bool) -> Residue8 {
    let mut z = 1u8;
    if gamma {
        z *= 2;
    }
    if alpha3 {
        z *= 3;
    }
    if alpha5 {
        z = 8 - z;
    }
    Residue8(z % 8)
}

/// Indexed by `γ̄ << 2 | α₃ parity << 1 | α₅ parity`.
const RESIDUE_TABLE: [Residue8; 8] = {
    let mut table = [Residue8(1); 8];
    let mut i = 0;
    while i < 8 {
        table[i] = residue_entry(i & 4 != 0, i & 2 != 0, i & 1 != 0);
        i += 1;
    }
    table
};

/// `2^γ̄ · 3^a · (−1)^b mod 8` for the three parities.
pub const fn residue_for_parities(gamma: bool, alpha3: bool, alpha5: bool) -> Residue8 {
    RESIDUE_TABLE[((gamma as usize) << 2) | ((alpha3 as usize) << 1) | alpha5 as usize]
}

/// Full three-square verdict for one `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub gamma_parity: bool,
    pub alpha3_parity: bool,
    pub alpha5_parity: bool,
    /// `Z mod 8` where `n! = 4^x · Z`
    pub z_mod8: Residue8,
    pub representable: bool,
    /// 2-adic valuation of `n!`, when `n` fits in a `u64`
    pub gamma_exact: Option<u64>,
    /// `x` in `n! = 4^x · Z`, same availability as `gamma_exact`
    pub four_exponent: Option<u64>,
}

impl Verdict {
    /// Residue of the odd part of `n!`, i.e. `3^α₃ · (−1)^α₅ mod 8`.
    pub fn odd_part_mod8(&self) -> Residue8 {
        residue_for_parities(false, self.alpha3_parity, self.alpha5_parity)
    }
}

fn digit_at(digits: &[bool], k: usize) -> u8 {
    digits.get(k).copied().map_or(0, u8::from)
}

/// `a_k + 2·a_{k+1} + 4·a_{k+2}`, reading absent digits as zero.
pub fn window_value<D: AsRef<[bool]> + ?Sized>(digits: &D, k: usize) -> u8 {
    let d = digits.as_ref();
    digit_at(d, k) | (digit_at(d, k + 1) << 1) | (digit_at(d, k + 2) << 2)
}

pub fn window_profile<D: AsRef<[bool]> + ?Sized>(digits: &D) -> WindowProfile {
    let d = digits.as_ref();
    let mut profile = WindowProfile::default();
    // windows starting at or above the top stored digit are all zero-padded
    for k in 0..d.len() {
        match window_value(d, k) {
            3 | 4 => profile.alpha3 += 1,
            5 | 6 => profile.alpha5 += 1,
            7 => profile.alpha7 += 1,
            _ => {}
        }
    }
    profile
}

/// Highest power of 2 dividing `n!`: `n` minus its binary digit sum.
pub fn gamma_exact(n: u64) -> u64 {
    n - u64::from(n.count_ones())
}

/// Parity of the 2-adic valuation of `n!`, which is the parity of `Σ_{k≥1} a_k`.
pub fn gamma_parity<D: AsRef<[bool]> + ?Sized>(digits: &D) -> bool {
    digits
        .as_ref()
        .iter()
        .skip(1)
        .fold(false, |acc, &d| acc ^ d)
}

fn canonical_u64(digits: &[bool]) -> Option<u64> {
    let top = digits.iter().rposition(|&d| d).map_or(0, |p| p + 1);
    if top > 64 {
        return None;
    }
    Some(
        digits[..top]
            .iter()
            .rev()
            .fold(0u64, |acc, &d| (acc << 1) | u64::from(d)),
    )
}

pub fn classify<D: AsRef<[bool]> + ?Sized>(digits: &D) -> Verdict {
    let d = digits.as_ref();
    let profile = window_profile(d);
    let gamma_parity = gamma_parity(d);
    let alpha3_parity = profile.alpha3 % 2 == 1;
    let alpha5_parity = profile.alpha5 % 2 == 1;
    let z_mod8 = residue_for_parities(gamma_parity, alpha3_parity, alpha5_parity);
    let gamma = canonical_u64(d).map(gamma_exact);
    Verdict {
        gamma_parity,
        alpha3_parity,
        alpha5_parity,
        z_mod8,
        representable: !z_mod8.is_rejecting(),
        gamma_exact: gamma,
        four_exponent: gamma.map(|g| g / 2),
    }
}

/// Convenience for machine-size `n`.
pub fn classify_u64(n: u64) -> Verdict {
    classify(&BitString::from_u64(n))
}

/// An odd residue class mod 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OddClass {
    One = 1,
    Three = 3,
    Five = 5,
    Seven = 7,
}

impl OddClass {
    pub const ALL: [OddClass; 4] = [Self::One, Self::Three, Self::Five, Self::Seven];

    pub const fn value(self) -> u64 {
        self as u64
    }
}

/// `A(n, x)`: the number of `k ≥ 0` with `2^k · x ≤ n`, i.e. the exponent of
/// the odd number `x` in `n!`'s product over odd parts.
pub fn multiplicity_a(n: u64, x: u64) -> u64 {
    assert!(x >= 1, "multiplicity_a needs x >= 1");
    let mut count = 0;
    let mut m = u128::from(x);
    while m <= u128::from(n) {
        count += 1;
        m <<= 1;
    }
    count
}

/// `A_{i,k}(n) = #{x ≡ i (mod 8) : 2^k · x ≤ n}`, counted one `x` at a time.
pub fn count_a_ik(n: u64, class: OddClass, k: u32) -> u64 {
    let n = u128::from(n);
    let mut count = 0;
    let mut x = u128::from(class.value());
    while k < 128 && (x << k) <= n {
        count += 1;
        x += 8;
    }
    count
}

/// `A_i(n) = Σ_{x ≡ i (mod 8)} A(n, x)`.
pub fn total_a_i(n: u64, class: OddClass) -> u64 {
    (class.value()..=n)
        .step_by(8)
        .map(|x| multiplicity_a(n, x))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(n: u64) -> BitString {
        BitString::from_u64(n)
    }

    #[test]
    fn windows_of_eleven() {
        let b = bits(11);
        let windows: Vec<u8> = (0..5).map(|k| window_value(&b, k)).collect();
        assert_eq!(windows, vec![3, 5, 2, 1, 0]);
        assert_eq!(window_value(&b, 100), 0);
    }

    #[test]
    fn profiles() {
        let p = window_profile(&bits(11));
        assert_eq!((p.alpha3, p.alpha5, p.alpha7), (1, 1, 0));
        let p = window_profile(&bits(7));
        assert_eq!((p.alpha3, p.alpha5, p.alpha7), (1, 0, 1));
        assert_eq!(window_profile(&bits(0)), WindowProfile::default());
        assert_eq!(window_profile(&bits(1)), WindowProfile::default());
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_exact(11), 8);
        assert_eq!(gamma_exact(7), 4);
        for k in 0..63 {
            assert_eq!(gamma_exact(1 << k), (1 << k) - 1);
        }
        assert!(!gamma_parity(&bits(11)));
        assert!(gamma_parity(&bits(2)));
        assert!(!gamma_parity(&bits(1)));
        assert!(!gamma_parity(&bits(0)));
    }

    #[test]
    fn residue_table_matches_listing() {
        let expected = [
            ((false, false, false), 1),
            ((false, true, false), 3),
            ((false, false, true), 7),
            ((false, true, true), 5),
            ((true, false, false), 2),
            ((true, true, false), 6),
            ((true, false, true), 6),
            ((true, true, true), 2),
        ];
        for ((g, a, b), z) in expected {
            assert_eq!(residue_for_parities(g, a, b).value(), z, "{g} {a} {b}");
        }
    }

    #[test]
    fn residue_rejects_0_and_4() {
        assert_eq!(Residue8::new(0), None);
        assert_eq!(Residue8::new(4), None);
        assert_eq!(Residue8::new(8), None);
        assert!("4".parse::<Residue8>().is_err());
        assert_eq!("6".parse::<Residue8>(), Ok(Residue8::SIX));
        for (i, r) in Residue8::ALL.iter().enumerate() {
            assert_eq!(r.index(), i);
        }
    }

    #[test]
    fn classify_examples() {
        let cases = [(10, 7), (12, 7), (1, 1), (0, 1), (34, 3), (32, 6), (24, 7)];
        for (n, z) in cases {
            let v = classify_u64(n);
            assert_eq!(v.z_mod8.value(), z, "n = {n}");
            assert_eq!(v.representable, z != 7);
        }
        let v = classify_u64(11);
        assert_eq!(v.gamma_exact, Some(8));
        assert_eq!(v.four_exponent, Some(4));
        assert_eq!(v.z_mod8, Residue8::FIVE);
        assert_eq!(v.odd_part_mod8(), Residue8::FIVE);
    }

    #[test]
    fn classify_big_input_has_no_exact_gamma() {
        let b = BitString::from_lsb_digits((0..200).map(|k| k % 3 == 0));
        let v = classify(&b);
        assert_eq!(v.gamma_exact, None);
        assert_eq!(v.four_exponent, None);
    }

    #[test]
    fn padded_input_is_transparent() {
        let mut padded = bits(24).digits().to_vec();
        padded.extend([false; 5]);
        assert_eq!(classify(&padded), classify(&bits(24)));
        assert_eq!(window_profile(&padded), window_profile(&bits(24)));
    }

    #[test]
    fn a_counts() {
        assert_eq!(multiplicity_a(11, 3), 2);
        assert_eq!(multiplicity_a(11, 1), 4);
        assert_eq!(multiplicity_a(5, 7), 0);
        assert_eq!(count_a_ik(11, OddClass::Three, 0), 2);
        assert_eq!(count_a_ik(11, OddClass::One, 0), 2);
        assert_eq!(count_a_ik(11, OddClass::Seven, 1), 0);
        assert_eq!(total_a_i(11, OddClass::One), 5);
        // A(11,3) + A(11,11) = 2 + 1
        assert_eq!(total_a_i(11, OddClass::Three), 3);
        assert_eq!(total_a_i(5, OddClass::Seven), 0);
        assert_eq!(multiplicity_a(u64::MAX, 1), 64);
    }
}
