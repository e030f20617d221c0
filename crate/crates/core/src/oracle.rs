//! Exact ground truth from big-integer arithmetic.
//!
//! Nothing here reads a window or a digit-sum parity: the factorial is
//! multiplied out, its power of two is stripped off by division, and the
//! three-square test is applied to the actual integer. The lemma checks at the
//! bottom compare brute-force counts against the digit formulas they
//! summarize.

pub use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::bits::BitString;
use crate::classifier::{count_a_ik, total_a_i, window_value, OddClass, Residue8};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// largest `n` for which `n!` is multiplied out
    pub factorial_max: u64,
    /// largest `m` passed to the brute-force decomposition search
    pub decompose_max: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            factorial_max: 5000,
            decompose_max: 100_000_000,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{n}! exceeds the configured factorial bound ({max})")]
    FactorialBound { n: u64, max: u64 },
    #[error("{m} exceeds the configured decomposition bound ({max})")]
    DecomposeBound { m: BigUint, max: u64 },
    #[error("the 2-adic valuation of zero is undefined")]
    ZeroValuation,
}

pub fn factorial(n: u64, config: &OracleConfig) -> Result<BigUint, OracleError> {
    if n > config.factorial_max {
        return Err(OracleError::FactorialBound {
            n,
            max: config.factorial_max,
        });
    }
    Ok((2..=n).fold(BigUint::one(), |acc, k| acc * k))
}

/// `(n, n!)` for `n = 0, 1, 2, …`, one multiplication per step.
pub fn factorials() -> impl Iterator<Item = (u64, BigUint)> {
    (0u64..).scan(BigUint::one(), |acc, n| {
        if n > 1 {
            *acc *= n;
        }
        Some((n, acc.clone()))
    })
}

/// Largest `e` with `2^e | m`, by repeated halving.
pub fn v2(m: &BigUint) -> Result<u64, OracleError> {
    if m.is_zero() {
        return Err(OracleError::ZeroValuation);
    }
    let mut e = 0;
    let mut rest = m.clone();
    while !rest.bit(0) {
        rest >>= 1u32;
        e += 1;
    }
    Ok(e)
}

/// `γ` and `Z mod 8` for `m = 4^x · Z`, `x = ⌊γ/2⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExactShape {
    pub gamma: u64,
    pub z_mod8: Residue8,
}

pub fn shape_of(m: &BigUint) -> Result<ExactShape, OracleError> {
    let gamma = v2(m)?;
    let stripped = m >> (2 * (gamma / 2));
    let z = (stripped % 8u32).to_u8().expect("residue below 8");
    let z_mod8 = Residue8::new(z).expect("4-stripped value is never 0 or 4 mod 8");
    Ok(ExactShape { gamma, z_mod8 })
}

pub fn exact_shape(n: u64, config: &OracleConfig) -> Result<ExactShape, OracleError> {
    shape_of(&factorial(n, config)?)
}

/// Legendre's test: `m` is a sum of three squares unless `m = 4^a(8b + 7)`.
///
/// Zero counts as representable (`0 = 0² + 0² + 0²`).
pub fn three_square_representable_exact(m: &BigUint) -> bool {
    if m.is_zero() {
        return true;
    }
    let four = BigUint::from(4u32);
    let mut rest = m.clone();
    while (&rest % &four).is_zero() {
        rest /= &four;
    }
    rest % 8u32 != BigUint::from(7u32)
}

/// `a² + b² + c²` with `a ≤ b ≤ c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Decomposition {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl Decomposition {
    pub fn sum(&self) -> u128 {
        [self.a, self.b, self.c]
            .iter()
            .map(|&v| u128::from(v) * u128::from(v))
            .sum()
    }
}

/// Lexicographically smallest sorted triple with `a² + b² + c² = m`, or
/// `None` when there is none.
pub fn three_square_decompose(
    m: u64,
    config: &OracleConfig,
) -> Result<Option<Decomposition>, OracleError> {
    if m > config.decompose_max {
        return Err(OracleError::DecomposeBound {
            m: BigUint::from(m),
            max: config.decompose_max,
        });
    }
    Ok(search_decomposition(m))
}

fn search_decomposition(m: u64) -> Option<Decomposition> {
    let mut a = 0u64;
    while 3 * a * a <= m {
        let rest = m - a * a;
        let mut b = a;
        while 2 * b * b <= rest {
            let c2 = rest - b * b;
            let c = c2.isqrt();
            if c * c == c2 {
                return Some(Decomposition { a, b, c });
            }
            b += 1;
        }
        a += 1;
    }
    None
}

/// Brute-force counts for one odd residue class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub class: u64,
    /// `A_{i,k}(n)` for `k = 0..=bitlen(n)`; all later terms vanish
    pub a_ik: Vec<u64>,
    pub a_i: u64,
    /// `Z_i mod 8 = i^{A_i} mod 8`
    pub z_i: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceCounts {
    pub n: u64,
    /// in the order 1, 3, 5, 7
    pub classes: Vec<ClassCounts>,
}

impl CongruenceCounts {
    pub fn class(&self, class: OddClass) -> &ClassCounts {
        &self.classes[OddClass::ALL.iter().position(|&c| c == class).unwrap()]
    }

    /// `Π Z_i mod 8`, the residue of the odd part of `n!`.
    pub fn odd_part_mod8(&self) -> u8 {
        self.classes.iter().fold(1u8, |acc, c| (acc * c.z_i) % 8)
    }
}

pub fn congruence_counts(n: u64) -> CongruenceCounts {
    let bit_len = 64 - n.leading_zeros();
    let classes = OddClass::ALL
        .iter()
        .map(|&class| {
            let a_ik = (0..=bit_len).map(|k| count_a_ik(n, class, k)).collect();
            let a_i = total_a_i(n, class);
            let z_i = if a_i.is_multiple_of(2) {
                1
            } else {
                class.value() as u8
            };
            ClassCounts {
                class: class.value(),
                a_ik,
                a_i,
                z_i,
            }
        })
        .collect();
    CongruenceCounts { n, classes }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Lemma {
    /// `A_i(n) = Σ_k A_{i,k}(n)`
    SumOverScales,
    /// `A_{i,k}(n) ≡ a_{k+3} + [window_k ≥ i] (mod 2)`
    ScaleParity,
    /// `A_i(n) ≡ Σ_k a_{k+3} + #{k : window_k ≥ i} (mod 2)`
    TotalParity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub lemma: Lemma,
    pub n: u64,
    pub class: u64,
    pub k: Option<u32>,
    pub predicted: u64,
    pub actual: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub n_max: u64,
    pub checks: u64,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three counting identities for one `n`, appending to `report`.
pub fn check_lemmas_at(n: u64, report: &mut LemmaReport) {
    let bits = BitString::from_u64(n);
    let bit_len = bits.bit_len() as u32;
    let high_digit_sum: u64 = (3..bits.bit_len()).filter(|&k| bits.digit(k)).count() as u64;

    for class in OddClass::ALL {
        let i = class.value();
        let total = total_a_i(n, class);
        let mut scale_sum = 0;
        let mut windows_at_least_i = 0;
        for k in 0..=bit_len {
            let count = count_a_ik(n, class, k);
            scale_sum += count;
            let above = u64::from(window_value(&bits, k as usize)) >= i;
            windows_at_least_i += u64::from(above);
            let predicted = (u64::from(bits.digit(k as usize + 3)) + u64::from(above)) % 2;
            report.checks += 1;
            if count % 2 != predicted {
                report.violations.push(LemmaViolation {
                    lemma: Lemma::ScaleParity,
                    n,
                    class: i,
                    k: Some(k),
                    predicted,
                    actual: count % 2,
                });
            }
        }
        report.checks += 2;
        if scale_sum != total {
            report.violations.push(LemmaViolation {
                lemma: Lemma::SumOverScales,
                n,
                class: i,
                k: None,
                predicted: scale_sum,
                actual: total,
            });
        }
        let predicted = (high_digit_sum + windows_at_least_i) % 2;
        if total % 2 != predicted {
            report.violations.push(LemmaViolation {
                lemma: Lemma::TotalParity,
                n,
                class: i,
                k: None,
                predicted,
                actual: total % 2,
            });
        }
    }
}

/// Runs [`check_lemmas_at`] for every `n` in `0..=n_max`.
pub fn verify_lemmas(n_max: u64) -> LemmaReport {
    let mut report = LemmaReport {
        n_max,
        ..LemmaReport::default()
    };
    for n in 0..=n_max {
        check_lemmas_at(n, &mut report);
    }
    report
}
