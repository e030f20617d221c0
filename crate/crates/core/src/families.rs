//! Explicit infinite families with a known residue.

use crate::bits::BitString;
use crate::classifier::Residue8;

/// `(1010)₂` repeated `k` times, i.e. `2(16^k − 1)/3`. Always residue 7.
pub fn family_1010(k: usize) -> BitString {
    assert!(k >= 1, "family_1010 starts at k = 1");
    BitString::repeat_block(&[false, true, false, true], k)
}

/// `(1100)₂` repeated `2k + 1` times, i.e. `4(16^{2k+1} − 1)/5`. Always residue 7.
pub fn family_1100(k: usize) -> BitString {
    BitString::repeat_block(&[false, false, true, true], 2 * k + 1)
}

/// Residue of `(2^k + w)!` for any `k ≥ 5`.
pub fn pow2_plus_w_expected(w: u8) -> Residue8 {
    match w {
        3 | 4 => Residue8::ONE,
        7 => Residue8::TWO,
        2 => Residue8::THREE,
        5 => Residue8::FIVE,
        0 | 1 | 6 => Residue8::SIX,
        _ => panic!("w must lie in 0..8, got {w}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::classify;
    use num_bigint::BigUint;

    #[test]
    fn first_members() {
        assert_eq!(family_1010(1), BitString::from_u64(10));
        assert_eq!(family_1010(2), BitString::from_u64(170));
        assert_eq!(family_1100(0), BitString::from_u64(12));
        assert_eq!(family_1100(1), BitString::from_u64(12 * (1 + 16 + 256)));
    }

    #[test]
    fn closed_forms() {
        let sixteen = BigUint::from(16u32);
        for k in 1..40u32 {
            let expected = (sixteen.pow(k) - 1u32) * 2u32 / 3u32;
            assert_eq!(family_1010(k as usize).to_biguint(), expected);
        }
        for k in 0..20u32 {
            let expected = (sixteen.pow(2 * k + 1) - 1u32) * 4u32 / 5u32;
            assert_eq!(family_1100(k as usize).to_biguint(), expected);
        }
    }

    #[test]
    fn families_reject() {
        assert!(!classify(&family_1100(0)).representable);
        assert_eq!(classify(&family_1010(3)).z_mod8, Residue8::SEVEN);
    }

    #[test]
    fn table_values() {
        assert_eq!(pow2_plus_w_expected(2), Residue8::THREE);
        assert_eq!(pow2_plus_w_expected(7), Residue8::TWO);
        assert_eq!(pow2_plus_w_expected(0), Residue8::SIX);
    }

    #[test]
    #[should_panic]
    fn table_rejects_out_of_range() {
        pow2_plus_w_expected(8);
    }
}
