//! Decide whether `n!` can be written as a sum of three squares.
//!
//! Writing `n! = 4^x · Z` with `Z mod 8 ∈ {1, 2, 3, 5, 6, 7}`, the residue of
//! `Z` depends only on three parities read off the binary digits of `n`:
//!
//! * `γ̄`, the parity of the 2-adic valuation of `n!`,
//! * the parity of `α₃`, the number of 3-bit windows with value 3 or 4,
//! * the parity of `α₅`, the number of 3-bit windows with value 5 or 6.
//!
//! `n!` is a sum of three squares exactly when `Z mod 8 ≠ 7`.
//!
//! The crate has two independent routes to the verdict, [`classifier`]
//! (closed form over a [`BitString`]) and [`automata`] (a Moore machine fed
//! the digits least significant first), plus an exact big-integer
//! [`oracle`] used to check both.
//!
//! ```
//! use trisquare::{classify, BitString, Residue8};
//!
//! let verdict = classify(&BitString::from_u64(10));
//! assert_eq!(verdict.z_mod8, Residue8::SEVEN);
//! assert!(!verdict.representable);
//! ```

pub mod automata;
pub mod bits;
pub mod classifier;
pub mod families;
pub mod oracle;
pub mod scan;

pub use automata::{MachineVariant, MooreMachine};
pub use bits::{BitString, ParseBitsError};
pub use classifier::{
    classify, gamma_exact, gamma_parity, residue_for_parities, window_profile, window_value,
    Residue8, Verdict, WindowProfile,
};
pub use scan::{Engine, ScanReport};
