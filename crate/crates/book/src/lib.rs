//! Compiles the guide's Rust listings as doc-tests.
//!
//! Each chapter gets its own module so a failing listing points at its
//! chapter. `cargo test -p trisquare-book --doc` runs them all.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/windows.md")]
pub mod windows {}
#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}
#[doc = include_str!("../../../book/src/automata.md")]
pub mod automata {}
#[doc = include_str!("../../../book/src/distribution.md")]
pub mod distribution {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
