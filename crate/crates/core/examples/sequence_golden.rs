//! Prints every `n ≤ N` (default 200) whose factorial is not a sum of three
//! squares, decided from the exact value of `n!` alone.
//!
//! `cargo run -p trisquare --example sequence_golden -- 200`

use trisquare::oracle::{factorials, three_square_representable_exact};

fn main() {
    let max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("N must be a nonnegative integer"))
        .unwrap_or(200);
    for (n, f) in factorials().take_while(|(n, _)| *n <= max) {
        if n >= 1 && !three_square_representable_exact(&f) {
            println!("{n}");
        }
    }
}
