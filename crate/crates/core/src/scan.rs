//! Residue distribution over a range of `n`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::automata::{build_product_machine, MachineVariant, MooreMachine};
use crate::classifier::{classify_u64, Residue8};

/// Which route computes the residue for each `n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Engine {
    /// closed form over the digits
    Formula,
    /// product Moore machine
    #[default]
    Automaton,
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "formula" => Ok(Self::Formula),
            "automaton" => Ok(Self::Automaton),
            other => Err(format!("unknown engine {other:?}")),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Formula => "formula",
            Self::Automaton => "automaton",
        })
    }
}

/// Per-residue counts over `lo..=hi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub lo: u64,
    pub hi: u64,
    /// indexed like [`Residue8::ALL`]
    pub counts: [u64; 6],
}

impl ScanReport {
    pub fn empty(lo: u64, hi: u64) -> Self {
        Self {
            lo,
            hi,
            counts: [0; 6],
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn count(&self, residue: Residue8) -> u64 {
        self.counts[residue.index()]
    }

    pub fn rejected_count(&self) -> u64 {
        self.count(Residue8::SEVEN)
    }

    /// Proportion rendered with six decimals.
    pub fn proportion(&self, residue: Residue8) -> String {
        let total = self.total();
        if total == 0 {
            return format!("{:.6}", 0.0);
        }
        format!("{:.6}", self.count(residue) as f64 / total as f64)
    }

    /// Combines reports over adjacent ranges, `self` first.
    pub fn merge(mut self, other: &ScanReport) -> ScanReport {
        assert_eq!(
            self.hi.checked_add(1),
            Some(other.lo),
            "merged ranges must be adjacent"
        );
        self.hi = other.hi;
        for (mine, theirs) in self.counts.iter_mut().zip(other.counts) {
            *mine += theirs;
        }
        self
    }
}

/// Classifies every `n` in `lo..=hi`.
pub fn scan_range(lo: u64, hi: u64, engine: Engine) -> ScanReport {
    match engine {
        Engine::Formula => tally(lo, hi, |n| classify_u64(n).z_mod8),
        Engine::Automaton => {
            scan_with_machine(lo, hi, &build_product_machine(MachineVariant::Paper))
        }
    }
}

/// Same as the automaton engine of [`scan_range`], for a caller-supplied machine.
pub fn scan_with_machine(lo: u64, hi: u64, machine: &MooreMachine<Residue8>) -> ScanReport {
    tally(lo, hi, |n| machine.run_u64(n))
}

fn tally(lo: u64, hi: u64, residue: impl Fn(u64) -> Residue8) -> ScanReport {
    let mut report = ScanReport::empty(lo, hi);
    for n in lo..=hi {
        report.counts[residue(n).index()] += 1;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point() {
        let r = scan_range(1, 1, Engine::Formula);
        assert_eq!(r.counts, [1, 0, 0, 0, 0, 0]);
        assert_eq!(r.proportion(Residue8::ONE), "1.000000");
    }

    #[test]
    fn engines_agree_on_small_range() {
        assert_eq!(
            scan_range(0, 5000, Engine::Formula),
            scan_range(0, 5000, Engine::Automaton)
        );
    }

    #[test]
    fn merge_is_partition_independent() {
        let whole = scan_range(1, 3000, Engine::Automaton);
        let merged = scan_range(1, 1234, Engine::Automaton)
            .merge(&scan_range(1235, 2000, Engine::Formula))
            .merge(&scan_range(2001, 3000, Engine::Automaton));
        assert_eq!(whole, merged);
        assert_eq!(whole.total(), 3000);
    }

    #[test]
    #[should_panic]
    fn merge_rejects_gaps() {
        let _ = scan_range(1, 10, Engine::Formula).merge(&scan_range(12, 20, Engine::Formula));
    }
}
