//! Moore machines over the binary alphabet, fed digits least significant
//! first.
//!
//! Machines are built by exploring a structured state space breadth-first
//! from the start state (digit 0 before digit 1), so every machine is trimmed
//! and numbered canonically by construction.

mod equivalence;
mod export;
mod machines;
mod minimize;

use std::collections::{HashMap, VecDeque};
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

pub use equivalence::{distinguishing_input, machines_equivalent};
pub use export::{export_machine, import_json, ExportFormat, ImportError};
pub use machines::{
    build_alpha3_machine, build_alpha5_machine, build_gamma_machine, build_product_machine,
    MachineVariant,
};
pub use minimize::minimize;

use crate::classifier::Residue8;

/// Output alphabet of a machine.
pub trait MachineOutput: Copy + Eq + Hash + Debug + Display + FromStr {
    /// Drawn as a double circle in DOT exports.
    fn is_rejecting(&self) -> bool {
        false
    }
}

/// Parity outputs are `0` or `1`.
impl MachineOutput for u8 {}

impl MachineOutput for Residue8 {
    fn is_rejecting(&self) -> bool {
        Residue8::is_rejecting(*self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct State<O> {
    pub label: String,
    pub output: O,
}

/// A total deterministic Moore machine over `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MooreMachine<O> {
    states: Vec<State<O>>,
    transitions: Vec<[usize; 2]>,
    start: usize,
}

impl<O: MachineOutput> MooreMachine<O> {
    /// Assembles a machine from raw tables, checking that every transition
    /// target and the start state exist.
    pub fn from_parts(
        states: Vec<State<O>>,
        transitions: Vec<[usize; 2]>,
        start: usize,
    ) -> Option<Self> {
        let n = states.len();
        if transitions.len() != n || start >= n {
            return None;
        }
        if transitions.iter().flatten().any(|&t| t >= n) {
            return None;
        }
        Some(Self {
            states,
            transitions,
            start,
        })
    }

    /// Breadth-first exploration of the states reachable from `start`.
    pub fn explore<K, S, F, L>(start: K, step: S, output: F, label: L) -> Self
    where
        K: Clone + Eq + Hash,
        S: Fn(&K, bool) -> K,
        F: Fn(&K) -> O,
        L: Fn(&K) -> String,
    {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let mut keys = vec![start.clone()];
        let mut queue = VecDeque::from([0usize]);
        ids.insert(start, 0);
        let mut transitions: Vec<[usize; 2]> = vec![[0, 0]];

        while let Some(id) = queue.pop_front() {
            for digit in [false, true] {
                let next = step(&keys[id], digit);
                let next_id = match ids.get(&next) {
                    Some(&existing) => existing,
                    None => {
                        let fresh = keys.len();
                        ids.insert(next.clone(), fresh);
                        keys.push(next);
                        transitions.push([0, 0]);
                        queue.push_back(fresh);
                        fresh
                    }
                };
                transitions[id][usize::from(digit)] = next_id;
            }
        }

        let states = keys
            .iter()
            .map(|k| State {
                label: label(k),
                output: output(k),
            })
            .collect();
        Self {
            states,
            transitions,
            start: 0,
        }
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn states(&self) -> &[State<O>] {
        &self.states
    }

    pub fn step(&self, state: usize, digit: bool) -> usize {
        self.transitions[state][usize::from(digit)]
    }

    pub fn output(&self, state: usize) -> O {
        self.states[state].output
    }

    pub fn label(&self, state: usize) -> &str {
        &self.states[state].label
    }

    /// Redirects one transition. Used to build faulty fixtures.
    pub fn set_transition(&mut self, state: usize, digit: bool, to: usize) {
        assert!(to < self.states.len(), "target state {to} out of range");
        self.transitions[state][usize::from(digit)] = to;
    }

    pub fn final_state<I: IntoIterator<Item = bool>>(&self, digits: I) -> usize {
        digits
            .into_iter()
            .fold(self.start, |state, digit| self.step(state, digit))
    }

    /// Output after consuming `digits` least significant first.
    pub fn run<I: IntoIterator<Item = bool>>(&self, digits: I) -> O {
        self.output(self.final_state(digits))
    }

    /// Runs the binary digits of a machine-size `n`.
    pub fn run_u64(&self, mut n: u64) -> O {
        let mut state = self.start;
        while n != 0 {
            state = self.step(state, n & 1 == 1);
            n >>= 1;
        }
        self.output(state)
    }

    /// States reachable from start, in BFS order.
    pub fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.states.len()];
        let mut order = vec![self.start];
        seen[self.start] = true;
        let mut i = 0;
        while i < order.len() {
            for digit in [false, true] {
                let t = self.step(order[i], digit);
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
            i += 1;
        }
        order
    }
}

/// Folds `digits` (LSB-first) through `machine` and returns the final output.
pub fn run_machine<O: MachineOutput, D: AsRef<[bool]> + ?Sized>(
    machine: &MooreMachine<O>,
    digits: &D,
) -> O {
    machine.run(digits.as_ref().iter().copied())
}
