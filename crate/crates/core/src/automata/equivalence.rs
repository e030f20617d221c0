use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use super::{MachineOutput, MooreMachine};

/// Shortest input (LSB-first, ties broken toward digit 0) on which the two
/// machines produce different outputs, or `None` if they are equivalent.
///
/// Breadth-first search over reachable state pairs; exact, not sampled.
type Pair = (usize, usize);

pub fn distinguishing_input<O: MachineOutput>(
    left: &MooreMachine<O>,
    right: &MooreMachine<O>,
) -> Option<Vec<bool>> {
    let origin = (left.start(), right.start());
    let mut parent: HashMap<Pair, Option<(Pair, bool)>> = HashMap::new();
    parent.insert(origin, None);
    let mut queue = VecDeque::from([origin]);

    while let Some(pair) = queue.pop_front() {
        if left.output(pair.0) != right.output(pair.1) {
            let mut input = Vec::new();
            let mut cursor = pair;
            while let Some(&Some((prev, digit))) = parent.get(&cursor) {
                input.push(digit);
                cursor = prev;
            }
            input.reverse();
            return Some(input);
        }
        for digit in [false, true] {
            let next = (left.step(pair.0, digit), right.step(pair.1, digit));
            if let Entry::Vacant(slot) = parent.entry(next) {
                slot.insert(Some((pair, digit)));
                queue.push_back(next);
            }
        }
    }
    None
}

pub fn machines_equivalent<O: MachineOutput>(
    left: &MooreMachine<O>,
    right: &MooreMachine<O>,
) -> bool {
    distinguishing_input(left, right).is_none()
}
