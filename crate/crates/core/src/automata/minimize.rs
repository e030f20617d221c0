use std::collections::HashMap;

use super::{MachineOutput, MooreMachine};

/// Output-preserving minimal machine by partition refinement.
///
/// Blocks start as output classes and split on `(block, block after 0,
/// block after 1)` until stable. Unreachable states are dropped first. The
/// result is renumbered breadth-first from the start, and a merged state is
/// labelled with its members' labels joined by `|`.
pub fn minimize<O: MachineOutput>(machine: &MooreMachine<O>) -> MooreMachine<O> {
    let reachable = machine.reachable();
    let mut block = vec![usize::MAX; machine.state_count()];

    let mut seeds: HashMap<O, usize> = HashMap::new();
    for &s in &reachable {
        let next = seeds.len();
        block[s] = *seeds.entry(machine.output(s)).or_insert(next);
    }
    let mut block_count = seeds.len();

    loop {
        let mut signatures: HashMap<(usize, usize, usize), usize> = HashMap::new();
        let mut refined = vec![usize::MAX; machine.state_count()];
        for &s in &reachable {
            let key = (
                block[s],
                block[machine.step(s, false)],
                block[machine.step(s, true)],
            );
            let next = signatures.len();
            refined[s] = *signatures.entry(key).or_insert(next);
        }
        block = refined;
        if signatures.len() == block_count {
            break;
        }
        block_count = signatures.len();
    }

    let mut representative = vec![usize::MAX; block_count];
    let mut members: Vec<Vec<&str>> = vec![Vec::new(); block_count];
    for &s in &reachable {
        if representative[block[s]] == usize::MAX {
            representative[block[s]] = s;
        }
        members[block[s]].push(machine.label(s));
    }

    MooreMachine::explore(
        block[machine.start()],
        |&b, digit| block[machine.step(representative[b], digit)],
        |&b| machine.output(representative[b]),
        |&b| members[b].join("|"),
    )
}
