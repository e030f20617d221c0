//! DOT, JSON and CSV renderings. JSON doubles as the import format.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{MachineOutput, MooreMachine, State};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    Csv,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown export format {0:?} (expected dot, json or csv)")]
pub struct UnknownFormat(pub String);

impl FromStr for ExportFormat {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(Self::Dot),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(UnknownFormat(other.to_owned())),
        }
    }
}

#[derive(Debug, Error)]
pub enum ImportError {
    #[error("malformed machine json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("state at position {position} has id {id}; ids must be 0, 1, 2, ...")]
    StateId { position: usize, id: usize },
    #[error("state {id}: cannot parse output {output:?}")]
    Output { id: usize, output: String },
    #[error("transition ({from}, {input}) is missing, duplicated, or out of range")]
    Transition { from: usize, input: u8 },
    #[error("start state {0} does not exist")]
    Start(usize),
}

#[derive(Serialize, Deserialize)]
struct JsonState {
    id: usize,
    label: String,
    output: String,
}

#[derive(Serialize, Deserialize)]
struct JsonTransition {
    from: usize,
    input: u8,
    to: usize,
}

#[derive(Serialize, Deserialize)]
struct JsonMachine {
    states: Vec<JsonState>,
    start: usize,
    transitions: Vec<JsonTransition>,
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn export_machine<O: MachineOutput>(machine: &MooreMachine<O>, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(machine),
        ExportFormat::Json => to_json(machine),
        ExportFormat::Csv => to_csv(machine),
    }
}

fn to_dot<O: MachineOutput>(machine: &MooreMachine<O>) -> String {
    let mut out = String::from("digraph M {\n  rankdir=LR;\n  node [shape=circle];\n");
    for state in machine.states() {
        let shape = if state.output.is_rejecting() {
            ", shape=doublecircle"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  \"{}\" [xlabel=\"{}\"{shape}];",
            dot_escape(&state.label),
            state.output
        );
    }
    for from in 0..machine.state_count() {
        for digit in [false, true] {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                dot_escape(machine.label(from)),
                dot_escape(machine.label(machine.step(from, digit))),
                u8::from(digit)
            );
        }
    }
    out.push_str("}\n");
    out
}

fn to_json<O: MachineOutput>(machine: &MooreMachine<O>) -> String {
    let doc = JsonMachine {
        states: machine
            .states()
            .iter()
            .enumerate()
            .map(|(id, s)| JsonState {
                id,
                label: s.label.clone(),
                output: s.output.to_string(),
            })
            .collect(),
        start: machine.start(),
        transitions: (0..machine.state_count())
            .flat_map(|from| {
                [false, true].map(|digit| JsonTransition {
                    from,
                    input: u8::from(digit),
                    to: machine.step(from, digit),
                })
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("machine serializes");
    text.push('\n');
    text
}

fn to_csv<O: MachineOutput>(machine: &MooreMachine<O>) -> String {
    let mut out = String::from("from,input,to,from_output\n");
    for from in 0..machine.state_count() {
        for digit in [false, true] {
            let _ = writeln!(
                out,
                "{from},{},{},{}",
                u8::from(digit),
                machine.step(from, digit),
                machine.output(from)
            );
        }
    }
    out
}

/// Reads a machine back from its JSON export.
pub fn import_json<O: MachineOutput>(text: &str) -> Result<MooreMachine<O>, ImportError> {
    let doc: JsonMachine = serde_json::from_str(text)?;
    let n = doc.states.len();
    let mut states = Vec::with_capacity(n);
    for (position, s) in doc.states.into_iter().enumerate() {
        if s.id != position {
            return Err(ImportError::StateId { position, id: s.id });
        }
        let output = s.output.parse::<O>().map_err(|_| ImportError::Output {
            id: s.id,
            output: s.output.clone(),
        })?;
        states.push(State {
            label: s.label,
            output,
        });
    }
    if doc.start >= n {
        return Err(ImportError::Start(doc.start));
    }

    let mut table: Vec<[Option<usize>; 2]> = vec![[None, None]; n];
    for t in &doc.transitions {
        let bad = ImportError::Transition {
            from: t.from,
            input: t.input,
        };
        if t.from >= n || t.to >= n || t.input > 1 {
            return Err(bad);
        }
        let slot = &mut table[t.from][usize::from(t.input)];
        if slot.is_some() {
            return Err(bad);
        }
        *slot = Some(t.to);
    }
    let transitions = table
        .into_iter()
        .enumerate()
        .map(|(from, [zero, one])| match (zero, one) {
            (Some(z), Some(o)) => Ok([z, o]),
            (None, _) => Err(ImportError::Transition { from, input: 0 }),
            (_, None) => Err(ImportError::Transition { from, input: 1 }),
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(MooreMachine::from_parts(states, transitions, doc.start).expect("validated above"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{build_gamma_machine, build_product_machine, MachineVariant};
    use crate::classifier::Residue8;

    #[test]
    fn gamma_dot() {
        let dot = export_machine(&build_gamma_machine(), ExportFormat::Dot);
        let expected = "digraph M {
  rankdir=LR;
  node [shape=circle];
  \"start\" [xlabel=\"0\"];
  \"g_0\" [xlabel=\"0\"];
  \"g_1\" [xlabel=\"1\"];
  \"start\" -> \"g_0\" [label=\"0\"];
  \"start\" -> \"g_0\" [label=\"1\"];
  \"g_0\" -> \"g_0\" [label=\"0\"];
  \"g_0\" -> \"g_1\" [label=\"1\"];
  \"g_1\" -> \"g_1\" [label=\"0\"];
  \"g_1\" -> \"g_0\" [label=\"1\"];
}
";
        assert_eq!(dot, expected);
    }

    #[test]
    fn product_dot_marks_rejecting_states() {
        let m = build_product_machine(MachineVariant::Paper);
        let dot = export_machine(&m, ExportFormat::Dot);
        let rejecting = m
            .states()
            .iter()
            .filter(|s| s.output.is_rejecting())
            .count();
        assert!(rejecting > 0);
        assert_eq!(dot.matches("shape=doublecircle").count(), rejecting);
    }

    #[test]
    fn csv_has_two_rows_per_state() {
        let m = build_gamma_machine();
        let csv = export_machine(&m, ExportFormat::Csv);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("from,input,to,from_output"));
        assert_eq!(lines.count(), 2 * m.state_count());
        assert!(csv.contains("\n2,1,1,1\n"));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let m = build_product_machine(MachineVariant::Direct);
        let text = export_machine(&m, ExportFormat::Json);
        let back: MooreMachine<Residue8> = import_json(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(export_machine(&back, ExportFormat::Json), text);
    }

    #[test]
    fn json_import_errors() {
        let m = build_gamma_machine();
        let text = export_machine(&m, ExportFormat::Json);
        let missing_edge = text.replacen("\"to\": 1\n", "\"to\": 9\n", 1);
        assert!(matches!(
            import_json::<u8>(&missing_edge),
            Err(ImportError::Transition { .. })
        ));
        let bad_start = text.replace("\"start\": 0", "\"start\": 7");
        assert!(matches!(
            import_json::<u8>(&bad_start),
            Err(ImportError::Start(7))
        ));
        assert!(matches!(
            import_json::<Residue8>(&text),
            Err(ImportError::Output { .. })
        ));
        assert!(matches!(import_json::<u8>("{"), Err(ImportError::Json(_))));
    }

    #[test]
    fn format_names() {
        assert_eq!("dot".parse(), Ok(ExportFormat::Dot));
        assert_eq!("csv".parse(), Ok(ExportFormat::Csv));
        assert!("svg".parse::<ExportFormat>().is_err());
    }
}
