//! The γ-parity, α₃-parity and α₅-parity machines and their product.
//!
//! The α machines keep a register `(x, y, z)`: `x` is the running parity, `y`
//! the last digit read and `z` the one before it. The published transition
//! tables only describe the steady state, so every machine here opens with
//! an explicit initialization layer that reads `a₀` and `a₁` before handing
//! over to the register. Missing digits are zeros, so inputs shorter than two
//! digits simply stop inside that layer.
//!
//! Two variants exist for the α machines:
//!
//! * [`MachineVariant::Paper`] uses the published on-1 tables verbatim (and
//!   `(x, y, z) --0--> (x, 0, y)`). The α₃ table effectively counts each run
//!   of two or more ones at its low end rather than where the `{3, 4}` window
//!   completes. The two tallies differ only for a run that starts at bit 0,
//!   so the initialization seeds the parity with `a₀ ∧ a₁`.
//! * [`MachineVariant::Direct`] flips `x` whenever the window completed by the
//!   new digit, `z + 2y + 4b`, lies in the counted set. For α₃ the window
//!   `(1, 1, 0)` just below the top is closed only by the implicit leading
//!   zero, so the output is `x ⊕ (y ∧ z)`.
//!
//! Both variants are exactly equivalent; the test suite proves it by
//! pair reachability.

use crate::classifier::{residue_for_parities, Residue8};

use super::MooreMachine;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MachineVariant {
    Paper,
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Phase<S> {
    Empty,
    One(bool),
    Main(S),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Register {
    x: bool,
    y: bool,
    z: bool,
}

impl Register {
    const fn new(x: u8, y: u8, z: u8) -> Self {
        Self {
            x: x == 1,
            y: y == 1,
            z: z == 1,
        }
    }

    fn index(self) -> usize {
        (usize::from(self.x) << 2) | (usize::from(self.y) << 1) | usize::from(self.z)
    }
}

/// `(s_{x,y,z}, 1) → …`, indexed by `x y z` read as a binary number.
const ALPHA3_ON_ONE: [Register; 8] = [
    Register::new(1, 1, 0), // s_{0,0,0}
    Register::new(0, 1, 0), // s_{0,0,1}
    Register::new(1, 1, 1), // s_{0,1,0}
    Register::new(0, 1, 1), // s_{0,1,1}
    Register::new(0, 1, 0), // s_{1,0,0}
    Register::new(1, 1, 0), // s_{1,0,1}
    Register::new(0, 1, 1), // s_{1,1,0}
    Register::new(1, 1, 1), // s_{1,1,1}
];

/// `(t_{x,y,z}, 1) → …`, same indexing.
const ALPHA5_ON_ONE: [Register; 8] = [
    Register::new(0, 1, 0), // t_{0,0,0}
    Register::new(1, 1, 0), // t_{0,0,1}
    Register::new(1, 1, 1), // t_{0,1,0}
    Register::new(0, 1, 1), // t_{0,1,1}
    Register::new(1, 1, 0), // t_{1,0,0}
    Register::new(0, 1, 0), // t_{1,0,1}
    Register::new(0, 1, 1), // t_{1,1,0}
    Register::new(1, 1, 1), // t_{1,1,1}
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Component {
    Alpha3,
    Alpha5,
}

impl Component {
    fn prefix(self) -> char {
        match self {
            Component::Alpha3 => 's',
            Component::Alpha5 => 't',
        }
    }

    fn counts(self, window: u8) -> bool {
        match self {
            Component::Alpha3 => matches!(window, 3 | 4),
            Component::Alpha5 => matches!(window, 5 | 6),
        }
    }

    /// Parity register value right after `a₀, a₁` have been read.
    fn initial_parity(self, variant: MachineVariant, a0: bool, a1: bool) -> bool {
        match (self, variant) {
            (Component::Alpha3, MachineVariant::Paper) => a0 && a1,
            _ => false,
        }
    }

    fn step(self, variant: MachineVariant, r: Register, digit: bool) -> Register {
        match variant {
            MachineVariant::Paper => {
                if !digit {
                    return Register {
                        x: r.x,
                        y: false,
                        z: r.y,
                    };
                }
                match self {
                    Component::Alpha3 => ALPHA3_ON_ONE[r.index()],
                    Component::Alpha5 => ALPHA5_ON_ONE[r.index()],
                }
            }
            MachineVariant::Direct => {
                let window = u8::from(r.z) | (u8::from(r.y) << 1) | (u8::from(digit) << 2);
                Register {
                    x: r.x ^ self.counts(window),
                    y: digit,
                    z: r.y,
                }
            }
        }
    }

    fn output(self, variant: MachineVariant, r: Register) -> bool {
        match (self, variant) {
            (Component::Alpha3, MachineVariant::Direct) => r.x ^ (r.y && r.z),
            _ => r.x,
        }
    }
}

fn bit(b: bool) -> u8 {
    u8::from(b)
}

fn component_machine(component: Component, variant: MachineVariant) -> MooreMachine<u8> {
    let p = component.prefix();
    MooreMachine::explore(
        Phase::Empty,
        |state, digit| match *state {
            Phase::Empty => Phase::One(digit),
            Phase::One(a0) => Phase::Main(Register {
                x: component.initial_parity(variant, a0, digit),
                y: digit,
                z: a0,
            }),
            Phase::Main(r) => Phase::Main(component.step(variant, r, digit)),
        },
        |state| match *state {
            Phase::Main(r) => bit(component.output(variant, r)),
            _ => 0,
        },
        |state| match *state {
            Phase::Empty => format!("{p}_start"),
            Phase::One(a0) => format!("{p}_a0={}", bit(a0)),
            Phase::Main(r) => format!("{p}_{{{},{},{}}}", bit(r.x), bit(r.y), bit(r.z)),
        },
    )
}

/// Parity of the 2-adic valuation of `n!`.
///
/// A dedicated start state moves to `g_0` on either first digit (`a₀` never
/// contributes); afterwards each `1` flips between `g_0` and `g_1`.
pub fn build_gamma_machine() -> MooreMachine<u8> {
    MooreMachine::explore(
        None::<bool>,
        |state, digit| match *state {
            None => Some(false),
            Some(g) => Some(g ^ digit),
        },
        |state| bit(state.unwrap_or(false)),
        |state| match *state {
            None => "start".to_owned(),
            Some(g) => format!("g_{}", bit(g)),
        },
    )
}

/// Parity of `α₃(n)`, the number of windows with value 3 or 4.
pub fn build_alpha3_machine(variant: MachineVariant) -> MooreMachine<u8> {
    component_machine(Component::Alpha3, variant)
}

/// Parity of `α₅(n)`, the number of windows with value 5 or 6.
pub fn build_alpha5_machine(variant: MachineVariant) -> MooreMachine<u8> {
    component_machine(Component::Alpha5, variant)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct ProductState {
    gamma: bool,
    x3: bool,
    x5: bool,
    y: bool,
    z: bool,
}

/// Synchronous product of the three parity machines, emitting `Z mod 8`.
///
/// The digit history `(y, z)` is shared by both α components, so the main
/// layer has at most 32 states; three more states handle initialization.
pub fn build_product_machine(variant: MachineVariant) -> MooreMachine<Residue8> {
    let a3 = Component::Alpha3;
    let a5 = Component::Alpha5;
    let reg = |x, s: &ProductState| Register { x, y: s.y, z: s.z };
    MooreMachine::explore(
        Phase::Empty,
        |state, digit| match *state {
            Phase::Empty => Phase::One(digit),
            Phase::One(a0) => Phase::Main(ProductState {
                gamma: digit,
                x3: a3.initial_parity(variant, a0, digit),
                x5: a5.initial_parity(variant, a0, digit),
                y: digit,
                z: a0,
            }),
            Phase::Main(s) => {
                let r3 = a3.step(variant, reg(s.x3, &s), digit);
                let r5 = a5.step(variant, reg(s.x5, &s), digit);
                debug_assert_eq!((r3.y, r3.z), (r5.y, r5.z));
                Phase::Main(ProductState {
                    gamma: s.gamma ^ digit,
                    x3: r3.x,
                    x5: r5.x,
                    y: r3.y,
                    z: r3.z,
                })
            }
        },
        |state| match *state {
            Phase::Main(s) => residue_for_parities(
                s.gamma,
                a3.output(variant, reg(s.x3, &s)),
                a5.output(variant, reg(s.x5, &s)),
            ),
            _ => Residue8::ONE,
        },
        |state| match *state {
            Phase::Empty => "p_start".to_owned(),
            Phase::One(a0) => format!("p_a0={}", bit(a0)),
            Phase::Main(s) => format!(
                "p_{{{},{},{},{},{}}}",
                bit(s.gamma),
                bit(s.x3),
                bit(s.x5),
                bit(s.y),
                bit(s.z)
            ),
        },
    )
}
