//! The verification harness behind `trisquare verify`.
//!
//! Each stage produces named checks; a failing check carries a witness
//! (`n`, expected, actual, engine). The stages are:
//!
//! * automata: exact equivalence of the machine variants and of minimization
//! * scan: every machine against the formula for `0..=scan_max`
//! * random: the same on random digit strings up to 256 digits
//! * table: the published residue distribution for the first million `n`
//! * remark: the explicit families and the closure properties
//! * oracle: formula and product against exact factorials for `n ≤ oracle_max`
//! * lemmas: the counting identities for `n ≤ min(oracle_max, 10^4)`

use std::fmt::Write as _;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use trisquare::automata::{
    build_alpha3_machine, build_alpha5_machine, build_gamma_machine, build_product_machine,
    distinguishing_input, minimize, run_machine, MachineOutput, MachineVariant, MooreMachine,
};
use trisquare::classifier::classify_u64;
use trisquare::families::{family_1010, family_1100, pow2_plus_w_expected};
use trisquare::oracle::{factorials, shape_of, three_square_representable_exact, verify_lemmas};
use trisquare::scan::scan_with_machine;
use trisquare::{classify, gamma_parity, window_profile, BitString, Residue8};

use crate::{Outcome, EXIT_MISMATCH, EXIT_OK};

/// Published residue counts for a million consecutive `n`, residues 1, 2, 3, 5, 6, 7.
pub const TABLE_COUNTS: [u64; 6] = [124_967, 249_445, 124_968, 125_032, 250_556, 125_032];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub oracle_max: u64,
    pub scan_max: u64,
    pub random_cases: usize,
    pub random_max_len: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            oracle_max: 2000,
            scan_max: 1_000_000,
            random_cases: 10_000,
            random_max_len: 256,
            seed: 0x5eed,
        }
    }
}

/// Machines under test. Swapping one out is how faulty fixtures are checked.
#[derive(Clone, Debug)]
pub struct MachineSet {
    pub gamma: MooreMachine<u8>,
    pub alpha3_paper: MooreMachine<u8>,
    pub alpha3_direct: MooreMachine<u8>,
    pub alpha5_paper: MooreMachine<u8>,
    pub alpha5_direct: MooreMachine<u8>,
    pub product_paper: MooreMachine<Residue8>,
    pub product_direct: MooreMachine<Residue8>,
}

impl MachineSet {
    pub fn standard() -> Self {
        Self {
            gamma: build_gamma_machine(),
            alpha3_paper: build_alpha3_machine(MachineVariant::Paper),
            alpha3_direct: build_alpha3_machine(MachineVariant::Direct),
            alpha5_paper: build_alpha5_machine(MachineVariant::Paper),
            alpha5_direct: build_alpha5_machine(MachineVariant::Direct),
            product_paper: build_product_machine(MachineVariant::Paper),
            product_direct: build_product_machine(MachineVariant::Direct),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub stage: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(
        &mut self,
        stage: &'static str,
        name: impl Into<String>,
        result: Result<String, String>,
    ) {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            stage,
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{} [{}] {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.stage,
                c.name,
                c.detail
            );
        }
        out
    }
}

fn witness_text(digits: &[bool]) -> String {
    let b = BitString::from_lsb_digits(digits.iter().copied());
    let lsb: String = digits.iter().map(|&d| if d { '1' } else { '0' }).collect();
    format!("n={b} (input LSB-first \"{lsb}\", {} digits)", digits.len())
}

fn equivalence<O: MachineOutput>(
    left: &MooreMachine<O>,
    right: &MooreMachine<O>,
) -> Result<String, String> {
    match distinguishing_input(left, right) {
        None => Ok(format!(
            "equivalent ({} vs {} states)",
            left.state_count(),
            right.state_count()
        )),
        Some(w) => Err(format!(
            "shortest counterexample {}: expected {}, actual {}",
            witness_text(&w),
            left.run(w.iter().copied()),
            right.run(w.iter().copied())
        )),
    }
}

fn stage_automata(report: &mut VerifyReport, m: &MachineSet) {
    report.push(
        "automata",
        "alpha3 paper = direct",
        equivalence(&m.alpha3_direct, &m.alpha3_paper),
    );
    report.push(
        "automata",
        "alpha5 paper = direct",
        equivalence(&m.alpha5_direct, &m.alpha5_paper),
    );
    report.push(
        "automata",
        "product paper = direct",
        equivalence(&m.product_direct, &m.product_paper),
    );
    for (name, p) in [("paper", &m.product_paper), ("direct", &m.product_direct)] {
        let min = minimize(p);
        report.push(
            "automata",
            format!("minimize(product {name}) = product {name}"),
            equivalence(p, &min),
        );
        let again = minimize(&min);
        report.push(
            "automata",
            format!("minimize idempotent (product {name})"),
            if again == min {
                Ok(format!("{} states", min.state_count()))
            } else {
                Err(format!(
                    "{} states, then {}",
                    min.state_count(),
                    again.state_count()
                ))
            },
        );
    }
}

/// Expected component outputs for one digit string, from the formulas.
struct Expected {
    gamma: u8,
    alpha3: u8,
    alpha5: u8,
    z: Residue8,
}

impl Expected {
    fn of(digits: &[bool]) -> Self {
        let p = window_profile(digits);
        Self {
            gamma: u8::from(gamma_parity(digits)),
            alpha3: (p.alpha3 % 2) as u8,
            alpha5: (p.alpha5 % 2) as u8,
            z: classify(digits).z_mod8,
        }
    }
}

/// First disagreement between the machines and the formulas on `digits`.
fn machine_mismatch(m: &MachineSet, digits: &[bool]) -> Option<String> {
    let e = Expected::of(digits);
    let parity = [
        ("gamma", &m.gamma, e.gamma),
        ("alpha3 paper", &m.alpha3_paper, e.alpha3),
        ("alpha3 direct", &m.alpha3_direct, e.alpha3),
        ("alpha5 paper", &m.alpha5_paper, e.alpha5),
        ("alpha5 direct", &m.alpha5_direct, e.alpha5),
    ];
    for (engine, machine, expected) in parity {
        let actual = run_machine(machine, digits);
        if actual != expected {
            return Some(format!(
                "{}: expected {expected}, actual {actual}, engine {engine}",
                witness_text(digits)
            ));
        }
    }
    for (engine, machine) in [
        ("product paper", &m.product_paper),
        ("product direct", &m.product_direct),
    ] {
        let actual = run_machine(machine, digits);
        if actual != e.z {
            return Some(format!(
                "{}: expected {}, actual {actual}, engine {engine}",
                witness_text(digits),
                e.z
            ));
        }
    }
    None
}

fn stage_scan(report: &mut VerifyReport, m: &MachineSet, scan_max: u64) {
    let first_bad = (0..=scan_max)
        .into_par_iter()
        .find_map_first(|n| machine_mismatch(m, BitString::from_u64(n).digits()));
    report.push(
        "scan",
        format!("all machines = formula for n <= {scan_max}"),
        match first_bad {
            None => Ok(format!("{} values", scan_max + 1)),
            Some(w) => Err(w),
        },
    );
}

fn stage_random(report: &mut VerifyReport, m: &MachineSet, cfg: &VerifyConfig) {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let inputs: Vec<Vec<bool>> = (0..cfg.random_cases)
        .map(|_| {
            let len = rng.gen_range(0..=cfg.random_max_len);
            (0..len).map(|_| rng.gen()).collect()
        })
        .collect();
    let first_bad = inputs.par_iter().find_map_first(|d| machine_mismatch(m, d));
    report.push(
        "random",
        format!(
            "all machines = formula on {} random inputs (<= {} digits)",
            cfg.random_cases, cfg.random_max_len
        ),
        match first_bad {
            None => Ok(format!("seed {:#x}", cfg.seed)),
            Some(w) => Err(w),
        },
    );
}

fn stage_table(report: &mut VerifyReport, m: &MachineSet, scan_max: u64) {
    const MILLION: u64 = 1_000_000;
    if scan_max < MILLION {
        report.push(
            "table",
            "residue distribution",
            Ok(format!("skipped (scan-max {scan_max} < {MILLION})")),
        );
        return;
    }
    let candidates = [(1, MILLION), (0, MILLION - 1)];
    let mut seen = Vec::new();
    for (lo, hi) in candidates {
        let r = scan_with_machine(lo, hi, &m.product_paper);
        if r.counts == TABLE_COUNTS {
            report.push(
                "table",
                "residue distribution",
                Ok(format!("exact match on n in [{lo}, {hi}]")),
            );
            return;
        }
        seen.push(format!("[{lo}, {hi}] gave {:?}", r.counts));
    }
    report.push(
        "table",
        "residue distribution",
        Err(format!("expected {TABLE_COUNTS:?}; {}", seen.join("; "))),
    );
}

fn stage_remark(report: &mut VerifyReport) {
    let bad_1010 = (1..=50).find(|&k| !classify(&family_1010(k)).z_mod8.is_rejecting());
    let bad_1100 = (0..=25).find(|&k| !classify(&family_1100(k)).z_mod8.is_rejecting());
    report.push(
        "remark",
        "families (1010)^k and (1100)^(2k+1) have residue 7",
        match (bad_1010, bad_1100) {
            (None, None) => Ok("k <= 50 and k <= 25".into()),
            (Some(k), _) => Err(format!(
                "(1010)^{k}: residue {}",
                classify(&family_1010(k)).z_mod8
            )),
            (_, Some(k)) => Err(format!(
                "(1100)^(2*{k}+1): residue {}",
                classify(&family_1100(k)).z_mod8
            )),
        },
    );

    let bad_pow2 = (5..=30u32)
        .flat_map(|k| (0..8u8).map(move |w| (k, w)))
        .find(|&(k, w)| classify_u64((1 << k) + u64::from(w)).z_mod8 != pow2_plus_w_expected(w));
    report.push(
        "remark",
        "2^k + w table",
        match bad_pow2 {
            None => Ok("5 <= k <= 30, 0 <= w < 8".into()),
            Some((k, w)) => Err(format!(
                "n=2^{k}+{w}: expected {}, actual {}",
                pow2_plus_w_expected(w),
                classify_u64((1 << k) + u64::from(w)).z_mod8
            )),
        },
    );

    let bad_double = (0..=100_000u64)
        .step_by(4)
        .find(|&n| classify_u64(n).z_mod8 != classify_u64(2 * n).z_mod8);
    report.push(
        "remark",
        "doubling invariance",
        bad_double.map_or(Ok("4 | n <= 100000".into()), |n| Err(format!("n={n}"))),
    );

    let bad_prefix = (1..=10_000u64).find(|&n| {
        let r = 63 - u64::from(n.leading_zeros());
        classify_u64(n).z_mod8 != classify_u64(n + (36 << (r + 1))).z_mod8
    });
    report.push(
        "remark",
        "prefix (100100) invariance",
        bad_prefix.map_or(Ok("1 <= n <= 10000".into()), |n| Err(format!("n={n}"))),
    );
}

fn stage_oracle(report: &mut VerifyReport, m: &MachineSet, oracle_max: u64) {
    let mut failure = None;
    for (n, f) in factorials().take_while(|(n, _)| *n <= oracle_max) {
        let shape = shape_of(&f).expect("factorials are positive");
        let verdict = classify_u64(n);
        let machine = m.product_paper.run_u64(n);
        let legendre = three_square_representable_exact(&f);
        let problem = if shape.gamma != verdict.gamma_exact.unwrap_or(u64::MAX) {
            Some(format!(
                "gamma expected {}, actual {:?}, engine formula",
                shape.gamma, verdict.gamma_exact
            ))
        } else if shape.z_mod8 != verdict.z_mod8 {
            Some(format!(
                "z expected {}, actual {}, engine formula",
                shape.z_mod8, verdict.z_mod8
            ))
        } else if shape.z_mod8 != machine {
            Some(format!(
                "z expected {}, actual {machine}, engine automaton",
                shape.z_mod8
            ))
        } else if legendre != verdict.representable {
            Some(format!(
                "representable expected {legendre}, actual {}, engine formula",
                verdict.representable
            ))
        } else {
            None
        };
        if let Some(p) = problem {
            failure = Some(format!("n={n}: {p}"));
            break;
        }
    }
    report.push(
        "oracle",
        format!("formula = automaton = exact n! for n <= {oracle_max}"),
        failure.map_or(Ok(format!("{} factorials", oracle_max + 1)), Err),
    );
}

fn stage_lemmas(report: &mut VerifyReport, oracle_max: u64) {
    let n_max = oracle_max.min(10_000);
    let lemmas = verify_lemmas(n_max);
    report.push(
        "lemmas",
        format!("counting identities for n <= {n_max}"),
        match lemmas.violations.first() {
            None => Ok(format!("{} checks", lemmas.checks)),
            Some(v) => Err(format!(
                "{} violations, first {:?} at n={} i={} k={:?}: predicted {}, actual {}",
                lemmas.violations.len(),
                v.lemma,
                v.n,
                v.class,
                v.k,
                v.predicted,
                v.actual
            )),
        },
    );
}

pub fn run_verify(cfg: &VerifyConfig, machines: &MachineSet) -> VerifyReport {
    let mut report = VerifyReport::default();
    stage_automata(&mut report, machines);
    stage_scan(&mut report, machines, cfg.scan_max);
    stage_random(&mut report, machines, cfg);
    stage_table(&mut report, machines, cfg.scan_max);
    stage_remark(&mut report);
    stage_oracle(&mut report, machines, cfg.oracle_max);
    stage_lemmas(&mut report, cfg.oracle_max);
    report
}

pub fn cmd_verify(cfg: &VerifyConfig, machines: &MachineSet) -> Outcome {
    let report = run_verify(cfg, machines);
    Outcome {
        stdout: report.render(),
        stderr: String::new(),
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        },
    }
}
