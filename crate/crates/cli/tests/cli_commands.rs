use std::process::Command;

use trisquare::automata::{build_product_machine, MachineVariant};
use trisquare::automata::{export_machine, import_json, machines_equivalent, ExportFormat};
use trisquare::oracle::OracleConfig;
use trisquare::{BitString, Engine, MooreMachine, Residue8};
use trisquare_cli::verify::{cmd_verify, MachineSet, VerifyConfig};
use trisquare_cli::{
    cmd_classify, cmd_decompose, cmd_export, cmd_scan, cmd_sequence, MachineArg, ReportFormat,
    EXIT_MISMATCH, EXIT_OK, EXIT_USAGE,
};

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_trisquare"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn quick_verify() -> VerifyConfig {
    VerifyConfig {
        oracle_max: 100,
        scan_max: 5000,
        random_cases: 200,
        ..VerifyConfig::default()
    }
}

#[test]
fn classify_outputs() {
    let (code, out, _) = bin(&["classify", "10"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("z_mod8=7 representable=false"), "{out}");

    let (_, eleven, _) = bin(&["classify", "11"]);
    let (_, binary, _) = bin(&["classify", "0b1011"]);
    assert_eq!(eleven, binary);

    let (_, one, _) = bin(&["classify", "1"]);
    assert!(one.contains("representable=true"));
}

#[test]
fn classify_json_schema() {
    let n: BitString = "0b1010".parse().unwrap();
    let out = cmd_classify(&n, true).stdout;
    assert_eq!(
        out,
        "{\"n\":\"10\",\"gamma_parity\":0,\"alpha3_parity\":0,\"alpha5_parity\":1,\"z_mod8\":7,\"representable\":false}\n"
    );
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let again: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
    assert_eq!(v["z_mod8"], 7);

    // far beyond u64: the n field stays exact
    let big = format!("0b1{}", "0".repeat(199));
    let out = cmd_classify(&big.parse().unwrap(), true).stdout;
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["n"].as_str().unwrap(),
        BitString::from_msb_str(&big[2..]).unwrap().to_string()
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["classify", "ten"][..],
        &["classify", "0b12"],
        &["scan"],
        &["scan", "--max", "5", "--engine", "quantum"],
        &["export", "--machine", "beta"],
        &["export", "--machine", "gamma", "--format", "svg"],
        &["decompose", "20"],
        &["scan", "--max", "3", "--min", "5"],
        &["frobnicate"],
    ] {
        let (code, _, err) = bin(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {err}");
    }
    let (_, _, err) = bin(&["decompose", "20"]);
    assert!(err.contains("classify"));
}

#[test]
fn scan_formats() {
    let r = cmd_scan(1, 1, Engine::Automaton, ReportFormat::Csv);
    assert_eq!(
        r.stdout,
        "residue,count,proportion\n1,1,1.000000\n2,0,0.000000\n3,0,0.000000\n5,0,0.000000\n6,0,0.000000\n7,0,0.000000\n"
    );
    let json = cmd_scan(1, 200, Engine::Formula, ReportFormat::Json).stdout;
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["rejected_count"], 24);
    assert_eq!(v["counts"]["7"], 24);
    let total: u64 = v["counts"]
        .as_object()
        .unwrap()
        .values()
        .map(|c| c.as_u64().unwrap())
        .sum();
    assert_eq!(total, 200);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 5);
}

#[test]
fn scan_engines_are_byte_identical() {
    for format in [ReportFormat::Text, ReportFormat::Csv, ReportFormat::Json] {
        assert_eq!(
            cmd_scan(1, 100_000, Engine::Formula, format),
            cmd_scan(1, 100_000, Engine::Automaton, format)
        );
    }
    let (_, a, _) = bin(&["scan", "--max", "20000", "--engine", "formula"]);
    let (_, b, _) = bin(&["scan", "--max", "20000"]);
    assert_eq!(a, b);
}

#[test]
fn sequence_is_the_rejecting_set() {
    let seq = cmd_sequence(3000);
    let expected: Vec<u64> = (1..=3000)
        .filter(|&n| {
            let out = cmd_classify(&BitString::from_u64(n), false).stdout;
            out.contains("z_mod8=7")
        })
        .collect();
    assert_eq!(seq, expected);
    for n in &seq {
        let v = trisquare::classifier::classify_u64(*n);
        assert!(!v.gamma_parity, "n = {n} has odd gamma");
    }
    let (_, out, _) = bin(&["sequence", "--max", "30"]);
    assert_eq!(out, "10\n12\n24\n25\n");
}

#[test]
fn decompose_agrees_with_classify() {
    let cfg = OracleConfig::default();
    for n in 0..=11u64 {
        let d = cmd_decompose(n, &cfg);
        assert_eq!(d.code, EXIT_OK);
        let rep = trisquare::classifier::classify_u64(n).representable;
        assert_eq!(d.stdout == "impossible\n", !rep, "n = {n}");
    }
    let (_, out, _) = bin(&["decompose", "6"]);
    assert_eq!(out, "0² + 12² + 24² = 720\n");
}

#[test]
fn export_commands() {
    let (code, dot, _) = bin(&["export", "--machine", "gamma", "--format", "dot"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(dot.matches("xlabel").count(), 3);

    let (code, json, err) = bin(&["export", "--machine", "product-min", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        err.starts_with("product-min: ") && err.trim_end().ends_with(" states"),
        "{err}"
    );
    let back: MooreMachine<Residue8> = import_json(&json).unwrap();
    assert!(machines_equivalent(
        &back,
        &build_product_machine(MachineVariant::Paper)
    ));
    assert_eq!(export_machine(&back, ExportFormat::Json), json);

    for machine in [MachineArg::Alpha3, MachineArg::Alpha5] {
        let csv = cmd_export(machine, MachineVariant::Direct, ExportFormat::Csv).stdout;
        assert_eq!(csv.lines().count(), 1 + 2 * 11);
    }
}

#[test]
fn verify_passes_on_standard_machines() {
    let out = cmd_verify(&quick_verify(), &MachineSet::standard());
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.contains("[table] residue distribution: skipped"));
}

#[test]
fn verify_with_empty_oracle_stage_still_checks_automata() {
    let cfg = VerifyConfig {
        oracle_max: 0,
        ..quick_verify()
    };
    let out = cmd_verify(&cfg, &MachineSet::standard());
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("PASS [automata] alpha3 paper = direct"));
    let (code, stdout, _) = bin(&[
        "verify",
        "--oracle-max",
        "0",
        "--scan-max",
        "1000",
        "--random-cases",
        "10",
    ]);
    assert_eq!(code, EXIT_OK, "{stdout}");
}

#[test]
fn verify_reports_corrupted_transition() {
    let mut machines = MachineSet::standard();
    let p = &mut machines.product_paper;
    // the one-digit state for a0 = 1 now ignores its second digit
    let one = p.step(p.start(), true);
    let one_zero = p.step(one, false);
    p.set_transition(one, true, one_zero);

    let out = cmd_verify(&quick_verify(), &machines);
    assert_eq!(out.code, EXIT_MISMATCH);
    // 0b11 = 3 is the shortest input reaching the corrupted edge with a visible effect
    let line = out
        .stdout
        .lines()
        .find(|l| l.starts_with("FAIL [automata] product paper = direct"))
        .expect("equivalence check fails");
    assert!(line.contains("shortest counterexample n=3"), "{line}");
    assert!(out.stdout.contains("FAIL [scan]"));
    assert!(out.stdout.contains("engine product paper"));
}
