//! Text, CSV and JSON renderings of verdicts and scan reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use trisquare::{BitString, Residue8, ScanReport, Verdict};

pub fn verdict_text(n: &BitString, v: &Verdict) -> String {
    let mut line = format!(
        "n={n} gamma_parity={} alpha3_parity={} alpha5_parity={} z_mod8={} representable={}",
        u8::from(v.gamma_parity),
        u8::from(v.alpha3_parity),
        u8::from(v.alpha5_parity),
        v.z_mod8,
        v.representable
    );
    if let (Some(g), Some(x)) = (v.gamma_exact, v.four_exponent) {
        let _ = write!(line, " gamma={g} four_exponent={x}");
    }
    line.push('\n');
    line
}

#[derive(Serialize)]
struct VerdictJson {
    n: String,
    gamma_parity: u8,
    alpha3_parity: u8,
    alpha5_parity: u8,
    z_mod8: u8,
    representable: bool,
}

pub fn verdict_json(n: &BitString, v: &Verdict) -> String {
    let doc = VerdictJson {
        n: n.to_string(),
        gamma_parity: u8::from(v.gamma_parity),
        alpha3_parity: u8::from(v.alpha3_parity),
        alpha5_parity: u8::from(v.alpha5_parity),
        z_mod8: v.z_mod8.value(),
        representable: v.representable,
    };
    let mut s = serde_json::to_string(&doc).expect("verdict serializes");
    s.push('\n');
    s
}

pub fn scan_text(r: &ScanReport) -> String {
    let mut out = format!("range {}..={} ({} values)\n", r.lo, r.hi, r.total());
    out.push_str("residue count proportion\n");
    for z in Residue8::ALL {
        let _ = writeln!(out, "{z} {} {}", r.count(z), r.proportion(z));
    }
    let _ = writeln!(out, "rejected {}", r.rejected_count());
    out
}

pub fn scan_csv(r: &ScanReport) -> String {
    let mut out = String::from("residue,count,proportion\n");
    for z in Residue8::ALL {
        let _ = writeln!(out, "{z},{},{}", r.count(z), r.proportion(z));
    }
    out
}

#[derive(Serialize)]
struct ScanJson {
    lo: u64,
    hi: u64,
    counts: BTreeMap<String, u64>,
    proportions: BTreeMap<String, String>,
    rejected_count: u64,
}

pub fn scan_json(r: &ScanReport) -> String {
    let doc = ScanJson {
        lo: r.lo,
        hi: r.hi,
        counts: Residue8::ALL
            .iter()
            .map(|z| (z.to_string(), r.count(*z)))
            .collect(),
        proportions: Residue8::ALL
            .iter()
            .map(|z| (z.to_string(), r.proportion(*z)))
            .collect(),
        rejected_count: r.rejected_count(),
    };
    let mut s = serde_json::to_string(&doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn sequence(values: &[u64]) -> String {
    values.iter().map(|n| format!("{n}\n")).collect()
}
