//! Command-line surface for `trisquare`.
//!
//! Every subcommand is a plain function returning an [`Outcome`], so the
//! integration tests can drive them without spawning a process.
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

pub mod render;
pub mod verify;

use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use trisquare::automata::{
    build_alpha3_machine, build_alpha5_machine, build_gamma_machine, build_product_machine,
    export_machine, minimize, ExportFormat, MachineVariant,
};
use trisquare::classifier::classify_u64;
use trisquare::oracle::{factorial, three_square_decompose, OracleConfig};
use trisquare::scan::scan_range;
use trisquare::{classify, BitString, Engine, ScanReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "trisquare", version, about = "Is n! a sum of three squares?")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one n (decimal, or binary with a 0b prefix).
    Classify {
        n: BitString,
        #[arg(long)]
        json: bool,
    },
    /// Residue distribution over min..=max.
    Scan {
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 1)]
        min: u64,
        #[arg(long, value_enum, default_value_t = EngineArg::Automaton)]
        engine: EngineArg,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Every n ≤ max whose factorial is not a sum of three squares.
    Sequence {
        #[arg(long)]
        max: u64,
    },
    /// Print one of the automata.
    Export {
        #[arg(long, value_enum)]
        machine: MachineArg,
        #[arg(long, value_enum, default_value_t = VariantArg::Paper)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Dot)]
        format: FormatArg,
    },
    /// Cross-check the formula, the automata and the big-integer oracle.
    Verify {
        #[arg(long, default_value_t = 2000)]
        oracle_max: u64,
        #[arg(long, default_value_t = 1_000_000)]
        scan_max: u64,
        #[arg(long, default_value_t = 10_000)]
        random_cases: usize,
    },
    /// Write n! as a sum of three squares, for small n.
    Decompose { n: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Formula,
    Automaton,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Formula => Engine::Formula,
            EngineArg::Automaton => Engine::Automaton,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MachineArg {
    Gamma,
    Alpha3,
    Alpha5,
    Product,
    ProductMin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Paper,
    Direct,
}

impl From<VariantArg> for MachineVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Paper => MachineVariant::Paper,
            VariantArg::Direct => MachineVariant::Direct,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Dot,
    Json,
    Csv,
}

impl From<FormatArg> for ExportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Dot => ExportFormat::Dot,
            FormatArg::Json => ExportFormat::Json,
            FormatArg::Csv => ExportFormat::Csv,
        }
    }
}

/// What a command prints and how the process should exit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            ..Self::default()
        }
    }

    fn usage(message: String) -> Self {
        Self {
            stderr: message,
            code: EXIT_USAGE,
            ..Self::default()
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Classify { n, json } => cmd_classify(&n, json),
        Command::Scan {
            max,
            min,
            engine,
            format,
        } => cmd_scan(min, max, engine.into(), format),
        Command::Sequence { max } => Outcome::ok(render::sequence(&cmd_sequence(max))),
        Command::Export {
            machine,
            variant,
            format,
        } => cmd_export(machine, variant.into(), format.into()),
        Command::Verify {
            oracle_max,
            scan_max,
            random_cases,
        } => verify::cmd_verify(
            &verify::VerifyConfig {
                oracle_max,
                scan_max,
                random_cases,
                ..verify::VerifyConfig::default()
            },
            &verify::MachineSet::standard(),
        ),
        Command::Decompose { n } => cmd_decompose(n, &OracleConfig::default()),
    }
}

pub fn cmd_classify(n: &BitString, json: bool) -> Outcome {
    let verdict = classify(n);
    Outcome::ok(if json {
        render::verdict_json(n, &verdict)
    } else {
        render::verdict_text(n, &verdict)
    })
}

/// Splits `lo..=hi` into contiguous pieces for parallel scanning.
fn chunks(lo: u64, hi: u64, pieces: u64) -> Vec<RangeInclusive<u64>> {
    let len = u128::from(hi - lo) + 1;
    let step = len.div_ceil(u128::from(pieces.max(1))).max(1) as u64;
    let mut out = Vec::new();
    let mut start = lo;
    loop {
        let end = start.saturating_add(step - 1).min(hi);
        out.push(start..=end);
        if end == hi {
            break;
        }
        start = end + 1;
    }
    out
}

/// Parallel [`scan_range`]; the result does not depend on the split.
pub fn parallel_scan(lo: u64, hi: u64, engine: Engine) -> ScanReport {
    let parts: Vec<ScanReport> = chunks(lo, hi, 64)
        .into_par_iter()
        .map(|r| scan_range(*r.start(), *r.end(), engine))
        .collect();
    let mut iter = parts.into_iter();
    let first = iter.next().expect("at least one chunk");
    iter.fold(first, |acc, part| acc.merge(&part))
}

pub fn cmd_scan(min: u64, max: u64, engine: Engine, format: ReportFormat) -> Outcome {
    if max < min {
        return Outcome::usage(format!("--max ({max}) must be at least --min ({min})\n"));
    }
    let report = parallel_scan(min, max, engine);
    Outcome::ok(match format {
        ReportFormat::Text => render::scan_text(&report),
        ReportFormat::Csv => render::scan_csv(&report),
        ReportFormat::Json => render::scan_json(&report),
    })
}

/// Ascending `n ≤ max` with residue 7.
pub fn cmd_sequence(max: u64) -> Vec<u64> {
    (1..=max)
        .into_par_iter()
        .filter(|&n| classify_u64(n).z_mod8.is_rejecting())
        .collect()
}

pub fn cmd_export(machine: MachineArg, variant: MachineVariant, format: ExportFormat) -> Outcome {
    match machine {
        MachineArg::Gamma => Outcome::ok(export_machine(&build_gamma_machine(), format)),
        MachineArg::Alpha3 => Outcome::ok(export_machine(&build_alpha3_machine(variant), format)),
        MachineArg::Alpha5 => Outcome::ok(export_machine(&build_alpha5_machine(variant), format)),
        MachineArg::Product => Outcome::ok(export_machine(&build_product_machine(variant), format)),
        MachineArg::ProductMin => {
            let min = minimize(&build_product_machine(variant));
            Outcome {
                stdout: export_machine(&min, format),
                stderr: format!("product-min: {} states\n", min.state_count()),
                code: EXIT_OK,
            }
        }
    }
}

pub fn cmd_decompose(n: u64, config: &OracleConfig) -> Outcome {
    let too_big = || {
        Outcome::usage(format!(
            "{n}! exceeds the decomposition bound ({}); use `trisquare classify {n}` instead\n",
            config.decompose_max
        ))
    };
    let Ok(f) = factorial(n, config) else {
        return too_big();
    };
    let Ok(m) = u64::try_from(&f) else {
        return too_big();
    };
    match three_square_decompose(m, config) {
        Err(_) => too_big(),
        Ok(None) => Outcome::ok("impossible\n".to_owned()),
        Ok(Some(d)) => Outcome::ok(format!("{}² + {}² + {}² = {m}\n", d.a, d.b, d.c)),
    }
}
