use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sl3_ktypes::compare::{applicable_methods, crosscheck, crosscheck_with};
use sl3_ktypes::orbits::{orbit_table, Method, Orbit};
use sl3_ktypes::report::{to_json, ComparisonReport, MultReport, TsvTable};
use sl3_ktypes::svg::write_regions;
use sl3_ktypes::weights::KWeight;
use sl3_ktypes::{mult_table, Error};

const USAGE: u8 = 2;
const DISAGREEMENT: u8 = 3;
const DEFAULT_LAMBDA_CAP: u32 = 10_000;

#[derive(Parser)]
#[command(name = "sl3-ktypes", version, about = "SO(3) multiplicities of (sl3, SO(3))-modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity table for λ ∈ [0, lambda-max].
    Mult {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, value_parser = parse_orbit)]
        orbit: Orbit,
        #[arg(long)]
        lambda_max: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Positive)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Compares every applicable method over a parameter box.
    Crosscheck {
        #[arg(long)]
        a_max: u32,
        #[arg(long)]
        b_max: u32,
        #[arg(long)]
        lambda_max: u32,
        /// Shifts one open-orbit line-bundle weight, to exercise the failure path.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Writes the region diagram of C as SVG.
    Regions {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Positive,
    Localization,
    Tseries,
    Oracle,
    Blattner,
    All,
}

impl MethodArg {
    fn method(self) -> Option<Method> {
        match self {
            MethodArg::Positive => Some(Method::Positive),
            MethodArg::Localization => Some(Method::Localization),
            MethodArg::Tseries => Some(Method::TSeries),
            MethodArg::Oracle => Some(Method::Oracle),
            MethodArg::Blattner => Some(Method::Blattner),
            MethodArg::All => None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

fn parse_orbit(s: &str) -> Result<Orbit, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn lambda_cap() -> Result<u32, String> {
    match std::env::var("BLATTNER_LAMBDA_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("BLATTNER_LAMBDA_CAP must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_LAMBDA_CAP),
    }
}

fn check_cap(name: &str, value: u32) -> Result<(), ExitCode> {
    let cap = lambda_cap().map_err(|e| usage(&e))?;
    if value > cap {
        return Err(usage(&format!("{name} {value} exceeds the cap {cap} (set BLATTNER_LAMBDA_CAP to raise it)")));
    }
    Ok(())
}

fn usage(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(USAGE)
}

fn failure(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::FAILURE
}

fn cmd_mult(a: u32, b: u32, orbit: Orbit, lambda_max: u32, method: MethodArg, format: Format) -> ExitCode {
    if let Err(code) = check_cap("lambda-max", lambda_max) {
        return code;
    }
    match method.method() {
        Some(m) => {
            if !m.applies_to(orbit) {
                return usage(&Error::MethodNotApplicable { method: m.name(), orbit: orbit.name() }.to_string());
            }
            let report = match mult_table(orbit, a, b, lambda_max, m) {
                Ok(t) => MultReport::from(&t),
                Err(e) => return failure(&e),
            };
            match format {
                Format::Tsv => print!("{}", TsvTable::from(&report).to_tsv()),
                Format::Json => print!("{}", to_json(&report)),
            }
            ExitCode::SUCCESS
        }
        None => {
            let tables = applicable_methods(orbit)
                .into_iter()
                .map(|m| mult_table(orbit, a, b, lambda_max, m))
                .collect::<Result<Vec<_>, _>>();
            let report = match tables.and_then(|t| ComparisonReport::from_tables(&t)) {
                Ok(r) => r,
                Err(e) => return failure(&e),
            };
            match format {
                Format::Tsv => print!("{}", TsvTable::from(&report).to_tsv()),
                Format::Json => print!("{}", to_json(&report)),
            }
            if report.all_agree() {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: methods disagree");
                ExitCode::from(DISAGREEMENT)
            }
        }
    }
}

fn cmd_crosscheck(a_max: u32, b_max: u32, lambda_max: u32, inject_fault: bool) -> ExitCode {
    if let Err(code) = check_cap("lambda-max", lambda_max) {
        return code;
    }
    let result = if inject_fault {
        let corrupt = |orbit: Orbit, a: u32, b: u32| {
            let mut t = orbit_table(orbit, a, b)?;
            if orbit == Orbit::Open {
                t.rows[0].wt_l = t.rows[0].wt_l + KWeight::from_units(1);
            }
            Ok(t)
        };
        crosscheck_with(a_max, b_max, lambda_max, &corrupt)
    } else {
        crosscheck(a_max, b_max, lambda_max)
    };
    match result {
        Ok(summary) => {
            println!("{summary}");
            ExitCode::SUCCESS
        }
        Err(counterexample) => {
            println!("{counterexample}");
            ExitCode::from(DISAGREEMENT)
        }
    }
}

fn cmd_regions(a: u32, b: u32, n_max: u32, out: PathBuf) -> ExitCode {
    if let Err(code) = check_cap("n-max", n_max) {
        return code;
    }
    match write_regions(a.into(), b.into(), n_max.into(), &out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => failure(&e),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Mult { a, b, orbit, lambda_max, method, format } => cmd_mult(a, b, orbit, lambda_max, method, format),
        Command::Crosscheck { a_max, b_max, lambda_max, inject_fault } => {
            cmd_crosscheck(a_max, b_max, lambda_max, inject_fault)
        }
        Command::Regions { a, b, n_max, out } => cmd_regions(a, b, n_max, out),
    }
}
