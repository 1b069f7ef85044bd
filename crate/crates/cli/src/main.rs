use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qaudit_core::audit::{run_audit, AuditOptions, AuditReport, Selection, Status};
use qaudit_core::padic::{
    convergence_probe, integrate, riemann_error_bound, IntegrandSpec, IntegrationConfig, Measure,
    PadicQ,
};
use qaudit_core::table::{build_table, Family, Format, IntRange, Param, TableRanges};
use qaudit_core::Error;

#[derive(Parser)]
#[command(
    name = "qaudit",
    version,
    about = "Exact q-calculus tables, p-adic q-integrals and identity audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a number family.
    Table {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: Option<IntRange>,
        #[arg(long)]
        k: Option<IntRange>,
        #[arg(long)]
        m: Option<IntRange>,
        #[arg(long)]
        x: Option<IntRange>,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the identity catalog.
    Audit {
        /// `all` or a comma-separated list of case ids.
        #[arg(long, default_value = "all")]
        ids: String,
        /// Upper bound for every index range.
        #[arg(long)]
        max_n: Option<i64>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Record per-case wall-clock milliseconds.
        #[arg(long)]
        timings: bool,
    },
    /// Riemann sum of a p-adic q-integral at one level.
    Integrate {
        #[arg(long)]
        p: u64,
        /// q = 1 + T·p.
        #[arg(long = "q-offset", allow_negative_numbers = true)]
        q_offset: i64,
        #[arg(long = "N")]
        level: u32,
        #[arg(long)]
        integrand: IntegrandSpec,
        #[arg(long, default_value = "bosonic")]
        measure: Measure,
        #[arg(long, value_enum, default_value_t = Reference::Auto)]
        reference: Reference,
    },
    /// Classical q -> 1 values of a family.
    Limit {
        #[arg(long)]
        family: Family,
        /// Range of the family's leading index.
        #[arg(long)]
        m: IntRange,
        #[arg(long)]
        k: Option<IntRange>,
        #[arg(long)]
        n: Option<IntRange>,
        #[arg(long)]
        x: Option<IntRange>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Reference {
    Auto,
    None,
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_summary(report: &AuditReport) {
    for c in &report.cases {
        let tag = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::ExpectedFailConfirmed => "expected-fail",
        };
        match &c.counterexample {
            Some(cx) => {
                let params: Vec<String> =
                    cx.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!(
                    "{tag:<14} {:<30} at {}: {} vs {}",
                    c.id,
                    params.join(" "),
                    cx.lhs,
                    cx.rhs
                );
            }
            None => println!("{tag:<14} {}", c.id),
        }
    }
    let s = &report.summary;
    println!(
        "pass {} / fail {} / expected-fail-confirmed {}",
        s.pass, s.fail, s.expected_fail_confirmed
    );
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let err = |e: Error| e.to_string();
    match cli.command {
        Command::Table {
            family,
            n,
            k,
            m,
            x,
            format,
            out,
        } => {
            let ranges = TableRanges { n, k, m, x };
            let text = build_table(family, &ranges)
                .and_then(|t| t.render(format))
                .map_err(err)?;
            write_out(out.as_ref(), &text)?;
        }
        Command::Audit {
            ids,
            max_n,
            report,
            timings,
        } => {
            let opts = AuditOptions { max_n, timings };
            let result = run_audit(&Selection::parse(&ids), &opts).map_err(err)?;
            match &report {
                Some(path) => {
                    write_out(Some(path), &result.to_json())?;
                    print_summary(&result);
                }
                None => write_out(None, &result.to_json())?,
            }
            if !result.all_must_pass_passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Integrate {
            p,
            q_offset,
            level,
            integrand,
            measure,
            reference,
        } => {
            let q = PadicQ::from_offset(p, q_offset).map_err(err)?;
            let cfg = IntegrationConfig::default();
            println!(
                "integrand {integrand}, measure {measure}, p = {p}, q = {}, N = {level}",
                q.q()
            );
            match reference {
                Reference::None => {
                    let v = integrate(&integrand, &q, level, measure, &cfg).map_err(err)?;
                    println!("value     {v}");
                }
                Reference::Auto => {
                    let closed = integrand.closed_form(measure);
                    let rows =
                        convergence_probe(&integrand, &q, level..=level, measure, &closed, &cfg)
                            .map_err(err)?;
                    let row = &rows[0];
                    println!("value     {}", row.value);
                    println!("reference {closed}");
                    let v = match row.valuation {
                        Some(v) => v.to_string(),
                        None => format!(">= {}", row.abs_precision),
                    };
                    println!("v_p(value - reference) = {v}");
                    match riemann_error_bound(&integrand, &q, level, measure) {
                        Some(i64::MAX) => println!("truncation bound: exact"),
                        Some(b) => println!("truncation bound: {b}"),
                        None => println!("truncation bound: none (q = 1)"),
                    }
                }
            }
        }
        Command::Limit { family, m, k, n, x } => {
            let mut ranges = TableRanges { n, k, m: None, x };
            match family.primary() {
                Param::M => ranges.m = Some(m),
                Param::K => ranges.k = Some(m),
                _ => ranges.n = Some(m),
            }
            let table = build_table(family, &ranges).map_err(err)?;
            print!("{}", table.to_limit_lines());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
