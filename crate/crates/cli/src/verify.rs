use std::io::Write;

use ramloci::formulas::{self, CertificationReport, ReportRecord};
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::error::{exit, CliError};

#[derive(Serialize)]
struct VerifyReport {
    schema: u32,
    grid: GridRecord,
    cases: Vec<ReportRecord>,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct GridRecord {
    g: [i64; 2],
    i: [i64; 2],
}

/// Runs every selected certification case; status 0 iff all pass.
pub fn cmd_verify(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    config.validate()?;
    let checks: Vec<_> = formulas::all_checks()
        .into_iter()
        .filter(|c| config.selects(c.name()))
        .collect();
    if checks.is_empty() {
        return Err(CliError::EmptyFilter(
            config.filter.clone().unwrap_or_default(),
        ));
    }
    let reports = formulas::run_checks(&checks, config.g.clone(), config.i.clone(), config.jobs)?;
    render(config, &reports, out)?;
    Ok(if reports.iter().all(CertificationReport::passed) {
        exit::PASS
    } else {
        exit::FAILURE
    })
}

fn render(
    config: &RunConfig,
    reports: &[CertificationReport],
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let passed = reports.iter().filter(|r| r.passed()).count();
    let failed = reports.len() - passed;
    match config.format {
        Format::Json => {
            let report = VerifyReport {
                schema: 1,
                grid: GridRecord {
                    g: [*config.g.start(), *config.g.end()],
                    i: [*config.i.start(), *config.i.end()],
                },
                cases: reports.iter().map(CertificationReport::record).collect(),
                passed,
                failed,
            };
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            writeln!(out, "{text}")?;
        }
        Format::Tsv => {
            writeln!(
                out,
                "name\tverdict\tmethod\tgrid\tdegree_bound\tfailures\tanchor"
            )?;
            for r in reports {
                let rec = r.record();
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}x{}\t{},{}\t{}\t{}",
                    rec.name,
                    verdict(r),
                    method(r),
                    rec.grid_size[0],
                    rec.grid_size[1],
                    rec.degree_bound[0],
                    rec.degree_bound[1],
                    rec.failures.len(),
                    rec.anchor
                )?;
            }
        }
        Format::Pretty => {
            let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(0);
            for r in reports {
                let scope = match r.method {
                    formulas::Method::Grid => format!("grid {}x{}", r.grid_size.0, r.grid_size.1),
                    formulas::Method::Symbolic => "symbolic".to_string(),
                };
                writeln!(
                    out,
                    "{:<4}  {:<width$}  {:<10}  {}",
                    verdict(r).to_uppercase(),
                    r.name,
                    scope,
                    r.anchor
                )?;
                for p in r.failures().take(5) {
                    writeln!(
                        out,
                        "      at g={} i={}: engine {} vs closed form {}",
                        p.g, p.i, p.engine, p.closed_form
                    )?;
                }
                if let Some(res) = r.residual.as_ref().filter(|res| !res.is_zero()) {
                    writeln!(out, "      residual {res}")?;
                }
            }
            writeln!(
                out,
                "{} cases: {passed} passed, {failed} failed",
                reports.len()
            )?;
        }
    }
    Ok(())
}

fn verdict(r: &CertificationReport) -> &'static str {
    if r.passed() {
        "pass"
    } else {
        "fail"
    }
}

fn method(r: &CertificationReport) -> &'static str {
    match r.method {
        formulas::Method::Grid => "grid",
        formulas::Method::Symbolic => "symbolic",
    }
}
