//! Subcommand bodies. Each returns what to print and the exit status so the
//! binary stays a thin shell over them.

use std::fmt::Write;

use m0n::gamma::{oracle_cross_check, reference_table, verify_tables_against};
use m0n::{gamma, h0, SigmaPoly};

use crate::render::{render_json, render_latex, render_text, GammaRecord, OutputFormat};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        }
    }
}

fn render(n: usize, poly: &SigmaPoly, format: OutputFormat, ascii: bool) -> String {
    match format {
        OutputFormat::Text => render_text(poly, ascii),
        OutputFormat::Latex => render_latex(poly),
        OutputFormat::Json => render_json(n, poly),
    }
}

pub fn cmd_gamma(n: usize, format: OutputFormat, ascii: bool) -> Output {
    match gamma(n) {
        Ok(g) => Output::ok(format!("{}\n", render(n, &g, format, ascii))),
        Err(e) => Output::usage(e),
    }
}

fn parse_point(x: &str) -> Result<Vec<i64>, String> {
    x.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid exponent {:?} in --x", part.trim()))
        })
        .collect()
}

pub fn cmd_eval(n: usize, x: &str) -> Output {
    let point = match parse_point(x) {
        Ok(p) => p,
        Err(msg) => return Output::usage(msg),
    };
    match h0(n, &point) {
        Ok(v) => Output::ok(format!("{v}\n")),
        Err(e) => Output::usage(e),
    }
}

pub fn cmd_verify(n_max: usize, grid_bound: u64) -> Output {
    run_verify(&reference_table(), n_max, grid_bound)
}

/// [`cmd_verify`] against a caller-supplied table of `(n, γ_n)` records.
pub fn run_verify(table: &[(usize, SigmaPoly)], n_max: usize, grid_bound: u64) -> Output {
    if n_max < 3 {
        return Output::usage(format!("--n-max must be at least 3, got {n_max}"));
    }
    let tables = verify_tables_against(table);
    let oracle = match oracle_cross_check(n_max, grid_bound) {
        Ok(r) => r,
        Err(e) => return Output::usage(e),
    };

    let mut out = String::new();
    write!(out, "{tables}{oracle}").unwrap();
    let table_checks: Vec<_> = tables
        .checks
        .iter()
        .filter(|c| c.name.ends_with("matches table"))
        .collect();
    let table_pass = table_checks.iter().filter(|c| c.passed).count();
    let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
    writeln!(
        out,
        "tables: {table_pass}/{} pass; oracle: {} points {}",
        table_checks.len(),
        oracle.points_checked,
        verdict(oracle.passed())
    )
    .unwrap();

    let passed = tables.passed() && oracle.passed();
    let mut stderr = String::new();
    if let Some(fail) = tables.first_failure().or(oracle.first_failure()) {
        writeln!(
            stderr,
            "verification failed: {}: {}",
            fail.name,
            fail.detail.as_deref().unwrap_or("")
        )
        .unwrap();
    }
    Output {
        stdout: out,
        stderr,
        code: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED },
    }
}

pub fn cmd_table(n_max: usize, format: OutputFormat, ascii: bool) -> Output {
    if n_max < 3 {
        return Output::usage(format!("--n-max must be at least 3, got {n_max}"));
    }
    let mut polys = Vec::with_capacity(n_max - 2);
    for n in 3..=n_max {
        match gamma(n) {
            Ok(g) => polys.push((n, g)),
            Err(e) => return Output::usage(e),
        }
    }
    let stdout = match format {
        OutputFormat::Json => {
            let records: Vec<GammaRecord> =
                polys.iter().map(|(n, g)| GammaRecord::new(*n, g)).collect();
            format!(
                "{}\n",
                serde_json::to_string(&records).expect("plain data serializes")
            )
        }
        OutputFormat::Latex => polys
            .iter()
            .map(|(n, g)| format!("\\gamma_{{{n}}} = {}\n", render_latex(g)))
            .collect(),
        OutputFormat::Text => {
            let name = if ascii { "gamma" } else { "γ" };
            polys
                .iter()
                .map(|(n, g)| format!("{name}{n} = {}\n", render_text(g, ascii)))
                .collect()
        }
    };
    Output::ok(stdout)
}
