//! Reader and writer for the tabulated `γ_n` coefficients.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::symcore::{Rational, SigmaMonomial, SigmaPoly};

const GAMMA_TABLE: &str = include_str!("../../data/gamma_table.txt");

/// The published `γ_3 .. γ_8`, as `(n, γ_n)` pairs.
pub fn reference_table() -> Vec<(usize, SigmaPoly)> {
    parse_table(GAMMA_TABLE).expect("embedded table is well formed")
}

/// Raw text of the embedded table.
pub fn reference_table_source() -> &'static str {
    GAMMA_TABLE
}

/// Parses records of the form
///
/// ```text
/// [n = 5]
/// {} = 1/1
/// {1: 2} = 1/2
/// ```
///
/// Entries within a record must appear in canonical term order.
pub fn parse_table(src: &str) -> Result<Vec<(usize, SigmaPoly)>> {
    let mut out: Vec<(usize, Vec<(SigmaMonomial, Rational)>)> = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: &str| Error::Fixture {
            line: line_no,
            message: message.to_string(),
        };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(header) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            let n = header
                .trim()
                .strip_prefix('n')
                .and_then(|r| r.trim_start().strip_prefix('='))
                .and_then(|r| r.trim().parse::<usize>().ok())
                .ok_or_else(|| err("expected a header like [n = 5]"))?;
            out.push((n, Vec::new()));
            continue;
        }
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| err("expected `{...} = num/den`"))?;
        let mono = parse_monomial(lhs.trim()).ok_or_else(|| err("malformed sigma monomial"))?;
        let coeff: Rational = rhs
            .trim()
            .parse()
            .map_err(|_| err("malformed coefficient"))?;
        let (_, entries) = out
            .last_mut()
            .ok_or_else(|| err("entry before any [n = ...] header"))?;
        if entries.last().is_some_and(|(prev, _)| prev >= &mono) {
            return Err(err("entries out of canonical order"));
        }
        if coeff.is_zero() {
            return Err(err("zero coefficient"));
        }
        entries.push((mono, coeff));
    }
    Ok(out
        .into_iter()
        .map(|(n, entries)| (n, SigmaPoly::from_terms(entries)))
        .collect())
}

fn parse_monomial(s: &str) -> Option<SigmaMonomial> {
    let body = s.strip_prefix('{')?.strip_suffix('}')?.trim();
    if body.is_empty() {
        return Some(SigmaMonomial::one());
    }
    let mut powers = Vec::new();
    for part in body.split(',') {
        let (d, e) = part.split_once(':')?;
        let d: u32 = d.trim().parse().ok()?;
        let e: u32 = e.trim().parse().ok()?;
        if d == 0 || e == 0 || powers.iter().any(|&(seen, _)| seen == d) {
            return None;
        }
        powers.push((d, e));
    }
    Some(SigmaMonomial::from_powers(powers))
}

/// Writes records in the format read by [`parse_table`].
pub fn render_table(records: &[(usize, SigmaPoly)]) -> String {
    let mut out = String::new();
    for (i, (n, poly)) in records.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        writeln!(out, "[n = {n}]").unwrap();
        for (mono, c) in poly.terms() {
            let powers: Vec<String> = mono.powers().map(|(d, e)| format!("{d}: {e}")).collect();
            writeln!(
                out,
                "{{{}}} = {}",
                powers.join(", "),
                c.to_fraction_string()
            )
            .unwrap();
        }
    }
    out
}
