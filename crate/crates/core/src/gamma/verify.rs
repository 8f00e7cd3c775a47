use std::collections::BTreeSet;
use std::fmt;

use super::{gamma, h0, oracle_value, reference_table, GammaCache};
use crate::error::{Error, Result};
use crate::summation::apply_t;
use crate::symcore::{SigmaMonomial, SigmaPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Outcome of a verification run; passes iff every check passes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    /// Exponent vectors covered by value comparisons, counted with orbit
    /// multiplicity.
    pub points_checked: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn record(&mut self, name: String, expected: String, detail: Option<String>) {
        self.checks.push(Check {
            name,
            expected,
            passed: detail.is_none(),
            detail,
        });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.detail {
                None => writeln!(f, "PASS {}", c.name)?,
                Some(d) => writeln!(f, "FAIL {}: {}", c.name, d)?,
            }
        }
        Ok(())
    }
}

/// Describes the first monomial, in canonical order, whose coefficients differ.
fn first_divergence(expected: &SigmaPoly, computed: &SigmaPoly) -> Option<String> {
    let keys: BTreeSet<&SigmaMonomial> = expected
        .terms()
        .chain(computed.terms())
        .map(|(k, _)| k)
        .collect();
    keys.into_iter().find_map(|k| {
        let (e, c) = (expected.coeff(k), computed.coeff(k));
        (e != c).then(|| format!("first divergent monomial {k}: expected {e}, computed {c}"))
    })
}

/// Compares `γ_3 .. γ_8` with the embedded table, plus the worked `T(1)` and
/// `T(σ_1)` and a few individual coefficients.
pub fn verify_paper_tables() -> VerificationReport {
    verify_tables_against(&reference_table())
}

/// [`verify_paper_tables`] against an arbitrary table of `(n, γ_n)` records.
pub fn verify_tables_against(table: &[(usize, SigmaPoly)]) -> VerificationReport {
    let mut report = VerificationReport::default();
    for (n, expected) in table {
        let name = format!("gamma_{n} matches table");
        let detail = match gamma(*n) {
            Ok(computed) => first_divergence(expected, &computed),
            Err(e) => Some(e.to_string()),
        };
        report.record(name, format!("{} terms", expected.len()), detail);
    }

    let lookup = |n: usize| table.iter().find(|(m, _)| *m == n).map(|(_, p)| p);
    if let (Some(g4), Some(g5)) = (lookup(4), lookup(5)) {
        // γ_4 = T(1) and γ_5 = T(1) + T(σ_1).
        let t1 = apply_t(&SigmaPoly::one());
        report.record(
            "T(1) = gamma_4".into(),
            format!("{g4:?}"),
            first_divergence(g4, &t1),
        );
        let expected = g5 - g4;
        let ts1 = apply_t(&SigmaPoly::sigma(1));
        report.record(
            "T(σ1) = gamma_5 - gamma_4".into(),
            format!("{expected:?}"),
            first_divergence(&expected, &ts1),
        );
    }

    let anchors = [
        (8, SigmaMonomial::sigma(1)),
        (8, SigmaMonomial::sigma(5)),
        (7, SigmaMonomial::sigma(3)),
    ];
    for (n, mono) in anchors {
        let Some(poly) = lookup(n) else { continue };
        let expected = poly.coeff(&mono);
        let detail = match gamma(n) {
            Ok(g) => {
                let c = g.coeff(&mono);
                (c != expected).then(|| format!("computed {c}"))
            }
            Err(e) => Some(e.to_string()),
        };
        report.record(
            format!("coefficient of {mono} in γ{n} equals {expected}"),
            expected.to_string(),
            detail,
        );
    }
    report
}

/// For each `n` in `3..=n_max`, compares `h0(n, x)` with the value recursion
/// at every `x ∈ {0..grid_bound}^n`. Points are visited once per orbit and
/// counted with multiplicity.
pub fn oracle_cross_check(n_max: usize, grid_bound: u64) -> Result<VerificationReport> {
    if n_max < 3 {
        return Err(Error::InvalidN(n_max));
    }
    let mut report = VerificationReport::default();
    for n in 3..=n_max {
        let mut cache = GammaCache::new();
        let mut points: u128 = 0;
        let mut detail = None;
        for x in non_increasing_vectors(n, grid_bound) {
            let signed: Vec<i64> = x.iter().map(|&v| v as i64).collect();
            let symbolic = h0(n, &signed)?;
            let recursive = oracle_value(n - 3, &x, &mut cache)?;
            if symbolic != recursive {
                detail = Some(format!("x = {x:?}: h0 = {symbolic}, oracle = {recursive}"));
                break;
            }
            points += orbit_size(&x);
        }
        report.points_checked += points;
        report.record(
            format!("oracle n={n}: {points} points"),
            format!("h0 equals value recursion on {{0..{grid_bound}}}^{n}"),
            detail,
        );
    }
    Ok(report)
}

/// All length-`len` vectors with entries in `0..=bound`, non-increasing.
pub(crate) fn non_increasing_vectors(len: usize, bound: u64) -> Vec<Vec<u64>> {
    fn go(len: usize, cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for v in (0..=cap).rev() {
            prefix.push(v);
            go(len, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, bound, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Number of distinct permutations of `x`.
pub(crate) fn orbit_size(x: &[u64]) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut size = fact(x.len());
    let mut sorted = x.to_vec();
    sorted.sort_unstable();
    for chunk in sorted.chunk_by(|a, b| a == b) {
        size /= fact(chunk.len());
    }
    size
}
