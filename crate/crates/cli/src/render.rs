//! Text, LaTeX and JSON renderings of σ polynomials.

use std::collections::BTreeMap;

use m0n::{Error, Rational, SigmaMonomial, SigmaPoly};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Latex,
    Json,
}

fn text_monomial(mono: &SigmaMonomial, ascii: bool) -> String {
    let sym = if ascii { "s" } else { "σ" };
    mono.powers()
        .map(|(d, e)| match e {
            1 => format!("{sym}{d}"),
            _ => format!("{sym}{d}^{e}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// `1 + 3/2 σ1 + 1/2 σ1^2 + σ2`, terms in canonical order.
pub fn render_text(poly: &SigmaPoly, ascii: bool) -> String {
    let mut out = String::new();
    for (i, (mono, c)) in poly.terms().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            _ => out.push_str(&format!(" {sign} ")),
        }
        let a = c.abs();
        if mono.is_one() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&text_monomial(mono, ascii));
        } else {
            out.push_str(&format!("{a} {}", text_monomial(mono, ascii)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn braced(v: u32) -> String {
    if v < 10 {
        v.to_string()
    } else {
        format!("{{{v}}}")
    }
}

fn latex_coeff(a: &Rational) -> String {
    if a.is_integer() {
        a.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

/// `1+\frac{3}{2}\sigma_1+\frac{1}{2}\sigma_1^2+\sigma_2`.
pub fn render_latex(poly: &SigmaPoly) -> String {
    let mut out = String::new();
    for (i, (mono, c)) in poly.terms().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let a = c.abs();
        if mono.is_one() {
            out.push_str(&latex_coeff(&a));
            continue;
        }
        if !a.is_one() {
            out.push_str(&latex_coeff(&a));
        }
        for (d, e) in mono.powers() {
            out.push_str(&format!("\\sigma_{}", braced(d)));
            if e > 1 {
                out.push_str(&format!("^{}", braced(e)));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// One coefficient: σ index to exponent, and an exact `num/den` string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub sigma: BTreeMap<u32, u32>,
    pub coeff: String,
}

/// The stable machine-readable form of `γ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaRecord {
    pub n: usize,
    pub degree: u32,
    pub terms: Vec<TermRecord>,
}

impl GammaRecord {
    pub fn new(n: usize, poly: &SigmaPoly) -> Self {
        GammaRecord {
            n,
            degree: poly.degree().finite().unwrap_or(0),
            terms: poly
                .terms()
                .map(|(mono, c)| TermRecord {
                    sigma: mono.powers().collect(),
                    coeff: c.to_fraction_string(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<SigmaPoly, Error> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c: Rational = t.coeff.parse()?;
            terms.push((
                SigmaMonomial::from_powers(t.sigma.iter().map(|(&d, &e)| (d, e))),
                c,
            ));
        }
        Ok(SigmaPoly::from_terms(terms))
    }
}

pub fn render_json(n: usize, poly: &SigmaPoly) -> String {
    serde_json::to_string(&GammaRecord::new(n, poly)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma(n: usize) -> SigmaPoly {
        m0n::gamma(n).unwrap()
    }

    #[test]
    fn text_forms() {
        assert_eq!(render_text(&gamma(3), false), "1");
        assert_eq!(render_text(&gamma(4), false), "1 + σ1");
        assert_eq!(render_text(&gamma(5), false), "1 + 3/2 σ1 + 1/2 σ1^2 + σ2");
        assert_eq!(render_text(&gamma(5), true), "1 + 3/2 s1 + 1/2 s1^2 + s2");
        assert_eq!(
            render_text(&gamma(6), false),
            "1 + 11/6 σ1 + σ1^2 + σ2 + 1/6 σ1^3 + σ1 σ2 + 2 σ3"
        );
        assert!(render_text(&gamma(7), true).contains(" - 1/4 s3 + "));
        assert_eq!(render_text(&SigmaPoly::zero(), false), "0");
        assert_eq!(render_text(&-SigmaPoly::sigma(2), false), "-σ2");
    }

    #[test]
    fn latex_forms() {
        assert_eq!(
            render_latex(&gamma(6)),
            "1+\\frac{11}{6}\\sigma_1+\\sigma_1^2+\\sigma_2+\\frac{1}{6}\\sigma_1^3+\\sigma_1\\sigma_2+2\\sigma_3"
        );
        let g8 = render_latex(&gamma(8));
        assert!(g8.starts_with("1+\\frac{137}{60}\\sigma_1+"));
        assert!(g8.contains("-\\frac{21}{2}\\sigma_4"));
        assert!(g8.ends_with("+\\sigma_2\\sigma_3+19\\sigma_5"));
        let big = SigmaPoly::monomial(SigmaMonomial::from_powers([(12, 10)]), Rational::one());
        assert_eq!(render_latex(&big), "\\sigma_{12}^{10}");
    }

    #[test]
    fn json_schema() {
        assert_eq!(
            render_json(5, &gamma(5)),
            r#"{"n":5,"degree":2,"terms":[{"sigma":{},"coeff":"1/1"},{"sigma":{"1":1},"coeff":"3/2"},{"sigma":{"1":2},"coeff":"1/2"},{"sigma":{"2":1},"coeff":"1/1"}]}"#
        );
    }

    #[test]
    fn json_round_trips() {
        for n in 3..=9 {
            let g = gamma(n);
            let json = render_json(n, &g);
            let record: GammaRecord = serde_json::from_str(&json).unwrap();
            assert_eq!(serde_json::to_string(&record).unwrap(), json);
            assert_eq!(record.to_poly().unwrap(), g);
        }
    }
}
