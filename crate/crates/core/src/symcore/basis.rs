//! Conversion between the σ basis and explicit polynomials in `x_1..x_m`.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Degree, Rational, SigmaMonomial, SigmaPoly, XMonomial, XPoly};
use crate::error::{Error, Result};

type IntTerms = Vec<(XMonomial, BigInt)>;

/// Memoized expansions of σ monomials in a fixed number of variables.
///
/// Every expansion has integer coefficients. `Π σ_d^{e_d}` is built from the
/// expansion with one fewer factor of its highest-index σ, so a batch of
/// related monomials shares almost all of its work.
///
/// Restricted expansions keep only the partition-shaped monomials and are
/// computed without expanding: the coefficient of `x^λ` in `Π σ_{d_j}` counts
/// 0/1 matrices with row sums `d_j` and column sums `λ`.
pub(crate) struct Expander {
    m: usize,
    elementary: HashMap<u32, Vec<XMonomial>>,
    full: HashMap<SigmaMonomial, IntTerms>,
    restricted: HashMap<SigmaMonomial, IntTerms>,
    partitions: HashMap<u32, Vec<Vec<u32>>>,
    matrix_counts: HashMap<(Vec<u32>, Vec<u32>), BigInt>,
}

impl Expander {
    pub(crate) fn new(m: usize) -> Self {
        Expander {
            m,
            elementary: HashMap::new(),
            full: HashMap::new(),
            restricted: HashMap::new(),
            partitions: HashMap::new(),
            matrix_counts: HashMap::new(),
        }
    }

    pub(crate) fn m(&self) -> usize {
        self.m
    }

    fn elementary(&mut self, d: u32) -> &[XMonomial] {
        let m = self.m;
        self.elementary
            .entry(d)
            .or_insert_with(|| squarefree_monomials(d, m))
    }

    pub(crate) fn expansion(&mut self, mono: &SigmaMonomial) -> &IntTerms {
        self.ensure(mono);
        &self.full[mono]
    }

    fn ensure(&mut self, mono: &SigmaMonomial) {
        if self.full.contains_key(mono) {
            return;
        }
        let terms = match mono.split_last() {
            None => vec![(XMonomial::one(self.m), BigInt::one())],
            Some((rest, d)) => {
                self.ensure(&rest);
                let factor = self.elementary(d).to_vec();
                let mut acc: HashMap<XMonomial, BigInt> = HashMap::new();
                for (k, c) in &self.full[&rest] {
                    for f in &factor {
                        *acc.entry(k.mul(f)).or_insert_with(BigInt::zero) += c;
                    }
                }
                acc.into_iter().collect()
            }
        };
        self.full.insert(mono.clone(), terms);
    }

    /// The partition-shaped terms of the expansion of `mono`.
    pub(crate) fn restricted_expansion(&mut self, mono: &SigmaMonomial) -> &IntTerms {
        if !self.restricted.contains_key(mono) {
            // Row sums, largest first; suffixes are then canonical memo keys.
            let mut rows: Vec<u32> = mono
                .powers()
                .flat_map(|(d, e)| std::iter::repeat_n(d, e as usize))
                .collect();
            rows.reverse();
            let mut terms = Vec::new();
            if rows.iter().all(|&d| d as usize <= self.m) {
                for lambda in self.partitions(mono.weight()).to_vec() {
                    if lambda.first().is_some_and(|&top| top as usize > rows.len()) {
                        continue;
                    }
                    let count = self.count_matrices(&rows, lambda.clone());
                    if !count.is_zero() {
                        let mut exps = lambda;
                        exps.resize(self.m, 0);
                        terms.push((XMonomial::new(exps), count));
                    }
                }
            }
            self.restricted.insert(mono.clone(), terms);
        }
        &self.restricted[mono]
    }

    /// Partitions of `w` into at most `m` parts, each as its list of parts.
    fn partitions(&mut self, w: u32) -> &[Vec<u32>] {
        let m = self.m;
        self.partitions.entry(w).or_insert_with(|| {
            fn go(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
                if rest == 0 {
                    out.push(cur.clone());
                    return;
                }
                if slots == 0 {
                    return;
                }
                for part in (1..=cap.min(rest)).rev() {
                    cur.push(part);
                    go(rest - part, part, slots - 1, cur, out);
                    cur.pop();
                }
            }
            let mut out = Vec::new();
            go(w, w, m, &mut Vec::new(), &mut out);
            out
        })
    }

    /// 0/1 matrices with the given row sums and column sums `cols`. The count
    /// is invariant under permuting columns, so `cols` is kept sorted
    /// non-increasing with zeros dropped.
    fn count_matrices(&mut self, rows: &[u32], cols: Vec<u32>) -> BigInt {
        let Some((&d, rest)) = rows.split_first() else {
            return if cols.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        let key = (rows.to_vec(), cols);
        if let Some(v) = self.matrix_counts.get(&key) {
            return v.clone();
        }
        let cols = &key.1;
        let mut total = BigInt::zero();
        let balanced = rows.iter().sum::<u32>() == cols.iter().sum::<u32>();
        if balanced && (d as usize) <= cols.len() {
            // Groups of equal column sums: (value, multiplicity).
            let groups: Vec<(u32, usize)> = cols
                .chunk_by(|a, b| a == b)
                .map(|g| (g[0], g.len()))
                .collect();
            let mut take = vec![0usize; groups.len()];
            self.distribute(rest, &groups, 0, d as usize, &mut take, &mut total);
        }
        self.matrix_counts.insert(key, total.clone());
        total
    }

    /// Chooses how many columns from each group receive a 1 in the current
    /// row, then recurses on the remaining rows.
    fn distribute(
        &mut self,
        rest: &[u32],
        groups: &[(u32, usize)],
        g: usize,
        left: usize,
        take: &mut Vec<usize>,
        total: &mut BigInt,
    ) {
        if g == groups.len() {
            if left > 0 {
                return;
            }
            let mut ways = BigInt::one();
            let mut next = Vec::new();
            for (&(v, c), &t) in groups.iter().zip(take.iter()) {
                ways *= num_integer::binomial(BigInt::from(c), BigInt::from(t));
                next.extend(std::iter::repeat_n(v - 1, t));
                next.extend(std::iter::repeat_n(v, c - t));
            }
            next.retain(|&v| v > 0);
            next.sort_unstable_by(|a, b| b.cmp(a));
            *total += ways * self.count_matrices(rest, next);
            return;
        }
        let (_, c) = groups[g];
        for t in 0..=c.min(left) {
            take[g] = t;
            self.distribute(rest, groups, g + 1, left - t, take, total);
        }
        take[g] = 0;
    }
}

/// Exponent vectors of the `C(m, d)` squarefree monomials of degree `d`.
fn squarefree_monomials(d: u32, m: usize) -> Vec<XMonomial> {
    (0..m)
        .combinations(d as usize)
        .map(|idx| {
            let mut exps = vec![0; m];
            for i in idx {
                exps[i] = 1;
            }
            XMonomial::new(exps)
        })
        .collect()
}

/// The elementary symmetric polynomial `σ_d(x_1, ..., x_m)`; zero when `d > m`.
pub fn sigma_expand(d: u32, m: usize) -> XPoly {
    let terms = squarefree_monomials(d, m)
        .into_iter()
        .map(|k| (k, Rational::one()))
        .collect();
    XPoly::from_map_unchecked(m, terms)
}

/// Substitutes `σ_d(x_1..x_m)` for every `σ_d` in `f`.
pub fn sigma_to_xpoly(f: &SigmaPoly, m: usize) -> XPoly {
    sigma_to_xpoly_with(f, &mut Expander::new(m))
}

pub(crate) fn sigma_to_xpoly_with(f: &SigmaPoly, expander: &mut Expander) -> XPoly {
    let m = expander.m();
    // Clear denominators so the accumulation runs over integers.
    let lcm = f
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut acc: HashMap<XMonomial, BigInt> = HashMap::new();
    for (mono, c) in f.terms() {
        let scaled = c.numer() * (&lcm / c.denom());
        for (k, v) in expander.expansion(mono) {
            match acc.get_mut(k) {
                Some(slot) => *slot += &scaled * v,
                None => {
                    acc.insert(k.clone(), &scaled * v);
                }
            }
        }
    }
    let terms = acc
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (k, Rational::new(v, lcm.clone()).expect("lcm is positive")))
        .collect();
    XPoly::from_map_unchecked(m, terms)
}

/// Rewrites a symmetric polynomial in the σ basis.
///
/// Uses lex-leading-term reduction: the lex-largest monomial
/// `x^λ` (`λ_1 >= λ_2 >= ...`) is cancelled by `c σ_1^{λ_1-λ_2} σ_2^{λ_2-λ_3} ...`,
/// which has the same leading term and only lex-smaller ones besides. Because
/// the input is symmetric only orbit representatives (non-increasing exponent
/// vectors) need to be tracked.
///
/// Requires `degree(g) <= m`, the range in which the representation is
/// unique.
pub fn xpoly_to_sigma(g: &XPoly) -> Result<SigmaPoly> {
    xpoly_to_sigma_with(g, &mut Expander::new(g.m()))
}

pub(crate) fn xpoly_to_sigma_with(g: &XPoly, expander: &mut Expander) -> Result<SigmaPoly> {
    let m = g.m();
    debug_assert_eq!(m, expander.m());
    if let Degree::Finite(degree) = g.degree() {
        if degree as usize > m {
            return Err(Error::DegreeExceedsVariables { degree, m });
        }
    }
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }

    let mut pending: BTreeMap<XMonomial, Rational> = g
        .terms()
        .filter(|(k, _)| k.is_partition())
        .map(|(k, c)| (k.clone(), c.clone()))
        .collect();
    let mut out = SigmaPoly::zero();

    while let Some((lead, c)) = pending.pop_last() {
        let lambda = lead.exponents();
        let exps = (0..m)
            .map(|i| lambda[i] - lambda.get(i + 1).copied().unwrap_or(0))
            .collect();
        let mono = SigmaMonomial::from_dense(exps);
        for (k, v) in expander.restricted_expansion(&mono) {
            if k == &lead {
                continue;
            }
            let delta = &c * &Rational::from_integer(v.clone());
            let slot = pending.entry(k.clone()).or_insert_with(Rational::zero);
            *slot -= delta;
            if slot.is_zero() {
                pending.remove(k);
            }
        }
        out.add_term(mono, c);
    }
    Ok(out)
}
