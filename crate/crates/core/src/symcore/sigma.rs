use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Degree, Rational};

/// A monomial `σ_1^{e_1} σ_2^{e_2} ...` in the graded ring, where `σ_d` has
/// weight `d`. The empty monomial is `1`.
///
/// Stored densely with trailing zero exponents trimmed, so each monomial has
/// exactly one representation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SigmaMonomial(Vec<u32>);

impl SigmaMonomial {
    pub fn one() -> Self {
        SigmaMonomial(Vec::new())
    }

    /// `σ_d` for `d >= 1`.
    pub fn sigma(d: u32) -> Self {
        SigmaMonomial::from_powers([(d, 1)])
    }

    /// Builds `Π σ_d^{e}` from `(d, e)` pairs. Repeated indices multiply;
    /// zero exponents are ignored.
    ///
    /// Panics if an index is zero.
    pub fn from_powers(powers: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut exps: Vec<u32> = Vec::new();
        for (d, e) in powers {
            assert!(d >= 1, "σ indices start at 1");
            let i = (d - 1) as usize;
            if exps.len() <= i {
                exps.resize(i + 1, 0);
            }
            exps[i] += e;
        }
        SigmaMonomial::from_dense(exps)
    }

    /// From a dense exponent list, `exps[d - 1]` being the exponent of `σ_d`.
    pub fn from_dense(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        SigmaMonomial(exps)
    }

    pub fn dense(&self) -> &[u32] {
        &self.0
    }

    /// `(d, e)` for every `σ_d` with positive exponent `e`, by increasing `d`.
    pub fn powers(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i as u32 + 1, e))
    }

    pub fn exponent(&self, d: u32) -> u32 {
        d.checked_sub(1)
            .and_then(|i| self.0.get(i as usize).copied())
            .unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.powers().map(|(d, e)| d * e).sum()
    }

    /// Largest index with a positive exponent.
    pub fn max_index(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &SigmaMonomial) -> SigmaMonomial {
        let len = self.0.len().max(other.0.len());
        let exps = (0..len)
            .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
            .collect();
        SigmaMonomial(exps)
    }

    /// Splits off one factor of the highest-index `σ_d`, returning the
    /// remaining monomial and `d`. `None` for the monomial `1`.
    pub(crate) fn split_last(&self) -> Option<(SigmaMonomial, u32)> {
        let d = self.max_index();
        if d == 0 {
            return None;
        }
        let mut exps = self.0.clone();
        exps[(d - 1) as usize] -= 1;
        Some((SigmaMonomial::from_dense(exps), d))
    }
}

/// Ascending weight, then descending lexicographic order on
/// `(e_1, e_2, ...)`: `1 < σ_1 < σ_1^2 < σ_2 < σ_1^3 < σ_1 σ_2 < σ_3 < ...`.
impl Ord for SigmaMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for SigmaMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SigmaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `σ1^2σ3`, or `1` for the empty monomial.
impl fmt::Display for SigmaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (d, e) in self.powers() {
            if e == 1 {
                write!(f, "σ{d}")?;
            } else {
                write!(f, "σ{d}^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of `Q[σ_1, σ_2, ...]`. Terms iterate in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SigmaPoly {
    terms: BTreeMap<SigmaMonomial, Rational>,
}

impl SigmaPoly {
    pub fn zero() -> Self {
        SigmaPoly::default()
    }

    pub fn one() -> Self {
        SigmaPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        SigmaPoly::monomial(SigmaMonomial::one(), c)
    }

    pub fn sigma(d: u32) -> Self {
        SigmaPoly::monomial(SigmaMonomial::sigma(d), Rational::one())
    }

    pub fn monomial(mono: SigmaMonomial, c: Rational) -> Self {
        let mut p = SigmaPoly::zero();
        p.add_term(mono, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (SigmaMonomial, Rational)>) -> Self {
        let mut p = SigmaPoly::zero();
        for (mono, c) in terms {
            p.add_term(mono, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, mono: SigmaMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SigmaMonomial, &Rational)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &SigmaMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&SigmaMonomial::one())
    }

    /// Highest weight among the terms.
    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(SigmaMonomial::weight)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Largest `d` such that `σ_d` occurs.
    pub fn max_index(&self) -> u32 {
        self.terms
            .keys()
            .map(SigmaMonomial::max_index)
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> SigmaPoly {
        if c.is_zero() {
            return SigmaPoly::zero();
        }
        SigmaPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Evaluates at an integer point by computing each `σ_d(x)` numerically;
    /// `σ_d` vanishes when `d` exceeds the number of coordinates.
    pub fn evaluate<T>(&self, point: &[T]) -> Rational
    where
        T: Clone + Into<BigInt>,
    {
        let point: Vec<BigInt> = point.iter().cloned().map(Into::into).collect();
        let top = self.max_index() as usize;
        let sigmas = elementary_values(&point, top);
        let mut total = Rational::zero();
        for (mono, c) in &self.terms {
            let mut v = BigInt::one();
            for (d, e) in mono.powers() {
                v *= num_traits::pow(sigmas[d as usize].clone(), e as usize);
                if v.is_zero() {
                    break;
                }
            }
            if !v.is_zero() {
                total += c * &Rational::from_integer(v);
            }
        }
        total
    }
}

/// `[σ_0(x), σ_1(x), ..., σ_top(x)]` from the coefficients of `Π (1 + x_i t)`.
pub(crate) fn elementary_values(point: &[BigInt], top: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); top + 1];
    e[0] = BigInt::one();
    for (i, x) in point.iter().enumerate() {
        for d in (1..=top.min(i + 1)).rev() {
            let step = x * &e[d - 1];
            e[d] += step;
        }
    }
    e
}

impl fmt::Debug for SigmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("({c}){k}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Add<&SigmaPoly> for &SigmaPoly {
    type Output = SigmaPoly;
    fn add(self, rhs: &SigmaPoly) -> SigmaPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Add for SigmaPoly {
    type Output = SigmaPoly;
    fn add(mut self, rhs: SigmaPoly) -> SigmaPoly {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Neg for &SigmaPoly {
    type Output = SigmaPoly;
    fn neg(self) -> SigmaPoly {
        SigmaPoly {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Neg for SigmaPoly {
    type Output = SigmaPoly;
    fn neg(self) -> SigmaPoly {
        -&self
    }
}

impl Sub<&SigmaPoly> for &SigmaPoly {
    type Output = SigmaPoly;
    fn sub(self, rhs: &SigmaPoly) -> SigmaPoly {
        self + &(-rhs)
    }
}

impl Sub for SigmaPoly {
    type Output = SigmaPoly;
    fn sub(self, rhs: SigmaPoly) -> SigmaPoly {
        self + (-rhs)
    }
}

impl Mul<&SigmaPoly> for &SigmaPoly {
    type Output = SigmaPoly;
    fn mul(self, rhs: &SigmaPoly) -> SigmaPoly {
        let mut out = SigmaPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Mul for SigmaPoly {
    type Output = SigmaPoly;
    fn mul(self, rhs: SigmaPoly) -> SigmaPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(powers: &[(u32, u32)]) -> SigmaMonomial {
        SigmaMonomial::from_powers(powers.iter().copied())
    }

    fn q(v: &str) -> Rational {
        v.parse().unwrap()
    }

    #[test]
    fn weight_and_trimming() {
        assert_eq!(SigmaMonomial::one().weight(), 0);
        assert_eq!(s(&[(1, 2), (3, 1)]).weight(), 5);
        assert_eq!(SigmaMonomial::from_dense(vec![1, 0, 0]), s(&[(1, 1)]));
        assert_eq!(s(&[(2, 0)]), SigmaMonomial::one());
        assert_eq!(s(&[(2, 1), (2, 1)]).exponent(2), 2);
    }

    #[test]
    fn canonical_order_matches_table_layout() {
        // Weight-5 block as it appears in the gamma_8 display.
        let block = [
            s(&[(1, 5)]),
            s(&[(1, 3), (2, 1)]),
            s(&[(1, 2), (3, 1)]),
            s(&[(1, 1), (2, 2)]),
            s(&[(1, 1), (4, 1)]),
            s(&[(2, 1), (3, 1)]),
            s(&[(5, 1)]),
        ];
        for w in block.windows(2) {
            assert!(w[0] < w[1], "{} should precede {}", w[0], w[1]);
        }
        assert!(SigmaMonomial::one() < s(&[(1, 1)]));
        assert!(s(&[(5, 1)]) < s(&[(1, 6)]));
    }

    #[test]
    fn degree_of_zero_is_sentinel() {
        assert_eq!(SigmaPoly::zero().degree(), Degree::NegInfinity);
        assert_eq!(SigmaPoly::one().degree(), Degree::Finite(0));
        let p = SigmaPoly::sigma(1) * SigmaPoly::sigma(3);
        assert_eq!(p.degree(), Degree::Finite(4));
    }

    #[test]
    fn evaluates_at_integer_points() {
        let p = SigmaPoly::one() + SigmaPoly::sigma(1);
        assert_eq!(p.evaluate(&[1i64, 2, 3, 4]), Rational::from(11));
        assert!(SigmaPoly::sigma(2).evaluate(&[0i64, 0, 0]).is_zero());
        // σ_4 vanishes with fewer than four coordinates.
        assert!(SigmaPoly::sigma(4).evaluate(&[5i64, 6, 7]).is_zero());
        assert_eq!(
            SigmaPoly::sigma(2).evaluate(&[1i64, 2, 3]),
            Rational::from(11)
        );
        assert_eq!(
            SigmaPoly::sigma(3).evaluate(&[-1i64, 2, 3]),
            Rational::from(-6)
        );
    }

    #[test]
    fn gamma_five_at_all_ones() {
        let g5 = SigmaPoly::from_terms([
            (SigmaMonomial::one(), q("1")),
            (s(&[(1, 1)]), q("3/2")),
            (s(&[(1, 2)]), q("1/2")),
            (s(&[(2, 1)]), q("1")),
        ]);
        assert_eq!(g5.evaluate(&[1i64; 5]), Rational::from(31));
    }

    #[test]
    fn arithmetic_cancels_to_canonical_zero() {
        let p = SigmaPoly::sigma(1) + SigmaPoly::sigma(2);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).len(), 0);
        assert!(p.scale(&Rational::zero()).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(s(&[(1, 2), (3, 1)]).to_string(), "σ1^2σ3");
        assert_eq!(SigmaMonomial::one().to_string(), "1");
    }
}
