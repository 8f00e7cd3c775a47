//! Closed-form discrete summation over one variable slot, and the operator
//! `T(f) = f + Σ_i Σ_{j=0}^{x_i - 1} f(.., x_i = j, ..)` on the σ ring.

mod falcoeff;
mod unipoly;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::symcore::basis::{sigma_to_xpoly_with, xpoly_to_sigma_with};
use crate::symcore::{Degree, Expander, Rational, SigmaPoly, XMonomial, XPoly};

pub use falcoeff::FalcoeffTable;
pub use unipoly::UniPoly;

struct Shared {
    table: FalcoeffTable,
    faulhaber: Vec<Arc<UniPoly>>,
}

static SHARED: RwLock<Shared> = RwLock::new(Shared {
    table: FalcoeffTable::empty(),
    faulhaber: Vec::new(),
});

/// `P_k` with `P_k(X) = Σ_{j=0}^{X-1} j^k` for every integer `X >= 0`.
///
/// Built from `Σ_{j<X} C(j, i) = C(X, i+1)`, giving
/// `P_k = Σ_i S(k, i) X^(i+1) / (i + 1)` over falling factorials. An empty sum
/// is zero, so `P_k(0) = 0`.
pub fn faulhaber(k: usize) -> Arc<UniPoly> {
    if let Some(p) = SHARED.read().unwrap().faulhaber.get(k) {
        return Arc::clone(p);
    }
    let mut shared = SHARED.write().unwrap();
    if shared.table.is_empty() {
        shared.table = FalcoeffTable::new();
    }
    shared.table.extend_to(k);
    while shared.faulhaber.len() <= k {
        let next = build_faulhaber(&shared.table, shared.faulhaber.len());
        shared.faulhaber.push(Arc::new(next));
    }
    Arc::clone(&shared.faulhaber[k])
}

fn build_faulhaber(table: &FalcoeffTable, k: usize) -> UniPoly {
    let row = table.row(k).expect("table extended before use");
    let mut fact = BigUint::from(1u32);
    let mut out = UniPoly::zero();
    for (i, f) in row.iter().enumerate() {
        // f / (i+1)!  ==  S(k, i) / (i + 1)
        fact *= BigUint::from(i + 1);
        if f == &BigUint::ZERO {
            continue;
        }
        let c = Rational::new(BigInt::from(f.clone()), BigInt::from(fact.clone()))
            .expect("factorial is nonzero");
        out = &out + &UniPoly::falling_factorial(i + 1).scale(&c);
    }
    out
}

/// The polynomial equal to `Σ_{j=0}^{x_i - 1} f(x_1, .., j, .., x_m)` at every
/// non-negative integer point, where `index` is the zero-based slot `i`.
pub fn sum_over_prefix(f: &XPoly, index: usize) -> Result<XPoly> {
    let m = f.m();
    if index >= m {
        return Err(Error::IndexOutOfRange { index, m });
    }
    let mut out = XPoly::zero(m);
    for (mono, c) in f.terms() {
        let k = mono.exponents()[index] as usize;
        for (power, a) in faulhaber(k).coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            out.add_term(mono.with_exponent(index, power as u32), c * a);
        }
    }
    Ok(out)
}

/// `g = f + Σ_i sum_over_prefix(f, i)` on explicit polynomials.
///
/// Accumulates over integers: the coefficients of `f` and of the Faulhaber
/// polynomials are brought to common denominators first, and the result is
/// divided out once per term at the end.
pub fn apply_t_xpoly(f: &XPoly) -> XPoly {
    let m = f.m();
    let top = f
        .terms()
        .flat_map(|(k, _)| k.exponents().iter().copied())
        .max();
    let Some(top) = top else {
        return XPoly::zero(m);
    };

    // Faulhaber polynomials scaled to integer coefficients over one shared denominator.
    let sums: Vec<Arc<UniPoly>> = (0..=top as usize).map(faulhaber).collect();
    let sum_denom = sums
        .iter()
        .flat_map(|p| p.coeffs().iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let int_sums: Vec<Vec<(u32, BigInt)>> = sums
        .iter()
        .map(|p| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(power, c)| (power as u32, c.numer() * (&sum_denom / c.denom())))
                .collect()
        })
        .collect();

    let coeff_denom = f
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));

    let mut acc: HashMap<XMonomial, BigInt> = HashMap::with_capacity(f.len() * 2);
    let mut bump = |k: XMonomial, v: BigInt| match acc.get_mut(&k) {
        Some(slot) => *slot += v,
        None => {
            acc.insert(k, v);
        }
    };
    for (mono, c) in f.terms() {
        let scaled = c.numer() * (&coeff_denom / c.denom());
        bump(mono.clone(), &scaled * &sum_denom);
        for (i, &k) in mono.exponents().iter().enumerate() {
            for (power, a) in &int_sums[k as usize] {
                bump(mono.with_exponent(i, *power), &scaled * a);
            }
        }
    }

    let denom = coeff_denom * sum_denom;
    let terms: BTreeMap<XMonomial, Rational> = acc
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| {
            (
                k,
                Rational::new(v, denom.clone()).expect("positive denominator"),
            )
        })
        .collect();
    XPoly::from_map_unchecked(m, terms)
}

/// The operator T, evaluated in `degree(f) + 1` variables.
pub fn apply_t(f: &SigmaPoly) -> SigmaPoly {
    match f.degree() {
        Degree::NegInfinity => SigmaPoly::zero(),
        Degree::Finite(e) => apply_t_with_vars(f, e as usize + 1).expect("minimal stable range"),
    }
}

/// The operator T evaluated in `m` variables. The result is independent of
/// `m` once `m >= degree(f) + 1`; smaller `m` is rejected.
pub fn apply_t_with_vars(f: &SigmaPoly, m: usize) -> Result<SigmaPoly> {
    let required = match f.degree() {
        Degree::NegInfinity => return Ok(SigmaPoly::zero()),
        Degree::Finite(e) => e as usize + 1,
    };
    if m < required {
        return Err(Error::OutsideStableRange { required, m });
    }
    let mut expander = Expander::new(m);
    let x = sigma_to_xpoly_with(f, &mut expander);
    let g = apply_t_xpoly(&x);
    xpoly_to_sigma_with(&g, &mut expander)
}
