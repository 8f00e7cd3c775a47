//! Exact rationals and sparse polynomials in two bases: the variables
//! `x_1..x_m`, and the graded elementary symmetric functions `σ_1, σ_2, ...`.

pub(crate) mod basis;
mod rational;
mod sigma;
mod xpoly;

use std::fmt;
use std::ops::Add;

pub(crate) use basis::Expander;
pub use basis::{sigma_expand, sigma_to_xpoly, xpoly_to_sigma};
pub use rational::{ArithOp, Rational};
pub use sigma::{SigmaMonomial, SigmaPoly};
pub use xpoly::{XMonomial, XPoly};

/// Polynomial degree, with the zero polynomial at `NegInfinity` so that
/// `deg(p * q) = deg(p) + deg(q)` holds without exceptions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}
