pub mod error;
pub mod gamma;
pub mod summation;
pub mod symcore;

pub use error::{Error, Result};
pub use gamma::{
    gamma, h0, h0_single, oracle_cross_check, oracle_value, verify_paper_tables, GammaCache,
    VerificationReport,
};
pub use summation::{
    apply_t, apply_t_with_vars, faulhaber, sum_over_prefix, FalcoeffTable, UniPoly,
};
pub use symcore::*;

// The guide's and README's code blocks run as doctests.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/sigma.md")]
    mod sigma {}
    #[doc = include_str!("../../../book/src/summation.md")]
    mod summation {}
    #[doc = include_str!("../../../book/src/gamma.md")]
    mod gamma {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
