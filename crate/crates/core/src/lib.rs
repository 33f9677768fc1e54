//! Exact computation of the equivariant partition function of based
//! quasi-maps into flag varieties, through Whittaker vectors of Verma modules
//! over the Langlands dual Lie algebra, with independent cross-checks by the
//! quadratic Toda recursion, its non-stationary affine analogue, the SL(2)
//! closed form and fixed-point localization.

pub mod arith;
pub mod cli;
pub mod error;
pub mod lie;
pub mod localization;
pub mod partition;
pub mod sl2;
pub mod toda;
pub mod verma;

pub use error::{Error, Result};
