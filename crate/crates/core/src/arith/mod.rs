//! Exact arithmetic over the field of rational functions in `a1..ar, eps, h`.

mod coeff;
mod gcd;
mod matrix;
mod poly;
mod ratfun;
pub mod text;

pub use coeff::Coeff;
pub use gcd::{normalize_sign, poly_gcd, primitive_part};
pub use matrix::{solve_consistent, solve_fraction_free, FractionFreeSolution, Matrix};
pub use poly::{poly_arith, IntPoly, Monomial, Poly, PolyOp, Polynomial, VarSet};
pub use ratfun::{ratfun_arith, RatOp, RationalFunction};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
