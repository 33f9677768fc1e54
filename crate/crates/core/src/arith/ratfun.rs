//! Reduced rational functions over the integers (equivalently over the rationals).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};


use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::poly_gcd;
use super::poly::{IntPoly, Polynomial, VarSet};
use crate::error::{Error, Result};

/// A fraction `numer / denom` of integer polynomials in canonical form:
/// the two parts share no non-unit polynomial factor, their integer contents are
/// coprime, and the graded-lex leading coefficient of the denominator is positive.
/// Zero is stored as `0 / 1`. Two equal rational functions therefore have equal
/// components.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numer: IntPoly,
    denom: IntPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked arithmetic; division by zero is reported instead of panicking.
pub fn ratfun_arith(
    f: &RationalFunction,
    g: &RationalFunction,
    op: RatOp,
) -> Result<RationalFunction> {
    if f.vars() != g.vars() {
        return Err(Error::usage("variable lists differ"));
    }
    Ok(match op {
        RatOp::Add => f + g,
        RatOp::Sub => f - g,
        RatOp::Mul => f * g,
        RatOp::Div => f.checked_div(g)?,
    })
}

impl RationalFunction {
    /// Reduces `numer / denom`. Panics if `denom` is zero.
    pub fn new(numer: IntPoly, denom: IntPoly) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        if numer.is_zero() {
            return Self::zero(numer.vars());
        }
        let g = poly_gcd(&numer, &denom);
        if g.is_one() {
            Self::normalize_content(numer, denom)
        } else {
            Self::normalize_content(
                numer.div_exact(&g).expect("gcd divides numerator"),
                denom.div_exact(&g).expect("gcd divides denominator"),
            )
        }
    }

    /// Builds from parts already known to be coprime as polynomials.
    fn normalize_content(numer: IntPoly, denom: IntPoly) -> Self {
        if numer.is_zero() {
            return Self::zero(numer.vars());
        }
        let g = numer.int_content().gcd(&denom.int_content());
        let (mut numer, mut denom) = if g.is_one() {
            (numer, denom)
        } else {
            (
                numer.div_coeff_exact(&g).expect("content divides"),
                denom.div_coeff_exact(&g).expect("content divides"),
            )
        };
        if denom.leading_coeff().is_negative() {
            numer = numer.neg();
            denom = denom.neg();
        }
        RationalFunction { numer, denom }
    }

    pub fn zero(vars: &VarSet) -> Self {
        RationalFunction {
            numer: IntPoly::zero(vars),
            denom: IntPoly::one(vars),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::from_int(vars, 1)
    }

    pub fn from_int(vars: &VarSet, v: i64) -> Self {
        RationalFunction {
            numer: IntPoly::from_i64(vars, v),
            denom: IntPoly::one(vars),
        }
    }

    pub fn from_rational(vars: &VarSet, v: &BigRational) -> Self {
        Self::normalize_content(
            IntPoly::constant(vars, v.numer().clone()),
            IntPoly::constant(vars, v.denom().clone()),
        )
    }

    pub fn var(vars: &VarSet, index: usize) -> Self {
        Self::from_poly(IntPoly::var(vars, index))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        let vars = p.vars().clone();
        Self::normalize_content(p, IntPoly::one(&vars))
    }

    pub fn from_polynomial(p: &Polynomial) -> Self {
        let (l, ip) = IntPoly::from_rational(p);
        Self::normalize_content(ip, IntPoly::constant(p.vars(), l))
    }

    pub fn vars(&self) -> &VarSet {
        self.numer.vars()
    }

    pub fn numer(&self) -> &IntPoly {
        &self.numer
    }

    pub fn denom(&self) -> &IntPoly {
        &self.denom
    }

    pub fn numerator(&self) -> Polynomial {
        self.numer.to_rational()
    }

    pub fn denominator(&self) -> Polynomial {
        self.denom.to_rational()
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_constant()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_content(self.denom.clone(), self.numer.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        self * &RationalFunction::from_poly(p.clone())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self * &RationalFunction::from_int(self.vars(), k)
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction {
            numer: self.numer.pow(e),
            denom: self.denom.pow(e),
        }
    }

    /// Degree of numerator minus degree of denominator when both are homogeneous
    /// in the variables `vars` (other variables are ignored).
    pub fn homogeneous_degree_in(&self, vars: &[usize]) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let n = self.numer.homogeneous_degree_in(vars)? as i64;
        let d = self.denom.homogeneous_degree_in(vars)? as i64;
        Some(n - d)
    }

    /// Exact value at a rational point (one value per variable, in order).
    pub fn evaluate_at(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.vars().len() {
            return Err(Error::usage("point dimension does not match variable list"));
        }
        let d = self.denom.evaluate(point);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.numer.evaluate(point) / d)
    }

    /// Exact value at a point given as `name -> value` pairs covering every variable.
    pub fn evaluate(&self, point: &[(&str, BigRational)]) -> Result<BigRational> {
        let mut values = Vec::with_capacity(self.vars().len());
        for name in self.vars().names() {
            let v = point
                .iter()
                .find(|(n, _)| n == name)
                .ok_or_else(|| Error::usage(format!("no value for variable {name}")))?;
            values.push(v.1.clone());
        }
        self.evaluate_at(&values)
    }

    pub fn parse(s: &str, vars: &VarSet) -> Result<Self> {
        super::text::parse_ratfun(s, vars)
    }
}

fn add_impl(f: &RationalFunction, g: &RationalFunction) -> RationalFunction {
    assert!(f.vars() == g.vars(), "variable lists differ");
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.denom == g.denom {
        return RationalFunction::new(&f.numer + &g.numer, f.denom.clone());
    }
    if f.denom.is_constant() && g.denom.is_constant() {
        let n = &(&f.numer * &g.denom) + &(&g.numer * &f.denom);
        return RationalFunction::normalize_content(n, &f.denom * &g.denom);
    }
    let g0 = poly_gcd(&f.denom, &g.denom);
    let fd = f.denom.div_exact(&g0).expect("gcd divides");
    let gd = g.denom.div_exact(&g0).expect("gcd divides");
    let n = &(&f.numer * &gd) + &(&g.numer * &fd);
    if n.is_zero() {
        return RationalFunction::zero(f.vars());
    }
    let h = poly_gcd(&n, &g0);
    let numer = n.div_exact(&h).expect("gcd divides");
    let denom = &fd * &g.denom.div_exact(&h).expect("gcd divides");
    RationalFunction::normalize_content(numer, denom)
}

fn mul_impl(f: &RationalFunction, g: &RationalFunction) -> RationalFunction {
    assert!(f.vars() == g.vars(), "variable lists differ");
    if f.is_zero() || g.is_zero() {
        return RationalFunction::zero(f.vars());
    }
    let g1 = poly_gcd(&f.numer, &g.denom);
    let g2 = poly_gcd(&g.numer, &f.denom);
    let numer = &f.numer.div_exact(&g1).expect("gcd divides") * &g.numer.div_exact(&g2).expect("gcd divides");
    let denom = &f.denom.div_exact(&g2).expect("gcd divides") * &g.denom.div_exact(&g1).expect("gcd divides");
    RationalFunction::normalize_content(numer, denom)
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        add_impl(self, rhs)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        add_impl(self, &-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        mul_impl(self, rhs)
    }
}

/// Panics on division by zero; use [`RationalFunction::checked_div`] otherwise.
impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &'a RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            numer: self.numer.neg(),
            denom: self.denom.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_ratfun(self))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl From<&RationalFunction> for String {
    fn from(f: &RationalFunction) -> String {
        f.to_string()
    }
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    use num_bigint::BigInt;
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> VarSet {
        VarSet::new(&["a", "h"])
    }

    fn r(s: &str) -> RationalFunction {
        RationalFunction::parse(s, &vars()).unwrap()
    }

    #[test]
    fn additive_identity() {
        let f = r("(1) / (a*h + h^2)");
        assert_eq!(&f + &RationalFunction::zero(&vars()), f);
    }

    #[test]
    fn inverse_product_is_one() {
        assert!((&r("(a) / (h)") * &r("(h) / (a)")).is_one());
    }

    #[test]
    fn product_gives_a2_closed_form() {
        let f = r("(1) / (a*h + h^2)");
        let g = r("(1) / (2*a*h + 4*h^2)");
        let expect = r("(1) / (2*a^2*h^2 + 6*a*h^3 + 4*h^4)");
        assert_eq!(&f * &g, expect);
    }

    #[test]
    fn division_by_zero_errors() {
        let z = RationalFunction::zero(&vars());
        assert_eq!(ratfun_arith(&r("a"), &z, RatOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_sign_and_content() {
        let f = RationalFunction::new(
            crate::arith::text::parse_int_poly("-2*a", &vars()).unwrap(),
            crate::arith::text::parse_int_poly("-4*h", &vars()).unwrap(),
        );
        assert_eq!(f.to_string(), "(a) / (2*h)");
    }

    #[test]
    fn evaluate_examples() {
        let f = r("(a + h) / (h)");
        let v = f.evaluate(&[("a", rat(1, 1)), ("h", rat(2, 1))]).unwrap();
        assert_eq!(v, rat(3, 2));
        let g = r("(1) / (a*h + h^2)");
        assert_eq!(g.evaluate(&[("a", rat(1, 1)), ("h", rat(-1, 1))]), Err(Error::Pole));
    }

    #[test]
    fn sums_cancel_to_zero() {
        let f = r("(1) / (a)");
        assert!((&f - &f).is_zero());
        let g = &r("(1) / (a + h)") + &r("(1) / (a - h)");
        assert_eq!(g, r("(2*a) / (a^2 - h^2)"));
    }
}
