//! Sparse multivariate polynomials in graded-lex order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::coeff::Coeff;
use crate::error::{Error, Result};

/// Ordered list of variable names shared by a family of polynomials.
#[derive(Clone, Debug, Eq)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        VarSet(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// `a1..a{rank}`, optionally `eps`, then `h`.
    pub fn standard(rank: usize, with_eps: bool) -> Self {
        let mut names: Vec<String> = (1..=rank).map(|i| format!("a{i}")).collect();
        if with_eps {
            names.push("eps".into());
        }
        names.push("h".into());
        VarSet(names.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// Exponent vector. Ordered graded-lexicographically: total degree first, then
/// lexicographically with earlier variables weighing more.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| b - a).collect())
    }

    pub fn meet(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with coefficients in `C`; terms sorted by descending
/// graded-lex monomial, no zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<C: Coeff> {
    vars: VarSet,
    terms: Vec<(Monomial, C)>,
}

/// Polynomial over the rationals.
pub type Polynomial = Poly<BigRational>;
/// Polynomial over the integers; the working representation inside rational functions.
pub type IntPoly = Poly<BigInt>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring operation; fails when the variable lists differ.
pub fn poly_arith<C: Coeff>(p: &Poly<C>, q: &Poly<C>, op: PolyOp) -> Result<Poly<C>> {
    if p.vars != q.vars {
        return Err(Error::usage(format!(
            "variable lists differ: {:?} vs {:?}",
            p.vars.names(),
            q.vars.names()
        )));
    }
    Ok(match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    })
}

impl<C: Coeff> Poly<C> {
    pub fn zero(vars: &VarSet) -> Self {
        Poly {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn constant(vars: &VarSet, c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(vars.len()), c));
        }
        p
    }

    pub fn from_i64(vars: &VarSet, c: i64) -> Self {
        Self::constant(vars, C::from_i64(c))
    }

    pub fn var(vars: &VarSet, index: usize) -> Self {
        assert!(index < vars.len(), "variable index out of range");
        Poly {
            vars: vars.clone(),
            terms: vec![(Monomial::var(vars.len(), index), C::one())],
        }
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: C) -> Self {
        assert_eq!(m.0.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(vars: &VarSet, terms: I) -> Self {
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "exponent vector length mismatch");
            acc.entry(m)
                .and_modify(|e| *e += &c)
                .or_insert(c);
        }
        Self::from_map(vars, acc)
    }

    fn from_map(vars: &VarSet, acc: FxHashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Constant term's value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coeff(&self) -> C {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[var] as u32).max().unwrap_or(0)
    }

    /// True iff every term has the same total degree (the zero polynomial counts).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    /// Degree in the given subset of variables if every term agrees on it.
    pub fn homogeneous_degree_in(&self, vars: &[usize]) -> Option<u32> {
        let deg = |m: &Monomial| vars.iter().map(|&v| m.0[v] as u32).sum::<u32>();
        let first = deg(&self.terms.first()?.0);
        self.terms.iter().all(|(m, _)| deg(m) == first).then_some(first)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[var] > 0)
    }

    /// Smallest monomial dividing every term (the monomial content).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(self.vars.len()),
            Some((m, _)) => it.fold(m.clone(), |acc, (t, _)| acc.meet(t)),
        }
    }

    pub fn neg(&self) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul_ref(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), k.mul_ref(c)))
                .collect(),
        }
    }

    /// Divides every exponent vector by `mono`; caller guarantees divisibility.
    pub(crate) fn div_monomial(&self, mono: &Monomial) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (mono.quotient_of(m), k.clone()))
                .collect(),
        }
    }

    /// Divides every coefficient exactly; `None` if some coefficient is not divisible.
    pub fn div_coeff_exact(&self, c: &C) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, k) in &self.terms {
            terms.push((m.clone(), k.div_exact(c)?));
        }
        Some(Poly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(self.vars == divisor.vars, "variable lists differ");
        let (dm, dc) = divisor.leading()?;
        if self.is_zero() {
            return Some(Self::zero(&self.vars));
        }
        if divisor.terms.len() == 1 {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                terms.push((dm.quotient_of(m), c.div_exact(dc)?));
            }
            return Some(Poly {
                vars: self.vars.clone(),
                terms,
            });
        }
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, C)> = Vec::new();
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.quotient_of(rm);
            let qc = rc.div_exact(dc)?;
            rem = rem.sub_scaled_shift(divisor, &qm, &qc);
            quot.push((qm, qc));
        }
        // quotient monomials are produced in strictly descending order
        Some(Poly {
            vars: self.vars.clone(),
            terms: quot,
        })
    }

    /// `self - c * mono * other`.
    fn sub_scaled_shift(&self, other: &Self, mono: &Monomial, c: &C) -> Self {
        let shifted = other.mul_monomial(mono, &-c.clone());
        merge_add(self, &shifted)
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> Poly<D> {
        Poly::from_terms(&self.vars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn to_rational(&self) -> Polynomial {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.to_rational())).collect(),
        }
    }

    /// Re-expresses the polynomial over a larger variable list containing all of its variables.
    pub fn embed(&self, target: &VarSet) -> Result<Self> {
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| Error::usage(format!("variable {n} missing from target list")))
            })
            .collect::<Result<_>>()?;
        Ok(Poly::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = Monomial::one(target.len());
                for (i, &x) in m.0.iter().enumerate() {
                    e.0[map[i]] = x;
                }
                (e, c.clone())
            }),
        ))
    }

    /// Substitutes rational values for all variables.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len());
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.to_rational();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Substitutes polynomials (over the target variable set) for each variable.
    pub fn substitute(&self, images: &[Poly<C>]) -> Poly<C> {
        assert_eq!(images.len(), self.vars.len());
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut acc = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (img, &e) in images.iter().zip(m.0.iter()) {
                if e > 0 {
                    t = &t * &img.pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl Poly<BigInt> {
    /// Gcd of the integer coefficients (non-negative).
    pub fn int_content(&self) -> BigInt {
        use num_integer::Integer;
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Clears denominators: returns `(k, p)` with `self_rational = p / k`, `k > 0`.
    pub fn from_rational(p: &Polynomial) -> (BigInt, IntPoly) {
        use num_integer::Integer;
        let mut l = BigInt::one();
        for (_, c) in &p.terms {
            l = l.lcm(c.denom());
        }
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&l / c.denom())))
            .collect();
        (
            l,
            Poly {
                vars: p.vars.clone(),
                terms,
            },
        )
    }
}

fn merge_add<C: Coeff>(p: &Poly<C>, q: &Poly<C>) -> Poly<C> {
    let mut out = Vec::with_capacity(p.terms.len() + q.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < p.terms.len() && j < q.terms.len() {
        match p.terms[i].0.cmp(&q.terms[j].0) {
            Ordering::Greater => {
                out.push(p.terms[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(q.terms[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let mut c = p.terms[i].1.clone();
                c += &q.terms[j].1;
                if !c.is_zero() {
                    out.push((p.terms[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&p.terms[i..]);
    out.extend_from_slice(&q.terms[j..]);
    Poly {
        vars: p.vars.clone(),
        terms: out,
    }
}

fn mul_polys<C: Coeff>(p: &Poly<C>, q: &Poly<C>) -> Poly<C> {
    if p.is_zero() || q.is_zero() {
        return Poly::zero(&p.vars);
    }
    if p.terms.len() == 1 {
        return q.mul_monomial(&p.terms[0].0, &p.terms[0].1);
    }
    if q.terms.len() == 1 {
        return p.mul_monomial(&q.terms[0].0, &q.terms[0].1);
    }
    let mut acc: FxHashMap<Monomial, C> =
        FxHashMap::with_capacity_and_hasher(p.terms.len() * q.terms.len() / 2 + 1, Default::default());
    for (ma, ca) in &p.terms {
        for (mb, cb) in &q.terms {
            let m = ma.mul(mb);
            let c = ca.mul_ref(cb);
            match acc.get_mut(&m) {
                Some(e) => *e += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
    }
    Poly::from_map(&p.vars, acc)
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        assert!(self.vars == rhs.vars, "variable lists differ");
        merge_add(self, rhs)
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        assert!(self.vars == rhs.vars, "variable lists differ");
        merge_add(self, &rhs.neg())
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        assert!(self.vars == rhs.vars, "variable lists differ");
        mul_polys(self, rhs)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::neg(self)
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_poly(self))
    }
}
