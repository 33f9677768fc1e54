//! Lowest-weight Verma modules, their contravariant pairing, and Whittaker
//! vector components.
//!
//! A weight space `M(lambda)_{lambda + theta}` is spanned by words
//! `e_{j1} ... e_{jk} v`. Only the Cartan matrix of the working algebra enters:
//! lowering generators act through `[f_i, e_j] = -delta_ij h_i`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::arith::{poly_gcd, solve_fraction_free, IntPoly, Matrix, RationalFunction, VarSet};
use crate::error::{Error, Result};
use crate::lie::{conull_vector, height, kostant_partition, CartanDatum, Content};

/// Default height cap for finite types.
pub const DEFAULT_FINITE_CAP: i64 = 8;
/// Default total-content cap for affine types.
pub const DEFAULT_AFFINE_CAP: i64 = 6;

/// Seed for the sample points used to pick a certified basis.
const SAMPLE_SEED: u64 = 0x5eed_0f_1a7b;
const SAMPLE_ATTEMPTS: usize = 4;

/// Values `lambda(h_i)` on the simple coroots of the working algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowestWeight {
    values: Vec<RationalFunction>,
}

impl LowestWeight {
    pub fn new(values: Vec<RationalFunction>) -> Result<Self> {
        let Some(first) = values.first() else {
            return Err(Error::usage("lowest weight needs at least one value"));
        };
        if values.iter().any(|v| v.vars() != first.vars()) {
            return Err(Error::usage("lowest weight values use different variables"));
        }
        Ok(LowestWeight { values })
    }

    /// `a/h + rho` on the working algebra, over the variables of
    /// [`standard_vars`]. For affine data the extra coroot gets
    /// `(eps/(2 h^2) - sum_i c_i a_i / h) / c_0 + 1` with `c` the comarks.
    pub fn standard(working: &CartanDatum) -> Result<Self> {
        let vars = standard_vars(working);
        let r = working.finite_rank();
        let h = RationalFunction::var(&vars, vars.len() - 1);
        let one = RationalFunction::one(&vars);
        let mut values: Vec<RationalFunction> = (0..r)
            .map(|i| &(&RationalFunction::var(&vars, i) / &h) + &one)
            .collect();
        if working.is_affine() {
            let c = conull_vector(working)?;
            let eps = RationalFunction::var(&vars, r);
            let mut v = &eps / &(&h * &h).scale_int(2);
            for i in 0..r {
                let t = (&RationalFunction::var(&vars, i) / &h).scale_int(c.get(i));
                v = &v - &t;
            }
            let c0 = RationalFunction::from_int(&vars, c.get(r));
            values.push(&(&v / &c0) + &one);
        }
        LowestWeight::new(values)
    }

    pub fn values(&self) -> &[RationalFunction] {
        &self.values
    }

    pub fn vars(&self) -> &VarSet {
        self.values[0].vars()
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// `(L, D)` with `lambda(h_i) = L_i / D` and `D` the lcm of denominators.
    pub fn scaled(&self) -> (Vec<IntPoly>, IntPoly) {
        let mut d = IntPoly::one(self.vars());
        for v in &self.values {
            if !v.denom().is_one() {
                let g = poly_gcd(&d, v.denom());
                d = &d.div_exact(&g).expect("gcd divides") * v.denom();
            }
        }
        let l = self
            .values
            .iter()
            .map(|v| v.numer() * &d.div_exact(v.denom()).expect("lcm is a multiple"))
            .collect();
        (l, d)
    }

    pub fn evaluate_at(&self, point: &[BigRational]) -> Result<Vec<BigRational>> {
        self.values.iter().map(|v| v.evaluate_at(point)).collect()
    }
}

/// `a1..ar, h` for finite data and `a1..ar, eps, h` for affine data, `r` the
/// finite rank.
pub fn standard_vars(working: &CartanDatum) -> VarSet {
    VarSet::standard(working.finite_rank(), working.is_affine())
}

/// Letters `j1..jk` of `e_{j1} ... e_{jk} v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(SmallVec<[u8; 16]>);

impl Word {
    pub fn new(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&j| u8::try_from(j).expect("index fits")).collect())
    }

    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&j| j as usize)
    }

    pub fn content(&self, rank: usize) -> Content {
        let mut c = vec![0i64; rank];
        for j in self.letters() {
            c[j] += 1;
        }
        Content::new(c)
    }

    fn without(&self, m: usize) -> Word {
        let mut w = self.0.clone();
        w.remove(m);
        Word(w)
    }

    fn tail(&self) -> Word {
        Word(self.0[1..].iter().copied().collect())
    }

    /// `e_i` applied on the left.
    pub fn raise(&self, i: usize) -> Word {
        let mut w = SmallVec::with_capacity(self.0.len() + 1);
        w.push(u8::try_from(i).expect("index fits"));
        w.extend_from_slice(&self.0);
        Word(w)
    }
}

/// All distinct words of content `theta`, in lexicographic order.
pub fn words_of_content(theta: &Content) -> Vec<Word> {
    fn rec(left: &mut [i64], cur: &mut Vec<usize>, out: &mut Vec<Word>) {
        if left.iter().all(|&x| x == 0) {
            out.push(Word::new(cur));
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i);
                rec(left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    if theta.is_positive() {
        rec(&mut theta.coefficients().to_vec(), &mut Vec::new(), &mut out);
    }
    out
}

/// Ring operations needed by the pairing recursion.
pub trait PairingScalar: Clone {
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn times_int(&self, k: i64) -> Self;
}

impl PairingScalar for BigRational {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn times_int(&self, k: i64) -> Self {
        self * BigRational::from_integer(k.into())
    }
}

impl PairingScalar for IntPoly {
    fn vanishes(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn times_int(&self, k: i64) -> Self {
        IntPoly::scale(self, &BigInt::from(k))
    }
}

impl PairingScalar for RationalFunction {
    fn vanishes(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn times_int(&self, k: i64) -> Self {
        self.scale_int(k)
    }
}

/// Memoized contravariant pairing, scaled by `unit^length`.
///
/// With `lambda(h_i) = values_i / unit`, `pair(u, u')` returns
/// `unit^len(u) * <e_u v, e_u' v>`; with `unit = 1` it is the pairing itself.
#[derive(Clone, Debug)]
pub struct Pairing<R: PairingScalar> {
    cartan: Vec<Vec<i64>>,
    values: Vec<R>,
    unit: R,
    zero: R,
    one: R,
    coefficients: FxHashMap<(usize, i64), R>,
    memo: FxHashMap<(Word, Word), R>,
}

impl<R: PairingScalar> Pairing<R> {
    pub fn new(cartan: &[Vec<i64>], values: Vec<R>, unit: R, one: R) -> Self {
        assert_eq!(cartan.len(), values.len(), "lowest weight rank mismatch");
        let zero = unit.times_int(0);
        Pairing {
            cartan: cartan.to_vec(),
            values,
            unit,
            zero,
            one,
            coefficients: FxHashMap::default(),
            memo: FxHashMap::default(),
        }
    }

    fn coefficient(&mut self, i: usize, s: i64) -> R {
        if let Some(c) = self.coefficients.get(&(i, s)) {
            return c.clone();
        }
        let c = self.values[i].plus(&self.unit.times_int(s)).times_int(-1);
        self.coefficients.insert((i, s), c.clone());
        c
    }

    /// `f_i e_u v` as a combination of words of content `content(u) - alpha_i`,
    /// coefficients scaled by `unit`.
    pub fn apply_lowering(&mut self, i: usize, u: &Word) -> Vec<(Word, R)> {
        let letters: Vec<usize> = u.letters().collect();
        let mut out: Vec<(Word, R)> = Vec::new();
        let mut s = 0i64;
        for m in (0..letters.len()).rev() {
            if letters[m] == i {
                let c = self.coefficient(i, s);
                let w = u.without(m);
                match out.iter_mut().find(|(x, _)| *x == w) {
                    Some((_, acc)) => *acc = acc.plus(&c),
                    None => out.push((w, c)),
                }
            }
            s += self.cartan[i][letters[m]];
        }
        out.retain(|(_, c)| !c.vanishes());
        out
    }

    /// Scaled `<e_u v, e_w v>`; zero unless the contents agree.
    pub fn pair(&mut self, u: &Word, w: &Word) -> R {
        if u.len() != w.len() {
            return self.zero.clone();
        }
        if u.is_empty() {
            return self.one.clone();
        }
        if let Some(v) = self.memo.get(&(u.clone(), w.clone())) {
            return v.clone();
        }
        let i = u.letters().next().expect("nonempty");
        let rest = u.tail();
        let mut acc = self.zero.clone();
        for (x, c) in self.apply_lowering(i, w) {
            let p = self.pair(&rest, &x);
            if !p.vanishes() {
                acc = acc.plus(&c.times(&p));
            }
        }
        self.memo.insert((u.clone(), w.clone()), acc.clone());
        acc
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }
}

/// `f_i e_u v` for a symbolic lowest weight.
pub fn apply_lowering(
    working: &CartanDatum,
    i: usize,
    u: &Word,
    lam: &LowestWeight,
) -> Vec<(Word, RationalFunction)> {
    symbolic_pairing(working, lam).apply_lowering(i, u)
}

fn symbolic_pairing(working: &CartanDatum, lam: &LowestWeight) -> Pairing<RationalFunction> {
    let one = RationalFunction::one(lam.vars());
    Pairing::new(working.matrix(), lam.values().to_vec(), one.clone(), one)
}

fn scaled_pairing(working: &CartanDatum, lam: &LowestWeight) -> (Pairing<IntPoly>, IntPoly) {
    let (l, d) = lam.scaled();
    let one = IntPoly::one(lam.vars());
    (Pairing::new(working.matrix(), l, d.clone(), one), d)
}

fn numeric_pairing(working: &CartanDatum, lam: &[BigRational]) -> Pairing<BigRational> {
    Pairing::new(working.matrix(), lam.to_vec(), BigRational::one(), BigRational::one())
}

/// Words spanning one weight space and their Gram matrix.
#[derive(Clone, Debug)]
pub struct WeightSpaceModel {
    pub theta: Content,
    pub words: Vec<Word>,
    pub gram: Matrix,
}

fn check_content(working: &CartanDatum, theta: &Content, cap: i64) -> Result<()> {
    if theta.len() != working.size() {
        return Err(Error::usage("content length does not match the Cartan datum"));
    }
    if !theta.is_positive() {
        return Err(Error::usage("content must be positive"));
    }
    if height(theta) > cap {
        return Err(Error::Resource(format!(
            "height {} exceeds the cap {cap}",
            height(theta)
        )));
    }
    Ok(())
}

/// Symbolic Gram matrix of the word spanning set of `M(lambda)_{lambda + theta}`.
pub fn gram_matrix(
    working: &CartanDatum,
    theta: &Content,
    lam: &LowestWeight,
    cap: i64,
) -> Result<WeightSpaceModel> {
    check_content(working, theta, cap)?;
    let words = words_of_content(theta);
    let (mut pairing, d) = scaled_pairing(working, lam);
    let dk = d.pow(height(theta) as u32);
    let mut entries = vec![vec![None; words.len()]; words.len()];
    for (r, u) in words.iter().enumerate() {
        for (s, w) in words.iter().enumerate() {
            entries[r][s] = Some(RationalFunction::new(pairing.pair(u, w), dk.clone()));
        }
    }
    let gram = Matrix::from_rows(
        entries
            .into_iter()
            .map(|row| row.into_iter().map(|x| x.expect("filled")).collect())
            .collect(),
    )?;
    Ok(WeightSpaceModel {
        theta: theta.clone(),
        words,
        gram,
    })
}

/// Gram matrix of the words of content `theta` at numeric lowest-weight values.
pub fn numeric_gram(working: &CartanDatum, theta: &Content, lam: &[BigRational]) -> Vec<Vec<BigRational>> {
    let words = words_of_content(theta);
    let mut pairing = numeric_pairing(working, lam);
    words
        .iter()
        .map(|u| words.iter().map(|w| pairing.pair(u, w)).collect())
        .collect()
}

/// Indices of a maximal linearly independent set of rows, chosen greedily in order.
pub fn independent_rows(m: &[Vec<BigRational>]) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (r, row) in m.iter().enumerate() {
        let mut v = row.clone();
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = &v[*p] / &b[*p];
                for (x, y) in v.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            basis.push((p, v));
            chosen.push(r);
        }
    }
    chosen
}

pub fn rank(m: &[Vec<BigRational>]) -> usize {
    independent_rows(m).len()
}

/// Deterministic sample points with nonzero coordinates.
pub fn sample_points(nvars: usize, seed: u64, count: usize) -> Vec<Vec<BigRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..nvars)
                .map(|_| {
                    let mut n: i64 = rng.gen_range(-997..=997);
                    if n == 0 {
                        n = 1;
                    }
                    let d: i64 = rng.gen_range(1..=61);
                    BigRational::new(n.into(), d.into())
                })
                .collect()
        })
        .collect()
}

/// The weight-`theta` component `w_theta = sum_u c_u e_u v` of the Whittaker
/// vector, with coefficients over a common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhittakerComponent {
    pub theta: Content,
    pub words: Vec<Word>,
    numerators: Vec<IntPoly>,
    denominator: IntPoly,
    norm: RationalFunction,
}

impl WhittakerComponent {
    /// Builds a component from explicit coefficients; the norm is recomputed as
    /// `h^(-height) * sum_u c_u`.
    pub fn from_coefficients(
        theta: Content,
        words: Vec<Word>,
        coefficients: &[RationalFunction],
    ) -> Result<Self> {
        if coefficients.len() != words.len() || words.is_empty() {
            return Err(Error::usage("one coefficient per word is required"));
        }
        let vars = coefficients[0].vars().clone();
        let mut d = IntPoly::one(&vars);
        for c in coefficients {
            if !c.denom().is_one() {
                let g = poly_gcd(&d, c.denom());
                d = &d.div_exact(&g).expect("gcd divides") * c.denom();
            }
        }
        let numerators = coefficients
            .iter()
            .map(|c| c.numer() * &d.div_exact(c.denom()).expect("lcm is a multiple"))
            .collect();
        Ok(Self::assemble(theta, words, numerators, d))
    }

    fn assemble(theta: Content, words: Vec<Word>, numerators: Vec<IntPoly>, denominator: IntPoly) -> Self {
        let vars = denominator.vars().clone();
        let h = IntPoly::var(&vars, vars.len() - 1);
        let sum = numerators
            .iter()
            .fold(IntPoly::zero(&vars), |acc, n| &acc + n);
        let scale = h.pow(height(&theta) as u32);
        let norm = RationalFunction::new(sum, &denominator * &scale);
        WhittakerComponent {
            theta,
            words,
            numerators,
            denominator,
            norm,
        }
    }

    /// `<w_theta, w_theta>`.
    pub fn norm(&self) -> &RationalFunction {
        &self.norm
    }

    pub fn coefficients(&self) -> Vec<RationalFunction> {
        self.numerators
            .iter()
            .map(|n| RationalFunction::new(n.clone(), self.denominator.clone()))
            .collect()
    }

    pub fn coefficient(&self, index: usize) -> RationalFunction {
        RationalFunction::new(self.numerators[index].clone(), self.denominator.clone())
    }
}

/// `(-1)^height(theta)`: the sign relating `w'_theta` to `w_theta`.
pub fn dual_sign_component(theta: &Content) -> i64 {
    if height(theta) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Computes Whittaker components of one Verma module, sharing pairing caches
/// across weight spaces.
///
/// Each component solves `gram * c = h^(-k) * 1`. A subset of words whose
/// numeric Gram rows are independent at a sample point and whose size equals
/// the Kostant count is a basis of the weight space; the system restricted to
/// it is solved symbolically and the result is checked against every row of
/// the full system. Without such a subset the full system is solved.
pub struct WhittakerSolver {
    working: CartanDatum,
    lam: LowestWeight,
    cap: i64,
    scaled: Pairing<IntPoly>,
    unit: IntPoly,
    samples: Vec<Pairing<BigRational>>,
}

impl WhittakerSolver {
    pub fn new(working: &CartanDatum, lam: LowestWeight, cap: i64) -> Result<Self> {
        if lam.rank() != working.size() {
            return Err(Error::usage("lowest weight rank does not match the Cartan datum"));
        }
        let (scaled, unit) = scaled_pairing(working, &lam);
        let mut samples = Vec::new();
        for point in sample_points(lam.vars().len(), SAMPLE_SEED, SAMPLE_ATTEMPTS * 2) {
            if let Ok(values) = lam.evaluate_at(&point) {
                samples.push(numeric_pairing(working, &values));
            }
            if samples.len() == SAMPLE_ATTEMPTS {
                break;
            }
        }
        Ok(WhittakerSolver {
            working: working.clone(),
            lam,
            cap,
            scaled,
            unit,
            samples,
        })
    }

    /// Solver for the standard lowest weight `a/h + rho` of `working`.
    pub fn standard(working: &CartanDatum, cap: i64) -> Result<Self> {
        Self::new(working, LowestWeight::standard(working)?, cap)
    }

    pub fn working(&self) -> &CartanDatum {
        &self.working
    }

    pub fn lowest_weight(&self) -> &LowestWeight {
        &self.lam
    }

    pub fn vars(&self) -> &VarSet {
        self.lam.vars()
    }

    /// Scaled pairing `unit^len * <e_u v, e_w v>`.
    pub fn scaled_pair(&mut self, u: &Word, w: &Word) -> IntPoly {
        self.scaled.pair(u, w)
    }

    fn basis_subset(&mut self, words: &[Word], target: usize) -> Option<Vec<usize>> {
        for pairing in &mut self.samples {
            let g: Vec<Vec<BigRational>> = words
                .iter()
                .map(|u| words.iter().map(|w| pairing.pair(u, w)).collect())
                .collect();
            let rows = independent_rows(&g);
            if rows.len() == target {
                return Some(rows);
            }
        }
        None
    }

    pub fn component(&mut self, theta: &Content) -> Result<WhittakerComponent> {
        check_content(&self.working, theta, self.cap)?;
        let vars = self.vars().clone();
        let words = words_of_content(theta);
        let k = height(theta) as u32;
        if k == 0 {
            return Ok(WhittakerComponent::assemble(
                theta.clone(),
                words,
                vec![IntPoly::one(&vars)],
                IntPoly::one(&vars),
            ));
        }
        // gram = P / unit^k, so P c = (unit / h)^k
        let h = IntPoly::var(&vars, vars.len() - 1);
        let rhs = RationalFunction::new(self.unit.pow(k), h.pow(k));
        let (rhs_n, rhs_d) = (rhs.numer().clone(), rhs.denom().clone());
        let dim = kostant_partition(&self.working, theta)?;
        let dim = usize::try_from(&dim).map_err(|_| Error::Resource("weight space too large".into()))?;
        let subset = self.basis_subset(&words, dim);
        let cols: Vec<usize> = subset.unwrap_or_else(|| (0..words.len()).collect());
        let a: Vec<Vec<IntPoly>> = cols
            .iter()
            .map(|&r| cols.iter().map(|&s| self.scaled.pair(&words[r], &words[s])).collect())
            .collect();
        let b = vec![rhs_n.clone(); cols.len()];
        let sol = solve_fraction_free(&a, &b)?;
        let mut numerators = vec![IntPoly::zero(&vars); words.len()];
        for (idx, &c) in cols.iter().enumerate() {
            numerators[c] = sol.numerators[idx].clone();
        }
        let expected = &rhs_n * &sol.denominator;
        for (r, u) in words.iter().enumerate() {
            let mut lhs = IntPoly::zero(&vars);
            for &c in &cols {
                if !numerators[c].is_zero() {
                    lhs = &lhs + &(&self.scaled.pair(u, &words[c]) * &numerators[c]);
                }
            }
            if lhs != expected {
                return Err(Error::Internal(format!(
                    "Whittaker system for {theta:?} fails at row {r}"
                )));
            }
        }
        Ok(WhittakerComponent::assemble(
            theta.clone(),
            words,
            numerators,
            &sol.denominator * &rhs_d,
        ))
    }

    /// Checks `f_i w_theta = w_{theta - alpha_i} / h` for every `i`, by pairing
    /// both sides against all words of content `theta - alpha_i`.
    pub fn verify(&mut self, theta: &Content, components: &HashMap<Content, WhittakerComponent>) -> Result<bool> {
        let comp = components
            .get(theta)
            .ok_or_else(|| Error::usage(format!("missing component {theta:?}")))?;
        let vars = self.vars().clone();
        let h = IntPoly::var(&vars, vars.len() - 1);
        for i in 0..theta.len() {
            if theta.get(i) == 0 {
                continue;
            }
            let lower = theta.minus_simple(i);
            let prev = components
                .get(&lower)
                .ok_or_else(|| Error::usage(format!("missing component {lower:?}")))?;
            // f_i w_theta = (1 / (den * unit)) * sum_w image[w] e_w v
            let mut image: FxHashMap<Word, IntPoly> = FxHashMap::default();
            for (u, n) in comp.words.iter().zip(&comp.numerators) {
                if n.is_zero() {
                    continue;
                }
                for (w, c) in self.scaled.apply_lowering(i, u) {
                    let t = &c * n;
                    let e = image.entry(w).or_insert_with(|| IntPoly::zero(&vars));
                    *e = &*e + &t;
                }
            }
            let lhs_scale = &h * &prev.denominator;
            let rhs_scale = &comp.denominator * &self.unit;
            for x in &prev.words {
                let mut l = IntPoly::zero(&vars);
                for (w, c) in &image {
                    l = &l + &(c * &self.scaled.pair(w, x));
                }
                let mut r = IntPoly::zero(&vars);
                for (u, n) in prev.words.iter().zip(&prev.numerators) {
                    if !n.is_zero() {
                        r = &r + &(n * &self.scaled.pair(u, x));
                    }
                }
                if &l * &lhs_scale != &r * &rhs_scale {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// One-shot component computation for the given lowest weight.
pub fn whittaker_component(
    working: &CartanDatum,
    theta: &Content,
    lam: &LowestWeight,
    cap: i64,
) -> Result<WhittakerComponent> {
    WhittakerSolver::new(working, lam.clone(), cap)?.component(theta)
}

/// One-shot verification of the Whittaker condition at `theta`.
pub fn verify_whittaker(
    working: &CartanDatum,
    theta: &Content,
    lam: &LowestWeight,
    components: &HashMap<Content, WhittakerComponent>,
) -> Result<bool> {
    WhittakerSolver::new(working, lam.clone(), i64::MAX)?.verify(theta, components)
}
