//! Cartan data, roots and the invariant form for finite and affine types.
//!
//! Matrices follow the convention `a_ij = <alpha_i^vee, alpha_j>`. Affine data
//! carry the extra node last.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{RationalFunction, VarSet};
use crate::error::{Error, Result};

/// Catalog names understood by [`build_cartan`] (each may be wrapped as `dual(..)`).
pub const CATALOG: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2", "A1~", "A2~",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    Finite,
    Affine,
}

/// Integer coefficients over the simple roots.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Content(Vec<i64>);

impl Content {
    pub fn new(coefficients: Vec<i64>) -> Self {
        Content(coefficients)
    }

    pub fn zero(n: usize) -> Self {
        Content(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut c = Content::zero(n);
        c.0[i] = 1;
        c
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// All coefficients non-negative.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn height(&self) -> i64 {
        height(self)
    }

    pub fn minus_simple(&self, i: usize) -> Content {
        let mut c = self.clone();
        c.0[i] -= 1;
        c
    }

    pub fn plus_simple(&self, i: usize) -> Content {
        let mut c = self.clone();
        c.0[i] += 1;
        c
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Content) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Every positive content of height at most `cap`, sorted by [`Content::by_height`].
    pub fn all_positive_up_to(n: usize, cap: i64) -> Vec<Content> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Content>) {
            if i == cur.len() {
                out.push(Content(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur[i] = v;
                rec(i + 1, left - v, cur, out);
            }
            cur[i] = 0;
        }
        if n > 0 && cap >= 0 {
            rec(0, cap, &mut cur, &mut out);
        } else if n == 0 {
            out.push(Content(Vec::new()));
        }
        out.sort_by(Content::by_height);
        out
    }

    /// Order by height, then lexicographically.
    pub fn by_height(a: &Content, b: &Content) -> Ordering {
        a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0))
    }
}

impl fmt::Debug for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Add for &Content {
    type Output = Content;
    fn add(self, rhs: &Content) -> Content {
        Content(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Content {
    type Output = Content;
    fn sub(self, rhs: &Content) -> Content {
        Content(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Sum of the coefficients.
pub fn height(theta: &Content) -> i64 {
    theta.0.iter().sum()
}

/// A symmetrizable generalized Cartan matrix together with its type data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    label: String,
    matrix: Vec<Vec<i64>>,
    kind: Kind,
    symmetrizers: Vec<BigRational>,
}

impl CartanDatum {
    /// Validates and builds a datum; symmetrizers are derived from the matrix.
    pub fn new(label: impl Into<String>, matrix: Vec<Vec<i64>>, kind: Kind) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::usage("Cartan matrix must be square and nonempty"));
        }
        for i in 0..n {
            if matrix[i][i] != 2 {
                return Err(Error::usage("Cartan matrix diagonal must be 2"));
            }
            for j in 0..n {
                if i != j && (matrix[i][j] > 0 || (matrix[i][j] == 0) != (matrix[j][i] == 0)) {
                    return Err(Error::usage("invalid off-diagonal Cartan entries"));
                }
            }
        }
        let symmetrizers = symmetrize(&matrix, kind)?;
        let datum = CartanDatum {
            label: label.into(),
            matrix,
            kind,
            symmetrizers,
        };
        let rank = rational_rank(&datum.matrix_rational());
        match kind {
            Kind::Finite if rank != n => {
                return Err(Error::usage("finite Cartan matrix must be nonsingular"))
            }
            Kind::Affine => {
                if rank + 1 != n {
                    return Err(Error::usage("affine Cartan matrix must have corank 1"));
                }
                let v = kernel_vector(&datum.matrix);
                if !v.iter().all(|x| *x > 0) {
                    return Err(Error::usage("affine Cartan matrix needs a positive null vector"));
                }
            }
            _ => {}
        }
        Ok(datum)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_affine(&self) -> bool {
        self.kind == Kind::Affine
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    /// Symmetrizers `d_i` with `d_i a_ij = d_j a_ji`, scaled so that the largest
    /// one over finite-type vertices equals 1.
    pub fn symmetrizers(&self) -> &[BigRational] {
        &self.symmetrizers
    }

    /// Number of finite-type vertices (all of them for finite kind).
    pub fn finite_rank(&self) -> usize {
        match self.kind {
            Kind::Finite => self.size(),
            Kind::Affine => self.size() - 1,
        }
    }

    fn matrix_rational(&self) -> Vec<Vec<BigRational>> {
        self.matrix
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect()
    }

    /// Invariant form on the root lattice, longest finite-type root of squared length 2.
    pub fn form(&self) -> FormMatrix {
        let n = self.size();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &self.symmetrizers[i] * BigRational::from_integer(self.matrix[i][j].into()))
                    .collect()
            })
            .collect();
        FormMatrix { entries }
    }
}

fn symmetrize(matrix: &[Vec<i64>], kind: Kind) -> Result<Vec<BigRational>> {
    let n = matrix.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || matrix[i][j] == 0 {
                    continue;
                }
                let di = d[i].clone().expect("visited");
                let want = di * BigRational::new(matrix[i][j].into(), matrix[j][i].into());
                match &d[j] {
                    None => {
                        d[j] = Some(want);
                        stack.push(j);
                    }
                    Some(existing) if *existing != want => {
                        return Err(Error::usage("Cartan matrix is not symmetrizable"));
                    }
                    _ => {}
                }
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(|x| x.expect("assigned")).collect();
    let finite = match kind {
        Kind::Finite => n,
        Kind::Affine => n - 1,
    };
    let max = d[..finite.max(1)].iter().max().expect("nonempty").clone();
    Ok(d.into_iter().map(|x| x / &max).collect())
}

fn rational_rank(m: &[Vec<BigRational>]) -> usize {
    let mut m = m.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in 0..cols {
                    let t = &f * &m[rank][k];
                    m[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Primitive integer vector spanning the kernel of a corank-1 integer matrix,
/// sign chosen so the first nonzero entry is positive.
fn kernel_vector(matrix: &[Vec<i64>]) -> Vec<i64> {
    let n = matrix.len();
    let mut m: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..n).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for k in 0..n {
            m[rank][k] = &m[rank][k] * &inv;
        }
        for r in 0..n {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..n {
                    let t = &f * &m[rank][k];
                    m[r][k] -= t;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let free = (0..n).find(|c| !pivots.contains(c)).unwrap_or(n - 1);
    let mut v = vec![BigRational::zero(); n];
    v[free] = BigRational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[row][free].clone();
    }
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() {
        ints = ints.into_iter().map(|x| x / &g).collect();
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        ints = ints.into_iter().map(|x| -x).collect();
    }
    ints.iter()
        .map(|x| i64::try_from(x).expect("small null vector"))
        .collect()
}

fn catalog_matrix(name: &str) -> Option<(Vec<Vec<i64>>, Kind)> {
    let a = |n: usize| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect()
    };
    let b = |n: usize| {
        let mut m = a(n);
        m[n - 1][n - 2] = -2;
        m
    };
    let c = |n: usize| {
        let mut m = a(n);
        m[n - 2][n - 1] = -2;
        m
    };
    Some(match name {
        "A1" => (a(1), Kind::Finite),
        "A2" => (a(2), Kind::Finite),
        "A3" => (a(3), Kind::Finite),
        "A4" => (a(4), Kind::Finite),
        "B2" => (b(2), Kind::Finite),
        "B3" => (b(3), Kind::Finite),
        "C2" => (c(2), Kind::Finite),
        "C3" => (c(3), Kind::Finite),
        "D4" => (
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, -1],
                vec![0, -1, 2, 0],
                vec![0, -1, 0, 2],
            ],
            Kind::Finite,
        ),
        "G2" => (vec![vec![2, -1], vec![-3, 2]], Kind::Finite),
        "A1~" => (vec![vec![2, -2], vec![-2, 2]], Kind::Affine),
        "A2~" => (
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
            Kind::Affine,
        ),
        _ => return None,
    })
}

/// Looks up a catalog type; `dual(X)` yields the transposed datum of `X`.
pub fn build_cartan(type_name: &str) -> Result<CartanDatum> {
    let name = type_name.trim();
    if let Some(inner) = name.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
        return Ok(dualize(&build_cartan(inner)?));
    }
    let (matrix, kind) = catalog_matrix(name).ok_or_else(|| {
        Error::usage(format!(
            "unknown type '{type_name}' (known: {}, optionally wrapped as dual(...))",
            CATALOG.join(", ")
        ))
    })?;
    CartanDatum::new(name, matrix, kind)
}

/// Langlands dual: the transposed Cartan matrix.
pub fn dualize(c: &CartanDatum) -> CartanDatum {
    let n = c.size();
    let matrix = (0..n).map(|i| (0..n).map(|j| c.matrix[j][i]).collect()).collect();
    let label = match c.label.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
        Some(inner) => inner.to_string(),
        None => format!("dual({})", c.label),
    };
    CartanDatum::new(label, matrix, c.kind).expect("transpose of a valid datum is valid")
}

/// Marks: the primitive positive integer vector `m` with `A m = 0`.
pub fn null_vector(c: &CartanDatum) -> Result<Content> {
    if !c.is_affine() {
        return Err(Error::usage("null vector requested for a finite type"));
    }
    Ok(Content(kernel_vector(&c.matrix)))
}

/// Comarks: the null vector of the transposed matrix (coefficients of the
/// canonical central element in the simple coroots).
pub fn conull_vector(c: &CartanDatum) -> Result<Content> {
    null_vector(&dualize(c))
}

/// A positive root with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub content: Content,
    pub multiplicity: u32,
    pub imaginary: bool,
}

/// Positive roots by closure under simple-root strings, in height order.
///
/// `height_cap = 0` means "all" and is only valid for finite types. For affine
/// types, multiples of the null root are tagged imaginary with multiplicity equal
/// to the finite rank.
pub fn positive_roots(c: &CartanDatum, height_cap: i64) -> Result<Vec<Root>> {
    let n = c.size();
    if c.is_affine() && height_cap <= 0 {
        return Err(Error::usage("affine types need a positive height cap"));
    }
    if height_cap < 0 {
        return Err(Error::usage("negative height cap"));
    }
    let delta = if c.is_affine() { Some(null_vector(c)?) } else { None };
    let mut known: HashSet<Content> = HashSet::new();
    let mut first: Vec<Content> = (0..n).map(|i| Content::simple(n, i)).collect();
    first.sort_by(Content::by_height);
    let mut layers = vec![first];
    known.extend(layers[0].iter().cloned());
    loop {
        let level = layers.len() as i64 + 1;
        if height_cap > 0 && level > height_cap {
            break;
        }
        let mut next: Vec<Content> = Vec::new();
        for beta in layers.last().expect("nonempty") {
            for i in 0..n {
                let candidate = beta.plus_simple(i);
                if known.contains(&candidate) || next.contains(&candidate) {
                    continue;
                }
                // alpha_i-string through beta: p - q = <beta, alpha_i^vee>
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down = down.minus_simple(i);
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| c.matrix[i][j] * beta.get(j)).sum();
                if p - pairing > 0 {
                    next.push(candidate);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_by(Content::by_height);
        known.extend(next.iter().cloned());
        layers.push(next);
    }
    let finite_rank = c.finite_rank() as u32;
    Ok(layers
        .into_iter()
        .flatten()
        .map(|content| {
            let imaginary = delta.as_ref().is_some_and(|d| is_multiple_of(&content, d));
            Root {
                multiplicity: if imaginary { finite_rank } else { 1 },
                content,
                imaginary,
            }
        })
        .collect())
}

fn is_multiple_of(x: &Content, d: &Content) -> bool {
    let k = x.get(0) / d.get(0);
    k > 0 && x.0.iter().zip(&d.0).all(|(a, b)| *a == k * b)
}

/// Number of ways to write `theta` as a sum of positive roots (imaginary roots
/// counted with multiplicity), by dynamic programming over the root list.
pub fn kostant_partition(c: &CartanDatum, theta: &Content) -> Result<BigUint> {
    if theta.len() != c.size() {
        return Err(Error::usage("content length does not match the Cartan datum"));
    }
    if !theta.is_positive() {
        return Ok(BigUint::zero());
    }
    if theta.is_zero() {
        return Ok(BigUint::one());
    }
    let roots = positive_roots(c, if c.is_affine() { theta.height() } else { 0 })?;
    let dims: Vec<usize> = theta.0.iter().map(|&x| x as usize + 1).collect();
    let size: usize = dims.iter().product();
    let index = |v: &[i64]| -> usize {
        v.iter()
            .zip(&dims)
            .fold(0usize, |acc, (&x, &d)| acc * d + x as usize)
    };
    let mut counts = vec![BigUint::zero(); size];
    counts[0] = BigUint::one();
    let boxes = Content::all_in_box(theta);
    for root in roots.iter().filter(|r| r.content.le(theta)) {
        for _ in 0..root.multiplicity {
            // unbounded knapsack: ascending order lets a root repeat
            for v in &boxes {
                if !root.content.le(v) {
                    continue;
                }
                let from = v - &root.content;
                let add = counts[index(&from.0)].clone();
                if !add.is_zero() {
                    counts[index(&v.0)] += add;
                }
            }
        }
    }
    Ok(counts[index(&theta.0)].clone())
}

impl Content {
    /// All contents `v` with `0 <= v <= bound` componentwise, in lexicographic order.
    fn all_in_box(bound: &Content) -> Vec<Content> {
        let mut out = vec![Content(Vec::new())];
        for &b in &bound.0 {
            out = out
                .into_iter()
                .flat_map(|c| {
                    (0..=b).map(move |x| {
                        let mut v = c.0.clone();
                        v.push(x);
                        Content(v)
                    })
                })
                .collect();
        }
        out
    }
}

/// Gram matrix `B_ij = (alpha_i, alpha_j)` of the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl FormMatrix {
    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

/// `sum_ij x_i B_ij y_j`.
pub fn form_pairing(b: &FormMatrix, x: &Content, y: &Content) -> BigRational {
    let n = b.size();
    let mut acc = BigRational::zero();
    for i in 0..n {
        if x.get(i) == 0 {
            continue;
        }
        for j in 0..n {
            if y.get(j) != 0 {
                acc += &b.entries[i][j] * BigRational::from_integer((x.get(i) * y.get(j)).into());
            }
        }
    }
    acc
}

/// For affine data: `(finite part, null-root coefficient)` of an affine content,
/// using `alpha_0 = delta - theta_highest` with the extra node last.
pub fn split_affine(c: &CartanDatum, theta: &Content) -> Result<(Vec<i64>, i64)> {
    let marks = null_vector(c)?;
    let n = c.size();
    let m0 = marks.get(n - 1);
    let n0 = theta.get(n - 1);
    if n0 % m0 != 0 {
        return Err(Error::usage("affine content not a multiple of the extra node's mark"));
    }
    let d = n0 / m0;
    let fin = (0..n - 1).map(|i| theta.get(i) - d * marks.get(i)).collect();
    Ok((fin, d))
}

/// `(a, theta)` for a finite-part content, as a linear form in `a_1..a_r`
/// (the first `r` variables), using `a_i = a(h_i)` and
/// `(a, alpha_i) = (alpha_i, alpha_i) / 2 * a_i`.
pub fn a_pairing(b: &FormMatrix, theta_fin: &[i64], vars: &VarSet) -> RationalFunction {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut acc = RationalFunction::zero(vars);
    for (i, &n) in theta_fin.iter().enumerate() {
        if n != 0 {
            let k = b.entry(i, i) * &half * BigRational::from_integer(n.into());
            let term = &RationalFunction::from_rational(vars, &k) * &RationalFunction::var(vars, i);
            acc = &acc + &term;
        }
    }
    acc
}

/// The finite-type block of an affine form (the whole form for finite data).
pub fn finite_block(c: &CartanDatum) -> FormMatrix {
    let b = c.form();
    let r = c.finite_rank();
    FormMatrix {
        entries: (0..r).map(|i| (0..r).map(|j| b.entry(i, j).clone()).collect()).collect(),
    }
}
