//! Dense matrices of rational functions and fraction-free linear solving.


use super::gcd::poly_gcd;
use super::poly::{IntPoly, VarSet};
use super::ratfun::RationalFunction;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl Matrix {
    pub fn from_fn<F: FnMut(usize, usize) -> RationalFunction>(
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::usage("ragged matrix rows"));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(vars: &VarSet, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                RationalFunction::one(vars)
            } else {
                RationalFunction::zero(vars)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RationalFunction] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, x: &[RationalFunction]) -> Vec<RationalFunction> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let vars = x
                    .first()
                    .map(|v| v.vars().clone())
                    .unwrap_or_else(|| self.get(i, 0).vars().clone());
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(RationalFunction::zero(&vars), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }
}

/// Result of fraction-free elimination: `x_j = numerators[j] / denominator`.
#[derive(Clone, Debug)]
pub struct FractionFreeSolution {
    pub numerators: Vec<IntPoly>,
    pub denominator: IntPoly,
    /// Columns that received a pivot; the remaining unknowns are pinned to zero.
    pub pivot_columns: Vec<usize>,
}

impl FractionFreeSolution {
    pub fn rank(&self) -> usize {
        self.pivot_columns.len()
    }

    pub fn to_rational_functions(&self) -> Vec<RationalFunction> {
        self.numerators
            .iter()
            .map(|n| RationalFunction::new(n.clone(), self.denominator.clone()))
            .collect()
    }
}

/// Fraction-free Gauss-Jordan elimination on an integer-polynomial system
/// `a x = b` (Bareiss-style: every division by the previous pivot is exact).
/// Free unknowns are set to zero. An inconsistent system reports the original
/// index of the first row whose reduced right-hand side is nonzero.
pub fn solve_fraction_free(a: &[Vec<IntPoly>], b: &[IntPoly]) -> Result<FractionFreeSolution> {
    let nrows = a.len();
    if b.len() != nrows {
        return Err(Error::usage("right-hand side length does not match row count"));
    }
    let ncols = a.first().map_or(0, |r| r.len());
    if a.iter().any(|r| r.len() != ncols) {
        return Err(Error::usage("ragged matrix rows"));
    }
    let vars = match (b.first(), a.first().and_then(|r| r.first())) {
        (Some(p), _) | (None, Some(p)) => p.vars().clone(),
        (None, None) => {
            return Ok(FractionFreeSolution {
                numerators: Vec::new(),
                denominator: IntPoly::one(&VarSet::new::<&str>(&[])),
                pivot_columns: Vec::new(),
            })
        }
    };
    // augmented rows, tagged with original row index
    let mut m: Vec<(usize, Vec<IntPoly>)> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, rhs))| {
            let mut r = row.clone();
            r.push(rhs.clone());
            (i, r)
        })
        .collect();
    let mut prev = IntPoly::one(&vars);
    let mut pivot_columns = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows)
            .filter(|&i| !m[i].1[col].is_zero())
            .min_by_key(|&i| m[i].1[col].num_terms())
        else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].1.clone();
        let pivot = pivot_row[col].clone();
        for (i, (_, row)) in m.iter_mut().enumerate() {
            if i == rank {
                continue;
            }
            let factor = row[col].clone();
            for j in 0..=ncols {
                if row[j].is_zero() && (factor.is_zero() || pivot_row[j].is_zero()) {
                    continue;
                }
                let t = &(&pivot * &row[j]) - &(&factor * &pivot_row[j]);
                row[j] = if prev.is_one() {
                    t
                } else {
                    t.div_exact(&prev).ok_or_else(|| {
                        Error::Internal("fraction-free elimination produced an inexact division".into())
                    })?
                };
            }
        }
        prev = pivot;
        pivot_columns.push(col);
        rank += 1;
    }
    for (orig, row) in &m[rank..] {
        if !row[ncols].is_zero() {
            return Err(Error::Inconsistent { row: *orig });
        }
    }
    let mut numerators = vec![IntPoly::zero(&vars); ncols];
    for (k, &c) in pivot_columns.iter().enumerate() {
        numerators[c] = m[k].1[ncols].clone();
    }
    Ok(FractionFreeSolution {
        numerators,
        denominator: prev,
        pivot_columns,
    })
}

/// Solves a consistent system `m x = b` over the fraction field exactly.
///
/// Each row is scaled to integer polynomials, eliminated fraction-free, and
/// the returned `x` is checked by substitution before it is handed back.
pub fn solve_consistent(m: &Matrix, b: &[RationalFunction]) -> Result<Vec<RationalFunction>> {
    if b.len() != m.rows() {
        return Err(Error::usage("right-hand side length does not match row count"));
    }
    if m.rows() == 0 {
        return Ok(Vec::new());
    }
    let mut a = Vec::with_capacity(m.rows());
    let mut rhs = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let row = m.row(i);
        let l = row
            .iter()
            .chain(std::iter::once(&b[i]))
            .fold(IntPoly::one(b[i].vars()), |l, f| lcm(&l, f.denom()));
        let scaled = |f: &RationalFunction| {
            &f.numer().clone() * &l.div_exact(f.denom()).expect("lcm is a multiple")
        };
        a.push(row.iter().map(scaled).collect::<Vec<_>>());
        rhs.push(scaled(&b[i]));
    }
    let sol = solve_fraction_free(&a, &rhs)?;
    for (i, (row, r)) in a.iter().zip(&rhs).enumerate() {
        let lhs = row
            .iter()
            .zip(&sol.numerators)
            .fold(IntPoly::zero(r.vars()), |acc, (x, y)| &acc + &(x * y));
        if lhs != r * &sol.denominator {
            return Err(Error::Inconsistent { row: i });
        }
    }
    Ok(sol.to_rational_functions())
}

fn lcm(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if b.is_one() {
        return a.clone();
    }
    if a.is_one() {
        return b.clone();
    }
    let g = poly_gcd(a, b);
    &a.div_exact(&g).expect("gcd divides") * b
}
