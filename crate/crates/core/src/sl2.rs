//! Closed forms for SL(2): the coefficients `A_d`, the Gram values of the
//! Verma module, and its explicit structure constants.

use crate::arith::{RationalFunction, VarSet};
use crate::error::{Error, Result};

/// `a1, h`.
pub fn sl2_vars() -> VarSet {
    VarSet::standard(1, false)
}

fn a(vars: &VarSet) -> RationalFunction {
    RationalFunction::var(vars, 0)
}

fn h(vars: &VarSet) -> RationalFunction {
    RationalFunction::var(vars, 1)
}

/// `A_d = 1 / (d! h^d prod_{i=1}^d (a + i h))`.
pub fn closed_form_a(d: u32) -> RationalFunction {
    let vars = sl2_vars();
    let (a, h) = (a(&vars), h(&vars));
    let mut denom = RationalFunction::one(&vars);
    for i in 1..=d as i64 {
        let factor = &(&a + &h.scale_int(i)) * &h.scale_int(i);
        denom = &denom * &factor;
    }
    denom.inv().expect("product of nonzero factors")
}

/// `<m_d, m_d> = (-1)^d d! prod_{i=1}^d (a/h + i)`.
pub fn gram_value(d: u32) -> RationalFunction {
    let vars = sl2_vars();
    let lam = &a(&vars) / &h(&vars);
    let mut g = RationalFunction::from_int(&vars, if d % 2 == 0 { 1 } else { -1 });
    for i in 1..=d as i64 {
        let factor = (&lam + &RationalFunction::from_int(&vars, i)).scale_int(i);
        g = &g * &factor;
    }
    g
}

/// Golden values at one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Golden {
    pub d: u32,
    pub a_d: RationalFunction,
    pub gram_d: RationalFunction,
}

pub fn sl2_golden(d: u32) -> Sl2Golden {
    Sl2Golden {
        d,
        a_d: closed_form_a(d),
        gram_d: gram_value(d),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sl2Op {
    E,
    H,
    F,
}

/// Action on the basis `m_d`: `h m_d = (lam + 2d + 1) m_d`, `e m_d = m_{d+1}`,
/// `f m_d = -d (lam + d) m_{d-1}`. Returns the coefficient and the target
/// index, or `None` when the result is zero.
pub fn sl2_verma_action(op: Sl2Op, d: u32, lam: &RationalFunction) -> Option<(RationalFunction, u32)> {
    let vars = lam.vars();
    let n = i64::from(d);
    match op {
        Sl2Op::H => Some((lam + &RationalFunction::from_int(vars, 2 * n + 1), d)),
        Sl2Op::E => Some((RationalFunction::one(vars), d + 1)),
        Sl2Op::F if d == 0 => None,
        Sl2Op::F => Some((
            (lam + &RationalFunction::from_int(vars, n)).scale_int(-n),
            d - 1,
        )),
    }
}

/// Applies `ops` right to left to `m_d`.
pub fn apply_word(ops: &[Sl2Op], d: u32, lam: &RationalFunction) -> Option<(RationalFunction, u32)> {
    let mut coef = RationalFunction::one(lam.vars());
    let mut at = d;
    for &op in ops.iter().rev() {
        let (c, next) = sl2_verma_action(op, at, lam)?;
        coef = &coef * &c;
        at = next;
    }
    Some((coef, at))
}

fn combine(
    terms: &[(i64, Option<(RationalFunction, u32)>)],
    lam: &RationalFunction,
) -> Result<Option<(RationalFunction, u32)>> {
    let mut target = None;
    let mut acc = RationalFunction::zero(lam.vars());
    for (k, t) in terms {
        if let Some((c, at)) = t {
            match target {
                None => target = Some(*at),
                Some(x) if x != *at => return Err(Error::Internal("mixed degrees".into())),
                _ => {}
            }
            acc = &acc + &c.scale_int(*k);
        }
    }
    Ok(target.filter(|_| !acc.is_zero()).map(|t| (acc, t)))
}

/// A failed commutation relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorFailure {
    pub relation: &'static str,
    pub d: u32,
}

/// Checks `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f` on `m_0..m_max_d`.
pub fn check_commutators(max_d: u32, lam: &RationalFunction) -> Result<Vec<CommutatorFailure>> {
    use Sl2Op::*;
    let mut failures = Vec::new();
    for d in 0..=max_d {
        let cases: [(&'static str, [Sl2Op; 2], Sl2Op, i64); 3] = [
            ("[e,f] = h", [E, F], H, 1),
            ("[h,e] = 2e", [H, E], E, 2),
            ("[h,f] = -2f", [H, F], F, -2),
        ];
        for (relation, [x, y], rhs_op, k) in cases {
            let lhs = combine(
                &[(1, apply_word(&[x, y], d, lam)), (-1, apply_word(&[y, x], d, lam))],
                lam,
            )?;
            let rhs = combine(&[(k, apply_word(&[rhs_op], d, lam))], lam)?;
            if lhs != rhs {
                failures.push(CommutatorFailure { relation, d });
            }
        }
    }
    Ok(failures)
}
