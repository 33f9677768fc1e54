//! The unfolded quadratic Toda operators as coefficientwise verifiers.
//!
//! Finite: `(2h (a, theta) + h^2 (theta, theta)) Z_theta
//!          = sum_i (alpha_i, alpha_i) Z_{theta - alpha_i}`.
//! Affine: the same with `theta` replaced by its finite part `theta - d delta`,
//! the extra term `eps d` on the left, and `i` running over all affine nodes.

use serde::Serialize;

use crate::arith::{BigRational, RationalFunction, VarSet};
use crate::error::Result;
use crate::lie::{a_pairing, finite_block, form_pairing, split_affine, CartanDatum, Content};
use crate::partition::SeriesTable;

/// `(alpha_i, alpha_i)` as a constant.
pub fn potential_weight(working: &CartanDatum, i: usize, vars: &VarSet) -> RationalFunction {
    RationalFunction::from_rational(vars, working.form().entry(i, i))
}

/// Left-hand factor `eps d + 2h (a, fin) + h^2 (fin, fin)` of the recursion at `theta`.
pub fn toda_factor(working: &CartanDatum, theta: &Content, vars: &VarSet) -> Result<RationalFunction> {
    let (fin, d) = if working.is_affine() {
        split_affine(working, theta)?
    } else {
        (theta.coefficients().to_vec(), 0)
    };
    let block = finite_block(working);
    let fin_c = Content::new(fin.clone());
    let norm: BigRational = form_pairing(&block, &fin_c, &fin_c);
    let h = RationalFunction::var(vars, vars.len() - 1);
    let a = a_pairing(&block, &fin, vars);
    let mut f = &(&h * &a).scale_int(2) + &(&(&h * &h) * &RationalFunction::from_rational(vars, &norm));
    if working.is_affine() && d != 0 {
        let eps = RationalFunction::var(vars, vars.len() - 2);
        f = &f + &eps.scale_int(d);
    }
    Ok(f)
}

/// Residual of the recursion at one content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TodaResidual {
    pub theta: Content,
    pub residual: RationalFunction,
}

impl TodaResidual {
    pub fn is_zero(&self) -> bool {
        self.residual.is_zero()
    }
}

fn residuals(z: &SeriesTable) -> Result<Vec<TodaResidual>> {
    let working = z.working();
    let vars = z.vars().clone();
    let n = working.size();
    let mut out = Vec::with_capacity(z.len());
    for (theta, value) in z.entries() {
        let residual = if theta.is_zero() {
            RationalFunction::zero(&vars)
        } else {
            let lhs = &toda_factor(&working, theta, &vars)? * value;
            let mut rhs = RationalFunction::zero(&vars);
            for i in 0..n {
                let prev = theta.minus_simple(i);
                if prev.is_positive() {
                    rhs = &rhs + &(&potential_weight(&working, i, &vars) * &z.get_or_zero(&prev)?);
                }
            }
            &lhs - &rhs
        };
        out.push(TodaResidual {
            theta: theta.clone(),
            residual,
        });
    }
    Ok(out)
}

/// Residuals of the quadratic Toda identity at every content of a finite table.
pub fn check_finite_toda(z: &SeriesTable) -> Result<Vec<TodaResidual>> {
    if z.algebra().is_affine() {
        return Err(crate::Error::usage("finite table expected"));
    }
    residuals(z)
}

/// Residuals of the non-stationary identity at every content of an affine table.
pub fn check_affine_toda(z: &SeriesTable) -> Result<Vec<TodaResidual>> {
    if !z.algebra().is_affine() {
        return Err(crate::Error::usage("affine table expected"));
    }
    residuals(z)
}

#[derive(Serialize)]
struct ResidualDoc {
    content: Vec<i64>,
    residual: String,
    ok: bool,
}

/// `[{"content", "residual", "ok"}]`.
pub fn residual_report_json(residuals: &[TodaResidual]) -> String {
    let docs: Vec<ResidualDoc> = residuals
        .iter()
        .map(|r| ResidualDoc {
            content: r.theta.coefficients().to_vec(),
            residual: r.residual.to_string(),
            ok: r.is_zero(),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&docs).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::build_cartan;
    use crate::partition::{z_series_affine_toda, z_series_toda};

    fn c(v: &[i64]) -> Content {
        Content::new(v.to_vec())
    }

    #[test]
    fn toda_tables_are_self_consistent() {
        for name in ["A1", "A2", "B2", "G2"] {
            let z = z_series_toda(&build_cartan(name).unwrap(), 3).unwrap();
            assert!(check_finite_toda(&z).unwrap().iter().all(TodaResidual::is_zero), "{name}");
        }
        let z = z_series_affine_toda(&build_cartan("A1~").unwrap(), 3).unwrap();
        assert!(check_affine_toda(&z).unwrap().iter().all(TodaResidual::is_zero));
    }

    #[test]
    fn perturbation_is_detected_locally() {
        let mut z = z_series_toda(&build_cartan("A1").unwrap(), 4).unwrap();
        let one = RationalFunction::one(z.vars());
        let bumped = z.get(&c(&[1])).unwrap() + &one;
        z.insert(c(&[1]), bumped).unwrap();
        let bad: Vec<Content> = check_finite_toda(&z)
            .unwrap()
            .into_iter()
            .filter(|r| !r.is_zero())
            .map(|r| r.theta)
            .collect();
        assert_eq!(bad, vec![c(&[1]), c(&[2])]);
    }

    #[test]
    fn sl2_factor() {
        let w = build_cartan("A1").unwrap();
        let vars = VarSet::standard(1, false);
        let f = toda_factor(&w, &c(&[3]), &vars).unwrap();
        assert_eq!(f, RationalFunction::parse("6*a1*h + 18*h^2", &vars).unwrap());
    }

    #[test]
    fn report_shape() {
        let z = z_series_toda(&build_cartan("A1").unwrap(), 1).unwrap();
        let report = residual_report_json(&check_finite_toda(&z).unwrap());
        let v: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(v[1]["content"], serde_json::json!([1]));
        assert_eq!(v[1]["ok"], serde_json::json!(true));
        assert_eq!(v[1]["residual"], serde_json::json!("(0) / (1)"));
    }
}
