//! Equivariant integration of the unit class by fixed-point localization:
//! `int_Y 1 = sum_y 1 / prod(tangent weights at y)` over isolated fixed points.

use serde::Deserialize;

use crate::arith::text::infer_vars;
use crate::arith::{Polynomial, RationalFunction, VarSet};
use crate::error::{Error, Result};
use crate::sl2::sl2_vars;

/// An isolated fixed point with its tangent weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointDatum {
    pub label: String,
    weights: Vec<Polynomial>,
}

impl FixedPointDatum {
    /// Every weight must be a nonzero linear form over the same variables.
    pub fn new(label: impl Into<String>, weights: Vec<Polynomial>) -> Result<Self> {
        let label = label.into();
        if let Some(first) = weights.first() {
            if weights.iter().any(|w| w.vars() != first.vars()) {
                return Err(Error::usage("weights use different variable lists"));
            }
        }
        for w in &weights {
            if w.is_zero() {
                return Err(Error::usage(format!(
                    "zero tangent weight at '{label}': fixed point is not isolated"
                )));
            }
            if !w.is_homogeneous() || w.total_degree() != Some(1) {
                return Err(Error::usage(format!("tangent weight {w} is not a linear form")));
            }
        }
        Ok(FixedPointDatum { label, weights })
    }

    pub fn weights(&self) -> &[Polynomial] {
        &self.weights
    }

    /// Parses one object `{"label", "weights": [...]}` or an array of them.
    /// Variables are inferred from all weight strings together.
    pub fn from_json(text: &str) -> Result<Vec<FixedPointDatum>> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Doc {
            label: String,
            weights: Vec<String>,
        }
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Docs {
            One(Doc),
            Many(Vec<Doc>),
        }
        let docs = match serde_json::from_str::<Docs>(text).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("fixed-point JSON: {e}"),
        })? {
            Docs::One(d) => vec![d],
            Docs::Many(v) => v,
        };
        let all: Vec<&str> = docs.iter().flat_map(|d| d.weights.iter().map(String::as_str)).collect();
        let vars = infer_vars(&all);
        docs.into_iter()
            .map(|d| {
                let weights = d
                    .weights
                    .iter()
                    .map(|s| parse_linear(s, &vars))
                    .collect::<Result<Vec<_>>>()?;
                FixedPointDatum::new(d.label, weights)
            })
            .collect()
    }
}

fn parse_linear(s: &str, vars: &VarSet) -> Result<Polynomial> {
    let f = RationalFunction::parse(s, vars)?;
    if !f.denom().is_constant() {
        return Err(Error::usage(format!("tangent weight '{s}' is not a polynomial")));
    }
    let c = f.denom().as_constant().expect("constant");
    let inv = num_rational::BigRational::new(1.into(), c);
    Ok(f.numerator().scale(&inv))
}

/// `sum over points of 1 / prod(weights)`.
pub fn localized_integral(points: &[FixedPointDatum]) -> Result<RationalFunction> {
    let first = points
        .iter()
        .find_map(|p| p.weights.first())
        .ok_or_else(|| Error::usage("need at least one fixed point with weights"))?;
    let vars = first.vars().clone();
    let mut total = RationalFunction::zero(&vars);
    for p in points {
        let mut euler = RationalFunction::one(&vars);
        for w in &p.weights {
            if w.vars() != &vars {
                return Err(Error::usage("fixed points use different variable lists"));
            }
            euler = &euler * &RationalFunction::from_polynomial(w);
        }
        total = &total + &euler.inv()?;
    }
    Ok(total)
}

/// The torus-fixed point `g = z^d, h = 0` of the degree-`d` based quasi-map
/// space of SL(2), a copy of affine `2d`-space with coordinates the lower
/// coefficients `g_0..g_{d-1}` of the monic `g` and `h_0..h_{d-1}` of `h`.
///
/// Rescaling `z` with weight `h` and the values of the second polynomial with
/// weight `a` gives `z^k` the weight `(d - k) h` relative to the leading `z^d`,
/// so `g_k` has weight `(d - k) h` and `h_k` has weight `a + (d - k) h`.
pub fn sl2_quasimap_fixed_point(d: u32) -> Result<FixedPointDatum> {
    if d == 0 {
        return Err(Error::usage("degree 0 has no positive-dimensional quasi-map space"));
    }
    let vars = sl2_vars();
    let a = Polynomial::var(&vars, 0);
    let h = Polynomial::var(&vars, 1);
    let mut weights = Vec::with_capacity(2 * d as usize);
    for k in 0..d {
        weights.push(h.scale(&num_rational::BigRational::from_integer((d - k).into())));
    }
    for k in 0..d {
        let shift = h.scale(&num_rational::BigRational::from_integer((d - k).into()));
        weights.push(&a + &shift);
    }
    FixedPointDatum::new(format!("sl2 quasi-maps, degree {d}"), weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::closed_form_a;

    fn point(ws: &[&str]) -> FixedPointDatum {
        let vars = VarSet::new(&["a", "h"]);
        FixedPointDatum::new("p", ws.iter().map(|s| parse_linear(s, &vars).unwrap()).collect()).unwrap()
    }

    #[test]
    fn single_points() {
        let vars = VarSet::new(&["a", "h"]);
        assert_eq!(
            localized_integral(&[point(&["h"])]).unwrap(),
            RationalFunction::parse("1 / h", &vars).unwrap()
        );
        assert_eq!(
            localized_integral(&[point(&["h", "a + h"])]).unwrap(),
            RationalFunction::parse("1 / (a*h + h^2)", &vars).unwrap()
        );
    }

    #[test]
    fn projective_line_cancels() {
        assert!(localized_integral(&[point(&["a"]), point(&["-a"])]).unwrap().is_zero());
    }

    #[test]
    fn rejects_degenerate_input() {
        let vars = VarSet::new(&["a", "h"]);
        assert!(matches!(
            FixedPointDatum::new("p", vec![Polynomial::zero(&vars)]),
            Err(Error::Usage(_))
        ));
        assert!(FixedPointDatum::new("p", vec![parse_linear("a^2", &vars).unwrap()]).is_err());
        assert!(FixedPointDatum::new("p", vec![parse_linear("a + 1", &vars).unwrap()]).is_err());
        assert!(localized_integral(&[]).is_err());
        assert!(sl2_quasimap_fixed_point(0).is_err());
    }

    #[test]
    fn quasimap_weights() {
        let vars = sl2_vars();
        let p = sl2_quasimap_fixed_point(2).unwrap();
        let expected: Vec<Polynomial> = ["2*h", "h", "a1 + 2*h", "a1 + h"]
            .iter()
            .map(|s| parse_linear(s, &vars).unwrap())
            .collect();
        assert_eq!(p.weights(), expected.as_slice());
        for d in 1..=12 {
            assert_eq!(localized_integral(&[sl2_quasimap_fixed_point(d).unwrap()]).unwrap(), closed_form_a(d));
        }
    }

    #[test]
    fn json_input() {
        let pts = FixedPointDatum::from_json(r#"[{"label":"x","weights":["a"]},{"label":"y","weights":["(-a) / (1)"]}]"#)
            .unwrap();
        assert_eq!(pts.len(), 2);
        assert!(localized_integral(&pts).unwrap().is_zero());
        let one = FixedPointDatum::from_json(r#"{"label":"x","weights":["h","a + h"]}"#).unwrap();
        assert_eq!(one[0].weights().len(), 2);
        assert!(FixedPointDatum::from_json(r#"{"label":"x","weights":["0"]}"#).is_err());
        assert!(FixedPointDatum::from_json(r#"{"label":"x"}"#).is_err());
    }
}
