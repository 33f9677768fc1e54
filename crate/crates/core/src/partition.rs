//! Coefficient tables of the partition function `Z = sum_theta Z_theta q^theta`,
//! computed from Whittaker norms or from the Toda recursions, and their
//! serialization.
//!
//! Tables for a type `g` are indexed by contents over the simple roots of the
//! dual algebra, which is where every computation happens.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arith::{RationalFunction, VarSet};
use crate::error::{Error, Result};
use crate::lie::{build_cartan, dualize, height, split_affine, CartanDatum, Content};
use crate::toda::{potential_weight, toda_factor};
use crate::verma::{standard_vars, WhittakerComponent, WhittakerSolver};

/// Prefactor carried by J-function tables.
pub const J_PREFACTOR: &str = "q^(a/hbar)";

/// A downward-closed table of coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    algebra: CartanDatum,
    cap: i64,
    vars: VarSet,
    entries: Vec<(Content, RationalFunction)>,
    index: HashMap<Content, usize>,
    prefactor: Option<String>,
}

impl SeriesTable {
    /// Empty table for the type `algebra` (the type of `g`, not its dual).
    pub fn new(algebra: &CartanDatum, cap: i64) -> Result<Self> {
        if cap < 0 {
            return Err(Error::usage("cap must be non-negative"));
        }
        Ok(SeriesTable {
            algebra: algebra.clone(),
            cap,
            vars: standard_vars(algebra),
            entries: Vec::new(),
            index: HashMap::new(),
            prefactor: None,
        })
    }

    pub fn algebra(&self) -> &CartanDatum {
        &self.algebra
    }

    /// The dual algebra that indexes the table.
    pub fn working(&self) -> CartanDatum {
        dualize(&self.algebra)
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn prefactor(&self) -> Option<&str> {
        self.prefactor.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, theta: &Content) -> Option<&RationalFunction> {
        self.index.get(theta).map(|&i| &self.entries[i].1)
    }

    /// Value at `theta`, zero for contents that are not positive.
    pub fn get_or_zero(&self, theta: &Content) -> Result<RationalFunction> {
        if !theta.is_positive() {
            return Ok(RationalFunction::zero(&self.vars));
        }
        self.get(theta)
            .cloned()
            .ok_or_else(|| Error::usage(format!("table has no entry for {theta:?}")))
    }

    /// Entries ordered by height, then lexicographically.
    pub fn entries(&self) -> impl Iterator<Item = (&Content, &RationalFunction)> {
        self.entries.iter().map(|(c, v)| (c, v))
    }

    /// Inserts or replaces an entry, keeping the order.
    pub fn insert(&mut self, theta: Content, value: RationalFunction) -> Result<()> {
        if theta.len() != self.algebra.size() || !theta.is_positive() {
            return Err(Error::usage(format!("invalid content {theta:?}")));
        }
        if height(&theta) > self.cap {
            return Err(Error::usage(format!("content {theta:?} exceeds the cap")));
        }
        if value.vars() != &self.vars {
            return Err(Error::usage("value uses a different variable list"));
        }
        if let Some(&i) = self.index.get(&theta) {
            self.entries[i].1 = value;
            return Ok(());
        }
        let pos = self
            .entries
            .partition_point(|(c, _)| Content::by_height(c, &theta).is_lt());
        self.entries.insert(pos, (theta, value));
        self.reindex();
        Ok(())
    }

    fn reindex(&mut self) {
        self.index = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, (c, _))| (c.clone(), i))
            .collect();
    }

    /// Serialized form; see [`SeriesTable::from_json`].
    pub fn to_json(&self) -> String {
        let doc = TableDoc {
            algebra: self.algebra.label().to_string(),
            cap: self.cap,
            prefactor: self.prefactor.clone(),
            entries: self
                .entries
                .iter()
                .map(|(c, v)| EntryDoc {
                    content: c.coefficients().to_vec(),
                    value: v.to_string(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }

    /// Parses `{"algebra", "cap", ["prefactor"], "entries": [{"content", "value"}]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TableDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("table JSON: {e}"),
        })?;
        let algebra = build_cartan(&doc.algebra)?;
        let mut table = SeriesTable::new(&algebra, doc.cap)?;
        table.prefactor = doc.prefactor;
        for e in doc.entries {
            let theta = Content::new(e.content);
            if table.get(&theta).is_some() {
                return Err(Error::usage(format!("duplicate content {theta:?}")));
            }
            let value = RationalFunction::parse(&e.value, &table.vars)?;
            table.insert(theta, value)?;
        }
        Ok(table)
    }

    /// CSV with columns `content,height,value`; affine tables add the
    /// finite part and the null-root degree. A prefactor becomes a leading
    /// `# prefactor: ...` line.
    pub fn to_csv(&self) -> String {
        let affine = self.algebra.is_affine();
        let working = self.working();
        let mut out = String::new();
        if let Some(p) = &self.prefactor {
            let _ = writeln!(out, "# prefactor: {p}");
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["content", "height"];
        if affine {
            header.extend(["finite_part", "d"]);
        }
        header.push("value");
        w.write_record(&header).expect("in-memory write");
        for (c, v) in &self.entries {
            let mut rec = vec![join(c.coefficients()), height(c).to_string()];
            if affine {
                let (fin, d) = split_affine(&working, c).expect("table contents are valid");
                rec.push(join(&fin));
                rec.push(d.to_string());
            }
            rec.push(v.to_string());
            w.write_record(&rec).expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"));
        out
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    algebra: String,
    cap: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    prefactor: Option<String>,
    entries: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    content: Vec<i64>,
    value: String,
}

/// Components and the table they produced.
pub struct WhittakerRun {
    pub table: SeriesTable,
    pub components: HashMap<Content, WhittakerComponent>,
    pub solver: WhittakerSolver,
}

fn whittaker_run(c: &CartanDatum, cap: i64) -> Result<WhittakerRun> {
    let mut table = SeriesTable::new(c, cap)?;
    let working = dualize(c);
    let mut solver = WhittakerSolver::standard(&working, cap)?;
    let mut components = HashMap::new();
    for theta in Content::all_positive_up_to(working.size(), cap) {
        let comp = solver.component(&theta)?;
        let z = if height(&theta) % 2 == 0 {
            comp.norm().clone()
        } else {
            -comp.norm()
        };
        table.insert(theta.clone(), z)?;
        components.insert(theta, comp);
    }
    Ok(WhittakerRun {
        table,
        components,
        solver,
    })
}

/// `Z_theta = (-1)^height(theta) <w_theta, w_theta>` for every positive
/// `theta` of height at most `cap`, over the dual of the finite type `c`.
pub fn z_series_whittaker(c: &CartanDatum, cap: i64) -> Result<SeriesTable> {
    if c.is_affine() {
        return Err(Error::usage("finite type expected"));
    }
    Ok(whittaker_run(c, cap)?.table)
}

/// Like [`z_series_whittaker`] but also returns the components and the solver,
/// for downstream verification.
pub fn z_series_whittaker_run(c: &CartanDatum, cap: i64) -> Result<WhittakerRun> {
    whittaker_run(c, cap)
}

/// Affine analogue of [`z_series_whittaker`]; `cap` bounds the total content.
pub fn z_series_affine_whittaker(c: &CartanDatum, cap: i64) -> Result<SeriesTable> {
    if !c.is_affine() {
        return Err(Error::usage("affine type expected"));
    }
    Ok(whittaker_run(c, cap)?.table)
}

fn toda_table(c: &CartanDatum, cap: i64) -> Result<SeriesTable> {
    let mut table = SeriesTable::new(c, cap)?;
    let working = dualize(c);
    let vars = table.vars().clone();
    let n = working.size();
    for theta in Content::all_positive_up_to(n, cap) {
        if theta.is_zero() {
            table.insert(theta, RationalFunction::one(&vars))?;
            continue;
        }
        let mut rhs = RationalFunction::zero(&vars);
        for i in 0..n {
            let prev = theta.minus_simple(i);
            if prev.is_positive() {
                let w = potential_weight(&working, i, &vars);
                rhs = &rhs + &(&w * &table.get_or_zero(&prev)?);
            }
        }
        let factor = toda_factor(&working, &theta, &vars)?;
        let z = rhs.checked_div(&factor)?;
        table.insert(theta, z)?;
    }
    Ok(table)
}

/// Coefficients from the quadratic Toda eigen-equation, seeded by `Z_0 = 1`.
pub fn z_series_toda(c: &CartanDatum, cap: i64) -> Result<SeriesTable> {
    if c.is_affine() {
        return Err(Error::usage("finite type expected"));
    }
    toda_table(c, cap)
}

/// Coefficients from the non-stationary affine Toda equation.
pub fn z_series_affine_toda(c: &CartanDatum, cap: i64) -> Result<SeriesTable> {
    if !c.is_affine() {
        return Err(Error::usage("affine type expected"));
    }
    toda_table(c, cap)
}

/// The J-function table: the same coefficients with the prefactor `q^(a/hbar)`.
pub fn j_function(z: &SeriesTable) -> Result<SeriesTable> {
    if z.algebra().is_affine() {
        return Err(Error::usage(
            "the J-function is only defined for finite types",
        ));
    }
    let mut j = z.clone();
    j.prefactor = Some(J_PREFACTOR.to_string());
    Ok(j)
}
