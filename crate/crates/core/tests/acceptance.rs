//! Acceptance criteria. Every check is exact equality of canonical rational
//! functions. Criteria run concurrently and print one PASS/FAIL line each, in order.

use std::collections::HashMap;
use std::process::Command;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use whittaker_z::arith::RationalFunction;
use whittaker_z::lie::{build_cartan, dualize, kostant_partition, CartanDatum, Content};
use whittaker_z::localization::{localized_integral, sl2_quasimap_fixed_point};
use whittaker_z::partition::{
    z_series_affine_toda, z_series_affine_whittaker, z_series_toda, z_series_whittaker,
    z_series_whittaker_run, SeriesTable,
};
use whittaker_z::sl2::{check_commutators, closed_form_a, sl2_vars};
use whittaker_z::toda::{check_affine_toda, check_finite_toda};
use whittaker_z::verma::{numeric_gram, rank, sample_points, LowestWeight};

fn c(v: &[i64]) -> Content {
    Content::new(v.to_vec())
}

fn table_differences(x: &SeriesTable, y: &SeriesTable, label: &str) -> Vec<String> {
    let mut out = Vec::new();
    if x.len() != y.len() {
        out.push(format!("{label}: {} vs {} entries", x.len(), y.len()));
    }
    for (theta, v) in x.entries() {
        if y.get(theta) != Some(v) {
            out.push(format!("{label} {theta:?}: {v} vs {:?}", y.get(theta).map(ToString::to_string)));
        }
    }
    out
}

fn criterion_01_sl2_golden() -> Vec<String> {
    let z = z_series_whittaker(&build_cartan("A1").unwrap(), 12).unwrap();
    let failures: Vec<String> = (0..=12u32)
        .filter(|&d| z.get(&c(&[i64::from(d)])) != Some(&closed_form_a(d)))
        .map(|d| format!("d = {d}"))
        .collect();
    failures
}

fn criterion_02_localization() -> Vec<String> {
    let failures: Vec<String> = (1..=12u32)
        .filter(|&d| {
            localized_integral(&[sl2_quasimap_fixed_point(d).unwrap()]).unwrap() != closed_form_a(d)
        })
        .map(|d| format!("d = {d}"))
        .collect();
    failures
}

fn criterion_03_cross_oracle_finite() -> Vec<String> {
    let mut failures = Vec::new();
    for (name, cap) in [("A2", 8), ("B2", 6), ("G2", 6)] {
        let g = build_cartan(name).unwrap();
        let w = z_series_whittaker(&g, cap).unwrap();
        let t = z_series_toda(&g, cap).unwrap();
        failures.extend(table_differences(&w, &t, name));
    }
    failures
}

fn criterion_04_cross_oracle_affine() -> Vec<String> {
    let g = build_cartan("A1~").unwrap();
    let w = z_series_affine_whittaker(&g, 5).unwrap();
    let t = z_series_affine_toda(&g, 5).unwrap();
    let failures = table_differences(&w, &t, "A1~");
    failures
}

fn criterion_05_toda_residuals() -> Vec<String> {
    let mut failures = Vec::new();
    for (name, cap) in [("A1", 12), ("A2", 8), ("B2", 6), ("G2", 6)] {
        let z = z_series_whittaker(&build_cartan(name).unwrap(), cap).unwrap();
        for r in check_finite_toda(&z).unwrap() {
            if !r.is_zero() {
                failures.push(format!("{name} {:?}: {}", r.theta, r.residual));
            }
        }
    }
    let z = z_series_affine_whittaker(&build_cartan("A1~").unwrap(), 5).unwrap();
    for r in check_affine_toda(&z).unwrap() {
        if !r.is_zero() {
            failures.push(format!("A1~ {:?}: {}", r.theta, r.residual));
        }
    }
    failures
}

/// Positive roots written out by hand, for the brute-force count.
fn hand_roots(name: &str) -> Vec<Vec<i64>> {
    match name {
        "A2" => vec![vec![1, 0], vec![0, 1], vec![1, 1]],
        "B2" => vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]],
        "C2" => vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]],
        "G2" => vec![
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ],
        _ => unreachable!(),
    }
}

/// Tallies every multiset of roots (non-decreasing index sequences) with
/// total height at most `max_height`.
fn brute_force_counts(roots: &[Vec<i64>], max_height: i64) -> HashMap<Vec<i64>, u64> {
    fn rec(
        roots: &[Vec<i64>],
        from: usize,
        sum: &mut Vec<i64>,
        left: i64,
        out: &mut HashMap<Vec<i64>, u64>,
    ) {
        *out.entry(sum.clone()).or_default() += 1;
        for (k, r) in roots.iter().enumerate().skip(from) {
            let h: i64 = r.iter().sum();
            if h <= left {
                for (s, x) in sum.iter_mut().zip(r) {
                    *s += x;
                }
                rec(roots, k, sum, left - h, out);
                for (s, x) in sum.iter_mut().zip(r) {
                    *s -= x;
                }
            }
        }
    }
    let mut out = HashMap::new();
    rec(roots, 0, &mut vec![0; roots[0].len()], max_height, &mut out);
    out
}

fn criterion_06_character_law() -> Vec<String> {
    let mut failures = Vec::new();
    for name in ["A2", "B2"] {
        for working in [build_cartan(name).unwrap(), dualize(&build_cartan(name).unwrap())] {
            let lam = LowestWeight::standard(&working).unwrap();
            let point = &sample_points(lam.vars().len(), 2024, 1)[0];
            let values = lam.evaluate_at(point).unwrap();
            for theta in Content::all_positive_up_to(2, 6) {
                let k = kostant_partition(&working, &theta).unwrap();
                let r = rank(&numeric_gram(&working, &theta, &values));
                if k != r.into() {
                    failures.push(format!("{} {theta:?}: rank {r}, Kostant {k}", working.label()));
                }
            }
        }
    }
    for name in ["A2", "B2", "G2"] {
        let datum = build_cartan(name).unwrap();
        let counts = brute_force_counts(&hand_roots(name), 8);
        for theta in Content::all_positive_up_to(2, 8) {
            let expected = counts.get(theta.coefficients()).copied().unwrap_or(0);
            let k = kostant_partition(&datum, &theta).unwrap();
            if k != expected.into() {
                failures.push(format!("{name} {theta:?}: DP {k}, enumeration {expected}"));
            }
        }
    }
    failures
}

fn criterion_07_whittaker_property() -> Vec<String> {
    let mut failures = Vec::new();
    for (name, cap) in [("A1", 12), ("A2", 6)] {
        let mut run = z_series_whittaker_run(&build_cartan(name).unwrap(), cap).unwrap();
        let thetas: Vec<Content> = run.table.entries().map(|(t, _)| t.clone()).collect();
        for theta in thetas {
            if !run.solver.verify(&theta, &run.components).unwrap() {
                failures.push(format!("{name} {theta:?}"));
            }
        }
    }
    failures
}

fn criterion_08_sl2_commutators() -> Vec<String> {
    let lam = RationalFunction::parse("a1 / h", &sl2_vars()).unwrap();
    let failures: Vec<String> = check_commutators(20, &lam)
        .unwrap()
        .into_iter()
        .map(|f| format!("{} at d = {}", f.relation, f.d))
        .collect();
    failures
}

fn degree_failures(g: &CartanDatum, cap: i64) -> Vec<String> {
    let z = z_series_whittaker(g, cap).unwrap();
    let all: Vec<usize> = (0..z.vars().len()).collect();
    z.entries()
        .filter(|(theta, v)| v.homogeneous_degree_in(&all) != Some(-2 * theta.height()))
        .map(|(theta, v)| format!("{} {theta:?}: {v}", g.label()))
        .collect()
}

fn criterion_09_homogeneity() -> Vec<String> {
    let mut failures = degree_failures(&build_cartan("A1").unwrap(), 12);
    failures.extend(degree_failures(&build_cartan("A2").unwrap(), 8));
    failures
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_whittaker-z"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn criterion_10_cli_contract() -> Vec<String> {
    let mut failures = Vec::new();
    let dir = tempfile::tempdir().unwrap();

    let (code, json) = cli(&["z", "--type", "A2", "--cap", "4", "--format", "json"]);
    if code != 0 {
        failures.push(format!("z exit {code}"));
    }
    let parsed = SeriesTable::from_json(&json).unwrap();
    if parsed.to_json() != json {
        failures.push("JSON round trip is not byte-stable".into());
    }
    if cli(&["z", "--type", "A2", "--cap", "4", "--format", "json"]).1 != json {
        failures.push("repeated run differs".into());
    }

    for (args, expected) in [
        (vec!["verify", "--type", "A1", "--cap", "12"], 0),
        (vec!["verify", "--type", "A2", "--cap", "8"], 0),
        (vec!["verify", "--type", "A1~", "--cap", "5"], 0),
        (vec!["verify", "--type", "E8", "--cap", "2"], 2),
        (vec!["verify", "--type", "A2", "--cap", "99"], 3),
        (vec!["jfun", "--type", "A1~", "--cap", "2"], 2),
    ] {
        let (code, _) = cli(&args);
        if code != expected {
            failures.push(format!("{args:?}: exit {code}, expected {expected}"));
        }
    }

    let good = dir.path().join("good.json");
    std::fs::write(&good, &json).unwrap();
    let (code, _) = cli(&["verify", "--type", "A2", "--cap", "4", "--table", good.to_str().unwrap()]);
    if code != 0 {
        failures.push(format!("unperturbed table: exit {code}"));
    }
    let mut doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let (_, v) = parsed.entries().nth(4).unwrap();
    let doubled = (v + v).to_string();
    let entry = doc["entries"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|e| e["value"] == v.to_string())
        .unwrap();
    entry["value"] = serde_json::Value::String(doubled);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    let (code, out) = cli(&["verify", "--type", "A2", "--cap", "4", "--table", bad.to_str().unwrap()]);
    if code != 1 {
        failures.push(format!("perturbed table: exit {code}"));
    }
    if !out.contains("first offending content") {
        failures.push("perturbed table: no offending content reported".into());
    }
    failures
}

type Criterion = (u32, &'static str, fn() -> Vec<String>);

const CRITERIA: &[Criterion] = &[
    (1, "SL(2) Whittaker norms equal A_d, d <= 12", criterion_01_sl2_golden),
    (2, "fixed-point localization equals A_d, d <= 12", criterion_02_localization),
    (3, "Whittaker = Toda for A2 (8), B2 (6), G2 (6)", criterion_03_cross_oracle_finite),
    (4, "affine Whittaker = non-stationary Toda for A1~ (5)", criterion_04_cross_oracle_affine),
    (5, "Toda residuals vanish on every computed table", criterion_05_toda_residuals),
    (6, "Gram rank = Kostant count; Kostant = multiset enumeration", criterion_06_character_law),
    (7, "f_i w = w / h on A1 (12) and A2 (6)", criterion_07_whittaker_property),
    (8, "[e,f] = h, [h,e] = 2e, [h,f] = -2f on m_d, d <= 20", criterion_08_sl2_commutators),
    (9, "Z_theta homogeneous of degree -2 height on A1, A2", criterion_09_homogeneity),
    (10, "CLI round trip, exit codes, mutation detection", criterion_10_cli_contract),
];

/// A panic inside a criterion counts as a failure carrying the panic message.
fn run_one(check: fn() -> Vec<String>) -> (Vec<String>, Duration) {
    let start = Instant::now();
    let failures = std::panic::catch_unwind(check).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        vec![format!("panicked: {msg}")]
    });
    (failures, start.elapsed())
}

fn main() -> ExitCode {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let selected: Vec<&Criterion> = CRITERIA
        .iter()
        .filter(|(n, _, _)| filter.is_empty() || filter.iter().any(|f| f == &n.to_string()))
        .collect();
    let results: Vec<(Vec<String>, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = selected.iter().map(|(_, _, f)| s.spawn(|| run_one(*f))).collect();
        handles.into_iter().map(|h| h.join().expect("joined")).collect()
    });
    let mut failed = 0;
    for ((n, name, _), (failures, elapsed)) in selected.iter().zip(&results) {
        let status = if failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} [{status}] {name} ({elapsed:.2?})");
        for f in failures.iter().take(5) {
            println!("    {f}");
        }
        failed += usize::from(!failures.is_empty());
    }
    println!("acceptance: {} passed, {failed} failed", selected.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
