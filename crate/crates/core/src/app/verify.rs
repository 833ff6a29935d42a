//! Canned reproduction suite: worked resultant examples, germ types, minor
//! identities, stratum scans and codimension probes. Expected values live in
//! [`Expectations`] so a caller can override (or deliberately corrupt) them.

use super::project3d::{cmd_project3d, Project3dInput, Support3D};
use super::{AppError, RunConfig};
use crate::laurent::{classify_point, common_roots, covector_rank, PointClass};
use crate::minors::{derivative_minor_suite, single_minor_suite, split_equivalence_scan};
use crate::mpoly::{var_list, MPoly};
use crate::resultant::{jacobian_vanishes, resultant_poly};
use crate::singularity::{classify_germ, slice_germ};
use crate::strata::{
    actual_label, estimate_codim, in_filtration_subset_tol, label_geq, sample_N, scan_S, CodimConfig, Locus, SampledPair, ScanConfig,
};
use crate::support::{SupportPair, SupportSet};
use crate::{Rational, StratumLabel};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::time::Instant;

const ITEMS: [&str; 10] = [
    "formula1",
    "degree1",
    "germs",
    "split_equivalence",
    "minor_suites",
    "dichotomy",
    "codim",
    "order",
    "point_classifier",
    "project3d",
];

pub fn suite_items() -> &'static [&'static str] {
    &ITEMS
}

/// Monomial `coef · Π v_i^{exp_i}` over a fixed letter list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedTerm {
    pub exp: Vec<u32>,
    pub coef: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodimCase {
    pub b1: Vec<i64>,
    pub b2: Vec<i64>,
    pub label: String,
    pub estimate: usize,
}

/// Expected data for every suite item. Missing fields in a JSON override
/// keep their defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Expectations {
    /// `(ae - cd)^3 + b^3 d^2 e` over `[a, b, c, d, e]`.
    pub formula1: Vec<ExpectedTerm>,
    /// `ad - bc` over `[a, b, c, d]`.
    pub degree1: Vec<ExpectedTerm>,
    /// Germ classes (as JSON) of the triple-line slice and the cusp slice.
    pub germs: Vec<Value>,
    pub split_forward_counterexamples: usize,
    pub split_converse_counterexamples: usize,
    pub minor_unexplained: usize,
    pub dichotomy_mismatches: usize,
    pub codim: Vec<CodimCase>,
    /// `(q, p, q ≥ p)` facts about the label order.
    pub order: Vec<(String, String, bool)>,
    pub point_misclassified: usize,
    pub project3d_negative_firing: Vec<u8>,
}

fn expand(vars: &[&str], build: impl Fn(&[MPoly<BigInt>]) -> MPoly<BigInt>) -> Vec<ExpectedTerm> {
    let vl = var_list(vars);
    let xs: Vec<MPoly<BigInt>> = (0..vars.len()).map(|i| MPoly::var(vl.clone(), i)).collect();
    build(&xs)
        .terms()
        .iter()
        .map(|(e, c)| ExpectedTerm { exp: e.clone(), coef: i64::try_from(c).expect("small coefficients") })
        .collect()
}

impl Default for Expectations {
    fn default() -> Self {
        let formula1 = expand(&["a", "b", "c", "d", "e"], |x| {
            let (a, b, c, d, e) = (&x[0], &x[1], &x[2], &x[3], &x[4]);
            let lin = a.mul(e).sub(&c.mul(d));
            lin.mul(&lin).mul(&lin).add(&b.mul(b).mul(b).mul(d).mul(d).mul(e))
        });
        let degree1 = expand(&["a", "b", "c", "d"], |x| x[0].mul(&x[3]).sub(&x[1].mul(&x[2])));
        let case = |b1: &[i64], b2: &[i64], label: &str, estimate| CodimCase {
            b1: b1.to_vec(),
            b2: b2.to_vec(),
            label: label.into(),
            estimate,
        };
        let classical = [0, 1, 2, 3];
        Expectations {
            formula1,
            degree1,
            germs: vec![json!({"tag": "OrdinaryMultiple", "m": 3}), json!({"tag": "UniTangent", "m": 2, "slope": "2/3"})],
            split_forward_counterexamples: 0,
            split_converse_counterexamples: 0,
            minor_unexplained: 0,
            dichotomy_mismatches: 0,
            codim: vec![
                case(&classical, &classical, "N(1)", 1),
                case(&classical, &classical, "N(1,1)", 2),
                case(&classical, &classical, "N(2)", 3),
                case(&classical, &classical, "N(1,1,1)", 3),
                case(&[0, 3, 6], &[0, 3, 6], "N(1,1)", 1),
                case(&[0, 1, 3, 4, 6, 7], &[0, 3, 6], "N(1,1,1)", 2),
            ],
            order: vec![
                ("N_1^0(1)".into(), "N(1,1)".into(), true),
                ("N(2)".into(), "N(1,1)".into(), true),
                ("N(2,2;1,1)".into(), "N(2,1;1,1)".into(), true),
                ("N(2,1;1,1)".into(), "N(2,2;1,1)".into(), false),
            ],
            point_misclassified: 0,
            project3d_negative_firing: vec![5],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ItemResult {
    pub item: String,
    pub passed: bool,
    pub wall_time_ms: u128,
    pub limit_ms: u128,
    pub message: String,
    pub details: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub items: Vec<ItemResult>,
    pub all_passed: bool,
    pub failed: Vec<String>,
}

type Outcome = (bool, String, Value);

fn pair(a: &[i64], b: &[i64]) -> SupportPair {
    SupportPair::from_slices(a, b).expect("built-in supports")
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Compares `r` with `±expected` after renaming `letters[i] -> vars[i]`.
fn equal_up_to_sign(r: &MPoly<BigInt>, letters_to_vars: &[&str], expected: &[ExpectedTerm]) -> Result<bool, String> {
    let idx: Vec<usize> = letters_to_vars
        .iter()
        .map(|v| r.var_index(v).ok_or_else(|| format!("resultant has no variable {v}")))
        .collect::<Result<_, _>>()?;
    let mut terms = Vec::new();
    for t in expected {
        if t.exp.len() != idx.len() {
            return Err(format!("expected term {:?} has the wrong arity", t.exp));
        }
        let mut e = vec![0u32; r.vars().len()];
        for (k, &i) in idx.iter().enumerate() {
            e[i] = t.exp[k];
        }
        terms.push((e, BigInt::from(t.coef)));
    }
    let target = MPoly::from_terms(r.vars().clone(), terms).map_err(|e| e.to_string())?;
    Ok(*r == target || *r == target.neg())
}

fn formula1(exp: &Expectations, cfg: &RunConfig) -> Outcome {
    let r = match resultant_poly(&pair(&[0, 1, 3], &[0, 3]), cfg.det_bound) {
        Ok(r) => r,
        Err(e) => return (false, e.to_string(), Value::Null),
    };
    match equal_up_to_sign(&r, &["f3", "f1", "f0", "g3", "g0"], &exp.formula1) {
        Ok(ok) => (ok, format!("R = {r}"), json!({"resultant": r.to_string(), "mapping": "a=f3 b=f1 c=f0 d=g3 e=g0"})),
        Err(m) => (false, m, Value::Null),
    }
}

fn point(vars: &[&str], vals: &[i64]) -> BTreeMap<String, Rational> {
    vars.iter().zip(vals).map(|(v, &x)| (v.to_string(), q(x))).collect()
}

fn degree1(exp: &Expectations, cfg: &RunConfig) -> Outcome {
    let r = match resultant_poly(&pair(&[0, 1], &[0, 1]), cfg.det_bound) {
        Ok(r) => r,
        Err(e) => return (false, e.to_string(), Value::Null),
    };
    let vars = ["f0", "f1", "g0", "g1"];
    let identity = equal_up_to_sign(&r, &["f1", "f0", "g1", "g0"], &exp.degree1);
    let at_origin = jacobian_vanishes(&r, &point(&vars, &[0, 0, 0, 0])).unwrap_or(false);
    // On the resultant (f1 g0 = f0 g1) but away from the origin.
    let at_candidate = jacobian_vanishes(&r, &point(&vars, &[2, 1, 6, 3])).unwrap_or(true);
    let ok = matches!(identity, Ok(true)) && at_origin && !at_candidate;
    (
        ok,
        format!("R = {r}; singular at origin: {at_origin}; singular at (2,1,6,3): {at_candidate}"),
        json!({"resultant": r.to_string(), "jacobian_at_origin": at_origin, "jacobian_at_candidate": at_candidate}),
    )
}

fn germs(exp: &Expectations, cfg: &RunConfig) -> Outcome {
    let r = match resultant_poly(&pair(&[0, 1, 3], &[0, 3]), cfg.det_bound) {
        Ok(r) => r,
        Err(e) => return (false, e.to_string(), Value::Null),
    };
    // Variable order of r: f0 f1 f3 g0 g3, i.e. c b a e d.
    let unit = |i: usize| (0..5).map(|k| q(i64::from(k == i))).collect::<Vec<_>>();
    let vars = ["f0", "f1", "f3", "g0", "g3"];
    let slices = [
        (point(&vars, &[1, 0, 1, 1, 1]), unit(1), unit(0)),
        (point(&vars, &[3, 2, 0, 5, 0]), unit(2), unit(4)),
    ];
    let mut got = Vec::new();
    for (pt, d1, d2) in &slices {
        let class = slice_germ(&r, pt, d1, d2).and_then(|g| classify_germ(&g));
        got.push(class.map(|c| serde_json::to_value(c).expect("serializable")).unwrap_or_else(|e| json!(e.to_string())));
    }
    let ok = got == exp.germs;
    (ok, format!("classes {}", Value::Array(got.clone())), json!({"classes": got}))
}

fn split_equivalence(exp: &Expectations, _cfg: &RunConfig) -> Outcome {
    let r = split_equivalence_scan(10, 8, &[3, 4]);
    let (fwd, conv) = (r.forward_counterexamples.len(), r.converse_counterexamples.len());
    let ok = fwd == exp.split_forward_counterexamples && conv == exp.split_converse_counterexamples && r.certificates_valid;
    let first = r.forward_counterexamples.first().map(|c| format!("; first: n={} B={:?} pair={:?}", c.n, c.b, c.pair));
    (
        ok,
        format!(
            "{} (n,B) cases: {} forward counterexamples ({} through a row ratio of -1), {} converse{}",
            r.sets_checked,
            fwd,
            r.forward_with_order_two_row_ratio,
            conv,
            first.unwrap_or_default()
        ),
        serde_json::to_value(&r).expect("serializable"),
    )
}

fn minor_suites(exp: &Expectations, _cfg: &RunConfig) -> Outcome {
    let a = single_minor_suite(24, -5, 5);
    let b = derivative_minor_suite(24, -5, 5);
    let ok = a.unexplained.len() == exp.minor_unexplained && b.unexplained.len() == exp.minor_unexplained;
    (
        ok,
        format!(
            "single: {} cases, {} zero, {} unexplained; derivative: {} cases, {} zero, {} unexplained",
            a.cases,
            a.vanishing,
            a.unexplained.len(),
            b.cases,
            b.vanishing,
            b.unexplained.len()
        ),
        json!({"single": a, "derivative": b}),
    )
}

/// One row of the corank-2 dichotomy sweep.
#[derive(Debug, Clone, Serialize)]
pub struct DichotomyRow {
    pub b: Vec<i64>,
    pub phi: u64,
    pub corank_two_found: bool,
    pub unity_form_ok: bool,
}

/// For each `B ∋ 0` with spread in `[2, spread_max]` and `|B| ≥ 3`: do
/// triples with corank 2 exist (scanned up to `n_max`), and do all of them
/// have the form `c·(1, t, u)` with `t, u` of order dividing `φ(B)`?
pub fn dichotomy_sweep(spread_max: i64, n_max: u32, seed: u64) -> Vec<DichotomyRow> {
    let label = StratumLabel::parse("N(1,1,1)").expect("built-in label");
    let cfg = ScanConfig { n_max, generic_trials: 2, seed };
    let mut rows = Vec::new();
    for s in 2..=spread_max {
        for mask in 0u64..1 << (s - 1) {
            if mask == 0 {
                continue;
            }
            let elems: Vec<i64> = std::iter::once(0).chain((1..s).filter(|i| mask & (1 << (i - 1)) != 0)).chain([s]).collect();
            let b = SupportSet::new(elems.clone()).expect("distinct");
            let p = SupportPair::new(b.clone(), SupportSet::new([0, 1]).expect("distinct")).expect("two elements");
            let r = scan_S(&p, &label, &cfg);
            rows.push(DichotomyRow { b: elems, phi: b.phi(), corank_two_found: r.side_found(1, 2), unity_form_ok: r.unity_form_ok });
        }
    }
    rows
}

fn dichotomy(exp: &Expectations, cfg: &RunConfig) -> Outcome {
    let rows = dichotomy_sweep(10, cfg.n_max.max(10), cfg.seed);
    let bad: Vec<&DichotomyRow> = rows.iter().filter(|r| r.corank_two_found != (r.phi >= 3) || !r.unity_form_ok).collect();
    let ok = bad.len() == exp.dichotomy_mismatches;
    let with = rows.iter().filter(|r| r.corank_two_found).count();
    (
        ok,
        format!("{} supports, {} with corank-2 triples, {} mismatches", rows.len(), with, bad.len()),
        json!({"supports": rows.len(), "with_corank_two": with, "mismatches": bad}),
    )
}

fn codim(exp: &Expectations, cfg: &RunConfig) -> Outcome {
    let cc = CodimConfig { trials: cfg.trials.max(1), n_max: cfg.n_max, seed: cfg.seed };
    let mut ok = true;
    let mut got = Vec::new();
    for c in &exp.codim {
        let (Ok(p), Ok(l)) = (SupportPair::from_slices(&c.b1, &c.b2), StratumLabel::parse(&c.label)) else {
            ok = false;
            got.push(json!({"case": c, "error": "malformed case"}));
            continue;
        };
        let e = estimate_codim(&p, &l, &cc);
        ok &= e.estimate == c.estimate;
        got.push(json!({"b1": c.b1, "b2": c.b2, "label": c.label, "expected": c.estimate, "estimate": e.estimate}));
    }
    let summary: Vec<String> = got.iter().map(|g| format!("{}={}", g["label"], g["estimate"])).collect();
    (ok, summary.join(" "), Value::Array(got))
}

/// Samples of `N(q)` that lie in the closed stratum of `p`: either directly
/// in `N(p)` or in a stratum whose label dominates `p` (roots may have
/// collided or moved to `0`, `∞`).
fn sampled_members(q: &StratumLabel, p: &StratumLabel, pair: &SupportPair, seeds: u64) -> (usize, usize) {
    let (mut tried, mut inside) = (0, 0);
    for s in 0..seeds {
        if let Some(SampledPair::Exact(x)) = sample_N(pair, q, Locus::GenericPoints, s) {
            tried += 1;
            let direct = in_filtration_subset_tol(&x.f, &x.g, p, 1e-9).unwrap_or(false);
            let closed = actual_label(&x.f, &x.g).is_ok_and(|a| label_geq(&a, p));
            inside += usize::from(direct || closed);
        }
    }
    (tried, inside)
}

fn order(exp: &Expectations, _cfg: &RunConfig) -> Outcome {
    let mut ok = true;
    let mut facts = Vec::new();
    let host = pair(&[0, 1, 2, 3, 4, 5, 6], &[0, 1, 2, 3, 4, 5, 6]);
    for (qs, ps, want) in &exp.order {
        let (Ok(ql), Ok(pl)) = (StratumLabel::parse(qs), StratumLabel::parse(ps)) else {
            ok = false;
            continue;
        };
        let geq = label_geq(&ql, &pl);
        ok &= geq == *want;
        let membership = if geq {
            let (tried, inside) = sampled_members(&ql, &pl, &host, 5);
            ok &= tried > 0 && inside == tried;
            Some((tried, inside))
        } else {
            None
        };
        facts.push(json!({"q": qs, "p": ps, "q_geq_p": geq, "sampled_members": membership}));
    }
    let labels = StratumLabel::all_up_to(4);
    let geq: Vec<Vec<bool>> = labels.iter().map(|a| labels.iter().map(|b| label_geq(a, b)).collect()).collect();
    let n = labels.len();
    let reflexive = (0..n).all(|i| geq[i][i]);
    let antisymmetric = (0..n).all(|i| (0..n).all(|j| i == j || !(geq[i][j] && geq[j][i])));
    let transitive = (0..n).all(|i| (0..n).all(|j| !geq[i][j] || (0..n).all(|k| !geq[j][k] || geq[i][k])));
    ok &= reflexive && antisymmetric && transitive;
    (
        ok,
        format!("{n} labels of weight <= 4: reflexive {reflexive}, antisymmetric {antisymmetric}, transitive {transitive}"),
        json!({"facts": facts, "labels": n, "reflexive": reflexive, "antisymmetric": antisymmetric, "transitive": transitive}),
    )
}

/// Pairs on each family sampled through the filtration subsets `N(1)`,
/// `N(1,1)`, `N(2)`, checked against the point classifier.
pub fn point_classifier_run(per_family: u64, seed: u64) -> Value {
    let families = [pair(&[0, 1, 2, 3], &[0, 1, 2, 3]), pair(&[0, 1, 3], &[0, 2, 3]), pair(&[0, 1, 2, 4], &[0, 1, 3, 5])];
    let cases = [("N(1)", PointClass::SmoothPoint), ("N(1,1)", PointClass::NodeA1), ("N(2)", PointClass::Degenerate(crate::laurent::DegenerateReason::MultipleRoot))];
    let mut rows = Vec::new();
    let mut bad = 0usize;
    let mut checked = 0usize;
    for fam in &families {
        for (lab, want) in &cases {
            let l = StratumLabel::parse(lab).expect("built-in label");
            let mut wrong = 0usize;
            let mut n = 0usize;
            for s in 0..per_family {
                let Some(SampledPair::Exact(x)) = sample_N(fam, &l, Locus::GenericPoints, seed.wrapping_mul(1_000_003).wrapping_add(s)) else {
                    wrong += 1;
                    continue;
                };
                n += 1;
                let mut good = classify_point(&x.f, &x.g).ok() == Some(*want);
                if good && *want == PointClass::NodeA1 {
                    let roots = common_roots(&x.f, &x.g).unwrap_or_default();
                    good = roots.len() == 2 && covector_rank(&x.f, &x.g, &roots[0].point, &roots[1].point).ok() == Some(2);
                }
                wrong += usize::from(!good);
            }
            bad += wrong;
            checked += n;
            rows.push(json!({"family": fam.to_string(), "label": lab, "pairs": n, "misclassified": wrong}));
        }
    }
    json!({"checked": checked, "misclassified": bad, "rows": rows})
}

fn point_classifier(exp: &Expectations, cfg: &RunConfig) -> Outcome {
    let v = point_classifier_run(200, cfg.seed);
    let bad = v["misclassified"].as_u64().unwrap_or(u64::MAX) as usize;
    (bad == exp.point_misclassified, format!("{} pairs, {} misclassified", v["checked"], bad), v)
}

fn lift(last: &[i64]) -> Support3D {
    Support3D::new(last.iter().enumerate().map(|(i, &z)| [i as i64, (i as i64 * 7) % 3, z]).collect()).expect("distinct")
}

/// Curves with `f1(1, 1, x3) = (x3 - 1)(x3 + 2)` and
/// `f2(1, 1, x3) = (x3 - 1)(x3^2 + 1)`, so the projection passes through
/// `(x1, x2) = (1, 1)`.
pub fn constructed_project3d_input() -> Project3dInput {
    Project3dInput {
        a1: Support3D::new(vec![[0, 0, 2], [0, 0, 1], [1, 0, 0]]).expect("distinct"),
        a2: Support3D::new(vec![[0, 0, 3], [0, 1, 2], [0, 0, 1], [0, 0, 0]]).expect("distinct"),
        coeffs1: Some(vec![[1.0, 0.0], [1.0, 0.0], [-2.0, 0.0]]),
        coeffs2: Some(vec![[1.0, 0.0], [-1.0, 0.0], [1.0, 0.0], [-1.0, 0.0]]),
        grid: None,
        no_scan: false,
    }
}

fn project3d(exp: &Expectations, cfg: &RunConfig) -> Outcome {
    let plain = |a1, a2| Project3dInput { a1, a2, coeffs1: None, coeffs2: None, grid: None, no_scan: true };
    let neg = cmd_project3d(&plain(lift(&[0, 1]), lift(&[0, 1, 2, 3])), cfg.seed);
    let pos = cmd_project3d(&plain(lift(&[0, 1, 2]), lift(&[0, 1, 2, 3])), cfg.seed);
    let hit = cmd_project3d(&constructed_project3d_input(), cfg.seed);
    let (Ok(neg), Ok(pos), Ok(hit)) = (neg, pos, hit) else {
        return (false, "project3d returned an error".into(), Value::Null);
    };
    let cell = hit
        .scan
        .as_ref()
        .is_some_and(|s| s.near_zero_cells.iter().any(|c| c.rho1 == 0.0 && c.theta1 == 0.0 && c.rho2 == 0.0 && c.theta2 == 0.0));
    let ok = neg.classification.firing == exp.project3d_negative_firing && !neg.verdict.only_nodes && pos.verdict.only_nodes && cell;
    (
        ok,
        format!(
            "negative firing {:?}; positive verdict {}; constructed cell found {}",
            neg.classification.firing, pos.verdict.only_nodes, cell
        ),
        json!({"negative": neg.verdict, "positive": pos.verdict, "near_zero_cells": hit.scan.map(|s| s.near_zero_cells.len())}),
    )
}

fn limit_ms(item: &str) -> u128 {
    match item {
        "formula1" | "degree1" => 1_000,
        "germs" => 5_000,
        "split_equivalence" | "minor_suites" => 300_000,
        "dichotomy" => 120_000,
        _ => 60_000,
    }
}

/// Runs one named item; unknown names are a usage error.
pub fn run_item(item: &str, exp: &Expectations, cfg: &RunConfig) -> Result<ItemResult, AppError> {
    let f: fn(&Expectations, &RunConfig) -> Outcome = match item {
        "formula1" => formula1,
        "degree1" => degree1,
        "germs" => germs,
        "split_equivalence" => split_equivalence,
        "minor_suites" => minor_suites,
        "dichotomy" => dichotomy,
        "codim" => codim,
        "order" => order,
        "point_classifier" => point_classifier,
        "project3d" => project3d,
        other => return Err(AppError::Usage(format!("unknown suite item {other:?}; known: {}", ITEMS.join(", ")))),
    };
    let start = Instant::now();
    let (passed, message, details) = f(exp, cfg);
    let wall_time_ms = start.elapsed().as_millis();
    let limit = limit_ms(item);
    let in_time = wall_time_ms <= limit;
    let message = if in_time { message } else { format!("{message}; exceeded {limit} ms") };
    Ok(ItemResult { item: item.to_string(), passed: passed && in_time, wall_time_ms, limit_ms: limit, message, details })
}

/// Runs the suite (or the `only` subset, in suite order of the request).
pub fn cmd_verify_suite(exp: &Expectations, only: &[String], cfg: &RunConfig) -> Result<SuiteReport, AppError> {
    let names: Vec<&str> = if only.is_empty() { ITEMS.to_vec() } else { only.iter().map(String::as_str).collect() };
    let items = names.iter().map(|n| run_item(n, exp, cfg)).collect::<Result<Vec<_>, _>>()?;
    let failed: Vec<String> = items.iter().filter(|i| !i.passed).map(|i| i.item.clone()).collect();
    Ok(SuiteReport { all_passed: failed.is_empty(), failed, items })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_expectations_hold_for_fast_items() {
        let cfg = RunConfig::default();
        for item in ["formula1", "degree1", "germs", "codim", "project3d"] {
            let r = run_item(item, &Expectations::default(), &cfg).unwrap();
            assert!(r.passed, "{item}: {}", r.message);
        }
    }

    #[test]
    fn corrupted_expectations_fail() {
        let cfg = RunConfig::default();
        let mut exp = Expectations::default();
        exp.formula1[0].coef += 1;
        exp.germs[1] = json!({"tag": "NodeA1"});
        let r = cmd_verify_suite(&exp, &["formula1".into(), "germs".into()], &cfg).unwrap();
        assert_eq!(r.failed, vec!["formula1".to_string(), "germs".to_string()]);
        assert!(cmd_verify_suite(&exp, &["nope".into()], &cfg).is_err());
    }

    #[test]
    fn partial_override_keeps_defaults() {
        let e: Expectations = serde_json::from_str(r#"{"minor_unexplained": 3}"#).unwrap();
        assert_eq!(e.minor_unexplained, 3);
        assert_eq!(e.formula1, Expectations::default().formula1);
    }
}
