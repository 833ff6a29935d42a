//! Acceptance target: ten criteria, each printed as one PASS/FAIL line.
//! Run with `cargo test -p singres-core --test acceptance -- --nocapture`.
//!
//! Criterion 4 (all minors vanish at some admissible pair iff a split
//! certificate exists) does not hold as stated: the forward direction fails
//! whenever two rows coincide through a root of order 2. It prints FAIL; the
//! test pins the exact shape of the failure instead, and
//! `criterion_4_strict` asserts the literal statement under `--ignored`.

use num_bigint::BigInt;
use singres::app::{cmd_project3d, Project3dInput, Support3D};
use singres::laurent::{classify_point, common_roots, covector_rank, DegenerateReason, PointClass};
use singres::minors::{derivative_minor_suite, single_minor_suite, split_equivalence_scan};
use singres::mpoly::MPoly;
use singres::resultant::{jacobian_vanishes, resultant_poly};
use singres::singularity::{classify_germ, slice_germ, GermClass};
use singres::strata::{
    actual_label, estimate_codim, in_filtration_subset, label_geq, sample_N, scan_S, CodimConfig, Locus, SampledPair,
    ScanConfig,
};
use singres::{Rational, StratumLabel, SupportPair, SupportSet};
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

struct Outcome {
    pass: bool,
    detail: String,
}

fn run(n: u32, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let o = f();
    let dt = t.elapsed();
    let pass = o.pass && dt <= limit;
    println!(
        "criterion {n:>2}: {} ({:.2?} of {:?}) {}",
        if pass { "PASS" } else { "FAIL" },
        dt,
        limit,
        o.detail
    );
    pass
}

fn pair(a: &[i64], b: &[i64]) -> SupportPair {
    SupportPair::from_slices(a, b).unwrap()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn lab(s: &str) -> StratumLabel {
    StratumLabel::parse(s).unwrap()
}

fn assignment(vars: &[&str], vals: &[i64]) -> BTreeMap<String, Rational> {
    vars.iter().zip(vals).map(|(v, &x)| (v.to_string(), q(x))).collect()
}

/// `build` over letters renamed to resultant variables.
fn renamed(r: &MPoly<BigInt>, names: &[&str], build: impl Fn(&[MPoly<BigInt>]) -> MPoly<BigInt>) -> MPoly<BigInt> {
    let xs: Vec<MPoly<BigInt>> = names.iter().map(|v| MPoly::var(r.vars().clone(), r.var_index(v).unwrap())).collect();
    build(&xs)
}

fn criterion_1() -> Outcome {
    let r = resultant_poly(&pair(&[0, 1, 3], &[0, 3]), 16).unwrap();
    // a = f3, b = f1, c = f0, d = g3, e = g0.
    let target = renamed(&r, &["f3", "f1", "f0", "g3", "g0"], |x| {
        let (a, b, c, d, e) = (&x[0], &x[1], &x[2], &x[3], &x[4]);
        let lin = a.mul(e).sub(&c.mul(d));
        lin.mul(&lin).mul(&lin).add(&b.mul(b).mul(b).mul(d).mul(d).mul(e))
    });
    Outcome { pass: r == target || r == target.neg(), detail: format!("R = {r}") }
}

fn criterion_2() -> Outcome {
    let r = resultant_poly(&pair(&[0, 1], &[0, 1]), 16).unwrap();
    // a = f1, b = f0, c = g1, d = g0.
    let target = renamed(&r, &["f1", "f0", "g1", "g0"], |x| x[0].mul(&x[3]).sub(&x[1].mul(&x[2])));
    let vars = ["f0", "f1", "g0", "g1"];
    let origin = jacobian_vanishes(&r, &assignment(&vars, &[0, 0, 0, 0])).unwrap();
    let candidate = jacobian_vanishes(&r, &assignment(&vars, &[2, 1, 6, 3])).unwrap();
    Outcome {
        pass: (r == target || r == target.neg()) && origin && !candidate,
        detail: format!("R = {r}; jacobian vanishes at 0: {origin}, at (2,1,6,3): {candidate}"),
    }
}

fn criterion_3() -> Outcome {
    let r = resultant_poly(&pair(&[0, 1, 3], &[0, 3]), 16).unwrap();
    // Variable order f0 f1 f3 g0 g3 is c b a e d.
    let vars = ["f0", "f1", "f3", "g0", "g3"];
    let unit = |i: usize| (0..5).map(|k| q(i64::from(k == i))).collect::<Vec<_>>();
    let lines = slice_germ(&r, &assignment(&vars, &[1, 0, 1, 1, 1]), &unit(1), &unit(0)).and_then(|g| classify_germ(&g));
    let cusp = slice_germ(&r, &assignment(&vars, &[3, 2, 0, 5, 0]), &unit(2), &unit(4)).and_then(|g| classify_germ(&g));
    let want_cusp = GermClass::UniTangent { m: 2, slope: Rational::new(2.into(), 3.into()) };
    Outcome {
        pass: lines == Ok(GermClass::OrdinaryMultiple { m: 3 }) && cusp == Ok(want_cusp),
        detail: format!("(b,c)-slice {lines:?}; (a,d)-slice {cusp:?}"),
    }
}

fn criterion_4() -> (Outcome, singres::minors::EquivalenceReport) {
    let r = split_equivalence_scan(10, 8, &[3, 4]);
    let (fwd, conv) = (r.forward_counterexamples.len(), r.converse_counterexamples.len());
    let first = r.forward_counterexamples.first().map(|c| format!(" e.g. n={} B={:?} (p,q)={:?}", c.n, c.b, c.pair.unwrap()));
    let o = Outcome {
        pass: fwd == 0 && conv == 0 && r.certificates_valid,
        detail: format!(
            "{} sets x n, {} pairs: {fwd} forward counterexamples ({} with a row ratio of -1), {conv} converse{}",
            r.sets_checked,
            r.pairs_checked,
            r.forward_with_order_two_row_ratio,
            first.unwrap_or_default()
        ),
    };
    (o, r)
}

fn criterion_5() -> Outcome {
    let a = single_minor_suite(24, -5, 5);
    let b = derivative_minor_suite(24, -5, 5);
    Outcome {
        pass: a.unexplained.is_empty() && b.unexplained.is_empty() && a.vanishing > 0 && b.vanishing > 0,
        detail: format!(
            "single {}/{} zero, {} unexplained; derivative {}/{} zero, {} unexplained",
            a.vanishing,
            a.cases,
            a.unexplained.len(),
            b.vanishing,
            b.cases,
            b.unexplained.len()
        ),
    }
}

fn criterion_6() -> Outcome {
    let l = lab("N(1,1,1)");
    let cfg = ScanConfig { n_max: 12, generic_trials: 2, seed: 6 };
    let (mut total, mut with, mut bad, mut form_bad) = (0, 0, Vec::new(), 0);
    for s in 2i64..=10 {
        for mask in 1u64..1 << (s - 1) {
            let elems: Vec<i64> = std::iter::once(0).chain((1..s).filter(|i| mask & (1 << (i - 1)) != 0)).chain([s]).collect();
            let b = SupportSet::new(elems.clone()).unwrap();
            let p = SupportPair::new(b.clone(), SupportSet::new([0, 1]).unwrap()).unwrap();
            let r = scan_S(&p, &l, &cfg);
            let found = r.side_found(1, 2);
            total += 1;
            with += usize::from(found);
            if found != (b.phi() >= 3) {
                bad.push(elems);
            }
            form_bad += usize::from(!r.unity_form_ok);
        }
    }
    Outcome {
        pass: bad.is_empty() && form_bad == 0 && total == 1013,
        detail: format!("{total} supports, {with} with corank-2 triples, {} mismatches, {form_bad} off the (c, ct, cu) form", bad.len()),
    }
}

fn criterion_7() -> Outcome {
    let cfg = CodimConfig { trials: 5, n_max: 12, seed: 7 };
    let classical = [0, 1, 2, 3];
    let cases = [
        (&classical[..], &classical[..], "N(1)", 1),
        (&classical[..], &classical[..], "N(1,1)", 2),
        (&classical[..], &classical[..], "N(2)", 3),
        (&classical[..], &classical[..], "N(1,1,1)", 3),
        (&[0, 3, 6][..], &[0, 3, 6][..], "N(1,1)", 1),
        (&[0, 1, 3, 4, 6, 7][..], &[0, 3, 6][..], "N(1,1,1)", 2),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (a, b, l, want) in cases {
        let t = Instant::now();
        let e = estimate_codim(&pair(a, b), &lab(l), &cfg);
        pass &= e.estimate == want && t.elapsed() < Duration::from_secs(60);
        parts.push(format!("{l}={}", e.estimate));
    }
    Outcome { pass, detail: parts.join(" ") }
}

fn criterion_8() -> Outcome {
    let facts = [("N_1^0(1)", "N(1,1)", true), ("N(2)", "N(1,1)", true), ("N(2,2;1,1)", "N(2,1;1,1)", true), ("N(2,1;1,1)", "N(2,2;1,1)", false)];
    let host = pair(&[0, 1, 2, 3, 4, 5, 6], &[0, 1, 2, 3, 4, 5, 6]);
    let mut pass = true;
    for (qs, ps, want) in facts {
        let (ql, pl) = (lab(qs), lab(ps));
        pass &= label_geq(&ql, &pl) == want;
        if want {
            for seed in 0..5 {
                let Some(SampledPair::Exact(x)) = sample_N(&host, &ql, Locus::GenericPoints, seed) else {
                    pass = false;
                    continue;
                };
                // In the closed stratum of p: directly in N(p), or in a stratum dominating p.
                let direct = in_filtration_subset(&x.f, &x.g, &pl).unwrap();
                let closed = label_geq(&actual_label(&x.f, &x.g).unwrap(), &pl);
                pass &= direct || closed;
            }
        }
    }
    let labels = StratumLabel::all_up_to(4);
    let m: Vec<Vec<bool>> = labels.iter().map(|a| labels.iter().map(|b| label_geq(a, b)).collect()).collect();
    let n = labels.len();
    let refl = (0..n).all(|i| m[i][i]);
    let anti = (0..n).all(|i| (0..n).all(|j| i == j || !(m[i][j] && m[j][i])));
    let trans = (0..n).all(|i| (0..n).all(|j| !m[i][j] || (0..n).all(|k| !m[j][k] || m[i][k])));
    Outcome {
        pass: pass && refl && anti && trans,
        detail: format!("order facts hold: {pass}; {n} labels of weight <= 4: reflexive {refl}, antisymmetric {anti}, transitive {trans}"),
    }
}

fn criterion_9() -> Outcome {
    let families = [pair(&[0, 1, 2, 3], &[0, 1, 2, 3]), pair(&[0, 1, 3], &[0, 2, 3]), pair(&[0, 1, 2, 4], &[0, 1, 3, 5])];
    let cases = [
        ("N(1)", PointClass::SmoothPoint),
        ("N(1,1)", PointClass::NodeA1),
        ("N(2)", PointClass::Degenerate(DegenerateReason::MultipleRoot)),
    ];
    let (mut checked, mut wrong) = (0, 0);
    for fam in &families {
        for (l, want) in &cases {
            let l = lab(l);
            for seed in 0..200 {
                let Some(SampledPair::Exact(x)) = sample_N(fam, &l, Locus::GenericPoints, 9_000 + seed) else {
                    wrong += 1;
                    continue;
                };
                checked += 1;
                let mut ok = classify_point(&x.f, &x.g).ok() == Some(*want);
                if ok && *want == PointClass::NodeA1 {
                    let r = common_roots(&x.f, &x.g).unwrap();
                    ok = covector_rank(&x.f, &x.g, &r[0].point, &r[1].point).ok() == Some(2);
                }
                wrong += usize::from(!ok);
            }
        }
    }
    Outcome { pass: wrong == 0 && checked == 1800, detail: format!("{checked} pairs, {wrong} misclassified") }
}

fn lift(last: &[i64]) -> Support3D {
    Support3D::new(last.iter().enumerate().map(|(i, &z)| [i as i64, (2 * i as i64) % 3, z]).collect()).unwrap()
}

fn criterion_10() -> Outcome {
    let plain = |a1, a2| Project3dInput { a1, a2, coeffs1: None, coeffs2: None, grid: None, no_scan: false };
    let neg = cmd_project3d(&plain(lift(&[0, 1]), lift(&[0, 1, 2, 3])), 10).unwrap();
    let pos = cmd_project3d(&plain(lift(&[0, 1, 2]), lift(&[0, 1, 2, 3])), 10).unwrap();
    // f1(1, 1, z) = (z - 1)(z + 2) and f2(1, 1, z) = (z - 1)(z^2 + 1).
    let built = Project3dInput {
        a1: Support3D::new(vec![[0, 0, 2], [0, 0, 1], [1, 0, 0]]).unwrap(),
        a2: Support3D::new(vec![[0, 0, 3], [0, 1, 2], [0, 0, 1], [0, 0, 0]]).unwrap(),
        coeffs1: Some(vec![[1.0, 0.0], [1.0, 0.0], [-2.0, 0.0]]),
        coeffs2: Some(vec![[1.0, 0.0], [-1.0, 0.0], [1.0, 0.0], [-1.0, 0.0]]),
        grid: None,
        no_scan: false,
    };
    let hit = cmd_project3d(&built, 10).unwrap();
    let scan = hit.scan.unwrap();
    let cell = scan.near_zero_cells.iter().any(|c| [c.rho1, c.theta1, c.rho2, c.theta2] == [0.0; 4]);
    let pass = neg.classification.conditions.cond5
        && !neg.verdict.only_nodes
        && neg.verdict.statement.contains("not excluded")
        && pos.verdict.only_nodes
        && cell;
    Outcome {
        pass,
        detail: format!(
            "({{0,1}},{{0,1,2,3}}) firing {:?}; ({{0,1,2}},{{0,1,2,3}}) only nodes {}; constructed cell among {} near-zero cells: {cell}",
            neg.classification.firing,
            pos.verdict.only_nodes,
            scan.near_zero_cells.len()
        ),
    }
}

#[test]
fn acceptance() {
    let s = Duration::from_secs;
    let mut results = Vec::new();
    results.push((1, run(1, s(1), criterion_1)));
    results.push((2, run(2, s(1), criterion_2)));
    results.push((3, run(3, s(5), criterion_3)));
    let mut report = None;
    results.push((
        4,
        run(4, s(300), || {
            let (o, r) = criterion_4();
            report = Some(r);
            o
        }),
    ));
    results.push((5, run(5, s(300), criterion_5)));
    results.push((6, run(6, s(120), criterion_6)));
    results.push((7, run(7, s(360), criterion_7)));
    results.push((8, run(8, s(60), criterion_8)));
    results.push((9, run(9, s(60), criterion_9)));
    results.push((10, run(10, s(60), criterion_10)));
    let failed: Vec<u32> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    println!("acceptance: {}/10 criteria pass; failing: {failed:?}", 10 - failed.len());

    // Criterion 4 is the one recorded as unattainable: every forward
    // counterexample has x, y or x/y equal to -1, and the converse holds.
    let r = report.unwrap();
    assert!(!r.forward_counterexamples.is_empty());
    assert_eq!(r.forward_with_order_two_row_ratio, r.forward_counterexamples.len());
    assert!(r.converse_counterexamples.is_empty() && r.certificates_valid);
    assert_eq!(failed, vec![4], "criteria other than 4 must pass");
}

#[test]
#[ignore = "fails: the forward direction has counterexamples through roots of order 2"]
fn criterion_4_strict() {
    let (o, _) = criterion_4();
    assert!(o.pass, "{}", o.detail);
}
