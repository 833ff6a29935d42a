//! Exact analysis of the three-row matrices `(1, x^b, y^b)_{b ∈ B}` at roots
//! of unity: vanishing of all maximal minors, split certificates, and the
//! proportionality dichotomies for single minors.
//!
//! All values are exponent-count vectors in `Z[ζ_n]`, so every zero test is
//! exact. Negative exponents are reduced mod `n`, which multiplies rows by
//! units and leaves ranks unchanged.

use crate::exact::{exponent_counts_vanish, CycloElement, Rational};
use crate::support::{phi, SupportSet};
use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

/// `x = ζ_n^p`, `y = ζ_n^q` with `x ≠ 1`, `y ≠ 1`, `x ≠ y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct UnityPair {
    n: u32,
    p: i64,
    q: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MinorError {
    #[error("inadmissible roots of unity: need p, q, p - q nonzero mod n (n={n}, p={p}, q={q})")]
    Inadmissible { n: u32, p: i64, q: i64 },
    #[error("matrix entry ({0}, {1}) is zero")]
    ZeroEntry(usize, usize),
    #[error("matrix must have 3 rows and at least 3 columns")]
    Shape,
}

impl UnityPair {
    pub fn new(n: u32, p: i64, q: i64) -> Result<Self, MinorError> {
        let m = n as i64;
        let (p, q) = (p.rem_euclid(m), q.rem_euclid(m));
        if p == 0 || q == 0 || p == q {
            return Err(MinorError::Inadmissible { n, p, q });
        }
        Ok(UnityPair { n, p, q })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// All admissible pairs for `n`; empty when `n ≤ 2`.
    pub fn all(n: u32) -> impl Iterator<Item = UnityPair> {
        let m = n as i64;
        (1..m).flat_map(move |p| (1..m).filter(move |&q| q != p).map(move |q| UnityPair { n, p, q }))
    }
}

fn md(e: i64, n: u32) -> usize {
    e.rem_euclid(n as i64) as usize
}

/// Exponent counts of `det [[1,1,1],[x^a,x^b,x^c],[y^a,y^b,y^c]]`.
fn minor_counts(n: u32, p: i64, q: i64, cols: [i64; 3], counts: &mut [i64]) {
    counts.iter_mut().for_each(|c| *c = 0);
    let [a, b, c] = cols;
    for (s, (i, j)) in [(1, (b, c)), (-1, (c, b)), (-1, (a, c)), (1, (c, a)), (1, (a, b)), (-1, (b, a))] {
        counts[md(p * i + q * j, n)] += s;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinorsVerdict {
    pub all_vanish: bool,
    /// Fewer than three columns: there is no 3×3 minor.
    pub vacuous: bool,
}

/// Every 3×3 minor of `(1, x^b, y^b)_{b ∈ B}` vanishes; stops at the first
/// nonzero minor in lexicographic column order.
pub fn all_minors_vanish(b: &SupportSet, u: &UnityPair) -> MinorsVerdict {
    let e = b.elements();
    if e.len() < 3 {
        return MinorsVerdict { all_vanish: true, vacuous: true };
    }
    let mut counts = vec![0i64; u.n as usize];
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            for k in j + 1..e.len() {
                minor_counts(u.n, u.p, u.q, [e[i], e[j], e[k]], &mut counts);
                if !exponent_counts_vanish(u.n, &counts) {
                    return MinorsVerdict { all_vanish: false, vacuous: false };
                }
            }
        }
    }
    MinorsVerdict { all_vanish: true, vacuous: false }
}

/// `B = B' ⊔ B''` with `k ≥ 3` dividing `n`, `φ(B')` and `φ(B'')`
/// (`φ` of at most one element is 0). `bdprime` may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitCertificate {
    pub k: u64,
    pub bprime: Vec<i64>,
    pub bdprime: Vec<i64>,
}

impl SplitCertificate {
    pub fn verify(&self, b: &SupportSet, n: u32) -> bool {
        let mut all: Vec<i64> = self.bprime.iter().chain(&self.bdprime).copied().collect();
        all.sort_unstable();
        self.k >= 3
            && (n as u64).is_multiple_of(self.k)
            && phi(&self.bprime).is_multiple_of(self.k)
            && phi(&self.bdprime).is_multiple_of(self.k)
            && all == b.elements()
            && !self.bprime.is_empty()
    }
}

/// Smallest `k ≥ 3` dividing `n` for which `B` meets at most two residue
/// classes mod `k`, with the class partition (class of `min B` first).
pub fn split_certificate(b: &SupportSet, n: u32) -> Option<SplitCertificate> {
    (3..=n as u64).filter(|k| (n as u64).is_multiple_of(*k)).find_map(|k| {
        let r0 = b.min().rem_euclid(k as i64);
        let (bprime, bdprime): (Vec<i64>, Vec<i64>) = b.elements().iter().partition(|&&e| e.rem_euclid(k as i64) == r0);
        let r1 = bdprime.first().map(|e| e.rem_euclid(k as i64));
        bdprime.iter().all(|e| Some(e.rem_euclid(k as i64)) == r1).then_some(SplitCertificate { k, bprime, bdprime })
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct MinorCounterexample {
    pub n: u32,
    pub b: Vec<i64>,
    /// Pair that kills all minors without a split (forward direction); absent
    /// for converse failures.
    pub pair: Option<(i64, i64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReport {
    pub n_max: u32,
    pub spread_max: i64,
    pub sizes: Vec<usize>,
    pub sets_checked: usize,
    pub pairs_checked: usize,
    pub vanishing_pairs: usize,
    pub split_sets: usize,
    /// All minors vanish at some admissible pair but no split exists.
    pub forward_counterexamples: Vec<MinorCounterexample>,
    /// Forward counterexamples in which `x`, `y` or `x/y` equals `-1`, so
    /// that two rows coincide through a root of order 2.
    pub forward_with_order_two_row_ratio: usize,
    /// A split exists but no admissible pair kills all minors.
    pub converse_counterexamples: Vec<MinorCounterexample>,
    pub certificates_valid: bool,
    pub wall_time_ms: u128,
}

fn subsets(spread_max: i64, sizes: &[usize]) -> Vec<SupportSet> {
    let m = (spread_max + 1) as u32;
    (0u64..1 << m)
        .filter(|mask| sizes.contains(&(mask.count_ones() as usize)))
        .map(|mask| SupportSet::new((0..m as i64).filter(|i| mask & (1 << i) != 0)).expect("nonempty"))
        .collect()
}

/// Exhaustive check of "all minors vanish at some admissible pair ⟺ a
/// split certificate exists" over `n ≤ n_max` and `B ⊆ [0, spread_max]`.
pub fn split_equivalence_scan(n_max: u32, spread_max: i64, sizes: &[usize]) -> EquivalenceReport {
    let start = Instant::now();
    let sets = subsets(spread_max, sizes);
    let work: Vec<(u32, &SupportSet)> = (3..=n_max).flat_map(|n| sets.iter().map(move |b| (n, b))).collect();
    struct Partial {
        pairs: usize,
        vanishing: usize,
        split: bool,
        cert_ok: bool,
        forward: Vec<MinorCounterexample>,
        converse: Option<MinorCounterexample>,
    }
    let parts: Vec<Partial> = work
        .par_iter()
        .map(|&(n, b)| {
            let cert = split_certificate(b, n);
            let cert_ok = cert.as_ref().is_none_or(|c| c.verify(b, n));
            let mut vanishing = 0;
            let mut pairs = 0;
            let mut forward = Vec::new();
            for u in UnityPair::all(n) {
                pairs += 1;
                if all_minors_vanish(b, &u).all_vanish {
                    vanishing += 1;
                    if cert.is_none() {
                        forward.push(MinorCounterexample { n, b: b.elements().to_vec(), pair: Some((u.p, u.q)) });
                    }
                }
            }
            let converse =
                (cert.is_some() && vanishing == 0).then(|| MinorCounterexample { n, b: b.elements().to_vec(), pair: None });
            Partial { pairs, vanishing, split: cert.is_some(), cert_ok, forward, converse }
        })
        .collect();
    let mut report = EquivalenceReport {
        n_max,
        spread_max,
        sizes: sizes.to_vec(),
        sets_checked: work.len(),
        pairs_checked: 0,
        vanishing_pairs: 0,
        split_sets: 0,
        forward_counterexamples: Vec::new(),
        forward_with_order_two_row_ratio: 0,
        converse_counterexamples: Vec::new(),
        certificates_valid: true,
        wall_time_ms: 0,
    };
    for p in parts {
        report.pairs_checked += p.pairs;
        report.vanishing_pairs += p.vanishing;
        report.split_sets += usize::from(p.split);
        report.certificates_valid &= p.cert_ok;
        report.forward_counterexamples.extend(p.forward);
        report.converse_counterexamples.extend(p.converse);
    }
    report.forward_with_order_two_row_ratio = report
        .forward_counterexamples
        .iter()
        .filter(|c| c.pair.is_some_and(|(p, q)| has_order_two_row_ratio(c.n, p, q)))
        .count();
    report.wall_time_ms = start.elapsed().as_millis();
    report
}

/// One of `ζ^p`, `ζ^q`, `ζ^{p-q}` is `-1`.
pub fn has_order_two_row_ratio(n: u32, p: i64, q: i64) -> bool {
    let half = |e: i64| e.rem_euclid(n as i64) != 0 && (2 * e).rem_euclid(n as i64) == 0;
    half(p) || half(q) || half(p - q)
}

/// Outcome of the single-minor dichotomy; row and column indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinorShape {
    Nondegenerate,
    PropRows { i: usize, j: usize },
    PropCols { i: usize, j: usize },
    /// Vanishing determinant with no proportional rows or columns.
    Unexplained,
}

/// `det [[1,1,1],[x^a,x^b,x^c],[y^a,y^b,y^c]]` at `x = ζ_n^p`, `y = ζ_n^q`
/// (any residues, including trivial ones).
pub fn single_minor_shape(abc: [i64; 3], n: u32, p: i64, q: i64) -> MinorShape {
    let mut counts = vec![0i64; n as usize];
    minor_counts(n, p, q, abc, &mut counts);
    if !exponent_counts_vanish(n, &counts) {
        return MinorShape::Nondegenerate;
    }
    let same = |f: &dyn Fn(i64) -> usize| f(abc[0]) == f(abc[1]) && f(abc[1]) == f(abc[2]);
    if same(&|e| md(p * e, n)) {
        return MinorShape::PropRows { i: 1, j: 2 };
    }
    if same(&|e| md(q * e, n)) {
        return MinorShape::PropRows { i: 1, j: 3 };
    }
    if same(&|e| md((p - q) * e, n)) {
        return MinorShape::PropRows { i: 2, j: 3 };
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if md(p * abc[i], n) == md(p * abc[j], n) && md(q * abc[i], n) == md(q * abc[j], n) {
            return MinorShape::PropCols { i: i + 1, j: j + 1 };
        }
    }
    MinorShape::Unexplained
}

/// Float version for arbitrary unit-modulus `x`, `y`, tolerance `1e-9`.
pub fn single_minor_shape_float(abc: [i64; 3], x: Complex64, y: Complex64) -> MinorShape {
    let tol = 1e-9;
    let xs: Vec<Complex64> = abc.iter().map(|&e| x.powi(e as i32)).collect();
    let ys: Vec<Complex64> = abc.iter().map(|&e| y.powi(e as i32)).collect();
    let one = vec![Complex64::new(1.0, 0.0); 3];
    let det = crate::numeric::complex_det(&[one.clone(), xs.clone(), ys.clone()]);
    if det.norm() > tol {
        return MinorShape::Nondegenerate;
    }
    let prop = |u: &[Complex64], v: &[Complex64]| (0..3).all(|i| (0..3).all(|j| (u[i] * v[j] - u[j] * v[i]).norm() <= tol));
    let rows = [&one, &xs, &ys];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if prop(rows[i], rows[j]) {
            return MinorShape::PropRows { i: i + 1, j: j + 1 };
        }
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if prop(&[one[i], xs[i], ys[i]], &[one[j], xs[j], ys[j]]) {
            return MinorShape::PropCols { i: i + 1, j: j + 1 };
        }
    }
    MinorShape::Unexplained
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivativeMinorShape {
    Nondegenerate,
    /// `x^a = x^b = x^c`.
    EqualRows13,
    Unexplained,
}

/// `det [[1,1,1],[a,b,c],[x^a,x^b,x^c]]` at `x = ζ_n^p`.
pub fn derivative_minor_shape(abc: [i64; 3], n: u32, p: i64) -> DerivativeMinorShape {
    let [a, b, c] = abc;
    let mut counts = vec![0i64; n as usize];
    // b x^c - c x^b - a x^c + c x^a + a x^b - b x^a
    for (w, e) in [(b - a, c), (a - c, b), (c - b, a)] {
        counts[md(p * e, n)] += w;
    }
    if !exponent_counts_vanish(n, &counts) {
        return DerivativeMinorShape::Nondegenerate;
    }
    if md(p * a, n) == md(p * b, n) && md(p * b, n) == md(p * c, n) {
        DerivativeMinorShape::EqualRows13
    } else {
        DerivativeMinorShape::Unexplained
    }
}

pub fn derivative_minor_shape_float(abc: [i64; 3], x: Complex64) -> DerivativeMinorShape {
    let tol = 1e-9;
    let xs: Vec<Complex64> = abc.iter().map(|&e| x.powi(e as i32)).collect();
    let m = vec![vec![Complex64::new(1.0, 0.0); 3], abc.iter().map(|&e| Complex64::new(e as f64, 0.0)).collect(), xs.clone()];
    if crate::numeric::complex_det(&m).norm() > tol {
        return DerivativeMinorShape::Nondegenerate;
    }
    if (xs[0] - xs[1]).norm() <= tol && (xs[1] - xs[2]).norm() <= tol {
        DerivativeMinorShape::EqualRows13
    } else {
        DerivativeMinorShape::Unexplained
    }
}

/// Entries with an exact or tolerance-based test of `a d = b c`.
pub trait CrossField: Clone {
    fn is_null(&self) -> bool;
    fn cross_equal(a: &Self, d: &Self, b: &Self, c: &Self) -> bool;
}

impl CrossField for CycloElement {
    fn is_null(&self) -> bool {
        self.is_zero()
    }
    fn cross_equal(a: &Self, d: &Self, b: &Self, c: &Self) -> bool {
        a.mul(d) == b.mul(c)
    }
}

impl CrossField for Rational {
    fn is_null(&self) -> bool {
        self.is_zero()
    }
    fn cross_equal(a: &Self, d: &Self, b: &Self, c: &Self) -> bool {
        a * d == b * c
    }
}

impl CrossField for Complex64 {
    fn is_null(&self) -> bool {
        self.norm() == 0.0
    }
    fn cross_equal(a: &Self, d: &Self, b: &Self, c: &Self) -> bool {
        let s = (a * d).norm().max((b * c).norm()).max(1.0);
        (a * d - b * c).norm() <= 1e-9 * s
    }
}

/// Rows or column classes of a `3 × n` matrix; indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RowColumnStructure {
    TwoPropRows { i: usize, j: usize },
    ColumnGroups { groups: Vec<Vec<usize>> },
    Neither,
}

pub fn row_column_structure<T: CrossField>(m: &[Vec<T>]) -> Result<RowColumnStructure, MinorError> {
    if m.len() != 3 || m[0].len() < 3 || m.iter().any(|r| r.len() != m[0].len()) {
        return Err(MinorError::Shape);
    }
    for (i, row) in m.iter().enumerate() {
        if let Some(j) = row.iter().position(T::is_null) {
            return Err(MinorError::ZeroEntry(i + 1, j + 1));
        }
    }
    let cols = m[0].len();
    let prop = |u: &dyn Fn(usize) -> T, v: &dyn Fn(usize) -> T, len: usize| {
        (1..len).all(|k| T::cross_equal(&u(0), &v(k), &u(k), &v(0)))
    };
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if prop(&|k| m[i][k].clone(), &|k| m[j][k].clone(), cols) {
            return Ok(RowColumnStructure::TwoPropRows { i: i + 1, j: j + 1 });
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for c in 0..cols {
        match groups.iter_mut().find(|g| prop(&|r| m[r][g[0]].clone(), &|r| m[r][c].clone(), 3)) {
            Some(g) => g.push(c),
            None => groups.push(vec![c]),
        }
    }
    if groups.len() <= 2 {
        Ok(RowColumnStructure::ColumnGroups { groups: groups.into_iter().map(|g| g.into_iter().map(|c| c + 1).collect()).collect() })
    } else {
        Ok(RowColumnStructure::Neither)
    }
}

/// `M(B; ζ^p, ζ^q)` with entries in `Z[ζ_n]`.
pub fn unity_minor_matrix(b: &SupportSet, u: &UnityPair) -> Vec<Vec<CycloElement>> {
    [0, u.p, u.q]
        .iter()
        .map(|&s| b.elements().iter().map(|&e| CycloElement::root_power(u.n, s * e)).collect())
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct MinorSuiteReport {
    pub n_max: u32,
    pub exponent_range: (i64, i64),
    pub cases: usize,
    pub vanishing: usize,
    pub unexplained: Vec<(u32, i64, i64, [i64; 3])>,
    pub wall_time_ms: u128,
}

fn triples(lo: i64, hi: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in a + 1..=hi {
            for c in b + 1..=hi {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Every vanishing single-minor determinant over admissible pairs and
/// exponent triples in `[lo, hi]` has proportional rows or columns.
pub fn single_minor_suite(n_max: u32, lo: i64, hi: i64) -> MinorSuiteReport {
    let start = Instant::now();
    let ts = triples(lo, hi);
    let per_n: Vec<(usize, usize, Vec<(u32, i64, i64, [i64; 3])>)> = (3..=n_max)
        .into_par_iter()
        .map(|n| {
            let (mut cases, mut zero, mut bad) = (0, 0, Vec::new());
            for u in UnityPair::all(n) {
                for t in &ts {
                    cases += 1;
                    match single_minor_shape(*t, n, u.p, u.q) {
                        MinorShape::Nondegenerate => {}
                        MinorShape::Unexplained => {
                            zero += 1;
                            bad.push((n, u.p, u.q, *t));
                        }
                        _ => zero += 1,
                    }
                }
            }
            (cases, zero, bad)
        })
        .collect();
    collect_suite(n_max, (lo, hi), per_n, start)
}

/// Every vanishing derivative-row minor over `x = ζ_n^p`, `p ≠ 0`, and
/// exponent triples in `[lo, hi]` has `x^a = x^b = x^c`.
pub fn derivative_minor_suite(n_max: u32, lo: i64, hi: i64) -> MinorSuiteReport {
    let start = Instant::now();
    let ts = triples(lo, hi);
    let per_n: Vec<(usize, usize, Vec<(u32, i64, i64, [i64; 3])>)> = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let (mut cases, mut zero, mut bad) = (0, 0, Vec::new());
            for p in 1..n as i64 {
                for t in &ts {
                    cases += 1;
                    match derivative_minor_shape(*t, n, p) {
                        DerivativeMinorShape::Nondegenerate => {}
                        DerivativeMinorShape::EqualRows13 => zero += 1,
                        DerivativeMinorShape::Unexplained => {
                            zero += 1;
                            bad.push((n, p, 0, *t));
                        }
                    }
                }
            }
            (cases, zero, bad)
        })
        .collect();
    collect_suite(n_max, (lo, hi), per_n, start)
}

fn collect_suite(
    n_max: u32,
    range: (i64, i64),
    per_n: Vec<(usize, usize, Vec<(u32, i64, i64, [i64; 3])>)>,
    start: Instant,
) -> MinorSuiteReport {
    let mut r = MinorSuiteReport { n_max, exponent_range: range, cases: 0, vanishing: 0, unexplained: Vec::new(), wall_time_ms: 0 };
    for (c, z, b) in per_n {
        r.cases += c;
        r.vanishing += z;
        r.unexplained.extend(b);
    }
    r.wall_time_ms = start.elapsed().as_millis();
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::TAU;

    fn set(v: &[i64]) -> SupportSet {
        SupportSet::new(v.iter().copied()).unwrap()
    }

    fn z(n: u32, p: i64) -> Complex64 {
        Complex64::from_polar(1.0, TAU * p as f64 / n as f64)
    }

    #[test]
    fn minor_vanishing_examples() {
        assert!(all_minors_vanish(&set(&[0, 3, 6, 9]), &UnityPair::new(3, 1, 2).unwrap()).all_vanish);
        assert!(!all_minors_vanish(&set(&[0, 1, 2]), &UnityPair::new(3, 1, 2).unwrap()).all_vanish);
        assert!(all_minors_vanish(&set(&[0, 2, 3, 5]), &UnityPair::new(6, 2, 4).unwrap()).all_vanish);
        assert!(all_minors_vanish(&set(&[0, 1]), &UnityPair::new(3, 1, 2).unwrap()).vacuous);
        assert!(UnityPair::new(4, 1, 5).is_err());
        assert_eq!(UnityPair::all(2).count(), 0);
    }

    #[test]
    fn split_examples() {
        let c = split_certificate(&set(&[0, 3, 6, 9]), 3).unwrap();
        assert_eq!((c.k, c.bprime.clone(), c.bdprime.clone()), (3, vec![0, 3, 6, 9], vec![]));
        let c = split_certificate(&set(&[0, 2, 3, 5]), 6).unwrap();
        assert_eq!((c.k, c.bprime.clone(), c.bdprime.clone()), (3, vec![0, 3], vec![2, 5]));
        assert!(c.verify(&set(&[0, 2, 3, 5]), 6));
        assert!(split_certificate(&set(&[0, 1, 2]), 3).is_none());
    }

    #[test]
    fn single_minor_examples() {
        assert_eq!(single_minor_shape([0, 1, 2], 4, 1, 2), MinorShape::Nondegenerate);
        assert_eq!(single_minor_shape([0, 1, 2], 5, 0, 3), MinorShape::PropRows { i: 1, j: 2 });
        assert_eq!(single_minor_shape([0, 2, 4], 4, 2, 1), MinorShape::PropRows { i: 1, j: 2 });
        assert_eq!(single_minor_shape_float([0, 1, 2], z(4, 1), z(4, 2)), MinorShape::Nondegenerate);
        assert_eq!(derivative_minor_shape([0, 1, 2], 1, 0), DerivativeMinorShape::EqualRows13);
        assert_eq!(derivative_minor_shape([0, 1, 2], 4, 1), DerivativeMinorShape::Nondegenerate);
        assert_eq!(derivative_minor_shape([0, 2, 4], 2, 1), DerivativeMinorShape::EqualRows13);
        assert_eq!(derivative_minor_shape_float([0, 2, 4], z(2, 1)), DerivativeMinorShape::EqualRows13);
    }

    #[test]
    fn float_agrees_with_exact_minor_test() {
        for n in 3..=12u32 {
            for u in UnityPair::all(n) {
                for b in [set(&[0, 1, 3, 4]), set(&[0, 2, 4, 6]), set(&[0, 3, 5])] {
                    let exact = all_minors_vanish(&b, &u).all_vanish;
                    let (x, y) = (z(n, u.p), z(n, u.q));
                    let e = b.elements();
                    let mut float = true;
                    for i in 0..e.len() {
                        for j in i + 1..e.len() {
                            for k in j + 1..e.len() {
                                let s = single_minor_shape_float([e[i], e[j], e[k]], x, y);
                                float &= s != MinorShape::Nondegenerate;
                            }
                        }
                    }
                    assert_eq!(exact, float, "n={n} {u:?} {b}");
                }
            }
        }
    }

    #[test]
    fn structure_examples() {
        let q = |v: i64| Rational::from_integer(v.into());
        let r: Vec<Rational> = [1, 2, 3, 4].iter().map(|&v| q(v)).collect();
        let m = vec![r.clone(), r.iter().map(|v| v * q(2)).collect(), vec![q(5), q(1), q(1), q(7)]];
        assert_eq!(row_column_structure(&m).unwrap(), RowColumnStructure::TwoPropRows { i: 1, j: 2 });
        let col = |c: [i64; 3], s: i64| c.map(|v| q(v * s));
        let cols = [col([1, 2, 3], 1), col([1, 2, 3], 1), col([1, 2, 3], 2), col([1, 5, 2], 1), col([1, 5, 2], 3)];
        let m: Vec<Vec<Rational>> = (0..3).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        assert_eq!(row_column_structure(&m).unwrap(), RowColumnStructure::ColumnGroups { groups: vec![vec![1, 2, 3], vec![4, 5]] });
        let (t, u) = (q(2), q(3));
        let m = vec![vec![q(1), q(1), q(1)], vec![q(1), t.clone(), &t * &t], vec![q(1), u.clone(), &u * &u]];
        assert_eq!(row_column_structure(&m).unwrap(), RowColumnStructure::Neither);
        let bad = vec![vec![q(0), q(1), q(1)], vec![q(1); 3], vec![q(1); 3]];
        assert_eq!(row_column_structure(&bad), Err(MinorError::ZeroEntry(1, 1)));
    }

    #[test]
    fn small_scans_are_clean() {
        let r = split_equivalence_scan(8, 8, &[3, 4]);
        assert!(r.converse_counterexamples.is_empty() && r.certificates_valid);
        // rows equal through y = -1: B = {0, 2, 4}, n = 6, (p, q) = (1, 3)
        assert!(r.forward_counterexamples.iter().any(|c| c.n == 6 && c.b == [0, 2, 4] && c.pair == Some((1, 3))));
        assert_eq!(r.forward_with_order_two_row_ratio, r.forward_counterexamples.len());
        let r = single_minor_suite(12, -4, 4);
        assert!(r.unexplained.is_empty());
        let r = derivative_minor_suite(12, -4, 4);
        assert!(r.unexplained.is_empty());
    }
}
