//! Scan of degenerate root tuples: which corank strata `S_{n1,n2}` occur
//! among roots-of-unity and generic tuples, compared with the combinatorial
//! predictions in terms of `φ`, splits and common sublattices.

use super::codim::unity_configs;
use super::sample::{random_generic_rationals, reduced_support, rng_for};
use super::vandermonde::{corank_kernel, corank_unity, mult_vandermonde, mult_vandermonde_unity, unity_row_is_constant};
use super::StratumLabel;
use crate::exact::format_rational;
use crate::support::{SupportPair, SupportSet};
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct ScanConfig {
    pub n_max: u32,
    pub generic_trials: usize,
    pub seed: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { n_max: 12, generic_trials: 8, seed: 0 }
    }
}

/// A tuple at which a stratum was observed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TupleWitness {
    /// `(ζ_n^{e_1}, ..., ζ_n^{e_k})` with `e_1 = 0`.
    Unity { n: u32, exponents: Vec<i64> },
    Generic { points: Vec<String> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Prediction {
    NonEmpty,
    Empty,
    /// No combinatorial statement applies.
    Unconstrained,
}

#[derive(Debug, Clone, Serialize)]
pub struct StratumFinding {
    pub n1: usize,
    pub n2: usize,
    pub count: usize,
    pub witness: Option<TupleWitness>,
    pub predicted: Prediction,
    /// Smallest root-of-unity order that realizes a nonempty prediction.
    pub witness_order: Option<u32>,
    pub in_range: bool,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SideFinding {
    pub side: usize,
    pub corank: usize,
    pub found: bool,
    pub predicted: Prediction,
    pub witness_order: Option<u32>,
    pub in_range: bool,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub pair: SupportPair,
    pub label: StratumLabel,
    pub config: ScanConfig,
    pub tuples_examined: usize,
    pub findings: Vec<StratumFinding>,
    pub sides: Vec<SideFinding>,
    /// Every maximal-corank witness on a plain side has the form
    /// `c·(1, t, u)` with `t, u` roots of unity of order dividing `φ`.
    pub unity_form_ok: bool,
    pub mismatches: usize,
}

#[derive(Debug, Clone, Copy)]
struct Pred {
    what: Prediction,
    order: Option<u32>,
}

impl Pred {
    const FREE: Pred = Pred { what: Prediction::Unconstrained, order: None };
    fn from(cond: bool, order: Option<u32>) -> Pred {
        if cond {
            Pred { what: Prediction::NonEmpty, order }
        } else {
            Pred { what: Prediction::Empty, order: None }
        }
    }
}

fn smallest_divisor_at_least(v: u64, lo: u64) -> Option<u32> {
    (lo..=v).find(|d| v.is_multiple_of(*d)).map(|d| d as u32)
}

fn is_plain(l: &StratumLabel) -> bool {
    l.roots().iter().all(|&r| r == (1, 1))
}

/// Smallest `k ≥ 3` dividing `φ(other)` such that `target` meets exactly
/// two residue classes mod `k`.
fn split_order(target: &SupportSet, other: &SupportSet) -> Option<u32> {
    let phi = other.phi();
    (3..=phi).filter(|k| phi.is_multiple_of(*k)).find(|&k| {
        let mut r = target.residue_classes(k);
        r.sort_unstable();
        r.dedup();
        r.len() == 2
    }).map(|k| k as u32)
}

fn side_prediction(b: &SupportSet, l: &StratumLabel, corank: usize) -> Pred {
    let k = l.root_count();
    if !is_plain(l) || b.len() < k {
        return Pred::FREE;
    }
    let phi = b.phi();
    match (k, corank) {
        (1, 0) => Pred::from(true, None),
        (1, _) => Pred::from(false, None),
        (2, 0) => Pred::from(true, None),
        (2, 1) => Pred::from(phi >= 2, smallest_divisor_at_least(phi, 2)),
        (3, 0) => Pred::from(true, None),
        (3, 2) => Pred::from(phi >= 3, smallest_divisor_at_least(phi, 3)),
        (3, 1) if b.len() == 3 => {
            if b.spread() == 2 {
                Pred::from(false, None)
            } else {
                Pred::FREE
            }
        }
        _ => Pred::FREE,
    }
}

fn joint_prediction(p: &SupportPair, l: &StratumLabel, n1: usize, n2: usize) -> Pred {
    let (b1, b2) = (p.b1(), p.b2());
    let (f1, f2) = (b1.phi(), b2.phi());
    let g = f1.gcd(&f2);
    let k = l.root_count();
    if k == 1 && l.j0() == 0 && l.jinf() == 0 {
        let generic = |b: &SupportSet, j: u32| (j as usize).saturating_sub(b.len());
        let (j1, j2) = l.roots()[0];
        return Pred::from((n1, n2) == (generic(b1, j1), generic(b2, j2)), None);
    }
    if l.j0() != 0 || l.jinf() != 0 {
        return Pred::FREE;
    }
    if is_plain(l) && k == 2 {
        return match (n1, n2) {
            (0, 0) => Pred::from(true, None),
            (1, 1) => Pred::from(g >= 2, smallest_divisor_at_least(g, 2)),
            (1, 0) => Pred::from(f2 % f1 != 0, Some(f1 as u32)),
            (0, 1) => Pred::from(f1 % f2 != 0, Some(f2 as u32)),
            _ => Pred::FREE,
        };
    }
    if is_plain(l) && k == 3 && b1.len() >= 3 && b2.len() >= 3 {
        return match (n1, n2) {
            (0, 0) => Pred::from(true, None),
            (2, 2) => Pred::from(g >= 3, smallest_divisor_at_least(g, 3)),
            (1, 2) => {
                let o = split_order(b1, b2);
                Pred::from(o.is_some(), o)
            }
            (2, 1) => {
                let o = split_order(b2, b1);
                Pred::from(o.is_some(), o)
            }
            _ => Pred::FREE,
        };
    }
    if l.roots() == [(2, 1), (1, 1)] && b1.len() > 2 && (n1, n2) == (1, 1) {
        return Pred::from(g >= 2, smallest_divisor_at_least(g, 2));
    }
    Pred::FREE
}

/// Observed coranks `(n1, n2)` at `ζ_n^{exps}`; a corank-maximal row test by
/// exponent congruences short-cuts the cyclotomic elimination for plain
/// labels.
fn unity_coranks(reds: &[SupportSet; 2], js: &[Vec<u32>; 2], plain: bool, n: u32, exps: &[i64]) -> Option<(usize, usize)> {
    let mut out = [0usize; 2];
    for i in 0..2 {
        let rows: usize = js[i].iter().map(|&j| j as usize).sum();
        if plain && exps.iter().all(|&e| unity_row_is_constant(&reds[i], n, e)) {
            out[i] = rows - 1;
            continue;
        }
        out[i] = corank_unity(mult_vandermonde_unity(&reds[i], n, exps, &js[i]).ok()?);
    }
    Some((out[0], out[1]))
}

#[allow(non_snake_case)]
pub fn scan_S(p: &SupportPair, l: &StratumLabel, cfg: &ScanConfig) -> ScanReport {
    let k = l.root_count();
    let reds: Option<[SupportSet; 2]> =
        (|| Some([reduced_support(p.b1(), l.j0(), l.jinf())?, reduced_support(p.b2(), l.j0(), l.jinf())?]))();
    let js = [l.side_js(1), l.side_js(2)];
    let plain = is_plain(l);
    let mut seen: BTreeMap<(usize, usize), (usize, TupleWitness)> = BTreeMap::new();
    let mut examined = 0;
    let mut unity_form_ok = true;

    if let Some(reds) = &reds {
        let ordered = l.roots().windows(2).any(|w| w[0] != w[1]);
        let configs: Vec<(u32, Vec<i64>)> =
            (k.max(1) as u32..=cfg.n_max).flat_map(|n| unity_configs(n, k, ordered).into_iter().map(move |e| (n, e))).collect();
        examined += configs.len();
        let results: Vec<((usize, usize), u32, Vec<i64>)> = configs
            .into_par_iter()
            .filter_map(|(n, e)| unity_coranks(reds, &js, plain, n, &e).map(|c| (c, n, e)))
            .collect();
        for (c, n, e) in results {
            if plain && k == 3 {
                for (i, &ci) in [c.0, c.1].iter().enumerate() {
                    if ci == 2 {
                        let phi = reds[i].phi() as i64;
                        unity_form_ok &= e.iter().all(|&x| (x * phi).rem_euclid(n as i64) == 0);
                    }
                }
            }
            let entry = seen.entry(c).or_insert((0, TupleWitness::Unity { n, exponents: e }));
            entry.0 += 1;
        }

        let mut rng = rng_for(cfg.seed, 3);
        for _ in 0..cfg.generic_trials {
            let xs = random_generic_rationals(k, &mut rng);
            let mut c = [0usize; 2];
            let mut ok = true;
            for i in 0..2 {
                match mult_vandermonde(&reds[i], &xs, &js[i]) {
                    Ok(m) if !m.is_empty() => c[i] = corank_kernel(&m, reds[i].len()).0,
                    Ok(_) => {}
                    Err(_) => ok = false,
                }
            }
            if !ok {
                continue;
            }
            examined += 1;
            let w = TupleWitness::Generic { points: xs.iter().map(format_rational).collect() };
            let entry = seen.entry((c[0], c[1])).or_insert((0, w));
            entry.0 += 1;
            if plain && k == 3 && (c[0] == 2 || c[1] == 2) {
                unity_form_ok = false;
            }
        }
    }

    let rows = |i: usize| js[i].iter().map(|&j| j as usize).sum::<usize>();
    let in_range = |pr: &Pred| pr.order.is_none_or(|o| o <= cfg.n_max);
    let mut findings = Vec::new();
    let mut mismatches = 0;
    for n1 in 0..=rows(0) {
        for n2 in 0..=rows(1) {
            let pr = joint_prediction(p, l, n1, n2);
            let hit = seen.get(&(n1, n2));
            if hit.is_none() && pr.what != Prediction::NonEmpty {
                continue;
            }
            let ok = match pr.what {
                Prediction::NonEmpty => hit.is_some() || !in_range(&pr),
                Prediction::Empty => hit.is_none(),
                Prediction::Unconstrained => true,
            };
            mismatches += usize::from(!ok);
            findings.push(StratumFinding {
                n1,
                n2,
                count: hit.map_or(0, |h| h.0),
                witness: hit.map(|h| h.1.clone()),
                predicted: pr.what,
                witness_order: pr.order,
                in_range: in_range(&pr),
                matches: ok,
            });
        }
    }

    let mut sides = Vec::new();
    if l.j0() == 0 && l.jinf() == 0 {
        for i in 0..2 {
            for corank in 0..=rows(i) {
                let pr = side_prediction(p.side(i + 1), l, corank);
                let found = seen.keys().any(|&(a, b)| if i == 0 { a } else { b } == corank);
                if pr.what == Prediction::Unconstrained && !found {
                    continue;
                }
                let ok = match pr.what {
                    Prediction::NonEmpty => found || !in_range(&pr),
                    Prediction::Empty => !found,
                    Prediction::Unconstrained => true,
                };
                mismatches += usize::from(!ok);
                sides.push(SideFinding {
                    side: i + 1,
                    corank,
                    found,
                    predicted: pr.what,
                    witness_order: pr.order,
                    in_range: in_range(&pr),
                    matches: ok,
                });
            }
        }
    }

    ScanReport {
        pair: p.clone(),
        label: l.clone(),
        config: cfg.clone(),
        tuples_examined: examined,
        findings,
        sides,
        unity_form_ok,
        mismatches,
    }
}

impl ScanReport {
    pub fn found(&self, n1: usize, n2: usize) -> bool {
        self.findings.iter().any(|f| f.n1 == n1 && f.n2 == n2 && f.count > 0)
    }

    pub fn side_found(&self, side: usize, corank: usize) -> bool {
        self.sides.iter().any(|s| s.side == side && s.corank == corank && s.found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan(a: &[i64], b: &[i64], l: &str) -> ScanReport {
        let p = SupportPair::from_slices(a, b).unwrap();
        scan_S(&p, &StratumLabel::parse(l).unwrap(), &ScanConfig::default())
    }

    #[test]
    fn sublattice_pair_has_doubly_degenerate_triples() {
        let r = scan(&[0, 3, 6], &[0, 3, 6], "N(1,1,1)");
        assert!(r.found(2, 2));
        let f = r.findings.iter().find(|f| (f.n1, f.n2) == (2, 2)).unwrap();
        assert_eq!(f.witness, Some(TupleWitness::Unity { n: 3, exponents: vec![0, 1, 2] }));
        assert_eq!(r.mismatches, 0, "{r:#?}");
        assert!(r.unity_form_ok);
    }

    #[test]
    fn split_pair_has_mixed_triples() {
        let r = scan(&[0, 1, 3, 4, 6, 7], &[0, 3, 6], "N(1,1,1)");
        assert!(r.found(1, 2));
        assert_eq!(r.mismatches, 0, "{r:#?}");
    }

    #[test]
    fn consecutive_supports_stay_nondegenerate() {
        let r = scan(&[0, 1, 2], &[0, 1, 2], "N(1,1,1)");
        assert_eq!(r.findings.iter().filter(|f| f.count > 0).map(|f| (f.n1, f.n2)).collect::<Vec<_>>(), vec![(0, 0)]);
        assert_eq!(r.mismatches, 0);
    }

    #[test]
    fn pairs_of_points_follow_phi() {
        let r = scan(&[0, 2, 4], &[0, 3], "N(1,1)");
        assert!(r.found(1, 0) && r.found(0, 1) && !r.found(1, 1));
        assert_eq!(r.mismatches, 0, "{r:#?}");
    }
}
