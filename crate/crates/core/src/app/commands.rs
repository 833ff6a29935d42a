use super::{AppError, RunConfig};
use crate::laurent::{classify_roots, common_roots_tol, AnyLaurent, LaurentJson, PointClass, RootRecord};
use crate::minors::{split_equivalence_scan, EquivalenceReport};
use crate::mpoly::{MPoly, MPolyJson};
use crate::resultant::{resultant_poly, sylvester};
use crate::singularity::{classify_germ, slice_germ, GermClass, PlaneGerm};
use crate::strata::{estimate_codim, random_rational, rng_for, scan_S, CodimConfig, CodimEstimate, ScanConfig, ScanReport};
use crate::support::{check_conditions, classify, ConditionReport, SupportPair, Verdict};
use crate::{Rational, StratumLabel};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyOutput {
    pub pair: SupportPair,
    /// Conditions among 1..=5 that hold.
    pub firing: Vec<u8>,
    pub conditions: ConditionReport,
    pub verdict: Verdict,
    pub summary: String,
}

pub fn cmd_classify(pair: &SupportPair) -> ClassifyOutput {
    let conditions = check_conditions(pair);
    let verdict = classify(pair);
    let firing = conditions.firing();
    let mut summary = if verdict.part_i_generic_a1 {
        "generic A1: a generic singular point of the resultant is a node".to_string()
    } else {
        format!("conditions {firing:?} hold: generic singularities need not be nodes")
    };
    summary.push_str(if verdict.part_ii_codim2 {
        "; singular locus has codimension 2"
    } else {
        "; condition 6 holds, singular locus has codimension 1"
    });
    ClassifyOutput { pair: pair.clone(), firing, conditions, verdict, summary }
}

#[derive(Serialize)]
pub struct ResultantOutput {
    pub pair: SupportPair,
    pub sylvester_size: usize,
    pub num_terms: usize,
    pub total_degree: Option<u32>,
    pub polynomial: String,
    pub json: MPolyJson,
}

pub fn cmd_resultant(pair: &SupportPair, cfg: &RunConfig) -> Result<ResultantOutput, AppError> {
    let r = resultant_poly(pair, cfg.det_bound).map_err(|e| AppError::Usage(e.to_string()))?;
    Ok(ResultantOutput {
        pair: pair.clone(),
        sylvester_size: sylvester(pair).size(),
        num_terms: r.num_terms(),
        total_degree: r.total_degree(),
        polynomial: r.to_string(),
        json: r.to_json(),
    })
}

#[derive(Deserialize)]
pub struct PointInput {
    pub f: LaurentJson,
    pub g: LaurentJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct PointOutput {
    pub class: PointClass,
    /// All coefficients were rational, so every decision was exact.
    pub exact: bool,
    pub common_roots: Vec<RootRecord>,
}

pub fn cmd_point_classify(input: &PointInput, cfg: &RunConfig) -> Result<PointOutput, AppError> {
    let usage = |e: crate::laurent::LaurentError| AppError::Usage(e.to_string());
    let f = AnyLaurent::from_json(&input.f).map_err(usage)?;
    let g = AnyLaurent::from_json(&input.g).map_err(usage)?;
    let (roots, class, exact) = match (&f, &g) {
        (AnyLaurent::Exact(f), AnyLaurent::Exact(g)) => {
            let roots = common_roots_tol(f, g, cfg.tolerance).map_err(degenerate)?;
            let class = classify_roots(f, g, &roots).map_err(degenerate)?;
            (roots, class, true)
        }
        _ => {
            let (f, g) = (f.to_complex(), g.to_complex());
            let roots = common_roots_tol(&f, &g, cfg.tolerance).map_err(degenerate)?;
            let class = classify_roots(&f, &g, &roots).map_err(degenerate)?;
            (roots, class, false)
        }
    };
    Ok(PointOutput { class, exact, common_roots: roots })
}

fn degenerate(e: impl std::fmt::Display) -> AppError {
    AppError::Degenerate(e.to_string())
}

/// Either a germ in `s, t` or a resultant slice: supports, a point given as
/// coefficient-variable values, and optional plane directions (seeded random
/// rational directions when absent).
#[derive(Deserialize)]
#[serde(untagged)]
pub enum GermInput {
    Germ {
        germ: MPolyJson,
    },
    Slice {
        pair: SupportPair,
        point: BTreeMap<String, String>,
        #[serde(default)]
        dir1: Option<Vec<String>>,
        #[serde(default)]
        dir2: Option<Vec<String>>,
    },
}

#[derive(Serialize)]
pub struct GermOutput {
    pub germ: MPolyJson,
    pub germ_text: String,
    pub class: GermClass,
    pub dir1: Option<Vec<String>>,
    pub dir2: Option<Vec<String>>,
}

fn parse_rationals(v: &[String]) -> Result<Vec<Rational>, AppError> {
    v.iter()
        .map(|s| crate::exact::parse_rational(s).map_err(|_| AppError::Usage(format!("malformed rational {s:?}"))))
        .collect()
}

pub fn cmd_germ_classify(input: &GermInput, cfg: &RunConfig) -> Result<GermOutput, AppError> {
    let (germ, dirs) = match input {
        GermInput::Germ { germ } => {
            let poly = MPoly::<Rational>::from_json(germ).map_err(|e| AppError::Usage(e.to_string()))?;
            if poly.vars().len() != 2 {
                return Err(AppError::Usage("a germ must be a polynomial in exactly two variables".into()));
            }
            let poly = MPoly::from_terms(crate::mpoly::var_list(&["s", "t"]), poly.terms().iter().map(|(e, c)| (e.clone(), c.clone())).collect::<Vec<_>>())
                .map_err(|e| AppError::Usage(e.to_string()))?;
            (PlaneGerm::new(poly).map_err(degenerate)?, None)
        }
        GermInput::Slice { pair, point, dir1, dir2 } => {
            let r: MPoly<BigInt> = resultant_poly(pair, cfg.det_bound).map_err(|e| AppError::Usage(e.to_string()))?;
            let mut pt = BTreeMap::new();
            for (k, v) in point {
                let q = parse_rationals(std::slice::from_ref(v))?.remove(0);
                pt.insert(k.clone(), q);
            }
            let n = r.vars().len();
            let mut rng = rng_for(cfg.seed, 0x6e72);
            let mut pick = |d: &Option<Vec<String>>| -> Result<Vec<Rational>, AppError> {
                match d {
                    Some(v) => parse_rationals(v),
                    None => Ok((0..n).map(|_| random_rational(&mut rng)).collect()),
                }
            };
            let (d1, d2) = (pick(dir1)?, pick(dir2)?);
            let g = slice_germ(&r, &pt, &d1, &d2).map_err(|e| AppError::Usage(e.to_string()))?;
            let fmt = |d: &[Rational]| d.iter().map(crate::exact::format_rational).collect::<Vec<_>>();
            (g, Some((fmt(&d1), fmt(&d2))))
        }
    };
    let class = classify_germ(&germ).map_err(degenerate)?;
    let (dir1, dir2) = dirs.unzip();
    Ok(GermOutput { germ: germ.to_json(), germ_text: germ.poly().to_string(), class, dir1, dir2 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanKind {
    Minors,
    Strata,
    Codim,
}

impl std::str::FromStr for ScanKind {
    type Err = AppError;
    fn from_str(s: &str) -> Result<Self, AppError> {
        match s {
            "minors" => Ok(ScanKind::Minors),
            "strata" => Ok(ScanKind::Strata),
            "codim" => Ok(ScanKind::Codim),
            other => Err(AppError::Usage(format!("unknown scan kind {other:?} (expected minors, strata or codim)"))),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScanOutput {
    Minors(EquivalenceReport),
    Strata(ScanReport),
    Codim(CodimEstimate),
}

/// `spread` and `sizes` drive the minor scan; `pair` and `label` the strata
/// and codimension probes.
pub fn cmd_scan(
    kind: ScanKind,
    spread: i64,
    sizes: &[usize],
    pair: Option<&SupportPair>,
    label: Option<&StratumLabel>,
    cfg: &RunConfig,
) -> Result<ScanOutput, AppError> {
    let need = || match (pair, label) {
        (Some(p), Some(l)) => Ok((p, l)),
        (None, _) => Err(AppError::Usage("this scan needs --b1 and --b2".into())),
        (_, None) => Err(AppError::Usage("this scan needs --label".into())),
    };
    Ok(match kind {
        ScanKind::Minors => {
            if spread < 0 || sizes.iter().any(|&s| s < 2) {
                return Err(AppError::Usage("spread must be nonnegative and sizes at least 2".into()));
            }
            ScanOutput::Minors(split_equivalence_scan(cfg.n_max, spread, sizes))
        }
        ScanKind::Strata => {
            let (p, l) = need()?;
            let sc = ScanConfig { n_max: cfg.n_max, generic_trials: cfg.trials.max(1), seed: cfg.seed };
            ScanOutput::Strata(scan_S(p, l, &sc))
        }
        ScanKind::Codim => {
            let (p, l) = need()?;
            let cc = CodimConfig { trials: cfg.trials.max(1), n_max: cfg.n_max, seed: cfg.seed };
            ScanOutput::Codim(estimate_codim(p, l, &cc))
        }
    })
}
