//! Spatial curves `{f1 = f2 = 0} ⊂ (C*)^3` projected along the third
//! coordinate: the image is the zero set of the univariate resultant in
//! `x3`, with supports given by the last coordinates of the 3D supports.

use super::commands::{cmd_classify, ClassifyOutput};
use super::AppError;
use crate::resultant::numeric_resultant;
use crate::strata::{random_unit_annulus, rng_for};
use crate::support::{SupportPair, SupportSet};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Support3DError {
    #[error("3D support must be nonempty")]
    Empty,
    #[error("3D support repeats the point {0:?}")]
    Duplicate([i64; 3]),
    #[error("projection to the last coordinate has {0} element(s); at least 2 are needed")]
    DegenerateProjection(usize),
}

/// Finite set of exponent triples, kept in input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[i64; 3]>", into = "Vec<[i64; 3]>")]
pub struct Support3D(Vec<[i64; 3]>);

impl TryFrom<Vec<[i64; 3]>> for Support3D {
    type Error = Support3DError;
    fn try_from(v: Vec<[i64; 3]>) -> Result<Self, Support3DError> {
        Support3D::new(v)
    }
}

impl From<Support3D> for Vec<[i64; 3]> {
    fn from(s: Support3D) -> Self {
        s.0
    }
}

impl Support3D {
    pub fn new(points: Vec<[i64; 3]>) -> Result<Self, Support3DError> {
        if points.is_empty() {
            return Err(Support3DError::Empty);
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(*p) {
                return Err(Support3DError::Duplicate(*p));
            }
        }
        Ok(Support3D(points))
    }

    pub fn points(&self) -> &[[i64; 3]] {
        &self.0
    }

    /// Set of last coordinates.
    pub fn projection(&self) -> Result<SupportSet, Support3DError> {
        let last: BTreeSet<i64> = self.0.iter().map(|p| p[2]).collect();
        if last.len() < 2 {
            return Err(Support3DError::DegenerateProjection(last.len()));
        }
        Ok(SupportSet::new(last).expect("distinct and nonempty"))
    }
}

/// Sample grid `x_i = exp(rho_i + i·theta_i)`; rho is sampled with both
/// endpoints, theta over `[lo, hi)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridConfig {
    pub rho: (f64, f64),
    pub theta: (f64, f64),
    pub rho_steps: usize,
    pub theta_steps: usize,
    /// Cells with normalized `|R|` below this are reported.
    pub threshold: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig { rho: (-1.0, 1.0), theta: (0.0, 2.0 * PI), rho_steps: 5, theta_steps: 8, threshold: 1e-6 }
    }
}

impl GridConfig {
    fn rhos(&self) -> Vec<f64> {
        let (lo, hi) = self.rho;
        match self.rho_steps {
            0 => vec![],
            1 => vec![lo],
            n => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
        }
    }

    fn thetas(&self) -> Vec<f64> {
        let (lo, hi) = self.theta;
        (0..self.theta_steps).map(|i| lo + (hi - lo) * i as f64 / self.theta_steps as f64).collect()
    }
}

/// One grid cell: coordinates and normalized `|R|`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridCell {
    pub rho1: f64,
    pub theta1: f64,
    pub rho2: f64,
    pub theta2: f64,
    #[serde(rename = "absR")]
    pub abs_r: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveScan {
    pub grid: GridConfig,
    /// `|R| / (|f|^{d2} |g|^{d1})` per cell (Hadamard bound makes it at most 1).
    pub values: Vec<GridCell>,
    pub threshold: f64,
    pub near_zero_cells: Vec<GridCell>,
    pub note: String,
}

impl CurveScan {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("rho1,theta1,rho2,theta2,absR\n");
        for c in &self.values {
            s.push_str(&format!("{},{},{},{},{:e}\n", c.rho1, c.theta1, c.rho2, c.theta2, c.abs_r));
        }
        s
    }
}

/// Complex coefficients as `[re, im]`, aligned with the points of `a1`, `a2`.
#[derive(Debug, Clone, Deserialize)]
pub struct Project3dInput {
    pub a1: Support3D,
    pub a2: Support3D,
    #[serde(default)]
    pub coeffs1: Option<Vec<[f64; 2]>>,
    #[serde(default)]
    pub coeffs2: Option<Vec<[f64; 2]>>,
    #[serde(default)]
    pub grid: Option<GridConfig>,
    /// Skip the grid scan and report only the classification.
    #[serde(default)]
    pub no_scan: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProjectionVerdict {
    /// No condition among 1..=5 holds on the projections.
    pub only_nodes: bool,
    pub statement: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Project3dOutput {
    pub b1: SupportSet,
    pub b2: SupportSet,
    pub classification: ClassifyOutput,
    pub verdict: ProjectionVerdict,
    pub coefficients: Option<(Vec<[f64; 2]>, Vec<[f64; 2]>)>,
    /// Random draws used for the coefficients (0 for user coefficients).
    pub coefficient_attempts: u32,
    pub scan: Option<CurveScan>,
}

const MAX_DRAWS: u32 = 5;

fn to_c(v: &[[f64; 2]]) -> Vec<Complex64> {
    v.iter().map(|c| Complex64::new(c[0], c[1])).collect()
}

/// Coefficients of `x3^b`, `b ∈ B` ascending, at `(x1, x2)`.
fn specialize(a: &Support3D, b: &SupportSet, c: &[Complex64], x1: Complex64, x2: Complex64) -> Vec<Complex64> {
    let mut m: BTreeMap<i64, Complex64> = b.elements().iter().map(|&e| (e, Complex64::new(0.0, 0.0))).collect();
    for (p, ci) in a.points().iter().zip(c) {
        *m.get_mut(&p[2]).expect("projection contains every last coordinate") += ci * x1.powi(p[0] as i32) * x2.powi(p[1] as i32);
    }
    m.into_values().collect()
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Normalized `|R(x1, x2)|`; 0 when either specialization is identically 0.
pub fn normalized_abs_resultant(
    a1: &Support3D,
    a2: &Support3D,
    pair: &SupportPair,
    c1: &[Complex64],
    c2: &[Complex64],
    x1: Complex64,
    x2: Complex64,
) -> f64 {
    let f = specialize(a1, pair.b1(), c1, x1, x2);
    let g = specialize(a2, pair.b2(), c2, x1, x2);
    let (nf, ng) = (norm(&f), norm(&g));
    if nf == 0.0 || ng == 0.0 {
        return 0.0;
    }
    let (d1, d2) = (pair.b1().spread() as i32, pair.b2().spread() as i32);
    numeric_resultant(pair, &f, &g).norm() / (nf.powi(d2) * ng.powi(d1))
}

/// A coefficient draw is degenerate when `R` looks identically zero at two
/// random torus points.
fn degenerate_draw(a1: &Support3D, a2: &Support3D, pair: &SupportPair, c1: &[Complex64], c2: &[Complex64], seed: u64) -> bool {
    let mut rng = rng_for(seed, 0x7072);
    (0..2).all(|_| {
        let (x1, x2) = (random_unit_annulus(&mut rng), random_unit_annulus(&mut rng));
        normalized_abs_resultant(a1, a2, pair, c1, c2, x1, x2) < 1e-12
    })
}

pub fn cmd_project3d(input: &Project3dInput, seed: u64) -> Result<Project3dOutput, AppError> {
    let deg = |e: Support3DError| AppError::Degenerate(e.to_string());
    let (b1, b2) = (input.a1.projection().map_err(deg)?, input.a2.projection().map_err(deg)?);
    let pair = SupportPair::new(b1.clone(), b2.clone()).map_err(|e| AppError::Degenerate(e.to_string()))?;
    let classification = cmd_classify(&pair);
    let firing = classification.firing.clone();
    let verdict = if firing.is_empty() {
        ProjectionVerdict {
            only_nodes: true,
            statement: "no condition among 1-5 holds on the projections: for generic coefficients the projected curve has only nodes (A1) as singularities in the torus".into(),
        }
    } else {
        ProjectionVerdict {
            only_nodes: false,
            statement: format!("conditions {firing:?} hold on the projections: other singularity types are not excluded"),
        }
    };
    if input.no_scan {
        return Ok(Project3dOutput { b1, b2, classification, verdict, coefficients: None, coefficient_attempts: 0, scan: None });
    }

    let (c1, c2, attempts) = match (&input.coeffs1, &input.coeffs2) {
        (Some(c1), Some(c2)) => {
            for (c, a, name) in [(c1, &input.a1, "coeffs1"), (c2, &input.a2, "coeffs2")] {
                if c.len() != a.points().len() {
                    return Err(AppError::Usage(format!("{name} has {} entries for {} points", c.len(), a.points().len())));
                }
            }
            (c1.clone(), c2.clone(), 0)
        }
        (None, None) => {
            let mut found = None;
            for k in 0..MAX_DRAWS {
                let mut rng = rng_for(seed, 0x6333 + k as u64);
                let mut draw = |n: usize| -> Vec<[f64; 2]> {
                    (0..n).map(|_| random_unit_annulus(&mut rng)).map(|z| [z.re, z.im]).collect()
                };
                let (c1, c2) = (draw(input.a1.points().len()), draw(input.a2.points().len()));
                if !degenerate_draw(&input.a1, &input.a2, &pair, &to_c(&c1), &to_c(&c2), seed.wrapping_add(k as u64)) {
                    found = Some((c1, c2, k + 1));
                    break;
                }
            }
            found.ok_or_else(|| AppError::Degenerate(format!("resultant vanished identically for {MAX_DRAWS} coefficient draws")))?
        }
        _ => return Err(AppError::Usage("give both coeffs1 and coeffs2 or neither".into())),
    };

    let grid = input.grid.clone().unwrap_or_default();
    if grid.rho_steps == 0 || grid.theta_steps == 0 || !(grid.threshold >= 0.0) {
        return Err(AppError::Usage("grid needs positive step counts and a nonnegative threshold".into()));
    }
    let (cc1, cc2) = (to_c(&c1), to_c(&c2));
    let (rhos, thetas) = (grid.rhos(), grid.thetas());
    let mut values = Vec::with_capacity((rhos.len() * thetas.len()).pow(2));
    for &rho1 in &rhos {
        for &theta1 in &thetas {
            let x1 = Complex64::from_polar(rho1.exp(), theta1);
            for &rho2 in &rhos {
                for &theta2 in &thetas {
                    let x2 = Complex64::from_polar(rho2.exp(), theta2);
                    let abs_r = normalized_abs_resultant(&input.a1, &input.a2, &pair, &cc1, &cc2, x1, x2);
                    values.push(GridCell { rho1, theta1, rho2, theta2, abs_r });
                }
            }
        }
    }
    let near_zero_cells = values.iter().filter(|c| c.abs_r <= grid.threshold).cloned().collect();
    let scan = CurveScan {
        threshold: grid.threshold,
        grid,
        values,
        near_zero_cells,
        note: "covers only a compact patch of the torus; points of the closure reached as x1 or x2 tends to 0 or infinity are not sampled".into(),
    };
    Ok(Project3dOutput { b1, b2, classification, verdict, coefficients: Some((c1, c2)), coefficient_attempts: attempts, scan: Some(scan) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(last: &[i64]) -> Support3D {
        Support3D::new(last.iter().enumerate().map(|(i, &z)| [i as i64 % 2, 0, z]).collect()).unwrap()
    }

    fn input(a1: Support3D, a2: Support3D) -> Project3dInput {
        Project3dInput { a1, a2, coeffs1: None, coeffs2: None, grid: None, no_scan: false }
    }

    #[test]
    fn verdicts_follow_projection_conditions() {
        let pos = cmd_project3d(&input(line(&[0, 1, 2]), line(&[0, 1, 2, 3])), 1).unwrap();
        assert!(pos.verdict.only_nodes);
        let neg = cmd_project3d(&input(line(&[0, 1]), line(&[0, 1, 2, 3])), 1).unwrap();
        assert!(!neg.verdict.only_nodes && neg.classification.conditions.cond5);
        assert!(neg.verdict.statement.contains("not excluded"));
        let scan = neg.scan.unwrap();
        assert_eq!(scan.values.len(), 5 * 8 * 5 * 8);
        assert!(scan.values.iter().all(|c| (0.0..=1.0 + 1e-9).contains(&c.abs_r)));
        assert!(scan.to_csv().starts_with("rho1,theta1,rho2,theta2,absR\n"));
    }

    #[test]
    fn degenerate_projection_is_rejected() {
        let flat = Support3D::new(vec![[0, 0, 1], [1, 0, 1]]).unwrap();
        let err = cmd_project3d(&input(flat, line(&[0, 1])), 0).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(Support3D::new(vec![[0, 0, 0], [0, 0, 0]]).is_err());
    }

    #[test]
    fn permuting_points_keeps_projection() {
        let a = Support3D::new(vec![[1, 2, 0], [0, 1, 3], [2, 0, 1]]).unwrap();
        let mut v = a.points().to_vec();
        v.reverse();
        assert_eq!(a.projection().unwrap(), Support3D::new(v).unwrap().projection().unwrap());
    }
}
