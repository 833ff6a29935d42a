//! Random points of filtration subsets, drawn from kernels of the
//! multiplicity-Vandermonde matrices at chosen root tuples.

use super::filtration::{in_filtration_subset_tol, label_of_roots};
use super::vandermonde::{mult_vandermonde, RankField};
use super::StratumLabel;
use crate::exact::Rational;
use crate::laurent::{common_roots_tol, LaurentPoly, DEFAULT_TOL};
use crate::numeric::{complex_det, poly_matrix_det, poly_roots};
use crate::scalar::{falling_factorial, Scalar};
use crate::support::{SupportPair, SupportSet};
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Where the common roots of a sample are placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Locus {
    /// Independent random nonzero rationals.
    GenericPoints,
    /// `c·(1, ζ^{e_2}, ..., ζ^{e_k})` for distinct `n`-th roots of unity.
    RootsOfUnity { n: u32 },
    /// Zeros of the leading maximal minor of side `side`'s matrix, all but
    /// one coordinate random.
    MinorCurve { side: usize },
}

/// A pair in `N(l)` together with the root tuple it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample<F: Scalar> {
    pub f: LaurentPoly<F>,
    pub g: LaurentPoly<F>,
    pub xs: Vec<F>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SampledPair {
    Exact(Sample<Rational>),
    Float(Sample<Complex64>),
}

/// Deterministic generator for stream `stream` of `seed`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let num = rng.gen_range(1..=12i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
    Rational::new(num.into(), rng.gen_range(1..=6i64).into())
}

/// Uniform on the annulus `0.5 ≤ |z| ≤ 2`.
pub fn random_unit_annulus(rng: &mut impl Rng) -> Complex64 {
    Complex64::from_polar(rng.gen_range(0.5..=2.0), rng.gen_range(0.0..TAU))
}

/// Random coefficient of the kind used for kernel combinations.
pub trait SampleField: RankField {
    fn random(rng: &mut ChaCha8Rng) -> Self;
}

impl SampleField for Rational {
    fn random(rng: &mut ChaCha8Rng) -> Self {
        // Wide range so coincidences (a vanishing end coefficient, f ∝ g,
        // an extra common root) stay rare.
        Rational::from_integer(rng.gen_range(-999i64..=999).into())
    }
}

impl SampleField for Complex64 {
    fn random(rng: &mut ChaCha8Rng) -> Self {
        random_unit_annulus(rng)
    }
}

/// Exponents in `[min B + j0, max B - jinf]`: the support left after the
/// boundary orders are imposed by zero coefficients.
pub fn reduced_support(b: &SupportSet, j0: u32, jinf: u32) -> Option<SupportSet> {
    let (lo, hi) = (b.min() + j0 as i64, b.max() - jinf as i64);
    SupportSet::new(b.elements().iter().copied().filter(|&e| e >= lo && e <= hi)).ok()
}

/// Kernel of side `i`'s matrix at `xs` over the reduced support.
pub fn side_kernel<F: RankField>(p: &SupportPair, l: &StratumLabel, i: usize, xs: &[F]) -> Option<(SupportSet, Vec<Vec<F>>)> {
    let red = reduced_support(p.side(i), l.j0(), l.jinf())?;
    let m = mult_vandermonde(&red, xs, &l.side_js(i)).ok()?;
    let ker = if m.is_empty() { identity(red.len()) } else { F::kernel(&m, red.len()) };
    Some((red, ker))
}

pub(crate) fn identity<F: Scalar>(n: usize) -> Vec<Vec<F>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect()
}

pub(crate) fn random_combination<F: SampleField>(basis: &[Vec<F>], rng: &mut ChaCha8Rng) -> Vec<F> {
    let mut v = vec![F::zero(); basis[0].len()];
    for b in basis {
        let c = F::random(rng);
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi = vi.clone() + c.clone() * bi.clone();
        }
    }
    v
}

/// Embeds reduced-support coefficients into the full support.
pub(crate) fn embed<F: Scalar>(full: &SupportSet, red: &SupportSet, coeffs: &[F]) -> LaurentPoly<F> {
    let cs = full.elements().iter().map(|&e| red.position(e).map(|k| coeffs[k].clone()).unwrap_or_else(F::zero)).collect();
    LaurentPoly::new(full.clone(), cs).expect("aligned coefficients")
}

fn kernel_pair<F: SampleField>(p: &SupportPair, l: &StratumLabel, xs: &[F], rng: &mut ChaCha8Rng) -> Option<(LaurentPoly<F>, LaurentPoly<F>)> {
    let mut out = Vec::new();
    for i in [1, 2] {
        let (red, ker) = side_kernel(p, l, i, xs)?;
        if ker.is_empty() {
            return None;
        }
        out.push(embed(p.side(i), &red, &random_combination(&ker, rng)));
    }
    let g = out.pop()?;
    Some((out.pop()?, g))
}

pub fn random_generic_rationals(k: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let mut xs: Vec<Rational> = Vec::new();
    while xs.len() < k {
        let x = random_rational(rng);
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    xs
}

/// `c·ζ^{e}` for a random scale on the annulus.
pub fn unity_tuple(n: u32, exps: &[i64], c: Complex64) -> Vec<Complex64> {
    exps.iter().map(|&e| c * Complex64::from_polar(1.0, TAU * e as f64 / n as f64)).collect()
}

/// A tuple `(1, x_2, ..., x_{k-1}, t)` where `t` is a root of the leading
/// maximal minor of side `side`'s matrix; `None` when the matrix is wider
/// than tall or no admissible root exists.
pub fn minor_curve_point(p: &SupportPair, l: &StratumLabel, side: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Complex64>> {
    let k = l.root_count();
    if k < 2 {
        return None;
    }
    let red = reduced_support(p.side(side), l.j0(), l.jinf())?;
    let js = l.side_js(side);
    let rows: usize = js.iter().map(|&j| j as usize).sum();
    if red.len() < rows {
        return None;
    }
    let cols = &red.elements()[..rows];
    let mut fixed = vec![Complex64::new(1.0, 0.0)];
    while fixed.len() < k - 1 {
        fixed.push(random_unit_annulus(rng));
    }
    let lo = cols[0];
    let mut m: Vec<Vec<Vec<Complex64>>> = Vec::new();
    for (idx, &j) in js.iter().enumerate() {
        for d in 0..j as usize {
            let row = cols
                .iter()
                .map(|&b| {
                    let ff = falling_factorial(b, d) as f64;
                    if idx < k - 1 {
                        vec![Complex64::new(ff, 0.0) * fixed[idx].powi((b - d as i64) as i32)]
                    } else {
                        // t^{b-d} scaled by t^{d-lo} so exponents are nonnegative
                        let mut v = vec![Complex64::new(0.0, 0.0); (b - lo) as usize + 1];
                        v[(b - lo) as usize] = Complex64::new(ff, 0.0);
                        v
                    }
                })
                .collect();
            m.push(row);
        }
    }
    let det = poly_matrix_det(&m);
    let mut candidates: Vec<Complex64> = poly_roots(&det)
        .into_iter()
        .filter(|t| t.norm() > 1e-6 && t.norm().is_finite() && fixed.iter().all(|x| (x - t).norm() > 1e-6 * x.norm().max(1.0)))
        .collect();
    candidates.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap_or(std::cmp::Ordering::Equal));
    let t = *candidates.choose(rng)?;
    fixed.push(t);
    Some(fixed)
}

/// Value of the leading maximal minor of side `side` at `xs`.
pub fn leading_minor(red: &SupportSet, js: &[u32], xs: &[Complex64]) -> Complex64 {
    let rows: usize = js.iter().map(|&j| j as usize).sum();
    let cols = SupportSet::new(red.elements()[..rows].iter().copied()).expect("prefix of a support");
    match mult_vandermonde(&cols, xs, js) {
        Ok(m) => complex_det(&m),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

const ATTEMPTS: usize = 4;

/// A pair in `N(l)` with common roots placed on `locus`; `None` when a
/// kernel is trivial or the locus has no admissible tuple. At generic points
/// a pair whose label is exactly `l` is preferred when one turns up.
#[allow(non_snake_case)]
pub fn sample_N(p: &SupportPair, l: &StratumLabel, locus: Locus, seed: u64) -> Option<SampledPair> {
    let mut rng = rng_for(seed, 0);
    let k = l.root_count();
    let mut fallback = None;
    for _attempt in 0..ATTEMPTS {
        match locus {
            Locus::GenericPoints => {
                let xs = random_generic_rationals(k, &mut rng);
                let (f, g) = kernel_pair(p, l, &xs, &mut rng)?;
                if in_filtration_subset_tol(&f, &g, l, DEFAULT_TOL).unwrap_or(false) {
                    let s = Sample { f, g, xs };
                    // Prefer a point of the open stratum; keep the first member as fallback.
                    let exact_stratum = common_roots_tol(&s.f, &s.g, DEFAULT_TOL).is_ok_and(|r| label_of_roots(&r) == *l);
                    if exact_stratum {
                        return Some(SampledPair::Exact(s));
                    }
                    fallback.get_or_insert(SampledPair::Exact(s));
                }
            }
            Locus::RootsOfUnity { n } => {
                if (n as usize) < k {
                    return None;
                }
                let mut rest: Vec<i64> = (1..n as i64).collect();
                rest.shuffle(&mut rng);
                let exps: Vec<i64> = std::iter::once(0).chain(rest.into_iter().take(k.saturating_sub(1))).collect();
                let xs = unity_tuple(n, &exps, random_unit_annulus(&mut rng));
                if let Some(s) = float_sample(p, l, xs, &mut rng) {
                    return Some(s);
                }
            }
            Locus::MinorCurve { side } => {
                let xs = minor_curve_point(p, l, side, &mut rng)?;
                if let Some(s) = float_sample(p, l, xs, &mut rng) {
                    return Some(s);
                }
            }
        }
    }
    fallback
}

fn float_sample(p: &SupportPair, l: &StratumLabel, xs: Vec<Complex64>, rng: &mut ChaCha8Rng) -> Option<SampledPair> {
    let (f, g) = kernel_pair(p, l, &xs, rng)?;
    let tol = 1e-7;
    let ok = in_filtration_subset_tol(&f, &g, l, tol).unwrap_or(false);
    ok.then_some(SampledPair::Float(Sample { f, g, xs }))
}

/// Label of the stratum containing a sampled pair.
pub fn sampled_label(s: &SampledPair) -> Option<StratumLabel> {
    match s {
        SampledPair::Exact(s) => common_roots_tol(&s.f, &s.g, DEFAULT_TOL).ok().map(|r| label_of_roots(&r)),
        SampledPair::Float(s) => common_roots_tol(&s.f, &s.g, 1e-7).ok().map(|r| label_of_roots(&r)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: &[i64], b: &[i64]) -> SupportPair {
        SupportPair::from_slices(a, b).unwrap()
    }

    fn lab(s: &str) -> StratumLabel {
        StratumLabel::parse(s).unwrap()
    }

    #[test]
    fn generic_sample_in_classical_triple_root_subset() {
        let p = pair(&[0, 1, 2, 3], &[0, 1, 2, 3]);
        let Some(SampledPair::Exact(s)) = sample_N(&p, &lab("N(1,1,1)"), Locus::GenericPoints, 7) else { panic!() };
        for x in &s.xs {
            assert!(s.f.eval(x) == Rational::from_integer(0.into()));
            assert!(s.g.eval(x) == Rational::from_integer(0.into()));
        }
    }

    #[test]
    fn roots_of_unity_sample_on_sublattice_pair() {
        let p = pair(&[0, 3, 6], &[0, 3, 6]);
        let Some(SampledPair::Float(s)) = sample_N(&p, &lab("N(1,1)"), Locus::RootsOfUnity { n: 3 }, 3) else { panic!() };
        let ratio = s.xs[1] / s.xs[0];
        assert!((ratio.powi(3) - 1.0).norm() < 1e-9);
    }

    #[test]
    fn overdetermined_label_has_no_sample() {
        let p = pair(&[0, 1, 2], &[0, 1, 2]);
        assert!(sample_N(&p, &lab("N(1,1,1)"), Locus::GenericPoints, 1).is_none());
    }

    #[test]
    fn boundary_orders_via_zero_coefficients() {
        let p = pair(&[0, 1, 2, 3], &[0, 1, 2, 3]);
        let Some(SampledPair::Exact(s)) = sample_N(&p, &lab("N_1^0(1)"), Locus::GenericPoints, 2) else { panic!() };
        assert_eq!(sampled_label(&SampledPair::Exact(s.clone())).unwrap().j0(), 1);
    }

    #[test]
    fn minor_curve_zeroes_the_square_determinant() {
        let p = pair(&[0, 1, 3], &[0, 1, 2, 3]);
        let mut rng = rng_for(5, 1);
        let xs = minor_curve_point(&p, &lab("N(1,1,1)"), 1, &mut rng).unwrap();
        let s: Complex64 = xs.iter().sum();
        assert!(s.norm() < 1e-8, "x + y + z = {s}");
    }
}
