//! Laurent polynomials on a fixed support, their roots on `P^1`, and the
//! local classification of a coefficient pair on the resultant.
//!
//! Two scalar instantiations share the code: rationals (exact decisions) and
//! complex floats (tolerance-based decisions with default [`DEFAULT_TOL`]).

use crate::exact::{exact_rank, rationalize, Rational, UniPoly};
use crate::numeric::{poly_roots, svd_rank, to_dmatrix, SVD_REL_TOL};
use crate::scalar::{falling_factorial, Scalar};
use crate::support::SupportSet;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Default relative tolerance for floating-point zero and root matching.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("{coeffs} coefficients given for a support of size {support}")]
    LengthMismatch { support: usize, coeffs: usize },
    #[error("exponent {0} is not in the support")]
    NotInSupport(i64),
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("point is not a simple common root")]
    NotSimpleRoot,
    #[error("branch covectors at two simple common roots are proportional; the supports violate the sublattice hypothesis")]
    ProportionalBranches,
    #[error("malformed coefficient {0:?}")]
    BadCoefficient(String),
}

/// Value of a finite nonzero root.
#[derive(Debug, Clone, PartialEq)]
pub enum RootValue {
    Rational(Rational),
    /// One root of a squarefree rational factor without rational roots.
    Algebraic { factor: UniPoly, approx: Complex64 },
    Complex(Complex64),
}

impl RootValue {
    pub fn approx(&self) -> Complex64 {
        match self {
            RootValue::Rational(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            RootValue::Algebraic { approx, .. } | RootValue::Complex(approx) => *approx,
        }
    }
}

/// Point of `P^1`: `(0:1)`, `(1:0)` or a finite nonzero `x`.
#[derive(Debug, Clone, PartialEq)]
pub enum ProjPoint {
    Zero,
    Infinity,
    Finite(RootValue),
}

impl ProjPoint {
    pub fn rational(r: Rational) -> Self {
        ProjPoint::Finite(RootValue::Rational(r))
    }

    pub fn complex(z: Complex64) -> Self {
        ProjPoint::Finite(RootValue::Complex(z))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ProjPoint::Finite(_))
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        match self {
            ProjPoint::Zero => m.serialize_entry("kind", "zero")?,
            ProjPoint::Infinity => m.serialize_entry("kind", "infinity")?,
            ProjPoint::Finite(RootValue::Rational(r)) => {
                m.serialize_entry("kind", "rational")?;
                m.serialize_entry("value", &crate::exact::format_rational(r))?;
            }
            ProjPoint::Finite(RootValue::Algebraic { factor, approx }) => {
                m.serialize_entry("kind", "algebraic")?;
                m.serialize_entry("factor", &factor.to_string())?;
                m.serialize_entry("approx", &[approx.re, approx.im])?;
            }
            ProjPoint::Finite(RootValue::Complex(z)) => {
                m.serialize_entry("kind", "complex")?;
                m.serialize_entry("approx", &[z.re, z.im])?;
            }
        }
        m.end()
    }
}

/// A common root with its order in `f` and in `g`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootRecord {
    pub point: ProjPoint,
    pub ord1: usize,
    pub ord2: usize,
}

impl RootRecord {
    /// `min(ord1, ord2)`.
    pub fn pair_multiplicity(&self) -> usize {
        self.ord1.min(self.ord2)
    }
}

/// Binary form `Σ c_i x^{i - min B} y^{max B - i}`, coefficients listed by
/// descending power of `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm<F> {
    pub coeffs_desc: Vec<F>,
}

/// Laurent polynomial with a fixed support; coefficients are aligned with
/// the sorted support and may be zero.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<F: Scalar> {
    support: SupportSet,
    coeffs: Vec<F>,
}

impl<F: Scalar> LaurentPoly<F> {
    pub fn new(support: SupportSet, coeffs: Vec<F>) -> Result<Self, LaurentError> {
        if coeffs.len() != support.len() {
            return Err(LaurentError::LengthMismatch { support: support.len(), coeffs: coeffs.len() });
        }
        Ok(LaurentPoly { support, coeffs })
    }

    pub fn from_map(support: SupportSet, map: &BTreeMap<i64, F>) -> Result<Self, LaurentError> {
        if let Some(e) = map.keys().find(|e| !support.contains(**e)) {
            return Err(LaurentError::NotInSupport(*e));
        }
        let coeffs = support.elements().iter().map(|e| map.get(e).cloned().unwrap_or_else(F::zero)).collect();
        Ok(LaurentPoly { support, coeffs })
    }

    pub fn support(&self) -> &SupportSet {
        &self.support
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `x^e`; zero outside the support.
    pub fn coeff(&self, e: i64) -> F {
        self.support.position(e).map(|i| self.coeffs[i].clone()).unwrap_or_else(F::zero)
    }

    pub fn homogenize(&self) -> BinaryForm<F> {
        let (lo, hi) = (self.support.min(), self.support.max());
        BinaryForm { coeffs_desc: (lo..=hi).rev().map(|e| self.coeff(e)).collect() }
    }

    /// `f^{(d)}(x) = Σ c_b b(b-1)...(b-d+1) x^{b-d}`.
    pub fn derivative_at(&self, x: &F, d: usize) -> F {
        self.support.elements().iter().zip(&self.coeffs).fold(F::zero(), |acc, (&b, c)| {
            let ff = falling_factorial(b, d);
            if ff == 0 || c.is_zero() {
                acc
            } else {
                acc + c.clone() * F::from_i64(ff) * x.powi(b - d as i64)
            }
        })
    }

    pub fn eval(&self, x: &F) -> F {
        self.derivative_at(x, 0)
    }

    pub fn to_complex(&self) -> LaurentPoly<Complex64> {
        LaurentPoly { support: self.support.clone(), coeffs: self.coeffs.iter().map(F::to_c64).collect() }
    }

    fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(F::magnitude).fold(0.0, f64::max)
    }

    fn negligible(&self, c: &F, tol: f64) -> bool {
        if F::EXACT {
            c.is_zero()
        } else {
            c.magnitude() <= tol * self.max_abs()
        }
    }

    pub fn is_zero_poly(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| self.negligible(c, tol))
    }

    /// Multiplicity of `x` in the homogenized form at `(0:1)`: vanishing
    /// coefficients counted upward from `min B` along the hull.
    pub fn ord_zero(&self, tol: f64) -> usize {
        let lo = self.support.min();
        (0..=self.support.spread()).take_while(|&e| self.negligible(&self.coeff(lo + e), tol)).count()
    }

    /// Multiplicity at `(1:0)`: vanishing coefficients counted downward from
    /// `max B`.
    pub fn ord_infinity(&self, tol: f64) -> usize {
        let hi = self.support.max();
        (0..=self.support.spread()).take_while(|&e| self.negligible(&self.coeff(hi - e), tol)).count()
    }
}

impl LaurentPoly<Rational> {
    /// `Σ c_b x^{b - min B}` as an ordinary polynomial.
    pub fn shifted_unipoly(&self) -> UniPoly {
        let lo = self.support.min();
        UniPoly::new((lo..=self.support.max()).map(|e| self.coeff(e)).collect())
    }
}

/// Scalars with a root-finding strategy.
pub trait RootArith: Scalar {
    /// Finite nonzero common roots with their orders in `f` and `g`.
    fn finite_common_roots(f: &LaurentPoly<Self>, g: &LaurentPoly<Self>, tol: f64) -> Vec<RootRecord>;

    /// Order of vanishing of `f` at a finite nonzero root.
    fn ord_finite(f: &LaurentPoly<Self>, x: &RootValue, tol: f64) -> usize;

    /// Branch covector in exact arithmetic, when the point allows it.
    fn exact_covector(_f: &LaurentPoly<Self>, _g: &LaurentPoly<Self>, _p: &ProjPoint) -> Option<Vec<Rational>> {
        None
    }
}

/// Roots of a squarefree rational polynomial: rational ones are recovered
/// from numeric approximations and verified exactly, the rest stay attached
/// to their cofactor.
fn materialize_roots(p: &UniPoly) -> Vec<RootValue> {
    let mut out = Vec::new();
    let mut rest = p.clone();
    for z in poly_roots(&p.to_c64()) {
        if z.im.abs() > 1e-8 * z.norm().max(1.0) {
            continue;
        }
        for max_den in [1_000i64, 1_000_000_000] {
            if let Some(r) = rationalize(z.re, 1e-9, max_den) {
                if rest.eval(&r).is_zero() && rest.degree().unwrap_or(0) > 0 {
                    rest = rest.exact_div(&UniPoly::linear_root(&r));
                    out.push(RootValue::Rational(r));
                    break;
                }
            }
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let rest = rest.monic();
        for z in poly_roots(&rest.to_c64()) {
            out.push(RootValue::Algebraic { factor: rest.clone(), approx: z });
        }
    }
    out
}

/// Squarefree polynomial whose roots are the roots of `r` at which `f`
/// vanishes to order at least `m`, for `m = 1, 2, ...`.
fn order_layers(r: &UniPoly, f: &UniPoly) -> Vec<UniPoly> {
    let mut layers = Vec::new();
    let mut cur = r.gcd(f);
    let mut deriv = f.derivative();
    while cur.degree().unwrap_or(0) > 0 {
        layers.push(cur.clone());
        cur = cur.gcd(&deriv);
        deriv = deriv.derivative();
    }
    layers
}

impl RootArith for Rational {
    fn finite_common_roots(f: &LaurentPoly<Self>, g: &LaurentPoly<Self>, _tol: f64) -> Vec<RootRecord> {
        let (_, fu) = f.shifted_unipoly().strip_x_power();
        let (_, gu) = g.shifted_unipoly().strip_x_power();
        let h = fu.gcd(&gu);
        if h.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let r = h.squarefree_part();
        let lf = order_layers(&r, &fu);
        let lg = order_layers(&r, &gu);
        let exact_layer = |ls: &[UniPoly], m: usize| match ls.get(m) {
            Some(next) => ls[m - 1].exact_div(next).monic(),
            None => ls[m - 1].clone(),
        };
        let mut out = Vec::new();
        for m in 1..=lf.len() {
            let am = exact_layer(&lf, m);
            if am.degree().unwrap_or(0) == 0 {
                continue;
            }
            for l in 1..=lg.len() {
                let p = am.gcd(&exact_layer(&lg, l));
                if p.degree().unwrap_or(0) == 0 {
                    continue;
                }
                for v in materialize_roots(&p) {
                    out.push(RootRecord { point: ProjPoint::Finite(v), ord1: m, ord2: l });
                }
            }
        }
        out
    }

    fn ord_finite(f: &LaurentPoly<Self>, x: &RootValue, tol: f64) -> usize {
        let (_, fu) = f.shifted_unipoly().strip_x_power();
        match x {
            RootValue::Rational(r) => fu.root_multiplicity(r),
            RootValue::Algebraic { factor, .. } => {
                let mut p = fu;
                let mut m = 0;
                loop {
                    let (q, rem) = p.divrem(factor);
                    if !rem.is_zero() || p.is_zero() {
                        return m;
                    }
                    m += 1;
                    p = q;
                }
            }
            RootValue::Complex(_) => Complex64::ord_finite(&f.to_complex(), x, tol),
        }
    }

    fn exact_covector(f: &LaurentPoly<Self>, g: &LaurentPoly<Self>, p: &ProjPoint) -> Option<Vec<Rational>> {
        match p {
            ProjPoint::Finite(RootValue::Rational(x)) => branch_covector(f, g, x).ok(),
            ProjPoint::Zero | ProjPoint::Infinity => Some(boundary_covector(f, g, p)),
            _ => None,
        }
    }
}

/// Derivative test: largest `m` with `|f^{(d)}(x)|` negligible for `d < m`,
/// relative to `Σ |c_b| |ff(b,d)| |x|^{b-d}`.
fn numeric_ord(f: &LaurentPoly<Complex64>, x: Complex64, tol: f64) -> usize {
    let spread = f.support().spread() as usize;
    let mut m = 0;
    while m <= spread {
        let val = f.derivative_at(&x, m);
        let scale: f64 = f
            .support()
            .elements()
            .iter()
            .zip(f.coeffs())
            .map(|(&b, c)| c.norm() * (falling_factorial(b, m) as f64).abs() * x.norm().powi((b - m as i64) as i32))
            .sum();
        if scale == 0.0 || val.norm() > tol * scale {
            break;
        }
        m += 1;
    }
    m
}

/// Clusters approximate roots; each cluster's size is its multiplicity and
/// its mean is an accurate center even for multiple roots.
fn cluster_roots(roots: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    let mut members: Vec<Vec<Complex64>> = Vec::new();
    for &z in roots {
        let near = clusters.iter().position(|(c, _)| (c - z).norm() <= radius * c.norm().max(1.0));
        match near {
            Some(i) => {
                members[i].push(z);
                let n = members[i].len();
                clusters[i] = (members[i].iter().sum::<Complex64>() / n as f64, n);
            }
            None => {
                clusters.push((z, 1));
                members.push(vec![z]);
            }
        }
    }
    clusters
}

fn finite_part_roots(f: &LaurentPoly<Complex64>, tol: f64) -> Vec<Complex64> {
    let lo = f.support().min() + f.ord_zero(tol) as i64;
    let hi = f.support().max() - f.ord_infinity(tol) as i64;
    if hi <= lo {
        return Vec::new();
    }
    poly_roots(&(lo..=hi).map(|e| f.coeff(e)).collect::<Vec<_>>())
}

impl RootArith for Complex64 {
    fn finite_common_roots(f: &LaurentPoly<Self>, g: &LaurentPoly<Self>, tol: f64) -> Vec<RootRecord> {
        let radius = tol.sqrt();
        let cf = cluster_roots(&finite_part_roots(f, tol), radius);
        let cg = cluster_roots(&finite_part_roots(g, tol), radius);
        let mut out = Vec::new();
        for &(zf, mf) in &cf {
            if let Some(&(zg, mg)) =
                cg.iter().find(|(zg, _)| (zf - zg).norm() <= tol.sqrt() * 1e-2 * zf.norm().max(1.0))
            {
                out.push(RootRecord { point: ProjPoint::complex((zf + zg) / 2.0), ord1: mf, ord2: mg });
            }
        }
        out
    }

    fn ord_finite(f: &LaurentPoly<Self>, x: &RootValue, tol: f64) -> usize {
        numeric_ord(f, x.approx(), tol)
    }
}

/// Common roots of `f` and `g` on `P^1`, each with its pair of orders.
pub fn common_roots<F: RootArith>(f: &LaurentPoly<F>, g: &LaurentPoly<F>) -> Result<Vec<RootRecord>, LaurentError> {
    common_roots_tol(f, g, DEFAULT_TOL)
}

pub fn common_roots_tol<F: RootArith>(
    f: &LaurentPoly<F>,
    g: &LaurentPoly<F>,
    tol: f64,
) -> Result<Vec<RootRecord>, LaurentError> {
    if f.is_zero_poly(tol) || g.is_zero_poly(tol) {
        return Err(LaurentError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let (z1, z2) = (f.ord_zero(tol), g.ord_zero(tol));
    if z1 > 0 && z2 > 0 {
        out.push(RootRecord { point: ProjPoint::Zero, ord1: z1, ord2: z2 });
    }
    let (i1, i2) = (f.ord_infinity(tol), g.ord_infinity(tol));
    if i1 > 0 && i2 > 0 {
        out.push(RootRecord { point: ProjPoint::Infinity, ord1: i1, ord2: i2 });
    }
    out.extend(F::finite_common_roots(f, g, tol));
    Ok(out)
}

/// Order of `f` at a point of `P^1`.
pub fn ord_at<F: RootArith>(f: &LaurentPoly<F>, p: &ProjPoint, tol: f64) -> usize {
    match p {
        ProjPoint::Zero => f.ord_zero(tol),
        ProjPoint::Infinity => f.ord_infinity(tol),
        ProjPoint::Finite(x) => F::ord_finite(f, x, tol),
    }
}

/// Normal covector to the local branch of the resultant at a simple common
/// root `x ≠ 0, ∞`: entry `g'(x) x^i` on `df_i` and `-f'(x) x^j` on `dg_j`.
pub fn branch_covector<F: Scalar>(f: &LaurentPoly<F>, g: &LaurentPoly<F>, x: &F) -> Result<Vec<F>, LaurentError> {
    let simple = |p: &LaurentPoly<F>| {
        let v = p.eval(x);
        let d = p.derivative_at(x, 1);
        if F::EXACT {
            (v.is_zero(), !d.is_zero())
        } else {
            let s = p.max_abs() * p.support().elements().iter().map(|&b| x.magnitude().powi(b as i32)).sum::<f64>();
            (v.magnitude() <= DEFAULT_TOL * s, d.magnitude() > DEFAULT_TOL * s)
        }
    };
    let ((fz, fs), (gz, gs)) = (simple(f), simple(g));
    if !fz || !gz || !(fs || gs) {
        return Err(LaurentError::NotSimpleRoot);
    }
    let (fp, gp) = (f.derivative_at(x, 1), g.derivative_at(x, 1));
    let mut v: Vec<F> = f.support().elements().iter().map(|&i| gp.clone() * x.powi(i)).collect();
    v.extend(g.support().elements().iter().map(|&j| -(fp.clone() * x.powi(j))));
    Ok(v)
}

/// Two-term covector at `x = 0` or `x = ∞`, read off the local chart:
/// `g̃'·df_{end} - f̃'·dg_{end}` where `f̃'` is the coefficient next to the
/// end of the hull.
pub fn boundary_covector<F: Scalar>(f: &LaurentPoly<F>, g: &LaurentPoly<F>, p: &ProjPoint) -> Vec<F> {
    let n1 = f.support().len();
    let mut v = vec![F::zero(); n1 + g.support().len()];
    let (ef, eg, fp, gp, i1, i2) = match p {
        ProjPoint::Zero => {
            (f.support().min(), g.support().min(), f.coeff(f.support().min() + 1), g.coeff(g.support().min() + 1), 0, 0)
        }
        _ => (
            f.support().max(),
            g.support().max(),
            f.coeff(f.support().max() - 1),
            g.coeff(g.support().max() - 1),
            n1 - 1,
            g.support().len() - 1,
        ),
    };
    debug_assert!(f.support().contains(ef) && g.support().contains(eg));
    v[i1] = gp;
    v[n1 + i2] = -fp;
    v
}

fn complex_covector(f: &LaurentPoly<Complex64>, g: &LaurentPoly<Complex64>, p: &ProjPoint) -> Option<Vec<Complex64>> {
    match p {
        ProjPoint::Finite(x) => branch_covector(f, g, &x.approx()).ok(),
        _ => Some(boundary_covector(f, g, p)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegenerateReason {
    /// Three or more common roots.
    ThreeRoots,
    /// Two common roots, both of order at least 2 in the same polynomial.
    TwoDoubleForSameFactor,
    /// A common root of pair multiplicity at least 2.
    MultipleRoot,
}

/// Local type of the resultant hypersurface at a coefficient pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", content = "reason")]
pub enum PointClass {
    NotOnResultant,
    SmoothPoint,
    NodeA1,
    /// Outside the node/smooth cases; needs further analysis.
    Degenerate(DegenerateReason),
}

/// Classifies `(f, g)` from its common roots. Assumes the supports satisfy
/// the sublattice hypothesis; proportional branch covectors at two simple
/// roots are reported as an error.
pub fn classify_point<F: RootArith>(f: &LaurentPoly<F>, g: &LaurentPoly<F>) -> Result<PointClass, LaurentError> {
    let roots = common_roots(f, g)?;
    classify_roots(f, g, &roots)
}

pub fn classify_roots<F: RootArith>(
    f: &LaurentPoly<F>,
    g: &LaurentPoly<F>,
    roots: &[RootRecord],
) -> Result<PointClass, LaurentError> {
    if roots.is_empty() {
        return Ok(PointClass::NotOnResultant);
    }
    if roots.iter().any(|r| r.pair_multiplicity() >= 2) {
        return Ok(PointClass::Degenerate(DegenerateReason::MultipleRoot));
    }
    match roots.len() {
        1 => Ok(PointClass::SmoothPoint),
        2 => {
            let (a, b) = (&roots[0], &roots[1]);
            if (a.ord1 >= 2 && b.ord1 >= 2) || (a.ord2 >= 2 && b.ord2 >= 2) {
                return Ok(PointClass::Degenerate(DegenerateReason::TwoDoubleForSameFactor));
            }
            if covector_rank(f, g, &a.point, &b.point)? == 2 {
                Ok(PointClass::NodeA1)
            } else {
                Err(LaurentError::ProportionalBranches)
            }
        }
        _ => Ok(PointClass::Degenerate(DegenerateReason::ThreeRoots)),
    }
}

/// Rank of the span of the branch covectors at two simple common roots;
/// exact when both points are rational or boundary points.
pub fn covector_rank<F: RootArith>(
    f: &LaurentPoly<F>,
    g: &LaurentPoly<F>,
    a: &ProjPoint,
    b: &ProjPoint,
) -> Result<usize, LaurentError> {
    if let (Some(u), Some(v)) = (F::exact_covector(f, g, a), F::exact_covector(f, g, b)) {
        return Ok(exact_rank(&[u, v]));
    }
    let (fc, gc) = (f.to_complex(), g.to_complex());
    let u = complex_covector(&fc, &gc, a).ok_or(LaurentError::NotSimpleRoot)?;
    let v = complex_covector(&fc, &gc, b).ok_or(LaurentError::NotSimpleRoot)?;
    let n = u.len();
    Ok(svd_rank(&to_dmatrix(&[u, v], n), SVD_REL_TOL))
}

/// JSON form `{"support":[...],"coeffs":{"<exp>":"<rational>"}}`.
#[derive(Serialize, Deserialize)]
pub struct LaurentJson {
    pub support: SupportSet,
    pub coeffs: BTreeMap<String, serde_json::Value>,
}

impl LaurentPoly<Rational> {
    pub fn to_json(&self) -> LaurentJson {
        LaurentJson {
            support: self.support.clone(),
            coeffs: self
                .support
                .elements()
                .iter()
                .zip(&self.coeffs)
                .map(|(e, c)| (e.to_string(), serde_json::Value::String(crate::exact::format_rational(c))))
                .collect(),
        }
    }
}

fn parse_exponent_map<F>(
    j: &LaurentJson,
    parse: impl Fn(&serde_json::Value) -> Option<F>,
) -> Result<BTreeMap<i64, F>, LaurentError> {
    j.coeffs
        .iter()
        .map(|(k, v)| {
            let e: i64 = k.trim().parse().map_err(|_| LaurentError::BadCoefficient(k.clone()))?;
            let c = parse(v).ok_or_else(|| LaurentError::BadCoefficient(v.to_string()))?;
            Ok((e, c))
        })
        .collect()
}

fn json_rational(v: &serde_json::Value) -> Option<Rational> {
    match v {
        serde_json::Value::String(s) => crate::exact::parse_rational(s).ok(),
        serde_json::Value::Number(n) if n.is_i64() => Some(Rational::from_integer(n.as_i64()?.into())),
        _ => None,
    }
}

fn json_complex(v: &serde_json::Value) -> Option<Complex64> {
    match v {
        serde_json::Value::Array(a) if a.len() == 2 => Some(Complex64::new(a[0].as_f64()?, a[1].as_f64()?)),
        serde_json::Value::Number(n) => Some(Complex64::new(n.as_f64()?, 0.0)),
        other => json_rational(other).and_then(|r| r.to_f64()).map(|x| Complex64::new(x, 0.0)),
    }
}

/// A parsed JSON polynomial: exact when every coefficient is rational.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyLaurent {
    Exact(LaurentPoly<Rational>),
    Float(LaurentPoly<Complex64>),
}

impl AnyLaurent {
    pub fn from_json(j: &LaurentJson) -> Result<Self, LaurentError> {
        if let Ok(m) = parse_exponent_map(j, json_rational) {
            return Ok(AnyLaurent::Exact(LaurentPoly::from_map(j.support.clone(), &m)?));
        }
        let m = parse_exponent_map(j, json_complex)?;
        Ok(AnyLaurent::Float(LaurentPoly::from_map(j.support.clone(), &m)?))
    }

    pub fn to_complex(&self) -> LaurentPoly<Complex64> {
        match self {
            AnyLaurent::Exact(p) => p.to_complex(),
            AnyLaurent::Float(p) => p.clone(),
        }
    }
}

impl<F: Scalar> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.support.elements().iter().zip(&self.coeffs).map(|(e, c)| format!("({c:?})x^{e}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn lp(b: &[i64], c: &[i64]) -> LaurentPoly<Rational> {
        LaurentPoly::new(SupportSet::new(b.iter().copied()).unwrap(), c.iter().map(|&v| q(v)).collect()).unwrap()
    }

    #[test]
    fn homogenized_coefficients_descend() {
        let f = lp(&[0, 1, 2], &[0, 1, 1]);
        assert_eq!(f.homogenize().coeffs_desc, vec![q(1), q(1), q(0)]);
        let g = lp(&[0, 2], &[5, 7]);
        assert_eq!(g.homogenize().coeffs_desc, vec![q(7), q(0), q(5)]);
    }

    #[test]
    fn boundary_orders() {
        assert_eq!(lp(&[0, 1, 2], &[0, 1, 1]).ord_zero(0.0), 1);
        assert_eq!(lp(&[0, 1, 2], &[1, 1, 0]).ord_infinity(0.0), 1);
        // Missing exponents count as zero along the hull.
        assert_eq!(lp(&[0, 3], &[0, 1]).ord_zero(0.0), 3);
    }

    #[test]
    fn common_roots_with_orders() {
        // f = (x-1)^2, g = x^2 - x
        let f = lp(&[0, 1, 2], &[1, -2, 1]);
        let g = lp(&[0, 1, 2], &[0, -1, 1]);
        let r = common_roots(&f, &g).unwrap();
        assert_eq!(r, vec![RootRecord { point: ProjPoint::rational(q(1)), ord1: 2, ord2: 1 }]);
    }

    #[test]
    fn irrational_roots_are_counted_individually() {
        // f = x^2 - 2, g = (x^2 - 2)(x + 1)
        let f = lp(&[0, 2], &[-2, 1]);
        let g = lp(&[0, 1, 2, 3], &[-2, -2, 1, 1]);
        let r = common_roots(&f, &g).unwrap();
        assert_eq!(r.len(), 2);
        for rec in &r {
            assert!(matches!(rec.point, ProjPoint::Finite(RootValue::Algebraic { .. })));
            assert_eq!((rec.ord1, rec.ord2), (1, 1));
            assert!((rec.point_approx().norm() - 2f64.sqrt()).abs() < 1e-12);
        }
    }

    impl RootRecord {
        fn point_approx(&self) -> Complex64 {
            match &self.point {
                ProjPoint::Finite(v) => v.approx(),
                _ => Complex64::new(f64::NAN, 0.0),
            }
        }
    }

    #[test]
    fn covector_at_simple_root() {
        let f = lp(&[0, 1], &[-1, 1]);
        let g = lp(&[0, 1], &[-1, 1]);
        let v = branch_covector(&f, &g, &q(1)).unwrap();
        assert_eq!(v, vec![q(1), q(1), q(-1), q(-1)]);
        assert_eq!(branch_covector(&f, &g, &q(2)), Err(LaurentError::NotSimpleRoot));
    }

    #[test]
    fn point_classes() {
        let f = lp(&[0, 1], &[-1, 1]);
        assert_eq!(classify_point(&f, &f).unwrap(), PointClass::SmoothPoint);
        let g = lp(&[0, 1], &[-2, 1]);
        assert_eq!(classify_point(&f, &g).unwrap(), PointClass::NotOnResultant);
        // f = x^2 - 3x + 2, g = x^2 - 3x + 2 + (x - 1)(x - 2) x ... two simple shared roots
        let f = lp(&[0, 1, 2, 3], &[2, -3, 1, 0]);
        let g = lp(&[0, 1, 2, 3], &[2, -3, 1, 5]);
        let _ = g;
        let g = lp(&[0, 1, 2, 3], &[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        assert_eq!(classify_point(&f, &g).unwrap(), PointClass::NodeA1);
        let f2 = lp(&[0, 1, 2], &[1, -2, 1]);
        let g2 = lp(&[0, 1, 2], &[1, -2, 1]);
        assert_eq!(classify_point(&f2, &g2).unwrap(), PointClass::Degenerate(DegenerateReason::MultipleRoot));
    }

    #[test]
    fn boundary_root_covector() {
        // Both vanish at 0 to order 1 and share the root 1.
        let f = lp(&[0, 1, 2], &[0, -1, 1]);
        let g = lp(&[0, 1, 2], &[0, -2, 2]);
        let roots = common_roots(&f, &g).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].point, ProjPoint::Zero);
        assert_eq!(boundary_covector(&f, &g, &ProjPoint::Zero), vec![q(-2), q(0), q(0), q(1), q(0), q(0)]);
    }

    #[test]
    fn numeric_path_matches_exact() {
        let f = lp(&[0, 1, 2], &[1, -2, 1]);
        let g = lp(&[0, 1, 2], &[0, -1, 1]);
        let r = common_roots(&f.to_complex(), &g.to_complex()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!((r[0].ord1, r[0].ord2), (2, 1));
    }

    #[test]
    fn json_parsing_picks_exact_when_possible() {
        let j: LaurentJson = serde_json::from_str(r#"{"support":[0,2],"coeffs":{"0":"-1/2","2":"3"}}"#).unwrap();
        let AnyLaurent::Exact(p) = AnyLaurent::from_json(&j).unwrap() else { panic!() };
        assert_eq!(p.coeff(0), Rational::new((-1).into(), 2.into()));
        let j: LaurentJson = serde_json::from_str(r#"{"support":[0,2],"coeffs":{"0":[1.0,0.5]}}"#).unwrap();
        assert!(matches!(AnyLaurent::from_json(&j).unwrap(), AnyLaurent::Float(_)));
        let j: LaurentJson = serde_json::from_str(r#"{"support":[0,2],"coeffs":{"1":"1"}}"#).unwrap();
        assert_eq!(AnyLaurent::from_json(&j), Err(LaurentError::NotInSupport(1)));
    }
}
