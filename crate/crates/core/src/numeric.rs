//! Floating-point linear algebra and polynomial root finding.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Default relative singular-value threshold for numerical rank.
pub const SVD_REL_TOL: f64 = 1e-7;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn to_dmatrix(rows: &[Vec<Complex64>], cols: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j])
}

fn singular_values(m: &DMatrix<Complex64>) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    s
}

/// Number of singular values above `rel_tol · σ_max`.
pub fn svd_rank(m: &DMatrix<Complex64>, rel_tol: f64) -> usize {
    let s = singular_values(m);
    let Some(&smax) = s.first() else { return 0 };
    if smax == 0.0 || !smax.is_finite() {
        return 0;
    }
    s.iter().filter(|&&v| v > rel_tol * smax).count()
}

/// Orthonormal basis of a `dim`-dimensional approximate right kernel: the
/// right singular vectors of the `dim` smallest singular values.
pub fn nullspace(m: &DMatrix<Complex64>, dim: usize) -> Vec<Vec<Complex64>> {
    let cols = m.ncols();
    if dim == 0 {
        return Vec::new();
    }
    let mut padded = DMatrix::<Complex64>::zeros(m.nrows().max(cols), cols);
    padded.view_mut((0, 0), (m.nrows(), cols)).copy_from(m);
    let svd = padded.svd(false, true);
    let vt = svd.v_t.expect("v_t requested");
    let mut idx: Vec<usize> = (0..svd.singular_values.len()).collect();
    idx.sort_by(|&a, &b| svd.singular_values[a].partial_cmp(&svd.singular_values[b]).unwrap_or(std::cmp::Ordering::Equal));
    idx.into_iter().take(dim).map(|i| (0..cols).map(|j| vt[(i, j)].conj()).collect()).collect()
}

/// All complex roots of `Σ coeffs[i] x^i` (companion-matrix eigenvalues,
/// polished by Newton steps on the original polynomial).
pub fn poly_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut cs = coeffs.to_vec();
    let scale = cs.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Vec::new();
    }
    while cs.last().is_some_and(|z| z.norm() <= 1e-300 * scale) {
        cs.pop();
    }
    let n = cs.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = cs[n];
    let mut comp = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        comp[(i, i - 1)] = c(1.0, 0.0);
    }
    for i in 0..n {
        comp[(i, n - 1)] = -cs[i] / lead;
    }
    let roots: Vec<Complex64> = match comp.clone().try_schur(1e-15, 10_000) {
        Some(s) => {
            let (_, t) = s.unpack();
            (0..n).map(|i| t[(i, i)]).collect()
        }
        None => durand_kerner(&cs),
    };
    roots.into_iter().map(|r| newton_polish(&cs, r)).collect()
}

fn horner(cs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = c(0.0, 0.0);
    let mut dp = c(0.0, 0.0);
    for &a in cs.iter().rev() {
        dp = dp * x + p;
        p = p * x + a;
    }
    (p, dp)
}

fn newton_polish(cs: &[Complex64], mut x: Complex64) -> Complex64 {
    for _ in 0..3 {
        let (p, dp) = horner(cs, x);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        let nx = x - step;
        if horner(cs, nx).0.norm() >= p.norm() {
            break;
        }
        x = nx;
    }
    x
}

fn durand_kerner(cs: &[Complex64]) -> Vec<Complex64> {
    let n = cs.len() - 1;
    let lead = cs[n];
    let monic: Vec<Complex64> = cs.iter().map(|a| a / lead).collect();
    let seed = c(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let num = horner(&monic, z[i]).0;
            let den: Complex64 = (0..n).filter(|&j| j != i).map(|j| z[i] - z[j]).product();
            if den.norm() == 0.0 {
                continue;
            }
            let step = num / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

/// Determinant of a small complex matrix by LU.
pub fn complex_det(rows: &[Vec<Complex64>]) -> Complex64 {
    if rows.is_empty() {
        return c(1.0, 0.0);
    }
    to_dmatrix(rows, rows.len()).determinant()
}

/// Product of univariate complex polynomials (ascending coefficients).
pub fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![c(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_axpy(acc: &mut Vec<Complex64>, s: Complex64, p: &[Complex64]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), c(0.0, 0.0));
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += s * b;
    }
}

/// Determinant of a square matrix of univariate complex polynomials by
/// Laplace expansion along the first row (intended for sizes up to ~7).
pub fn poly_matrix_det(m: &[Vec<Vec<Complex64>>]) -> Vec<Complex64> {
    fn rec(m: &[Vec<Vec<Complex64>>], rows: &[usize], cols: &[usize]) -> Vec<Complex64> {
        if rows.is_empty() {
            return vec![c(1.0, 0.0)];
        }
        let r = rows[0];
        let mut acc = Vec::new();
        for (k, &col) in cols.iter().enumerate() {
            let e = &m[r][col];
            if e.iter().all(|z| z.norm() == 0.0) {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != col).collect();
            let minor = rec(m, &rows[1..], &rest);
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            poly_axpy(&mut acc, c(sign, 0.0), &poly_mul(e, &minor));
        }
        acc
    }
    let idx: Vec<usize> = (0..m.len()).collect();
    rec(m, &idx, &idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_cubic() {
        // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
        let mut r = poly_roots(&[c(6.0, 0.0), c(-7.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        for (z, want) in r.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((z - c(want, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn roots_of_unity_are_found() {
        let r = poly_roots(&[c(-1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(r.len(), 4);
        for z in r {
            assert!((z.powu(4) - c(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn svd_rank_and_kernel() {
        let m = to_dmatrix(&[vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)], vec![c(2.0, 0.0), c(4.0, 0.0), c(6.0, 0.0)]], 3);
        assert_eq!(svd_rank(&m, SVD_REL_TOL), 1);
        let ker = nullspace(&m, 2);
        for v in ker {
            let s: Complex64 = (0..3).map(|j| m[(0, j)] * v[j]).sum();
            assert!(s.norm() < 1e-12);
        }
    }

    #[test]
    fn polynomial_matrix_determinant() {
        // [[1, x], [x, 1]] -> 1 - x^2
        let one = vec![c(1.0, 0.0)];
        let x = vec![c(0.0, 0.0), c(1.0, 0.0)];
        let d = poly_matrix_det(&[vec![one.clone(), x.clone()], vec![x, one]]);
        assert_eq!(d.len(), 3);
        assert!((d[0] - c(1.0, 0.0)).norm() < 1e-15 && d[1].norm() < 1e-15 && (d[2] + c(1.0, 0.0)).norm() < 1e-15);
    }
}
