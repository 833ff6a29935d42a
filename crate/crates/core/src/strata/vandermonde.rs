//! Multiplicity-Vandermonde matrices and their coranks.
//!
//! Row `(m, d)` is the functional `f ↦ f^{(d)}(x_m)`; the column of exponent
//! `b` holds `b (b-1) ... (b-d+1) x_m^{b-d}`, which is valid for negative `b`.

use crate::exact::{cyclo_rank, exact_rank, rational_nullspace, CycloElement, Rational};
use crate::numeric::{nullspace, svd_rank, to_dmatrix, SVD_REL_TOL};
use crate::scalar::{falling_factorial, Scalar};
use crate::support::SupportSet;
use num_bigint::BigInt;
use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VandermondeError {
    #[error("{points} points but {mults} multiplicities")]
    LengthMismatch { points: usize, mults: usize },
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("point {0} is zero")]
    ZeroPoint(usize),
}

pub fn mult_vandermonde<F: Scalar>(b: &SupportSet, xs: &[F], js: &[u32]) -> Result<Vec<Vec<F>>, VandermondeError> {
    check_points(xs, js, |a, c| a == c, |a| a.is_zero())?;
    Ok(xs
        .iter()
        .zip(js)
        .flat_map(|(x, &j)| {
            (0..j as usize).map(move |d| {
                b.elements().iter().map(|&e| F::from_i64(falling_factorial(e, d)) * x.powi(e - d as i64)).collect()
            })
        })
        .collect())
}

/// The same matrix at points `ζ_n^{p_m}`, with entries in `Z[ζ_n]`.
pub fn mult_vandermonde_unity(b: &SupportSet, n: u32, ps: &[i64], js: &[u32]) -> Result<Vec<Vec<CycloElement>>, VandermondeError> {
    let m = n as i64;
    check_points(ps, js, |a, c| (a - c).rem_euclid(m) == 0, |_| false)?;
    Ok(ps
        .iter()
        .zip(js)
        .flat_map(|(&p, &j)| {
            (0..j as usize).map(move |d| {
                b.elements()
                    .iter()
                    .map(|&e| CycloElement::root_power(n, p * (e - d as i64)).scale(&BigInt::from(falling_factorial(e, d))))
                    .collect()
            })
        })
        .collect())
}

fn check_points<T>(xs: &[T], js: &[u32], same: impl Fn(&T, &T) -> bool, zero: impl Fn(&T) -> bool) -> Result<(), VandermondeError> {
    if xs.len() != js.len() {
        return Err(VandermondeError::LengthMismatch { points: xs.len(), mults: js.len() });
    }
    for i in 0..xs.len() {
        if zero(&xs[i]) {
            return Err(VandermondeError::ZeroPoint(i));
        }
        for k in i + 1..xs.len() {
            if same(&xs[i], &xs[k]) {
                return Err(VandermondeError::DuplicatePoint(i, k));
            }
        }
    }
    Ok(())
}

/// Fields with a rank and kernel procedure: exact for rationals, SVD with a
/// relative threshold for complex floats.
pub trait RankField: Scalar {
    fn rank(m: &[Vec<Self>], cols: usize) -> usize;
    fn kernel(m: &[Vec<Self>], cols: usize) -> Vec<Vec<Self>>;
}

impl RankField for Rational {
    fn rank(m: &[Vec<Self>], _cols: usize) -> usize {
        if m.is_empty() {
            0
        } else {
            exact_rank(m)
        }
    }
    fn kernel(m: &[Vec<Self>], cols: usize) -> Vec<Vec<Self>> {
        rational_nullspace(m, cols)
    }
}

impl RankField for Complex64 {
    fn rank(m: &[Vec<Self>], cols: usize) -> usize {
        svd_rank(&to_dmatrix(m, cols), SVD_REL_TOL)
    }
    fn kernel(m: &[Vec<Self>], cols: usize) -> Vec<Vec<Self>> {
        let r = Self::rank(m, cols);
        nullspace(&to_dmatrix(m, cols), cols - r)
    }
}

/// `(rows - rank, basis of {v : m v = 0})`.
pub fn corank_kernel<F: RankField>(m: &[Vec<F>], cols: usize) -> (usize, Vec<Vec<F>>) {
    let r = F::rank(m, cols);
    (m.len() - r, if r == cols { Vec::new() } else { F::kernel(m, cols) })
}

pub fn corank_unity(m: Vec<Vec<CycloElement>>) -> usize {
    let rows = m.len();
    rows - cyclo_rank(m)
}

/// Rank is 1 exactly when every row is a multiple of a row of equal unit
/// entries; for plain Vandermonde rows at `ζ^p` this means
/// `p (b - b0) ≡ 0 (mod n)` across the support.
pub fn unity_row_is_constant(b: &SupportSet, n: u32, p: i64) -> bool {
    let b0 = b.min();
    b.elements().iter().all(|&e| (p * (e - b0)).rem_euclid(n as i64) == 0)
}
