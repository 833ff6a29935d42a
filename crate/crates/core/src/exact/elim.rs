use super::{CycloElement, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Integral domain with exact division, as needed by Bareiss elimination.
pub trait ExactDomain: Clone {
    fn unit() -> Self;
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    fn times(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self / d`; callers guarantee divisibility.
    fn exact_div(&self, d: &Self) -> Self;
}

impl ExactDomain for BigInt {
    fn unit() -> Self {
        BigInt::one()
    }
    fn nil() -> Self {
        BigInt::zero()
    }
    fn is_nil(&self) -> bool {
        self.is_zero()
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Self {
        debug_assert!((self % d).is_zero());
        self / d
    }
}

/// One Bareiss elimination step at pivot `(r, c)` with previous pivot `prev`.
fn bareiss_step<T: ExactDomain>(a: &mut [Vec<T>], r: usize, c: usize, prev: &T) {
    let cols = a[r].len();
    let (top, bottom) = a.split_at_mut(r + 1);
    let prow = &top[r];
    for row in bottom.iter_mut() {
        for j in c + 1..cols {
            let v = prow[c].times(&row[j]).minus(&row[c].times(&prow[j]));
            row[j] = v.exact_div(prev);
        }
        row[c] = T::nil();
    }
}

/// Rank by fraction-free elimination with column skipping; every
/// intermediate entry is a minor of the input, so divisions are exact.
pub fn bareiss_rank<T: ExactDomain>(mut a: Vec<Vec<T>>) -> usize {
    let rows = a.len();
    let Some(cols) = a.first().map(Vec::len) else { return 0 };
    let mut prev = T::unit();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_nil()) else { continue };
        a.swap(r, p);
        bareiss_step(&mut a, r, c, &prev);
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn bareiss_det<T: ExactDomain>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    if n == 0 {
        return T::unit();
    }
    let mut prev = T::unit();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_nil()) else { return T::nil() };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        bareiss_step(&mut a, k, k, &prev);
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.negated()
    } else {
        d
    }
}

/// Exact rank of a rational matrix: rows are cleared to integers and the
/// result is computed by Bareiss elimination over `Z`.
pub fn exact_rank(m: &[Vec<Rational>]) -> usize {
    let ints: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let l = super::denominator_lcm(row.iter());
            row.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    bareiss_rank(ints)
}

/// Basis of the right kernel `{v : m v = 0}` from the reduced row echelon
/// form; one basis vector per free column.
pub fn rational_nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); cols];
            v[fc] = Rational::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[pr][fc].clone();
            }
            v
        })
        .collect()
}

/// Rank over `Q(ζ_n)` of a matrix with entries in `Z[ζ_n]`.
///
/// Division-free elimination: row `i` becomes `p·row_i - a_ic·row_r`, which
/// keeps zero tests exact because `Z[ζ_n]` is a domain; integer content is
/// divided out of each updated row to bound coefficient growth.
pub fn cyclo_rank(mut a: Vec<Vec<CycloElement>>) -> usize {
    let rows = a.len();
    let Some(cols) = a.first().map(Vec::len) else { return 0 };
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c + 1..cols {
                row[j] = prow[c].mul(&row[j]).sub(&f.mul(&prow[j]));
            }
            row[c] = CycloElement::zero(f.order());
            let g = row[c + 1..].iter().fold(BigInt::zero(), |acc, e| acc.gcd(&e.content()));
            if !g.is_zero() && !g.is_one() {
                for e in row[c + 1..].iter_mut() {
                    *e = e.div_int(&g);
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn vandermonde_three_by_three_has_full_rank() {
        assert_eq!(exact_rank(&qm(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]])), 3);
    }

    #[test]
    fn rank_with_skipped_column() {
        assert_eq!(exact_rank(&qm(&[&[0, 1, 2], &[0, 2, 4], &[0, 0, 1]])), 2);
        assert_eq!(exact_rank(&qm(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn bareiss_det_integer() {
        let m: Vec<Vec<BigInt>> =
            [[2, -1, 0], [1, 3, 2], [0, 1, 4]].iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        assert_eq!(bareiss_det(m), BigInt::from(2 * 10 + 4));
        let swap: Vec<Vec<BigInt>> = [[0, 1], [1, 0]].iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        assert_eq!(bareiss_det(swap), BigInt::from(-1));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = qm(&[&[1, 2, 3, 4], &[2, 4, 6, 9]]);
        let ker = rational_nullspace(&m, 4);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &m {
                let s: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn cyclo_rank_of_cube_root_columns() {
        // Columns x^b for B = {0, 3, 6} at (1, ω, ω²) are all (1, 1, 1).
        let rows: Vec<Vec<CycloElement>> = (0..3)
            .map(|m| [0i64, 3, 6].iter().map(|&b| CycloElement::root_power(3, m * b)).collect())
            .collect();
        assert_eq!(cyclo_rank(rows), 1);
        let rows: Vec<Vec<CycloElement>> = (0..3)
            .map(|m| [0i64, 1, 2].iter().map(|&b| CycloElement::root_power(3, m * b)).collect())
            .collect();
        assert_eq!(cyclo_rank(rows), 3);
    }
}
