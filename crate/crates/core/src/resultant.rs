//! Exact sparse resultant as the Sylvester determinant of the homogenized
//! pair.

use crate::exact::{bareiss_det, Rational};
use crate::mpoly::MPoly;
use crate::support::{SupportPair, SupportSet};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// Default bound on `d1 + d2`, the Sylvester matrix size.
pub const DEFAULT_SIZE_BOUND: usize = 16;

/// Matrices up to this size use memoized minor expansion; larger ones use
/// fraction-free elimination.
pub const MINOR_EXPANSION_MAX: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResultantError {
    #[error("determinant too large: Sylvester size {size} exceeds bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error(transparent)]
    Poly(#[from] crate::mpoly::MPolyError),
}

/// Entry of the symbolic Sylvester matrix: zero or one coefficient variable,
/// given by its index in [`SylvesterMatrix::vars`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SylEntry {
    Zero,
    Var(usize),
}

/// `(d1 + d2) × (d1 + d2)` Sylvester matrix of the homogenized forms:
/// `d2` shifted rows of `f` coefficients (descending powers of `x`) above
/// `d1` shifted rows of `g` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterMatrix {
    pub vars: Arc<[String]>,
    pub entries: Vec<Vec<SylEntry>>,
}

/// Variable names `f<b>` for `b ∈ B1` then `g<b>` for `b ∈ B2`, ascending.
pub fn coefficient_vars(p: &SupportPair) -> Arc<[String]> {
    let f = p.b1().elements().iter().map(|b| format!("f{b}"));
    let g = p.b2().elements().iter().map(|b| format!("g{b}"));
    f.chain(g).collect()
}

pub fn sylvester(p: &SupportPair) -> SylvesterMatrix {
    let (b1, b2) = (p.b1(), p.b2());
    let (d1, d2) = (b1.spread() as usize, b2.spread() as usize);
    let n = d1 + d2;
    let mut entries = vec![vec![SylEntry::Zero; n]; n];
    let mut fill = |rows: std::ops::Range<usize>, b: &SupportSet, d: usize, offset: usize| {
        for (shift, r) in rows.enumerate() {
            for k in 0..=d {
                if let Some(i) = b.position(b.max() - k as i64) {
                    entries[r][shift + k] = SylEntry::Var(offset + i);
                }
            }
        }
    };
    fill(0..d2, b1, d1, 0);
    fill(d2..n, b2, d2, b1.len());
    SylvesterMatrix { vars: coefficient_vars(p), entries }
}

impl SylvesterMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Laplace expansion along rows, memoized on the set of unused columns.
    pub fn det_minor_expansion(&self) -> MPoly<BigInt> {
        let n = self.size();
        let mut memo: HashMap<u64, MPoly<BigInt>> = HashMap::new();
        self.expand(0, (1u64 << n) - 1, &mut memo)
    }

    fn expand(&self, row: usize, cols: u64, memo: &mut HashMap<u64, MPoly<BigInt>>) -> MPoly<BigInt> {
        if row == self.size() {
            return MPoly::constant(self.vars.clone(), BigInt::from(1));
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = MPoly::zero(self.vars.clone());
        let mut pos = 0;
        for c in 0..self.size() {
            if cols & (1 << c) == 0 {
                continue;
            }
            if let SylEntry::Var(v) = self.entries[row][c] {
                let minor = self.expand(row + 1, cols & !(1 << c), memo);
                if !minor.is_zero() {
                    let term = minor.mul_var(v);
                    acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
            pos += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Determinant by Bareiss elimination over the polynomial ring.
    pub fn det_bareiss(&self) -> MPoly<BigInt> {
        let m: Vec<Vec<MPoly<BigInt>>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        SylEntry::Zero => MPoly::zero(self.vars.clone()),
                        SylEntry::Var(v) => MPoly::var(self.vars.clone(), *v),
                    })
                    .collect()
            })
            .collect();
        let d = bareiss_det(m);
        if d.vars().is_empty() {
            MPoly::constant(self.vars.clone(), d.constant_value().unwrap_or_else(BigInt::zero))
        } else {
            d
        }
    }
}

/// The resultant `R_B` as an integer polynomial in the coefficient
/// variables; fails when `d1 + d2` exceeds `bound`.
pub fn resultant_poly(p: &SupportPair, bound: usize) -> Result<MPoly<BigInt>, ResultantError> {
    let s = sylvester(p);
    if s.size() > bound {
        return Err(ResultantError::TooLarge { size: s.size(), bound });
    }
    Ok(if s.size() <= MINOR_EXPANSION_MAX { s.det_minor_expansion() } else { s.det_bareiss() })
}

/// Substitutes some or all coefficient variables by rationals.
pub fn specialize(r: &MPoly<BigInt>, assignment: &BTreeMap<String, Rational>) -> Result<MPoly<Rational>, ResultantError> {
    Ok(r.specialize(assignment)?)
}

/// `true` when `r` and all its first partial derivatives vanish at the full
/// assignment `point`.
pub fn jacobian_vanishes(r: &MPoly<BigInt>, point: &BTreeMap<String, Rational>) -> Result<bool, ResultantError> {
    let values: Vec<Rational> = r
        .vars()
        .iter()
        .map(|v| point.get(v).cloned().ok_or_else(|| crate::mpoly::MPolyError::UnknownVariable(v.clone())))
        .collect::<Result<_, _>>()?;
    if !r.eval(&values).is_zero() {
        return Ok(false);
    }
    Ok((0..r.vars().len()).all(|i| r.partial_derivative(i).eval(&values).is_zero()))
}

/// Numerical Sylvester determinant for complex coefficient vectors aligned
/// with the supports.
pub fn numeric_resultant(p: &SupportPair, f: &[Complex64], g: &[Complex64]) -> Complex64 {
    let s = sylvester(p);
    let nf = p.b1().len();
    let rows: Vec<Vec<Complex64>> = s
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| match e {
                    SylEntry::Zero => Complex64::new(0.0, 0.0),
                    SylEntry::Var(v) if *v < nf => f[*v],
                    SylEntry::Var(v) => g[*v - nf],
                })
                .collect()
        })
        .collect();
    crate::numeric::complex_det(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: &[i64], b: &[i64]) -> SupportPair {
        SupportPair::from_slices(a, b).unwrap()
    }

    #[test]
    fn linear_pair_sylvester_layout() {
        let s = sylvester(&pair(&[0, 1], &[0, 1]));
        assert_eq!(&*s.vars, &["f0", "f1", "g0", "g1"]);
        assert_eq!(s.entries, vec![vec![SylEntry::Var(1), SylEntry::Var(0)], vec![SylEntry::Var(3), SylEntry::Var(2)]]);
        let r = resultant_poly(&pair(&[0, 1], &[0, 1]), DEFAULT_SIZE_BOUND).unwrap();
        assert_eq!(r.to_string(), "-1*f0*g1 + f1*g0");
    }

    #[test]
    fn size_bound_is_enforced() {
        let p = pair(&[0, 9], &[0, 9]);
        assert_eq!(resultant_poly(&p, 16), Err(ResultantError::TooLarge { size: 18, bound: 16 }));
    }

    #[test]
    fn jacobian_at_origin_and_generic_point() {
        let r = resultant_poly(&pair(&[0, 1], &[0, 1]), 16).unwrap();
        let at = |vals: [i64; 4]| -> BTreeMap<String, Rational> {
            r.vars().iter().cloned().zip(vals.iter().map(|&v| Rational::from_integer(v.into()))).collect()
        };
        assert!(jacobian_vanishes(&r, &at([0, 0, 0, 0])).unwrap());
        assert!(!jacobian_vanishes(&r, &at([1, 1, 1, 1])).unwrap());
    }

    #[test]
    fn elimination_matches_expansion_small() {
        let p = pair(&[0, 1, 3], &[0, 2, 3]);
        let s = sylvester(&p);
        assert_eq!(s.det_bareiss(), s.det_minor_expansion());
    }
}
