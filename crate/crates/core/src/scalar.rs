//! Coefficient fields shared by the exact and floating-point code paths.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::Neg;

/// A field usable as polynomial coefficients.
///
/// `EXACT` selects between structural zero tests (rationals) and tolerance
/// based decisions (complex floats).
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static {
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn to_c64(&self) -> Complex64;

    /// Magnitude used for relative tolerances; exact scalars return 0 or 1.
    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }

    /// `self^e` for any integer `e`; `self` must be nonzero when `e < 0`.
    fn powi(&self, e: i64) -> Self {
        let base = if e < 0 { Self::one() / self.clone() } else { self.clone() };
        let mut acc = Self::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * b.clone();
            }
            b = b.clone() * b;
            k >>= 1;
        }
        acc
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }

    fn powi(&self, e: i64) -> Self {
        if self.is_zero() && e > 0 {
            return Complex64::zero();
        }
        Complex64::powi(self, e as i32)
    }
}

/// Falling factorial `b (b-1) ... (b-d+1)`, the coefficient of `x^{b-d}` in
/// the `d`-th derivative of `x^b`.
pub fn falling_factorial(b: i64, d: usize) -> i64 {
    (0..d as i64).map(|i| b - i).product()
}
