//! Exact arithmetic: rationals, univariate polynomials over `Q`, cyclotomic
//! rings `Z[ζ_n]` and fraction-free elimination.

mod cyclo;
mod elim;
mod unipoly;

pub use cyclo::{cyclotomic, euler_phi, exponent_counts_vanish, CycloElement};
pub use elim::{
    bareiss_det, bareiss_rank, cyclo_rank, exact_rank, rational_nullspace, ExactDomain,
};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `"p"`, `"-p/q"` or a finite decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let neg = ip.starts_with('-');
        let ip_abs = ip.trim_start_matches(['-', '+']);
        let whole: BigInt = if ip_abs.is_empty() { BigInt::zero() } else { ip_abs.parse().map_err(|_| err())? };
        let frac: BigInt = fp.parse().map_err(|_| err())?;
        let den = num_traits::pow(BigInt::from(10), fp.len());
        let v = Rational::new(whole * &den + frac, den);
        return Ok(if neg { -v } else { v });
    }
    t.parse::<BigInt>().map(Rational::from_integer).map_err(|_| err())
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators, used to clear fractions.
pub fn denominator_lcm<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Simplest rational within `tol` of `x` with denominator at most `max_den`,
/// found from the continued-fraction convergents.
pub fn rationalize(x: f64, tol: f64, max_den: i64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(max_den) {
            return None;
        }
        let cand = Rational::new(h2.clone(), k2.clone());
        let approx = num_traits::ToPrimitive::to_f64(&cand).unwrap_or(f64::NAN);
        if (approx - x).abs() <= tol * x.abs().max(1.0) {
            return Some(cand);
        }
        let frac = v - a;
        if frac.abs() < 1e-300 {
            return None;
        }
        v = 1.0 / frac;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
    }
    None
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_and_decimals() {
        assert_eq!(parse_rational("3").unwrap(), Rational::from_integer(3.into()));
        assert_eq!(parse_rational("-6/4").unwrap(), Rational::new((-3).into(), 2.into()));
        assert_eq!(parse_rational("0.25").unwrap(), Rational::new(1.into(), 4.into()));
        assert_eq!(parse_rational("-1.5").unwrap(), Rational::new((-3).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn normalization_is_canonical() {
        let r = parse_rational("4/-6").unwrap();
        assert_eq!(format_rational(&r), "-2/3");
    }

    #[test]
    fn rationalize_recovers_small_fractions() {
        assert_eq!(rationalize(-2.0 / 3.0, 1e-12, 1000), Some(Rational::new((-2).into(), 3.into())));
        assert_eq!(rationalize(std::f64::consts::PI, 1e-14, 1000), None);
    }
}
