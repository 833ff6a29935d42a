use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Euler's totient, the degree of `Φ_n`.
pub fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out as usize
}

/// The `n`-th cyclotomic polynomial, ascending integer coefficients.
///
/// Computed by dividing `x^n - 1` by `Φ_d` for every proper divisor `d`,
/// memoized per process.
pub fn cyclotomic(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic index must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = monic_exact_div(&num, &cyclotomic(d));
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn monic_exact_div(a: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    let dd = d.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in d.iter().enumerate() {
            r[k + j] -= &c * dc;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    q
}

/// Zero test for `Σ_e counts[e] ζ_n^e` in machine integers; used by the
/// minor scans where every count is small.
pub fn exponent_counts_vanish(n: u32, counts: &[i64]) -> bool {
    let phi: Vec<i64> = cyclotomic(n).iter().map(|c| i64::try_from(c).expect("small cyclotomic coefficient")).collect();
    let deg = phi.len() - 1;
    let mut a = counts.to_vec();
    for i in (deg..a.len()).rev() {
        let c = a[i];
        if c == 0 {
            continue;
        }
        a[i] = 0;
        for j in 0..deg {
            a[i - deg + j] -= c * phi[j];
        }
    }
    a.iter().take(deg).all(|&c| c == 0)
}

/// Element of `Z[ζ_n] = Z[x]/Φ_n(x)`.
///
/// Invariant: `coeffs.len() == φ(n)`, i.e. the residue is fully reduced, so
/// equality and the zero test are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElement {
    n: u32,
    coeffs: Vec<BigInt>,
}

impl CycloElement {
    pub fn zero(n: u32) -> Self {
        CycloElement { n, coeffs: vec![BigInt::zero(); euler_phi(n)] }
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, BigInt::one())
    }

    pub fn from_int(n: u32, v: BigInt) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = v;
        z
    }

    /// `ζ_n^e` for any integer `e`.
    pub fn root_power(n: u32, e: i64) -> Self {
        let mut counts = vec![0i64; n as usize];
        counts[e.rem_euclid(n as i64) as usize] = 1;
        Self::from_exponent_counts(n, &counts)
    }

    /// `Σ_e counts[e] ζ_n^e`, with `counts` indexed by exponent mod `n`.
    pub fn from_exponent_counts(n: u32, counts: &[i64]) -> Self {
        Self::reduce(n, counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Reduces an arbitrary integer polynomial modulo `Φ_n`.
    pub fn reduce(n: u32, mut a: Vec<BigInt>) -> Self {
        let phi = cyclotomic(n);
        let deg = phi.len() - 1;
        if a.len() > deg {
            for i in (deg..a.len()).rev() {
                let c = std::mem::take(&mut a[i]);
                if c.is_zero() {
                    continue;
                }
                for j in 0..deg {
                    a[i - deg + j] -= &c * &phi[j];
                }
            }
        }
        a.resize(deg, BigInt::zero());
        CycloElement { n, coeffs: a }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "mixed cyclotomic orders");
        CycloElement { n: self.n, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "mixed cyclotomic orders");
        CycloElement { n: self.n, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Self {
        CycloElement { n: self.n, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "mixed cyclotomic orders");
        let d = self.coeffs.len();
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.n);
        }
        let mut out = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::reduce(self.n, out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        CycloElement { n: self.n, coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }

    /// Gcd of the integer coefficients (0 for the zero element).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides every coefficient by the integer `k`, which must divide them.
    pub fn div_int(&self, k: &BigInt) -> Self {
        CycloElement { n: self.n, coeffs: self.coeffs.iter().map(|a| a / k).collect() }
    }

    /// Numeric value under `ζ_n ↦ exp(2πi/n)`.
    pub fn to_c64(&self) -> num_complex::Complex64 {
        use num_traits::ToPrimitive;
        let z = num_complex::Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.n as f64);
        self.coeffs
            .iter()
            .rev()
            .fold(num_complex::Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                _ if c.is_one() => format!("z{}^{i}", self.n),
                _ if c.is_negative() && (-c).is_one() => format!("-z{}^{i}", self.n),
                _ => format!("{c}*z{}^{i}", self.n),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
        // First cyclotomic with a coefficient outside {-1, 0, 1}.
        assert!(cyclotomic(105).iter().any(|c| c == &BigInt::from(-2)));
    }

    #[test]
    fn sum_of_primitive_cube_roots() {
        let w = CycloElement::root_power(3, 1);
        let s = CycloElement::one(3).add(&w).add(&w.mul(&w));
        assert!(s.is_zero());
        assert!(!w.sub(&CycloElement::one(3)).is_zero());
    }

    #[test]
    fn root_powers_wrap_and_accept_negative_exponents() {
        assert_eq!(CycloElement::root_power(5, -1), CycloElement::root_power(5, 4));
        assert_eq!(CycloElement::root_power(4, 2), CycloElement::from_int(4, BigInt::from(-1)));
    }

    #[test]
    fn totient_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(13), 12);
    }
}
