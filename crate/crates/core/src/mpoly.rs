//! Sparse multivariate polynomials over `Z` or `Q`.

use crate::exact::{format_rational, parse_rational, ExactDomain, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::{self, Debug};
use std::ops::Neg;
use std::sync::Arc;

/// Coefficient ring of an [`MPoly`].
pub trait Coef: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static {
    fn to_rational(&self) -> Rational;
    /// `self / d` when exact, `None` otherwise.
    fn checked_div(&self, d: &Self) -> Option<Self>;
    fn to_text(&self) -> String;
    fn from_text(s: &str) -> Option<Self>;
}

impl Coef for BigInt {
    fn to_rational(&self) -> Rational {
        Rational::from_integer(self.clone())
    }
    fn checked_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn from_text(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }
}

impl Coef for Rational {
    fn to_rational(&self) -> Rational {
        self.clone()
    }
    fn checked_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
    fn to_text(&self) -> String {
        format_rational(self)
    }
    fn from_text(s: &str) -> Option<Self> {
        parse_rational(s).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MPolyError {
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VarMismatch(Vec<String>, Vec<String>),
    #[error("exponent vector of length {got} for {want} variables")]
    ExponentLength { got: usize, want: usize },
    #[error("malformed coefficient {0:?}")]
    BadCoefficient(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
}

/// Sparse polynomial: exponent vectors (one entry per variable) mapped to
/// nonzero coefficients. Terms are kept in lexicographic order, so the last
/// entry is the lex-leading term.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly<C: Coef> {
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coef> MPoly<C> {
    pub fn zero(vars: Arc<[String]>) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Arc<[String]>, c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn var(vars: Arc<[String]>, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(e, C::one());
        p
    }

    pub fn from_terms(vars: Arc<[String]>, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Result<Self, MPolyError> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(MPolyError::ExponentLength { got: e.len(), want: p.vars.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, C> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn add_term(&mut self, e: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// A variable-free constant adopts the other operand's variables.
    fn aligned(&self, o: &Self) -> (Self, Self) {
        if self.vars == o.vars {
            return (self.clone(), o.clone());
        }
        let lift = |p: &Self, vars: &Arc<[String]>| {
            assert!(p.vars.is_empty(), "variable lists differ: {:?} vs {:?}", p.vars, vars);
            let c = p.terms.values().next().cloned().unwrap_or_else(C::zero);
            Self::constant(vars.clone(), c)
        };
        if self.vars.is_empty() {
            (lift(self, &o.vars), o.clone())
        } else {
            (self.clone(), lift(o, &self.vars))
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let (mut a, b) = self.aligned(o);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = self.aligned(o);
        let mut out = Self::zero(a.vars.clone());
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    /// Multiplication by the variable with index `i`.
    pub fn mul_var(&self, i: usize) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[i] += 1;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degrees of every term in the variables selected by `mask`.
    pub fn partial_degrees(&self, mask: &[bool]) -> std::collections::BTreeSet<u32> {
        self.terms.keys().map(|e| e.iter().zip(mask).filter(|(_, &m)| m).map(|(d, _)| d).sum()).collect()
    }

    /// Exact quotient by multivariate division in lex order; `None` when the
    /// division leaves a remainder.
    pub fn checked_div(&self, d: &Self) -> Option<Self> {
        let (num, d) = self.aligned(d);
        let (dl_e, dl_c) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = num;
        let mut q = Self::zero(rem.vars.clone());
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&dl_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(&dl_e).map(|(a, b)| a - b).collect();
            let qc = c.checked_div(&dl_c)?;
            for (de, dc) in &d.terms {
                let te: Vec<u32> = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(te, -(dc.clone() * qc.clone()));
            }
            q.add_term(qe, qc);
        }
        Some(q)
    }

    pub fn partial_derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c.clone() * C::from_str_radix(&e[i].to_string(), 10).ok().expect("small integer"));
        }
        out
    }

    pub fn to_rational(&self) -> MPoly<Rational> {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c.to_rational())).collect() }
    }

    /// Value at a full assignment, `values` in variable order.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.vars.len());
        let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::one()]; values.len()];
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.to_rational();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &values[i];
                    powers[i].push(next);
                }
                t *= &powers[i][k as usize];
            }
            acc += t;
        }
        acc
    }

    /// Substitutes the assigned variables and keeps the others, in their
    /// original order.
    pub fn specialize(&self, assignment: &BTreeMap<String, Rational>) -> Result<MPoly<Rational>, MPolyError> {
        if let Some(k) = assignment.keys().find(|k| self.var_index(k).is_none()) {
            return Err(MPolyError::UnknownVariable(k.clone()));
        }
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| !assignment.contains_key(&self.vars[i])).collect();
        let new_vars: Arc<[String]> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let vals: Vec<Option<&Rational>> = self.vars.iter().map(|v| assignment.get(v)).collect();
        let mut out = MPoly::zero(new_vars);
        for (e, c) in &self.terms {
            let mut t = c.to_rational();
            for (i, &k) in e.iter().enumerate() {
                if let Some(v) = vals[i] {
                    t *= num_traits::pow(v.clone(), k as usize);
                }
            }
            out.add_term(keep.iter().map(|&i| e[i]).collect(), t);
        }
        Ok(out)
    }

    /// The constant term of a polynomial with no variables left.
    pub fn constant_value(&self) -> Option<C> {
        if self.terms.keys().all(|e| e.iter().all(|&k| k == 0)) {
            Some(self.terms.values().next().cloned().unwrap_or_else(C::zero))
        } else {
            None
        }
    }

    /// Replaces every variable by a polynomial in a common new variable set.
    pub fn compose(&self, images: &[MPoly<Rational>]) -> MPoly<Rational> {
        assert_eq!(images.len(), self.vars.len());
        let new_vars = images.first().map(|p| p.vars.clone()).unwrap_or_else(|| Arc::from(Vec::<String>::new()));
        let mut powers: Vec<Vec<MPoly<Rational>>> =
            images.iter().map(|_| vec![MPoly::constant(new_vars.clone(), Rational::one())]).collect();
        let mut out = MPoly::zero(new_vars.clone());
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(new_vars.clone(), c.to_rational());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    t = t.mul(&powers[i][k as usize]);
                }
            }
            out = out.add(&t);
        }
        out
    }
}

impl ExactDomain for MPoly<BigInt> {
    fn unit() -> Self {
        MPoly::constant(Arc::from(Vec::<String>::new()), BigInt::one())
    }
    fn nil() -> Self {
        MPoly::zero(Arc::from(Vec::<String>::new()))
    }
    fn is_nil(&self) -> bool {
        self.is_zero()
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::nil();
        }
        self.mul(o)
    }
    fn minus(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.neg();
        }
        self.sub(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn exact_div(&self, d: &Self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.checked_div(d).expect("inexact multivariate division")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coef: String,
}

/// JSON form `{"vars":[...],"terms":[{"exp":[...],"coef":"<int>"}]}`.
#[derive(Serialize, Deserialize)]
pub struct MPolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

impl<C: Coef> MPoly<C> {
    pub fn to_json(&self) -> MPolyJson {
        MPolyJson {
            vars: self.vars.to_vec(),
            terms: self.terms.iter().rev().map(|(e, c)| TermJson { exp: e.clone(), coef: c.to_text() }).collect(),
        }
    }

    pub fn from_json(j: &MPolyJson) -> Result<Self, MPolyError> {
        let vars: Arc<[String]> = j.vars.iter().cloned().collect();
        let terms = j
            .terms
            .iter()
            .map(|t| C::from_text(&t.coef).map(|c| (t.exp.clone(), c)).ok_or_else(|| MPolyError::BadCoefficient(t.coef.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_terms(vars, terms)
    }
}

impl<C: Coef> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { self.vars[i].clone() } else { format!("{}^{k}", self.vars[i]) })
                    .collect();
                if mono.is_empty() {
                    c.to_text()
                } else if *c == C::one() {
                    mono.join("*")
                } else {
                    format!("{}*{}", c.to_text(), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coef> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Variable list from string slices.
pub fn var_list(names: &[&str]) -> Arc<[String]> {
    names.iter().map(|s| s.to_string()).collect()
}
