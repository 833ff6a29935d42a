//! Support sets, the lattice invariant `φ`, and the combinatorial conditions
//! that decide whether the generic singularities of the resultant are nodes.

use crate::strata::StratumLabel;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SupportError {
    #[error("support set must be nonempty")]
    Empty,
    #[error("support set has repeated exponent {0}")]
    Duplicate(i64),
    #[error("support set {0} has fewer than two elements")]
    TooSmall(SupportSet),
}

/// Finite set of integer exponents, stored sorted and distinct.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SupportSet(Vec<i64>);

impl SupportSet {
    /// Rejects empty input and repeated exponents; order is irrelevant.
    pub fn new(elems: impl IntoIterator<Item = i64>) -> Result<Self, SupportError> {
        let v: Vec<i64> = elems.into_iter().collect();
        let mut seen = BTreeSet::new();
        for &e in &v {
            if !seen.insert(e) {
                return Err(SupportError::Duplicate(e));
            }
        }
        if seen.is_empty() {
            return Err(SupportError::Empty);
        }
        Ok(SupportSet(seen.into_iter().collect()))
    }

    pub fn elements(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> i64 {
        self.0[0]
    }

    pub fn max(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    /// `max - min`, the degree of the homogenized form.
    pub fn spread(&self) -> i64 {
        self.max() - self.min()
    }

    pub fn contains(&self, e: i64) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn position(&self, e: i64) -> Option<usize> {
        self.0.binary_search(&e).ok()
    }

    pub fn shifted(&self, by: i64) -> SupportSet {
        SupportSet(self.0.iter().map(|e| e + by).collect())
    }

    /// gcd of consecutive differences; 0 for a singleton.
    pub fn phi(&self) -> u64 {
        phi(&self.0)
    }

    /// Residue classes mod `k` that the set meets, in ascending order.
    pub fn residue_classes(&self, k: u64) -> Vec<u64> {
        let set: BTreeSet<u64> = self.0.iter().map(|e| e.rem_euclid(k as i64) as u64).collect();
        set.into_iter().collect()
    }
}

impl TryFrom<Vec<i64>> for SupportSet {
    type Error = SupportError;
    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        SupportSet::new(v)
    }
}

impl From<SupportSet> for Vec<i64> {
    fn from(s: SupportSet) -> Self {
        s.0
    }
}

impl fmt::Debug for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// gcd of consecutive differences of a sorted slice; 0 when `|b| <= 1`.
/// 0 is treated as divisible by every integer.
pub fn phi(b: &[i64]) -> u64 {
    b.windows(2).fold(0u64, |g, w| g.gcd(&(w[1] - w[0]).unsigned_abs()))
}

fn divides(k: u64, n: u64) -> bool {
    n.is_multiple_of(k)
}

/// Ordered pair of supports, each with at least two elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair", into = "RawPair")]
pub struct SupportPair {
    b1: SupportSet,
    b2: SupportSet,
}

#[derive(Serialize, Deserialize)]
struct RawPair {
    b1: SupportSet,
    b2: SupportSet,
}

impl TryFrom<RawPair> for SupportPair {
    type Error = SupportError;
    fn try_from(r: RawPair) -> Result<Self, Self::Error> {
        SupportPair::new(r.b1, r.b2)
    }
}

impl From<SupportPair> for RawPair {
    fn from(p: SupportPair) -> Self {
        RawPair { b1: p.b1, b2: p.b2 }
    }
}

impl SupportPair {
    pub fn new(b1: SupportSet, b2: SupportSet) -> Result<Self, SupportError> {
        for b in [&b1, &b2] {
            if b.len() < 2 {
                return Err(SupportError::TooSmall(b.clone()));
            }
        }
        Ok(SupportPair { b1, b2 })
    }

    /// Convenience constructor from exponent slices.
    pub fn from_slices(b1: &[i64], b2: &[i64]) -> Result<Self, SupportError> {
        Self::new(SupportSet::new(b1.iter().copied())?, SupportSet::new(b2.iter().copied())?)
    }

    pub fn b1(&self) -> &SupportSet {
        &self.b1
    }

    pub fn b2(&self) -> &SupportSet {
        &self.b2
    }

    /// Side `i ∈ {1, 2}`.
    pub fn side(&self, i: usize) -> &SupportSet {
        if i == 1 {
            &self.b1
        } else {
            &self.b2
        }
    }

    pub fn swapped(&self) -> SupportPair {
        SupportPair { b1: self.b2.clone(), b2: self.b1.clone() }
    }

    /// `|B1| + |B2|`, the dimension of the coefficient space.
    pub fn ambient_dim(&self) -> usize {
        self.b1.len() + self.b2.len()
    }
}

impl fmt::Display for SupportPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.b1, self.b2)
    }
}

/// Partition `B = B' ⊔ B''` into at most two residue classes mod `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitWitness {
    pub k: u64,
    /// Elements congruent to `min B` mod `k`.
    pub b_prime: Vec<i64>,
    /// The remaining elements (possibly empty).
    pub b_double_prime: Vec<i64>,
}

/// Smallest `k >= 3` dividing `φ(other)` such that `target` meets at most two
/// residue classes mod `k`.
pub fn split_witness(target: &SupportSet, other: &SupportSet) -> Option<SplitWitness> {
    let n = other.phi();
    if n < 3 {
        return None;
    }
    (3..=n).filter(|&k| divides(k, n)).find_map(|k| {
        if target.residue_classes(k).len() > 2 {
            return None;
        }
        let base = target.min().rem_euclid(k as i64);
        let (bp, bpp): (Vec<i64>, Vec<i64>) =
            target.elements().iter().partition(|e| e.rem_euclid(k as i64) == base);
        Some(SplitWitness { k, b_prime: bp, b_double_prime: bpp })
    })
}

/// Split witness for the second condition, recording which side was split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideSplit {
    /// 1 when `B1` is partitioned mod a divisor of `φ(B2)`, 2 for the mirror.
    pub split_side: u8,
    #[serde(flatten)]
    pub witness: SplitWitness,
}

/// The six support conditions, evaluated independently, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    /// `gcd(φ(B1), φ(B2)) >= 2`.
    pub cond1: bool,
    pub cond1_k: Option<u64>,
    /// A split of one side modulo some `k >= 3` dividing `φ` of the other.
    pub cond2: bool,
    pub cond2_witness: Option<SideSplit>,
    /// The two smallest elements of each side differ by more than 1.
    pub cond3: bool,
    /// The two largest elements of each side differ by more than 1.
    pub cond4: bool,
    /// One side has two elements and the other has spread greater than 2.
    pub cond5: bool,
    /// Both sides have two elements and the same gap.
    pub cond6: bool,
    pub cond6_k: Option<u64>,
}

impl ConditionReport {
    /// Indices (1-based) of the conditions among 1..=5 that hold.
    pub fn firing(&self) -> Vec<u8> {
        [self.cond1, self.cond2, self.cond3, self.cond4, self.cond5]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(i, _)| i as u8 + 1)
            .collect()
    }

    pub fn any_of_first_five(&self) -> bool {
        !self.firing().is_empty()
    }
}

pub fn check_conditions(p: &SupportPair) -> ConditionReport {
    let (b1, b2) = (&p.b1, &p.b2);
    let g = b1.phi().gcd(&b2.phi());
    let cond2_witness = split_witness(b1, b2)
        .map(|w| SideSplit { split_side: 1, witness: w })
        .or_else(|| split_witness(b2, b1).map(|w| SideSplit { split_side: 2, witness: w }));
    let low_gap = |b: &SupportSet| b.elements()[1] - b.elements()[0] > 1;
    let high_gap = |b: &SupportSet| {
        let e = b.elements();
        e[e.len() - 1] - e[e.len() - 2] > 1
    };
    let cond5 = (b1.len() == 2 && b2.spread() > 2) || (b2.len() == 2 && b1.spread() > 2);
    let cond6 = b1.len() == 2 && b2.len() == 2 && b1.spread() == b2.spread();
    ConditionReport {
        cond1: g >= 2,
        cond1_k: (g >= 2).then_some(g),
        cond2: cond2_witness.is_some(),
        cond2_witness,
        cond3: low_gap(b1) && low_gap(b2),
        cond4: high_gap(b1) && high_gap(b2),
        cond5,
        cond6,
        cond6_k: cond6.then(|| b1.spread() as u64),
    }
}

/// Which of the ten low-codimension subsets are guaranteed to have their
/// expected codimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetGuarantee {
    pub subset: String,
    pub label: StratumLabel,
    pub expected_codim: u32,
    pub guaranteed: bool,
    /// Conditions whose truth voids the guarantee.
    pub blocking_conditions: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    /// A generic singular point of the resultant is a node (none of the
    /// conditions 1-5 holds).
    pub part_i_generic_a1: bool,
    /// The singular locus has codimension 2 (condition 6 fails).
    pub part_ii_codim2: bool,
    pub per_subset_guarantees: Vec<SubsetGuarantee>,
}

/// The ten subsets with the conditions that block their codimension
/// guarantee.
pub fn guaranteed_subsets() -> Vec<(&'static str, Vec<u8>)> {
    vec![
        ("N(1)", vec![]),
        ("N(1,1)", vec![1]),
        ("N_1^0", vec![]),
        ("N_0^1", vec![]),
        ("N(2)", vec![]),
        ("N(1,1,1)", vec![1, 2, 3, 4, 5]),
        ("N_0^1(1)", vec![]),
        ("N_1^0(1)", vec![]),
        ("N(2,1;1,1)", vec![1]),
        ("N(1,1;2,1)", vec![1]),
    ]
}

pub fn classify(p: &SupportPair) -> Verdict {
    let r = check_conditions(p);
    let flags = [r.cond1, r.cond2, r.cond3, r.cond4, r.cond5];
    let per_subset_guarantees = guaranteed_subsets()
        .into_iter()
        .map(|(name, blockers)| {
            let label = StratumLabel::parse(name).expect("built-in label");
            let guaranteed = blockers.iter().all(|&c| !flags[c as usize - 1]);
            SubsetGuarantee {
                subset: name.to_string(),
                expected_codim: label.expected_codim(),
                label,
                guaranteed,
                blocking_conditions: blockers,
            }
        })
        .collect();
    Verdict { part_i_generic_a1: !r.any_of_first_five(), part_ii_codim2: !r.cond6, per_subset_guarantees }
}

/// `B_i = k·B'_i + m_i` with `k` maximal and `min B'_i = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub k: u64,
    pub shifts: (i64, i64),
    pub reduced: SupportPair,
}

pub fn reduce_by_common_sublattice(p: &SupportPair) -> Reduction {
    let k = p.b1.phi().gcd(&p.b2.phi());
    let red = |b: &SupportSet| SupportSet(b.elements().iter().map(|e| (e - b.min()) / k as i64).collect());
    Reduction {
        k,
        shifts: (p.b1.min(), p.b2.min()),
        reduced: SupportPair { b1: red(&p.b1), b2: red(&p.b2) },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> SupportSet {
        SupportSet::new(v.iter().copied()).unwrap()
    }

    fn pair(a: &[i64], b: &[i64]) -> SupportPair {
        SupportPair::from_slices(a, b).unwrap()
    }

    #[test]
    fn phi_values() {
        assert_eq!(s(&[0, 3, 6]).phi(), 3);
        assert_eq!(s(&[0, 1, 3]).phi(), 1);
        assert_eq!(s(&[2, 10]).phi(), 8);
        assert_eq!(s(&[5]).phi(), 0);
        assert_eq!(s(&[-4, 2, 8]).phi(), 6);
    }

    #[test]
    fn construction_validates() {
        assert_eq!(SupportSet::new([1, 1]), Err(SupportError::Duplicate(1)));
        assert_eq!(SupportSet::new([]), Err(SupportError::Empty));
        assert!(matches!(SupportPair::from_slices(&[0], &[0, 1]), Err(SupportError::TooSmall(_))));
        assert_eq!(s(&[3, 0, 1]).elements(), &[0, 1, 3]);
    }

    #[test]
    fn serde_round_trip_and_rejection() {
        let p = pair(&[0, 1, 3], &[0, 3]);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"b1":[0,1,3],"b2":[0,3]}"#);
        assert_eq!(serde_json::from_str::<SupportPair>(&j).unwrap(), p);
        assert!(serde_json::from_str::<SupportPair>(r#"{"b1":[0],"b2":[0,3]}"#).is_err());
        assert!(serde_json::from_str::<SupportSet>("[1,1]").is_err());
    }

    #[test]
    fn conditions_on_mixed_example() {
        let r = check_conditions(&pair(&[0, 1, 3], &[0, 3]));
        assert!(!r.cond1 && r.cond2 && !r.cond3 && r.cond4 && r.cond5 && !r.cond6);
        let w = r.cond2_witness.unwrap();
        assert_eq!(w.split_side, 1);
        assert_eq!(w.witness.k, 3);
        assert_eq!(w.witness.b_prime, vec![0, 3]);
        assert_eq!(w.witness.b_double_prime, vec![1]);
    }

    #[test]
    fn dense_pair_is_generic() {
        let r = check_conditions(&pair(&[0, 1, 2, 3], &[0, 1, 2]));
        assert!(r.firing().is_empty() && !r.cond6);
        let v = classify(&pair(&[0, 1, 2, 3], &[0, 1, 2, 3]));
        assert!(v.part_i_generic_a1 && v.part_ii_codim2);
        assert!(v.per_subset_guarantees.iter().all(|g| g.guaranteed));
    }

    #[test]
    fn equal_gap_binomials() {
        let r = check_conditions(&pair(&[2, 5], &[7, 10]));
        assert!(r.cond1 && r.cond6);
        assert_eq!(r.cond1_k, Some(3));
        assert_eq!(r.cond6_k, Some(3));
        assert!(!classify(&pair(&[0, 1], &[0, 1])).part_ii_codim2);
    }

    #[test]
    fn sublattice_blocks_two_root_guarantee() {
        let v = classify(&pair(&[0, 3, 6], &[0, 3]));
        let g = v.per_subset_guarantees.iter().find(|g| g.subset == "N(1,1)").unwrap();
        assert!(!g.guaranteed);
        assert_eq!(g.expected_codim, 2);
        let always = v.per_subset_guarantees.iter().find(|g| g.subset == "N(2)").unwrap();
        assert!(always.guaranteed);
    }

    #[test]
    fn reduction_example() {
        let r = reduce_by_common_sublattice(&pair(&[2, 8, 14], &[5, 11]));
        assert_eq!(r.k, 6);
        assert_eq!(r.shifts, (2, 5));
        assert_eq!(r.reduced, pair(&[0, 1, 2], &[0, 1]));
    }
}
