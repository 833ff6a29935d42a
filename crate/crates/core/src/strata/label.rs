use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabelError {
    #[error("malformed stratum label {0:?}")]
    Parse(String),
    #[error("root multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("the two multiplicity rows have different lengths")]
    RowMismatch,
}

/// Multiplicity label `(j0, j∞, {(j¹, j²)})` of a stratum.
///
/// `j0`/`jinf` are the orders at `0` and `∞` shared by both polynomials;
/// each root pair gives the orders of `f` and `g` at one finite common root.
/// Invariant: root pairs are sorted in descending order and positive, so
/// equal multisets compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLabel", into = "RawLabel")]
pub struct StratumLabel {
    j0: u32,
    jinf: u32,
    roots: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct RawLabel {
    j0: u32,
    jinf: u32,
    roots: Vec<(u32, u32)>,
}

impl TryFrom<RawLabel> for StratumLabel {
    type Error = LabelError;
    fn try_from(r: RawLabel) -> Result<Self, LabelError> {
        StratumLabel::new(r.j0, r.jinf, r.roots)
    }
}

impl From<StratumLabel> for RawLabel {
    fn from(l: StratumLabel) -> Self {
        RawLabel { j0: l.j0, jinf: l.jinf, roots: l.roots }
    }
}

impl StratumLabel {
    pub fn new(j0: u32, jinf: u32, mut roots: Vec<(u32, u32)>) -> Result<Self, LabelError> {
        if roots.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(LabelError::ZeroMultiplicity);
        }
        roots.sort_unstable_by(|a, b| b.cmp(a));
        Ok(StratumLabel { j0, jinf, roots })
    }

    /// Label with equal orders `(j, j)` at each finite root.
    pub fn symmetric(j0: u32, jinf: u32, js: &[u32]) -> Result<Self, LabelError> {
        Self::new(j0, jinf, js.iter().map(|&j| (j, j)).collect())
    }

    pub fn j0(&self) -> u32 {
        self.j0
    }

    pub fn jinf(&self) -> u32 {
        self.jinf
    }

    pub fn roots(&self) -> &[(u32, u32)] {
        &self.roots
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.roots.iter().all(|(a, b)| a == b)
    }

    /// Replaces each root pair `(a, b)` by `(min, min)`.
    pub fn symmetrized(&self) -> StratumLabel {
        let roots = self.roots.iter().map(|&(a, b)| (a.min(b), a.min(b))).collect();
        StratumLabel::new(self.j0, self.jinf, roots).expect("orders stay positive")
    }

    /// `2 j0 + 2 j∞ + Σ (j¹ + j² - 1)`.
    pub fn expected_codim(&self) -> u32 {
        2 * self.j0 + 2 * self.jinf + self.roots.iter().map(|(a, b)| a + b - 1).sum::<u32>()
    }

    /// `j0 + j∞ + Σ max(j¹, j²)`, the size used to bound exhaustive
    /// enumeration.
    pub fn total_weight(&self) -> u32 {
        self.j0 + self.jinf + self.roots.iter().map(|&(a, b)| a.max(b)).sum::<u32>()
    }

    /// Every label of total weight at most `w`, each exactly once.
    pub fn all_up_to(w: u32) -> Vec<StratumLabel> {
        fn multisets(budget: u32, max: (u32, u32), cur: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
            out.push(cur.clone());
            for a in 1..=budget {
                for b in 1..=budget {
                    // Non-increasing sequence keeps each multiset once.
                    if (a, b) <= max && a.max(b) <= budget {
                        cur.push((a, b));
                        multisets(budget - a.max(b), (a, b), cur, out);
                        cur.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        for j0 in 0..=w {
            for jinf in 0..=w - j0 {
                let mut roots = Vec::new();
                multisets(w - j0 - jinf, (u32::MAX, u32::MAX), &mut Vec::new(), &mut roots);
                out.extend(roots.into_iter().map(|r| StratumLabel::new(j0, jinf, r).expect("positive orders")));
            }
        }
        out
    }

    /// Number of linear conditions imposed on side `i ∈ {1, 2}`.
    pub fn side_conditions(&self, i: usize) -> u32 {
        self.side_js(i).iter().sum::<u32>() + self.j0 + self.jinf
    }

    /// Root orders for side `i`, in label order.
    pub fn side_js(&self, i: usize) -> Vec<u32> {
        self.roots.iter().map(|&(a, b)| if i == 1 { a } else { b }).collect()
    }

    /// Parses `N(1,1)`, `N(2,1;1,1)`, `N_1^0`, `N_0^1(1)`, `M(2)` and the
    /// braced forms `N_{1}^{0}`.
    pub fn parse(text: &str) -> Result<Self, LabelError> {
        let err = || LabelError::Parse(text.to_string());
        let t: String = text.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
        let rest = t.strip_prefix('N').or_else(|| t.strip_prefix('M')).ok_or_else(err)?;
        let (head, body) = match rest.find('(') {
            Some(i) => {
                let body = rest[i..].strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(err)?;
                (&rest[..i], Some(body))
            }
            None => (rest, None),
        };
        let (mut j0, mut jinf) = (0, 0);
        let mut h = head;
        while !h.is_empty() {
            let (kind, tail) = h.split_at(1);
            let end = tail.find(['_', '^']).unwrap_or(tail.len());
            let v: u32 = tail[..end].parse().map_err(|_| err())?;
            match kind {
                "_" => j0 = v,
                "^" => jinf = v,
                _ => return Err(err()),
            }
            h = &tail[end..];
        }
        let nums = |s: &str| -> Result<Vec<u32>, LabelError> {
            if s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',').map(|x| x.parse().map_err(|_| err())).collect()
        };
        let roots = match body {
            None => Vec::new(),
            Some(b) => match b.split_once(';') {
                Some((top, bottom)) => {
                    let (a, c) = (nums(top)?, nums(bottom)?);
                    if a.len() != c.len() {
                        return Err(LabelError::RowMismatch);
                    }
                    a.into_iter().zip(c).collect()
                }
                None => nums(b)?.into_iter().map(|j| (j, j)).collect(),
            },
        };
        StratumLabel::new(j0, jinf, roots)
    }
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N")?;
        if self.j0 > 0 || self.jinf > 0 {
            write!(f, "_{}^{}", self.j0, self.jinf)?;
        }
        let join = |v: Vec<u32>| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        if self.roots.is_empty() {
            if self.j0 == 0 && self.jinf == 0 {
                write!(f, "()")?;
            }
            return Ok(());
        }
        if self.is_symmetric() {
            write!(f, "({})", join(self.side_js(1)))
        } else {
            write!(f, "({};{})", join(self.side_js(1)), join(self.side_js(2)))
        }
    }
}

impl fmt::Debug for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Partial order on labels: `q ≥ p` when some map `r` from the points of
/// `p` to the points of `q`, fixing `0` and `∞` and sending finite roots
/// anywhere (not necessarily onto), satisfies `Σ_{r(i) = s} j_i ≤ g_s` for
/// every point `s` of `q` and both orders.
pub fn label_geq(q: &StratumLabel, p: &StratumLabel) -> bool {
    if p.j0 > q.j0 || p.jinf > q.jinf {
        return false;
    }
    // Remaining capacity per target: index 0 is zero, 1 is infinity, then q's roots.
    let mut cap: Vec<(u32, u32)> = vec![(q.j0 - p.j0, q.j0 - p.j0), (q.jinf - p.jinf, q.jinf - p.jinf)];
    cap.extend(q.roots.iter().copied());
    fn assign(items: &[(u32, u32)], cap: &mut [(u32, u32)]) -> bool {
        let Some((&(a, b), rest)) = items.split_first() else { return true };
        for s in 0..cap.len() {
            if cap[s].0 >= a && cap[s].1 >= b {
                cap[s].0 -= a;
                cap[s].1 -= b;
                let ok = assign(rest, cap);
                cap[s].0 += a;
                cap[s].1 += b;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    assign(&p.roots, &mut cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> StratumLabel {
        StratumLabel::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(l("N(1,1,1)").to_string(), "N(1,1,1)");
        assert_eq!(l("N(2,1;1,1)").roots(), &[(2, 1), (1, 1)]);
        assert_eq!(l("N_1^0").j0(), 1);
        assert_eq!(l("N_0^1(1)").jinf(), 1);
        assert_eq!(l("N^{1}_{0}(1)"), l("N_0^1(1)"));
        assert_eq!(l("N(1,2;1,1)"), l("N(2,1;1,1)"));
        assert!(StratumLabel::parse("N(1,2;1)").is_err());
        assert!(StratumLabel::parse("X(1)").is_err());
        assert!(StratumLabel::parse("N(0)").is_err());
    }

    #[test]
    fn expected_codims_of_low_subsets() {
        let cases = [
            ("N(1)", 1),
            ("N(1,1)", 2),
            ("N_1^0", 2),
            ("N_0^1", 2),
            ("N(2)", 3),
            ("N(1,1,1)", 3),
            ("N_0^1(1)", 3),
            ("N_1^0(1)", 3),
            ("N(2,1;1,1)", 3),
            ("N(1,1;2,1)", 3),
        ];
        for (s, c) in cases {
            assert_eq!(l(s).expected_codim(), c, "{s}");
        }
    }

    #[test]
    fn order_examples() {
        let p = l("N(1,1)");
        assert!(label_geq(&l("N_1^0(1)"), &p));
        assert!(label_geq(&l("N(2)"), &p));
        assert!(!label_geq(&l("N(1)"), &p));
        assert!(label_geq(&p, &l("N(1)")));
        assert!(!label_geq(&l("N(2,1;1,1)"), &l("N(2,2;1,1)")));
        assert!(label_geq(&l("N(2,2;1,1)"), &l("N(2,1;1,1)")));
    }

    #[test]
    fn enumeration_is_exhaustive_and_distinct() {
        let all = StratumLabel::all_up_to(3);
        let set: std::collections::BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(|x| x.total_weight() <= 3));
        assert!(set.contains(&l("N(2,1;1,1)")) && set.contains(&l("N_1^1(1)")) && set.contains(&l("N()")));
        assert_eq!(StratumLabel::all_up_to(1).len(), 4);
    }

    #[test]
    fn json_shape() {
        let j = serde_json::to_string(&l("N_1^0(2,1)")).unwrap();
        assert_eq!(j, r#"{"j0":1,"jinf":0,"roots":[[2,2],[1,1]]}"#);
        assert!(serde_json::from_str::<StratumLabel>(r#"{"j0":0,"jinf":0,"roots":[[0,1]]}"#).is_err());
    }
}
