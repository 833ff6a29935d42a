//! Membership of a coefficient pair in strata and filtration subsets.

use super::StratumLabel;
use crate::laurent::{common_roots_tol, LaurentError, LaurentPoly, ProjPoint, RootArith, RootRecord, DEFAULT_TOL};

/// General label of the stratum containing `(f, g)`: pair orders at `0` and
/// `∞`, and one `(ord1, ord2)` per finite common root.
pub fn actual_label<F: RootArith>(f: &LaurentPoly<F>, g: &LaurentPoly<F>) -> Result<StratumLabel, LaurentError> {
    actual_label_tol(f, g, DEFAULT_TOL)
}

pub fn actual_label_tol<F: RootArith>(f: &LaurentPoly<F>, g: &LaurentPoly<F>, tol: f64) -> Result<StratumLabel, LaurentError> {
    Ok(label_of_roots(&common_roots_tol(f, g, tol)?))
}

pub fn label_of_roots(roots: &[RootRecord]) -> StratumLabel {
    let (mut j0, mut jinf, mut finite) = (0, 0, Vec::new());
    for r in roots {
        match r.point {
            ProjPoint::Zero => j0 = r.pair_multiplicity() as u32,
            ProjPoint::Infinity => jinf = r.pair_multiplicity() as u32,
            ProjPoint::Finite(_) => finite.push((r.ord1 as u32, r.ord2 as u32)),
        }
    }
    StratumLabel::new(j0, jinf, finite).expect("orders of common roots are positive")
}

/// Symmetric label: the per-root minimum of the two orders.
pub fn actual_symmetric_label<F: RootArith>(f: &LaurentPoly<F>, g: &LaurentPoly<F>) -> Result<StratumLabel, LaurentError> {
    Ok(actual_label(f, g)?.symmetrized())
}

/// `(f, g) ∈ N(l)`: both polynomials vanish to order `≥ j0` at `0` and
/// `≥ jinf` at `∞`, and the root pairs of `l` match injectively to distinct
/// finite common roots with at least the required orders.
pub fn in_filtration_subset<F: RootArith>(f: &LaurentPoly<F>, g: &LaurentPoly<F>, l: &StratumLabel) -> Result<bool, LaurentError> {
    in_filtration_subset_tol(f, g, l, DEFAULT_TOL)
}

pub fn in_filtration_subset_tol<F: RootArith>(
    f: &LaurentPoly<F>,
    g: &LaurentPoly<F>,
    l: &StratumLabel,
    tol: f64,
) -> Result<bool, LaurentError> {
    let roots = common_roots_tol(f, g, tol)?;
    let j0 = l.j0() as usize;
    let jinf = l.jinf() as usize;
    if f.ord_zero(tol).min(g.ord_zero(tol)) < j0 || f.ord_infinity(tol).min(g.ord_infinity(tol)) < jinf {
        return Ok(false);
    }
    let finite: Vec<(usize, usize)> = roots.iter().filter(|r| r.point.is_finite()).map(|r| (r.ord1, r.ord2)).collect();
    let needs: Vec<(usize, usize)> = l.roots().iter().map(|&(a, b)| (a as usize, b as usize)).collect();
    Ok(max_matching(&needs, &finite) == needs.len())
}

/// Maximum bipartite matching (augmenting paths) of requirements to roots
/// that dominate them coordinatewise.
fn max_matching(needs: &[(usize, usize)], roots: &[(usize, usize)]) -> usize {
    fn augment(i: usize, needs: &[(usize, usize)], roots: &[(usize, usize)], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for (r, &(o1, o2)) in roots.iter().enumerate() {
            if seen[r] || o1 < needs[i].0 || o2 < needs[i].1 {
                continue;
            }
            seen[r] = true;
            if owner[r].is_none() || augment(owner[r].unwrap(), needs, roots, seen, owner) {
                owner[r] = Some(i);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; roots.len()];
    (0..needs.len()).filter(|&i| augment(i, needs, roots, &mut vec![false; roots.len()], &mut owner)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::support::SupportSet;

    fn poly(support: &[i64], c: &[i64]) -> LaurentPoly<Rational> {
        LaurentPoly::new(
            SupportSet::new(support.iter().copied()).unwrap(),
            c.iter().map(|&v| Rational::from_integer(v.into())).collect(),
        )
        .unwrap()
    }

    fn lab(s: &str) -> StratumLabel {
        StratumLabel::parse(s).unwrap()
    }

    #[test]
    fn labels_of_small_pairs() {
        let f = poly(&[0, 1, 2], &[1, 0, 1]);
        let g = poly(&[0, 1, 2], &[2, 0, 1]);
        assert_eq!(actual_label(&f, &g).unwrap(), StratumLabel::new(0, 0, vec![]).unwrap());
        let f = poly(&[0, 1, 2], &[0, 1, 1]);
        let g = poly(&[0, 1, 2], &[0, 2, 1]);
        assert_eq!(actual_label(&f, &g).unwrap(), StratumLabel::new(1, 0, vec![]).unwrap());
        let f = poly(&[0, 1, 2], &[1, -2, 1]);
        let g = poly(&[0, 1, 2], &[0, -1, 1]);
        assert_eq!(actual_label(&f, &g).unwrap(), StratumLabel::new(0, 0, vec![(2, 1)]).unwrap());
        assert_eq!(actual_symmetric_label(&f, &g).unwrap(), lab("N(1)"));
    }

    #[test]
    fn membership_by_matching() {
        let f = poly(&[0, 1, 2], &[1, -2, 1]);
        let g = poly(&[0, 1, 2], &[0, -1, 1]);
        assert!(in_filtration_subset(&f, &g, &StratumLabel::new(0, 0, vec![(2, 1)]).unwrap()).unwrap());
        assert!(!in_filtration_subset(&f, &g, &StratumLabel::new(0, 0, vec![(1, 2)]).unwrap()).unwrap());
        assert!(in_filtration_subset(&f, &g, &lab("N(1)")).unwrap());
    }

    #[test]
    fn boundary_roots_do_not_fill_finite_slots() {
        // common roots at 0 and at 1
        let f = poly(&[0, 1, 2], &[0, -1, 1]);
        let g = poly(&[0, 1, 2, 3], &[0, 2, -3, 1]);
        assert_eq!(actual_label(&f, &g).unwrap(), StratumLabel::new(1, 0, vec![(1, 1)]).unwrap());
        assert!(in_filtration_subset(&f, &g, &lab("N_1^0(1)")).unwrap());
        assert!(in_filtration_subset(&f, &g, &lab("N(1)")).unwrap());
        assert!(!in_filtration_subset(&f, &g, &lab("N(1,1)")).unwrap());
    }

    #[test]
    fn matching_needs_distinct_roots() {
        assert_eq!(max_matching(&[(2, 2), (1, 1)], &[(3, 3)]), 1);
        assert_eq!(max_matching(&[(2, 1), (1, 1)], &[(1, 1), (2, 1)]), 2);
    }
}
