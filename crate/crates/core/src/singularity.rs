//! Plane-curve germs cut from a resultant by a 2-plane, classified by
//! their lowest homogeneous form and, for a single tangent, the first edge of
//! the Newton polygon.

use crate::exact::{exact_rank, format_rational, Rational, UniPoly};
use crate::mpoly::{var_list, Coef, MPoly, MPolyError, MPolyJson};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GermError {
    #[error("slice directions are linearly dependent")]
    DependentDirections,
    #[error("direction has length {got}, expected {want}")]
    DirectionLength { got: usize, want: usize },
    #[error("the germ polynomial is zero")]
    ZeroGerm,
    #[error(transparent)]
    Poly(#[from] MPolyError),
}

/// Polynomial in local coordinates `(s, t)` centred at the base point.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneGerm {
    poly: MPoly<Rational>,
}

impl PlaneGerm {
    /// `poly` must be in exactly two variables, read as `(s, t)`.
    pub fn new(poly: MPoly<Rational>) -> Result<Self, GermError> {
        if poly.vars().len() != 2 {
            return Err(GermError::DirectionLength { got: poly.vars().len(), want: 2 });
        }
        Ok(PlaneGerm { poly })
    }

    pub fn from_terms(terms: &[((u32, u32), Rational)]) -> Self {
        let poly = MPoly::from_terms(var_list(&["s", "t"]), terms.iter().map(|((i, j), c)| (vec![*i, *j], c.clone())))
            .expect("two exponents per term");
        PlaneGerm { poly }
    }

    pub fn poly(&self) -> &MPoly<Rational> {
        &self.poly
    }

    pub fn to_json(&self) -> MPolyJson {
        self.poly.to_json()
    }

    /// Lowest total degree and the homogeneous part of that degree.
    pub fn lowest_form(&self) -> Option<(u32, Vec<(u32, Rational)>)> {
        let m = self.poly.terms().keys().map(|e| e[0] + e[1]).min()?;
        let form = self.poly.terms().iter().filter(|(e, _)| e[0] + e[1] == m).map(|(e, c)| (e[0], c.clone())).collect();
        Some((m, form))
    }

    /// Linear substitution `s ↦ a s + b t`, `t ↦ c s + d t`.
    pub fn linear_change(&self, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> PlaneGerm {
        let vars = var_list(&["s", "t"]);
        let s = MPoly::var(vars.clone(), 0);
        let t = MPoly::var(vars, 1);
        let img_s = s.scale(a).add(&t.scale(b));
        let img_t = s.scale(c).add(&t.scale(d));
        PlaneGerm { poly: self.poly.compose(&[img_s, img_t]) }
    }
}

/// Restriction of `r` to `point + s·dir1 + t·dir2`; directions are given in
/// the variable order of `r`.
pub fn slice_germ<C: Coef>(
    r: &MPoly<C>,
    point: &BTreeMap<String, Rational>,
    dir1: &[Rational],
    dir2: &[Rational],
) -> Result<PlaneGerm, GermError> {
    let n = r.vars().len();
    for d in [dir1, dir2] {
        if d.len() != n {
            return Err(GermError::DirectionLength { got: d.len(), want: n });
        }
    }
    if exact_rank(&[dir1.to_vec(), dir2.to_vec()]) < 2 {
        return Err(GermError::DependentDirections);
    }
    let vars = var_list(&["s", "t"]);
    let images = r
        .vars()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let p = point.get(v).cloned().ok_or_else(|| MPolyError::UnknownVariable(v.clone()))?;
            Ok(MPoly::constant(vars.clone(), p)
                .add(&MPoly::var(vars.clone(), 0).scale(&dir1[i]))
                .add(&MPoly::var(vars.clone(), 1).scale(&dir2[i])))
        })
        .collect::<Result<Vec<_>, GermError>>()?;
    Ok(PlaneGerm { poly: r.compose(&images) })
}

/// Singularity type of a plane germ at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag")]
pub enum GermClass {
    NotOnCurve,
    Smooth,
    /// Two distinct tangents at a double point.
    NodeA1,
    /// `m ≥ 3` distinct tangents.
    OrdinaryMultiple { m: u32 },
    /// One tangent of multiplicity `m`; `slope` is the first Newton-polygon
    /// edge slope once the tangent is `t = 0` (the cusp gives 2/3).
    UniTangent {
        m: u32,
        #[serde(serialize_with = "ser_rational")]
        slope: Rational,
    },
    Other,
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// `L(s, 1)` of a binary form given as `(power of s, coeff)` and its
/// multiplicity along `t = 0`.
fn dehomogenize(m: u32, form: &[(u32, Rational)]) -> (UniPoly, u32) {
    let mut cs = vec![Rational::zero(); m as usize + 1];
    for (i, c) in form {
        cs[*i as usize] = c.clone();
    }
    let u = UniPoly::new(cs);
    let deg = u.degree().unwrap_or(0) as u32;
    (u, m - deg)
}

pub fn classify_germ(g: &PlaneGerm) -> Result<GermClass, GermError> {
    let (m, form) = g.lowest_form().ok_or(GermError::ZeroGerm)?;
    match m {
        0 => return Ok(GermClass::NotOnCurve),
        1 => return Ok(GermClass::Smooth),
        _ => {}
    }
    let (u, t_mult) = dehomogenize(m, &form);
    if t_mult <= 1 && u.is_squarefree() {
        return Ok(if m == 2 { GermClass::NodeA1 } else { GermClass::OrdinaryMultiple { m } });
    }
    let finite_tangents = u.squarefree_part().degree().unwrap_or(0);
    let tangents = finite_tangents + usize::from(t_mult > 0);
    if tangents != 1 {
        return Ok(GermClass::Other);
    }
    // Move the tangent to t = 0.
    let aligned = if t_mult == m {
        g.clone()
    } else {
        // L = c (s - r t)^m: substitute s ↦ s + r t, then swap s and t.
        let r = -u.coeff(m as usize - 1) / (u.lead() * Rational::from_integer(m.into()));
        let shifted = g.linear_change(&Rational::one(), &r, &Rational::zero(), &Rational::one());
        shifted.linear_change(&Rational::zero(), &Rational::one(), &Rational::one(), &Rational::zero())
    };
    let slope = aligned
        .poly
        .terms()
        .keys()
        .filter(|e| e[1] < m && e[0] > 0)
        .map(|e| Rational::new((m - e[1]).into(), e[0].into()))
        .max();
    Ok(match slope {
        Some(slope) => GermClass::UniTangent { m, slope },
        None => GermClass::Other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resultant::resultant_poly;
    use crate::support::SupportPair;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn germ(terms: &[((u32, u32), i64)]) -> PlaneGerm {
        PlaneGerm::from_terms(&terms.iter().map(|(e, c)| (*e, q(*c))).collect::<Vec<_>>())
    }

    #[test]
    fn basic_types() {
        assert_eq!(classify_germ(&germ(&[((0, 0), 1), ((1, 0), 1)])).unwrap(), GermClass::NotOnCurve);
        assert_eq!(classify_germ(&germ(&[((1, 0), 1), ((0, 2), 1)])).unwrap(), GermClass::Smooth);
        assert_eq!(classify_germ(&germ(&[((1, 1), 1)])).unwrap(), GermClass::NodeA1);
        assert_eq!(classify_germ(&germ(&[((3, 0), 1), ((0, 3), -1)])).unwrap(), GermClass::OrdinaryMultiple { m: 3 });
        let cusp = classify_germ(&germ(&[((0, 2), 1), ((3, 0), -1)])).unwrap();
        assert_eq!(cusp, GermClass::UniTangent { m: 2, slope: Rational::new(2.into(), 3.into()) });
        assert_eq!(serde_json::to_string(&cusp).unwrap(), r#"{"tag":"UniTangent","m":2,"slope":"2/3"}"#);
        assert!(classify_germ(&germ(&[])).is_err());
    }

    #[test]
    fn tilted_cusp_is_realigned() {
        // (s - t)^2 - t^3
        let g = germ(&[((2, 0), 1), ((1, 1), -2), ((0, 2), 1), ((0, 3), -1)]);
        assert_eq!(classify_germ(&g).unwrap(), GermClass::UniTangent { m: 2, slope: Rational::new(2.into(), 3.into()) });
        // s^2 alone is not a reduced curve
        assert_eq!(classify_germ(&germ(&[((2, 0), 1)])).unwrap(), GermClass::Other);
        // tacnode t^2 - s^4: one tangent, slope 1/2
        let tac = classify_germ(&germ(&[((0, 2), 1), ((4, 0), -1)])).unwrap();
        assert_eq!(tac, GermClass::UniTangent { m: 2, slope: Rational::new(1.into(), 2.into()) });
    }

    fn formula_one() -> MPoly<num_bigint::BigInt> {
        resultant_poly(&SupportPair::from_slices(&[0, 1, 3], &[0, 3]).unwrap(), 16).unwrap()
    }

    fn at(vals: &[(&str, i64)]) -> BTreeMap<String, Rational> {
        vals.iter().map(|(k, v)| (k.to_string(), q(*v))).collect()
    }

    fn axis(r: &MPoly<num_bigint::BigInt>, name: &str) -> Vec<Rational> {
        r.vars().iter().map(|v| if v == name { q(1) } else { q(0) }).collect()
    }

    #[test]
    fn three_lines_on_the_singular_curve() {
        let r = formula_one();
        // a = f3, b = f1, c = f0, d = g3, e = g0
        let p = at(&[("f3", 1), ("f1", 0), ("f0", 1), ("g3", 1), ("g0", 1)]);
        let g = slice_germ(&r, &p, &axis(&r, "f1"), &axis(&r, "f0")).unwrap();
        let (m, _) = g.lowest_form().unwrap();
        assert_eq!(m, 3);
        assert_eq!(g.poly().num_terms(), 2, "{}", g.poly());
        assert_eq!(classify_germ(&g).unwrap(), GermClass::OrdinaryMultiple { m: 3 });
    }

    #[test]
    fn cusp_where_leading_coefficients_vanish() {
        let r = formula_one();
        let p = at(&[("f3", 0), ("f1", 2), ("f0", 3), ("g3", 0), ("g0", 5)]);
        let g = slice_germ(&r, &p, &axis(&r, "f3"), &axis(&r, "g3")).unwrap();
        assert_eq!(classify_germ(&g).unwrap(), GermClass::UniTangent { m: 2, slope: Rational::new(2.into(), 3.into()) });
    }

    #[test]
    fn node_of_the_linear_resultant() {
        let r = resultant_poly(&SupportPair::from_slices(&[0, 1], &[0, 1]).unwrap(), 16).unwrap();
        let p = at(&[("f0", 0), ("f1", 0), ("g0", 0), ("g1", 0)]);
        let g = slice_germ(&r, &p, &axis(&r, "f1"), &axis(&r, "g0")).unwrap();
        assert_eq!(classify_germ(&g).unwrap(), GermClass::NodeA1);
        assert_eq!(slice_germ(&r, &p, &axis(&r, "f1"), &axis(&r, "f1")), Err(GermError::DependentDirections));
    }
}
