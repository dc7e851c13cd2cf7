//! Plane family, Segre variety and the subring substructures.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{ExactField, Scalar};
use crate::grassmann::PluckerVector;
use crate::linalg;

use super::params::{param_x, XParams};
use super::quadrics::{QuadricGroup, QuadricSystem};
use super::{restrict, RestrictedPoint, P356, P456};

/// `γ(u, v) = F q1(u, v) + F q2(u, v) + F r(u, v)` where
///
/// ```text
/// q_i(u, v) = u^2 e_i35 + u v (e_i36 + e_i45) + v^2 e_i46,   i = 1, 2
/// r(u, v)   = u e356 + v e456
/// ```
///
/// The points `F q_i(u, v)` run through the conic `c_i`, the points
/// `F r(u, v)` through the line `E356 ∨ E456`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneGamma<S> {
    pub u: S,
    pub v: S,
    pub q1: PluckerVector<S>,
    pub q2: PluckerVector<S>,
    pub r: PluckerVector<S>,
}

fn conic_vector<S: Scalar>(i: usize, u: &S, v: &S) -> PluckerVector<S> {
    let field = u.field();
    let mut out = PluckerVector::zero(&field);
    let e = |j, k| crate::grassmann::pos(i, j, k);
    out.0[e(3, 5)] = u.mul(u);
    out.0[e(3, 6)] = u.mul(v);
    out.0[e(4, 5)] = u.mul(v);
    out.0[e(4, 6)] = v.mul(v);
    out
}

pub fn gamma_plane<S: Scalar>(u: &S, v: &S) -> Result<PlaneGamma<S>> {
    if u.is_zero() && v.is_zero() {
        return Err(Error::InvalidParams("(u, v) = (0, 0)".into()));
    }
    let field = u.field();
    let mut r = PluckerVector::zero(&field);
    r.0[crate::grassmann::pos(3, 5, 6)] = u.clone();
    r.0[crate::grassmann::pos(4, 5, 6)] = v.clone();
    Ok(PlaneGamma {
        u: u.clone(),
        v: v.clone(),
        q1: conic_vector(1, u, v),
        q2: conic_vector(2, u, v),
        r,
    })
}

impl<S: Scalar> PlaneGamma<S> {
    /// The spanning vectors in restricted coordinates.
    pub fn spanning_points(&self) -> [RestrictedPoint<S>; 3] {
        [&self.q1, &self.q2, &self.r].map(|p| restrict(p).expect("spanning vectors lie in the ambient subspace"))
    }

    /// Vector-space dimension of the span.
    pub fn vector_dim(&self) -> usize {
        let rows: Vec<Vec<S>> = [&self.q1, &self.q2, &self.r].iter().map(|p| p.0.to_vec()).collect();
        linalg::rank(&rows)
    }

    /// Normalized projective points of the plane over a finite field.
    pub fn points(&self) -> Result<BTreeSet<RestrictedPoint<S>>> {
        let field = self.u.field();
        let [q1, q2, r] = self.spanning_points();
        linalg::projective_points(&field, 3)?
            .into_iter()
            .map(|g| q1.scale(&g[0]).add(&q2.scale(&g[1])).add(&r.scale(&g[2])).normalize())
            .collect()
    }
}

/// One plane per point `(u : v)` of the projective line.
pub fn plane_family<F: ExactField>(field: &F) -> Result<Vec<PlaneGamma<F::Elem>>> {
    linalg::projective_points(field, 2)?
        .iter()
        .map(|uv| gamma_plane(&uv[0], &uv[1]))
        .collect()
}

/// `(u1, u2, u3) ≠ 0`, `(v1, v2) ≠ 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SegreParams<S> {
    pub u: [S; 3],
    pub v: [S; 2],
}

/// `p_i35 = u1 v_i, p_i36 = p_i45 = u2 v_i, p_i46 = u3 v_i`, `p356 = p456 = 0`.
pub fn segre_param<S: Scalar>(sp: &SegreParams<S>) -> Result<RestrictedPoint<S>> {
    if sp.u.iter().all(Scalar::is_zero) || sp.v.iter().all(Scalar::is_zero) {
        return Err(Error::InvalidParams("zero Segre factor".into()));
    }
    let field = sp.u[0].field();
    let mut p = RestrictedPoint::zero(&field);
    for (i, vi) in sp.v.iter().enumerate() {
        for (j, uj) in sp.u.iter().enumerate() {
            p.0[3 * i + j] = uj.mul(vi);
        }
    }
    Ok(p)
}

/// The segre-group quadrics vanish and `p356 = p456 = 0`.
pub fn segre_membership<S: Scalar>(p: &RestrictedPoint<S>) -> bool {
    !p.is_zero()
        && p.0[P356].is_zero()
        && p.0[P456].is_zero()
        && QuadricSystem::standard().group(QuadricGroup::Segre).is_satisfied(p)
}

/// Normalized image of the Segre parametrization over a finite field.
pub fn segre_points<F: ExactField>(field: &F) -> Result<BTreeSet<RestrictedPoint<F::Elem>>> {
    let us = linalg::projective_points(field, 3)?;
    let vs = linalg::projective_points(field, 2)?;
    let mut out = BTreeSet::new();
    for u in &us {
        for v in &vs {
            let sp = SegreParams {
                u: [u[0].clone(), u[1].clone(), u[2].clone()],
                v: [v[0].clone(), v[1].clone()],
            };
            out.insert(segre_param(&sp)?.normalize()?);
        }
    }
    Ok(out)
}

/// Projective solutions of [`segre_membership`], by brute force.
pub fn segre_solutions<F: ExactField>(field: &F) -> Result<BTreeSet<RestrictedPoint<F::Elem>>> {
    Ok(linalg::projective_points(field, 8)?
        .into_iter()
        .map(|v| RestrictedPoint(v.try_into().expect("eight")))
        .filter(segre_membership)
        .collect())
}

/// Image of the scalar-matrix subring: parameters `(a, b, a, b, 0, 0)`,
/// giving `(-a^3, -a^2 b, -a b^2, -a^2 b, -a b^2, -b^3, 0, 0)`.
pub fn twisted_cubic_param<S: Scalar>(a: &S, b: &S) -> Result<RestrictedPoint<S>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidParams("(a, b) = (0, 0)".into()));
    }
    let z = a.field().zero();
    param_x(&XParams::from_array([a.clone(), b.clone(), a.clone(), b.clone(), z.clone(), z]))
}

/// Image of the dual-number subring: parameters `(a, b, a, b, a12, b12)`.
///
/// With `m = a12 b - b12 a` the result is
/// `twisted_cubic_param(a, b) + m · (a e356 + b e456)`.
pub fn dual_numbers_param<S: Scalar>(a: &S, b: &S, a12: &S, b12: &S) -> Result<RestrictedPoint<S>> {
    param_x(&XParams::from_array([
        a.clone(),
        b.clone(),
        a.clone(),
        b.clone(),
        a12.clone(),
        b12.clone(),
    ]))
}

/// Image of the double-number subring: parameters `(a11, b11, a22, b22, 0, 0)`,
/// a point of the Segre variety on the line `q1(a22, b22) ∨ q2(a22, b22)`.
pub fn double_numbers_param<S: Scalar>(a11: &S, b11: &S, a22: &S, b22: &S) -> Result<RestrictedPoint<S>> {
    let z = a11.field().zero();
    let xp = XParams::from_array([a11.clone(), b11.clone(), a22.clone(), b22.clone(), z.clone(), z]);
    if !xp.is_unimodular() {
        return Err(Error::InvalidParams("(a11, b11) = 0 or (a22, b22) = 0".into()));
    }
    param_x(&xp)
}

/// Normalized twisted-cubic points over a finite field, one per `(a : b)`.
pub fn twisted_cubic_points<F: ExactField>(field: &F) -> Result<BTreeSet<RestrictedPoint<F::Elem>>> {
    linalg::projective_points(field, 2)?
        .iter()
        .map(|ab| twisted_cubic_param(&ab[0], &ab[1])?.normalize())
        .collect()
}

/// Normalized points of the dual-number ruled surface.
pub fn dual_surface_points<F: ExactField>(field: &F) -> Result<BTreeSet<RestrictedPoint<F::Elem>>> {
    let lines = linalg::projective_points(field, 2)?;
    let pairs = linalg::affine_points(field, 2)?;
    let mut out = BTreeSet::new();
    for ab in &lines {
        for c in &pairs {
            if let Ok(p) = dual_numbers_param(&ab[0], &ab[1], &c[0], &c[1]) {
                out.insert(p.normalize()?);
            }
        }
    }
    Ok(out)
}

/// Normalized points of the tube: `(a11 : b11)` and `(a22 : b22)` both range
/// over the projective line.
pub fn tube_points<F: ExactField>(field: &F) -> Result<BTreeSet<RestrictedPoint<F::Elem>>> {
    let line = linalg::projective_points(field, 2)?;
    let mut out = BTreeSet::new();
    for d1 in &line {
        for d2 in &line {
            out.insert(double_numbers_param(&d1[0], &d1[1], &d2[0], &d2[1])?.normalize()?);
        }
    }
    Ok(out)
}

/// Normalized points of the tube generator over `(u : v)`: the line joining
/// `q1(u, v)` and `q2(u, v)`.
pub fn tube_generator<F: ExactField>(field: &F, u: &F::Elem, v: &F::Elem) -> Result<BTreeSet<RestrictedPoint<F::Elem>>> {
    let plane = gamma_plane(u, v)?;
    let [q1, q2, _] = plane.spanning_points();
    linalg::projective_points(field, 2)?
        .iter()
        .map(|g| q1.scale(&g[0]).add(&q2.scale(&g[1])).normalize())
        .collect()
}

/// Rank of a set of vectors.
pub fn span_rank<S: Scalar>(points: &BTreeSet<RestrictedPoint<S>>) -> usize {
    let rows: Vec<Vec<S>> = points.iter().map(|p| p.0.to_vec()).collect();
    linalg::rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField, RationalField};
    use crate::variety::{enumerate_variety_points, is_on_variety, segre_param};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn pv<F: ExactField>(f: &F, entries: &[(usize, usize, usize, i64)]) -> PluckerVector<F::Elem> {
        let mut out = PluckerVector::zero(f);
        for &(i, j, k, c) in entries {
            out.0[crate::grassmann::pos(i, j, k)] = f.from_int(c);
        }
        out
    }

    #[test]
    fn gamma_examples() {
        let f = gf(5);
        let (zero, one) = (f.zero(), f.one());
        let g = gamma_plane(&one, &zero).unwrap();
        assert_eq!((g.q1.clone(), g.q2.clone(), g.r.clone()), (pv(&f, &[(1, 3, 5, 1)]), pv(&f, &[(2, 3, 5, 1)]), pv(&f, &[(3, 5, 6, 1)])));
        let g = gamma_plane(&zero, &one).unwrap();
        assert_eq!((g.q1.clone(), g.q2.clone(), g.r.clone()), (pv(&f, &[(1, 4, 6, 1)]), pv(&f, &[(2, 4, 6, 1)]), pv(&f, &[(4, 5, 6, 1)])));
        let g = gamma_plane(&one, &one).unwrap();
        assert_eq!(g.q1, pv(&f, &[(1, 3, 5, 1), (1, 3, 6, 1), (1, 4, 5, 1), (1, 4, 6, 1)]));
        assert_eq!(g.q2, pv(&f, &[(2, 3, 5, 1), (2, 3, 6, 1), (2, 4, 5, 1), (2, 4, 6, 1)]));
        assert_eq!(g.r, pv(&f, &[(3, 5, 6, 1), (4, 5, 6, 1)]));
        assert_eq!(g.vector_dim(), 3);
        assert!(gamma_plane(&zero, &zero).is_err());
    }

    #[test]
    fn planes_cover_the_variety_disjointly() {
        for p in [2, 3] {
            let f = gf(p);
            let variety = enumerate_variety_points(&f).unwrap();
            let planes = plane_family(&f).unwrap();
            assert_eq!(planes.len() as u64, p + 1);
            let mut union = BTreeSet::new();
            let mut total = 0;
            for g in &planes {
                assert_eq!(g.vector_dim(), 3);
                let pts = g.points().unwrap();
                assert_eq!(pts.len() as u64, p * p + p + 1);
                total += pts.len();
                union.extend(pts);
            }
            assert_eq!(total, union.len());
            assert_eq!(union, variety);
        }
    }

    #[test]
    fn segre_examples() {
        let f = gf(3);
        let sp = |u: [i64; 3], v: [i64; 2]| SegreParams { u: u.map(|x| f.from_int(x)), v: v.map(|x| f.from_int(x)) };
        assert_eq!(segre_param(&sp([1, 0, 0], [1, 0])).unwrap(), RestrictedPoint::basepoint(&f, 135));
        assert_eq!(segre_param(&sp([0, 1, 0], [0, 1])).unwrap(), RestrictedPoint::basepoint(&f, 236));
        assert!(segre_param(&sp([0, 0, 0], [0, 1])).is_err());
        assert!(segre_param(&sp([1, 0, 0], [0, 0])).is_err());
        assert!(segre_membership(&RestrictedPoint::<Fp>::basepoint(&f, 135)));
        assert!(!segre_membership(&RestrictedPoint::<Fp>::basepoint(&f, 356)));
    }

    #[test]
    fn segre_image_equals_solutions() {
        for p in [2, 3] {
            let f = gf(p);
            let img = segre_points(&f).unwrap();
            assert_eq!(img, segre_solutions(&f).unwrap());
            assert_eq!(img.len() as u64, (p * p + p + 1) * (p + 1));
        }
    }

    #[test]
    fn cubic_examples() {
        let f = gf(5);
        let (zero, one) = (f.zero(), f.one());
        assert_eq!(twisted_cubic_param(&one, &zero).unwrap().normalize().unwrap(), RestrictedPoint::basepoint(&f, 135));
        assert_eq!(twisted_cubic_param(&zero, &one).unwrap().normalize().unwrap(), RestrictedPoint::basepoint(&f, 246));
        assert!(twisted_cubic_param(&zero, &zero).is_err());
        let q = RationalField;
        let (a, b) = (q.from_int(2), q.from_int(3));
        assert_eq!(
            twisted_cubic_param(&a, &b).unwrap(),
            RestrictedPoint::from_ints(&q, [-8, -12, -18, -12, -18, -27, 0, 0])
        );
    }

    #[test]
    fn cubic_points_are_in_general_position() {
        assert_eq!(twisted_cubic_points(&gf(2)).unwrap().len(), 3);
        for p in [3, 5] {
            let pts: Vec<_> = twisted_cubic_points(&gf(p)).unwrap().into_iter().collect();
            assert_eq!(pts.len() as u64, p + 1);
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    for k in j + 1..pts.len() {
                        let trio: BTreeSet<_> = [&pts[i], &pts[j], &pts[k]].into_iter().cloned().collect();
                        assert_eq!(span_rank(&trio), 3);
                    }
                }
            }
            assert!(pts.iter().all(is_on_variety));
        }
    }

    #[test]
    fn dual_examples() {
        let f = gf(5);
        let (zero, one) = (f.zero(), f.one());
        let p = dual_numbers_param(&one, &zero, &zero, &zero).unwrap();
        assert_eq!(p.normalize().unwrap(), RestrictedPoint::basepoint(&f, 135));
        let p = dual_numbers_param(&one, &zero, &zero, &one.neg()).unwrap();
        assert_eq!(p, RestrictedPoint::from_ints(&f, [-1, 0, 0, 0, 0, 0, 1, 0]));
        assert!(dual_numbers_param(&zero, &zero, &one, &one).is_err());
    }

    #[test]
    fn double_examples() {
        let f = gf(5);
        let (zero, one) = (f.zero(), f.one());
        let p = double_numbers_param(&one, &zero, &one, &zero).unwrap();
        assert_eq!(p.normalize().unwrap(), RestrictedPoint::basepoint(&f, 135));
        let p = double_numbers_param(&zero, &one, &one, &zero).unwrap();
        assert_eq!(p.normalize().unwrap(), RestrictedPoint::basepoint(&f, 235));
        assert!(double_numbers_param(&zero, &zero, &one, &zero).is_err());
        assert!(double_numbers_param(&one, &zero, &zero, &zero).is_err());
    }

    #[test]
    fn tube_lies_on_segre() {
        for p in [2, 3] {
            let f = gf(p);
            let tube = tube_points(&f).unwrap();
            assert_eq!(tube.len() as u64, (p + 1) * (p + 1));
            assert!(tube.iter().all(segre_membership));
        }
    }
}
