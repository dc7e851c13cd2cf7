//! Forward and inverse parametrizations of the variety.
//!
//! An X-submodule with generator `([a11 a12; 0 a22], [b11 b12; 0 b22])` has
//! image
//!
//! ```text
//! p135 = -a11 a22^2   p136 = -a11 a22 b22   p146 = -a11 b22^2
//! p235 = -b11 a22^2   p236 = -b11 a22 b22   p246 = -b11 b22^2
//! p356 = a22 m        p456 = b22 m          where m = a12 b22 - b12 a22
//! ```
//!
//! and a Y-submodule with parameters `(a22, b22, c22, d22)` has image
//! `p356 = a22 δ, p456 = b22 δ` with `δ = a22 d22 - b22 c22`.
//!
//! [`param_x`] also accepts `(a11, b11) = (0, 0)` as long as `m ≠ 0`. Those
//! parameters are not unimodular; their image is a point of the line
//! `E356 ∨ E456`, i.e. a Y-point. This lets one parametrization reach every
//! point of the variety, which the tangent-space rank check relies on.

use crate::error::{Error, Result};
use crate::field::{ExactField, Scalar};
use crate::linalg;
use crate::poly::{self, Poly};
use crate::ternion::Ternion;
use crate::tmodule::TernionPair;

use super::quadrics::is_on_variety;
use serde_json::{Map, Value};

use super::{RestrictedPoint, P135, P136, P146, P235, P236, P246, P356, P456};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct XParams<S> {
    pub a11: S,
    pub b11: S,
    pub a22: S,
    pub b22: S,
    pub a12: S,
    pub b12: S,
}

impl<S: Scalar> XParams<S> {
    /// Parameters in the order `(a11, b11, a22, b22, a12, b12)`.
    pub fn from_array([a11, b11, a22, b22, a12, b12]: [S; 6]) -> Self {
        XParams { a11, b11, a22, b22, a12, b12 }
    }

    pub fn from_ints<F: ExactField<Elem = S>>(field: &F, c: [i64; 6]) -> Self {
        Self::from_array(c.map(|x| field.from_int(x)))
    }

    pub fn to_array(&self) -> [S; 6] {
        [
            self.a11.clone(),
            self.b11.clone(),
            self.a22.clone(),
            self.b22.clone(),
            self.a12.clone(),
            self.b12.clone(),
        ]
    }

    /// `(a11, b11) ≠ (0, 0) ≠ (a22, b22)`.
    pub fn is_unimodular(&self) -> bool {
        (!self.a11.is_zero() || !self.b11.is_zero()) && (!self.a22.is_zero() || !self.b22.is_zero())
    }

    /// `a12 b22 - b12 a22`.
    pub fn m(&self) -> S {
        self.a12.mul(&self.b22).sub(&self.b12.mul(&self.a22))
    }

    pub fn generator(&self) -> TernionPair<S> {
        TernionPair::new(
            Ternion::new(self.a11.clone(), self.a12.clone(), self.a22.clone()),
            Ternion::new(self.b11.clone(), self.b12.clone(), self.b22.clone()),
        )
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct YParams<S> {
    pub a22: S,
    pub b22: S,
    pub c22: S,
    pub d22: S,
}

impl<S: Scalar> YParams<S> {
    pub fn from_ints<F: ExactField<Elem = S>>(field: &F, c: [i64; 4]) -> Self {
        let [a22, b22, c22, d22] = c.map(|x| field.from_int(x));
        YParams { a22, b22, c22, d22 }
    }

    /// `a22 d22 - b22 c22`.
    pub fn det(&self) -> S {
        self.a22.mul(&self.d22).sub(&self.b22.mul(&self.c22))
    }

    /// Generator `([0 c22; 0 a22], [0 d22; 0 b22])`.
    pub fn generator(&self) -> TernionPair<S> {
        let z = self.a22.field().zero();
        TernionPair::new(
            Ternion::new(z.clone(), self.c22.clone(), self.a22.clone()),
            Ternion::new(z, self.d22.clone(), self.b22.clone()),
        )
    }
}

/// Parameters of either family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Params<S> {
    X(XParams<S>),
    Y(YParams<S>),
}

impl<S: Scalar> Params<S> {
    /// `{"kind": "X", "a11": ..., ...}` or `{"kind": "Y", "a22": ..., ...}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        let entries: Vec<(&str, &S)> = match self {
            Params::X(xp) => {
                m.insert("kind".into(), Value::from("X"));
                vec![
                    ("a11", &xp.a11),
                    ("b11", &xp.b11),
                    ("a22", &xp.a22),
                    ("b22", &xp.b22),
                    ("a12", &xp.a12),
                    ("b12", &xp.b12),
                ]
            }
            Params::Y(yp) => {
                m.insert("kind".into(), Value::from("Y"));
                vec![("a22", &yp.a22), ("b22", &yp.b22), ("c22", &yp.c22), ("d22", &yp.d22)]
            }
        };
        for (k, x) in entries {
            m.insert(k.into(), Value::String(x.to_string()));
        }
        Value::Object(m)
    }

    pub fn point(&self) -> Result<RestrictedPoint<S>> {
        match self {
            Params::X(xp) => param_x(xp),
            Params::Y(yp) => param_y(yp),
        }
    }
}

pub fn param_x<S: Scalar>(xp: &XParams<S>) -> Result<RestrictedPoint<S>> {
    let XParams { a11, b11, a22, b22, .. } = xp;
    let aa = a22.mul(a22);
    let ab = a22.mul(b22);
    let bb = b22.mul(b22);
    let m = xp.m();
    let p = RestrictedPoint([
        a11.mul(&aa).neg(),
        a11.mul(&ab).neg(),
        a11.mul(&bb).neg(),
        b11.mul(&aa).neg(),
        b11.mul(&ab).neg(),
        b11.mul(&bb).neg(),
        a22.mul(&m),
        b22.mul(&m),
    ]);
    if p.is_zero() {
        return Err(Error::DegenerateParams(
            "image vanishes: need (a22, b22) != 0 and (a11, b11) != 0 or a12 b22 - b12 a22 != 0".into(),
        ));
    }
    Ok(p)
}

pub fn param_y<S: Scalar>(yp: &YParams<S>) -> Result<RestrictedPoint<S>> {
    if yp.a22.is_zero() && yp.b22.is_zero() {
        return Err(Error::DegenerateParams("(a22, b22) = (0, 0)".into()));
    }
    let det = yp.det();
    if det.is_zero() {
        return Err(Error::InvalidParams("a22 d22 - b22 c22 = 0".into()));
    }
    let mut p = RestrictedPoint::zero(&yp.a22.field());
    p.0[P356] = yp.a22.mul(&det);
    p.0[P456] = yp.b22.mul(&det);
    Ok(p)
}

/// Recovers parameters of a variety point, following the two cases of the
/// equivalence argument.
///
/// * Segre block zero: a Y-point; `(a22, b22) = (p356, p456)` and `(c22, d22)`
///   is the lexicographically least pair with `a22 d22 - b22 c22 = 1`.
/// * Otherwise the rows `(p_i35, p_i45, p_i46)`, `i = 1, 2`, form a rank-one
///   2×3 array `v_i · (u1, u2, u3)`, the cone equation forces
///   `u1 u3 = u2^2`, and the conic is lifted through its Veronese
///   parametrization `k (a22^2, a22 b22, b22^2)`.
pub fn unparametrize<S: Scalar>(p: &RestrictedPoint<S>) -> Result<Params<S>> {
    if !is_on_variety(p) {
        return Err(Error::NotOnVariety);
    }
    let field = p.0[0].field();
    let (zero, one) = (field.zero(), field.one());

    if p.segre_block_is_zero() {
        let a22 = p.0[P356].clone();
        let b22 = p.0[P456].clone();
        let (c22, d22) = if !a22.is_zero() {
            (zero, a22.inv()?)
        } else {
            (b22.inv()?.neg(), zero)
        };
        return Ok(Params::Y(YParams { a22, b22, c22, d22 }));
    }

    let rows = [
        [&p.0[P135], &p.0[P136], &p.0[P146]],
        [&p.0[P235], &p.0[P236], &p.0[P246]],
    ];
    // u is the first nonzero row; v expresses both rows as multiples of it.
    let lead = usize::from(rows[0].iter().all(|x| x.is_zero()));
    let u: [S; 3] = rows[lead].map(Clone::clone);
    let pivot = u.iter().position(|x| !x.is_zero()).expect("nonzero row");
    let pivot_inv = u[pivot].inv()?;
    let v: [S; 2] = std::array::from_fn(|i| rows[i][pivot].mul(&pivot_inv));
    debug_assert!((0..2).all(|i| (0..3).all(|j| *rows[i][j] == v[i].mul(&u[j]))));

    let [u1, u2, u3] = &u;
    let (a22, b22, k) = if !u1.is_zero() {
        (u1.clone(), u2.clone(), u1.inv()?)
    } else {
        debug_assert!(u2.is_zero());
        (zero.clone(), one, u3.clone())
    };
    let a11 = k.mul(&v[0]).neg();
    let b11 = k.mul(&v[1]).neg();

    let m = if !a22.is_zero() {
        p.0[P356].div(&a22)?
    } else {
        p.0[P456].div(&b22)?
    };
    let (a12, b12) = if !b22.is_zero() {
        (m.div(&b22)?, zero)
    } else {
        (zero, m.div(&a22)?.neg())
    };
    Ok(Params::X(XParams { a11, b11, a22, b22, a12, b12 }))
}

/// The eight image coordinates as polynomials in
/// `(a11, b11, a22, b22, a12, b12)`.
pub fn x_coordinate_polys() -> [Poly; 8] {
    let x = |i| Poly::var(6, i);
    let (a11, b11, a22, b22, a12, b12) = (x(0), x(1), x(2), x(3), x(4), x(5));
    let m = a12.mul(&b22).sub(&b12.mul(&a22));
    [
        a11.mul(&a22).mul(&a22).neg(),
        a11.mul(&a22).mul(&b22).neg(),
        a11.mul(&b22).mul(&b22).neg(),
        b11.mul(&a22).mul(&a22).neg(),
        b11.mul(&a22).mul(&b22).neg(),
        b11.mul(&b22).mul(&b22).neg(),
        a22.mul(&m),
        b22.mul(&m),
    ]
}

/// Rank of the 6×8 matrix of formal partial derivatives of the image
/// coordinates at `xp`. Relaxed parameters are accepted.
pub fn jacobian_param_rank<S: Scalar>(xp: &XParams<S>) -> Result<usize> {
    param_x(xp)?;
    let field = xp.a11.field();
    let jac = poly::jacobian_at(&field, &x_coordinate_polys(), &xp.to_array());
    Ok(linalg::rank(&jac))
}

/// All parameter 6-tuples with nonzero image, relaxed ones included.
pub fn enumerate_x_params<F: ExactField>(field: &F) -> Result<Vec<XParams<F::Elem>>> {
    Ok(linalg::affine_points(field, 6)?
        .into_iter()
        .map(|v| XParams::from_array(v.try_into().expect("six")))
        .filter(|xp| param_x(xp).is_ok())
        .collect())
}

/// All valid Y-parameters.
pub fn enumerate_y_params<F: ExactField>(field: &F) -> Result<Vec<YParams<F::Elem>>> {
    Ok(linalg::affine_points(field, 4)?
        .into_iter()
        .map(|v| {
            let [a22, b22, c22, d22]: [F::Elem; 4] = v.try_into().expect("four");
            YParams { a22, b22, c22, d22 }
        })
        .filter(|yp| !yp.det().is_zero())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField, RationalField};
    use crate::grassmann;
    use crate::oracle;
    use crate::tmodule::PairClass;
    use crate::variety::{enumerate_variety_points, restrict};
    use std::collections::BTreeSet;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn param_x_examples() {
        let f = gf(5);
        let p = param_x(&XParams::from_ints(&f, [1, 0, 1, 0, 0, 0])).unwrap();
        assert_eq!(p, RestrictedPoint::from_ints(&f, [-1, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(p.normalize().unwrap(), RestrictedPoint::basepoint(&f, 135));
        let p = param_x(&XParams::from_ints(&f, [0, 1, 0, 1, 1, 0])).unwrap();
        assert_eq!(p, RestrictedPoint::from_ints(&f, [0, 0, 0, 0, 0, -1, 0, 1]));
        assert!(matches!(
            param_x(&XParams::from_ints(&f, [1, 1, 0, 0, 1, 1])),
            Err(Error::DegenerateParams(_))
        ));
        assert!(param_x(&XParams::from_ints(&f, [0, 0, 1, 0, 3, 0])).is_err());
        // relaxed: (a11, b11) = 0 but m != 0 lands on the Y-line
        let p = param_x(&XParams::from_ints(&f, [0, 0, 1, 0, 0, -1])).unwrap();
        assert_eq!(p.normalize().unwrap(), RestrictedPoint::basepoint(&f, 356));
    }

    #[test]
    fn param_x_matches_minors_over_f2() {
        let f = gf(2);
        for xp in enumerate_x_params(&f).unwrap() {
            if !xp.is_unimodular() {
                continue;
            }
            let sub = xp.generator().cyclic_submodule();
            let minors = restrict(&grassmann::plucker(&sub).unwrap()).unwrap();
            assert!(param_x(&xp).unwrap().projective_eq(&minors).unwrap());
        }
    }

    #[test]
    fn polys_agree_with_param_x() {
        let f = RationalField;
        let polys = x_coordinate_polys();
        for c in [[1, 2, 3, 4, 5, 6], [-3, 0, 2, -1, 7, 1], [0, 0, 1, 1, 1, 0]] {
            let xp = XParams::from_ints(&f, c);
            let p = param_x(&xp).unwrap();
            for (poly, x) in polys.iter().zip(&p.0) {
                assert_eq!(&poly.eval(&f, &xp.to_array()), x);
            }
        }
    }

    #[test]
    fn params_json() {
        let f = gf(5);
        let v = Params::Y(YParams::from_ints(&f, [1, 0, 0, 1])).to_json();
        assert_eq!(v["kind"], "Y");
        assert_eq!(v["d22"], "1");
        let v = Params::X(XParams::from_ints(&f, [-1, 0, 1, 0, 0, 0])).to_json();
        assert_eq!(v["a11"], "4");
    }

    #[test]
    fn param_y_examples() {
        let f = gf(3);
        let p = param_y(&YParams::from_ints(&f, [1, 0, 0, 1])).unwrap();
        assert_eq!(p, RestrictedPoint::basepoint(&f, 356));
        let p = param_y(&YParams::from_ints(&f, [0, 1, -1, 0])).unwrap();
        assert_eq!(p, RestrictedPoint::basepoint(&f, 456));
        assert!(matches!(param_y(&YParams::from_ints(&f, [1, 1, 1, 1])), Err(Error::InvalidParams(_))));
        assert!(matches!(param_y(&YParams::from_ints(&f, [0, 0, 1, 1])), Err(Error::DegenerateParams(_))));

        let image: BTreeSet<_> = enumerate_y_params(&f)
            .unwrap()
            .iter()
            .map(|yp| param_y(yp).unwrap().normalize().unwrap())
            .collect();
        assert_eq!(image.len(), 4);
        assert!(image.iter().all(RestrictedPoint::segre_block_is_zero));
    }

    #[test]
    fn param_y_matches_generator_minors() {
        let f = gf(3);
        for yp in enumerate_y_params(&f).unwrap() {
            let g = yp.generator();
            assert_eq!(g.classify(), PairClass::Y);
            let minors = restrict(&grassmann::plucker(&g.cyclic_submodule()).unwrap()).unwrap();
            assert!(param_y(&yp).unwrap().projective_eq(&minors).unwrap());
        }
    }

    #[test]
    fn unparametrize_examples() {
        let f = gf(3);
        let y = unparametrize(&RestrictedPoint::<Fp>::basepoint(&f, 356)).unwrap();
        assert_eq!(y, Params::Y(YParams::from_ints(&f, [1, 0, 0, 1])));
        let x = unparametrize(&RestrictedPoint::<Fp>::basepoint(&f, 135)).unwrap();
        assert_eq!(x, Params::X(XParams::from_ints(&f, [-1, 0, 1, 0, 0, 0])));
        let back = x.point().unwrap();
        assert_eq!(back, RestrictedPoint::basepoint(&f, 135));
        let off = RestrictedPoint::<Fp>::from_ints(&f, [1, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(unparametrize(&off), Err(Error::NotOnVariety));
    }

    #[test]
    fn unparametrize_picks_least_y_completion() {
        let f = gf(5);
        for pt in enumerate_variety_points(&f).unwrap() {
            let Params::Y(yp) = unparametrize(&pt).unwrap() else { continue };
            let least = linalg::affine_points(&f, 2)
                .unwrap()
                .into_iter()
                .find(|cd| yp.a22.mul(&cd[1]).sub(&yp.b22.mul(&cd[0])).is_one())
                .unwrap();
            assert_eq!(vec![yp.c22, yp.d22], least);
        }
    }

    #[test]
    fn round_trip_over_small_fields() {
        for p in [2, 3, 5] {
            let f = gf(p);
            for pt in enumerate_variety_points(&f).unwrap() {
                let params = unparametrize(&pt).unwrap();
                match &params {
                    Params::X(xp) => assert!(xp.is_unimodular()),
                    Params::Y(yp) => assert!(yp.det().is_one()),
                }
                assert!(params.point().unwrap().projective_eq(&pt).unwrap(), "{pt}");
            }
        }
    }

    #[test]
    fn round_trip_over_rationals() {
        let f = RationalField;
        let samples = [[2, -3, 5, 7, 1, -4], [1, 1, 0, 3, 2, 2], [-1, 0, 4, 0, 0, 5], [0, 0, 2, 3, 1, 1]];
        for c in samples {
            let xp = XParams::from_ints(&f, c);
            let pt = param_x(&xp).unwrap();
            let back = unparametrize(&pt).unwrap().point().unwrap();
            assert!(back.projective_eq(&pt).unwrap());
        }
    }

    // Hand-differentiated Jacobian, rows = (a11, b11, a22, b22, a12, b12),
    // columns = (p135, p136, p146, p235, p236, p246, p356, p456).
    fn jacobian_oracle<S: Scalar>(xp: &XParams<S>) -> Vec<Vec<S>> {
        let f = xp.a11.field();
        let c = |n: i64| f.from_int(n);
        let XParams { a11, b11, a22, b22, a12, b12 } = xp;
        let z = || f.zero();
        let pr = |xs: &[&S]| xs.iter().fold(f.one(), |acc, x| acc.mul(x));
        vec![
            vec![pr(&[&c(-1), a22, a22]), pr(&[&c(-1), a22, b22]), pr(&[&c(-1), b22, b22]), z(), z(), z(), z(), z()],
            vec![z(), z(), z(), pr(&[&c(-1), a22, a22]), pr(&[&c(-1), a22, b22]), pr(&[&c(-1), b22, b22]), z(), z()],
            vec![
                pr(&[&c(-2), a11, a22]),
                pr(&[&c(-1), a11, b22]),
                z(),
                pr(&[&c(-2), b11, a22]),
                pr(&[&c(-1), b11, b22]),
                z(),
                pr(&[a12, b22]).sub(&pr(&[&c(2), b12, a22])),
                pr(&[&c(-1), b12, b22]),
            ],
            vec![
                z(),
                pr(&[&c(-1), a11, a22]),
                pr(&[&c(-2), a11, b22]),
                z(),
                pr(&[&c(-1), b11, a22]),
                pr(&[&c(-2), b11, b22]),
                pr(&[a12, a22]),
                pr(&[&c(2), a12, b22]).sub(&pr(&[b12, a22])),
            ],
            vec![z(), z(), z(), z(), z(), z(), pr(&[a22, b22]), pr(&[b22, b22])],
            vec![z(), z(), z(), z(), z(), z(), pr(&[&c(-1), a22, a22]), pr(&[&c(-1), a22, b22])],
        ]
    }

    #[test]
    fn jacobian_matches_hand_derivatives() {
        for p in [2, 3] {
            let f = gf(p);
            for xp in enumerate_x_params(&f).unwrap() {
                let jac = poly::jacobian_at(&f, &x_coordinate_polys(), &xp.to_array());
                assert_eq!(jac, jacobian_oracle(&xp));
            }
        }
    }

    #[test]
    fn jacobian_rank_examples() {
        for p in [2, 3] {
            let f = gf(p);
            assert_eq!(jacobian_param_rank(&XParams::from_ints(&f, [1, 0, 1, 0, 0, 0])).unwrap(), 4);
            assert_eq!(jacobian_param_rank(&XParams::from_ints(&f, [0, 0, 1, 0, 0, -1])).unwrap(), 4);
        }
        let f = gf(3);
        assert!(jacobian_param_rank(&XParams::from_ints(&f, [1, 0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn jacobian_rank_matches_span_counting_over_f2_f3() {
        for p in [2, 3] {
            let f = gf(p);
            for xp in enumerate_x_params(&f).unwrap() {
                let counted = oracle::span_dimension_by_counting(&jacobian_oracle(&xp)).unwrap();
                assert_eq!(counted, 4);
                assert_eq!(jacobian_param_rank(&xp).unwrap(), counted);
            }
        }
    }
}
