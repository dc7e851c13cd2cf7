//! The free left `T`-module `T^2`, its cyclic submodules and the `GL_2(T)`
//! action.
//!
//! `T^2` is identified with `F^6` through
//! `([a11 a12; 0 a22], [b11 b12; 0 b22]) ↦ (a11, b11, a22, b22, a12, b12)`.
//! Cyclic submodules are stored as F-subspaces of `F^6` in reduced row-echelon
//! form, which makes equality of submodules plain equality of values.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{ExactField, Scalar};
use crate::linalg;
use crate::ternion::{enumerate_ternions, Ternion};

/// An element `(A, B)` of `T^2`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TernionPair<S> {
    pub a: Ternion<S>,
    pub b: Ternion<S>,
}

/// Coordinates `(a11, b11, a22, b22, a12, b12)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vector6<S>(pub [S; 6]);

impl<S: Scalar> Vector6<S> {
    pub fn coords(&self) -> &[S; 6] {
        &self.0
    }

    /// Inverse of [`TernionPair::embed`].
    pub fn to_pair(&self) -> TernionPair<S> {
        let [a11, b11, a22, b22, a12, b12] = self.0.clone();
        TernionPair {
            a: Ternion::new(a11, a12, a22),
            b: Ternion::new(b11, b12, b22),
        }
    }
}

impl<S: Scalar> TernionPair<S> {
    pub fn new(a: Ternion<S>, b: Ternion<S>) -> Self {
        TernionPair { a, b }
    }

    pub fn zero<F: ExactField<Elem = S>>(field: &F) -> Self {
        TernionPair::new(Ternion::zero(field), Ternion::zero(field))
    }

    /// Generator `(I, 0)` of the unimodular representative.
    pub fn x0<F: ExactField<Elem = S>>(field: &F) -> Self {
        TernionPair::new(Ternion::identity(field), Ternion::zero(field))
    }

    /// Generator `(E22, E12)` of the non-unimodular free representative.
    pub fn y0<F: ExactField<Elem = S>>(field: &F) -> Self {
        TernionPair::new(
            Ternion::from_ints(field, 0, 0, 1),
            Ternion::from_ints(field, 0, 1, 0),
        )
    }

    pub fn field(&self) -> S::Field {
        self.a.field()
    }

    pub fn embed(&self) -> Vector6<S> {
        Vector6([
            self.a.a11.clone(),
            self.b.a11.clone(),
            self.a.a22.clone(),
            self.b.a22.clone(),
            self.a.a12.clone(),
            self.b.a12.clone(),
        ])
    }

    pub fn add(&self, rhs: &Self) -> Self {
        TernionPair::new(self.a.add(&rhs.a), self.b.add(&rhs.b))
    }

    /// Left scalar multiple `t·(A, B) = (tA, tB)`.
    pub fn left_mul(&self, t: &Ternion<S>) -> Self {
        TernionPair::new(t.mul(&self.a), t.mul(&self.b))
    }

    /// `(A, B)·S` for a 2×2 ternion matrix `S` (row vector times matrix).
    pub fn act(&self, m: &TernionMatrix2<S>) -> Self {
        let [[s11, s12], [s21, s22]] = &m.entries;
        TernionPair::new(
            self.a.mul(s11).add(&self.b.mul(s21)),
            self.a.mul(s12).add(&self.b.mul(s22)),
        )
    }

    /// `(a11, b11) ≠ (0, 0) ≠ (a22, b22)`.
    ///
    /// This is equivalent to the existence of `C, D ∈ T` with `AC + BD = I`:
    /// the diagonal of `AC + BD` only involves the diagonal entries, and the
    /// off-diagonal entry can be cleared through `c12, d12` once
    /// `(a11, b11) ≠ (0, 0)`.
    pub fn is_unimodular(&self) -> bool {
        let first = !self.a.a11.is_zero() || !self.b.a11.is_zero();
        let second = !self.a.a22.is_zero() || !self.b.a22.is_zero();
        first && second
    }

    /// The cyclic submodule `T·(A, B)` as a subspace of `F^6`.
    ///
    /// `t ↦ t·(A, B)` is F-linear in `t`, so the images of the basis
    /// `E11, E12, E22` of `T` span the whole submodule.
    pub fn cyclic_submodule(&self) -> Subspace3<S> {
        let units = Ternion::matrix_units(&self.field());
        Subspace3::span(units.iter().map(|t| self.left_mul(t).embed()))
    }

    pub fn is_free(&self) -> bool {
        self.cyclic_submodule().dim() == 3
    }

    pub fn classify(&self) -> PairClass {
        let sub = self.cyclic_submodule();
        match sub.dim() {
            3 if self.is_unimodular() => PairClass::X,
            3 => {
                assert!(
                    sub.basis().iter().all(|v| v.0[0].is_zero() && v.0[1].is_zero()),
                    "free non-unimodular submodule must have zero first columns"
                );
                PairClass::Y
            }
            d => PairClass::NonFree(d),
        }
    }

    /// For a pair generating a Y-submodule, returns `(a22, b22, c22, d22)` such
    /// that the submodule is
    /// `{([0, a22 y + c22 x; 0, a22 z], [0, b22 y + d22 x; 0, b22 z])}`
    /// with `a22 d22 - b22 c22 ≠ 0`.
    pub fn y_parameters(&self) -> Option<[S; 4]> {
        if self.classify() != PairClass::Y {
            return None;
        }
        // The generator itself has zero first columns; the X-form coefficients
        // of x, y, z can be read off directly.
        let (a, b) = (&self.a, &self.b);
        let params = [a.a22.clone(), b.a22.clone(), a.a12.clone(), b.a12.clone()];
        let det = params[0].mul(&params[3]).sub(&params[1].mul(&params[2]));
        debug_assert!(!det.is_zero());
        Some(params)
    }

    pub fn to_json(&self) -> Value {
        json!({ "A": self.a.to_json(), "B": self.b.to_json() })
    }

    pub fn from_json<F: ExactField<Elem = S>>(value: &Value, field: &F) -> Result<Self> {
        let part = |key: &str| {
            value
                .get(key)
                .ok_or_else(|| Error::parse(value.to_string(), format!("missing `{key}`")))
                .and_then(|v| Ternion::from_json(v, field))
        };
        Ok(TernionPair::new(part("A")?, part("B")?))
    }
}

impl<S: Scalar> fmt::Display for TernionPair<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Intrinsic type of a cyclic submodule `T·(A, B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairClass {
    /// Free and generated by a unimodular pair.
    X,
    /// Free but not generated by any unimodular pair.
    Y,
    /// Not free; carries the F-dimension of the submodule.
    NonFree(usize),
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairClass::X => write!(f, "X"),
            PairClass::Y => write!(f, "Y"),
            PairClass::NonFree(d) => write!(f, "NonFree({d})"),
        }
    }
}

/// Which free submodules to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassFilter {
    X,
    Y,
    Both,
}

impl ClassFilter {
    pub fn accepts(&self, class: PairClass) -> bool {
        matches!(
            (self, class),
            (ClassFilter::X, PairClass::X)
                | (ClassFilter::Y, PairClass::Y)
                | (ClassFilter::Both, PairClass::X | PairClass::Y)
        )
    }
}

/// A subspace of `F^6` (dimension at most 3 for cyclic submodules) in reduced
/// row-echelon form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Subspace3<S> {
    basis: Vec<Vector6<S>>,
}

impl<S: Scalar> Subspace3<S> {
    pub fn span(vectors: impl IntoIterator<Item = Vector6<S>>) -> Self {
        let mut rows: Vec<Vec<S>> = vectors.into_iter().map(|v| v.0.to_vec()).collect();
        linalg::rref(&mut rows);
        let basis = rows
            .into_iter()
            .map(|r| Vector6(r.try_into().expect("six coordinates")))
            .collect();
        Subspace3 { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector6<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &Vector6<S>) -> bool {
        let extended = Subspace3::span(self.basis.iter().cloned().chain(std::iter::once(v.clone())));
        extended.dim() == self.dim()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .basis
            .iter()
            .map(|v| Value::Array(v.0.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect();
        json!({ "dim": self.dim(), "basis": rows })
    }
}

/// A 2×2 matrix over `T`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TernionMatrix2<S> {
    pub entries: [[Ternion<S>; 2]; 2],
}

impl<S: Scalar> TernionMatrix2<S> {
    pub fn new(s11: Ternion<S>, s12: Ternion<S>, s21: Ternion<S>, s22: Ternion<S>) -> Self {
        TernionMatrix2 {
            entries: [[s11, s12], [s21, s22]],
        }
    }

    pub fn identity<F: ExactField<Elem = S>>(field: &F) -> Self {
        TernionMatrix2::new(
            Ternion::identity(field),
            Ternion::zero(field),
            Ternion::zero(field),
            Ternion::identity(field),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let e = |i: usize, j: usize| {
            self.entries[i][0]
                .mul(&rhs.entries[0][j])
                .add(&self.entries[i][1].mul(&rhs.entries[1][j]))
        };
        TernionMatrix2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    /// Determinants of the two diagonal projections `T → F × F` applied
    /// entrywise.
    pub fn projection_determinants(&self) -> (S, S) {
        let [[s11, s12], [s21, s22]] = &self.entries;
        let d1 = s11.a11.mul(&s22.a11).sub(&s12.a11.mul(&s21.a11));
        let d2 = s11.a22.mul(&s22.a22).sub(&s12.a22.mul(&s21.a22));
        (d1, d2)
    }

    /// A matrix over `T` is invertible iff its images over `T / rad T ≅ F × F`
    /// are invertible.
    pub fn is_invertible(&self) -> bool {
        let (d1, d2) = self.projection_determinants();
        !d1.is_zero() && !d2.is_zero()
    }
}

/// All `q^6` pairs in lexicographic order of `(A, B)`.
pub fn enumerate_pairs<F: ExactField>(field: &F) -> Result<Vec<TernionPair<F::Elem>>> {
    let ts = enumerate_ternions(field)?;
    let mut out = Vec::with_capacity(ts.len() * ts.len());
    for a in &ts {
        for b in &ts {
            out.push(TernionPair::new(a.clone(), b.clone()));
        }
    }
    Ok(out)
}

/// Distinct free cyclic submodules of the requested class.
pub fn enumerate_free_submodules<F: ExactField>(
    field: &F,
    filter: ClassFilter,
) -> Result<BTreeSet<Subspace3<F::Elem>>> {
    let pairs = enumerate_pairs(field)?;
    Ok(pairs
        .par_iter()
        .filter(|p| filter.accepts(p.classify()))
        .map(TernionPair::cyclic_submodule)
        .collect::<Vec<_>>()
        .into_iter()
        .collect())
}
