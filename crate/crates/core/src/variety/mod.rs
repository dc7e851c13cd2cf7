//! The point model of the free cyclic submodules of `T^2`.
//!
//! Grassmann images of free cyclic submodules all lie in the 8-dimensional
//! subspace of `F^20` where
//!
//! ```text
//! p123 = p124 = p125 = p126 = p134 = p156 = p234 = p256 = p345 = p346 = 0,
//! p136 = p145,  p236 = p245.
//! ```
//!
//! Points of that subspace are [`RestrictedPoint`]s with coordinates
//! `(p135, p136, p146, p235, p236, p246, p356, p456)`. Inside it the image is
//! cut out by nine quadrics (see [`quadrics`]), parametrized by [`params`],
//! and covered by a one-parameter family of planes (see [`planes`]).

pub mod params;
pub mod planes;
pub mod quadrics;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::field::{ExactField, Scalar};
use crate::grassmann::{self, pos, PluckerVector};
use crate::linalg;
use crate::tmodule::{enumerate_pairs, ClassFilter, Subspace3};

pub use params::{
    jacobian_param_rank, param_x, param_y, unparametrize, x_coordinate_polys, Params, XParams, YParams,
};
pub use planes::{
    double_numbers_param, dual_numbers_param, gamma_plane, segre_membership, segre_param,
    twisted_cubic_param, PlaneGamma, SegreParams,
};
pub use quadrics::{eval_quadrics, is_on_variety, jacobian_equations_rank, QuadricResiduals, QuadricSystem};

pub const P135: usize = 0;
pub const P136: usize = 1;
pub const P146: usize = 2;
pub const P235: usize = 3;
pub const P236: usize = 4;
pub const P246: usize = 5;
pub const P356: usize = 6;
pub const P456: usize = 7;

/// Coordinate labels in storage order; also the CSV column order.
pub const LABELS: [&str; 8] = ["p135", "p136", "p146", "p235", "p236", "p246", "p356", "p456"];

/// Triples of the retained coordinates, in storage order.
const RETAINED: [(usize, usize, usize); 8] = [
    (1, 3, 5),
    (1, 3, 6),
    (1, 4, 6),
    (2, 3, 5),
    (2, 3, 6),
    (2, 4, 6),
    (3, 5, 6),
    (4, 5, 6),
];

const VANISHING: [(usize, usize, usize); 10] = [
    (1, 2, 3),
    (1, 2, 4),
    (1, 2, 5),
    (1, 2, 6),
    (1, 3, 4),
    (1, 5, 6),
    (2, 3, 4),
    (2, 5, 6),
    (3, 4, 5),
    (3, 4, 6),
];

/// Storage index of `p_ijk` in a [`RestrictedPoint`], with `p145 ↦ p136` and
/// `p245 ↦ p236`.
pub const fn restricted_index(ijk: u32) -> usize {
    match ijk {
        135 => P135,
        136 | 145 => P136,
        146 => P146,
        235 => P235,
        236 | 245 => P236,
        246 => P246,
        356 => P356,
        456 => P456,
        _ => panic!("coordinate vanishes on the ambient subspace"),
    }
}

/// A vector of the 8-dimensional ambient subspace.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RestrictedPoint<S>(pub [S; 8]);

impl<S: Scalar> RestrictedPoint<S> {
    pub fn zero<F: ExactField<Elem = S>>(field: &F) -> Self {
        RestrictedPoint(std::array::from_fn(|_| field.zero()))
    }

    pub fn from_ints<F: ExactField<Elem = S>>(field: &F, c: [i64; 8]) -> Self {
        RestrictedPoint(c.map(|x| field.from_int(x)))
    }

    /// Unit vector of the coordinate labelled `ijk` (e.g. `135`).
    pub fn basepoint<F: ExactField<Elem = S>>(field: &F, ijk: u32) -> Self {
        let mut p = Self::zero(field);
        p.0[restricted_index(ijk)] = field.one();
        p
    }

    pub fn coords(&self) -> &[S; 8] {
        &self.0
    }

    /// Coordinate `p_ijk`, aliases included.
    pub fn get(&self, ijk: u32) -> &S {
        &self.0[restricted_index(ijk)]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// True iff the six coordinates outside `p356, p456` vanish.
    pub fn segre_block_is_zero(&self) -> bool {
        self.0[..P356].iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RestrictedPoint(std::array::from_fn(|n| self.0[n].add(&rhs.0[n])))
    }

    pub fn scale(&self, x: &S) -> Self {
        RestrictedPoint(std::array::from_fn(|n| self.0[n].mul(x)))
    }

    pub fn normalize(&self) -> Result<Self> {
        let mut v = self.clone();
        linalg::normalize_in_place(&mut v.0)?;
        Ok(v)
    }

    pub fn projective_eq(&self, other: &Self) -> Result<bool> {
        linalg::proportional(&self.0, &other.0)
    }

    /// Embeds back into `F^20`.
    pub fn expand(&self) -> PluckerVector<S> {
        let field = self.0[0].field();
        let mut out = PluckerVector::zero(&field);
        for (n, &(i, j, k)) in RETAINED.iter().enumerate() {
            out.0[pos(i, j, k)] = self.0[n].clone();
        }
        out.0[pos(1, 4, 5)] = self.0[P136].clone();
        out.0[pos(2, 4, 5)] = self.0[P236].clone();
        out
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (label, x) in LABELS.iter().zip(&self.0) {
            m.insert((*label).to_string(), Value::String(x.to_string()));
        }
        Value::Object(m)
    }

    pub fn from_json<F: ExactField<Elem = S>>(value: &Value, field: &F) -> Result<Self> {
        let coords = LABELS
            .iter()
            .map(|label| {
                let x = value
                    .get(label)
                    .ok_or_else(|| Error::parse(value.to_string(), format!("missing `{label}`")))?;
                grassmann::scalar_from_json(x, field)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RestrictedPoint(coords.try_into().expect("eight labels")))
    }
}

impl<S: Scalar> fmt::Display for RestrictedPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Projects a Grassmann vector onto the ambient subspace, checking the twelve
/// linear conditions.
pub fn restrict<S: Scalar>(p: &PluckerVector<S>) -> Result<RestrictedPoint<S>> {
    for &(i, j, k) in &VANISHING {
        if !p.get(i, j, k).is_zero() {
            return Err(Error::NotInAmbient(format!("p{i}{j}{k} = 0")));
        }
    }
    if p.get(1, 3, 6) != p.get(1, 4, 5) {
        return Err(Error::NotInAmbient("p136 - p145 = 0".into()));
    }
    if p.get(2, 3, 6) != p.get(2, 4, 5) {
        return Err(Error::NotInAmbient("p236 - p245 = 0".into()));
    }
    Ok(RestrictedPoint(RETAINED.map(|(i, j, k)| p.get(i, j, k).clone())))
}

/// Normalized image of a free cyclic submodule.
pub fn submodule_image<S: Scalar>(sub: &Subspace3<S>) -> Result<RestrictedPoint<S>> {
    restrict(&grassmann::plucker(sub)?)?.normalize()
}

/// Normalized images of the free cyclic submodules of the requested class.
pub fn free_submodule_images<F: ExactField>(
    field: &F,
    filter: ClassFilter,
) -> Result<BTreeSet<RestrictedPoint<F::Elem>>> {
    let pairs = enumerate_pairs(field)?;
    let images = pairs
        .par_iter()
        .filter(|p| filter.accepts(p.classify()))
        .map(|p| submodule_image(&p.cyclic_submodule()))
        .collect::<Result<Vec<_>>>()?;
    Ok(images.into_iter().collect())
}

/// All projective points of the ambient space satisfying `system`.
pub fn enumerate_solutions<F: ExactField>(
    field: &F,
    system: &QuadricSystem,
) -> Result<BTreeSet<RestrictedPoint<F::Elem>>> {
    let elements = field.elements()?;
    let q = elements.len() as u64;
    let found: Vec<_> = (0..linalg::projective_count(q, 8))
        .into_par_iter()
        .filter_map(|idx| {
            let v = linalg::projective_point(field, &elements, 8, idx);
            let p = RestrictedPoint(v.try_into().expect("eight coordinates"));
            system.is_satisfied(&p).then_some(p)
        })
        .collect();
    Ok(found.into_iter().collect())
}

/// Normalized points of the variety over a finite field.
pub fn enumerate_variety_points<F: ExactField>(field: &F) -> Result<BTreeSet<RestrictedPoint<F::Elem>>> {
    enumerate_solutions(field, &QuadricSystem::standard())
}

/// Number of candidate points scanned by [`enumerate_variety_points`].
pub fn variety_candidates(q: u64) -> u64 {
    linalg::projective_count(q, 8)
}
