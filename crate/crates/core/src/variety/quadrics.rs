//! The nine quadrics cutting the variety out of the ambient subspace.
//!
//! ```text
//! cones:   p135 p146 - p145^2,      p235 p246 - p245^2
//! segre:   p146 p245 - p145 p246,   p135 p246 - p235 p146,   p135 p245 - p145 p235
//! pencil:  p135 p456 - p145 p356,   p145 p456 - p146 p356,
//!          p235 p456 - p245 p356,   p245 p456 - p246 p356
//! ```
//!
//! with `p145 = p136` and `p245 = p236` on the ambient subspace. The two cones
//! sit over the conics `c1, c2`; the segre group together with
//! `p356 = p456 = 0` describes a Segre variety `P^1 × P^2`; the pencil group
//! consists of cones sharing the line spanned by `E356` and `E456`.

use crate::error::{Error, Result};
use crate::field::{ExactField, Scalar};
use crate::linalg;

use super::{restricted_index as ix, RestrictedPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuadricGroup {
    Cones,
    Segre,
    Pencil,
}

/// `coef · x_i · x_j` in restricted coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub coef: i64,
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadric {
    pub group: QuadricGroup,
    pub label: &'static str,
    pub terms: Vec<Term>,
}

/// A list of quadratic forms on the ambient subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricSystem {
    quadrics: Vec<Quadric>,
}

fn binomial(group: QuadricGroup, label: &'static str, plus: (u32, u32), minus: (u32, u32)) -> Quadric {
    Quadric {
        group,
        label,
        terms: vec![
            Term { coef: 1, i: ix(plus.0), j: ix(plus.1) },
            Term { coef: -1, i: ix(minus.0), j: ix(minus.1) },
        ],
    }
}

impl QuadricSystem {
    pub fn standard() -> Self {
        use QuadricGroup::*;
        let quadrics = vec![
            binomial(Cones, "p135*p146 - p145^2", (135, 146), (145, 145)),
            binomial(Cones, "p235*p246 - p245^2", (235, 246), (245, 245)),
            binomial(Segre, "p146*p245 - p145*p246", (146, 245), (145, 246)),
            binomial(Segre, "p135*p246 - p235*p146", (135, 246), (235, 146)),
            binomial(Segre, "p135*p245 - p145*p235", (135, 245), (145, 235)),
            binomial(Pencil, "p135*p456 - p145*p356", (135, 456), (145, 356)),
            binomial(Pencil, "p145*p456 - p146*p356", (145, 456), (146, 356)),
            binomial(Pencil, "p235*p456 - p245*p356", (235, 456), (245, 356)),
            binomial(Pencil, "p245*p456 - p246*p356", (245, 456), (246, 356)),
        ];
        QuadricSystem { quadrics }
    }

    pub fn quadrics(&self) -> &[Quadric] {
        &self.quadrics
    }

    /// Restricts the system to one group.
    pub fn group(&self, group: QuadricGroup) -> Self {
        QuadricSystem {
            quadrics: self.quadrics.iter().filter(|q| q.group == group).cloned().collect(),
        }
    }

    /// `(quadric, term)` positions that [`QuadricSystem::mutated`] accepts.
    pub fn mutation_sites(&self) -> Vec<(usize, usize)> {
        self.quadrics
            .iter()
            .enumerate()
            .flat_map(|(q, quad)| (0..quad.terms.len()).map(move |t| (q, t)))
            .collect()
    }

    /// Copy with one coefficient increased by 1.
    pub fn mutated(&self, quadric: usize, term: usize) -> Self {
        let mut out = self.clone();
        out.quadrics[quadric].terms[term].coef += 1;
        out
    }

    pub fn residuals<S: Scalar>(&self, p: &RestrictedPoint<S>) -> Vec<S> {
        let field = p.0[0].field();
        self.quadrics
            .iter()
            .map(|q| {
                q.terms.iter().fold(field.zero(), |acc, t| {
                    let c = field.from_int(t.coef);
                    acc.add(&c.mul(&p.0[t.i]).mul(&p.0[t.j]))
                })
            })
            .collect()
    }

    pub fn is_satisfied<S: Scalar>(&self, p: &RestrictedPoint<S>) -> bool {
        self.residuals(p).iter().all(Scalar::is_zero)
    }

    /// Gradients of all quadrics at `p`, one row per quadric.
    pub fn gradients<S: Scalar>(&self, p: &RestrictedPoint<S>) -> Vec<Vec<S>> {
        let field = p.0[0].field();
        self.quadrics
            .iter()
            .map(|q| {
                let mut g = vec![field.zero(); 8];
                for t in &q.terms {
                    let c = field.from_int(t.coef);
                    g[t.i] = g[t.i].add(&c.mul(&p.0[t.j]));
                    g[t.j] = g[t.j].add(&c.mul(&p.0[t.i]));
                }
                g
            })
            .collect()
    }
}

/// Residuals of the standard quadrics, by group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricResiduals<S> {
    pub cones: [S; 2],
    pub segre: [S; 3],
    pub pencil: [S; 4],
}

impl<S: Scalar> QuadricResiduals<S> {
    pub fn all_zero(&self) -> bool {
        self.cones.iter().chain(&self.segre).chain(&self.pencil).all(Scalar::is_zero)
    }
}

pub fn eval_quadrics<S: Scalar>(p: &RestrictedPoint<S>) -> QuadricResiduals<S> {
    let r = QuadricSystem::standard().residuals(p);
    QuadricResiduals {
        cones: [r[0].clone(), r[1].clone()],
        segre: [r[2].clone(), r[3].clone(), r[4].clone()],
        pencil: [r[5].clone(), r[6].clone(), r[7].clone(), r[8].clone()],
    }
}

pub fn is_on_variety<S: Scalar>(p: &RestrictedPoint<S>) -> bool {
    !p.is_zero() && eval_quadrics(p).all_zero()
}

/// Rank of the 9×8 matrix of quadric gradients at a point of the variety.
pub fn jacobian_equations_rank<S: Scalar>(p: &RestrictedPoint<S>) -> Result<usize> {
    if !is_on_variety(p) {
        return Err(Error::NotOnVariety);
    }
    Ok(linalg::rank(&QuadricSystem::standard().gradients(p)))
}
