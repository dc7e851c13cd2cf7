//! Brute-force reference checks used by the verification suites.
//!
//! Nothing here shares code with the structural criteria it is compared
//! against: every function searches the whole finite object.

use crate::error::Result;
use crate::field::{ExactField, Scalar};
use crate::ternion::{enumerate_ternions, Ternion};
use crate::tmodule::{TernionMatrix2, TernionPair};

/// Searches for `C, D ∈ T` with `AC + BD = I`.
pub fn has_unimodular_witness<S: Scalar>(pair: &TernionPair<S>) -> Result<bool> {
    let field = pair.field();
    let ts = enumerate_ternions(&field)?;
    let id = Ternion::identity(&field);
    Ok(ts
        .iter()
        .any(|c| ts.iter().any(|d| pair.a.mul(c).add(&pair.b.mul(d)) == id)))
}

/// All `q^12` matrices over `T`.
pub fn enumerate_matrices<F: ExactField>(field: &F) -> Result<Vec<TernionMatrix2<F::Elem>>> {
    let ts = enumerate_ternions(field)?;
    let mut out = Vec::with_capacity(ts.len().pow(4));
    for s11 in &ts {
        for s12 in &ts {
            for s21 in &ts {
                for s22 in &ts {
                    out.push(TernionMatrix2::new(
                        s11.clone(),
                        s12.clone(),
                        s21.clone(),
                        s22.clone(),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// True iff some matrix in `all` is a two-sided inverse of `m`.
pub fn has_matrix_inverse<S: Scalar>(m: &TernionMatrix2<S>, all: &[TernionMatrix2<S>]) -> bool {
    let id = TernionMatrix2::identity(&m.entries[0][0].field());
    all.iter().any(|n| m.mul(n) == id && n.mul(m) == id)
}

/// Rank over `F` of the left-multiplication map `N ↦ M N` on the
/// 12-dimensional space of matrices over `T`. In a finite ring a matrix is
/// invertible iff this map is a bijection, i.e. iff the rank is 12.
pub fn left_multiplication_rank<S: Scalar>(m: &TernionMatrix2<S>) -> usize {
    let field = m.entries[0][0].field();
    let zero = Ternion::zero(&field);
    let units = Ternion::matrix_units(&field);
    let mut rows = Vec::with_capacity(12);
    for cell in 0..4 {
        for unit in &units {
            let mut e = [[zero.clone(), zero.clone()], [zero.clone(), zero.clone()]];
            e[cell / 2][cell % 2] = unit.clone();
            let [[s11, s12], [s21, s22]] = e;
            let image = m.mul(&TernionMatrix2::new(s11, s12, s21, s22));
            rows.push(image.entries.iter().flatten().flat_map(Ternion::entries).collect::<Vec<S>>());
        }
    }
    crate::linalg::rank(&rows)
}

/// Searches for a two-sided inverse in `T`.
pub fn has_ternion_inverse<S: Scalar>(t: &Ternion<S>) -> Result<bool> {
    let field = t.field();
    let id = Ternion::identity(&field);
    Ok(enumerate_ternions(&field)?
        .iter()
        .any(|s| t.mul(s) == id && s.mul(t) == id))
}

/// Dimension of the F-span of `vectors`, computed by counting the distinct
/// linear combinations (`|span| = q^dim`). Only for small finite fields.
pub fn span_dimension_by_counting<S: Scalar>(vectors: &[Vec<S>]) -> Result<usize> {
    use std::collections::BTreeSet;
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let field = first[0].field();
    let els = field.elements()?;
    let q = els.len();
    let mut span: BTreeSet<Vec<S>> = BTreeSet::new();
    span.insert(vec![field.zero(); first.len()]);
    for v in vectors {
        let mut next = BTreeSet::new();
        for w in &span {
            for c in &els {
                let comb: Vec<S> = w.iter().zip(v).map(|(x, y)| x.add(&c.mul(y))).collect();
                next.insert(comb);
            }
        }
        span = next;
    }
    let mut dim = 0;
    let mut size = span.len();
    while size > 1 {
        assert_eq!(size % q, 0);
        size /= q;
        dim += 1;
    }
    Ok(dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::tmodule::enumerate_pairs;

    #[test]
    fn matrix_count_over_f2() {
        let f = PrimeField::new(2).unwrap();
        assert_eq!(enumerate_matrices(&f).unwrap().len(), 4096);
    }

    #[test]
    fn left_multiplication_oracle_agrees_with_search_over_f2() {
        let f = PrimeField::new(2).unwrap();
        let all = enumerate_matrices(&f).unwrap();
        for m in all.iter().step_by(7) {
            assert_eq!(left_multiplication_rank(m) == 12, has_matrix_inverse(m, &all));
        }
    }

    #[test]
    fn span_counting() {
        let f = PrimeField::new(3).unwrap();
        let v = |c: [i64; 3]| c.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>();
        assert_eq!(span_dimension_by_counting(&[v([1, 0, 0]), v([2, 0, 0])]).unwrap(), 1);
        assert_eq!(span_dimension_by_counting(&[v([1, 1, 0]), v([0, 1, 1]), v([1, 2, 1])]).unwrap(), 2);
    }

    #[test]
    fn witness_search_finds_x0() {
        let f = PrimeField::new(3).unwrap();
        assert!(has_unimodular_witness(&TernionPair::x0(&f)).unwrap());
        assert!(!has_unimodular_witness(&TernionPair::y0(&f)).unwrap());
        assert!(enumerate_pairs(&f).unwrap().len() == 729);
    }
}
