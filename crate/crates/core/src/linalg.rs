//! Row reduction and projective-point helpers over an exact field.

use crate::error::{Error, Result};
use crate::field::{ExactField, Scalar};

/// Reduces `rows` in place to reduced row-echelon form, drops zero rows and
/// returns the pivot columns.
pub fn rref<S: Scalar>(rows: &mut Vec<Vec<S>>) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for j in col..width {
                let delta = factor.mul(&rows[r][j]);
                rows[i][j] = rows[i][j].sub(&delta);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Determinant of a 3×3 matrix by cofactor expansion.
pub fn det3<S: Scalar>(m: [[&S; 3]; 3]) -> S {
    let minor = |a: &S, b: &S, c: &S, d: &S| a.mul(d).sub(&b.mul(c));
    let t0 = m[0][0].mul(&minor(m[1][1], m[1][2], m[2][1], m[2][2]));
    let t1 = m[0][1].mul(&minor(m[1][0], m[1][2], m[2][0], m[2][2]));
    let t2 = m[0][2].mul(&minor(m[1][0], m[1][1], m[2][0], m[2][1]));
    t0.sub(&t1).add(&t2)
}

/// Scales `v` so that its first nonzero coordinate is 1.
pub fn normalize_in_place<S: Scalar>(v: &mut [S]) -> Result<()> {
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .ok_or(Error::ZeroVector)?
        .inv()?;
    for x in v.iter_mut() {
        *x = x.mul(&lead);
    }
    Ok(())
}

/// True iff `b = λ a` for some nonzero λ; both vectors must be nonzero.
pub fn proportional<S: Scalar>(a: &[S], b: &[S]) -> Result<bool> {
    if a.iter().all(Scalar::is_zero) || b.iter().all(Scalar::is_zero) {
        return Err(Error::ZeroVector);
    }
    let mut na = a.to_vec();
    let mut nb = b.to_vec();
    normalize_in_place(&mut na)?;
    normalize_in_place(&mut nb)?;
    Ok(na == nb)
}

/// Number of projective points of `P^(n-1)(F_q)`.
pub fn projective_count(q: u64, n: u32) -> u64 {
    (q.pow(n) - 1) / (q - 1)
}

/// The `index`-th normalized representative of `P^(n-1)(F_q)`.
///
/// Points are ordered by the position of their leading 1 (leftmost first),
/// then by the remaining coordinates read as a base-q number, most significant
/// first.
pub fn projective_point<F: ExactField>(field: &F, elements: &[F::Elem], n: usize, index: u64) -> Vec<F::Elem> {
    let q = elements.len() as u64;
    let mut idx = index;
    let mut lead = 0;
    loop {
        let block = q.pow((n - lead - 1) as u32);
        if idx < block {
            break;
        }
        idx -= block;
        lead += 1;
        assert!(lead < n, "projective index out of range");
    }
    let mut v = vec![field.zero(); n];
    v[lead] = field.one();
    for pos in (lead + 1..n).rev() {
        v[pos] = elements[(idx % q) as usize].clone();
        idx /= q;
    }
    v
}

/// All normalized points of `P^(n-1)(F_q)` in [`projective_point`] order.
pub fn projective_points<F: ExactField>(field: &F, n: usize) -> Result<Vec<Vec<F::Elem>>> {
    let elements = field.elements()?;
    let q = elements.len() as u64;
    Ok((0..projective_count(q, n as u32))
        .map(|i| projective_point(field, &elements, n, i))
        .collect())
}

/// All vectors of `F_q^n` (including zero), lexicographic.
pub fn affine_points<F: ExactField>(field: &F, n: usize) -> Result<Vec<Vec<F::Elem>>> {
    let elements = field.elements()?;
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                elements.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn rows(field: &PrimeField, data: &[&[i64]]) -> Vec<Vec<crate::field::Fp>> {
        data.iter()
            .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
            .collect()
    }

    #[test]
    fn rref_canonical() {
        let f = gf(5);
        let mut m = rows(&f, &[&[0, 2, 4], &[1, 1, 1], &[1, 3, 0]]);
        let piv = rref(&mut m);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(m, rows(&f, &[&[1, 0, 4], &[0, 1, 2]]));
    }

    #[test]
    fn rank_of_zero_and_empty() {
        let f = gf(3);
        assert_eq!(rank(&rows(&f, &[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank::<crate::field::Fp>(&[]), 0);
    }

    #[test]
    fn det3_identity_and_singular() {
        let f = RationalField;
        let one = f.one();
        let zero = f.zero();
        let two = f.from_int(2);
        assert!(det3([[&one, &zero, &zero], [&zero, &one, &zero], [&zero, &zero, &one]]).is_one());
        assert!(det3([[&one, &two, &zero], [&two, &f.from_int(4), &zero], [&zero, &zero, &one]]).is_zero());
        // permutation (e2; e1; e3) has determinant -1
        assert_eq!(
            det3([[&zero, &one, &zero], [&one, &zero, &zero], [&zero, &zero, &one]]),
            one.neg()
        );
    }

    #[test]
    fn projective_enumeration_is_sorted_and_complete() {
        for p in [2, 3] {
            let f = gf(p);
            let pts = projective_points(&f, 4).unwrap();
            assert_eq!(pts.len() as u64, projective_count(p, 4));
            let key = |v: &Vec<crate::field::Fp>| {
                let lead = v.iter().position(|x| !x.is_zero()).unwrap();
                (lead, v.iter().map(|x| x.value()).collect::<Vec<_>>())
            };
            assert!(pts.windows(2).all(|w| key(&w[0]) < key(&w[1])));
            for v in &pts {
                let mut w = v.clone();
                normalize_in_place(&mut w).unwrap();
                assert_eq!(&w, v);
            }
        }
        assert_eq!(affine_points(&gf(3), 3).unwrap().len(), 27);
    }

    #[test]
    fn proportionality() {
        let f = gf(5);
        let a = rows(&f, &[&[0, 1, 2]]).remove(0);
        let b = rows(&f, &[&[0, 3, 1]]).remove(0);
        let c = rows(&f, &[&[0, 1, 3]]).remove(0);
        assert!(proportional(&a, &b).unwrap());
        assert!(!proportional(&a, &c).unwrap());
        assert_eq!(proportional(&a, &[f.zero(), f.zero(), f.zero()]), Err(Error::ZeroVector));
    }
}
