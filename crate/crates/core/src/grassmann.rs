//! Grassmann (Plücker) coordinates of 3-dimensional subspaces of `F^6`.
//!
//! A subspace spanned by the rows of a 3×6 matrix is sent to the vector of its
//! twenty 3×3 minors `p_ijk`, `1 ≤ i < j < k ≤ 6`, taken with the rows in their
//! stored order and the columns `i, j, k` in increasing order. Coordinates are
//! stored in lexicographic order of the index triples:
//!
//! | pos | ijk | pos | ijk | pos | ijk | pos | ijk |
//! |-----|-----|-----|-----|-----|-----|-----|-----|
//! | 0   | 123 | 5   | 135 | 10  | 234 | 15  | 256 |
//! | 1   | 124 | 6   | 136 | 11  | 235 | 16  | 345 |
//! | 2   | 125 | 7   | 145 | 12  | 236 | 17  | 346 |
//! | 3   | 126 | 8   | 146 | 13  | 245 | 18  | 356 |
//! | 4   | 134 | 9   | 156 | 14  | 246 | 19  | 456 |

use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{ExactField, Scalar};
use crate::linalg;
use crate::tmodule::{Subspace3, Vector6};

/// The twenty index triples in lexicographic order.
pub const TRIPLES: [(usize, usize, usize); 20] = {
    let mut out = [(0, 0, 0); 20];
    let mut n = 0;
    let mut i = 1;
    while i <= 6 {
        let mut j = i + 1;
        while j <= 6 {
            let mut k = j + 1;
            while k <= 6 {
                out[n] = (i, j, k);
                n += 1;
                k += 1;
            }
            j += 1;
        }
        i += 1;
    }
    out
};

/// An index triple `1 ≤ i < j < k ≤ 6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripleIndex {
    i: usize,
    j: usize,
    k: usize,
}

impl TripleIndex {
    pub fn new(i: usize, j: usize, k: usize) -> Result<Self> {
        if 1 <= i && i < j && j < k && k <= 6 {
            Ok(TripleIndex { i, j, k })
        } else {
            Err(Error::InvalidTriple(i, j, k))
        }
    }

    pub fn position(&self) -> usize {
        TRIPLES
            .iter()
            .position(|&t| t == (self.i, self.j, self.k))
            .expect("valid triple")
    }

    pub fn from_position(pos: usize) -> Option<Self> {
        TRIPLES.get(pos).map(|&(i, j, k)| TripleIndex { i, j, k })
    }

    pub fn indices(&self) -> (usize, usize, usize) {
        (self.i, self.j, self.k)
    }

    /// Label such as `"p135"`.
    pub fn label(&self) -> String {
        format!("p{}{}{}", self.i, self.j, self.k)
    }
}

pub(crate) fn pos(i: usize, j: usize, k: usize) -> usize {
    TripleIndex::new(i, j, k).expect("valid triple").position()
}

/// Coordinates in `F^6 ∧ F^6 ∧ F^6 ≅ F^20`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PluckerVector<S>(pub [S; 20]);

impl<S: Scalar> PluckerVector<S> {
    pub fn zero<F: ExactField<Elem = S>>(field: &F) -> Self {
        PluckerVector(std::array::from_fn(|_| field.zero()))
    }

    /// Standard basis vector `e_ijk`.
    pub fn basepoint<F: ExactField<Elem = S>>(field: &F, i: usize, j: usize, k: usize) -> Result<Self> {
        let t = TripleIndex::new(i, j, k)?;
        let mut v = Self::zero(field);
        v.0[t.position()] = field.one();
        Ok(v)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &S {
        &self.0[pos(i, j, k)]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        PluckerVector(std::array::from_fn(|n| self.0[n].add(&rhs.0[n])))
    }

    pub fn scale(&self, x: &S) -> Self {
        PluckerVector(std::array::from_fn(|n| self.0[n].mul(x)))
    }

    /// The multiple whose first nonzero coordinate is 1.
    pub fn normalize(&self) -> Result<Self> {
        let mut v = self.clone();
        linalg::normalize_in_place(&mut v.0)?;
        Ok(v)
    }

    pub fn projective_eq(&self, other: &Self) -> Result<bool> {
        linalg::proportional(&self.0, &other.0)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(|x| Value::String(x.to_string())).collect())
    }

    pub fn from_json<F: ExactField<Elem = S>>(value: &Value, field: &F) -> Result<Self> {
        let arr = value
            .as_array()
            .filter(|a| a.len() == 20)
            .ok_or_else(|| Error::parse(value.to_string(), "expected a 20-element array"))?;
        let coords = arr
            .iter()
            .map(|x| scalar_from_json(x, field))
            .collect::<Result<Vec<_>>>()?;
        Ok(PluckerVector(coords.try_into().expect("length checked")))
    }
}

impl<S: Scalar> fmt::Display for PluckerVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let (i, j, k) = TRIPLES[n];
            write!(f, "{x}*e{i}{j}{k}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub(crate) fn scalar_from_json<F: ExactField>(value: &Value, field: &F) -> Result<F::Elem> {
    match value {
        Value::String(s) => field.parse(s),
        Value::Number(n) => field.parse(&n.to_string()),
        _ => Err(Error::parse(value.to_string(), "expected a scalar")),
    }
}

/// Parses a JSON array of 6-element rows.
pub fn rows_from_json<F: ExactField>(value: &Value, field: &F) -> Result<Vec<Vector6<F::Elem>>> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::parse(value.to_string(), "expected an array of rows"))?;
    rows.iter()
        .map(|row| {
            let entries = row
                .as_array()
                .filter(|r| r.len() == 6)
                .ok_or_else(|| Error::parse(row.to_string(), "expected a row of 6 scalars"))?;
            let coords = entries
                .iter()
                .map(|x| scalar_from_json(x, field))
                .collect::<Result<Vec<_>>>()?;
            Ok(Vector6(coords.try_into().expect("six entries")))
        })
        .collect()
}

/// Minors of three rows in the given order; zero iff the rows are dependent.
pub fn minors<S: Scalar>(rows: [&Vector6<S>; 3]) -> PluckerVector<S> {
    PluckerVector(std::array::from_fn(|n| {
        let (i, j, k) = TRIPLES[n];
        let m = |r: usize| [&rows[r].0[i - 1], &rows[r].0[j - 1], &rows[r].0[k - 1]];
        linalg::det3([m(0), m(1), m(2)])
    }))
}

/// Grassmann coordinates of a 3-dimensional subspace, from its stored basis.
pub fn plucker<S: Scalar>(sub: &Subspace3<S>) -> Result<PluckerVector<S>> {
    match sub.basis() {
        [r0, r1, r2] => Ok(minors([r0, r1, r2])),
        b => Err(Error::Rank(b.len())),
    }
}

/// Grassmann coordinates of the row space of a 3×6 matrix, rows kept in the
/// given order. Fails unless the rows have rank 3.
pub fn plucker_of_rows<S: Scalar>(rows: &[Vector6<S>]) -> Result<PluckerVector<S>> {
    let r = linalg::rank(&rows.iter().map(|v| v.0.to_vec()).collect::<Vec<_>>());
    match rows {
        [r0, r1, r2] if r == 3 => Ok(minors([r0, r1, r2])),
        _ => Err(Error::Rank(r)),
    }
}
