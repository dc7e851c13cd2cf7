//! The ring `T` of upper-triangular 2×2 matrices over a field.
//!
//! A ternion is stored as its three entries `(a11, a12, a22)`, in the layout
//!
//! ```text
//! [ a11  a12 ]
//! [  0   a22 ]
//! ```
//!
//! and this order is used for every flattening to `F^3`.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{ExactField, Scalar};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Ternion<S> {
    pub a11: S,
    pub a12: S,
    pub a22: S,
}

/// Distinguished subsets of `T` a ternion may belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subring {
    /// `xI`, a copy of the ground field.
    Scalar,
    /// `a11 = a22`: the dual numbers.
    Dual,
    /// `a12 = 0`: the double numbers.
    Double,
    /// `a11 = a22 = 0`: the Jacobson radical.
    Radical,
}

impl<S: Scalar> Ternion<S> {
    pub fn new(a11: S, a12: S, a22: S) -> Self {
        Ternion { a11, a12, a22 }
    }

    pub fn zero<F: ExactField<Elem = S>>(field: &F) -> Self {
        Ternion::new(field.zero(), field.zero(), field.zero())
    }

    pub fn identity<F: ExactField<Elem = S>>(field: &F) -> Self {
        Ternion::new(field.one(), field.zero(), field.one())
    }

    /// `x ↦ xI`; lands in the center of `T`.
    pub fn embed_scalar(x: &S) -> Self {
        Ternion::new(x.clone(), x.field().zero(), x.clone())
    }

    /// Matrix units `E11, E12, E22`, an F-basis of `T`.
    pub fn matrix_units<F: ExactField<Elem = S>>(field: &F) -> [Self; 3] {
        let (o, l) = (field.zero(), field.one());
        [
            Ternion::new(l.clone(), o.clone(), o.clone()),
            Ternion::new(o.clone(), l.clone(), o.clone()),
            Ternion::new(o.clone(), o, l),
        ]
    }

    pub fn from_ints<F: ExactField<Elem = S>>(field: &F, a11: i64, a12: i64, a22: i64) -> Self {
        Ternion::new(field.from_int(a11), field.from_int(a12), field.from_int(a22))
    }

    pub fn field(&self) -> S::Field {
        self.a11.field()
    }

    /// Entries as a vector of `F^3` in `(a11, a12, a22)` order.
    pub fn entries(&self) -> [S; 3] {
        [self.a11.clone(), self.a12.clone(), self.a22.clone()]
    }

    pub fn from_entries([a11, a12, a22]: [S; 3]) -> Self {
        Ternion { a11, a12, a22 }
    }

    pub fn is_zero(&self) -> bool {
        self.a11.is_zero() && self.a12.is_zero() && self.a22.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Ternion::new(
            self.a11.add(&rhs.a11),
            self.a12.add(&rhs.a12),
            self.a22.add(&rhs.a22),
        )
    }

    pub fn neg(&self) -> Self {
        Ternion::new(self.a11.neg(), self.a12.neg(), self.a22.neg())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, x: &S) -> Self {
        Ternion::new(self.a11.mul(x), self.a12.mul(x), self.a22.mul(x))
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        Ternion::new(
            self.a11.mul(&rhs.a11),
            self.a11.mul(&rhs.a12).add(&self.a12.mul(&rhs.a22)),
            self.a22.mul(&rhs.a22),
        )
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        Ok(self.add(rhs))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        Ok(self.mul(rhs))
    }

    fn check_field(&self, rhs: &Self) -> Result<()> {
        let (l, r) = (self.field(), rhs.field());
        if l == r {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: l.spec(),
                right: r.spec(),
            })
        }
    }

    pub fn is_unit(&self) -> bool {
        !self.a11.is_zero() && !self.a22.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NonUnit(self.to_string()));
        }
        let i11 = self.a11.inv()?;
        let i22 = self.a22.inv()?;
        let i12 = self.a12.mul(&i11).mul(&i22).neg();
        Ok(Ternion::new(i11, i12, i22))
    }

    pub fn subring_class(&self) -> BTreeSet<Subring> {
        let mut out = BTreeSet::new();
        let diag_eq = self.a11 == self.a22;
        let upper_zero = self.a12.is_zero();
        if diag_eq && upper_zero {
            out.insert(Subring::Scalar);
        }
        if diag_eq {
            out.insert(Subring::Dual);
        }
        if upper_zero {
            out.insert(Subring::Double);
        }
        if self.a11.is_zero() && self.a22.is_zero() {
            out.insert(Subring::Radical);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a11": self.a11.to_string(),
            "a12": self.a12.to_string(),
            "a22": self.a22.to_string(),
        })
    }

    pub fn from_json<F: ExactField<Elem = S>>(value: &Value, field: &F) -> Result<Self> {
        let entry = |key: &str| -> Result<S> {
            let raw = value
                .get(key)
                .ok_or_else(|| Error::parse(value.to_string(), format!("missing `{key}`")))?;
            match raw {
                Value::String(s) => field.parse(s),
                Value::Number(n) => field.parse(&n.to_string()),
                _ => Err(Error::parse(raw.to_string(), "expected a scalar string")),
            }
        };
        Ok(Ternion::new(entry("a11")?, entry("a12")?, entry("a22")?))
    }
}

impl<S: Scalar> fmt::Display for Ternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; 0 {}]", self.a11, self.a12, self.a22)
    }
}

/// All `q^3` ternions, ordered lexicographically by `(a11, a12, a22)`.
pub fn enumerate_ternions<F: ExactField>(field: &F) -> Result<Vec<Ternion<F::Elem>>> {
    let els = field.elements()?;
    let mut out = Vec::with_capacity(els.len().pow(3));
    for a11 in &els {
        for a12 in &els {
            for a22 in &els {
                out.push(Ternion::new(a11.clone(), a12.clone(), a22.clone()));
            }
        }
    }
    Ok(out)
}

/// The `(q-1)^2 q` units of `T`.
pub fn enumerate_units<F: ExactField>(field: &F) -> Result<Vec<Ternion<F::Elem>>> {
    Ok(enumerate_ternions(field)?
        .into_iter()
        .filter(Ternion::is_unit)
        .collect())
}
