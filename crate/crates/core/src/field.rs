//! Exact ground fields: prime fields `F_p` and the rationals.
//!
//! A field is a value implementing [`ExactField`]; its elements implement
//! [`Scalar`]. Elements are always stored in canonical form (reduced residue,
//! or a fraction in lowest terms with positive denominator), so derived
//! equality is equality of field elements.
//!
//! The infallible arithmetic on [`Scalar`] panics when the operands belong to
//! different fields. The `try_*` variants return [`Error::FieldMismatch`]
//! instead.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Runtime description of a ground field, e.g. for the `--field` flag.
///
/// Text form is `p:<prime>` or `rational`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Prime(u32),
    Rational,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        PrimeField::new(p).map(|f| f.spec())
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => u64::from(*p),
            FieldSpec::Rational => 0,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Prime(p) => Some(u64::from(*p)),
            FieldSpec::Rational => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "p:{p}"),
            FieldSpec::Rational => write!(f, "rational"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        let digits = s
            .strip_prefix("p:")
            .ok_or_else(|| Error::parse(s, "expected `p:<prime>` or `rational`"))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::parse(s, "modulus is not an unsigned integer"))?;
        FieldSpec::prime(p)
    }
}

/// A ground field together with its element type.
pub trait ExactField: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    type Elem: Scalar<Field = Self>;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    /// Parses the text form of an element (decimal residue, or `n/d`).
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    /// All elements in residue order `0..p`; fails for infinite fields.
    fn elements(&self) -> Result<Vec<Self::Elem>>;

    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    fn order(&self) -> Option<u64> {
        self.spec().order()
    }
}

/// An element of an [`ExactField`].
pub trait Scalar:
    Clone + PartialEq + Eq + PartialOrd + Ord + Hash + Debug + Display + Send + Sync + 'static
{
    type Field: ExactField<Elem = Self>;

    fn field(&self) -> Self::Field;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn try_add(&self, rhs: &Self) -> Result<Self> {
        same_field(self, rhs)?;
        Ok(self.add(rhs))
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        same_field(self, rhs)?;
        Ok(self.mul(rhs))
    }

    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
}

fn same_field<S: Scalar>(a: &S, b: &S) -> Result<()> {
    let (fa, fb) = (a.field(), b.field());
    if fa == fb {
        Ok(())
    } else {
        Err(Error::FieldMismatch {
            left: fa.spec(),
            right: fb.spec(),
        })
    }
}

/// Returns `Σ a_i b_i`.
pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    assert_eq!(a.len(), b.len());
    let mut acc = a[0].field().zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.add(&x.mul(y));
    }
    acc
}

// ---------------------------------------------------------------------------
// Prime fields

/// The prime field `F_p`, `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, residue: u32) -> Fp {
        Fp {
            value: residue % self.p,
            modulus: self.p,
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl ExactField for PrimeField {
    type Elem = Fp;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn zero(&self) -> Fp {
        self.elem(0)
    }

    fn one(&self) -> Fp {
        self.elem(1)
    }

    fn from_int(&self, n: i64) -> Fp {
        self.elem(n.rem_euclid(i64::from(self.p)) as u32)
    }

    fn parse(&self, s: &str) -> Result<Fp> {
        let n: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::parse(s, "expected a decimal residue"))?;
        Ok(self.from_int(n))
    }

    fn elements(&self) -> Result<Vec<Fp>> {
        Ok((0..self.p).map(|v| self.elem(v)).collect())
    }
}

/// Residue modulo a prime, always in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn value(&self) -> u32 {
        self.value
    }

    #[inline]
    fn check(&self, rhs: &Fp) {
        assert_eq!(self.modulus, rhs.modulus, "field mismatch");
    }

    fn with(&self, value: u64) -> Fp {
        Fp {
            value: (value % u64::from(self.modulus)) as u32,
            modulus: self.modulus,
        }
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Scalar for Fp {
    type Field = PrimeField;

    fn field(&self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    #[inline]
    fn add(&self, rhs: &Fp) -> Fp {
        self.check(rhs);
        self.with(u64::from(self.value) + u64::from(rhs.value))
    }

    #[inline]
    fn sub(&self, rhs: &Fp) -> Fp {
        self.check(rhs);
        self.with(u64::from(self.value) + u64::from(self.modulus) - u64::from(rhs.value))
    }

    #[inline]
    fn mul(&self, rhs: &Fp) -> Fp {
        self.check(rhs);
        self.with(u64::from(self.value) * u64::from(rhs.value))
    }

    #[inline]
    fn neg(&self) -> Fp {
        self.with(u64::from(self.modulus) - u64::from(self.value))
    }

    fn inv(&self) -> Result<Fp> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2)
        let p = u64::from(self.modulus);
        let mut base = u64::from(self.value);
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Ok(self.with(acc))
    }
}

// ---------------------------------------------------------------------------
// Rationals

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RationalField;

impl ExactField for RationalField {
    type Elem = Rational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn zero(&self) -> Rational {
        Rational(BigRational::zero())
    }

    fn one(&self) -> Rational {
        Rational(BigRational::one())
    }

    fn from_int(&self, n: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn parse(&self, s: &str) -> Result<Rational> {
        s.parse()
    }

    fn elements(&self) -> Result<Vec<Rational>> {
        Err(Error::InfiniteField(FieldSpec::Rational))
    }
}

/// Arbitrary-precision rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom.into())))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let int = |part: &str| -> Result<BigInt> {
            part.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::parse(s, "expected `n` or `n/d`"))
        };
        let value = match t.split_once('/') {
            Some((n, d)) => {
                let (n, d) = (int(n)?, int(d)?);
                if d.is_zero() {
                    return Err(Error::parse(s, "zero denominator"));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(int(t)?),
        };
        Ok(Rational(value))
    }
}

impl Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Scalar for Rational {
    type Field = RationalField;

    fn field(&self) -> RationalField {
        RationalField
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }
}

impl Rational {
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}
