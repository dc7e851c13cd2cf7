//! Multivariate polynomials with integer coefficients, used for formal
//! derivatives. Derivatives are taken over `Z` and only then mapped into the
//! ground field, so they are valid in every characteristic.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::{ExactField, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    // exponent vector -> nonzero coefficient
    terms: BTreeMap<Vec<u32>, i64>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = Poly::zero(nvars);
        p.insert(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Poly::zero(nvars);
        p.insert(exps, 1);
        p
    }

    fn insert(&mut self, exps: Vec<u32>, c: i64) {
        let slot = self.terms.entry(exps).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), *c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert(e, ca * cb);
            }
        }
        out
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.insert(d, c * i64::from(e[i]));
        }
        out
    }

    pub fn eval<S: Scalar>(&self, field: &S::Field, point: &[S]) -> S {
        assert_eq!(point.len(), self.nvars);
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            let mut term = field.from_int(*c);
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term = term.mul(x);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Evaluates the Jacobian `∂ polys[r] / ∂ x_c` at `point`, one row per
/// variable and one column per polynomial.
pub fn jacobian_at<S: Scalar>(field: &S::Field, polys: &[Poly], point: &[S]) -> Vec<Vec<S>> {
    let nvars = point.len();
    (0..nvars)
        .map(|c| polys.iter().map(|p| p.derivative(c).eval(field, point)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};

    #[test]
    fn derivative_of_cube() {
        // f = -x0 * x1^2
        let x0 = Poly::var(2, 0);
        let x1 = Poly::var(2, 1);
        let f = x0.mul(&x1).mul(&x1).neg();
        let d1 = f.derivative(1);
        assert_eq!(d1, Poly::constant(2, -2).mul(&x0).mul(&x1));
        assert_eq!(f.derivative(0), x1.mul(&x1).neg());
        assert!(f.derivative(0).derivative(0).is_zero());
    }

    #[test]
    fn characteristic_two_kills_even_coefficients() {
        let x = Poly::var(1, 0);
        let sq = x.mul(&x);
        let f2 = PrimeField::new(2).unwrap();
        let one = f2.one();
        assert!(sq.derivative(0).eval(&f2, &[one]).is_zero());
        let q = RationalField;
        assert_eq!(sq.derivative(0).eval(&q, &[q.one()]), q.from_int(2));
    }

    #[test]
    fn cancellation() {
        let x = Poly::var(3, 2);
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.add(&x).to_string(), "2*x2");
    }
}
