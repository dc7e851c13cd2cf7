//! Exact point model of the free cyclic submodules of `T^2`, where `T` is the
//! ring of ternions (upper-triangular 2×2 matrices) over a field.
//!
//! * [`field`]: prime fields and the rationals.
//! * [`ternion`]: the ring `T`.
//! * [`tmodule`]: pairs, cyclic submodules as subspaces of `F^6`, the
//!   `GL_2(T)` action and the X / Y / non-free classification.
//! * [`grassmann`]: Plücker coordinates of 3-dimensional subspaces of `F^6`.
//! * [`variety`]: the image variety in an 8-dimensional subspace of `F^20`,
//!   its equations, parametrizations and substructures.
//! * [`oracle`]: brute-force reference checks.

pub mod error;
pub mod field;
pub mod grassmann;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod ternion;
pub mod tmodule;
pub mod variety;

pub use error::{Error, Result};
pub use field::{ExactField, FieldSpec, Fp, PrimeField, Rational, RationalField, Scalar};
pub use grassmann::{plucker, PluckerVector, TripleIndex};
pub use ternion::Ternion;
pub use tmodule::{ClassFilter, PairClass, Subspace3, TernionMatrix2, TernionPair, Vector6};
pub use variety::RestrictedPoint;
