//! Exact computational algebra for finite inverse semigroups and their
//! groupoid convolution algebras.
//!
//! The library builds finite inverse semigroups from partial-bijection
//! generators or raw multiplication tables, passes to the underlying
//! groupoid, and realizes the semigroup algebra as the groupoid
//! convolution algebra through an explicit unitriangular change of
//! basis inverted by Möbius inversion. On top of that sit block
//! decompositions into matrix algebras over maximal subgroups, a full
//! classification of irreducible representations via induction from
//! isotropy groups, center computations by two independent routes,
//! Stone-duality bookkeeping for the idempotent semilattice, and germ
//! groupoids of finite actions with covariant-pair extraction.
//!
//! All arithmetic is exact: prime fields or arbitrary-precision
//! rationals, with integer Möbius coefficients. Every randomized
//! procedure takes an explicit seed and defaults to 0.
//!
//! See the `examples/` directory for one runnable walkthrough per major
//! capability, and the `galg` binary for the JSON batch interface.

// Index-driven loops mirror the matrix and table notation throughout.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod field;
pub mod germs;
pub mod groupoid;
pub mod io;
pub mod iso;
pub mod matrix;
pub mod poset;
pub mod reps;
pub mod samples;
pub mod semigroup;
pub mod stone;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use semigroup::{BuildOptions, InverseSemigroup, PartialBijection};
