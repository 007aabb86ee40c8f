//! Exact computation of cohomology jump ideals for bounded complexes of free
//! modules over polynomial rings, freeness tests over Artinian local
//! algebras, and the quadratic-cone/annihilator local model of deformation
//! theory.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`], [`groebner`], [`ideal`]: polynomials over an exact field, reduced
//!   Gröbner bases, ideal sums, intersections and elimination.
//! - [`linalg`], [`minors`]: dense exact linear algebra and determinantal ideals.
//! - [`freecomplex`]: complexes of free modules, jump ideals and fiber cohomology.
//! - [`artinian`]: local algebras, modules over them, specialised complexes and
//!   the image/cohomology freeness verifiers.
//! - [`deformation`]: cup-product data, cones, annihilators, derivative spaces,
//!   finite families over Artinian bases, connecting maps and the local
//!   linearity check.
//! - [`io`], [`cli`]: JSON file formats, case files, verdict reports and the
//!   command-line driver used by the `jumploci` binary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod artinian;
pub mod cli;
pub mod deformation;
pub mod error;
pub mod field;
pub mod freecomplex;
pub mod groebner;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod minors;
pub mod poly;
pub mod random;

pub use error::{Error, Result};
pub use field::{Field, GaussianRational, Rational};
pub use ideal::{Ideal, QuotientDim};
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring};
