//! The local model around a point of a jump locus: cup-product data, the
//! quadratic cone, annihilator subspaces, derivative spaces of maps from
//! Artinian bases, finite families over those bases, connecting maps along a
//! composition series, and the comparison of jump ideals with linear ideals.

mod boundary;
mod cup;
mod linear;
mod model;
mod prop_main;

pub use boundary::{connecting_map, verify_boundary_formula, BoundaryVerdict, ConnectingMap};
pub use cup::{Annihilator, CupData};
pub use linear::{verify_thm_linear, ThmLinearVerdict, DEFAULT_DEPTH};
pub use model::{derivative_space, derivative_space_in_basis, truncate_map, AlgebraModel};
pub use prop_main::{verify_prop_main, PropMainSides, PropMainVerdict};
