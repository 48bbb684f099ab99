//! Separable, 2π-aperiodic solutions of the Navier-Lamé equation in
//! cylindrical coordinates, constructed from Buchwald potentials.

pub mod buchwald;
pub mod bvp;
pub mod catalog;
pub mod factor;
pub mod fields;
pub mod helmholtz2d;
pub mod model;
pub mod specfun;
pub mod verify;

pub use model::{Material, ModalParams, SpacetimePoint};
