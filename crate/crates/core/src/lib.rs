//! Combinatorial side of the toolkit: root data, the affine Weyl group and
//! its alcove geometry, LS galleries with root operators, finite crystals,
//! and i-trails for string cones in type A.

pub mod affine;
pub mod crystal;
pub mod gallery;
pub mod trails;
pub mod rootdata;

pub use rootdata::{Coweight, Root, RootDatum, RootError, Series, WeylElt, Q};
