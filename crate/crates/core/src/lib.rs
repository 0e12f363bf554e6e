//! Exact K-type multiplicities for the four irreducible (sl3, SO(3))-modules
//! with integral infinitesimal character.
//!
//! Three independent routes are provided and cross-checked:
//!
//! * [`positive`]: lattice points of a region `C_O ⊂ N²` projected to `N`;
//! * [`orbits`] (and the T_K-level variant in [`charseries`]): sums of
//!   vector partition functions over the torus-fixed points of the orbit
//!   closure, graded by an extra `C^×`-action;
//! * [`oracle`]: Kostant weight multiplicities of the finite-dimensional
//!   irrep, restricted to SO(3).

pub mod charseries;
pub mod compare;
pub mod error;
pub mod orbits;
pub mod oracle;
pub mod positive;
pub mod report;
pub mod svg;
pub mod vecpart;
pub mod weights;

pub use compare::{crosscheck, mult_table, CrosscheckSummary, Counterexample};
pub use error::{Error, Result};
pub use orbits::{Method, MultTable, Orbit};
