//! Knot Floer homology of knots in the three-sphere computed from grid
//! diagrams, together with the grid invariants of Legendrian and transverse
//! knots and the tools for comparing them across grid moves and connected sums.

pub mod battery;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod f2;
pub mod grid;
pub mod homology;
pub mod invariants;
pub mod moves;
pub mod poly;

pub use complex::{Bigrading, Chain, Flavor, GridState, Monomial};
pub use error::{Error, Result};
pub use f2::SparseF2Matrix;
pub use grid::{ClassicalInvariants, GridDiagram, Marker};
pub use invariants::{lambda_status, theta_status, x_minus, x_plus, InvariantStatus, Sign};
pub use homology::{tilde_homology, GridComplex, HomologyOptions, HomologyReport, Verdict};
pub use moves::{GridMove, MoveClass, StabType};
pub use poly::{F2Laurent, Laurent2};
