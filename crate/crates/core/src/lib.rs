//! Exact polygonal knots in the cubic lattice and the simple hexagonal (sh)
//! lattice.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is integer or exact
//! rational arithmetic; floating point never enters a decision.
//!
//! * [`lattice`]: stick words, validation, levels, symmetry canonicalization.
//! * [`transform`]: the cubic to sh relabeling map, its inverse, the sh to cubic
//!   edge rewrite and the two lower-bound formulas.
//! * [`moves`]: knot-type preserving rewriting moves.
//! * [`knot_id`]: projection to a diagram, Alexander polynomial, Kauffman
//!   bracket and classification.
//! * [`enumerate`]: bounded exhaustive search over leveled sh polygons.
//! * [`catalog`]: reference conformations used by tests and the CLI.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod catalog;
pub mod enumerate;
pub mod geom;
pub mod knot_id;
pub mod lattice;
pub mod moves;
pub mod transform;

pub use knot_id::{classify, KnotTag, KnotType};
pub use lattice::{
    parse_knotw, parse_word, validate, Direction, Lattice, LatticePoint, Polygon, Stick, StickCounts, ValidationReport,
};
