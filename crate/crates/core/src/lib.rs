//! Exact verification toolkit for triangulated spaces.
//!
//! The crate decides and certifies combinatorial-topology properties of
//! finite abstract simplicial complexes: tightness with respect to a field,
//! stackedness of 2-spheres and 3-manifolds, icosian link structure, the
//! sigma/mu invariants, and the integer feasibility conditions for tight
//! triangulated 3-manifolds. All arithmetic is exact (prime fields,
//! arbitrary-precision rationals and integers).
//!
//! Module map:
//!
//! - [`complex`]: immutable complexes and their combinatorics.
//! - [`homology`]: Betti numbers over GF(p) and Q, integral homology,
//!   induced-map injectivity.
//! - [`sphere`]: 2-sphere recognition and connected-sum decomposition.
//! - [`tightness`]: sigma/mu vectors, brute-force and criterion tightness.
//! - [`feasibility`]: parameter arithmetic for tight 3-manifolds.
//! - [`io`]: complex documents and the fixture catalog.

pub mod complex;
pub mod error;
pub mod exec;
pub mod feasibility;
pub mod homology;
pub mod io;
pub mod sphere;
pub mod tightness;

pub use complex::{Face, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use exec::Strategy;
pub use homology::FieldSpec;
