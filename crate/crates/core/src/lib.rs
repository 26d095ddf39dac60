//! Flag triangulations of 2- and 3-manifolds.
//!
//! A flag complex is the clique complex of its graph, so [`FlagComplex`] stores
//! only the 1-skeleton and derives faces on demand. General (possibly non-flag)
//! inputs go through [`SimplicialComplex`], which keeps an explicit facet list.
//!
//! The crate is organised as:
//!
//! - [`complex`]: facet-list and graph representations, links, stars, f-vectors.
//! - [`moves`]: edge subdivision, admissible edge contraction, stellar subdivision.
//! - [`topology`]: Betti numbers over GF(2) and the rationals, manifold checks,
//!   orientability, surface classification and the γ/g invariants.
//! - [`constructors`]: fixtures, products, flag connected sums, handle additions
//!   and the γ₂-tight family.
//! - [`iso`]: canonical forms and isomorphism of flag complexes.
//! - [`search`]: the randomized subdivide/contract minimization loop.
//! - [`format`]: plain-text and JSON facet files.

pub mod complex;
pub mod constructors;
pub mod error;
pub mod format;
pub mod iso;
pub mod moves;
pub mod search;
pub mod topology;

pub use complex::{Complex, FVector, FlagComplex, Simplex, SimplicialComplex, Skeleton, VertexId};
pub use error::{Error, Result};
pub use iso::CanonicalForm;
pub use moves::{Move, MoveKind, MoveTrace};
pub use search::{MinimaArchive, Objective, SearchConfig};
pub use topology::{BettiVector, Field, GammaNumbers, SurfaceType};
