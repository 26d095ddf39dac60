//! Homology ranks, manifold recognition in dimensions up to 3, orientability,
//! surface classification and the γ/g invariants.

mod gamma;
mod homology;
mod manifold;

pub use gamma::{conjecture_check, conjecture_check_over, gamma_numbers, ConjectureReport, GammaNumbers};
pub use homology::{betti, betti_both, BettiVector, Field};
pub use manifold::{
    classify_surface, is_closed_3_manifold, is_closed_surface, manifold_check, orientable, surface_check,
    three_manifold_check, top_rational_betti, ManifoldVerdict, SurfaceType,
};
