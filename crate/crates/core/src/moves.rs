//! Flag-preserving edge moves.
//!
//! Any two PL-homeomorphic flag complexes are connected by edge subdivisions
//! and edge contractions that keep every intermediate complex flag. A
//! subdivision is always flag; a contraction of `{a, b}` is flag exactly when no
//! induced 4-cycle `a–b–y–x` passes through the edge. Such edges are called
//! admissible.

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, FlagComplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    SubdivideEdge,
    ContractEdge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub edge: (VertexId, VertexId),
    /// Id of the vertex a subdivision creates.
    pub new_vertex: Option<VertexId>,
}

/// Moves applied to a seed complex, replayable bit for bit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveTrace {
    /// Canonical digest (hex) of the seed complex.
    pub seed_complex_id: String,
    pub rng_seed: u64,
    pub moves: Vec<Move>,
}

impl MoveTrace {
    pub fn new(seed_complex_id: String, rng_seed: u64) -> Self {
        MoveTrace {
            seed_complex_id,
            rng_seed,
            moves: Vec::new(),
        }
    }

    pub fn replay(&self, seed: &FlagComplex) -> Result<FlagComplex> {
        let mut c = seed.clone();
        for m in &self.moves {
            c = apply(&c, m)?;
        }
        Ok(c)
    }
}

fn check_edge(c: &FlagComplex, a: VertexId, b: VertexId) -> Result<()> {
    if a != b && c.has_edge(a, b) {
        Ok(())
    } else {
        Err(Error::EdgeNotFound(a, b))
    }
}

/// Stellar subdivision of a facet-list complex at any face.
pub fn stellar_subdivide(c: &SimplicialComplex, sigma: &[VertexId]) -> Result<SimplicialComplex> {
    c.stellar_subdivide(sigma)
}

pub fn satisfies_link_condition(c: &SimplicialComplex, a: VertexId, b: VertexId) -> Result<bool> {
    c.satisfies_link_condition(a, b)
}

/// Subdivides `{a, b}`: the edge is removed and a new vertex (id `f₀`) is joined
/// to `a`, `b` and every vertex of `lk({a, b})`.
pub fn subdivide_edge(c: &FlagComplex, a: VertexId, b: VertexId) -> Result<FlagComplex> {
    check_edge(c, a, b)?;
    let link = c.skeleton().common_neighbors(a, b);
    let mut s = c.skeleton().clone();
    let w = s.add_vertex();
    s.remove_edge(a, b);
    s.add_edge(a, w);
    s.add_edge(b, w);
    for x in link.ones() {
        s.add_edge(x, w);
    }
    Ok(FlagComplex::from_skeleton(s))
}

/// An induced 4-cycle `[a, b, y, x]` (in cycle order) through the edge, if one
/// exists. The lexicographically first `(x, y)` is reported.
pub fn induced_four_cycle(c: &FlagComplex, a: VertexId, b: VertexId) -> Result<Option<[VertexId; 4]>> {
    check_edge(c, a, b)?;
    let s = c.skeleton();
    let mut only_a = s.neighbors(a).clone();
    only_a.difference_with(s.neighbors(b));
    only_a.set(b, false);
    let mut only_b = s.neighbors(b).clone();
    only_b.difference_with(s.neighbors(a));
    only_b.set(a, false);
    for x in only_a.ones() {
        if let Some(y) = s.neighbors(x).intersection(&only_b).next() {
            return Ok(Some([a, b, y, x]));
        }
    }
    Ok(None)
}

pub fn is_admissible(c: &FlagComplex, a: VertexId, b: VertexId) -> Result<bool> {
    Ok(induced_four_cycle(c, a, b)?.is_none())
}

/// All admissible edges in lexicographic order.
pub fn admissible_edges(c: &FlagComplex) -> Vec<(VertexId, VertexId)> {
    c.edges()
        .into_iter()
        .filter(|&(a, b)| matches!(induced_four_cycle(c, a, b), Ok(None)))
        .collect()
}

/// Contracts an admissible edge onto its smaller endpoint. The larger endpoint
/// disappears and every id above it shifts down by one.
pub fn contract_edge(c: &FlagComplex, a: VertexId, b: VertexId) -> Result<FlagComplex> {
    if let Some(cycle) = induced_four_cycle(c, a, b)? {
        return Err(Error::InadmissibleContraction { edge: (a, b), cycle });
    }
    let (keep, gone) = (a.min(b), a.max(b));
    let mut s = c.skeleton().clone();
    let moved: Vec<VertexId> = s.neighbors(gone).ones().filter(|&x| x != keep).collect();
    for x in moved {
        s.add_edge(keep, x);
    }
    Ok(FlagComplex::from_skeleton(s.remove_vertex(gone)))
}

pub fn apply(c: &FlagComplex, m: &Move) -> Result<FlagComplex> {
    let (a, b) = m.edge;
    match m.kind {
        MoveKind::SubdivideEdge => {
            if let Some(w) = m.new_vertex {
                if w != c.vertex_count() {
                    return Err(Error::InvalidInput(format!(
                        "subdivision vertex {w} does not match vertex count {}",
                        c.vertex_count()
                    )));
                }
            }
            subdivide_edge(c, a, b)
        }
        MoveKind::ContractEdge => contract_edge(c, a, b),
    }
}
