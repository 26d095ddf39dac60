use std::sync::OnceLock;

use super::{Complex, FVector, Simplex, SimplicialComplex, Skeleton, VertexId};
use crate::error::{Error, Result};

/// A flag complex, stored as its 1-skeleton. Faces are the cliques of the graph;
/// facets (maximal cliques) are computed once on first use.
#[derive(Clone)]
pub struct FlagComplex {
    skeleton: Skeleton,
    facets: OnceLock<Vec<Simplex>>,
}

impl FlagComplex {
    pub fn from_skeleton(skeleton: Skeleton) -> Self {
        FlagComplex {
            skeleton,
            facets: OnceLock::new(),
        }
    }

    /// Clique complex of the graph on `0..n` with the given edges.
    pub fn from_edges<I: IntoIterator<Item = (VertexId, VertexId)>>(n: usize, edges: I) -> Result<Self> {
        let mut s = Skeleton::empty(n);
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidInput(format!("bad edge ({u}, {v}) on {n} vertices")));
            }
            s.add_edge(u, v);
        }
        Ok(Self::from_skeleton(s))
    }

    /// Accepts a facet-list complex if it is flag; otherwise reports the
    /// smallest missing face. Vertex ids are kept, labels are dropped.
    pub fn try_from_simplicial(c: &SimplicialComplex) -> Result<Self> {
        let check = c.is_flag();
        if let Some(w) = check.witness {
            return Err(Error::NotFlag(w));
        }
        let f = Self::from_skeleton(c.skeleton());
        let _ = f.facets.set(c.facets().to_vec());
        Ok(f)
    }

    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn into_skeleton(self) -> Skeleton {
        self.skeleton
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && v < self.vertex_count() && self.skeleton.has_edge(u, v)
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.skeleton.edges()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.skeleton.degree(v)
    }

    pub fn is_face(&self, sigma: &[VertexId]) -> bool {
        sigma.iter().all(|&v| v < self.vertex_count()) && self.skeleton.is_clique(sigma)
    }

    fn check_face(&self, sigma: &[VertexId]) -> Result<Simplex> {
        let mut s = sigma.to_vec();
        s.sort_unstable();
        s.dedup();
        if self.is_face(&s) {
            Ok(s)
        } else {
            Err(Error::FaceNotFound(s))
        }
    }

    /// Vertices of `lk(σ)`: those adjacent to every vertex of σ.
    pub fn link_vertices(&self, sigma: &[VertexId]) -> Result<Vec<VertexId>> {
        let s = self.check_face(sigma)?;
        let Some((&first, rest)) = s.split_first() else {
            return Ok((0..self.vertex_count()).collect());
        };
        let mut common = self.skeleton.neighbors(first).clone();
        for &v in rest {
            common.intersect_with(self.skeleton.neighbors(v));
        }
        Ok(common.ones().collect())
    }

    /// Vertices of `st(σ)`: σ together with its link.
    pub fn star_vertices(&self, sigma: &[VertexId]) -> Result<Vec<VertexId>> {
        let mut vs = self.link_vertices(sigma)?;
        vs.extend_from_slice(sigma);
        vs.sort_unstable();
        vs.dedup();
        Ok(vs)
    }

    /// The link of σ, which in a flag complex is the subcomplex induced on its
    /// vertices. Returns the link and, for each of its vertices, the id here.
    pub fn link(&self, sigma: &[VertexId]) -> Result<(FlagComplex, Vec<VertexId>)> {
        let vs = self.link_vertices(sigma)?;
        Ok(self.induced(&vs))
    }

    /// The star of σ, also an induced subcomplex.
    pub fn star(&self, sigma: &[VertexId]) -> Result<(FlagComplex, Vec<VertexId>)> {
        let vs = self.star_vertices(sigma)?;
        Ok(self.induced(&vs))
    }

    /// `Δ[W]`; vertex `i` of the result is `vertices[i]` here.
    pub fn induced(&self, vertices: &[VertexId]) -> (FlagComplex, Vec<VertexId>) {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        (FlagComplex::from_skeleton(self.skeleton.induced(&vs)), vs)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> FlagComplex {
        FlagComplex::from_skeleton(self.skeleton.permuted(perm))
    }

    pub fn to_simplicial(&self) -> SimplicialComplex {
        SimplicialComplex::from_dense(self.facets().to_vec(), self.vertex_count())
    }

    /// Shortest-path length in the skeleton; `None` if unreachable.
    pub fn graph_distance(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.skeleton.distances_from(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.skeleton.components().len() <= 1
    }
}

impl Complex for FlagComplex {
    fn vertex_count(&self) -> usize {
        self.skeleton.vertex_count()
    }

    fn facets(&self) -> &[Simplex] {
        self.facets.get_or_init(|| self.skeleton.maximal_cliques())
    }

    fn faces_by_dim(&self) -> Vec<Vec<Simplex>> {
        let mut out: Vec<Vec<Simplex>> = Vec::new();
        self.skeleton.visit_cliques(usize::MAX, |c| {
            if out.len() < c.len() {
                out.resize(c.len(), Vec::new());
            }
            out[c.len() - 1].push(c.to_vec());
            true
        });
        out
    }

    fn f_vector(&self) -> FVector {
        let mut counts = vec![1];
        counts.extend(self.skeleton.clique_counts());
        FVector::new(counts)
    }
}

impl PartialEq for FlagComplex {
    fn eq(&self, other: &Self) -> bool {
        self.skeleton == other.skeleton
    }
}

impl Eq for FlagComplex {}

impl std::fmt::Debug for FlagComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("FlagComplex").field(&self.skeleton).finish()
    }
}
