use std::collections::HashSet;

use super::{faces_from_facets, is_subset, maximalize, Complex, Simplex, Skeleton, VertexId};
use crate::error::{Error, Result};

/// A simplicial complex given by its facets.
///
/// Vertices are `0..vertex_count`; `labels[v]` is the name vertex `v` had in the
/// input, so reports can use the caller's numbering. Complexes derived from this
/// one (links, stars, restrictions) carry the composed labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: Vec<Simplex>,
    labels: Vec<u64>,
}

/// Result of a flagness test; `witness` is the lexicographically smallest
/// minimal non-face with at least three vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCheck {
    pub is_flag: bool,
    pub witness: Option<Simplex>,
}

impl SimplicialComplex {
    /// Builds a normalized complex from arbitrary vertex labels: repeated and
    /// non-maximal facets are dropped and labels are mapped to `0..n` in
    /// increasing order.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u64>,
    {
        let facets: Vec<Vec<u64>> = facets.into_iter().map(|f| f.into_iter().collect()).collect();
        if facets.is_empty() {
            return Err(Error::InvalidInput("empty facet list".into()));
        }
        Ok(Self::from_labelled(facets))
    }

    /// Same as [`from_facets`](Self::from_facets) for facets given as vertex ids.
    pub fn from_vertex_sets(facets: &[Simplex]) -> Result<Self> {
        Self::from_facets(facets.iter().map(|f| f.iter().map(|&v| v as u64).collect::<Vec<_>>()))
    }

    pub(crate) fn from_labelled(facets: Vec<Vec<u64>>) -> Self {
        let mut labels: Vec<u64> = facets.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let facets = facets
            .into_iter()
            .map(|f| {
                f.into_iter()
                    .map(|l| labels.binary_search(&l).expect("label present"))
                    .collect()
            })
            .collect();
        SimplicialComplex {
            facets: maximalize(facets),
            labels,
        }
    }

    /// Wraps facets over `0..n` where every id is used; labels are the ids.
    pub(crate) fn from_dense(facets: Vec<Simplex>, n: usize) -> Self {
        let facets = maximalize(facets);
        debug_assert!(facets.iter().flatten().all(|&v| v < n));
        SimplicialComplex {
            facets,
            labels: (0..n as u64).collect(),
        }
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v]
    }

    fn check_vertices(&self, vertices: &[VertexId]) -> Result<()> {
        match vertices.iter().find(|&&v| v >= self.vertex_count()) {
            Some(v) => Err(Error::InvalidInput(format!("vertex {v} out of range"))),
            None => Ok(()),
        }
    }

    fn sorted_face(&self, sigma: &[VertexId]) -> Result<Simplex> {
        let mut s = sigma.to_vec();
        s.sort_unstable();
        s.dedup();
        if self.contains_face(&s) {
            Ok(s)
        } else {
            Err(Error::FaceNotFound(s))
        }
    }

    /// True if the sorted set `sigma` is a face.
    pub fn contains_face(&self, sigma: &[VertexId]) -> bool {
        self.facets.iter().any(|f| is_subset(sigma, f))
    }

    pub fn facets_containing<'a>(&'a self, sigma: &'a [VertexId]) -> impl Iterator<Item = &'a Simplex> + 'a {
        self.facets.iter().filter(move |f| is_subset(sigma, f))
    }

    fn relabelled(&self, facets: impl Iterator<Item = Simplex>) -> Self {
        Self::from_labelled(
            facets
                .map(|f| f.iter().map(|&v| self.labels[v]).collect())
                .collect(),
        )
    }

    /// `lk(σ) = {τ − σ : σ ⊆ τ ∈ Δ}`.
    pub fn link(&self, sigma: &[VertexId]) -> Result<Self> {
        let s = self.sorted_face(sigma)?;
        Ok(self.relabelled(
            self.facets_containing(&s)
                .map(|f| f.iter().copied().filter(|v| s.binary_search(v).is_err()).collect()),
        ))
    }

    /// Vertices of `lk(σ)` as ids of this complex.
    pub fn link_vertices(&self, sigma: &[VertexId]) -> Result<Vec<VertexId>> {
        let s = self.sorted_face(sigma)?;
        let mut vs: Vec<VertexId> = self
            .facets_containing(&s)
            .flatten()
            .copied()
            .filter(|v| s.binary_search(v).is_err())
            .collect();
        vs.sort_unstable();
        vs.dedup();
        Ok(vs)
    }

    /// `st(σ) = {τ : σ ∪ τ ∈ Δ}`, the closure of the facets containing σ.
    pub fn star(&self, sigma: &[VertexId]) -> Result<Self> {
        let s = self.sorted_face(sigma)?;
        Ok(self.relabelled(self.facets_containing(&s).cloned()))
    }

    /// The restriction `Δ[W] = {σ ∈ Δ : σ ⊆ W}`.
    pub fn induced(&self, vertices: &[VertexId]) -> Result<Self> {
        self.check_vertices(vertices)?;
        let mut inside = vec![false; self.vertex_count()];
        for &v in vertices {
            inside[v] = true;
        }
        Ok(self.relabelled(
            self.facets
                .iter()
                .map(|f| f.iter().copied().filter(|&v| inside[v]).collect()),
        ))
    }

    pub fn skeleton(&self) -> Skeleton {
        let mut s = Skeleton::empty(self.vertex_count());
        for f in &self.facets {
            for (i, &u) in f.iter().enumerate() {
                for &v in &f[i + 1..] {
                    s.add_edge(u, v);
                }
            }
        }
        s
    }

    fn face_set(&self) -> HashSet<Simplex> {
        faces_from_facets(&self.facets).into_iter().flatten().collect()
    }

    /// Minimal non-faces with at least three vertices (all of them are cliques of
    /// the skeleton), up to `max_card` vertices, in lexicographic order.
    fn large_missing_faces(&self, max_card: usize) -> Vec<Simplex> {
        let faces = self.face_set();
        let skeleton = self.skeleton();
        let mut found = Vec::new();
        skeleton.visit_cliques(max_card, |c| {
            if faces.contains(c) {
                return true;
            }
            let minimal = (0..c.len()).all(|i| {
                let sub: Simplex = c.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                faces.contains(&sub)
            });
            if minimal {
                found.push(c.to_vec());
            }
            false
        });
        found.sort_unstable();
        found
    }

    /// Flag iff every clique of the skeleton is a face.
    pub fn is_flag(&self) -> FlagCheck {
        let witness = self.large_missing_faces(usize::MAX).into_iter().next();
        FlagCheck {
            is_flag: witness.is_none(),
            witness,
        }
    }

    /// All minimal non-faces with at most `max_card` vertices, ordered by size
    /// and then lexicographically.
    pub fn missing_faces(&self, max_card: usize) -> Result<Vec<Simplex>> {
        if max_card < 2 {
            return Err(Error::InvalidInput("max_card must be at least 2".into()));
        }
        let skeleton = self.skeleton();
        let n = self.vertex_count();
        let mut out: Vec<Simplex> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| vec![u, v]))
            .filter(|p| !skeleton.has_edge(p[0], p[1]))
            .collect();
        out.extend(self.large_missing_faces(max_card));
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Stellar subdivision at `σ`: faces not containing σ are kept and each facet
    /// `σ ∪ λ` is replaced by the cone from a new vertex over `∂σ̄ * λ`. The new
    /// vertex gets id `vertex_count()` and label one above the largest label.
    pub fn stellar_subdivide(&self, sigma: &[VertexId]) -> Result<Self> {
        let s = self.sorted_face(sigma)?;
        if s.is_empty() {
            return Err(Error::InvalidInput("cannot subdivide the empty face".into()));
        }
        let apex = self.vertex_count();
        let mut facets = Vec::new();
        for f in &self.facets {
            if !is_subset(&s, f) {
                facets.push(f.clone());
                continue;
            }
            for &drop in &s {
                let mut g: Simplex = f.iter().copied().filter(|&v| v != drop).collect();
                g.push(apex);
                facets.push(g);
            }
        }
        let mut labels = self.labels.clone();
        labels.push(self.labels.iter().max().map_or(0, |m| m + 1));
        Ok(Self::from_labelled(
            facets
                .into_iter()
                .map(|f| f.into_iter().map(|v| labels[v]).collect())
                .collect(),
        ))
    }

    /// Edge contraction `contr(e, Δ)`: the larger endpoint is identified with the
    /// smaller one. No flagness or manifold check is made.
    pub fn contract_edge(&self, a: VertexId, b: VertexId) -> Result<Self> {
        let (keep, gone) = (a.min(b), a.max(b));
        if a == b || !self.contains_face(&[keep, gone]) {
            return Err(Error::EdgeNotFound(a, b));
        }
        Ok(self.relabelled(self.facets.iter().map(|f| {
            f.iter()
                .map(|&v| if v == gone { keep } else { v })
                .collect::<Simplex>()
        })))
    }

    /// Link condition `lk(e) = lk(a) ∩ lk(b)`.
    pub fn satisfies_link_condition(&self, a: VertexId, b: VertexId) -> Result<bool> {
        let mut e = vec![a, b];
        e.sort_unstable();
        if a == b || !self.contains_face(&e) {
            return Err(Error::EdgeNotFound(a, b));
        }
        let link_faces = |sigma: &[VertexId]| -> HashSet<Simplex> {
            let facets: Vec<Simplex> = self
                .facets_containing(sigma)
                .map(|f| f.iter().copied().filter(|v| !sigma.contains(v)).collect())
                .collect();
            let mut faces: HashSet<Simplex> = faces_from_facets(&facets).into_iter().flatten().collect();
            faces.insert(Vec::new());
            faces
        };
        let la = link_faces(&[a]);
        let lb = link_faces(&[b]);
        let le = link_faces(&e);
        let both: HashSet<Simplex> = la.intersection(&lb).cloned().collect();
        Ok(both == le)
    }
}

impl Complex for SimplicialComplex {
    fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    fn facets(&self) -> &[Simplex] {
        &self.facets
    }
}
