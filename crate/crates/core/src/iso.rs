//! Canonical labelings and isomorphism of flag complexes.
//!
//! A flag complex is determined by its graph, so everything here works on the
//! skeleton. The canonical form comes from individualization–refinement: the
//! ordered partition of the vertices is refined until equitable, a vertex of the
//! first smallest non-singleton cell is individualized, and the search recurses.
//! Each discrete leaf yields an adjacency certificate; the largest one wins.
//! Automorphisms found along the way prune equivalent branches.

use std::fmt;

use fixedbitset::FixedBitSet;
use sha2::{Digest, Sha256};

use crate::complex::{Complex, FlagComplex, Skeleton, VertexId};

/// Two forms are equal when their certificates are; the labelings that
/// produced them may differ.
#[derive(Clone)]
pub struct CanonicalForm {
    /// Vertex count followed by the upper-triangle adjacency bits of the
    /// relabeled graph, packed most significant bit first.
    pub certificate: Vec<u8>,
    /// SHA-256 of the certificate.
    pub digest: [u8; 32],
    /// `canonical_labeling[v]` is the canonical position of vertex `v`.
    pub canonical_labeling: Vec<VertexId>,
}

impl CanonicalForm {
    pub fn digest_hex(&self) -> String {
        hex::encode(self.digest)
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.certificate == other.certificate
    }
}

impl Eq for CanonicalForm {}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.certificate.hash(state);
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CanonicalForm").field("digest", &self.digest_hex()).finish()
    }
}

type Partition = Vec<Vec<VertexId>>;

struct Search<'a> {
    graph: &'a Skeleton,
    best: Option<(Vec<u8>, Vec<VertexId>)>,
    automorphisms: Vec<Vec<VertexId>>,
}

pub fn canonical_form(c: &FlagComplex) -> CanonicalForm {
    canonical_form_of_graph(c.skeleton())
}

pub fn canonical_form_of_graph(g: &Skeleton) -> CanonicalForm {
    let n = g.vertex_count();
    let mut search = Search {
        graph: g,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut root: Partition = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    refine(g, &mut root);
    search.descend(root, &mut Vec::new());
    let (certificate, canonical_labeling) = search.best.unwrap_or_else(|| (certificate(g, &[]), Vec::new()));
    let mut digest = [0u8; 32];
    digest.copy_from_slice(Sha256::digest(&certificate).as_slice());
    CanonicalForm {
        certificate,
        digest,
        canonical_labeling,
    }
}

/// Splits cells by neighbour counts into each cell until nothing changes.
/// Sub-cells are ordered by count, so the result depends only on structure.
fn refine(g: &Skeleton, cells: &mut Partition) {
    let n = g.vertex_count();
    'outer: loop {
        for s in 0..cells.len() {
            let mut splitter = FixedBitSet::with_capacity(n);
            for &v in &cells[s] {
                splitter.insert(v);
            }
            let mut next: Partition = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, VertexId)> = cell
                    .iter()
                    .map(|&v| (g.neighbors(v).intersection(&splitter).count(), v))
                    .collect();
                keyed.sort_by_key(|&(k, _)| k);
                let start = next.len();
                let mut prev = None;
                for (k, v) in keyed {
                    if prev != Some(k) {
                        next.push(Vec::new());
                        prev = Some(k);
                    }
                    next.last_mut().unwrap().push(v);
                }
                if next.len() - start > 1 {
                    split = true;
                }
            }
            if split {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

fn certificate(g: &Skeleton, order: &[VertexId]) -> Vec<u8> {
    let n = order.len();
    let mut bytes = (n as u32).to_be_bytes().to_vec();
    let mut acc = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in i + 1..n {
            acc = acc << 1 | g.has_edge(order[i], order[j]) as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    bytes
}

impl Search<'_> {
    fn descend(&mut self, cells: Partition, prefix: &mut Vec<VertexId>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<VertexId> = Vec::new();
        let mut members = cells[t].clone();
        members.sort_unstable();
        for v in members {
            if self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<VertexId> = child[t].iter().copied().filter(|&w| w != v).collect();
            child[t] = vec![v];
            child.insert(t + 1, rest);
            refine(self.graph, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// True if some known automorphism fixing the prefix pointwise maps an
    /// explored vertex to `v` (orbit under the generated subgroup).
    fn equivalent_to_explored(&self, v: VertexId, explored: &[VertexId], prefix: &[VertexId]) -> bool {
        if explored.is_empty() {
            return false;
        }
        let gens: Vec<&Vec<VertexId>> = self
            .automorphisms
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut orbit = FixedBitSet::with_capacity(self.graph.vertex_count());
        let mut stack = vec![v];
        orbit.insert(v);
        while let Some(u) = stack.pop() {
            if explored.contains(&u) {
                return true;
            }
            for a in &gens {
                let w = a[u];
                if !orbit.put(w) {
                    stack.push(w);
                }
            }
        }
        false
    }

    fn leaf(&mut self, cells: &Partition) {
        let order: Vec<VertexId> = cells.iter().map(|c| c[0]).collect();
        let cert = certificate(self.graph, &order);
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        match &self.best {
            Some((best, best_pos)) if *best == cert => {
                let mut inverse = vec![0; order.len()];
                for (v, &p) in best_pos.iter().enumerate() {
                    inverse[p] = v;
                }
                let auto: Vec<VertexId> = position.iter().map(|&p| inverse[p]).collect();
                self.automorphisms.push(auto);
            }
            Some((best, _)) if *best > cert => {}
            _ => self.best = Some((cert, position)),
        }
    }
}

/// An isomorphism `a → b` as a vertex map, if one exists. The map is checked
/// edge by edge before it is returned.
pub fn are_isomorphic(a: &FlagComplex, b: &FlagComplex) -> Option<Vec<VertexId>> {
    if a.vertex_count() != b.vertex_count() || a.skeleton().edge_count() != b.skeleton().edge_count() {
        return None;
    }
    let ca = canonical_form(a);
    let cb = canonical_form(b);
    if ca.certificate != cb.certificate {
        return None;
    }
    let mut inverse_b = vec![0; b.vertex_count()];
    for (v, &p) in cb.canonical_labeling.iter().enumerate() {
        inverse_b[p] = v;
    }
    let map: Vec<VertexId> = ca.canonical_labeling.iter().map(|&p| inverse_b[p]).collect();
    let preserved = a.edges().into_iter().all(|(u, v)| b.has_edge(map[u], map[v]));
    preserved.then_some(map)
}

/// Shortest-path length in the skeleton, `None` when unreachable.
pub fn graph_distance(c: &FlagComplex, u: VertexId, v: VertexId) -> Option<usize> {
    c.graph_distance(u, v)
}
