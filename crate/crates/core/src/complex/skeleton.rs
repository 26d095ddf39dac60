use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use super::{Simplex, VertexId};

/// Simple undirected graph stored as one adjacency bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Skeleton {
    rows: Vec<FixedBitSet>,
}

impl Skeleton {
    pub fn empty(n: usize) -> Self {
        Skeleton {
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list. Panics on loops or out-of-range ids.
    pub fn from_edges<I: IntoIterator<Item = (VertexId, VertexId)>>(n: usize, edges: I) -> Self {
        let mut s = Skeleton::empty(n);
        for (u, v) in edges {
            s.add_edge(u, v);
        }
        s
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert!(u != v, "loop at vertex {u}");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        self.rows[u].set(v, false);
        self.rows[v].set(u, false);
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: VertexId) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, row) in self.rows.iter().enumerate() {
            out.extend(row.ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> FixedBitSet {
        let mut c = self.rows[u].clone();
        c.intersect_with(&self.rows[v]);
        c
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> VertexId {
        let n = self.rows.len() + 1;
        for row in &mut self.rows {
            row.grow(n);
        }
        self.rows.push(FixedBitSet::with_capacity(n));
        n - 1
    }

    /// Removes `v`, shifting every larger id down by one.
    pub fn remove_vertex(&self, v: VertexId) -> Skeleton {
        let keep: Vec<VertexId> = (0..self.vertex_count()).filter(|&w| w != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced on `vertices` (in the given order); new id `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[VertexId]) -> Skeleton {
        let n = self.vertex_count();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut s = Skeleton::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.rows[v].ones() {
                let j = index[w];
                if j != usize::MAX && j > i {
                    s.add_edge(i, j);
                }
            }
        }
        s
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Skeleton {
        let mut s = Skeleton::empty(self.vertex_count());
        for (u, v) in self.edges() {
            s.add_edge(perm[u], perm[v]);
        }
        s
    }

    pub fn is_clique(&self, vertices: &[VertexId]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Maximal cliques, each sorted, in lexicographic order (Bron–Kerbosch with pivoting).
    pub fn maximal_cliques(&self) -> Vec<Simplex> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        let mut p = FixedBitSet::with_capacity(n);
        p.insert_range(..);
        let x = FixedBitSet::with_capacity(n);
        let mut r = Vec::new();
        self.bron_kerbosch(&mut r, p, x, &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort_unstable();
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<VertexId>,
        mut p: FixedBitSet,
        mut x: FixedBitSet,
        out: &mut Vec<Simplex>,
    ) {
        if p.is_clear() {
            if x.is_clear() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| p.intersection(&self.rows[u]).count())
            .expect("p is nonempty");
        let mut candidates = p.clone();
        candidates.difference_with(&self.rows[pivot]);
        for v in candidates.ones() {
            r.push(v);
            let mut p2 = p.clone();
            p2.intersect_with(&self.rows[v]);
            let mut x2 = x.clone();
            x2.intersect_with(&self.rows[v]);
            self.bron_kerbosch(r, p2, x2, out);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }

    /// Visits every nonempty clique of size at most `max_size` in lexicographic order.
    /// The visitor returns `false` to skip the extensions of the current clique.
    pub fn visit_cliques<F: FnMut(&[VertexId]) -> bool>(&self, max_size: usize, mut visit: F) {
        let mut stack = Vec::new();
        for v in 0..self.vertex_count() {
            let mut cand = self.rows[v].clone();
            cand.set_range(..v + 1, false);
            stack.push(v);
            if visit(&stack) {
                self.extend_cliques(&mut stack, cand, max_size, &mut visit);
            }
            stack.pop();
        }
    }

    fn extend_cliques<F: FnMut(&[VertexId]) -> bool>(
        &self,
        stack: &mut Vec<VertexId>,
        cand: FixedBitSet,
        max_size: usize,
        visit: &mut F,
    ) {
        if stack.len() >= max_size {
            return;
        }
        for w in cand.ones() {
            let mut next = cand.clone();
            next.intersect_with(&self.rows[w]);
            next.set_range(..w + 1, false);
            stack.push(w);
            if visit(stack) {
                self.extend_cliques(stack, next, max_size, visit);
            }
            stack.pop();
        }
    }

    /// Number of cliques of each size: `result[k]` counts cliques with `k + 1` vertices.
    pub fn clique_counts(&self) -> Vec<u64> {
        let mut counts: Vec<u64> = Vec::new();
        self.visit_cliques(usize::MAX, |c| {
            if counts.len() < c.len() {
                counts.resize(c.len(), 0);
            }
            counts[c.len() - 1] += 1;
            true
        });
        counts
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for w in self.rows[u].ones() {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let comp: Vec<VertexId> = self
                .distances_from(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Skeleton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Skeleton")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edges())
            .finish()
    }
}
