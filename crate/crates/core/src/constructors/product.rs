use crate::complex::{maximalize, Complex, FlagComplex, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Facets of the staircase triangulation of `a × b`.
///
/// The product vertex `(u, v)` gets id `u · f₀(b) + v`. For every facet pair
/// `(σ, τ)`, with vertices sorted by `rank_a` and `rank_b`, each monotone
/// lattice path from `(0, 0)` to `(|σ|−1, |τ|−1)` contributes one facet.
pub fn staircase_facets(a: &FlagComplex, b: &FlagComplex, rank_a: &[usize], rank_b: &[usize]) -> Vec<Simplex> {
    let nb = b.vertex_count();
    let mut out = Vec::new();
    for sigma in a.facets() {
        let mut s = sigma.clone();
        s.sort_by_key(|&u| rank_a[u]);
        for tau in b.facets() {
            let mut t = tau.clone();
            t.sort_by_key(|&v| rank_b[v]);
            lattice_paths(s.len() - 1, t.len() - 1, &mut |path| {
                let mut facet: Simplex = path.iter().map(|&(i, j)| s[i] * nb + t[j]).collect();
                facet.sort_unstable();
                out.push(facet);
            });
        }
    }
    maximalize(out)
}

/// Calls `visit` with every monotone path of unit steps from `(0,0)` to `(m,n)`.
fn lattice_paths(m: usize, n: usize, visit: &mut dyn FnMut(&[(usize, usize)])) {
    fn go(m: usize, n: usize, path: &mut Vec<(usize, usize)>, visit: &mut dyn FnMut(&[(usize, usize)])) {
        let (i, j) = *path.last().unwrap();
        if (i, j) == (m, n) {
            visit(path);
            return;
        }
        if i < m {
            path.push((i + 1, j));
            go(m, n, path, visit);
            path.pop();
        }
        if j < n {
            path.push((i, j + 1));
            go(m, n, path, visit);
            path.pop();
        }
    }
    go(m, n, &mut vec![(0, 0)], visit);
}

/// Staircase product with vertices ordered by id.
pub fn staircase_product(a: &FlagComplex, b: &FlagComplex) -> Result<FlagComplex> {
    let rank_a: Vec<usize> = (0..a.vertex_count()).collect();
    let rank_b: Vec<usize> = (0..b.vertex_count()).collect();
    staircase_product_ordered(a, b, &rank_a, &rank_b)
}

/// Staircase product under the total orders `rank_a`, `rank_b` (position of
/// each vertex). The result is checked to be the clique complex of its graph.
pub fn staircase_product_ordered(
    a: &FlagComplex,
    b: &FlagComplex,
    rank_a: &[usize],
    rank_b: &[usize],
) -> Result<FlagComplex> {
    for (rank, n) in [(rank_a, a.vertex_count()), (rank_b, b.vertex_count())] {
        let mut sorted = rank.to_vec();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::InvalidInput("vertex order must be a permutation".into()));
        }
    }
    let facets = staircase_facets(a, b, rank_a, rank_b);
    let n = a.vertex_count() * b.vertex_count();
    let s = SimplicialComplex::from_dense(facets, n);
    FlagComplex::try_from_simplicial(&s).map_err(|e| {
        Error::ConstructionInvariantViolated(format!("staircase product is not flag: {e}"))
    })
}

/// Vertex `(u, v)` of a staircase product.
pub fn product_vertex(b: &FlagComplex, u: VertexId, v: VertexId) -> VertexId {
    u * b.vertex_count() + v
}
