//! Brute-force oracles shared by the integration tests and the acceptance run.
//! Nothing here calls the library's clique enumeration or homology code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use flagtri::constructors::{cycle, octahedral_sphere, Fixture};
use flagtri::{Complex, FlagComplex, Simplex, VertexId};

/// Every nonempty subset of a facet, as a set.
pub fn faces_of_facets(facets: &[Simplex]) -> BTreeSet<Simplex> {
    let mut out = BTreeSet::new();
    for f in facets {
        let k = f.len();
        for mask in 1u32..(1u32 << k) {
            out.insert((0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect());
        }
    }
    out
}

/// Graph of a facet list: pairs contained in some facet.
pub fn graph_of(n: usize, facets: &[Simplex]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for f in facets {
        for &u in f {
            for &v in f {
                if u != v {
                    adj[u][v] = true;
                }
            }
        }
    }
    adj
}

/// All nonempty cliques of `adj`, grown one vertex at a time in increasing order.
pub fn cliques(adj: &[Vec<bool>]) -> BTreeSet<Simplex> {
    fn grow(adj: &[Vec<bool>], cur: &mut Simplex, out: &mut BTreeSet<Simplex>) {
        let start = cur.last().map_or(0, |&v| v + 1);
        for v in start..adj.len() {
            if cur.iter().all(|&u| adj[u][v]) {
                cur.push(v);
                out.insert(cur.clone());
                grow(adj, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    grow(adj, &mut Vec::new(), &mut out);
    out
}

/// Flag test by definition: the faces coincide with the cliques of the graph.
pub fn facet_list_is_flag(n: usize, facets: &[Simplex]) -> bool {
    faces_of_facets(facets) == cliques(&graph_of(n, facets))
}

/// f-vector `(1, f₀, f₁, …)` counted from the face set.
pub fn f_vector_oracle(facets: &[Simplex]) -> Vec<u64> {
    let faces = faces_of_facets(facets);
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let mut f = vec![0u64; top + 1];
    f[0] = 1;
    for s in &faces {
        f[s.len()] += 1;
    }
    f
}

fn faces_by_size(facets: &[Simplex]) -> Vec<Vec<Simplex>> {
    let faces = faces_of_facets(facets);
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let mut by = vec![Vec::new(); top + 1];
    for s in faces {
        by[s.len()].push(s);
    }
    by
}

/// Dense signed boundary matrix from `k`-faces to `(k−1)`-faces, rows indexed by
/// the smaller faces.
fn boundary(rows: &[Simplex], cols: &[Simplex]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, s) in cols.iter().enumerate() {
        for drop in 0..s.len() {
            let mut t = s.clone();
            t.remove(drop);
            let i = rows.binary_search(&t).expect("boundary face present");
            m[i][j] = if drop % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

pub fn rank_rational(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = BigRational::one() / a[rank][c].clone();
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let factor = a[r][c].clone() * inv.clone();
                for k in c..cols {
                    let sub = factor.clone() * a[rank][k].clone();
                    a[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank_gf2(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<u8>> = m.iter().map(|r| r.iter().map(|&x| (x.rem_euclid(2)) as u8).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] == 1) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][c] == 1 {
                for k in c..cols {
                    a[r][k] ^= a[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Unreduced Betti numbers `β₀ … β_dim` from dense boundary ranks.
pub fn betti_oracle(facets: &[Simplex], gf2: bool) -> Vec<usize> {
    let by = faces_by_size(facets);
    let dim = by.len() - 1;
    let rank = |k: usize| -> usize {
        // rank of ∂ from faces of size k+1 to size k
        if k == 0 || k >= dim {
            return 0;
        }
        let m = boundary(&by[k], &by[k + 1]);
        if gf2 {
            rank_gf2(&m)
        } else {
            rank_rational(&m)
        }
    };
    (1..=dim).map(|size| by[size].len() - rank(size - 1) - rank(size)).collect()
}

/// Whether `map` sends edges to edges and non-edges to non-edges.
pub fn is_isomorphism(a: &FlagComplex, b: &FlagComplex, map: &[VertexId]) -> bool {
    let n = a.vertex_count();
    if map.len() != n || b.vertex_count() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    (0..n).all(|u| (u + 1..n).all(|v| a.has_edge(u, v) == b.has_edge(map[u], map[v])))
}

/// Exhaustive isomorphism test with degree pruning, for small graphs.
pub fn brute_force_isomorphic(a: &FlagComplex, b: &FlagComplex) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() {
        return false;
    }
    fn extend(a: &FlagComplex, b: &FlagComplex, map: &mut Vec<VertexId>, used: &mut Vec<bool>) -> bool {
        let u = map.len();
        if u == a.vertex_count() {
            return true;
        }
        for w in 0..b.vertex_count() {
            if used[w] || a.degree(u) != b.degree(w) {
                continue;
            }
            if (0..u).all(|p| a.has_edge(p, u) == b.has_edge(map[p], w)) {
                used[w] = true;
                map.push(w);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    extend(a, b, &mut Vec::new(), &mut vec![false; n])
}

/// Flag complexes on at most nine vertices used for the oracle comparisons.
pub fn small_corpus() -> Vec<(String, FlagComplex)> {
    let mut out = Vec::new();
    out.push(("point".into(), FlagComplex::from_edges(1, []).unwrap()));
    out.push(("three points".into(), FlagComplex::from_edges(3, []).unwrap()));
    out.push(("edge".into(), FlagComplex::from_edges(2, [(0, 1)]).unwrap()));
    for n in 4..=9 {
        out.push((format!("cycle({n})"), cycle(n).unwrap()));
    }
    for d in 1..=4 {
        out.push((format!("octahedral_sphere({d})"), octahedral_sphere(d).0));
    }
    out.push((
        "two squares".into(),
        FlagComplex::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]).unwrap(),
    ));
    out.push((
        "cone over cycle(6)".into(),
        FlagComplex::from_edges(7, (0..6).flat_map(|i| [(i, (i + 1) % 6), (i, 6)])).unwrap(),
    ));
    out.push((
        "suspension of cycle(5)".into(),
        FlagComplex::from_edges(7, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, 5), (i, 6)])).unwrap(),
    ));
    out.push(("K5".into(), FlagComplex::from_edges(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap()));
    out.push((
        "bowtie".into(),
        FlagComplex::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap(),
    ));
    out
}

/// Random graph on `n` vertices; its clique complex is a flag complex.
pub fn random_flag(n: usize, p: f64, rng: &mut impl rand::Rng) -> FlagComplex {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    FlagComplex::from_edges(n, edges).unwrap()
}

pub fn fixtures() -> Vec<(String, FlagComplex)> {
    Fixture::ALL.iter().map(|f| (f.name().to_string(), f.complex())).collect()
}
