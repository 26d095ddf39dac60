//! Flag connected sums and flag handle additions.
//!
//! Both operations cut out the interiors of induced balls `Δ[W]` whose
//! boundaries are flag spheres and glue along a boundary isomorphism. The
//! result is built as a facet list and then checked to be the clique complex of
//! its own graph before it is returned.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::{is_subset, Complex, FlagComplex, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::topology::manifold_check;

/// A bijection `∂Δ₁[W₁] → ∂Δ₂[W₂]` as sorted `(source, image)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryIsomorphism {
    pub mapping: Vec<(VertexId, VertexId)>,
}

impl BoundaryIsomorphism {
    pub fn image(&self, v: VertexId) -> Option<VertexId> {
        self.mapping
            .binary_search_by_key(&v, |p| p.0)
            .ok()
            .map(|i| self.mapping[i].1)
    }
}

/// An induced full-dimensional ball, split into boundary and interior.
#[derive(Clone, Debug)]
pub struct InducedBall {
    pub vertices: Vec<VertexId>,
    pub facets: Vec<Simplex>,
    pub boundary_facets: Vec<Simplex>,
    pub boundary_vertices: Vec<VertexId>,
    pub interior_vertices: Vec<VertexId>,
}

/// Result of a gluing together with where each input vertex went (`None` for
/// removed interior vertices).
#[derive(Clone, Debug)]
pub struct Gluing {
    pub complex: FlagComplex,
    pub map_a: Vec<Option<VertexId>>,
    pub map_b: Vec<Option<VertexId>>,
}

fn euler(facets: &[Simplex]) -> i64 {
    crate::complex::faces_from_facets(facets)
        .iter()
        .enumerate()
        .map(|(i, fs)| if i % 2 == 0 { fs.len() as i64 } else { -(fs.len() as i64) })
        .sum()
}

/// Checks that `c[W]` is a full-dimensional ball with flag sphere boundary.
pub fn induced_ball(c: &FlagComplex, w: &[VertexId]) -> std::result::Result<InducedBall, String> {
    let n = c.vertex_count();
    if w.is_empty() {
        return Err("vertex set is empty".into());
    }
    if let Some(&v) = w.iter().find(|&&v| v >= n) {
        return Err(format!("vertex {v} is out of range"));
    }
    let (k, map) = c.induced(w);
    let facets: Vec<Simplex> = k
        .facets()
        .iter()
        .map(|f| f.iter().map(|&i| map[i]).collect())
        .collect();
    let d = c.dim();
    if facets.iter().any(|f| f.len() as isize - 1 != d) {
        return Err(format!("induced subcomplex is not pure of dimension {d}"));
    }
    if !k.is_connected() {
        return Err("induced subcomplex is disconnected".into());
    }
    let mut ridges: HashMap<Simplex, usize> = HashMap::new();
    for f in &facets {
        for i in 0..f.len() {
            let mut r = f.clone();
            r.remove(i);
            *ridges.entry(r).or_default() += 1;
        }
    }
    if let Some((r, _)) = ridges.iter().find(|(_, &m)| m > 2) {
        return Err(format!("ridge {r:?} lies in more than two facets"));
    }
    let mut boundary_facets: Vec<Simplex> = ridges.into_iter().filter(|(_, m)| *m == 1).map(|(r, _)| r).collect();
    boundary_facets.sort_unstable();
    if boundary_facets.is_empty() {
        return Err("induced subcomplex has no boundary".into());
    }
    let chi = euler(&facets);
    if chi != 1 {
        return Err(format!("induced subcomplex has Euler characteristic {chi}, not 1"));
    }
    let boundary_vertices: Vec<VertexId> = boundary_facets
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let boundary = SimplicialComplex::from_vertex_sets(&boundary_facets).map_err(|e| e.to_string())?;
    if let Some(wit) = boundary.is_flag().witness {
        let wit: Vec<VertexId> = wit.iter().map(|&i| boundary_vertices[i]).collect();
        return Err(format!("boundary is not flag, missing face {wit:?}"));
    }
    sphere_check(&boundary)?;
    let vertices = map;
    let interior_vertices = vertices
        .iter()
        .copied()
        .filter(|v| boundary_vertices.binary_search(v).is_err())
        .collect();
    Ok(InducedBall {
        vertices,
        facets,
        boundary_facets,
        boundary_vertices,
        interior_vertices,
    })
}

fn sphere_check(boundary: &SimplicialComplex) -> std::result::Result<(), String> {
    let dim = boundary.dim();
    if dim == 0 {
        return if boundary.vertex_count() == 2 {
            Ok(())
        } else {
            Err("boundary is not a 0-sphere".into())
        };
    }
    match manifold_check(boundary) {
        Ok(Some(v)) if !v.is_manifold() => return Err(format!("boundary is not a sphere: {}", v.reason.unwrap())),
        Err(e) => return Err(format!("boundary is not a sphere: {e}")),
        _ => {}
    }
    let expected = 1 + if dim % 2 == 0 { 1 } else { -1 };
    let chi = boundary.euler_characteristic();
    if chi != expected {
        return Err(format!("boundary has Euler characteristic {chi}, not {expected}"));
    }
    Ok(())
}

fn check_isomorphism(
    phi: &BoundaryIsomorphism,
    from: &InducedBall,
    to: &InducedBall,
) -> std::result::Result<(), String> {
    let sources: Vec<VertexId> = phi.mapping.iter().map(|p| p.0).collect();
    if sources != from.boundary_vertices {
        return Err("φ is not defined on exactly the first boundary".into());
    }
    let mut images: Vec<VertexId> = phi.mapping.iter().map(|p| p.1).collect();
    images.sort_unstable();
    images.dedup();
    if images != to.boundary_vertices {
        return Err("φ is not a bijection onto the second boundary".into());
    }
    let target: HashSet<&Simplex> = to.boundary_facets.iter().collect();
    for f in &from.boundary_facets {
        let mut g: Simplex = f.iter().map(|&v| phi.image(v).unwrap()).collect();
        g.sort_unstable();
        if !target.contains(&g) {
            return Err(format!("φ maps boundary facet {f:?} to the non-face {g:?}"));
        }
    }
    Ok(())
}

fn assemble(facets: Vec<Simplex>, n: usize) -> std::result::Result<FlagComplex, String> {
    let s = SimplicialComplex::from_dense(facets, n);
    if let Some(w) = s.is_flag().witness {
        return Err(format!("result is not flag, missing face {w:?}"));
    }
    Ok(FlagComplex::try_from_simplicial(&s).expect("checked flag"))
}

fn outside<'a>(facets: &'a [Simplex], ball: &InducedBall) -> impl Iterator<Item = Simplex> + 'a {
    let inside: HashSet<Simplex> = ball.facets.iter().cloned().collect();
    facets.iter().filter(move |f| !inside.contains(*f)).cloned()
}

/// `Δ₁ #_φ Δ₂`, keeping track of vertex images.
pub fn flag_connected_sum_with_maps(
    a: &FlagComplex,
    wa: &[VertexId],
    b: &FlagComplex,
    wb: &[VertexId],
    phi: &BoundaryIsomorphism,
) -> Result<Gluing> {
    let invalid = Error::ConnectedSumInvalid;
    if a.dim() != b.dim() {
        return Err(invalid(format!("dimensions differ: {} and {}", a.dim(), b.dim())));
    }
    let ball_a = induced_ball(a, wa).map_err(|e| invalid(format!("first ball: {e}")))?;
    let ball_b = induced_ball(b, wb).map_err(|e| invalid(format!("second ball: {e}")))?;
    check_isomorphism(phi, &ball_a, &ball_b).map_err(invalid)?;

    let mut next = 0;
    let map_a: Vec<Option<VertexId>> = (0..a.vertex_count())
        .map(|v| {
            ball_a.interior_vertices.binary_search(&v).is_err().then(|| {
                next += 1;
                next - 1
            })
        })
        .collect();
    let preimage: HashMap<VertexId, VertexId> = phi.mapping.iter().map(|&(s, t)| (t, s)).collect();
    let map_b: Vec<Option<VertexId>> = (0..b.vertex_count())
        .map(|v| {
            if ball_b.interior_vertices.binary_search(&v).is_ok() {
                None
            } else if let Some(&s) = preimage.get(&v) {
                map_a[s]
            } else {
                next += 1;
                Some(next - 1)
            }
        })
        .collect();

    let relabel = |f: Simplex, map: &[Option<VertexId>]| -> Simplex {
        let mut g: Simplex = f.iter().map(|&v| map[v].expect("kept facets avoid interiors")).collect();
        g.sort_unstable();
        g
    };
    let mut facets: Vec<Simplex> = outside(a.facets(), &ball_a).map(|f| relabel(f, &map_a)).collect();
    facets.extend(outside(b.facets(), &ball_b).map(|f| relabel(f, &map_b)));
    let complex = assemble(facets, next).map_err(invalid)?;
    Ok(Gluing { complex, map_a, map_b })
}

pub fn flag_connected_sum(
    a: &FlagComplex,
    wa: &[VertexId],
    b: &FlagComplex,
    wb: &[VertexId],
    phi: &BoundaryIsomorphism,
) -> Result<FlagComplex> {
    flag_connected_sum_with_maps(a, wa, b, wb, phi).map(|g| g.complex)
}

/// All isomorphisms between the boundaries of two induced balls that respect
/// `compatible(v, φ(v))`, in lexicographic order of the image sequence.
pub fn boundary_isomorphisms(
    from: &InducedBall,
    to: &InducedBall,
    compatible: &dyn Fn(VertexId, VertexId) -> bool,
    limit: usize,
) -> Vec<BoundaryIsomorphism> {
    let edges = |ball: &InducedBall| -> HashSet<(VertexId, VertexId)> {
        let mut e = HashSet::new();
        for f in &ball.boundary_facets {
            for (i, &u) in f.iter().enumerate() {
                for &v in &f[i + 1..] {
                    e.insert((u, v));
                    e.insert((v, u));
                }
            }
        }
        e
    };
    if from.boundary_vertices.len() != to.boundary_vertices.len()
        || from.boundary_facets.len() != to.boundary_facets.len()
    {
        return Vec::new();
    }
    let (ea, eb) = (edges(from), edges(to));
    let degree = |e: &HashSet<(VertexId, VertexId)>, v| e.iter().filter(|p| p.0 == v).count();
    let mut out = Vec::new();
    let mut assigned: Vec<VertexId> = Vec::new();
    let mut used = HashSet::new();
    fn go(
        k: usize,
        from: &InducedBall,
        to: &InducedBall,
        ea: &HashSet<(VertexId, VertexId)>,
        eb: &HashSet<(VertexId, VertexId)>,
        ok: &dyn Fn(VertexId, VertexId) -> bool,
        assigned: &mut Vec<VertexId>,
        used: &mut HashSet<VertexId>,
        out: &mut Vec<BoundaryIsomorphism>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if k == from.boundary_vertices.len() {
            let phi = BoundaryIsomorphism {
                mapping: from.boundary_vertices.iter().copied().zip(assigned.iter().copied()).collect(),
            };
            if check_isomorphism(&phi, from, to).is_ok() {
                out.push(phi);
            }
            return;
        }
        let v = from.boundary_vertices[k];
        for &w in &to.boundary_vertices {
            if used.contains(&w) || !ok(v, w) {
                continue;
            }
            let consistent = from.boundary_vertices[..k]
                .iter()
                .zip(assigned.iter())
                .all(|(&u, &x)| ea.contains(&(u, v)) == eb.contains(&(x, w)));
            if !consistent {
                continue;
            }
            assigned.push(w);
            used.insert(w);
            go(k + 1, from, to, ea, eb, ok, assigned, used, out, limit);
            used.remove(&w);
            assigned.pop();
        }
    }
    let ok = |v: VertexId, w: VertexId| degree(&ea, v) == degree(&eb, w) && compatible(v, w);
    go(0, from, to, &ea, &eb, &ok, &mut assigned, &mut used, &mut out, limit);
    out
}

fn sorted_edge(e: (VertexId, VertexId)) -> [VertexId; 2] {
    [e.0.min(e.1), e.0.max(e.1)]
}

/// Optional vertex colors that a gluing must preserve.
pub type Colors<'a> = Option<(&'a [u32], &'a [u32])>;

/// Connected sum along the stars of `e_a` and `e_b`, using the first boundary
/// isomorphism (endpoints to endpoints, colors preserved when given) whose
/// result is flag.
pub fn edge_star_connected_sum_with_maps(
    a: &FlagComplex,
    e_a: (VertexId, VertexId),
    b: &FlagComplex,
    e_b: (VertexId, VertexId),
    colors: Colors<'_>,
) -> Result<Gluing> {
    let invalid = Error::ConnectedSumInvalid;
    let wa = a.star_vertices(&sorted_edge(e_a)).map_err(|e| invalid(format!("first edge: {e}")))?;
    let wb = b.star_vertices(&sorted_edge(e_b)).map_err(|e| invalid(format!("second edge: {e}")))?;
    if !a.has_edge(e_a.0, e_a.1) || !b.has_edge(e_b.0, e_b.1) {
        return Err(invalid("not an edge".into()));
    }
    let ball_a = induced_ball(a, &wa).map_err(|e| invalid(format!("first star: {e}")))?;
    let ball_b = induced_ball(b, &wb).map_err(|e| invalid(format!("second star: {e}")))?;
    let ends_a = sorted_edge(e_a);
    let ends_b = sorted_edge(e_b);
    let compatible = |v: VertexId, w: VertexId| {
        ends_a.contains(&v) == ends_b.contains(&w) && colors.map_or(true, |(ca, cb)| ca[v] == cb[w])
    };
    let isos = boundary_isomorphisms(&ball_a, &ball_b, &compatible, usize::MAX);
    let mut first_err = None;
    for phi in isos {
        match flag_connected_sum_with_maps(a, &wa, b, &wb, &phi) {
            Ok(g) => return Ok(g),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    Err(first_err.unwrap_or_else(|| invalid("edge star boundaries are not isomorphic".into())))
}

pub fn edge_star_connected_sum(
    a: &FlagComplex,
    e_a: (VertexId, VertexId),
    b: &FlagComplex,
    e_b: (VertexId, VertexId),
) -> Result<FlagComplex> {
    edge_star_connected_sum_with_maps(a, e_a, b, e_b, None).map(|g| g.complex)
}

/// Connected sum along two vertex stars, first isomorphism giving a flag result.
pub fn vertex_star_connected_sum_with_maps(
    a: &FlagComplex,
    v_a: VertexId,
    b: &FlagComplex,
    v_b: VertexId,
) -> Result<Gluing> {
    let invalid = Error::ConnectedSumInvalid;
    let wa = a.star_vertices(&[v_a]).map_err(|e| invalid(e.to_string()))?;
    let wb = b.star_vertices(&[v_b]).map_err(|e| invalid(e.to_string()))?;
    let ball_a = induced_ball(a, &wa).map_err(|e| invalid(format!("first star: {e}")))?;
    let ball_b = induced_ball(b, &wb).map_err(|e| invalid(format!("second star: {e}")))?;
    let mut first_err = None;
    for phi in boundary_isomorphisms(&ball_a, &ball_b, &|_, _| true, usize::MAX) {
        match flag_connected_sum_with_maps(a, &wa, b, &wb, &phi) {
            Ok(g) => return Ok(g),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    Err(first_err.unwrap_or_else(|| invalid("vertex star boundaries are not isomorphic".into())))
}

/// `Δ^φ`: both interiors removed, `W₂`'s boundary identified with `W₁`'s.
/// Returns the result and the image of every vertex of `c`.
pub fn flag_handle_addition_with_map(
    c: &FlagComplex,
    w1: &[VertexId],
    w2: &[VertexId],
    phi: &BoundaryIsomorphism,
) -> Result<(FlagComplex, Vec<Option<VertexId>>)> {
    let n = c.vertex_count();
    if let Some(&v) = w1.iter().chain(w2).find(|&&v| v >= n) {
        return Err(Error::HandleInvalid(format!("vertex {v} is out of range")));
    }
    let mut w1s = w1.to_vec();
    w1s.sort_unstable();
    w1s.dedup();
    let mut w2s = w2.to_vec();
    w2s.sort_unstable();
    w2s.dedup();
    for &u in &w1s {
        let dist = c.skeleton().distances_from(u);
        for &v in &w2s {
            if let Some(d) = dist[v] {
                if d < 4 {
                    return Err(Error::HandleTooClose { u, v, dist: d });
                }
            }
        }
    }
    let ball1 = induced_ball(c, &w1s).map_err(|e| Error::HandleInvalid(format!("first ball: {e}")))?;
    let ball2 = induced_ball(c, &w2s).map_err(|e| Error::HandleInvalid(format!("second ball: {e}")))?;
    check_isomorphism(phi, &ball1, &ball2).map_err(Error::HandleInvalid)?;

    let preimage: HashMap<VertexId, VertexId> = phi.mapping.iter().map(|&(s, t)| (t, s)).collect();
    let removed = |v: &VertexId| {
        ball1.interior_vertices.binary_search(v).is_ok() || ball2.interior_vertices.binary_search(v).is_ok()
    };
    let mut map: Vec<Option<VertexId>> = vec![None; n];
    let mut next = 0;
    for v in 0..n {
        if !removed(&v) && !preimage.contains_key(&v) {
            map[v] = Some(next);
            next += 1;
        }
    }
    for (&t, &s) in &preimage {
        map[t] = map[s];
    }
    let inside: Vec<&Simplex> = ball1.facets.iter().chain(&ball2.facets).collect();
    let facets: Vec<Simplex> = c
        .facets()
        .iter()
        .filter(|f| !inside.iter().any(|g| g.len() == f.len() && is_subset(f, g)))
        .map(|f| {
            let mut g: Simplex = f.iter().map(|&v| map[v].expect("kept facets avoid interiors")).collect();
            g.sort_unstable();
            g
        })
        .collect();
    let complex = assemble(facets, next).map_err(Error::HandleInvalid)?;
    Ok((complex, map))
}

pub fn flag_handle_addition(
    c: &FlagComplex,
    w1: &[VertexId],
    w2: &[VertexId],
    phi: &BoundaryIsomorphism,
) -> Result<FlagComplex> {
    flag_handle_addition_with_map(c, w1, w2, phi).map(|r| r.0)
}

/// Handle addition along two edge stars, endpoints to endpoints, with the
/// first boundary isomorphism giving a flag result.
pub fn edge_star_handle_addition_with_map(
    c: &FlagComplex,
    e1: (VertexId, VertexId),
    e2: (VertexId, VertexId),
) -> Result<(FlagComplex, Vec<Option<VertexId>>)> {
    let invalid = Error::HandleInvalid;
    if !c.has_edge(e1.0, e1.1) || !c.has_edge(e2.0, e2.1) {
        return Err(invalid("not an edge".into()));
    }
    let (a, b) = (sorted_edge(e1), sorted_edge(e2));
    let w1 = c.star_vertices(&a).map_err(|e| invalid(e.to_string()))?;
    let w2 = c.star_vertices(&b).map_err(|e| invalid(e.to_string()))?;
    for &u in &w1 {
        let dist = c.skeleton().distances_from(u);
        for &v in &w2 {
            if let Some(d) = dist[v].filter(|&d| d < 4) {
                return Err(Error::HandleTooClose { u, v, dist: d });
            }
        }
    }
    let ball1 = induced_ball(c, &w1).map_err(|e| invalid(format!("first star: {e}")))?;
    let ball2 = induced_ball(c, &w2).map_err(|e| invalid(format!("second star: {e}")))?;
    let compatible = |v: VertexId, w: VertexId| a.contains(&v) == b.contains(&w);
    let mut first_err = None;
    for phi in boundary_isomorphisms(&ball1, &ball2, &compatible, usize::MAX) {
        match flag_handle_addition_with_map(c, &w1, &w2, &phi) {
            Ok(r) => return Ok(r),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    Err(first_err.unwrap_or_else(|| invalid("edge star boundaries are not isomorphic".into())))
}
