//! Small flag surfaces of every type, and flag 3-manifolds with `γ₂ = 16 β₁`.

use crate::complex::{Complex, FlagComplex, VertexId};
use crate::error::{Error, Result};

use super::basic::{octahedral_sphere, Coloring, Fixture};
use super::sum::{edge_star_connected_sum_with_maps, edge_star_handle_addition_with_map, vertex_star_connected_sum_with_maps};

type Edge = (VertexId, VertexId);

fn violated(msg: impl Into<String>) -> Error {
    Error::ConstructionInvariantViolated(msg.into())
}

fn track(map: &[Option<VertexId>], v: VertexId) -> Result<VertexId> {
    map[v].ok_or_else(|| violated(format!("vertex {v} was removed by a gluing")))
}

fn track_edge(map: &[Option<VertexId>], e: Edge) -> Result<Edge> {
    let (a, b) = (track(map, e.0)?, track(map, e.1)?);
    Ok((a.min(b), a.max(b)))
}

/// Closed flag surface with `8 + 4k` vertices (orientable genus `k`) or
/// `8 + 3k` vertices (connected sum of `k` projective planes).
///
/// Starts from the 12-vertex torus or the 11-vertex projective plane and glues
/// on one more copy per step along vertex stars of degree-6 vertices. Each new
/// copy brings a fresh degree-6 vertex outside the glued star for the next step.
pub fn surface_min(k: usize, orientable: bool) -> Result<FlagComplex> {
    surface_min_with_hook(k, orientable).map(|r| r.0)
}

/// As [`surface_min`], also returning the degree-6 vertex used for the next gluing.
pub fn surface_min_with_hook(k: usize, orientable: bool) -> Result<(FlagComplex, VertexId)> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let base = if orientable {
        Fixture::Torus12.complex()
    } else {
        Fixture::Rp2Left.complex()
    };
    // glue vertex of each new copy, and a degree-6 vertex of that copy off its star
    let glue = if orientable { 0 } else { 10 };
    let star = base.star_vertices(&[glue])?;
    let spare = (0..base.vertex_count())
        .find(|v| star.binary_search(v).is_err() && base.degree(*v) == 6)
        .ok_or_else(|| violated("no degree-6 vertex off the glued star"))?;

    let mut current = base.clone();
    let mut hook = spare;
    for _ in 1..k {
        if current.degree(hook) != 6 {
            return Err(violated(format!("hook vertex {hook} has degree {}", current.degree(hook))));
        }
        let g = vertex_star_connected_sum_with_maps(&current, hook, &base, glue)?;
        current = g.complex;
        hook = track(&g.map_b, spare)?;
    }
    let expected = if orientable { 8 + 4 * k } else { 8 + 3 * k };
    if current.vertex_count() != expected {
        return Err(violated(format!(
            "expected {expected} vertices, got {}",
            current.vertex_count()
        )));
    }
    Ok((current, hook))
}

/// A 3-sphere from four octahedral 3-spheres with two far-apart edges whose
/// links are 4-cycles.
#[derive(Clone, Debug)]
pub struct Delta4 {
    pub complex: FlagComplex,
    pub coloring: Coloring,
    pub e: Edge,
    pub e_prime: Edge,
}

/// Lexicographically first edge with the two given colors.
fn colored_edge(c: &FlagComplex, col: &Coloring, x: u32, y: u32) -> Result<Edge> {
    c.edges()
        .into_iter()
        .find(|&(u, v)| {
            let (cu, cv) = (col.color(u), col.color(v));
            (cu, cv) == (x, y) || (cu, cv) == (y, x)
        })
        .ok_or_else(|| violated(format!("no edge of colors {x},{y}")))
}

fn antipode(v: VertexId) -> VertexId {
    (v + 4) % 8
}

fn glue_colored(
    acc: &FlagComplex,
    acc_col: &Coloring,
    e_acc: Edge,
    piece: &FlagComplex,
    piece_col: &Coloring,
    e_piece: Edge,
) -> Result<(FlagComplex, Coloring, Vec<Option<VertexId>>, Vec<Option<VertexId>>)> {
    let g = edge_star_connected_sum_with_maps(
        acc,
        e_acc,
        piece,
        e_piece,
        Some((&acc_col.colors, &piece_col.colors)),
    )
    .map_err(|e| violated(format!("colored gluing failed: {e}")))?;
    let mut colors = vec![0; g.complex.vertex_count()];
    for (v, m) in g.map_a.iter().enumerate() {
        if let Some(w) = m {
            colors[*w] = acc_col.color(v);
        }
    }
    for (v, m) in g.map_b.iter().enumerate() {
        if let Some(w) = m {
            colors[*w] = piece_col.color(v);
        }
    }
    Ok((g.complex, Coloring { colors }, g.map_a, g.map_b))
}

fn link_is_four_cycle(c: &FlagComplex, e: Edge) -> bool {
    match c.link(&[e.0, e.1]) {
        Ok((lk, _)) => lk.vertex_count() == 4 && lk.skeleton().edge_count() == 4 && (0..4).all(|v| lk.degree(v) == 2),
        Err(_) => false,
    }
}

fn stars_disjoint(c: &FlagComplex, e: Edge, f: Edge) -> Result<bool> {
    let s = c.star_vertices(&[e.0, e.1])?;
    let t = c.star_vertices(&[f.0, f.1])?;
    Ok(s.iter().all(|v| t.binary_search(v).is_err()))
}

/// The colored chain `Γ₁ # Γ₂ # Γ₃ # Γ₄` of octahedral 3-spheres.
///
/// In each octahedral sphere vertex `i` has color `i mod 4 + 1` and antipode
/// `i + 4 mod 8`. `e = {0, 1}` in the first copy; the first gluing uses its
/// antipodal edge. Later gluing edges join a vertex of the previous copy's
/// link to a vertex the previous copy added; all choices are the first in
/// vertex order.
pub fn delta4() -> Result<Delta4> {
    let (oct, col) = octahedral_sphere(4);

    let e: Edge = (0, 1);
    let e1: Edge = (antipode(0), antipode(1));
    let e1p = colored_edge(&oct, &col, 1, 2)?;
    let (d2, c2, m2a, m2b) = glue_colored(&oct, &col, e1, &oct, &col, e1p)?;
    let e = track_edge(&m2a, e)?;

    // v₁: color 3 in lk(e₁′); v₂: color 2, added by the second copy
    let lk1 = oct.link_vertices(&[e1p.0, e1p.1])?;
    let star1 = oct.star_vertices(&[e1p.0, e1p.1])?;
    let pick_e2 = |lk: &[VertexId], star: &[VertexId], c_link: u32, c_new: u32| -> Result<Edge> {
        for &v1 in lk.iter().filter(|&&v| col.color(v) == c_link) {
            for v2 in (0..8).filter(|v| star.binary_search(v).is_err() && col.color(*v) == c_new) {
                if oct.has_edge(v1, v2) {
                    return Ok((v1, v2));
                }
            }
        }
        Err(violated(format!("no edge from link color {c_link} to new color {c_new}")))
    };
    let (v1, v2) = pick_e2(&lk1, &star1, 3, 2)?;
    let e2 = track_edge(&m2b, (v1, v2))?;
    let e2p = colored_edge(&oct, &col, 2, 3)?;
    let (d3, c3, m3a, m3b) = glue_colored(&d2, &c2, e2, &oct, &col, e2p)?;
    let e = track_edge(&m3a, e)?;

    let lk2 = oct.link_vertices(&[e2p.0, e2p.1])?;
    let star2 = oct.star_vertices(&[e2p.0, e2p.1])?;
    let (v3, v4) = pick_e2(&lk2, &star2, 4, 3)?;
    let e3 = track_edge(&m3b, (v3, v4))?;
    let e3p = colored_edge(&oct, &col, 3, 4)?;
    let e_prime_local = (antipode(e3p.0), antipode(e3p.1));
    let (d4, c4, m4a, m4b) = glue_colored(&d3, &c3, e3, &oct, &col, e3p)?;
    let e = track_edge(&m4a, e)?;
    let e_prime = track_edge(&m4b, e_prime_local)?;

    if !c4.is_proper(&d4) {
        return Err(violated("coloring of Δ₄ is not proper"));
    }
    if !link_is_four_cycle(&d4, e) || !link_is_four_cycle(&d4, e_prime) {
        return Err(violated("distinguished edges of Δ₄ do not have 4-cycle links"));
    }
    if !stars_disjoint(&d4, e, e_prime)? {
        return Err(violated("stars of e and e′ in Δ₄ intersect"));
    }
    Ok(Delta4 {
        complex: d4,
        coloring: c4,
        e,
        e_prime,
    })
}

/// Four copies of Δ₄ chained along `(e′ of copy i, e of copy i+1)`, colors
/// ignored. `e` lies in the first copy and `e_prime` in the last.
#[derive(Clone, Debug)]
pub struct Delta16 {
    pub complex: FlagComplex,
    pub e: Edge,
    pub e_prime: Edge,
}

pub fn delta16() -> Result<Delta16> {
    let d4 = delta4()?;
    chain(&d4.complex, d4.e, d4.e_prime, 4).map(|(complex, e, e_prime)| Delta16 { complex, e, e_prime })
}

/// `count` copies of `piece` glued in a row along `(f′ of copy i, f of copy i+1)`.
/// Returns the result with the tracked `f` of the first copy and `f′` of the last.
fn chain(piece: &FlagComplex, f: Edge, f_prime: Edge, count: usize) -> Result<(FlagComplex, Edge, Edge)> {
    let mut acc = piece.clone();
    let mut first = f;
    let mut last = f_prime;
    for _ in 1..count {
        let g = edge_star_connected_sum_with_maps(&acc, last, piece, f, None)
            .map_err(|e| violated(format!("chain gluing failed: {e}")))?;
        first = track_edge(&g.map_a, first)?;
        last = track_edge(&g.map_b, f_prime)?;
        acc = g.complex;
    }
    Ok((acc, first, last))
}

/// Γ: the handle addition on Δ₁₆ identifying the stars of its two far edges.
pub fn gamma_handle() -> Result<FlagComplex> {
    let d16 = delta16()?;
    let (gamma, _) = edge_star_handle_addition_with_map(&d16.complex, d16.e, d16.e_prime)
        .map_err(|e| violated(format!("handle addition on Δ₁₆ failed: {e}")))?;
    Ok(gamma)
}

/// First pair of edges (in lexicographic order) with 4-cycle links and
/// disjoint stars.
pub fn far_four_cycle_edges(c: &FlagComplex) -> Result<(Edge, Edge)> {
    let good: Vec<Edge> = c.edges().into_iter().filter(|&e| link_is_four_cycle(c, e)).collect();
    for (i, &f) in good.iter().enumerate() {
        for &g in &good[i + 1..] {
            if stars_disjoint(c, f, g)? {
                return Ok((f, g));
            }
        }
    }
    Err(violated("no two edges with 4-cycle links and disjoint stars"))
}

/// A flag 3-manifold with `β₁ = b` and `γ₂ = 16b`: `b` copies of Γ glued in a
/// row along edges with 4-cycle links.
pub fn gamma_tight(b: usize) -> Result<FlagComplex> {
    if b == 0 {
        return Err(Error::InvalidInput("b must be at least 1".into()));
    }
    let gamma = gamma_handle()?;
    let (f, f_prime) = far_four_cycle_edges(&gamma)?;
    chain(&gamma, f, f_prime, b).map(|r| r.0)
}
