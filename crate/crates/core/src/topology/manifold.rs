use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::homology::{betti_from_faces, Field};
use crate::complex::{faces_from_facets, Complex, Simplex, VertexId};
use crate::error::{Error, Result};

/// Outcome of a manifold check. `reason` names the first failing condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldVerdict {
    pub reason: Option<String>,
}

impl ManifoldVerdict {
    pub fn is_manifold(&self) -> bool {
        self.reason.is_none()
    }

    fn fail(reason: String) -> Self {
        ManifoldVerdict { reason: Some(reason) }
    }

    fn ok() -> Self {
        ManifoldVerdict { reason: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceType {
    Sphere,
    ConnectedSumTori(u32),
    ConnectedSumProjectivePlanes(u32),
}

impl SurfaceType {
    pub fn euler_characteristic(self) -> i64 {
        match self {
            SurfaceType::Sphere => 2,
            SurfaceType::ConnectedSumTori(k) => 2 - 2 * k as i64,
            SurfaceType::ConnectedSumProjectivePlanes(k) => 2 - k as i64,
        }
    }

    pub fn is_orientable(self) -> bool {
        !matches!(self, SurfaceType::ConnectedSumProjectivePlanes(_))
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SurfaceType::Sphere => write!(f, "S²"),
            SurfaceType::ConnectedSumTori(1) => write!(f, "T²"),
            SurfaceType::ConnectedSumTori(k) => write!(f, "#{k} T²"),
            SurfaceType::ConnectedSumProjectivePlanes(1) => write!(f, "ℝP²"),
            SurfaceType::ConnectedSumProjectivePlanes(k) => write!(f, "#{k} ℝP²"),
        }
    }
}

fn check_pure_dim(facets: &[Simplex], dim: usize) -> Result<()> {
    let mut sizes = facets.iter().map(Vec::len);
    let first = sizes.next().unwrap_or(0);
    if sizes.any(|s| s != first) {
        return Err(Error::NotPure);
    }
    if first != dim + 1 {
        return Err(Error::DimensionMismatch {
            expected: dim as isize,
            found: first as isize - 1,
        });
    }
    Ok(())
}

/// Vertex components of a facet list; vertices absent from every facet are ignored.
fn components(facets: &[Simplex]) -> Vec<Vec<VertexId>> {
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for f in facets {
        for &v in f {
            adj.entry(v).or_default().extend(f.iter().copied().filter(|&w| w != v));
        }
    }
    let mut seen: HashMap<VertexId, ()> = HashMap::new();
    let mut out = Vec::new();
    for &s in adj.keys() {
        if seen.contains_key(&s) {
            continue;
        }
        let mut comp = vec![s];
        seen.insert(s, ());
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[&u] {
                if seen.insert(w, ()).is_none() {
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn link_facets(facets: &[Simplex], sigma: &[VertexId]) -> Vec<Simplex> {
    facets
        .iter()
        .filter(|f| sigma.iter().all(|v| f.binary_search(v).is_ok()))
        .map(|f| f.iter().copied().filter(|v| !sigma.contains(v)).collect())
        .collect()
}

/// `Some(reason)` unless the edges form one cycle of length ≥ 3.
fn cycle_violation(edges: &[Simplex]) -> Option<String> {
    let mut deg: BTreeMap<VertexId, usize> = BTreeMap::new();
    for e in edges {
        for &v in e {
            *deg.entry(v).or_default() += 1;
        }
    }
    if let Some((v, d)) = deg.iter().find(|(_, &d)| d != 2) {
        return Some(format!("vertex {v} has degree {d} in the link"));
    }
    if deg.len() < 3 {
        return Some("link has fewer than 3 vertices".into());
    }
    let comps = components(edges);
    if comps.len() > 1 {
        return Some(format!("link has {} components", comps.len()));
    }
    None
}

fn connectivity_violation(facets: &[Simplex]) -> Option<String> {
    let comps = components(facets);
    (comps.len() > 1).then(|| {
        format!(
            "disconnected: {} components, one is {:?}",
            comps.len(),
            comps[1]
        )
    })
}

fn surface_verdict(facets: &[Simplex]) -> ManifoldVerdict {
    if let Some(r) = connectivity_violation(facets) {
        return ManifoldVerdict::fail(r);
    }
    let vertices = components(facets).concat();
    for v in vertices {
        if let Some(r) = cycle_violation(&link_facets(facets, &[v])) {
            return ManifoldVerdict::fail(format!("link of vertex {v}: {r}"));
        }
    }
    ManifoldVerdict::ok()
}

/// Closed connected surface check: every vertex link is a single cycle.
pub fn surface_check<C: Complex + ?Sized>(c: &C) -> Result<ManifoldVerdict> {
    check_pure_dim(c.facets(), 2)?;
    Ok(surface_verdict(c.facets()))
}

pub fn is_closed_surface<C: Complex + ?Sized>(c: &C) -> Result<bool> {
    Ok(surface_check(c)?.is_manifold())
}

/// Closed connected 3-manifold check: vertex links are closed surfaces with
/// χ = 2 and edge links are single cycles.
pub fn three_manifold_check<C: Complex + ?Sized>(c: &C) -> Result<ManifoldVerdict> {
    let facets = c.facets();
    check_pure_dim(facets, 3)?;
    if let Some(r) = connectivity_violation(facets) {
        return Ok(ManifoldVerdict::fail(r));
    }
    for v in components(facets).concat() {
        let link = link_facets(facets, &[v]);
        if let Some(r) = surface_verdict(&link).reason {
            return Ok(ManifoldVerdict::fail(format!("link of vertex {v}: {r}")));
        }
        let chi = euler_of_facets(&link);
        if chi != 2 {
            return Ok(ManifoldVerdict::fail(format!("link of vertex {v} has χ = {chi}")));
        }
    }
    for e in &faces_from_facets(facets)[1] {
        if let Some(r) = cycle_violation(&link_facets(facets, e)) {
            return Ok(ManifoldVerdict::fail(format!("link of edge {e:?}: {r}")));
        }
    }
    Ok(ManifoldVerdict::ok())
}

pub fn is_closed_3_manifold<C: Complex + ?Sized>(c: &C) -> Result<bool> {
    Ok(three_manifold_check(c)?.is_manifold())
}

/// Dispatches on dimension: cycles in dimension 1, then surfaces and 3-manifolds.
/// Higher dimensions are not verified and return `None`.
pub fn manifold_check<C: Complex + ?Sized>(c: &C) -> Result<Option<ManifoldVerdict>> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    match c.dim() {
        1 => {
            let facets = c.facets();
            Ok(Some(ManifoldVerdict {
                reason: cycle_violation(facets),
            }))
        }
        2 => surface_check(c).map(Some),
        3 => three_manifold_check(c).map(Some),
        _ => Ok(None),
    }
}

fn euler_of_facets(facets: &[Simplex]) -> i64 {
    faces_from_facets(facets)
        .iter()
        .enumerate()
        .map(|(i, fs)| if i % 2 == 0 { fs.len() as i64 } else { -(fs.len() as i64) })
        .sum()
}

/// Orientability of a closed manifold of dimension 1 to 3, by propagating a
/// facet orientation across ridges.
pub fn orientable<C: Complex + ?Sized>(c: &C) -> Result<bool> {
    match manifold_check(c)? {
        Some(v) if v.is_manifold() => {}
        Some(v) => return Err(Error::NotManifold(v.reason.unwrap_or_default())),
        None => {
            return Err(Error::NotManifold(format!(
                "orientability is only checked up to dimension 3, got {}",
                c.dim()
            )))
        }
    }
    Ok(propagate_orientation(c.facets()))
}

/// In a closed pseudomanifold every ridge lies in two facets; they must induce
/// opposite orientations on it.
pub(crate) fn propagate_orientation(facets: &[Simplex]) -> bool {
    let mut ridges: HashMap<Simplex, Vec<(usize, i8)>> = HashMap::new();
    for (fi, f) in facets.iter().enumerate() {
        for i in 0..f.len() {
            let mut r = f.clone();
            r.remove(i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            ridges.entry(r).or_default().push((fi, sign));
        }
    }
    let mut neighbours: Vec<Vec<(usize, i8)>> = vec![Vec::new(); facets.len()];
    for sides in ridges.values() {
        if let [(f, s), (g, t)] = sides[..] {
            // orientations ε_f, ε_g must satisfy ε_f·s = −ε_g·t
            neighbours[f].push((g, -s * t));
            neighbours[g].push((f, -s * t));
        }
    }
    let mut eps: Vec<i8> = vec![0; facets.len()];
    for start in 0..facets.len() {
        if eps[start] != 0 {
            continue;
        }
        eps[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            for &(g, rel) in &neighbours[f] {
                let want = eps[f] * rel;
                if eps[g] == 0 {
                    eps[g] = want;
                    queue.push_back(g);
                } else if eps[g] != want {
                    return false;
                }
            }
        }
    }
    true
}

/// Rational top Betti number, the homological orientability test.
pub fn top_rational_betti<C: Complex + ?Sized>(c: &C) -> usize {
    let faces = c.faces_by_dim();
    *betti_from_faces(&faces, Field::Rational).ranks.last().unwrap_or(&0)
}

pub fn classify_surface<C: Complex + ?Sized>(c: &C) -> Result<SurfaceType> {
    let verdict = surface_check(c)?;
    if let Some(r) = verdict.reason {
        return Err(Error::NotManifold(r));
    }
    let chi = c.euler_characteristic();
    if propagate_orientation(c.facets()) {
        if chi == 2 {
            Ok(SurfaceType::Sphere)
        } else {
            Ok(SurfaceType::ConnectedSumTori(((2 - chi) / 2) as u32))
        }
    } else {
        Ok(SurfaceType::ConnectedSumProjectivePlanes((2 - chi) as u32))
    }
}
