use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, FlagComplex, SimplicialComplex, Skeleton, VertexId};
use crate::error::{Error, Result};
use crate::format::parse_plain;

/// Vertex colors `1..=d`; `colors[v]` is the color of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<u32>,
}

impl Coloring {
    pub fn color(&self, v: VertexId) -> u32 {
        self.colors[v]
    }

    /// Adjacent vertices never share a color.
    pub fn is_proper(&self, c: &FlagComplex) -> bool {
        c.edges().into_iter().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Boundary of the `d`-dimensional cross-polytope: vertices `i` and `i + d` are
/// antipodal (non-adjacent), every other pair is an edge. Antipodes share the
/// color `i + 1`.
pub fn octahedral_sphere(d: usize) -> (FlagComplex, Coloring) {
    let n = 2 * d;
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| v != u + d).map(move |v| (u, v)));
    let c = FlagComplex::from_skeleton(Skeleton::from_edges(n, edges));
    let colors = (0..n).map(|i| (i % d) as u32 + 1).collect();
    (c, Coloring { colors })
}

/// The `n`-cycle `0–1–…–(n−1)–0`.
pub fn cycle(n: usize) -> Result<FlagComplex> {
    if n < 4 {
        return Err(Error::InvalidInput(format!(
            "a flag circle needs at least 4 vertices, got {n}"
        )));
    }
    FlagComplex::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Fixture {
    Rp2Left,
    Rp2Right,
    Torus12,
    GridTorus16,
    GridKlein16,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [
        Fixture::Rp2Left,
        Fixture::Rp2Right,
        Fixture::Torus12,
        Fixture::GridTorus16,
        Fixture::GridKlein16,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Rp2Left => "rp2_11_left",
            Fixture::Rp2Right => "rp2_11_right",
            Fixture::Torus12 => "torus_12",
            Fixture::GridTorus16 => "grid_torus_16",
            Fixture::GridKlein16 => "grid_klein_16",
        }
    }

    /// The committed facet file.
    pub fn text(self) -> &'static str {
        match self {
            Fixture::Rp2Left => include_str!("../../../../fixtures/rp2_11_left.txt"),
            Fixture::Rp2Right => include_str!("../../../../fixtures/rp2_11_right.txt"),
            Fixture::Torus12 => include_str!("../../../../fixtures/torus_12.txt"),
            Fixture::GridTorus16 => include_str!("../../../../fixtures/grid_torus_16.txt"),
            Fixture::GridKlein16 => include_str!("../../../../fixtures/grid_klein_16.txt"),
        }
    }

    /// Facets with file labels; vertex `v` of [`complex`](Self::complex) has label `v + 1`.
    pub fn simplicial(self) -> SimplicialComplex {
        let file = parse_plain(self.text()).expect("fixture files parse");
        file.to_complex().expect("fixture files are nonempty")
    }

    pub fn complex(self) -> FlagComplex {
        FlagComplex::try_from_simplicial(&self.simplicial()).expect("fixtures are flag")
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown fixture {s:?}")))
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn fixture(name: &str) -> Result<FlagComplex> {
    Ok(name.parse::<Fixture>()?.complex())
}

/// Facets of the 16-vertex grid surfaces, with 1-based labels.
///
/// Grid points `(x, y)` with `x, y ∈ {−2, …, 2}`; each unit square is cut by the
/// diagonal from `(x, y)` to `(x+1, y+1)`. The top and bottom rows are glued
/// straight, `(x, 2) ~ (x, −2)`. The left and right columns are glued straight
/// for the torus and with a flip, `(2, y) ~ (−2, −y)`, for the Klein bottle.
/// The remaining 4×4 points are labeled row by row from the top left.
pub fn grid_facets(klein: bool) -> Vec<[u64; 3]> {
    let rep = |mut x: i64, mut y: i64| {
        while x == 2 || y == 2 {
            if y == 2 {
                y = -2;
            }
            if x == 2 {
                x = -2;
                if klein {
                    y = -y;
                }
            }
        }
        (x, y)
    };
    let label = |x: i64, y: i64| {
        let (x, y) = rep(x, y);
        ((1 - y) * 4 + x + 2 + 1) as u64
    };
    let mut facets = Vec::new();
    for x in -2..2 {
        for y in -2..2 {
            for tri in [
                [(x, y), (x + 1, y), (x + 1, y + 1)],
                [(x, y), (x, y + 1), (x + 1, y + 1)],
            ] {
                let mut t = tri.map(|(a, b)| label(a, b));
                t.sort_unstable();
                facets.push(t);
            }
        }
    }
    facets.sort_unstable();
    facets.dedup();
    facets
}

/// Order complex of the face poset: one vertex per nonempty face, edges between
/// comparable faces. Faces are numbered by dimension, then lexicographically.
pub fn barycentric_subdivision<C: Complex + ?Sized>(c: &C) -> FlagComplex {
    let faces: Vec<Vec<VertexId>> = c.faces_by_dim().into_iter().flatten().collect();
    let index: std::collections::HashMap<&[VertexId], usize> =
        faces.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let mut s = Skeleton::empty(faces.len());
    for (i, f) in faces.iter().enumerate() {
        // every proper nonempty subface
        let k = f.len();
        for mask in 1u64..(1u64 << k) - 1 {
            let sub: Vec<VertexId> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect();
            s.add_edge(i, index[sub.as_slice()]);
        }
    }
    FlagComplex::from_skeleton(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedral_f_vectors() {
        assert_eq!(octahedral_sphere(2).0.f_vector().as_slice(), &[1, 4, 4]);
        assert_eq!(octahedral_sphere(3).0.f_vector().as_slice(), &[1, 6, 12, 8]);
        let (o4, col) = octahedral_sphere(4);
        assert_eq!(o4.f_vector().as_slice(), &[1, 8, 24, 32, 16]);
        assert!(col.is_proper(&o4));
        assert_eq!(col.colors, vec![1, 2, 3, 4, 1, 2, 3, 4]);
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle(5).unwrap().f_vector().as_slice(), &[1, 5, 5]);
        assert!(matches!(cycle(3), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn fixture_names_round_trip() {
        for f in Fixture::ALL {
            assert_eq!(f.name().parse::<Fixture>().unwrap(), f);
        }
        assert!(fixture("sphere").is_err());
    }

    #[test]
    fn barycentric_of_triangle_boundary_is_hexagon() {
        let t = SimplicialComplex::from_facets([[0u64, 1], [1, 2], [0, 2]]).unwrap();
        let b = barycentric_subdivision(&t);
        assert_eq!(b.f_vector().as_slice(), &[1, 6, 6]);
        let tet = SimplicialComplex::from_facets([[0u64, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(barycentric_subdivision(&tet).f_vector().as_slice(), &[1, 14, 36, 24]);
    }
}
