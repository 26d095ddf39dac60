//! Simplicial complexes as facet lists and as clique complexes of graphs.

mod flag;
mod fvector;
mod simplicial;
mod skeleton;

pub use flag::FlagComplex;
pub use fvector::FVector;
pub use simplicial::{FlagCheck, SimplicialComplex};
pub use skeleton::Skeleton;

use std::collections::HashSet;

/// Dense vertex label, `0..f₀` within one complex.
pub type VertexId = usize;

/// A face as a strictly increasing list of vertex ids.
pub type Simplex = Vec<VertexId>;

/// Read access shared by facet-list and flag complexes.
pub trait Complex {
    fn vertex_count(&self) -> usize;

    /// Inclusion-maximal faces, each sorted, the list sorted lexicographically.
    fn facets(&self) -> &[Simplex];

    /// Maximal face cardinality minus one; `-1` for the complex `{∅}`.
    fn dim(&self) -> isize {
        self.facets()
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    fn is_pure(&self) -> bool {
        let mut sizes = self.facets().iter().map(Vec::len);
        match sizes.next() {
            Some(first) => sizes.all(|s| s == first),
            None => true,
        }
    }

    /// All nonempty faces grouped by dimension: `result[i]` holds the sorted
    /// i-dimensional faces.
    fn faces_by_dim(&self) -> Vec<Vec<Simplex>> {
        faces_from_facets(self.facets())
    }

    fn f_vector(&self) -> FVector {
        let mut counts = vec![1u64];
        counts.extend(self.faces_by_dim().iter().map(|fs| fs.len() as u64));
        FVector::new(counts)
    }

    fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }
}

/// Downward closure of a facet list, grouped by dimension.
pub(crate) fn faces_from_facets(facets: &[Simplex]) -> Vec<Vec<Simplex>> {
    let top = facets.iter().map(Vec::len).max().unwrap_or(0);
    let mut sets: Vec<HashSet<Simplex>> = vec![HashSet::new(); top];
    for facet in facets {
        let k = facet.len();
        for mask in 1u64..(1u64 << k) {
            let face: Simplex = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
            sets[face.len() - 1].insert(face);
        }
    }
    sets.into_iter()
        .map(|s| {
            let mut v: Vec<Simplex> = s.into_iter().collect();
            v.sort_unstable();
            v
        })
        .collect()
}

/// True if sorted `a` is a subset of sorted `b`.
pub(crate) fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

/// Drops facets contained in other facets; sorts the result.
pub(crate) fn maximalize(mut facets: Vec<Simplex>) -> Vec<Simplex> {
    for f in facets.iter_mut() {
        f.sort_unstable();
        f.dedup();
    }
    facets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    facets.dedup();
    let mut kept: Vec<Simplex> = Vec::with_capacity(facets.len());
    for f in facets {
        if !kept.iter().any(|k| k.len() > f.len() && is_subset(&f, k)) {
            kept.push(f);
        }
    }
    if kept.len() > 1 {
        kept.retain(|f| !f.is_empty());
    }
    kept.sort_unstable();
    kept
}
