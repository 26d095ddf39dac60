mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use flagtri::constructors::{cycle, octahedral_sphere, staircase_product, Fixture};
use flagtri::moves::{admissible_edges, apply, contract_edge, induced_four_cycle, subdivide_edge};
use flagtri::topology::{betti, classify_surface, is_closed_3_manifold, is_closed_surface};
use flagtri::{Complex, Error, Field, FlagComplex, Move, MoveKind};

use common::facet_list_is_flag;

fn seeds() -> Vec<FlagComplex> {
    let (oct3, _) = octahedral_sphere(3);
    let mut out: Vec<FlagComplex> = Fixture::ALL.iter().map(|f| f.complex()).collect();
    out.push(oct3.clone());
    out.push(octahedral_sphere(4).0);
    out.push(staircase_product(&oct3, &cycle(4).unwrap()).unwrap());
    out
}

fn walk(seed: &FlagComplex, steps: usize, rng_seed: u64) -> Vec<FlagComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut c = seed.clone();
    let mut out = vec![c.clone()];
    for _ in 0..steps {
        let adm = admissible_edges(&c);
        c = if !adm.is_empty() && rng.gen_bool(0.5) {
            let e = *adm.choose(&mut rng).unwrap();
            contract_edge(&c, e.0, e.1).unwrap()
        } else {
            let e = *c.edges().choose(&mut rng).unwrap();
            subdivide_edge(&c, e.0, e.1).unwrap()
        };
        out.push(c.clone());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn walks_keep_flagness_and_topology(which in 0usize..8, rng_seed in any::<u64>()) {
        let seed = &seeds()[which];
        let chi = seed.euler_characteristic();
        let rational = betti(seed, Field::Rational);
        let gf2 = betti(seed, Field::GF2);
        for c in walk(seed, 25, rng_seed) {
            prop_assert!(facet_list_is_flag(c.vertex_count(), c.facets()));
            prop_assert_eq!(c.euler_characteristic(), chi);
            prop_assert_eq!(&betti(&c, Field::Rational), &rational);
            prop_assert_eq!(&betti(&c, Field::GF2), &gf2);
            match seed.dim() {
                2 => {
                    prop_assert!(is_closed_surface(&c).unwrap());
                    prop_assert_eq!(classify_surface(&c).unwrap(), classify_surface(seed).unwrap());
                }
                _ => prop_assert!(is_closed_3_manifold(&c).unwrap()),
            }
        }
    }

    #[test]
    fn subdivision_matches_stellar_subdivision(which in 0usize..8, pick in any::<prop::sample::Index>()) {
        let c = &seeds()[which];
        let edges = c.edges();
        let (a, b) = edges[pick.index(edges.len())];
        let flag = subdivide_edge(c, a, b).unwrap();
        let stellar = c.to_simplicial().stellar_subdivide(&[a, b]).unwrap();
        prop_assert_eq!(flag.facets(), stellar.facets());
        prop_assert_eq!(flag.vertex_count(), c.vertex_count() + 1);
        let (f, g) = (c.f_vector(), flag.f_vector());
        prop_assert_eq!(g.f0(), f.f0() + 1);
    }

    #[test]
    fn subdivision_is_undone_by_contracting_the_new_vertex(which in 0usize..8, pick in any::<prop::sample::Index>()) {
        let c = &seeds()[which];
        let edges = c.edges();
        let (a, b) = edges[pick.index(edges.len())];
        let s = subdivide_edge(c, a, b).unwrap();
        let w = c.vertex_count();
        prop_assert_eq!(induced_four_cycle(&s, a, w).unwrap(), None);
        prop_assert_eq!(&contract_edge(&s, a, w).unwrap(), c);
    }

    #[test]
    fn four_cycle_witnesses_are_induced(which in 0usize..8, steps in 0usize..10, rng_seed in any::<u64>()) {
        let c = walk(&seeds()[which], steps, rng_seed).pop().unwrap();
        for (a, b) in c.edges() {
            if let Some([p, q, y, x]) = induced_four_cycle(&c, a, b).unwrap() {
                prop_assert_eq!((p, q), (a, b));
                prop_assert!(c.has_edge(b, y) && c.has_edge(y, x) && c.has_edge(x, a));
                prop_assert!(!c.has_edge(a, y) && !c.has_edge(b, x));
                let err = contract_edge(&c, a, b).unwrap_err();
                prop_assert_eq!(err, Error::InadmissibleContraction { edge: (a, b), cycle: [a, b, y, x] });
            } else {
                let next = contract_edge(&c, a, b).unwrap();
                let simp = c.to_simplicial().contract_edge(a, b).unwrap();
                prop_assert_eq!(next.facets(), simp.facets());
                prop_assert!(facet_list_is_flag(next.vertex_count(), next.facets()));
            }
        }
    }
}

#[test]
fn f_vector_changes_per_subdivision() {
    // surfaces gain (1, 3, 2); 3-manifolds gain (1, 1 + m, 2m, m) when the edge link has m vertices
    let t = Fixture::Torus12.complex();
    let s = subdivide_edge(&t, 0, t.skeleton().neighbors(0).ones().next().unwrap()).unwrap();
    let (f, g) = (t.f_vector(), s.f_vector());
    let delta: Vec<i64> = (0..4).map(|i| g.as_slice()[i] as i64 - f.as_slice()[i] as i64).collect();
    assert_eq!(delta, vec![0, 1, 3, 2]);

    let (o, _) = octahedral_sphere(4);
    let s = subdivide_edge(&o, 0, 1).unwrap();
    let delta: Vec<i64> = (0..5).map(|i| s.f_vector().as_slice()[i] as i64 - o.f_vector().as_slice()[i] as i64).collect();
    assert_eq!(delta, vec![0, 1, 1 + 4, 2 * 4, 4]);
}

#[test]
fn apply_rejects_wrong_new_vertex_and_missing_edges() {
    let (o, _) = octahedral_sphere(3);
    let bad = Move {
        kind: MoveKind::SubdivideEdge,
        edge: (0, 1),
        new_vertex: Some(3),
    };
    assert!(apply(&o, &bad).is_err());
    let missing = Move {
        kind: MoveKind::ContractEdge,
        edge: (0, 3),
        new_vertex: None,
    };
    assert_eq!(apply(&o, &missing), Err(Error::EdgeNotFound(0, 3)));
    assert!(admissible_edges(&o).is_empty());
}

#[test]
fn fixtures_have_no_admissible_edges() {
    // the 16-vertex grids too: only a blow-up lets the search move off them
    for f in Fixture::ALL {
        assert!(admissible_edges(&f.complex()).is_empty(), "{f}");
    }
}
