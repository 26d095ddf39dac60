//! Randomized minimization over edge moves.
//!
//! Every round starts from the seed complex, subdivides uniformly random edges
//! until a target vertex count is reached, then contracts uniformly random
//! admissible edges until none is left. The resulting local minima are
//! deduplicated up to isomorphism in a [`MinimaArchive`].
//!
//! Round `r` draws from a ChaCha8 stream `r` keyed by the master seed, so the
//! outcome of a run does not depend on scheduling or thread count.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, FVector, FlagComplex, VertexId};
use crate::error::{Error, Result};
use crate::iso::canonical_form;
use crate::moves::{admissible_edges, contract_edge, subdivide_edge, Move, MoveKind, MoveTrace};
use crate::topology::{betti_both, gamma_numbers, is_closed_3_manifold, BettiVector, GammaNumbers};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Objective {
    MinVertices,
    MinGamma2,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::MinVertices => write!(f, "f0"),
            Objective::MinGamma2 => write!(f, "gamma2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub rng_seed: u64,
    pub rounds: usize,
    pub blowup_target: usize,
    pub objective: Objective,
    pub max_moves_per_round: usize,
    /// Entries kept per objective value.
    pub per_value_cap: usize,
}

impl SearchConfig {
    pub fn new(objective: Objective, rounds: usize, blowup_target: usize, rng_seed: u64) -> Self {
        SearchConfig {
            rng_seed,
            rounds,
            blowup_target,
            objective,
            max_moves_per_round: 10_000,
            per_value_cap: 100,
        }
    }
}

/// A local minimum with its invariants and the moves that produced it.
#[derive(Clone, Debug)]
pub struct ArchiveEntry {
    pub digest: String,
    pub complex: FlagComplex,
    pub f_vector: FVector,
    /// `γ`-numbers with `d = dim + 1`.
    pub gamma: GammaNumbers,
    pub betti_rational: BettiVector,
    pub betti_gf2: BettiVector,
    pub objective_value: i64,
    pub round: usize,
    pub trace: MoveTrace,
}

/// Minima keyed by canonical digest.
#[derive(Clone, Debug)]
pub struct MinimaArchive {
    objective: Objective,
    per_value_cap: usize,
    entries: BTreeMap<String, ArchiveEntry>,
}

impl MinimaArchive {
    pub fn new(objective: Objective, per_value_cap: usize) -> Self {
        MinimaArchive {
            objective,
            per_value_cap,
            entries: BTreeMap::new(),
        }
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    /// Adds an entry. A known digest keeps the entry from the earliest round;
    /// beyond the per-value cap the largest digests are dropped. Both rules
    /// make the final contents independent of insertion order.
    pub fn insert(&mut self, entry: ArchiveEntry) -> bool {
        if let Some(old) = self.entries.get_mut(&entry.digest) {
            if entry.round < old.round {
                *old = entry;
            }
            return false;
        }
        let value = entry.objective_value;
        let digest = entry.digest.clone();
        self.entries.insert(digest.clone(), entry);
        let same: Vec<String> = self
            .entries
            .values()
            .filter(|e| e.objective_value == value)
            .map(|e| e.digest.clone())
            .collect();
        if same.len() > self.per_value_cap {
            let largest = same.last().unwrap().clone();
            self.entries.remove(&largest);
            return largest != digest;
        }
        true
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, digest: &str) -> Option<&ArchiveEntry> {
        self.entries.get(digest)
    }

    /// Entries in digest order.
    pub fn entries(&self) -> impl Iterator<Item = &ArchiveEntry> {
        self.entries.values()
    }

    pub fn best_value(&self) -> Option<i64> {
        self.entries.values().map(|e| e.objective_value).min()
    }

    /// Entries attaining the best objective value.
    pub fn best(&self) -> Vec<&ArchiveEntry> {
        let Some(b) = self.best_value() else {
            return Vec::new();
        };
        self.entries.values().filter(|e| e.objective_value == b).collect()
    }

    /// Number of non-isomorphic entries per objective value.
    pub fn counts_by_value(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for e in self.entries.values() {
            *out.entry(e.objective_value).or_default() += 1;
        }
        out
    }
}

fn random_edge(c: &FlagComplex, rng: &mut ChaCha8Rng) -> Option<(VertexId, VertexId)> {
    c.edges().choose(rng).copied()
}

/// Subdivides uniformly random edges until `target_f0` vertices are reached.
pub fn blow_up(c: &FlagComplex, target_f0: usize, rng: &mut ChaCha8Rng) -> (FlagComplex, Vec<Move>) {
    blow_up_capped(c, target_f0, rng, usize::MAX).expect("uncapped")
}

fn blow_up_capped(
    c: &FlagComplex,
    target_f0: usize,
    rng: &mut ChaCha8Rng,
    cap: usize,
) -> std::result::Result<(FlagComplex, Vec<Move>), usize> {
    let mut cur = c.clone();
    let mut moves = Vec::new();
    while cur.vertex_count() < target_f0 {
        if moves.len() >= cap {
            return Err(moves.len());
        }
        let Some(edge) = random_edge(&cur, rng) else { break };
        let new_vertex = Some(cur.vertex_count());
        cur = subdivide_edge(&cur, edge.0, edge.1).expect("edge taken from the complex");
        moves.push(Move {
            kind: MoveKind::SubdivideEdge,
            edge,
            new_vertex,
        });
    }
    Ok((cur, moves))
}

/// Contracts uniformly random admissible edges until none remains.
pub fn contract_to_minimum(c: &FlagComplex, rng: &mut ChaCha8Rng) -> (FlagComplex, Vec<Move>) {
    contract_capped(c, rng, usize::MAX).expect("uncapped")
}

fn contract_capped(
    c: &FlagComplex,
    rng: &mut ChaCha8Rng,
    cap: usize,
) -> std::result::Result<(FlagComplex, Vec<Move>), usize> {
    let mut cur = c.clone();
    let mut moves = Vec::new();
    loop {
        let candidates = admissible_edges(&cur);
        let Some(&edge) = candidates.choose(rng) else {
            return Ok((cur, moves));
        };
        if moves.len() >= cap {
            return Err(moves.len());
        }
        cur = contract_edge(&cur, edge.0, edge.1).expect("edge is admissible");
        moves.push(Move {
            kind: MoveKind::ContractEdge,
            edge,
            new_vertex: None,
        });
    }
}

/// Whether `c` is a local minimum, with the admissible edges that show it is not.
pub fn local_minimum_certificate(c: &FlagComplex) -> (bool, Vec<(VertexId, VertexId)>) {
    let edges = admissible_edges(c);
    (edges.is_empty(), edges)
}

/// Per-round RNG: stream `round` of the master seed.
pub fn round_rng(master_seed: u64, round: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(round as u64);
    rng
}

/// Progress record emitted once per round, in round order.
#[derive(Clone, Debug)]
pub struct RoundSummary {
    pub round: usize,
    pub blowup_f0: usize,
    /// `(f₀, γ₂)` at the minimum, or `None` for an aborted round.
    pub minimum: Option<(usize, i64)>,
    pub archive_size: usize,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub archive: MinimaArchive,
    /// Rounds that exceeded the move cap.
    pub aborted_rounds: Vec<usize>,
    pub seed_digest: String,
}

enum RoundResult {
    Minimum(Box<ArchiveEntry>, usize),
    Aborted(usize),
}

fn objective_value(objective: Objective, c: &FlagComplex, gamma: &GammaNumbers) -> i64 {
    match objective {
        Objective::MinVertices => c.vertex_count() as i64,
        Objective::MinGamma2 => gamma.gamma2,
    }
}

fn run_round(seed: &FlagComplex, seed_digest: &str, config: &SearchConfig, round: usize) -> RoundResult {
    let mut rng = round_rng(config.rng_seed, round);
    let cap = config.max_moves_per_round;
    let Ok((big, mut moves)) = blow_up_capped(seed, config.blowup_target, &mut rng, cap) else {
        return RoundResult::Aborted(round);
    };
    let blowup_f0 = big.vertex_count();
    let Ok((min, contractions)) = contract_capped(&big, &mut rng, cap.saturating_sub(moves.len())) else {
        return RoundResult::Aborted(round);
    };
    moves.extend(contractions);
    let d = (min.dim() + 1).max(1) as u32;
    let gamma = gamma_numbers(&min, d).unwrap_or(GammaNumbers::from_f_vector(&min.f_vector(), d));
    let (betti_gf2, betti_rational) = betti_both(&min);
    let cf = canonical_form(&min);
    let entry = ArchiveEntry {
        digest: cf.digest_hex(),
        f_vector: min.f_vector(),
        objective_value: objective_value(config.objective, &min, &gamma),
        gamma,
        betti_rational,
        betti_gf2,
        round,
        trace: MoveTrace {
            seed_complex_id: seed_digest.to_owned(),
            rng_seed: config.rng_seed,
            moves,
        },
        complex: min,
    };
    RoundResult::Minimum(Box::new(entry), blowup_f0)
}

pub fn run_search(seed: &FlagComplex, config: &SearchConfig) -> Result<SearchOutcome> {
    run_search_with_progress(seed, config, |_| {})
}

/// Runs the search, calling `progress` after each round is archived.
pub fn run_search_with_progress<F: FnMut(&RoundSummary)>(
    seed: &FlagComplex,
    config: &SearchConfig,
    mut progress: F,
) -> Result<SearchOutcome> {
    if config.rounds == 0 {
        return Err(Error::InvalidInput("rounds must be at least 1".into()));
    }
    if config.blowup_target < seed.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "blow-up target {} is below the seed's {} vertices",
            config.blowup_target,
            seed.vertex_count()
        )));
    }
    if config.objective == Objective::MinGamma2 && !is_closed_3_manifold(seed)? {
        return Err(Error::NotManifold("the γ₂ objective needs a closed 3-manifold seed".into()));
    }
    let seed_digest = canonical_form(seed).digest_hex();
    let mut archive = MinimaArchive::new(config.objective, config.per_value_cap);
    let mut aborted_rounds = Vec::new();
    const BATCH: usize = 64;
    for start in (0..config.rounds).step_by(BATCH) {
        let end = (start + BATCH).min(config.rounds);
        let results: Vec<RoundResult> = (start..end)
            .into_par_iter()
            .map(|r| run_round(seed, &seed_digest, config, r))
            .collect();
        for res in results {
            match res {
                RoundResult::Minimum(entry, blowup_f0) => {
                    let round = entry.round;
                    let minimum = Some((entry.complex.vertex_count(), entry.gamma.gamma2));
                    archive.insert(*entry);
                    progress(&RoundSummary {
                        round,
                        blowup_f0,
                        minimum,
                        archive_size: archive.len(),
                    });
                }
                RoundResult::Aborted(round) => {
                    aborted_rounds.push(round);
                    progress(&RoundSummary {
                        round,
                        blowup_f0: 0,
                        minimum: None,
                        archive_size: archive.len(),
                    });
                }
            }
        }
    }
    Ok(SearchOutcome {
        archive,
        aborted_rounds,
        seed_digest,
    })
}
