use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Simplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    GF2,
    Rational,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::GF2 => write!(f, "GF(2)"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

/// Ranks `β₀, …, β_dim` of simplicial homology over `field`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiVector {
    pub field: Field,
    pub ranks: Vec<usize>,
}

impl BettiVector {
    pub fn beta(&self, i: usize) -> usize {
        self.ranks.get(i).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ranks.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn betti<C: Complex + ?Sized>(c: &C, field: Field) -> BettiVector {
    let faces = c.faces_by_dim();
    betti_from_faces(&faces, field)
}

/// Betti numbers over both fields, sharing a single face enumeration.
pub fn betti_both<C: Complex + ?Sized>(c: &C) -> (BettiVector, BettiVector) {
    let faces = c.faces_by_dim();
    (betti_from_faces(&faces, Field::GF2), betti_from_faces(&faces, Field::Rational))
}

pub(crate) fn betti_from_faces(faces: &[Vec<Simplex>], field: Field) -> BettiVector {
    // ranks[k] = rank of ∂_k : C_k → C_{k−1}; ∂_0 = 0
    let mut ranks = vec![0usize; faces.len() + 1];
    for k in 1..faces.len() {
        let index: HashMap<&[usize], usize> = faces[k - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let rows = faces[k - 1].len();
        ranks[k] = match field {
            Field::GF2 => rank_gf2(faces[k].iter().map(|f| gf2_column(f, &index, rows))),
            Field::Rational => rank_rational(faces[k].iter().map(|f| rational_column(f, &index)), rows),
        };
    }
    let ranks = (0..faces.len())
        .map(|i| faces[i].len() - ranks[i] - ranks[i + 1])
        .collect();
    BettiVector { field, ranks }
}

fn boundary<'a>(face: &'a [usize]) -> impl Iterator<Item = (usize, Simplex)> + 'a {
    (0..face.len()).map(move |i| {
        let mut g = face.to_vec();
        g.remove(i);
        (i, g)
    })
}

fn gf2_column(face: &[usize], index: &HashMap<&[usize], usize>, rows: usize) -> FixedBitSet {
    let mut col = FixedBitSet::with_capacity(rows);
    for (_, g) in boundary(face) {
        col.insert(index[g.as_slice()]);
    }
    col
}

fn rank_gf2(cols: impl Iterator<Item = FixedBitSet>) -> usize {
    let mut pivots: HashMap<usize, FixedBitSet> = HashMap::new();
    for mut col in cols {
        while let Some(p) = col.ones().next() {
            match pivots.get(&p) {
                Some(q) => col.symmetric_difference_with(q),
                None => {
                    pivots.insert(p, col);
                    break;
                }
            }
        }
    }
    pivots.len()
}

type SparseColumn = Vec<(usize, BigInt)>;

fn rational_column(face: &[usize], index: &HashMap<&[usize], usize>) -> SparseColumn {
    let mut col: SparseColumn = boundary(face)
        .map(|(i, g)| {
            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            (index[g.as_slice()], sign)
        })
        .collect();
    col.sort_unstable_by_key(|e| e.0);
    col
}

/// Rank by fraction-free elimination on leading rows. Every stored column is
/// kept primitive (content 1) so entries stay small.
fn rank_rational(cols: impl Iterator<Item = SparseColumn>, rows: usize) -> usize {
    let mut pivots: Vec<Option<SparseColumn>> = vec![None; rows];
    let mut rank = 0;
    for mut col in cols {
        while let Some(&(p, _)) = col.first() {
            match &pivots[p] {
                Some(q) => col = eliminate(&col, q),
                None => {
                    pivots[p] = Some(col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `q₀·c − c₀·q` scaled down to a primitive vector; the leading row cancels.
fn eliminate(c: &SparseColumn, q: &SparseColumn) -> SparseColumn {
    let g = c[0].1.gcd(&q[0].1);
    let mc = &q[0].1 / &g;
    let mq = &c[0].1 / &g;
    let mut out: SparseColumn = Vec::with_capacity(c.len() + q.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < q.len() {
        let (row, val) = match (c.get(i), q.get(j)) {
            (Some(a), Some(b)) if a.0 == b.0 => {
                i += 1;
                j += 1;
                (a.0, &mc * &a.1 - &mq * &b.1)
            }
            (Some(a), Some(b)) if a.0 < b.0 => {
                i += 1;
                (a.0, &mc * &a.1)
            }
            (Some(a), None) => {
                i += 1;
                (a.0, &mc * &a.1)
            }
            (_, Some(b)) => {
                j += 1;
                (b.0, -(&mq * &b.1))
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((row, val));
        }
    }
    let content = out
        .iter()
        .fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if content > BigInt::one() {
        for (_, v) in out.iter_mut() {
            *v /= &content;
        }
    }
    if out.first().is_some_and(|(_, v)| v.is_negative()) {
        for (_, v) in out.iter_mut() {
            *v = -&*v;
        }
    }
    out
}
