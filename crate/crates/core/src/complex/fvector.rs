use std::fmt;

use serde::{Deserialize, Serialize};

/// Face counts `(f₋₁ = 1, f₀, …, f_{d−1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        assert_eq!(counts.first(), Some(&1), "f_-1 must be 1");
        FVector(counts)
    }

    /// `f_i` for `i ≥ −1`; zero past the top dimension.
    pub fn f(&self, i: isize) -> u64 {
        self.0.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn f0(&self) -> u64 {
        self.f(0)
    }

    pub fn f1(&self) -> u64 {
        self.f(1)
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 2
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
