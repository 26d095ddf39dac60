use serde::{Deserialize, Serialize};

use super::homology::{betti, Field};
use crate::complex::{Complex, FVector};
use crate::error::{Error, Result};

/// Low-degree γ and g invariants of a pure `(d−1)`-complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaNumbers {
    pub gamma1: i64,
    pub gamma2: i64,
    pub g2: i64,
    pub g2_bar: i64,
}

impl GammaNumbers {
    /// Evaluates the formulas from `f₀`, `f₁` alone.
    pub fn from_f_vector(f: &FVector, d: u32) -> Self {
        let (f0, f1, d) = (f.f0() as i64, f.f1() as i64, d as i64);
        GammaNumbers {
            gamma1: f0 - 2 * d,
            gamma2: f1 - (2 * d - 3) * f0 + 2 * d * (d - 2),
            g2: f1 - d * f0 + d * (d + 1) / 2,
            g2_bar: 2 * f1 - 3 * (d - 1) * f0 + 2 * d * (d - 1),
        }
    }
}

pub fn gamma_numbers<C: Complex + ?Sized>(c: &C, d: u32) -> Result<GammaNumbers> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    if c.dim() != d as isize - 1 {
        return Err(Error::DimensionMismatch {
            expected: d as isize - 1,
            found: c.dim(),
        });
    }
    Ok(GammaNumbers::from_f_vector(&c.f_vector(), d))
}

/// Both sides of `γ₂ ≥ 16 β₁` for a closed 3-manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub gamma2: i64,
    pub beta1: usize,
    pub satisfied: bool,
}

pub fn conjecture_check<C: Complex + ?Sized>(c: &C) -> Result<ConjectureReport> {
    conjecture_check_over(c, Field::Rational)
}

pub fn conjecture_check_over<C: Complex + ?Sized>(c: &C, field: Field) -> Result<ConjectureReport> {
    let gamma2 = gamma_numbers(c, 4)?.gamma2;
    let beta1 = betti(c, field).beta(1);
    Ok(ConjectureReport {
        gamma2,
        beta1,
        satisfied: gamma2 >= 16 * beta1 as i64,
    })
}
