pub mod construct;
pub mod report;
pub mod search;
pub mod verify;

use std::path::Path;

use flagtri::format::{read_file, FacetFile};
use flagtri::search::local_minimum_certificate;
use flagtri::topology::{betti_both, classify_surface, conjecture_check, gamma_numbers, manifold_check, orientable};
use flagtri::topology::{ConjectureReport, ManifoldVerdict};
use flagtri::{BettiVector, Complex, FVector, FlagComplex, GammaNumbers, SimplicialComplex, SurfaceType, VertexId};

use crate::error::{CliError, CliResult};

pub fn load(path: &Path) -> CliResult<(FacetFile, SimplicialComplex)> {
    let file = read_file(path).map_err(|e| CliError::parse_in(path, e))?;
    let complex = file
        .to_complex()
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok((file, complex))
}

pub fn load_flag(path: &Path) -> CliResult<(FacetFile, FlagComplex)> {
    let (file, s) = load(path)?;
    let c = FlagComplex::try_from_simplicial(&s).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    Ok((file, c))
}

/// Name for a complex read from `path`: the file's `name` entry, else the file stem.
pub fn display_name(file: &FacetFile, path: &Path) -> String {
    file.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "complex".into())
    })
}

/// Everything `verify` reports, computed once.
pub struct Invariants {
    pub f: FVector,
    pub dim: isize,
    /// Missing face with at least three vertices, in file labels.
    pub non_flag_witness: Option<Vec<u64>>,
    pub manifold: Option<ManifoldVerdict>,
    pub orientable: Option<bool>,
    pub surface: Option<SurfaceType>,
    pub betti_gf2: BettiVector,
    pub betti_rational: BettiVector,
    pub gamma: Option<GammaNumbers>,
    pub conjecture: Option<ConjectureReport>,
    /// Admissible edges in file labels, for flag inputs.
    pub admissible: Option<Vec<(u64, u64)>>,
}

impl Invariants {
    pub fn of(s: &SimplicialComplex) -> Self {
        let label = |v: VertexId| s.label(v);
        let check = s.is_flag();
        let non_flag_witness = check.witness.map(|w| w.into_iter().map(label).collect());
        let flag = FlagComplex::try_from_simplicial(s).ok();
        let dim = s.dim();
        let manifold = manifold_check(s).ok().flatten();
        let is_manifold = manifold.as_ref().is_some_and(ManifoldVerdict::is_manifold);
        let orientable = is_manifold.then(|| orientable(s).ok()).flatten();
        let surface = (is_manifold && dim == 2).then(|| classify_surface(s).ok()).flatten();
        let (betti_gf2, betti_rational) = betti_both(s);
        let gamma = (dim >= 0).then(|| gamma_numbers(s, (dim + 1) as u32).ok()).flatten();
        let conjecture = (is_manifold && dim == 3).then(|| conjecture_check(s).ok()).flatten();
        let admissible = flag.map(|c| {
            local_minimum_certificate(&c)
                .1
                .into_iter()
                .map(|(a, b)| (label(a), label(b)))
                .collect()
        });
        Invariants {
            f: s.f_vector(),
            dim,
            non_flag_witness,
            manifold,
            orientable,
            surface,
            betti_gf2,
            betti_rational,
            gamma,
            conjecture,
            admissible,
        }
    }

    pub fn is_flag(&self) -> bool {
        self.non_flag_witness.is_none()
    }

    pub fn is_manifold(&self) -> bool {
        self.manifold.as_ref().is_some_and(ManifoldVerdict::is_manifold)
    }

    pub fn is_local_minimum(&self) -> Option<bool> {
        self.admissible.as_ref().map(Vec::is_empty)
    }

    /// One line: flagness, kind, classification, f-vector and minimality.
    pub fn summary(&self) -> String {
        let flag = if self.is_flag() { "flag" } else { "non-flag" };
        let mut parts = Vec::new();
        match (self.dim, &self.manifold) {
            (2, Some(v)) if v.is_manifold() => {
                parts.push(format!("{flag} surface"));
                if let Some(t) = self.surface {
                    parts.push(t.to_string());
                }
            }
            (3, Some(v)) if v.is_manifold() => parts.push(format!("{flag} 3-manifold")),
            (d, Some(v)) => parts.push(format!(
                "{flag} {d}-complex, not a closed manifold ({})",
                v.reason.as_deref().unwrap_or("unknown")
            )),
            (d, None) => parts.push(format!("{flag} {d}-complex")),
        }
        parts.push(format!("f={}", self.f));
        if let Some(r) = self.conjecture {
            parts.push(format!("γ₂={} β₁={}", r.gamma2, r.beta1));
        }
        if let Some(m) = self.is_local_minimum() {
            parts.push(format!("local minimum: {}", yes_no(m)));
        }
        parts.join(", ")
    }

    pub fn details(&self) -> Vec<String> {
        let mut out = vec![format!("f-vector: {}", self.f)];
        match &self.non_flag_witness {
            None => out.push("flag: yes".into()),
            Some(w) => out.push(format!("flag: no, missing face {}", braces(w))),
        }
        match &self.manifold {
            Some(v) => {
                let what = if self.dim == 2 { "closed surface" } else { "closed 3-manifold" };
                match &v.reason {
                    None => out.push(format!("{what}: yes")),
                    Some(r) => out.push(format!("{what}: no, {r}")),
                }
            }
            None => out.push(format!("manifold check: not available in dimension {}", self.dim)),
        }
        if let Some(o) = self.orientable {
            out.push(format!("orientable: {}", yes_no(o)));
        }
        if let Some(t) = self.surface {
            out.push(format!("type: {t}"));
        }
        out.push(format!("Betti over GF(2): {}", self.betti_gf2));
        out.push(format!("Betti over Q: {}", self.betti_rational));
        if let Some(g) = self.gamma {
            out.push(format!("γ₁={} γ₂={} g₂={} ḡ₂={}", g.gamma1, g.gamma2, g.g2, g.g2_bar));
        }
        if let Some(r) = self.conjecture {
            let verdict = if r.satisfied { "holds" } else { "VIOLATED" };
            out.push(format!("γ₂ ≥ 16β₁: {verdict} ({} ≥ {})", r.gamma2, 16 * r.beta1));
        }
        match &self.admissible {
            Some(edges) if edges.is_empty() => out.push("admissible edges: none".into()),
            Some(edges) => {
                let shown: Vec<String> = edges.iter().take(10).map(|(a, b)| format!("{{{a},{b}}}")).collect();
                let more = if edges.len() > 10 { format!(" and {} more", edges.len() - 10) } else { String::new() };
                out.push(format!("admissible edges: {}{more}", shown.join(" ")));
            }
            None => {}
        }
        out
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn braces(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}
