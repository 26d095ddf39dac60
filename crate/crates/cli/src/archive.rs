//! Archive directories: one `<digest>.txt` facet file and one `<digest>.json`
//! metadata sidecar per complex. An existing digest is never overwritten.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use flagtri::format::FacetFile;
use flagtri::iso::canonical_form;
use flagtri::topology::{betti_both, conjecture_check, gamma_numbers, is_closed_3_manifold, ConjectureReport};
use flagtri::{Complex, FlagComplex, GammaNumbers, MoveTrace};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchProvenance {
    pub objective: String,
    pub objective_value: i64,
    pub round: usize,
    pub rng_seed: u64,
    pub seed_digest: String,
    pub trace: MoveTrace,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Sidecar {
    pub digest: String,
    pub label: String,
    /// `construct <kind>` or `search`.
    pub source: String,
    pub dim: isize,
    pub f_vector: Vec<u64>,
    pub betti_rational: Vec<usize>,
    pub betti_gf2: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaNumbers>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchProvenance>,
}

impl Sidecar {
    pub fn describe(c: &FlagComplex, label: &str, source: &str) -> Self {
        let (gf2, rational) = betti_both(c);
        let dim = c.dim();
        let three = dim == 3 && is_closed_3_manifold(c).unwrap_or(false);
        Sidecar {
            digest: canonical_form(c).digest_hex(),
            label: label.to_owned(),
            source: source.to_owned(),
            dim,
            f_vector: c.f_vector().as_slice().to_vec(),
            betti_rational: rational.ranks,
            betti_gf2: gf2.ranks,
            gamma: (dim >= 0).then(|| gamma_numbers(c, (dim + 1) as u32).ok()).flatten(),
            conjecture: three.then(|| conjecture_check(c).ok()).flatten(),
            search: None,
        }
    }
}

/// Writes the entry unless its digest is already present. Returns whether it was new.
pub fn write_entry(dir: &Path, c: &FlagComplex, meta: &Sidecar) -> CliResult<bool> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir.display(), e))?;
    let facets = dir.join(format!("{}.txt", meta.digest));
    if facets.exists() {
        return Ok(false);
    }
    let text = FacetFile::from_complex(c, Some(&meta.label)).to_plain();
    fs::write(&facets, text).map_err(|e| CliError::io(facets.display(), e))?;
    let sidecar = dir.join(format!("{}.json", meta.digest));
    let json = serde_json::to_string_pretty(meta).expect("sidecar serializes");
    fs::write(&sidecar, json + "\n").map_err(|e| CliError::io(sidecar.display(), e))?;
    Ok(true)
}

/// All sidecars in `dir`, sorted by digest.
pub fn read_sidecars(dir: &Path) -> CliResult<Vec<Sidecar>> {
    let entries = fs::read_dir(dir).map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?;
    let mut out = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::io(dir.display(), e))?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let text = fs::read_to_string(&path).map_err(|e| CliError::io(path.display(), e))?;
        let meta: Sidecar = serde_json::from_str(&text)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        out.push(meta);
    }
    out.sort_by(|a, b| a.digest.cmp(&b.digest));
    Ok(out)
}
