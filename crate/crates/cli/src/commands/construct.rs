use std::fs;
use std::io::Write;

use flagtri::constructors::{
    barycentric_subdivision, cycle, delta16, delta4, gamma_tight, octahedral_sphere, staircase_product, surface_min,
    Fixture,
};
use flagtri::format::FacetFile;
use flagtri::FlagComplex;

use crate::archive::{write_entry, Sidecar};
use crate::args::{ConstructArgs, FormatArg, Kind};
use crate::commands::{display_name, load, load_flag, Invariants};
use crate::error::{CliError, CliResult};

/// A staircase factor: `edge`, `cycleN`, `octN`, a fixture name, or a facet file.
fn factor(name: &str) -> CliResult<FlagComplex> {
    let number = |prefix: &str| name.strip_prefix(prefix).and_then(|n| n.parse::<usize>().ok());
    if name == "edge" {
        return Ok(FlagComplex::from_edges(2, [(0, 1)])?);
    }
    if let Some(n) = number("cycle") {
        return Ok(cycle(n)?);
    }
    if let Some(d) = number("oct") {
        if d == 0 {
            return Err(CliError::Usage("oct0 is empty".into()));
        }
        return Ok(octahedral_sphere(d).0);
    }
    if let Ok(f) = name.parse::<Fixture>() {
        return Ok(f.complex());
    }
    let path = std::path::Path::new(name);
    if path.exists() {
        return load_flag(path).map(|(_, c)| c);
    }
    Err(CliError::Usage(format!(
        "unknown factor {name:?}: expected edge, cycleN, octN, a fixture name or a facet file"
    )))
}

fn build(kind: &Kind) -> CliResult<(FlagComplex, String)> {
    Ok(match kind {
        Kind::Octahedral { d } => {
            if *d == 0 {
                return Err(CliError::Usage("d must be at least 1".into()));
            }
            (octahedral_sphere(*d).0, format!("octahedral sphere d={d}"))
        }
        Kind::Cycle { n } => (cycle(*n)?, format!("cycle n={n}")),
        Kind::Fixture { name } => {
            let f: Fixture = name.parse().map_err(|e: flagtri::Error| CliError::Usage(e.to_string()))?;
            (f.complex(), f.name().to_owned())
        }
        Kind::Surface { k, orientable } => {
            let label = match (k, orientable) {
                (1, true) => "T²".to_owned(),
                (1, false) => "ℝP²".to_owned(),
                (k, true) => format!("#{k} T²"),
                (k, false) => format!("#{k} ℝP²"),
            };
            (surface_min(*k, *orientable)?, label)
        }
        Kind::Delta4 => (delta4()?.complex, "delta4".into()),
        Kind::Delta16 => (delta16()?.complex, "delta16".into()),
        Kind::GammaTight { b } => (gamma_tight(*b)?, format!("gamma-tight b={b}")),
        Kind::Staircase { a, b } => (staircase_product(&factor(a)?, &factor(b)?)?, format!("{a} × {b}")),
        Kind::Barycentric { input } => {
            let (file, s) = load(input)?;
            (barycentric_subdivision(&s), format!("sd {}", display_name(&file, input)))
        }
    })
}

fn kind_name(kind: &Kind) -> &'static str {
    match kind {
        Kind::Octahedral { .. } => "octahedral",
        Kind::Cycle { .. } => "cycle",
        Kind::Fixture { .. } => "fixture",
        Kind::Surface { .. } => "surface",
        Kind::Delta4 => "delta4",
        Kind::Delta16 => "delta16",
        Kind::GammaTight { .. } => "gamma-tight",
        Kind::Staircase { .. } => "staircase",
        Kind::Barycentric { .. } => "barycentric",
    }
}

pub fn run(args: &ConstructArgs) -> CliResult {
    let (c, default_label) = build(&args.kind)?;
    let label = args.label.clone().unwrap_or(default_label);
    let file = FacetFile::from_complex(&c, Some(&label));
    let text = match args.format {
        FormatArg::Plain => file.to_plain(),
        FormatArg::Json => file.to_json(),
    };
    let inv = Invariants::of(&c.to_simplicial());
    let mut report = vec![inv.summary()];
    match &args.out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| CliError::io(path.display(), e))?;
            report.push(format!("wrote {}", path.display()));
        }
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::io("standard output", e))?;
        }
    }
    if let Some(dir) = &args.archive_dir {
        let meta = Sidecar::describe(&c, &label, &format!("construct {}", kind_name(&args.kind)));
        let fresh = write_entry(dir, &c, &meta)?;
        let note = if fresh { "archived as" } else { "already archived as" };
        report.push(format!("{note} {}", dir.join(format!("{}.txt", meta.digest)).display()));
    }
    // with the facets on standard output, the report goes to standard error
    for line in report {
        if args.out.is_some() {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
    Ok(())
}
