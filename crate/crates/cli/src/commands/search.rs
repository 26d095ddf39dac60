use flagtri::search::{run_search_with_progress, RoundSummary, SearchConfig};
use flagtri::topology::conjecture_check;
use flagtri::{Complex, Objective};

use crate::archive::{write_entry, SearchProvenance, Sidecar};
use crate::args::{ObjectiveArg, SearchArgs};
use crate::commands::{display_name, load_flag};
use crate::error::{CliError, CliResult};

fn progress_line(s: &RoundSummary) -> String {
    match s.minimum {
        Some((f0, g2)) => format!(
            "round {}: blow-up f₀={}, minimum f₀={} γ₂={}, archive {}",
            s.round, s.blowup_f0, f0, g2, s.archive_size
        ),
        None => format!("round {}: aborted at the move cap, archive {}", s.round, s.archive_size),
    }
}

pub fn run(args: &SearchArgs) -> CliResult {
    if args.threads > 0 {
        // fails only if a pool exists already, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(args.threads).build_global();
    }
    let (file, seed) = load_flag(&args.path)?;
    let name = display_name(&file, &args.path);
    let label = args.label.clone().unwrap_or_else(|| name.clone());
    let objective = match args.objective {
        ObjectiveArg::Vertices => Objective::MinVertices,
        ObjectiveArg::Gamma2 => Objective::MinGamma2,
    };
    let blowup = args.blowup.unwrap_or(seed.vertex_count() + 4);
    let mut config = SearchConfig::new(objective, args.rounds as usize, blowup, args.seed);
    config.max_moves_per_round = args.max_moves;

    let quiet = args.quiet;
    let outcome = run_search_with_progress(&seed, &config, |s| {
        if !quiet {
            eprintln!("{}", progress_line(s));
        }
    })
    .map_err(|e| match e {
        flagtri::Error::InvalidInput(m) => CliError::Usage(m),
        other => CliError::Domain(format!("{}: {other}", args.path.display())),
    })?;
    let archive = &outcome.archive;

    println!("seed: {name}, f={}", seed.f_vector());
    println!(
        "objective: {objective}, rounds: {}, blow-up: {blowup}, rng seed: {}",
        config.rounds, config.rng_seed
    );
    if !outcome.aborted_rounds.is_empty() {
        println!("aborted rounds: {}", outcome.aborted_rounds.len());
    }
    match archive.best_value() {
        Some(v) => println!("best {objective}: {v}"),
        None => println!("best {objective}: none"),
    }
    println!("{:>8}  {:>6}", objective.to_string(), "minima");
    for (value, count) in archive.counts_by_value() {
        println!("{value:>8}  {count:>6}");
    }

    let three = seed.dim() == 3;
    let mut violations = 0;
    if three {
        println!("{:<16}  {:>4}  {:>4}  {:>3}  {:>6}  γ₂ ≥ 16β₁", "digest", "f0", "γ₂", "β₁", "16β₁");
        for e in archive.entries() {
            let r = conjecture_check(&e.complex)?;
            let verdict = if r.satisfied { "holds" } else { "VIOLATED" };
            println!(
                "{:<16}  {:>4}  {:>4}  {:>3}  {:>6}  {verdict}",
                &e.digest[..16],
                e.complex.vertex_count(),
                r.gamma2,
                r.beta1,
                16 * r.beta1
            );
            if !r.satisfied {
                violations += 1;
                eprintln!(
                    "RESEARCH FINDING: archived minimum {} has γ₂ = {} < 16·β₁ = {}",
                    e.digest,
                    r.gamma2,
                    16 * r.beta1
                );
            }
        }
    }

    if let Some(dir) = &args.archive_dir {
        let mut fresh = 0;
        for e in archive.entries() {
            let mut meta = Sidecar::describe(&e.complex, &label, "search");
            meta.search = Some(SearchProvenance {
                objective: objective.to_string(),
                objective_value: e.objective_value,
                round: e.round,
                rng_seed: config.rng_seed,
                seed_digest: outcome.seed_digest.clone(),
                trace: e.trace.clone(),
            });
            if write_entry(dir, &e.complex, &meta)? {
                fresh += 1;
            }
        }
        println!("archive: {} entries written to {}, {} already present", fresh, dir.display(), archive.len() - fresh);
    }
    if violations > 0 {
        println!("γ₂ ≥ 16β₁ violated by {violations} archived minima");
    }
    Ok(())
}
