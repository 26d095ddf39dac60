use crate::args::VerifyArgs;
use crate::commands::{display_name, load, Invariants};
use crate::error::{CliError, CliResult};

pub fn run(args: &VerifyArgs) -> CliResult {
    let (file, s) = load(&args.path)?;
    let inv = Invariants::of(&s);
    println!("{}", inv.summary());
    println!("name: {}", display_name(&file, &args.path));
    for line in inv.details() {
        println!("{line}");
    }

    let mut failed = Vec::new();
    if !inv.is_flag() {
        failed.push("not flag");
    }
    if inv.manifold.is_some() && !inv.is_manifold() {
        failed.push("not a closed manifold");
    }
    if args.require_minimum && inv.is_local_minimum() != Some(true) {
        failed.push("not a local minimum");
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Domain(format!("{}: {}", args.path.display(), failed.join(", "))))
    }
}
