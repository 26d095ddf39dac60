use std::collections::BTreeMap;
use std::io::{self, Write};

use crate::archive::{read_sidecars, Sidecar};
use crate::args::ReportArgs;
use crate::error::{CliError, CliResult};

const HEADER: [&str; 7] = ["label", "dim", "beta1", "min_gamma2", "min_f0", "entries", "conjecture_holds"];

struct Row {
    label: String,
    dim: isize,
    beta1: usize,
    min_gamma2: Option<i64>,
    min_f0: u64,
    entries: usize,
    conjecture: Option<bool>,
}

impl Row {
    fn cells(&self) -> [String; 7] {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        [
            self.label.clone(),
            self.dim.to_string(),
            self.beta1.to_string(),
            opt(self.min_gamma2.map(|g| g.to_string())),
            self.min_f0.to_string(),
            self.entries.to_string(),
            opt(self.conjecture.map(|c| if c { "yes" } else { "no" }.to_string())),
        ]
    }
}

fn rows(sidecars: &[Sidecar]) -> Vec<Row> {
    let mut groups: BTreeMap<(String, isize, usize), Vec<&Sidecar>> = BTreeMap::new();
    for s in sidecars {
        let beta1 = s.betti_rational.get(1).copied().unwrap_or(0);
        groups.entry((s.label.clone(), s.dim, beta1)).or_default().push(s);
    }
    groups
        .into_iter()
        .map(|((label, dim, beta1), members)| Row {
            label,
            dim,
            beta1,
            min_gamma2: members.iter().filter_map(|s| s.gamma.as_ref().map(|g| g.gamma2)).min(),
            min_f0: members.iter().map(|s| s.f_vector.get(1).copied().unwrap_or(0)).min().unwrap_or(0),
            entries: members.len(),
            conjecture: members
                .iter()
                .filter_map(|s| s.conjecture.as_ref().map(|c| c.satisfied))
                .reduce(|a, b| a && b),
        })
        .collect()
}

fn write_plain(out: &mut impl Write, rows: &[Row]) -> io::Result<()> {
    let cells: Vec<[String; 7]> = rows.iter().map(Row::cells).collect();
    let mut width = HEADER.map(|h| h.chars().count());
    for r in &cells {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |out: &mut dyn Write, r: &[String]| -> io::Result<()> {
        let mut s = String::new();
        for (i, (c, w)) in r.iter().zip(width).enumerate() {
            let pad = w - c.chars().count();
            if i == 0 {
                s.push_str(c);
                s.push_str(&" ".repeat(pad));
            } else {
                s.push_str("  ");
                s.push_str(&" ".repeat(pad));
                s.push_str(c);
            }
        }
        writeln!(out, "{}", s.trim_end())
    };
    line(out, &HEADER.map(String::from))?;
    for r in &cells {
        line(out, r)?;
    }
    Ok(())
}

fn write_csv(out: impl Write, rows: &[Row]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        w.write_record(r.cells())?;
    }
    w.flush()?;
    Ok(())
}

pub fn run(args: &ReportArgs) -> CliResult {
    let sidecars = read_sidecars(&args.dir)?;
    if sidecars.is_empty() {
        return Err(CliError::Usage(format!("{}: no archive entries", args.dir.display())));
    }
    let rows = rows(&sidecars);
    let stdout = io::stdout();
    if args.csv {
        write_csv(stdout.lock(), &rows).map_err(|e| CliError::Domain(format!("writing csv: {e}")))?;
    } else {
        write_plain(&mut stdout.lock(), &rows).map_err(|e| CliError::io("stdout", e))?;
    }
    Ok(())
}
