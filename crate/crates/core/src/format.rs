//! Facet files.
//!
//! Plain format: one facet per line, whitespace-separated positive integer
//! labels, `#` starts a comment. A comment of the form `# name: …` names the
//! complex. JSON format: `{"name": "…", "facets": [[1, 2, 3], …]}`.
//!
//! Labels in files are 1-based; writers emit vertex `v` as label `v + 1`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Complex, SimplicialComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FacetFormat {
    Plain,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub facets: Vec<Vec<u64>>,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("no facets found")]
    Empty,
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl FacetFile {
    pub fn to_complex(&self) -> crate::Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.facets.iter().cloned())
    }

    pub fn from_complex<C: Complex + ?Sized>(c: &C, name: Option<&str>) -> Self {
        FacetFile {
            name: name.map(str::to_owned),
            facets: c
                .facets()
                .iter()
                .map(|f| f.iter().map(|&v| v as u64 + 1).collect())
                .collect(),
        }
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("# name: {name}\n"));
        }
        for f in &self.facets {
            let parts: Vec<String> = f.iter().map(u64::to_string).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("facet files serialize") + "\n"
    }

    pub fn render(&self, format: FacetFormat) -> String {
        match format {
            FacetFormat::Plain => self.to_plain(),
            FacetFormat::Json => self.to_json(),
        }
    }
}

fn check_facet(facet: &[u64], line: usize) -> Result<(), ParseError> {
    let err = |message: String| Err(ParseError::Line { line, message });
    if facet.is_empty() {
        return err("empty facet".into());
    }
    if let Some(&z) = facet.iter().find(|&&l| l == 0) {
        return err(format!("label {z} is not positive"));
    }
    let mut sorted = facet.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return err(format!("duplicate vertex {} in facet", w[0]));
    }
    Ok(())
}

pub fn parse_plain(text: &str) -> Result<FacetFile, ParseError> {
    let mut name = None;
    let mut facets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(n) = comment.and_then(|c| c.trim().strip_prefix("name:")) {
            name = Some(n.trim().to_owned());
        }
        if body.trim().is_empty() {
            continue;
        }
        let facet = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>().map_err(|_| ParseError::Line {
                    line,
                    message: format!("invalid vertex label {tok:?}"),
                })
            })
            .collect::<Result<Vec<u64>, _>>()?;
        check_facet(&facet, line)?;
        facets.push(facet);
    }
    if facets.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(FacetFile { name, facets })
}

pub fn parse_json(text: &str) -> Result<FacetFile, ParseError> {
    let file: FacetFile = serde_json::from_str(text).map_err(|e| ParseError::Line {
        line: e.line(),
        message: e.to_string(),
    })?;
    if file.facets.is_empty() {
        return Err(ParseError::Empty);
    }
    // JSON facets are located by the line their opening bracket sits on.
    let facet_lines = json_facet_lines(text);
    for (i, f) in file.facets.iter().enumerate() {
        check_facet(f, facet_lines.get(i).copied().unwrap_or(1))?;
    }
    Ok(file)
}

/// Line number of each inner `[` of the `facets` array, by a bracket-depth scan.
fn json_facet_lines(text: &str) -> Vec<usize> {
    let Some(start) = text.find("\"facets\"") else {
        return Vec::new();
    };
    let mut line = 1 + text[..start].matches('\n').count();
    let mut depth = 0;
    let mut out = Vec::new();
    for ch in text[start..].chars() {
        match ch {
            '\n' => line += 1,
            '[' => {
                depth += 1;
                if depth == 2 {
                    out.push(line);
                }
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    break;
                }
            }
            _ => {}
        }
    }
    out
}

pub fn detect_format(text: &str) -> FacetFormat {
    if text.trim_start().starts_with('{') {
        FacetFormat::Json
    } else {
        FacetFormat::Plain
    }
}

pub fn parse(text: &str) -> Result<FacetFile, ParseError> {
    match detect_format(text) {
        FacetFormat::Plain => parse_plain(text),
        FacetFormat::Json => parse_json(text),
    }
}

pub fn read_file(path: &Path) -> Result<FacetFile, ParseError> {
    parse(&std::fs::read_to_string(path)?)
}
