//! `.gdn` session files: an ordered generator declaration plus relations.
//!
//! ```text
//! # comments run to end of line
//! name: four-letter multiplication table
//! gens: e1 < e2 < e3 < e4
//! expect: gdn
//! e2[0]*e1[-1] = e3[-1]
//! e2 o e2
//! ```
//!
//! The `gens:` line is mandatory and fixes the variable well-order (later
//! names are larger). Relations are one per line, either an expression or
//! `lhs = rhs` meaning `lhs - rhs`. Optional `expect:` lines state
//! `dx-homogeneous`, `weight-homogeneous`, or `gdn` (every relation of
//! weight -1) and fail the load when violated.

use crate::error::CliError;
use crate::parse::{eval, parse_relation, reserved};
use novikov_core::{GeneratorSet, Polynomial, RelationSet};
use std::path::Path;

#[derive(Debug)]
pub struct Session {
    pub name: Option<String>,
    pub rels: RelationSet,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn load(path: &Path) -> Result<Session, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let mut name = None;
    let mut expectations: Vec<(usize, String)> = Vec::new();
    let mut gens: Option<GeneratorSet> = None;
    let mut rels: Vec<Polynomial> = Vec::new();
    let mut rel_lines: Vec<usize> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
            continue;
        }
        if let Some(rest) = line.strip_prefix("expect:") {
            expectations.push((lineno, rest.trim().to_string()));
            continue;
        }
        if let Some(rest) = line.strip_prefix("gens:") {
            if gens.is_some() {
                return Err(CliError::parse(lineno, 1, "duplicate gens: line"));
            }
            let names: Vec<&str> = rest.split('<').map(str::trim).collect();
            if names.iter().any(|n| n.is_empty()) {
                return Err(CliError::parse(
                    lineno,
                    1,
                    "gens: expects names separated by `<`",
                ));
            }
            if let Some(bad) = names.iter().find(|n| reserved(n)) {
                return Err(CliError::parse(
                    lineno,
                    1,
                    format!("`{bad}` is a reserved word and cannot be a generator"),
                ));
            }
            gens = Some(GeneratorSet::new(names).map_err(|e| {
                CliError::parse(lineno, 1, e.to_string())
            })?);
            continue;
        }
        // anything else is a relation line
        let Some(gens) = gens.as_ref() else {
            return Err(CliError::parse(
                lineno,
                1,
                "relations must come after the gens: line",
            ));
        };
        let ast = parse_relation(line, lineno as u32)?;
        let poly = eval(&ast, gens)?;
        if poly.is_zero() {
            return Err(CliError::semantic(format!(
                "{}:{lineno}: relation is identically zero",
                path.display()
            )));
        }
        rels.push(poly);
        rel_lines.push(lineno);
    }

    let Some(gens) = gens else {
        return Err(CliError::parse(1, 1, "missing gens: line"));
    };
    let rels = RelationSet::new(gens, rels).map_err(|e| CliError::semantic(e.to_string()))?;

    for (lineno, what) in &expectations {
        let ok = match what.as_str() {
            "dx-homogeneous" => rels.is_dx_homogeneous(),
            "weight-homogeneous" => rels.is_weight_homogeneous(),
            "gdn" => rels.is_gdn(),
            other => {
                return Err(CliError::parse(
                    *lineno,
                    1,
                    format!(
                        "unknown expectation `{other}` (want dx-homogeneous, \
                         weight-homogeneous, or gdn)"
                    ),
                ))
            }
        };
        if !ok {
            return Err(CliError::semantic(format!(
                "{}:{lineno}: expectation `{what}` does not hold for these relations",
                path.display()
            )));
        }
    }

    Ok(Session { name, rels })
}
