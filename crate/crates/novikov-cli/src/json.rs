//! Serialized basis documents, schema `novikov-basis/1`.
//!
//! Serialization is byte-deterministic: struct fields emit in declaration
//! order and every polynomial or monomial is rendered in its canonical text
//! form, so identical inputs and flags produce identical files. A basis
//! document can be fed back to any command in place of a `.gdn` session.

use crate::error::CliError;
use crate::parse;
use crate::session::Session;
use novikov_core::{
    CappedCompletion, CompletionState, GeneratorSet, Provenance, RelationSet,
};
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const SCHEMA: &str = "novikov-basis/1";

#[derive(Serialize, Deserialize)]
pub struct BasisDoc {
    pub schema: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub generators: Vec<String>,
    /// "staged" or "capped".
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncated: Option<bool>,
    pub basis: Vec<BasisElement>,
}

#[derive(Serialize, Deserialize)]
pub struct BasisElement {
    pub poly: String,
    pub provenance: ProvenanceDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ProvenanceDoc {
    /// Input relation at `index` in the session file.
    Input { index: usize },
    /// Normal form of a composition discovered during completion; `left`,
    /// `right`, and `ambiguity` are leading monomials in canonical text.
    Composition {
        stage: u32,
        left: String,
        left_shift: u32,
        right: String,
        right_shift: u32,
        ambiguity: String,
    },
}

fn provenance_doc(p: &Provenance, gens: &GeneratorSet) -> ProvenanceDoc {
    match p {
        Provenance::Input { index } => ProvenanceDoc::Input { index: *index },
        Provenance::Composition {
            stage,
            left,
            left_shift,
            right,
            right_shift,
            ambiguity,
        } => ProvenanceDoc::Composition {
            stage: *stage,
            left: left.display(gens).to_string(),
            left_shift: *left_shift,
            right: right.display(gens).to_string(),
            right_shift: *right_shift,
            ambiguity: ambiguity.display(gens).to_string(),
        },
    }
}

pub fn staged_doc(name: Option<&str>, state: &CompletionState) -> BasisDoc {
    let gens = state.to_relation_set().gens().clone();
    let basis = state
        .basis()
        .iter()
        .enumerate()
        .map(|(i, p)| BasisElement {
            poly: p.display(&gens).to_string(),
            provenance: provenance_doc(state.provenance(i), &gens),
        })
        .collect();
    BasisDoc {
        schema: SCHEMA.to_string(),
        name: name.map(str::to_string),
        generators: gens.names().to_vec(),
        mode: "staged".to_string(),
        stage: Some(state.stage()),
        cap: None,
        truncated: None,
        basis,
    }
}

pub fn capped_doc(name: Option<&str>, done: &CappedCompletion) -> BasisDoc {
    let gens = done.basis.gens();
    let basis = done
        .basis
        .relations()
        .iter()
        .zip(&done.provenance)
        .map(|(p, prov)| BasisElement {
            poly: p.display(gens).to_string(),
            provenance: provenance_doc(prov, gens),
        })
        .collect();
    BasisDoc {
        schema: SCHEMA.to_string(),
        name: name.map(str::to_string),
        generators: gens.names().to_vec(),
        mode: "capped".to_string(),
        stage: None,
        cap: Some(done.report.cap),
        truncated: Some(done.report.truncated()),
        basis,
    }
}

pub fn render(doc: &BasisDoc) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("basis documents always serialize");
    s.push('\n');
    s
}

/// Reads a basis document back as a session: generators plus the basis
/// polynomials as relations.
pub fn load(path: &Path) -> Result<Session, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let doc: BasisDoc = serde_json::from_str(&text)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    if doc.schema != SCHEMA {
        return Err(CliError::Io(format!(
            "{}: unsupported schema {:?} (expected {:?})",
            path.display(),
            doc.schema,
            SCHEMA
        )));
    }
    let gens = GeneratorSet::new(doc.generators.iter().map(String::as_str))
        .map_err(|e| CliError::semantic(e.to_string()))?;
    let mut rels = Vec::with_capacity(doc.basis.len());
    for (i, el) in doc.basis.iter().enumerate() {
        let ast = parse::parse_expr(&el.poly)
            .map_err(|e| CliError::semantic(format!("basis entry {i}: {e}")))?;
        let p = parse::eval(&ast, &gens)
            .map_err(|e| CliError::semantic(format!("basis entry {i}: {e}")))?;
        rels.push(p);
    }
    let rels = RelationSet::new(gens, rels).map_err(|e| CliError::semantic(e.to_string()))?;
    Ok(Session {
        name: doc.name,
        rels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use novikov_core::complete_homogeneous;

    #[test]
    fn staged_doc_round_trips_through_text() {
        let gens = GeneratorSet::new(["a"]).unwrap();
        let ast = parse::parse_expr("a o a").unwrap();
        let rel = parse::eval(&ast, &gens).unwrap();
        let rels = RelationSet::new(gens, vec![rel]).unwrap();
        let state = complete_homogeneous(&rels, 6).unwrap();
        let doc = staged_doc(Some("circ"), &state);
        let text = render(&doc);
        assert_eq!(text, render(&serde_json::from_str(&text).unwrap()));

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("basis.json");
        std::fs::write(&path, &text).unwrap();
        let session = load(&path).unwrap();
        assert_eq!(session.name.as_deref(), Some("circ"));
        assert_eq!(session.rels.relations(), state.basis());
    }

    #[test]
    fn rejects_other_schemas() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("basis.json");
        std::fs::write(&path, "{\"schema\":\"other/9\",\"generators\":[],\"mode\":\"staged\",\"basis\":[]}").unwrap();
        let err = load(&path).unwrap_err();
        assert!(err.to_string().contains("unsupported schema"));
    }
}
