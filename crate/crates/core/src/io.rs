//! Input files: JSON text for relations, quivers and lattices.
//!
//! ```json
//! {"labels": ["a", "b"], "arrows": [[0, 1]]}
//! {"vertices": 3, "orientation": ["left", "left"], "relations": [[0, 1]]}
//! {"elements": 3, "covers": [[0, 1], [1, 2]]}
//! ```
//!
//! Relation arrows are off-diagonal; the diagonal is implicit. Quiver
//! relations list 0-based arrow indices, arrow `k` joining vertices `k + 1`
//! and `k + 2`.

use std::fmt;

use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::error::Error;
use crate::galois::BrickRelation;
use crate::lattice::FiniteLattice;
use crate::rep::{Orientation, QuiverPresentation};

#[derive(Debug)]
pub enum InputError {
    /// Malformed JSON or a field of the wrong shape.
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    /// Well-formed input describing an invalid object.
    Invalid(Error),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Syntax {
                line,
                column,
                message,
            } => write!(f, "{line}:{column}: {message}"),
            InputError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for InputError {}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        InputError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError::Invalid(e)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationFile {
    labels: Vec<String>,
    #[serde(default)]
    arrows: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverFile {
    vertices: usize,
    orientation: Vec<Orientation>,
    #[serde(default)]
    relations: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeFile {
    elements: usize,
    covers: Vec<(usize, usize)>,
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, InputError> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_relation(text: &str) -> Result<BrickRelation, InputError> {
    let f: RelationFile = parse(text)?;
    Ok(BrickRelation::new(f.labels, &f.arrows)?)
}

pub fn parse_quiver(text: &str) -> Result<QuiverPresentation, InputError> {
    let f: QuiverFile = parse(text)?;
    Ok(QuiverPresentation::new(
        f.vertices,
        f.orientation,
        &f.relations,
    )?)
}

pub fn parse_lattice(text: &str) -> Result<FiniteLattice, InputError> {
    let f: LatticeFile = parse(text)?;
    Ok(FiniteLattice::from_pairs(f.elements, &f.covers)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Relation,
    Quiver,
    Lattice,
}

/// Which of the three formats `text` is, judged by its keys.
pub fn detect_kind(text: &str) -> Result<InputKind, InputError> {
    let v: serde_json::Value = parse(text)?;
    let has = |k: &str| v.get(k).is_some();
    if has("vertices") {
        Ok(InputKind::Quiver)
    } else if has("labels") {
        Ok(InputKind::Relation)
    } else if has("elements") {
        Ok(InputKind::Lattice)
    } else {
        Err(InputError::Syntax {
            line: 1,
            column: 1,
            message: "expected a quiver, relation or lattice object".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_file() {
        let r =
            parse_relation(r#"{"labels": ["[10]", "[11]", "[01]"], "arrows": [[0, 1], [1, 2]]}"#)
                .unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.arrow(0, 1) && r.arrow(2, 2) && !r.arrow(0, 2));
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = parse_relation("{\n  \"labels\": [\"a\",\n  ]\n}").unwrap_err();
        match err {
            InputError::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("{other}"),
        }
        assert!(matches!(
            parse_quiver(r#"{"vertices": 2, "orientation": ["up"]}"#),
            Err(InputError::Syntax { .. })
        ));
        assert!(matches!(
            parse_relation(r#"{"labels": [], "extra": 1}"#),
            Err(InputError::Syntax { .. })
        ));
    }

    #[test]
    fn invalid_content() {
        assert!(matches!(
            parse_relation(r#"{"labels": ["a"], "arrows": [[0, 0]]}"#),
            Err(InputError::Invalid(_))
        ));
        assert!(matches!(
            parse_quiver(r#"{"vertices": 3, "orientation": ["left"]}"#),
            Err(InputError::Invalid(_))
        ));
        assert!(matches!(
            parse_lattice(r#"{"elements": 3, "covers": [[0, 1], [0, 2]]}"#),
            Err(InputError::Invalid(_))
        ));
    }

    #[test]
    fn quiver_and_lattice_files() {
        let q = parse_quiver(
            r#"{"vertices": 3, "orientation": ["left", "left"], "relations": [[0, 1]]}"#,
        )
        .unwrap();
        assert_eq!(q.relations().len(), 1);
        let l = parse_lattice(r#"{"elements": 3, "covers": [[0, 1], [1, 2]]}"#).unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(
            detect_kind(r#"{"elements": 1, "covers": []}"#).unwrap(),
            InputKind::Lattice
        );
        assert_eq!(
            detect_kind(r#"{"labels": []}"#).unwrap(),
            InputKind::Relation
        );
    }
}
