//! Quiver document ingestion: a line-oriented plain-text format with
//! `vertices:` and `arrows:` blocks, or an equivalent JSON object.

use cluscat::{Error, Quiver};
use serde::Deserialize;
use std::collections::BTreeMap;

/// A quiver as written in an input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverDocument {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct JsonDoc {
    vertices: Vec<String>,
    arrows: Vec<(String, String)>,
}

impl QuiverDocument {
    /// Parse either format; JSON is detected by a leading `{`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        if text.trim_start().starts_with('{') {
            let doc: JsonDoc = serde_json::from_str(text)
                .map_err(|e| Error::BadQuiver(format!("invalid JSON document: {e}")))?;
            return Ok(QuiverDocument { vertices: doc.vertices, arrows: doc.arrows });
        }
        #[derive(PartialEq)]
        enum Block {
            None,
            Vertices,
            Arrows,
        }
        let mut block = Block::None;
        let mut vertices = Vec::new();
        let mut arrows = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match line {
                "vertices:" => block = Block::Vertices,
                "arrows:" => block = Block::Arrows,
                _ => match block {
                    Block::None => {
                        return Err(Error::BadQuiver(format!(
                            "line {}: expected a `vertices:` or `arrows:` block first",
                            ln + 1
                        )))
                    }
                    Block::Vertices => vertices.push(line.to_string()),
                    Block::Arrows => {
                        let Some((src, dst)) = line.split_once("->") else {
                            return Err(Error::BadQuiver(format!(
                                "line {}: expected `src -> dst`",
                                ln + 1
                            )));
                        };
                        arrows.push((src.trim().to_string(), dst.trim().to_string()));
                    }
                },
            }
        }
        Ok(QuiverDocument { vertices, arrows })
    }

    /// Validate labels and build the quiver.
    pub fn to_quiver(&self) -> Result<Quiver, Error> {
        let index: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        if index.len() != self.vertices.len() {
            return Err(Error::BadQuiver("duplicate vertex label".into()));
        }
        let mut arrows: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (src, dst) in &self.arrows {
            let &i = index
                .get(src.as_str())
                .ok_or_else(|| Error::BadQuiver(format!("unknown arrow source {src:?}")))?;
            let &j = index
                .get(dst.as_str())
                .ok_or_else(|| Error::BadQuiver(format!("unknown arrow target {dst:?}")))?;
            *arrows.entry((i, j)).or_insert(0) += 1;
        }
        Quiver::new(self.vertices.clone(), arrows)
    }
}
