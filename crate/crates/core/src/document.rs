//! Line-oriented text format for labeled complexes.
//!
//! ```text
//! # comments run to the end of the line
//! name: path
//! vertices: a b c
//! facet: a b
//! facet: b c
//! ```
//!
//! `name:` and `vertices:` are optional. Without `vertices:` the ground set
//! is the union of the facet labels, sorted numerically when every label is
//! an integer and lexicographically otherwise. A bare `facet:` is the empty
//! face.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexDocument {
    pub name: String,
    /// Vertex labels; vertex `i` of the complex carries `labels[i]`.
    pub labels: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

fn parse_error<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        column,
        message: message.into(),
    })
}

/// Whitespace-separated tokens of `text` with their 1-based columns
/// (counted in characters) offset by `start`.
fn tokens(text: &str, start: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut begin: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in text.char_indices().enumerate() {
        if ch.is_whitespace() {
            if let Some((c, b)) = begin.take() {
                out.push((start + c, &text[b..byte]));
            }
        } else if begin.is_none() {
            begin = Some((col, byte));
        }
    }
    if let Some((c, b)) = begin {
        out.push((start + c, &text[b..]));
    }
    out
}

fn default_order(labels: &mut [String]) {
    let numeric: Option<Vec<i128>> = labels.iter().map(|l| l.parse().ok()).collect();
    match numeric {
        Some(_) => labels.sort_by_key(|l| l.parse::<i128>().unwrap()),
        None => labels.sort(),
    }
}

impl ComplexDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut name: Option<String> = None;
        let mut declared: Option<Vec<String>> = None;
        let mut facets: Vec<(usize, Vec<(usize, String)>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            let line = match line.find('#') {
                Some(p) => &line[..p],
                None => line,
            };
            if line.trim().is_empty() {
                continue;
            }
            let Some(colon) = line.find(':') else {
                let col = line.chars().take_while(|c| c.is_whitespace()).count() + 1;
                return parse_error(line_no, col, "expected `key: value`");
            };
            let key = line[..colon].trim();
            let value = &line[colon + 1..];
            let value_col = line[..colon + 1].chars().count() + 1;
            let key_col = line.chars().take_while(|c| c.is_whitespace()).count() + 1;
            match key {
                "name" => {
                    if name.is_some() {
                        return parse_error(line_no, key_col, "duplicate `name:` line");
                    }
                    name = Some(value.trim().to_string());
                }
                "vertices" => {
                    if declared.is_some() {
                        return parse_error(line_no, key_col, "duplicate `vertices:` line");
                    }
                    let mut seen = HashSet::new();
                    let mut labels = Vec::new();
                    for (col, tok) in tokens(value, value_col) {
                        if !seen.insert(tok) {
                            return parse_error(line_no, col, format!("duplicate label `{tok}`"));
                        }
                        labels.push(tok.to_string());
                    }
                    declared = Some(labels);
                }
                "facet" => {
                    let toks = tokens(value, value_col);
                    let mut seen = HashSet::new();
                    for &(col, tok) in &toks {
                        if !seen.insert(tok) {
                            return parse_error(
                                line_no,
                                col,
                                format!("label `{tok}` repeated in facet"),
                            );
                        }
                    }
                    facets.push((
                        line_no,
                        toks.into_iter().map(|(c, t)| (c, t.to_string())).collect(),
                    ));
                }
                other => return parse_error(line_no, key_col, format!("unknown key `{other}`")),
            }
        }
        let labels = match declared {
            Some(labels) => {
                let known: HashSet<&str> = labels.iter().map(String::as_str).collect();
                for (line_no, facet) in &facets {
                    for (col, tok) in facet {
                        if !known.contains(tok.as_str()) {
                            return parse_error(*line_no, *col, format!("unknown label `{tok}`"));
                        }
                    }
                }
                labels
            }
            None => {
                let mut all: Vec<String> = facets
                    .iter()
                    .flat_map(|(_, f)| f.iter().map(|(_, t)| t.clone()))
                    .collect::<HashSet<_>>()
                    .into_iter()
                    .collect();
                default_order(&mut all);
                all
            }
        };
        if labels.len() > MAX_VERTICES {
            return parse_error(
                1,
                1,
                format!(
                    "{} vertices exceed the limit of {MAX_VERTICES}",
                    labels.len()
                ),
            );
        }
        Ok(ComplexDocument {
            name: name.unwrap_or_default(),
            labels,
            facets: facets
                .into_iter()
                .map(|(_, f)| f.into_iter().map(|(_, t)| t).collect())
                .collect(),
        })
    }

    /// Canonical text: optional name, the vertices line, one facet per line.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            writeln!(out, "name: {}", self.name).unwrap();
        }
        writeln!(out, "vertices: {}", self.labels.join(" ")).unwrap();
        for f in &self.facets {
            if f.is_empty() {
                out.push_str("facet:\n");
            } else {
                writeln!(out, "facet: {}", f.join(" ")).unwrap();
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Vertex set named by `labels`.
    pub fn vertex_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::Domain(format!("unknown label `{}`", l.as_ref())))
            })
            .collect()
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let index: HashMap<&str, usize> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut faces = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            let mut s = VertexSet::EMPTY;
            for l in f {
                match index.get(l.as_str()) {
                    Some(&v) => s.insert(v),
                    None => return Err(Error::Domain(format!("unknown label `{l}`"))),
                }
            }
            faces.push(s);
        }
        SimplicialComplex::new(self.n(), faces)
    }

    /// Canonical document of `cx`; labels default to `0..n`.
    pub fn from_complex(
        name: &str,
        labels: Option<Vec<String>>,
        cx: &SimplicialComplex,
    ) -> Result<Self> {
        let labels = labels.unwrap_or_else(|| (0..cx.n()).map(|v| v.to_string()).collect());
        if labels.len() != cx.n() {
            return Err(Error::Domain(format!(
                "{} labels for a complex on {} vertices",
                labels.len(),
                cx.n()
            )));
        }
        let facets = cx
            .facets()
            .iter()
            .map(|f| f.iter().map(|v| labels[v].clone()).collect())
            .collect();
        Ok(ComplexDocument {
            name: name.to_string(),
            labels,
            facets,
        })
    }
}
