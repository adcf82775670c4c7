//! Builtin codes and graph families, and reading inputs from disk.
//!
//! A graph is named by a short word sequence such as `cube 6`,
//! `halved coset golay24` or `component distance-k 4 cube 6`; a code by
//! `zero 5`, `repetition 7`, `golay23`, `golay24`, `golay23-even` or a path
//! to a code file.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use rectagraph_core::gf2::{golay23, golay23_even, golay24, LinearCode};
use rectagraph_core::graph::{
    bipartite_double, complement, complete, complete_multipartite, connected_components,
    coset_graph, distance_k_graph, folded_cube, halved_graphs, induced_subgraph, petersen,
    sp6_minus_elliptic_quadric, sp6_minus_hyperplane, symplectic_graph, triangular, Graph,
};

use crate::error::{Error, Result};
use crate::formats::{parse_code, parse_edge_list, FormatError};

/// Largest explicit graph built from a family description.
pub const MAX_EXPLICIT_VERTICES: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeSpec {
    Zero(usize),
    Repetition(usize),
    Golay23,
    Golay24,
    Golay23Even,
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Cube(usize),
    FoldedCube(usize),
    Triangular(usize),
    Complete(usize),
    Multipartite {
        parts: usize,
        size: usize,
    },
    Symplectic(usize),
    Sp6MinusQuadric,
    Sp6MinusHyperplane,
    Petersen,
    Coset(CodeSpec),
    Halved(Box<GraphSpec>),
    Double(Box<GraphSpec>),
    DistanceK(usize, Box<GraphSpec>),
    /// The connected component of vertex 0.
    Component(Box<GraphSpec>),
    Complement(Box<GraphSpec>),
    File(PathBuf),
}

pub const FAMILY_NAMES: &[&str] = &[
    "cube",
    "folded-cube",
    "triangular",
    "complete",
    "multipartite",
    "symplectic",
    "sp6-minus-quadric",
    "sp6-minus-hyperplane",
    "petersen",
    "coset",
    "halved",
    "double",
    "distance-k",
    "component",
    "complement",
    "file",
];

struct Tokens<'a> {
    words: &'a [String],
    at: usize,
}

impl<'a> Tokens<'a> {
    fn next(&mut self, what: &str) -> Result<&'a str> {
        let w = self
            .words
            .get(self.at)
            .ok_or_else(|| Error::usage(format!("missing {what}")))?;
        self.at += 1;
        Ok(w)
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let w = self.next(what)?;
        w.parse()
            .map_err(|_| Error::usage(format!("{what} must be a non-negative integer, got `{w}`")))
    }

    fn finish(&self) -> Result<()> {
        match self.words.get(self.at) {
            None => Ok(()),
            Some(w) => Err(Error::usage(format!("unexpected `{w}`"))),
        }
    }
}

impl CodeSpec {
    pub fn parse(words: &[String]) -> Result<Self> {
        let mut t = Tokens { words, at: 0 };
        let spec = Self::parse_from(&mut t)?;
        t.finish()?;
        Ok(spec)
    }

    fn parse_from(t: &mut Tokens) -> Result<Self> {
        Ok(match t.next("code")? {
            "zero" => CodeSpec::Zero(t.number("length")?),
            "repetition" => CodeSpec::Repetition(t.number("length")?),
            "golay23" => CodeSpec::Golay23,
            "golay24" => CodeSpec::Golay24,
            "golay23-even" => CodeSpec::Golay23Even,
            path => CodeSpec::File(PathBuf::from(path)),
        })
    }

    pub fn load(&self, inputs: &mut Inputs) -> Result<LinearCode> {
        Ok(match self {
            CodeSpec::Zero(n) => LinearCode::zero_code(*n)?,
            CodeSpec::Repetition(n) => LinearCode::repetition_code(*n)?,
            CodeSpec::Golay23 => golay23(),
            CodeSpec::Golay24 => golay24(),
            CodeSpec::Golay23Even => golay23_even(),
            CodeSpec::File(path) => {
                let text = inputs.read(path)?;
                parse_code(&text).map_err(|e| parse_error(path, e))?
            }
        })
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeSpec::Zero(n) => write!(f, "zero {n}"),
            CodeSpec::Repetition(n) => write!(f, "repetition {n}"),
            CodeSpec::Golay23 => f.write_str("golay23"),
            CodeSpec::Golay24 => f.write_str("golay24"),
            CodeSpec::Golay23Even => f.write_str("golay23-even"),
            CodeSpec::File(p) => write!(f, "{}", p.display()),
        }
    }
}

/// A built graph and, for coset graphs and their halves, the code it came
/// from; affine groups need the code.
#[derive(Clone, Debug)]
pub struct BuiltGraph {
    pub graph: Graph,
    pub origin: Option<CosetOrigin>,
}

/// The graph is `Γ(code)`, or with `even` one half of it.
#[derive(Clone, Debug)]
pub struct CosetOrigin {
    pub code: LinearCode,
    pub even: bool,
}

impl GraphSpec {
    pub fn parse(words: &[String]) -> Result<Self> {
        let mut t = Tokens { words, at: 0 };
        let spec = Self::parse_from(&mut t)?;
        t.finish()?;
        Ok(spec)
    }

    fn parse_from(t: &mut Tokens) -> Result<Self> {
        let inner = |t: &mut Tokens| Self::parse_from(t).map(Box::new);
        Ok(match t.next("family")? {
            "cube" => GraphSpec::Cube(t.number("dimension")?),
            "folded-cube" => GraphSpec::FoldedCube(t.number("dimension")?),
            "triangular" => GraphSpec::Triangular(t.number("n")?),
            "complete" => GraphSpec::Complete(t.number("n")?),
            "multipartite" => GraphSpec::Multipartite {
                parts: t.number("number of parts")?,
                size: t.number("part size")?,
            },
            "symplectic" => GraphSpec::Symplectic(t.number("dimension")?),
            "sp6-minus-quadric" => GraphSpec::Sp6MinusQuadric,
            "sp6-minus-hyperplane" => GraphSpec::Sp6MinusHyperplane,
            "petersen" => GraphSpec::Petersen,
            "coset" => GraphSpec::Coset(CodeSpec::parse_from(t)?),
            "halved" => GraphSpec::Halved(inner(t)?),
            "double" => GraphSpec::Double(inner(t)?),
            "distance-k" => {
                let k = t.number("distance")?;
                GraphSpec::DistanceK(k, inner(t)?)
            }
            "component" => GraphSpec::Component(inner(t)?),
            "complement" => GraphSpec::Complement(inner(t)?),
            "file" => GraphSpec::File(PathBuf::from(t.next("path")?)),
            other => {
                return Err(Error::usage(format!(
                    "unknown family `{other}`; expected one of {}",
                    FAMILY_NAMES.join(", ")
                )))
            }
        })
    }

    pub fn build(&self, inputs: &mut Inputs) -> Result<BuiltGraph> {
        let plain = |graph: Graph| BuiltGraph {
            graph,
            origin: None,
        };
        let coset = |code: LinearCode| -> Result<BuiltGraph> {
            Ok(BuiltGraph {
                graph: coset_graph(&code)?,
                origin: Some(CosetOrigin { code, even: false }),
            })
        };
        Ok(match self {
            GraphSpec::Cube(n) => coset(LinearCode::zero_code(*n)?)?,
            GraphSpec::FoldedCube(n) => {
                let code = LinearCode::repetition_code(*n)?;
                BuiltGraph {
                    graph: folded_cube(*n)?,
                    origin: Some(CosetOrigin { code, even: false }),
                }
            }
            GraphSpec::Triangular(n) => plain(triangular(*n)?),
            GraphSpec::Complete(n) => plain(complete(*n)?),
            GraphSpec::Multipartite { parts, size } => {
                check_explicit(parts.saturating_mul(*size))?;
                plain(complete_multipartite(*parts, *size)?)
            }
            GraphSpec::Symplectic(m) => plain(symplectic_graph(*m)?),
            GraphSpec::Sp6MinusQuadric => plain(sp6_minus_elliptic_quadric()),
            GraphSpec::Sp6MinusHyperplane => plain(sp6_minus_hyperplane()),
            GraphSpec::Petersen => plain(petersen()),
            GraphSpec::Coset(c) => coset(c.load(inputs)?)?,
            GraphSpec::Halved(inner) => {
                let built = inner.build(inputs)?;
                let half = halved_graphs(&built.graph)?.swap_remove(0);
                // the half containing 0 of an even coset graph is indexed
                // like the even cosets
                let origin = built
                    .origin
                    .filter(|o| !o.even && o.code.is_even() && half.is_cayley())
                    .map(|o| CosetOrigin {
                        code: o.code,
                        even: true,
                    });
                BuiltGraph {
                    graph: half,
                    origin,
                }
            }
            GraphSpec::Double(inner) => plain(bipartite_double(&inner.build(inputs)?.graph)?),
            GraphSpec::DistanceK(k, inner) => {
                let g = inner.build(inputs)?.graph;
                if !g.is_cayley() {
                    check_explicit(g.vertex_count())?;
                }
                plain(distance_k_graph(&g, *k)?)
            }
            GraphSpec::Component(inner) => {
                let built = inner.build(inputs)?;
                let g = &built.graph;
                if g.vertex_count() > MAX_EXPLICIT_VERTICES {
                    return Err(rectagraph_core::Error::TooLarge {
                        size: g.vertex_count(),
                        max: MAX_EXPLICIT_VERTICES,
                    }
                    .into());
                }
                let first = connected_components(g).swap_remove(0);
                if first.len() == g.vertex_count() {
                    built
                } else {
                    plain(induced_subgraph(g, &first)?.graph)
                }
            }
            GraphSpec::Complement(inner) => plain(complement(
                &inner.build(inputs)?.graph,
                MAX_EXPLICIT_VERTICES,
            )?),
            GraphSpec::File(path) => {
                let text = inputs.read(path)?;
                plain(parse_edge_list(&text).map_err(|e| parse_error(path, e))?)
            }
        })
    }
}

fn check_explicit(n: usize) -> Result<()> {
    if n > MAX_EXPLICIT_VERTICES {
        return Err(rectagraph_core::Error::TooLarge {
            size: n,
            max: MAX_EXPLICIT_VERTICES,
        }
        .into());
    }
    Ok(())
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Cube(n) => write!(f, "cube {n}"),
            GraphSpec::FoldedCube(n) => write!(f, "folded-cube {n}"),
            GraphSpec::Triangular(n) => write!(f, "triangular {n}"),
            GraphSpec::Complete(n) => write!(f, "complete {n}"),
            GraphSpec::Multipartite { parts, size } => write!(f, "multipartite {parts} {size}"),
            GraphSpec::Symplectic(m) => write!(f, "symplectic {m}"),
            GraphSpec::Sp6MinusQuadric => f.write_str("sp6-minus-quadric"),
            GraphSpec::Sp6MinusHyperplane => f.write_str("sp6-minus-hyperplane"),
            GraphSpec::Petersen => f.write_str("petersen"),
            GraphSpec::Coset(c) => write!(f, "coset {c}"),
            GraphSpec::Halved(g) => write!(f, "halved {g}"),
            GraphSpec::Double(g) => write!(f, "double {g}"),
            GraphSpec::DistanceK(k, g) => write!(f, "distance-k {k} {g}"),
            GraphSpec::Component(g) => write!(f, "component {g}"),
            GraphSpec::Complement(g) => write!(f, "complement {g}"),
            GraphSpec::File(p) => write!(f, "file {}", p.display()),
        }
    }
}

pub(crate) fn parse_error(path: &Path, e: FormatError) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line: e.line,
        message: e.message,
    }
}

/// An input file and the SHA-256 of its contents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub path: String,
    pub sha256: String,
}

/// Reads input files, remembering a fingerprint of each.
#[derive(Debug, Default)]
pub struct Inputs {
    files: Vec<Fingerprint>,
}

impl Inputs {
    pub fn read(&mut self, path: &Path) -> Result<String> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let sha256 = Sha256::digest(text.as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        let fp = Fingerprint {
            path: path.display().to_string(),
            sha256,
        };
        if !self.files.contains(&fp) {
            self.files.push(fp);
        }
        Ok(text)
    }

    pub fn fingerprints(&self) -> &[Fingerprint] {
        &self.files
    }

    pub fn into_fingerprints(self) -> Vec<Fingerprint> {
        self.files
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn nested_specs_parse_and_print() {
        for s in [
            "cube 6",
            "halved coset golay24",
            "component distance-k 4 cube 6",
            "multipartite 4 2",
            "coset repetition 7",
            "double coset golay23",
        ] {
            assert_eq!(GraphSpec::parse(&words(s)).unwrap().to_string(), s);
        }
        assert!(GraphSpec::parse(&words("cube")).is_err());
        assert!(GraphSpec::parse(&words("cube 3 4")).is_err());
        assert!(GraphSpec::parse(&words("hexagon 3")).is_err());
    }

    #[test]
    fn halved_even_coset_graph_keeps_its_code() {
        let mut inputs = Inputs::default();
        let b = GraphSpec::parse(&words("halved coset golay24"))
            .unwrap()
            .build(&mut inputs)
            .unwrap();
        assert_eq!(b.graph.vertex_count(), 2048);
        assert_eq!(b.graph.regular_degree(), Some(276));
        assert!(b.origin.unwrap().even);
        let b = GraphSpec::parse(&words("halved coset golay23"))
            .unwrap()
            .build(&mut inputs)
            .unwrap();
        assert!(b.origin.is_none());
    }

    #[test]
    fn component_of_distance_four_graph() {
        let mut inputs = Inputs::default();
        let b = GraphSpec::parse(&words("component distance-k 4 cube 6"))
            .unwrap()
            .build(&mut inputs)
            .unwrap();
        assert_eq!(b.graph.vertex_count(), 32);
    }
}
