//! Plain-text formats for graphs, codes and permutation generators.
//!
//! * Edge list: a header `N M`, then `M` lines `u v` with `0 <= u, v < N`.
//! * Code: a header `n r`, then `r` rows of `n` characters from `{0,1}`.
//! * Generators: a header `degree count`, then `count` lines of `degree`
//!   1-indexed images.
//!
//! Blank lines and lines starting with `#` are skipped everywhere.

use std::fmt::Write as _;
use std::io::{self, Write};

use rectagraph_core::gf2::{coord_bit, BitVector, LinearCode};
use rectagraph_core::graph::Graph;
use rectagraph_core::perm::Permutation;

/// A malformed line, numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        FormatError {
            line,
            message: message.into(),
        }
    }
}

type Parsed<T> = std::result::Result<T, FormatError>;

/// Lines with content, paired with their line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, s: &str, expect: usize) -> Parsed<Vec<usize>> {
    let fields: Vec<&str> = s.split_whitespace().collect();
    if fields.len() != expect {
        return Err(FormatError::new(
            line,
            format!("expected {expect} fields, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| FormatError::new(line, format!("`{f}` is not a non-negative integer")))
        })
        .collect()
}

fn header(lines: &mut impl Iterator<Item = (usize, impl AsRef<str>)>) -> Parsed<(usize, usize)> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| FormatError::new(1, "missing header"))?;
    let h = numbers(line, text.as_ref(), 2)?;
    Ok((h[0], h[1]))
}

pub fn parse_edge_list(text: &str) -> Parsed<Graph> {
    let mut lines = content_lines(text);
    let (n, m) = header(&mut lines)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = 1;
    for (line, s) in lines.by_ref().take(m) {
        let e = numbers(line, s, 2)?;
        if e[0] >= n || e[1] >= n {
            return Err(FormatError::new(
                line,
                format!("vertex out of range 0..{n}"),
            ));
        }
        if e[0] == e[1] {
            return Err(FormatError::new(line, "loop"));
        }
        edges.push((e[0], e[1]));
        last = line;
    }
    if edges.len() != m {
        return Err(FormatError::new(
            last,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    if let Some((line, _)) = lines.next() {
        return Err(FormatError::new(line, "trailing content after the edges"));
    }
    Graph::from_edges(n, &edges).map_err(|e| FormatError::new(1, e.to_string()))
}

pub fn write_edge_list(g: &Graph, out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn parse_code(text: &str) -> Parsed<LinearCode> {
    let mut lines = content_lines(text);
    let (n, r) = header(&mut lines)?;
    if n == 0 || n > 64 {
        return Err(FormatError::new(1, format!("length {n} outside 1..=64")));
    }
    let mut rows = Vec::with_capacity(r);
    let mut last = 1;
    for (line, s) in lines.by_ref().take(r) {
        if s.chars().count() != n {
            return Err(FormatError::new(
                line,
                format!("row has {} characters, expected {n}", s.chars().count()),
            ));
        }
        let mut word = 0;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => word |= coord_bit(n, i),
                _ => return Err(FormatError::new(line, format!("`{c}` is not 0 or 1"))),
            }
        }
        rows.push(BitVector::new(n, word).map_err(|e| FormatError::new(line, e.to_string()))?);
        last = line;
    }
    if rows.len() != r {
        return Err(FormatError::new(
            last,
            format!("expected {r} rows, found {}", rows.len()),
        ));
    }
    if let Some((line, _)) = lines.next() {
        return Err(FormatError::new(line, "trailing content after the rows"));
    }
    LinearCode::from_rows(n, &rows).map_err(|e| FormatError::new(1, e.to_string()))
}

/// The basis rows of a code in reduced row echelon form.
pub fn format_code(code: &LinearCode) -> String {
    let n = code.length();
    let mut s = format!("{} {}\n", n, code.dimension());
    for row in code.basis_words() {
        let _ = writeln!(s, "{}", code_row(n, *row));
    }
    s
}

/// Coordinates `0..n` of a word as a 0/1 string.
pub fn code_row(n: usize, word: u64) -> String {
    (0..n)
        .map(|i| {
            if word & coord_bit(n, i) != 0 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

pub fn parse_generators(text: &str) -> Parsed<(usize, Vec<Permutation>)> {
    let mut lines = content_lines(text);
    let (degree, count) = header(&mut lines)?;
    let mut gens = Vec::with_capacity(count);
    let mut last = 1;
    for (line, s) in lines.by_ref().take(count) {
        let images = numbers(line, s, degree)?;
        gens.push(
            Permutation::from_one_indexed(&images)
                .map_err(|e| FormatError::new(line, e.to_string()))?,
        );
        last = line;
    }
    if gens.len() != count {
        return Err(FormatError::new(
            last,
            format!("expected {count} generators, found {}", gens.len()),
        ));
    }
    if let Some((line, _)) = lines.next() {
        return Err(FormatError::new(
            line,
            "trailing content after the generators",
        ));
    }
    Ok((degree, gens))
}

pub fn format_generators(degree: usize, gens: &[Permutation]) -> String {
    let mut s = format!("{degree} {}\n", gens.len());
    for g in gens {
        let line: Vec<String> = g.images().iter().map(|&x| (x + 1).to_string()).collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use rectagraph_core::gf2::golay24;
    use rectagraph_core::graph::petersen;

    #[test]
    fn edge_list_round_trip() {
        let g = petersen();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let back = parse_edge_list(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(back.adjacency(), g.adjacency());
    }

    #[test]
    fn edge_list_errors_have_lines() {
        let err = parse_edge_list("3 2\n0 1\n\n1 7\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert_eq!(parse_edge_list("3 2\n0 1\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3 1\n0 x\n").unwrap_err().line, 2);
    }

    #[test]
    fn code_round_trip() {
        let c = golay24();
        assert_eq!(parse_code(&format_code(&c)).unwrap(), c);
        assert_eq!(parse_code("3 1\n1102\n").unwrap_err().line, 2);
        assert_eq!(parse_code("3 1\n102\n").unwrap_err().line, 2);
    }

    #[test]
    fn generators_are_one_indexed() {
        let (d, gens) = parse_generators("# a 3-cycle\n3 1\n2 3 1\n").unwrap();
        assert_eq!(d, 3);
        assert_eq!(gens[0].image(0), 1);
        assert_eq!(format_generators(d, &gens), "3 1\n2 3 1\n");
        assert_eq!(parse_generators("3 1\n1 1 2\n").unwrap_err().line, 2);
    }
}
