use alloc::vec::Vec;

use super::{derived::complement, Graph, VertexLabel};
use crate::error::{Error, Result};
use crate::gf2::{coord_bit, len_mask, BitVector, LinearCode, MAX_COSET_CODIM};
use crate::perm::{pair_at, pair_index};

/// The `n`-cube: vertices are the words of `GF(2)^n`, adjacent at Hamming
/// distance 1. Vertex `x` is the vector with bits `x`.
pub fn hypercube(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadLength(0));
    }
    let units: Vec<u64> = (0..n).map(|i| coord_bit(n, i)).collect();
    Graph::cayley(n, &units)
}

/// The triangular graph `T_n` on the 2-subsets of `[n]` in colex order.
pub fn triangular(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(alloc::format!(
            "T_{n} needs n >= 2"
        )));
    }
    let count = n * (n - 1) / 2;
    let mut adj = alloc::vec![Vec::new(); count];
    let mut labels = Vec::with_capacity(count);
    for (v, list) in adj.iter_mut().enumerate() {
        let (a, b) = pair_at(v);
        labels.push(VertexLabel::Pair(a, b));
        for c in 0..n {
            if c != a && c != b {
                list.push(pair_index(a, c) as u32);
                list.push(pair_index(b, c) as u32);
            }
        }
    }
    Graph::from_adjacency(adj)?.with_labels(labels)
}

pub fn complete(n: usize) -> Result<Graph> {
    complete_multipartite(n, 1)
}

/// `K_{parts[size]}`: vertex `v` lies in part `v / size`.
pub fn complete_multipartite(parts: usize, size: usize) -> Result<Graph> {
    if parts == 0 || size == 0 {
        return Err(Error::InvalidParameter("empty multipartite graph".into()));
    }
    let n = parts * size;
    let adj = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| w / size != v / size)
                .map(|w| w as u32)
                .collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// The complement of `T_5`.
pub fn petersen() -> Graph {
    complement(&triangular(5).expect("T_5 exists"), 10).expect("10 vertices")
}

/// The coset graph `Γ(C)`: vertices are syndrome indices, and `x + C` is
/// adjacent to `x + e_i + C`; repeated edges are collapsed.
pub fn coset_graph(code: &LinearCode) -> Result<Graph> {
    let n = code.length();
    let codim = code.codimension();
    if codim > MAX_COSET_CODIM {
        return Err(Error::QuotientTooLarge {
            codimension: codim,
            max: MAX_COSET_CODIM,
        });
    }
    let mut connection = Vec::with_capacity(n);
    for i in 0..n {
        let s = code.syndrome_word(coord_bit(n, i));
        if s == 0 {
            return Err(Error::Loops { coordinate: i });
        }
        connection.push(s);
    }
    Graph::cayley(codim, &connection)
}

/// The folded `n`-cube, the coset graph of the repetition code.
pub fn folded_cube(n: usize) -> Result<Graph> {
    coset_graph(&LinearCode::repetition_code(n)?)
}

/// `B(x, y) = Σ x_{2i-1} y_{2i} + x_{2i} y_{2i-1}` on `GF(2)^m`, `m` even.
pub fn symplectic_form(m: usize, x: u64, y: u64) -> bool {
    debug_assert!(m.is_multiple_of(2));
    const LOW: u64 = 0x5555_5555_5555_5555;
    let swapped = ((y & LOW) << 1) | ((y >> 1) & LOW);
    (x & swapped & len_mask(m)).count_ones() & 1 == 1
}

/// `Q(x) = x1 x2 + x3 x4 + x5 + x5 x6 + x6` on `GF(2)^6`, an elliptic form
/// polarizing to [`symplectic_form`].
pub fn elliptic_quadric(x: u64) -> bool {
    let bit = |i: usize| (x >> (5 - i)) & 1;
    (bit(0) & bit(1)) ^ (bit(2) & bit(3)) ^ bit(4) ^ (bit(4) & bit(5)) ^ bit(5) == 1
}

/// Nonzero vectors of `GF(2)^m`, adjacent when distinct and perpendicular.
pub fn symplectic_graph(m: usize) -> Result<Graph> {
    if m == 0 || m % 2 == 1 || m > 12 {
        return Err(Error::InvalidParameter(alloc::format!(
            "symplectic graph needs even 2 <= m <= 12, got {m}"
        )));
    }
    let vertices: Vec<u64> = (1..(1u64 << m)).collect();
    symplectic_subgraph(m, &vertices)
}

/// The symplectic graph of `GF(2)^6` induced on the vectors off the elliptic
/// quadric `Q = 0`.
pub fn sp6_minus_elliptic_quadric() -> Graph {
    let vertices: Vec<u64> = (1..64u64).filter(|&x| elliptic_quadric(x)).collect();
    symplectic_subgraph(6, &vertices).expect("fixed construction")
}

/// The symplectic graph of `GF(2)^6` induced on the vectors off the
/// hyperplane `x1 = 0`.
pub fn sp6_minus_hyperplane() -> Graph {
    let vertices: Vec<u64> = (1..64u64).filter(|&x| x & coord_bit(6, 0) != 0).collect();
    symplectic_subgraph(6, &vertices).expect("fixed construction")
}

fn symplectic_subgraph(m: usize, vertices: &[u64]) -> Result<Graph> {
    let adj = vertices
        .iter()
        .map(|&x| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(_, &y)| y != x && !symplectic_form(m, x, y))
                .map(|(j, _)| j as u32)
                .collect()
        })
        .collect();
    let labels = vertices
        .iter()
        .map(|&x| BitVector::new(m, x).map(VertexLabel::Vector))
        .collect::<Result<Vec<_>>>()?;
    Graph::from_adjacency(adj)?.with_labels(labels)
}
