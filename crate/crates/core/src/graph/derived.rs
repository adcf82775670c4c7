use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::{Graph, VertexLabel};
use crate::error::{Error, Result};
use crate::gf2::{BitCompressor, LinearCode};

/// The complement, refused above `max_vertices`.
pub fn complement(g: &Graph, max_vertices: usize) -> Result<Graph> {
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(Error::TooLarge {
            size: n,
            max: max_vertices,
        });
    }
    let adj = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| w != v && !g.is_adjacent(v, w))
                .map(|w| w as u32)
                .collect()
        })
        .collect();
    let out = Graph::from_adjacency(adj)?;
    match g.labels() {
        Some(l) => out.with_labels(l.to_vec()),
        None => Ok(out),
    }
}

/// Connected components, each sorted, ordered by least vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = alloc::vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = alloc::vec![start];
        let mut head = 0;
        while head < comp.len() {
            let x = comp[head];
            head += 1;
            for y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    if let Some((dim, connection)) = g.cayley_parts() {
        return span_rank(connection) == dim;
    }
    let n = g.vertex_count();
    n <= 1 || connected_components(g).len() == 1
}

fn span_rank(words: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &w in words {
        let mut x = w;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// A proper 2-colouring (colour 0 on the least vertex of each component),
/// or `None` if the graph has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut color = alloc::vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Vertices at distance exactly `k` become adjacent.
pub fn distance_k_graph(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "distance 0 graph has only loops".into(),
        ));
    }
    if let Some((dim, _)) = g.cayley_parts() {
        // Translations are automorphisms, so the shell at 0 is a connection set.
        let profile_shells = shell_at_zero(g, k);
        let set: Vec<u64> = profile_shells.iter().map(|&v| v as u64).collect();
        return Graph::cayley(dim, &set);
    }
    let n = g.vertex_count();
    let mut dist = alloc::vec![u32::MAX; n];
    let mut adj = Vec::with_capacity(n);
    for u in 0..n {
        let mut touched = alloc::vec![u];
        dist[u] = 0;
        let mut frontier = alloc::vec![u];
        for d in 1..=k as u32 {
            let mut next = Vec::new();
            for &x in &frontier {
                for y in g.neighbors(x) {
                    if dist[y] == u32::MAX {
                        dist[y] = d;
                        touched.push(y);
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let mut list: Vec<u32> = frontier.iter().map(|&v| v as u32).collect();
        list.sort_unstable();
        adj.push(list);
        for t in touched {
            dist[t] = u32::MAX;
        }
    }
    Graph::from_adjacency(adj)
}

fn shell_at_zero(g: &Graph, k: usize) -> Vec<usize> {
    let mut seen = alloc::collections::BTreeSet::new();
    seen.insert(0usize);
    let mut frontier = alloc::vec![0usize];
    for _ in 0..k {
        let mut next = Vec::new();
        for &x in &frontier {
            for y in g.neighbors(x) {
                if seen.insert(y) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    frontier.sort_unstable();
    frontier
}

/// The halved graphs of a connected graph: the two components of its
/// distance 2 graph when bipartite, or the distance 2 graph otherwise.
///
/// For an explicit graph each half is indexed by its vertices in increasing
/// order and labelled by them. For a Cayley graph with connection set `S`
/// the even half lives on the span `W` of the sums `s + t`; its vertex
/// index packs the pivot coordinates of `W`, which is again increasing in
/// the parent vertex. The second half is the translate `W + s` for the least
/// `s` in `S`, indexed through that translation.
pub fn halved_graphs(g: &Graph) -> Result<Vec<Graph>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if let Some((dim, connection)) = g.cayley_parts() {
        return cayley_halved(dim, connection);
    }
    let n = g.vertex_count();
    let Some(color) = bipartition(g) else {
        return Ok(alloc::vec![distance_k_graph(g, 2)?]);
    };
    let mut out = Vec::new();
    for side in 0..2u8 {
        let members: Vec<usize> = (0..n).filter(|&v| color[v] == side).collect();
        let mut index = alloc::vec![u32::MAX; n];
        for (k, &v) in members.iter().enumerate() {
            index[v] = k as u32;
        }
        let adj = members
            .iter()
            .map(|&x| {
                let mut list: Vec<u32> = g
                    .neighbors(x)
                    .flat_map(|v| g.neighbors(v))
                    .filter(|&w| w != x)
                    .map(|w| index[w])
                    .collect();
                list.sort_unstable();
                list.dedup();
                list
            })
            .collect();
        let labels = members.iter().map(|&v| VertexLabel::Index(v)).collect();
        out.push(Graph::from_adjacency(adj)?.with_labels(labels)?);
    }
    Ok(out)
}

fn cayley_halved(dim: usize, connection: &[u64]) -> Result<Vec<Graph>> {
    let Some(&s0) = connection.first() else {
        // a single vertex
        return Ok(alloc::vec![Graph::cayley(0, &[])?]);
    };
    let sums: Vec<u64> = connection
        .iter()
        .flat_map(|&s| connection.iter().map(move |&t| s ^ t))
        .filter(|&x| x != 0)
        .collect();
    let shifted: Vec<u64> = connection.iter().map(|&s| s ^ s0).collect();
    let bipartite = span_rank(&shifted) + 1 == span_rank(connection);
    if !bipartite {
        let set: Vec<u64> = sums
            .into_iter()
            .filter(|x| connection.binary_search(x).is_err())
            .collect();
        return Ok(alloc::vec![Graph::cayley(dim, &set)?]);
    }
    let half_dim = dim - 1;
    let packed: Vec<u64> = if half_dim == 0 {
        Vec::new()
    } else {
        let w = LinearCode::from_words(dim, sums.iter().copied());
        let mask = w
            .pivots()
            .iter()
            .fold(0u64, |m, &p| m | crate::gf2::coord_bit(dim, p));
        let pack = BitCompressor::new(mask);
        sums.iter().map(|&x| pack.extract(x)).collect()
    };
    let half = Graph::cayley(half_dim, &packed)?;
    Ok(alloc::vec![half.clone(), half])
}

/// `Γ.2`: vertex `(v, e)` has index `2v + e`, adjacent to `(w, 1-e)` for
/// every neighbor `w` of `v`.
pub fn bipartite_double(g: &Graph) -> Result<Graph> {
    if let Some((dim, connection)) = g.cayley_parts() {
        let set: Vec<u64> = connection.iter().map(|&s| (s << 1) | 1).collect();
        return Graph::cayley(dim + 1, &set);
    }
    let n = g.vertex_count();
    let adj = (0..2 * n)
        .map(|x| {
            let (v, e) = (x / 2, x % 2);
            g.neighbors(v).map(|w| (2 * w + (1 - e)) as u32).collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// A partition of the vertex set into nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// From the block index of every vertex; block indices must be exactly
    /// `0..b` for some `b`.
    pub fn from_block_of(block_of: Vec<usize>) -> Result<Self> {
        let count = block_of.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = alloc::vec![Vec::new(); count];
        for (v, &b) in block_of.iter().enumerate() {
            blocks[b].push(v);
        }
        if let Some(b) = blocks.iter().position(Vec::is_empty) {
            return Err(Error::InvalidParameter(alloc::format!(
                "block {b} is empty"
            )));
        }
        Ok(VertexPartition { block_of, blocks })
    }

    /// Every vertex in its own block.
    pub fn singletons(n: usize) -> Self {
        Self::from_block_of((0..n).collect()).expect("singletons are nonempty")
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// The quotient graph on the blocks of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub graph: Graph,
    /// Blocks containing an edge (loops of the quotient, dropped from `graph`).
    pub loops: Vec<usize>,
    /// Whether the natural map onto the quotient is a covering.
    pub covering: bool,
}

pub fn quotient_by_partition(g: &Graph, p: &VertexPartition) -> Result<Quotient> {
    let n = g.vertex_count();
    if p.block_of.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: p.block_of.len(),
        });
    }
    let nb = p.len();
    let mut adj: Vec<Vec<u32>> = alloc::vec![Vec::new(); nb];
    let mut loops = Vec::new();
    for (b, block) in p.blocks.iter().enumerate() {
        let mut list = Vec::new();
        let mut has_loop = false;
        for &x in block {
            for y in g.neighbors(x) {
                let c = p.block_of[y];
                if c == b {
                    has_loop = true;
                } else {
                    list.push(c as u32);
                }
            }
        }
        list.sort_unstable();
        list.dedup();
        adj[b] = list;
        if has_loop {
            loops.push(b);
        }
    }
    // Covering: each vertex sees every adjacent block exactly once.
    let mut covering = loops.is_empty();
    if covering {
        'vertices: for x in 0..n {
            let mut seen: Vec<u32> = g.neighbors(x).map(|y| p.block_of[y] as u32).collect();
            seen.sort_unstable();
            let before = seen.len();
            seen.dedup();
            if seen.len() != before || seen != adj[p.block_of[x]] {
                covering = false;
                break 'vertices;
            }
        }
    }
    Ok(Quotient {
        graph: Graph::from_adjacency(adj)?,
        loops,
        covering,
    })
}

/// A subgraph together with the parent vertex of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub parent: Vec<usize>,
}

/// The subgraph induced on `vertices`, in the given order.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<InducedSubgraph> {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParameter("repeated vertex".into()));
    }
    for &v in vertices {
        g.check_vertex(v)?;
    }
    let adj = vertices
        .iter()
        .map(|&x| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(_, &y)| g.is_adjacent(x, y))
                .map(|(j, _)| j as u32)
                .collect()
        })
        .collect();
    let labels = vertices.iter().map(|&v| VertexLabel::Index(v)).collect();
    Ok(InducedSubgraph {
        graph: Graph::from_adjacency(adj)?.with_labels(labels)?,
        parent: vertices.to_vec(),
    })
}

/// The graph induced on `Γ(u)`, vertices in increasing order.
pub fn induced_neighborhood(g: &Graph, u: usize) -> Result<InducedSubgraph> {
    g.check_vertex(u)?;
    induced_subgraph(g, &g.sorted_neighbors(u))
}
