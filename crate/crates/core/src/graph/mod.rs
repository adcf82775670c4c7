//! Finite simple graphs: explicit adjacency lists or Cayley graphs of `GF(2)^m`.

mod cliques;
mod derived;
mod distance;
mod families;
mod iso;

pub use cliques::{
    is_locally_triangular, maximal_cliques, recognize_triangular, TriangularLabeling,
};
pub use derived::{
    bipartite_double, bipartition, complement, connected_components, distance_k_graph,
    halved_graphs, induced_neighborhood, induced_subgraph, is_connected, quotient_by_partition,
    InducedSubgraph, Quotient, VertexPartition,
};
pub use distance::{
    bfs_distances, distance_profile, girth, is_rectagraph, local_profile, rectagraph_witness,
    DistanceProfile, Distances, RectagraphWitness,
};
pub use families::{
    complete, complete_multipartite, coset_graph, elliptic_quadric, folded_cube, hypercube,
    petersen, sp6_minus_elliptic_quadric, sp6_minus_hyperplane, symplectic_form, symplectic_graph,
    triangular,
};
pub use iso::{brute_force_automorphisms, isomorphic, MAX_BRUTE_FORCE_VERTICES, MAX_ISO_VERTICES};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Largest dimension of a Cayley graph on `GF(2)^m`.
pub const MAX_CAYLEY_DIM: usize = 30;

/// Optional annotation attached to a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    Vector(BitVector),
    /// A 2-subset `{i, j}` with `i < j`, 0-indexed.
    Pair(usize, usize),
    /// A vertex of some parent graph.
    Index(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    /// Sorted adjacency lists.
    Explicit { adj: Vec<Vec<u32>>, edges: usize },
    /// Vertices `0..2^dim`, `x ~ x ^ s` for `s` in a sorted connection set.
    Cayley { dim: usize, connection: Vec<u64> },
}

/// A finite simple undirected graph on vertices `0..N`.
///
/// The Cayley form stores only the connection set, so cubes and coset
/// graphs of any size up to `2^30` vertices cost no adjacency storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    repr: Repr,
    labels: Option<Vec<VertexLabel>>,
}

/// Iterator over the neighbors of a vertex.
pub enum Neighbors<'a> {
    Explicit(core::slice::Iter<'a, u32>),
    Cayley(usize, core::slice::Iter<'a, u64>),
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        match self {
            Neighbors::Explicit(it) => it.next().map(|&w| w as usize),
            Neighbors::Cayley(v, it) => it.next().map(|&s| *v ^ s as usize),
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match self {
            Neighbors::Explicit(it) => it.size_hint(),
            Neighbors::Cayley(_, it) => it.size_hint(),
        }
    }
}

impl ExactSizeIterator for Neighbors<'_> {}

impl Graph {
    /// Builds a graph from adjacency lists, which must be symmetric and free
    /// of loops and repeated entries (order is irrelevant).
    pub fn from_adjacency(mut adj: Vec<Vec<u32>>) -> Result<Self> {
        let n = adj.len();
        if n > u32::MAX as usize {
            return Err(Error::TooLarge {
                size: n,
                max: u32::MAX as usize,
            });
        }
        let mut total = 0usize;
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            for pair in list.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::InvalidParameter(alloc::format!(
                        "repeated edge {{{v}, {}}}",
                        pair[0]
                    )));
                }
            }
            for &w in list.iter() {
                if w as usize >= n {
                    return Err(Error::InvalidVertex(w as usize));
                }
                if w as usize == v {
                    return Err(Error::InvalidParameter(alloc::format!(
                        "loop at vertex {v}"
                    )));
                }
            }
            total += list.len();
        }
        for v in 0..n {
            for &w in &adj[v] {
                if adj[w as usize].binary_search(&(v as u32)).is_err() {
                    return Err(Error::InvalidParameter(alloc::format!(
                        "adjacency of {v} and {w} is not symmetric"
                    )));
                }
            }
        }
        Ok(Graph {
            repr: Repr::Explicit {
                adj,
                edges: total / 2,
            },
            labels: None,
        })
    }

    /// Builds a graph from an edge list; repeated edges are an error.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = alloc::vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex(u));
            }
            if v >= n {
                return Err(Error::InvalidVertex(v));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Self::from_adjacency(adj)
    }

    /// Cayley graph of `GF(2)^dim` with the given connection set.
    ///
    /// Repeated elements are collapsed; zero or out-of-range elements are
    /// errors.
    pub fn cayley(dim: usize, connection: &[u64]) -> Result<Self> {
        if dim > MAX_CAYLEY_DIM {
            return Err(Error::DimensionTooLarge {
                dimension: dim,
                max: MAX_CAYLEY_DIM,
            });
        }
        let mut set = connection.to_vec();
        set.sort_unstable();
        set.dedup();
        for &s in &set {
            if s == 0 {
                return Err(Error::InvalidParameter("zero in connection set".into()));
            }
            if s >> dim != 0 {
                return Err(Error::InvalidParameter(alloc::format!(
                    "connection element {s:#x} outside dimension {dim}"
                )));
            }
        }
        Ok(Graph {
            repr: Repr::Cayley {
                dim,
                connection: set,
            },
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: self.vertex_count(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<VertexLabel> {
        self.labels.as_ref().map(|l| l[v])
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        match &self.repr {
            Repr::Explicit { adj, .. } => adj.len(),
            Repr::Cayley { dim, .. } => 1usize << dim,
        }
    }

    pub fn edge_count(&self) -> usize {
        match &self.repr {
            Repr::Explicit { edges, .. } => *edges,
            Repr::Cayley { dim, connection } => (connection.len() << dim) / 2,
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        match &self.repr {
            Repr::Explicit { adj, .. } => adj[v].len(),
            Repr::Cayley { connection, .. } => connection.len(),
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        match &self.repr {
            Repr::Explicit { adj, .. } => Neighbors::Explicit(adj[v].iter()),
            Repr::Cayley { connection, .. } => Neighbors::Cayley(v, connection.iter()),
        }
    }

    /// Neighbors of `v` in increasing order.
    pub fn sorted_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.neighbors(v).collect();
        if self.is_cayley() {
            out.sort_unstable();
        }
        out
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        match &self.repr {
            Repr::Explicit { adj, .. } => adj[u].binary_search(&(v as u32)).is_ok(),
            Repr::Cayley { connection, .. } => connection.binary_search(&((u ^ v) as u64)).is_ok(),
        }
    }

    /// Position of `v` in the neighbor list of `u`, if adjacent. Positions
    /// follow the connection set for Cayley graphs and increasing order
    /// otherwise.
    pub fn neighbor_position(&self, u: usize, v: usize) -> Option<usize> {
        match &self.repr {
            Repr::Explicit { adj, .. } => adj[u].binary_search(&(v as u32)).ok(),
            Repr::Cayley { connection, .. } => connection.binary_search(&((u ^ v) as u64)).ok(),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    /// Common valency, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        match &self.repr {
            Repr::Cayley { connection, .. } => Some(connection.len()),
            Repr::Explicit { adj, .. } => {
                let k = adj.first().map_or(0, Vec::len);
                adj.iter().all(|l| l.len() == k).then_some(k)
            }
        }
    }

    pub fn is_cayley(&self) -> bool {
        matches!(self.repr, Repr::Cayley { .. })
    }

    /// Dimension and connection set of a Cayley graph.
    pub fn cayley_parts(&self) -> Option<(usize, &[u64])> {
        match &self.repr {
            Repr::Cayley { dim, connection } => Some((*dim, connection)),
            Repr::Explicit { .. } => None,
        }
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            let mut nb: Vec<usize> = self.neighbors(u).filter(|&v| v > u).collect();
            if self.is_cayley() {
                nb.sort_unstable();
            }
            nb.into_iter().map(move |v| (u, v))
        })
    }

    /// Adjacency-list form, refused above `max_vertices`.
    pub fn to_explicit(&self, max_vertices: usize) -> Result<Graph> {
        match &self.repr {
            Repr::Explicit { .. } => Ok(self.clone()),
            Repr::Cayley { .. } => {
                let n = self.vertex_count();
                if n > max_vertices {
                    return Err(Error::TooLarge {
                        size: n,
                        max: max_vertices,
                    });
                }
                let adj = (0..n)
                    .map(|v| {
                        let mut l: Vec<u32> = self.neighbors(v).map(|w| w as u32).collect();
                        l.sort_unstable();
                        l
                    })
                    .collect();
                Ok(Graph {
                    repr: Repr::Explicit {
                        adj,
                        edges: self.edge_count(),
                    },
                    labels: self.labels.clone(),
                })
            }
        }
    }

    /// Sorted adjacency lists; Cayley graphs are materialized.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        match &self.repr {
            Repr::Explicit { adj, .. } => adj.clone(),
            Repr::Cayley { .. } => (0..self.vertex_count())
                .map(|v| {
                    let mut l: Vec<u32> = self.neighbors(v).map(|w| w as u32).collect();
                    l.sort_unstable();
                    l
                })
                .collect(),
        }
    }

    /// Whether automorphisms act transitively on vertices by construction
    /// (Cayley graphs); used to restrict per-vertex checks to vertex 0.
    pub fn is_known_vertex_transitive(&self) -> bool {
        self.is_cayley()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_malformed_adjacency() {
        assert!(Graph::from_adjacency(vec![vec![1], vec![]]).is_err());
        assert!(Graph::from_adjacency(vec![vec![0]]).is_err());
        assert!(Graph::from_adjacency(vec![vec![1, 1], vec![0, 0]]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 2)])
                .unwrap()
                .edge_count(),
            2
        );
    }

    #[test]
    fn cayley_basics() {
        let g = Graph::cayley(3, &[1, 2, 4, 4]).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.sorted_neighbors(5), vec![1, 4, 7]);
        assert!(g.is_adjacent(5, 7));
        assert!(!g.is_adjacent(5, 6));
        assert!(Graph::cayley(3, &[0]).is_err());
        assert!(Graph::cayley(3, &[8]).is_err());
        let e = g.to_explicit(8).unwrap();
        assert_eq!(e.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        assert!(g.to_explicit(7).is_err());
    }
}
