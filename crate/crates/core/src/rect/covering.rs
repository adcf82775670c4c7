use alloc::vec::Vec;

use super::check_rect_hypotheses;
use crate::error::{Error, Result};
use crate::gf2::{coord_bit, LinearCode};
use crate::graph::Graph;

/// Largest cube dimension for a covering; the image table has `2^n` entries.
pub const MAX_COVER_DIM: usize = 24;

/// A covering `Q_n -> target` sending `0` to `base` and `e_i` to
/// `neighbor_order[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringMap {
    n: usize,
    target: Graph,
    image_of: Vec<u32>,
    base: usize,
    neighbor_order: Vec<usize>,
}

/// Builds and verifies the covering determined by `base` and the images of
/// the unit vectors.
///
/// Cube vertices are filled in increasing order: for `x` of weight at least
/// 2 with lowest-order set bits `a` and `b`, the image of `x` is the common
/// neighbor of the images of `x + a` and `x + b` other than the image of
/// `x + a + b`. The result is then checked to be a local bijection at every
/// cube vertex.
pub fn build_covering(
    target: &Graph,
    base: usize,
    neighbor_order: &[usize],
) -> Result<CoveringMap> {
    check_rect_hypotheses(target, base)?;
    let n = target.degree(base);
    if n > MAX_COVER_DIM {
        return Err(Error::DimensionTooLarge {
            dimension: n,
            max: MAX_COVER_DIM,
        });
    }
    let mut sorted = neighbor_order.to_vec();
    sorted.sort_unstable();
    if sorted != target.sorted_neighbors(base) {
        return Err(Error::InvalidParameter(
            "neighbor order must list every neighbor of the base once".into(),
        ));
    }
    let adjacent = Adjacency::new(target);
    let size = 1usize << n;
    let mut image = alloc::vec![0u32; size];
    image[0] = base as u32;
    for (i, &u) in neighbor_order.iter().enumerate() {
        image[coord_bit(n, i) as usize] = u as u32;
    }
    for x in 1..size {
        if x & (x - 1) == 0 {
            continue;
        }
        let a = x & x.wrapping_neg();
        let b = (x ^ a) & (x ^ a).wrapping_neg();
        let p = image[x ^ a] as usize;
        let q = image[x ^ b] as usize;
        let r = image[x ^ a ^ b] as usize;
        let mut found = None;
        for c in target.neighbors(p) {
            if c != r && adjacent.test(c, q) {
                if found.is_some() {
                    return Err(Error::Inconsistent {
                        cube_vertex: x as u64,
                    });
                }
                found = Some(c);
            }
        }
        match found {
            Some(c) => image[x] = c as u32,
            None => {
                return Err(Error::Inconsistent {
                    cube_vertex: x as u64,
                })
            }
        }
    }
    let cov = CoveringMap {
        n,
        target: target.clone(),
        image_of: image,
        base,
        neighbor_order: neighbor_order.to_vec(),
    };
    cov.verify_local_bijection()?;
    Ok(cov)
}

/// [`build_covering`] with the neighbors of `base` in increasing order.
pub fn build_covering_sorted(target: &Graph, base: usize) -> Result<CoveringMap> {
    target.check_vertex(base)?;
    build_covering(target, base, &target.sorted_neighbors(base))
}

/// The neighbor order of vertex 0 in a coset graph matching coordinate
/// order: `e_i` goes to the coset of `e_i`.
pub fn coset_neighbor_order(code: &LinearCode) -> Vec<usize> {
    let n = code.length();
    (0..n)
        .map(|i| code.syndrome_word(coord_bit(n, i)) as usize)
        .collect()
}

/// Adjacency tests and neighbor positions, through a lookup table on the
/// connection set for Cayley graphs of moderate dimension.
pub(crate) struct Adjacency<'a> {
    graph: &'a Graph,
    table: Option<Vec<u8>>,
}

impl<'a> Adjacency<'a> {
    pub(crate) fn new(graph: &'a Graph) -> Self {
        let table = graph
            .cayley_parts()
            .filter(|&(dim, connection)| dim <= 24 && connection.len() < u8::MAX as usize)
            .map(|(dim, connection)| {
                let mut table = alloc::vec![u8::MAX; 1usize << dim];
                for (p, &s) in connection.iter().enumerate() {
                    table[s as usize] = p as u8;
                }
                table
            });
        Adjacency { graph, table }
    }

    #[inline]
    pub(crate) fn position(&self, u: usize, v: usize) -> Option<usize> {
        match &self.table {
            Some(table) => match table[u ^ v] {
                u8::MAX => None,
                p => Some(p as usize),
            },
            None => self.graph.neighbor_position(u, v),
        }
    }

    #[inline]
    pub(crate) fn test(&self, u: usize, v: usize) -> bool {
        self.position(u, v).is_some()
    }
}

impl CoveringMap {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn neighbor_order(&self) -> &[usize] {
        &self.neighbor_order
    }

    /// Image of the cube vertex `x`.
    pub fn image_of(&self, x: u64) -> usize {
        self.image_of[x as usize] as usize
    }

    /// The whole image table, indexed by cube vertex.
    pub fn images(&self) -> &[u32] {
        &self.image_of
    }

    /// Preimage of `v`, in increasing order.
    pub fn fibre(&self, v: usize) -> Vec<u64> {
        (0..self.image_of.len() as u64)
            .filter(|&x| self.image_of[x as usize] as usize == v)
            .collect()
    }

    /// Size of every fibre, indexed by target vertex.
    pub fn fibre_sizes(&self) -> Vec<usize> {
        let mut sizes = alloc::vec![0; self.target.vertex_count()];
        for &v in &self.image_of {
            sizes[v as usize] += 1;
        }
        sizes
    }

    /// Every cube edge maps to an edge, and the `n` neighbors of each cube
    /// vertex map onto the `n` neighbors of its image.
    fn verify_local_bijection(&self) -> Result<()> {
        let n = self.n;
        let full = (1u32 << n) - 1;
        let target = &self.target;
        if let Some(x) = self
            .image_of
            .iter()
            .position(|&v| target.degree(v as usize) != n)
        {
            return Err(Error::Inconsistent {
                cube_vertex: x as u64,
            });
        }
        // Bit k of seen[x] marks the position of one neighbor image around
        // the image of x; sweeping one direction at a time keeps memory
        // access sequential.
        let adjacent = Adjacency::new(target);
        let mut seen = alloc::vec![0u32; self.image_of.len()];
        for k in 0..n {
            let bit = 1usize << k;
            for block in (0..self.image_of.len()).step_by(2 * bit) {
                for x in block..block + bit {
                    let (v, w) = (self.image_of[x] as usize, self.image_of[x ^ bit] as usize);
                    let (Some(p), Some(q)) = (adjacent.position(v, w), adjacent.position(w, v))
                    else {
                        return Err(Error::Inconsistent {
                            cube_vertex: x as u64,
                        });
                    };
                    seen[x] |= 1 << p;
                    seen[x ^ bit] |= 1 << q;
                }
            }
        }
        match seen.iter().position(|&m| m != full) {
            Some(x) => Err(Error::Inconsistent {
                cube_vertex: x as u64,
            }),
            None => Ok(()),
        }
    }

    /// Quadrangle closure for every pair of coordinates at every cube
    /// vertex: `x, x+e_i, x+e_i+e_j, x+e_j` maps onto a quadrangle.
    ///
    /// This is implied by the local bijection checked at construction; it is
    /// exposed as an independent check for small `n`.
    pub fn check_all_quadrangles(&self) -> Result<()> {
        let n = self.n;
        for x in 0..self.image_of.len() {
            for i in 0..n {
                for j in i + 1..n {
                    let (a, b) = (1usize << i, 1usize << j);
                    let p = self.image_of[x] as usize;
                    let s = self.image_of[x ^ a] as usize;
                    let t = self.image_of[x ^ b] as usize;
                    let q = self.image_of[x ^ a ^ b] as usize;
                    let closes = p != q
                        && s != t
                        && self.target.is_adjacent(p, s)
                        && self.target.is_adjacent(p, t)
                        && self.target.is_adjacent(q, s)
                        && self.target.is_adjacent(q, t);
                    if !closes {
                        return Err(Error::Inconsistent {
                            cube_vertex: x as u64,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}
