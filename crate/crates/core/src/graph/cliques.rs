use alloc::vec::Vec;

use super::derived::{induced_neighborhood, is_connected};
use super::Graph;
use crate::error::{Error, Result};
use crate::perm::pair_index;

/// Largest graph accepted by [`maximal_cliques`].
const MAX_CLIQUE_VERTICES: usize = 1 << 14;

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(alloc::vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::empty(n);
        for v in 0..n {
            b.set(v);
        }
        b
    }

    fn set(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn clear(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn or(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(64 * k + b)
            })
        })
    }
}

/// All maximal cliques with at least `min_size` vertices, each sorted, in
/// lexicographic order. Bron–Kerbosch with pivoting.
pub fn maximal_cliques(g: &Graph, min_size: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > MAX_CLIQUE_VERTICES {
        return Err(Error::TooLarge {
            size: n,
            max: MAX_CLIQUE_VERTICES,
        });
    }
    let nbhd: Vec<Bits> = (0..n)
        .map(|v| {
            let mut b = Bits::empty(n);
            for w in g.neighbors(v) {
                b.set(w);
            }
            b
        })
        .collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    expand(
        &nbhd,
        &mut r,
        Bits::full(n),
        Bits::empty(n),
        min_size,
        &mut out,
    );
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn expand(
    nbhd: &[Bits],
    r: &mut Vec<usize>,
    mut p: Bits,
    mut x: Bits,
    min_size: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() && r.len() >= min_size {
            out.push(r.clone());
        }
        return;
    }
    if r.len() + p.count() < min_size {
        return;
    }
    let pivot = p
        .or(&x)
        .iter()
        .max_by_key(|&u| (p.and_count(&nbhd[u]), core::cmp::Reverse(u)))
        .expect("p is nonempty");
    let candidates: Vec<usize> = p.and_not(&nbhd[pivot]).iter().collect();
    for v in candidates {
        r.push(v);
        expand(nbhd, r, p.and(&nbhd[v]), x.and(&nbhd[v]), min_size, out);
        r.pop();
        p.clear(v);
        x.set(v);
        if r.len() + p.count() < min_size {
            return;
        }
    }
}

/// An isomorphism onto `T_n`: vertex `v` corresponds to the 2-subset
/// `labels[v] = (i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularLabeling {
    pub n: usize,
    pub labels: Vec<(usize, usize)>,
}

impl TriangularLabeling {
    /// The `n - 1` vertices whose labels contain `point`.
    pub fn star(&self, point: usize) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&v| {
                let (a, b) = self.labels[v];
                a == point || b == point
            })
            .collect()
    }

    /// Vertex index of each pair in colex order.
    pub fn vertex_of_pair(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.labels.len()];
        for (v, &(a, b)) in self.labels.iter().enumerate() {
            out[pair_index(a, b)] = v;
        }
        out
    }
}

/// Recognizes `g` as a triangular graph `T_n`, returning a verified labeling.
pub fn recognize_triangular(g: &Graph) -> Option<TriangularLabeling> {
    let count = g.vertex_count();
    let n = triangular_root(count)?;
    if g.regular_degree() != Some(2 * (n - 2)) {
        return None;
    }
    let labels = match n {
        2 => alloc::vec![(0, 1)],
        3 => alloc::vec![(0, 1), (0, 2), (1, 2)],
        4 => octahedron_labels(g)?,
        _ => star_labels(g, n)?,
    };
    let labeling = TriangularLabeling { n, labels };
    verify_triangular(g, &labeling).then_some(labeling)
}

fn triangular_root(count: usize) -> Option<usize> {
    (2..)
        .take_while(|&n| n * (n - 1) / 2 <= count)
        .find(|&n| n * (n - 1) / 2 == count)
}

/// `T_4` is the octahedron: complementary pairs are the non-edges.
fn octahedron_labels(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let mut labels = alloc::vec![None; 6];
    let matched = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))];
    let mut next = 0;
    for v in 0..6 {
        if labels[v].is_some() {
            continue;
        }
        let w = (0..6).find(|&w| w != v && !g.is_adjacent(v, w))?;
        if next == 3 || labels[w].is_some() {
            return None;
        }
        labels[v] = Some(matched[next].0);
        labels[w] = Some(matched[next].1);
        next += 1;
    }
    labels.into_iter().collect()
}

fn star_labels(g: &Graph, n: usize) -> Option<Vec<(usize, usize)>> {
    let cliques = maximal_cliques(g, n - 1).ok()?;
    if cliques.len() != n || cliques.iter().any(|c| c.len() != n - 1) {
        return None;
    }
    let mut on = alloc::vec![Vec::with_capacity(2); g.vertex_count()];
    for (k, c) in cliques.iter().enumerate() {
        for &v in c {
            on[v].push(k);
        }
    }
    on.into_iter()
        .map(|stars| match stars[..] {
            [a, b] => Some((a, b)),
            _ => None,
        })
        .collect()
}

fn verify_triangular(g: &Graph, t: &TriangularLabeling) -> bool {
    let count = t.labels.len();
    if count != g.vertex_count() {
        return false;
    }
    let mut seen = alloc::vec![false; count];
    for &(a, b) in &t.labels {
        if a >= b || b >= t.n || core::mem::replace(&mut seen[pair_index(a, b)], true) {
            return false;
        }
    }
    for u in 0..count {
        for v in u + 1..count {
            let (a, b) = t.labels[u];
            let (c, d) = t.labels[v];
            let shared = (a == c || a == d) as u8 + (b == c || b == d) as u8;
            if (shared == 1) != g.is_adjacent(u, v) {
                return false;
            }
        }
    }
    true
}

/// The common `n` if every vertex neighborhood is `T_n`; Cayley graphs are
/// checked at vertex 0 only.
pub fn is_locally_triangular(g: &Graph) -> Result<Option<usize>> {
    if g.vertex_count() == 0 {
        return Ok(None);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let vertices = if g.is_known_vertex_transitive() {
        0..1
    } else {
        0..g.vertex_count()
    };
    let mut common = None;
    for u in vertices {
        let local = induced_neighborhood(g, u)?;
        match recognize_triangular(&local.graph) {
            Some(t) if common.is_none_or(|n| n == t.n) => common = Some(t.n),
            _ => return Ok(None),
        }
    }
    Ok(common)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::derived::halved_graphs;
    use crate::graph::families::{
        complete, complete_multipartite, hypercube, petersen, triangular,
    };

    #[test]
    fn triangular_graphs_are_recognized() {
        for n in 2..=12 {
            let t = triangular(n).unwrap();
            let lab = recognize_triangular(&t).unwrap();
            assert_eq!(lab.n, n);
        }
        assert_eq!(
            recognize_triangular(&complete_multipartite(3, 2).unwrap())
                .unwrap()
                .n,
            4
        );
        assert!(recognize_triangular(&petersen()).is_none());
        assert!(recognize_triangular(&complete(6).unwrap()).is_none());
    }

    #[test]
    fn cliques_of_t5() {
        let t = triangular(5).unwrap();
        let all = maximal_cliques(&t, 1).unwrap();
        assert_eq!(all.len(), 5 + 10);
        assert_eq!(maximal_cliques(&t, 4).unwrap().len(), 5);
    }

    #[test]
    fn local_triangularity() {
        let halved = halved_graphs(&hypercube(5).unwrap()).unwrap();
        assert_eq!(is_locally_triangular(&halved[0]).unwrap(), Some(5));
        let explicit = halved[0].to_explicit(16).unwrap();
        assert_eq!(is_locally_triangular(&explicit).unwrap(), Some(5));
        assert_eq!(
            is_locally_triangular(&complete(4).unwrap()).unwrap(),
            Some(3)
        );
        assert_eq!(is_locally_triangular(&hypercube(4).unwrap()).unwrap(), None);
    }
}
