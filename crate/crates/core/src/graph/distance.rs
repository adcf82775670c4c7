use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use super::Graph;

const UNREACHABLE: u32 = u32::MAX;

/// Breadth-first distances from one source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distances {
    source: usize,
    dist: Vec<u32>,
}

impl Distances {
    pub fn source(&self) -> usize {
        self.source
    }

    /// Distance to `v`, or `None` when `v` is unreachable.
    #[inline]
    pub fn get(&self, v: usize) -> Option<u32> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn reachable_count(&self) -> usize {
        self.dist.iter().filter(|&&d| d != UNREACHABLE).count()
    }

    pub fn all_reachable(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }

    /// Largest distance, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self) -> Option<u32> {
        if self.all_reachable() {
            self.dist.iter().copied().max()
        } else {
            None
        }
    }

    /// `|Γ_i(u)|` for `i = 0, 1, ..` up to the largest finite distance.
    pub fn shell_sizes(&self) -> Vec<usize> {
        let mut sizes = Vec::new();
        for &d in &self.dist {
            if d == UNREACHABLE {
                continue;
            }
            let d = d as usize;
            if sizes.len() <= d {
                sizes.resize(d + 1, 0);
            }
            sizes[d] += 1;
        }
        sizes
    }

    /// Vertices at distance exactly `i`, ascending.
    pub fn shell(&self, i: u32) -> Vec<usize> {
        (0..self.dist.len())
            .filter(|&v| self.dist[v] == i)
            .collect()
    }
}

/// Distances from `u` to every vertex.
///
/// # Panics
///
/// If `u` is not a vertex of `g`.
pub fn bfs_distances(g: &Graph, u: usize) -> Distances {
    let n = g.vertex_count();
    assert!(u < n, "vertex {u} out of range");
    let mut dist = alloc::vec![UNREACHABLE; n];
    dist[u] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        let next = dist[x] + 1;
        for y in g.neighbors(x) {
            if dist[y] == UNREACHABLE {
                dist[y] = next;
                queue.push_back(y);
            }
        }
    }
    Distances { source: u, dist }
}

/// Per-shell intersection numbers seen from one vertex.
///
/// For `v` at distance `i` from the source, `c_i(v)`, `a_i(v)` and `b_i(v)`
/// count the neighbors of `v` at distance `i-1`, `i` and `i+1`. Each entry of
/// `c`, `a` and `b` is the sorted set of values observed on shell `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    pub source: usize,
    pub shell_sizes: Vec<usize>,
    pub c: Vec<Vec<u32>>,
    pub a: Vec<Vec<u32>>,
    pub b: Vec<Vec<u32>>,
    /// Vertices not reached from the source (zero for a full profile of a
    /// connected graph; not computed for local profiles).
    pub unreachable: usize,
}

impl DistanceProfile {
    /// Number of shells minus one.
    pub fn diameter(&self) -> usize {
        self.shell_sizes.len().saturating_sub(1)
    }

    /// The unique value of `c_i`, if there is exactly one.
    pub fn c_value(&self, i: usize) -> Option<u32> {
        single(self.c.get(i)?)
    }

    pub fn a_value(&self, i: usize) -> Option<u32> {
        single(self.a.get(i)?)
    }

    pub fn b_value(&self, i: usize) -> Option<u32> {
        single(self.b.get(i)?)
    }

    /// `{b_0, .., b_{d-1}; c_1, .., c_d}` when every value set is a singleton.
    pub fn intersection_array(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let d = self.diameter();
        let b = (0..d)
            .map(|i| self.b_value(i))
            .collect::<Option<Vec<_>>>()?;
        let c = (1..=d)
            .map(|i| self.c_value(i))
            .collect::<Option<Vec<_>>>()?;
        Some((b, c))
    }
}

fn single(values: &[u32]) -> Option<u32> {
    match values {
        [x] => Some(*x),
        _ => None,
    }
}

struct ProfileBuilder {
    c: Vec<Vec<u32>>,
    a: Vec<Vec<u32>>,
    b: Vec<Vec<u32>>,
}

impl ProfileBuilder {
    fn new(levels: usize) -> Self {
        ProfileBuilder {
            c: alloc::vec![Vec::new(); levels],
            a: alloc::vec![Vec::new(); levels],
            b: alloc::vec![Vec::new(); levels],
        }
    }

    fn record(&mut self, i: usize, c: u32, a: u32, b: u32) {
        insert_sorted(&mut self.c[i], c);
        insert_sorted(&mut self.a[i], a);
        insert_sorted(&mut self.b[i], b);
    }
}

fn insert_sorted(set: &mut Vec<u32>, x: u32) {
    if let Err(pos) = set.binary_search(&x) {
        set.insert(pos, x);
    }
}

/// Full profile from `u`.
///
/// # Panics
///
/// If `u` is not a vertex of `g`.
pub fn distance_profile(g: &Graph, u: usize) -> DistanceProfile {
    let dist = bfs_distances(g, u);
    let shell_sizes = dist.shell_sizes();
    let mut builder = ProfileBuilder::new(shell_sizes.len());
    for v in 0..g.vertex_count() {
        let Some(i) = dist.get(v) else { continue };
        let (mut c, mut a, mut b) = (0, 0, 0);
        for w in g.neighbors(v) {
            let j = dist
                .get(w)
                .expect("neighbor of a reached vertex is reached");
            if j + 1 == i {
                c += 1;
            } else if j == i {
                a += 1;
            } else {
                b += 1;
            }
        }
        builder.record(i as usize, c, a, b);
    }
    DistanceProfile {
        source: u,
        unreachable: g.vertex_count() - dist.reachable_count(),
        shell_sizes,
        c: builder.c,
        a: builder.a,
        b: builder.b,
    }
}

/// Profile restricted to shells `0..=depth`, exploring only the ball of
/// radius `depth + 1`; suited to very large graphs.
///
/// # Panics
///
/// If `u` is not a vertex of `g`.
pub fn local_profile(g: &Graph, u: usize, depth: usize) -> DistanceProfile {
    assert!(u < g.vertex_count(), "vertex {u} out of range");
    let mut dist: BTreeMap<usize, u32> = BTreeMap::new();
    dist.insert(u, 0);
    let mut frontier = alloc::vec![u];
    let mut shells = alloc::vec![alloc::vec![u]];
    for d in 1..=(depth as u32 + 1) {
        let mut next = Vec::new();
        for &x in &frontier {
            for y in g.neighbors(x) {
                if let alloc::collections::btree_map::Entry::Vacant(e) = dist.entry(y) {
                    e.insert(d);
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        shells.push(next.clone());
        frontier = next;
    }
    let levels = shells.len().min(depth + 1);
    let mut builder = ProfileBuilder::new(levels);
    for (i, shell) in shells.iter().enumerate().take(levels) {
        for &v in shell {
            let (mut c, mut a, mut b) = (0, 0, 0);
            for w in g.neighbors(v) {
                let j = dist[&w];
                if j + 1 == i as u32 {
                    c += 1;
                } else if j == i as u32 {
                    a += 1;
                } else {
                    b += 1;
                }
            }
            builder.record(i, c, a, b);
        }
    }
    DistanceProfile {
        source: u,
        shell_sizes: shells.iter().take(levels).map(Vec::len).collect(),
        c: builder.c,
        a: builder.a,
        b: builder.b,
        unreachable: 0,
    }
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    if let Some((_, connection)) = g.cayley_parts() {
        // x, x+s, x+s+t, x+t is a quadrangle whenever s != t.
        return match connection.len() {
            0 | 1 => None,
            _ if has_triangle(connection) => Some(3),
            _ => Some(4),
        };
    }
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = alloc::vec![UNREACHABLE; n];
    let mut parent = alloc::vec![usize::MAX; n];
    let mut touched = Vec::new();
    for s in 0..n {
        for &t in &touched {
            dist[t] = UNREACHABLE;
        }
        touched.clear();
        dist[s] = 0;
        touched.push(s);
        let mut queue = VecDeque::new();
        queue.push_back(s);
        'bfs: while let Some(x) = queue.pop_front() {
            if 2 * dist[x] as usize + 1 >= best {
                break;
            }
            for y in g.neighbors(x) {
                if dist[y] == UNREACHABLE {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min((dist[x] + dist[y]) as usize + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    (best != usize::MAX).then_some(best)
}

fn has_triangle(connection: &[u64]) -> bool {
    connection.iter().enumerate().any(|(k, &s)| {
        connection[k + 1..]
            .iter()
            .any(|&t| connection.binary_search(&(s ^ t)).is_ok())
    })
}

/// Why a graph fails to be a rectagraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RectagraphWitness {
    /// Some vertex is not reachable from vertex 0.
    Disconnected {
        unreached: usize,
    },
    Triangle(usize, usize, usize),
    /// `u` and `w` are at distance 2 with `count != 2` common neighbors.
    CommonNeighbors {
        u: usize,
        w: usize,
        count: usize,
    },
}

pub fn is_rectagraph(g: &Graph) -> bool {
    rectagraph_witness(g).is_none()
}

/// `None` when `g` is connected with `a_1 = 0` and `c_2 = 2`; otherwise the
/// first violation found.
pub fn rectagraph_witness(g: &Graph) -> Option<RectagraphWitness> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    if let Some((dim, connection)) = g.cayley_parts() {
        return cayley_rectagraph_witness(dim, connection);
    }
    let dist = bfs_distances(g, 0);
    if let Some(v) = (0..n).find(|&v| dist.get(v).is_none()) {
        return Some(RectagraphWitness::Disconnected { unreached: v });
    }
    let mut count = alloc::vec![0u32; n];
    let mut touched = Vec::new();
    for u in 0..n {
        for v in g.neighbors(u) {
            for w in g.neighbors(v) {
                if w == u {
                    continue;
                }
                if count[w] == 0 {
                    touched.push(w);
                }
                count[w] += 1;
            }
        }
        touched.sort_unstable();
        let mut found = None;
        for &w in &touched {
            if g.is_adjacent(u, w) {
                let v = g
                    .neighbors(u)
                    .find(|&v| g.is_adjacent(v, w))
                    .expect("a path u-v-w exists");
                found = Some(RectagraphWitness::Triangle(u, v, w));
            } else if count[w] != 2 {
                found = Some(RectagraphWitness::CommonNeighbors {
                    u,
                    w,
                    count: count[w] as usize,
                });
            }
            if found.is_some() {
                break;
            }
        }
        for &w in &touched {
            count[w] = 0;
        }
        touched.clear();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn cayley_rectagraph_witness(dim: usize, connection: &[u64]) -> Option<RectagraphWitness> {
    // Connected iff the connection set spans GF(2)^dim.
    let mut basis: Vec<u64> = Vec::new();
    for &s in connection {
        let mut x = s;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    if basis.len() < dim {
        // find a vertex outside the span
        let unreached = (0..(1usize << dim))
            .find(|&v| {
                let mut x = v as u64;
                for &b in &basis {
                    x = x.min(x ^ b);
                }
                x != 0
            })
            .expect("span is proper");
        return Some(RectagraphWitness::Disconnected { unreached });
    }
    // Paths 0 - s - s+t; translations make vertex 0 representative.
    let mut ends: Vec<(u64, u64)> = Vec::new();
    for &s in connection {
        for &t in connection {
            if s != t {
                ends.push((s ^ t, s));
            }
        }
    }
    ends.sort_unstable();
    let mut k = 0;
    while k < ends.len() {
        let w = ends[k].0;
        let run = ends[k..].iter().take_while(|e| e.0 == w).count();
        if connection.binary_search(&w).is_ok() {
            return Some(RectagraphWitness::Triangle(
                0,
                ends[k].1 as usize,
                w as usize,
            ));
        }
        if run != 2 {
            return Some(RectagraphWitness::CommonNeighbors {
                u: 0,
                w: w as usize,
                count: run,
            });
        }
        k += run;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::LinearCode;
    use crate::graph::families::{complete, coset_graph, hypercube, petersen, triangular};

    #[test]
    fn cube_shells_are_binomial() {
        let q6 = hypercube(6).unwrap();
        let d = bfs_distances(&q6, 0);
        assert_eq!(d.shell_sizes(), [1, 6, 15, 20, 15, 6, 1]);
        let p = distance_profile(&q6, 0);
        assert_eq!(
            p.intersection_array(),
            Some((alloc::vec![6, 5, 4, 3, 2, 1], alloc::vec![1, 2, 3, 4, 5, 6]))
        );
        let local = local_profile(&q6, 0, 2);
        assert_eq!(local.shell_sizes, [1, 6, 15]);
        assert_eq!(local.c, p.c[..3]);
        assert_eq!(local.b, p.b[..3]);
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&hypercube(3).unwrap()), Some(4));
        assert_eq!(girth(&triangular(5).unwrap()), Some(3));
        assert_eq!(girth(&complete(2).unwrap()), None);
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(
            girth(&hypercube(3).unwrap().to_explicit(8).unwrap()),
            Some(4)
        );
    }

    #[test]
    fn rectagraph_checks() {
        for n in 2..=6 {
            let q = hypercube(n).unwrap();
            assert!(is_rectagraph(&q));
            assert!(is_rectagraph(&q.to_explicit(64).unwrap()));
        }
        let k4 = complete(4).unwrap();
        assert!(matches!(
            rectagraph_witness(&k4),
            Some(RectagraphWitness::Triangle(..))
        ));
        assert!(matches!(
            rectagraph_witness(&petersen()),
            Some(RectagraphWitness::CommonNeighbors { count: 1, .. })
        ));
        let folded = coset_graph(&LinearCode::repetition_code(5).unwrap()).unwrap();
        assert!(is_rectagraph(&folded));
        let disconnected = crate::graph::Graph::cayley(3, &[1, 2]).unwrap();
        assert!(matches!(
            rectagraph_witness(&disconnected),
            Some(RectagraphWitness::Disconnected { unreached: 4 })
        ));
    }
}
