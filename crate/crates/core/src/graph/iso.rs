use alloc::vec::Vec;

use super::Graph;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Largest graph accepted by [`isomorphic`].
pub const MAX_ISO_VERTICES: usize = 4096;
/// Largest graph accepted by [`brute_force_automorphisms`].
pub const MAX_BRUTE_FORCE_VERTICES: usize = 10;

/// Both graphs side by side: vertices of `h` are shifted by `|V g|`.
struct Union {
    adj: Vec<Vec<u32>>,
    split: usize,
}

/// An adjacency-preserving bijection `mapping[v]` from `g` onto `h`, found
/// by colour refinement and individualization, verified before it is
/// returned.
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    for x in [g, h] {
        if x.vertex_count() > MAX_ISO_VERTICES {
            return Err(Error::TooLarge {
                size: x.vertex_count(),
                max: MAX_ISO_VERTICES,
            });
        }
    }
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut adj = g.adjacency();
    adj.extend(
        h.adjacency()
            .into_iter()
            .map(|l| l.into_iter().map(|w| w + n as u32).collect()),
    );
    let union = Union { adj, split: n };
    let colors: Vec<u32> = union.adj.iter().map(|l| l.len() as u32).collect();
    let Some(colors) = refine(&union, colors) else {
        return Ok(None);
    };
    let Some(mapping) = search(&union, colors) else {
        return Ok(None);
    };
    if !preserves(g, h, &mapping) {
        return Ok(None);
    }
    Ok(Some(mapping))
}

fn preserves(g: &Graph, h: &Graph, mapping: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut inverse = alloc::vec![usize::MAX; n];
    for (v, &w) in mapping.iter().enumerate() {
        if w >= n || inverse[w] != usize::MAX {
            return false;
        }
        inverse[w] = v;
    }
    g.edges()
        .all(|(u, v)| h.is_adjacent(mapping[u], mapping[v]))
        && h.edges()
            .all(|(u, v)| g.is_adjacent(inverse[u], inverse[v]))
}

/// Stable colouring of the union, canonical in the colours given; `None` if
/// some colour class is unbalanced between the two sides.
fn refine(u: &Union, mut colors: Vec<u32>) -> Option<Vec<u32>> {
    let total = colors.len();
    let mut classes = distinct(&colors);
    loop {
        let mut sigs: Vec<(Vec<u32>, u32)> = (0..total)
            .map(|v| {
                let mut s = Vec::with_capacity(u.adj[v].len() + 1);
                s.push(colors[v]);
                let start = s.len();
                s.extend(u.adj[v].iter().map(|&w| colors[w as usize]));
                s[start..].sort_unstable();
                (s, v as u32)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = alloc::vec![0u32; total];
        let mut id = 0u32;
        for k in 0..total {
            if k > 0 && sigs[k].0 != sigs[k - 1].0 {
                id += 1;
            }
            next[sigs[k].1 as usize] = id;
        }
        colors = next;
        let now = id as usize + 1;
        if !balanced(u, &colors, now) {
            return None;
        }
        if now == classes {
            return Some(colors);
        }
        classes = now;
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn balanced(u: &Union, colors: &[u32], classes: usize) -> bool {
    let mut count = alloc::vec![0i64; classes];
    for (v, &c) in colors.iter().enumerate() {
        count[c as usize] += if v < u.split { 1 } else { -1 };
    }
    count.iter().all(|&c| c == 0)
}

fn search(u: &Union, colors: Vec<u32>) -> Option<Vec<usize>> {
    let n = u.split;
    let mut size = alloc::vec![0usize; colors.len()];
    for &c in &colors[..n] {
        size[c as usize] += 1;
    }
    // smallest nontrivial cell
    let cell = (0..n)
        .map(|v| colors[v])
        .filter(|&c| size[c as usize] > 1)
        .min_by_key(|&c| (size[c as usize], c));
    let Some(cell) = cell else {
        let mut by_color = alloc::vec![0usize; colors.len()];
        for w in n..2 * n {
            by_color[colors[w] as usize] = w - n;
        }
        return Some((0..n).map(|v| by_color[colors[v] as usize]).collect());
    };
    let v = (0..n)
        .find(|&v| colors[v] == cell)
        .expect("cell is nonempty");
    let fresh = colors.iter().max().map_or(0, |&m| m + 1);
    for w in (n..2 * n).filter(|&w| colors[w] == cell) {
        let mut c = colors.clone();
        c[v] = fresh;
        c[w] = fresh;
        if let Some(c) = refine(u, c) {
            if let Some(m) = search(u, c) {
                return Some(m);
            }
        }
    }
    None
}

/// The full automorphism group of a graph on at most
/// [`MAX_BRUTE_FORCE_VERTICES`] vertices, by exhaustive search.
pub fn brute_force_automorphisms(g: &Graph) -> Result<PermGroup> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::TooLarge {
            size: n,
            max: MAX_BRUTE_FORCE_VERTICES,
        });
    }
    let mut group = PermGroup::trivial(n);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut image = Vec::with_capacity(n);
    let mut used = alloc::vec![false; n];
    extend(g, &mut image, &mut used, &mut |images| {
        let p = Permutation::from_images(images.iter().map(|&x| x as u32).collect())
            .expect("a bijection");
        if !group.contains(&p) {
            gens.push(p);
            group = PermGroup::new(n, &gens).expect("degree matches");
        }
    });
    Ok(group)
}

fn extend(g: &Graph, image: &mut Vec<usize>, used: &mut [bool], found: &mut impl FnMut(&[usize])) {
    let v = image.len();
    if v == used.len() {
        found(image);
        return;
    }
    for w in 0..used.len() {
        if used[w] || g.degree(v) != g.degree(w) {
            continue;
        }
        if (0..v).any(|u| g.is_adjacent(u, v) != g.is_adjacent(image[u], w)) {
            continue;
        }
        used[w] = true;
        image.push(w);
        extend(g, image, used, found);
        image.pop();
        used[w] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::derived::complement;
    use crate::graph::families::{
        complete, complete_multipartite, hypercube, petersen, triangular,
    };

    #[test]
    fn petersen_is_complement_of_t5() {
        let t5 = triangular(5).unwrap();
        let p = petersen();
        let back = complement(&p, 10).unwrap();
        assert!(isomorphic(&t5, &back).unwrap().is_some());
        assert!(isomorphic(&t5, &p).unwrap().is_none());
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let q3 = hypercube(3).unwrap();
        let k = complete_multipartite(4, 2).unwrap();
        assert!(isomorphic(&q3, &k).unwrap().is_none());
        assert!(isomorphic(&q3, &q3).unwrap().is_some());
    }

    #[test]
    fn small_automorphism_groups() {
        assert_eq!(
            brute_force_automorphisms(&complete(4).unwrap())
                .unwrap()
                .order(),
            24
        );
        let k = complete_multipartite(4, 2).unwrap();
        assert_eq!(brute_force_automorphisms(&k).unwrap().order(), 384);
        assert_eq!(brute_force_automorphisms(&petersen()).unwrap().order(), 120);
        assert!(brute_force_automorphisms(&triangular(5).unwrap()).is_ok());
        assert!(brute_force_automorphisms(&hypercube(4).unwrap()).is_err());
    }
}
