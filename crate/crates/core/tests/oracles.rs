//! Library results against brute force.

use std::collections::VecDeque;

use proptest::prelude::*;

use rectagraph_core::gf2::{
    golay23, golay23_even, golay24, BitVector, CosetSpace, LinearCode, GOLAY24_ROWS,
};
use rectagraph_core::graph::{
    bfs_distances, brute_force_automorphisms, complete_multipartite, hypercube, petersen,
    triangular, Graph,
};
use rectagraph_core::perm::NamedGroup;

fn enumerate(rows: &[u64]) -> Vec<u64> {
    let mut words = vec![0u64];
    for &r in rows {
        let more: Vec<u64> = words.iter().map(|w| w ^ r).collect();
        words.extend(more);
    }
    words
}

fn weights(len: usize, words: &[u64]) -> Vec<u64> {
    let mut out = vec![0; len + 1];
    for w in words {
        out[w.count_ones() as usize] += 1;
    }
    out
}

#[test]
fn golay_weight_distributions() {
    let rows: Vec<u64> = GOLAY24_ROWS.iter().map(|&r| r as u64).collect();
    let raw = enumerate(&rows);
    let w24 = weights(24, &raw);
    assert_eq!(w24[8], 759);
    assert_eq!(w24[12], 2576);
    assert_eq!(golay24().weight_distribution().unwrap(), w24);

    for code in [golay23(), golay23_even()] {
        let words = enumerate(code.basis_words());
        let w = weights(23, &words);
        assert_eq!(code.weight_distribution().unwrap(), w);
        assert_eq!(code.min_distance().unwrap(), (1..=23).find(|&i| w[i] > 0));
    }
    assert_eq!(weights(23, &enumerate(golay23().basis_words()))[7], 253);
}

#[test]
fn golay_covering_radii() {
    // the radius is the largest syndrome-class minimum weight
    for (code, radius) in [(golay24(), 4), (golay23(), 3)] {
        let n = code.length();
        let mut best = vec![usize::MAX; 1 << code.codimension()];
        for x in 0u64..1 << n {
            if x.count_ones() > 4 {
                continue;
            }
            let s = code.syndrome_word(x) as usize;
            best[s] = best[s].min(x.count_ones() as usize);
        }
        assert_eq!(best.iter().copied().max(), Some(radius));
        assert_eq!(CosetSpace::new(&code).unwrap().covering_radius(), radius);
    }
}

#[test]
fn named_group_orders() {
    for (h, order) in [
        (NamedGroup::M11, 7920u128),
        (NamedGroup::M12, 95040),
        (NamedGroup::M23, 10200960),
        (NamedGroup::M24, 244823040),
        (NamedGroup::PGammaL28, 1512),
        (NamedGroup::Alternating(8), 20160),
    ] {
        assert_eq!(h.verified().unwrap().order(), order, "{}", h.name());
    }
}

#[test]
fn golay_automorphisms() {
    let m24 = NamedGroup::M24.generators().unwrap();
    assert!(m24.iter().all(|g| golay24().is_automorphism(g).unwrap()));
    let m23 = NamedGroup::M23.generators().unwrap();
    assert!(m23.iter().all(|g| golay23().is_automorphism(g).unwrap()));
}

#[test]
fn automorphism_group_orders() {
    for (g, order) in [
        (hypercube(3).unwrap(), 48u128),
        (petersen(), 120),
        (triangular(5).unwrap(), 120),
        (complete_multipartite(4, 2).unwrap(), 384),
        (complete_multipartite(3, 2).unwrap(), 48),
    ] {
        assert_eq!(brute_force_automorphisms(&g).unwrap().order(), order);
    }
}

fn bfs_oracle(adj: &[Vec<usize>], u: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    dist[u] = Some(0);
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y].is_none() {
                dist[y] = Some(dist[x].unwrap() + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

fn random_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=20).prop_flat_map(|n| {
        let edges = prop::collection::btree_set((0..n, 0..n), 0..=3 * n)
            .prop_map(|set| set.into_iter().filter(|(a, b)| a < b).collect::<Vec<_>>());
        (Just(n), edges)
    })
}

proptest! {
    #[test]
    fn bfs_matches_oracle((n, edges) in random_graph(), start in any::<prop::sample::Index>()) {
        let g = Graph::from_edges(n, &edges).unwrap();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let u = start.index(n);
        let dist = bfs_distances(&g, u);
        let oracle = bfs_oracle(&adj, u);
        for (v, &d) in oracle.iter().enumerate() {
            prop_assert_eq!(dist.get(v), d);
        }
    }

    #[test]
    fn cayley_adjacency_is_translation((dim, conn) in (2usize..=8).prop_flat_map(|d| {
        (Just(d), prop::collection::btree_set(1u64..1 << d, 1..=4))
    })) {
        let conn: Vec<u64> = conn.into_iter().collect();
        let g = Graph::cayley(dim, &conn).unwrap();
        for x in 0..1usize << dim {
            for y in 0..1usize << dim {
                prop_assert_eq!(g.is_adjacent(x, y), conn.contains(&((x ^ y) as u64)));
            }
        }
    }

    #[test]
    fn syndromes_classify_cosets(n in 2usize..=12, rows in prop::collection::vec(any::<u64>(), 0..=4), x in any::<u64>(), y in any::<u64>()) {
        let mask = (1u64 << n) - 1;
        let rows: Vec<BitVector> = rows.iter().map(|&r| BitVector::new(n, r & mask).unwrap()).collect();
        let code = LinearCode::from_rows(n, &rows).unwrap();
        let (x, y) = (x & mask, y & mask);
        let brute = enumerate(code.basis_words()).contains(&(x ^ y));
        prop_assert_eq!(code.syndrome_word(x) == code.syndrome_word(y), brute);
        prop_assert_eq!(code.syndrome_word(code.coset_word(code.syndrome_word(x))), code.syndrome_word(x));
    }
}
