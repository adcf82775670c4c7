use proptest::prelude::*;

use rectagraph_core::gf2::{BitVector, LinearCode};
use rectagraph_core::graph::{
    bipartite_double, connected_components, distance_k_graph, distance_profile, halved_graphs,
    hypercube, Graph,
};
use rectagraph_core::perm::{PermGroup, Permutation};

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn gens() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (1usize..=9).prop_flat_map(|n| (Just(n), prop::collection::vec(perm(n), 0..=3)))
}

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=16).prop_flat_map(|n| {
        prop::collection::btree_set((0..n, 0..n), 0..=3 * n).prop_map(move |set| {
            let edges: Vec<_> = set.into_iter().filter(|(a, b)| a < b).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn permutation_laws(p in perm(12), q in perm(12)) {
        prop_assert!(p.then(&p.inverse()).is_identity());
        prop_assert_eq!(p.then(&q).inverse(), q.inverse().then(&p.inverse()));
        prop_assert!(p.pow(p.order() as u64).is_identity());
        let cycle_lengths: usize = p.cycles().iter().map(|c| c.len()).sum();
        prop_assert!(cycle_lengths <= 12);
    }

    #[test]
    fn orbit_stabilizer((n, gens) in gens()) {
        let g = PermGroup::new(n, &gens).unwrap();
        let orbits = g.orbits();
        prop_assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), n);
        for orbit in &orbits {
            let stab = g.stabilizer(orbit[0]).unwrap();
            prop_assert_eq!(orbit.len() as u128 * stab.order(), g.order());
        }
        for x in &gens {
            prop_assert!(g.contains(x));
        }
    }

    #[test]
    fn intersection_numbers_sum_to_valency(g in graph()) {
        let p = distance_profile(&g, 0);
        if let Some(k) = g.regular_degree() {
            for i in 0..p.shell_sizes.len() {
                if let (Some(c), Some(a), Some(b)) = (p.c_value(i), p.a_value(i), p.b_value(i)) {
                    prop_assert_eq!((c + a + b) as usize, k);
                }
            }
        }
        prop_assert_eq!(p.shell_sizes.iter().sum::<usize>() + p.unreachable, g.vertex_count());
    }

    #[test]
    fn rref_is_canonical(n in 1usize..=20, rows in prop::collection::vec(any::<u64>(), 0..=6), extra in any::<u64>()) {
        let mask = (1u64 << n) - 1;
        let vecs: Vec<BitVector> = rows.iter().map(|&r| BitVector::new(n, r & mask).unwrap()).collect();
        let a = LinearCode::from_rows(n, &vecs).unwrap();
        // adding a word already in the span changes nothing
        let mut more = vecs.clone();
        let inside = rows.iter().enumerate().filter(|(i, _)| extra >> (i % 64) & 1 == 1).fold(0, |w, (_, &r)| w ^ (r & mask));
        more.push(BitVector::new(n, inside).unwrap());
        more.reverse();
        let b = LinearCode::from_rows(n, &more).unwrap();
        prop_assert_eq!(a.basis_words(), b.basis_words());
        prop_assert_eq!(a.dimension() + a.codimension(), n);
        for h in a.parity_check_words() {
            for &w in a.basis_words() {
                prop_assert_eq!((h & w).count_ones() % 2, 0);
            }
        }
    }

    #[test]
    fn distance_one_graph_is_the_graph(g in graph()) {
        let d1 = distance_k_graph(&g, 1).unwrap();
        prop_assert_eq!(d1.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn bipartite_double_doubles(g in graph()) {
        let d = bipartite_double(&g).unwrap();
        prop_assert_eq!(d.vertex_count(), 2 * g.vertex_count());
        prop_assert_eq!(d.edge_count(), 2 * g.edge_count());
        prop_assert!(connected_components(&d).len() >= connected_components(&g).len());
    }
}

#[test]
fn halved_cubes() {
    for n in 2..=10 {
        let halves = halved_graphs(&hypercube(n).unwrap()).unwrap();
        assert_eq!(halves.len(), 2);
        for h in &halves {
            assert_eq!(h.vertex_count(), 1 << (n - 1));
            assert_eq!(h.regular_degree(), Some(n * (n - 1) / 2));
        }
    }
}
