use rectagraph_core::gf2::{golay23_even, golay24, LinearCode};
use rectagraph_core::graph::{
    coset_graph, halved_graphs, hypercube, is_locally_triangular, isomorphic, recognize_triangular,
    triangular, Graph,
};
use rectagraph_core::perm::Permutation;
use rectagraph_core::rect::rectagraph_over;

fn round_trip(code: &LinearCode) {
    let g = coset_graph(code).unwrap();
    let half = halved_graphs(&g).unwrap().swap_remove(0);
    let pi = rectagraph_over(&half).unwrap();
    assert_eq!(pi.vertex_count(), g.vertex_count());
    assert!(isomorphic(&pi, &g).unwrap().is_some());
}

#[test]
fn golay_codes_come_back() {
    round_trip(&golay24());
    round_trip(&golay23_even());
}

#[test]
fn small_codes_come_back() {
    for n in 5..=8 {
        round_trip(&LinearCode::zero_code(n).unwrap());
    }
    for n in [8, 10] {
        round_trip(&LinearCode::repetition_code(n).unwrap());
    }
}

#[test]
fn halved_cubes_are_locally_triangular() {
    for n in 4..=10 {
        let half = halved_graphs(&hypercube(n).unwrap())
            .unwrap()
            .swap_remove(0);
        assert_eq!(is_locally_triangular(&half).unwrap(), Some(n), "n={n}");
    }
    assert_eq!(is_locally_triangular(&hypercube(4).unwrap()).unwrap(), None);
}

fn relabel(g: &Graph, sigma: &Permutation) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (sigma.image(u), sigma.image(v)))
        .collect();
    Graph::from_edges(g.vertex_count(), &edges).unwrap()
}

#[test]
fn triangular_graphs_are_recognized() {
    for n in 2..=24 {
        let t = triangular(n).unwrap();
        let m = t.vertex_count();
        // reverse the vertex order so labels are not read off the construction
        let sigma = Permutation::from_images((0..m as u32).rev().collect()).unwrap();
        let shuffled = relabel(&t, &sigma);
        let labeling = recognize_triangular(&shuffled).unwrap_or_else(|| panic!("T{n}"));
        assert_eq!(labeling.n, n);
    }
    assert!(recognize_triangular(&hypercube(3).unwrap()).is_none());
    // same order and valency as T_5, but not T_5
    let c = rectagraph_core::graph::petersen();
    assert!(recognize_triangular(&c).is_none());
}

#[test]
fn graphs_are_isomorphic_to_themselves() {
    for g in [
        hypercube(5).unwrap(),
        triangular(7).unwrap(),
        rectagraph_core::graph::petersen(),
    ] {
        let map = isomorphic(&g, &g).unwrap().unwrap();
        for (u, v) in g.edges() {
            assert!(g.is_adjacent(map[u], map[v]));
        }
    }
    assert!(
        isomorphic(&triangular(5).unwrap(), &rectagraph_core::graph::petersen())
            .unwrap()
            .is_none()
    );
}

#[test]
fn even_golay_coset_graph_is_the_double() {
    let perfect = coset_graph(&rectagraph_core::gf2::golay23()).unwrap();
    let double = rectagraph_core::graph::bipartite_double(&perfect).unwrap();
    let even = coset_graph(&golay23_even())
        .unwrap()
        .to_explicit(1 << 12)
        .unwrap();
    assert!(isomorphic(&double, &even).unwrap().is_some());
}
