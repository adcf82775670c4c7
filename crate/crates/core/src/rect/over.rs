use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{a2_c3_hold, Ball};
use crate::error::{Error, Result};
use crate::graph::{
    bipartition, hypercube, induced_neighborhood, is_locally_triangular, is_rectagraph,
    recognize_triangular, Graph,
};

/// The grand cliques of a locally `T_n` graph: for each vertex `u` and each
/// point `p` of the triangular structure on `Γ(u)`, the clique `u` together
/// with the star of `p`. Returns `n` and the cliques, each sorted, in
/// increasing order.
pub fn grand_cliques(g: &Graph) -> Result<(usize, Vec<Vec<usize>>)> {
    let n = is_locally_triangular(g)?.ok_or(Error::NotLocallyTriangular)?;
    let mut cliques = BTreeSet::new();
    let at_zero = if g.is_cayley() {
        Some(stars_at(g, 0, n)?)
    } else {
        None
    };
    for u in 0..g.vertex_count() {
        match &at_zero {
            // translation by u is an automorphism
            Some(stars) => {
                for star in stars {
                    let mut c: Vec<usize> = star.iter().map(|&v| v ^ u).collect();
                    c.sort_unstable();
                    cliques.insert(c);
                }
            }
            None => {
                for c in stars_at(g, u, n)? {
                    cliques.insert(c);
                }
            }
        }
    }
    Ok((n, cliques.into_iter().collect()))
}

fn stars_at(g: &Graph, u: usize, n: usize) -> Result<Vec<Vec<usize>>> {
    let local = induced_neighborhood(g, u)?;
    let labeling = recognize_triangular(&local.graph).ok_or(Error::NotLocallyTriangular)?;
    if labeling.n != n {
        return Err(Error::NotLocallyTriangular);
    }
    Ok((0..n)
        .map(|p| {
            let mut c: Vec<usize> = labeling
                .star(p)
                .into_iter()
                .map(|v| local.parent[v])
                .collect();
            c.push(u);
            c.sort_unstable();
            c
        })
        .collect())
}

/// The bipartite graph `Π` with parts `V Γ` and the grand cliques of the
/// locally `T_n` graph `Γ`, a vertex adjacent to the cliques containing it.
///
/// Vertex `u` of `Γ` keeps index `u`; the `k`-th clique (in the order of
/// [`grand_cliques`]) gets index `|V Γ| + k`. For `n <= 4` this is `Q_n`.
/// The result is checked to be a bipartite rectagraph with `a_2 = 0` and
/// `c_3 = 3` at every vertex.
pub fn rectagraph_over(g: &Graph) -> Result<Graph> {
    let (n, cliques) = grand_cliques(g)?;
    if n <= 4 {
        return hypercube(n);
    }
    let order = g.vertex_count();
    let mut adj: Vec<Vec<u32>> = alloc::vec![Vec::with_capacity(n); order];
    for (k, clique) in cliques.iter().enumerate() {
        for &u in clique {
            adj[u].push((order + k) as u32);
        }
    }
    adj.extend(
        cliques
            .iter()
            .map(|c| c.iter().map(|&u| u as u32).collect::<Vec<u32>>()),
    );
    let pi = Graph::from_adjacency(adj)?;
    if bipartition(&pi).is_none() || !is_rectagraph(&pi) {
        return Err(Error::HypothesesFail(
            "clique graph is not a bipartite rectagraph".into(),
        ));
    }
    let mut ball = Ball::new(pi.vertex_count());
    for u in 0..pi.vertex_count() {
        a2_c3_hold(&pi, u, &mut ball).map_err(Error::HypothesesFail)?;
    }
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, halved_graphs, isomorphic};

    #[test]
    fn halved_cube_gives_back_the_cube() {
        let q = hypercube(6).unwrap();
        let half = &halved_graphs(&q).unwrap()[0];
        let (n, cliques) = grand_cliques(half).unwrap();
        assert_eq!((n, cliques.len()), (6, 32));
        let pi = rectagraph_over(half).unwrap();
        assert!(isomorphic(&pi, &q).unwrap().is_some());
        let explicit = half.to_explicit(32).unwrap();
        assert_eq!(rectagraph_over(&explicit).unwrap(), pi);
    }

    #[test]
    fn small_and_failing_inputs() {
        assert_eq!(
            rectagraph_over(&complete(4).unwrap()).unwrap(),
            hypercube(3).unwrap()
        );
        assert_eq!(
            rectagraph_over(&hypercube(3).unwrap()),
            Err(Error::NotLocallyTriangular)
        );
    }
}
