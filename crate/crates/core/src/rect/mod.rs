//! Hypercube coverings of rectagraphs, kernel codes, the bipartite
//! rectagraph over a locally triangular graph, and local rank 3 checks.

mod covering;
mod kernel;
mod local;
mod over;

pub use covering::{
    build_covering, build_covering_sorted, coset_neighbor_order, CoveringMap, MAX_COVER_DIM,
};
pub use kernel::{kernel_invariance_check, kernel_report, reconstruct_code, KernelReport, Twist};
pub use local::{
    four_homogeneous_local_check, locally_rank3_check, two_arc_orbit_check, LocalOrbitData,
    LocalRank3Certificate, TwoArcOrbits, VertexGroup,
};
pub use over::{grand_cliques, rectagraph_over};

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{is_rectagraph, Graph};

/// Reusable distance scratch for depth-limited searches.
pub(crate) struct Ball {
    dist: Vec<u8>,
    touched: Vec<usize>,
}

impl Ball {
    pub(crate) fn new(n: usize) -> Self {
        Ball {
            dist: alloc::vec![u8::MAX; n],
            touched: Vec::new(),
        }
    }

    /// Shells `0..=depth` around `u`, each in discovery order.
    pub(crate) fn explore(&mut self, g: &Graph, u: usize, depth: usize) -> Vec<Vec<usize>> {
        for &t in &self.touched {
            self.dist[t] = u8::MAX;
        }
        self.touched.clear();
        self.dist[u] = 0;
        self.touched.push(u);
        let mut shells = alloc::vec![alloc::vec![u]];
        for d in 1..=depth {
            let mut next = Vec::new();
            for &x in &shells[d - 1] {
                for y in g.neighbors(x) {
                    if self.dist[y] == u8::MAX {
                        self.dist[y] = d as u8;
                        self.touched.push(y);
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            shells.push(next);
        }
        shells
    }

    /// Distance from the last explored centre, if within the explored depth.
    pub(crate) fn dist(&self, v: usize) -> Option<u8> {
        match self.dist[v] {
            u8::MAX => None,
            d => Some(d),
        }
    }
}

/// `a_2(u) = 0` and `c_3(u) = 3`, seen from `u`.
pub(crate) fn a2_c3_hold(g: &Graph, u: usize, ball: &mut Ball) -> core::result::Result<(), String> {
    let shells = ball.explore(g, u, 3);
    if let Some(shell) = shells.get(2) {
        for &v in shell {
            if g.neighbors(v).any(|w| ball.dist(w) == Some(2)) {
                return Err(alloc::format!("a_2 != 0 at vertex {v} from {u}"));
            }
        }
    }
    if let Some(shell) = shells.get(3) {
        for &v in shell {
            let c = g.neighbors(v).filter(|&w| ball.dist(w) == Some(2)).count();
            if c != 3 {
                return Err(alloc::format!("c_3 = {c} at vertex {v} from {u}"));
            }
        }
    }
    Ok(())
}

/// The hypotheses of the covering construction at `base`.
pub(crate) fn check_rect_hypotheses(g: &Graph, base: usize) -> Result<()> {
    g.check_vertex(base)?;
    if !is_rectagraph(g) {
        return Err(Error::HypothesesFail("not a rectagraph".into()));
    }
    let mut ball = Ball::new(g.vertex_count());
    a2_c3_hold(g, base, &mut ball).map_err(Error::HypothesesFail)
}
