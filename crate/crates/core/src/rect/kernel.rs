use alloc::vec::Vec;

use super::covering::{build_covering, build_covering_sorted, Adjacency, CoveringMap};
use crate::error::{Error, Result};
use crate::gf2::{coord_bit, LinearCode, MAX_COSET_CODIM};
use crate::graph::{coset_graph, Graph};
use crate::perm::Permutation;

/// How the covering looks from a fibre element `y`: `sigma` sends `i` to the
/// coordinate `k` with `image_of(y + e_k) = image_of(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub fibre_element: u64,
    pub sigma: Permutation,
}

/// The fibre over the base and what it says about the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub n: usize,
    pub target_vertices: usize,
    /// Cube vertices over the base, in increasing order.
    pub fibre: Vec<u64>,
    pub linear: bool,
    /// The fibre as a code, when it is a subspace.
    pub code: Option<LinearCode>,
    /// When linear: the target vertex of each coset, by syndrome index, a
    /// verified isomorphism from the coset graph onto the target.
    pub coset_map: Option<Vec<u32>>,
    /// When not linear: one twist per fibre element.
    pub twists: Vec<Twist>,
}

impl KernelReport {
    pub fn fibre_size(&self) -> usize {
        self.fibre.len()
    }
}

/// Reads off the fibre over the base of a verified covering.
///
/// The fibre contains `0`, so it is a subspace exactly when its span has
/// the same size. In that case the map `x + C -> image_of(x)` is checked to
/// be an isomorphism from `Γ(C)` onto the target, edge by edge.
pub fn kernel_report(cov: &CoveringMap) -> Result<KernelReport> {
    let n = cov.n();
    let base = cov.base();
    let fibre = cov.fibre(base);
    let target = cov.target();
    let span = LinearCode::from_words(n, fibre.iter().copied());
    let linear =
        (span.dimension() as u32) < usize::BITS && 1usize << span.dimension() == fibre.len();
    let mut report = KernelReport {
        n,
        target_vertices: target.vertex_count(),
        fibre,
        linear,
        code: None,
        coset_map: None,
        twists: Vec::new(),
    };
    if linear {
        report.coset_map = Some(coset_isomorphism(cov, &span)?);
        report.code = Some(span);
    } else {
        report.twists = report
            .fibre
            .iter()
            .map(|&y| twist(cov, y))
            .collect::<Result<Vec<_>>>()?;
    }
    Ok(report)
}

fn coset_isomorphism(cov: &CoveringMap, code: &LinearCode) -> Result<Vec<u32>> {
    let target = cov.target();
    let codim = code.codimension();
    if codim > MAX_COSET_CODIM {
        return Err(Error::QuotientTooLarge {
            codimension: codim,
            max: MAX_COSET_CODIM,
        });
    }
    let size = 1usize << codim;
    if size != target.vertex_count() {
        return Err(Error::Inconsistent { cube_vertex: 0 });
    }
    let quotient = coset_graph(code)?;
    let map: Vec<u32> = (0..size as u64)
        .map(|s| cov.image_of(code.coset_word(s)) as u32)
        .collect();
    let mut hit = alloc::vec![false; size];
    for (s, &v) in map.iter().enumerate() {
        if core::mem::replace(&mut hit[v as usize], true) {
            return Err(Error::Inconsistent {
                cube_vertex: code.coset_word(s as u64),
            });
        }
    }
    if quotient.edge_count() != target.edge_count() {
        return Err(Error::Inconsistent { cube_vertex: 0 });
    }
    let adjacent = Adjacency::new(target);
    for s in 0..size {
        for t in quotient.neighbors(s) {
            if t > s && !adjacent.test(map[s] as usize, map[t] as usize) {
                return Err(Error::Inconsistent {
                    cube_vertex: code.coset_word(s as u64),
                });
            }
        }
    }
    Ok(map)
}

fn twist(cov: &CoveringMap, y: u64) -> Result<Twist> {
    let n = cov.n();
    let mut images = alloc::vec![u32::MAX; n];
    for k in 0..n {
        let w = cov.image_of(y ^ coord_bit(n, k));
        let i = cov
            .neighbor_order()
            .iter()
            .position(|&u| u == w)
            .ok_or(Error::Inconsistent { cube_vertex: y })?;
        images[i] = k as u32;
    }
    Ok(Twist {
        fibre_element: y,
        sigma: Permutation::from_images(images)?,
    })
}

/// The kernel code of `target` seen from `base`.
///
/// With `neighbor_order` the unit vectors go to the given neighbors;
/// otherwise to the neighbors in increasing order. For a coset graph and
/// [`coset_neighbor_order`](super::coset_neighbor_order) this returns the
/// defining code itself.
pub fn reconstruct_code(
    target: &Graph,
    base: usize,
    neighbor_order: Option<&[usize]>,
) -> Result<LinearCode> {
    let cov = match neighbor_order {
        Some(order) => build_covering(target, base, order)?,
        None => build_covering_sorted(target, base)?,
    };
    kernel_report(&cov)?.code.ok_or(Error::NonLinearKernel)
}

/// The kernel code is invariant under every coordinate permutation in
/// `h_gens` and does not contain the even-weight space.
pub fn kernel_invariance_check(report: &KernelReport, h_gens: &[Permutation]) -> Result<bool> {
    let code = report.code.as_ref().ok_or(Error::NonLinearKernel)?;
    for h in h_gens {
        if !code.is_automorphism(h)? {
            return Ok(false);
        }
    }
    Ok(!code.contains_even_weight_space())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{golay23_even, golay24};
    use crate::graph::hypercube;
    use crate::perm::registry::{m24_gens, s_n_gens};
    use crate::rect::coset_neighbor_order;

    #[test]
    fn golay_round_trip() {
        for code in [golay24(), golay23_even()] {
            let g = coset_graph(&code).unwrap();
            let order = coset_neighbor_order(&code);
            let got = reconstruct_code(&g, 0, Some(&order)).unwrap();
            assert_eq!(got, code);
        }
    }

    #[test]
    fn cube_kernel_is_zero() {
        let q = hypercube(5).unwrap();
        let cov = build_covering_sorted(&q, 0).unwrap();
        let report = kernel_report(&cov).unwrap();
        assert!(report.linear);
        assert_eq!(report.fibre, [0]);
        assert_eq!(report.code.as_ref().unwrap().dimension(), 0);
        assert!(kernel_invariance_check(&report, &s_n_gens(5).unwrap()).unwrap());
    }

    #[test]
    fn golay_kernel_is_invariant() {
        let code = golay24();
        let g = coset_graph(&code).unwrap();
        let cov = build_covering(&g, 0, &coset_neighbor_order(&code)).unwrap();
        let report = kernel_report(&cov).unwrap();
        assert_eq!(report.fibre_size() * report.target_vertices, 1 << 24);
        assert!(kernel_invariance_check(&report, &m24_gens().unwrap()).unwrap());
    }
}
