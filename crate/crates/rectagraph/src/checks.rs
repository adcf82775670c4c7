//! The individual checks, each producing an [`Outcome`].
//!
//! A failed hypothesis inside the core (a graph that is not a rectagraph,
//! not locally triangular, and so on) is a FAIL; malformed input is an
//! error.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde_json::{json, Value};

use rectagraph_core::gf2::{CosetSpace, LinearCode, MAX_ENUMERATION_DIM};
use rectagraph_core::graph::{
    bipartition, girth, is_locally_triangular, isomorphic, rectagraph_witness, Graph,
};
use rectagraph_core::rect::{
    build_covering, build_covering_sorted, coset_neighbor_order, four_homogeneous_local_check,
    kernel_report, locally_rank3_check, two_arc_orbit_check, LocalRank3Certificate, VertexGroup,
};
use rectagraph_core::Error as CoreError;

use crate::error::Result;
use crate::formats::code_row;
use crate::report::Outcome;

/// Names accepted by `check`.
pub const CHECK_NAMES: &[&str] = &[
    "rectagraph",
    "locally-triangular",
    "locally-rank3",
    "two-arc-orbits",
    "four-homogeneous",
    "reconstruct-code",
    "iso",
    "code-info",
];

/// Core errors that answer the question in the negative.
fn is_negative(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::HypothesesFail(_)
            | CoreError::NotLocallyTriangular
            | CoreError::NonLinearKernel
            | CoreError::Inconsistent { .. }
            | CoreError::Disconnected
    )
}

/// Turns a negative core error into a FAIL outcome.
pub fn fail_on_negative(name: &str, r: std::result::Result<Outcome, CoreError>) -> Result<Outcome> {
    match r {
        Ok(o) => Ok(o),
        Err(e) if is_negative(&e) => {
            Ok(Outcome::new(name, false, json!({ "error": e.to_string() })))
        }
        Err(e) => Err(e.into()),
    }
}

/// Values of `a_2` and `c_3` seen from `u`, with a reusable distance array.
fn a2_c3_at(
    g: &Graph,
    u: usize,
    dist: &mut [u8],
    touched: &mut Vec<usize>,
) -> (BTreeSet<u32>, BTreeSet<u32>) {
    for &t in touched.iter() {
        dist[t] = u8::MAX;
    }
    touched.clear();
    dist[u] = 0;
    touched.push(u);
    let mut shells = vec![vec![u]];
    for d in 1..=3u8 {
        let mut next = Vec::new();
        for &x in &shells[d as usize - 1] {
            for y in g.neighbors(x) {
                if dist[y] == u8::MAX {
                    dist[y] = d;
                    touched.push(y);
                    next.push(y);
                }
            }
        }
        shells.push(next);
    }
    let count = |v: usize, d: u8| g.neighbors(v).filter(|&w| dist[w] == d).count() as u32;
    let a2 = shells[2].iter().map(|&v| count(v, 2)).collect();
    let c3 = shells[3].iter().map(|&v| count(v, 2)).collect();
    (a2, c3)
}

/// Rectagraph axioms, plus the values of `a_2` and `c_3` at every vertex
/// (at vertex 0 for Cayley graphs, where translations are automorphisms).
pub fn rectagraph(name: &str, g: &Graph) -> Outcome {
    let n = g.vertex_count();
    let witness = rectagraph_witness(g);
    let pass = witness.is_none();
    let vertices: Vec<usize> = if g.is_cayley() {
        vec![0]
    } else {
        (0..n).collect()
    };
    let (a2, c3) = vertices
        .par_iter()
        .map_init(
            || (vec![u8::MAX; n], Vec::new()),
            |(dist, touched), &u| a2_c3_at(g, u, dist, touched),
        )
        .reduce(
            || (BTreeSet::new(), BTreeSet::new()),
            |mut x, y| {
                x.0.extend(y.0);
                x.1.extend(y.1);
                x
            },
        );
    let details = json!({
        "vertices": n,
        "edges": g.edge_count(),
        "regular_degree": g.regular_degree(),
        "bipartite": bipartition_known(g),
        "rectagraph": pass,
        "witness": witness.map(|w| format!("{w:?}")),
        "vertices_checked": vertices.len(),
        "a2": a2,
        "c3": c3,
    });
    Outcome::new(name, pass, details)
}

fn bipartition_known(g: &Graph) -> Option<bool> {
    (g.vertex_count() <= 1 << 20).then(|| bipartition(g).is_some())
}

pub fn locally_triangular(name: &str, g: &Graph) -> Result<Outcome> {
    fail_on_negative(
        name,
        is_locally_triangular(g).map(|n| Outcome::new(name, n.is_some(), json!({ "local_n": n }))),
    )
}

fn order_string(x: u128) -> String {
    x.to_string()
}

pub fn certificate_json(cert: &LocalRank3Certificate) -> Value {
    let reps: Vec<Value> = cert
        .representatives
        .iter()
        .map(|r| {
            json!({
                "vertex": r.vertex,
                "stabilizer_order": order_string(r.stabilizer_order),
                "local_order": order_string(r.local_order),
                "orbits": r.orbit_sizes,
                "rank": r.rank,
                "suborbits_match": r.suborbits_match,
                "faithful": r.faithful,
                "two_arc_orbits": r.two_arcs.as_ref().map(|t| json!({
                    "triangle_arcs": t.triangle_arcs,
                    "geodesic_arcs": t.geodesic_arcs,
                    "triangle_orbits": t.triangle_orbits,
                    "geodesic_orbits": t.geodesic_orbits,
                })),
            })
        })
        .collect();
    json!({
        "accepted": cert.accepted,
        "girth": cert.girth,
        "representatives": reps,
    })
}

pub fn locally_rank3(name: &str, g: &Graph, group: &VertexGroup) -> Result<Outcome> {
    let cert = locally_rank3_check(g, group)?;
    Ok(Outcome::new(name, cert.accepted, certificate_json(&cert)))
}

pub fn two_arc_orbits(name: &str, g: &Graph, group: &VertexGroup) -> Result<Outcome> {
    fail_on_negative(
        name,
        two_arc_orbit_check(g, group)
            .map(|two| Outcome::new(name, two, json!({ "two_orbits": two }))),
    )
}

pub fn four_homogeneous(
    name: &str,
    g: &Graph,
    base: usize,
    group: &VertexGroup,
) -> Result<Outcome> {
    fail_on_negative(
        name,
        four_homogeneous_local_check(g, base, group).map(|ok| {
            Outcome::new(
                name,
                ok,
                json!({ "base": base, "degree": g.degree(base), "four_homogeneous": ok }),
            )
        }),
    )
}

pub fn code_json(code: &LinearCode) -> Value {
    let n = code.length();
    let rows: Vec<String> = code.basis_words().iter().map(|&w| code_row(n, w)).collect();
    json!({ "length": n, "dimension": code.dimension(), "rows": rows })
}

/// Reconstructs the kernel code of `g` at `base`. With `expect`, the unit
/// vectors go to the cosets of the unit vectors of `expect` (so `g` should
/// be the coset graph of `expect` as built) and the result must equal it.
pub fn reconstruct_code(
    name: &str,
    g: &Graph,
    base: usize,
    expect: Option<&LinearCode>,
) -> Result<(Outcome, Option<LinearCode>)> {
    let run = || -> std::result::Result<(Outcome, Option<LinearCode>), CoreError> {
        let cov = match expect {
            Some(code) => {
                let order: Vec<usize> = coset_neighbor_order(code)
                    .into_iter()
                    .map(|s| s ^ base)
                    .collect();
                if order
                    .iter()
                    .any(|&v| v >= g.vertex_count() || !g.is_adjacent(base, v))
                {
                    let details = json!({ "error": "the expected code does not match the neighbors of the base" });
                    return Ok((Outcome::new(name, false, details), None));
                }
                build_covering(g, base, &order)?
            }
            None => build_covering_sorted(g, base)?,
        };
        let report = kernel_report(&cov)?;
        let matches = expect.map(|c| report.code.as_ref() == Some(c));
        let pass = report.linear && matches != Some(false);
        let details = json!({
            "n": report.n,
            "fibre_size": report.fibre_size(),
            "linear": report.linear,
            "code": report.code.as_ref().map(code_json),
            "matches_expected": matches,
            "twists": report.twists.len(),
        });
        Ok((Outcome::new(name, pass, details), report.code))
    };
    match run() {
        Ok(x) => Ok(x),
        Err(e) if is_negative(&e) => Ok((
            Outcome::new(name, false, json!({ "error": e.to_string() })),
            None,
        )),
        Err(e) => Err(e.into()),
    }
}

pub fn iso(name: &str, g: &Graph, h: &Graph) -> Result<Outcome> {
    let mapping = isomorphic(g, h)?;
    let details = json!({
        "vertices": [g.vertex_count(), h.vertex_count()],
        "edges": [g.edge_count(), h.edge_count()],
        "isomorphic": mapping.is_some(),
        "mapping": mapping,
    });
    Ok(Outcome::new(name, mapping.is_some(), details))
}

pub fn code_info(name: &str, code: &LinearCode) -> Result<Outcome> {
    let n = code.length();
    let k = code.dimension();
    let enumerable = k <= MAX_ENUMERATION_DIM;
    let d = if enumerable {
        code.min_distance()?
    } else {
        None
    };
    let weights = if enumerable {
        Some(code.weight_distribution()?)
    } else {
        None
    };
    let covering_radius = if code.codimension() <= 20 {
        Some(CosetSpace::new(code)?.covering_radius())
    } else {
        None
    };
    let parameters = match d {
        Some(d) => format!("[{n},{k},{d}]"),
        None => format!("[{n},{k}]"),
    };
    let details = json!({
        "length": n,
        "dimension": k,
        "min_distance": d,
        "parameters": parameters,
        "even": code.is_even(),
        "contains_even_weight_space": code.contains_even_weight_space(),
        "weight_distribution": weights,
        "covering_radius": covering_radius,
        "code": code_json(code),
    });
    Ok(Outcome::new(name, true, details))
}

/// Distance-regularity data for a report: shell sizes and the intersection
/// array from `base`, when defined.
pub fn profile_json(g: &Graph, base: usize) -> Value {
    let p = rectagraph_core::graph::distance_profile(g, base);
    json!({
        "shell_sizes": p.shell_sizes,
        "diameter": p.diameter(),
        "intersection_array": p.intersection_array(),
        "girth": girth(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rectagraph_core::gf2::golay24;
    use rectagraph_core::graph::{coset_graph, hypercube, triangular};

    #[test]
    fn golay24_coset_graph_is_a_rectagraph() {
        let g = coset_graph(&golay24()).unwrap();
        let o = rectagraph("r", &g);
        assert!(o.pass);
        assert_eq!(o.details["a2"], json!([0]));
        assert_eq!(o.details["c3"], json!([3]));
        let explicit = g.to_explicit(4096).unwrap();
        let again = rectagraph("r", &explicit);
        assert_eq!(again.details["a2"], json!([0]));
        assert_eq!(again.details["vertices_checked"], json!(4096));
    }

    #[test]
    fn negative_answers_are_failures() {
        let t = triangular(5).unwrap();
        assert!(!rectagraph("r", &t).pass);
        let (o, code) = reconstruct_code("k", &t, 0, None).unwrap();
        assert!(!o.pass && code.is_none());
        assert!(locally_triangular("t", &hypercube(3).unwrap())
            .map(|o| !o.pass)
            .unwrap());
    }

    #[test]
    fn reconstruct_with_expected_code() {
        let c = golay24();
        let g = coset_graph(&c).unwrap();
        let (o, code) = reconstruct_code("k", &g, 0, Some(&c)).unwrap();
        assert!(o.pass);
        assert_eq!(code.unwrap(), c);
        assert_eq!(o.details["fibre_size"], json!(4096));
    }

    #[test]
    fn golay_code_info() {
        let o = code_info("c", &golay24()).unwrap();
        assert_eq!(o.details["parameters"], json!("[24,12,8]"));
        assert_eq!(o.details["weight_distribution"][8], json!(759));
    }
}
