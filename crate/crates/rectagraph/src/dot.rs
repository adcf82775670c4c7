//! Distance distribution diagrams in DOT.

use std::fmt::Write as _;

use rectagraph_core::graph::{distance_profile, DistanceProfile, Graph};
use rectagraph_core::Error as CoreError;

use crate::error::Result;

fn values(v: &[u32]) -> String {
    match v {
        [x] => x.to_string(),
        _ => {
            let parts: Vec<String> = v.iter().map(u32::to_string).collect();
            format!("{{{}}}", parts.join(","))
        }
    }
}

/// One node per distance shell from `base`, labelled with its size `k_i`;
/// a loop carries `a_i`, and the edge between shells `i` and `i+1` carries
/// `b_i` and `c_{i+1}`.
pub fn diagram(g: &Graph, base: usize) -> Result<String> {
    g.check_vertex(base)?;
    let p = distance_profile(g, base);
    if p.unreachable > 0 {
        return Err(CoreError::Disconnected.into());
    }
    Ok(render(&p))
}

pub fn render(p: &DistanceProfile) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph distance_distribution {{");
    let _ = writeln!(s, "  rankdir=LR;");
    let _ = writeln!(s, "  node [shape=circle, fontname=\"Helvetica\"];");
    let _ = writeln!(s, "  edge [fontname=\"Helvetica\"];");
    for (i, k) in p.shell_sizes.iter().enumerate() {
        let _ = writeln!(s, "  s{i} [label=\"k{i}={k}\"];");
    }
    for i in 0..p.shell_sizes.len() {
        if p.a[i].iter().any(|&a| a > 0) {
            let _ = writeln!(s, "  s{i} -- s{i} [label=\"a={}\"];", values(&p.a[i]));
        }
        if i + 1 < p.shell_sizes.len() {
            let _ = writeln!(
                s,
                "  s{i} -- s{} [label=\"b={} c={}\"];",
                i + 1,
                values(&p.b[i]),
                values(&p.c[i + 1])
            );
        }
    }
    let _ = writeln!(s, "}}");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use rectagraph_core::graph::{complete_multipartite, hypercube};

    #[test]
    fn cube_diagram() {
        let d = diagram(&hypercube(4).unwrap(), 0).unwrap();
        for (i, k) in [1, 4, 6, 4, 1].iter().enumerate() {
            assert!(d.contains(&format!("s{i} [label=\"k{i}={k}\"]")));
        }
        assert!(d.contains("s1 -- s2 [label=\"b=3 c=2\"]"));
        assert!(!d.contains("a="));
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = rectagraph_core::graph::Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(diagram(&g, 0).is_err());
        let k = diagram(&complete_multipartite(4, 2).unwrap(), 0).unwrap();
        assert!(k.contains("s1 -- s1 [label=\"a=4\"]"));
    }
}
