use alloc::vec::Vec;

use super::check_rect_hypotheses;
use crate::error::{Error, Result};
use crate::graph::{girth, is_connected, Graph};
use crate::perm::{is_k_homogeneous, AffineGroup, PermGroup, Permutation};

/// A group acting on the vertices of a graph.
#[derive(Clone, Debug)]
pub enum VertexGroup {
    /// Explicit permutations of the vertices.
    Explicit(PermGroup),
    /// A translation group extended by coordinate permutations, acting on
    /// coset indices. Vertex 0 is stabilized by the coordinate part.
    Affine(AffineGroup),
}

/// The vertex stabilizer of one vertex, by generators.
enum Stabilizer<'a> {
    Explicit(Vec<Permutation>),
    Affine(&'a AffineGroup),
}

impl Stabilizer<'_> {
    fn len(&self) -> usize {
        match self {
            Stabilizer::Explicit(gens) => gens.len(),
            Stabilizer::Affine(a) => a.linear_generators().len(),
        }
    }

    fn apply(&self, k: usize, v: usize) -> usize {
        match self {
            Stabilizer::Explicit(gens) => gens[k].image(v),
            Stabilizer::Affine(a) => a.apply_linear(k, v),
        }
    }
}

impl VertexGroup {
    pub fn degree(&self) -> usize {
        match self {
            VertexGroup::Explicit(g) => g.degree(),
            VertexGroup::Affine(a) => a.domain_size(),
        }
    }

    pub fn order(&self) -> Result<u128> {
        match self {
            VertexGroup::Explicit(g) => Ok(g.order()),
            VertexGroup::Affine(a) => a.order(),
        }
    }

    /// Every generator is an automorphism of `g`.
    ///
    /// For an affine group on a Cayley graph of matching dimension only the
    /// coordinate generators need checking, on the connection set;
    /// translations are automorphisms of every Cayley graph.
    pub fn check_acts_on(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        if self.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: self.degree(),
            });
        }
        match self {
            VertexGroup::Explicit(group) => check_tables(g, group.generators()),
            VertexGroup::Affine(a) => match g.cayley_parts() {
                Some((_, connection)) => {
                    let offset = a.translation_words().len();
                    for k in 0..a.linear_generators().len() {
                        let moved_off = connection.iter().any(|&s| {
                            connection
                                .binary_search(&(a.apply_linear(k, s as usize) as u64))
                                .is_err()
                        });
                        if moved_off {
                            return Err(Error::NotAutomorphismGroup {
                                generator: offset + k,
                            });
                        }
                    }
                    Ok(())
                }
                None => check_tables(g, &a.tables()?),
            },
        }
    }

    /// One vertex from each orbit.
    fn representatives(&self) -> Vec<usize> {
        match self {
            VertexGroup::Explicit(g) => g.orbits().into_iter().map(|o| o[0]).collect(),
            // translations alone are transitive
            VertexGroup::Affine(_) => alloc::vec![0],
        }
    }

    fn stabilizer(&self, u: usize) -> Result<(Stabilizer<'_>, u128)> {
        match self {
            VertexGroup::Explicit(g) => {
                let stab = g.stabilizer(u)?;
                Ok((
                    Stabilizer::Explicit(stab.generators().to_vec()),
                    stab.order(),
                ))
            }
            VertexGroup::Affine(a) => {
                debug_assert_eq!(u, 0);
                Ok((Stabilizer::Affine(a), a.linear_group()?.order()))
            }
        }
    }
}

fn check_tables(g: &Graph, tables: &[Permutation]) -> Result<()> {
    for (k, t) in tables.iter().enumerate() {
        if t.degree() != g.vertex_count()
            || g.edges()
                .any(|(u, v)| !g.is_adjacent(t.image(u), t.image(v)))
        {
            return Err(Error::NotAutomorphismGroup { generator: k });
        }
    }
    Ok(())
}

/// 2-arcs `(u, v, w)` from one vertex, split into orbits of its stabilizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoArcOrbits {
    pub triangle_arcs: usize,
    pub geodesic_arcs: usize,
    pub triangle_orbits: usize,
    pub geodesic_orbits: usize,
}

impl TwoArcOrbits {
    /// Exactly two orbits: the triangles and the 2-geodesics.
    pub fn is_split_in_two(&self) -> bool {
        self.triangle_orbits == 1 && self.geodesic_orbits == 1
    }
}

/// What the stabilizer of one orbit representative does on its neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalOrbitData {
    pub vertex: usize,
    /// For affine groups, the order of the coordinate part.
    pub stabilizer_order: u128,
    /// Order of the group induced on `Γ(u)`.
    pub local_order: u128,
    /// Orbit sizes on `Γ(u)`, by least neighbor.
    pub orbit_sizes: Vec<usize>,
    pub rank: Option<usize>,
    /// The stabilizer of a neighbor `v` has orbits `{v}`, `Γ(u) ∩ Γ(v)` and
    /// `Γ(u) ∩ Γ_2(v)` on `Γ(u)`; computed for accepted girth 3 inputs.
    pub suborbits_match: Option<bool>,
    /// The stabilizer is no larger than the group it induces on `Γ(u)`.
    pub faithful: bool,
    /// Present for connected non-complete graphs of girth 3.
    pub two_arcs: Option<TwoArcOrbits>,
}

/// Outcome of [`locally_rank3_check`]; a rejection keeps the data of every
/// representative as the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalRank3Certificate {
    pub accepted: bool,
    pub girth: Option<usize>,
    pub representatives: Vec<LocalOrbitData>,
}

struct Local {
    nbrs: Vec<usize>,
    group: PermGroup,
}

fn local_action(g: &Graph, stab: &Stabilizer<'_>, u: usize) -> Result<Local> {
    let nbrs = g.sorted_neighbors(u);
    let mut tables = Vec::with_capacity(stab.len());
    for k in 0..stab.len() {
        let images = nbrs
            .iter()
            .map(|&v| {
                nbrs.binary_search(&stab.apply(k, v))
                    .map(|p| p as u32)
                    .map_err(|_| Error::NotAutomorphismGroup { generator: k })
            })
            .collect::<Result<Vec<u32>>>()?;
        tables.push(Permutation::from_images(images)?);
    }
    let group = PermGroup::new(nbrs.len(), &tables)?;
    Ok(Local { nbrs, group })
}

fn two_arc_orbits(
    g: &Graph,
    stab: &Stabilizer<'_>,
    u: usize,
    nbrs: &[usize],
) -> Result<TwoArcOrbits> {
    let onward: Vec<Vec<usize>> = nbrs
        .iter()
        .map(|&v| {
            g.sorted_neighbors(v)
                .into_iter()
                .filter(|&w| w != u)
                .collect()
        })
        .collect();
    let mut offset = Vec::with_capacity(nbrs.len() + 1);
    offset.push(0usize);
    for l in &onward {
        offset.push(offset.last().unwrap() + l.len());
    }
    let total = *offset.last().unwrap();
    let locate = |v: usize, w: usize| -> Option<usize> {
        let i = nbrs.binary_search(&v).ok()?;
        let j = onward[i].binary_search(&w).ok()?;
        Some(offset[i] + j)
    };
    let mut orbit = alloc::vec![usize::MAX; total];
    let mut out = TwoArcOrbits {
        triangle_arcs: 0,
        geodesic_arcs: 0,
        triangle_orbits: 0,
        geodesic_orbits: 0,
    };
    let mut stack = Vec::new();
    let mut count = 0;
    for i in 0..nbrs.len() {
        for (j, &w) in onward[i].iter().enumerate() {
            let triangle = g.is_adjacent(u, w);
            if triangle {
                out.triangle_arcs += 1;
            } else {
                out.geodesic_arcs += 1;
            }
            let start = offset[i] + j;
            if orbit[start] != usize::MAX {
                continue;
            }
            if triangle {
                out.triangle_orbits += 1;
            } else {
                out.geodesic_orbits += 1;
            }
            orbit[start] = count;
            stack.push((nbrs[i], w));
            while let Some((v, w)) = stack.pop() {
                for k in 0..stab.len() {
                    let (v2, w2) = (stab.apply(k, v), stab.apply(k, w));
                    let idx = locate(v2, w2).ok_or(Error::NotAutomorphismGroup { generator: k })?;
                    if orbit[idx] == usize::MAX {
                        orbit[idx] = count;
                        stack.push((v2, w2));
                    }
                }
            }
            count += 1;
        }
    }
    Ok(out)
}

fn is_complete(g: &Graph) -> bool {
    let n = g.vertex_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

/// Whether the stabilizer of every vertex is transitive of rank 3 on its
/// neighborhood, decided at one representative of each vertex orbit.
pub fn locally_rank3_check(g: &Graph, group: &VertexGroup) -> Result<LocalRank3Certificate> {
    group.check_acts_on(g)?;
    let gir = girth(g);
    let arcs_apply = gir == Some(3) && !is_complete(g) && is_connected(g);
    let mut accepted = true;
    let mut representatives = Vec::new();
    for u in group.representatives() {
        let (stab, stabilizer_order) = group.stabilizer(u)?;
        let local = local_action(g, &stab, u)?;
        let orbits = local.group.orbits();
        let rank = if local.group.is_transitive() {
            Some(local.group.rank()?)
        } else {
            None
        };
        let ok = rank == Some(3);
        accepted &= ok;
        let suborbits_match = (ok && gir == Some(3))
            .then(|| suborbits_match(g, &local))
            .transpose()?;
        let two_arcs = if arcs_apply {
            Some(two_arc_orbits(g, &stab, u, &local.nbrs)?)
        } else {
            None
        };
        let local_order = local.group.order();
        representatives.push(LocalOrbitData {
            vertex: u,
            stabilizer_order,
            local_order,
            orbit_sizes: orbits.iter().map(Vec::len).collect(),
            rank,
            suborbits_match,
            faithful: stabilizer_order == local_order,
            two_arcs,
        });
    }
    Ok(LocalRank3Certificate {
        accepted,
        girth: gir,
        representatives,
    })
}

fn suborbits_match(g: &Graph, local: &Local) -> Result<bool> {
    let v = local.nbrs[0];
    let mut expected: Vec<Vec<usize>> = alloc::vec![alloc::vec![0], Vec::new(), Vec::new()];
    for (p, &w) in local.nbrs.iter().enumerate().skip(1) {
        expected[if g.is_adjacent(v, w) { 1 } else { 2 }].push(p);
    }
    let mut got = local.group.stabilizer(0)?.orbits();
    got.sort();
    expected.retain(|o| !o.is_empty());
    expected.sort();
    Ok(got == expected)
}

/// Whether, at every vertex orbit representative `u`, the stabilizer of `u`
/// has exactly two orbits on 2-arcs starting at `u`: the triangles and the
/// 2-geodesics. Requires a connected non-complete graph of girth 3.
pub fn two_arc_orbit_check(g: &Graph, group: &VertexGroup) -> Result<bool> {
    if !is_connected(g) {
        return Err(Error::HypothesesFail("graph is disconnected".into()));
    }
    if is_complete(g) {
        return Err(Error::HypothesesFail("graph is complete".into()));
    }
    if girth(g) != Some(3) {
        return Err(Error::HypothesesFail("girth is not 3".into()));
    }
    group.check_acts_on(g)?;
    for u in group.representatives() {
        let (stab, _) = group.stabilizer(u)?;
        let nbrs = g.sorted_neighbors(u);
        if !two_arc_orbits(g, &stab, u, &nbrs)?.is_split_in_two() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the stabilizer of `base` is 4-homogeneous on its neighborhood,
/// for a rectagraph with `a_2 = 0` and `c_3 = 3` at `base`.
///
/// For an affine group the translation taking 0 to `base` conjugates the
/// two stabilizers, so the check runs at vertex 0.
pub fn four_homogeneous_local_check(
    target: &Graph,
    base: usize,
    group: &VertexGroup,
) -> Result<bool> {
    check_rect_hypotheses(target, base)?;
    group.check_acts_on(target)?;
    let u = match group {
        VertexGroup::Explicit(_) => base,
        VertexGroup::Affine(_) => 0,
    };
    let (stab, _) = group.stabilizer(u)?;
    let local = local_action(target, &stab, u)?;
    if local.nbrs.len() < 4 {
        return Ok(false);
    }
    is_k_homogeneous(&local.group, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{golay23, LinearCode};
    use crate::graph::{complete, coset_graph, folded_cube, halved_graphs, hypercube};
    use crate::perm::registry::{a_n_gens, m23_gens, s_n_gens};

    fn k4(gens: Vec<Permutation>) -> VertexGroup {
        VertexGroup::Explicit(PermGroup::new(4, &gens).unwrap())
    }

    #[test]
    fn k4_needs_a4() {
        let g = complete(4).unwrap();
        assert!(
            locally_rank3_check(&g, &k4(a_n_gens(4).unwrap()))
                .unwrap()
                .accepted
        );
        let cert = locally_rank3_check(&g, &k4(s_n_gens(4).unwrap())).unwrap();
        assert!(!cert.accepted);
        assert_eq!(cert.representatives[0].rank, Some(2));
        assert!(matches!(
            two_arc_orbit_check(&g, &k4(a_n_gens(4).unwrap())),
            Err(Error::HypothesesFail(_))
        ));
    }

    #[test]
    fn halved_cubes() {
        for n in 5..=7 {
            let half = &halved_graphs(&hypercube(n).unwrap()).unwrap()[0];
            let zero = LinearCode::zero_code(n).unwrap();
            for gens in [s_n_gens(n).unwrap(), a_n_gens(n).unwrap()] {
                let group = VertexGroup::Affine(AffineGroup::new(&zero, &gens, true).unwrap());
                let cert = locally_rank3_check(half, &group).unwrap();
                assert!(cert.accepted, "n = {n}");
                let rep = &cert.representatives[0];
                assert_eq!(rep.suborbits_match, Some(true));
                assert!(rep.two_arcs.as_ref().unwrap().is_split_in_two());
                assert!(two_arc_orbit_check(half, &group).unwrap());
                // same answer from the explicit group
                let explicit = VertexGroup::Explicit(
                    AffineGroup::new(&zero, &gens, true)
                        .unwrap()
                        .perm_group()
                        .unwrap(),
                );
                let again =
                    locally_rank3_check(&half.to_explicit(1 << 10).unwrap(), &explicit).unwrap();
                assert!(again.accepted);
                assert_eq!(again.representatives[0].local_order, rep.local_order);
            }
        }
    }

    #[test]
    fn non_automorphisms_are_refused() {
        let q = hypercube(3).unwrap();
        let bad = Permutation::from_images(alloc::vec![1, 0, 2, 3, 4, 5, 6, 7]).unwrap();
        let group = VertexGroup::Explicit(PermGroup::new(8, &[bad]).unwrap());
        assert_eq!(
            locally_rank3_check(&q, &group).unwrap_err(),
            Error::NotAutomorphismGroup { generator: 0 }
        );
    }

    #[test]
    fn four_homogeneous_rectagraphs() {
        let q = hypercube(7).unwrap();
        let zero = LinearCode::zero_code(7).unwrap();
        let group =
            VertexGroup::Affine(AffineGroup::new(&zero, &s_n_gens(7).unwrap(), false).unwrap());
        assert!(four_homogeneous_local_check(&q, 5, &group).unwrap());
        let rep = LinearCode::repetition_code(7).unwrap();
        let group =
            VertexGroup::Affine(AffineGroup::new(&rep, &s_n_gens(7).unwrap(), false).unwrap());
        assert!(four_homogeneous_local_check(&folded_cube(7).unwrap(), 0, &group).unwrap());
        let c = golay23();
        let group = VertexGroup::Affine(AffineGroup::new(&c, &m23_gens().unwrap(), false).unwrap());
        assert!(four_homogeneous_local_check(&coset_graph(&c).unwrap(), 0, &group).unwrap());
    }
}
