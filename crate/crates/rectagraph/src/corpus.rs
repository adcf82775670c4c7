//! The graph and group pairs behind the reproduction suites.

use rectagraph_core::gf2::{golay23, golay23_even, golay24, LinearCode};
use rectagraph_core::graph::{
    complete, complete_multipartite, coset_graph, halved_graphs, hypercube, isomorphic, Graph,
};
use rectagraph_core::perm::{AffineGroup, NamedGroup, PermGroup, Permutation};
use rectagraph_core::rect::VertexGroup;
use rectagraph_core::{Error, Result};

/// Codes with a builtin name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Code {
    Zero(usize),
    Repetition(usize),
    Golay23,
    Golay23Even,
    Golay24,
}

impl Code {
    pub fn build(self) -> Result<LinearCode> {
        match self {
            Code::Zero(n) => LinearCode::zero_code(n),
            Code::Repetition(n) => LinearCode::repetition_code(n),
            Code::Golay23 => Ok(golay23()),
            Code::Golay23Even => Ok(golay23_even()),
            Code::Golay24 => Ok(golay24()),
        }
    }

    /// Name of the coset graph.
    pub fn graph_name(self) -> String {
        match self {
            Code::Zero(n) => format!("Q{n}"),
            Code::Repetition(n) => format!("Box{n}"),
            Code::Golay23 => "Gamma(C23)".into(),
            Code::Golay23Even => "Gamma(C23).2".into(),
            Code::Golay24 => "Gamma(C24)".into(),
        }
    }

    pub fn name(self) -> String {
        match self {
            Code::Zero(n) => format!("zero {n}"),
            Code::Repetition(n) => format!("repetition {n}"),
            Code::Golay23 => "golay23".into(),
            Code::Golay23Even => "golay23-even".into(),
            Code::Golay24 => "golay24".into(),
        }
    }
}

/// Subgroups of `Aut(K_{4[2]}) = S_2 wr S_4`, with vertex `v` in part `v / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartGroup {
    /// All of `S_2 wr S_4`.
    Wreath,
    /// Even numbers of flips, with `S_4` on the parts.
    EvenFlipsSym,
    /// Even numbers of flips with `A_4`, extended by `tau`: flip part 0,
    /// then swap parts 0 and 1.
    EvenFlipsAltTau,
    /// All flips with `A_4` on the parts.
    WreathAlt,
}

impl PartGroup {
    pub fn name(self) -> &'static str {
        match self {
            PartGroup::Wreath => "S2 wr S4",
            PartGroup::EvenFlipsSym => "E:S4",
            PartGroup::EvenFlipsAltTau => "(E:A4)<tau>",
            PartGroup::WreathAlt => "S2 wr A4",
        }
    }

    /// Generators on the 8 vertices of `K_{4[2]}`.
    pub fn generators(self) -> Result<Vec<Permutation>> {
        let flip = |p: usize| Permutation::transposition(8, 2 * p, 2 * p + 1);
        let parts = |sigma: [usize; 4]| {
            Permutation::from_images((0..8).map(|v| (2 * sigma[v / 2] + v % 2) as u32).collect())
        };
        let swap01 = parts([1, 0, 2, 3])?;
        let four_cycle = parts([1, 2, 3, 0])?;
        let three_a = parts([1, 2, 0, 3])?;
        let three_b = parts([0, 2, 3, 1])?;
        let double_flip = flip(0).then(&flip(1));
        Ok(match self {
            PartGroup::Wreath => vec![flip(0), swap01, four_cycle],
            PartGroup::EvenFlipsSym => vec![double_flip, swap01, four_cycle],
            PartGroup::EvenFlipsAltTau => {
                vec![double_flip, three_a, three_b, flip(0).then(&swap01)]
            }
            PartGroup::WreathAlt => vec![flip(0), three_a, three_b],
        })
    }
}

/// The group acting on the graph of a locally rank 3 table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowGroup {
    /// Even translations and coordinate permutations on half of `Γ(code)`.
    HalfAffine(Code, NamedGroup),
    /// A group on the four vertices of `K_4`.
    OnK4(NamedGroup),
    /// A subgroup of `S_2 wr S_4` carried to the halved 4-cube.
    HalfQ4(PartGroup),
}

/// A row of the table of locally rank 3 pairs, with the expected answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub group: RowGroup,
    pub expect_accept: bool,
}

impl TableRow {
    pub fn name(&self) -> String {
        match self.group {
            RowGroup::HalfAffine(code, h) => {
                let bits = match code {
                    Code::Zero(n) => n - 1,
                    Code::Repetition(n) => n - 2,
                    Code::Golay23Even | Code::Golay24 => 11,
                    Code::Golay23 => 12,
                };
                format!("1/2 {} with 2^{bits}:{}", code.graph_name(), h.name())
            }
            RowGroup::OnK4(h) => format!("K4 with {}", h.name()),
            RowGroup::HalfQ4(p) => format!("1/2 Q4 with {}", p.name()),
        }
    }

    pub fn instance(&self) -> Result<(Graph, VertexGroup)> {
        match self.group {
            RowGroup::HalfAffine(code, h) => {
                let code = code.build()?;
                let half = halved_graphs(&coset_graph(&code)?)?.swap_remove(0);
                let group = AffineGroup::new(&code, &h.generators()?, true)?;
                Ok((half, VertexGroup::Affine(group)))
            }
            RowGroup::OnK4(h) => Ok((
                complete(4)?,
                VertexGroup::Explicit(PermGroup::new(4, &h.generators()?)?),
            )),
            RowGroup::HalfQ4(p) => {
                let half = halved_graphs(&hypercube(4)?)?.swap_remove(0);
                let gens = transport(&complete_multipartite(4, 2)?, &half, &p.generators()?)?;
                Ok((half, VertexGroup::Explicit(PermGroup::new(8, &gens)?)))
            }
        }
    }
}

/// Conjugates permutations of `from` to `to` through an isomorphism.
pub fn transport(from: &Graph, to: &Graph, gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let phi = isomorphic(from, to)?
        .ok_or_else(|| Error::InvalidParameter("graphs are not isomorphic".into()))?;
    gens.iter()
        .map(|g| {
            let mut images = vec![0u32; phi.len()];
            for v in 0..phi.len() {
                images[phi[v]] = phi[g.image(v)] as u32;
            }
            Permutation::from_images(images)
        })
        .collect()
}

/// The rows of the table, in table order, followed by two pairs that are
/// not locally rank 3.
pub fn table1_rows() -> Vec<TableRow> {
    let accept = |group| TableRow {
        group,
        expect_accept: true,
    };
    let mut rows = Vec::new();
    for n in 5..=12 {
        rows.push(accept(RowGroup::HalfAffine(
            Code::Zero(n),
            NamedGroup::Symmetric(n),
        )));
        rows.push(accept(RowGroup::HalfAffine(
            Code::Zero(n),
            NamedGroup::Alternating(n),
        )));
    }
    rows.push(accept(RowGroup::OnK4(NamedGroup::Alternating(4))));
    for p in [
        PartGroup::Wreath,
        PartGroup::EvenFlipsSym,
        PartGroup::EvenFlipsAltTau,
    ] {
        rows.push(accept(RowGroup::HalfQ4(p)));
    }
    rows.push(accept(RowGroup::HalfAffine(
        Code::Zero(9),
        NamedGroup::PGammaL28,
    )));
    for (n, h) in [
        (11, NamedGroup::M11),
        (12, NamedGroup::M12),
        (23, NamedGroup::M23),
        (24, NamedGroup::M24),
    ] {
        rows.push(accept(RowGroup::HalfAffine(Code::Zero(n), h)));
    }
    for n in [8, 10, 12] {
        rows.push(accept(RowGroup::HalfAffine(
            Code::Repetition(n),
            NamedGroup::Symmetric(n),
        )));
        rows.push(accept(RowGroup::HalfAffine(
            Code::Repetition(n),
            NamedGroup::Alternating(n),
        )));
    }
    rows.push(accept(RowGroup::HalfAffine(
        Code::Repetition(12),
        NamedGroup::M12,
    )));
    rows.push(accept(RowGroup::HalfAffine(
        Code::Repetition(24),
        NamedGroup::M24,
    )));
    rows.push(accept(RowGroup::HalfAffine(
        Code::Golay23Even,
        NamedGroup::M23,
    )));
    rows.push(accept(RowGroup::HalfAffine(Code::Golay24, NamedGroup::M24)));
    for group in [
        RowGroup::OnK4(NamedGroup::Symmetric(4)),
        RowGroup::HalfQ4(PartGroup::WreathAlt),
    ] {
        rows.push(TableRow {
            group,
            expect_accept: false,
        });
    }
    rows
}

/// A graph of the four-homogeneous list with the group whose stabilizer
/// acts on the coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RectInstance {
    pub code: Code,
    pub coords: NamedGroup,
}

impl RectInstance {
    pub fn name(&self) -> String {
        format!("{} with {}", self.code.graph_name(), self.coords.name())
    }
}

/// `Q_n` for `4 <= n <= 8`, `Box_n` for `7 <= n <= 10`, and the three Golay
/// coset graphs.
pub fn main_rect_instances() -> Vec<RectInstance> {
    let mut out = Vec::new();
    for n in 4..=8 {
        out.push(RectInstance {
            code: Code::Zero(n),
            coords: NamedGroup::Symmetric(n),
        });
    }
    for n in 7..=10 {
        out.push(RectInstance {
            code: Code::Repetition(n),
            coords: NamedGroup::Symmetric(n),
        });
    }
    out.push(RectInstance {
        code: Code::Golay23Even,
        coords: NamedGroup::M23,
    });
    out.push(RectInstance {
        code: Code::Golay23,
        coords: NamedGroup::M23,
    });
    out.push(RectInstance {
        code: Code::Golay24,
        coords: NamedGroup::M24,
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn part_group_orders() {
        let orders: Vec<u128> = [
            PartGroup::Wreath,
            PartGroup::EvenFlipsSym,
            PartGroup::EvenFlipsAltTau,
            PartGroup::WreathAlt,
        ]
        .iter()
        .map(|p| PermGroup::new(8, &p.generators().unwrap()).unwrap().order())
        .collect();
        assert_eq!(orders, [384, 192, 192, 192]);
    }

    #[test]
    fn transported_groups_act_on_the_halved_cube() {
        for p in [PartGroup::Wreath, PartGroup::EvenFlipsAltTau] {
            let row = TableRow {
                group: RowGroup::HalfQ4(p),
                expect_accept: true,
            };
            let (g, group) = row.instance().unwrap();
            group.check_acts_on(&g).unwrap();
        }
    }
}
