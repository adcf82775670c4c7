//! Generator sets for the permutation groups that appear as local actions.
//!
//! Every set is re-verified on construction: its order, its degree of
//! transitivity and, for the two large Mathieu groups, that each generator
//! is an automorphism of the corresponding Golay code.

use alloc::vec::Vec;

use super::action::{is_k_homogeneous, pair_action, rank_on};
use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{Error, Result};
use crate::gf2::{golay23, golay24};

/// `x -> x + 1` on `GF(23)`, fixing the point at infinity (23).
const M24_A: [u32; 24] = [
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 0, 23,
];
/// `x -> 2x`.
const M24_B: [u32; 24] = [
    0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23,
];
/// `x -> -1/x`, swapping 0 and infinity.
const M24_G: [u32; 24] = [
    23, 22, 11, 15, 17, 9, 19, 13, 20, 5, 16, 2, 21, 7, 18, 3, 10, 4, 14, 6, 8, 12, 1, 0,
];
/// `x -> 9x^3` on residues and `x -> x^3/9` on non-residues, fixing 0 and infinity.
const M24_D: [u32; 24] = [
    0, 9, 3, 13, 1, 19, 12, 10, 8, 6, 14, 15, 4, 16, 11, 7, 18, 22, 2, 21, 20, 17, 5, 23,
];

/// `GF(8) = GF(2)[x]/(x^3 + x + 1)` with elements as bit patterns and 8 as
/// the point at infinity: multiplication by `x`, inversion, Frobenius.
const PGL28_MUL: [u32; 9] = [0, 2, 4, 6, 3, 1, 7, 5, 8];
const PGL28_INV: [u32; 9] = [8, 1, 5, 6, 7, 2, 3, 4, 0];
const PGL28_FROB: [u32; 9] = [0, 1, 4, 5, 6, 7, 2, 3, 8];
/// Translation by 1.
const PGL28_ADD: [u32; 9] = [1, 0, 3, 2, 5, 4, 7, 6, 8];

/// The groups with stored generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    Symmetric(usize),
    Alternating(usize),
    M11,
    M12,
    M23,
    M24,
    /// `PΓL(2, 8)` on the 9 points of the projective line.
    PGammaL28,
}

impl NamedGroup {
    pub fn degree(&self) -> usize {
        match *self {
            NamedGroup::Symmetric(n) | NamedGroup::Alternating(n) => n,
            NamedGroup::M11 => 11,
            NamedGroup::M12 => 12,
            NamedGroup::M23 => 23,
            NamedGroup::M24 => 24,
            NamedGroup::PGammaL28 => 9,
        }
    }

    pub fn expected_order(&self) -> u128 {
        match *self {
            NamedGroup::Symmetric(n) => factorial(n),
            NamedGroup::Alternating(n) => (factorial(n) / 2).max(1),
            NamedGroup::M11 => 7920,
            NamedGroup::M12 => 95040,
            NamedGroup::M23 => 10200960,
            NamedGroup::M24 => 244823040,
            NamedGroup::PGammaL28 => 1512,
        }
    }

    /// Largest `k` for which the group is `k`-transitive.
    pub fn expected_transitivity(&self) -> usize {
        match *self {
            NamedGroup::Symmetric(n) => n,
            NamedGroup::Alternating(n) => n.saturating_sub(2),
            NamedGroup::M11 => 4,
            NamedGroup::M12 => 5,
            NamedGroup::M23 => 4,
            NamedGroup::M24 => 5,
            NamedGroup::PGammaL28 => 3,
        }
    }

    pub fn name(&self) -> alloc::string::String {
        match *self {
            NamedGroup::Symmetric(n) => alloc::format!("S{n}"),
            NamedGroup::Alternating(n) => alloc::format!("A{n}"),
            NamedGroup::M11 => "M11".into(),
            NamedGroup::M12 => "M12".into(),
            NamedGroup::M23 => "M23".into(),
            NamedGroup::M24 => "M24".into(),
            NamedGroup::PGammaL28 => "PGammaL(2,8)".into(),
        }
    }

    /// Raw generators, without verification.
    pub fn raw_generators(&self) -> Result<Vec<Permutation>> {
        let from = |images: &[u32]| Permutation::from_images(images.to_vec());
        match *self {
            NamedGroup::Symmetric(n) => s_n_raw(n),
            NamedGroup::Alternating(n) => a_n_raw(n),
            NamedGroup::M11 => Ok(alloc::vec![m11_cycle(11)?, m11_four(11)?]),
            NamedGroup::M12 => Ok(alloc::vec![
                m11_cycle(12)?,
                m11_four(12)?,
                Permutation::from_cycles(
                    12,
                    &[&[0, 11], &[1, 10], &[2, 5], &[3, 7], &[4, 8], &[6, 9]]
                )?,
            ]),
            NamedGroup::M23 => Ok(alloc::vec![from(&M24_A)?, from(&M24_D)?]
                .into_iter()
                .map(|g| drop_last_fixed_point(&g))
                .collect()),
            NamedGroup::M24 => Ok(alloc::vec![
                from(&M24_A)?,
                from(&M24_B)?,
                from(&M24_G)?,
                from(&M24_D)?
            ]),
            NamedGroup::PGammaL28 => Ok(alloc::vec![
                from(&PGL28_ADD)?,
                from(&PGL28_MUL)?,
                from(&PGL28_INV)?,
                from(&PGL28_FROB)?
            ]),
        }
    }

    /// Generators, after the order, transitivity and code checks pass.
    pub fn generators(&self) -> Result<Vec<Permutation>> {
        Ok(self.verified()?.generators().to_vec())
    }

    /// The group with its chain, after verification.
    pub fn verified(&self) -> Result<PermGroup> {
        let gens = self.raw_generators()?;
        let degree = self.degree();
        let group = PermGroup::new(degree, &gens)?;
        let fail = |what: &str| {
            Error::InvalidParameter(alloc::format!(
                "stored generators of {} fail the {what} check",
                self.name()
            ))
        };
        if group.order() != self.expected_order() {
            return Err(fail("order"));
        }
        let t = self.expected_transitivity();
        if !group.is_k_transitive(t)? {
            return Err(fail("transitivity"));
        }
        if t < degree && group.is_k_transitive(t + 1)? {
            return Err(fail("transitivity"));
        }
        let code = match self {
            NamedGroup::M24 => Some(golay24()),
            NamedGroup::M23 => Some(golay23()),
            _ => None,
        };
        if let Some(code) = code {
            for g in &gens {
                if !code.is_automorphism(g)? {
                    return Err(fail("code preservation"));
                }
            }
        }
        Ok(group)
    }

    /// Rank of the induced action on 2-subsets.
    pub fn pair_rank(&self) -> Result<usize> {
        let group = self.verified()?;
        rank_on(&group, &pair_action(self.degree())?)
    }

    pub fn is_k_homogeneous(&self, k: usize) -> Result<bool> {
        is_k_homogeneous(&self.verified()?, k)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `(1 2 .. m)` on the first 11 points of a degree-`degree` permutation.
fn m11_cycle(degree: usize) -> Result<Permutation> {
    let cycle: Vec<usize> = (0..11).collect();
    Permutation::from_cycles(degree, &[&cycle])
}

/// `(3 7 11 8)(4 10 5 6)` in 1-indexed notation.
fn m11_four(degree: usize) -> Result<Permutation> {
    Permutation::from_cycles(degree, &[&[2, 6, 10, 7], &[3, 9, 4, 5]])
}

fn drop_last_fixed_point(g: &Permutation) -> Permutation {
    let n = g.degree();
    debug_assert_eq!(g.image(n - 1), n - 1);
    Permutation::from_images_unchecked(g.images()[..n - 1].to_vec())
}

fn s_n_raw(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::InvalidParameter("S0 has no natural action".into()));
    }
    if n == 1 {
        return Ok(Vec::new());
    }
    let cycle: Vec<usize> = (0..n).collect();
    Ok(alloc::vec![
        Permutation::transposition(n, 0, 1),
        Permutation::from_cycles(n, &[&cycle])?
    ])
}

fn a_n_raw(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::InvalidParameter("A0 has no natural action".into()));
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let three = Permutation::from_cycles(n, &[&[0, 1, 2]])?;
    let long: Vec<usize> = if n % 2 == 1 {
        (0..n).collect()
    } else {
        (1..n).collect()
    };
    Ok(alloc::vec![three, Permutation::from_cycles(n, &[&long])?])
}

pub fn s_n_gens(n: usize) -> Result<Vec<Permutation>> {
    NamedGroup::Symmetric(n).generators()
}

pub fn a_n_gens(n: usize) -> Result<Vec<Permutation>> {
    NamedGroup::Alternating(n).generators()
}

pub fn m11_gens() -> Result<Vec<Permutation>> {
    NamedGroup::M11.generators()
}

pub fn m12_gens() -> Result<Vec<Permutation>> {
    NamedGroup::M12.generators()
}

pub fn m23_gens() -> Result<Vec<Permutation>> {
    NamedGroup::M23.generators()
}

pub fn m24_gens() -> Result<Vec<Permutation>> {
    NamedGroup::M24.generators()
}

pub fn pgl_gamma_2_8_gens() -> Result<Vec<Permutation>> {
    NamedGroup::PGammaL28.generators()
}

/// The groups whose action on 2-subsets has rank 3, for degrees `5..=max_n`
/// of the symmetric and alternating families.
pub fn rank3_pair_groups(max_n: usize) -> Vec<NamedGroup> {
    let mut out = Vec::new();
    for n in 5..=max_n {
        out.push(NamedGroup::Symmetric(n));
        out.push(NamedGroup::Alternating(n));
    }
    out.extend([
        NamedGroup::PGammaL28,
        NamedGroup::M11,
        NamedGroup::M12,
        NamedGroup::M23,
        NamedGroup::M24,
    ]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families_verify() {
        for n in 1..=7 {
            assert!(NamedGroup::Symmetric(n).verified().is_ok(), "S{n}");
        }
        for n in 3..=7 {
            assert!(NamedGroup::Alternating(n).verified().is_ok(), "A{n}");
        }
    }

    #[test]
    fn pgammal_verifies_with_rank_three_on_pairs() {
        assert_eq!(NamedGroup::PGammaL28.verified().unwrap().order(), 1512);
        assert_eq!(NamedGroup::PGammaL28.pair_rank().unwrap(), 3);
    }

    #[test]
    fn small_mathieu_groups_verify() {
        assert_eq!(NamedGroup::M11.verified().unwrap().order(), 7920);
        assert_eq!(NamedGroup::M12.verified().unwrap().order(), 95040);
    }

    #[test]
    fn large_mathieu_groups_verify() {
        let m24 = NamedGroup::M24.verified().unwrap();
        assert!(m24.is_k_transitive(5).unwrap());
        let m23 = NamedGroup::M23.verified().unwrap();
        assert!(!m23.is_k_transitive(5).unwrap());
        assert!(NamedGroup::M23.is_k_homogeneous(4).unwrap());
        assert_eq!(NamedGroup::M24.pair_rank().unwrap(), 3);
    }
}
