use alloc::vec::Vec;

use super::group::{orbits_of, PermGroup};
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// `C(n, k)` for `n <= 64`, or `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).ok()
}

/// Colex index of the 2-subset `{i, j}`, `i < j`: `j(j-1)/2 + i`.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Inverse of [`pair_index`].
pub fn pair_at(index: usize) -> (usize, usize) {
    // largest j with j(j-1)/2 <= index, by integer square root
    let mut j = isqrt(2 * index) + 1;
    while j * (j - 1) / 2 > index {
        j -= 1;
    }
    while (j + 1) * j / 2 <= index {
        j += 1;
    }
    (index - j * (j - 1) / 2, j)
}

fn isqrt(x: usize) -> usize {
    if x < 2 {
        return x;
    }
    let mut r = x;
    let mut next = (r + x / r) / 2;
    while next < r {
        r = next;
        next = (r + x / r) / 2;
    }
    r
}

/// A way for degree-`n` permutations to act on some finite domain.
pub trait Action {
    fn degree(&self) -> usize;
    fn domain_size(&self) -> usize;
    /// The permutation of the domain induced by `g`.
    fn induce(&self, g: &Permutation) -> Result<Permutation>;
}

/// The natural action on `{0, .., n-1}`.
#[derive(Clone, Copy, Debug)]
pub struct NaturalAction {
    pub n: usize,
}

impl Action for NaturalAction {
    fn degree(&self) -> usize {
        self.n
    }

    fn domain_size(&self) -> usize {
        self.n
    }

    fn induce(&self, g: &Permutation) -> Result<Permutation> {
        check_degree(self.n, g)?;
        Ok(g.clone())
    }
}

/// The action on `k`-subsets of `{0, .., n-1}`, indexed in colex order.
#[derive(Clone, Debug)]
pub struct SubsetAction {
    n: usize,
    k: usize,
    /// Subsets as bit masks, in colex order.
    subsets: Vec<u64>,
    binom: Vec<Vec<u64>>,
}

/// Domain sizes above this are refused by [`SubsetAction`].
pub const MAX_SUBSET_DOMAIN: usize = 1 << 22;

impl SubsetAction {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || n > 64 || k > n {
            return Err(Error::InvalidParameter(alloc::format!(
                "no {k}-subset action of degree {n}"
            )));
        }
        let size = binomial(n, k).unwrap_or(u64::MAX);
        if size > MAX_SUBSET_DOMAIN as u64 {
            return Err(Error::TooLarge {
                size: size as usize,
                max: MAX_SUBSET_DOMAIN,
            });
        }
        let binom: Vec<Vec<u64>> = (0..=n)
            .map(|m| (0..=k).map(|j| binomial(m, j).unwrap_or(0)).collect())
            .collect();
        let mut subsets = Vec::with_capacity(size as usize);
        // Colex order is numeric order of the masks.
        if k == 0 {
            subsets.push(0);
        } else {
            let mut x: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
            loop {
                subsets.push(x);
                let lowest = x & x.wrapping_neg();
                let Some(ripple) = x.checked_add(lowest) else {
                    break;
                };
                let next = ripple | (((x ^ ripple) >> 2) / lowest);
                if n < 64 && next >> n != 0 {
                    break;
                }
                x = next;
            }
        }
        debug_assert_eq!(subsets.len() as u64, size);
        Ok(SubsetAction {
            n,
            k,
            subsets,
            binom,
        })
    }

    /// The action on 2-subsets.
    pub fn pairs(n: usize) -> Result<Self> {
        Self::new(n, 2)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The subset with colex index `index`, ascending.
    pub fn subset(&self, index: usize) -> Vec<usize> {
        let mask = self.subsets[index];
        (0..self.n).filter(|&i| mask >> i & 1 == 1).collect()
    }

    /// Colex index of a subset given as a bit mask.
    pub fn rank_mask(&self, mut mask: u64) -> usize {
        let mut index = 0u64;
        let mut i = 0;
        while mask != 0 {
            let c = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            i += 1;
            index += self.binom[c][i];
        }
        index as usize
    }

    pub fn rank(&self, subset: &[usize]) -> usize {
        self.rank_mask(subset.iter().fold(0u64, |m, &x| m | (1 << x)))
    }
}

impl Action for SubsetAction {
    fn degree(&self) -> usize {
        self.n
    }

    fn domain_size(&self) -> usize {
        self.subsets.len()
    }

    fn induce(&self, g: &Permutation) -> Result<Permutation> {
        check_degree(self.n, g)?;
        let images = self
            .subsets
            .iter()
            .map(|&mask| {
                let mut rest = mask;
                let mut image = 0u64;
                while rest != 0 {
                    let x = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    image |= 1 << g.image(x);
                }
                self.rank_mask(image) as u32
            })
            .collect();
        Ok(Permutation::from_images_unchecked(images))
    }
}

/// The action on 2-subsets of `{0, .., n-1}`.
pub fn pair_action(n: usize) -> Result<SubsetAction> {
    SubsetAction::pairs(n)
}

fn check_degree(n: usize, g: &Permutation) -> Result<()> {
    if g.degree() == n {
        Ok(())
    } else {
        Err(Error::DegreeMismatch {
            expected: n,
            found: g.degree(),
        })
    }
}

/// A group action realized as one relabeling table per generator.
#[derive(Clone, Debug)]
pub struct FiniteAction {
    domain_size: usize,
    tables: Vec<Permutation>,
}

impl FiniteAction {
    /// Induces every generator of `group` through `action`.
    pub fn new(group: &PermGroup, action: &impl Action) -> Result<Self> {
        Self::from_generators(group.generators(), action)
    }

    pub fn from_generators(gens: &[Permutation], action: &impl Action) -> Result<Self> {
        let tables = gens
            .iter()
            .map(|g| action.induce(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteAction {
            domain_size: action.domain_size(),
            tables,
        })
    }

    /// Tables given directly; each must have degree `domain_size`.
    pub fn from_tables(domain_size: usize, tables: Vec<Permutation>) -> Result<Self> {
        for t in &tables {
            check_degree(domain_size, t)?;
        }
        Ok(FiniteAction {
            domain_size,
            tables,
        })
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn tables(&self) -> &[Permutation] {
        &self.tables
    }

    /// Image of `point` under generator `generator`.
    pub fn apply(&self, generator: usize, point: usize) -> usize {
        self.tables[generator].image(point)
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.domain_size, &self.tables)
    }

    pub fn is_transitive(&self) -> bool {
        self.domain_size > 0 && self.orbits().len() == 1
    }

    /// The image group on the domain.
    pub fn image_group(&self) -> Result<PermGroup> {
        PermGroup::new(self.domain_size, &self.tables)
    }

    /// Rank via orbits of a point stabilizer in the image group.
    pub fn rank(&self) -> Result<usize> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let image = self.image_group()?;
        Ok(image.stabilizer(0)?.orbits().len())
    }

    /// Rank as the number of orbits on ordered pairs of domain points.
    pub fn rank_by_ordered_pairs(&self) -> Result<usize> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let m = self.domain_size;
        let total = m.checked_mul(m).ok_or(Error::TooLarge {
            size: usize::MAX,
            max: MAX_SUBSET_DOMAIN,
        })?;
        if total > MAX_SUBSET_DOMAIN * 4 {
            return Err(Error::TooLarge {
                size: total,
                max: MAX_SUBSET_DOMAIN * 4,
            });
        }
        let mut seen = alloc::vec![false; total];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..total {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(p) = stack.pop() {
                let (a, b) = (p / m, p % m);
                for t in &self.tables {
                    let q = t.image(a) * m + t.image(b);
                    if !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        Ok(count)
    }
}

/// Orbits of `group` on the domain of `action`.
pub fn orbits(group: &PermGroup, action: &impl Action) -> Result<Vec<Vec<usize>>> {
    Ok(FiniteAction::new(group, action)?.orbits())
}

/// Rank of `group` in `action`; an error unless the action is transitive.
pub fn rank_on(group: &PermGroup, action: &impl Action) -> Result<usize> {
    FiniteAction::new(group, action)?.rank()
}

/// Single orbit on `k`-subsets.
pub fn is_k_homogeneous(group: &PermGroup, k: usize) -> Result<bool> {
    if k > group.degree() {
        return Err(Error::InvalidParameter(alloc::format!(
            "k = {k} exceeds degree {}",
            group.degree()
        )));
    }
    let action = SubsetAction::new(group.degree(), k)?;
    Ok(FiniteAction::new(group, &action)?.orbits().len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_indexing_is_colex() {
        assert_eq!(pair_index(0, 1), 0);
        assert_eq!(pair_index(0, 2), 1);
        assert_eq!(pair_index(1, 2), 2);
        assert_eq!(pair_index(3, 0), 3);
        for idx in 0..500 {
            let (i, j) = pair_at(idx);
            assert!(i < j);
            assert_eq!(pair_index(i, j), idx);
        }
        let pairs = SubsetAction::pairs(7).unwrap();
        for idx in 0..21 {
            let s = pairs.subset(idx);
            assert_eq!(pair_index(s[0], s[1]), idx);
            assert_eq!(pairs.rank(&s), idx);
        }
    }

    #[test]
    fn subset_domain_sizes() {
        assert_eq!(SubsetAction::new(23, 4).unwrap().domain_size(), 8855);
        assert_eq!(SubsetAction::new(5, 0).unwrap().domain_size(), 1);
        assert_eq!(SubsetAction::new(5, 5).unwrap().domain_size(), 1);
        assert_eq!(binomial(24, 2), Some(276));
    }

    #[test]
    fn identity_induces_identity() {
        let pairs = pair_action(6).unwrap();
        assert!(pairs
            .induce(&Permutation::identity(6))
            .unwrap()
            .is_identity());
    }

    #[test]
    fn symmetric_group_ranks() {
        let n = 5;
        let cycle =
            Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect()).unwrap();
        let s5 = PermGroup::new(n, &[Permutation::transposition(n, 0, 1), cycle]).unwrap();
        assert_eq!(rank_on(&s5, &NaturalAction { n }).unwrap(), 2);
        let pairs = pair_action(n).unwrap();
        assert_eq!(rank_on(&s5, &pairs).unwrap(), 3);
        let fa = FiniteAction::new(&s5, &pairs).unwrap();
        assert_eq!(fa.rank_by_ordered_pairs().unwrap(), 3);
        assert!(is_k_homogeneous(&s5, 2).unwrap());
    }

    #[test]
    fn intransitive_rank_is_error() {
        let g = PermGroup::new(4, &[Permutation::transposition(4, 0, 1)]).unwrap();
        assert_eq!(
            rank_on(&g, &NaturalAction { n: 4 }),
            Err(Error::NotTransitive)
        );
        let trivial = PermGroup::new(5, &[]).unwrap();
        assert_eq!(orbits(&trivial, &NaturalAction { n: 5 }).unwrap().len(), 5);
    }
}
