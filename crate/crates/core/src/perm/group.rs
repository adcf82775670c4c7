use alloc::vec::Vec;

use super::permutation::Permutation;
use crate::error::{Error, Result};

const NOT_IN_ORBIT: u32 = u32::MAX;

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    point: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    /// Fundamental orbit in discovery order.
    orbit: Vec<u32>,
    /// Position of each point in `orbit`, or `NOT_IN_ORBIT`.
    slot: Vec<u32>,
    /// `inverse_reps[k]` is the inverse of an element mapping `point` to `orbit[k]`.
    inverse_reps: Vec<Permutation>,
    /// Schreier generators at this level verified up to this (orbit slot, generator).
    progress: (usize, usize),
}

impl Level {
    fn new(degree: usize, point: usize, gens: Vec<Permutation>) -> Self {
        let mut level = Level {
            point,
            gens,
            orbit: Vec::new(),
            slot: Vec::new(),
            inverse_reps: Vec::new(),
            progress: (0, 0),
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        let mut slot = alloc::vec![NOT_IN_ORBIT; degree];
        let mut orbit = alloc::vec![self.point as u32];
        let mut reps = alloc::vec![Permutation::identity(degree)];
        slot[self.point] = 0;
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head] as usize;
            for g in &self.gens {
                let y = g.image(x);
                if slot[y] == NOT_IN_ORBIT {
                    slot[y] = orbit.len() as u32;
                    orbit.push(y as u32);
                    reps.push(reps[head].then(g));
                }
            }
            head += 1;
        }
        self.inverse_reps = reps.iter().map(Permutation::inverse).collect();
        self.orbit = orbit;
        self.slot = slot;
        self.progress = (0, 0);
    }

    fn orbit_contains(&self, x: usize) -> bool {
        self.slot[x] != NOT_IN_ORBIT
    }
}

/// A permutation group held as a base and strong generating set.
///
/// The chain is built by the deterministic Schreier–Sims algorithm; new base
/// points are always the smallest point moved by the element that needs one.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::with_base(degree, generators, &[])
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Builds a chain whose base starts with `prefix` (other points are added
    /// after it as needed).
    pub fn with_base(degree: usize, generators: &[Permutation], prefix: &[usize]) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        for &p in prefix {
            if p >= degree {
                return Err(Error::InvalidParameter(alloc::format!(
                    "base point {p} outside degree {degree}"
                )));
            }
        }
        let mut group = PermGroup {
            degree,
            generators: generators.to_vec(),
            levels: Vec::new(),
        };
        group.schreier_sims(prefix);
        Ok(group)
    }

    fn schreier_sims(&mut self, prefix: &[usize]) {
        let degree = self.degree;
        let strong: Vec<Permutation> = self
            .generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if strong.is_empty() && prefix.is_empty() {
            return;
        }
        let mut base: Vec<usize> = Vec::new();
        for &p in prefix {
            if !base.contains(&p) {
                base.push(p);
            }
        }
        for g in &strong {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(g.first_moved_point().expect("non-identity"));
            }
        }
        self.levels = (0..base.len())
            .map(|i| {
                let gens = strong
                    .iter()
                    .filter(|g| base[..i].iter().all(|&b| g.image(b) == b))
                    .cloned()
                    .collect();
                Level::new(degree, base[i], gens)
            })
            .collect();

        let mut i = self.levels.len();
        'outer: while i > 0 {
            let level = i - 1;
            loop {
                let (k, j) = self.levels[level].progress;
                if k >= self.levels[level].orbit.len() {
                    break;
                }
                let lv = &self.levels[level];
                if j >= lv.gens.len() {
                    self.levels[level].progress = (k + 1, 0);
                    continue;
                }
                // Schreier generator u_beta * s * u_{beta^s}^{-1}.
                let beta = lv.orbit[k] as usize;
                let s = &lv.gens[j];
                let gamma = s.image(beta);
                let u_beta = lv.inverse_reps[k].inverse();
                let inv_gamma = &lv.inverse_reps[lv.slot[gamma] as usize];
                let h = u_beta.then(s).then(inv_gamma);
                self.levels[level].progress = (k, j + 1);
                if h.is_identity() {
                    continue;
                }
                let (residue, depth) = self.strip(h, level + 1);
                if residue.is_identity() {
                    continue;
                }
                let depth = if depth == self.levels.len() {
                    let point = residue.first_moved_point().expect("non-identity");
                    self.levels.push(Level::new(degree, point, Vec::new()));
                    depth
                } else {
                    depth
                };
                for l in (level + 1)..=depth {
                    self.levels[l].gens.push(residue.clone());
                    self.levels[l].rebuild(degree);
                }
                i = depth + 1;
                continue 'outer;
            }
            i -= 1;
        }
        // Drop trailing levels with trivial orbits unless they were requested.
        while self.levels.len() > prefix.len()
            && self.levels.last().is_some_and(|l| l.orbit.len() == 1)
        {
            self.levels.pop();
        }
    }

    /// Sifts `g` through the chain from `start`; returns the residue and the
    /// level at which sifting stopped (`levels.len()` if it went through).
    fn strip(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.image(level.point);
            if !level.orbit_contains(beta) {
                return (g, l);
            }
            g = g.then(&level.inverse_reps[level.slot[beta] as usize]);
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Fundamental orbit lengths along the base.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators of the stabilizer of the first `depth` base points.
    pub fn strong_generators(&self, depth: usize) -> Vec<Permutation> {
        match self.levels.get(depth) {
            Some(level) => level.gens.clone(),
            None => Vec::new(),
        }
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, depth) = self.strip(g.clone(), 0);
        depth == self.levels.len() && residue.is_identity()
    }

    /// Orbit of `point` under the group, in breadth-first order.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit_of(self.degree, &self.generators, point)
    }

    /// All orbits on `{0, .., degree-1}`, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbit(0).len() == self.degree
    }

    /// Point stabilizer, with a chain inherited from one based at `point`.
    pub fn stabilizer(&self, point: usize) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[point])
    }

    /// Stabilizer of every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        let rebased = PermGroup::with_base(self.degree, &self.generators, points)?;
        let depth = points.len().min(rebased.levels.len());
        let levels: Vec<Level> = rebased.levels[depth..].to_vec();
        let generators = levels.first().map(|l| l.gens.clone()).unwrap_or_default();
        let mut levels = levels;
        for level in levels.iter_mut() {
            level.progress = (level.orbit.len(), 0);
        }
        Ok(PermGroup {
            degree: self.degree,
            generators,
            levels,
        })
    }

    /// Number of orbits of a point stabilizer; requires transitivity.
    pub fn rank(&self) -> Result<usize> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let stab = self.stabilizer(0)?;
        Ok(stab.orbits().len())
    }

    /// Transitive on ordered `k`-tuples of distinct points, decided along a
    /// chain with base prefix `0, .., k-1`.
    pub fn is_k_transitive(&self, k: usize) -> Result<bool> {
        if k > self.degree {
            return Err(Error::InvalidParameter(alloc::format!(
                "k = {k} exceeds degree {}",
                self.degree
            )));
        }
        if k == 0 {
            return Ok(true);
        }
        let prefix: Vec<usize> = (0..k).collect();
        let chain = PermGroup::with_base(self.degree, &self.generators, &prefix)?;
        Ok((0..k).all(|i| chain.levels.get(i).map_or(1, |l| l.orbit.len()) == self.degree - i))
    }

    /// Every element, for small groups (refused above `limit`).
    pub fn elements(&self, limit: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > limit as u128 {
            return Err(Error::TooLarge {
                size: usize::try_from(order).unwrap_or(usize::MAX),
                max: limit,
            });
        }
        let mut out = alloc::vec![Permutation::identity(self.degree)];
        // Each element is a product u_l * .. * u_0 of transversal elements.
        for level in self.levels.iter().rev() {
            let reps: Vec<Permutation> = level
                .inverse_reps
                .iter()
                .map(Permutation::inverse)
                .collect();
            let mut next = Vec::with_capacity(out.len() * reps.len());
            for g in &out {
                for u in &reps {
                    next.push(g.then(u));
                }
            }
            out = next;
        }
        Ok(out)
    }
}

pub(crate) fn orbit_of(degree: usize, gens: &[Permutation], point: usize) -> Vec<usize> {
    let mut seen = alloc::vec![false; degree];
    seen[point] = true;
    let mut orbit = alloc::vec![point];
    let mut head = 0;
    while head < orbit.len() {
        let x = orbit[head];
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
        head += 1;
    }
    orbit
}

pub(crate) fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = alloc::vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        let mut orbit = orbit_of(degree, gens, start);
        for &x in &orbit {
            seen[x] = true;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cycle(n: usize) -> Permutation {
        Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect()).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        for n in 2..=8 {
            let g = PermGroup::new(n, &[Permutation::transposition(n, 0, 1), cycle(n)]).unwrap();
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(g.order(), fact);
            assert!(g.is_k_transitive(n).unwrap());
        }
    }

    #[test]
    fn alternating_group_excludes_transposition() {
        let three = Permutation::from_images(vec![1, 2, 0, 3]).unwrap();
        let other = Permutation::from_images(vec![0, 2, 3, 1]).unwrap();
        let a4 = PermGroup::new(4, &[three, other]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&Permutation::transposition(4, 0, 1)));
        assert!(a4.contains(&Permutation::from_images(vec![1, 0, 3, 2]).unwrap()));
        assert!(a4.is_k_transitive(2).unwrap());
        assert!(!a4.is_k_transitive(3).unwrap() || a4.order() >= 24);
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::new(5, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.orbits().len(), 5);
        assert!(g.contains(&Permutation::identity(5)));
        let g = PermGroup::new(3, &[Permutation::identity(3)]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn stabilizer_matches_orbit_stabilizer() {
        let n = 6;
        let g = PermGroup::new(n, &[Permutation::transposition(n, 0, 1), cycle(n)]).unwrap();
        let s = g.stabilizer(3).unwrap();
        assert_eq!(s.order(), 120);
        assert!(s.generators().iter().all(|h| h.image(3) == 3));
        let s2 = g.pointwise_stabilizer(&[0, 5]).unwrap();
        assert_eq!(s2.order(), 24);
    }

    #[test]
    fn elements_of_small_group() {
        let g = PermGroup::new(4, &[cycle(4)]).unwrap();
        let mut elems = g.elements(100).unwrap();
        elems.sort();
        elems.dedup();
        assert_eq!(elems.len(), 4);
        assert!(g.elements(2).is_err());
    }

    #[test]
    fn degree_mismatch() {
        assert!(matches!(
            PermGroup::new(4, &[cycle(3)]),
            Err(Error::DegreeMismatch { .. })
        ));
    }
}
