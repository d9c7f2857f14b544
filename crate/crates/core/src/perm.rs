//! Permutations and permutation groups with deterministic stabilizer chains.
//!
//! Groups are stored as a base and strong generating set built by a
//! deterministic Schreier–Sims procedure: base points are the canonical
//! strictly increasing sequence (least moved point of each successive
//! stabilizer) and strong generators are processed in a fixed order, so
//! repeated runs produce bit-identical chains.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

/// Raised when a full-enumeration operation would exceed its element cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("subgroup enumeration exceeded cap of {cap} elements")]
pub struct CapExceeded {
    pub cap: usize,
}

/// A permutation of `{0, …, degree−1}`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image table; panics if it is not a
    /// bijection on `{0, …, len−1}`.
    pub fn from_images(images: Vec<usize>) -> Perm {
        let mut seen = vec![false; images.len()];
        for &img in &images {
            assert!(img < images.len(), "image {img} out of range");
            assert!(!seen[img], "image {img} repeated: not a bijection");
            seen[img] = true;
        }
        Perm { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Perm {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for i in 0..cycle.len() {
                images[cycle[i]] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Composition applying `self` first, then `other` (left-to-right, the
    /// same direction in which words act on flags).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Perm { images }
    }

    /// `g⁻¹ · self · g` in left-to-right composition.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().compose(self).compose(g)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Order of the permutation: the lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, len| acc.lcm(&(len as u64)))
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p];
            }
            lengths.push(len);
        }
        lengths
    }

    /// Nontrivial cycles in canonical order (each led by its least point).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn smallest_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &img)| *i != img)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

/// One level of a stabilizer chain: a base point together with the orbit and
/// transversal of the group generated by the strong generators active here.
struct Level {
    base: usize,
    orbit: Vec<usize>,
    // transversal[p] maps base to p; entries are written once and never change
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Level {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Perm::identity(degree));
        Level {
            base,
            orbit: vec![base],
            transversal,
        }
    }
}

/// Deterministic stabilizer chain. A strong generator assigned at level `j`
/// fixes the bases of levels `0..j` and participates in the generating sets
/// of all levels `0..=j`.
struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    sgens: Vec<Perm>,
    slevel: Vec<usize>,
    base_hint: Vec<usize>,
}

type WorkItem = (usize, usize, usize); // (level, orbit point, strong generator index)

impl StabChain {
    fn build(degree: usize, gens: &[Perm], base_hint: Vec<usize>) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
            sgens: Vec::new(),
            slevel: Vec::new(),
            base_hint,
        };
        let mut work: VecDeque<WorkItem> = VecDeque::new();
        for g in gens {
            chain.insert(g.clone(), 0, &mut work);
            chain.drain(&mut work);
        }
        chain
    }

    /// Processes queued Schreier generators until every (point, generator)
    /// pair at every level sifts to the identity through the levels below.
    fn drain(&mut self, work: &mut VecDeque<WorkItem>) {
        while let Some((lvl, p, gi)) = work.pop_front() {
            let gen = self.sgens[gi].clone();
            let q = gen.apply(p);
            let (u_p, u_q) = {
                let level = &self.levels[lvl];
                (
                    level.transversal[p]
                        .clone()
                        .expect("orbit point has transversal"),
                    level.transversal[q]
                        .clone()
                        .expect("orbit closed under level generators"),
                )
            };
            let schreier = u_p.compose(&gen).compose(&u_q.inverse());
            self.insert(schreier, lvl + 1, work);
        }
    }

    /// Sifts `g` starting at `start`; a nontrivial residue becomes a new
    /// strong generator at the level where sifting stalls.
    fn insert(&mut self, g: Perm, start: usize, work: &mut VecDeque<WorkItem>) {
        let mut h = g;
        let mut k = start;
        loop {
            if h.is_identity() {
                return;
            }
            if k == self.levels.len() {
                let base = self
                    .base_hint
                    .get(k)
                    .copied()
                    .unwrap_or_else(|| h.smallest_moved().expect("nontrivial residue"));
                self.levels.push(Level::new(self.degree, base));
            }
            let base = self.levels[k].base;
            let img = h.apply(base);
            if img == base {
                k += 1;
                continue;
            }
            match self.levels[k].transversal[img].clone() {
                Some(u) => {
                    h = h.compose(&u.inverse());
                    k += 1;
                }
                None => {
                    self.add_strong_gen(k, h, work);
                    return;
                }
            }
        }
    }

    fn add_strong_gen(&mut self, lvl: usize, g: Perm, work: &mut VecDeque<WorkItem>) {
        let gi = self.sgens.len();
        self.sgens.push(g);
        self.slevel.push(lvl);
        for k in 0..=lvl {
            self.extend_level(k, gi, work);
        }
    }

    /// Admits strong generator `gi` into level `k`: queues Schreier pairs for
    /// the existing orbit, then re-closes the orbit, queueing pairs for every
    /// newly reached point.
    fn extend_level(&mut self, k: usize, gi: usize, work: &mut VecDeque<WorkItem>) {
        let old_len = self.levels[k].orbit.len();
        for idx in 0..old_len {
            work.push_back((k, self.levels[k].orbit[idx], gi));
        }
        let active: Vec<usize> = (0..self.sgens.len())
            .filter(|&i| self.slevel[i] >= k)
            .collect();
        let mut idx = 0;
        while idx < self.levels[k].orbit.len() {
            let p = self.levels[k].orbit[idx];
            for &g in &active {
                let q = self.sgens[g].apply(p);
                if self.levels[k].transversal[q].is_none() {
                    let u = self.levels[k].transversal[p]
                        .clone()
                        .expect("orbit point has transversal")
                        .compose(&self.sgens[g]);
                    self.levels[k].transversal[q] = Some(u);
                    self.levels[k].orbit.push(q);
                    for &g2 in &active {
                        work.push_back((k, q, g2));
                    }
                }
            }
            idx += 1;
        }
    }

    fn sift(&self, g: &Perm) -> Perm {
        let mut h = g.clone();
        for level in &self.levels {
            let img = h.apply(level.base);
            if img == level.base {
                continue;
            }
            match &level.transversal[img] {
                Some(u) => h = h.compose(&u.inverse()),
                None => return h,
            }
        }
        h
    }

    fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    /// Least point moved by the subgroup fixing the first `depth` base points
    /// (the group generated by the strong generators at levels ≥ depth).
    fn smallest_moved_at_depth(&self, depth: usize) -> Option<usize> {
        (0..self.sgens.len())
            .filter(|&i| self.slevel[i] >= depth)
            .filter_map(|i| self.sgens[i].smallest_moved())
            .min()
    }

    fn gens_at_depth(&self, depth: usize) -> Vec<Perm> {
        (0..self.sgens.len())
            .filter(|&i| self.slevel[i] >= depth)
            .map(|i| self.sgens[i].clone())
            .collect()
    }
}

/// A permutation group with a deterministic base and strong generating set.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: StabChain,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_generators(degree, Vec::new())
    }

    /// Builds the stabilizer chain for the group generated by `gens`.
    ///
    /// The base is the canonical strictly increasing sequence: each base
    /// point is the least point moved by the stabilizer of the previous
    /// ones. Group order is O(1) afterwards.
    pub fn from_generators(degree: usize, gens: Vec<Perm>) -> PermGroup {
        for g in &gens {
            assert_eq!(g.degree(), degree, "degree mismatch");
        }
        let chain = Self::canonical_chain(degree, &gens, Vec::new());
        PermGroup {
            degree,
            generators: gens,
            chain,
        }
    }

    /// Rebuilds the chain until the lazy base agrees with the canonical
    /// increasing base determined by the group itself. The number of rebuilds
    /// is the chain length, which is small for the groups handled here.
    fn canonical_chain(degree: usize, gens: &[Perm], forced_prefix: Vec<usize>) -> StabChain {
        let mut hint = forced_prefix;
        loop {
            let chain = StabChain::build(degree, gens, hint.clone());
            match chain.smallest_moved_at_depth(hint.len()) {
                Some(b) => hint.push(b),
                None => return chain,
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.chain.order()
    }

    pub fn base_points(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.base).collect()
    }

    /// Membership by sifting through the chain.
    pub fn contains(&self, p: &Perm) -> bool {
        assert_eq!(p.degree(), self.degree, "degree mismatch");
        self.chain.sift(p).is_identity()
    }

    /// Orbit of a point under the group, in deterministic discovery order.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        assert!(x < self.degree, "point out of range");
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut orbit = vec![x];
        let mut idx = 0;
        while idx < orbit.len() {
            let p = orbit[idx];
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
            idx += 1;
        }
        orbit
    }

    /// The subgroup fixing `x`, as a new group with its own chain.
    pub fn point_stabilizer(&self, x: usize) -> PermGroup {
        assert!(x < self.degree, "point out of range");
        let chain = Self::canonical_chain(self.degree, &self.generators, vec![x]);
        let stab_gens = chain.gens_at_depth(1);
        PermGroup::from_generators(self.degree, stab_gens)
    }

    /// True iff conjugates of `h`'s generators by this group's generators all
    /// lie in `h`. Requires `h` to be a subgroup of this group.
    pub fn is_normal(&self, h: &PermGroup) -> bool {
        assert_eq!(self.degree, h.degree, "degree mismatch");
        self.generators.iter().all(|g| {
            h.generators
                .iter()
                .all(|hg| h.contains(&hg.conjugate_by(g)))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, g)| self.generators[i + 1..].iter().all(|h| g.commutes_with(h)))
    }

    /// True iff `p` commutes with every generator.
    pub fn is_central(&self, p: &Perm) -> bool {
        assert_eq!(p.degree(), self.degree, "degree mismatch");
        self.generators.iter().all(|g| g.commutes_with(p))
    }

    /// All group elements in deterministic closure order, or an error when
    /// the group is larger than `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Perm>, CapExceeded> {
        let mut elems = vec![Perm::identity(self.degree)];
        let mut seen = std::collections::HashSet::new();
        seen.insert(elems[0].clone());
        let mut idx = 0;
        while idx < elems.len() {
            let e = elems[idx].clone();
            for g in &self.generators {
                let prod = e.compose(g);
                if seen.insert(prod.clone()) {
                    if elems.len() >= cap {
                        return Err(CapExceeded { cap });
                    }
                    elems.push(prod);
                }
            }
            idx += 1;
        }
        Ok(elems)
    }

    /// Intersection of two subgroups of a common overgroup, computed by
    /// enumerating the smaller one and filtering by membership in the other.
    pub fn intersection(
        h1: &PermGroup,
        h2: &PermGroup,
        cap: usize,
    ) -> Result<PermGroup, CapExceeded> {
        assert_eq!(h1.degree, h2.degree, "degree mismatch");
        let (small, large) = if h1.order() <= h2.order() {
            (h1, h2)
        } else {
            (h2, h1)
        };
        let gens: Vec<Perm> = small
            .elements(cap)?
            .into_iter()
            .filter(|e| large.contains(e))
            .collect();
        Ok(PermGroup::from_generators(h1.degree, gens))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree={}, order={}, base={:?})",
            self.degree,
            self.order(),
            self.base_points()
        )
    }
}
