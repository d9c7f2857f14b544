//! Finitely presented groups on three involutory generators, and Todd–Coxeter
//! coset enumeration (HLT strategy with lookahead and table compaction).
//!
//! Coset numbering is deterministic: first defined, first numbered, and
//! coincidences always keep the smaller number alive. The table stores one
//! column per generator; since every generator is an involution the columns
//! are their own inverse columns.

use serde::{Deserialize, Serialize};

use crate::perm::{Perm, PermGroup};
use crate::words::{Letter, Word};

/// A presentation on the generators `a`, `b`, `c`, optionally remembering the
/// Coxeter parameters (p, q) it extends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    relators: Vec<Word>,
    coxeter: Option<(usize, usize)>,
    extras: Vec<Word>,
}

impl Presentation {
    pub fn new(relators: Vec<Word>) -> Presentation {
        let relators: Vec<Word> = relators
            .into_iter()
            .map(|w| w.free_reduce())
            .filter(|w| !w.is_empty())
            .collect();
        Presentation {
            extras: relators.clone(),
            relators,
            coxeter: None,
        }
    }

    /// The string Coxeter presentation [p, q] — relators a², b², c², (ab)^p,
    /// (bc)^q, (ac)² — plus any extra relators.
    pub fn coxeter_plus(p: usize, q: usize, extras: Vec<Word>) -> Presentation {
        assert!(p >= 2 && q >= 2, "Coxeter exponents must be at least 2");
        let mut relators = vec![
            Word::parse("aa"),
            Word::parse("bb"),
            Word::parse("cc"),
            Word::parse("ab").pow(p),
            Word::parse("bc").pow(q),
            Word::parse("ac").pow(2),
        ];
        let extras: Vec<Word> = extras
            .into_iter()
            .map(|w| w.free_reduce())
            .filter(|w| !w.is_empty())
            .collect();
        relators.extend(extras.iter().cloned());
        Presentation {
            relators,
            coxeter: Some((p, q)),
            extras,
        }
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn coxeter(&self) -> Option<(usize, usize)> {
        self.coxeter
    }

    pub fn extra_relators(&self) -> &[Word] {
        &self.extras
    }
}

#[derive(Serialize, Deserialize)]
struct PresentationWire {
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<usize>,
    extra_relators: Vec<Word>,
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let wire = PresentationWire {
            p: self.coxeter.map(|c| c.0),
            q: self.coxeter.map(|c| c.1),
            extra_relators: self.extras.clone(),
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Presentation, D::Error> {
        let wire = PresentationWire::deserialize(d)?;
        match (wire.p, wire.q) {
            (Some(p), Some(q)) => Ok(Presentation::coxeter_plus(p, q, wire.extra_relators)),
            _ => Ok(Presentation::new(wire.extra_relators)),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum EnumerationStatus {
    Closed,
    CapExceeded,
}

/// The result of a coset enumeration. When closed, the columns define a
/// transitive action of the presented group on the cosets.
#[derive(Clone, Debug)]
pub struct CosetTable {
    rows: Vec<[u32; 3]>,
    status: EnumerationStatus,
}

impl CosetTable {
    pub fn status(&self) -> EnumerationStatus {
        self.status
    }

    pub fn is_closed(&self) -> bool {
        self.status == EnumerationStatus::Closed
    }

    pub fn coset_count(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, coset: usize, letter: Letter) -> usize {
        self.rows[coset][letter.index()] as usize
    }

    pub fn trace(&self, start: usize, word: &Word) -> usize {
        word.letters().iter().fold(start, |c, &l| self.apply(c, l))
    }

    /// The action of one generator on the cosets as a permutation.
    pub fn column_perm(&self, letter: Letter) -> Perm {
        Perm::from_images(
            self.rows
                .iter()
                .map(|row| row[letter.index()] as usize)
                .collect(),
        )
    }

    /// The permutation group generated by the three columns; for a closed
    /// table on the trivial subgroup this is the presented group's regular
    /// action.
    pub fn column_group(&self) -> PermGroup {
        PermGroup::from_generators(
            self.rows.len(),
            vec![
                self.column_perm(Letter::A),
                self.column_perm(Letter::B),
                self.column_perm(Letter::C),
            ],
        )
    }
}

const UNDEF: u32 = u32::MAX;

struct Enumerator {
    rows: Vec<[u32; 3]>,
    rep: Vec<u32>,
    alive: usize,
    cap: usize,
}

impl Enumerator {
    fn new(cap: usize) -> Enumerator {
        Enumerator {
            rows: vec![[UNDEF; 3]],
            rep: vec![0],
            alive: 1,
            cap,
        }
    }

    fn is_alive(&self, a: u32) -> bool {
        self.rep[a as usize] == a
    }

    fn find(&mut self, mut a: u32) -> u32 {
        while self.rep[a as usize] != a {
            let parent = self.rep[a as usize];
            self.rep[a as usize] = self.rep[parent as usize];
            a = self.rep[a as usize];
        }
        a
    }

    fn define(&mut self, from: u32, x: usize) -> Option<u32> {
        if self.alive >= self.cap {
            return None;
        }
        let new = self.rows.len() as u32;
        self.rows.push([UNDEF; 3]);
        self.rep.push(new);
        self.alive += 1;
        self.rows[from as usize][x] = new;
        self.rows[new as usize][x] = from;
        Some(new)
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        // the smaller (earlier-defined) number survives
        let (survivor, dead) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.rep[dead as usize] = survivor;
        self.alive -= 1;
        queue.push(dead);
    }

    /// Processes a coincidence and its cascade, rewiring every reference to a
    /// dead coset onto its surviving representative.
    fn coincide(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let dead = queue[i];
            i += 1;
            for x in 0..3 {
                let delta = self.rows[dead as usize][x];
                if delta == UNDEF {
                    continue;
                }
                // drop the symmetric entry pointing back at the dead coset
                self.rows[delta as usize][x] = UNDEF;
                let mu = self.find(dead);
                let nu = self.find(delta);
                let mu_entry = self.rows[mu as usize][x];
                if mu_entry != UNDEF {
                    self.merge(nu, mu_entry, &mut queue);
                } else {
                    let nu_entry = self.rows[nu as usize][x];
                    if nu_entry != UNDEF {
                        self.merge(mu, nu_entry, &mut queue);
                    } else {
                        self.rows[mu as usize][x] = nu;
                        self.rows[nu as usize][x] = mu;
                    }
                }
            }
        }
    }

    /// Scans `rel` at `alpha`, defining cosets to fill any gap (HLT); returns
    /// false when the live-coset cap blocks a definition.
    fn scan_and_fill(&mut self, alpha: u32, rel: &[usize]) -> bool {
        let mut f = alpha;
        let mut b = alpha;
        let mut i: isize = 0;
        let mut j: isize = rel.len() as isize - 1;
        loop {
            while i <= j && self.rows[f as usize][rel[i as usize]] != UNDEF {
                f = self.rows[f as usize][rel[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincide(f, b);
                }
                return true;
            }
            while j >= i && self.rows[b as usize][rel[j as usize]] != UNDEF {
                b = self.rows[b as usize][rel[j as usize]];
                j -= 1;
            }
            if j < i {
                self.coincide(f, b);
                return true;
            }
            if i == j {
                let x = rel[i as usize];
                self.rows[f as usize][x] = b;
                self.rows[b as usize][x] = f;
                return true;
            }
            match self.define(f, rel[i as usize]) {
                Some(new) => {
                    f = new;
                    i += 1;
                }
                None => return false,
            }
        }
    }

    /// Deduction-only scan used by the lookahead pass: closes gaps of one and
    /// records coincidences, but never defines cosets.
    fn scan_no_fill(&mut self, alpha: u32, rel: &[usize]) {
        let mut f = alpha;
        let mut b = alpha;
        let mut i: isize = 0;
        let mut j: isize = rel.len() as isize - 1;
        while i <= j && self.rows[f as usize][rel[i as usize]] != UNDEF {
            f = self.rows[f as usize][rel[i as usize]];
            i += 1;
        }
        if i > j {
            if f != b {
                self.coincide(f, b);
            }
            return;
        }
        while j >= i && self.rows[b as usize][rel[j as usize]] != UNDEF {
            b = self.rows[b as usize][rel[j as usize]];
            j -= 1;
        }
        if j < i {
            self.coincide(f, b);
        } else if i == j {
            let x = rel[i as usize];
            self.rows[f as usize][x] = b;
            self.rows[b as usize][x] = f;
        }
    }

    /// Renumbers live cosets contiguously, preserving their relative order
    /// (so "first defined, first numbered" survives compaction). Returns the
    /// old-to-new index map. Live rows reference only live cosets once all
    /// coincidences are processed, so remapping is total.
    fn compact(&mut self) -> Vec<u32> {
        let mut remap = vec![UNDEF; self.rows.len()];
        let mut next = 0u32;
        for i in 0..self.rows.len() as u32 {
            if self.is_alive(i) {
                remap[i as usize] = next;
                next += 1;
            }
        }
        let mut rows = Vec::with_capacity(self.alive);
        for i in 0..self.rows.len() {
            if self.is_alive(i as u32) {
                let row = self.rows[i];
                rows.push([
                    if row[0] == UNDEF {
                        UNDEF
                    } else {
                        remap[row[0] as usize]
                    },
                    if row[1] == UNDEF {
                        UNDEF
                    } else {
                        remap[row[1] as usize]
                    },
                    if row[2] == UNDEF {
                        UNDEF
                    } else {
                        remap[row[2] as usize]
                    },
                ]);
            }
        }
        self.rows = rows;
        self.rep = (0..self.alive as u32).collect();
        remap
    }

    /// Deduction-only pass over every live coset and relator.
    fn lookahead(&mut self, relators: &[Vec<usize>]) {
        for beta in 0..self.rows.len() as u32 {
            if !self.is_alive(beta) {
                continue;
            }
            for rel in relators {
                if !self.is_alive(beta) {
                    break;
                }
                self.scan_no_fill(beta, rel);
            }
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup_gens` in the
/// presented group. With no subgroup generators and a closed table, the coset
/// count is the order of the presented group.
pub fn todd_coxeter(p: &Presentation, subgroup_gens: &[Word], cap: usize) -> CosetTable {
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|w| w.letters().iter().map(|l| l.index()).collect())
        .collect();
    let mut e = Enumerator::new(cap);

    for gen in subgroup_gens {
        let rel: Vec<usize> = gen.letters().iter().map(|l| l.index()).collect();
        if rel.is_empty() {
            continue;
        }
        if !e.scan_and_fill(0, &rel) {
            e.compact();
            return CosetTable {
                rows: e.rows,
                status: EnumerationStatus::CapExceeded,
            };
        }
    }

    let mut alpha: u32 = 0;
    let mut exhausted = false;
    while (alpha as usize) < e.rows.len() {
        if e.is_alive(alpha) {
            for rel in &relators {
                if !e.is_alive(alpha) {
                    break;
                }
                if !e.scan_and_fill(alpha, rel) {
                    // at the cap: run a deduction-only lookahead pass; any
                    // collapse it triggers frees live slots, then the
                    // blocked scan is retried once
                    e.lookahead(&relators);
                    if !e.is_alive(alpha) {
                        break; // the blocked coset collapsed away
                    }
                    if e.alive >= e.cap || !e.scan_and_fill(alpha, rel) {
                        exhausted = true;
                        break;
                    }
                }
            }
            // periodic compaction keeps the table dense after collapses
            if !exhausted && e.is_alive(alpha) && e.rows.len() > 4096 && e.rows.len() > 2 * e.alive
            {
                let remap = e.compact();
                alpha = remap[alpha as usize];
            }
        }
        if exhausted {
            break;
        }
        alpha += 1;
    }

    e.compact();
    CosetTable {
        rows: e.rows,
        status: if exhausted {
            EnumerationStatus::CapExceeded
        } else {
            EnumerationStatus::Closed
        },
    }
}

/// Outcome of comparing a presentation against a concrete permutation group
/// on named generators. A surjection between finite groups of equal order is
/// an isomorphism, so `relators_hold` together with `orders_equal` certifies
/// the match; an enumeration that hits its cap leaves the presented order
/// undetermined and the verdict negative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchReport {
    pub relators_hold: bool,
    pub group_order: u64,
    pub presented_order: Option<u64>,
    pub isomorphic: bool,
}

pub fn match_presentation(
    p: &Presentation,
    gens: &[Perm; 3],
    group: &PermGroup,
    coset_cap: usize,
) -> MatchReport {
    let relators_hold = p
        .relators()
        .iter()
        .all(|w| w.evaluate_in(gens).is_identity());
    let table = todd_coxeter(p, &[], coset_cap);
    let presented_order = if table.is_closed() {
        Some(table.coset_count() as u64)
    } else {
        None
    };
    let group_order = group.order();
    MatchReport {
        relators_hold,
        group_order,
        presented_order,
        isomorphic: relators_hold && presented_order == Some(group_order),
    }
}
