//! Generating sets for flag stabilizers.
//!
//! A spanning tree of the flag graph yields one stabilizer generator per
//! non-tree edge (walk out along the tree, across the edge, and back). For
//! sphere maps a much smaller set suffices: one lollipop word per face and
//! per vertex, a tree stem to the cell, once around it, and back down the
//! stem. The explicit prism and antiprism word families realize these
//! lollipops in closed form.

use serde::Serialize;
use thiserror::Error;

use crate::flags::{Family, FlagSystem, MapError, MapKind};
use crate::perm::PermGroup;
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilizerError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("flag graph is disconnected; no spanning tree exists")]
    Disconnected,
    #[error("map is not spherical (Euler characteristic {chi}); lollipop generators need a planar flag graph")]
    NotSpherical { chi: i64 },
    #[error("word {word} moves the base flag {base}")]
    WordMovesBase { word: Word, base: usize },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TreeStrategy {
    Bfs,
    Dfs,
    PrismPaper,
    AntiprismPaper,
}

/// A spanning tree of the flag graph, rooted at a flag.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    root: usize,
    parent: Vec<Option<(usize, Letter)>>,
    strategy: TreeStrategy,
}

impl SpanningTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn strategy(&self) -> TreeStrategy {
        self.strategy
    }

    pub fn edge_count(&self) -> usize {
        self.parent.iter().filter(|p| p.is_some()).count()
    }

    /// True iff the flag-graph edge (flag, flag·r_label) belongs to the tree.
    pub fn contains_edge(&self, flag: usize, neighbor: usize, label: Letter) -> bool {
        self.parent[flag] == Some((neighbor, label)) || self.parent[neighbor] == Some((flag, label))
    }

    /// The word walking the tree from the root to the given flag.
    pub fn path_from_root(&self, flag: usize) -> Word {
        let mut letters = Vec::new();
        let mut current = flag;
        while let Some((up, label)) = self.parent[current] {
            letters.push(label);
            current = up;
        }
        letters.reverse();
        Word::from_letters(letters)
    }
}

/// Builds a spanning tree with the requested strategy. `bfs` and `dfs` visit
/// flags in index order with label order r0 < r1 < r2; the paper strategies
/// build the periodic per-column trees of the canonical prism or antiprism.
pub fn spanning_tree(
    fs: &FlagSystem,
    root: usize,
    strategy: TreeStrategy,
) -> Result<SpanningTree, StabilizerError> {
    let n_flags = fs.flag_count();
    assert!(root < n_flags, "root flag out of range");
    let parent = match strategy {
        TreeStrategy::Bfs => {
            let mut parent = vec![None; n_flags];
            let mut seen = vec![false; n_flags];
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(f) = queue.pop_front() {
                for i in 0..3 {
                    let g = fs.adjacency(i).apply(f);
                    if !seen[g] {
                        seen[g] = true;
                        parent[g] = Some((f, Letter::from_index(i)));
                        queue.push_back(g);
                    }
                }
            }
            parent
        }
        TreeStrategy::Dfs => {
            let mut parent = vec![None; n_flags];
            let mut seen = vec![false; n_flags];
            seen[root] = true;
            // preorder with an explicit (flag, next label) stack
            let mut stack = vec![(root, 0usize)];
            while let Some(&mut (f, ref mut next)) = stack.last_mut() {
                if *next == 3 {
                    stack.pop();
                    continue;
                }
                let i = *next;
                *next += 1;
                let g = fs.adjacency(i).apply(f);
                if !seen[g] {
                    seen[g] = true;
                    parent[g] = Some((f, Letter::from_index(i)));
                    stack.push((g, 0));
                }
            }
            parent
        }
        TreeStrategy::PrismPaper => orient(fs, root, &prism_paper_edges(fs)?)?,
        TreeStrategy::AntiprismPaper => orient(fs, root, &antiprism_paper_edges(fs)?)?,
    };
    let reached = 1 + parent.iter().filter(|p| p.is_some()).count();
    if reached != n_flags {
        return Err(StabilizerError::Disconnected);
    }
    Ok(SpanningTree {
        root,
        parent,
        strategy,
    })
}

/// Turns an explicit tree edge list into parent pointers from the root.
fn orient(
    fs: &FlagSystem,
    root: usize,
    edges: &[(usize, usize, Letter)],
) -> Result<Vec<Option<(usize, Letter)>>, StabilizerError> {
    let n = fs.flag_count();
    let mut adj: Vec<Vec<(usize, Letter)>> = vec![Vec::new(); n];
    for &(a, b, l) in edges {
        adj[a].push((b, l));
        adj[b].push((a, l));
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(f) = queue.pop_front() {
        for &(g, l) in &adj[f] {
            if !seen[g] {
                seen[g] = true;
                parent[g] = Some((f, l));
                queue.push_back(g);
            }
        }
    }
    if 1 + parent.iter().filter(|p| p.is_some()).count() != n {
        return Err(StabilizerError::Disconnected);
    }
    Ok(parent)
}

/// Walks the 2s-cycle of a face from `start`, alternating r1/r0 steps, and
/// returns all cycle edges but the last.
fn face_path_edges(fs: &FlagSystem, start: usize) -> Vec<(usize, usize, Letter)> {
    let mut edges = Vec::new();
    let mut current = start;
    let mut label = 1usize; // begin with r1
    loop {
        let next = fs.adjacency(label).apply(current);
        if next == start {
            break;
        }
        edges.push((current, next, Letter::from_index(label)));
        current = next;
        label = 1 - label;
    }
    edges
}

/// The periodic tree of the canonical prism: per square column, the square's
/// flag cycle opened into a path plus the four r2 spokes to the bottom/top
/// polygon flags; consecutive columns linked by one r1 edge on the bottom
/// polygon.
fn prism_paper_edges(fs: &FlagSystem) -> Result<Vec<(usize, usize, Letter)>, StabilizerError> {
    let MapKind::Prism(n) = *fs.kind() else {
        return Err(StabilizerError::Map(MapError::NotCanonical {
            expected: "prism",
        }));
    };
    let flag = |vertex: usize, u: usize, v: usize, face: usize| {
        let edge = fs.edge_between(u, v).expect("canonical prism edge");
        fs.flag_index(crate::flags::FlagLabel { vertex, edge, face })
            .expect("canonical prism flag")
    };
    let mut edges = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        let square = 2 + i;
        edges.extend(face_path_edges(fs, flag(i, i, j, square)));
        for (v, a, b, ngon) in [
            (i, i, j, 0),
            (j, i, j, 0),
            (n + i, n + i, n + j, 1),
            (n + j, n + i, n + j, 1),
        ] {
            edges.push((flag(v, a, b, square), flag(v, a, b, ngon), Letter::C));
        }
        if i + 1 < n {
            let from = flag(j, i, j, 0);
            let to = fs.adjacency(1).apply(from);
            edges.push((from, to, Letter::B));
        }
    }
    Ok(edges)
}

/// The periodic tree of the canonical antiprism: per triangle pair, both
/// triangle cycles opened into paths, one r2 edge across their shared
/// lateral edge, and the four r2 spokes to the polygon flags; columns linked
/// as for the prism.
fn antiprism_paper_edges(fs: &FlagSystem) -> Result<Vec<(usize, usize, Letter)>, StabilizerError> {
    let MapKind::Antiprism(n) = *fs.kind() else {
        return Err(StabilizerError::Map(MapError::NotCanonical {
            expected: "antiprism",
        }));
    };
    let flag = |vertex: usize, u: usize, v: usize, face: usize| {
        let edge = fs.edge_between(u, v).expect("canonical antiprism edge");
        fs.flag_index(crate::flags::FlagLabel { vertex, edge, face })
            .expect("canonical antiprism flag")
    };
    let mut edges = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        let up = 2 + 2 * i; // [i, j, n+i]
        let down = 3 + 2 * i; // [n+i, n+j, j]
        edges.extend(face_path_edges(fs, flag(i, i, j, up)));
        edges.extend(face_path_edges(fs, flag(n + i, n + i, n + j, down)));
        // across the shared lateral edge {j, n+i}
        edges.push((flag(j, j, n + i, up), flag(j, j, n + i, down), Letter::C));
        for (v, a, b, tri, ngon) in [
            (i, i, j, up, 0),
            (j, i, j, up, 0),
            (n + i, n + i, n + j, down, 1),
            (n + j, n + i, n + j, down, 1),
        ] {
            edges.push((flag(v, a, b, tri), flag(v, a, b, ngon), Letter::C));
        }
        if i + 1 < n {
            let from = flag(j, i, j, 0);
            let to = fs.adjacency(1).apply(from);
            edges.push((from, to, Letter::B));
        }
    }
    Ok(edges)
}

/// One word per non-tree edge (Ψ, Υ): tree path to Ψ, across the edge, tree
/// path back from Υ. The evaluations generate the full stabilizer of the
/// root in the monodromy group.
pub fn schreier_generators(fs: &FlagSystem, tree: &SpanningTree) -> Vec<Word> {
    let mut words = Vec::new();
    for f in 0..fs.flag_count() {
        for i in 0..3 {
            let g = fs.adjacency(i).apply(f);
            if f < g && !tree.contains_edge(f, g, Letter::from_index(i)) {
                let out = tree.path_from_root(f);
                let back = tree.path_from_root(g).inverse();
                words.push(
                    out.concat(&Word::from_letters(vec![Letter::from_index(i)]))
                        .concat(&back),
                );
            }
        }
    }
    words
}

/// A face or vertex of the map, the cells lollipop words walk around.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Cell {
    Face(usize),
    Vertex(usize),
}

/// One lollipop word per face and per vertex of a sphere map: the tree stem
/// to the least flag on the cell, (r0·r1)^size or (r1·r2)^degree around it,
/// and the stem reversed.
pub fn lollipop_generators(
    fs: &FlagSystem,
    tree: &SpanningTree,
) -> Result<Vec<(Cell, Word)>, StabilizerError> {
    let chi = fs.euler_characteristic();
    if chi != 2 {
        return Err(StabilizerError::NotSpherical { chi });
    }
    let fvec = fs.f_vector();
    let mut out = Vec::new();
    for face in 0..fvec.f {
        let least = (0..fs.flag_count())
            .find(|&i| fs.label(i).face == face)
            .expect("every face carries flags");
        let stem = tree.path_from_root(least);
        let loop_word = Word::parse("ab").pow(fs.face_size(face));
        out.push((
            Cell::Face(face),
            stem.concat(&loop_word).concat(&stem.inverse()),
        ));
    }
    for vertex in 0..fvec.v {
        let least = (0..fs.flag_count())
            .find(|&i| fs.label(i).vertex == vertex)
            .expect("every vertex carries flags");
        let stem = tree.path_from_root(least);
        let loop_word = Word::parse("bc").pow(fs.vertex_degree(vertex));
        out.push((
            Cell::Vertex(vertex),
            stem.concat(&loop_word).concat(&stem.inverse()),
        ));
    }
    Ok(out)
}

/// The closed-form stabilizer words for a prism or antiprism base flag.
#[derive(Clone, Debug)]
pub struct StabilizerWordFamily {
    pub family: Family,
    pub n: usize,
    entries: Vec<(String, Word)>,
}

impl StabilizerWordFamily {
    pub fn entries(&self) -> &[(String, Word)] {
        &self.entries
    }

    pub fn words(&self) -> Vec<Word> {
        self.entries.iter().map(|(_, w)| w.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Word> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, w)| w)
    }

    pub fn g(&self, k: isize) -> Option<&Word> {
        self.get(&format!("g_{k}"))
    }

    pub fn h(&self, k: isize) -> Option<&Word> {
        self.get(&format!("h_{k}"))
    }

    /// The closing word h_n = c(ab)ⁿc around a base polygon.
    pub fn h_n(&self) -> &Word {
        self.get(&format!("h_{}", self.n))
            .expect("family includes h_n")
    }

    /// The family with one named word removed.
    pub fn without(&self, name: &str) -> Vec<Word> {
        self.entries
            .iter()
            .filter(|(n, _)| n != name)
            .map(|(_, w)| w.clone())
            .collect()
    }
}

/// Prism family: g₋₁ = (ba)⁴, g_k = cb(ab)^k c(ab)⁴c(ba)^k bc for
/// k = 0…n−2, and h_n = c(ab)ⁿc.
pub fn prism_family(n: usize) -> Result<StabilizerWordFamily, MapError> {
    if n < 3 {
        return Err(MapError::TooFewSides { n });
    }
    let ab = Word::parse("ab");
    let ba = Word::parse("ba");
    let mut entries = vec![("g_-1".to_string(), ba.pow(4))];
    for k in 0..=n - 2 {
        let w = Word::parse("cb")
            .concat(&ab.pow(k))
            .concat(&Word::parse("c"))
            .concat(&ab.pow(4))
            .concat(&Word::parse("c"))
            .concat(&ba.pow(k))
            .concat(&Word::parse("bc"));
        entries.push((format!("g_{k}"), w));
    }
    let h_n = Word::parse("c")
        .concat(&ab.pow(n))
        .concat(&Word::parse("c"));
    entries.push((format!("h_{n}"), h_n));
    Ok(StabilizerWordFamily {
        family: Family::Prism,
        n,
        entries,
    })
}

/// Antiprism family: g₋₁ = (ba)³, h₋₁ = bc(ab)³cb,
/// g_k = cb(ab)^k c(ab)³c(ba)^k bc and h_k = cb(ab)^k cabc(ab)³cbac(ba)^k bc
/// for k = 0…n−2, and h_n = c(ab)ⁿc.
pub fn antiprism_family(n: usize) -> Result<StabilizerWordFamily, MapError> {
    if n < 3 {
        return Err(MapError::TooFewSides { n });
    }
    let ab = Word::parse("ab");
    let ba = Word::parse("ba");
    let mut entries = vec![("g_-1".to_string(), ba.pow(3))];
    for k in 0..=n - 2 {
        let w = Word::parse("cb")
            .concat(&ab.pow(k))
            .concat(&Word::parse("c"))
            .concat(&ab.pow(3))
            .concat(&Word::parse("c"))
            .concat(&ba.pow(k))
            .concat(&Word::parse("bc"));
        entries.push((format!("g_{k}"), w));
    }
    entries.push((
        "h_-1".to_string(),
        Word::parse("bc")
            .concat(&ab.pow(3))
            .concat(&Word::parse("cb")),
    ));
    for k in 0..=n - 2 {
        let w = Word::parse("cb")
            .concat(&ab.pow(k))
            .concat(&Word::parse("cabc"))
            .concat(&ab.pow(3))
            .concat(&Word::parse("cbac"))
            .concat(&ba.pow(k))
            .concat(&Word::parse("bc"));
        entries.push((format!("h_{k}"), w));
    }
    let h_n = Word::parse("c")
        .concat(&ab.pow(n))
        .concat(&Word::parse("c"));
    entries.push((format!("h_{n}"), h_n));
    Ok(StabilizerWordFamily {
        family: Family::Antiprism,
        n,
        entries,
    })
}

/// Result of checking that a word set generates the full stabilizer of a
/// flag: by transitivity the stabilizer has order |Mon| / flag count.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerVerdict {
    pub expected_order: u64,
    pub subgroup_order: u64,
    pub generates: bool,
}

pub fn verify_generates_stabilizer(
    fs: &FlagSystem,
    words: &[Word],
    base: usize,
) -> Result<StabilizerVerdict, StabilizerError> {
    let evaluations: Vec<_> = words.iter().map(|w| fs.evaluate(w)).collect();
    for (word, perm) in words.iter().zip(&evaluations) {
        if perm.apply(base) != base {
            return Err(StabilizerError::WordMovesBase {
                word: word.clone(),
                base,
            });
        }
    }
    let mon = PermGroup::from_generators(fs.flag_count(), fs.generators().to_vec());
    let expected_order = mon.order() / fs.flag_count() as u64;
    let subgroup = PermGroup::from_generators(fs.flag_count(), evaluations);
    let subgroup_order = subgroup.order();
    Ok(StabilizerVerdict {
        expected_order,
        subgroup_order,
        generates: subgroup_order == expected_order,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionCheck {
    pub name: String,
    pub pass: bool,
}

/// Outcome of the word-reduction and commutation identities satisfied by the
/// family words as flag permutations.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub family: Family,
    pub n: usize,
    pub items: Vec<ReductionCheck>,
}

impl ReductionReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|c| c.pass)
    }
}

/// Verifies, as equalities of flag permutations, the index reductions among
/// the family words, the h_n triviality rule, and the commutation of the
/// surviving generators on 4m-prisms / 3m-antiprisms.
pub fn reduction_checks(fs: &FlagSystem, family: Family) -> Result<ReductionReport, MapError> {
    let n = match (family, fs.kind()) {
        (Family::Prism, MapKind::Prism(n)) => *n,
        (Family::Antiprism, MapKind::Antiprism(n)) => *n,
        (Family::Prism, _) => return Err(MapError::NotCanonical { expected: "prism" }),
        (Family::Antiprism, _) => {
            return Err(MapError::NotCanonical {
                expected: "antiprism",
            })
        }
    };
    let words = match family {
        Family::Prism => prism_family(n)?,
        Family::Antiprism => antiprism_family(n)?,
    };
    let eval = |name: &str| fs.evaluate(words.get(name).expect("family word"));
    let mut items = Vec::new();
    match family {
        Family::Prism => {
            for k in 1..=n as isize - 2 {
                let lhs = eval(&format!("g_{k}"));
                let rhs = eval(&format!("g_{}", k - 2)).inverse();
                items.push(ReductionCheck {
                    name: format!("g_{k} = g_{}^-1", k - 2),
                    pass: lhs == rhs,
                });
            }
            items.push(ReductionCheck {
                name: format!("h_{n} trivial iff n = 0 mod 4"),
                pass: eval(&format!("h_{n}")).is_identity() == (n % 4 == 0),
            });
            if n % 4 == 0 {
                let g_m1 = eval("g_-1");
                let g_0 = eval("g_0");
                items.push(ReductionCheck {
                    name: "g_-1 and g_0 commute".to_string(),
                    pass: g_m1.commutes_with(&g_0),
                });
            }
        }
        Family::Antiprism => {
            for k in 2..=n as isize - 2 {
                let g_k = eval(&format!("g_{k}"));
                let h_km2 = eval(&format!("h_{}", k - 2));
                let g_km3 = eval(&format!("g_{}", k - 3));
                items.push(ReductionCheck {
                    name: format!("g_{k} = h_{}", k - 2),
                    pass: g_k == h_km2,
                });
                items.push(ReductionCheck {
                    name: format!("g_{k} = g_{}", k - 3),
                    pass: g_k == g_km3,
                });
            }
            items.push(ReductionCheck {
                name: format!("h_{n} trivial iff n = 0 mod 3"),
                pass: eval(&format!("h_{n}")).is_identity() == (n % 3 == 0),
            });
            if n % 3 == 0 {
                let g_m1 = eval("g_-1");
                let g_0 = eval("g_0");
                let h_m1 = eval("h_-1");
                for (name, x, y) in [
                    ("g_-1 and g_0 commute", &g_m1, &g_0),
                    ("g_-1 and h_-1 commute", &g_m1, &h_m1),
                    ("g_0 and h_-1 commute", &g_0, &h_m1),
                ] {
                    items.push(ReductionCheck {
                        name: name.to_string(),
                        pass: x.commutes_with(y),
                    });
                }
            }
        }
    }
    Ok(ReductionReport { family, n, items })
}
