//! The minimal regular cover of a map, read off its monodromy group.
//!
//! The cover's i-faces are the cosets of the parabolic subgroups omitting
//! r_i, so its f-vector, Euler characteristic, and genus come straight from
//! parabolic indices. The normal-subgroup structure of prism and antiprism
//! covers (an abelian kernel of rank 3 or 4 under an octahedral quotient) is
//! verified by direct membership computations, never by building quotient
//! groups.
//!
//! The infinite analogues — the doubly infinite band of squares, and of
//! triangles — have minimal covers presented the same way with the polygon
//! exponent dropped: the Coxeter groups [∞, 3] and [∞, 4] with the same
//! single extra relator. Those groups are infinite, so this crate documents
//! them but never enumerates them; a coset enumeration on one only ever ends
//! at the cap.

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::cosets::{match_presentation, MatchReport, Presentation};
use crate::flags::{FVector, Family, FlagLabel, FlagSystem, MapError, MapKind};
use crate::monodromy::{schlafli_type, MonodromyError, MonodromyGroup};
use crate::perm::{CapExceeded, Perm, PermGroup};
use crate::words::{antiprism_relator, prism_relator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("n = {n} is not divisible by {divisor}")]
    BadDivisibility { n: usize, divisor: usize },
    #[error("prism coincidence requires n odd or n ≡ 2 (mod 4); got {n}")]
    BadPrismCoincidence { n: usize },
    #[error("antiprism coincidence requires n not divisible by 3; got {n}")]
    BadAntiprismCoincidence { n: usize },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Orientability {
    Orientable,
    NonOrientable,
    Unknown,
}

/// Closed-form predictions for the cover of prism(n) or antiprism(n):
/// order 48m³ / 48m⁴, χ = (6−4m)m² / 8m³−6m⁴, genus (2m−3)m²+1 /
/// 3m⁴−4m³+1, with m = lcm(4,n)/4 resp. lcm(3,n)/3.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub m: u64,
    pub order: u64,
    pub euler_characteristic: i64,
    pub genus: i64,
}

pub fn closed_form(family: Family, n: usize) -> ClosedForm {
    assert!(n >= 3, "polygon count must be at least 3");
    let n = n as u64;
    match family {
        Family::Prism => {
            let m = 4u64.lcm(&n) / 4;
            let mi = m as i64;
            ClosedForm {
                m,
                order: 48 * m.pow(3),
                euler_characteristic: (6 - 4 * mi) * mi * mi,
                genus: (2 * mi - 3) * mi * mi + 1,
            }
        }
        Family::Antiprism => {
            let m = 3u64.lcm(&n) / 3;
            let mi = m as i64;
            ClosedForm {
                m,
                order: 48 * m.pow(4),
                euler_characteristic: 8 * mi.pow(3) - 6 * mi.pow(4),
                genus: 3 * mi.pow(4) - 4 * mi.pow(3) + 1,
            }
        }
    }
}

/// f-vector of the cover: indices of the parabolic subgroups ⟨r1,r2⟩,
/// ⟨r0,r2⟩, ⟨r0,r1⟩ count its vertices, edges, and faces.
pub fn cover_f_vector(m: &MonodromyGroup) -> FVector {
    let order = m.order();
    FVector {
        v: (order / m.parabolic(&[1, 2]).order()) as usize,
        e: (order / m.parabolic(&[0, 2]).order()) as usize,
        f: (order / m.parabolic(&[0, 1]).order()) as usize,
    }
}

/// Euler characteristic, orientability, and genus of the cover surface.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Topology {
    pub euler_characteristic: i64,
    pub orientability: Orientability,
    /// Orientable genus when orientable, non-orientable genus otherwise;
    /// absent when orientability is unknown.
    pub genus: Option<i64>,
}

/// χ from the parabolic f-vector. Orientability: immediate when a matched
/// presentation has only even-length relators (parity then descends to the
/// quotient); otherwise decided by 2-coloring the cover's flag graph when
/// the group fits under `enum_cap`, else unknown.
pub fn euler_genus(
    m: &MonodromyGroup,
    matched: Option<&Presentation>,
    enum_cap: usize,
) -> Topology {
    let fvec = cover_f_vector(m);
    let chi = fvec.v as i64 - fvec.e as i64 + fvec.f as i64;
    let orientability = match matched {
        Some(p) if p.relators().iter().all(|w| w.len() % 2 == 0) => Orientability::Orientable,
        _ => match cayley_cover(m, enum_cap) {
            Ok(cover) => {
                if flag_graph_two_colorable(&cover) {
                    Orientability::Orientable
                } else {
                    Orientability::NonOrientable
                }
            }
            Err(_) => Orientability::Unknown,
        },
    };
    let genus = match orientability {
        Orientability::Orientable => Some((2 - chi) / 2),
        Orientability::NonOrientable => Some(2 - chi),
        Orientability::Unknown => None,
    };
    Topology {
        euler_characteristic: chi,
        orientability,
        genus,
    }
}

/// The cover as a concrete flag system: flags are the group elements, r_i
/// acts by right multiplication, and cells are the parabolic orbits. Used to
/// cross-check the parabolic f-vector and for the orientability fallback.
pub fn cayley_cover(m: &MonodromyGroup, enum_cap: usize) -> Result<FlagSystem, CapExceeded> {
    let elements = m.group().elements(enum_cap)?;
    let index: std::collections::HashMap<&Perm, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let count = elements.len();
    let column = |gen: &Perm| {
        Perm::from_images(
            elements
                .iter()
                .map(|e| index[&e.compose(gen)])
                .collect::<Vec<_>>(),
        )
    };
    let r = [
        column(&m.generators()[0]),
        column(&m.generators()[1]),
        column(&m.generators()[2]),
    ];

    // cell id = orbit of the element under the two generators fixing that rank
    let orbit_ids = |a: &Perm, b: &Perm| {
        let mut ids = vec![usize::MAX; count];
        let mut next = 0;
        for start in 0..count {
            if ids[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            ids[start] = next;
            while let Some(x) = stack.pop() {
                for gen in [a, b] {
                    let y = gen.apply(x);
                    if ids[y] == usize::MAX {
                        ids[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        ids
    };
    let vertex_ids = orbit_ids(&r[1], &r[2]);
    let edge_ids = orbit_ids(&r[0], &r[2]);
    let face_ids = orbit_ids(&r[0], &r[1]);
    let labels = (0..count)
        .map(|i| FlagLabel {
            vertex: vertex_ids[i],
            edge: edge_ids[i],
            face: face_ids[i],
        })
        .collect();
    Ok(FlagSystem::from_parts(r, labels, MapKind::Cover))
}

/// Proper 2-coloring of the flag graph, flipping color across every
/// adjacency; succeeds exactly on orientable maps.
fn flag_graph_two_colorable(fs: &FlagSystem) -> bool {
    let n = fs.flag_count();
    let mut color = vec![None; n];
    color[0] = Some(false);
    let mut stack = vec![0usize];
    while let Some(f) = stack.pop() {
        let c = color[f].expect("stacked flags are colored");
        for i in 0..3 {
            let g = fs.adjacency(i).apply(f);
            match color[g] {
                None => {
                    color[g] = Some(!c);
                    stack.push(g);
                }
                Some(existing) => {
                    if existing == c {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The presentation of the minimal regular cover: the string Coxeter group
/// [lcm(4,n), 3] or [lcm(3,n), 4] with the single extra relator of its
/// family.
pub fn minimal_cover_presentation(family: Family, n: usize) -> Presentation {
    assert!(n >= 3, "polygon count must be at least 3");
    match family {
        Family::Prism => Presentation::coxeter_plus(4usize.lcm(&n), 3, vec![prism_relator()]),
        Family::Antiprism => {
            Presentation::coxeter_plus(3usize.lcm(&n), 4, vec![antiprism_relator()])
        }
    }
}

/// Machine check that the presented group and the monodromy group coincide:
/// the relators hold on the flags and the enumerated order equals the
/// permutation-group order.
pub fn verify_minimal_cover(
    fs: &FlagSystem,
    family: Family,
    n: usize,
    coset_cap: usize,
) -> Result<MatchReport, CoverError> {
    let m = MonodromyGroup::new(fs)?;
    let p = minimal_cover_presentation(family, n);
    Ok(match_presentation(&p, m.generators(), m.group(), coset_cap))
}

/// Verdicts for the normal-subgroup structure of a cover group: an abelian
/// kernel of order m^rank whose generators are independent, normal, with
/// octahedral quotient of order 48.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub family: Family,
    pub n: usize,
    pub m: u64,
    pub group_order: u64,
    pub subgroup_order: u64,
    pub quotient_order: u64,
    /// every listed generator has order m
    pub elementary_orders_ok: bool,
    pub abelian_ok: bool,
    /// dropping any one generator divides the subgroup order by m
    pub independent_ok: bool,
    pub normal_subgroup_ok: bool,
    pub subgroup_order_ok: bool,
    pub quotient_is_b3: bool,
    /// prisms only: (abc)^{3m} is central in the cover group
    pub central_ok: Option<bool>,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.elementary_orders_ok
            && self.abelian_ok
            && self.independent_ok
            && self.normal_subgroup_ok
            && self.subgroup_order_ok
            && self.quotient_order == 48
            && self.quotient_is_b3
            && self.central_ok.unwrap_or(true)
    }
}

/// Least k ≥ 1 with x^k ∈ H equals `expected`.
fn coset_order_is(x: &Perm, h: &PermGroup, expected: u32) -> bool {
    let mut power = x.clone();
    for k in 1..=expected {
        if h.contains(&power) {
            return k == expected;
        }
        power = power.compose(x);
    }
    false
}

fn structure_report(
    fs: &FlagSystem,
    family: Family,
    n: usize,
    m_val: usize,
    kernel_words: &[Word],
) -> Result<StructureReport, CoverError> {
    let mon = MonodromyGroup::new(fs)?;
    let gens: Vec<Perm> = kernel_words.iter().map(|w| mon.evaluate(w)).collect();
    let m = m_val as u64;
    let rank = gens.len() as u32;

    let elementary_orders_ok = gens.iter().all(|g| g.order() == m);
    let kernel = PermGroup::from_generators(mon.flag_count(), gens.clone());
    let abelian_ok = kernel.is_abelian();
    let subgroup_order = kernel.order();
    let subgroup_order_ok = subgroup_order == m.pow(rank);
    let independent_ok = (0..gens.len()).all(|skip| {
        let rest: Vec<Perm> = gens
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, g)| g.clone())
            .collect();
        PermGroup::from_generators(mon.flag_count(), rest).order() == m.pow(rank - 1)
    });
    let normal_subgroup_ok = mon.group().is_normal(&kernel);

    let group_order = mon.order();
    let quotient_order = group_order / subgroup_order;
    let ab = mon.evaluate(&Word::parse("ab"));
    let bc = mon.evaluate(&Word::parse("bc"));
    let abc = mon.evaluate(&Word::parse("abc"));
    let (p_bar, q_bar) = match family {
        Family::Prism => (4, 3),
        Family::Antiprism => (3, 4),
    };
    // order 48 with generator-coset orders (p̄, q̄) and Coxeter-element
    // coset order 6 pins the octahedral group, ruling out the hemicube
    let quotient_is_b3 = quotient_order == 48
        && coset_order_is(&ab, &kernel, p_bar)
        && coset_order_is(&bc, &kernel, q_bar)
        && coset_order_is(&abc, &kernel, 6);

    let central_ok = match family {
        Family::Prism => {
            let half_turn = mon.evaluate(&Word::parse("abc").pow(3 * m_val));
            Some(mon.group().is_central(&half_turn))
        }
        Family::Antiprism => None,
    };

    Ok(StructureReport {
        family,
        n,
        m,
        group_order,
        subgroup_order,
        quotient_order,
        elementary_orders_ok,
        abelian_ok,
        independent_ok,
        normal_subgroup_ok,
        subgroup_order_ok,
        quotient_is_b3,
        central_ok,
    })
}

/// Structure of the 4m-prism cover group: kernel ⟨(ab)⁴, c(ab)⁴c, bc(ab)⁴cb⟩
/// of order m³ under an octahedral quotient, with (abc)^{3m} central.
pub fn prism_structure(n: usize) -> Result<StructureReport, CoverError> {
    if n % 4 != 0 {
        return Err(CoverError::BadDivisibility { n, divisor: 4 });
    }
    let fs = FlagSystem::prism(n)?;
    let core = Word::parse("ab").pow(4);
    let words = vec![
        core.clone(),
        Word::parse("c").concat(&core).concat(&Word::parse("c")),
        Word::parse("bc").concat(&core).concat(&Word::parse("cb")),
    ];
    structure_report(&fs, Family::Prism, n, n / 4, &words)
}

/// Structure of the 3m-antiprism cover group: kernel
/// ⟨(ab)³, c(ab)³c, bc(ab)³cb, cbc(ab)³cbc⟩ of order m⁴ under an octahedral
/// quotient.
pub fn antiprism_structure(n: usize) -> Result<StructureReport, CoverError> {
    if n % 3 != 0 {
        return Err(CoverError::BadDivisibility { n, divisor: 3 });
    }
    let fs = FlagSystem::antiprism(n)?;
    let core = Word::parse("ab").pow(3);
    let words = vec![
        core.clone(),
        Word::parse("c").concat(&core).concat(&Word::parse("c")),
        Word::parse("bc").concat(&core).concat(&Word::parse("cb")),
        Word::parse("cbc").concat(&core).concat(&Word::parse("cbc")),
    ];
    structure_report(&fs, Family::Antiprism, n, n / 3, &words)
}

/// One map participating in a cover-coincidence check.
#[derive(Clone, Debug, Serialize)]
pub struct CoincidenceMember {
    pub n: usize,
    pub flag_count: usize,
    pub same_presentation: bool,
    /// present when the map was small enough to build directly
    pub matches: Option<bool>,
    /// the match verdict was blocked by the coset cap
    pub undetermined: bool,
}

/// Whether several polygon counts share one minimal regular cover.
#[derive(Clone, Debug, Serialize)]
pub struct CoincidenceReport {
    pub family: Family,
    pub base_n: usize,
    pub members: Vec<CoincidenceMember>,
    pub coincide: bool,
}

/// Checks that the maps with the listed polygon counts share the same
/// minimal cover: equal lcm gives literally the same presentation, and every
/// member with at most `flag_bound` flags is built and matched against it.
/// Prisms pair n with 2n (and 4n when n is odd); antiprisms pair n with 3n.
pub fn coincidence_check(
    family: Family,
    n: usize,
    flag_bound: usize,
    coset_cap: usize,
) -> Result<CoincidenceReport, CoverError> {
    let members: Vec<usize> = match family {
        Family::Prism => {
            if n % 2 == 1 {
                vec![n, 2 * n, 4 * n]
            } else if n % 4 == 2 {
                vec![n, 2 * n]
            } else {
                return Err(CoverError::BadPrismCoincidence { n });
            }
        }
        Family::Antiprism => {
            if n % 3 == 0 {
                return Err(CoverError::BadAntiprismCoincidence { n });
            }
            vec![n, 3 * n]
        }
    };
    let base_presentation = minimal_cover_presentation(family, n);
    let mut out = Vec::new();
    for &k in &members {
        let same_presentation = minimal_cover_presentation(family, k) == base_presentation;
        let flag_count = match family {
            Family::Prism => 12 * k,
            Family::Antiprism => 16 * k,
        };
        let (matches, undetermined) = if flag_count <= flag_bound {
            let fs = match family {
                Family::Prism => FlagSystem::prism(k)?,
                Family::Antiprism => FlagSystem::antiprism(k)?,
            };
            let report = verify_minimal_cover(&fs, family, k, coset_cap)?;
            (Some(report.isomorphic), report.presented_order.is_none())
        } else {
            (None, false)
        };
        out.push(CoincidenceMember {
            n: k,
            flag_count,
            same_presentation,
            matches,
            undetermined,
        });
    }
    let coincide = out
        .iter()
        .all(|m| m.same_presentation && m.matches.unwrap_or(true) && !m.undetermined)
        && out.iter().any(|m| m.matches == Some(true));
    Ok(CoincidenceReport {
        family,
        base_n: n,
        members: out,
        coincide,
    })
}

/// Everything the cover report carries: order, f-vector, χ, orientability,
/// genus, and the Schläfli type of the cover.
#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub group_order: u64,
    pub f_vector: FVector,
    pub euler_characteristic: i64,
    pub orientability: Orientability,
    pub genus: Option<i64>,
    pub schlafli: (u64, u64),
}

pub fn cover_report(
    fs: &FlagSystem,
    matched: Option<&Presentation>,
    enum_cap: usize,
) -> Result<CoverReport, CoverError> {
    let m = MonodromyGroup::new(fs)?;
    let fvec = cover_f_vector(&m);
    let topology = euler_genus(&m, matched, enum_cap);
    Ok(CoverReport {
        group_order: m.order(),
        f_vector: fvec,
        euler_characteristic: topology.euler_characteristic,
        orientability: topology.orientability,
        genus: topology.genus,
        schlafli: schlafli_type(fs),
    })
}
