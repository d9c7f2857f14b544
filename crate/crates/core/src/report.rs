//! Verification reports: named check records with expected/computed values
//! and an overall verdict, rendered as deterministic JSON (schema 1) or
//! plain text. The CLI is a thin shell over the builders here.

use serde::Serialize;

use crate::cosets::Presentation;
use crate::covers::{
    cayley_cover, closed_form, coincidence_check, cover_f_vector, euler_genus,
    minimal_cover_presentation, verify_minimal_cover, CoverError, Orientability,
};
use crate::flags::{FaceListMap, Family, FlagSystem, MapError, PlatonicSolid};
use crate::monodromy::{schlafli_type, MonodromyGroup};
use crate::stabilizer::{
    antiprism_family, lollipop_generators, prism_family, reduction_checks, schreier_generators,
    spanning_tree, verify_generates_stabilizer, Cell, StabilizerError, TreeStrategy,
};
use crate::words::{antiprism_relator, antiprism_relator_half, prism_relator, prism_relator_half};

/// Flag-count bound above which coincidence members are checked by shared
/// presentation only instead of building their monodromy groups.
pub const COINCIDENCE_FLAG_BOUND: usize = 256;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub coset_cap: usize,
    pub enum_cap: usize,
    /// When non-empty, `verify` runs only the checks whose names start with
    /// one of these prefixes.
    pub only: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            coset_cap: crate::DEFAULT_COSET_CAP,
            enum_cap: crate::DEFAULT_ENUM_CAP,
            only: Vec::new(),
        }
    }
}

impl RunConfig {
    fn selected(&self, name: &str) -> bool {
        self.only.is_empty() || self.only.iter().any(|p| name.starts_with(p.as_str()))
    }
}

/// What a run operates on.
#[derive(Clone, Debug)]
pub enum Subject {
    Prism(usize),
    Antiprism(usize),
    Platonic(PlatonicSolid),
    Map(FaceListMap),
}

impl Subject {
    pub fn describe(&self) -> String {
        match self {
            Subject::Prism(n) => format!("prism {n}"),
            Subject::Antiprism(n) => format!("antiprism {n}"),
            Subject::Platonic(s) => format!("platonic {s}"),
            Subject::Map(m) => format!("map with {} faces", m.faces.len()),
        }
    }

    pub fn flag_system(&self) -> Result<FlagSystem, MapError> {
        match self {
            Subject::Prism(n) => FlagSystem::prism(*n),
            Subject::Antiprism(n) => FlagSystem::antiprism(*n),
            Subject::Platonic(s) => Ok(FlagSystem::platonic(*s)),
            Subject::Map(m) => FlagSystem::from_face_list(m),
        }
    }

    pub fn family(&self) -> Option<(Family, usize)> {
        match self {
            Subject::Prism(n) => Some((Family::Prism, *n)),
            Subject::Antiprism(n) => Some((Family::Antiprism, *n)),
            _ => None,
        }
    }
}

/// An observed quantity, reported without a verdict.
#[derive(Clone, Debug, Serialize)]
pub struct Fact {
    pub name: String,
    pub value: String,
}

/// One verification record: the claim checked, what was expected, what was
/// computed, and the verdict. `capped` marks verdicts left undetermined by a
/// resource cap.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    #[serde(default)]
    pub capped: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OverallVerdict {
    Pass,
    Fail,
    CapHit,
}

/// A named list of words emitted by the stabilizer verb.
#[derive(Clone, Debug, Serialize)]
pub struct WordListing {
    pub set: String,
    pub words: Vec<NamedWord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedWord {
    pub name: String,
    pub word: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub input: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<Fact>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub word_sets: Vec<WordListing>,
    pub checks: Vec<CheckRecord>,
    pub overall: OverallVerdict,
}

impl ReportDocument {
    fn new(input: String) -> ReportDocument {
        ReportDocument {
            schema: 1,
            tool: "mincover",
            version: env!("CARGO_PKG_VERSION"),
            input,
            facts: Vec::new(),
            word_sets: Vec::new(),
            checks: Vec::new(),
            overall: OverallVerdict::Pass,
        }
    }

    fn fact(&mut self, name: &str, value: impl ToString) {
        self.facts.push(Fact {
            name: name.to_string(),
            value: value.to_string(),
        });
    }

    fn check(
        &mut self,
        name: &str,
        claim: &str,
        expected: impl ToString,
        computed: impl ToString,
        pass: bool,
    ) {
        self.checks.push(CheckRecord {
            name: name.to_string(),
            claim: claim.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
            capped: false,
        });
    }

    fn check_capped(
        &mut self,
        name: &str,
        claim: &str,
        expected: impl ToString,
        computed: impl ToString,
    ) {
        self.checks.push(CheckRecord {
            name: name.to_string(),
            claim: claim.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass: false,
            capped: true,
        });
    }

    fn finalize(mut self) -> ReportDocument {
        let failed = self.checks.iter().any(|c| !c.pass && !c.capped);
        let capped = self.checks.iter().any(|c| c.capped);
        self.overall = if failed {
            OverallVerdict::Fail
        } else if capped {
            OverallVerdict::CapHit
        } else {
            OverallVerdict::Pass
        };
        self
    }

    /// Process exit code: 0 all pass, 1 verification failure, 3 cap hit.
    pub fn exit_code(&self) -> u8 {
        match self.overall {
            OverallVerdict::Pass => 0,
            OverallVerdict::Fail => 1,
            OverallVerdict::CapHit => 3,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "{} {} — {}", self.tool, self.version, self.input).unwrap();
        for fact in &self.facts {
            writeln!(out, "  {}: {}", fact.name, fact.value).unwrap();
        }
        for listing in &self.word_sets {
            writeln!(out, "  words [{}]:", listing.set).unwrap();
            for w in &listing.words {
                writeln!(out, "    {} = {}", w.name, w.word).unwrap();
            }
        }
        for c in &self.checks {
            let verdict = if c.pass {
                "PASS"
            } else if c.capped {
                "CAP"
            } else {
                "FAIL"
            };
            writeln!(
                out,
                "  [{verdict}] {}: {} (expected {}, computed {})",
                c.name, c.claim, c.expected, c.computed
            )
            .unwrap();
        }
        let overall = match self.overall {
            OverallVerdict::Pass => "pass",
            OverallVerdict::Fail => "fail",
            OverallVerdict::CapHit => "cap-hit",
        };
        writeln!(out, "overall: {overall}").unwrap();
        out
    }
}

fn fvec_string(f: crate::flags::FVector) -> String {
    format!("({}, {}, {})", f.v, f.e, f.f)
}

fn orientability_string(o: Orientability) -> &'static str {
    match o {
        Orientability::Orientable => "orientable",
        Orientability::NonOrientable => "non-orientable",
        Orientability::Unknown => "unknown",
    }
}

/// The `report` verb: observed orders, f-vectors, and topology, compared
/// against the closed forms where the family provides them.
pub fn run_report(subject: &Subject, cfg: &RunConfig) -> Result<ReportDocument, MapError> {
    let fs = subject.flag_system()?;
    let mut doc = ReportDocument::new(subject.describe());
    let mon = MonodromyGroup::new_unchecked(&fs);

    doc.fact("flags", fs.flag_count());
    doc.fact("map f-vector", fvec_string(fs.f_vector()));
    doc.fact("map euler characteristic", fs.euler_characteristic());
    doc.fact("group order", mon.order());
    let (p, q) = schlafli_type(&fs);
    doc.fact("schlafli type", format!("({p}, {q})"));
    let cover_fvec = cover_f_vector(&mon);
    doc.fact("cover f-vector", fvec_string(cover_fvec));

    let matched = subject
        .family()
        .map(|(family, n)| minimal_cover_presentation(family, n));
    let topology = euler_genus(&mon, matched.as_ref(), cfg.enum_cap);
    doc.fact("cover euler characteristic", topology.euler_characteristic);
    doc.fact(
        "cover orientability",
        orientability_string(topology.orientability),
    );
    if let Some(genus) = topology.genus {
        doc.fact("cover genus", genus);
    }

    let report_valid = fs.validate();
    doc.check(
        "map-valid",
        "the map satisfies the flag-level polytope axioms",
        "all invariants hold",
        if report_valid.all_pass() {
            "all invariants hold"
        } else {
            "violations found"
        },
        report_valid.all_pass(),
    );

    if let Some((family, n)) = subject.family() {
        let cf = closed_form(family, n);
        doc.check(
            "order-closed-form",
            match family {
                Family::Prism => "the cover group order equals 48·m³ with m = lcm(4,n)/4",
                Family::Antiprism => "the cover group order equals 48·m⁴ with m = lcm(3,n)/3",
            },
            cf.order,
            mon.order(),
            mon.order() == cf.order,
        );
        doc.check(
            "euler-closed-form",
            "the cover Euler characteristic matches its closed form",
            cf.euler_characteristic,
            topology.euler_characteristic,
            topology.euler_characteristic == cf.euler_characteristic,
        );
        match topology.genus {
            Some(genus) => doc.check(
                "genus-closed-form",
                "the cover is orientable with the closed-form genus",
                cf.genus,
                genus,
                topology.orientability == Orientability::Orientable && genus == cf.genus,
            ),
            None => doc.check_capped(
                "genus-closed-form",
                "the cover is orientable with the closed-form genus",
                cf.genus,
                "undetermined (enumeration cap)",
            ),
        }
    }

    // recompute the f-vector from the explicit cover when it fits the cap;
    // any bookkeeping discrepancy surfaces here as data
    match cayley_cover(&mon, cfg.enum_cap) {
        Ok(cover) => doc.check(
            "cover-f-vector-cross-check",
            "parabolic coset counts agree with the explicit cover's cells",
            fvec_string(cover_fvec),
            fvec_string(cover.f_vector()),
            cover.f_vector() == cover_fvec,
        ),
        Err(_) => doc.check_capped(
            "cover-f-vector-cross-check",
            "parabolic coset counts agree with the explicit cover's cells",
            fvec_string(cover_fvec),
            "cover too large for enumeration cap",
        ),
    }

    Ok(doc.finalize())
}

/// The `verify` verb: the full suite for the subject — validity, orders,
/// string condition, relator behaviour, presentation match, topology,
/// stabilizer generators, reductions, structure, and coincidence where
/// applicable.
pub fn run_verify(subject: &Subject, cfg: &RunConfig) -> Result<ReportDocument, MapError> {
    let fs = subject.flag_system()?;
    let mut doc = ReportDocument::new(subject.describe());
    let mon = MonodromyGroup::new_unchecked(&fs);

    doc.fact("flags", fs.flag_count());
    doc.fact("group order", mon.order());

    if cfg.selected("map-valid") {
        let validation = fs.validate();
        doc.check(
            "map-valid",
            "the map satisfies the flag-level polytope axioms",
            "all invariants hold",
            if validation.all_pass() {
                "all invariants hold"
            } else {
                "violations found"
            },
            validation.all_pass(),
        );
    }

    if cfg.selected("string-condition") {
        match mon.string_condition(cfg.enum_cap) {
            Ok(ok) => doc.check(
                "string-condition",
                "(r0·r2)² = id and ⟨r0,r1⟩ ∩ ⟨r1,r2⟩ = ⟨r1⟩",
                true,
                ok,
                ok,
            ),
            Err(_) => doc.check_capped(
                "string-condition",
                "(r0·r2)² = id and ⟨r0,r1⟩ ∩ ⟨r1,r2⟩ = ⟨r1⟩",
                true,
                "undetermined (enumeration cap)",
            ),
        }
    }

    if let Some((family, n)) = subject.family() {
        verify_family_checks(&mut doc, &fs, &mon, family, n, cfg);
    } else {
        verify_generic_checks(&mut doc, &fs, &mon, cfg);
    }

    Ok(doc.finalize())
}

fn verify_family_checks(
    doc: &mut ReportDocument,
    fs: &FlagSystem,
    mon: &MonodromyGroup,
    family: Family,
    n: usize,
    cfg: &RunConfig,
) {
    let cf = closed_form(family, n);
    if cfg.selected("order-closed-form") {
        doc.check(
            "order-closed-form",
            "the cover group order matches its closed form",
            cf.order,
            mon.order(),
            mon.order() == cf.order,
        );
    }

    let (relator, half) = match family {
        Family::Prism => (prism_relator(), prism_relator_half()),
        Family::Antiprism => (antiprism_relator(), antiprism_relator_half()),
    };
    if cfg.selected("relator-trivial") {
        doc.check(
            "relator-trivial",
            "the extra relator acts as the identity on the flags",
            "identity",
            format!("{}", fs.evaluate(&relator)),
            fs.evaluate(&relator).is_identity(),
        );
    }
    if cfg.selected("relator-half-nontrivial") && mon.order() > fs.flag_count() as u64 {
        doc.check(
            "relator-half-nontrivial",
            "the unsquared relator word does not act as the identity",
            "non-identity",
            if fs.evaluate(&half).is_identity() {
                "identity"
            } else {
                "non-identity"
            },
            !fs.evaluate(&half).is_identity(),
        );
    }

    let presentation = minimal_cover_presentation(family, n);
    doc.fact(
        "cover presentation",
        crate::report::presentation_json(&presentation),
    );
    if cfg.selected("minimal-cover-match") {
        let report = verify_minimal_cover(fs, family, n, cfg.coset_cap)
            .expect("flag system validated above");
        match report.presented_order {
            Some(order) => doc.check(
                "minimal-cover-match",
                "the presented group and the monodromy group are isomorphic",
                format!("order {}", report.group_order),
                format!(
                    "relators hold: {}, presented order {order}",
                    report.relators_hold
                ),
                report.isomorphic,
            ),
            None => doc.check_capped(
                "minimal-cover-match",
                "the presented group and the monodromy group are isomorphic",
                format!("order {}", report.group_order),
                "presented order undetermined (coset cap)",
            ),
        }
    }

    if cfg.selected("cover-topology") {
        let topology = euler_genus(mon, Some(&presentation), cfg.enum_cap);
        doc.check(
            "cover-topology",
            "the cover is orientable with closed-form Euler characteristic and genus",
            format!(
                "χ = {}, genus {}, orientable",
                cf.euler_characteristic, cf.genus
            ),
            format!(
                "χ = {}, genus {}, {}",
                topology.euler_characteristic,
                topology
                    .genus
                    .map_or_else(|| "?".to_string(), |g| g.to_string()),
                orientability_string(topology.orientability)
            ),
            topology.euler_characteristic == cf.euler_characteristic
                && topology.genus == Some(cf.genus)
                && topology.orientability == Orientability::Orientable,
        );
    }

    let base = fs.base_flag(family).expect("canonical construction");
    if cfg.selected("stabilizer-family") {
        let stab_words = match family {
            Family::Prism => prism_family(n).expect("n ≥ 3").words(),
            Family::Antiprism => antiprism_family(n).expect("n ≥ 3").words(),
        };
        match verify_generates_stabilizer(fs, &stab_words, base) {
            Ok(verdict) => doc.check(
                "stabilizer-family",
                "the closed-form word family generates the full base-flag stabilizer",
                format!("order {}", verdict.expected_order),
                format!("order {}", verdict.subgroup_order),
                verdict.generates,
            ),
            Err(err) => doc.check(
                "stabilizer-family",
                "the closed-form word family generates the full base-flag stabilizer",
                "all words fix the base flag",
                err.to_string(),
                false,
            ),
        }
    }

    tree_generator_checks(doc, fs, base, cfg);

    if cfg.selected("reduction-checks") {
        let reductions = reduction_checks(fs, family).expect("canonical construction");
        doc.check(
            "reduction-checks",
            "the family words satisfy their reduction and commutation identities",
            format!("{} identities", reductions.items.len()),
            format!(
                "{} hold",
                reductions.items.iter().filter(|c| c.pass).count()
            ),
            reductions.all_pass(),
        );
    }

    let structure = match family {
        Family::Prism if n % 4 == 0 => Some(crate::covers::prism_structure(n)),
        Family::Antiprism if n % 3 == 0 => Some(crate::covers::antiprism_structure(n)),
        _ => None,
    };
    if let Some(result) = structure {
        if cfg.selected("normal-structure") {
            let report = result.expect("divisibility checked");
            doc.check(
                "normal-structure",
                "the cover group is an abelian kernel of rank 3/4 under an octahedral quotient",
                "all structure verdicts hold",
                format!(
                    "kernel order {}, quotient order {}, all pass: {}",
                    report.subgroup_order,
                    report.quotient_order,
                    report.all_pass()
                ),
                report.all_pass(),
            );
        }
    }

    let coincidence_applicable = match family {
        Family::Prism => n % 2 == 1 || n % 4 == 2,
        Family::Antiprism => n % 3 != 0,
    };
    if coincidence_applicable && cfg.selected("cover-coincidence") {
        match coincidence_check(family, n, COINCIDENCE_FLAG_BOUND, cfg.coset_cap) {
            Ok(report) if report.members.iter().any(|m| m.undetermined) => doc.check_capped(
                "cover-coincidence",
                "the listed polygon counts share one minimal regular cover",
                "coincide",
                "undetermined (coset cap)",
            ),
            Ok(report) => {
                let members: Vec<String> = report.members.iter().map(|m| m.n.to_string()).collect();
                doc.check(
                    "cover-coincidence",
                    "the listed polygon counts share one minimal regular cover",
                    format!("coincide: {}", members.join(", ")),
                    format!("coincide: {}", report.coincide),
                    report.coincide,
                );
            }
            Err(CoverError::Cap(_)) => doc.check_capped(
                "cover-coincidence",
                "the listed polygon counts share one minimal regular cover",
                "coincide",
                "undetermined (cap)",
            ),
            Err(err) => doc.check(
                "cover-coincidence",
                "the listed polygon counts share one minimal regular cover",
                "coincide",
                err.to_string(),
                false,
            ),
        }
    }
}

fn verify_generic_checks(
    doc: &mut ReportDocument,
    fs: &FlagSystem,
    mon: &MonodromyGroup,
    cfg: &RunConfig,
) {
    let regular = mon.order() == fs.flag_count() as u64;
    if regular && cfg.selected("regular") {
        doc.check(
            "regular",
            "the monodromy group order equals the flag count",
            fs.flag_count(),
            mon.order(),
            true,
        );
    }

    if cfg.selected("cover-regularity-consistency") {
        let (p, q) = schlafli_type(fs);
        let fvec = cover_f_vector(mon);
        doc.check(
            "cover-regularity-consistency",
            "the cover satisfies 2e = p·f and 2e = q·v for its Schläfli type",
            format!("2·{} = {}·{} = {}·{}", fvec.e, p, fvec.f, q, fvec.v),
            "consistent",
            2 * fvec.e as u64 == p * fvec.f as u64 && 2 * fvec.e as u64 == q * fvec.v as u64,
        );
    }

    if cfg.selected("cover-topology") {
        let topology = euler_genus(mon, None, cfg.enum_cap);
        match topology.genus {
            Some(genus) => doc.check(
                "cover-topology",
                "the cover's Euler characteristic and genus are determined",
                "χ and genus computed",
                format!(
                    "χ = {}, genus {}, {}",
                    topology.euler_characteristic,
                    genus,
                    orientability_string(topology.orientability)
                ),
                true,
            ),
            None => doc.check_capped(
                "cover-topology",
                "the cover's Euler characteristic and genus are determined",
                "χ and genus computed",
                "orientability undetermined (enumeration cap)",
            ),
        }
    }

    tree_generator_checks(doc, fs, 0, cfg);
}

fn tree_generator_checks(doc: &mut ReportDocument, fs: &FlagSystem, base: usize, cfg: &RunConfig) {
    for strategy in [TreeStrategy::Bfs, TreeStrategy::Dfs] {
        let tag = match strategy {
            TreeStrategy::Bfs => "bfs",
            TreeStrategy::Dfs => "dfs",
            _ => unreachable!(),
        };
        if !cfg.selected(&format!("schreier-{tag}")) && !cfg.selected(&format!("lollipop-{tag}")) {
            continue;
        }
        let tree = spanning_tree(fs, base, strategy).expect("validated maps are connected");
        if cfg.selected(&format!("schreier-{tag}")) {
            let words = schreier_generators(fs, &tree);
            let verdict =
                verify_generates_stabilizer(fs, &words, base).expect("tree words fix the root");
            doc.check(
                &format!("schreier-{tag}"),
                "one word per non-tree edge generates the full base-flag stabilizer",
                format!("order {}", verdict.expected_order),
                format!(
                    "order {} from {} words",
                    verdict.subgroup_order,
                    words.len()
                ),
                verdict.generates,
            );
        }
        if !cfg.selected(&format!("lollipop-{tag}")) {
            continue;
        }
        match lollipop_generators(fs, &tree) {
            Ok(lollipops) => {
                let words: Vec<_> = lollipops.iter().map(|(_, w)| w.clone()).collect();
                let verdict = verify_generates_stabilizer(fs, &words, base)
                    .expect("lollipop words fix the root");
                doc.check(
                    &format!("lollipop-{tag}"),
                    "one lollipop word per face and vertex generates the full stabilizer",
                    format!("order {}", verdict.expected_order),
                    format!(
                        "order {} from {} words",
                        verdict.subgroup_order,
                        words.len()
                    ),
                    verdict.generates,
                );
            }
            Err(StabilizerError::NotSpherical { chi }) => doc.fact(
                &format!("lollipop-{tag}"),
                format!("skipped: map is not spherical (χ = {chi})"),
            ),
            Err(err) => doc.check(
                &format!("lollipop-{tag}"),
                "one lollipop word per face and vertex generates the full stabilizer",
                "words generated",
                err.to_string(),
                false,
            ),
        }
    }
}

/// Tree choice exposed on the command line; `Paper` resolves to the
/// family-specific periodic strategy.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TreeChoice {
    Bfs,
    Dfs,
    Paper,
}

/// The `stabilizer` verb: emits the generator words for the chosen tree and
/// their generation verdicts (plus the closed-form family on prisms and
/// antiprisms).
pub fn run_stabilizer(
    subject: &Subject,
    tree: TreeChoice,
    cfg: &RunConfig,
) -> Result<ReportDocument, MapError> {
    let _ = cfg;
    let fs = subject.flag_system()?;
    let mut doc = ReportDocument::new(subject.describe());

    let strategy = match (tree, subject.family()) {
        (TreeChoice::Bfs, _) => TreeStrategy::Bfs,
        (TreeChoice::Dfs, _) => TreeStrategy::Dfs,
        (TreeChoice::Paper, Some((Family::Prism, _))) => TreeStrategy::PrismPaper,
        (TreeChoice::Paper, Some((Family::Antiprism, _))) => TreeStrategy::AntiprismPaper,
        (TreeChoice::Paper, None) => {
            return Err(MapError::NotCanonical {
                expected: "prism or antiprism",
            })
        }
    };
    let base = match subject.family() {
        Some((family, _)) => fs.base_flag(family).expect("canonical construction"),
        None => 0,
    };
    doc.fact("base flag", base);
    doc.fact("tree strategy", format!("{strategy:?}"));

    let tree = spanning_tree(&fs, base, strategy).expect("validated maps are connected");
    let schreier = schreier_generators(&fs, &tree);
    doc.word_sets.push(WordListing {
        set: "schreier".to_string(),
        words: schreier
            .iter()
            .enumerate()
            .map(|(i, w)| NamedWord {
                name: format!("w{i}"),
                word: w.to_string(),
            })
            .collect(),
    });
    let verdict = verify_generates_stabilizer(&fs, &schreier, base).expect("tree words fix root");
    doc.check(
        "schreier-generates",
        "one word per non-tree edge generates the full base-flag stabilizer",
        format!("order {}", verdict.expected_order),
        format!("order {}", verdict.subgroup_order),
        verdict.generates,
    );

    if let Ok(lollipops) = lollipop_generators(&fs, &tree) {
        doc.word_sets.push(WordListing {
            set: "lollipop".to_string(),
            words: lollipops
                .iter()
                .map(|(cell, w)| NamedWord {
                    name: match cell {
                        Cell::Face(i) => format!("face {i}"),
                        Cell::Vertex(i) => format!("vertex {i}"),
                    },
                    word: w.to_string(),
                })
                .collect(),
        });
        let words: Vec<_> = lollipops.iter().map(|(_, w)| w.clone()).collect();
        let verdict =
            verify_generates_stabilizer(&fs, &words, base).expect("lollipop words fix root");
        doc.check(
            "lollipop-generates",
            "one lollipop word per face and vertex generates the full stabilizer",
            format!("order {}", verdict.expected_order),
            format!("order {}", verdict.subgroup_order),
            verdict.generates,
        );
    }

    if let Some((family, n)) = subject.family() {
        let family_words = match family {
            Family::Prism => prism_family(n).expect("n ≥ 3"),
            Family::Antiprism => antiprism_family(n).expect("n ≥ 3"),
        };
        doc.word_sets.push(WordListing {
            set: "family".to_string(),
            words: family_words
                .entries()
                .iter()
                .map(|(name, w)| NamedWord {
                    name: name.clone(),
                    word: w.to_string(),
                })
                .collect(),
        });
        let verdict = verify_generates_stabilizer(&fs, &family_words.words(), base)
            .expect("family words fix the base flag");
        doc.check(
            "family-generates",
            "the closed-form word family generates the full base-flag stabilizer",
            format!("order {}", verdict.expected_order),
            format!("order {}", verdict.subgroup_order),
            verdict.generates,
        );
    }

    Ok(doc.finalize())
}

/// Serializes a presentation for the wire (used by the CLI's JSON output).
pub fn presentation_json(p: &Presentation) -> String {
    serde_json::to_string(p).expect("presentation serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes_for_prism() {
        let doc = run_report(&Subject::Prism(5), &RunConfig::default()).unwrap();
        assert_eq!(doc.overall, OverallVerdict::Pass);
        assert_eq!(doc.exit_code(), 0);
        assert!(doc
            .facts
            .iter()
            .any(|f| f.name == "group order" && f.value == "6000"));
    }

    #[test]
    fn verify_passes_for_small_corpus() {
        for subject in [
            Subject::Prism(4),
            Subject::Prism(6),
            Subject::Antiprism(3),
            Subject::Platonic(PlatonicSolid::Tetrahedron),
        ] {
            let doc = run_verify(&subject, &RunConfig::default()).unwrap();
            assert_eq!(
                doc.overall,
                OverallVerdict::Pass,
                "{}: {:#?}",
                doc.input,
                doc.checks
            );
        }
    }

    #[test]
    fn verify_reports_cap_exit_code() {
        let cfg = RunConfig {
            coset_cap: 50,
            enum_cap: 50,
            ..RunConfig::default()
        };
        let doc = run_verify(&Subject::Prism(5), &cfg).unwrap();
        assert_eq!(doc.overall, OverallVerdict::CapHit);
        assert_eq!(doc.exit_code(), 3);
    }

    #[test]
    fn selection_flags_restrict_verify() {
        let cfg = RunConfig {
            only: vec!["relator".to_string()],
            ..RunConfig::default()
        };
        let doc = run_verify(&Subject::Prism(5), &cfg).unwrap();
        assert!(doc.checks.iter().all(|c| c.name.starts_with("relator")));
        assert_eq!(doc.checks.len(), 2);
        assert_eq!(doc.overall, OverallVerdict::Pass);
    }

    #[test]
    fn invalid_map_is_an_input_error() {
        let subject = Subject::Map(FaceListMap::new(vec![vec![0, 1, 2], vec![0, 2, 1]]));
        assert!(run_report(&subject, &RunConfig::default()).is_err());
    }

    #[test]
    fn json_output_is_deterministic() {
        let cfg = RunConfig::default();
        let a = run_verify(&Subject::Prism(5), &cfg).unwrap().to_json();
        let b = run_verify(&Subject::Prism(5), &cfg).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": 1"));
    }

    #[test]
    fn stabilizer_verb_emits_words() {
        let doc =
            run_stabilizer(&Subject::Prism(5), TreeChoice::Paper, &RunConfig::default()).unwrap();
        assert_eq!(doc.overall, OverallVerdict::Pass);
        assert_eq!(doc.word_sets.len(), 3); // schreier, lollipop, family
        assert!(doc.word_sets.iter().any(|l| l.set == "family"
            && l.words
                .iter()
                .any(|w| w.name == "h_5" && w.word == "cabababababc")));
    }

    #[test]
    fn stabilizer_paper_tree_needs_family() {
        let err = run_stabilizer(
            &Subject::Platonic(PlatonicSolid::Cube),
            TreeChoice::Paper,
            &RunConfig::default(),
        );
        assert!(err.is_err());
    }
}
