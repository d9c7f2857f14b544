//! Acceptance suite: every verification criterion as an end-to-end test.
//! Each test prints one PASS/FAIL line (run with `--nocapture` to see them).
//! All assertions are exact integer comparisons.

use num_integer::Integer;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use mincover::cosets::{todd_coxeter, Presentation};
use mincover::covers::{
    antiprism_structure, closed_form, coincidence_check, euler_genus, minimal_cover_presentation,
    prism_structure, verify_minimal_cover, Orientability,
};
use mincover::flags::{Family, FlagSystem, PlatonicSolid};
use mincover::monodromy::MonodromyGroup;
use mincover::perm::{Perm, PermGroup};
use mincover::stabilizer::{
    antiprism_family, lollipop_generators, prism_family, reduction_checks, schreier_generators,
    spanning_tree, verify_generates_stabilizer, TreeStrategy,
};
use mincover::words::{
    antiprism_relator, antiprism_relator_half, prism_relator, prism_relator_half,
};
use mincover::{DEFAULT_COSET_CAP, DEFAULT_ENUM_CAP};

struct Criterion {
    ok: bool,
    failures: Vec<String>,
}

impl Criterion {
    fn new() -> Criterion {
        Criterion {
            ok: true,
            failures: Vec::new(),
        }
    }

    fn require(&mut self, cond: bool, detail: impl FnOnce() -> String) {
        if !cond {
            self.ok = false;
            self.failures.push(detail());
        }
    }

    fn conclude(self, label: &str) {
        println!("{}: {}", if self.ok { "PASS" } else { "FAIL" }, label);
        assert!(self.ok, "{label}; failures: {:?}", self.failures);
    }
}

fn prism(n: usize) -> FlagSystem {
    FlagSystem::prism(n).unwrap()
}

fn antiprism(n: usize) -> FlagSystem {
    FlagSystem::antiprism(n).unwrap()
}

fn monodromy(fs: &FlagSystem) -> MonodromyGroup {
    MonodromyGroup::new(fs).unwrap()
}

/// All sphere maps the suite runs on.
fn corpus() -> Vec<(String, FlagSystem)> {
    let mut maps: Vec<(String, FlagSystem)> = PlatonicSolid::ALL
        .iter()
        .map(|&s| (format!("platonic {s}"), FlagSystem::platonic(s)))
        .collect();
    for n in 3..=12 {
        maps.push((format!("prism {n}"), prism(n)));
    }
    for n in 3..=8 {
        maps.push((format!("antiprism {n}"), antiprism(n)));
    }
    maps
}

#[test]
fn criterion_01_group_orders() {
    let mut c = Criterion::new();
    let prism_expected: [u64; 10] = [1296, 48, 6000, 1296, 16464, 384, 34992, 6000, 63888, 1296];
    for (i, n) in (3usize..=12).enumerate() {
        let order = monodromy(&prism(n)).order();
        let m = (4usize.lcm(&n) / 4) as u64;
        c.require(order == prism_expected[i] && order == 48 * m.pow(3), || {
            format!("prism {n}: order {order}, expected {}", prism_expected[i])
        });
    }
    let antiprism_expected: [u64; 6] = [48, 12288, 30000, 768, 115248, 196608];
    for (i, n) in (3usize..=8).enumerate() {
        let order = monodromy(&antiprism(n)).order();
        let m = (3usize.lcm(&n) / 3) as u64;
        c.require(
            order == antiprism_expected[i] && order == 48 * m.pow(4),
            || {
                format!(
                    "antiprism {n}: order {order}, expected {}",
                    antiprism_expected[i]
                )
            },
        );
    }
    c.conclude("criterion 01: group orders equal 48·m³ (prisms 3–12) and 48·m⁴ (antiprisms 3–8)");
}

#[test]
fn criterion_02_minimality() {
    let mut c = Criterion::new();
    for n in 3..=10 {
        let report = verify_minimal_cover(&prism(n), Family::Prism, n, DEFAULT_COSET_CAP).unwrap();
        c.require(report.isomorphic, || format!("prism {n}: {report:?}"));
    }
    for n in 3..=6 {
        let report =
            verify_minimal_cover(&antiprism(n), Family::Antiprism, n, DEFAULT_COSET_CAP).unwrap();
        c.require(report.isomorphic, || format!("antiprism {n}: {report:?}"));
    }
    c.conclude(
        "criterion 02: presented covers match monodromy groups (prisms 3–10, antiprisms 3–6)",
    );
}

#[test]
fn criterion_03_relator_core_property() {
    let mut c = Criterion::new();
    for n in 3..=12 {
        let fs = prism(n);
        c.require(fs.evaluate(&prism_relator()).is_identity(), || {
            format!("prism {n}: relator is not trivial on the flags")
        });
    }
    for n in 3..=8 {
        let fs = antiprism(n);
        c.require(fs.evaluate(&antiprism_relator()).is_identity(), || {
            format!("antiprism {n}: relator is not trivial on the flags")
        });
    }
    c.require(
        !prism(5).evaluate(&prism_relator_half()).is_identity(),
        || "prism 5: unsquared relator word acts trivially".to_string(),
    );
    c.require(
        !antiprism(4)
            .evaluate(&antiprism_relator_half())
            .is_identity(),
        || "antiprism 4: unsquared relator word acts trivially".to_string(),
    );
    c.conclude("criterion 03: extra relators act trivially on base flags, their halves do not");
}

#[test]
fn criterion_04_string_condition() {
    let mut c = Criterion::new();
    for (name, fs) in corpus() {
        let holds = monodromy(&fs).string_condition(DEFAULT_ENUM_CAP).unwrap();
        c.require(holds, || format!("{name}: string condition fails"));
    }
    c.conclude("criterion 04: string intersection condition holds on the whole corpus");
}

#[test]
fn criterion_05_stabilizer_families() {
    let mut c = Criterion::new();
    for n in 3..=10 {
        let fs = prism(n);
        let base = fs.base_flag(Family::Prism).unwrap();
        let verdict =
            verify_generates_stabilizer(&fs, &prism_family(n).unwrap().words(), base).unwrap();
        c.require(verdict.generates, || format!("prism {n}: {verdict:?}"));
    }
    for n in 3..=8 {
        let fs = antiprism(n);
        let base = fs.base_flag(Family::Antiprism).unwrap();
        let verdict =
            verify_generates_stabilizer(&fs, &antiprism_family(n).unwrap().words(), base).unwrap();
        c.require(verdict.generates, || format!("antiprism {n}: {verdict:?}"));
    }
    let fs = prism(5);
    let base = fs.base_flag(Family::Prism).unwrap();
    let depleted = prism_family(5).unwrap().without("h_5");
    let verdict = verify_generates_stabilizer(&fs, &depleted, base).unwrap();
    c.require(!verdict.generates, || {
        format!("prism 5 without h_5 still generates: {verdict:?}")
    });
    c.conclude(
        "criterion 05: closed-form families generate the stabilizers; dropping h_n breaks prism 5",
    );
}

#[test]
fn criterion_06_tree_and_lollipop_generators() {
    let mut c = Criterion::new();
    for (name, fs) in corpus() {
        let base = match fs.kind() {
            mincover::flags::MapKind::Prism(_) => fs.base_flag(Family::Prism).unwrap(),
            mincover::flags::MapKind::Antiprism(_) => fs.base_flag(Family::Antiprism).unwrap(),
            _ => 0,
        };
        for strategy in [TreeStrategy::Bfs, TreeStrategy::Dfs] {
            let tree = spanning_tree(&fs, base, strategy).unwrap();
            let schreier = schreier_generators(&fs, &tree);
            let verdict = verify_generates_stabilizer(&fs, &schreier, base).unwrap();
            c.require(verdict.generates, || {
                format!("{name} {strategy:?}: tree words give {verdict:?}")
            });
            let lollipops = lollipop_generators(&fs, &tree).unwrap();
            let words: Vec<_> = lollipops.into_iter().map(|(_, w)| w).collect();
            let verdict = verify_generates_stabilizer(&fs, &words, base).unwrap();
            c.require(verdict.generates, || {
                format!("{name} {strategy:?}: lollipop words give {verdict:?}")
            });
        }
    }
    c.conclude(
        "criterion 06: spanning-tree and lollipop words generate the full stabilizer everywhere",
    );
}

#[test]
fn criterion_07_reductions_and_commutation() {
    let mut c = Criterion::new();
    for n in [8usize, 12] {
        let report = reduction_checks(&prism(n), Family::Prism).unwrap();
        c.require(report.all_pass(), || format!("prism {n}: {report:?}"));
    }
    for n in [6usize, 9] {
        let report = reduction_checks(&antiprism(n), Family::Antiprism).unwrap();
        c.require(report.all_pass(), || format!("antiprism {n}: {report:?}"));
    }
    for n in 3..=12 {
        let trivial = prism(n)
            .evaluate(prism_family(n).unwrap().h_n())
            .is_identity();
        c.require(trivial == (n % 4 == 0), || {
            format!("prism {n}: h_n triviality does not match n mod 4")
        });
    }
    for n in 3..=8 {
        let trivial = antiprism(n)
            .evaluate(antiprism_family(n).unwrap().h_n())
            .is_identity();
        c.require(trivial == (n % 3 == 0), || {
            format!("antiprism {n}: h_n triviality does not match n mod 3")
        });
    }
    c.conclude("criterion 07: word reductions, commutation, and h_n triviality rule");
}

#[test]
fn criterion_08_normal_structure() {
    let mut c = Criterion::new();
    for m in 1..=3usize {
        let report = prism_structure(4 * m).unwrap();
        c.require(report.all_pass(), || format!("prism {}: {report:?}", 4 * m));
        c.require(report.central_ok == Some(true), || {
            format!("prism {}: (abc)^{} is not central", 4 * m, 3 * m)
        });
    }
    for m in 1..=3usize {
        let report = antiprism_structure(3 * m).unwrap();
        c.require(report.all_pass(), || {
            format!("antiprism {}: {report:?}", 3 * m)
        });
    }
    c.conclude(
        "criterion 08: abelian kernels of rank 3/4, octahedral quotients, central half-turns",
    );
}

#[test]
fn criterion_09_topology() {
    let mut c = Criterion::new();
    for n in 3..=10 {
        let fs = prism(n);
        let mon = monodromy(&fs);
        let presentation = minimal_cover_presentation(Family::Prism, n);
        let topology = euler_genus(&mon, Some(&presentation), DEFAULT_ENUM_CAP);
        let cf = closed_form(Family::Prism, n);
        c.require(
            topology.euler_characteristic == cf.euler_characteristic
                && topology.genus == Some(cf.genus)
                && topology.orientability == Orientability::Orientable,
            || format!("prism {n}: {topology:?} vs {cf:?}"),
        );
    }
    for n in 3..=6 {
        let fs = antiprism(n);
        let mon = monodromy(&fs);
        let presentation = minimal_cover_presentation(Family::Antiprism, n);
        let topology = euler_genus(&mon, Some(&presentation), DEFAULT_ENUM_CAP);
        let cf = closed_form(Family::Antiprism, n);
        c.require(
            topology.euler_characteristic == cf.euler_characteristic
                && topology.genus == Some(cf.genus)
                && topology.orientability == Orientability::Orientable,
            || format!("antiprism {n}: {topology:?} vs {cf:?}"),
        );
    }
    // the spot values: m = 2 and m = 3 prisms, m = 2 antiprism
    let p8 = closed_form(Family::Prism, 8);
    c.require((p8.euler_characteristic, p8.genus) == (-8, 5), || {
        format!("prism 8 closed form: {p8:?}")
    });
    let p12 = closed_form(Family::Prism, 12);
    c.require((p12.euler_characteristic, p12.genus) == (-54, 28), || {
        format!("prism 12 closed form: {p12:?}")
    });
    let a6 = closed_form(Family::Antiprism, 6);
    c.require((a6.euler_characteristic, a6.genus) == (-32, 17), || {
        format!("antiprism 6 closed form: {a6:?}")
    });
    c.conclude("criterion 09: Euler characteristic and genus match the closed forms, orientable");
}

#[test]
fn criterion_10_cover_coincidence() {
    let mut c = Criterion::new();
    let cases = [
        (Family::Prism, 5, vec![5, 10, 20]),
        (Family::Prism, 6, vec![6, 12]),
        (Family::Antiprism, 4, vec![4, 12]),
        (Family::Antiprism, 5, vec![5, 15]),
    ];
    for (family, n, expected_members) in cases {
        let report = coincidence_check(family, n, 256, DEFAULT_COSET_CAP).unwrap();
        let members: Vec<usize> = report.members.iter().map(|m| m.n).collect();
        c.require(report.coincide && members == expected_members, || {
            format!("{family} {n}: members {members:?}, report {report:?}")
        });
    }
    c.conclude("criterion 10: maps with equal lcm share one minimal regular cover");
}

#[test]
fn criterion_11_engine_soundness() {
    let mut c = Criterion::new();

    // orbit–stabilizer on 200 seeded random small groups
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d69_6e63);
    for case in 0..200 {
        let degree = rng.gen_range(4..=8);
        let gen_count = rng.gen_range(1..=3);
        let gens: Vec<Perm> = (0..gen_count)
            .map(|_| {
                let mut images: Vec<usize> = (0..degree).collect();
                images.shuffle(&mut rng);
                Perm::from_images(images)
            })
            .collect();
        let group = PermGroup::from_generators(degree, gens);
        for x in 0..degree {
            let orbit = group.orbit(x).len() as u64;
            let stab = group.point_stabilizer(x).order();
            c.require(group.order() == orbit * stab, || {
                format!(
                    "case {case}: |G| = {} but orbit {orbit} × stab {stab}",
                    group.order()
                )
            });
        }
    }

    // coset enumeration agrees with the stabilizer chain on the named
    // presentations
    let pairs: Vec<(&str, Presentation, FlagSystem)> = vec![
        ("[4,3]", Presentation::coxeter_plus(4, 3, vec![]), prism(4)),
        (
            "[3,4]",
            Presentation::coxeter_plus(3, 4, vec![]),
            antiprism(3),
        ),
        (
            "[4,3]+w",
            Presentation::coxeter_plus(4, 3, vec![prism_relator()]),
            prism(4),
        ),
        (
            "[12,3]+w",
            Presentation::coxeter_plus(12, 3, vec![prism_relator()]),
            prism(3),
        ),
        (
            "[12,4]+w",
            Presentation::coxeter_plus(12, 4, vec![antiprism_relator()]),
            antiprism(4),
        ),
    ];
    for (name, presentation, fs) in pairs {
        let table = todd_coxeter(&presentation, &[], DEFAULT_COSET_CAP);
        let order = monodromy(&fs).order();
        c.require(
            table.is_closed() && table.coset_count() as u64 == order,
            || {
                format!(
                    "{name}: {} cosets vs group order {order}",
                    table.coset_count()
                )
            },
        );
        let columns = table.column_group();
        c.require(columns.order() as usize == table.coset_count(), || {
            format!("{name}: column group order differs from coset count")
        });
    }

    // brute-force element counts agree with the chain for every corpus
    // group of order at most 10⁴
    for (name, fs) in corpus() {
        let mon = monodromy(&fs);
        if mon.order() <= 10_000 {
            let elements = mon.group().elements(20_000).unwrap();
            c.require(elements.len() as u64 == mon.order(), || {
                format!(
                    "{name}: {} enumerated vs order {}",
                    elements.len(),
                    mon.order()
                )
            });
        }
    }

    c.conclude("criterion 11: orbit–stabilizer, enumeration, and coset counts agree");
}
