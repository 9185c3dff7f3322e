//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any of them fails.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use torslat::bridge::{quotient_map, tors_of_algebra};
use torslat::galois::{all_torsion_pairs, BrickRelation, MonoReading};
use torslat::lattice::{are_isomorphic, is_lattice_quotient, FiniteLattice};
use torslat::oracle::{
    asai_sweep, brute_torsion_pairs, closure_axiom_check, lattice_census, realize_sd_lattice,
    relation_from_mask, sweep_factorizable, SearchBudget, SearchFilter,
};
use torslat::rep::{hom_relation, Orientation, QuiverPresentation};
use torslat::suite::tors_suite;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn read(path: PathBuf) -> Result<String, String> {
    fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn golden_run(args: &[&str], gold: &str) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_torslat"))
        .args(args)
        .env_remove("TORSLAT_THREADS")
        .output()
        .map_err(err)?;
    ensure(out.status.code() == Some(0), || {
        format!("exit status {:?}", out.status.code())
    })?;
    let expected = read(
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(gold),
    )?;
    ensure(out.stdout == expected.as_bytes(), || {
        format!("output differs from {gold}")
    })
}

fn orientations(arrows: usize) -> Vec<Vec<Orientation>> {
    (0..1u32 << arrows)
        .map(|bits| {
            (0..arrows)
                .map(|k| {
                    if bits >> k & 1 == 0 {
                        Orientation::Left
                    } else {
                        Orientation::Right
                    }
                })
                .collect()
        })
        .collect()
}

/// All orientations of A_n for n <= 4, then the Nakayama quotients of the
/// linear A_3 and A_4 in both directions.
fn algebras() -> Vec<(String, QuiverPresentation)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for o in orientations(n - 1) {
            let name = format!("A{n} {o:?}");
            out.push((name, QuiverPresentation::hereditary(n, o).unwrap()));
        }
    }
    let ideals: [(usize, Vec<Vec<Vec<usize>>>); 2] = [
        (3, vec![vec![vec![0, 1]]]),
        (
            4,
            vec![
                vec![vec![0, 1]],
                vec![vec![1, 2]],
                vec![vec![0, 1], vec![1, 2]],
                vec![vec![0, 1, 2]],
            ],
        ),
    ];
    for (n, list) in ideals {
        for dir in [Orientation::Left, Orientation::Right] {
            for rels in &list {
                let q = QuiverPresentation::new(n, vec![dir; n - 1], rels).unwrap();
                out.push((format!("A{n} {dir:?} mod {rels:?}"), q));
            }
        }
    }
    out
}

fn c1_build_tors() -> Outcome {
    golden_run(&["build-tors", data("a2.json").to_str().unwrap()], "a2.out")?;
    let at = tors_of_algebra(&QuiverPresentation::linear(2)).map_err(err)?;
    let pentagon =
        FiniteLattice::from_pairs(5, &[(0, 1), (0, 2), (2, 3), (3, 4), (1, 4)]).map_err(err)?;
    ensure(
        are_isomorphic(at.tors().lattice(), &pentagon).is_some(),
        || "not a pentagon".into(),
    )?;
    let labels: Vec<(usize, usize, String)> = at
        .label_names()
        .into_iter()
        .map(|(c, name)| (c.lower, c.upper, name))
        .collect();
    let expected = [
        (0, 1, "[10]"),
        (0, 2, "[01]"),
        (1, 4, "[01]"),
        (2, 3, "[11]"),
        (3, 4, "[10]"),
    ];
    ensure(
        labels.len() == 5
            && labels
                .iter()
                .zip(expected)
                .all(|(a, b)| a.0 == b.0 && a.1 == b.1 && a.2 == b.2),
        || format!("labels {labels:?}"),
    )?;
    Ok("5 torsion classes, 5 labels, golden matches".into())
}

fn c2_quotient() -> Outcome {
    golden_run(
        &[
            "quotient",
            data("a2.json").to_str().unwrap(),
            "--ideal",
            "0",
        ],
        "a2_quotient.out",
    )?;
    let qm = quotient_map(&QuiverPresentation::linear(2), &[vec![0]]).map_err(err)?;
    let target = qm.target().tors().lattice();
    ensure(
        are_isomorphic(target, &FiniteLattice::boolean(2)).is_some(),
        || "target is not Boolean".into(),
    )?;
    let names = qm.source().tors().node_names();
    let mut fibers = vec![Vec::new(); target.len()];
    for (x, &y) in qm.element_map().iter().enumerate() {
        fibers[y].push(names[x].clone());
    }
    let collapsed: Vec<_> = fibers.into_iter().filter(|f| f.len() > 1).collect();
    ensure(
        collapsed == [vec!["<[01]>".to_string(), "<[11],[01]>".to_string()]],
        || format!("collapsed fibers {collapsed:?}"),
    )?;
    ensure(
        is_lattice_quotient(qm.element_map(), qm.source().tors().lattice(), target),
        || "not a lattice quotient".into(),
    )?;
    ensure(qm.label_preservation_check(), || {
        "labels not preserved".into()
    })?;
    Ok("Boolean target, one collapsed fiber, labels preserved".into())
}

fn c3_bijections() -> Outcome {
    let algs = algebras();
    for (name, q) in &algs {
        let at = tors_of_algebra(q).map_err(|e| format!("{name}: {e}"))?;
        let report = tors_suite(at.tors());
        for check in ["irreducible_counts", "ji_bijection", "mi_bijection"] {
            let c = report
                .get(check)
                .ok_or_else(|| format!("missing check {check}"))?;
            ensure(c.passed, || format!("{name}: {check}: {:?}", c.witness))?;
        }
    }
    Ok(format!("{} algebras", algs.len()))
}

fn c4_labelling() -> Outcome {
    let algs = algebras();
    let mut checks = 0;
    for (name, q) in &algs {
        let at = tors_of_algebra(q).map_err(|e| format!("{name}: {e}"))?;
        let report = tors_suite(at.tors());
        if let Some(c) = report.first_failure() {
            return Err(format!("{name}: {}: {:?}", c.name, c.witness));
        }
        checks += report.checks.len();
    }
    Ok(format!("{} algebras, {checks} checks", algs.len()))
}

fn c5_oracles() -> Outcome {
    let mut rels: Vec<(String, BrickRelation)> = Vec::new();
    for file in ["a2_rel.json", "derangement.json"] {
        rels.push((
            file.into(),
            torslat::io::parse_relation(&read(data(file))?).map_err(err)?,
        ));
    }
    for (name, q) in algebras() {
        rels.push((name, hom_relation(&q).map_err(err)?.1));
    }
    for m in 1..=3usize {
        for mask in 0..1u64 << (m * (m - 1)) {
            rels.push((format!("mask {mask} on {m}"), relation_from_mask(m, mask)));
        }
    }
    for (name, r) in &rels {
        let brute = brute_torsion_pairs(r).map_err(err)?;
        ensure(brute.pairs() == all_torsion_pairs(r).pairs(), || {
            format!("{name}: brute force differs")
        })?;
    }
    let mut closure = vec![QuiverPresentation::linear(2)];
    closure.extend(
        orientations(2)
            .into_iter()
            .map(|o| QuiverPresentation::hereditary(3, o).unwrap()),
    );
    for q in &closure {
        let at = tors_of_algebra(q).map_err(err)?;
        let report = closure_axiom_check(q, at.tors()).map_err(err)?;
        ensure(report.passed(), || format!("closure axioms: {report:?}"))?;
    }
    let a3 = brute_torsion_pairs(&hom_relation(&QuiverPresentation::linear(3)).map_err(err)?.1)
        .map_err(err)?;
    ensure(a3.len() == 14, || {
        format!("linear A3 has {} torsion classes", a3.len())
    })?;
    Ok(format!(
        "{} relations, {} closure algebras, A3 count 14",
        rels.len(),
        closure.len()
    ))
}

fn c6_asai() -> Outcome {
    let mut pairs = 0;
    for (name, q) in algebras() {
        let report = asai_sweep(&q).map_err(err)?;
        ensure(report.violations.is_empty(), || {
            format!("{name}: {:?}", report.violations[0])
        })?;
        pairs += report.pairs_checked;
    }
    Ok(format!("{pairs} pairs"))
}

fn c7_sweep() -> Outcome {
    let report = sweep_factorizable(&SearchBudget::sweep(), 1).map_err(err)?;
    let row = report.row(4).ok_or("no row for 4 points")?;
    ensure(row.relations == 4096, || {
        format!("{} relations", row.relations)
    })?;
    ensure(row.semidistributive == row.factorizable, || {
        format!(
            "{} of {} semidistributive",
            row.semidistributive, row.factorizable
        )
    })?;
    ensure(report.passed(), || {
        format!("{} violations", report.total_violations)
    })?;
    Ok(format!(
        "4096 relations, {} factorizable, all semidistributive",
        row.factorizable
    ))
}

fn c8_realize() -> Outcome {
    let mut realized = 0;
    for l in lattice_census(&SearchBudget::sweep()).map_err(err)? {
        if !l.is_semidistributive().map_err(err)? || l.join_irreducibles().len() > 5 {
            continue;
        }
        let out = realize_sd_lattice(&l, &SearchBudget::realize(), SearchFilter::Factorizable)
            .map_err(err)?;
        let r = out
            .found
            .ok_or_else(|| format!("no realization for a lattice with covers {:?}", l.covers()))?;
        ensure(r.factorizable, || "realization is not factorizable".into())?;
        realized += 1;
    }
    let m3 = torslat::io::parse_lattice(&read(data("m3.json"))?).map_err(err)?;
    let three = SearchBudget {
        max_brick_set_size: 3,
        ..SearchBudget::realize()
    };
    let filtered = realize_sd_lattice(&m3, &three, SearchFilter::Factorizable).map_err(err)?;
    ensure(filtered.found.is_none(), || {
        "M3 realized by a factorizable relation".into()
    })?;
    let unfiltered = realize_sd_lattice(&m3, &three, SearchFilter::Unfiltered).map_err(err)?;
    ensure(unfiltered.found.is_some(), || {
        "M3 not realized at all".into()
    })?;
    let seven = torslat::io::parse_lattice(&read(data("seven.json"))?).map_err(err)?;
    ensure(seven.is_semidistributive().map_err(err)?, || {
        "seven-element lattice not semidistributive".into()
    })?;
    let found = realize_sd_lattice(&seven, &SearchBudget::realize(), SearchFilter::Factorizable)
        .map_err(err)?
        .found
        .ok_or("seven-element lattice not realized")?;
    ensure(found.relation.len() == 4, || {
        format!("realized with {} bricks", found.relation.len())
    })?;
    Ok(format!(
        "{realized} census lattices, M3 unfiltered only, seven-element lattice on 4 bricks"
    ))
}

fn c9_mono_reading() -> Outcome {
    let mut qs = vec![("A2".to_string(), QuiverPresentation::linear(2))];
    for o in orientations(2) {
        qs.push((
            format!("A3 {o:?}"),
            QuiverPresentation::hereditary(3, o).unwrap(),
        ));
    }
    for (name, q) in &qs {
        let r = hom_relation(q).map_err(err)?.1;
        ensure(
            r.factorization_failure_with(MonoReading::Dual).is_none(),
            || format!("{name}: dual reading fails"),
        )?;
        ensure(
            r.factorization_failure_with(MonoReading::Literal).is_some(),
            || format!("{name}: literal reading passes"),
        )?;
    }
    Ok(format!("{} hom relations", qs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("A2 torsion lattice and labels", 1, c1_build_tors),
        ("A2 quotient by the arrow", 1, c2_quotient),
        ("brick / irreducible bijections", 30, c3_bijections),
        ("semidistributivity and labelling", 30, c4_labelling),
        ("brute-force and closure oracles", 60, c5_oracles),
        ("surjection-or-zero dichotomy", 30, c6_asai),
        ("factorizable sweep on 4 points", 60, c7_sweep),
        ("realization of small lattices", 600, c8_realize),
        ("literal vs dual mono reading", 1, c9_mono_reading),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(detail) if elapsed <= Duration::from_secs(limit) => format!("PASS {detail}"),
            Ok(detail) => format!("FAIL {detail}, over the {limit}s limit"),
            Err(why) => format!("FAIL {why}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!(
            "criterion {}: {name}: {verdict} ({:.2}s / {limit}s)",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        println!("all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
