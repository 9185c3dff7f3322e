use std::collections::BTreeMap;
use std::fs;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::Serialize;

use torslat::bridge::{quotient_map, tors_of_algebra, AlgebraTors, QuotientMap};
use torslat::galois::{all_torsion_pairs, FactorizationFailure, MonoReading, TorsLattice};
use torslat::io::{self, InputError, InputKind};
use torslat::lattice::{to_dot, CoverEdge, FiniteLattice};
use torslat::oracle::{self, CensusReport, SearchBudget, SearchFilter};
use torslat::rep::brick_listing;
use torslat::suite::{algebra_suite, tors_suite, SuiteReport};
use torslat::Error;

pub enum Failure {
    /// Unreadable or invalid input: exit code 2.
    Parse(String),
    /// Anything else that stops the command: exit code 1.
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

pub struct Sinks {
    pub dot: Option<PathBuf>,
    pub json: Option<PathBuf>,
}

impl Sinks {
    const STDOUT: Sinks = Sinks {
        dot: None,
        json: None,
    };
}

fn write_to(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Run(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                Err(e) if e.kind() != ErrorKind::BrokenPipe => {
                    Err(Failure::Run(format!("stdout: {e}")))
                }
                _ => Ok(()),
            }
        }
    }
}

fn emit<T: Serialize>(sinks: &Sinks, dot: Option<&str>, summary: &T) -> Result<(), Failure> {
    if let Some(d) = dot {
        write_to(sinks.dot.as_deref(), d)?;
    }
    let mut json =
        serde_json::to_string_pretty(summary).map_err(|e| Failure::Run(e.to_string()))?;
    json.push('\n');
    write_to(sinks.json.as_deref(), &json)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn parsed<T>(path: &Path, r: Result<T, InputError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Parse(format!("{}:{e}", path.display())))
}

fn load_quiver(path: &Path) -> Result<AlgebraTors, Failure> {
    let q = parsed(path, io::parse_quiver(&read(path)?))?;
    Ok(tors_of_algebra(&q)?)
}

fn load_tors(path: &Path) -> Result<Loaded, Failure> {
    let text = read(path)?;
    match parsed(path, io::detect_kind(&text))? {
        InputKind::Quiver => {
            let q = parsed(path, io::parse_quiver(&text))?;
            Ok(Loaded::Algebra(tors_of_algebra(&q)?))
        }
        InputKind::Relation => {
            let r = parsed(path, io::parse_relation(&text))?;
            Ok(Loaded::Relation(all_torsion_pairs(&r)))
        }
        InputKind::Lattice => Err(Failure::Parse(format!(
            "{}: expected a quiver or relation file, found a lattice",
            path.display()
        ))),
    }
}

enum Loaded {
    Algebra(AlgebraTors),
    Relation(TorsLattice),
}

impl Loaded {
    fn tors(&self) -> &TorsLattice {
        match self {
            Loaded::Algebra(at) => at.tors(),
            Loaded::Relation(tl) => tl,
        }
    }
}

#[derive(Serialize)]
struct CoverLabel {
    lower: usize,
    upper: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize)]
struct TorsSummary {
    torsion_classes: usize,
    bricks: Vec<String>,
    join_irreducibles: usize,
    meet_irreducibles: usize,
    semidistributive: bool,
    elements: Vec<String>,
    covers: Vec<CoverLabel>,
}

fn summarize(
    tl: &TorsLattice,
    labels: &BTreeMap<CoverEdge, String>,
) -> Result<TorsSummary, Failure> {
    let l = tl.lattice();
    Ok(TorsSummary {
        torsion_classes: tl.len(),
        bricks: tl.relation().labels().to_vec(),
        join_irreducibles: l.join_irreducibles().len(),
        meet_irreducibles: l.meet_irreducibles().len(),
        semidistributive: l.is_semidistributive()?,
        elements: tl.node_names(),
        covers: l
            .covers()
            .into_iter()
            .map(|c| CoverLabel {
                lower: c.lower,
                upper: c.upper,
                label: labels.get(&c).cloned(),
            })
            .collect(),
    })
}

fn tors_dot(tl: &TorsLattice, labels: &BTreeMap<CoverEdge, String>) -> String {
    to_dot(tl.lattice(), Some(&tl.node_names()), Some(labels))
}

pub fn build_tors(path: &Path, sinks: &Sinks, bricks: Option<&Path>) -> Outcome {
    let at = load_quiver(path)?;
    let labels = at.label_names();
    let summary = summarize(at.tors(), &labels)?;
    emit(sinks, Some(&at.to_dot()), &summary)?;
    if let Some(p) = bricks {
        let listing = brick_listing(at.quiver())?;
        fs::write(p, listing).map_err(|e| Failure::Run(format!("{}: {e}", p.display())))?;
    }
    Ok(summary.semidistributive)
}

#[derive(Serialize)]
struct RelationSummary {
    #[serde(flatten)]
    tors: TorsSummary,
    mono_reading: &'static str,
    factorizable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    factorization_failure: Option<FactorizationFailure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    label_failures: Vec<String>,
}

pub fn build_rel(path: &Path, sinks: &Sinks, literal_mono: bool) -> Outcome {
    let r = parsed(path, io::parse_relation(&read(path)?))?;
    let tl = all_torsion_pairs(&r);
    let mut labels = BTreeMap::new();
    let mut label_failures = Vec::new();
    for c in tl.lattice().covers() {
        match tl.cover_brick_label(c) {
            Ok(b) => {
                labels.insert(c, r.label(b).to_string());
            }
            Err(e) => label_failures.push(e.to_string()),
        }
    }
    let reading = if literal_mono {
        MonoReading::Literal
    } else {
        MonoReading::Dual
    };
    let failure = r.factorization_failure_with(reading);
    let summary = RelationSummary {
        tors: summarize(&tl, &labels)?,
        mono_reading: if literal_mono { "literal" } else { "dual" },
        factorizable: failure.is_none(),
        factorization_failure: failure,
        label_failures,
    };
    emit(sinks, Some(&tors_dot(&tl, &labels)), &summary)?;
    Ok(true)
}

#[derive(Serialize)]
struct CheckSummary<'a> {
    passed: bool,
    #[serde(flatten)]
    report: &'a SuiteReport,
}

pub fn check(path: &Path) -> Outcome {
    let report = match load_tors(path)? {
        Loaded::Algebra(at) => algebra_suite(&at),
        Loaded::Relation(tl) => tors_suite(&tl),
    };
    let passed = report.passed();
    emit(
        &Sinks::STDOUT,
        None,
        &CheckSummary {
            passed,
            report: &report,
        },
    )?;
    if let Some(c) = report.first_failure() {
        eprintln!(
            "violation: {}: {}",
            c.name,
            c.witness.as_deref().unwrap_or("")
        );
    }
    Ok(passed)
}

fn names_and_labels(
    loaded: &Loaded,
) -> Result<(Vec<String>, BTreeMap<CoverEdge, String>), Failure> {
    let tl = loaded.tors();
    let labels = match loaded {
        Loaded::Algebra(at) => at.label_names(),
        Loaded::Relation(tl) => tl
            .brick_labels()?
            .into_iter()
            .map(|(c, b)| (c, tl.relation().label(b).to_string()))
            .collect(),
    };
    Ok((tl.node_names(), labels))
}

pub fn labels(path: &Path) -> Outcome {
    let loaded = load_tors(path)?;
    let (names, labels) = names_and_labels(&loaded)?;
    let mut out = String::from("lower\tupper\tbrick\n");
    for (c, b) in &labels {
        out.push_str(&format!("{}\t{}\t{b}\n", names[c.lower], names[c.upper]));
    }
    write_to(None, &out)?;
    Ok(true)
}

pub fn kappa(path: &Path) -> Outcome {
    let loaded = load_tors(path)?;
    let tl = loaded.tors();
    let l = tl.lattice();
    let names = tl.node_names();
    let mut out = String::from("brick\tjoin_irreducible\tkappa\n");
    for b in 0..tl.relation().len() {
        let j = tl.ji_of_brick(b)?;
        let k = l.kappa(j)?;
        out.push_str(&format!(
            "{}\t{}\t{}\n",
            tl.relation().label(b),
            names[j],
            names[k]
        ));
    }
    write_to(None, &out)?;
    Ok(true)
}

fn parse_ideal(paths: &[String]) -> Result<Vec<Vec<usize>>, Failure> {
    paths
        .iter()
        .map(|s| {
            s.split(',')
                .map(|a| {
                    a.trim().parse::<usize>().map_err(|_| {
                        Failure::Parse(format!("invalid arrow index {a:?} in --ideal {s:?}"))
                    })
                })
                .collect()
        })
        .collect()
}

#[derive(Serialize)]
struct FiberSummary {
    pairs: usize,
    consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_inconsistent: Option<(usize, usize)>,
}

#[derive(Serialize)]
struct QuotientSummary {
    ideal: Vec<Vec<usize>>,
    source: TorsSummary,
    target: TorsSummary,
    element_map: Vec<usize>,
    fibers: Vec<Vec<String>>,
    collapsed_fibers: usize,
    lattice_quotient: bool,
    label_preservation: bool,
    fiber_check: FiberSummary,
}

fn fiber_summary(qm: &QuotientMap) -> Result<FiberSummary, Failure> {
    let l = qm.source().tors().lattice();
    let mut pairs = 0;
    let mut first_inconsistent = None;
    for u in 0..l.len() {
        for v in 0..l.len() {
            if !l.leq(u, v) {
                continue;
            }
            pairs += 1;
            if first_inconsistent.is_none() && !qm.fiber_check(u, v)?.consistent() {
                first_inconsistent = Some((u, v));
            }
        }
    }
    Ok(FiberSummary {
        pairs,
        consistent: first_inconsistent.is_none(),
        first_inconsistent,
    })
}

pub fn quotient(path: &Path, ideal: &[String], sinks: &Sinks) -> Outcome {
    let paths = parse_ideal(ideal)?;
    let q = parsed(path, io::parse_quiver(&read(path)?))?;
    let qm = quotient_map(&q, &paths).map_err(|e| match e {
        Error::InvalidIdeal(_) | Error::UnsupportedAlgebra(_) => Failure::Parse(e.to_string()),
        other => Failure::Run(other.to_string()),
    })?;
    let (source, target) = (qm.source(), qm.target());
    let source_names = source.tors().node_names();
    let mut fibers: Vec<Vec<String>> = vec![Vec::new(); target.tors().len()];
    for (x, &y) in qm.element_map().iter().enumerate() {
        fibers[y].push(source_names[x].clone());
    }
    fibers.retain(|f| f.len() > 1);
    let fiber_check = fiber_summary(&qm)?;
    let label_preservation = qm.label_preservation_check();
    let ok = fiber_check.consistent && label_preservation;
    let summary = QuotientSummary {
        ideal: paths,
        source: summarize(source.tors(), &source.label_names())?,
        target: summarize(target.tors(), &target.label_names())?,
        element_map: qm.element_map().to_vec(),
        collapsed_fibers: fibers.len(),
        fibers,
        lattice_quotient: true,
        label_preservation,
        fiber_check,
    };
    emit(sinks, Some(&target.to_dot()), &summary)?;
    Ok(ok)
}

#[derive(Serialize)]
struct RealizeSummary {
    elements: usize,
    covers: Vec<(usize, usize)>,
    semidistributive: bool,
    join_irreducibles: usize,
    filter: SearchFilter,
    max_bricks: usize,
    relations_examined: u64,
    result: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    realization: Option<oracle::Realization>,
}

pub fn realize(
    path: &Path,
    max_bricks: usize,
    unfiltered: bool,
    limit: Option<Duration>,
) -> Outcome {
    let l: FiniteLattice = parsed(path, io::parse_lattice(&read(path)?))?;
    let filter = if unfiltered {
        SearchFilter::Unfiltered
    } else {
        SearchFilter::Factorizable
    };
    let budget = SearchBudget {
        max_brick_set_size: max_bricks,
        time_limit: limit,
        ..SearchBudget::realize()
    };
    let outcome = oracle::realize_sd_lattice(&l, &budget, filter)?;
    let semidistributive = l.is_semidistributive()?;
    let dot = outcome.found.as_ref().map(|r| {
        let tl = all_torsion_pairs(&r.relation);
        let labels = tl
            .brick_labels()
            .map(|m| {
                m.into_iter()
                    .map(|(c, b)| (c, r.relation.label(b).to_string()))
                    .collect()
            })
            .unwrap_or_default();
        tors_dot(&tl, &labels)
    });
    if dot.is_none() {
        write_to(None, "none within budget\n")?;
    }
    let found = outcome.found.is_some();
    let summary = RealizeSummary {
        elements: l.len(),
        covers: l.covers().iter().map(|c| (c.lower, c.upper)).collect(),
        semidistributive,
        join_irreducibles: l.join_irreducibles().len(),
        filter,
        max_bricks,
        relations_examined: outcome.relations_examined,
        result: if found { "found" } else { "none within budget" },
        realization: outcome.found,
    };
    emit(&Sinks::STDOUT, dot.as_deref(), &summary)?;
    // a semidistributive lattice must be realizable by a factorizable relation
    Ok(found || !semidistributive || unfiltered)
}

pub fn sweep(max_bricks: usize, limit: Option<Duration>, threads: usize) -> Outcome {
    let budget = SearchBudget {
        max_brick_set_size: max_bricks,
        time_limit: limit,
        ..SearchBudget::sweep()
    };
    let report = oracle::sweep_factorizable(&budget, threads)?;
    emit(&Sinks::STDOUT, None, &report)?;
    Ok(report.passed())
}

pub fn census(max_size: usize, limit: Option<Duration>) -> Outcome {
    let budget = SearchBudget {
        max_lattice_size: max_size,
        time_limit: limit,
        ..SearchBudget::sweep()
    };
    let lattices = oracle::lattice_census(&budget)?;
    emit(
        &Sinks::STDOUT,
        None,
        &CensusReport::new(max_size, &lattices)?,
    )?;
    Ok(true)
}
