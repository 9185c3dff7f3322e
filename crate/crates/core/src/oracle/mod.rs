//! Independent brute-force checks and exhaustive searches.

mod census;
mod realize;
mod sweep;

pub use census::{lattice_census, CensusEntry, CensusReport};
pub use realize::{realize_sd_lattice, Realization, SearchFilter, SearchOutcome};
pub use sweep::{relation_from_mask, sweep_factorizable, SweepReport, SweepRow, SweepViolation};

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::galois::{BrickRelation, BrickSet, TorsLattice};
use crate::rep::{
    self, exists_surjection, hom_dim, quotients, submodules, IntervalModule, QuiverPresentation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_brick_set_size: usize,
    pub max_lattice_size: usize,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn sweep() -> Self {
        SearchBudget {
            max_brick_set_size: 4,
            max_lattice_size: 6,
            time_limit: None,
        }
    }

    pub fn realize() -> Self {
        SearchBudget {
            max_brick_set_size: 5,
            ..Self::sweep()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_brick_set_size == 0
            || self.max_lattice_size == 0
            || self.time_limit == Some(Duration::ZERO)
        {
            return Err(Error::BudgetExceeded(
                "budget fields must be positive".into(),
            ));
        }
        Ok(())
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::sweep()
    }
}

/// Wall-clock guard shared by the searches.
#[derive(Clone, Copy)]
pub(crate) struct Deadline {
    start: Instant,
    limit: Option<Duration>,
}

impl Deadline {
    pub(crate) fn new(limit: Option<Duration>) -> Self {
        Deadline {
            start: Instant::now(),
            limit,
        }
    }

    pub(crate) fn check(&self) -> Result<()> {
        match self.limit {
            Some(l) if self.start.elapsed() > l => Err(Error::BudgetExceeded(format!(
                "time limit of {:.1}s reached",
                l.as_secs_f64()
            ))),
            _ => Ok(()),
        }
    }

    pub(crate) fn elapsed_seconds(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}

/// Torsion pairs by scanning every subset `S` and keeping those with
/// `⊥(S⊥) = S`.
pub fn brute_torsion_pairs(r: &BrickRelation) -> Result<TorsLattice> {
    const MAX: usize = 20;
    if r.len() > MAX {
        return Err(Error::BudgetExceeded(format!(
            "subset scan over {} bricks exceeds the limit of {MAX}",
            r.len()
        )));
    }
    let closed = (0u64..1 << r.len())
        .map(BrickSet::from_bits)
        .filter(|&s| r.is_closed(s));
    TorsLattice::from_closed_sets(r.clone(), closed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub pairs_checked: usize,
    /// Torsion sides from the lattice that fail quotient or extension closure.
    pub necessary_failures: Vec<String>,
    pub subsets_checked: usize,
    /// Subsets where the axioms and membership in the lattice disagree.
    pub subset_mismatches: Vec<String>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.necessary_failures.is_empty() && self.subset_mismatches.is_empty()
    }
}

/// Quotient and extension rules on interval modules, as brick-set
/// implications.
struct ClosureRules {
    names: Vec<String>,
    /// Bricks occurring as summands of some quotient of brick `x`.
    quotient_summands: Vec<BrickSet>,
    /// `(sub ∪ quotient summands, e)`: if the summands are all present then
    /// `e` must be.
    extensions: Vec<(BrickSet, usize)>,
}

impl ClosureRules {
    fn new(q: &QuiverPresentation, bricks: &[IntervalModule]) -> Result<Self> {
        let index = |m: &IntervalModule| {
            bricks.iter().position(|b| b == m).ok_or_else(|| {
                Error::InternalInconsistency(format!(
                    "summand {} is not a brick",
                    m.dim_vector(q.vertices())
                ))
            })
        };
        let summand_set = |s: rep::VertexSet| -> Result<BrickSet> {
            s.summands().iter().map(index).collect::<Result<BrickSet>>()
        };
        let mut quotient_summands = Vec::with_capacity(bricks.len());
        let mut extensions = Vec::new();
        for (e, m) in bricks.iter().enumerate() {
            let mut qs = BrickSet::EMPTY;
            for s in quotients(q, m) {
                qs = qs | summand_set(s)?;
            }
            quotient_summands.push(qs);
            let support = m.support();
            for s in submodules(q, m) {
                if s.is_empty() || s == support {
                    continue;
                }
                extensions.push((summand_set(s)? | summand_set(support.minus(s))?, e));
            }
        }
        Ok(ClosureRules {
            names: bricks.iter().map(|b| b.dim_vector(q.vertices())).collect(),
            quotient_summands,
            extensions,
        })
    }

    fn failure(&self, s: BrickSet) -> Option<String> {
        for x in s.iter() {
            let missing = self.quotient_summands[x].minus(s);
            if let Some(y) = missing.iter().next() {
                return Some(format!(
                    "quotient {} of {} missing",
                    self.names[y], self.names[x]
                ));
            }
        }
        for &(need, e) in &self.extensions {
            if need.is_subset(s) && !s.contains(e) {
                return Some(format!("extension {} missing", self.names[e]));
            }
        }
        None
    }

    fn describe(&self, s: BrickSet) -> String {
        let names: Vec<&str> = s.iter().map(|b| self.names[b].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Checks the torsion sides of `tl` against closure under quotients and
/// extensions computed from submodule lattices, and compares the two
/// notions on every subset of bricks.
pub fn closure_axiom_check(q: &QuiverPresentation, tl: &TorsLattice) -> Result<ClosureReport> {
    let bricks = rep::bricks(q)?;
    let labels: Vec<String> = bricks.iter().map(|b| b.dim_vector(q.vertices())).collect();
    if labels != tl.relation().labels() {
        return Err(Error::InternalInconsistency(
            "lattice bricks differ from the quiver's bricks".into(),
        ));
    }
    if bricks.len() > 20 {
        return Err(Error::BudgetExceeded(format!(
            "{} bricks is too many for a subset scan",
            bricks.len()
        )));
    }
    let rules = ClosureRules::new(q, &bricks)?;
    let mut necessary_failures = Vec::new();
    for p in tl.pairs() {
        if let Some(why) = rules.failure(p.tset) {
            necessary_failures.push(format!("{}: {why}", rules.describe(p.tset)));
        }
    }
    let mut subset_mismatches = Vec::new();
    let subsets = 1usize << bricks.len();
    for bits in 0..subsets as u64 {
        let s = BrickSet::from_bits(bits);
        let by_axioms = rules.failure(s).is_none();
        let in_lattice = tl.element_of(s).is_some();
        if by_axioms != in_lattice {
            subset_mismatches.push(format!(
                "{}: axioms say {by_axioms}, lattice says {in_lattice}",
                rules.describe(s)
            ));
        }
    }
    Ok(ClosureReport {
        pairs_checked: tl.len(),
        necessary_failures,
        subsets_checked: subsets,
        subset_mismatches,
    })
}

/// Why `s` is not closed under quotients and extensions, if it is not.
pub fn closure_axiom_failure(q: &QuiverPresentation, s: BrickSet) -> Result<Option<String>> {
    let bricks = rep::bricks(q)?;
    Ok(ClosureRules::new(q, &bricks)?.failure(s))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsaiWitness {
    pub brick: String,
    pub module: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsaiReport {
    pub pairs_checked: usize,
    pub violations: Vec<AsaiWitness>,
}

/// For every brick `B` and every `X` in `T(B)`: `X ↠ B` or `Hom(X, B) = 0`.
pub fn asai_sweep(q: &QuiverPresentation) -> Result<AsaiReport> {
    let (bricks, rel) = rep::hom_relation(q)?;
    let mut pairs_checked = 0;
    let mut violations = Vec::new();
    for (b, bm) in bricks.iter().enumerate() {
        for x in rel.tors_closure(BrickSet::singleton(b)).iter() {
            let xm = &bricks[x];
            pairs_checked += 1;
            if !exists_surjection(q, xm, bm)? && hom_dim(q, xm, bm).dim != 0 {
                violations.push(AsaiWitness {
                    brick: rel.label(b).to_string(),
                    module: rel.label(x).to_string(),
                });
            }
        }
    }
    Ok(AsaiReport {
        pairs_checked,
        violations,
    })
}
