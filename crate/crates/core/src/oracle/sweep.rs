use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{Deadline, SearchBudget};
use crate::error::{Error, Result};
use crate::galois::{all_torsion_pairs, index_labels, BrickRelation, BrickSet};
use crate::suite::tors_suite;

/// Violations kept per brick count; the rest are only counted.
const KEPT_VIOLATIONS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepViolation {
    pub mask: u64,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub bricks: usize,
    pub relations: u64,
    pub factorizable: u64,
    pub semidistributive: u64,
    /// Number of factorizable relations by size of `tors`.
    pub lattice_sizes: BTreeMap<usize, u64>,
    /// `X ∈ T(B)` with neither `X ↠ B` nor `X ↛ B`, over factorizable
    /// relations. Reported only.
    pub abstract_asai_failures: u64,
    pub violation_count: u64,
    pub violations: Vec<SweepViolation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub max_brick_set_size: usize,
    pub threads: usize,
    pub rows: Vec<SweepRow>,
    pub total_violations: u64,
    pub elapsed_seconds: f64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.total_violations == 0
    }

    pub fn row(&self, m: usize) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.bricks == m)
    }
}

/// The reflexive relation on `m` points whose off-diagonal arrows are the
/// set bits of `mask`, taken over pairs `(x, y)`, `x ≠ y`, in row-major
/// order.
pub fn relation_from_mask(m: usize, mask: u64) -> BrickRelation {
    let mut out = vec![BrickSet::EMPTY; m];
    let mut bit = 0;
    for (x, row) in out.iter_mut().enumerate() {
        row.insert(x);
        for y in 0..m {
            if x != y {
                if mask >> bit & 1 == 1 {
                    row.insert(y);
                }
                bit += 1;
            }
        }
    }
    BrickRelation::from_out_sets(index_labels(m), out).expect("reflexive by construction")
}

#[derive(Default)]
struct Outcome {
    factorizable: bool,
    semidistributive: bool,
    size: usize,
    asai_failures: u64,
    violations: Vec<SweepViolation>,
}

fn examine(m: usize, mask: u64) -> Outcome {
    let r = relation_from_mask(m, mask);
    if !r.is_factorizable() {
        return Outcome::default();
    }
    let tl = all_torsion_pairs(&r);
    let report = tors_suite(&tl);
    let epi = r.derived_epi();
    let mut asai_failures = 0;
    for b in 0..m {
        for x in r.tors_closure(BrickSet::singleton(b)).iter() {
            if !epi[x].contains(b) && r.arrow(x, b) {
                asai_failures += 1;
            }
        }
    }
    Outcome {
        factorizable: true,
        semidistributive: report.get("semidistributive").is_some_and(|c| c.passed),
        size: tl.len(),
        asai_failures,
        violations: report
            .checks
            .into_iter()
            .filter(|c| !c.passed)
            .map(|c| SweepViolation {
                mask,
                check: c.name.to_string(),
                witness: c.witness,
            })
            .collect(),
    }
}

/// Every reflexive relation on `m ≤ max_brick_set_size` points; each
/// factorizable one goes through the full lattice suite.
pub fn sweep_factorizable(budget: &SearchBudget, threads: usize) -> Result<SweepReport> {
    budget.validate()?;
    if budget.max_brick_set_size > 5 {
        return Err(Error::BudgetExceeded(format!(
            "sweep over {} bricks exceeds the limit of 5",
            budget.max_brick_set_size
        )));
    }
    let threads = threads.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InternalInconsistency(format!("thread pool: {e}")))?;
    let deadline = Deadline::new(budget.time_limit);
    let mut rows = Vec::new();
    for m in 1..=budget.max_brick_set_size {
        let total: u64 = 1 << (m * (m - 1));
        let outcomes: Vec<Outcome> = pool.install(|| {
            (0..total)
                .into_par_iter()
                .map(|mask| {
                    deadline.check()?;
                    Ok(examine(m, mask))
                })
                .collect::<Result<Vec<_>>>()
        })?;
        let mut row = SweepRow {
            bricks: m,
            relations: total,
            factorizable: 0,
            semidistributive: 0,
            lattice_sizes: BTreeMap::new(),
            abstract_asai_failures: 0,
            violation_count: 0,
            violations: Vec::new(),
        };
        for o in outcomes {
            if !o.factorizable {
                continue;
            }
            row.factorizable += 1;
            row.semidistributive += u64::from(o.semidistributive);
            *row.lattice_sizes.entry(o.size).or_default() += 1;
            row.abstract_asai_failures += o.asai_failures;
            row.violation_count += o.violations.len() as u64;
            for v in o.violations {
                if row.violations.len() < KEPT_VIOLATIONS {
                    row.violations.push(v);
                }
            }
        }
        rows.push(row);
    }
    let total_violations = rows.iter().map(|r| r.violation_count).sum();
    Ok(SweepReport {
        max_brick_set_size: budget.max_brick_set_size,
        threads,
        rows,
        total_violations,
        elapsed_seconds: deadline.elapsed_seconds(),
    })
}
