use serde::Serialize;

use super::{Deadline, SearchBudget};
use crate::error::{Error, Result};
use crate::lattice::{are_isomorphic, FiniteLattice};

#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    pub size: usize,
    pub covers: Vec<(usize, usize)>,
    pub join_irreducibles: usize,
    pub meet_irreducibles: usize,
    pub semidistributive: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub max_lattice_size: usize,
    /// `(size, lattices, semidistributive)` per size.
    pub counts: Vec<(usize, usize, usize)>,
    pub total: usize,
    pub semidistributive: usize,
    pub lattices: Vec<CensusEntry>,
}

impl CensusReport {
    pub fn new(max_lattice_size: usize, lattices: &[FiniteLattice]) -> Result<Self> {
        let mut entries = Vec::with_capacity(lattices.len());
        for l in lattices {
            entries.push(CensusEntry {
                size: l.len(),
                covers: l.covers().iter().map(|c| (c.lower, c.upper)).collect(),
                join_irreducibles: l.join_irreducibles().len(),
                meet_irreducibles: l.meet_irreducibles().len(),
                semidistributive: l.is_semidistributive()?,
            });
        }
        let counts = (1..=max_lattice_size)
            .map(|n| {
                let of_size = entries.iter().filter(|e| e.size == n);
                let sd = of_size.clone().filter(|e| e.semidistributive).count();
                (n, of_size.count(), sd)
            })
            .collect();
        Ok(CensusReport {
            max_lattice_size,
            counts,
            total: entries.len(),
            semidistributive: entries.iter().filter(|e| e.semidistributive).count(),
            lattices: entries,
        })
    }
}

/// Strict orders on `0..k` with every relation `i < j` going up in index,
/// as lists of pairs.
fn natural_orders(k: usize) -> Vec<Vec<(usize, usize)>> {
    let slots: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << slots.len() {
        let mut rel = vec![vec![false; k]; k];
        for (b, &(i, j)) in slots.iter().enumerate() {
            rel[i][j] = mask >> b & 1 == 1;
        }
        let transitive = (0..k)
            .all(|i| (i + 1..k).all(|j| !rel[i][j] || (j + 1..k).all(|l| !rel[j][l] || rel[i][l])));
        if transitive {
            out.push(slots.iter().copied().filter(|&(i, j)| rel[i][j]).collect());
        }
    }
    out
}

/// Every lattice on at most `max_lattice_size` elements up to isomorphism,
/// ordered by size and then by discovery.
///
/// Lattices of size `n ≥ 2` are enumerated with `0` as bottom, `n - 1` as
/// top and a naturally labelled order on the elements in between.
pub fn lattice_census(budget: &SearchBudget) -> Result<Vec<FiniteLattice>> {
    budget.validate()?;
    let max = budget.max_lattice_size;
    if max > 7 {
        return Err(Error::BudgetExceeded(format!(
            "census up to size {max} exceeds the limit of 7"
        )));
    }
    let deadline = Deadline::new(budget.time_limit);
    let mut out = vec![FiniteLattice::chain(1)];
    for n in 2..=max {
        let k = n - 2;
        let mut found: Vec<FiniteLattice> = Vec::new();
        for middle in natural_orders(k) {
            deadline.check()?;
            let mut pairs = vec![(0, n - 1)];
            for i in 1..=k {
                pairs.push((0, i));
                pairs.push((i, n - 1));
            }
            pairs.extend(middle.iter().map(|&(i, j)| (i + 1, j + 1)));
            let Ok(l) = FiniteLattice::from_pairs(n, &pairs) else {
                continue;
            };
            if !found.iter().any(|f| are_isomorphic(f, &l).is_some()) {
                found.push(l);
            }
        }
        out.extend(found);
    }
    Ok(out)
}
