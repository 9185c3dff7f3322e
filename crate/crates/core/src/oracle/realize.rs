use serde::Serialize;

use super::{Deadline, SearchBudget};
use crate::error::{Error, Result};
use crate::galois::{all_torsion_pairs, index_labels, BrickRelation, BrickSet};
use crate::lattice::{are_isomorphic, FiniteLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchFilter {
    /// Only factorizable relations count.
    Factorizable,
    /// Any reflexive relation.
    Unfiltered,
}

#[derive(Clone, Debug, Serialize)]
pub struct Realization {
    pub relation: BrickRelation,
    /// Element `x` of the input lattice corresponds to element `iso[x]` of
    /// `tors(relation)`.
    pub iso: Vec<usize>,
    pub factorizable: bool,
}

/// Outcome of a realization search, with the number of candidate
/// relations whose lattice was compared.
#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub found: Option<Realization>,
    pub relations_examined: u64,
}

struct Search<'a> {
    target: &'a FiniteLattice,
    filter: SearchFilter,
    deadline: Deadline,
    examined: u64,
}

impl Search<'_> {
    /// Fills rows `x..m` depth-first; rows are reflexive and each takes
    /// its masks in ascending order.
    fn rows(&mut self, m: usize, rows: &mut Vec<BrickSet>) -> Result<Option<Realization>> {
        let x = rows.len();
        if x == m {
            return self.test(m, rows);
        }
        let others: Vec<usize> = (0..m).filter(|&y| y != x).collect();
        for bits in 0u64..1 << others.len() {
            let mut row = BrickSet::singleton(x);
            for (i, &y) in others.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    row.insert(y);
                }
            }
            // two equal rows give x ↠ y ↠ x
            if self.filter == SearchFilter::Factorizable && rows.contains(&row) {
                continue;
            }
            rows.push(row);
            let found = self.rows(m, rows)?;
            rows.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    fn test(&mut self, m: usize, rows: &[BrickSet]) -> Result<Option<Realization>> {
        self.deadline.check()?;
        let r = BrickRelation::from_out_sets(index_labels(m), rows.to_vec())?;
        let factorizable = r.is_factorizable();
        if self.filter == SearchFilter::Factorizable && !factorizable {
            return Ok(None);
        }
        self.examined += 1;
        let tl = all_torsion_pairs(&r);
        if tl.len() != self.target.len() {
            return Ok(None);
        }
        Ok(
            are_isomorphic(self.target, tl.lattice()).map(|iso| Realization {
                relation: r,
                iso,
                factorizable,
            }),
        )
    }
}

/// Searches for a relation `R` with `tors(R) ≅ l`, trying brick counts
/// from `#Ji(l)` up to the budget and returning the first hit.
///
/// Every join irreducible of `tors(R)` is `T(B)` for a brick `B`, so fewer
/// than `#Ji(l)` bricks can never work. A `None` answer is a complete
/// negative result for the given filter within the budget.
pub fn realize_sd_lattice(
    l: &FiniteLattice,
    budget: &SearchBudget,
    filter: SearchFilter,
) -> Result<SearchOutcome> {
    budget.validate()?;
    let ji = l.join_irreducibles().len();
    if ji > budget.max_brick_set_size {
        return Err(Error::BudgetExceeded(format!(
            "{ji} join irreducibles but at most {} bricks allowed",
            budget.max_brick_set_size
        )));
    }
    let mut search = Search {
        target: l,
        filter,
        deadline: Deadline::new(budget.time_limit),
        examined: 0,
    };
    for m in ji..=budget.max_brick_set_size {
        let found = search.rows(m, &mut Vec::with_capacity(m))?;
        if found.is_some() {
            return Ok(SearchOutcome {
                found,
                relations_examined: search.examined,
            });
        }
    }
    Ok(SearchOutcome {
        found: None,
        relations_examined: search.examined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget(m: usize) -> SearchBudget {
        SearchBudget {
            max_brick_set_size: m,
            ..SearchBudget::realize()
        }
    }

    fn m3() -> FiniteLattice {
        FiniteLattice::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn two_chain_is_one_brick() {
        let out = realize_sd_lattice(
            &FiniteLattice::chain(2),
            &budget(5),
            SearchFilter::Factorizable,
        )
        .unwrap();
        let r = out.found.unwrap();
        assert_eq!(r.relation.len(), 1);
        assert!(r.factorizable);
    }

    #[test]
    fn m3_only_without_the_filter() {
        let none = realize_sd_lattice(&m3(), &budget(3), SearchFilter::Factorizable).unwrap();
        assert!(none.found.is_none());
        let some = realize_sd_lattice(&m3(), &budget(3), SearchFilter::Unfiltered).unwrap();
        let r = some.found.unwrap();
        assert_eq!(r.relation.len(), 3);
        assert!(!r.factorizable);
    }

    #[test]
    fn realizations_are_isomorphisms() {
        let pentagon =
            FiniteLattice::from_pairs(5, &[(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)]).unwrap();
        let r = realize_sd_lattice(&pentagon, &budget(5), SearchFilter::Factorizable)
            .unwrap()
            .found
            .unwrap();
        let tl = all_torsion_pairs(&r.relation);
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(pentagon.leq(x, y), tl.lattice().leq(r.iso[x], r.iso[y]));
            }
        }
    }

    #[test]
    fn too_many_join_irreducibles() {
        let chain = FiniteLattice::chain(7);
        assert!(matches!(
            realize_sd_lattice(&chain, &budget(5), SearchFilter::Factorizable),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
