use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::{BrickRelation, BrickSet};
use crate::error::{Error, Result};
use crate::lattice::{CoverEdge, FiniteLattice, FinitePoset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorsionPair {
    pub tset: BrickSet,
    pub fset: BrickSet,
}

/// The four torsion classes attached to one brick `B`:
/// `T(B)_* ⋖ T(B)` on one side, `⊥F(B) ⋖ (⊥F(B))^*` on the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FourClasses {
    pub top: usize,
    pub ji_side: usize,
    pub mi_side: usize,
    pub bottom: usize,
}

/// `tors(Br, →)`: every torsion pair of a relation, ordered by inclusion of
/// the torsion side.
///
/// Pairs are sorted by `(|T|, T as a bit mask)`, so element indices are
/// deterministic: the bottom `(∅, Br)` is element 0 and the top `(Br, ∅)`
/// is the last element.
#[derive(Clone, Debug)]
pub struct TorsLattice {
    relation: BrickRelation,
    pairs: Vec<TorsionPair>,
    lattice: FiniteLattice,
    index: HashMap<BrickSet, usize>,
    factorizable: bool,
}

/// Closed torsion sides are the intersections of the principal sets
/// `^⊥{b}` (together with `Br` itself), generated without a subset scan.
pub fn all_torsion_pairs(relation: &BrickRelation) -> TorsLattice {
    let mut closed: BTreeSet<BrickSet> = BTreeSet::new();
    closed.insert(relation.universe());
    for b in 0..relation.len() {
        let principal = relation.perp_left(BrickSet::singleton(b));
        let fresh: Vec<BrickSet> = closed.iter().map(|&c| c & principal).collect();
        closed.extend(fresh);
    }
    TorsLattice::from_closed_sets(relation.clone(), closed)
        .expect("intersections of perps are closed and form a lattice")
}

impl TorsLattice {
    /// Builds the lattice from a collection of torsion sides, each of which
    /// must be closed. Duplicates are ignored.
    pub fn from_closed_sets<I>(relation: BrickRelation, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = BrickSet>,
    {
        let mut tsets: Vec<BrickSet> = sets.into_iter().collect();
        tsets.sort_by_key(|s| (s.len(), s.bits()));
        tsets.dedup();
        if let Some(bad) = tsets.iter().find(|&&t| !relation.is_closed(t)) {
            return Err(Error::InvalidRelation(format!(
                "{bad:?} is not a closed torsion side"
            )));
        }
        let pairs: Vec<TorsionPair> = tsets
            .iter()
            .map(|&tset| TorsionPair {
                tset,
                fset: relation.perp_right(tset),
            })
            .collect();
        let n = pairs.len();
        let mut leq = vec![false; n * n];
        for (i, p) in pairs.iter().enumerate() {
            for (j, q) in pairs.iter().enumerate() {
                leq[i * n + j] = p.tset.is_subset(q.tset);
            }
        }
        let lattice = FiniteLattice::try_from_poset(FinitePoset::from_matrix(n, leq)?)?;
        let index = tsets.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let factorizable = relation.is_factorizable();
        Ok(TorsLattice {
            relation,
            pairs,
            lattice,
            index,
            factorizable,
        })
    }

    pub fn relation(&self) -> &BrickRelation {
        &self.relation
    }

    pub fn pairs(&self) -> &[TorsionPair] {
        &self.pairs
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_factorizable(&self) -> bool {
        self.factorizable
    }

    pub fn tset(&self, x: usize) -> BrickSet {
        self.pairs[x].tset
    }

    pub fn fset(&self, x: usize) -> BrickSet {
        self.pairs[x].fset
    }

    /// Element whose torsion side is exactly `t`.
    pub fn element_of(&self, t: BrickSet) -> Option<usize> {
        self.index.get(&t).copied()
    }

    fn element_of_closed(&self, t: BrickSet) -> usize {
        self.index[&t]
    }

    fn check_brick(&self, b: usize) -> Result<()> {
        if b < self.relation.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: b,
                n: self.relation.len(),
            })
        }
    }

    fn check_comparable(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.len() {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    n: self.len(),
                });
            }
        }
        if self.lattice.leq(u, v) {
            Ok(())
        } else {
            Err(Error::NotComparable(u, v))
        }
    }

    /// The torsion pair generated by one brick, `T(B)`.
    pub fn ji_of_brick(&self, b: usize) -> Result<usize> {
        self.check_brick(b)?;
        Ok(self.element_of_closed(self.relation.tors_closure(BrickSet::singleton(b))))
    }

    /// The torsion pair `(^⊥{B}, (^⊥{B})^⊥)`.
    pub fn mi_of_brick(&self, b: usize) -> Result<usize> {
        self.check_brick(b)?;
        Ok(self.element_of_closed(self.relation.perp_left(BrickSet::singleton(b))))
    }

    /// The unique brick in `T(upper) ∩ F(lower)`.
    ///
    /// For factorizable relations the result is also checked against the
    /// lattice-theoretic label γ of the cover.
    pub fn cover_brick_label(&self, c: CoverEdge) -> Result<usize> {
        if !self.lattice.is_cover(c) {
            return Err(Error::NotACover(c.lower, c.upper));
        }
        let candidates = self.tset(c.upper) & self.fset(c.lower);
        let b = match candidates.len() {
            0 => {
                return Err(Error::LabelMissing {
                    lower: c.lower,
                    upper: c.upper,
                })
            }
            1 => candidates.iter().next().unwrap(),
            count => {
                return Err(Error::LabelNotUnique {
                    lower: c.lower,
                    upper: c.upper,
                    count,
                })
            }
        };
        if self.factorizable {
            let gamma = self.lattice.gamma_label(c)?;
            let expected = self.ji_of_brick(b)?;
            if gamma != expected {
                return Err(Error::InternalInconsistency(format!(
                    "cover {} -> {}: brick label {b} but gamma label {gamma}",
                    c.lower, c.upper
                )));
            }
        }
        Ok(b)
    }

    /// Brick label of every cover.
    pub fn brick_labels(&self) -> Result<BTreeMap<CoverEdge, usize>> {
        self.lattice
            .covers()
            .into_iter()
            .map(|c| Ok((c, self.cover_brick_label(c)?)))
            .collect()
    }

    pub fn four_class_diagram(&self, b: usize) -> Result<FourClasses> {
        let ji_side = self.ji_of_brick(b)?;
        let mi_side = self.mi_of_brick(b)?;
        Ok(FourClasses {
            top: self.lattice.m_star(mi_side)?,
            ji_side,
            mi_side,
            bottom: self.lattice.j_star(ji_side)?,
        })
    }

    /// Bricks labelling covers inside `[u, v]`.
    pub fn interval_label_set(&self, u: usize, v: usize) -> Result<BrickSet> {
        self.check_comparable(u, v)?;
        let l = &self.lattice;
        let mut labels = BrickSet::EMPTY;
        for c in l.covers() {
            if l.leq(u, c.lower) && l.leq(c.upper, v) {
                labels.insert(self.cover_brick_label(c)?);
            }
        }
        Ok(labels)
    }

    /// Whether `B ↦ T(B) ∨ u` is a bijection from `F(u) ∩ T(v)` onto the
    /// join irreducibles of `[u, v]`.
    pub fn interval_ji_check(&self, u: usize, v: usize) -> Result<bool> {
        self.check_comparable(u, v)?;
        let (sub, embed) = self.lattice.interval_sublattice(u, v)?;
        let targets: BTreeSet<usize> = sub
            .join_irreducibles()
            .into_iter()
            .map(|i| embed[i])
            .collect();
        let bricks = self.fset(u) & self.tset(v);
        let mut images = BTreeSet::new();
        for b in bricks.iter() {
            let y = self.lattice.join(self.ji_of_brick(b)?, u);
            if !targets.contains(&y) || !images.insert(y) {
                return Ok(false);
            }
        }
        Ok(images == targets)
    }

    /// Whether `u < v` exactly when `F(u) ∩ T(v)` is nonempty.
    pub fn lemma_three_check(&self, u: usize, v: usize) -> Result<bool> {
        self.check_comparable(u, v)?;
        let strict = u != v;
        Ok(strict == !(self.fset(u) & self.tset(v)).is_empty())
    }

    /// Whether ordering by inclusion of torsion-free sides gives exactly
    /// the reverse of the lattice order.
    pub fn tf_dual_check(&self) -> bool {
        let n = self.len();
        (0..n)
            .all(|x| (0..n).all(|y| self.fset(x).is_subset(self.fset(y)) == self.lattice.leq(y, x)))
    }

    /// Display name of each element: `0` for the bottom, otherwise the
    /// brick labels of its torsion side in brick order.
    pub fn node_names(&self) -> Vec<String> {
        self.pairs
            .iter()
            .map(|p| {
                if p.tset.is_empty() {
                    "0".to_string()
                } else {
                    let inner: Vec<&str> = p.tset.iter().map(|b| self.relation.label(b)).collect();
                    format!("<{}>", inner.join(","))
                }
            })
            .collect()
    }
}
