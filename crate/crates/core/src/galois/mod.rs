//! Torsion pairs over an abstract reflexive relation on a finite set of
//! "bricks".
//!
//! For `C ⊆ Br`, `C^⊥` is the set of `Y` receiving no arrow from `C` and
//! `^⊥C` the set of `X` sending no arrow into `C`. A torsion pair is a pair
//! `(T, F)` with `T^⊥ = F` and `^⊥F = T`; ordered by inclusion of `T` they
//! form the lattice `tors(Br, →)`. With no further conditions on `→` every
//! finite lattice arises this way; factorizable relations give exactly the
//! semidistributive ones.

mod bitset;
mod tors;

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use bitset::BrickSet;
pub use tors::{all_torsion_pairs, FourClasses, TorsLattice, TorsionPair};

/// Largest supported brick set: subsets are single machine words.
pub const MAX_BRICKS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrickRelation {
    labels: Vec<String>,
    // out[x] = {y | x -> y}
    out: Vec<BrickSet>,
    // inn[y] = {x | x -> y}
    inn: Vec<BrickSet>,
}

/// Serialized as the relation file format: labels plus off-diagonal arrows.
impl Serialize for BrickRelation {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("BrickRelation", 2)?;
        st.serialize_field("labels", &self.labels)?;
        st.serialize_field("arrows", &self.off_diagonal_arrows())?;
        st.end()
    }
}

/// How `X ↪ Y` is read off the relation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MonoReading {
    /// `X ↪ Y` iff every `Z → X` also has `Z → Y`.
    #[default]
    Dual,
    /// The same condition as `↠`: every `Y → Z` also has `X → Z`.
    Literal,
}

/// First reason a relation fails to be factorizable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FactorizationFailure {
    /// `x → z` with no `y` such that `x ↠ y ↪ z`.
    Unfactored { x: usize, z: usize },
    /// `x ↠ y ↠ x` with `x ≠ y`.
    EpiCycle { x: usize, y: usize },
    /// `x ↪ y ↠ x` with `x ≠ y`.
    MonoEpiCycle { x: usize, y: usize },
    /// `x ↪ y ↪ x` with `x ≠ y`.
    MonoCycle { x: usize, y: usize },
}

impl fmt::Display for FactorizationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FactorizationFailure::Unfactored { x, z } => {
                write!(f, "{x} -> {z} does not factor as epi then mono")
            }
            FactorizationFailure::EpiCycle { x, y } => write!(f, "{x} ->> {y} ->> {x}"),
            FactorizationFailure::MonoEpiCycle { x, y } => write!(f, "{x} >-> {y} ->> {x}"),
            FactorizationFailure::MonoCycle { x, y } => write!(f, "{x} >-> {y} >-> {x}"),
        }
    }
}

impl BrickRelation {
    /// Relation on `labels` with the given off-diagonal arrows; the diagonal
    /// is always present.
    pub fn new(labels: Vec<String>, arrows: &[(usize, usize)]) -> Result<Self> {
        let m = check_labels(&labels)?;
        let mut out: Vec<BrickSet> = (0..m).map(BrickSet::singleton).collect();
        let mut seen = HashSet::new();
        for &(x, y) in arrows {
            if x >= m || y >= m {
                return Err(Error::InvalidRelation(format!(
                    "arrow [{x}, {y}] out of range for {m} bricks"
                )));
            }
            if x == y {
                return Err(Error::InvalidRelation(format!(
                    "arrow [{x}, {y}] duplicates the implicit diagonal"
                )));
            }
            if !seen.insert((x, y)) {
                return Err(Error::InvalidRelation(format!(
                    "duplicate arrow [{x}, {y}]"
                )));
            }
            out[x].insert(y);
        }
        Ok(Self::from_rows(labels, out))
    }

    /// Relation from out-neighbourhoods; each row must contain its own index.
    pub fn from_out_sets(labels: Vec<String>, out: Vec<BrickSet>) -> Result<Self> {
        let m = check_labels(&labels)?;
        if out.len() != m {
            return Err(Error::InvalidRelation(format!(
                "{} rows for {m} bricks",
                out.len()
            )));
        }
        let universe = BrickSet::full(m);
        for (x, row) in out.iter().enumerate() {
            if !row.contains(x) {
                return Err(Error::InvalidRelation(format!("not reflexive at {x}")));
            }
            if !row.is_subset(universe) {
                return Err(Error::InvalidRelation(format!("row {x} out of range")));
            }
        }
        Ok(Self::from_rows(labels, out))
    }

    pub fn from_matrix(labels: Vec<String>, matrix: &[Vec<bool>]) -> Result<Self> {
        let out = matrix
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(y, _)| y)
                    .collect::<BrickSet>()
            })
            .collect();
        Self::from_out_sets(labels, out)
    }

    fn from_rows(labels: Vec<String>, out: Vec<BrickSet>) -> Self {
        let m = labels.len();
        let mut inn = vec![BrickSet::EMPTY; m];
        for (x, row) in out.iter().enumerate() {
            for y in row.iter() {
                inn[y].insert(x);
            }
        }
        BrickRelation { labels, out, inn }
    }

    pub fn diagonal(m: usize) -> Self {
        Self::new(index_labels(m), &[]).expect("diagonal relation")
    }

    pub fn full(m: usize) -> Self {
        let all = BrickSet::full(m);
        Self::from_out_sets(index_labels(m), vec![all; m]).expect("full relation")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, b: usize) -> &str {
        &self.labels[b]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn universe(&self) -> BrickSet {
        BrickSet::full(self.len())
    }

    #[inline]
    pub fn arrow(&self, x: usize, y: usize) -> bool {
        self.out[x].contains(y)
    }

    pub fn out_set(&self, x: usize) -> BrickSet {
        self.out[x]
    }

    pub fn in_set(&self, y: usize) -> BrickSet {
        self.inn[y]
    }

    /// Arrows other than the diagonal, sorted.
    pub fn off_diagonal_arrows(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| {
                self.out[x]
                    .iter()
                    .filter(move |&y| y != x)
                    .map(move |y| (x, y))
            })
            .collect()
    }

    /// `C^⊥ = {Y | no X ∈ C has X → Y}`.
    pub fn perp_right(&self, c: BrickSet) -> BrickSet {
        let hit = c.iter().fold(BrickSet::EMPTY, |acc, x| acc | self.out[x]);
        self.universe().minus(hit)
    }

    /// `^⊥C = {X | X → Y for no Y ∈ C}`.
    pub fn perp_left(&self, c: BrickSet) -> BrickSet {
        let hit = c.iter().fold(BrickSet::EMPTY, |acc, y| acc | self.inn[y]);
        self.universe().minus(hit)
    }

    /// Smallest closed torsion side containing `c`: `^⊥(c^⊥)`.
    pub fn tors_closure(&self, c: BrickSet) -> BrickSet {
        self.perp_left(self.perp_right(c))
    }

    pub fn is_closed(&self, t: BrickSet) -> bool {
        self.tors_closure(t) == t
    }

    /// Row `x` holds `{y | x ↠ y}`: every target of `y` is a target of `x`.
    pub fn derived_epi(&self) -> Vec<BrickSet> {
        let m = self.len();
        (0..m)
            .map(|x| {
                (0..m)
                    .filter(|&y| self.out[y].is_subset(self.out[x]))
                    .collect()
            })
            .collect()
    }

    /// Row `x` holds `{y | x ↪ y}` under the dual reading: every source of
    /// `x` is a source of `y`.
    pub fn derived_mono(&self) -> Vec<BrickSet> {
        self.derived_mono_with(MonoReading::Dual)
    }

    pub fn derived_mono_with(&self, reading: MonoReading) -> Vec<BrickSet> {
        match reading {
            MonoReading::Literal => self.derived_epi(),
            MonoReading::Dual => {
                let m = self.len();
                (0..m)
                    .map(|x| {
                        (0..m)
                            .filter(|&y| self.inn[x].is_subset(self.inn[y]))
                            .collect()
                    })
                    .collect()
            }
        }
    }

    pub fn is_factorizable(&self) -> bool {
        self.factorization_failure().is_none()
    }

    pub fn factorization_failure(&self) -> Option<FactorizationFailure> {
        self.factorization_failure_with(MonoReading::Dual)
    }

    /// First violated factorizability condition, scanning the factoring
    /// condition over `(x, z)` and then the cycle conditions over `(x, y)`.
    pub fn factorization_failure_with(&self, reading: MonoReading) -> Option<FactorizationFailure> {
        let m = self.len();
        let epi = self.derived_epi();
        let mono = self.derived_mono_with(reading);
        // mono_into[z] = {y | y ↪ z}
        let mut mono_into = vec![BrickSet::EMPTY; m];
        for (y, row) in mono.iter().enumerate() {
            for z in row.iter() {
                mono_into[z].insert(y);
            }
        }
        for (x, e) in epi.iter().enumerate() {
            for z in self.out[x].iter() {
                if (*e & mono_into[z]).is_empty() {
                    return Some(FactorizationFailure::Unfactored { x, z });
                }
            }
        }
        for x in 0..m {
            for y in 0..m {
                if x == y {
                    continue;
                }
                if epi[x].contains(y) && epi[y].contains(x) {
                    return Some(FactorizationFailure::EpiCycle { x, y });
                }
                if mono[x].contains(y) && epi[y].contains(x) {
                    return Some(FactorizationFailure::MonoEpiCycle { x, y });
                }
                if mono[x].contains(y) && mono[y].contains(x) {
                    return Some(FactorizationFailure::MonoCycle { x, y });
                }
            }
        }
        None
    }

    /// The relation induced on `keep`, relabelled `0..keep.len()` in the
    /// order given.
    pub fn restrict(&self, keep: &[usize]) -> Result<Self> {
        let labels = keep.iter().map(|&b| self.labels[b].clone()).collect();
        let out = keep
            .iter()
            .map(|&x| {
                keep.iter()
                    .enumerate()
                    .filter(|(_, &y)| self.arrow(x, y))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Self::from_out_sets(labels, out)
    }
}

/// Labels `"0"`, `"1"`, ... for generated relations.
pub fn index_labels(m: usize) -> Vec<String> {
    (0..m).map(|i| i.to_string()).collect()
}

fn check_labels(labels: &[String]) -> Result<usize> {
    let m = labels.len();
    if m > MAX_BRICKS {
        return Err(Error::InvalidRelation(format!(
            "{m} bricks exceeds the limit of {MAX_BRICKS}"
        )));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::InvalidRelation(format!("duplicate label {l:?}")));
        }
    }
    Ok(m)
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn set(items: &[usize]) -> BrickSet {
        items.iter().copied().collect()
    }

    #[test]
    fn construction_errors() {
        let labels = || vec!["a".to_string(), "b".to_string()];
        assert!(BrickRelation::new(labels(), &[(0, 2)]).is_err());
        assert!(BrickRelation::new(labels(), &[(0, 1), (0, 1)]).is_err());
        assert!(BrickRelation::new(labels(), &[(1, 1)]).is_err());
        assert!(BrickRelation::new(vec!["a".into(), "a".into()], &[]).is_err());
        assert!(
            BrickRelation::from_matrix(labels(), &[vec![true, true], vec![false, false]]).is_err()
        );
        let too_many: Vec<String> = (0..65).map(|i| i.to_string()).collect();
        assert!(BrickRelation::new(too_many, &[]).is_err());
    }

    #[test]
    fn perps() {
        let r = a2();
        assert_eq!(r.perp_right(BrickSet::EMPTY), r.universe());
        assert_eq!(r.perp_right(set(&[P2])), set(&[S1]));
        assert_eq!(r.perp_left(set(&[S1])), set(&[P2, S2]));
        assert_eq!(r.tors_closure(BrickSet::EMPTY), BrickSet::EMPTY);
        assert_eq!(r.tors_closure(set(&[P2])), set(&[P2, S2]));
        assert_eq!(r.tors_closure(set(&[S1])), set(&[S1]));
    }

    #[test]
    fn derived_relations() {
        let full = BrickRelation::full(3);
        assert!(full.derived_epi().iter().all(|row| *row == full.universe()));
        assert!(full
            .derived_mono()
            .iter()
            .all(|row| *row == full.universe()));

        let r = a2();
        assert!(r.derived_epi()[P2].contains(S2));
        assert!(r.derived_mono()[S1].contains(P2));
        assert!(!r.derived_epi()[S1].contains(P2));
    }

    #[test]
    fn factorizability() {
        assert!(BrickRelation::diagonal(4).is_factorizable());
        assert!(a2().is_factorizable());
        assert_eq!(
            BrickRelation::full(2).factorization_failure(),
            Some(FactorizationFailure::EpiCycle { x: 0, y: 1 })
        );
        // literal reading breaks on the A2 relation: [10] -> [11] has no
        // factorisation through two "epis"
        assert_eq!(
            a2().factorization_failure_with(MonoReading::Literal),
            Some(FactorizationFailure::Unfactored { x: S1, z: P2 })
        );
    }

    #[test]
    fn two_point_relations() {
        let labels = || index_labels(2);
        let one_way = BrickRelation::new(labels(), &[(0, 1)]).unwrap();
        let other_way = BrickRelation::new(labels(), &[(1, 0)]).unwrap();
        assert!(one_way.is_factorizable());
        assert!(other_way.is_factorizable());
    }

    #[test]
    fn restriction() {
        let r = a2().restrict(&[S1, S2]).unwrap();
        assert_eq!(r.labels(), &["[10]".to_string(), "[01]".to_string()]);
        assert!(r.off_diagonal_arrows().is_empty());
    }
}
