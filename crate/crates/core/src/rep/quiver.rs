use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Direction of the arrow on the edge between vertices `i` and `i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `i + 1 → i`, as in `1 ← 2`.
    Left,
    /// `i → i + 1`.
    Right,
}

/// A path of consecutive arrows `first..=last` (0-based arrow indices, all
/// pointing the same way). Arrow `k` joins vertices `k + 1` and `k + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RelationPath {
    first: usize,
    last: usize,
}

impl RelationPath {
    pub fn arrows(&self) -> std::ops::RangeInclusive<usize> {
        self.first..=self.last
    }

    pub fn len(&self) -> usize {
        self.last - self.first + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based vertices `(lo, hi)` touched by the path.
    pub fn vertex_span(&self) -> (usize, usize) {
        (self.first + 1, self.last + 2)
    }

    /// Whether the whole path lies inside the vertex interval `[a, b]`.
    pub fn inside(&self, a: usize, b: usize) -> bool {
        let (lo, hi) = self.vertex_span();
        a <= lo && hi <= b
    }
}

impl fmt::Display for RelationPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self.arrows().map(|k| k.to_string()).collect();
        write!(f, "[{}]", arrows.join(","))
    }
}

/// A type-A quiver `1 - 2 - ... - n` with a chosen orientation of each edge
/// and a set of zero relations given by paths.
///
/// Supported algebras: any orientation without relations, or a linear
/// orientation (all arrows the same way) with path relations. Every
/// indecomposable module of such an algebra is an interval module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverPresentation {
    n: usize,
    orientation: Vec<Orientation>,
    relations: Vec<RelationPath>,
}

impl QuiverPresentation {
    pub fn new(n: usize, orientation: Vec<Orientation>, relations: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidQuiver(
                "a quiver needs at least one vertex".into(),
            ));
        }
        if n > 64 {
            return Err(Error::InvalidQuiver(format!(
                "{n} vertices exceeds the limit of 64"
            )));
        }
        if orientation.len() != n - 1 {
            return Err(Error::InvalidQuiver(format!(
                "{n} vertices need {} edge orientations, got {}",
                n - 1,
                orientation.len()
            )));
        }
        let mut q = QuiverPresentation {
            n,
            orientation,
            relations: Vec::new(),
        };
        let mut paths = Vec::with_capacity(relations.len());
        for r in relations {
            paths.push(q.path(r).map_err(|e| match e {
                Error::InvalidIdeal(msg) => Error::InvalidQuiver(msg),
                other => other,
            })?);
        }
        q.add_relations(&paths).map_err(|e| match e {
            Error::InvalidIdeal(msg) => Error::InvalidQuiver(msg),
            other => other,
        })?;
        Ok(q)
    }

    pub fn hereditary(n: usize, orientation: Vec<Orientation>) -> Result<Self> {
        Self::new(n, orientation, &[])
    }

    /// `1 ← 2 ← … ← n`.
    pub fn linear(n: usize) -> Self {
        Self::new(n, vec![Orientation::Left; n.saturating_sub(1)], &[]).expect("linear A_n")
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn orientation(&self) -> &[Orientation] {
        &self.orientation
    }

    pub fn relations(&self) -> &[RelationPath] {
        &self.relations
    }

    pub fn arrow_count(&self) -> usize {
        self.n - 1
    }

    /// `(source, target)` of arrow `k`, 1-based vertices.
    pub fn arrow(&self, k: usize) -> (usize, usize) {
        match self.orientation[k] {
            Orientation::Left => (k + 2, k + 1),
            Orientation::Right => (k + 1, k + 2),
        }
    }

    pub fn is_linear(&self) -> bool {
        self.orientation.windows(2).all(|w| w[0] == w[1])
    }

    /// Validates a list of arrow indices as one composable path.
    pub fn path(&self, arrows: &[usize]) -> Result<RelationPath> {
        if arrows.is_empty() {
            return Err(Error::InvalidIdeal("empty path".into()));
        }
        let mut sorted = arrows.to_vec();
        sorted.sort_unstable();
        if let Some(&k) = sorted.iter().find(|&&k| k >= self.arrow_count()) {
            return Err(Error::InvalidIdeal(format!(
                "arrow {k} out of range for {} arrows",
                self.arrow_count()
            )));
        }
        if sorted.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(Error::InvalidIdeal(format!(
                "arrows {arrows:?} are not consecutive"
            )));
        }
        let first = sorted[0];
        let last = *sorted.last().unwrap();
        if self.orientation[first..=last]
            .windows(2)
            .any(|w| w[0] != w[1])
        {
            return Err(Error::InvalidIdeal(format!(
                "arrows {arrows:?} do not compose: orientation changes"
            )));
        }
        Ok(RelationPath { first, last })
    }

    fn add_relations(&mut self, paths: &[RelationPath]) -> Result<()> {
        let mut relations = self.relations.clone();
        for &p in paths {
            if relations.contains(&p) {
                return Err(Error::InvalidIdeal(format!("duplicate relation path {p}")));
            }
            relations.push(p);
        }
        if !relations.is_empty() && !self.is_linear() {
            return Err(Error::UnsupportedAlgebra(
                "relations are only supported on a linearly oriented quiver".into(),
            ));
        }
        relations.sort();
        self.relations = relations;
        Ok(())
    }

    /// Same quiver with more zero relations.
    pub fn with_extra_relations(&self, extra: &[RelationPath]) -> Result<Self> {
        let mut q = self.clone();
        q.add_relations(extra)?;
        Ok(q)
    }
}
