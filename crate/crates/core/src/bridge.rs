//! `tors A` for a quiver presentation, and algebra quotients `A → A/I`
//! seen as lattice quotients of the torsion lattices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::galois::{all_torsion_pairs, BrickRelation, BrickSet, TorsLattice};
use crate::lattice::{is_lattice_quotient, to_dot, CoverEdge};
use crate::rep::{hom_relation, IntervalModule, QuiverPresentation, RelationPath};

#[derive(Clone, Debug)]
pub struct AlgebraTors {
    quiver: QuiverPresentation,
    bricks: Vec<IntervalModule>,
    tors: TorsLattice,
    labels: BTreeMap<CoverEdge, usize>,
}

/// Torsion classes of `mod A` as torsion pairs over the brick Hom-relation.
pub fn tors_of_algebra(q: &QuiverPresentation) -> Result<AlgebraTors> {
    let (bricks, relation) = hom_relation(q)?;
    let tors = all_torsion_pairs(&relation);
    let labels = tors.brick_labels()?;
    Ok(AlgebraTors {
        quiver: q.clone(),
        bricks,
        tors,
        labels,
    })
}

impl AlgebraTors {
    pub fn quiver(&self) -> &QuiverPresentation {
        &self.quiver
    }

    pub fn bricks(&self) -> &[IntervalModule] {
        &self.bricks
    }

    pub fn relation(&self) -> &BrickRelation {
        self.tors.relation()
    }

    pub fn tors(&self) -> &TorsLattice {
        &self.tors
    }

    /// Brick index labelling each cover.
    pub fn labels(&self) -> &BTreeMap<CoverEdge, usize> {
        &self.labels
    }

    pub fn brick_index(&self, m: &IntervalModule) -> Option<usize> {
        self.bricks.iter().position(|b| b == m)
    }

    pub fn label_names(&self) -> BTreeMap<CoverEdge, String> {
        self.labels
            .iter()
            .map(|(&c, &b)| (c, self.relation().label(b).to_string()))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        to_dot(
            self.tors.lattice(),
            Some(&self.tors.node_names()),
            Some(&self.label_names()),
        )
    }
}

#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: AlgebraTors,
    target: AlgebraTors,
    element_map: Vec<usize>,
    brick_map: Vec<Option<usize>>,
}

/// The map `T ↦ T ∩ mod A/I` from `tors A` to `tors A/I`, where `I` is
/// generated by `extra` (each a list of arrow indices).
pub fn quotient_map(q: &QuiverPresentation, extra: &[Vec<usize>]) -> Result<QuotientMap> {
    let paths = extra
        .iter()
        .map(|p| q.path(p))
        .collect::<Result<Vec<RelationPath>>>()?;
    let target_q = q.with_extra_relations(&paths)?;
    QuotientMap::between(tors_of_algebra(q)?, tors_of_algebra(&target_q)?)
}

impl QuotientMap {
    /// Builds the restriction map between two presentations of the same
    /// quiver where the target has at least the source's relations.
    pub fn between(source: AlgebraTors, target: AlgebraTors) -> Result<Self> {
        let (sq, tq) = (source.quiver(), target.quiver());
        if sq.vertices() != tq.vertices()
            || sq.orientation() != tq.orientation()
            || !sq.relations().iter().all(|p| tq.relations().contains(p))
        {
            return Err(Error::InvalidIdeal(
                "target is not a quotient of the source".into(),
            ));
        }
        let mut brick_map = Vec::with_capacity(source.bricks.len());
        for b in &source.bricks {
            brick_map.push(target.brick_index(b));
        }
        for (i, b) in target.bricks.iter().enumerate() {
            if !brick_map.contains(&Some(i)) {
                return Err(Error::InternalInconsistency(format!(
                    "target brick {} is not a source brick",
                    b.dim_vector(tq.vertices())
                )));
            }
            if !b.annihilated_by(tq.relations()) {
                return Err(Error::InternalInconsistency(format!(
                    "target brick {} is not annihilated by the ideal",
                    b.dim_vector(tq.vertices())
                )));
            }
        }
        let mut element_map = Vec::with_capacity(source.tors.len());
        for x in 0..source.tors.len() {
            let restricted: BrickSet = source
                .tors
                .tset(x)
                .iter()
                .filter_map(|b| brick_map[b])
                .collect();
            let y = target.tors.element_of(restricted).ok_or_else(|| {
                Error::InternalInconsistency(format!(
                    "restriction of torsion class {x} is not closed in the quotient"
                ))
            })?;
            element_map.push(y);
        }
        if !is_lattice_quotient(&element_map, source.tors.lattice(), target.tors.lattice()) {
            return Err(Error::InternalInconsistency(
                "restriction is not a lattice quotient".into(),
            ));
        }
        Ok(QuotientMap {
            source,
            target,
            element_map,
            brick_map,
        })
    }

    pub fn source(&self) -> &AlgebraTors {
        &self.source
    }

    pub fn target(&self) -> &AlgebraTors {
        &self.target
    }

    pub fn element_map(&self) -> &[usize] {
        &self.element_map
    }

    /// Source brick index to target brick index, if the brick survives.
    pub fn brick_map(&self) -> &[Option<usize>] {
        &self.brick_map
    }

    fn surviving(&self) -> BrickSet {
        (0..self.brick_map.len())
            .filter(|&b| self.brick_map[b].is_some())
            .collect()
    }

    /// Composite `A → A/I → A/J`.
    pub fn then(&self, next: &QuotientMap) -> Result<QuotientMap> {
        if self.target.quiver() != next.source.quiver() {
            return Err(Error::InvalidIdeal("quotient maps do not compose".into()));
        }
        Ok(QuotientMap {
            source: self.source.clone(),
            target: next.target.clone(),
            element_map: self
                .element_map
                .iter()
                .map(|&y| next.element_map[y])
                .collect(),
            brick_map: self
                .brick_map
                .iter()
                .map(|b| b.and_then(|y| next.brick_map[y]))
                .collect(),
        })
    }

    /// Tests, for `u ≤ v`, the three conditions that should agree:
    /// equal images, no surviving brick in `F(u) ∩ T(v)`, and no surviving
    /// brick among the cover labels of `[u, v]`.
    pub fn fiber_check(&self, u: usize, v: usize) -> Result<FiberCheck> {
        let tl = &self.source.tors;
        if u >= tl.len() || v >= tl.len() {
            return Err(Error::IndexOutOfRange {
                index: u.max(v),
                n: tl.len(),
            });
        }
        if !tl.lattice().leq(u, v) {
            return Err(Error::NotComparable(u, v));
        }
        let keep = self.surviving();
        Ok(FiberCheck {
            same_image: self.element_map[u] == self.element_map[v],
            no_surviving_brick: (tl.fset(u) & tl.tset(v) & keep).is_empty(),
            no_surviving_label: (tl.interval_label_set(u, v)? & keep).is_empty(),
        })
    }

    /// First source cover whose image is a cover with a different brick
    /// label, if any.
    pub fn label_preservation_failure(&self) -> Option<CoverEdge> {
        let n = self.target.quiver().vertices();
        self.source.labels.iter().find_map(|(&c, &b)| {
            let image = CoverEdge::new(self.element_map[c.lower], self.element_map[c.upper]);
            let target_label = self.target.labels.get(&image)?;
            let same = self.source.bricks[b].dim_vector(n)
                == self.target.bricks[*target_label].dim_vector(n);
            (!same).then_some(c)
        })
    }

    pub fn label_preservation_check(&self) -> bool {
        self.label_preservation_failure().is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FiberCheck {
    pub same_image: bool,
    pub no_surviving_brick: bool,
    pub no_surviving_label: bool,
}

impl FiberCheck {
    pub fn consistent(&self) -> bool {
        self.same_image == self.no_surviving_brick && self.same_image == self.no_surviving_label
    }
}
