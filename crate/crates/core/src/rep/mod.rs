//! Module categories of type-A quivers with zero relations.
//!
//! Representations follow arrows in their own direction and a morphism
//! satisfies `f_head · M_α = N_α · f_tail`.

pub mod hom;
pub mod linalg;
pub mod module;
pub mod quiver;

pub use hom::{exists_surjection, hom_dim, hom_space, is_morphism, HomMap, HomSpace};
pub use module::{
    quotients, submodules, submodules_by_linear_algebra, IntervalModule, Representation, VertexSet,
};
pub use quiver::{Orientation, QuiverPresentation, RelationPath};

use crate::error::{Error, Result};
use crate::galois::{BrickRelation, BrickSet};

/// Valid interval modules sorted by `(a, b)`, each checked to have a
/// one-dimensional endomorphism ring.
pub fn indecomposables(q: &QuiverPresentation) -> Result<Vec<IntervalModule>> {
    let n = q.vertices();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            let m = IntervalModule::new(a, b);
            if !m.is_valid_for(q) {
                continue;
            }
            let end = hom_dim(q, &m, &m).dim;
            if end != 1 {
                return Err(Error::UnexpectedHomDim(end));
            }
            out.push(m);
        }
    }
    Ok(out)
}

pub fn is_brick(q: &QuiverPresentation, m: &IntervalModule) -> bool {
    hom_dim(q, m, m).dim == 1
}

pub fn bricks(q: &QuiverPresentation) -> Result<Vec<IntervalModule>> {
    Ok(indecomposables(q)?
        .into_iter()
        .filter(|m| is_brick(q, m))
        .collect())
}

/// The "nonzero morphism" relation on the bricks, labelled by dimension
/// vectors, in the order returned by [`bricks`].
pub fn hom_relation(q: &QuiverPresentation) -> Result<(Vec<IntervalModule>, BrickRelation)> {
    let bs = bricks(q)?;
    let labels: Vec<String> = bs.iter().map(|b| b.dim_vector(q.vertices())).collect();
    let mut arrows = Vec::new();
    for (i, x) in bs.iter().enumerate() {
        for (j, y) in bs.iter().enumerate() {
            if i != j && hom_dim(q, x, y).dim > 0 {
                arrows.push((i, j));
            }
        }
    }
    let rel = BrickRelation::new(labels, &arrows)?;
    Ok((bs, rel))
}

/// Dimension vectors one per line in lexicographic order.
pub fn brick_listing(q: &QuiverPresentation) -> Result<String> {
    let mut names: Vec<String> = bricks(q)?
        .iter()
        .map(|b| b.dim_vector(q.vertices()))
        .collect();
    names.sort();
    Ok(names.iter().map(|s| format!("{s}\n")).collect())
}

/// Whether every interval summand of the submodule `s` is in `t`, where
/// `t` holds indices into `bricks`.
fn summands_in(s: VertexSet, bricks: &[IntervalModule], t: BrickSet) -> bool {
    s.summands().iter().all(|m| {
        bricks
            .iter()
            .position(|b| b == m)
            .is_some_and(|i| t.contains(i))
    })
}

/// The largest submodule of `x` whose summands all lie in the torsion class
/// `t` (indices into `bricks`).
pub fn torsion_subobject(
    q: &QuiverPresentation,
    bricks: &[IntervalModule],
    t: BrickSet,
    x: &IntervalModule,
) -> VertexSet {
    submodules(q, x)
        .into_iter()
        .filter(|&s| summands_in(s, bricks, t))
        .fold(VertexSet::EMPTY, VertexSet::union)
}

/// Outcome of checking the canonical sequence `0 → tX → X → X/tX → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionSequenceCheck {
    pub sub: VertexSet,
    pub is_submodule: bool,
    pub sub_in_class: bool,
    pub quotient_in_perp: bool,
    /// Submodules `X'` with summands in `t` and `X/X'` in the perp.
    pub candidates: Vec<VertexSet>,
}

impl TorsionSequenceCheck {
    pub fn holds(&self) -> bool {
        self.is_submodule
            && self.sub_in_class
            && self.quotient_in_perp
            && self.candidates == [self.sub]
    }
}

pub fn torsion_sequence_check(
    q: &QuiverPresentation,
    bricks: &[IntervalModule],
    rel: &BrickRelation,
    t: BrickSet,
    x: &IntervalModule,
) -> TorsionSequenceCheck {
    let f = rel.perp_right(t);
    let subs = submodules(q, x);
    let support = x.support();
    let sub = torsion_subobject(q, bricks, t, x);
    let candidates: Vec<VertexSet> = subs
        .iter()
        .copied()
        .filter(|&s| summands_in(s, bricks, t) && summands_in(support.minus(s), bricks, f))
        .collect();
    TorsionSequenceCheck {
        sub,
        is_submodule: subs.contains(&sub),
        sub_in_class: summands_in(sub, bricks, t),
        quotient_in_perp: summands_in(support.minus(sub), bricks, f),
        candidates,
    }
}

pub fn annihilated_by(m: &IntervalModule, extra: &[RelationPath]) -> bool {
    m.annihilated_by(extra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::all_torsion_pairs;
    use Orientation::*;

    fn names(q: &QuiverPresentation, ms: &[IntervalModule]) -> Vec<String> {
        ms.iter().map(|m| m.dim_vector(q.vertices())).collect()
    }

    #[test]
    fn a2_indecomposables_and_relation() {
        let q = QuiverPresentation::linear(2);
        let ind = indecomposables(&q).unwrap();
        assert_eq!(names(&q, &ind), ["[10]", "[11]", "[01]"]);
        let (bs, rel) = hom_relation(&q).unwrap();
        assert_eq!(bs, ind);
        let entries: usize = (0..3)
            .flat_map(|x| (0..3).map(move |y| (x, y)))
            .filter(|&(x, y)| rel.arrow(x, y))
            .count();
        assert_eq!(entries, 5);
        assert!(rel.arrow(0, 1) && rel.arrow(1, 2) && !rel.arrow(0, 2));
        assert_eq!(brick_listing(&q).unwrap(), "[01]\n[10]\n[11]\n");
    }

    #[test]
    fn a2_quotient_by_the_arrow() {
        let q = QuiverPresentation::new(2, vec![Left], &[vec![0]]).unwrap();
        let (bs, rel) = hom_relation(&q).unwrap();
        assert_eq!(names(&q, &bs), ["[10]", "[01]"]);
        assert_eq!(rel.off_diagonal_arrows().len(), 0);
    }

    #[test]
    fn linear_a3() {
        let q = QuiverPresentation::linear(3);
        assert_eq!(indecomposables(&q).unwrap().len(), 6);
        let (bs, rel) = hom_relation(&q).unwrap();
        assert_eq!(bs.len(), 6);
        assert!(rel.is_factorizable());
        assert_eq!(all_torsion_pairs(&rel).len(), 14);
    }

    #[test]
    fn composition_lands_in_the_hom_space() {
        for o in [vec![Left, Left], vec![Left, Right], vec![Right, Left]] {
            let q = QuiverPresentation::hereditary(3, o).unwrap();
            let ms = indecomposables(&q).unwrap();
            for x in &ms {
                for y in &ms {
                    for z in &ms {
                        let f = hom_dim(&q, x, y);
                        let g = hom_dim(&q, y, z);
                        let h = hom_dim(&q, x, z);
                        for fb in &f.basis {
                            for gb in &g.basis {
                                assert!(h.contains(&gb.after(fb)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn torsion_subobjects_a2() {
        let q = QuiverPresentation::linear(2);
        let (bs, rel) = hom_relation(&q).unwrap();
        let p2 = IntervalModule::new(1, 2);
        let t = BrickSet::singleton(0);
        let sub = torsion_subobject(&q, &bs, t, &p2);
        assert_eq!(sub, VertexSet::interval(1, 1));
        assert!(torsion_sequence_check(&q, &bs, &rel, t, &p2).holds());
        assert_eq!(
            torsion_subobject(&q, &bs, BrickSet::EMPTY, &p2),
            VertexSet::EMPTY
        );
        assert_eq!(
            torsion_subobject(&q, &bs, rel.universe(), &p2),
            p2.support()
        );
    }

    #[test]
    fn torsion_sequences_hold_everywhere_on_a3() {
        for o in [vec![Left, Left], vec![Right, Left]] {
            let q = QuiverPresentation::hereditary(3, o).unwrap();
            let (bs, rel) = hom_relation(&q).unwrap();
            let tl = all_torsion_pairs(&rel);
            for i in 0..tl.len() {
                for x in &bs {
                    assert!(torsion_sequence_check(&q, &bs, &rel, tl.tset(i), x).holds());
                }
            }
        }
    }

    #[test]
    fn annihilators() {
        let q = QuiverPresentation::linear(2);
        let arrow = q.path(&[0]).unwrap();
        assert!(!annihilated_by(&IntervalModule::new(1, 2), &[arrow]));
        assert!(annihilated_by(&IntervalModule::new(1, 1), &[arrow]));
        assert!(annihilated_by(&IntervalModule::new(1, 2), &[]));
    }
}
