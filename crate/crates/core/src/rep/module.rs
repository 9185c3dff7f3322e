use std::fmt;

use super::linalg::{rank, IntMatrix};
use super::quiver::{QuiverPresentation, RelationPath};

/// The indecomposable supported on vertices `a..=b` (1-based) with
/// one-dimensional spaces and identity maps inside the support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalModule {
    a: usize,
    b: usize,
}

impl IntervalModule {
    pub const fn new(a: usize, b: usize) -> Self {
        assert!(1 <= a && a <= b, "invalid interval");
        IntervalModule { a, b }
    }

    pub fn start(&self) -> usize {
        self.a
    }

    pub fn end(&self) -> usize {
        self.b
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a <= v && v <= self.b
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::interval(self.a, self.b)
    }

    /// Whether this is a module over the presented algebra: no relation
    /// path lies inside the support.
    pub fn is_valid_for(&self, q: &QuiverPresentation) -> bool {
        self.b <= q.vertices() && !q.relations().iter().any(|p| p.inside(self.a, self.b))
    }

    /// Dimension vector such as `[0110]`.
    pub fn dim_vector(&self, n: usize) -> String {
        let digits: String = (1..=n)
            .map(|v| if self.contains(v) { '1' } else { '0' })
            .collect();
        format!("[{digits}]")
    }

    pub fn representation(&self, q: &QuiverPresentation) -> Representation {
        let dims: Vec<usize> = (1..=q.vertices())
            .map(|v| usize::from(self.contains(v)))
            .collect();
        let maps = (0..q.arrow_count())
            .map(|k| {
                let (s, t) = q.arrow(k);
                if self.contains(s) && self.contains(t) {
                    IntMatrix::identity(1)
                } else {
                    IntMatrix::zeros(dims[t - 1], dims[s - 1])
                }
            })
            .collect();
        Representation { dims, maps }
    }

    /// Whether `path` acts as zero on this module.
    pub fn annihilated_by(&self, paths: &[RelationPath]) -> bool {
        !paths.iter().any(|p| p.inside(self.a, self.b))
    }
}

/// A representation: one vector space dimension per vertex and one integer
/// matrix per arrow (rows index the target, columns the source).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub maps: Vec<IntMatrix>,
}

/// A set of 1-based vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn interval(a: usize, b: usize) -> Self {
        (a..=b).collect()
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << (v - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |i| self.0 >> i & 1 == 1).map(|i| i + 1)
    }

    /// Maximal runs of consecutive vertices. For a vertex subset of an
    /// interval module these are its interval summands.
    pub fn summands(self) -> Vec<IntervalModule> {
        let mut out = Vec::new();
        let mut run: Option<(usize, usize)> = None;
        for v in self.iter() {
            run = match run {
                Some((a, b)) if b + 1 == v => Some((a, v)),
                Some((a, b)) => {
                    out.push(IntervalModule::new(a, b));
                    Some((v, v))
                }
                None => Some((v, v)),
            };
        }
        if let Some((a, b)) = run {
            out.push(IntervalModule::new(a, b));
        }
        out
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

fn subsets_of(support: VertexSet) -> impl Iterator<Item = VertexSet> {
    let verts: Vec<usize> = support.iter().collect();
    (0u64..1 << verts.len()).map(move |mask| {
        verts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

fn sort_sets(sets: &mut [VertexSet]) {
    sets.sort_by_key(|s| (s.len(), s.0));
}

/// Vertex sets of the subrepresentations of `m`: subsets of the support
/// closed under following arrows forward inside the support.
pub fn submodules(q: &QuiverPresentation, m: &IntervalModule) -> Vec<VertexSet> {
    let support = m.support();
    let internal: Vec<(usize, usize)> = (0..q.arrow_count())
        .map(|k| q.arrow(k))
        .filter(|&(s, t)| m.contains(s) && m.contains(t))
        .collect();
    let mut out: Vec<VertexSet> = subsets_of(support)
        .filter(|s| {
            internal
                .iter()
                .all(|&(src, tgt)| !s.contains(src) || s.contains(tgt))
        })
        .collect();
    sort_sets(&mut out);
    out
}

/// Supports of the quotients of `m`: complements of submodules, closed
/// under following arrows backwards inside the support.
pub fn quotients(q: &QuiverPresentation, m: &IntervalModule) -> Vec<VertexSet> {
    let support = m.support();
    let mut out: Vec<VertexSet> = submodules(q, m)
        .into_iter()
        .map(|s| support.minus(s))
        .collect();
    sort_sets(&mut out);
    out
}

/// Submodules found by checking `M_α(U_s) ⊆ U_t` with matrix ranks for
/// every choice of coordinate subspaces `U_v ∈ {0, M_v}`. Independent of
/// the combinatorial rule in [`submodules`].
pub fn submodules_by_linear_algebra(q: &QuiverPresentation, m: &IntervalModule) -> Vec<VertexSet> {
    let rep = m.representation(q);
    let inclusion = |s: VertexSet, v: usize| -> IntMatrix {
        let d = rep.dims[v - 1];
        if s.contains(v) {
            IntMatrix::identity(d)
        } else {
            IntMatrix::zeros(d, 0)
        }
    };
    let mut out: Vec<VertexSet> = subsets_of(m.support())
        .filter(|&s| {
            (0..q.arrow_count()).all(|k| {
                let (src, tgt) = q.arrow(k);
                let image = rep.maps[k].mul(&inclusion(s, src));
                let target = inclusion(s, tgt);
                let mut joined = vec![];
                for r in 0..target.rows() {
                    let mut row: Vec<i64> = (0..target.cols()).map(|c| target[(r, c)]).collect();
                    row.extend((0..image.cols()).map(|c| image[(r, c)]));
                    joined.push(row);
                }
                let stacked = if joined.is_empty() || joined[0].is_empty() {
                    IntMatrix::zeros(target.rows(), 0)
                } else {
                    IntMatrix::from_rows(joined)
                };
                rank(&stacked) == rank(&target)
            })
        })
        .collect();
    sort_sets(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::quiver::Orientation::*;

    fn a2() -> QuiverPresentation {
        QuiverPresentation::linear(2)
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn dimension_vectors() {
        assert_eq!(IntervalModule::new(1, 1).dim_vector(2), "[10]");
        assert_eq!(IntervalModule::new(2, 3).dim_vector(4), "[0110]");
    }

    #[test]
    fn submodules_of_p2() {
        let p2 = IntervalModule::new(1, 2);
        assert_eq!(
            submodules(&a2(), &p2),
            vec![set(&[]), set(&[1]), set(&[1, 2])]
        );
        assert_eq!(
            quotients(&a2(), &p2),
            vec![set(&[]), set(&[2]), set(&[1, 2])]
        );
        let s1 = IntervalModule::new(1, 1);
        assert_eq!(submodules(&a2(), &s1), vec![set(&[]), set(&[1])]);
    }

    #[test]
    fn summands_are_runs() {
        assert_eq!(
            set(&[1, 2, 4]).summands(),
            vec![IntervalModule::new(1, 2), IntervalModule::new(4, 4)]
        );
        assert!(VertexSet::EMPTY.summands().is_empty());
    }

    #[test]
    fn sink_in_the_middle() {
        // 1 -> 2 <- 3: the simple at 2 is the only proper nonzero
        // indecomposable submodule of [1,3]
        let q = QuiverPresentation::hereditary(3, vec![Right, Left]).unwrap();
        let m = IntervalModule::new(1, 3);
        let subs = submodules(&q, &m);
        assert_eq!(
            subs,
            vec![
                set(&[]),
                set(&[2]),
                set(&[1, 2]),
                set(&[2, 3]),
                set(&[1, 2, 3])
            ]
        );
    }

    #[test]
    fn linear_algebra_oracle_agrees() {
        let orientations = [
            vec![Left, Left, Left],
            vec![Right, Left, Right],
            vec![Left, Right, Right],
        ];
        for o in orientations {
            let q = QuiverPresentation::hereditary(4, o).unwrap();
            for a in 1..=4 {
                for b in a..=4 {
                    let m = IntervalModule::new(a, b);
                    assert_eq!(submodules(&q, &m), submodules_by_linear_algebra(&q, &m));
                }
            }
        }
    }

    #[test]
    fn validity_under_relations() {
        let q = QuiverPresentation::new(3, vec![Left, Left], &[vec![0, 1]]).unwrap();
        assert!(!IntervalModule::new(1, 3).is_valid_for(&q));
        assert!(IntervalModule::new(1, 2).is_valid_for(&q));
        let p = q.relations()[0];
        assert!(IntervalModule::new(2, 3).annihilated_by(&[p]));
        assert!(IntervalModule::new(2, 3).annihilated_by(&[]));
    }
}
