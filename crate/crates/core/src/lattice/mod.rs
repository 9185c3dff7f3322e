//! Finite posets and lattices.
//!
//! Elements are dense indices `0..n`. All meaning attached to an element
//! (a torsion pair, a set of bricks) lives in tables owned by the caller.
//! The order is a full boolean matrix and the join and meet tables are
//! computed once at construction, so every query afterwards is a lookup.
//!
//! Every finite lattice is complete, and in a finite lattice an element is
//! completely join irreducible exactly when it is join irreducible. The
//! distinction only matters for infinite lattices (the real interval
//! `[0, 1]`, tors of the Kronecker algebra) and is not modelled here.

mod dot;
mod iso;
mod semidistributive;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{BoundFailure, Error, Result};

pub use dot::to_dot;
pub use iso::are_isomorphic;
pub use semidistributive::Triple;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    // leq[x * n + y] is true iff x <= y
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Reflexive-transitive closure of `pairs` on `0..n`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(x, y) in pairs {
            for index in [x, y] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            leq[x * n + y] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if !leq[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if leq[x * n + y] && leq[y * n + x] {
                    return Err(Error::AntisymmetryViolation { x, y });
                }
            }
        }
        Ok(FinitePoset { n, leq })
    }

    /// Takes a full order matrix (`leq[x * n + y]` means x <= y) and checks
    /// that it is a partial order.
    pub fn from_matrix(n: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != n * n {
            return Err(Error::NotAPartialOrder {
                n,
                reason: format!("matrix has {} entries", leq.len()),
            });
        }
        for x in 0..n {
            if !leq[x * n + x] {
                return Err(Error::NotAPartialOrder {
                    n,
                    reason: format!("not reflexive at {x}"),
                });
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if leq[x * n + y] && leq[y * n + x] {
                    return Err(Error::AntisymmetryViolation { x, y });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !leq[x * n + y] {
                    continue;
                }
                for z in 0..n {
                    if leq[y * n + z] && !leq[x * n + z] {
                        return Err(Error::NotAPartialOrder {
                            n,
                            reason: format!("not transitive: {x} <= {y} <= {z}"),
                        });
                    }
                }
            }
        }
        Ok(FinitePoset { n, leq })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn dual(&self) -> FinitePoset {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[y * n + x] = self.leq(x, y);
            }
        }
        FinitePoset { n, leq }
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly between, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if !self.lt(x, y) {
                    continue;
                }
                if !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn down_counts(&self) -> Vec<usize> {
        (0..self.n)
            .map(|y| (0..self.n).filter(|&x| self.leq(x, y)).count())
            .collect()
    }

    fn up_counts(&self) -> Vec<usize> {
        (0..self.n)
            .map(|x| (0..self.n).filter(|&y| self.leq(x, y)).count())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoverEdge {
    pub lower: usize,
    pub upper: usize,
}

impl CoverEdge {
    pub fn new(lower: usize, upper: usize) -> Self {
        CoverEdge { lower, upper }
    }
}

#[derive(Clone, Debug)]
pub struct FiniteLattice {
    poset: FinitePoset,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    sd: OnceLock<semidistributive::SdScan>,
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset
    }
}

impl Eq for FiniteLattice {}

impl FiniteLattice {
    /// Builds the join and meet tables, failing on the first pair (in
    /// lexicographic order) that lacks a least upper or greatest lower bound.
    pub fn try_from_poset(poset: FinitePoset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::EmptyLattice);
        }
        let down = poset.down_counts();
        let up = poset.up_counts();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let j = least_upper_bound(&poset, &down, x, y)?;
                let m = greatest_lower_bound(&poset, &up, x, y)?;
                join[x * n + y] = j;
                join[y * n + x] = j;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
            }
        }
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x]);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x]);
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for (x, y) in poset.cover_pairs() {
            lower_covers[y].push(x);
            upper_covers[x].push(y);
        }
        Ok(FiniteLattice {
            poset,
            join,
            meet,
            bottom,
            top,
            lower_covers,
            upper_covers,
            sd: OnceLock::new(),
        })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::try_from_poset(FinitePoset::from_pairs(n, pairs)?)
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_pairs(n, &pairs).expect("chain is a lattice")
    }

    /// Subsets of an `atoms`-element set ordered by inclusion; element `s`
    /// is the subset with bit mask `s`.
    pub fn boolean(atoms: u32) -> Self {
        let n = 1usize << atoms;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = x & y == x;
            }
        }
        let poset = FinitePoset::from_matrix(n, leq).expect("inclusion order");
        Self::try_from_poset(poset).expect("boolean lattice")
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.poset.lt(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    /// All cover relations, sorted by `(lower, upper)`.
    pub fn covers(&self) -> Vec<CoverEdge> {
        let mut out: Vec<CoverEdge> = (0..self.len())
            .flat_map(|x| {
                self.upper_covers[x]
                    .iter()
                    .map(move |&y| CoverEdge::new(x, y))
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_cover(&self, c: CoverEdge) -> bool {
        c.lower < self.len() && self.upper_covers[c.lower].contains(&c.upper)
    }

    pub fn is_join_irreducible(&self, x: usize) -> bool {
        self.lower_covers[x].len() == 1
    }

    pub fn is_meet_irreducible(&self, x: usize) -> bool {
        self.upper_covers[x].len() == 1
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.is_join_irreducible(x))
            .collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.is_meet_irreducible(x))
            .collect()
    }

    /// Join irreducibles straight from the definition: not the bottom, and
    /// not the join of two strictly smaller elements.
    pub fn join_irreducibles_by_definition(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&x| x != self.bottom)
            .filter(|&x| {
                !(0..n)
                    .any(|a| self.lt(a, x) && (0..n).any(|b| self.lt(b, x) && self.join(a, b) == x))
            })
            .collect()
    }

    pub fn meet_irreducibles_by_definition(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&x| x != self.top)
            .filter(|&x| {
                !(0..n)
                    .any(|a| self.lt(x, a) && (0..n).any(|b| self.lt(x, b) && self.meet(a, b) == x))
            })
            .collect()
    }

    /// The unique lower cover of a join irreducible.
    pub fn j_star(&self, j: usize) -> Result<usize> {
        self.check_index(j)?;
        match self.lower_covers[j].as_slice() {
            [x] => Ok(*x),
            _ => Err(Error::NotIrreducible(j)),
        }
    }

    /// The unique upper cover of a meet irreducible.
    pub fn m_star(&self, m: usize) -> Result<usize> {
        self.check_index(m)?;
        match self.upper_covers[m].as_slice() {
            [y] => Ok(*y),
            _ => Err(Error::NotIrreducible(m)),
        }
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        let down = self.poset.down_counts();
        order.sort_by_key(|&x| down[x]);
        let mut h = vec![0; n];
        for &y in &order {
            h[y] = self.lower_covers[y]
                .iter()
                .map(|&x| h[x] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// The sublattice `{x | u <= x <= v}` and the map from its indices back
    /// into `self`.
    pub fn interval_sublattice(&self, u: usize, v: usize) -> Result<(FiniteLattice, Vec<usize>)> {
        self.check_index(u)?;
        self.check_index(v)?;
        if !self.leq(u, v) {
            return Err(Error::NotComparable(u, v));
        }
        let embed: Vec<usize> = (0..self.len())
            .filter(|&x| self.leq(u, x) && self.leq(x, v))
            .collect();
        let k = embed.len();
        let mut leq = vec![false; k * k];
        for (i, &x) in embed.iter().enumerate() {
            for (j, &y) in embed.iter().enumerate() {
                leq[i * k + j] = self.leq(x, y);
            }
        }
        let sub = FiniteLattice::try_from_poset(FinitePoset::from_matrix(k, leq)?)?;
        Ok((sub, embed))
    }

    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice::try_from_poset(self.poset.dual()).expect("dual of a lattice is a lattice")
    }

    fn check_index(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                n: self.len(),
            })
        }
    }
}

fn least_upper_bound(p: &FinitePoset, down: &[usize], x: usize, y: usize) -> Result<usize> {
    let n = p.len();
    let candidate = (0..n)
        .filter(|&z| p.leq(x, z) && p.leq(y, z))
        .min_by_key(|&z| down[z]);
    let Some(c) = candidate else {
        return Err(Error::NotALattice {
            x,
            y,
            reason: BoundFailure::NoUpperBound,
        });
    };
    if (0..n).all(|z| !(p.leq(x, z) && p.leq(y, z)) || p.leq(c, z)) {
        Ok(c)
    } else {
        Err(Error::NotALattice {
            x,
            y,
            reason: BoundFailure::NoLeastUpperBound,
        })
    }
}

fn greatest_lower_bound(p: &FinitePoset, up: &[usize], x: usize, y: usize) -> Result<usize> {
    let n = p.len();
    let candidate = (0..n)
        .filter(|&z| p.leq(z, x) && p.leq(z, y))
        .min_by_key(|&z| up[z]);
    let Some(c) = candidate else {
        return Err(Error::NotALattice {
            x,
            y,
            reason: BoundFailure::NoLowerBound,
        });
    };
    if (0..n).all(|z| !(p.leq(z, x) && p.leq(z, y)) || p.leq(z, c)) {
        Ok(c)
    } else {
        Err(Error::NotALattice {
            x,
            y,
            reason: BoundFailure::NoGreatestLowerBound,
        })
    }
}

/// True iff `f` (indexed by elements of `source`) is a surjective map onto
/// `target` that preserves binary joins and meets.
pub fn is_lattice_quotient(f: &[usize], source: &FiniteLattice, target: &FiniteLattice) -> bool {
    let n = source.len();
    if f.len() != n || f.iter().any(|&y| y >= target.len()) {
        return false;
    }
    let mut hit = vec![false; target.len()];
    for &y in f {
        hit[y] = true;
    }
    if !hit.iter().all(|&h| h) {
        return false;
    }
    (0..n).all(|x| {
        (x..n).all(|y| {
            f[source.join(x, y)] == target.join(f[x], f[y])
                && f[source.meet(x, y)] == target.meet(f[x], f[y])
        })
    })
}
