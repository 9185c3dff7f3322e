//! Hom spaces between representations by exact linear algebra.
//!
//! A morphism `f: M → N` is one matrix `f_v: M_v → N_v` per vertex with
//! `f_t · M_α = N_α · f_s` for every arrow `α: s → t`.

use num_rational::Rational64;

use super::linalg::{nullspace, rank_rational, IntMatrix, Matrix, RatMatrix};
use super::module::{IntervalModule, Representation};
use super::quiver::QuiverPresentation;
use crate::error::{Error, Result};

/// A morphism given by its per-vertex blocks (index `v - 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMap {
    pub blocks: Vec<RatMatrix>,
}

impl HomMap {
    /// The scalar at vertex `v` when both spaces there are one-dimensional.
    pub fn scalar(&self, v: usize) -> Option<Rational64> {
        let b = &self.blocks[v - 1];
        (b.rows() == 1 && b.cols() == 1).then(|| b[(0, 0)])
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &HomMap) -> HomMap {
        HomMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(g, f)| g.mul(f))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    fn flatten(&self) -> Vec<Rational64> {
        self.blocks
            .iter()
            .flat_map(|b| (0..b.rows()).flat_map(move |r| (0..b.cols()).map(move |c| b[(r, c)])))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub dim: usize,
    pub basis: Vec<HomMap>,
}

impl HomSpace {
    /// Whether `f` is a linear combination of the basis.
    pub fn contains(&self, f: &HomMap) -> bool {
        let mut rows: Vec<Vec<Rational64>> = self.basis.iter().map(HomMap::flatten).collect();
        let target = f.flatten();
        if target.is_empty() {
            return true;
        }
        let before = if rows.is_empty() {
            0
        } else {
            rank_rational(&Matrix::from_rows(rows.clone()))
        };
        rows.push(target);
        rank_rational(&Matrix::from_rows(rows)) == before
    }
}

/// Solves the commuting-square system for `Hom(m, n)`.
pub fn hom_space(q: &QuiverPresentation, m: &Representation, n: &Representation) -> HomSpace {
    let nv = q.vertices();
    // unknown f_v[r][c] lives at offset[v] + r * dim m_v + c
    let mut offset = Vec::with_capacity(nv + 1);
    let mut total = 0;
    for v in 0..nv {
        offset.push(total);
        total += n.dims[v] * m.dims[v];
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;

    let mut equations: Vec<Vec<i64>> = Vec::new();
    for k in 0..q.arrow_count() {
        let (s, t) = q.arrow(k);
        let (s, t) = (s - 1, t - 1);
        let ma = &m.maps[k];
        let na = &n.maps[k];
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![0i64; total];
                for j in 0..m.dims[t] {
                    row[var(t, r, j)] += ma[(j, c)];
                }
                for j in 0..n.dims[s] {
                    row[var(s, j, c)] -= na[(r, j)];
                }
                if row.iter().any(|&x| x != 0) {
                    equations.push(row);
                }
            }
        }
    }
    let system = if equations.is_empty() {
        IntMatrix::zeros(0, total)
    } else {
        Matrix::from_rows(equations)
    };
    let basis = nullspace(&system)
        .into_iter()
        .map(|x| HomMap {
            blocks: (0..nv)
                .map(|v| {
                    let mut b = RatMatrix::zeros(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            b[(r, c)] = x[var(v, r, c)];
                        }
                    }
                    b
                })
                .collect(),
        })
        .collect::<Vec<_>>();
    HomSpace {
        dim: basis.len(),
        basis,
    }
}

/// `Hom(m, n)` for two interval modules.
pub fn hom_dim(q: &QuiverPresentation, m: &IntervalModule, n: &IntervalModule) -> HomSpace {
    hom_space(q, &m.representation(q), &n.representation(q))
}

/// Whether `f` satisfies every commuting square.
pub fn is_morphism(
    q: &QuiverPresentation,
    m: &Representation,
    n: &Representation,
    f: &HomMap,
) -> bool {
    (0..q.arrow_count()).all(|k| {
        let (s, t) = q.arrow(k);
        let lhs = f.blocks[t - 1].mul(&m.maps[k].to_rational());
        let rhs = n.maps[k].to_rational().mul(&f.blocks[s - 1]);
        lhs == rhs
    })
}

/// Whether some morphism `m → n` is surjective at every vertex. Hom spaces
/// between interval modules have dimension at most one, so only the single
/// basis vector needs checking.
pub fn exists_surjection(
    q: &QuiverPresentation,
    m: &IntervalModule,
    n: &IntervalModule,
) -> Result<bool> {
    let space = hom_dim(q, m, n);
    match space.dim {
        0 => Ok(false),
        1 => {
            let f = &space.basis[0];
            Ok(f.blocks.iter().all(|b| rank_rational(b) == b.rows()))
        }
        d => Err(Error::UnexpectedHomDim(d)),
    }
}
