//! Named property checks over a torsion lattice or an algebra.
//!
//! Each check records pass/fail and, on failure, the first witness found.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bridge::{tors_of_algebra, AlgebraTors};
use crate::error::Result;
use crate::galois::TorsLattice;
use crate::oracle::{asai_sweep, brute_torsion_pairs, closure_axiom_check};
use crate::rep::{self, hom_dim, submodules, submodules_by_linear_algebra, torsion_sequence_check};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    /// `Ok(None)` passes, `Ok(Some(w))` fails with witness `w`, and an
    /// error fails with its message.
    fn record(&mut self, name: &'static str, outcome: Result<Option<String>>) {
        let witness = match outcome {
            Ok(w) => w,
            Err(e) => Some(e.to_string()),
        };
        self.checks.push(Check {
            name,
            passed: witness.is_none(),
            witness,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn first<T>(mut it: impl Iterator<Item = Result<Option<T>>>) -> Result<Option<T>> {
    it.find_map(|r| r.transpose()).transpose()
}

fn comparable_pairs(tl: &TorsLattice) -> Vec<(usize, usize)> {
    let l = tl.lattice();
    (0..l.len())
        .flat_map(|u| (0..l.len()).map(move |v| (u, v)))
        .filter(|&(u, v)| l.leq(u, v))
        .collect()
}

/// Every lattice-level property of `tors(Br, →)`.
pub fn tors_suite(tl: &TorsLattice) -> SuiteReport {
    let mut r = SuiteReport::default();
    let l = tl.lattice();
    let rel = tl.relation();
    let m = rel.len();

    r.record(
        "factorizable",
        Ok(rel.factorization_failure().map(|f| f.to_string())),
    );
    r.record(
        "semidistributive",
        l.join_sd_witness().and_then(|j| {
            if let Some((x, y, z)) = j {
                return Ok(Some(format!("join witness ({x}, {y}, {z})")));
            }
            Ok(l.meet_sd_witness()?
                .map(|(x, y, z)| format!("meet witness ({x}, {y}, {z})")))
        }),
    );
    let (nj, nm) = (l.join_irreducibles().len(), l.meet_irreducibles().len());
    r.record(
        "irreducible_counts",
        Ok((nj != m || nm != m)
            .then(|| format!("{m} bricks, {nj} join irreducibles, {nm} meet irreducibles"))),
    );
    r.record(
        "ji_bijection",
        bijection(m, &l.join_irreducibles(), |b| tl.ji_of_brick(b)),
    );
    r.record(
        "mi_bijection",
        bijection(m, &l.meet_irreducibles(), |b| tl.mi_of_brick(b)),
    );
    r.record("cover_labels", tl.brick_labels().map(|_| None));
    r.record(
        "gamma_hat",
        first(l.covers().into_iter().map(|c| {
            let b = tl.cover_brick_label(c)?;
            let (g, j) = (l.gamma_label(c)?, tl.ji_of_brick(b)?);
            Ok((g != j).then(|| format!("cover {} -> {}: gamma {g}, T(B) {j}", c.lower, c.upper)))
        })),
    );
    r.record(
        "kappa_inverse",
        first(
            l.join_irreducibles()
                .into_iter()
                .map(|j| {
                    Ok((l.kappa_d(l.kappa(j)?)? != j)
                        .then(|| format!("kappa_d(kappa({j})) != {j}")))
                })
                .chain(l.meet_irreducibles().into_iter().map(|x| {
                    Ok((l.kappa(l.kappa_d(x)?)? != x)
                        .then(|| format!("kappa(kappa_d({x})) != {x}")))
                })),
        ),
    );
    r.record(
        "kappa_on_bricks",
        first((0..m).map(|b| {
            let (k, mi) = (l.kappa(tl.ji_of_brick(b)?)?, tl.mi_of_brick(b)?);
            Ok((k != mi).then(|| format!("brick {}: kappa(T(B)) = {k}, mi = {mi}", rel.label(b))))
        })),
    );
    r.record(
        "mu_kappa_gamma",
        first(l.covers().into_iter().map(|c| {
            let (mu, kg) = (l.mu_label(c)?, l.kappa(l.gamma_label(c)?)?);
            Ok((mu != kg).then(|| {
                format!(
                    "cover {} -> {}: mu {mu}, kappa(gamma) {kg}",
                    c.lower, c.upper
                )
            }))
        })),
    );
    r.record(
        "four_classes",
        first((0..m).map(|b| {
            let f = tl.four_class_diagram(b)?;
            let ok =
                l.join(f.ji_side, f.mi_side) == f.top && l.meet(f.ji_side, f.mi_side) == f.bottom;
            Ok((!ok).then(|| format!("brick {}", rel.label(b))))
        })),
    );
    r.record(
        "tf_dual",
        Ok((!tl.tf_dual_check()).then(|| "fset order is not the dual".to_string())),
    );
    let pairs = comparable_pairs(tl);
    r.record(
        "lemma_three",
        first(
            pairs
                .iter()
                .map(|&(u, v)| Ok((!tl.lemma_three_check(u, v)?).then(|| format!("[{u}, {v}]")))),
        ),
    );
    r.record(
        "interval_labels",
        first(pairs.iter().map(|&(u, v)| {
            let got = tl.interval_label_set(u, v)?;
            Ok((got != (tl.fset(u) & tl.tset(v))).then(|| format!("[{u}, {v}]: labels {got:?}")))
        })),
    );
    r.record(
        "interval_ji",
        first(
            pairs
                .iter()
                .map(|&(u, v)| Ok((!tl.interval_ji_check(u, v)?).then(|| format!("[{u}, {v}]")))),
        ),
    );
    r
}

fn bijection(
    m: usize,
    targets: &[usize],
    f: impl Fn(usize) -> Result<usize>,
) -> Result<Option<String>> {
    let images: BTreeSet<usize> = (0..m).map(f).collect::<Result<_>>()?;
    let targets: BTreeSet<usize> = targets.iter().copied().collect();
    Ok((images.len() != m || images != targets)
        .then(|| format!("images {images:?}, expected {targets:?}")))
}

/// [`tors_suite`] plus the module-level checks for a quiver presentation.
pub fn algebra_suite(at: &AlgebraTors) -> SuiteReport {
    let mut r = tors_suite(at.tors());
    let q = at.quiver();
    let bricks = at.bricks();
    let rel = at.relation();
    let n = q.vertices();

    r.record(
        "bricks_are_indecomposables",
        rep::indecomposables(q)
            .map(|ind| (ind != bricks).then(|| format!("{} vs {}", ind.len(), bricks.len()))),
    );
    r.record(
        "submodule_oracle",
        Ok(bricks
            .iter()
            .filter(|b| b.support().len() <= 4)
            .find(|b| submodules(q, b) != submodules_by_linear_algebra(q, b))
            .map(|b| b.dim_vector(n))),
    );
    r.record(
        "hom_composition",
        Ok((|| {
            for x in bricks {
                for y in bricks {
                    let f = hom_dim(q, x, y);
                    if f.dim == 0 {
                        continue;
                    }
                    for z in bricks {
                        let (g, h) = (hom_dim(q, y, z), hom_dim(q, x, z));
                        for fb in &f.basis {
                            for gb in &g.basis {
                                if !h.contains(&gb.after(fb)) {
                                    return Some(format!(
                                        "{} {} {}",
                                        x.dim_vector(n),
                                        y.dim_vector(n),
                                        z.dim_vector(n)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            None
        })()),
    );
    let tl = at.tors();
    r.record(
        "torsion_sequences",
        Ok((0..tl.len()).find_map(|i| {
            bricks.iter().find_map(|x| {
                (!torsion_sequence_check(q, bricks, rel, tl.tset(i), x).holds())
                    .then(|| format!("class {i}, module {}", x.dim_vector(n)))
            })
        })),
    );
    r.record(
        "asai",
        asai_sweep(q).map(|a| {
            a.violations
                .first()
                .map(|w| format!("B = {}, X = {}", w.brick, w.module))
        }),
    );
    r.record(
        "closure_axioms",
        closure_axiom_check(q, tl).map(|c| {
            c.necessary_failures
                .first()
                .or(c.subset_mismatches.first())
                .cloned()
        }),
    );
    r.record(
        "brute_force_pairs",
        brute_torsion_pairs(rel).map(|b| {
            (b.pairs() != tl.pairs()).then(|| format!("{} vs {} pairs", b.len(), tl.len()))
        }),
    );
    r
}

/// Builds `tors A` and runs [`algebra_suite`].
pub fn check_algebra(q: &rep::QuiverPresentation) -> Result<(AlgebraTors, SuiteReport)> {
    let at = tors_of_algebra(q)?;
    let report = algebra_suite(&at);
    Ok((at, report))
}
