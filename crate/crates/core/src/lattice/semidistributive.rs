//! Semidistributivity, the γ/μ cover labellings and the κ bijections.

use super::{CoverEdge, FiniteLattice};
use crate::error::{Error, Result};

/// A triple `(x, y, z)` witnessing failure of semidistributivity:
/// `x ∨ y = x ∨ z` but `x ∨ (y ∧ z)` differs (or the meet dual).
pub type Triple = (usize, usize, usize);

#[derive(Clone, Debug)]
pub(super) struct SdScan {
    join: std::result::Result<Option<Triple>, String>,
    meet: std::result::Result<Option<Triple>, String>,
}

/// Which of the two lattice operations a scan runs over.
#[derive(Clone, Copy)]
enum Op {
    Join,
    Meet,
}

impl FiniteLattice {
    fn op(&self, op: Op, x: usize, y: usize) -> usize {
        match op {
            Op::Join => self.join(x, y),
            Op::Meet => self.meet(x, y),
        }
    }

    fn co_op(&self, op: Op, x: usize, y: usize) -> usize {
        match op {
            Op::Join => self.meet(x, y),
            Op::Meet => self.join(x, y),
        }
    }

    /// Lexicographically first triple with x∘y = x∘z and x∘(y•z) ≠ x∘y.
    fn triple_scan(&self, op: Op) -> Option<Triple> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(op, x, y);
                for z in 0..n {
                    if self.op(op, x, z) == xy && self.op(op, x, self.co_op(op, y, z)) != xy {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Whether every nonempty set {y | x∘y = z} has an extremal element
    /// (a minimum for joins, a maximum for meets).
    fn extremal_scan(&self, op: Op) -> bool {
        let n = self.len();
        for x in 0..n {
            let mut fibres: Vec<Vec<usize>> = vec![Vec::new(); n];
            for y in 0..n {
                fibres[self.op(op, x, y)].push(y);
            }
            for fibre in fibres.iter().filter(|f| !f.is_empty()) {
                let candidate = fibre
                    .iter()
                    .fold(fibre[0], |acc, &y| self.co_op(op, acc, y));
                if !fibre.contains(&candidate) {
                    return false;
                }
            }
        }
        true
    }

    fn scan(&self, op: Op) -> std::result::Result<Option<Triple>, String> {
        let witness = self.triple_scan(op);
        let extremal = self.extremal_scan(op);
        if witness.is_none() != extremal {
            return Err(format!(
                "triple scan and extremal-element scan disagree (witness {witness:?})"
            ));
        }
        Ok(witness)
    }

    fn sd_scan(&self) -> &SdScan {
        self.sd.get_or_init(|| SdScan {
            join: self.scan(Op::Join),
            meet: self.scan(Op::Meet),
        })
    }

    /// First failing triple for join-semidistributivity, if any.
    pub fn join_sd_witness(&self) -> Result<Option<Triple>> {
        self.sd_scan()
            .join
            .clone()
            .map_err(Error::InternalInconsistency)
    }

    pub fn meet_sd_witness(&self) -> Result<Option<Triple>> {
        self.sd_scan()
            .meet
            .clone()
            .map_err(Error::InternalInconsistency)
    }

    pub fn is_join_semidistributive(&self) -> Result<bool> {
        Ok(self.join_sd_witness()?.is_none())
    }

    pub fn is_meet_semidistributive(&self) -> Result<bool> {
        Ok(self.meet_sd_witness()?.is_none())
    }

    pub fn is_semidistributive(&self) -> Result<bool> {
        Ok(self.is_join_semidistributive()? && self.is_meet_semidistributive()?)
    }

    fn require_jsd(&self) -> Result<()> {
        match self.join_sd_witness()? {
            None => Ok(()),
            Some((x, y, z)) => Err(Error::NotSemidistributive { x, y, z }),
        }
    }

    fn require_msd(&self) -> Result<()> {
        match self.meet_sd_witness()? {
            None => Ok(()),
            Some((x, y, z)) => Err(Error::NotSemidistributive { x, y, z }),
        }
    }

    fn require_cover(&self, c: CoverEdge) -> Result<()> {
        if self.is_cover(c) {
            Ok(())
        } else {
            Err(Error::NotACover(c.lower, c.upper))
        }
    }

    /// The unique join irreducible `j` with `x ∨ j = y` and `x ∨ j_* = x`
    /// for the cover `y ⋗ x`.
    pub fn gamma_label(&self, c: CoverEdge) -> Result<usize> {
        self.require_cover(c)?;
        self.require_jsd()?;
        let (x, y) = (c.lower, c.upper);
        let found: Vec<usize> = self
            .join_irreducibles()
            .into_iter()
            .filter(|&j| {
                let js = self.lower_covers[j][0];
                self.join(x, j) == y && self.join(x, js) == x
            })
            .collect();
        match found.as_slice() {
            [j] => Ok(*j),
            other => Err(Error::InternalInconsistency(format!(
                "cover {x} -> {y} has {} gamma candidates",
                other.len()
            ))),
        }
    }

    /// The unique meet irreducible `m` with `m ∧ y = x` and `m^* ∧ y = y`.
    pub fn mu_label(&self, c: CoverEdge) -> Result<usize> {
        self.require_cover(c)?;
        self.require_msd()?;
        let (x, y) = (c.lower, c.upper);
        let found: Vec<usize> = self
            .meet_irreducibles()
            .into_iter()
            .filter(|&m| {
                let ms = self.upper_covers[m][0];
                self.meet(m, y) == x && self.meet(ms, y) == y
            })
            .collect();
        match found.as_slice() {
            [m] => Ok(*m),
            other => Err(Error::InternalInconsistency(format!(
                "cover {x} -> {y} has {} mu candidates",
                other.len()
            ))),
        }
    }

    /// κ(j) = μ(j ⋗ j_*).
    pub fn kappa(&self, j: usize) -> Result<usize> {
        self.require_jsd()?;
        let js = self.j_star(j)?;
        self.mu_label(CoverEdge::new(js, j))
    }

    /// κᵈ(m) = γ(m^* ⋗ m).
    pub fn kappa_d(&self, m: usize) -> Result<usize> {
        self.require_msd()?;
        let ms = self.m_star(m)?;
        self.gamma_label(CoverEdge::new(m, ms))
    }

    /// Whether μ(c) = κ(γ(c)) on every cover.
    pub fn check_mu_eq_kappa_gamma(&self) -> Result<bool> {
        for c in self.covers() {
            if self.mu_label(c)? != self.kappa(self.gamma_label(c)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
