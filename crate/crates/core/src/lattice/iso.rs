//! Order isomorphism between finite lattices by pruned backtracking.

use super::FiniteLattice;

type Invariant = (usize, usize, usize, usize);

fn invariants(l: &FiniteLattice) -> Vec<Invariant> {
    let h = l.heights();
    let depth = l.dual().heights();
    (0..l.len())
        .map(|x| {
            (
                h[x],
                depth[x],
                l.lower_covers(x).len(),
                l.upper_covers(x).len(),
            )
        })
        .collect()
}

/// An order isomorphism `f` (indexed by elements of `a`) onto `b`, if any.
///
/// Candidates are restricted to elements with the same height, depth and
/// cover degrees, and elements of `a` are assigned bottom-up.
pub fn are_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || a.covers().len() != b.covers().len() {
        return None;
    }
    let inv_a = invariants(a);
    let inv_b = invariants(b);
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (inv_a[x].0, x));
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| inv_b[y] == inv_a[x]).collect())
        .collect();

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &order, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    a: &FiniteLattice,
    b: &FiniteLattice,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p| {
            let q = map[p];
            a.leq(p, x) == b.leq(q, y) && a.leq(x, p) == b.leq(y, q)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(a, b, order, candidates, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}
