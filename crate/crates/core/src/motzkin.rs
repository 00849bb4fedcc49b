//! Weighted Motzkin paths: an independent oracle for the tableau.
//!
//! Up steps weigh 1, a flat step at level `i` weighs `b_i`, and a down step
//! from level `i` weighs `λ_i`. Then `H_{i,n}` is the total weight of paths
//! `0 → i` of length `n`, and `λ_1⋯λ_i H_{i,n}` that of paths `i → 0`.

use crate::error::Error;
use crate::jfraction::JFraction;
use crate::scalar::ExactRational;

type Q = ExactRational;

/// Level-indexed step weights.
#[derive(Clone, Debug)]
pub struct PathWeights {
    /// `b[i]`: flat step at level `i`.
    pub b: Vec<Q>,
    /// `lambda[i]`: down step from level `i` (index 0 unused).
    pub lambda: Vec<Q>,
}

impl PathWeights {
    pub fn new(b: Vec<Q>, lambda_from_1: Vec<Q>) -> Self {
        let mut lambda = vec![Q::zero()];
        lambda.extend(lambda_from_1);
        Self { b, lambda }
    }

    pub fn from_jfraction(jf: &JFraction) -> Self {
        Self::new(jf.b().to_vec(), jf.lambdas().to_vec())
    }

    fn flat(&self, level: usize) -> Result<&Q, Error> {
        self.b.get(level).ok_or_else(|| Error::Insufficient(format!("b_{level} not supplied")))
    }

    fn down(&self, level: usize) -> Result<&Q, Error> {
        self.lambda.get(level).ok_or_else(|| Error::Insufficient(format!("lambda_{level} not supplied")))
    }
}

/// Exhaustive depth-first enumeration (no memoisation): the sum of weights
/// of all paths from `start` to `end` with `n` steps.
pub fn path_weight_sum(w: &PathWeights, start: usize, end: usize, n: usize) -> Result<Q, Error> {
    if start.abs_diff(end) > n {
        return Ok(Q::zero());
    }
    let mut total = Q::zero();
    dfs(w, start, end, n, &Q::one(), &mut total)?;
    Ok(total)
}

fn dfs(w: &PathWeights, level: usize, end: usize, left: usize, acc: &Q, total: &mut Q) -> Result<(), Error> {
    if left == 0 {
        if level == end {
            *total += acc;
        }
        return Ok(());
    }
    // prune before reading a weight: the end must stay reachable, so a
    // caller only has to supply the levels a path can actually use
    let ok = |l: usize| l.abs_diff(end) < left;
    if ok(level + 1) {
        dfs(w, level + 1, end, left - 1, acc, total)?;
    }
    if ok(level) {
        let b = w.flat(level)?;
        if !b.is_zero() {
            dfs(w, level, end, left - 1, &(acc * b), total)?;
        }
    }
    if level > 0 && ok(level - 1) {
        dfs(w, level - 1, end, left - 1, &(acc * w.down(level)?), total)?;
    }
    Ok(())
}

/// Paths from `start` of length `n`, summed by end level in one traversal
/// (`out[e]` = weight of paths ending at `e`).
pub fn path_weight_sums_from(w: &PathWeights, start: usize, n: usize) -> Result<Vec<Q>, Error> {
    let mut out = vec![Q::zero(); start + n + 1];
    walk_all(w, start, n, &Q::one(), &mut out)?;
    Ok(out)
}

fn walk_all(w: &PathWeights, level: usize, left: usize, acc: &Q, out: &mut [Q]) -> Result<(), Error> {
    if left == 0 {
        out[level] += acc;
        return Ok(());
    }
    walk_all(w, level + 1, left - 1, acc, out)?;
    let b = w.flat(level)?;
    if !b.is_zero() {
        walk_all(w, level, left - 1, &(acc * b), out)?;
    }
    if level > 0 {
        walk_all(w, level - 1, left - 1, &(acc * w.down(level)?), out)?;
    }
    Ok(())
}

/// Memoised transfer-matrix count (shares the tableau's recurrence; exposed
/// for cross-checking the brute-force walk).
pub fn path_weight_sum_dp(w: &PathWeights, start: usize, end: usize, n: usize) -> Result<Q, Error> {
    let top = start.max(end) + n;
    let mut cur = vec![Q::zero(); top + 2];
    cur[start] = Q::one();
    for step in 0..n {
        let left = n - step;
        let mut next = vec![Q::zero(); top + 2];
        for (lvl, v) in cur.iter().enumerate() {
            if v.is_zero() || lvl.abs_diff(end) > left {
                continue;
            }
            let ok = |l: usize| l.abs_diff(end) < left;
            if lvl < top + 1 {
                next[lvl + 1] += v;
            }
            if ok(lvl) {
                next[lvl] += &(v * w.flat(lvl)?);
            }
            if lvl > 0 && ok(lvl - 1) {
                next[lvl - 1] += &(v * w.down(lvl)?);
            }
        }
        cur = next;
    }
    Ok(cur.get(end).cloned().unwrap_or_else(Q::zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalan(n: usize) -> PathWeights {
        PathWeights::new(vec![Q::zero(); n + 1], vec![Q::one(); n + 1])
    }

    #[test]
    fn trivial_and_dyck_counts() {
        let w = catalan(6);
        assert_eq!(path_weight_sum(&w, 2, 2, 0).unwrap(), Q::one());
        assert_eq!(path_weight_sum(&w, 0, 0, 4).unwrap(), Q::from(2));
        assert_eq!(path_weight_sum(&w, 0, 5, 3).unwrap(), Q::zero());
        assert_eq!(path_weight_sum_dp(&w, 0, 0, 4).unwrap(), Q::from(2));
        assert_eq!(path_weight_sums_from(&w, 0, 4).unwrap()[0], Q::from(2));
    }

    #[test]
    fn motzkin_numbers_with_unit_flats() {
        let w = PathWeights::new(vec![Q::one(); 12], vec![Q::one(); 12]);
        let motzkin = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835];
        for (n, m) in motzkin.iter().enumerate() {
            assert_eq!(path_weight_sum(&w, 0, 0, n).unwrap(), Q::from(*m));
        }
    }

    #[test]
    fn only_reachable_levels_need_weights() {
        // four steps from 0 back to 0 never flat-step at level 2
        let w = PathWeights::new(vec![Q::zero(); 2], vec![Q::one(); 2]);
        assert_eq!(path_weight_sum(&w, 0, 0, 4).unwrap(), Q::from(2));
        assert_eq!(path_weight_sum_dp(&w, 0, 0, 4).unwrap(), Q::from(2));
        assert!(path_weight_sum(&w, 0, 0, 6).is_err());
    }
}
