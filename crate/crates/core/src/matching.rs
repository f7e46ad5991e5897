//! Matching matrices up to independent row and column permutations.
//!
//! Character tables of one group computed by different routes differ by a
//! row and a column permutation, so golden comparisons and the abelian-table
//! probe both reduce to this search. The solver filters candidates by entry
//! multisets, then backtracks over row assignments while propagating column
//! candidate masks, with a bipartite feasibility check at every node.

use crate::chartab::CharacterTable;
use crate::linalg::{CMat, C64};

const MAX_DIM: usize = 128;

type Mask = u128;

/// Finds permutations `(sigma, tau)` with `a[i][j] == b[sigma[i]][tau[j]]`
/// within `tol`, if any exist. Dimensions above 128 are not searched.
pub fn match_matrices(a: &CMat, b: &CMat, tol: f64) -> Option<(Vec<usize>, Vec<usize>)> {
    if !a.is_square() || !b.is_square() || a.nrows() != b.nrows() {
        return None;
    }
    let n = a.nrows();
    if n > MAX_DIM {
        return None;
    }
    if n == 0 {
        return Some((Vec::new(), Vec::new()));
    }

    // Coarse fingerprints: sorted entry multisets rounded well above tol.
    let fingerprint = |values: &[C64]| -> Vec<(i64, i64)> {
        let mut key: Vec<(i64, i64)> = values
            .iter()
            .map(|z| ((z.re * 1e4).round() as i64, (z.im * 1e4).round() as i64))
            .collect();
        key.sort_unstable();
        key
    };
    let row_fp_a: Vec<_> = (0..n).map(|i| fingerprint(a.row(i))).collect();
    let row_fp_b: Vec<_> = (0..n).map(|i| fingerprint(b.row(i))).collect();
    let col_fp_a: Vec<_> = (0..n).map(|j| fingerprint(&a.col(j))).collect();
    let col_fp_b: Vec<_> = (0..n).map(|j| fingerprint(&b.col(j))).collect();

    let mut row_cands = vec![0 as Mask; n];
    for i in 0..n {
        for t in 0..n {
            if row_fp_a[i] == row_fp_b[t] {
                row_cands[i] |= 1 << t;
            }
        }
        if row_cands[i] == 0 {
            return None;
        }
    }
    let mut col_masks = vec![0 as Mask; n];
    for j in 0..n {
        for t in 0..n {
            if col_fp_a[j] == col_fp_b[t] {
                col_masks[j] |= 1 << t;
            }
        }
        if col_masks[j] == 0 {
            return None;
        }
    }

    // Assign the most constrained rows first.
    let mut row_order: Vec<usize> = (0..n).collect();
    row_order.sort_by_key(|&i| row_cands[i].count_ones());

    let mut state = Search {
        a,
        b,
        n,
        tol,
        row_order,
        row_cands,
        assignment: vec![usize::MAX; n],
        used_rows: 0,
    };
    let mut col_masks = col_masks;
    if !bipartite_feasible(&col_masks, n) {
        return None;
    }
    if state.solve(0, &mut col_masks) {
        let sigma = state.assignment.clone();
        let tau = perfect_matching(&col_masks, n)?;
        // Final verification of every entry.
        for i in 0..n {
            for j in 0..n {
                if (a[(i, j)] - b[(sigma[i], tau[j])]).norm() > tol {
                    return None;
                }
            }
        }
        return Some((sigma, tau));
    }
    None
}

struct Search<'m> {
    a: &'m CMat,
    b: &'m CMat,
    n: usize,
    tol: f64,
    row_order: Vec<usize>,
    row_cands: Vec<Mask>,
    assignment: Vec<usize>,
    used_rows: Mask,
}

impl Search<'_> {
    fn solve(&mut self, depth: usize, col_masks: &mut [Mask]) -> bool {
        if depth == self.n {
            return true;
        }
        let row = self.row_order[depth];
        let mut cands = self.row_cands[row] & !self.used_rows;
        while cands != 0 {
            let target = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let mut next = vec![0 as Mask; self.n];
            let mut ok = true;
            for j in 0..self.n {
                let mut mask = 0 as Mask;
                let mut remaining = col_masks[j];
                while remaining != 0 {
                    let t = remaining.trailing_zeros() as usize;
                    remaining &= remaining - 1;
                    if (self.a[(row, j)] - self.b[(target, t)]).norm() <= self.tol {
                        mask |= 1 << t;
                    }
                }
                if mask == 0 {
                    ok = false;
                    break;
                }
                next[j] = mask;
            }
            if ok && bipartite_feasible(&next, self.n) {
                self.assignment[row] = target;
                self.used_rows |= 1 << target;
                if self.solve(depth + 1, &mut next) {
                    col_masks.copy_from_slice(&next);
                    return true;
                }
                self.used_rows &= !(1 << target);
                self.assignment[row] = usize::MAX;
            }
        }
        false
    }
}

/// Kuhn's augmenting-path matching; returns a full left-to-right assignment.
fn perfect_matching(masks: &[Mask], n: usize) -> Option<Vec<usize>> {
    let mut match_of_right = vec![usize::MAX; n];
    fn augment(
        left: usize,
        masks: &[Mask],
        match_of_right: &mut [usize],
        visited: &mut [bool],
        n: usize,
    ) -> bool {
        let mut mask = masks[left];
        while mask != 0 {
            let right = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            if visited[right] {
                continue;
            }
            visited[right] = true;
            if match_of_right[right] == usize::MAX
                || augment(match_of_right[right], masks, match_of_right, visited, n)
            {
                match_of_right[right] = left;
                return true;
            }
        }
        false
    }
    for left in 0..n {
        let mut visited = vec![false; n];
        if !augment(left, masks, &mut match_of_right, &mut visited, n) {
            return None;
        }
    }
    let mut assignment = vec![usize::MAX; n];
    for right in 0..n {
        if match_of_right[right] != usize::MAX {
            assignment[match_of_right[right]] = right;
        }
    }
    Some(assignment)
}

fn bipartite_feasible(masks: &[Mask], n: usize) -> bool {
    perfect_matching(masks, n).is_some()
}

/// Two character tables describe the same group data when their class-size
/// and centralizer multisets agree and the entry matrices match up to row
/// and column permutations that respect the class data.
pub fn tables_equivalent(a: &CharacterTable, b: &CharacterTable, tol: f64) -> bool {
    if a.n() != b.n() || a.group_order() != b.group_order() {
        return false;
    }
    let mut sizes_a = a.class_sizes().to_vec();
    let mut sizes_b = b.class_sizes().to_vec();
    sizes_a.sort_unstable();
    sizes_b.sort_unstable();
    if sizes_a != sizes_b {
        return false;
    }
    match match_matrices(a.entries(), b.entries(), tol) {
        Some((_, tau)) => {
            (0..a.n()).all(|j| a.class_sizes()[j] == b.class_sizes()[tau[j]])
        }
        None => false,
    }
}
