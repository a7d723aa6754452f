//! Dense Gaussian elimination over ℚ, enough for the rank and span
//! membership questions that show up at desk scale.

use num_traits::Zero;

use crate::rational::Q;

/// Rank of the row span.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &pivot;
                for j in c..cols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] = &rows[i][j] - delta;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Solves Σ c_i basis_i = target; returns the coefficients (free variables
/// fixed to zero) or None if the target lies outside the span.
pub fn solve_in_span(basis: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let k = basis.len();
    let m = target.len();
    debug_assert!(basis.iter().all(|b| b.len() == m));
    // augmented m x (k+1) system: columns are the basis vectors
    let mut a: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut row: Vec<Q> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; k];
    let mut r = 0usize;
    for c in 0..k {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for j in c..=k {
            a[r][j] = &a[r][j] / &pivot;
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in c..=k {
                    let delta = &factor * &a[r][j];
                    a[i][j] = &a[i][j] - delta;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
        if r == m {
            break;
        }
    }
    // consistency: no row 0 = nonzero
    for row in &a {
        if row[..k].iter().all(|v| v.is_zero()) && !row[k].is_zero() {
            return None;
        }
    }
    let mut coeffs = vec![Q::zero(); k];
    for c in 0..k {
        if let Some(r) = pivot_of_col[c] {
            coeffs[c] = a[r][k].clone();
        }
    }
    Some(coeffs)
}

/// Membership of `target` in the span of `basis`.
pub fn in_span(basis: &[Vec<Q>], target: &[Q]) -> bool {
    solve_in_span(basis, target).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_int;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q_int(x)).collect()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank(vec![v(&[1, 2]), v(&[2, 4])]), 1);
        assert_eq!(rank(vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]), 2);
        assert_eq!(rank(vec![v(&[0, 0])]), 0);
    }

    #[test]
    fn solve_examples() {
        let basis = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let c = solve_in_span(&basis, &v(&[2, 5, 3])).unwrap();
        assert_eq!(c, vec![q_int(2), q_int(3)]);
        assert!(solve_in_span(&basis, &v(&[1, 0, 0])).is_none());
    }
}
