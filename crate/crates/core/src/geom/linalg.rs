//! Small dense exact linear algebra over the rationals.

use num_traits::Zero;

use crate::tropical::num::Rational;

/// Solves `A x = b` for an `m × k` matrix with `m >= k`.
///
/// Returns the unique solution when `A` has full column rank and the system
/// is consistent, and `None` otherwise.
#[allow(clippy::needless_range_loop)]
pub fn solve_unique(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        let p = (pivot_row..rows).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot_row, p);
        b.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for c in col..cols {
            a[pivot_row][c] = &a[pivot_row][c] * &inv;
        }
        b[pivot_row] = &b[pivot_row] * &inv;
        for r in 0..rows {
            if r != pivot_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &a[pivot_row][c];
                    a[r][c] -= delta;
                }
                let delta = &factor * &b[pivot_row];
                b[r] -= delta;
            }
        }
        pivot_row += 1;
    }
    if b[pivot_row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(b[..cols].to_vec())
}

/// Rank of a rational matrix.
#[allow(clippy::needless_range_loop)]
pub fn rank(mut a: Vec<Vec<Rational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if !a[i][col].is_zero() {
                let factor = &a[i][col] / &a[r][col];
                for c in col..cols {
                    let delta = &factor * &a[r][c];
                    a[i][c] -= delta;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}
