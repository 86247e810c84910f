//! Dense Gaussian elimination with partial pivoting, used to solve the
//! tangency system without its closed form.

use crate::error::{Error, Result};
use crate::tol::tolerance;

/// Solves `A x = b` in place. Flags the system as singular when a pivot
/// falls below `tau` times the largest matrix entry, or when the computed
/// solution leaves a large residual.
pub fn solve_dense(a: &[Vec<f64>], b: &[f64]) -> Result<Vec<f64>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|row| row.len() == n));
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut rhs: Vec<f64> = b.to_vec();

    let scale = m
        .iter()
        .flatten()
        .fold(0.0f64, |acc, v| acc.max(v.abs()));
    let pivot_floor = tolerance() * scale;

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r1, &r2| m[r1][col].abs().partial_cmp(&m[r2][col].abs()).unwrap())
            .unwrap();
        if m[pivot_row][col].abs() <= pivot_floor {
            return Err(Error::SingularSystem);
        }
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        for row in (col + 1)..n {
            let factor = m[row][col] / m[col][col];
            if factor == 0.0 {
                continue;
            }
            let (pivot_rows, rest) = m.split_at_mut(row);
            let pivot_row = &pivot_rows[col];
            for (k, entry) in rest[0].iter_mut().enumerate().skip(col) {
                *entry -= factor * pivot_row[k];
            }
            rhs[row] -= factor * rhs[col];
        }
    }

    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for k in (row + 1)..n {
            acc -= m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }

    // Near-singular systems can survive the pivot check; the residual
    // catches them.
    let b_scale = b.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let x_scale = x.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let res_scale = (scale * x_scale).max(b_scale);
    for row in 0..n {
        let mut r = -b[row];
        for col in 0..n {
            r += a[row][col] * x[col];
        }
        if r.abs() > 1e-6 * res_scale {
            return Err(Error::SingularSystem);
        }
    }
    Ok(x)
}
