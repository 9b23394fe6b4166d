use crate::error::{Error, Result};

/// Solves `a · x = b` for square row-major `a` by Gaussian elimination with
/// partial pivoting. A pivot below `n · ε · max|a|` is treated as singular.
pub fn solve(mut a: Vec<f64>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    if a.len() != n * n {
        return Err(Error::InvalidDimension(format!(
            "{} matrix entries for a {n}-vector",
            a.len()
        )));
    }
    let scale = a.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let tol = n as f64 * f64::EPSILON * scale;
    for col in 0..n {
        let (pivot_row, pivot) = (col..n)
            .map(|r| (r, a[r * n + col].abs()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        // NaN pivots fail this test too
        if pivot.is_nan() || pivot <= tol {
            return Err(Error::SingularFit);
        }
        if pivot_row != col {
            for k in 0..n {
                a.swap(col * n + k, pivot_row * n + k);
            }
            b.swap(col, pivot_row);
        }
        let p = a[col * n + col];
        for r in col + 1..n {
            let f = a[r * n + col] / p;
            if f == 0.0 {
                continue;
            }
            a[r * n + col] = 0.0;
            for k in col + 1..n {
                a[r * n + k] -= f * a[col * n + k];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let tail: f64 = (r + 1..n).map(|k| a[r * n + k] * x[k]).sum();
        x[r] = (b[r] - tail) / a[r * n + r];
    }
    Ok(x)
}
