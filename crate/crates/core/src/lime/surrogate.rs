use super::linalg::solve;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SurrogateFit {
    pub coefficients: Vec<f64>,
    pub intercept: f64,
    pub weighted_r2: f64,
    pub alpha: f64,
}

impl SurrogateFit {
    pub fn predict(&self, row: &[f64]) -> f64 {
        self.intercept + self.coefficients.iter().zip(row).map(|(w, z)| w * z).sum::<f64>()
    }
}

/// Minimizes `Σ wᵢ (yᵢ − coef·zᵢ − b)² + alpha·‖coef‖²` with the intercept
/// unpenalized, through the `(d+1)×(d+1)` normal equations of `[Z | 1]`.
pub fn fit_weighted_ridge(z: &[Vec<f64>], y: &[f64], weights: &[f64], alpha: f64) -> Result<SurrogateFit> {
    let n = z.len();
    if n == 0 {
        return Err(Error::EmptyInput("surrogate fit needs at least one sample"));
    }
    if y.len() != n || weights.len() != n {
        return Err(Error::InvalidDimension(format!(
            "{n} rows, {} targets, {} weights",
            y.len(),
            weights.len()
        )));
    }
    let d = z[0].len();
    if z.iter().any(|r| r.len() != d) {
        return Err(Error::InvalidDimension("ragged design matrix".into()));
    }
    if weights.iter().any(|&w| !(w > 0.0 && w.is_finite())) {
        return Err(Error::InvalidConfig(
            "sample weights must be positive and finite".into(),
        ));
    }
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidConfig(format!("alpha {alpha} must be non-negative")));
    }

    let p = d + 1;
    let mut gram = vec![0.0; p * p];
    let mut rhs = vec![0.0; p];
    let mut aug = vec![1.0; p];
    for ((row, &yi), &wi) in z.iter().zip(y).zip(weights) {
        aug[..d].copy_from_slice(row);
        for a in 0..p {
            let wa = wi * aug[a];
            if wa == 0.0 {
                continue;
            }
            rhs[a] += wa * yi;
            for b in 0..p {
                gram[a * p + b] += wa * aug[b];
            }
        }
    }
    for k in 0..d {
        gram[k * p + k] += alpha;
    }
    let theta = solve(gram, rhs)?;
    let intercept = theta[d];
    let coefficients = theta[..d].to_vec();

    let fit = SurrogateFit {
        coefficients,
        intercept,
        weighted_r2: 0.0,
        alpha,
    };
    let w_sum: f64 = weights.iter().sum();
    let y_mean = weights.iter().zip(y).map(|(w, y)| w * y).sum::<f64>() / w_sum;
    let (mut ss_res, mut ss_tot) = (0.0, 0.0);
    for ((row, &yi), &wi) in z.iter().zip(y).zip(weights) {
        let r = yi - fit.predict(row);
        ss_res += wi * r * r;
        ss_tot += wi * (yi - y_mean) * (yi - y_mean);
    }
    let weighted_r2 = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };
    Ok(SurrogateFit { weighted_r2, ..fit })
}

/// Indices of the `k` largest `|coefficient|`, ties to the lower index.
pub fn select_features(coefficients: &[f64], k: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..coefficients.len()).collect();
    order.sort_by(|&a, &b| coefficients[b].abs().total_cmp(&coefficients[a].abs()).then(a.cmp(&b)));
    order.truncate(k);
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_target_has_zero_slope() {
        let z = vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0], vec![0.0, 0.0]];
        let fit = fit_weighted_ridge(&z, &[0.7; 4], &[1.0, 0.5, 0.2, 0.9], 1.0).unwrap();
        assert!(fit.coefficients.iter().all(|c| c.abs() < 1e-14));
        assert!((fit.intercept - 0.7).abs() < 1e-14);
        assert_eq!(fit.weighted_r2, 1.0);
    }

    #[test]
    fn two_point_interpolation() {
        let fit = fit_weighted_ridge(&[vec![1.0], vec![0.0]], &[1.0, 0.0], &[1.0, 1.0], 0.0).unwrap();
        assert!((fit.coefficients[0] - 1.0).abs() < 1e-14);
        assert!(fit.intercept.abs() < 1e-14);
        assert!((fit.weighted_r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_design_without_ridge_is_singular() {
        let z = vec![vec![1.0]; 3];
        assert!(matches!(
            fit_weighted_ridge(&z, &[0.1, 0.2, 0.3], &[1.0; 3], 0.0),
            Err(Error::SingularFit)
        ));
        assert!(fit_weighted_ridge(&z, &[0.1, 0.2, 0.3], &[1.0; 3], 1.0).is_ok());
    }

    #[test]
    fn bad_inputs() {
        assert!(fit_weighted_ridge(&[], &[], &[], 1.0).is_err());
        assert!(fit_weighted_ridge(&[vec![1.0]], &[1.0], &[0.0], 1.0).is_err());
        assert!(fit_weighted_ridge(&[vec![1.0]], &[1.0], &[1.0], -1.0).is_err());
    }

    #[test]
    fn selection_order() {
        assert_eq!(select_features(&[0.3, -0.5, 0.1], 2), [1, 0]);
        assert_eq!(select_features(&[0.3, -0.5, 0.1], 10), [1, 0, 2]);
        assert_eq!(select_features(&[0.2, -0.2], 1), [0]);
    }
}
