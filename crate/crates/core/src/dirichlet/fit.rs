use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::DirichletError;

/// Least-squares fit of `log N − log x = c + a·log log x + b·log log log x`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FitReport {
    pub log_exp: f64,
    pub loglog_exp: f64,
    pub constant: f64,
    pub max_rel_residual: f64,
}

/// Fits the exponent of log x, and the exponent of log log x unless `fixed_loglog` is given.
///
/// Needs at least four rows spanning three decades, all with N > 0 and x > e^e.
pub fn fit_asymptotic(rows: &[(f64, f64)], fixed_loglog: Option<f64>) -> Result<FitReport, DirichletError> {
    let insufficient = |why: &str| Err(DirichletError::InsufficientData(why.to_string()));
    if rows.len() < 4 {
        return insufficient("need at least 4 rows");
    }
    let threshold = std::f64::consts::E.powf(std::f64::consts::E);
    if rows.iter().any(|&(x, n)| !(n > 0.0) || !(x > threshold)) {
        return insufficient("need N > 0 and x > e^e at every row");
    }
    let (lo, hi) = rows
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), &(x, _)| (lo.min(x), hi.max(x)));
    if hi / lo < 999.999 {
        return insufficient("rows must span at least three decades");
    }

    let cols = if fixed_loglog.is_some() { 2 } else { 3 };
    let mut a = DMatrix::<f64>::zeros(rows.len(), cols);
    let mut y = DVector::<f64>::zeros(rows.len());
    for (i, &(x, n)) in rows.iter().enumerate() {
        let l2 = x.ln().ln();
        let l3 = l2.ln();
        a[(i, 0)] = 1.0;
        a[(i, 1)] = l2;
        y[i] = n.ln() - x.ln();
        match fixed_loglog {
            Some(b) => y[i] -= b * l3,
            None => a[(i, 2)] = l3,
        }
    }
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    if !(smin > smax * 1e-12) {
        return insufficient("design matrix is degenerate");
    }
    let beta = svd
        .solve(&y, 1e-14)
        .map_err(|e| DirichletError::InsufficientData(e.to_string()))?;
    let fitted = &a * &beta;
    let max_rel_residual = rows
        .iter()
        .enumerate()
        .map(|(i, _)| ((fitted[i] - y[i]).exp() - 1.0).abs())
        .fold(0.0, f64::max);
    Ok(FitReport {
        constant: beta[0].exp(),
        log_exp: beta[1],
        loglog_exp: fixed_loglog.unwrap_or_else(|| beta[2]),
        max_rel_residual,
    })
}
