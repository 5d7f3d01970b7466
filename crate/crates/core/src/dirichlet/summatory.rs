use crate::arith::primes_below;

use super::DirichletError;

pub const SUMMATORY_CAP: u64 = 10_000_000;

const SEGMENT: u64 = 1 << 16;

/// Coefficient families for partial sums Σ_{n<x} a_n.
#[derive(Clone, Debug, PartialEq)]
pub enum Coefficients {
    /// a_n = 1.
    Ones,
    /// a_n = 2^ω(n) on squarefree n, 0 elsewhere.
    SquarefreeTwoOmega,
    /// Multiplicative on squarefree n with a(p) = weights[p mod m].
    ResidueWeights { m: u64, weights: Vec<f64> },
    /// Multiplicative on squarefree n with a(p) = weight · p / (p + shift).
    Shifted { weight: f64, shift: f64 },
}

impl Coefficients {
    fn at_prime(&self, p: u64) -> f64 {
        match self {
            Coefficients::Ones => 1.0,
            Coefficients::SquarefreeTwoOmega => 2.0,
            Coefficients::ResidueWeights { m, weights } => weights[(p % m) as usize],
            Coefficients::Shifted { weight, shift } => weight * p as f64 / (p as f64 + shift),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SummatoryRow {
    pub x: u64,
    /// Σ_{n<x} a_n.
    pub sum: f64,
    /// Σ_{n<x} a_n / n.
    pub harmonic: f64,
}

/// Partial sums at each checkpoint, accumulated in ascending n.
pub fn summatory_scan(coeffs: &Coefficients, checkpoints: &[u64]) -> Result<Vec<SummatoryRow>, DirichletError> {
    if checkpoints.is_empty() || checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(DirichletError::Checkpoints);
    }
    let x_max = *checkpoints.last().unwrap();
    if x_max > SUMMATORY_CAP {
        return Err(DirichletError::CapExceeded { x: x_max, cap: SUMMATORY_CAP });
    }
    if let Coefficients::ResidueWeights { m, weights } = coeffs {
        if *m == 0 || weights.len() as u64 != *m {
            return Err(DirichletError::InvalidArgument("need one weight per residue".into()));
        }
    }
    if let Coefficients::Shifted { shift, .. } = coeffs {
        if !(*shift > -2.0) {
            return Err(DirichletError::InvalidArgument("shift must exceed -2".into()));
        }
    }

    let root = (x_max as f64).sqrt() as u64 + 2;
    let small = primes_below(root);
    let mut rows = Vec::with_capacity(checkpoints.len());
    let (mut sum, mut harmonic) = (0.0f64, 0.0f64);
    let mut next = 0;
    let mut lo = 1u64;
    let mut rem = vec![0u64; SEGMENT as usize];
    let mut val = vec![0f64; SEGMENT as usize];
    while lo < x_max && next < checkpoints.len() {
        let hi = (lo + SEGMENT).min(x_max);
        let len = (hi - lo) as usize;
        for i in 0..len {
            rem[i] = lo + i as u64;
            val[i] = 1.0;
        }
        if !matches!(coeffs, Coefficients::Ones) {
            for &p in &small {
                let first = lo.div_ceil(p) * p;
                let mut n = first;
                while n < hi {
                    let i = (n - lo) as usize;
                    if rem[i] % p == 0 {
                        rem[i] /= p;
                        if rem[i] % p == 0 {
                            val[i] = 0.0;
                        } else {
                            val[i] *= coeffs.at_prime(p);
                        }
                    }
                    n += p;
                }
            }
            for i in 0..len {
                if rem[i] > 1 && val[i] != 0.0 {
                    val[i] *= coeffs.at_prime(rem[i]);
                }
            }
        }
        for i in 0..len {
            let n = lo + i as u64;
            while next < checkpoints.len() && checkpoints[next] <= n {
                rows.push(SummatoryRow { x: checkpoints[next], sum, harmonic });
                next += 1;
            }
            sum += val[i];
            harmonic += val[i] / n as f64;
        }
        lo = hi;
    }
    while next < checkpoints.len() {
        rows.push(SummatoryRow { x: checkpoints[next], sum, harmonic });
        next += 1;
    }
    Ok(rows)
}
