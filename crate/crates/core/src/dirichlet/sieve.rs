use crate::arith::primes_below;

/// Primes below a fixed limit.
#[derive(Clone, Debug)]
pub struct PrimeSieve {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(limit: u64) -> Self {
        PrimeSieve {
            limit,
            primes: primes_below(limit),
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Primes below `x` (clipped to the sieve limit).
    pub fn below(&self, x: u64) -> &[u64] {
        &self.primes[..self.primes.partition_point(|&p| p < x)]
    }
}

/// Primes in `[lo, hi)` by a segmented sieve over base primes up to √hi.
pub fn segmented_primes(lo: u64, hi: u64) -> Vec<u64> {
    if hi <= lo {
        return Vec::new();
    }
    let root = (hi as f64).sqrt() as u64 + 2;
    let base = primes_below(root);
    let lo = lo.max(2);
    let mut is_prime = vec![true; (hi - lo) as usize];
    for &p in &base {
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut m = start;
        while m < hi {
            is_prime[(m - lo) as usize] = false;
            m += p;
        }
    }
    is_prime
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| lo + i as u64)
        .collect()
}
