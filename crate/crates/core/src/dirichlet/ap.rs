use crate::arith::{gcd, phi};

use super::{DirichletError, PrimeSieve};

/// The residue class `n mod m`, with `gcd(m, n) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct APClass {
    m: u64,
    n: u64,
}

impl APClass {
    pub fn new(m: u64, n: u64) -> Result<Self, DirichletError> {
        if m == 0 || gcd(m, n % m) != 1 {
            return Err(DirichletError::BadResidue { m, n });
        }
        Ok(APClass { m, n: n % m })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn residue(&self) -> u64 {
        self.n
    }

    pub fn contains(&self, p: u64) -> bool {
        p % self.m == self.n
    }

    /// All classes coprime to `m`.
    pub fn all(m: u64) -> Vec<APClass> {
        (0..m)
            .filter(|&n| gcd(m, n) == 1)
            .map(|n| APClass { m, n })
            .collect()
    }
}

fn check_range(sieve: &PrimeSieve, x: u64) -> Result<(), DirichletError> {
    if x > sieve.limit() {
        Err(DirichletError::CapExceeded { x, cap: sieve.limit() })
    } else {
        Ok(())
    }
}

/// Primes `p < x` in the class.
pub fn primes_in_ap(sieve: &PrimeSieve, c: APClass, x: u64) -> Result<Vec<u64>, DirichletError> {
    check_range(sieve, x)?;
    Ok(sieve.below(x).iter().copied().filter(|&p| c.contains(p)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MertensRow {
    pub x: u64,
    /// Σ 1/p over primes p < x in the class.
    pub s: f64,
    /// S(x) − log log x / φ(m).
    pub constant: f64,
}

pub fn mertens_ap(
    sieve: &PrimeSieve,
    c: APClass,
    checkpoints: &[u64],
) -> Result<Vec<MertensRow>, DirichletError> {
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(DirichletError::Checkpoints);
    }
    let last = checkpoints.last().copied().unwrap_or(0);
    check_range(sieve, last)?;
    if checkpoints.first().is_some_and(|&x| x < 3) {
        return Err(DirichletError::InvalidArgument("checkpoints must be at least 3".into()));
    }
    let weight = 1.0 / phi(c.m) as f64;
    let mut rows = Vec::with_capacity(checkpoints.len());
    let mut s = 0.0;
    let mut primes = sieve.below(last).iter().copied().filter(|&p| c.contains(p)).peekable();
    for &x in checkpoints {
        while let Some(&p) = primes.peek() {
            if p >= x {
                break;
            }
            s += 1.0 / p as f64;
            primes.next();
        }
        let xf = x as f64;
        rows.push(MertensRow {
            x,
            s,
            constant: s - weight * xf.ln().ln(),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_in_classes() {
        let sieve = PrimeSieve::new(10_000);
        let c = APClass::new(4, 1).unwrap();
        assert_eq!(primes_in_ap(&sieve, c, 30).unwrap(), vec![5, 13, 17, 29]);
        assert_eq!(primes_in_ap(&sieve, APClass::new(1, 1).unwrap(), 10).unwrap().len(), 4);
        assert!(primes_in_ap(&sieve, APClass::new(4, 3).unwrap(), 3).unwrap().is_empty());
        assert_eq!(APClass::new(4, 2), Err(DirichletError::BadResidue { m: 4, n: 2 }));
        assert_eq!(APClass::new(1, 0).unwrap(), APClass::new(1, 1).unwrap());
    }

    #[test]
    fn classes_partition_the_primes() {
        let sieve = PrimeSieve::new(100_000);
        for m in [3u64, 4, 5, 8, 12, 30] {
            let total: usize = APClass::all(m)
                .into_iter()
                .map(|c| primes_in_ap(&sieve, c, 100_000).unwrap().len())
                .sum();
            let dividing = sieve.below(100_000).iter().filter(|&&p| m % p == 0).count();
            assert_eq!(total + dividing, sieve.below(100_000).len(), "m={m}");
        }
    }

    #[test]
    fn single_term_sum() {
        let sieve = PrimeSieve::new(100);
        let rows = mertens_ap(&sieve, APClass::new(1, 1).unwrap(), &[3]).unwrap();
        assert_eq!(rows[0].s, 0.5);
        assert!(mertens_ap(&sieve, APClass::new(1, 1).unwrap(), &[1000]).is_err());
    }
}
