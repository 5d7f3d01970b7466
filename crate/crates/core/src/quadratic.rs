//! Imaginary quadratic fields through reduced binary quadratic forms.
//!
//! Class numbers come from counting reduced forms and 2-ranks from counting
//! ambiguous reduced forms. Neither count looks at the factorization of the
//! discriminant, so the genus inequality check below is not circular.

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{factorize, factorize_with, is_squarefree, spf_sieve};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadraticError {
    #[error("{0} is not an imaginary fundamental discriminant")]
    NotFundamental(i64),
    #[error("no fields below x = {0}")]
    EmptyRange(u64),
    #[error("checkpoints must be strictly ascending")]
    Checkpoints,
}

/// Whether `d` is the discriminant of a quadratic field (either sign).
pub fn is_fundamental(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// A negative fundamental discriminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FundamentalDiscriminant(i64);

impl FundamentalDiscriminant {
    pub fn new(d: i64) -> Result<Self, QuadraticError> {
        if d < 0 && is_fundamental(d) {
            Ok(FundamentalDiscriminant(d))
        } else {
            Err(QuadraticError::NotFundamental(d))
        }
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn abs(self) -> u64 {
        self.0.unsigned_abs()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ReducedForm {
    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        a > 0 && b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }

    /// Ambiguous forms are the ones of order dividing 2 in the class group.
    pub fn is_ambiguous(&self) -> bool {
        self.b == 0 || self.a == self.b || self.a == self.c
    }
}

/// All reduced forms of discriminant `d < 0`, sorted by `(a, b)`.
pub fn reduced_forms(d: i64) -> Vec<ReducedForm> {
    assert!(d < 0 && d.rem_euclid(4) <= 1, "bad discriminant {d}");
    let n = -d;
    let mut out = Vec::new();
    let mut a = 1i64;
    // a ≤ √(|D|/3)  ⇔  3a² ≤ |D|
    while 3 * a * a <= n {
        for b in -a + 1..=a {
            if (b - d).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let f = ReducedForm { a, b, c: num / (4 * a) };
            if f.is_reduced() {
                out.push(f);
            }
        }
        a += 1;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticFieldRecord {
    pub d: i64,
    /// Class number.
    pub h: u64,
    /// 2-rank of the class group.
    pub rk2: u32,
    /// Product of ramified primes.
    pub p: u64,
    pub omega: u32,
}

pub fn class_group_data(d: FundamentalDiscriminant) -> QuadraticFieldRecord {
    let forms = reduced_forms(d.value());
    let ambiguous = forms.iter().filter(|f| f.is_ambiguous()).count() as u64;
    debug_assert!(ambiguous.is_power_of_two());
    let primes = factorize(d.abs());
    QuadraticFieldRecord {
        d: d.value(),
        h: forms.len() as u64,
        rk2: ambiguous.trailing_zeros(),
        p: primes.iter().map(|&(p, _)| p).product(),
        omega: primes.len() as u32,
    }
}

/// ω − 1 ≤ rk₂ ≤ ω.
pub fn genus_check(rec: &QuadraticFieldRecord) -> bool {
    rec.rk2 + 1 >= rec.omega && rec.rk2 <= rec.omega
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiscOrder {
    /// By |D|.
    AbsDisc,
    /// By product of ramified primes, ties by |D|.
    Radical,
}

/// A fundamental discriminant of either sign together with its radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscEntry {
    pub d: i64,
    pub radical: u64,
}

impl DiscEntry {
    fn key(&self, order: DiscOrder) -> (u64, u64, bool) {
        let primary = match order {
            DiscOrder::AbsDisc => self.d.unsigned_abs(),
            DiscOrder::Radical => self.radical,
        };
        // imaginary before real at equal |D|
        (primary, self.d.unsigned_abs(), self.d > 0)
    }
}

/// Fundamental discriminants with key below `x`, sorted by key; `imaginary_only`
/// drops the real ones.
pub fn enumerate_discriminants_signed(order: DiscOrder, x: u64, imaginary_only: bool) -> Vec<DiscEntry> {
    if x <= 2 {
        return Vec::new();
    }
    // |D| ≤ 4·rad(|D|)
    let limit = match order {
        DiscOrder::AbsDisc => x,
        DiscOrder::Radical => 4 * x,
    } as usize;
    let spf = spf_sieve(limit);
    let mut out = Vec::new();
    for n in 3..limit {
        let signs: &[i64] = if imaginary_only { &[-1] } else { &[-1, 1] };
        for &s in signs {
            let d = s * n as i64;
            if let Some(radical) = fundamental_radical(&spf, d) {
                let e = DiscEntry { d, radical };
                if e.key(order).0 < x {
                    out.push(e);
                }
            }
        }
    }
    out.sort_by_key(|e| e.key(order));
    out
}

/// Imaginary fundamental discriminants with |D| < x or rad(|D|) < x.
pub fn enumerate_discriminants(order: DiscOrder, x: u64) -> Vec<FundamentalDiscriminant> {
    enumerate_discriminants_signed(order, x, true)
        .into_iter()
        .map(|e| FundamentalDiscriminant(e.d))
        .collect()
}

/// Number of quadratic fields, real and imaginary, with product of ramified primes below `x`.
pub fn count_fields_by_radical(x: u64) -> u64 {
    enumerate_discriminants_signed(DiscOrder::Radical, x, false).len() as u64
}

fn fundamental_radical(spf: &[u32], d: i64) -> Option<u64> {
    let n = d.unsigned_abs() as usize;
    let squarefree_radical = |m: usize| -> Option<u64> {
        let f = factorize_with(spf, m);
        if f.iter().all(|&(_, e)| e == 1) {
            Some(f.iter().map(|&(p, _)| p).product())
        } else {
            None
        }
    };
    match d.rem_euclid(4) {
        1 => squarefree_radical(n),
        0 => {
            let m = d / 4;
            if !matches!(m.rem_euclid(4), 2 | 3) {
                return None;
            }
            let r = squarefree_radical(m.unsigned_abs() as usize)?;
            Some(if r % 2 == 0 { r } else { 2 * r })
        }
        _ => None,
    }
}

/// Records for all imaginary fields in the given order, computed in parallel.
pub fn records(order: DiscOrder, x: u64) -> Vec<QuadraticFieldRecord> {
    enumerate_discriminants(order, x)
        .into_par_iter()
        .map(class_group_data)
        .collect()
}

/// Number of ambiguous reduced forms for every negative discriminant `-n`, `n < limit`.
///
/// Built by enumerating the three ambiguous families directly rather than
/// discriminant by discriminant: `(a, 0, c)` with `a ≤ c`, `(a, a, c)` with
/// `a ≤ c`, and `(a, b, a)` with `0 < b < a`.
pub struct AmbiguousFormTable {
    counts: Vec<u16>,
}

impl AmbiguousFormTable {
    pub fn build(limit: usize) -> Self {
        let mut counts = vec![0u16; limit];
        let mut a = 1usize;
        while 4 * a * a < limit {
            let mut c = a;
            while 4 * a * c < limit {
                counts[4 * a * c] += 1;
                c += 1;
            }
            a += 1;
        }
        let mut a = 1usize;
        while 3 * a * a < limit {
            let mut c = a;
            while 4 * a * c - a * a < limit {
                counts[4 * a * c - a * a] += 1;
                c += 1;
            }
            for b in 1..a {
                let n = 4 * a * a - b * b;
                if n < limit {
                    counts[n] += 1;
                }
            }
            a += 1;
        }
        AmbiguousFormTable { counts }
    }

    pub fn limit(&self) -> usize {
        self.counts.len()
    }

    /// 2-rank of the class group of discriminant `d`; requires `|d| < limit`.
    pub fn rk2(&self, d: FundamentalDiscriminant) -> u32 {
        let c = self.counts[d.abs() as usize];
        debug_assert!(c.is_power_of_two(), "D = {}", d.value());
        c.trailing_zeros()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentRow {
    pub x: u64,
    pub n: u64,
    pub e_hat: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbabilityRow {
    pub x: u64,
    pub n: u64,
    pub p_hat: f64,
}

fn check_ascending(checkpoints: &[u64]) -> Result<(), QuadraticError> {
    if checkpoints.is_empty() || checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        Err(QuadraticError::Checkpoints)
    } else {
        Ok(())
    }
}

/// `(key, rk2)` for every imaginary field with key below the last checkpoint.
fn keyed_ranks(order: DiscOrder, checkpoints: &[u64]) -> Result<Vec<(u64, u32)>, QuadraticError> {
    check_ascending(checkpoints)?;
    let x_max = *checkpoints.last().unwrap();
    let entries = enumerate_discriminants_signed(order, x_max, true);
    let limit = entries.iter().map(|e| e.d.unsigned_abs()).max().unwrap_or(0) as usize + 1;
    let table = AmbiguousFormTable::build(limit);
    Ok(entries
        .iter()
        .map(|e| {
            let key = match order {
                DiscOrder::AbsDisc => e.d.unsigned_abs(),
                DiscOrder::Radical => e.radical,
            };
            (key, table.rk2(FundamentalDiscriminant(e.d)))
        })
        .collect())
}

fn cumulative<T>(
    rows: &[(u64, u32)],
    checkpoints: &[u64],
    mut emit: impl FnMut(u64, &[(u64, u32)]) -> T,
) -> Result<Vec<T>, QuadraticError> {
    checkpoints
        .iter()
        .map(|&x| {
            let upto = rows.partition_point(|&(k, _)| k < x);
            if upto == 0 {
                Err(QuadraticError::EmptyRange(x))
            } else {
                Ok(emit(x, &rows[..upto]))
            }
        })
        .collect()
}

/// Empirical mean of 2^{rk₂} over imaginary fields below each checkpoint.
pub fn moment_scan(order: DiscOrder, checkpoints: &[u64]) -> Result<Vec<MomentRow>, QuadraticError> {
    let rows = keyed_ranks(order, checkpoints)?;
    cumulative(&rows, checkpoints, |x, rs| {
        let total: f64 = rs.iter().map(|&(_, r)| (1u64 << r) as f64).sum();
        MomentRow {
            x,
            n: rs.len() as u64,
            e_hat: total / rs.len() as f64,
        }
    })
}

/// Empirical probability of rk₂ ≤ r over imaginary fields below each checkpoint.
pub fn rank_probability_scan(
    order: DiscOrder,
    checkpoints: &[u64],
    r: u32,
) -> Result<Vec<ProbabilityRow>, QuadraticError> {
    let rows = keyed_ranks(order, checkpoints)?;
    cumulative(&rows, checkpoints, |x, rs| {
        let hits = rs.iter().filter(|&&(_, k)| k <= r).count();
        ProbabilityRow {
            x,
            n: rs.len() as u64,
            p_hat: hits as f64 / rs.len() as f64,
        }
    })
}
