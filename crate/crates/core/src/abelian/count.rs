use rayon::prelude::*;

use crate::arith::{gcd, primes_below};

use super::budget::{local_budget, LocalHomBudget};
use super::group::{members, AbelianGroupSpec, Subgroup};
use super::lattice::SubgroupLattice;
use super::FieldCountError;

/// Upper bound on the number of tame ramified primes tracked per support.
pub const MAX_TAME: usize = 16;

type Poly = [i128; MAX_TAME];

/// How "inertia meets Ω" is read for a tame prime with cyclic inertia group I.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InertiaSemantics {
    /// I ∩ Ω ≠ ∅.
    SubgroupMeets,
    /// A generator of I lies in Ω.
    GeneratorIn,
}

/// Default bound on x: 10^7 for |G| ≤ 3, 10^6 up to order 7, 10^5 beyond.
pub fn default_cap(order: u64) -> u64 {
    match order {
        0..=3 => 10_000_000,
        4..=7 => 1_000_000,
        _ => 100_000,
    }
}

/// Number of G-extensions (pairs (K, ψ)) with product of ramified primes `n`
/// and exactly `r` tame primes whose inertia meets Ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldCountRecord {
    pub n: u64,
    pub r: u32,
    pub count: u128,
}

/// Cumulative counts for one checkpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub x: u64,
    /// Pairs with P(K) < x, by r.
    pub by_r: Vec<u128>,
    pub total: u128,
    aut: u128,
}

impl CountRow {
    pub fn pairs(&self, r: u32) -> u128 {
        self.by_r.get(r as usize).copied().unwrap_or(0)
    }

    /// Field count, i.e. pairs divided by |Aut(G)|; `None` if the division is not exact,
    /// which can only happen when Ω is not stable under automorphisms.
    pub fn fields(&self, r: u32) -> Option<u128> {
        let p = self.pairs(r);
        (p % self.aut == 0).then_some(p / self.aut)
    }

    pub fn total_fields(&self) -> u128 {
        self.total / self.aut
    }

    pub fn ratio(&self, r: u32) -> Option<f64> {
        (self.total > 0).then(|| self.pairs(r) as f64 / self.total as f64)
    }
}

/// Exact counter of abelian G-extensions of ℚ by product of ramified primes.
///
/// Class field theory identifies pairs (K, ψ) with continuous surjections
/// `Π_p Z_p^* → G`. A prime ramifies iff its local component is nontrivial.
/// Joint surjectivity is imposed by Möbius inversion over the subgroup lattice,
/// and r is tracked by a polynomial in t per subgroup.
#[derive(Clone, Debug)]
pub struct FieldCounter {
    group: AbelianGroupSpec,
    omega: Subgroup,
    semantics: InertiaSemantics,
    active: Vec<(Subgroup, i64)>,
    aut: u128,
    /// Budgets by gcd(p − 1, exponent) for tame primes: per active subgroup, (c, b).
    tame: Vec<(u64, Vec<(i128, i128)>)>,
    wild: Vec<(u64, Vec<(i128, i128)>)>,
    cap: u64,
}

impl FieldCounter {
    pub fn new(
        group: AbelianGroupSpec,
        omega: Subgroup,
        semantics: InertiaSemantics,
    ) -> Result<Self, FieldCountError> {
        if omega & !group.full() != 0 || !group.closed_under_invertible_powering(omega) {
            return Err(FieldCountError::NotClosed);
        }
        let lattice = SubgroupLattice::build(&group);
        let active: Vec<(Subgroup, i64)> = lattice.nonzero().collect();
        let aut = lattice.automorphism_count(&group);
        let mut counter = FieldCounter {
            cap: default_cap(group.order()),
            group,
            omega,
            semantics,
            active,
            aut,
            tame: Vec::new(),
            wild: Vec::new(),
        };
        let e = counter.group.exponent();
        for d in (2..=e).filter(|d| e % d == 0) {
            // any prime p ≡ 1 mod d with gcd(p − 1, e) = d has the same budget;
            // build it from the torsion directly
            let budget = counter.tame_budget_for(d);
            counter.tame.push((d, counter.split(&budget)));
        }
        for p in crate::arith::prime_divisors(counter.group.order()) {
            let budget = local_budget(p, &counter.group)?;
            let split = counter.split(&budget);
            counter.wild.push((p, split));
        }
        Ok(counter)
    }

    /// Counter with Ω = ∅, so every field has r = 0.
    pub fn total(group: AbelianGroupSpec) -> Result<Self, FieldCountError> {
        Self::new(group, 0, InertiaSemantics::SubgroupMeets)
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn group(&self) -> &AbelianGroupSpec {
        &self.group
    }

    pub fn automorphism_count(&self) -> u128 {
        self.aut
    }

    fn tame_budget_for(&self, d: u64) -> LocalHomBudget {
        let mut per_image = std::collections::BTreeMap::new();
        for h in members(self.group.torsion(d)).filter(|&h| h != 0) {
            *per_image.entry(self.group.span(&[h])).or_insert(0u64) += 1;
        }
        LocalHomBudget::from_parts(0, false, per_image)
    }

    fn meets(&self, image: Subgroup) -> bool {
        match self.semantics {
            InertiaSemantics::SubgroupMeets => image & self.omega != 0,
            InertiaSemantics::GeneratorIn => {
                members(self.omega).any(|w| self.group.span(&[w]) == image)
            }
        }
    }

    /// Per active subgroup H: (maps into H not counted by r, maps into H counted by r).
    fn split(&self, budget: &LocalHomBudget) -> Vec<(i128, i128)> {
        self.active
            .iter()
            .map(|&(h, _)| {
                let mut c = 0i128;
                let mut b = 0i128;
                for (&image, &n) in budget.per_image() {
                    if image & h != image {
                        continue;
                    }
                    if !budget.wild && self.meets(image) {
                        b += n as i128;
                    } else {
                        c += n as i128;
                    }
                }
                (c, b)
            })
            .collect()
    }

    /// Primes below `x` that can ramify, each with its budget split.
    fn ramifiable_primes(&self, x: u64) -> Vec<(u64, &[(i128, i128)])> {
        let e = self.group.exponent();
        let full = 0; // index of G itself among active subgroups
        debug_assert_eq!(self.active[full].0, self.group.full());
        primes_below(x)
            .into_iter()
            .filter_map(|p| {
                let split: &[(i128, i128)] = if let Some((_, s)) = self.wild.iter().find(|(q, _)| *q == p) {
                    s
                } else {
                    let d = gcd(p - 1, e);
                    if d == 1 {
                        return None;
                    }
                    &self.tame.iter().find(|(dd, _)| *dd == d)?.1
                };
                let (c, b) = split[full];
                (c + b > 0).then_some((p, split))
            })
            .collect()
    }

    fn check_cap(&self, x: u64) -> Result<(), FieldCountError> {
        if x > self.cap {
            Err(FieldCountError::CapExceeded { x, cap: self.cap })
        } else {
            Ok(())
        }
    }

    fn combine(&self, polys: &[Poly], deg: usize) -> Poly {
        let mut out = [0i128; MAX_TAME];
        for (poly, &(_, mu)) in polys.iter().zip(&self.active) {
            for r in 0..=deg {
                out[r] += mu as i128 * poly[r];
            }
        }
        debug_assert!(out.iter().all(|&v| v >= 0));
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs<F: FnMut(u64, &Poly, usize)>(
        &self,
        primes: &[(u64, &[(i128, i128)])],
        n: u64,
        start: usize,
        polys: &[Poly],
        deg: usize,
        x: u64,
        emit: &mut F,
    ) {
        for j in start..primes.len() {
            let (p, split) = primes[j];
            let m = match n.checked_mul(p) {
                Some(m) if m < x => m,
                _ => break,
            };
            let (next, next_deg) = extend(polys, deg, split);
            emit(m, &self.combine(&next, next_deg), next_deg);
            self.dfs(primes, m, j + 1, &next, next_deg, x, emit);
        }
    }

    fn root(&self) -> Vec<Poly> {
        let mut one = [0i128; MAX_TAME];
        one[0] = 1;
        vec![one; self.active.len()]
    }

    /// Calls `f(n, counts_by_r)` for every n < x with a nonzero count, in DFS order.
    pub fn for_each_support<F: FnMut(u64, &[u128])>(&self, x: u64, mut f: F) -> Result<(), FieldCountError> {
        self.check_cap(x)?;
        let primes = self.ramifiable_primes(x);
        let mut emit = |n: u64, counts: &Poly, deg: usize| {
            if counts.iter().any(|&c| c != 0) {
                let v: Vec<u128> = counts[..=deg].iter().map(|&c| c as u128).collect();
                f(n, &v);
            }
        };
        self.dfs(&primes, 1, 0, &self.root(), 0, x, &mut emit);
        Ok(())
    }

    /// Per (n, r) records for n < x, sorted by n then r.
    pub fn records(&self, x: u64) -> Result<Vec<FieldCountRecord>, FieldCountError> {
        let mut out = Vec::new();
        self.for_each_support(x, |n, counts| {
            for (r, &count) in counts.iter().enumerate() {
                if count > 0 {
                    out.push(FieldCountRecord { n, r: r as u32, count });
                }
            }
        })?;
        out.sort_by_key(|rec| (rec.n, rec.r));
        Ok(out)
    }

    /// Cumulative counts at each checkpoint, summed in parallel over the smallest ramified prime.
    pub fn count_table(&self, checkpoints: &[u64]) -> Result<Vec<CountRow>, FieldCountError> {
        if checkpoints.is_empty() || checkpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FieldCountError::Checkpoints);
        }
        let x_max = *checkpoints.last().unwrap();
        self.check_cap(x_max)?;
        let primes = self.ramifiable_primes(x_max);
        let root = self.root();
        let zero = || vec![[0i128; MAX_TAME]; checkpoints.len()];
        let buckets = (0..primes.len())
            .into_par_iter()
            .fold(zero, |mut acc, j| {
                let (p, split) = primes[j];
                let (polys, deg) = extend(&root, 0, split);
                let mut emit = |n: u64, counts: &Poly, _deg: usize| {
                    let b = checkpoints.partition_point(|&c| c <= n);
                    for (slot, &c) in acc[b].iter_mut().zip(counts) {
                        *slot += c;
                    }
                };
                emit(p, &self.combine(&polys, deg), deg);
                self.dfs(&primes, p, j + 1, &polys, deg, x_max, &mut emit);
                acc
            })
            .reduce(zero, |mut a, b| {
                for (x, y) in a.iter_mut().zip(&b) {
                    for (s, t) in x.iter_mut().zip(y) {
                        *s += t;
                    }
                }
                a
            });

        let mut running = [0i128; MAX_TAME];
        Ok(checkpoints
            .iter()
            .zip(&buckets)
            .map(|(&x, bucket)| {
                for (s, t) in running.iter_mut().zip(bucket) {
                    *s += t;
                }
                let last = running.iter().rposition(|&c| c != 0).unwrap_or(0);
                let by_r: Vec<u128> = running[..=last].iter().map(|&c| c as u128).collect();
                CountRow {
                    x,
                    total: by_r.iter().sum(),
                    by_r,
                    aut: self.aut,
                }
            })
            .collect())
    }
}

/// Multiplies every subgroup polynomial by `c + b·t`.
fn extend(polys: &[Poly], deg: usize, split: &[(i128, i128)]) -> (Vec<Poly>, usize) {
    let tracks = split.iter().any(|&(_, b)| b != 0);
    let new_deg = if tracks { deg + 1 } else { deg };
    assert!(new_deg < MAX_TAME, "too many tame primes");
    let next = polys
        .iter()
        .zip(split)
        .map(|(poly, &(c, b))| {
            let mut out = [0i128; MAX_TAME];
            for r in 0..=deg {
                out[r] += poly[r] * c;
                if tracks {
                    out[r + 1] += poly[r] * b;
                }
            }
            out
        })
        .collect();
    (next, new_deg)
}

/// Pairs (K, ψ) with product of ramified primes below `x`.
pub fn count_fields_total(group: &AbelianGroupSpec, x: u64) -> Result<u128, FieldCountError> {
    if x <= 2 {
        return Ok(0);
    }
    let counter = FieldCounter::total(group.clone())?;
    Ok(counter.count_table(&[x])?[0].total)
}

/// Per (n, r) pair counts for n < x.
pub fn count_fields_exact(
    group: &AbelianGroupSpec,
    omega: Subgroup,
    semantics: InertiaSemantics,
    x: u64,
) -> Result<Vec<FieldCountRecord>, FieldCountError> {
    FieldCounter::new(group.clone(), omega, semantics)?.records(x)
}

/// `(x, N(Ω, r; x) / N(x))` per checkpoint.
pub fn ratio_trend(
    group: &AbelianGroupSpec,
    omega: Subgroup,
    r: u32,
    checkpoints: &[u64],
    semantics: InertiaSemantics,
) -> Result<Vec<(u64, f64)>, FieldCountError> {
    let rows = FieldCounter::new(group.clone(), omega, semantics)?.count_table(checkpoints)?;
    rows.iter()
        .map(|row| {
            row.ratio(r)
                .map(|v| (row.x, v))
                .ok_or(FieldCountError::EmptyRange(row.x))
        })
        .collect()
}
