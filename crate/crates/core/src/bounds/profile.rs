use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, is_prime, prime_divisors};
use crate::permgroup::{parse_group_spec, PermGroup, Permutation};
use crate::quadratic::is_fundamental;

use super::BoundsError;

/// How a ramified prime is described: ramification indices, or a tame inertia generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ramification {
    Exponents(Vec<u64>),
    InertiaClass(Permutation),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamifiedPrimeRecord {
    pub p: u64,
    pub ramification: Ramification,
}

impl RamifiedPrimeRecord {
    pub fn exponents(p: u64, exponents: Vec<u64>) -> Result<Self, BoundsError> {
        check_prime(p)?;
        if exponents.is_empty() || exponents.contains(&0) {
            return Err(BoundsError::InvalidRecord { p, reason: "exponents must be positive".into() });
        }
        Ok(RamifiedPrimeRecord { p, ramification: Ramification::Exponents(exponents) })
    }

    pub fn inertia(p: u64, class: Permutation) -> Result<Self, BoundsError> {
        check_prime(p)?;
        Ok(RamifiedPrimeRecord { p, ramification: Ramification::InertiaClass(class) })
    }

    pub fn inertia_class(&self) -> Option<&Permutation> {
        match &self.ramification {
            Ramification::InertiaClass(c) => Some(c),
            Ramification::Exponents(_) => None,
        }
    }
}

fn check_prime(p: u64) -> Result<(), BoundsError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(BoundsError::InvalidRecord { p, reason: "not prime".into() })
    }
}

/// Ramification data for a degree-n field, one record per ramified prime.
#[derive(Clone, Debug)]
pub struct RamificationProfile {
    degree: u64,
    primes: Vec<RamifiedPrimeRecord>,
    group: Option<PermGroup>,
    group_name: Option<String>,
    abelian_rank: BTreeMap<u64, u32>,
}

impl RamificationProfile {
    pub fn new(degree: u64) -> Result<Self, BoundsError> {
        if degree < 2 {
            return Err(BoundsError::InvalidProfile(format!("degree {degree} < 2")));
        }
        Ok(RamificationProfile {
            degree,
            primes: Vec::new(),
            group: None,
            group_name: None,
            abelian_rank: BTreeMap::new(),
        })
    }

    /// Attaches a group spec such as `D4@S4`; its degree must match.
    pub fn with_group(mut self, spec: &str) -> Result<Self, BoundsError> {
        let parsed = parse_group_spec(spec)?;
        if parsed.group.degree() as u64 != self.degree {
            return Err(BoundsError::InvalidProfile(format!(
                "group {} has degree {}, profile has degree {}",
                parsed.name,
                parsed.group.degree(),
                self.degree
            )));
        }
        self.group = Some(parsed.group);
        self.group_name = Some(parsed.name);
        Ok(self)
    }

    /// Records rk_q Gal(K₀/ℚ) for the maximal abelian subextension K₀.
    pub fn with_abelian_rank(mut self, q: u64, rank: u32) -> Self {
        self.abelian_rank.insert(q, rank);
        self
    }

    pub fn push(&mut self, rec: RamifiedPrimeRecord) -> Result<(), BoundsError> {
        if self.primes.iter().any(|r| r.p == rec.p) {
            return Err(BoundsError::InvalidRecord { p: rec.p, reason: "listed twice".into() });
        }
        match &rec.ramification {
            Ramification::Exponents(es) => {
                if es.iter().any(|&e| e > self.degree) || es.iter().fold(0, |g, &e| gcd(g, e)) > self.degree {
                    return Err(BoundsError::InvalidRecord {
                        p: rec.p,
                        reason: format!("exponent exceeds degree {}", self.degree),
                    });
                }
            }
            Ramification::InertiaClass(c) => {
                let group = self.group.as_ref().ok_or(BoundsError::MissingGroup)?;
                if !group.contains(c) {
                    return Err(BoundsError::InvalidRecord { p: rec.p, reason: format!("{c} is not in the group") });
                }
            }
        }
        self.primes.push(rec);
        Ok(())
    }

    /// The profile of ℚ(√d) for a fundamental discriminant d: every ramified prime has e = 2, and K₀ = K.
    pub fn quadratic(d: i64) -> Result<Self, BoundsError> {
        if !is_fundamental(d) {
            return Err(BoundsError::InvalidProfile(format!("{d} is not a fundamental discriminant")));
        }
        let mut profile = RamificationProfile::new(2)?.with_abelian_rank(2, 1);
        for p in prime_divisors(d.unsigned_abs()) {
            profile.push(RamifiedPrimeRecord::exponents(p, vec![2])?)?;
        }
        Ok(profile)
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn primes(&self) -> &[RamifiedPrimeRecord] {
        &self.primes
    }

    pub fn group(&self) -> Option<&PermGroup> {
        self.group.as_ref()
    }

    pub fn group_name(&self) -> Option<&str> {
        self.group_name.as_deref()
    }

    pub fn abelian_rank(&self, q: u64) -> Option<u32> {
        self.abelian_rank.get(&q).copied()
    }
}

/// Line format:
///
/// ```text
/// degree: 3
/// group: S3
/// abelian_rank: 2=1
/// 7: 3
/// 13: 2,1
/// 19: class=(1 2 3)
/// ```
///
/// `#` starts a comment. `degree` must come first; `group` must precede class records.
impl FromStr for RamificationProfile {
    type Err = BoundsError;

    fn from_str(text: &str) -> Result<Self, BoundsError> {
        let mut profile: Option<RamificationProfile> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |msg: String| BoundsError::Parse { line: line_no, msg };
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once(':').ok_or_else(|| err(format!("expected `key: value`, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "degree" {
                if profile.is_some() {
                    return Err(err("degree given twice".into()));
                }
                let n = value.parse().map_err(|_| err(format!("bad degree `{value}`")))?;
                profile = Some(RamificationProfile::new(n)?);
                continue;
            }
            let prof = profile.take().ok_or_else(|| err("`degree:` must come first".into()))?;
            profile = Some(match key {
                "group" => prof.with_group(value)?,
                "abelian_rank" => {
                    let (q, r) = value.split_once('=').ok_or_else(|| err(format!("expected `q=rank`, got `{value}`")))?;
                    let q = q.trim().parse().map_err(|_| err(format!("bad prime `{q}`")))?;
                    let r = r.trim().parse().map_err(|_| err(format!("bad rank `{r}`")))?;
                    prof.with_abelian_rank(q, r)
                }
                _ => {
                    let p: u64 = key.parse().map_err(|_| err(format!("unknown key `{key}`")))?;
                    let rec = if let Some(class) = value.strip_prefix("class=") {
                        let class = Permutation::parse_cycles(class, prof.degree as usize)?;
                        RamifiedPrimeRecord::inertia(p, class)?
                    } else {
                        let es = value
                            .split(',')
                            .map(|e| e.trim().parse::<u64>().map_err(|_| err(format!("bad exponent `{e}`"))))
                            .collect::<Result<Vec<_>, _>>()?;
                        RamifiedPrimeRecord::exponents(p, es)?
                    };
                    let mut prof = prof;
                    prof.push(rec)?;
                    prof
                }
            });
        }
        profile.ok_or_else(|| BoundsError::Parse { line: 0, msg: "missing `degree:` line".into() })
    }
}

impl fmt::Display for RamificationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree: {}", self.degree)?;
        if let Some(name) = &self.group_name {
            writeln!(f, "group: {name}")?;
        }
        for (q, r) in &self.abelian_rank {
            writeln!(f, "abelian_rank: {q}={r}")?;
        }
        for rec in &self.primes {
            match &rec.ramification {
                Ramification::Exponents(es) => {
                    let es: Vec<String> = es.iter().map(u64::to_string).collect();
                    writeln!(f, "{}: {}", rec.p, es.join(","))?;
                }
                Ramification::InertiaClass(c) => writeln!(f, "{}: class={c}", rec.p)?,
            }
        }
        Ok(())
    }
}
