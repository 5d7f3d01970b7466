use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, invariant_factors, lcm, valuation};
use crate::permgroup::Level;

use super::FieldCountError;

pub const DEFAULT_ORDER_CAP: u64 = 64;

/// A subgroup of an [`AbelianGroupSpec`], as a bitmask over element indices.
pub type Subgroup = u64;

/// A finite abelian group `Z/d1 × ... × Z/dk` with `d1 | d2 | ... | dk`.
///
/// Elements are indexed `0..order` in mixed radix, first factor least
/// significant; index 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupSpec {
    factors: Vec<u64>,
    order: u64,
}

impl AbelianGroupSpec {
    /// Normalizes any list of cyclic orders to invariant factors.
    pub fn new(cyclic_orders: &[u64]) -> Result<Self, FieldCountError> {
        let factors = invariant_factors(cyclic_orders);
        let order: u64 = factors.iter().product();
        if order < 2 {
            return Err(FieldCountError::Parse("trivial group".into()));
        }
        if order > DEFAULT_ORDER_CAP {
            return Err(FieldCountError::OrderTooLarge {
                order,
                cap: DEFAULT_ORDER_CAP,
            });
        }
        Ok(AbelianGroupSpec { factors, order })
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |a, &d| lcm(a, d))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order as usize
    }

    pub fn full(&self) -> Subgroup {
        if self.order == 64 {
            u64::MAX
        } else {
            (1u64 << self.order) - 1
        }
    }

    fn digits(&self, g: usize) -> impl Iterator<Item = u64> + '_ {
        let mut rest = g as u64;
        self.factors.iter().map(move |&d| {
            let x = rest % d;
            rest /= d;
            x
        })
    }

    fn from_digits(&self, digits: impl Iterator<Item = u64>) -> usize {
        let mut idx = 0u64;
        let mut stride = 1u64;
        for (x, &d) in digits.zip(&self.factors) {
            idx += (x % d) * stride;
            stride *= d;
        }
        idx as usize
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let digits: Vec<u64> = self.digits(a).zip(self.digits(b)).map(|(x, y)| x + y).collect();
        self.from_digits(digits.into_iter())
    }

    pub fn scale(&self, k: u64, g: usize) -> usize {
        let digits: Vec<u64> = self
            .digits(g)
            .zip(&self.factors)
            .map(|(x, &d)| (x * (k % d)) % d)
            .collect();
        self.from_digits(digits.into_iter())
    }

    pub fn element_order(&self, g: usize) -> u64 {
        self.digits(g)
            .zip(&self.factors)
            .fold(1, |acc, (x, &d)| lcm(acc, d / gcd(x, d)))
    }

    /// Subgroup generated by `gens`.
    pub fn span(&self, gens: &[usize]) -> Subgroup {
        let mut members = vec![0usize];
        let mut mask: Subgroup = 1;
        let mut i = 0;
        while i < members.len() {
            let m = members[i];
            for &g in gens {
                let y = self.add(m, g);
                if mask >> y & 1 == 0 {
                    mask |= 1 << y;
                    members.push(y);
                }
            }
            i += 1;
        }
        mask
    }

    /// `G[m]`, the elements killed by `m`.
    pub fn torsion(&self, m: u64) -> Subgroup {
        self.elements()
            .filter(|&g| m % self.element_order(g) == 0)
            .fold(0, |acc, g| acc | 1 << g)
    }

    /// Elements of `p`-power order.
    pub fn primary_part(&self, p: u64) -> Subgroup {
        self.elements()
            .filter(|&g| {
                let o = self.element_order(g);
                o == p.pow(valuation(o, p))
            })
            .fold(0, |acc, g| acc | 1 << g)
    }

    /// Ω(G, q^l) for the regular action, where e(g) is the order of g.
    pub fn omega(&self, q: u64, level: Level) -> Subgroup {
        self.elements()
            .filter(|&g| {
                let v = valuation(self.element_order(g), q);
                match level {
                    Level::Exact(l) => l >= 1 && v == l,
                    Level::Infinite => v >= 1,
                }
            })
            .fold(0, |acc, g| acc | 1 << g)
    }

    pub fn closed_under_invertible_powering(&self, set: Subgroup) -> bool {
        members(set).all(|g| {
            let o = self.element_order(g);
            (1..o)
                .filter(|&a| gcd(a, o) == 1)
                .all(|a| set >> self.scale(a, g) & 1 == 1)
        })
    }

    /// `|Hom(G, H)| = Π |H[d_i]|`.
    pub fn hom_count_into(&self, h: Subgroup) -> u128 {
        self.factors
            .iter()
            .map(|&d| (self.torsion(d) & h).count_ones() as u128)
            .product()
    }
}

/// Element indices in a subgroup mask.
pub fn members(mask: Subgroup) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

/// `C2xC4`-style names; each factor is `C<m>`.
impl FromStr for AbelianGroupSpec {
    type Err = FieldCountError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let orders = s
            .trim()
            .split('x')
            .map(|part| {
                part.strip_prefix('C')
                    .and_then(|m| m.parse::<u64>().ok())
                    .filter(|&m| m >= 1)
                    .ok_or_else(|| FieldCountError::Parse(format!("bad abelian group `{s}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        AbelianGroupSpec::new(&orders)
    }
}

impl fmt::Display for AbelianGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|d| format!("C{d}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}
