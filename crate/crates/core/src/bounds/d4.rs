use num_rational::Ratio;
use serde::Serialize;

use crate::permgroup::{
    closed_under_conjugation, closed_under_invertible_powering, omega_set, parse_group_spec, Level, OmegaSet,
    Permutation,
};

use super::{BoundsError, RamificationProfile};

/// Tallies |{p ≠ 2 : I(p) ∩ Ωᵢ ≠ ∅}| for Ω₁..Ω₄ and the bounds built from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct D4Report {
    pub tallies: [u64; 4],
    pub lower_bounds_raw: [i64; 4],
    pub lower_bounds: [i64; 4],
    /// Upper bounds, present for Ω₁ and Ω₄ only.
    pub upper_bounds: [Option<u64>; 4],
}

/// Ω₁..Ω₄ inside the canonical D4@S4: Ω₂ = Ω(D₄,2^∞), Ω₃ = {σ²}, Ω₁ = Ω₂ ∖ Ω₃, Ω₄ = the 4-cycles.
pub fn d4_omegas() -> [OmegaSet; 4] {
    let group = parse_group_spec("D4@S4").expect("canonical D4").group;
    let omega2 = omega_set(&group, 2, Level::Infinite).expect("2 is prime");
    let sigma = Permutation::parse_cycles("(1 2 3 4)", 4).expect("4-cycle");
    let centre: OmegaSet = [sigma.pow(2)].into_iter().collect();
    let omega1: OmegaSet = omega2.difference(&centre).cloned().collect();
    let omega4: OmegaSet = [sigma.clone(), sigma.pow(3)].into_iter().collect();
    [omega1, omega2, centre, omega4]
}

pub fn d4_bounds(profile: &RamificationProfile) -> Result<D4Report, BoundsError> {
    let canonical = parse_group_spec("D4@S4")?.group;
    let group = profile.group().ok_or(BoundsError::MissingGroup)?;
    if group.elements() != canonical.elements() {
        return Err(BoundsError::WrongGroup("D4@S4".into()));
    }
    let omegas = d4_omegas();
    let mut tallies = [0u64; 4];
    for rec in profile.primes().iter().filter(|r| r.p != 2) {
        let class = rec.inertia_class().ok_or(BoundsError::NeedsInertiaClass(rec.p))?;
        for (t, omega) in tallies.iter_mut().zip(&omegas) {
            if omega.contains(class) {
                *t += 1;
            }
        }
    }
    let lower_bounds_raw = tallies.map(|t| t as i64 - 6);
    Ok(D4Report {
        tallies,
        lower_bounds_raw,
        lower_bounds: lower_bounds_raw.map(|b| b.max(0)),
        upper_bounds: [Some(tallies[0]), None, None, Some(tallies[3])],
    })
}

/// 1_{(Ω,r)}: exactly r tame primes p ∤ |G| whose inertia group ⟨class⟩ meets Ω.
pub fn indicator_omega_r(profile: &RamificationProfile, omega: &OmegaSet, r: u64) -> Result<bool, BoundsError> {
    Ok(omega_tally(profile, omega)? == r)
}

/// The number of tame primes whose inertia group meets Ω.
pub fn omega_tally(profile: &RamificationProfile, omega: &OmegaSet) -> Result<u64, BoundsError> {
    let group = profile.group().ok_or(BoundsError::MissingGroup)?;
    if !closed_under_invertible_powering(group, omega)? || !closed_under_conjugation(group, omega)? {
        return Err(BoundsError::NotClosed);
    }
    let order = group.order();
    let mut count = 0;
    for rec in profile.primes().iter().filter(|r| order % r.p != 0) {
        let class = rec.inertia_class().ok_or(BoundsError::NeedsInertiaClass(rec.p))?;
        let n = group.element_order(class) as i64;
        if (1..=n).any(|k| omega.contains(&class.pow(k))) {
            count += 1;
        }
    }
    Ok(count)
}

/// 1/|M^{Γ∞}|, the finite moment the heuristic predicts.
pub fn clm_predicted_moment(fixed_points: u64) -> Result<Ratio<u64>, BoundsError> {
    if fixed_points == 0 {
        return Err(BoundsError::NonPositive);
    }
    Ok(Ratio::new(1, fixed_points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::RamifiedPrimeRecord;

    fn profile(group: &str, degree: u64, classes: &[(u64, &str)]) -> RamificationProfile {
        let mut p = RamificationProfile::new(degree).unwrap().with_group(group).unwrap();
        for &(q, c) in classes {
            let c = Permutation::parse_cycles(c, degree as usize).unwrap();
            p.push(RamifiedPrimeRecord::inertia(q, c).unwrap()).unwrap();
        }
        p
    }

    #[test]
    fn omega_sets_match_their_descriptions() {
        let [o1, o2, o3, o4] = d4_omegas();
        assert_eq!((o1.len(), o2.len(), o3.len(), o4.len()), (4, 5, 1, 2));
        assert!(o4.is_subset(&o1) && o1.is_subset(&o2) && o3.is_subset(&o2));
        // Ω₁ holds the two fixed-point-free reflections
        assert_eq!(o1.iter().filter(|g| g.order() == 2).count(), 2);
        assert!(o1.iter().all(|g| g.orbit_gcd() % 2 == 0));
    }

    #[test]
    fn d4_tallies() {
        let p = profile("D4@S4", 4, &[(3, "(1 2 3 4)"), (5, "(1 3)(2 4)"), (7, "(1 2)(3 4)"), (2, "(1 2 3 4)")]);
        let r = d4_bounds(&p).unwrap();
        assert_eq!(r.tallies, [2, 3, 1, 1]);
        assert_eq!(r.lower_bounds, [0; 4]);
        assert_eq!(r.upper_bounds, [Some(2), None, None, Some(1)]);

        let empty = profile("D4@S4", 4, &[]);
        let r = d4_bounds(&empty).unwrap();
        assert_eq!((r.lower_bounds_raw, r.lower_bounds), ([-6; 4], [0; 4]));

        let centre = profile("D4@S4", 4, &[(3, "(1 3)(2 4)"), (5, "(1 3)(2 4)")]);
        let r = d4_bounds(&centre).unwrap();
        assert_eq!((r.tallies[0], r.tallies[2]), (0, 2));

        let s4 = profile("S4", 4, &[]);
        assert!(matches!(d4_bounds(&s4), Err(BoundsError::WrongGroup(_))));
    }

    #[test]
    fn indicator_on_s3() {
        let p = profile("S3", 3, &[(5, "(1 2 3)"), (7, "(1 3 2)"), (11, "(1 2)"), (3, "(1 2 3)")]);
        let group = p.group().unwrap().clone();
        let omega = omega_set(&group, 3, Level::Exact(1)).unwrap();
        assert!(indicator_omega_r(&p, &omega, 2).unwrap());
        assert!(!indicator_omega_r(&p, &omega, 1).unwrap());
        let empty = OmegaSet::new();
        assert!(indicator_omega_r(&p, &empty, 0).unwrap());
        assert!(!indicator_omega_r(&p, &empty, 1).unwrap());
        let lone: OmegaSet = [Permutation::parse_cycles("(1 2 3)", 3).unwrap()].into_iter().collect();
        assert_eq!(indicator_omega_r(&p, &lone, 1), Err(BoundsError::NotClosed));
    }

    #[test]
    fn predicted_moment() {
        assert_eq!(clm_predicted_moment(1).unwrap(), Ratio::from_integer(1));
        assert_eq!(clm_predicted_moment(4).unwrap(), Ratio::new(1, 4));
        assert_eq!(clm_predicted_moment(0), Err(BoundsError::NonPositive));
    }
}
