use nonrandom::abelian::{count_fields_total, AbelianGroupSpec, FieldCounter, InertiaSemantics};
use nonrandom::arith::{factorize, gcd};
use nonrandom::bounds::{
    d4_bounds, e_k, genus_rank_lower_bound, indicator_omega_r, is_type, rz_lower_bound, RamificationProfile,
    RamifiedPrimeRecord,
};
use nonrandom::dirichlet::{
    fit_asymptotic, singularity_product, summatory_scan, Coefficients, Exponent, SingularityDescriptor,
};
use nonrandom::permgroup::{
    closed_under_conjugation, closed_under_invertible_powering, omega_set, parse_group_spec, Level, OmegaSet,
};
use nonrandom::quadratic::{class_group_data, genus_check, is_fundamental, FundamentalDiscriminant};
use proptest::prelude::*;

const CORPUS: [&str; 9] = ["S3", "D4@S4", "C6", "C2xC4", "D5@S5", "A4@S6", "S4", "D6@reg", "C3xC3"];
const TAME: [u64; 12] = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43];

fn descriptor() -> impl Strategy<Value = SingularityDescriptor> {
    (0i64..6, 1i64..4, 0u32..4, 0.1f64..10.0)
        .prop_map(|(n, d, b, c)| SingularityDescriptor::new(Exponent::new(n, d), b, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn omega_sets_are_closed_and_partition(idx in 0..CORPUS.len(), q in prop::sample::select(vec![2u64, 3, 5])) {
        let group = parse_group_spec(CORPUS[idx]).unwrap().group;
        let all = omega_set(&group, q, Level::Infinite).unwrap();
        prop_assert!(closed_under_invertible_powering(&group, &all).unwrap());
        prop_assert!(closed_under_conjugation(&group, &all).unwrap());
        let mut union = OmegaSet::new();
        for l in 1..=4 {
            let exact = omega_set(&group, q, Level::Exact(l)).unwrap();
            prop_assert!(closed_under_invertible_powering(&group, &exact).unwrap());
            prop_assert!(union.is_disjoint(&exact));
            union.extend(exact);
        }
        prop_assert_eq!(union, all);
    }

    #[test]
    fn orbit_gcd_divides_order(idx in 0..CORPUS.len(), pick in any::<prop::sample::Index>()) {
        let group = parse_group_spec(CORPUS[idx]).unwrap().group;
        let g = pick.get(group.elements());
        prop_assert_eq!(group.element_order(g) % g.orbit_gcd(), 0);
        prop_assert_eq!(g.compose(&g.inverse()), group.identity().clone());
    }

    #[test]
    fn singularity_product_is_a_commutative_monoid(a in descriptor(), b in descriptor(), c in descriptor()) {
        let ab = singularity_product(&a, &b);
        let ba = singularity_product(&b, &a);
        prop_assert_eq!((ab.alpha, ab.b), (ba.alpha, ba.b));
        prop_assert!((ab.coeff - ba.coeff).abs() <= 1e-12 * ab.coeff);
        let l = singularity_product(&ab, &c);
        let r = singularity_product(&a, &singularity_product(&b, &c));
        prop_assert_eq!((l.alpha, l.b), (r.alpha, r.b));
        prop_assert!((l.coeff - r.coeff).abs() <= 1e-12 * l.coeff);
        prop_assert_eq!(singularity_product(&a, &SingularityDescriptor::identity()), a);
    }

    #[test]
    fn fit_recovers_synthetic_exponents(a in -2.0f64..2.0, b in -1.0f64..3.0, c in 0.05f64..20.0) {
        let rows: Vec<(f64, f64)> = (0..8)
            .map(|k| {
                let x = 10f64.powf(3.0 + 0.5 * k as f64);
                (x, c * x * x.ln().powf(a) * x.ln().ln().powf(b))
            })
            .collect();
        let free = fit_asymptotic(&rows, None).unwrap();
        prop_assert!((free.log_exp - a).abs() < 1e-6, "{:?}", free);
        let fixed = fit_asymptotic(&rows, Some(b)).unwrap();
        prop_assert!((fixed.log_exp - a).abs() < 1e-8);
        prop_assert!((fixed.constant - c).abs() < 1e-6 * c);
    }

    #[test]
    fn summatory_sums_are_monotone(x in 10u64..20_000, extra in 1u64..500) {
        let rows = summatory_scan(&Coefficients::SquarefreeTwoOmega, &[x, x + extra]).unwrap();
        prop_assert!(rows[0].sum <= rows[1].sum);
        let ones = summatory_scan(&Coefficients::Ones, &[x]).unwrap();
        prop_assert_eq!(ones[0].sum, (x - 1) as f64);
    }

    #[test]
    fn field_counts_are_monotone(idx in 0..4usize, x in 3u64..2000, extra in 1u64..2000) {
        let g: AbelianGroupSpec = ["C2", "C3", "C4", "C2xC2"][idx].parse().unwrap();
        let lo = count_fields_total(&g, x).unwrap();
        let hi = count_fields_total(&g, x + extra).unwrap();
        prop_assert!(lo <= hi);
        let counter = FieldCounter::total(g).unwrap();
        let row = &counter.count_table(&[x]).unwrap()[0];
        prop_assert_eq!(row.total % counter.automorphism_count(), 0);
    }

    #[test]
    fn omega_split_sums_to_total(x in 50u64..5000) {
        let g: AbelianGroupSpec = "C6".parse().unwrap();
        let omega = g.omega(3, Level::Infinite);
        let split = FieldCounter::new(g.clone(), omega, InertiaSemantics::SubgroupMeets).unwrap();
        let row = &split.count_table(&[x]).unwrap()[0];
        prop_assert_eq!(row.by_r.iter().sum::<u128>(), count_fields_total(&g, x).unwrap());
    }

    #[test]
    fn genus_inequality_and_bound_chain(d in 3i64..100_000) {
        let d = -d;
        prop_assume!(is_fundamental(d));
        let rec = class_group_data(FundamentalDiscriminant::new(d).unwrap());
        prop_assert!(genus_check(&rec));
        let profile = RamificationProfile::quadratic(d).unwrap();
        let genus = genus_rank_lower_bound(&profile, 2, 1).unwrap().bound.lower_bound_raw;
        let rz = rz_lower_bound(&profile, 2, 1, None).unwrap();
        let w = rec.omega as i64;
        prop_assert_eq!(rz.lower_bound_raw, w - 2);
        prop_assert_eq!(genus, if d % 2 == 0 { w - 2 } else { w - 1 });
        prop_assert!(rz.lower_bound_raw <= genus);
        prop_assert!(genus <= rec.rk2 as i64);
        prop_assert!(rec.rk2 as u64 <= rz.upper_bound.unwrap());
    }

    #[test]
    fn inertia_and_exponent_representations_agree(
        idx in 0..CORPUS.len(),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6),
        q in prop::sample::select(vec![2u64, 3, 5]),
    ) {
        let spec = parse_group_spec(CORPUS[idx]).unwrap();
        let group = &spec.group;
        for (pick, &p) in picks.iter().zip(&TAME) {
            let g = pick.get(group.elements()).clone();
            let exps: Vec<u64> = g.orbit_sizes().into_iter().map(|s| s as u64).collect();
            let by_exp = RamifiedPrimeRecord::exponents(p, exps).unwrap();
            let by_class = RamifiedPrimeRecord::inertia(p, g).unwrap();
            prop_assert_eq!(e_k(&by_exp, None).unwrap(), e_k(&by_class, Some(group)).unwrap());
            for l in 1..=2 {
                prop_assert_eq!(is_type(&by_exp, None, q, l).unwrap(), is_type(&by_class, Some(group), q, l).unwrap());
            }
        }
    }

    #[test]
    fn indicator_picks_exactly_one_r(
        idx in 0..CORPUS.len(),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..8),
        q in prop::sample::select(vec![2u64, 3]),
    ) {
        let spec = parse_group_spec(CORPUS[idx]).unwrap();
        let degree = spec.group.degree() as u64;
        let mut profile = RamificationProfile::new(degree).unwrap().with_group(CORPUS[idx]).unwrap();
        for (pick, &p) in picks.iter().zip(&TAME) {
            let g = pick.get(spec.group.elements()).clone();
            profile.push(RamifiedPrimeRecord::inertia(p, g).unwrap()).unwrap();
        }
        let omega = omega_set(&spec.group, q, Level::Infinite).unwrap();
        let hits = (0..=picks.len() as u64).filter(|&r| indicator_omega_r(&profile, &omega, r).unwrap()).count();
        prop_assert_eq!(hits, 1);
    }

    #[test]
    fn d4_tallies_respect_containments(picks in prop::collection::vec(any::<prop::sample::Index>(), 0..12)) {
        let group = parse_group_spec("D4@S4").unwrap().group;
        let mut profile = RamificationProfile::new(4).unwrap().with_group("D4@S4").unwrap();
        for (pick, &p) in picks.iter().zip(&TAME) {
            profile.push(RamifiedPrimeRecord::inertia(p, pick.get(group.elements()).clone()).unwrap()).unwrap();
        }
        let [t1, t2, t3, t4] = d4_bounds(&profile).unwrap().tallies;
        prop_assert!(t4 <= t1);
        prop_assert_eq!(t2, t1 + t3);
        prop_assert!(t2 >= t1.max(t3));
    }
}

#[test]
fn factorization_and_gcd_agree() {
    for n in 1u64..3000 {
        let back: u64 = factorize(n).iter().map(|&(p, k)| p.pow(k)).product();
        assert_eq!(back, n);
        assert_eq!(gcd(n, 0), n);
    }
}
