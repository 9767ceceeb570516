use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use foldprod::fold::{
    fold_generators, fold_power, regular_decomposition, uniform_member, uniform_params,
    uniform_power_lambdas, Multiplicities, UniformParams,
};
use foldprod::monomial::{minimalize, Exponent, MonomialIdeal};
use foldprod::partition::{canonical_partition, Partition};
use foldprod::resolution::{
    betti_closed, betti_koszul_oracle, is_symmetric_shifted, linear_quotients_resolution,
    BettiTable, Convention,
};
use foldprod::symbolic::{
    alpha, containment, power_vs_star_check, resurgence_closed, symbolic_power, waldschmidt,
    Flavor, SymbolicSpec,
};

fn exponent(s: usize, max: u32) -> impl Strategy<Value = Exponent> {
    prop::collection::vec(0..=max, s).prop_map(Exponent::new)
}

fn ideal_in(s: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(exponent(s, 3), 1..=4)
        .prop_map(move |gens| minimalize(gens, s).expect("same length"))
}

fn two_ideals() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, Exponent, Exponent)> {
    (1usize..=3).prop_flat_map(|s| (ideal_in(s), ideal_in(s), exponent(s, 6), exponent(s, 3)))
}

fn multiplicities(s_max: usize, cap: u32) -> impl Strategy<Value = Multiplicities> {
    prop::collection::vec(1..=cap, 1..=s_max).prop_flat_map(|m| {
        let total: u32 = m.iter().sum();
        (1..=total).prop_map(move |a| Multiplicities::new(a, m.clone()).unwrap())
    })
}

fn uniform(s_max: u32, b_max: u32) -> impl Strategy<Value = UniformParams> {
    (2..=s_max, 1..=b_max)
        .prop_flat_map(|(s, b)| (Just(s), b..=s * b, Just(b)))
        .prop_map(|(s, a, b)| uniform_params(s, a, b).unwrap())
}

fn flavor() -> impl Strategy<Value = Flavor> {
    prop_oneof![Just(Flavor::Ordinary), Just(Flavor::Star)]
}

fn spec(p: UniformParams, m: u32, flavor: Flavor) -> Option<SymbolicSpec> {
    SymbolicSpec::new(p, m, flavor).ok()
}

fn euler_characteristic(t: &BettiTable) -> BigInt {
    let mut acc = BigInt::from(0);
    for (i, _, v) in t.entries() {
        let v = BigInt::from(v.clone());
        if i % 2 == 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn intersection_is_conjunction((i, j, u, _) in two_ideals()) {
        let both = i.intersect(&j).unwrap();
        prop_assert_eq!(
            both.member(&u).unwrap(),
            i.member(&u).unwrap() && j.member(&u).unwrap()
        );
        prop_assert!(i.contains(&both).unwrap() && j.contains(&both).unwrap());
    }

    #[test]
    fn product_sits_inside_intersection((i, j, _, _) in two_ideals()) {
        let prod = i.product(&j).unwrap();
        prop_assert!(i.intersect(&j).unwrap().contains(&prod).unwrap());
        for g in i.gens() {
            for h in j.gens() {
                prop_assert!(prod.member(&g.checked_mul(h).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn colon_is_adjoint_to_multiplication((i, _, u, v) in two_ideals()) {
        let colon = i.colon_mono(&v).unwrap();
        prop_assert_eq!(colon.member(&u).unwrap(), i.member(&u.checked_mul(&v).unwrap()).unwrap());
        prop_assert!(colon.contains(&i).unwrap());
    }

    #[test]
    fn saturation_is_idempotent_and_larger((i, _, _, _) in two_ideals()) {
        let sat = i.saturate().unwrap();
        prop_assert!(sat.contains(&i).unwrap());
        prop_assert_eq!(sat.saturate().unwrap(), sat.clone());
        prop_assert!(sat.is_saturated().unwrap());
    }

    #[test]
    fn orbits_are_sized_and_canonical(mut v in prop::collection::vec(0u32..=4, 1..=5)) {
        v.sort_unstable();
        let l = Partition::new(v).unwrap();
        let orbit = l.expand_orbit();
        prop_assert_eq!(num_bigint::BigUint::from(orbit.len()), l.orbit_size());
        for u in &orbit {
            prop_assert_eq!(&canonical_partition(u), &l);
        }
    }

    #[test]
    fn partition_stats_split_the_parts(mut v in prop::collection::vec(0u32..=4, 1..=6)) {
        v.sort_unstable();
        let l = Partition::new(v.clone()).unwrap();
        let st = l.stats();
        let top = l.top();
        let next = v.iter().filter(|&&x| x + 1 == top).count();
        prop_assert_eq!(st.p + st.r + next, v.len());
        prop_assert_eq!(st.type_counts.values().sum::<usize>(), v.len());
    }

    #[test]
    fn fold_power_is_the_ideal_power(mult in multiplicities(3, 2), r in 1u32..=3) {
        let direct = fold_power(&mult, r).unwrap();
        let product = fold_generators(&mult).power(r).unwrap();
        prop_assert_eq!(direct, product);
    }

    #[test]
    fn decomposition_reproduces_the_ideal(mult in multiplicities(4, 3)) {
        prop_assert_eq!(regular_decomposition(&mult).unwrap(), fold_generators(&mult));
    }

    #[test]
    fn uniform_membership_matches_the_power(p in uniform(4, 2), r in 1u32..=2, raw in prop::collection::vec(0u32..=5, 4)) {
        let mut v: Vec<u32> = raw.into_iter().take(p.s as usize).collect();
        v.resize(p.s as usize, 0);
        v.sort_unstable();
        let power = fold_power(&p.multiplicities(), r).unwrap();
        prop_assert_eq!(
            uniform_member(&v, &p, r),
            power.member(&Exponent::new(v.clone())).unwrap()
        );
    }

    #[test]
    fn veronese_type_ideals_have_linear_quotients(mult in multiplicities(4, 2)) {
        let ideal = fold_generators(&mult);
        let (order, table) = linear_quotients_resolution(&ideal).unwrap();
        prop_assert!(order.verified);
        prop_assert_eq!(&table, &betti_koszul_oracle(&ideal, ideal.s()).unwrap());
        prop_assert_eq!(euler_characteristic(&table), BigInt::from(0));
    }

    #[test]
    fn text_and_rows_round_trip(entries in prop::collection::btree_map((0usize..5, 0u64..12), 1u64..10_000, 1..10)) {
        let mut t = BettiTable::new(Convention::Quotient);
        for ((i, d), v) in entries {
            t.add(i, i as u64 + d, v.into());
        }
        prop_assert_eq!(&BettiTable::parse_text(&t.render_text(), Convention::Quotient).unwrap(), &t);
        prop_assert_eq!(&BettiTable::from_rows(Convention::Quotient, &t.to_rows()).unwrap(), &t);
        prop_assert_eq!(t.to_ideal().to_quotient().to_ideal(), t.to_ideal());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn symbolic_powers_are_shifted_and_resolve(p in uniform(5, 3), m in 1u32..=2, f in flavor()) {
        let Some(spec) = spec(p, m, f) else { return Ok(()) };
        let sym = symbolic_power(&spec).unwrap();
        prop_assert!(is_symmetric_shifted(&sym));
        let table = betti_closed(&sym).unwrap().to_quotient();
        prop_assert_eq!(euler_characteristic(&table), BigInt::from(0));
    }

    #[test]
    fn symbolic_powers_descend(p in uniform(5, 3), m in 1u32..=3, f in flavor()) {
        let (Some(lo), Some(hi)) = (spec(p, m, f), spec(p, m + 1, f)) else { return Ok(()) };
        let lo = symbolic_power(&lo).unwrap();
        let hi = symbolic_power(&hi).unwrap();
        prop_assert!(lo.contains(&hi));
        let power = uniform_power_lambdas(&p, m).unwrap();
        prop_assert!(lo.contains(&power));
    }

    #[test]
    fn ordinary_inside_star(p in uniform(5, 3), m in 1u32..=3) {
        let (Some(ord), Some(star)) = (spec(p, m, Flavor::Ordinary), spec(p, m, Flavor::Star)) else {
            return Ok(());
        };
        prop_assert!(symbolic_power(&star).unwrap().contains(&symbolic_power(&ord).unwrap()));
    }

    #[test]
    fn containment_above_resurgence(p in uniform(5, 2), f in flavor(), m in 1u32..=8, r in 1u32..=8) {
        let Some(spec) = spec(p, m, f) else { return Ok(()) };
        let rho = resurgence_closed(&p, f).unwrap();
        let ratio = BigRational::new(m.into(), r.into());
        if ratio >= rho.0 {
            prop_assert!(containment(&spec, r).unwrap());
        }
    }

    #[test]
    fn power_vs_star_is_independent_of_m(p in uniform(5, 3)) {
        if !p.in_setting() {
            return Ok(());
        }
        for m in 1..=3 {
            prop_assert_eq!(power_vs_star_check(&p, m).unwrap(), p.a % p.b == 0);
        }
    }

    #[test]
    fn alpha_ratio_bounds(p in uniform(5, 3), f in flavor(), m in 1u32..=4, k in 2u32..=3) {
        let (Some(one), Some(many)) = (spec(p, m, f), spec(p, k * m, f)) else { return Ok(()) };
        let hat = waldschmidt(&p, f).unwrap().0;
        let a1 = BigRational::new(alpha(&symbolic_power(&one).unwrap()).unwrap().into(), m.into());
        let ak = BigRational::new(
            alpha(&symbolic_power(&many).unwrap()).unwrap().into(),
            (k * m).into(),
        );
        prop_assert!(a1 >= hat && ak >= hat);
        prop_assert!(ak <= a1);
    }

    #[test]
    fn first_symbolic_power_is_the_ideal(p in uniform(5, 3)) {
        let Some(spec) = spec(p, 1, Flavor::Ordinary) else { return Ok(()) };
        let sym = symbolic_power(&spec).unwrap();
        prop_assert_eq!(sym.expand(), fold_generators(&p.multiplicities()));
    }
}
