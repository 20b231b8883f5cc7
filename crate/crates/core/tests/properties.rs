use std::collections::HashMap;

use num_bigint::BigUint;
use proptest::prelude::*;

use latpath_core::bijections::{
    cyclic_class, designated_hump, dyck_representative, hump_grow, hump_shrink, phi, phi_hat, phi_hat_inverse,
    phi_inverse, psi_contract, psi_expand,
};
use latpath_core::enumerate::{count_family, generate_ka, generate_nm, FamilySpec, KaFamily, NmFamily};
use latpath_core::formulas::{binomial, d_nm, d_nm_j};
use latpath_core::{Classification, HorizontalWidth, NmStep, NmWord, PathProfile, PathWord, Step};

fn step_kinds(w: &PathWord) -> HashMap<Step, usize> {
    let mut m = HashMap::new();
    for &s in w.steps() {
        *m.entry(s).or_default() += 1;
    }
    m
}

fn ka_profile() -> impl Strategy<Value = PathProfile> {
    prop_oneof![
        (1u32..=3, 1u32..=3).prop_map(|(k, a)| PathProfile::ka(k, HorizontalWidth::Finite(a)).unwrap()),
        (1u32..=3).prop_map(|k| PathProfile::kary(k).unwrap()),
    ]
}

fn rise_profile() -> impl Strategy<Value = PathProfile> {
    prop_oneof![
        ka_profile(),
        (prop::collection::btree_set(1u32..=3, 1..=3), 1u32..=2).prop_map(|(r, a)| PathProfile::new(
            r,
            HorizontalWidth::Finite(a)
        )
        .unwrap()),
    ]
}

/// A member of `family`, chosen by index into the generated list.
fn member(profile: PathProfile, family: KaFamily, max_order: u64) -> impl Strategy<Value = PathWord> {
    (0..=max_order, any::<prop::sample::Index>()).prop_filter_map("empty family", move |(n, pick)| {
        let words = generate_ka(&profile, family, n, None);
        (!words.is_empty()).then(|| words[pick.index(words.len())].clone())
    })
}

fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
    (1u64..=8, 1u64..=8).prop_filter("coprime", |&(n, m)| num_integer::gcd(n, m) == 1)
}

fn free_word() -> impl Strategy<Value = NmWord> {
    coprime_pair().prop_flat_map(|(n, m)| {
        Just(vec![NmStep::D; n as usize].into_iter().chain(vec![NmStep::U; m as usize]).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(NmWord::new)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn phi_round_trips_from_marked_strict_paths(
        (w, pick) in rise_profile().prop_flat_map(|p| (member(p, KaFamily::Strict, 9), any::<prop::sample::Index>()))
    ) {
        let humps = w.humps().unwrap();
        prop_assume!(!humps.is_empty());
        let h = pick.index(humps.len());
        let (s, trace) = phi(&w, h).unwrap();
        prop_assert!(s.is_super_positive_up());
        prop_assert_eq!(s.order(), w.order());
        prop_assert_eq!(step_kinds(&s), step_kinds(&w));
        prop_assert_eq!(trace.o.index, 0);
        prop_assert_eq!(trace.n.index, w.len());
        let (back, i, _) = phi_inverse(&s).unwrap();
        prop_assert_eq!(back, w);
        prop_assert_eq!(i, h);
    }

    #[test]
    fn phi_inverse_round_trips_from_positive_up_paths(
        s in rise_profile().prop_flat_map(|p| member(p, KaFamily::SuperPositiveUp, 9))
    ) {
        let (w, h, _) = phi_inverse(&s).unwrap();
        prop_assert_eq!(w.classify(), Classification::Strict);
        prop_assert_eq!(step_kinds(&w), step_kinds(&s));
        prop_assert_eq!(phi(&w, h).unwrap().0, s);
    }

    #[test]
    fn psi_classes_have_k_plus_one_members(
        p in ka_profile().prop_flat_map(|p| member(p, KaFamily::SuperPositiveUp, 10))
    ) {
        let k = p.profile().single_rise().unwrap() as usize;
        let class = psi_expand(&p).unwrap();
        prop_assert_eq!(class.len(), k + 1);
        prop_assert_eq!(&class[0], &p);
        for (i, q) in class.iter().enumerate() {
            prop_assert_eq!(step_kinds(q), step_kinds(&p));
            prop_assert_eq!(q.is_super_positive_up(), i == 0);
            prop_assert_eq!(&psi_contract(q).unwrap(), &p);
        }
    }

    #[test]
    fn psi_contract_lands_in_its_own_class(
        q in ka_profile().prop_flat_map(|p| member(p, KaFamily::SuperWithUp, 10))
    ) {
        let p = psi_contract(&q).unwrap();
        prop_assert!(p.is_super_positive_up());
        prop_assert!(psi_expand(&p).unwrap().contains(&q));
    }

    #[test]
    fn shrink_and_grow_are_inverse(
        s in (1u32..=3, 1u32..=2)
            .prop_map(|(k, a)| PathProfile::ka(k, HorizontalWidth::Finite(a)).unwrap())
            .prop_flat_map(|p| member(p, KaFamily::SuperPositiveUp, 10))
    ) {
        let a = u64::from(s.profile().horizontal().finite().unwrap());
        let grown = hump_grow(&s).unwrap();
        prop_assert_eq!(grown.order(), s.order() + a);
        prop_assert!(!designated_hump(&grown).unwrap().is_peak());
        prop_assert_eq!(&hump_shrink(&grown).unwrap(), &s);
        if !designated_hump(&s).unwrap().is_peak() {
            let t = hump_shrink(&s).unwrap();
            prop_assert!(t.is_super_positive_up());
            prop_assert_eq!(hump_grow(&t).unwrap(), s);
        }
    }

    #[test]
    fn cyclic_classes_are_full_with_one_dyck_member(w in free_word()) {
        let class = cyclic_class(&w).unwrap();
        prop_assert_eq!(class.len(), w.len());
        let dyck: Vec<_> = class.members.iter().filter(|(_, p)| p.is_dyck()).collect();
        prop_assert_eq!(dyck.len(), 1);
        let (rep, offset) = dyck_representative(&w).unwrap();
        prop_assert_eq!(&rep, &dyck[0].1);
        prop_assert_eq!(w.rotated(offset), rep.clone());
        for (_, p) in &class.members {
            prop_assert_eq!(&dyck_representative(p).unwrap().0, &rep);
        }
    }

    #[test]
    fn maximal_excess_is_unique(w in free_word()) {
        let ex = w.excesses();
        let max = *ex.iter().max().unwrap();
        // the first and last points coincide cyclically and share excess 0
        let hits = ex[..ex.len() - 1].iter().filter(|e| **e == max).count();
        prop_assert_eq!(hits, 1);
    }

    #[test]
    fn phi_hat_round_trips(w in free_word(), pick in any::<prop::sample::Index>()) {
        let (p, _) = dyck_representative(&w).unwrap();
        let j = p.peak_count();
        let i = pick.index(j) + 1;
        let q = phi_hat(&p, i).unwrap();
        prop_assert!(q.starts_up_ends_down());
        prop_assert_eq!(q.peak_count(), j);
        prop_assert_eq!(phi_hat_inverse(&q).unwrap(), (p, i));
    }

    #[test]
    fn word_text_round_trips(w in rise_profile().prop_flat_map(|p| member(p, KaFamily::Super, 8))) {
        let text = w.to_string();
        prop_assert_eq!(PathWord::parse(w.profile().clone(), &text).unwrap(), w);
    }

    #[test]
    fn rational_narayana_rows_sum_to_dyck_count((n, m) in (1u64..=40, 1u64..=40)
        .prop_filter("coprime", |&(n, m)| num_integer::gcd(n, m) == 1))
    {
        let row: BigUint = (1..=n.min(m)).map(|j| d_nm_j(n, m, j).unwrap()).sum();
        prop_assert_eq!(&row, &d_nm(n, m).unwrap());
        prop_assert_eq!(row * (n + m), binomial((n + m) as i64, n as i64));
    }
}

#[test]
fn counts_match_generation_at_desk_scale() {
    for k in 1..=3 {
        for a in [HorizontalWidth::Finite(1), HorizontalWidth::Finite(2), HorizontalWidth::Disallowed] {
            let profile = PathProfile::ka(k, a).unwrap();
            for n in 0..=12 {
                for family in [KaFamily::Strict, KaFamily::Super, KaFamily::SuperPositiveUp, KaFamily::SuperWithUp] {
                    let words = generate_ka(&profile, family, n, None);
                    assert!(words.windows(2).all(|p| p[0].steps() < p[1].steps()), "sorted, no duplicates");
                    assert_eq!(count_family(&FamilySpec::ka(family, &profile, n)), BigUint::from(words.len()));
                }
            }
        }
    }
    for total in 2..=12u64 {
        for n in 1..total {
            let m = total - n;
            for family in [NmFamily::Dyck, NmFamily::Free, NmFamily::FreeUd] {
                let words = generate_nm(family, n, m, None);
                assert!(words.windows(2).all(|p| p[0] < p[1]));
                assert_eq!(count_family(&FamilySpec::nm(family, n, m)), BigUint::from(words.len()));
            }
        }
    }
}
