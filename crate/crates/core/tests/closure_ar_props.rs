mod common;

use common::*;
use proptest::prelude::*;
use uniformity_core::artin_rees::artin_rees_number;
use uniformity_core::closure::{briancon_skoda_check, integral_closure, is_integral, newton_polyhedron};
use uniformity_core::{Monomial, MonomialIdeal};

const K0: u32 = 24;

/// `m` is integral over `I` iff `m^k ∈ I^k` for some `k`; searched up to `K0`.
fn integral_by_powers(m: &Monomial, powers: &[MonomialIdeal]) -> bool {
    (1..powers.len()).any(|k| powers[k].contains(&m.pow(k as u32).unwrap()).unwrap())
}

fn powers_up_to(i: &MonomialIdeal, k: u32) -> Vec<MonomialIdeal> {
    let mut out = vec![MonomialIdeal::unit(i.ring().clone())];
    for j in 1..=k as usize {
        let next = out[j - 1].product(i).unwrap();
        out.push(next);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn newton_membership_matches_power_search((n, gens) in sized_ideal(3, 3, 3)) {
        let r = ring(n);
        let i = ideal(&r, gens);
        let k0 = if n == 3 { 12 } else { K0 };
        let powers = powers_up_to(&i, k0);
        for m in monomials_to_degree(n, if n == 3 { 6 } else { 8 }) {
            prop_assert_eq!(is_integral(&m, &i).unwrap(), integral_by_powers(&m, &powers), "{:?}", m);
        }
    }

    #[test]
    fn closure_is_idempotent_and_monotone((n, gens, extra) in (1usize..=3).prop_flat_map(|n| (Just(n), gens_strategy(n, 3, 4), prop::collection::vec(0u32..=3, n)))) {
        let r = ring(n);
        let i = ideal(&r, gens);
        let cl = integral_closure(&i).unwrap();
        prop_assert!(i.is_subset_of(&cl).unwrap());
        prop_assert_eq!(integral_closure(&cl).unwrap(), cl.clone());
        let bigger = i.sum(&ideal(&r, vec![extra])).unwrap();
        prop_assert!(cl.is_subset_of(&integral_closure(&bigger).unwrap()).unwrap());
    }

    #[test]
    fn minimal_points_stay_in_the_box((n, gens) in sized_ideal(3, 3, 3)) {
        let r = ring(n);
        let i = ideal(&r, gens);
        let poly = newton_polyhedron(&i).unwrap();
        let caps = i.max_exponents();
        let wide = caps.iter().map(|&c| 2 * c + 1).max().unwrap_or(1);
        for m in box_monomials(n, wide) {
            let p = m.exponents();
            if !poly.contains_point(p) {
                continue;
            }
            let minimal = (0..n).all(|j| {
                if p[j] == 0 {
                    return true;
                }
                let mut q = p.to_vec();
                q[j] -= 1;
                !poly.contains_point(&q)
            });
            if minimal {
                prop_assert!(p.iter().zip(&caps).all(|(a, c)| a <= c), "{:?} outside box {:?}", p, caps);
            }
        }
    }

    #[test]
    fn briancon_skoda_in_the_plane(gens in gens_strategy(2, 2, 4)) {
        let r = ring(2);
        let i = ideal(&r, gens);
        prop_assume!(!i.is_unit());
        let rep = briancon_skoda_check(&i, 2, 4).unwrap();
        prop_assert!(rep.ok(), "{:?}", rep.failure);
    }

    #[test]
    fn artin_rees_number_is_monotone_and_witnessed(
        (n, a, b) in (1usize..=3).prop_flat_map(|n| (Just(n), gens_strategy(n, 3, 2), gens_strategy(n, 2, 2)))
    ) {
        let r = ring(n);
        let i = ideal(&r, a);
        let sub = ideal(&r, b);
        let mut last = 0;
        for n_max in 1..=4 {
            let rep = artin_rees_number(&i, &sub, n_max).unwrap();
            prop_assert!(rep.number() >= last);
            last = rep.number();
            // the reported k_n works and k_n - 1 does not
            for (idx, &k) in rep.per_n.iter().enumerate() {
                let n_ = idx as u32 + 1;
                let meet = i.power(n_).unwrap().intersect(&sub).unwrap();
                prop_assert!(meet.is_subset_of(&i.power(n_ - k).unwrap().product(&sub).unwrap()).unwrap());
                if k > 0 {
                    prop_assert!(!meet.is_subset_of(&i.power(n_ - k + 1).unwrap().product(&sub).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn closure_of_diagonal_powers() {
    let r = ring(2);
    for d in 2..=6u32 {
        let i = ideal(&r, vec![vec![d, 0], vec![0, d]]);
        assert_eq!(integral_closure(&i).unwrap(), MonomialIdeal::maximal(r.clone()).power(d).unwrap());
    }
}
