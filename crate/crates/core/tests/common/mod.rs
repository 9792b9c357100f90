#![allow(dead_code)]

use proptest::prelude::*;
use uniformity_core::{Monomial, MonomialIdeal, Ring, RingRef};

pub fn ring(n: usize) -> RingRef {
    Ring::indexed("x", n).unwrap()
}

pub fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec()).unwrap()
}

pub fn ideal(r: &RingRef, gens: Vec<Vec<u32>>) -> MonomialIdeal {
    MonomialIdeal::from_generators(r.clone(), gens.into_iter().map(|g| Monomial::new(g).unwrap()).collect()).unwrap()
}

/// Every monomial with all exponents `<= cap` in `n` variables.
pub fn box_monomials(n: usize, cap: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=cap).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|e| Monomial::new(e).unwrap()).collect()
}

/// Every monomial of total degree `<= d` in `n` variables.
pub fn monomials_to_degree(n: usize, d: u32) -> Vec<Monomial> {
    box_monomials(n, d).into_iter().filter(|m| m.degree() <= d as u64).collect()
}

pub fn brute_contains(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.exponents().iter().zip(m.exponents()).all(|(a, b)| a <= b))
}

/// Exponent vectors for `n` variables, at most `max_gens` of them.
pub fn gens_strategy(n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)
}

/// `(n, generators)` with `n` in `1..=max_n`.
pub fn sized_ideal(max_n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (1..=max_n).prop_flat_map(move |n| (Just(n), gens_strategy(n, max_gens, max_exp)))
}

/// Square-free generators of degree `1..=max_deg` on `n` variables.
pub fn squarefree_ideal(n: usize, max_gens: usize, max_deg: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=max_deg), 1..=max_gens).prop_map(
        move |supports| {
            supports
                .into_iter()
                .map(|s| {
                    let mut e = vec![0u32; n];
                    for v in s {
                        e[v] = 1;
                    }
                    e
                })
                .collect()
        },
    )
}
