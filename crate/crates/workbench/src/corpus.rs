//! Seeded random corpora. Every generator takes the RNG explicitly so a
//! single `u64` seed reproduces a whole run.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uniformity_core::groebner::{Field, PolyRingRef, Polynomial};
use uniformity_core::{Graph, Monomial, MonomialIdeal, Ring, RingRef};

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random monomial of total degree in `1..=max_degree`.
pub fn random_monomial(rng: &mut CorpusRng, n: usize, max_degree: u32) -> Monomial {
    let d = rng.random_range(1..=max_degree);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.random_range(0..n)] += 1;
    }
    Monomial::new(e).expect("small exponents")
}

pub fn random_monomial_ideal(rng: &mut CorpusRng, ring: &RingRef, max_gens: usize, max_degree: u32) -> MonomialIdeal {
    let count = rng.random_range(1..=max_gens);
    let gens = (0..count).map(|_| random_monomial(rng, ring.n(), max_degree)).collect();
    MonomialIdeal::from_generators(ring.clone(), gens).expect("same ring")
}

/// Square-free generators of degree `1..=max_degree`.
pub fn random_squarefree_ideal(rng: &mut CorpusRng, ring: &RingRef, max_gens: usize, max_degree: usize) -> MonomialIdeal {
    let n = ring.n();
    let count = rng.random_range(1..=max_gens);
    let mut vars: Vec<usize> = (0..n).collect();
    let gens = (0..count)
        .map(|_| {
            vars.shuffle(rng);
            let d = rng.random_range(1..=max_degree.min(n));
            let mut e = vec![0u32; n];
            for &v in &vars[..d] {
                e[v] = 1;
            }
            Monomial::new(e).expect("square-free")
        })
        .collect();
    MonomialIdeal::from_generators(ring.clone(), gens).expect("same ring")
}

/// Nonzero homogeneous polynomial of degree `d` with small integer coefficients.
pub fn random_homogeneous<F: Field>(rng: &mut CorpusRng, ring: &PolyRingRef<F>, d: u32, max_terms: usize) -> Polynomial<F> {
    let field = ring.field();
    let n = ring.n();
    loop {
        let count = rng.random_range(1..=max_terms);
        let terms = (0..count)
            .map(|_| {
                let mut e = vec![0u32; n];
                for _ in 0..d {
                    e[rng.random_range(0..n)] += 1;
                }
                let c = rng.random_range(-5i64..=5);
                (Monomial::new(e).expect("small"), field.from_i64(c))
            })
            .collect();
        let f = Polynomial::from_terms(ring, terms).expect("same ring");
        if !f.is_zero() {
            return f;
        }
    }
}

/// A two-variable ring `x, y` for plane corpora.
pub fn plane() -> RingRef {
    Ring::new(["x", "y"]).expect("valid names")
}

fn permute_mask(mask: u64, perm: &[usize], pairs: &[(usize, usize)], index: &[Vec<usize>]) -> u64 {
    let mut out = 0u64;
    for (bit, &(u, v)) in pairs.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            let (a, b) = (perm[u], perm[v]);
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            out |= 1 << index[a][b];
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == perm.len() {
            out.push(perm.clone());
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, out);
            perm.swap(k, i);
        }
    }
    rec(0, &mut perm, &mut out);
    out
}

/// Connected simple graphs on exactly `n` vertices, one per isomorphism
/// class (the class member with the smallest edge mask). Practical for `n <= 7`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut index = vec![vec![0usize; n]; n];
    for (bit, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = bit;
    }
    let perms = permutations(n);
    let total = 1u64 << pairs.len();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0..total {
        if (mask.count_ones() as usize) < n - 1 {
            continue;
        }
        let g = Graph::from_edge_mask(n, mask).expect("valid mask");
        if !g.is_connected() {
            continue;
        }
        let canon = perms.iter().map(|p| permute_mask(mask, p, &pairs, &index)).min().expect("nonempty");
        if seen.insert(canon) {
            out.push(Graph::from_edge_mask(n, canon).expect("valid mask"));
        }
    }
    out
}
