//! Minimal primes, symbolic powers, packedness and edge ideals of
//! square-free monomial ideals.
//!
//! A square-free monomial ideal is the intersection of the primes generated
//! by the minimal vertex covers of the hypergraph of generator supports, and
//! its `k`-th symbolic power is the intersection of the `k`-th powers of
//! those primes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::monomial::{Minor, Monomial, MonomialIdeal};
use crate::ring::RingRef;

/// Largest ring handled by the bitmask cover search.
pub const MAX_COVER_VARS: usize = 64;
/// Largest ring for which all `3^n` minors are enumerated.
pub const MAX_MINOR_VARS: usize = 14;

/// A prime generated by a nonempty set of variables; its codimension is the
/// size of that set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeComponent {
    vars: Vec<usize>,
}

impl PrimeComponent {
    pub fn variables(&self) -> &[usize] {
        &self.vars
    }

    pub fn codim(&self) -> usize {
        self.vars.len()
    }

    pub fn to_ideal(&self, ring: &RingRef) -> Result<MonomialIdeal> {
        MonomialIdeal::variable_prime(ring.clone(), &self.vars)
    }

    fn from_mask(mask: u64) -> Self {
        PrimeComponent { vars: (0..64).filter(|i| mask >> i & 1 == 1).collect() }
    }
}

fn require_squarefree_proper(ideal: &MonomialIdeal) -> Result<()> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

fn support_masks(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    if ideal.ring().n() > MAX_COVER_VARS {
        return Err(Error::CapExceeded { what: "variables for cover search".into(), limit: MAX_COVER_VARS });
    }
    Ok(ideal.generators().iter().map(Monomial::support_mask).collect())
}

/// Minimal vertex covers (transversals) of a hypergraph given as bitmasks.
/// Branches on the vertices of the first uncovered edge; a vertex rejected in
/// one branch is forbidden in the later ones, so each cover is produced once.
fn minimal_covers(edges: &[u64]) -> Vec<u64> {
    fn rec(edges: &[u64], chosen: u64, forbidden: u64, found: &mut Vec<u64>) {
        if found.iter().any(|&c| c & chosen == c) {
            return;
        }
        let Some(&edge) = edges.iter().find(|&&e| e & chosen == 0) else {
            found.push(chosen);
            return;
        };
        let mut candidates = edge & !forbidden;
        let mut forbidden = forbidden;
        while candidates != 0 {
            let bit = candidates & candidates.wrapping_neg();
            candidates &= !bit;
            rec(edges, chosen | bit, forbidden, found);
            forbidden |= bit;
        }
    }
    let mut edges = edges.to_vec();
    edges.sort_by_key(|e| e.count_ones());
    let mut found = Vec::new();
    rec(&edges, 0, 0, &mut found);
    // every vertex of a minimal cover has a private edge
    found.retain(|&c| {
        let mut bits = c;
        while bits != 0 {
            let bit = bits & bits.wrapping_neg();
            bits &= !bit;
            if !edges.iter().any(|&e| e & c == bit) {
                return false;
            }
        }
        true
    });
    found.sort_unstable_by_key(|&c| (c.count_ones(), c.reverse_bits()));
    found.dedup();
    found
}

/// Minimal primes of a square-free, nonzero, proper monomial ideal, ordered
/// by codimension and then lexicographically by variable index.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<PrimeComponent>> {
    require_squarefree_proper(ideal)?;
    let covers = minimal_covers(&support_masks(ideal)?);
    let mut primes: Vec<PrimeComponent> = covers.into_iter().map(PrimeComponent::from_mask).collect();
    primes.sort_by(|a, b| a.vars.len().cmp(&b.vars.len()).then_with(|| a.vars.cmp(&b.vars)));
    Ok(primes)
}

/// Codimension, computed on the radical. The zero ideal has codimension 0;
/// the unit ideal is rejected.
pub fn codim(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(0);
    }
    let radical = ideal.radical();
    let covers = minimal_covers(&support_masks(&radical)?);
    Ok(covers.iter().map(|c| c.count_ones() as usize).min().unwrap_or(0))
}

/// Krull dimension of `S/I`, i.e. `n - codim(I)`.
pub fn dim_quotient(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.ring().n() - codim(ideal)?)
}

/// `I^(k)`: the intersection of `p^k` over the minimal primes `p` of a
/// square-free ideal. General monomial ideals are rejected.
pub fn symbolic_power(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::InvalidArgument("symbolic power exponent must be positive".into()));
    }
    let primes = minimal_primes(ideal)?;
    let ring = ideal.ring();
    let mut acc: Option<MonomialIdeal> = None;
    for p in &primes {
        let pk = p.to_ideal(ring)?.power(k)?;
        acc = Some(match acc {
            None => pk,
            Some(a) => a.intersect(&pk)?,
        });
    }
    Ok(acc.expect("proper nonzero ideals have a minimal prime"))
}

/// Comparison of `I^(k)` with `I^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerComparison {
    pub k: u32,
    pub symbolic: MonomialIdeal,
    pub ordinary: MonomialIdeal,
    /// First generator of `I^(k)` (grlex order) outside `I^k`.
    pub witness: Option<Monomial>,
}

impl PowerComparison {
    pub fn equal(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn symbolic_equals_ordinary(ideal: &MonomialIdeal, k: u32) -> Result<PowerComparison> {
    let symbolic = symbolic_power(ideal, k)?;
    let ordinary = ideal.power(k)?;
    debug_assert!(ordinary.is_subset_of(&symbolic)?);
    let witness = symbolic.first_outside(&ordinary)?;
    Ok(PowerComparison { k, symbolic, ordinary, witness })
}

/// Largest set of generators with pairwise disjoint supports, found by
/// exhaustive branch and bound. Returns the size and one optimal set.
pub fn max_disjoint_monomials(ideal: &MonomialIdeal) -> Result<(usize, Vec<Monomial>)> {
    let masks = support_masks(ideal)?;
    let mut order: Vec<usize> = (0..masks.len()).collect();
    order.sort_by_key(|&i| (masks[i].count_ones(), i));
    let supports: Vec<u64> = order.iter().map(|&i| masks[i]).collect();

    fn rec(supports: &[u64], idx: usize, used: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cur.len() + (supports.len() - idx) <= best.len() {
            return;
        }
        if idx == supports.len() {
            *best = cur.clone();
            return;
        }
        if supports[idx] & used == 0 {
            cur.push(idx);
            rec(supports, idx + 1, used | supports[idx], cur, best);
            cur.pop();
        }
        rec(supports, idx + 1, used, cur, best);
    }

    let mut best = Vec::new();
    rec(&supports, 0, 0, &mut Vec::new(), &mut best);
    let mut witness: Vec<Monomial> =
        best.iter().map(|&i| ideal.generators()[order[i]].clone()).collect();
    witness.sort();
    Ok((witness.len(), witness))
}

/// A minor that violates the disjoint-support condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailingMinor {
    pub zeros: Vec<usize>,
    pub ones: Vec<usize>,
    pub minor: MonomialIdeal,
    pub codim: usize,
    pub disjoint: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packedness {
    pub failing: Option<FailingMinor>,
    /// Number of proper nonzero minors examined.
    pub minors_checked: usize,
}

impl Packedness {
    pub fn packed(&self) -> bool {
        self.failing.is_none()
    }
}

/// Every assignment of keep/0/1 to the variables, as `(zeros, ones)`,
/// smallest reductions first, then lexicographic in `(zeros, ones)`.
fn minor_assignments(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let total = 3usize.pow(n as u32);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let (mut zeros, mut ones) = (Vec::new(), Vec::new());
        let mut c = code;
        for v in 0..n {
            match c % 3 {
                1 => zeros.push(v),
                2 => ones.push(v),
                _ => {}
            }
            c /= 3;
        }
        out.push((zeros, ones));
    }
    out.sort_by(|a, b| {
        (a.0.len() + a.1.len())
            .cmp(&(b.0.len() + b.1.len()))
            .then_with(|| a.0.cmp(&b.0))
            .then_with(|| a.1.cmp(&b.1))
    });
    out
}

/// Checks that every minor `J` contains `codim(J)` generators with pairwise
/// disjoint supports. Zero and unit minors satisfy the condition vacuously.
/// Returns the first failing minor in the canonical enumeration order.
pub fn is_packed(ideal: &MonomialIdeal) -> Result<Packedness> {
    require_squarefree_proper(ideal)?;
    let n = ideal.ring().n();
    if n > MAX_MINOR_VARS {
        return Err(Error::CapExceeded { what: "variables for minor enumeration".into(), limit: MAX_MINOR_VARS });
    }
    let mut memo: BTreeMap<MonomialIdeal, Option<(usize, usize)>> = BTreeMap::new();
    let mut checked = 0;
    for (zeros, ones) in minor_assignments(n) {
        let minor = match ideal.minor(&zeros, &ones)? {
            Minor::Ideal(j) if !j.is_zero() && !j.is_unit() => j,
            _ => continue,
        };
        checked += 1;
        let verdict = match memo.get(&minor) {
            Some(v) => *v,
            None => {
                let c = codim(&minor)?;
                let (d, _) = max_disjoint_monomials(&minor)?;
                let v = if d < c { Some((c, d)) } else { None };
                memo.insert(minor.clone(), v);
                v
            }
        };
        if let Some((codim, disjoint)) = verdict {
            return Ok(Packedness {
                failing: Some(FailingMinor { zeros, ones, minor, codim, disjoint }),
                minors_checked: checked,
            });
        }
    }
    Ok(Packedness { failing: None, minors_checked: checked })
}

/// Ideal generated by `x_i x_j` over the edges of `graph`.
pub fn edge_ideal(graph: &Graph, ring: &RingRef) -> Result<MonomialIdeal> {
    if ring.n() != graph.vertex_count() {
        return Err(Error::RingMismatch);
    }
    let gens = graph
        .edges()
        .iter()
        .map(|&(u, v)| ring.var(u)?.mul(&ring.var(v)?))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::from_generators(ring.clone(), gens)
}

/// Evidence for the three-way equivalence between bipartiteness, packedness
/// of the edge ideal, and equality of symbolic and ordinary powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeTheoremReport {
    pub bipartition: Bipartition,
    pub packedness: Packedness,
    pub k_max: u32,
    /// Largest `k <= k_max` such that `I^(j) = I^j` for every `j <= k`.
    pub equal_up_to: u32,
    /// First `k` with `I^(k) != I^k`, and a witness monomial.
    pub unequal: Option<(u32, Monomial)>,
}

impl EdgeTheoremReport {
    pub fn bipartite(&self) -> bool {
        self.bipartition.is_bipartite()
    }

    pub fn packed(&self) -> bool {
        self.packedness.packed()
    }

    pub fn powers_equal(&self) -> bool {
        self.unequal.is_none()
    }

    /// All three verdicts coincide.
    pub fn verdicts_agree(&self) -> bool {
        self.bipartite() == self.packed() && self.packed() == self.powers_equal()
    }

    /// No verdict contradicts the equivalence. Bounded equality may still
    /// hold for a non-bipartite graph when `k_max` is below the odd girth's
    /// critical power.
    pub fn consistent(&self) -> bool {
        self.bipartite() == self.packed() && (self.powers_equal() || !self.bipartite())
    }
}

pub fn verify_edge_theorem(graph: &Graph, ring: &RingRef, k_max: u32) -> Result<EdgeTheoremReport> {
    if k_max < 2 {
        return Err(Error::InvalidArgument("k_max must be at least 2".into()));
    }
    let ideal = edge_ideal(graph, ring)?;
    let bipartition = graph.bipartition();
    if ideal.is_zero() {
        // edgeless: every power is the zero ideal and there is nothing to pack
        return Ok(EdgeTheoremReport {
            bipartition,
            packedness: Packedness { failing: None, minors_checked: 0 },
            k_max,
            equal_up_to: k_max,
            unequal: None,
        });
    }
    let packedness = is_packed(&ideal)?;
    let mut equal_up_to = 1;
    let mut unequal = None;
    for k in 2..=k_max {
        let cmp = symbolic_equals_ordinary(&ideal, k)?;
        match cmp.witness {
            None => equal_up_to = k,
            Some(w) => {
                unequal = Some((k, w));
                break;
            }
        }
    }
    Ok(EdgeTheoremReport { bipartition, packedness, k_max, equal_up_to, unequal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_up_to_degree;
    use crate::ring::Ring;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(r.clone(), gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        ideal(&Ring::new(["x", "y", "z"]).unwrap(), &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    fn four_cycle() -> MonomialIdeal {
        let r = Ring::indexed("x", 4).unwrap();
        edge_ideal(&Graph::cycle(4).unwrap(), &r).unwrap()
    }

    /// Minimal covers by scanning every subset of variables.
    fn brute_covers(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
        let n = ideal.ring().n();
        let masks: Vec<u64> = ideal.generators().iter().map(Monomial::support_mask).collect();
        let covers: Vec<u64> =
            (0u64..1 << n).filter(|c| masks.iter().all(|e| e & c != 0)).collect();
        let mut minimal: Vec<Vec<usize>> = covers
            .iter()
            .filter(|&&c| !covers.iter().any(|&d| d != c && d & c == d))
            .map(|&c| (0..n).filter(|i| c >> i & 1 == 1).collect())
            .collect();
        minimal.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        minimal
    }

    fn vars(p: &[PrimeComponent]) -> Vec<Vec<usize>> {
        p.iter().map(|q| q.variables().to_vec()).collect()
    }

    #[test]
    fn minimal_primes_examples() {
        assert_eq!(vars(&minimal_primes(&triangle()).unwrap()), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let r1 = Ring::new(["x"]).unwrap();
        assert_eq!(vars(&minimal_primes(&ideal(&r1, &[&[1]])).unwrap()), vec![vec![0]]);
        let r4 = Ring::new(["x", "y", "z", "w"]).unwrap();
        let i = ideal(&r4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let expected = brute_covers(&i);
        assert_eq!(expected, vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);
        assert_eq!(vars(&minimal_primes(&i).unwrap()), expected);
        assert_eq!(minimal_primes(&ideal(&r1, &[&[2]])), Err(Error::NotSquareFree));
        assert_eq!(minimal_primes(&MonomialIdeal::zero(r1.clone())), Err(Error::ZeroIdeal));
        assert_eq!(minimal_primes(&MonomialIdeal::unit(r1)), Err(Error::UnitIdeal));
    }

    #[test]
    fn codim_examples() {
        assert_eq!(codim(&triangle()).unwrap(), 2);
        assert_eq!(dim_quotient(&triangle()).unwrap(), 1);
        let r = Ring::new(["x", "y", "z"]).unwrap();
        assert_eq!(codim(&ideal(&r, &[&[1, 0, 0]])).unwrap(), 1);
        let mm = MonomialIdeal::maximal(r.clone());
        assert_eq!((codim(&mm).unwrap(), dim_quotient(&mm).unwrap()), (3, 0));
        assert_eq!(codim(&ideal(&r, &[&[3, 0, 0], &[0, 2, 0]])).unwrap(), 2);
        assert_eq!(codim(&MonomialIdeal::zero(r.clone())).unwrap(), 0);
        assert_eq!(codim(&MonomialIdeal::unit(r)), Err(Error::UnitIdeal));
    }

    #[test]
    fn triangle_second_symbolic_power() {
        let t = triangle();
        let r = t.ring().clone();
        let sym = symbolic_power(&t, 2).unwrap();
        // brute force: monomials of degree <= 6 in all three squared primes
        let primes = [ideal(&r, &[&[1, 0, 0], &[0, 1, 0]]), ideal(&r, &[&[1, 0, 0], &[0, 0, 1]]), ideal(&r, &[&[0, 1, 0], &[0, 0, 1]])];
        let squares: Vec<MonomialIdeal> = primes.iter().map(|p| p.power(2).unwrap()).collect();
        let members: Vec<Monomial> = monomials_up_to_degree(3, 6)
            .into_iter()
            .filter(|mm| squares.iter().all(|s| s.contains(mm).unwrap()))
            .collect();
        let brute = MonomialIdeal::from_generators(r.clone(), members).unwrap();
        assert_eq!(sym, brute);
        assert_eq!(sym, ideal(&r, &[&[2, 2, 0], &[2, 0, 2], &[0, 2, 2], &[1, 1, 1]]));
        assert_eq!(symbolic_power(&t, 1).unwrap(), t);
    }

    #[test]
    fn comparison_examples() {
        let cmp = symbolic_equals_ordinary(&triangle(), 2).unwrap();
        assert!(!cmp.equal());
        assert_eq!(cmp.witness, Some(m(&[1, 1, 1])));

        let r = Ring::new(["x", "y"]).unwrap();
        assert!(symbolic_equals_ordinary(&MonomialIdeal::maximal(r), 3).unwrap().equal());
        let c4 = four_cycle();
        for k in 2..=4 {
            assert!(symbolic_equals_ordinary(&c4, k).unwrap().equal(), "k={k}");
        }
        let r1 = Ring::new(["x"]).unwrap();
        assert_eq!(symbolic_power(&ideal(&r1, &[&[2]]), 2), Err(Error::NotSquareFree));
    }

    #[test]
    fn disjoint_examples() {
        assert_eq!(max_disjoint_monomials(&triangle()).unwrap().0, 1);
        let r4 = Ring::new(["x", "y", "z", "w"]).unwrap();
        let i = ideal(&r4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(max_disjoint_monomials(&i).unwrap(), (2, vec![m(&[0, 0, 1, 1]), m(&[1, 1, 0, 0])]));
        let mm = MonomialIdeal::maximal(Ring::new(["x", "y", "z"]).unwrap());
        assert_eq!(max_disjoint_monomials(&mm).unwrap().0, 3);
    }

    #[test]
    fn packedness_examples() {
        let p = is_packed(&triangle()).unwrap();
        let f = p.failing.expect("triangle is not packed");
        assert!(f.zeros.is_empty() && f.ones.is_empty());
        assert_eq!((f.codim, f.disjoint), (2, 1));
        assert!(is_packed(&four_cycle()).unwrap().packed());
        let r1 = Ring::new(["x"]).unwrap();
        assert!(is_packed(&ideal(&r1, &[&[1]])).unwrap().packed());
    }

    #[test]
    fn minor_order_starts_with_identity() {
        let a = minor_assignments(2);
        assert_eq!(a.len(), 9);
        assert_eq!(a[0], (vec![], vec![]));
        assert_eq!(a[1], (vec![], vec![0]));
        assert_eq!(a[3], (vec![0], vec![]));
    }

    #[test]
    fn edge_ideal_examples() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        assert_eq!(edge_ideal(&Graph::cycle(3).unwrap(), &r).unwrap(), triangle());
        let r2 = Ring::new(["x", "y"]).unwrap();
        assert_eq!(edge_ideal(&Graph::new(2, [(0, 1)]).unwrap(), &r2).unwrap(), ideal(&r2, &[&[1, 1]]));
        assert_eq!(
            edge_ideal(&Graph::path(3).unwrap(), &r).unwrap(),
            ideal(&r, &[&[1, 1, 0], &[0, 1, 1]])
        );
    }

    #[test]
    fn edge_theorem_examples() {
        let r3 = Ring::indexed("x", 3).unwrap();
        let rep = verify_edge_theorem(&Graph::cycle(3).unwrap(), &r3, 2).unwrap();
        assert!(!rep.bipartite() && !rep.packed() && !rep.powers_equal());
        assert_eq!(rep.unequal, Some((2, m(&[1, 1, 1]))));
        assert!(rep.verdicts_agree());

        let r4 = Ring::indexed("x", 4).unwrap();
        let rep = verify_edge_theorem(&Graph::cycle(4).unwrap(), &r4, 3).unwrap();
        assert!(rep.bipartite() && rep.packed() && rep.powers_equal());
        assert_eq!(rep.equal_up_to, 3);

        let r5 = Ring::indexed("x", 5).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let rep = verify_edge_theorem(&c5, &r5, 3).unwrap();
        assert!(!rep.bipartite() && !rep.packed());
        assert_eq!(rep.unequal, Some((3, m(&[1, 1, 1, 1, 1]))));
        assert!(rep.verdicts_agree());
    }
}
