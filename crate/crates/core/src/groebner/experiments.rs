//! Membership experiments: radicals, Mather indices, Kollár's family and
//! Frobenius powers.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::buchberger::{GroebnerBasis, GroebnerCaps};
use super::field::{Field, PrimeField};
use super::poly::{PolyRing, PolyRingRef, Polynomial};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::Ring;

fn common_ring<F: Field>(ring: &PolyRingRef<F>, polys: &[Polynomial<F>]) -> Result<()> {
    for p in polys {
        PolyRing::same(ring, p.ring())?;
    }
    Ok(())
}

/// Whether `f` lies in the radical of `(gens)`: `1 ∈ (gens, 1 - t f)` with a
/// fresh variable `t`.
pub fn radical_member<F: Field>(f: &Polynomial<F>, gens: &[Polynomial<F>]) -> Result<bool> {
    radical_member_with_caps(f, gens, GroebnerCaps::default())
}

pub fn radical_member_with_caps<F: Field>(
    f: &Polynomial<F>,
    gens: &[Polynomial<F>],
    caps: GroebnerCaps,
) -> Result<bool> {
    let ring = f.ring();
    common_ring(ring, gens)?;
    let ext = ring.extended("t");
    let t = Polynomial::var(&ext, ring.n())?;
    let mut lifted = Vec::with_capacity(gens.len() + 1);
    for g in gens {
        lifted.push(g.embed(&ext)?);
    }
    lifted.push(Polynomial::one(&ext).sub(&t.mul(&f.embed(&ext)?)?)?);
    Ok(GroebnerBasis::of(&ext, &lifted, caps)?.is_unit())
}

/// Least `N` in `1..=n_max` with `f^N ∈ (gb)`, keeping only the normal
/// form of the running power.
pub fn power_membership_index<F: Field>(f: &Polynomial<F>, gb: &GroebnerBasis<F>, n_max: u32) -> Result<Option<u32>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("N_max must be positive".into()));
    }
    let mut current = gb.normal_form(f)?;
    for n in 1..=n_max {
        if current.is_zero() {
            return Ok(Some(n));
        }
        if n < n_max {
            current = gb.normal_form(&current.mul(f)?)?;
        }
    }
    Ok(None)
}

/// The partial derivatives `(f_1, ..., f_n)`, zeros included.
pub fn jacobian_ideal<F: Field>(f: &Polynomial<F>) -> Result<Vec<Polynomial<F>>> {
    (0..f.ring().n()).map(|i| f.derivative(i)).collect()
}

/// Generators of `(a) ∩ (b)`, by eliminating `t` from `t a + (1 - t) b`.
pub fn intersect_ideals<F: Field>(
    ring: &PolyRingRef<F>,
    a: &[Polynomial<F>],
    b: &[Polynomial<F>],
    caps: GroebnerCaps,
) -> Result<Vec<Polynomial<F>>> {
    common_ring(ring, a)?;
    common_ring(ring, b)?;
    let ext = ring.eliminating("t");
    let t = Polynomial::var(&ext, ring.n())?;
    let one_minus_t = Polynomial::one(&ext).sub(&t)?;
    let mut lifted = Vec::with_capacity(a.len() + b.len());
    for g in a {
        lifted.push(t.mul(&g.embed(&ext)?)?);
    }
    for g in b {
        lifted.push(one_minus_t.mul(&g.embed(&ext)?)?);
    }
    let gb = GroebnerBasis::of(&ext, &lifted, caps)?;
    let mut out = Vec::new();
    for g in gb.polynomials() {
        if let Some(h) = g.restrict(ring)? {
            out.push(h);
        }
    }
    Ok(out)
}

/// Generators of `(gens) : h`.
pub fn colon_by<F: Field>(
    ring: &PolyRingRef<F>,
    gens: &[Polynomial<F>],
    h: &Polynomial<F>,
    caps: GroebnerCaps,
) -> Result<Vec<Polynomial<F>>> {
    if h.is_zero() {
        return Ok(alloc::vec![Polynomial::one(ring)]);
    }
    intersect_ideals(ring, gens, core::slice::from_ref(h), caps)?
        .iter()
        .map(|g| g.div_exact(h)?.ok_or_else(|| Error::InvalidArgument("intersection not divisible".into())))
        .collect()
}

/// Whether some generator has a nonzero constant term, i.e. the ideal is
/// not inside the maximal ideal of the origin.
fn escapes_origin<F: Field>(gens: &[Polynomial<F>]) -> bool {
    gens.iter().any(|g| !g.field().is_zero(&g.constant_term()))
}

/// Whether `f` lies in `(gens)` after localizing at the origin: some `u`
/// with `u(0) != 0` has `u f ∈ (gens)`, i.e. `(gens) : f` is not inside
/// the maximal ideal.
pub fn local_member<F: Field>(f: &Polynomial<F>, gens: &[Polynomial<F>], caps: GroebnerCaps) -> Result<bool> {
    Ok(escapes_origin(&colon_by(f.ring(), gens, f, caps)?))
}

/// Least `N` in `1..=n_max` with `f^N` in the localization of `(gens)` at
/// the origin, through the chain `K_N = K_(N-1) : f`.
pub fn local_power_membership_index<F: Field>(
    f: &Polynomial<F>,
    gens: &[Polynomial<F>],
    n_max: u32,
    caps: GroebnerCaps,
) -> Result<Option<u32>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("N_max must be positive".into()));
    }
    let ring = f.ring();
    let mut current: Vec<Polynomial<F>> = gens.to_vec();
    for n in 1..=n_max {
        current = colon_by(ring, &current, f, caps)?;
        if escapes_origin(&current) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatherReport {
    /// Least `N` with `f^N ∈ J(f)` for the germ at the origin.
    pub index: Option<u32>,
    /// Least `N` with `f^N ∈ J(f)` in the polynomial ring. Critical points
    /// away from the origin can make this larger than the germ index.
    pub global_index: Option<u32>,
    pub nvars: usize,
    pub n_max: u32,
    /// In positive characteristic `J(f)` can collapse (e.g. `f = g^p`).
    pub positive_characteristic: bool,
}

impl MatherReport {
    /// Whether the germ index respects the bound `N <= n` (`t = n` partials).
    pub fn within_bound(&self) -> Option<bool> {
        self.index.map(|n| n as usize <= self.nvars)
    }
}

/// Mather index of the germ of `f` at the origin, computed from a
/// polynomial representative, plus the index in the polynomial ring.
pub fn mather_index<F: Field>(f: &Polynomial<F>, n_max: u32) -> Result<MatherReport> {
    mather_index_with_caps(f, n_max, GroebnerCaps::default())
}

pub fn mather_index_with_caps<F: Field>(f: &Polynomial<F>, n_max: u32, caps: GroebnerCaps) -> Result<MatherReport> {
    if !f.field().is_zero(&f.constant_term()) {
        return Err(Error::InvalidArgument("f must vanish at the origin".into()));
    }
    let jac = jacobian_ideal(f)?;
    let gb = GroebnerBasis::of(f.ring(), &jac, caps)?;
    let global_index = power_membership_index(f, &gb, n_max)?;
    // global membership implies local membership, so only search below it
    let local_cap = global_index.map_or(n_max, |n| n.saturating_sub(1));
    let index = match local_cap {
        0 => global_index,
        cap => local_power_membership_index(f, &jac, cap, caps)?.or(global_index),
    };
    Ok(MatherReport {
        index,
        global_index,
        nvars: f.ring().n(),
        n_max,
        positive_characteristic: f.field().characteristic() != 0,
    })
}

/// `f_1 = x_1^d`, `f_i = x_1 x_n^(d-1) - x_i^d` for `2 <= i <= n-1`, in
/// `k[x1..xn]` with grevlex.
pub fn kollar_family<F: Field>(field: F, n: usize, d: u32) -> Result<(PolyRingRef<F>, Vec<Polynomial<F>>)> {
    if n < 3 || d < 2 {
        return Err(Error::InvalidArgument("the family needs n >= 3 and d >= 2".into()));
    }
    let ring = PolyRing::grevlex(Ring::indexed("x", n)?, field);
    let mono = |pairs: &[(usize, u32)]| -> Result<Monomial> {
        let mut e = alloc::vec![0u32; n];
        for &(i, k) in pairs {
            e[i] = k;
        }
        Monomial::new(e)
    };
    let mut gens = alloc::vec![Polynomial::from_monomial(&ring, mono(&[(0, d)])?)];
    for i in 1..n - 1 {
        let a = Polynomial::from_monomial(&ring, mono(&[(0, 1), (n - 1, d - 1)])?);
        let b = Polynomial::from_monomial(&ring, mono(&[(i, d)])?);
        gens.push(a.sub(&b)?);
    }
    Ok((ring, gens))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KollarSharpness {
    pub n: usize,
    pub d: u32,
    /// Least `D` with `x_(n-1)^D ∈ I`; `None` when `D_max` was exhausted.
    pub least: Option<u32>,
    pub expected: u64,
    pub d_max: u32,
}

impl KollarSharpness {
    pub fn matches_expected(&self) -> bool {
        self.least.map(u64::from) == Some(self.expected)
    }
}

pub fn kollar_sharpness<F: Field>(field: F, n: usize, d: u32, d_max: u32) -> Result<KollarSharpness> {
    let (ring, gens) = kollar_family(field, n, d)?;
    let gb = GroebnerBasis::of(&ring, &gens, GroebnerCaps::default())?;
    let target = Polynomial::var(&ring, n - 2)?;
    let expected = (d as u64).checked_pow(n as u32 - 1).unwrap_or(u64::MAX);
    Ok(KollarSharpness { n, d, least: power_membership_index(&target, &gb, d_max)?, expected, d_max })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KollarBound {
    pub bound: BigUint,
    pub q: usize,
    /// Degrees sorted descending; the first `q` are multiplied.
    pub degrees: Vec<u32>,
    /// Every degree is at least 3.
    pub within_hypothesis: bool,
}

pub fn kollar_bound(degrees: &[u32], n: usize) -> Result<KollarBound> {
    if degrees.is_empty() {
        return Err(Error::InvalidArgument("empty degree list".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let q = sorted.len().min(n);
    let bound = sorted[..q].iter().fold(BigUint::from(1u32), |acc, &d| acc * d);
    Ok(KollarBound { bound, q, within_hypothesis: sorted.iter().all(|&d| d >= 3), degrees: sorted })
}

fn frobenius_exponent(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .filter(|&q| q <= u32::MAX as u64)
        .ok_or_else(|| Error::CapExceeded { what: String::from("Frobenius exponent p^e"), limit: u32::MAX as usize })
}

/// `g^(p^e)` computed term-wise, valid because Frobenius is additive.
pub fn frobenius_power(gens: &[Polynomial<PrimeField>], e: u32) -> Result<Vec<Polynomial<PrimeField>>> {
    let Some(first) = gens.first() else { return Ok(Vec::new()) };
    let ring = first.ring().clone();
    common_ring(&ring, gens)?;
    let q = frobenius_exponent(ring.field().modulus(), e)?;
    let field = *ring.field();
    gens.iter()
        .map(|g| {
            let mut raw = Vec::with_capacity(g.len());
            for (m, c) in g.terms() {
                raw.push((m.pow(q as u32)?, field.pow(c, q)));
            }
            Polynomial::from_terms(&ring, raw)
        })
        .collect()
}

/// Rejects fields of characteristic 0 for callers holding a generic field.
pub fn require_positive_characteristic<F: Field>(field: &F) -> Result<u64> {
    match field.characteristic() {
        0 => Err(Error::CharacteristicZero),
        p => Ok(p),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub t: usize,
    pub p: u64,
    pub e: u32,
    /// `t * p^e`.
    pub power: u64,
    pub products_checked: u64,
    /// First product of `power` generators outside `J^[p^e]`.
    pub failure: Option<Polynomial<PrimeField>>,
}

impl FrobeniusReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

fn multiset_count(t: usize, size: u64) -> Option<u64> {
    // C(size + t - 1, t - 1)
    let mut acc: u128 = 1;
    for i in 1..t as u128 {
        acc = acc.checked_mul(size as u128 + i)? / i;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Checks `(gens)^(t p^e) ⊆ (gens)^[p^e]` on every product of `t p^e`
/// generators, where `t` is the number of generators.
pub fn frobenius_containment_check(
    gens: &[Polynomial<PrimeField>],
    e: u32,
    max_products: u64,
) -> Result<FrobeniusReport> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidArgument("no generators".into()));
    };
    let ring = first.ring().clone();
    let p = ring.field().modulus();
    let t = gens.len();
    let power = (t as u64)
        .checked_mul(frobenius_exponent(p, e)?)
        .ok_or_else(|| Error::CapExceeded { what: String::from("t * p^e"), limit: u32::MAX as usize })?;
    let count = multiset_count(t, power).unwrap_or(u64::MAX);
    if count > max_products {
        return Err(Error::CapExceeded {
            what: alloc::format!("{count} power products"),
            limit: max_products as usize,
        });
    }
    let gb = GroebnerBasis::of(&ring, &frobenius_power(gens, e)?, GroebnerCaps::default())?;
    let mut report = FrobeniusReport { t, p, e, power, products_checked: 0, failure: None };
    // normal forms of partial products suffice: NF(a b) = NF(NF(a) b)
    let one = Polynomial::one(&ring);
    let mut stack: Vec<(usize, u64, Polynomial<PrimeField>, Polynomial<PrimeField>)> =
        alloc::vec![(0, power, gb.normal_form(&one)?, one)];
    while let Some((start, left, reduced, product)) = stack.pop() {
        if left == 0 {
            report.products_checked += 1;
            if !reduced.is_zero() {
                report.failure = Some(product);
                return Ok(report);
            }
            continue;
        }
        if reduced.is_zero() {
            // every completion stays in the ideal
            report.products_checked += multiset_count(t - start, left).unwrap_or(u64::MAX);
            continue;
        }
        for i in (start..t).rev() {
            let next = gb.normal_form(&reduced.mul(&gens[i])?)?;
            stack.push((i, left - 1, next, product.mul(&gens[i])?));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger::buchberger;
    use crate::groebner::field::Rationals;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn poly<F: Field>(r: &PolyRingRef<F>, terms: &[(i64, &[u32])]) -> Polynomial<F> {
        let f = r.field();
        Polynomial::from_terms(r, terms.iter().map(|&(c, e)| (m(e), f.from_i64(c))).collect()).unwrap()
    }

    fn qxy() -> PolyRingRef<Rationals> {
        PolyRing::grevlex(Ring::new(["x", "y"]).unwrap(), Rationals)
    }

    #[test]
    fn radical_membership() {
        let r = qxy();
        let x = poly(&r, &[(1, &[1, 0])]);
        let y = poly(&r, &[(1, &[0, 1])]);
        assert!(radical_member(&x, &[poly(&r, &[(1, &[2, 0])])]).unwrap());
        assert!(!radical_member(&y, &[x.clone()]).unwrap());
        assert!(radical_member(&Polynomial::zero(&r), &[x.clone()]).unwrap());
    }

    #[test]
    fn intersections_and_colons() {
        let r = qxy();
        let x = poly(&r, &[(1, &[1, 0])]);
        let y = poly(&r, &[(1, &[0, 1])]);
        let meet = intersect_ideals(&r, &[x.clone()], &[y.clone()], GroebnerCaps::default()).unwrap();
        let rendered: Vec<_> = meet.iter().map(|p| p.render()).collect();
        assert_eq!(rendered, vec!["x*y"]);
        let xy = x.mul(&y).unwrap();
        let col = colon_by(&r, &[xy.clone()], &x, GroebnerCaps::default()).unwrap();
        assert_eq!(col, vec![y.clone()]);
        // x (x - 1) is a unit multiple of x near the origin
        let xm1 = poly(&r, &[(1, &[2, 0]), (-1, &[1, 0])]);
        assert!(local_member(&x, &[xm1.clone()], GroebnerCaps::default()).unwrap());
        assert!(!GroebnerBasis::of(&r, &[xm1], GroebnerCaps::default()).unwrap().contains(&x).unwrap());
        assert!(!local_member(&y, &[x], GroebnerCaps::default()).unwrap());
    }

    #[test]
    fn power_membership() {
        let r = qxy();
        let gb = buchberger(&[poly(&r, &[(1, &[2, 0])]), poly(&r, &[(1, &[0, 2])])]).unwrap();
        let s = poly(&r, &[(1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(power_membership_index(&s, &gb, 10).unwrap(), Some(3));
        assert_eq!(power_membership_index(&s, &gb, 2).unwrap(), None);
        assert_eq!(power_membership_index(&poly(&r, &[(1, &[2, 0])]), &gb, 5).unwrap(), Some(1));
        let gb5 = buchberger(&[poly(&r, &[(1, &[5, 0])])]).unwrap();
        assert_eq!(power_membership_index(&poly(&r, &[(1, &[1, 0])]), &gb5, 9).unwrap(), Some(5));
    }

    #[test]
    fn jacobians_and_mather() {
        let r = qxy();
        let f = poly(&r, &[(1, &[2, 0]), (1, &[0, 2])]);
        let j: Vec<_> = jacobian_ideal(&f).unwrap().iter().map(|p| p.render()).collect();
        assert_eq!(j, vec!["2*x", "2*y"]);
        assert_eq!(mather_index(&f, 4).unwrap().index, Some(1));
        let g = poly(&r, &[(1, &[5, 0]), (1, &[0, 5]), (1, &[3, 3])]);
        let rep = mather_index(&g, 4).unwrap();
        assert_eq!(rep.index, Some(2));
        assert_eq!(rep.global_index, None);
        assert_eq!(rep.within_bound(), Some(true));
        assert!(mather_index(&poly(&r, &[(1, &[1, 0]), (1, &[0, 0])]), 3).is_err());
        let c = jacobian_ideal(&poly(&r, &[(7, &[0, 0])])).unwrap();
        assert!(c.iter().all(|p| p.is_zero()));
    }

    #[test]
    fn kollar_examples() {
        let (ring, fam) = kollar_family(Rationals, 3, 2).unwrap();
        assert_eq!(fam.len(), 2);
        assert_eq!(fam[1].render(), "-x2^2 + x1*x3");
        let gb = GroebnerBasis::of(&ring, &fam, GroebnerCaps::default()).unwrap();
        let x2 = Polynomial::var(&ring, 1).unwrap();
        for d in 1..4 {
            assert!(!gb.contains(&x2.pow(d).unwrap()).unwrap());
        }
        assert!(gb.contains(&x2.pow(4).unwrap()).unwrap());
        assert!(radical_member(&x2, &fam).unwrap());

        let s = kollar_sharpness(Rationals, 3, 2, 10).unwrap();
        assert_eq!(s.least, Some(4));
        assert!(s.matches_expected());
        assert_eq!(kollar_sharpness(Rationals, 3, 3, 12).unwrap().least, Some(9));
        assert_eq!(kollar_sharpness(Rationals, 3, 3, 5).unwrap().least, None);
        assert!(kollar_family(Rationals, 2, 3).is_err());
    }

    #[test]
    fn kollar_bounds() {
        assert_eq!(kollar_bound(&[3, 3, 3], 3).unwrap().bound, BigUint::from(27u32));
        let b = kollar_bound(&[4, 5], 3).unwrap();
        assert_eq!((b.q, b.bound.clone()), (2, BigUint::from(20u32)));
        assert_eq!(kollar_bound(&[7], 5).unwrap().bound, BigUint::from(7u32));
        assert_eq!(kollar_bound(&[3, 9, 4], 2).unwrap().bound, BigUint::from(36u32));
        assert!(!kollar_bound(&[2, 3], 2).unwrap().within_hypothesis);
        assert!(kollar_bound(&[], 2).is_err());
    }

    #[test]
    fn frobenius() {
        let f2 = PrimeField::new(2).unwrap();
        let r = PolyRing::grevlex(Ring::new(["x", "y"]).unwrap(), f2);
        let x = poly(&r, &[(1, &[1, 0])]);
        let y = poly(&r, &[(1, &[0, 1])]);
        let fp = frobenius_power(&[x.clone(), y.clone()], 1).unwrap();
        assert_eq!(fp[0].render(), "x^2");
        assert_eq!(frobenius_power(&[x.clone()], 0).unwrap()[0], x);
        let s = x.add(&y).unwrap();
        assert_eq!(frobenius_power(&[s.clone()], 1).unwrap()[0].render(), "x^2 + y^2");

        let rep = frobenius_containment_check(&[x.clone(), y.clone()], 1, 1000).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.power, 4);
        assert_eq!(rep.products_checked, 5);
        assert!(frobenius_containment_check(&[s], 2, 10).unwrap().holds());
        assert!(matches!(frobenius_containment_check(&[x, y], 1, 2), Err(Error::CapExceeded { .. })));
        assert_eq!(require_positive_characteristic(&Rationals), Err(Error::CharacteristicZero));
    }

    #[test]
    fn frobenius_three_variables_char_two() {
        let f2 = PrimeField::new(2).unwrap();
        let r = PolyRing::grevlex(Ring::new(["x", "y", "z"]).unwrap(), f2);
        let gens: Vec<_> = (0..3).map(|i| Polynomial::var(&r, i).unwrap()).collect();
        let rep = frobenius_containment_check(&gens, 1, 10_000).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.products_checked, 28);
    }
}
