//! Integral closure of monomial ideals through the Newton polyhedron, plus
//! empirical Briancon-Skoda containment scans.
//!
//! The Newton polyhedron of `I` is `conv(exponents of generators) + R^n_{>=0}`,
//! and a monomial is integral over `I` exactly when its exponent vector lies
//! in it (a standard fact, imported here and cross-checked in tests against
//! the dependence criterion `m^k in I^k`).
//!
//! Facets are found by projecting out the convex multipliers with exact
//! Fourier-Motzkin elimination, pruned by Chernikov's history rule and a
//! final tight-set rank test.
//!
//! Closure generators are scanned in the box `[0, M_j]` where `M_j` is the
//! largest `j`-th exponent among the generators: a lattice point with
//! `a_j > M_j` still lies in the polyhedron after lowering `a_j` by one,
//! because every convex combination of generators has `j`-th coordinate at
//! most `M_j`. So no minimal generator leaves the box.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::rank_rational;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::ring::{Ring, RingRef};

/// Lattice points examined by a single closure scan before giving up.
pub const MAX_BOX_POINTS: u64 = 20_000_000;

/// The half-space `normal . a >= rhs`, with `normal >= 0` primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<u64>,
    pub rhs: u64,
}

impl Facet {
    pub fn holds(&self, point: &[u32]) -> bool {
        let lhs: u128 = self.normal.iter().zip(point).map(|(&c, &a)| c as u128 * a as u128).sum();
        lhs >= self.rhs as u128
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    ring: RingRef,
    points: Vec<Vec<u32>>,
    facets: Vec<Facet>,
}

/// One inequality `lam . λ + a . x + c >= 0` during elimination.
#[derive(Clone, PartialEq, Eq)]
struct Row {
    lam: Vec<BigInt>,
    a: Vec<BigInt>,
    c: BigInt,
    history: Vec<u64>,
}

impl Row {
    fn normalize(&mut self) {
        let mut g = BigInt::zero();
        for v in self.lam.iter().chain(&self.a).chain(core::iter::once(&self.c)) {
            g = g.gcd(v);
        }
        if !g.is_zero() && g != BigInt::from(1) {
            for v in self.lam.iter_mut().chain(self.a.iter_mut()) {
                *v /= &g;
            }
            self.c /= &g;
        }
    }

    fn history_size(&self) -> u32 {
        self.history.iter().map(|w| w.count_ones()).sum()
    }

    fn same_inequality(&self, other: &Row) -> bool {
        self.lam == other.lam && self.a == other.a && self.c == other.c
    }
}

fn history_bit(idx: usize, words: usize) -> Vec<u64> {
    let mut h = vec![0u64; words];
    h[idx / 64] |= 1 << (idx % 64);
    h
}

/// Projects `{(x, λ) : x >= Σ λ_i g_i, λ >= 0, Σ λ_i = 1}` onto `x`.
fn eliminate(points: &[Vec<u32>], n: usize) -> Vec<(Vec<BigInt>, BigInt)> {
    let m = points.len();
    let free = m - 1; // λ_m = 1 - Σ_{i<m} λ_i
    let last = &points[m - 1];
    let total_rows = n + free + 1;
    let words = total_rows.div_ceil(64);
    let mut rows: Vec<Row> = Vec::with_capacity(total_rows);
    // x_j - g_mj + Σ_{i<m} (g_mj - g_ij) λ_i >= 0
    for j in 0..n {
        let mut a = vec![BigInt::zero(); n];
        a[j] = BigInt::from(1);
        rows.push(Row {
            lam: (0..free).map(|i| BigInt::from(last[j] as i64 - points[i][j] as i64)).collect(),
            a,
            c: BigInt::from(-(last[j] as i64)),
            history: history_bit(rows.len(), words),
        });
    }
    for i in 0..free {
        let mut lam = vec![BigInt::zero(); free];
        lam[i] = BigInt::from(1);
        rows.push(Row { lam, a: vec![BigInt::zero(); n], c: BigInt::zero(), history: history_bit(rows.len(), words) });
    }
    rows.push(Row {
        lam: vec![BigInt::from(-1); free],
        a: vec![BigInt::zero(); n],
        c: BigInt::from(1),
        history: history_bit(rows.len(), words),
    });

    let mut remaining: Vec<usize> = (0..free).collect();
    let mut eliminated = 0u32;
    while !remaining.is_empty() {
        // eliminate the multiplier producing the fewest new rows
        let (pos_in_remaining, &var) = remaining
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| {
                let p = rows.iter().filter(|r| r.lam[v].is_positive()).count();
                let q = rows.iter().filter(|r| r.lam[v].is_negative()).count();
                p * q
            })
            .expect("nonempty");
        remaining.swap_remove(pos_in_remaining);
        eliminated += 1;

        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows.drain(..) {
            if r.lam[var].is_positive() {
                pos.push(r);
            } else if r.lam[var].is_negative() {
                neg.push(r);
            } else {
                zero.push(r);
            }
        }
        let mut next = zero;
        for p in &pos {
            for q in &neg {
                let history: Vec<u64> = p.history.iter().zip(&q.history).map(|(a, b)| a | b).collect();
                let size: u32 = history.iter().map(|w| w.count_ones()).sum();
                if size > eliminated + 1 {
                    continue;
                }
                let wp = -&q.lam[var];
                let wq = p.lam[var].clone();
                let combine = |x: &BigInt, y: &BigInt| x * &wp + y * &wq;
                let mut row = Row {
                    lam: p.lam.iter().zip(&q.lam).map(|(x, y)| combine(x, y)).collect(),
                    a: p.a.iter().zip(&q.a).map(|(x, y)| combine(x, y)).collect(),
                    c: combine(&p.c, &q.c),
                    history,
                };
                row.normalize();
                next.push(row);
            }
        }
        next.retain(|r| r.history_size() <= eliminated + 1);
        let mut deduped: Vec<Row> = Vec::with_capacity(next.len());
        for r in next {
            if !deduped.iter().any(|d| d.same_inequality(&r)) {
                deduped.push(r);
            }
        }
        rows = deduped;
    }
    rows.into_iter().map(|r| (r.a, -r.c)).collect()
}

fn to_u64(v: &BigInt) -> Result<u64> {
    v.to_u64().ok_or_else(|| Error::CapExceeded { what: format!("facet coefficient {v}"), limit: u64::MAX as usize })
}

impl NewtonPolyhedron {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let n = ideal.ring().n();
        let points: Vec<Vec<u32>> = ideal.generators().iter().map(|g| g.exponents().to_vec()).collect();
        let mut facets = Vec::new();
        for (normal, rhs) in eliminate(&points, n) {
            if normal.iter().all(Zero::is_zero) {
                debug_assert!(!rhs.is_positive(), "projection is nonempty");
                continue;
            }
            if normal.iter().any(Signed::is_negative) {
                // cannot be valid on the orthant recession cone
                debug_assert!(false, "negative facet normal");
                continue;
            }
            if rhs.is_negative() {
                // implied by the orthant, never tight at a generator
                continue;
            }
            let normal = normal.iter().map(to_u64).collect::<Result<Vec<u64>>>()?;
            let rhs = to_u64(&rhs)?;
            let facet = Facet { normal, rhs };
            if is_facet(&facet, &points, n) && !facets.contains(&facet) {
                facets.push(facet);
            }
        }
        facets.sort();
        let poly = NewtonPolyhedron { ring: ideal.ring().clone(), points, facets };
        debug_assert!(poly.points.iter().all(|p| poly.contains_point(p)));
        Ok(poly)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains_point(&self, point: &[u32]) -> bool {
        self.facets.iter().all(|f| f.holds(point))
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.nvars() != self.ring.n() {
            return Err(Error::RingMismatch);
        }
        Ok(self.contains_point(m.exponents()))
    }

    /// Lattice points of the polyhedron that are minimal under divisibility,
    /// scanned inside the generator bounding box.
    pub fn minimal_lattice_points(&self) -> Result<Vec<Monomial>> {
        let n = self.ring.n();
        let mut bounds = vec![0u32; n];
        for p in &self.points {
            for (b, &e) in bounds.iter_mut().zip(p) {
                *b = (*b).max(e);
            }
        }
        let volume = bounds.iter().try_fold(1u64, |acc, &b| acc.checked_mul(b as u64 + 1));
        match volume {
            Some(v) if v <= MAX_BOX_POINTS => {}
            _ => {
                return Err(Error::CapExceeded {
                    what: "lattice points in the closure bounding box".into(),
                    limit: MAX_BOX_POINTS as usize,
                })
            }
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        loop {
            if self.contains_point(&cur) {
                // the region is upward closed, so local minimality suffices
                let minimal = (0..n).all(|j| {
                    if cur[j] == 0 {
                        return true;
                    }
                    cur[j] -= 1;
                    let inside = self.contains_point(&cur);
                    cur[j] += 1;
                    !inside
                });
                if minimal {
                    out.push(Monomial::new(cur.clone())?);
                }
            }
            // odometer step
            let mut j = 0;
            loop {
                if j == n {
                    return Ok(out);
                }
                if cur[j] < bounds[j] {
                    cur[j] += 1;
                    break;
                }
                cur[j] = 0;
                j += 1;
            }
        }
    }
}

/// The tight generators and tight orthant directions must span a
/// hyperplane.
fn is_facet(facet: &Facet, points: &[Vec<u32>], n: usize) -> bool {
    let value = |p: &[u32]| -> u128 { facet.normal.iter().zip(p).map(|(&c, &a)| c as u128 * a as u128).sum() };
    if points.iter().any(|p| value(p) < facet.rhs as u128) {
        return false;
    }
    let tight: Vec<&Vec<u32>> = points.iter().filter(|p| value(p) == facet.rhs as u128).collect();
    let Some(base) = tight.first() else {
        return false;
    };
    let mut rows: Vec<Vec<i64>> = tight[1..]
        .iter()
        .map(|p| p.iter().zip(base.iter()).map(|(&a, &b)| a as i64 - b as i64).collect())
        .collect();
    for k in 0..n {
        if facet.normal[k] == 0 {
            let mut e = vec![0i64; n];
            e[k] = 1;
            rows.push(e);
        }
    }
    rank_rational(&rows) == n - 1
}

pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    NewtonPolyhedron::new(ideal)
}

/// Whether `m` is integral over `I`.
pub fn is_integral(m: &Monomial, ideal: &MonomialIdeal) -> Result<bool> {
    if m.nvars() != ideal.ring().n() {
        return Err(Error::RingMismatch);
    }
    if ideal.contains(m)? {
        return Ok(true);
    }
    if ideal.is_zero() {
        return Ok(false);
    }
    NewtonPolyhedron::new(ideal)?.contains(m)
}

/// The integral closure of a nonzero monomial ideal.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let poly = NewtonPolyhedron::new(ideal)?;
    let gens = poly.minimal_lattice_points()?;
    let closure = MonomialIdeal::from_generators(ideal.ring().clone(), gens)?;
    debug_assert!(ideal.is_subset_of(&closure)?);
    Ok(closure)
}

/// Outcome of a bounded Briancon-Skoda scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrianconSkodaReport {
    pub ell: u32,
    pub n_max: u32,
    /// First `(n, m)` with `m` in the closure of `I^n` but not in `I^(n-ell+1)`.
    pub failure: Option<(u32, Monomial)>,
}

impl BrianconSkodaReport {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `closure(I^n) ⊆ I^(n-ell+1)` for every `ell <= n <= n_max`.
pub fn briancon_skoda_check(ideal: &MonomialIdeal, ell: u32, n_max: u32) -> Result<BrianconSkodaReport> {
    if ell == 0 {
        return Err(Error::InvalidArgument("ell must be positive".into()));
    }
    if n_max < ell {
        return Err(Error::InvalidArgument("n_max must be at least ell".into()));
    }
    for n in ell..=n_max {
        let closure = integral_closure(&ideal.power(n)?)?;
        let target = ideal.power(n - ell + 1)?;
        if let Some(m) = closure.first_outside(&target)? {
            return Ok(BrianconSkodaReport { ell, n_max, failure: Some((n, m)) });
        }
    }
    Ok(BrianconSkodaReport { ell, n_max, failure: None })
}

/// Bounded evidence for a uniform Briancon-Skoda number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformBsEvidence {
    pub n_max: u32,
    /// `per_n[n-1]` is the least `k` with `closure(I^n) ⊆ I^(n-k)`.
    pub per_n: Vec<u32>,
    /// Least `k` with `closure(I^n) ⊆ I^(n-k)` for every `k <= n <= n_max`.
    pub k: u32,
}

pub fn uniform_bs_number(ideal: &MonomialIdeal, n_max: u32) -> Result<UniformBsEvidence> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be positive".into()));
    }
    let mut powers = vec![MonomialIdeal::unit(ideal.ring().clone())];
    for _ in 1..=n_max {
        let next = powers.last().expect("nonempty").product(ideal)?;
        powers.push(next);
    }
    let mut per_n = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let closure = integral_closure(&powers[n as usize])?;
        let mut k = 0;
        while !closure.is_subset_of(&powers[(n - k) as usize])? {
            k += 1;
        }
        per_n.push(k);
    }
    let k = (0..=n_max)
        .find(|&k| (k.max(1)..=n_max).all(|n| per_n[n as usize - 1] <= k))
        .unwrap_or(n_max);
    Ok(UniformBsEvidence { n_max, per_n, k })
}

impl core::fmt::Display for Facet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut first = true;
        for (i, &c) in self.normal.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c == 1 {
                write!(f, "a{}", i + 1)?;
            } else {
                write!(f, "{c}*a{}", i + 1)?;
            }
        }
        write!(f, " >= {}", self.rhs)
    }
}

/// Renders a facet with the ring's variable names as coordinates.
pub fn render_facet(ring: &Ring, facet: &Facet) -> alloc::string::String {
    let mut parts = Vec::new();
    for (i, &c) in facet.normal.iter().enumerate() {
        if c == 1 {
            parts.push(alloc::string::ToString::to_string(ring.name(i)));
        } else if c > 1 {
            parts.push(format!("{c}*{}", ring.name(i)));
        }
    }
    format!("{} >= {}", parts.join(" + "), facet.rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_up_to_degree;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(r.clone(), gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    fn xy() -> RingRef {
        Ring::new(["x", "y"]).unwrap()
    }

    fn facet(normal: &[u64], rhs: u64) -> Facet {
        Facet { normal: normal.to_vec(), rhs }
    }

    #[test]
    fn facet_examples() {
        let r = xy();
        let p = newton_polyhedron(&ideal(&r, &[&[3, 0], &[0, 3]])).unwrap();
        assert_eq!(p.facets(), &[facet(&[0, 1], 0), facet(&[1, 0], 0), facet(&[1, 1], 3)]);
        let p = newton_polyhedron(&ideal(&r, &[&[1, 0]])).unwrap();
        assert_eq!(p.facets(), &[facet(&[0, 1], 0), facet(&[1, 0], 1)]);
        let p = newton_polyhedron(&ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(p.facets(), &[facet(&[0, 1], 0), facet(&[1, 0], 0), facet(&[1, 1], 2)]);
        assert_eq!(newton_polyhedron(&MonomialIdeal::zero(r)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn integrality_examples() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[0, 2]]);
        assert!(is_integral(&m(&[1, 1]), &i).unwrap());
        assert!(!is_integral(&m(&[1, 0]), &i).unwrap());
        assert!(is_integral(&m(&[2, 3]), &i).unwrap());
    }

    #[test]
    fn closure_examples() {
        let r = xy();
        let mm = MonomialIdeal::maximal(r.clone());
        assert_eq!(integral_closure(&ideal(&r, &[&[3, 0], &[0, 3]])).unwrap(), mm.power(3).unwrap());
        assert_eq!(integral_closure(&mm).unwrap(), mm);
        // (x^4, x^2 y, y^3): hull edges (4,0)-(2,1) and (2,1)-(0,3)
        let i = ideal(&r, &[&[4, 0], &[2, 1], &[0, 3]]);
        let c = integral_closure(&i).unwrap();
        assert_eq!(c, ideal(&r, &[&[4, 0], &[2, 1], &[1, 2], &[0, 3]]));
        assert_eq!(integral_closure(&c).unwrap(), c);
    }

    #[test]
    fn three_variable_facets_are_exact() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let i = ideal(&r, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let p = newton_polyhedron(&i).unwrap();
        assert!(p.facets().contains(&facet(&[1, 1, 1], 2)));
        assert_eq!(p.facets().len(), 4);
        assert_eq!(integral_closure(&i).unwrap(), MonomialIdeal::maximal(r).power(2).unwrap());
    }

    #[test]
    fn box_bound_sound_one_width_beyond() {
        let r = xy();
        let i = ideal(&r, &[&[5, 0], &[3, 1], &[0, 4]]);
        let p = newton_polyhedron(&i).unwrap();
        let closure = integral_closure(&i).unwrap();
        for mm in monomials_up_to_degree(2, 2 * 9) {
            if mm.exponent(0) <= 10 && mm.exponent(1) <= 8 && p.contains(&mm).unwrap() {
                assert!(closure.contains(&mm).unwrap(), "{mm:?}");
            }
        }
    }

    #[test]
    fn briancon_skoda_examples() {
        let r = xy();
        let i = ideal(&r, &[&[3, 0], &[0, 3]]);
        assert!(briancon_skoda_check(&i, 2, 5).unwrap().ok());
        let mm = MonomialIdeal::maximal(r.clone());
        assert!(briancon_skoda_check(&mm, 1, 4).unwrap().ok());
        // with ell = 1 the containment closure(I) ⊆ I first fails at x y^2
        let rep = briancon_skoda_check(&i, 1, 3).unwrap();
        assert_eq!(rep.failure, Some((1, m(&[1, 2]))));
    }

    #[test]
    fn uniform_bs_examples() {
        let r = xy();
        assert_eq!(uniform_bs_number(&MonomialIdeal::maximal(r.clone()), 4).unwrap().k, 0);
        let i = ideal(&r, &[&[3, 0], &[0, 3]]);
        let ev = uniform_bs_number(&i, 5).unwrap();
        assert_eq!(ev.k, 1);
        assert_eq!(ev.per_n[0], 1);
        let m2 = ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(uniform_bs_number(&m2, 5).unwrap().k, 0);
    }
}
