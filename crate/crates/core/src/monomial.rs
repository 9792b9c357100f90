//! Monomials and monomial ideals.
//!
//! A [`MonomialIdeal`] is stored as its minimal generating set, sorted in
//! graded-lexicographic order, so structural equality is ideal equality.
//! Every operation returns a minimalized ideal.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingRef};

/// Per-coordinate exponent cap; exceeding it is an error, never a wraparound.
pub const EXPONENT_CAP: u32 = 1_000_000;

/// An exponent vector. Ordering is graded-lexicographic: total degree first,
/// then the first differing exponent decides (larger is greater).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u64,
    exponents: Vec<u32>,
}

fn checked_exponent(value: u64) -> Result<u32> {
    if value > EXPONENT_CAP as u64 {
        Err(Error::ExponentOverflow { value, cap: EXPONENT_CAP })
    } else {
        Ok(value as u32)
    }
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        for &e in &exponents {
            checked_exponent(e as u64)?;
        }
        let degree = exponents.iter().map(|&e| e as u64).sum();
        Ok(Monomial { degree, exponents })
    }

    pub fn one(n: usize) -> Self {
        Monomial { degree: 0, exponents: vec![0; n] }
    }

    pub(crate) fn from_raw(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().map(|&e| e as u64).sum();
        Monomial { degree, exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Support as a bitmask; only valid for rings with at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << i))
    }

    /// Product of the variables in the support.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial::from_raw(self.exponents.iter().map(|&e| e.min(1)).collect())
    }

    fn check_arity(&self, other: &Monomial) -> Result<()> {
        if self.exponents.len() == other.exponents.len() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn try_divides(&self, other: &Monomial) -> Result<bool> {
        self.check_arity(other)?;
        Ok(self.divides(other))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        let exps = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| checked_exponent(a as u64 + b as u64))
            .collect::<Result<Vec<u32>>>()?;
        Ok(Monomial::from_raw(exps))
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exponents
            .iter()
            .map(|&a| checked_exponent(a as u64 * k as u64))
            .collect::<Result<Vec<u32>>>()?;
        Ok(Monomial::from_raw(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial::from_raw(
            self.exponents.iter().zip(&other.exponents).map(|(&a, &b)| a.max(b)).collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial::from_raw(
            self.exponents.iter().zip(&other.exponents).map(|(&a, &b)| a.min(b)).collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::from_raw(
            self.exponents.iter().zip(&other.exponents).map(|(&a, &b)| a - b).collect(),
        ))
    }

    /// `self / gcd(self, other)`, i.e. the componentwise saturating difference.
    pub fn quotient_saturating(&self, other: &Monomial) -> Monomial {
        Monomial::from_raw(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// `x^a | x^b`, with a ring-arity check.
pub fn mono_divides(a: &Monomial, b: &Monomial) -> Result<bool> {
    a.try_divides(b)
}

/// Drop duplicates and non-minimal elements; result sorted in grlex order.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        // A proper divisor has strictly smaller degree, so it was seen already.
        if !kept.iter().any(|g| g.degree < m.degree && g.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingRef,
    gens: Vec<Monomial>,
}

impl PartialOrd for MonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring.cmp(&other.ring).then_with(|| self.gens.cmp(&other.gens))
    }
}

impl MonomialIdeal {
    /// Minimalizes `gens`; an empty list gives the zero ideal.
    pub fn from_generators(ring: RingRef, gens: Vec<Monomial>) -> Result<Self> {
        if gens.iter().any(|g| g.nvars() != ring.n()) {
            return Err(Error::RingMismatch);
        }
        Ok(MonomialIdeal { gens: minimalize(gens), ring })
    }

    pub fn zero(ring: RingRef) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: RingRef) -> Self {
        let one = ring.one();
        MonomialIdeal { ring, gens: vec![one] }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: RingRef) -> Self {
        let gens = (0..ring.n()).map(|i| ring.var(i).expect("in range")).collect();
        MonomialIdeal { gens: minimalize(gens), ring }
    }

    /// The prime generated by a subset of the variables.
    pub fn variable_prime(ring: RingRef, vars: &[usize]) -> Result<Self> {
        let gens = vars.iter().map(|&i| ring.var(i)).collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal { gens: minimalize(gens), ring })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn min_generator_count(&self) -> usize {
        self.gens.len()
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.ring.n()];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    fn check_mono(&self, m: &Monomial) -> Result<()> {
        if m.nvars() == self.ring.n() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_mono(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// First generator of `self` that is not in `other`, if any.
    pub fn first_outside(&self, other: &MonomialIdeal) -> Result<Option<Monomial>> {
        Ring::check_same(&self.ring, &other.ring)?;
        Ok(self.gens.iter().find(|g| !other.contains_unchecked(g)).cloned())
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        Ok(self.first_outside(other)?.is_none())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        Ring::check_same(&self.ring, &other.ring)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimalize(gens) })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        Ring::check_same(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimalize(gens) })
    }

    /// `I^k` by repeated squaring; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut result = MonomialIdeal::unit(self.ring.clone());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.product(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base)?;
            }
        }
        Ok(result)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        Ring::check_same(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimalize(gens) })
    }

    /// `(I : m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_mono(m)?;
        let gens = self.gens.iter().map(|g| g.quotient_saturating(m)).collect();
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimalize(gens) })
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::squarefree_part).collect();
        MonomialIdeal { ring: self.ring.clone(), gens: minimalize(gens) }
    }

    /// Minor obtained by setting the `zeros` variables to 0 and the `ones`
    /// variables to 1. The result lives over the ring with both sets removed;
    /// `None` is returned when no variable survives.
    pub fn minor(&self, zeros: &[usize], ones: &[usize]) -> Result<Minor> {
        let n = self.ring.n();
        for &v in zeros.iter().chain(ones) {
            if v >= n {
                return Err(Error::VariableOutOfRange(v));
            }
        }
        if zeros.iter().any(|z| ones.contains(z)) {
            return Err(Error::OverlappingMinor);
        }
        let removed: Vec<usize> = zeros.iter().chain(ones).copied().collect();
        let kept: Vec<usize> = (0..n).filter(|i| !removed.contains(i)).collect();
        let surviving = self
            .gens
            .iter()
            .filter(|g| zeros.iter().all(|&z| g.exponent(z) == 0))
            .map(|g| Monomial::from_raw(kept.iter().map(|&i| g.exponent(i)).collect()));
        match self.ring.without(&removed) {
            Some(ring) => {
                let gens = minimalize(surviving.collect());
                Ok(Minor::Ideal(MonomialIdeal { ring, gens }))
            }
            None => {
                // Over the field itself: the ideal is either 0 or 1.
                let any = surviving.count() > 0;
                Ok(Minor::Field { unit: any })
            }
        }
    }
}

/// Result of [`MonomialIdeal::minor`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Minor {
    Ideal(MonomialIdeal),
    /// Every variable was specialized; the minor is the zero or unit ideal of the field.
    Field { unit: bool },
}

/// All monomials of total degree `d` in `n` variables, in grlex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::from_raw(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut cur = vec![0; n];
    rec(0, d, &mut cur, &mut out);
    out.sort_unstable();
    out
}

/// All monomials of degree at most `d`.
pub fn monomials_up_to_degree(n: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect()
}
