//! Artin-Rees containment data for monomial ideals `N ⊆ R`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::ring::{Ring, RingRef};

/// Per-`n` least `k_n` with `I^n ∩ N ⊆ I^(n - k_n) N`, for `1 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArReport {
    pub ideal: MonomialIdeal,
    pub sub: MonomialIdeal,
    pub n_max: u32,
    /// `per_n[n-1] = k_n`.
    pub per_n: Vec<u32>,
}

impl ArReport {
    /// Empirical Artin-Rees number over the tested range.
    pub fn number(&self) -> u32 {
        self.per_n.iter().copied().max().unwrap_or(0)
    }
}

pub fn artin_rees_number(ideal: &MonomialIdeal, sub: &MonomialIdeal, n_max: u32) -> Result<ArReport> {
    Ring::check_same(ideal.ring(), sub.ring())?;
    if sub.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be positive".into()));
    }
    // twisted[j] = I^j N
    let mut powers = vec![MonomialIdeal::unit(ideal.ring().clone())];
    let mut twisted = vec![sub.clone()];
    for j in 1..=n_max as usize {
        powers.push(powers[j - 1].product(ideal)?);
        twisted.push(twisted[j - 1].product(ideal)?);
    }
    let mut per_n = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max as usize {
        let meet = powers[n].intersect(sub)?;
        // descend from k = n, where the containment is automatic
        let mut k = n;
        while k > 0 && meet.is_subset_of(&twisted[n - k + 1])? {
            k -= 1;
        }
        per_n.push(k as u32);
    }
    Ok(ArReport { ideal: ideal.clone(), sub: sub.clone(), n_max, per_n })
}

/// The ideals `I = (x^n, y^n, x^(n-1) y)` and `J = (x^n, y^n)` in `k[x, y]`.
pub fn exercise_pair(ring: &RingRef, n: u32) -> Result<(MonomialIdeal, MonomialIdeal)> {
    if ring.n() != 2 {
        return Err(Error::InvalidArgument("the family lives in two variables".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mono = |a: u32, b: u32| Monomial::new(vec![a, b]);
    let j = MonomialIdeal::from_generators(ring.clone(), vec![mono(n, 0)?, mono(0, n)?])?;
    let i = MonomialIdeal::from_generators(ring.clone(), vec![mono(n, 0)?, mono(0, n)?, mono(n - 1, 1)?])?;
    Ok((i, j))
}

/// Which side of `I^ell = J^(ell-k) I^k` the witness generator comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MismatchSide {
    /// A generator of `I^ell` missing from `J^(ell-k) I^k`.
    Power,
    /// A generator of `J^(ell-k) I^k` missing from `I^ell`.
    Reduction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArMismatch {
    pub ell: u32,
    pub witness: Monomial,
    pub side: MismatchSide,
}

/// Scans `ell = k+1 ..= ell_max` for the first `ell` with
/// `I^ell != J^(ell-k) I^k`.
pub fn ar_counterexample_search(
    ideal: &MonomialIdeal,
    reduction: &MonomialIdeal,
    k: u32,
    ell_max: u32,
) -> Result<Option<ArMismatch>> {
    if let Some(g) = reduction.first_outside(ideal)? {
        return Err(Error::NotContained(alloc::format!(
            "generator {} of J is not in I",
            ideal.ring().render(&g)
        )));
    }
    if ell_max < k + 1 {
        return Err(Error::InvalidArgument("ell_max must be at least k + 1".into()));
    }
    let ik = ideal.power(k)?;
    let mut lhs = ideal.power(k)?; // I^ell, advanced before use
    let mut jpow = MonomialIdeal::unit(ideal.ring().clone()); // J^(ell-k)
    for ell in k + 1..=ell_max {
        lhs = lhs.product(ideal)?;
        jpow = jpow.product(reduction)?;
        let rhs = jpow.product(&ik)?;
        if lhs == rhs {
            continue;
        }
        let (witness, side) = match lhs.first_outside(&rhs)? {
            Some(w) => (w, MismatchSide::Power),
            None => (rhs.first_outside(&lhs)?.expect("ideals differ"), MismatchSide::Reduction),
        };
        return Ok(Some(ArMismatch { ell, witness, side }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(r.clone(), gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    fn xy() -> RingRef {
        Ring::new(["x", "y"]).unwrap()
    }

    #[test]
    fn ar_number_examples() {
        let r = xy();
        let mm = MonomialIdeal::maximal(r.clone());
        let rep = artin_rees_number(&mm, &ideal(&r, &[&[1, 0]]), 5).unwrap();
        assert_eq!(rep.number(), 1);
        assert_eq!(rep.per_n[0], 1);

        let unit = MonomialIdeal::unit(r.clone());
        assert_eq!(artin_rees_number(&mm, &unit, 4).unwrap().number(), 0);

        let rep = artin_rees_number(&ideal(&r, &[&[2, 0]]), &ideal(&r, &[&[0, 1]]), 4).unwrap();
        assert_eq!(rep.per_n, vec![0, 0, 0, 0]);
        assert_eq!(artin_rees_number(&mm, &MonomialIdeal::zero(r), 3), Err(Error::ZeroIdeal));
    }

    #[test]
    fn exercise_family() {
        let r = xy();
        let (i, j) = exercise_pair(&r, 3).unwrap();
        let hit = ar_counterexample_search(&i, &j, 1, 6).unwrap().expect("k < n must fail");
        assert!(hit.ell <= 6);
        assert!(!i.power(hit.ell).unwrap().contains(&hit.witness).unwrap()
            || !j.power(hit.ell - 1).unwrap().product(&i).unwrap().contains(&hit.witness).unwrap());

        assert_eq!(ar_counterexample_search(&i, &i, 4, 5).unwrap(), None);

        let (i2, j2) = exercise_pair(&r, 2).unwrap();
        assert_eq!(ar_counterexample_search(&i2, &j2, 2, 6).unwrap(), None);
        assert!(matches!(ar_counterexample_search(&j, &i, 1, 4), Err(Error::NotContained(_))));
    }
}
