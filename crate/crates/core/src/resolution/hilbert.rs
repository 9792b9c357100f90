//! Hilbert functions, series and polynomials of monomial quotients `S/I`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial, MonomialIdeal};
use crate::ring::RingRef;

/// `dim_k (S/I)_d`: the number of degree-`d` monomials outside `I`.
pub fn hilbert_function(ideal: &MonomialIdeal, d: u32) -> u64 {
    monomials_of_degree(ideal.ring().n(), d)
        .iter()
        .filter(|m| !ideal.contains_unchecked(m))
        .count() as u64
}

/// `H(z) = numerator(z) / (1 - z)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    ring: RingRef,
    /// Dense coefficients, index = degree; no trailing zeros.
    numerator: Vec<i64>,
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn shift(a: &[i64], by: usize) -> Vec<i64> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; by];
    out.extend_from_slice(a);
    out
}

/// `C(x, k)` for any integer `x`, as a polynomial in `x`.
pub(crate) fn binomial_poly(x: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= x - i;
        den *= i + 1;
    }
    num / den
}

/// Pivot: the variable occurring in the most generators, raised to its
/// smallest positive exponent among them.
fn choose_pivot(gens: &[Monomial], n: usize) -> Option<(usize, u32)> {
    let mut best: Option<(usize, usize, u32)> = None;
    for v in 0..n {
        let exps: Vec<u32> = gens.iter().map(|g| g.exponent(v)).filter(|&e| e > 0).collect();
        if exps.len() < 2 {
            continue;
        }
        let count = exps.len();
        let min = *exps.iter().min().expect("nonempty");
        if best.is_none_or(|(_, c, _)| count > c) {
            best = Some((v, count, min));
        }
    }
    best.map(|(v, _, e)| (v, e))
}

fn numerator_rec(ideal: &MonomialIdeal) -> Result<Vec<i64>> {
    let gens = ideal.generators();
    let n = ideal.ring().n();
    match choose_pivot(gens, n) {
        None => {
            // pairwise coprime generators: product of (1 - z^deg g)
            let mut acc = vec![1i64];
            for g in gens {
                let mut factor = vec![0i64; g.degree() as usize + 1];
                factor[0] += 1;
                factor[g.degree() as usize] -= 1;
                acc = poly_mul(&acc, &factor);
            }
            Ok(acc)
        }
        Some((v, e)) => {
            let mut exps = vec![0; n];
            exps[v] = e;
            let pivot = Monomial::new(exps)?;
            let with = ideal.sum(&MonomialIdeal::from_generators(ideal.ring().clone(), vec![pivot.clone()])?)?;
            let colon = ideal.colon(&pivot)?;
            let a = numerator_rec(&with)?;
            let b = numerator_rec(&colon)?;
            Ok(poly_add(&a, &shift(&b, e as usize)))
        }
    }
}

impl HilbertSeries {
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        let series = HilbertSeries { ring: ideal.ring().clone(), numerator: numerator_rec(ideal)? };
        debug_assert!({
            let top = series.numerator.len() as u32 + 2;
            (0..=top).all(|d| series.coefficient(d) == BigInt::from(hilbert_function(ideal, d)))
        });
        Ok(series)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Dense numerator coefficients, index = degree.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// Nonzero `(degree, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.numerator.iter().copied().enumerate().filter(|&(_, c)| c != 0)
    }

    pub fn numerator_degree(&self) -> Option<usize> {
        self.numerator.len().checked_sub(1)
    }

    /// Coefficient of `z^d` in the expansion, i.e. the Hilbert function.
    pub fn coefficient(&self, d: u32) -> BigInt {
        let n = self.ring.n() as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|&(j, _)| j as u32 <= d)
            .map(|(j, &c)| BigInt::from(c) * binomial_poly(d as i64 - j as i64 + n - 1, (n - 1) as u32))
            .sum()
    }

    /// `(dim, e)`: `dim = n - ord_{z=1}(numerator)` and `e` is the value at
    /// `z = 1` of the reduced numerator. For `dim = 0`, `e` is the length.
    pub fn dimension_multiplicity(&self) -> Result<(usize, i64)> {
        if self.numerator.is_empty() {
            return Err(Error::UnitIdeal);
        }
        let mut q = self.numerator.clone();
        let mut order = 0;
        while q.iter().sum::<i64>() == 0 {
            // divide by (1 - z): q = (1 - z) r  <=>  r_i = q_0 + ... + q_i
            let mut r = Vec::with_capacity(q.len() - 1);
            let mut acc = 0;
            for &c in &q[..q.len() - 1] {
                acc += c;
                r.push(acc);
            }
            q = trim(r);
            order += 1;
        }
        let n = self.ring.n();
        Ok((n - order.min(n), q.iter().sum()))
    }
}

pub fn hilbert_series(ideal: &MonomialIdeal) -> Result<HilbertSeries> {
    HilbertSeries::of(ideal)
}

/// `p(d) = Σ_j c_j C(d - j + n - 1, n - 1)` with `c_j` the numerator
/// coefficients; it agrees with the Hilbert function for `d >= threshold`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    n: usize,
    binomial_coefficients: Vec<i64>,
    threshold: u32,
}

impl HilbertPolynomial {
    pub fn from_series(series: &HilbertSeries) -> Self {
        let n = series.ring().n();
        let deg = series.numerator().len() as i64 - 1;
        let threshold = (deg - n as i64 + 1).max(0) as u32;
        HilbertPolynomial { n, binomial_coefficients: series.numerator().to_vec(), threshold }
    }

    /// Coefficients `c_j` in the basis `C(d - j + n - 1, n - 1)`.
    pub fn binomial_coefficients(&self) -> &[i64] {
        &self.binomial_coefficients
    }

    pub fn threshold(&self) -> u32 {
        self.threshold
    }

    pub fn eval(&self, d: i64) -> BigInt {
        let n = self.n as i64;
        self.binomial_coefficients
            .iter()
            .enumerate()
            .map(|(j, &c)| BigInt::from(c) * binomial_poly(d - j as i64 + n - 1, (n - 1) as u32))
            .sum()
    }

    /// Coefficients in the monomial basis `1, d, d^2, ...`, trailing zeros
    /// removed (the zero polynomial is empty).
    pub fn coefficients(&self) -> Vec<BigRational> {
        let k = self.n - 1;
        let mut total = vec![BigRational::zero(); k + 1];
        for (j, &c) in self.binomial_coefficients.iter().enumerate() {
            // C(d + s, k) with s = k - j = (d + s)(d + s - 1)...(d + s - k + 1) / k!
            let s = k as i64 - j as i64;
            let mut poly = vec![BigRational::one()];
            for i in 0..k as i64 {
                let root = BigRational::from_integer(BigInt::from(s - i));
                let mut next = vec![BigRational::zero(); poly.len() + 1];
                for (t, coef) in poly.iter().enumerate() {
                    next[t] += coef * &root;
                    next[t + 1] += coef.clone();
                }
                poly = next;
            }
            let mut fact = BigInt::one();
            for i in 1..=k as i64 {
                fact *= i;
            }
            for (t, coef) in poly.into_iter().enumerate() {
                total[t] += coef * BigRational::new(BigInt::from(c), fact.clone());
            }
        }
        while total.last().is_some_and(Zero::is_zero) {
            total.pop();
        }
        total
    }

    /// Degree in `d`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients().len().checked_sub(1)
    }
}

pub fn hilbert_polynomial(ideal: &MonomialIdeal) -> Result<HilbertPolynomial> {
    Ok(HilbertPolynomial::from_series(&hilbert_series(ideal)?))
}

/// `(dim S/I, e(S/I))`. The unit ideal is rejected.
pub fn dimension_multiplicity(ideal: &MonomialIdeal) -> Result<(usize, i64)> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    hilbert_series(ideal)?.dimension_multiplicity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(r.clone(), gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    fn xyz() -> RingRef {
        Ring::new(["x", "y", "z"]).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        ideal(&xyz(), &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn hilbert_function_examples() {
        assert_eq!(hilbert_function(&MonomialIdeal::zero(xyz()), 2), 6);
        for d in 1..6 {
            assert_eq!(hilbert_function(&triangle(), d), 3);
            assert_eq!(hilbert_function(&MonomialIdeal::maximal(xyz()), d), 0);
        }
    }

    #[test]
    fn series_examples() {
        assert_eq!(hilbert_series(&MonomialIdeal::zero(xyz())).unwrap().numerator(), &[1]);
        let f = ideal(&xyz(), &[&[2, 1, 1]]);
        assert_eq!(hilbert_series(&f).unwrap().numerator(), &[1, 0, 0, 0, -1]);
        assert_eq!(hilbert_series(&triangle()).unwrap().numerator(), &[1, 0, -3, 2]);
        assert!(hilbert_series(&MonomialIdeal::unit(xyz())).unwrap().numerator().is_empty());
    }

    #[test]
    fn polynomial_examples() {
        let r2 = Ring::new(["x", "y"]).unwrap();
        let p = hilbert_polynomial(&MonomialIdeal::zero(r2.clone())).unwrap();
        assert_eq!(p.threshold(), 0);
        let one = BigRational::one();
        assert_eq!(p.coefficients(), vec![one.clone(), one.clone()]);

        let p = hilbert_polynomial(&triangle()).unwrap();
        assert_eq!(p.coefficients(), vec![BigRational::from_integer(3.into())]);
        assert_eq!(p.degree(), Some(0));

        let m2 = MonomialIdeal::maximal(r2).power(2).unwrap();
        let p = hilbert_polynomial(&m2).unwrap();
        assert!(p.coefficients().is_empty());
        assert_eq!(p.threshold(), 2);
        assert_eq!(hilbert_function(&m2, 0), 1);
        assert_eq!(hilbert_function(&m2, 1), 2);
        for d in p.threshold()..p.threshold() + 3 {
            assert_eq!(p.eval(d as i64), BigInt::from(hilbert_function(&m2, d)));
        }
    }

    #[test]
    fn dimension_and_multiplicity_examples() {
        assert_eq!(dimension_multiplicity(&triangle()).unwrap(), (1, 3));
        for d in 1..5u32 {
            let f = ideal(&xyz(), &[&[d, 0, 0]]);
            assert_eq!(dimension_multiplicity(&f).unwrap(), (2, d as i64));
        }
        let r2 = Ring::new(["x", "y"]).unwrap();
        let m3 = MonomialIdeal::maximal(r2.clone()).power(3).unwrap();
        assert_eq!(dimension_multiplicity(&m3).unwrap(), (0, 6));
        assert_eq!(dimension_multiplicity(&MonomialIdeal::unit(r2)), Err(Error::UnitIdeal));
    }
}
