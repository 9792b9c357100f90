//! Sparse multivariate polynomials over a [`Field`].

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::field::Field;
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::RingRef;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    vars: RingRef,
    field: F,
    order: MonomialOrder,
}

pub type PolyRingRef<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new(vars: RingRef, field: F, order: MonomialOrder) -> Result<PolyRingRef<F>> {
        if order.nvars() != vars.n() {
            return Err(Error::InvalidArgument("order arity does not match the ring".into()));
        }
        Ok(Arc::new(PolyRing { vars, field, order }))
    }

    /// Graded reverse lexicographic order on `vars`.
    pub fn grevlex(vars: RingRef, field: F) -> PolyRingRef<F> {
        let order = MonomialOrder::grevlex(vars.n());
        Arc::new(PolyRing { vars, field, order })
    }

    pub fn vars(&self) -> &RingRef {
        &self.vars
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.vars.n()
    }

    /// This ring with one fresh variable appended and ranked last.
    pub fn extended(&self, base: &str) -> PolyRingRef<F> {
        Arc::new(PolyRing {
            vars: self.vars.extended(base),
            field: self.field.clone(),
            order: self.order.extended(),
        })
    }

    /// This ring with a fresh variable appended at the end of the variable
    /// list but ranked first, in its own elimination block.
    pub fn eliminating(&self, base: &str) -> PolyRingRef<F> {
        Arc::new(PolyRing {
            vars: self.vars.extended(base),
            field: self.field.clone(),
            order: self.order.eliminating_new_variable(),
        })
    }

    pub(crate) fn same(a: &PolyRingRef<F>, b: &PolyRingRef<F>) -> Result<()> {
        if Arc::ptr_eq(a, b) || **a == **b {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

/// Terms are kept sorted ascending in the ring's order, so the leading
/// term is the last one.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: PolyRingRef<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render())
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &PolyRingRef<F>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &PolyRingRef<F>, c: F::Elem) -> Self {
        Self::term(ring, Monomial::one(ring.n()), c)
    }

    pub fn one(ring: &PolyRingRef<F>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn var(ring: &PolyRingRef<F>, i: usize) -> Result<Self> {
        Ok(Self::term(ring, ring.vars.var(i)?, ring.field.one()))
    }

    pub fn term(ring: &PolyRingRef<F>, m: Monomial, c: F::Elem) -> Self {
        assert_eq!(m.nvars(), ring.n(), "monomial arity");
        let terms = if ring.field.is_zero(&c) { Vec::new() } else { alloc::vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Sums arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(ring: &PolyRingRef<F>, mut raw: Vec<(Monomial, F::Elem)>) -> Result<Self> {
        if raw.iter().any(|(m, _)| m.nvars() != ring.n()) {
            return Err(Error::RingMismatch);
        }
        let order = &ring.order;
        raw.sort_by(|a, b| order.cmp(&a.0, &b.0));
        let field = &ring.field;
        let mut terms: Vec<(Monomial, F::Elem)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = terms.last() {
                        if field.is_zero(lc) {
                            terms.pop();
                        }
                    }
                    terms.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = terms.last() {
            if field.is_zero(lc) {
                terms.pop();
            }
        }
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    pub fn from_monomial(ring: &PolyRingRef<F>, m: Monomial) -> Self {
        Self::term(ring, m, ring.field.one())
    }

    pub fn ring(&self) -> &PolyRingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    /// Terms from the leading one down.
    pub fn terms(&self) -> impl Iterator<Item = &(Monomial, F::Elem)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.last()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn constant_term(&self) -> F::Elem {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.field.zero(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        let order = &self.ring.order;
        match self.terms.binary_search_by(|(t, _)| order.cmp(t, m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field.zero(),
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, F::Elem)> {
        self.terms.pop()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn check(&self, other: &Self) -> Result<()> {
        PolyRing::same(&self.ring, &other.ring)
    }

    /// `self + c * m * other`, the workhorse of reduction.
    pub fn add_scaled(&self, c: &F::Elem, m: &Monomial, other: &Self) -> Result<Self> {
        self.check(other)?;
        let field = &self.ring.field;
        if field.is_zero(c) || other.is_zero() {
            return Ok(self.clone());
        }
        let mut shifted = Vec::with_capacity(other.terms.len());
        for (t, d) in &other.terms {
            shifted.push((t.mul(m)?, field.mul(c, d)));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: merge(&self.ring, &self.terms, shifted) })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(&self.ring.field.one(), &Monomial::one(self.ring.n()), other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let minus = self.ring.field.neg(&self.ring.field.one());
        self.add_scaled(&minus, &Monomial::one(self.ring.n()), other)
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.ring.field.neg(&self.ring.field.one()))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, d)| (m.clone(), field.mul(c, d))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Result<Self> {
        Self::zero(&self.ring).add_scaled(c, m, self)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add_scaled(c, m, big)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, mut exp: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&self.ring.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Formal partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Result<Self> {
        if i >= self.ring.n() {
            return Err(Error::VariableOutOfRange(i));
        }
        let field = &self.ring.field;
        let mut raw = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            raw.push((Monomial::new(exps)?, field.mul(c, &field.from_i64(e as i64))));
        }
        Self::from_terms(&self.ring, raw)
    }

    /// Reinterprets the polynomial in `target`, whose variables must start
    /// with this ring's variables; extra variables get exponent 0.
    pub fn embed(&self, target: &PolyRingRef<F>) -> Result<Self> {
        let n = self.ring.n();
        if target.n() < n || target.vars.names()[..n] != self.ring.vars.names()[..] || target.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        let mut raw = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            exps.resize(target.n(), 0);
            raw.push((Monomial::new(exps)?, c.clone()));
        }
        Self::from_terms(target, raw)
    }

    /// Inverse of [`Polynomial::embed`]: drops trailing variables, failing if
    /// any term uses them.
    pub fn restrict(&self, target: &PolyRingRef<F>) -> Result<Option<Self>> {
        let n = target.n();
        if n > self.ring.n() || self.ring.vars.names()[..n] != target.vars.names()[..] || target.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        let mut raw = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m.exponents()[n..].iter().any(|&e| e > 0) {
                return Ok(None);
            }
            raw.push((Monomial::new(m.exponents()[..n].to_vec())?, c.clone()));
        }
        Ok(Some(Self::from_terms(target, raw)?))
    }

    /// `self / h` when `h` divides `self` exactly.
    pub fn div_exact(&self, h: &Self) -> Result<Option<Self>> {
        self.check(h)?;
        let field = &self.ring.field;
        let Some((hm, hc)) = h.leading_term() else { return Err(Error::DivisionByZero) };
        let hinv = field.inv(hc)?;
        let mut p = self.clone();
        let mut quotient = Vec::new();
        while let Some((lm, lc)) = p.leading_term().cloned() {
            let Some(q) = lm.div(hm) else { return Ok(None) };
            let c = field.mul(&lc, &hinv);
            p = p.add_scaled(&field.neg(&c), &q, h)?;
            quotient.push((q, c));
        }
        Ok(Some(Self::from_terms(&self.ring, quotient)?))
    }

    /// `3*x^2*y - 1/2*z + 1`, leading term first.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let field = &self.ring.field;
        let one = field.one();
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = field.is_negative(c);
            let mag = if negative { field.neg(c) } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&field.render(&mag));
            } else {
                if mag != one {
                    out.push_str(&field.render(&mag));
                    out.push('*');
                }
                out.push_str(&self.ring.vars.render(m));
            }
        }
        out
    }
}

fn merge<F: Field>(
    ring: &PolyRing<F>,
    a: &[(Monomial, F::Elem)],
    b: Vec<(Monomial, F::Elem)>,
) -> Vec<(Monomial, F::Elem)> {
    let field = &ring.field;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.into_iter().peekable();
    while i < a.len() {
        let Some((bm, _)) = bi.peek() else { break };
        match ring.order.cmp(&a[i].0, bm) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => out.push(bi.next().expect("peeked")),
            Ordering::Equal => {
                let (m, c) = bi.next().expect("peeked");
                let s = field.add(&a[i].1, &c);
                if !field.is_zero(&s) {
                    out.push((m, s));
                }
                i += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(bi);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::field::{PrimeField, Rationals};
    use crate::ring::Ring;
    use alloc::vec;

    fn qxy() -> PolyRingRef<Rationals> {
        PolyRing::grevlex(Ring::new(["x", "y"]).unwrap(), Rationals)
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn arithmetic_and_rendering() {
        let r = qxy();
        let q = Rationals;
        let x = Polynomial::var(&r, 0).unwrap();
        let y = Polynomial::var(&r, 1).unwrap();
        let s = x.add(&y).unwrap();
        let sq = s.pow(2).unwrap();
        assert_eq!(sq.render(), "x^2 + 2*x*y + y^2");
        assert_eq!(sq.sub(&sq).unwrap(), Polynomial::zero(&r));
        let d = x.sub(&y).unwrap().mul(&s).unwrap();
        assert_eq!(d.render(), "x^2 - y^2");
        assert_eq!(Polynomial::constant(&r, q.from_i64(-3)).render(), "-3");
        assert_eq!(Polynomial::zero(&r).render(), "0");
        let half = Polynomial::term(&r, m(&[0, 1]), q.from_ratio(&1.into(), &2.into()).unwrap());
        assert_eq!(half.neg().add(&Polynomial::one(&r)).unwrap().render(), "-1/2*y + 1");
        assert_eq!(s.pow(0).unwrap(), Polynomial::one(&r));
        assert_eq!(sq.coefficient(&m(&[1, 1])), q.from_i64(2));
    }

    #[test]
    fn derivatives() {
        let r = qxy();
        let f = Polynomial::from_terms(&r, vec![(m(&[3, 1]), Rationals.from_i64(1))]).unwrap();
        assert_eq!(f.derivative(0).unwrap().render(), "3*x^2*y");
        assert_eq!(f.derivative(1).unwrap().render(), "x^3");
        assert!(Polynomial::one(&r).derivative(0).unwrap().is_zero());
        assert_eq!(f.derivative(2), Err(Error::VariableOutOfRange(2)));
    }

    #[test]
    fn freshmans_dream_in_char_two() {
        let f2 = PrimeField::new(2).unwrap();
        let r = PolyRing::grevlex(Ring::new(["x", "y"]).unwrap(), f2);
        let s = Polynomial::var(&r, 0).unwrap().add(&Polynomial::var(&r, 1).unwrap()).unwrap();
        assert_eq!(s.pow(2).unwrap().render(), "x^2 + y^2");
    }

    #[test]
    fn duplicate_terms_cancel() {
        let r = qxy();
        let q = Rationals;
        let p = Polynomial::from_terms(&r, vec![(m(&[1, 0]), q.from_i64(2)), (m(&[1, 0]), q.from_i64(-2))]).unwrap();
        assert!(p.is_zero());
        let p = Polynomial::from_terms(
            &r,
            vec![(m(&[1, 0]), q.from_i64(1)), (m(&[0, 0]), q.from_i64(1)), (m(&[0, 0]), q.from_i64(-1))],
        )
        .unwrap();
        assert_eq!(p.render(), "x");
    }
}
