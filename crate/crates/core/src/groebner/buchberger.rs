use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::field::Field;
use super::poly::{PolyRing, PolyRingRef, Polynomial};
use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerCaps {
    pub max_basis: usize,
    pub max_degree: u64,
}

impl Default for GroebnerCaps {
    fn default() -> Self {
        GroebnerCaps { max_basis: 5000, max_degree: 60 }
    }
}

/// A reduced Gröbner basis, sorted by ascending leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRingRef<F>,
    basis: Vec<Polynomial<F>>,
}

/// Remainder of `f` on division by `divisors`, reducing every term.
pub fn reduce<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    let ring = f.ring();
    let field = ring.field();
    let mut p = f.clone();
    let mut rest: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some((lm, lc)) = p.leading_term().cloned() {
        let hit = divisors.iter().find(|g| g.leading_monomial().is_some_and(|gm| gm.divides(&lm)));
        match hit {
            Some(g) => {
                let (gm, gc) = g.leading_term().expect("nonzero divisor");
                let q = lm.div(gm).expect("divisible");
                let c = field.neg(&field.mul(&lc, &field.inv(gc)?));
                p = p.add_scaled(&c, &q, g)?;
            }
            None => rest.push(p.pop_leading().expect("nonzero")),
        }
    }
    Polynomial::from_terms(ring, rest)
}

fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    let field = f.field();
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let left = f.mul_term(&l.div(fm).expect("lcm"), &field.inv(fc)?)?;
    let right_c = field.neg(&field.inv(gc)?);
    left.add_scaled(&right_c, &l.div(gm).expect("lcm"), g)
}

pub fn buchberger<F: Field>(gens: &[Polynomial<F>]) -> Result<GroebnerBasis<F>> {
    buchberger_with_caps(gens, GroebnerCaps::default())
}

pub fn buchberger_with_caps<F: Field>(gens: &[Polynomial<F>], caps: GroebnerCaps) -> Result<GroebnerBasis<F>> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidArgument("no generators; pass the ring via GroebnerBasis::zero".into()));
    };
    let ring = first.ring().clone();
    for g in gens {
        PolyRing::same(&ring, g.ring())?;
    }
    let guard = |p: &Polynomial<F>, count: usize| -> Result<()> {
        if count > caps.max_basis {
            return Err(Error::CapExceeded { what: String::from("Groebner basis size"), limit: caps.max_basis });
        }
        if p.total_degree().unwrap_or(0) > caps.max_degree {
            return Err(Error::CapExceeded { what: String::from("Groebner basis degree"), limit: caps.max_degree as usize });
        }
        Ok(())
    };

    let mut basis: Vec<Polynomial<F>> = Vec::new();
    // (lcm degree, i, j) with i < j; `pending` mirrors it by index pair
    let mut queue: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push = |basis: &mut Vec<Polynomial<F>>,
                    queue: &mut BTreeSet<(u64, usize, usize)>,
                    pending: &mut BTreeSet<(usize, usize)>,
                    p: Polynomial<F>|
     -> Result<()> {
        let p = p.monic();
        guard(&p, basis.len() + 1)?;
        let k = basis.len();
        let pm = p.leading_monomial().expect("nonzero").clone();
        for (i, g) in basis.iter().enumerate() {
            let d = g.leading_monomial().expect("nonzero").lcm(&pm).degree();
            queue.insert((d, i, k));
            pending.insert((i, k));
        }
        basis.push(p);
        Ok(())
    };

    for g in gens {
        let r = reduce(g, &basis)?;
        if !r.is_zero() {
            push(&mut basis, &mut queue, &mut pending, r)?;
        }
    }

    while let Some((_, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let mi = basis[i].leading_monomial().expect("nonzero").clone();
        let mj = basis[j].leading_monomial().expect("nonzero").clone();
        if mi.is_coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().expect("nonzero").divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = reduce(&s, &basis)?;
        if !r.is_zero() {
            push(&mut basis, &mut queue, &mut pending, r)?;
        }
    }

    let gb = GroebnerBasis { ring: ring.clone(), basis: interreduce(basis)? };
    debug_assert!(gb.certify().unwrap_or(false), "S-polynomial certificate failed");
    Ok(gb)
}

fn interreduce<F: Field>(mut basis: Vec<Polynomial<F>>) -> Result<Vec<Polynomial<F>>> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Polynomial<F>> = Vec::new();
    basis.sort_by(|a, b| {
        let order = a.ring().order();
        order.cmp(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero"))
    });
    for p in basis {
        let lm = p.leading_monomial().expect("nonzero");
        if !keep.iter().any(|q| q.leading_monomial().expect("nonzero").divides(lm)) {
            keep.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<Polynomial<F>> =
            keep.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p.clone()).collect();
        reduced.push(reduce(&keep[k], &others)?.monic());
    }
    Ok(reduced)
}

impl<F: Field> GroebnerBasis<F> {
    /// Basis of the zero ideal.
    pub fn zero(ring: &PolyRingRef<F>) -> Self {
        GroebnerBasis { ring: ring.clone(), basis: Vec::new() }
    }

    /// Like [`buchberger`] but accepts an empty list and zero generators.
    pub fn of(ring: &PolyRingRef<F>, gens: &[Polynomial<F>], caps: GroebnerCaps) -> Result<Self> {
        for g in gens {
            PolyRing::same(ring, g.ring())?;
        }
        let nonzero: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        if nonzero.is_empty() {
            return Ok(Self::zero(ring));
        }
        buchberger_with_caps(&nonzero, caps)
    }

    pub fn ring(&self) -> &PolyRingRef<F> {
        &self.ring
    }

    pub fn polynomials(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|p| p.leading_monomial().expect("nonzero").clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        PolyRing::same(&self.ring, f.ring())?;
        reduce(f, &self.basis)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial of the basis reduces to zero.
    pub fn certify(&self) -> Result<bool> {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let s = s_polynomial(&self.basis[i], &self.basis[j])?;
                if !reduce(&s, &self.basis)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::field::{PrimeField, Rationals};
    use crate::groebner::order::MonomialOrder;
    use crate::ring::Ring;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn poly<F: Field>(r: &PolyRingRef<F>, terms: &[(i64, &[u32])]) -> Polynomial<F> {
        let f = r.field();
        Polynomial::from_terms(r, terms.iter().map(|&(c, e)| (m(e), f.from_i64(c))).collect()).unwrap()
    }

    #[test]
    fn lex_basis_of_small_system() {
        let r = PolyRing::new(Ring::new(["x", "y"]).unwrap(), Rationals, MonomialOrder::lex(2)).unwrap();
        let f = poly(&r, &[(1, &[2, 0]), (-1, &[0, 1])]);
        let g = poly(&r, &[(1, &[0, 2]), (-1, &[0, 0])]);
        let gb = buchberger(&[f, g]).unwrap();
        let rendered: Vec<_> = gb.polynomials().iter().map(|p| p.render()).collect();
        assert_eq!(rendered, vec!["y^2 - 1", "x^2 - y"]);
        assert!(gb.certify().unwrap());
        // x^4 = y^2 = 1 modulo the ideal
        let x4 = poly(&r, &[(1, &[4, 0])]);
        assert_eq!(gb.normal_form(&x4).unwrap(), Polynomial::one(&r));
    }

    #[test]
    fn trivial_bases() {
        let r = PolyRing::grevlex(Ring::new(["x", "y"]).unwrap(), Rationals);
        let x = poly(&r, &[(3, &[1, 0])]);
        let gb = buchberger(&[x.clone()]).unwrap();
        assert_eq!(gb.polynomials()[0].render(), "x");
        let z = GroebnerBasis::of(&r, &[Polynomial::zero(&r)], GroebnerCaps::default()).unwrap();
        assert!(z.is_empty());
        assert!(!z.contains(&Polynomial::one(&r)).unwrap());
        assert!(z.contains(&Polynomial::zero(&r)).unwrap());
        let unit = buchberger(&[x.clone(), poly(&r, &[(1, &[1, 0]), (1, &[0, 0])])]).unwrap();
        assert!(unit.is_unit());
    }

    #[test]
    fn division_examples() {
        let r = PolyRing::grevlex(Ring::new(["x", "y"]).unwrap(), Rationals);
        let gb = buchberger(&[poly(&r, &[(1, &[2, 0])]), poly(&r, &[(1, &[0, 2])])]).unwrap();
        let sq = poly(&r, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])]);
        assert_eq!(gb.normal_form(&sq).unwrap().render(), "2*x*y");
        assert!(!gb.contains(&Polynomial::one(&r)).unwrap());
        assert!(gb.contains(&poly(&r, &[(1, &[2, 0])])).unwrap());
    }

    #[test]
    fn rejects_mixed_rings() {
        let r1 = PolyRing::grevlex(Ring::new(["x", "y"]).unwrap(), Rationals);
        let r2 = PolyRing::grevlex(Ring::new(["x", "z"]).unwrap(), Rationals);
        let a = poly(&r1, &[(1, &[1, 0])]);
        let b = poly(&r2, &[(1, &[1, 0])]);
        assert_eq!(buchberger(&[a, b]), Err(Error::RingMismatch));
    }

    #[test]
    fn caps_fail_loudly() {
        let r = PolyRing::grevlex(Ring::new(["x", "y"]).unwrap(), PrimeField::new(7).unwrap());
        let f = poly(&r, &[(1, &[5, 0]), (1, &[0, 1])]);
        let caps = GroebnerCaps { max_basis: 10, max_degree: 3 };
        assert!(matches!(buchberger_with_caps(&[f], caps), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn cyclic_three_over_fp() {
        let f = PrimeField::new(32003).unwrap();
        let r = PolyRing::grevlex(Ring::new(["a", "b", "c"]).unwrap(), f);
        let gens = vec![
            poly(&r, &[(1, &[1, 0, 0]), (1, &[0, 1, 0]), (1, &[0, 0, 1])]),
            poly(&r, &[(1, &[1, 1, 0]), (1, &[0, 1, 1]), (1, &[1, 0, 1])]),
            poly(&r, &[(1, &[1, 1, 1]), (-1, &[0, 0, 0])]),
        ];
        let gb = buchberger(&gens).unwrap();
        assert!(gb.certify().unwrap());
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
        // c^3 - 1 lies in the cyclic-3 ideal
        assert!(gb.contains(&poly(&r, &[(1, &[0, 0, 3]), (-1, &[0, 0, 0])])).unwrap());
    }
}
