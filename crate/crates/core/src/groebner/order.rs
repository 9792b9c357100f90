use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order. `perm[k]` is the variable ranked `k`-th, so the
/// identity permutation gives `x_1 > x_2 > ... > x_n`. A nonzero `block`
/// makes the first `block` ranked variables an elimination block that is
/// compared before the rest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Vec<usize>,
    block: usize,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, n: usize) -> Self {
        MonomialOrder { kind, perm: (0..n).collect(), block: 0 }
    }

    pub fn lex(n: usize) -> Self {
        Self::new(OrderKind::Lex, n)
    }

    pub fn grevlex(n: usize) -> Self {
        Self::new(OrderKind::GrevLex, n)
    }

    pub fn with_permutation(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        let mut seen = alloc::vec![false; perm.len()];
        for &v in &perm {
            if v >= perm.len() || seen[v] {
                return Err(Error::InvalidArgument("not a permutation of the variables".into()));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { kind, perm, block: 0 })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    pub fn block(&self) -> usize {
        self.block
    }

    /// Same kind with one more variable ranked last.
    pub fn extended(&self) -> Self {
        let mut perm = self.perm.clone();
        perm.push(perm.len());
        MonomialOrder { kind: self.kind, perm, block: self.block }
    }

    /// One more variable that is eliminated first: it is ranked above the
    /// others and forms its own block.
    pub fn eliminating_new_variable(&self) -> Self {
        let mut perm = alloc::vec![self.perm.len()];
        perm.extend_from_slice(&self.perm);
        MonomialOrder { kind: self.kind, perm, block: 1 }
    }

    fn grevlex_on(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
        let deg = |m: &Monomial| vars.iter().map(|&v| m.exponent(v) as u64).sum::<u64>();
        deg(a).cmp(&deg(b)).then_with(|| {
            for &v in vars.iter().rev() {
                match a.exponent(v).cmp(&b.exponent(v)) {
                    Ordering::Equal => continue,
                    other => return other.reverse(),
                }
            }
            Ordering::Equal
        })
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.perm {
                    match a.exponent(v).cmp(&b.exponent(v)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex if self.block > 0 => {
                let (head, tail) = self.perm.split_at(self.block);
                Self::grevlex_on(head, a, b).then_with(|| Self::grevlex_on(tail, a, b))
            }
            OrderKind::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for &v in self.perm.iter().rev() {
                    match a.exponent(v).cmp(&b.exponent(v)) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_up_to_degree;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn classic_comparisons() {
        let lex = MonomialOrder::lex(3);
        let grevlex = MonomialOrder::grevlex(3);
        // x > y^5 in lex, not in grevlex
        assert_eq!(lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 0])), Ordering::Greater);
        assert_eq!(grevlex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 0])), Ordering::Less);
        // x z^2 vs y^3 under grevlex: same degree, z-exponent decides, y^3 wins
        assert_eq!(grevlex.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        // x y z < x^2 z? grevlex: equal degree 3; z equal; y: 1 vs 0 so the second is bigger
        assert_eq!(grevlex.cmp(&m(&[1, 1, 1]), &m(&[2, 0, 1])), Ordering::Less);
        let swapped = MonomialOrder::with_permutation(OrderKind::Lex, vec![1, 0, 2]).unwrap();
        assert_eq!(swapped.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Less);
        assert!(MonomialOrder::with_permutation(OrderKind::Lex, vec![0, 0, 1]).is_err());
        // variable 2 is eliminated: anything involving it beats x^9
        let elim = MonomialOrder::grevlex(2).eliminating_new_variable();
        assert_eq!(elim.cmp(&m(&[0, 0, 1]), &m(&[9, 0, 0])), Ordering::Greater);
        assert_eq!(elim.cmp(&m(&[1, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn orders_are_total_and_multiplicative() {
        let ms = monomials_up_to_degree(3, 3);
        let elim = MonomialOrder::grevlex(2).eliminating_new_variable();
        for order in [MonomialOrder::lex(3), MonomialOrder::grevlex(3), elim] {
            for a in &ms {
                assert_eq!(order.cmp(a, &Monomial::one(3)), if a.is_one() { Ordering::Equal } else { Ordering::Greater });
                for b in &ms {
                    let c = order.cmp(a, b);
                    assert_eq!(c == Ordering::Equal, a == b);
                    for s in &ms[..4] {
                        assert_eq!(order.cmp(&a.mul(s).unwrap(), &b.mul(s).unwrap()), c);
                    }
                }
            }
        }
    }
}
