//! Named-variable polynomial rings `k[x_1, ..., x_n]`.
//!
//! A [`Ring`] only records the ordered variable names; the coefficient field
//! lives with the polynomial engine, since monomial combinatorics do not
//! depend on it.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Shared handle to a ring; every ideal and polynomial keeps one.
pub type RingRef = Arc<Ring>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<I, S>(names: I) -> Result<RingRef>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(Ring { names }))
    }

    /// `prefix1, ..., prefixn`.
    pub fn indexed(prefix: &str, n: usize) -> Result<RingRef> {
        Ring::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.n())
    }

    pub fn var(&self, i: usize) -> Result<Monomial> {
        if i >= self.n() {
            return Err(Error::VariableOutOfRange(i));
        }
        let mut e = alloc::vec![0; self.n()];
        e[i] = 1;
        Monomial::new(e)
    }

    /// Ring with the given variable indices removed. `None` if nothing remains.
    pub fn without(&self, removed: &[usize]) -> Option<RingRef> {
        let kept: Vec<String> = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, n)| n.clone())
            .collect();
        if kept.is_empty() {
            None
        } else {
            Some(Arc::new(Ring { names: kept }))
        }
    }

    /// Ring with one extra variable appended; the name is made unique by
    /// suffixing underscores.
    pub fn extended(&self, base: &str) -> RingRef {
        let mut name = base.to_string();
        while self.names.contains(&name) {
            name.push('_');
        }
        let mut names = self.names.clone();
        names.push(name);
        Arc::new(Ring { names })
    }

    /// Render in the shared text grammar, e.g. `x^2*y`; the empty product is `1`.
    pub fn render(&self, m: &Monomial) -> String {
        let mut out = String::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&self.names[i]);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    pub fn render_list<'a, I>(&self, monomials: I) -> String
    where
        I: IntoIterator<Item = &'a Monomial>,
    {
        let parts: Vec<String> = monomials.into_iter().map(|m| self.render(m)).collect();
        parts.join(", ")
    }

    pub(crate) fn check_same(a: &RingRef, b: &RingRef) -> Result<()> {
        if Arc::ptr_eq(a, b) || a == b {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(Ring::new(Vec::<String>::new()).is_err());
        assert!(Ring::new(["x", "x"]).is_err());
        assert!(Ring::new(["x", ""]).is_err());
    }

    #[test]
    fn render_and_extend() {
        let r = Ring::new(["x", "y", "t"]).unwrap();
        let m = Monomial::new(alloc::vec![2, 1, 0]).unwrap();
        assert_eq!(r.render(&m), "x^2*y");
        assert_eq!(r.render(&r.one()), "1");
        assert_eq!(r.extended("t").names()[3], "t_");
        assert_eq!(r.without(&[0, 2]).unwrap().names(), &["y".to_string()]);
        assert!(r.without(&[0, 1, 2]).is_none());
    }
}
