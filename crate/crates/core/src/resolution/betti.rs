//! Graded Betti numbers of monomial quotients via upper Koszul complexes.
//!
//! Index convention: for a multidegree `a` in the lcm lattice of the
//! generators of `I`, let `K^a = { F ⊆ supp(a) : x^(a - F) ∈ I }`. Then
//!
//! ```text
//! β_{i,a}(S/I) = dim H̃_{i-2}(K^a; k)     for i >= 1,
//! ```
//!
//! which is the usual `β_{i-1,a}(I) = dim H̃_{i-2}(K^a)` shifted by one
//! homological step. `β_{0,0}(S/I) = 1` for every proper ideal. The Koszul
//! table of the maximal ideal pins this convention in the tests.
//!
//! Multidegrees outside the lcm lattice carry no Betti numbers, so only
//! lcms of subsets of generators are visited.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{rank_mod_p, rank_rational};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::resolution::hilbert::hilbert_series;
use crate::symbolic::codim;

/// Default limit on the number of minimal generators for Betti computations.
pub const DEFAULT_GENERATOR_CAP: usize = 20;
/// Limit on the size of the lcm lattice.
pub const LCM_LATTICE_CAP: usize = 1 << 20;

/// Coefficient field for simplicial homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomologyField {
    Rational,
    /// `F_p`; primality is the caller's responsibility.
    Prime(u64),
}

impl core::fmt::Display for HomologyField {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HomologyField::Rational => f.write_str("QQ"),
            HomologyField::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

/// Sparse table `(i, j) -> β_{i,j}` of nonzero graded Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    field: HomologyField,
    entries: BTreeMap<(usize, u64), u64>,
}

impl BettiTable {
    pub fn field(&self) -> HomologyField {
        self.field
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number in homological degree `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, &b)| b).sum()
    }

    /// Length of the table.
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Width of the table: `max (j - i)` over nonzero entries.
    pub fn regularity(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap_or(0)
    }

    /// `Σ_j (Σ_i (-1)^i β_{i,j}) z^j`, dense by degree.
    pub fn alternating_numerator(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().map_or(0, |j| j as usize + 1);
        let mut out = vec![0i64; top];
        for (&(i, j), &b) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += sign * b as i64;
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Rows indexed by `j - i`, columns by homological degree `i`; zeros print as `.`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if self.entries.is_empty() {
            out.push_str("(zero module)\n");
            return out;
        }
        let pd = self.proj_dim();
        let reg = self.regularity();
        let min_row = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap_or(0);
        let width = self
            .entries
            .values()
            .map(|b| decimal_width(*b))
            .chain(core::iter::once(decimal_width(pd as u64)))
            .chain((0..=pd).map(|i| decimal_width(self.total(i))))
            .max()
            .unwrap_or(1);
        let label = 6;
        let _ = write!(out, "{:>label$}", "");
        for i in 0..=pd {
            let _ = write!(out, " {:>width$}", i);
        }
        out.push('\n');
        let _ = write!(out, "{:>label$}", "total:");
        for i in 0..=pd {
            let _ = write!(out, " {:>width$}", self.total(i));
        }
        out.push('\n');
        for row in min_row..=reg {
            let _ = write!(out, "{:>label$}", alloc::format!("{row}:"));
            for i in 0..=pd {
                let j = i as i64 + row;
                let b = if j < 0 { 0 } else { self.get(i, j as u64) };
                if b == 0 {
                    let _ = write!(out, " {:>width$}", ".");
                } else {
                    let _ = write!(out, " {:>width$}", b);
                }
            }
            out.push('\n');
        }
        out
    }
}

fn decimal_width(v: u64) -> usize {
    let mut w = 1;
    let mut v = v;
    while v >= 10 {
        v /= 10;
        w += 1;
    }
    w
}

/// Every lcm of a nonempty subset of the generators.
fn lcm_lattice(gens: &[Monomial]) -> Result<BTreeSet<Monomial>> {
    let mut lattice: BTreeSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let l = a.lcm(g);
                if lattice.insert(l.clone()) {
                    next.push(l);
                }
            }
        }
        if lattice.len() > LCM_LATTICE_CAP {
            return Err(Error::CapExceeded { what: "lcm lattice size".into(), limit: LCM_LATTICE_CAP });
        }
        frontier = next;
    }
    Ok(lattice)
}

fn rank(rows: &[Vec<i64>], field: HomologyField) -> usize {
    match field {
        HomologyField::Rational => rank_rational(rows),
        HomologyField::Prime(p) => rank_mod_p(rows, p),
    }
}

/// Reduced homology dimensions `H̃_q` for `q = -1 ..= dim`, returned with
/// index `q + 1`. Faces are bitmasks over `0..s`.
fn reduced_homology(faces: &[u32], s: usize, field: HomologyField) -> Vec<u64> {
    // by_size[t] = faces with t vertices
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for v in &mut by_size {
        v.sort_unstable();
    }
    // boundary rank from size t to size t-1, for t = 1..=s
    let mut ranks = vec![0usize; s + 2];
    for t in 1..=s {
        let (lower, upper) = (&by_size[t - 1], &by_size[t]);
        if lower.is_empty() || upper.is_empty() {
            continue;
        }
        let index: BTreeMap<u32, usize> = lower.iter().enumerate().map(|(k, &f)| (f, k)).collect();
        let mut rows = vec![vec![0i64; upper.len()]; lower.len()];
        for (col, &face) in upper.iter().enumerate() {
            let mut sign = 1;
            for v in 0..s {
                if face >> v & 1 == 1 {
                    let row = index[&(face & !(1 << v))];
                    rows[row][col] = sign;
                    sign = -sign;
                }
            }
        }
        ranks[t] = rank(&rows, field);
    }
    (0..=s)
        .map(|t| (by_size[t].len() - ranks[t] - ranks[t + 1]) as u64)
        .collect()
}

/// Graded Betti numbers of `S/I` with the default generator cap.
pub fn graded_betti(ideal: &MonomialIdeal, field: HomologyField) -> Result<BettiTable> {
    graded_betti_capped(ideal, field, DEFAULT_GENERATOR_CAP)
}

pub fn graded_betti_capped(ideal: &MonomialIdeal, field: HomologyField, generator_cap: usize) -> Result<BettiTable> {
    let gens = ideal.generators();
    if gens.len() > generator_cap {
        return Err(Error::CapExceeded { what: "generators for Betti computation".into(), limit: generator_cap });
    }
    if let HomologyField::Prime(p) = field {
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
    }
    let mut entries = BTreeMap::new();
    if ideal.is_unit() {
        return Ok(BettiTable { field, entries });
    }
    entries.insert((0, 0), 1);
    for a in lcm_lattice(gens)? {
        let support = a.support();
        let s = support.len();
        let mut faces = Vec::new();
        let mut exps = a.exponents().to_vec();
        for f in 0u32..(1 << s) {
            for (k, &v) in support.iter().enumerate() {
                exps[v] = a.exponent(v) - (f >> k & 1);
            }
            if ideal.contains_unchecked(&Monomial::from_raw(exps.clone())) {
                faces.push(f);
            }
        }
        if faces.len() == 1 << s {
            continue; // full simplex, acyclic
        }
        for (idx, h) in reduced_homology(&faces, s, field).into_iter().enumerate() {
            if h > 0 {
                // idx = q + 1 and i = q + 2
                *entries.entry((idx + 1, a.degree())).or_insert(0) += h;
            }
        }
    }
    Ok(BettiTable { field, entries })
}

pub fn proj_dim(table: &BettiTable) -> usize {
    table.proj_dim()
}

pub fn regularity(table: &BettiTable) -> i64 {
    table.regularity()
}

/// `codim(I) = pd(S/I)`. The unit ideal is rejected.
pub fn is_cohen_macaulay(ideal: &MonomialIdeal, field: HomologyField) -> Result<bool> {
    let c = codim(ideal)?;
    Ok(c == graded_betti(ideal, field)?.proj_dim())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PureMultiplicity {
    /// Shifts `d_1 < ... < d_c` and `Π d_i / c!`.
    Pure { degrees: Vec<u64>, multiplicity: BigRational },
    NotPure,
}

/// Multiplicity of a quotient with a pure resolution of length `c`.
pub fn pure_resolution_multiplicity(table: &BettiTable, c: usize) -> PureMultiplicity {
    if c == 0 || table.proj_dim() != c {
        return PureMultiplicity::NotPure;
    }
    let mut degrees = Vec::with_capacity(c);
    for i in 1..=c {
        let js: Vec<u64> = table.entries().filter(|&(k, _, _)| k == i).map(|(_, j, _)| j).collect();
        if js.len() != 1 {
            return PureMultiplicity::NotPure;
        }
        degrees.push(js[0]);
    }
    let num: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    let den: BigInt = (1..=c as u64).map(BigInt::from).fold(BigInt::one(), |a, b| a * b);
    PureMultiplicity::Pure { degrees, multiplicity: BigRational::new(num, den) }
}

/// The alternating Betti sums reproduce the Hilbert series numerator.
pub fn verify_betti_hilbert_identity(ideal: &MonomialIdeal, field: HomologyField) -> Result<bool> {
    let table = graded_betti(ideal, field)?;
    let series = hilbert_series(ideal)?;
    Ok(table.alternating_numerator() == series.numerator())
}

/// `pd(S/I) <= min(number of minimal generators, n)`.
pub fn stillman_monomial_check(ideal: &MonomialIdeal, field: HomologyField) -> Result<bool> {
    let pd = graded_betti(ideal, field)?.proj_dim();
    Ok(pd <= ideal.min_generator_count().min(ideal.ring().n()))
}
