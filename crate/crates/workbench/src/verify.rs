//! The acceptance suite: ten desk-scale checks, each with a time budget.

use std::time::{Duration, Instant};

use serde_json::{json, Value};
use uniformity_core::artin_rees::{ar_counterexample_search, exercise_pair};
use uniformity_core::closure::{briancon_skoda_check, integral_closure};
use uniformity_core::groebner::{
    frobenius_containment_check, kollar_family, kollar_sharpness, mather_index_with_caps, radical_member,
    GroebnerBasis, PolyRing, Polynomial, PrimeField, Rationals,
};
use uniformity_core::resolution::{graded_betti_capped, hilbert_series, HomologyField};
use uniformity_core::symbolic::{codim, minimal_primes, symbolic_equals_ordinary, symbolic_power, verify_edge_theorem};
use uniformity_core::{MonomialIdeal, Ring};

use crate::caps::Caps;
use crate::corpus;
use crate::parse::{parse_ideal, parse_polynomial, render_ideal};

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    /// The mathematical check succeeded.
    pub holds: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionOutcome {
    pub fn within_time(&self) -> bool {
        self.elapsed <= self.limit
    }

    pub fn passed(&self) -> bool {
        self.holds && self.within_time()
    }

    pub fn line(&self) -> String {
        format!(
            "{} [{:>2}] {}: {} ({:.2} s, limit {} s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
        )
    }

    /// Timing is left out so reports stay byte-identical across runs.
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "holds": self.holds,
            "within_time": self.within_time(),
            "detail": self.detail,
            "limit_seconds": self.limit.as_secs(),
        })
    }
}

pub const CRITERIA: [(u8, &str, u64); 10] = [
    (1, "Koszul Betti rows for n = 1..6", 5),
    (2, "Betti and Hilbert numerators agree on 200 ideals", 60),
    (3, "symbolic square of (xy, xz, yz)", 1),
    (4, "edge-ideal theorem on connected graphs up to 6 vertices", 600),
    (5, "integral closures and Briancon-Skoda in the plane", 120),
    (6, "Artin-Rees exercise family", 30),
    (7, "Kollar family sharpness", 120),
    (8, "Mather indices", 60),
    (9, "Frobenius power containment", 60),
    (10, "structural property suites", 300),
];

type Check = Result<(bool, String), String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn koszul(caps: &Caps) -> Check {
    for n in 1..=6usize {
        let r = Ring::indexed("x", n).map_err(err)?;
        let m = MonomialIdeal::maximal(r);
        let table = graded_betti_capped(&m, HomologyField::Rational, caps.betti_max_generators).map_err(err)?;
        for (i, j, b) in table.entries() {
            if j != i as u64 || b != binomial(n as u64, i as u64) {
                return Ok((false, format!("n = {n}: beta_{{{i},{j}}} = {b}")));
            }
        }
        if table.proj_dim() != n {
            return Ok((false, format!("n = {n}: projective dimension {}", table.proj_dim())));
        }
    }
    Ok((true, "beta_{i,i} = C(n,i) and nothing else".into()))
}

fn hilbert_identities(seed: u64, caps: &Caps) -> Check {
    let mut rng = corpus::rng(seed);
    for trial in 0..200 {
        let n = 1 + (trial % 4);
        let r = Ring::indexed("x", n).map_err(err)?;
        let i = corpus::random_monomial_ideal(&mut rng, &r, 8, 5);
        let table = graded_betti_capped(&i, HomologyField::Rational, caps.betti_max_generators).map_err(err)?;
        let series = hilbert_series(&i).map_err(err)?;
        if table.alternating_numerator() != series.numerator() {
            return Ok((false, format!("mismatch on ({})", render_ideal(&i))));
        }
    }
    Ok((true, "200 of 200 numerators agree".into()))
}

fn symbolic_witness() -> Check {
    let r = Ring::new(["x", "y", "z"]).map_err(err)?;
    let i = parse_ideal("x*y, x*z, y*z", &r).map_err(err)?;
    let cmp = symbolic_equals_ordinary(&i, 2).map_err(err)?;
    let witness = cmp.witness.as_ref().map(|w| r.render(w));
    let expected = parse_ideal("x^2*y^2, x^2*z^2, y^2*z^2, x*y*z", &r).map_err(err)?;
    let sym = symbolic_power(&i, 2).map_err(err)?;
    let holds = !cmp.equal() && witness.as_deref() == Some("x*y*z") && sym == expected;
    Ok((holds, format!("witness {}, I^(2) = ({})", witness.unwrap_or_else(|| "none".into()), render_ideal(&sym))))
}

fn edge_sweep() -> Check {
    let mut graphs = 0;
    let mut bipartite = 0;
    for n in 2..=6 {
        let r = Ring::indexed("x", n).map_err(err)?;
        for g in corpus::connected_graphs(n) {
            let rep = verify_edge_theorem(&g, &r, 3).map_err(err)?;
            if !rep.verdicts_agree() {
                return Ok((false, format!("verdicts disagree on edges {:?}", g.edges())));
            }
            graphs += 1;
            bipartite += rep.bipartite() as usize;
        }
    }
    Ok((true, format!("{graphs} graphs, {bipartite} bipartite, all verdicts agree")))
}

fn closure_checks(seed: u64) -> Check {
    let r = corpus::plane();
    for d in 2..=6u32 {
        let i = parse_ideal(&format!("x^{d}, y^{d}"), &r).map_err(err)?;
        let m = MonomialIdeal::maximal(r.clone()).power(d).map_err(err)?;
        if integral_closure(&i).map_err(err)? != m {
            return Ok((false, format!("closure of (x^{d}, y^{d}) is not m^{d}")));
        }
    }
    let mut rng = corpus::rng(seed);
    let mut tested = 0;
    while tested < 50 {
        let a = corpus::random_monomial(&mut rng, 2, 6);
        let b = corpus::random_monomial(&mut rng, 2, 6);
        let i = MonomialIdeal::from_generators(r.clone(), vec![a, b]).map_err(err)?;
        if i.min_generator_count() != 2 {
            continue;
        }
        tested += 1;
        let rep = briancon_skoda_check(&i, 2, 5).map_err(err)?;
        if let Some((n, w)) = rep.failure {
            return Ok((false, format!("closure(I^{n}) has {} outside I^{} for ({})", r.render(&w), n - 1, render_ideal(&i))));
        }
    }
    Ok((true, "closure(x^d, y^d) = m^d for d = 2..6; 50 random ideals satisfy closure(I^n) in I^(n-1), n <= 5".into()))
}

fn artin_rees_exercise() -> Check {
    let r = corpus::plane();
    let mut holds = true;
    let mut notes = Vec::new();
    for n in [3u32, 4] {
        let (i, j) = exercise_pair(&r, n).map_err(err)?;
        for k in [n - 2, n - 1, n] {
            let hit = ar_counterexample_search(&i, &j, k, 2 * n).map_err(err)?;
            let expected = k < n;
            if k >= n - 1 && hit.is_some() != expected {
                holds = false;
            }
            notes.push(match hit {
                Some(h) => format!("n={n} k={k}: l={} witness {}", h.ell, r.render(&h.witness)),
                None => format!("n={n} k={k}: none to l={}", 2 * n),
            });
        }
    }
    Ok((holds, notes.join("; ")))
}

fn kollar(caps: &Caps) -> Check {
    let (ring, fam) = kollar_family(Rationals, 3, 2).map_err(err)?;
    let gb = GroebnerBasis::of(&ring, &fam, caps.groebner()).map_err(err)?;
    let x2 = Polynomial::var(&ring, 1).map_err(err)?;
    for d in 1..=3 {
        if gb.contains(&x2.pow(d).map_err(err)?).map_err(err)? {
            return Ok((false, format!("x2^{d} already in I for d = 2")));
        }
    }
    let s2 = kollar_sharpness(Rationals, 3, 2, 8).map_err(err)?;
    let radical = radical_member(&x2, &fam).map_err(err)?;
    let s3 = kollar_sharpness(Rationals, 3, 3, 12).map_err(err)?;
    let show = |s: Option<u32>| s.map_or("exhausted".to_string(), |d| d.to_string());
    let holds = s2.least == Some(4) && radical && s3.least == Some(9);
    Ok((holds, format!("d=2: D={} (fails for 1..3), x2 in radical: {radical}; d=3: D={}", show(s2.least), show(s3.least))))
}

fn mather(seed: u64, caps: &Caps) -> Check {
    let mut rng = corpus::rng(seed);
    for trial in 0..50 {
        let n = 2 + trial % 2;
        let ring = PolyRing::grevlex(Ring::indexed("x", n).map_err(err)?, Rationals);
        let d = 2 + (trial as u32 / 2) % 4;
        let f = corpus::random_homogeneous(&mut rng, &ring, d, 4);
        let rep = mather_index_with_caps(&f, n as u32, caps.groebner()).map_err(err)?;
        if rep.index != Some(1) {
            return Ok((false, format!("homogeneous {f}: index {:?}", rep.index)));
        }
    }
    let ring = PolyRing::grevlex(corpus::plane(), Rationals);
    let f = parse_polynomial("x^5 + y^5 + x^3*y^3", &ring).map_err(err)?;
    let rep = mather_index_with_caps(&f, 4, caps.groebner()).map_err(err)?;
    let holds = rep.index == Some(2) && rep.within_bound() == Some(true);
    Ok((holds, format!("50 homogeneous f have index 1; x^5+y^5+x^3y^3 has index {:?} (bound 2)", rep.index)))
}

fn frobenius(caps: &Caps) -> Check {
    let mut checked = 0;
    for n in [2usize, 3] {
        for p in [2u64, 3] {
            let field = PrimeField::new(p).map_err(err)?;
            let ring = PolyRing::grevlex(Ring::indexed("x", n).map_err(err)?, field);
            let gens: Vec<_> = (0..n).map(|i| Polynomial::var(&ring, i)).collect::<Result<_, _>>().map_err(err)?;
            for e in [1u32, 2] {
                let rep = frobenius_containment_check(&gens, e, caps.frobenius_max_products).map_err(err)?;
                if !rep.holds() {
                    return Ok((false, format!("n={n} p={p} e={e}: product outside J^[p^e]")));
                }
                checked += rep.products_checked;
            }
        }
    }
    Ok((true, format!("8 cases, {checked} power products inside J^[p^e]")))
}

fn structural(seed: u64, caps: &Caps) -> Check {
    let mut rng = corpus::rng(seed);
    let mut violations = Vec::new();
    let mut count = 0;
    for trial in 0..400 {
        let n = 1 + trial % 4;
        let r = Ring::indexed("x", n).map_err(err)?;
        let i = corpus::random_monomial_ideal(&mut rng, &r, 6, 4);
        let c = codim(&i).map_err(err)?;
        let s = i.min_generator_count();
        let pd = graded_betti_capped(&i, HomologyField::Rational, caps.betti_max_generators).map_err(err)?.proj_dim();
        if s < c {
            violations.push(format!("Krull bound on ({})", render_ideal(&i)));
        }
        if !(c <= pd && pd <= n) {
            violations.push(format!("codim <= pd <= n on ({})", render_ideal(&i)));
        }
        if pd > s {
            violations.push(format!("pd <= s on ({})", render_ideal(&i)));
        }
        count += 1;
    }
    for trial in 0..200 {
        let n = 3 + trial % 3;
        let r = Ring::indexed("x", n).map_err(err)?;
        let i = corpus::random_squarefree_ideal(&mut rng, &r, 6, 3);
        let (_, e) = uniformity_core::resolution::dimension_multiplicity(&i).map_err(err)?;
        let primes = minimal_primes(&i).map_err(err)?;
        let c = primes.iter().map(|p| p.codim()).min().unwrap_or(0);
        if e != primes.iter().filter(|p| p.codim() == c).count() as i64 {
            violations.push(format!("multiplicity on ({})", render_ideal(&i)));
        }
        let sym: Vec<MonomialIdeal> = (1..=4).map(|k| symbolic_power(&i, k)).collect::<Result<_, _>>().map_err(err)?;
        for a in 1..=3usize {
            for b in 1..=4 - a {
                if !sym[a - 1].product(&sym[b - 1]).map_err(err)?.is_subset_of(&sym[a + b - 1]).map_err(err)? {
                    violations.push(format!("I^({a}) I^({b}) in I^({}) on ({})", a + b, render_ideal(&i)));
                }
            }
        }
        count += 1;
    }
    if violations.is_empty() {
        Ok((true, format!("{count} ideals, zero violations")))
    } else {
        Ok((false, format!("{} violations, first: {}", violations.len(), violations[0])))
    }
}

/// Runs one criterion; `None` for an unknown id.
pub fn run_criterion(id: u8, seed: u64, caps: &Caps) -> Option<CriterionOutcome> {
    let &(_, title, limit) = CRITERIA.iter().find(|c| c.0 == id)?;
    // each randomized criterion draws from its own stream of the run seed
    let sub = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(id as u64);
    let start = Instant::now();
    let result = match id {
        1 => koszul(caps),
        2 => hilbert_identities(sub, caps),
        3 => symbolic_witness(),
        4 => edge_sweep(),
        5 => closure_checks(sub),
        6 => artin_rees_exercise(),
        7 => kollar(caps),
        8 => mather(sub, caps),
        9 => frobenius(caps),
        10 => structural(sub, caps),
        _ => unreachable!(),
    };
    let elapsed = start.elapsed();
    let (holds, detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
    Some(CriterionOutcome { id, title, holds, detail, elapsed, limit: Duration::from_secs(limit) })
}

pub fn run_all(seed: u64, caps: &Caps) -> Vec<CriterionOutcome> {
    CRITERIA.iter().filter_map(|c| run_criterion(c.0, seed, caps)).collect()
}
