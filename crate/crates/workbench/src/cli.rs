//! The `uniformity` command line.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use uniformity_core::artin_rees::{ar_counterexample_search, artin_rees_number, exercise_pair, MismatchSide};
use uniformity_core::closure::{briancon_skoda_check, integral_closure, newton_polyhedron, render_facet, uniform_bs_number};
use uniformity_core::groebner::{
    frobenius_containment_check, kollar_bound, kollar_family, kollar_sharpness, mather_index_with_caps,
    power_membership_index, radical_member_with_caps, Field, GroebnerBasis, MonomialOrder, PolyRing, PolyRingRef,
    Polynomial, PrimeField, Rationals,
};
use uniformity_core::resolution::{
    dimension_multiplicity, graded_betti_capped, hilbert_function, hilbert_polynomial, hilbert_series,
    stillman_monomial_check, verify_betti_hilbert_identity, HomologyField,
};
use uniformity_core::symbolic::{
    edge_ideal, is_packed, minimal_primes, symbolic_equals_ordinary, symbolic_power, verify_edge_theorem,
};
use uniformity_core::{Graph, Minor, MonomialIdeal, Ring, RingRef};

use crate::caps::Caps;
use crate::parse::{
    parse_graph, parse_ideal, parse_ideal_file, parse_monomial, parse_polynomial, parse_polynomials, parse_ring,
    render_graph, render_ideal, ParseError,
};
use crate::verify;

pub const DEFAULT_SEED: u64 = 20_240_917;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "uniformity", version, about = "Experiments with uniform bounds in commutative algebra")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized corpus.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// TOML file overriding resource caps.
    #[arg(long, global = true, value_name = "FILE")]
    pub caps: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monomial ideal arithmetic.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Minimal primes, symbolic powers, packedness and edge ideals.
    #[command(subcommand)]
    Symbolic(SymbolicCmd),
    /// Integral closure and Briancon-Skoda checks.
    #[command(subcommand)]
    Closure(ClosureCmd),
    /// Artin-Rees numbers and reduction counterexamples.
    #[command(subcommand)]
    Artinrees(ArCmd),
    /// Hilbert series, Betti tables and derived invariants.
    #[command(subcommand)]
    Invariants(InvCmd),
    /// Polynomial ideals over Q or F_p.
    #[command(subcommand)]
    Groebner(GbCmd),
    /// Run the acceptance suite.
    Verify {
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u8>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct IdealInput {
    /// Variables, e.g. "x,y,z".
    #[arg(long)]
    pub ring: Option<String>,
    /// Generators, or @FILE.
    #[arg(long)]
    pub ideal: String,
}

#[derive(Debug, Clone, Args)]
pub struct GraphInput {
    /// Graph file: "graph N" then one "u v" edge per line.
    #[arg(long, group = "shape")]
    pub graph: Option<String>,
    #[arg(long, group = "shape", value_name = "N")]
    pub cycle: Option<usize>,
    #[arg(long, group = "shape", value_name = "N")]
    pub complete: Option<usize>,
    #[arg(long, group = "shape", value_name = "N")]
    pub path: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum IdealCmd {
    /// Minimal generators.
    Show(IdealInput),
    Contains {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        monomial: String,
    },
    Sum {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        other: String,
    },
    Product {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        other: String,
    },
    Intersect {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        other: String,
    },
    Power {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        k: u32,
    },
    /// I : m for a monomial m.
    Colon {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        monomial: String,
    },
    Radical(IdealInput),
    /// Set some variables to 0 and others to 1.
    Minor {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, value_delimiter = ',')]
        zeros: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        ones: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SymbolicCmd {
    /// Compare I^(k) with I^k.
    Compare {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        k: u32,
    },
    Power {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        k: u32,
    },
    Primes(IdealInput),
    Packed(IdealInput),
    /// Edge ideal of a graph.
    Edge(GraphInput),
    /// Bipartite, packed and equal-powers verdicts for a graph.
    Theorem {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClosureCmd {
    /// Integral closure and Newton polyhedron facets.
    Closure(IdealInput),
    /// closure(I^n) in I^(n - ell + 1) for ell <= n <= nmax.
    Bs {
        #[command(flatten)]
        input: IdealInput,
        /// Defaults to the number of minimal generators.
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
    },
    UniformBs {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum ArCmd {
    /// Least k_n with I^n meet N in I^(n - k_n) N.
    Number {
        #[command(flatten)]
        input: IdealInput,
        /// Generators of N.
        #[arg(long)]
        sub: String,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
    },
    /// Search I^l = J^(l-k) I^k for I = (x^n, y^n, x^(n-1) y), J = (x^n, y^n).
    Exercise4 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        lmax: Option<u32>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct FieldArg {
    /// Coefficient field: "q" or "fp:P".
    #[arg(long, default_value = "q")]
    pub field: String,
}

#[derive(Debug, Subcommand)]
pub enum InvCmd {
    Hilbert {
        #[command(flatten)]
        input: IdealInput,
        /// Also list the Hilbert function up to this degree.
        #[arg(long)]
        upto: Option<u32>,
    },
    Betti {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        field: FieldArg,
    },
    PdReg {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Krull dimension and multiplicity.
    Mult(IdealInput),
    Cm {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Betti numbers reproduce the Hilbert numerator.
    Identity {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        field: FieldArg,
    },
    /// pd(S/I) <= min(generators, n).
    Stillman {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        field: FieldArg,
    },
    HilbertPoly(IdealInput),
}

#[derive(Debug, Clone, Args)]
pub struct PolyInput {
    #[arg(long)]
    pub ring: String,
    /// Comma-separated generators.
    #[arg(long)]
    pub gens: String,
    #[command(flatten)]
    pub field: FieldArg,
    /// "grevlex" or "lex".
    #[arg(long, default_value = "grevlex")]
    pub order: String,
}

#[derive(Debug, Subcommand)]
pub enum GbCmd {
    /// Reduced Groebner basis.
    Gb(PolyInput),
    /// Normal form and ideal membership of f.
    Member {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        f: String,
    },
    /// Whether f lies in the radical, and the least N with f^N in the ideal.
    Radical {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 16)]
        nmax: u32,
    },
    /// Least N with f^N in the Jacobian ideal near the origin.
    Mather {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        f: String,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 8)]
        nmax: u32,
    },
    /// Sharpness of the effective Nullstellensatz on Kollar's family, or the bound itself.
    Kollar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value_t = 16)]
        dmax: u32,
        /// Degrees for the bound instead of the family.
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
        #[command(flatten)]
        field: FieldArg,
    },
    /// (J)^(t p^e) in J^[p^e] over F_p.
    Frobenius {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(ParseError),
    Core(uniformity_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Parse(e) => write!(f, "parse error: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(uniformity_core::Error::CapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<uniformity_core::Error> for CliError {
    fn from(e: uniformity_core::Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// What a command produced: text for humans and a JSON value, plus whether a
/// checked property held.
#[derive(Debug)]
pub struct Outcome {
    pub ok: bool,
    pub text: String,
    pub result: Value,
}

impl Outcome {
    fn ok(text: String, result: Value) -> Self {
        Outcome { ok: true, text, result }
    }

    fn check(ok: bool, text: String, result: Value) -> Self {
        Outcome { ok, text, result }
    }
}

fn read_arg(value: &str) -> CliResult<String> {
    match value.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(value.to_string()),
    }
}

fn load_ideal(input: &IdealInput) -> CliResult<MonomialIdeal> {
    let ring = input.ring.as_deref().map(parse_ring).transpose()?;
    if let Some(path) = input.ideal.strip_prefix('@') {
        let text = read_arg(&input.ideal)?;
        return parse_ideal_file(&text, ring.as_ref()).map_err(|e| CliError::Usage(format!("{path}: {e}")));
    }
    let ring = ring.ok_or_else(|| CliError::Usage("--ring is required unless --ideal reads a file".into()))?;
    Ok(parse_ideal(&input.ideal, &ring)?)
}

fn other_ideal(ring: &RingRef, text: &str) -> CliResult<MonomialIdeal> {
    let text = read_arg(text)?;
    if text.contains('\n') {
        return Ok(parse_ideal_file(&text, Some(ring))?);
    }
    Ok(parse_ideal(&text, ring)?)
}

fn load_graph(input: &GraphInput) -> CliResult<Graph> {
    if let Some(path) = &input.graph {
        let text = read_arg(&format!("@{path}"))?;
        return parse_graph(&text).map_err(|e| CliError::Usage(format!("{path}: {e}")));
    }
    let g = match (input.cycle, input.complete, input.path) {
        (Some(n), _, _) => Graph::cycle(n)?,
        (_, Some(n), _) => Graph::complete(n)?,
        (_, _, Some(n)) => Graph::path(n)?,
        _ => return Err(CliError::Usage("one of --graph, --cycle, --complete, --path is required".into())),
    };
    Ok(g)
}

fn graph_ring(g: &Graph) -> CliResult<RingRef> {
    Ok(Ring::indexed("x", g.vertex_count().max(1))?)
}

fn variable_indices(ring: &RingRef, names: &[String]) -> CliResult<Vec<usize>> {
    names
        .iter()
        .map(|n| ring.index_of(n.trim()).ok_or_else(|| CliError::Usage(format!("unknown variable '{n}'"))))
        .collect()
}

fn ideal_outcome(ideal: &MonomialIdeal) -> Outcome {
    let text = render_ideal(ideal);
    let result = json!({ "ring": ideal.ring().names(), "generators": ideal_json(ideal) });
    Outcome::ok(text, result)
}

fn ideal_json(ideal: &MonomialIdeal) -> Value {
    json!(ideal.generators().iter().map(|m| ideal.ring().render(m)).collect::<Vec<_>>())
}

fn homology_field(text: &str) -> CliResult<HomologyField> {
    match parse_field(text)? {
        None => Ok(HomologyField::Rational),
        Some(p) => Ok(HomologyField::Prime(p.modulus())),
    }
}

/// `None` for the rationals.
fn parse_field(text: &str) -> CliResult<Option<PrimeField>> {
    let t = text.trim().to_ascii_lowercase();
    if t == "q" || t == "qq" {
        return Ok(None);
    }
    let digits = t.strip_prefix("fp:").unwrap_or(&t);
    let p: u64 = digits.parse().map_err(|_| CliError::Usage(format!("unknown field '{text}'; use q or fp:P")))?;
    Ok(Some(PrimeField::new(p)?))
}

fn poly_ring<F: Field>(vars: RingRef, field: F, order: &str) -> CliResult<PolyRingRef<F>> {
    let n = vars.n();
    let order = match order.trim().to_ascii_lowercase().as_str() {
        "grevlex" => MonomialOrder::grevlex(n),
        "lex" => MonomialOrder::lex(n),
        other => return Err(CliError::Usage(format!("unknown order '{other}'; use grevlex or lex"))),
    };
    Ok(PolyRing::new(vars, field, order)?)
}

fn polys_json<F: Field>(ps: &[Polynomial<F>]) -> Value {
    json!(ps.iter().map(|p| p.render()).collect::<Vec<_>>())
}

fn run_ideal(cmd: &IdealCmd) -> CliResult<Outcome> {
    Ok(match cmd {
        IdealCmd::Show(input) => ideal_outcome(&load_ideal(input)?),
        IdealCmd::Contains { input, monomial } => {
            let i = load_ideal(input)?;
            let m = parse_monomial(monomial, i.ring())?;
            let member = i.contains(&m)?;
            Outcome::ok(member.to_string(), json!({ "monomial": i.ring().render(&m), "member": member }))
        }
        IdealCmd::Sum { input, other } => {
            let i = load_ideal(input)?;
            ideal_outcome(&i.sum(&other_ideal(i.ring(), other)?)?)
        }
        IdealCmd::Product { input, other } => {
            let i = load_ideal(input)?;
            ideal_outcome(&i.product(&other_ideal(i.ring(), other)?)?)
        }
        IdealCmd::Intersect { input, other } => {
            let i = load_ideal(input)?;
            ideal_outcome(&i.intersect(&other_ideal(i.ring(), other)?)?)
        }
        IdealCmd::Power { input, k } => ideal_outcome(&load_ideal(input)?.power(*k)?),
        IdealCmd::Colon { input, monomial } => {
            let i = load_ideal(input)?;
            let m = parse_monomial(monomial, i.ring())?;
            ideal_outcome(&i.colon(&m)?)
        }
        IdealCmd::Radical(input) => ideal_outcome(&load_ideal(input)?.radical()),
        IdealCmd::Minor { input, zeros, ones } => {
            let i = load_ideal(input)?;
            let z = variable_indices(i.ring(), zeros)?;
            let o = variable_indices(i.ring(), ones)?;
            match i.minor(&z, &o)? {
                Minor::Ideal(m) => {
                    let mut out = ideal_outcome(&m);
                    out.result["kind"] = json!("ideal");
                    out.text = format!("ring {}\n{}", m.ring().names().join(", "), out.text);
                    out
                }
                Minor::Field { unit } => Outcome::ok(
                    if unit { "1" } else { "0" }.to_string(),
                    json!({ "kind": "field", "unit": unit }),
                ),
            }
        }
    })
}

fn run_symbolic(cmd: &SymbolicCmd) -> CliResult<Outcome> {
    Ok(match cmd {
        SymbolicCmd::Compare { input, k } => {
            let i = load_ideal(input)?;
            let cmp = symbolic_equals_ordinary(&i, *k)?;
            let witness = cmp.witness.as_ref().map(|w| i.ring().render(w));
            let text = match &witness {
                Some(w) => format!("NOT EQUAL, witness {w}"),
                None => "EQUAL".to_string(),
            };
            Outcome::ok(
                text,
                json!({
                    "k": k,
                    "equal": cmp.equal(),
                    "witness": witness,
                    "symbolic": ideal_json(&cmp.symbolic),
                    "ordinary": ideal_json(&cmp.ordinary),
                }),
            )
        }
        SymbolicCmd::Power { input, k } => ideal_outcome(&symbolic_power(&load_ideal(input)?, *k)?),
        SymbolicCmd::Primes(input) => {
            let i = load_ideal(input)?;
            let primes = minimal_primes(&i)?;
            let rendered: Vec<String> = primes
                .iter()
                .map(|p| {
                    let names: Vec<&str> = p.variables().iter().map(|&v| i.ring().name(v)).collect();
                    format!("({})", names.join(", "))
                })
                .collect();
            let codims: Vec<usize> = primes.iter().map(|p| p.codim()).collect();
            Outcome::ok(rendered.join("\n"), json!({ "primes": rendered, "codims": codims }))
        }
        SymbolicCmd::Packed(input) => {
            let i = load_ideal(input)?;
            let rep = is_packed(&i)?;
            let ring = i.ring();
            let names = |vs: &[usize]| vs.iter().map(|&v| ring.name(v).to_string()).collect::<Vec<_>>();
            let failing = rep.failing.as_ref().map(|f| {
                json!({
                    "zeros": names(&f.zeros),
                    "ones": names(&f.ones),
                    "minor": ideal_json(&f.minor),
                    "codim": f.codim,
                    "disjoint": f.disjoint,
                })
            });
            let text = match &rep.failing {
                None => format!("packed ({} minors checked)", rep.minors_checked),
                Some(f) => format!(
                    "not packed: zeros {{{}}} ones {{{}}} gives ({}) with codim {} but only {} disjoint generators",
                    names(&f.zeros).join(", "),
                    names(&f.ones).join(", "),
                    render_ideal(&f.minor),
                    f.codim,
                    f.disjoint
                ),
            };
            Outcome::ok(text, json!({ "packed": rep.packed(), "minors_checked": rep.minors_checked, "failing": failing }))
        }
        SymbolicCmd::Edge(g) => {
            let g = load_graph(g)?;
            let ring = graph_ring(&g)?;
            let mut out = ideal_outcome(&edge_ideal(&g, &ring)?);
            out.result["graph"] = json!(render_graph(&g));
            out
        }
        SymbolicCmd::Theorem { graph, kmax } => {
            let g = load_graph(graph)?;
            let ring = graph_ring(&g)?;
            let rep = verify_edge_theorem(&g, &ring, *kmax)?;
            let unequal = rep.unequal.as_ref().map(|(k, w)| json!({ "k": k, "witness": ring.render(w) }));
            let mut text = format!(
                "bipartite: {}\npacked: {}\npowers equal up to k = {}: {}",
                rep.bipartite(),
                rep.packed(),
                kmax,
                rep.powers_equal()
            );
            if let Some((k, w)) = &rep.unequal {
                text.push_str(&format!(" (k = {k}, witness {})", ring.render(w)));
            }
            text.push_str(&format!("\nconsistent: {}", rep.consistent()));
            Outcome::check(
                rep.consistent(),
                text,
                json!({
                    "bipartite": rep.bipartite(),
                    "packed": rep.packed(),
                    "powers_equal": rep.powers_equal(),
                    "equal_up_to": rep.equal_up_to,
                    "unequal": unequal,
                    "verdicts_agree": rep.verdicts_agree(),
                    "consistent": rep.consistent(),
                }),
            )
        }
    })
}

fn run_closure(cmd: &ClosureCmd) -> CliResult<Outcome> {
    Ok(match cmd {
        ClosureCmd::Closure(input) => {
            let i = load_ideal(input)?;
            let cl = integral_closure(&i)?;
            let poly = newton_polyhedron(&i)?;
            let facets: Vec<String> = poly.facets().iter().map(|f| render_facet(i.ring(), f)).collect();
            let text = format!("{}\nfacets:\n  {}", render_ideal(&cl), facets.join("\n  "));
            Outcome::ok(
                text,
                json!({ "closure": ideal_json(&cl), "facets": facets, "integrally_closed": cl == i }),
            )
        }
        ClosureCmd::Bs { input, ell, nmax } => {
            let i = load_ideal(input)?;
            let ell = ell.unwrap_or(i.min_generator_count().max(1) as u32);
            let rep = briancon_skoda_check(&i, ell, *nmax)?;
            let failure = rep.failure.as_ref().map(|(n, m)| json!({ "n": n, "witness": i.ring().render(m) }));
            let text = match &rep.failure {
                None => format!("holds for ell = {ell}, n <= {nmax}"),
                Some((n, m)) => format!("fails at n = {n}: {} in closure(I^{n}) but not I^{}", i.ring().render(m), n + 1 - ell),
            };
            Outcome::check(rep.ok(), text, json!({ "ell": ell, "n_max": nmax, "holds": rep.ok(), "failure": failure }))
        }
        ClosureCmd::UniformBs { input, nmax } => {
            let i = load_ideal(input)?;
            let ev = uniform_bs_number(&i, *nmax)?;
            let text = format!("k = {} (per n: {:?})", ev.k, ev.per_n);
            Outcome::ok(text, json!({ "k": ev.k, "per_n": ev.per_n, "n_max": ev.n_max }))
        }
    })
}

fn run_ar(cmd: &ArCmd) -> CliResult<Outcome> {
    Ok(match cmd {
        ArCmd::Number { input, sub, nmax } => {
            let i = load_ideal(input)?;
            let n = other_ideal(i.ring(), sub)?;
            let rep = artin_rees_number(&i, &n, *nmax)?;
            let text = format!("k = {} (per n: {:?})", rep.number(), rep.per_n);
            Outcome::ok(text, json!({ "k": rep.number(), "per_n": rep.per_n, "n_max": nmax }))
        }
        ArCmd::Exercise4 { n, k, lmax } => {
            let ring = Ring::new(["x", "y"])?;
            let (i, j) = exercise_pair(&ring, *n)?;
            let lmax = lmax.unwrap_or(2 * n).max(k + 1);
            let hit = ar_counterexample_search(&i, &j, *k, lmax)?;
            let head = format!("I = ({})\nJ = ({})\n", render_ideal(&i), render_ideal(&j));
            let (text, found) = match &hit {
                Some(h) => {
                    let side = match h.side {
                        MismatchSide::Power => "I^l",
                        MismatchSide::Reduction => "J^(l-k) I^k",
                    };
                    (format!("{head}mismatch at l = {}: {} from {side}", h.ell, ring.render(&h.witness)), true)
                }
                None => (format!("{head}no mismatch for l <= {lmax}"), false),
            };
            let hit_json = hit.as_ref().map(|h| json!({ "ell": h.ell, "witness": ring.render(&h.witness) }));
            Outcome::ok(
                text,
                json!({ "ideal": ideal_json(&i), "reduction": ideal_json(&j), "k": k, "l_max": lmax, "mismatch": found, "hit": hit_json }),
            )
        }
    })
}

fn run_invariants(cmd: &InvCmd, caps: &Caps) -> CliResult<Outcome> {
    Ok(match cmd {
        InvCmd::Hilbert { input, upto } => {
            let i = load_ideal(input)?;
            let s = hilbert_series(&i)?;
            let num = s.numerator().to_vec();
            let mut text = format!("numerator {:?} over (1-t)^{}", num, i.ring().n());
            let values: Option<Vec<u64>> = upto.map(|d| (0..=d).map(|k| hilbert_function(&i, k)).collect());
            if let Some(v) = &values {
                text.push_str(&format!("\nH(0..) = {v:?}"));
            }
            Outcome::ok(text, json!({ "numerator": num, "n": i.ring().n(), "values": values }))
        }
        InvCmd::Betti { input, field } => {
            let i = load_ideal(input)?;
            let t = graded_betti_capped(&i, homology_field(&field.field)?, caps.betti_max_generators)?;
            let entries: Vec<Value> = t.entries().map(|(i, j, b)| json!([i, j, b])).collect();
            let totals: Vec<u64> = (0..=t.proj_dim()).map(|k| t.total(k)).collect();
            Outcome::ok(t.render(), json!({ "field": t.field().to_string(), "entries": entries, "totals": totals }))
        }
        InvCmd::PdReg { input, field } => {
            let i = load_ideal(input)?;
            let t = graded_betti_capped(&i, homology_field(&field.field)?, caps.betti_max_generators)?;
            Outcome::ok(
                format!("pd = {}, reg = {}", t.proj_dim(), t.regularity()),
                json!({ "pd": t.proj_dim(), "reg": t.regularity() }),
            )
        }
        InvCmd::Mult(input) => {
            let i = load_ideal(input)?;
            let (d, e) = dimension_multiplicity(&i)?;
            Outcome::ok(format!("dim = {d}, e = {e}"), json!({ "dim": d, "multiplicity": e }))
        }
        InvCmd::Cm { input, field } => {
            let i = load_ideal(input)?;
            let t = graded_betti_capped(&i, homology_field(&field.field)?, caps.betti_max_generators)?;
            let c = uniformity_core::symbolic::codim(&i)?;
            let cm = c == t.proj_dim();
            Outcome::ok(
                format!("{} (codim {c}, pd {})", if cm { "Cohen-Macaulay" } else { "not Cohen-Macaulay" }, t.proj_dim()),
                json!({ "cohen_macaulay": cm, "codim": c, "pd": t.proj_dim() }),
            )
        }
        InvCmd::Identity { input, field } => {
            let i = load_ideal(input)?;
            let ok = verify_betti_hilbert_identity(&i, homology_field(&field.field)?)?;
            Outcome::check(ok, if ok { "identity holds" } else { "identity FAILS" }.into(), json!({ "holds": ok }))
        }
        InvCmd::Stillman { input, field } => {
            let i = load_ideal(input)?;
            let ok = stillman_monomial_check(&i, homology_field(&field.field)?)?;
            Outcome::check(ok, if ok { "bound holds" } else { "bound FAILS" }.into(), json!({ "holds": ok }))
        }
        InvCmd::HilbertPoly(input) => {
            let i = load_ideal(input)?;
            let hp = hilbert_polynomial(&i)?;
            let coeffs: Vec<String> = hp.coefficients().iter().map(|c| c.to_string()).collect();
            let text = format!("coefficients of 1, d, d^2, ...: [{}], agrees from d = {}", coeffs.join(", "), hp.threshold());
            Outcome::ok(text, json!({ "coefficients": coeffs, "threshold": hp.threshold() }))
        }
    })
}

fn groebner_generic<F: Field>(cmd: &GbCmd, field: F, caps: &Caps) -> CliResult<Outcome> {
    let load = |input: &PolyInput| -> CliResult<(PolyRingRef<F>, Vec<Polynomial<F>>)> {
        let ring = poly_ring(parse_ring(&input.ring)?, field.clone(), &input.order)?;
        let text = read_arg(&input.gens)?;
        let gens = parse_polynomials(&text, &ring)?;
        Ok((ring, gens))
    };
    Ok(match cmd {
        GbCmd::Gb(input) => {
            let (ring, gens) = load(input)?;
            let gb = GroebnerBasis::of(&ring, &gens, caps.groebner())?;
            let basis: Vec<String> = gb.polynomials().iter().map(|p| p.render()).collect();
            Outcome::ok(basis.join("\n"), json!({ "basis": basis, "unit": gb.is_unit() }))
        }
        GbCmd::Member { input, f } => {
            let (ring, gens) = load(input)?;
            let f = parse_polynomial(f, &ring)?;
            let gb = GroebnerBasis::of(&ring, &gens, caps.groebner())?;
            let nf = gb.normal_form(&f)?;
            Outcome::ok(
                format!("{}\nnormal form: {}", nf.is_zero(), nf.render()),
                json!({ "member": nf.is_zero(), "normal_form": nf.render() }),
            )
        }
        GbCmd::Radical { input, f, nmax } => {
            let (ring, gens) = load(input)?;
            let f = parse_polynomial(f, &ring)?;
            let inside = radical_member_with_caps(&f, &gens, caps.groebner())?;
            let index = if inside {
                let gb = GroebnerBasis::of(&ring, &gens, caps.groebner())?;
                power_membership_index(&f, &gb, *nmax)?
            } else {
                None
            };
            let text = match (inside, index) {
                (false, _) => "not in the radical".to_string(),
                (true, Some(n)) => format!("in the radical, f^{n} in the ideal"),
                (true, None) => format!("in the radical, no power up to {nmax} in the ideal"),
            };
            Outcome::ok(text, json!({ "radical_member": inside, "index": index, "n_max": nmax }))
        }
        GbCmd::Mather { ring, f, nmax, .. } => {
            let ring = PolyRing::grevlex(parse_ring(ring)?, field.clone());
            let f = parse_polynomial(f, &ring)?;
            let rep = mather_index_with_caps(&f, *nmax, caps.groebner())?;
            let text = match rep.index {
                Some(n) => format!(
                    "f^{n} in the Jacobian ideal near 0 (bound {}{})",
                    rep.nvars,
                    match rep.global_index {
                        Some(g) => format!(", globally at {g}"),
                        None => ", not globally".to_string(),
                    }
                ),
                None => format!("no power up to {nmax}"),
            };
            Outcome::check(
                rep.within_bound() != Some(false),
                text,
                json!({
                    "index": rep.index,
                    "global_index": rep.global_index,
                    "bound": rep.nvars,
                    "within_bound": rep.within_bound(),
                    "positive_characteristic": rep.positive_characteristic,
                }),
            )
        }
        GbCmd::Kollar { n, d, dmax, degrees, .. } => {
            if !degrees.is_empty() {
                let b = kollar_bound(degrees, *n)?;
                let text = format!(
                    "bound {} from the {} largest degrees{}",
                    b.bound,
                    b.q,
                    if b.within_hypothesis { "" } else { " (some degree below 3)" }
                );
                return Ok(Outcome::ok(
                    text,
                    json!({ "bound": b.bound.to_string(), "q": b.q, "degrees": b.degrees, "within_hypothesis": b.within_hypothesis }),
                ));
            }
            let d = d.ok_or_else(|| CliError::Usage("kollar needs --d or --degrees".into()))?;
            let (_, family) = kollar_family(field.clone(), *n, d)?;
            let s = kollar_sharpness(field.clone(), *n, d, *dmax)?;
            let status = if s.least.is_some() { "found" } else { "exhausted" };
            let text = format!(
                "{}\nleast D with x{}^D in I: {} (expected {})",
                family.iter().map(|p| p.render()).collect::<Vec<_>>().join("\n"),
                n - 1,
                s.least.map_or(format!("none up to {dmax}"), |v| v.to_string()),
                s.expected
            );
            Outcome::ok(
                text,
                json!({
                    "family": polys_json(&family),
                    "least": s.least,
                    "expected": s.expected,
                    "d_max": s.d_max,
                    "status": status,
                    "matches_expected": s.matches_expected(),
                }),
            )
        }
        GbCmd::Frobenius { .. } => {
            return Err(CliError::Usage("frobenius requires a field of positive characteristic, e.g. --field fp:3".into()))
        }
    })
}

fn run_frobenius(input: &PolyInput, e: u32, field: PrimeField, caps: &Caps) -> CliResult<Outcome> {
    let ring = poly_ring(parse_ring(&input.ring)?, field, &input.order)?;
    let gens = parse_polynomials(&read_arg(&input.gens)?, &ring)?;
    let rep = frobenius_containment_check(&gens, e, caps.frobenius_max_products)?;
    let failure = rep.failure.as_ref().map(|p| p.render());
    let text = match &failure {
        None => format!(
            "J^{} in J^[{}^{}]: holds ({} products checked)",
            rep.power, rep.p, rep.e, rep.products_checked
        ),
        Some(p) => format!("J^{} not in J^[{}^{}]: {p}", rep.power, rep.p, rep.e),
    };
    Ok(Outcome::check(
        rep.holds(),
        text,
        json!({ "t": rep.t, "p": rep.p, "e": rep.e, "power": rep.power, "products_checked": rep.products_checked, "failure": failure }),
    ))
}

fn field_of(cmd: &GbCmd) -> &str {
    match cmd {
        GbCmd::Gb(i) | GbCmd::Member { input: i, .. } | GbCmd::Radical { input: i, .. } | GbCmd::Frobenius { input: i, .. } => {
            &i.field.field
        }
        GbCmd::Mather { field, .. } | GbCmd::Kollar { field, .. } => &field.field,
    }
}

fn run_groebner(cmd: &GbCmd, caps: &Caps) -> CliResult<Outcome> {
    match (parse_field(field_of(cmd))?, cmd) {
        (Some(p), GbCmd::Frobenius { input, e }) => run_frobenius(input, *e, p, caps),
        (Some(p), _) => groebner_generic(cmd, p, caps),
        (None, _) => groebner_generic(cmd, Rationals, caps),
    }
}

fn run_verify(only: Option<u8>, seed: u64, caps: &Caps) -> CliResult<Outcome> {
    let outcomes = match only {
        Some(id) => vec![verify::run_criterion(id, seed, caps)
            .ok_or_else(|| CliError::Usage(format!("no criterion {id}; choose 1..=10")))?],
        None => verify::run_all(seed, caps),
    };
    let ok = outcomes.iter().all(|o| o.passed());
    let text = outcomes.iter().map(|o| o.line()).collect::<Vec<_>>().join("\n");
    let result = json!({
        "criteria": outcomes.iter().map(|o| o.to_json()).collect::<Vec<_>>(),
        "passed": outcomes.iter().filter(|o| o.passed()).count(),
        "total": outcomes.len(),
    });
    Ok(Outcome::check(ok, text, result))
}

fn command_name(cmd: &Command) -> String {
    let sub = |s: &dyn fmt::Debug| {
        let d = format!("{s:?}");
        let head: String = d.chars().take_while(|c| c.is_alphanumeric()).collect();
        let mut out = String::new();
        for (i, c) in head.chars().enumerate() {
            if c.is_uppercase() && i > 0 {
                out.push('-');
            }
            out.push(c.to_ascii_lowercase());
        }
        out
    };
    match cmd {
        Command::Ideal(c) => format!("ideal {}", sub(c)),
        Command::Symbolic(c) => format!("symbolic {}", sub(c)),
        Command::Closure(c) => format!("closure {}", sub(c)),
        Command::Artinrees(c) => format!("artinrees {}", sub(c)),
        Command::Invariants(c) => format!("invariants {}", sub(c)),
        Command::Groebner(c) => format!("groebner {}", sub(c)),
        Command::Verify { .. } => "verify".to_string(),
    }
}

fn load_caps(path: Option<&str>) -> CliResult<Caps> {
    match path {
        None => Ok(Caps::default()),
        Some(p) => {
            let text = read_arg(&format!("@{p}"))?;
            Caps::from_toml(&text).map_err(|e| CliError::Usage(format!("{p}: {e}")))
        }
    }
}

/// Runs a parsed command, returning the outcome.
pub fn execute(cli: &Cli) -> CliResult<Outcome> {
    let caps = load_caps(cli.caps.as_deref())?;
    match &cli.command {
        Command::Ideal(c) => run_ideal(c),
        Command::Symbolic(c) => run_symbolic(c),
        Command::Closure(c) => run_closure(c),
        Command::Artinrees(c) => run_ar(c),
        Command::Invariants(c) => run_invariants(c, &caps),
        Command::Groebner(c) => run_groebner(c, &caps),
        Command::Verify { only } => run_verify(*only, cli.seed, &caps),
    }
}

/// Full run with explicit streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli) {
        Ok(outcome) => {
            let code = if outcome.ok { EXIT_OK } else { EXIT_FAILED };
            if cli.json {
                let report = json!({
                    "schema": 1,
                    "command": name,
                    "seed": cli.seed,
                    "status": if outcome.ok { "ok" } else { "failed" },
                    "result": outcome.result,
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                let _ = writeln!(out, "{}", outcome.text);
            }
            code
        }
        Err(e) => {
            let code = e.exit_code();
            if cli.json {
                let report = json!({
                    "schema": 1,
                    "command": name,
                    "seed": cli.seed,
                    "status": "error",
                    "error": e.to_string(),
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("uniformity").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn symbolic_compare_reports_the_witness() {
        let (code, out, _) = call(&["symbolic", "compare", "--ring", "x,y,z", "--ideal", "x*y, x*z, y*z", "--k", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "NOT EQUAL, witness x*y*z");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        assert_eq!(call(&["ideal", "show", "--ring", "x,y", "--ideal", "x^"]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["symbolic", "theorem", "--cycle", "5", "--kmax", "3"]).0, EXIT_OK);
        let (code, _, err) =
            call(&["groebner", "frobenius", "--ring", "x,y", "--gens", "x, y", "--field", "q"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("positive characteristic"));
    }

    #[test]
    fn json_envelope() {
        let (code, out, _) = call(&["--json", "ideal", "power", "--ring", "x,y", "--ideal", "x, y", "--k", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["command"], "ideal power");
        assert_eq!(v["status"], "ok");
        assert_eq!(v["result"]["generators"], json!(["y^2", "x*y", "x^2"]));
    }

    #[test]
    fn groebner_over_both_fields() {
        let (code, out, _) = call(&["groebner", "gb", "--ring", "x,y", "--gens", "x^2 - y, y^2 - 1", "--order", "lex"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "y^2 - 1\nx^2 - y");
        let (code, out, _) =
            call(&["groebner", "frobenius", "--ring", "x,y", "--gens", "x, y", "--field", "fp:2", "--e", "1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("holds"));
    }
}
