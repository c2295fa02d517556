//! The verification suite behind `verify --suite paper`.
//!
//! Each criterion runs a fixed list of cases, restricted to those whose size
//! parameter (crown `n`, cycle or path length, vertex count of an exhaustive
//! sweep) is at most `max_n`. A criterion passes when every case agrees and
//! the run stays inside its time budget.

use std::fmt;
use std::time::{Duration, Instant};

use binedge_core::binomial::{
    crown_witness, local_v_number, ohtani_identity_check, verify_colon_witness, verify_radical_decomposition,
    GraphIdealContext,
};
use binedge_core::graph::{
    connected_domination_number, connected_graphs, is_internal_vertex, vertex_connectivity, CrownBipartition, Family,
    Graph, VertexSet,
};
use binedge_core::homology::{
    is_d5_type, is_join_with_2k1, pd_closed_form, MonomialIdeal, PdFamily, SimplicialComplex,
};
use binedge_core::poly::{buchberger, colon_poly, hilbert_value, Field, Ideal, Monomial, MonomialOrder, Polynomial};
use binedge_core::primes::{
    crown_cutset_classification, enumerate_cutsets, heights, krull_dimension, quotient_dimension,
};
use binedge_core::{Error, Limits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::compute::{local_v_numbers, projective_dimension};
use crate::{with_field, FieldChoice};

const SEC: u64 = 1;
const MIN: u64 = 60;

/// Identifier, title and time budget of every criterion.
pub const CRITERIA: [(u32, &str, u64); 14] = [
    (1, "vertex connectivity of crowns is n-1", 10 * SEC),
    (2, "crown cut sets match the classification", 30 * SEC),
    (3, "crown dimension, height and big height", 10 * SEC),
    (4, "connected domination numbers of crowns and cycles", 10 * SEC),
    (5, "radical decomposition into minimal primes", 5 * MIN),
    (6, "Ohtani identity at internal vertices", 5 * MIN),
    (7, "crown colon witnesses of degree four", 30 * MIN),
    (8, "v-numbers of cycles and of the 3-crown", 60 * MIN),
    (9, "local v-number at the empty set is the connected domination number", 30 * MIN),
    (10, "local v-numbers of the 4-crown", 30 * MIN),
    (11, "projective dimension matches closed forms", 60 * MIN),
    (12, "big height <= pd <= 2n-4 on small connected graphs", 60 * MIN),
    (13, "crowns are neither D5-type nor 2K1-joins; P4 is D5-type", SEC),
    (14, "algebraic property suites", 10 * MIN),
];

/// Tighter budgets that apply when a criterion runs over a prime field.
pub fn prime_field_budget(id: u32) -> Option<Duration> {
    match id {
        7 => Some(Duration::from_secs(5 * MIN)),
        8 => Some(Duration::from_secs(10 * MIN)),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub field: FieldChoice,
    pub limits: Limits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_n: 8, field: FieldChoice::Rational, limits: Limits::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// No case is small enough for the configured `max_n`.
    Skipped,
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub field: FieldChoice,
    pub status: Status,
    pub cases: usize,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(
            f,
            "[{tag}] criterion {:>2} ({}): {} | {} cases, {:.2?} of {:?} | {}",
            self.id, self.field, self.title, self.cases, self.elapsed, self.budget, self.detail
        )
    }
}

/// Case counts and mismatches of one criterion.
#[derive(Debug, Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

type Outcome = Result<Tally, Error>;

/// Runs one criterion.
pub fn run(id: u32, cfg: &SuiteConfig) -> CriterionResult {
    let &(_, title, secs) = CRITERIA.iter().find(|c| c.0 == id).expect("criterion id in 1..=14");
    let mut budget = Duration::from_secs(secs);
    if let (FieldChoice::Prime(_), Some(b)) = (cfg.field, prime_field_budget(id)) {
        budget = b;
    }
    let start = Instant::now();
    let outcome = with_field!(cfg.field, F, params => dispatch::<F>(id, cfg, params));
    let elapsed = start.elapsed();
    let (status, cases, detail) = match outcome {
        Err(e) => (Status::Fail, 0, format!("error: {e}")),
        Ok(t) if t.cases == 0 => (Status::Skipped, 0, format!("no case with n <= {}", cfg.max_n)),
        Ok(t) if !t.failures.is_empty() => (Status::Fail, t.cases, t.failures.join("; ")),
        Ok(t) if elapsed > budget => (Status::Fail, t.cases, format!("over budget; {}", t.notes.join("; "))),
        Ok(t) => (Status::Pass, t.cases, t.notes.join("; ")),
    };
    CriterionResult { id, title, field: cfg.field, status, cases, detail, elapsed, budget }
}

/// Runs every criterion in order.
pub fn run_all(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|c| run(c.0, cfg)).collect()
}

fn dispatch<F: Field>(id: u32, cfg: &SuiteConfig, params: F::Params) -> Outcome {
    match id {
        1 => connectivity(cfg),
        2 => crown_cutsets(cfg),
        3 => crown_dimensions(cfg),
        4 => domination(cfg),
        5 => radical::<F>(cfg, params),
        6 => ohtani::<F>(cfg, params),
        7 => witnesses::<F>(cfg, params),
        8 => cycle_v_numbers::<F>(cfg, params),
        9 => empty_set_v_numbers::<F>(cfg, params),
        10 => crown4_v_numbers::<F>(cfg, params),
        11 => pd_closed_forms::<F>(cfg, params),
        12 => pd_bounds::<F>(cfg, params),
        13 => d5(cfg),
        14 => properties::<F>(cfg, params),
        _ => unreachable!(),
    }
}

fn sizes(range: std::ops::RangeInclusive<usize>, cfg: &SuiteConfig) -> impl Iterator<Item = usize> {
    let hi = *range.end().min(&cfg.max_n);
    *range.start()..=hi
}

fn crown(n: usize) -> Graph {
    Family::Crown(n).generate().expect("crown n >= 2")
}

fn ctx<F: Field>(g: Graph, params: F::Params) -> Result<GraphIdealContext<F>, Error> {
    GraphIdealContext::new(g, MonomialOrder::LEX, params)
}

fn connectivity(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    let mut seen = Vec::new();
    for n in sizes(3..=6, cfg) {
        let k = vertex_connectivity(&crown(n))?;
        t.check(k == n - 1, || format!("kappa(crown {n}) = {k}, expected {}", n - 1));
        seen.push(k.to_string());
    }
    t.note(format!("kappa(crown 3..) = {}", seen.join(",")));
    Ok(t)
}

fn crown_cutsets(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    for n in sizes(3..=5, cfg) {
        let found = enumerate_cutsets(&crown(n), &cfg.limits)?.sets();
        let closed = crown_cutset_classification(n)?.sets();
        t.check(found == closed, || format!("crown {n}: {} found vs {} classified", found.len(), closed.len()));
        t.note(format!("crown {n}: {} cut sets", found.len()));
    }
    Ok(t)
}

/// The shape of a crown cut set and its dimension `dim S/P_T`.
fn crown_case_dimension(n: usize, set: VertexSet) -> usize {
    let CrownBipartition { x, y } = CrownBipartition::new(n).expect("n >= 2");
    if set.is_empty() {
        2 * n + 1
    } else if set == x || set == y {
        2 * n
    } else if set.len() == n - 1 && (set.is_subset(x) || set.is_subset(y)) {
        n + 3
    } else {
        6
    }
}

fn crown_dimensions(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    for n in sizes(3..=5, cfg) {
        let g = crown(n);
        let dim = krull_dimension(&g, &cfg.limits)?;
        let h = heights(&g, &cfg.limits)?;
        let got = (dim, h.height, h.bigheight);
        let want = (2 * n + 1, 2 * n - 1, 4 * n - 6);
        t.check(got == want, || format!("crown {n}: (dim, height, bigheight) = {got:?}, expected {want:?}"));
        for p in &enumerate_cutsets(&g, &cfg.limits)? {
            let d = quotient_dimension(&g, p.t)?;
            let expect = crown_case_dimension(n, p.t);
            t.check(d == expect, || format!("crown {n}, T = {}: dim {d}, expected {expect}", p.t));
        }
        t.note(format!("crown {n}: {got:?}"));
    }
    Ok(t)
}

fn domination(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    for n in sizes(3..=6, cfg) {
        let g = connected_domination_number(&crown(n))?;
        t.check(g == 4, || format!("gamma_c(crown {n}) = {g}, expected 4"));
    }
    for n in sizes(4..=8, cfg) {
        let g = connected_domination_number(&Family::Cycle(n).generate()?)?;
        t.check(g == n - 2, || format!("gamma_c(C{n}) = {g}, expected {}", n - 2));
    }
    Ok(t)
}

fn radical<F: Field>(cfg: &SuiteConfig, params: F::Params) -> Outcome {
    let mut t = Tally::default();
    let cases = [
        (Family::Path(3), 3),
        (Family::Path(4), 4),
        (Family::Cycle(4), 4),
        (Family::Cycle(5), 5),
        (Family::Complete(3), 3),
    ];
    for (fam, size) in cases {
        if size > cfg.max_n {
            continue;
        }
        let ok = verify_radical_decomposition(&ctx::<F>(fam.generate()?, params)?, &cfg.limits)?;
        t.check(ok, || format!("{fam}: intersection of minimal primes differs from J_G"));
    }
    Ok(t)
}

fn ohtani<F: Field>(cfg: &SuiteConfig, params: F::Params) -> Outcome {
    let mut t = Tally::default();
    for (fam, size) in [(Family::Cycle(4), 4), (Family::Cycle(5), 5), (Family::Path(4), 4), (Family::Crown(3), 3)] {
        if size > cfg.max_n {
            continue;
        }
        let g = fam.generate()?;
        let c = ctx::<F>(g.clone(), params)?;
        let mut internal = Vec::new();
        for v in 1..=g.n() {
            if is_internal_vertex(&g, v)? {
                internal.push(v);
                let ok = ohtani_identity_check(&c, v, &cfg.limits)?;
                t.check(ok, || format!("{fam} at vertex {v}"));
            }
        }
        t.note(format!("{fam}: internal {internal:?}"));
    }
    Ok(t)
}

fn witnesses<F: Field>(cfg: &SuiteConfig, params: F::Params) -> Outcome {
    let mut t = Tally::default();
    for n in sizes(3..=4, cfg) {
        let c = ctx::<F>(crown(n), params)?;
        c.binomial_edge_ideal().groebner_basis(&cfg.limits)?;
        let CrownBipartition { x, y } = CrownBipartition::new(n)?;
        let sets: Vec<VertexSet> = enumerate_cutsets(c.graph(), &cfg.limits)?
            .sets()
            .into_iter()
            .filter(|s| !s.is_empty() && !(n == 3 && (*s == x || *s == y)))
            .collect();
        let reports = sets
            .par_iter()
            .map(|&s| {
                let f = crown_witness(&c, s)?;
                verify_colon_witness(&c, s, &f, &cfg.limits)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        for r in &reports {
            t.check(r.verified && r.not_in_j && r.degree == 4, || {
                format!("crown {n}, T = {}: verified {}, f in J {}, degree {}", r.t, r.verified, !r.not_in_j, r.degree)
            });
        }
        t.note(format!("crown {n}: {} witnesses", reports.len()));
    }
    Ok(t)
}

fn min_local_v<F: Field>(g: Graph, params: F::Params, limits: &Limits) -> Result<u32, Error> {
    let c = ctx::<F>(g, params)?;
    Ok(local_v_numbers(&c, limits)?.into_iter().map(|(_, v)| v).min().expect("the empty set is a cut set"))
}

fn cycle_v_numbers<F: Field>(cfg: &SuiteConfig, params: F::Params) -> Outcome {
    let mut t = Tally::default();
    let mut seen = Vec::new();
    for n in sizes(6..=8, cfg) {
        let v = min_local_v::<F>(Family::Cycle(n).generate()?, params, &cfg.limits)?;
        let want = (2 * n as u32).div_ceil(3);
        t.check(v == want, || format!("v(C{n}) = {v}, expected {want}"));
        seen.push(format!("v(C{n}) = {v}"));
    }
    if cfg.max_n >= 3 {
        let v = min_local_v::<F>(crown(3), params, &cfg.limits)?;
        t.check(v == 4, || format!("v(crown 3) = {v}, expected 4"));
        seen.push(format!("v(crown 3) = {v}"));
    }
    t.note(seen.join(", "));
    Ok(t)
}

fn empty_set_v_numbers<F: Field>(cfg: &SuiteConfig, params: F::Params) -> Outcome {
    let mut t = Tally::default();
    // one vertex has the zero ideal, where local v-numbers are undefined
    for n in sizes(2..=5, cfg) {
        let graphs = connected_graphs(n);
        let rows = graphs
            .par_iter()
            .map(|g| {
                let c = ctx::<F>(g.clone(), params)?;
                Ok((local_v_number(&c, VertexSet::EMPTY, &cfg.limits)?, connected_domination_number(g)?))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        for (g, (v, gc)) in graphs.iter().zip(rows) {
            t.check(v as usize == gc, || format!("{g:?}: v = {v}, gamma_c = {gc}"));
        }
        t.note(format!("{} graphs on {n} vertices", graphs.len()));
    }
    Ok(t)
}

fn crown4_v_numbers<F: Field>(cfg: &SuiteConfig, params: F::Params) -> Outcome {
    let mut t = Tally::default();
    if cfg.max_n < 4 {
        return Ok(t);
    }
    let c = ctx::<F>(crown(4), params)?;
    let mut a_type = 0;
    for (s, v) in local_v_numbers(&c, &cfg.limits)? {
        t.check((3..=4).contains(&v), || format!("T = {s}: v = {v} outside [3, 4]"));
        if crown_case_dimension(4, s) == 6 {
            a_type += 1;
            t.check(v == 4, || format!("A-type T = {s}: v = {v}, expected 4"));
        }
    }
    t.note(format!("{} cut sets, {a_type} of A-type", t.cases - a_type));
    Ok(t)
}

fn pd_closed_forms<F: Field>(cfg: &SuiteConfig, params: F::Params) -> Outcome {
    let mut t = Tally::default();
    let mut cases: Vec<(Family, PdFamily, usize)> = (3..=6).map(|n| (Family::Path(n), PdFamily::Block(n), n)).collect();
    cases.extend([
        (Family::Cycle(4), PdFamily::Cycle(4), 4),
        (Family::Cycle(5), PdFamily::Cycle(5), 5),
        (Family::Cycle(6), PdFamily::Cycle(6), 6),
        (Family::Crown(3), PdFamily::Crown(3), 3),
        (Family::Crown(4), PdFamily::Crown(4), 4),
        (Family::CompleteMultipartite(vec![2, 2]), PdFamily::CompleteMultipartite(vec![2, 2]), 4),
        (Family::CompleteMultipartite(vec![2, 3]), PdFamily::CompleteMultipartite(vec![2, 3]), 5),
        (Family::Wheel(4), PdFamily::Wheel(4), 4),
        (Family::Wheel(5), PdFamily::Wheel(5), 5),
    ]);
    let rank = cfg.field.rank_field();
    for (fam, closed, size) in cases {
        if size > cfg.max_n {
            continue;
        }
        let (r, _) = projective_dimension(&ctx::<F>(fam.generate()?, params)?, rank, &cfg.limits)?;
        let want = pd_closed_form(&closed)?;
        t.check(r.pd == want && r.equal, || {
            format!("{fam}: pd {} (closed form {want}), bigheight {}", r.pd, r.bigheight)
        });
        t.note(format!("{fam}: {}", r.pd));
    }
    Ok(t)
}

fn pd_bounds<F: Field>(cfg: &SuiteConfig, params: F::Params) -> Outcome {
    let mut t = Tally::default();
    let rank = cfg.field.rank_field();
    for n in sizes(4..=6, cfg) {
        let graphs = connected_graphs(n);
        let rows = graphs
            .par_iter()
            .map(|g| {
                let (r, _) = projective_dimension(&ctx::<F>(g.clone(), params)?, rank, &cfg.limits)?;
                Ok((r.pd, r.bigheight))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let mut equal = 0;
        for (g, (pd, bh)) in graphs.iter().zip(rows) {
            t.check(bh <= pd && pd <= 2 * n - 4, || format!("{g:?}: bigheight {bh}, pd {pd}"));
            equal += usize::from(pd == bh);
        }
        t.note(format!("n = {n}: {} graphs, pd = bigheight for {equal}", graphs.len()));
    }
    Ok(t)
}

fn d5(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    for n in sizes(3..=5, cfg) {
        let g = crown(n);
        let d = is_d5_type(&g)?;
        t.check(!d, || format!("crown {n} reported D5-type"));
        t.check(!is_join_with_2k1(&g), || format!("crown {n} reported as a 2K1-join"));
    }
    if cfg.max_n >= 4 {
        t.check(is_d5_type(&Family::Path(4).generate()?)?, || "P4 not reported D5-type".into());
    }
    Ok(t)
}

const PROPERTY_VARS: usize = 4;
const PROPERTY_SAMPLES: usize = 20;

fn random_homogeneous<F: Field>(rng: &mut ChaCha8Rng, params: F::Params) -> Polynomial<F> {
    loop {
        let d = rng.gen_range(1..=2);
        let terms = (0..rng.gen_range(1..=3)).map(|_| {
            let m = (0..d).fold(Monomial::ONE, |m, _| m.mul(&Monomial::var(rng.gen_range(1..=PROPERTY_VARS))));
            (m, F::from_i64(rng.gen_range(-3..=3), params))
        });
        let terms: Vec<_> = terms.filter(|(_, c)| !c.is_zero()).collect();
        let f = Polynomial::from_terms(PROPERTY_VARS, MonomialOrder::LEX, params, terms).expect("slots in range");
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_ideal<F: Field>(rng: &mut ChaCha8Rng, params: F::Params) -> Vec<Polynomial<F>> {
    (0..rng.gen_range(1..=3)).map(|_| random_homogeneous(rng, params)).collect()
}

fn properties<F: Field>(cfg: &SuiteConfig, params: F::Params) -> Outcome {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6265_6465);
    let lim = &cfg.limits;
    let lex = MonomialOrder::LEX;

    for _ in 0..PROPERTY_SAMPLES {
        let gens = random_ideal::<F>(&mut rng, params);
        let mut shuffled = gens.clone();
        shuffled.reverse();
        if shuffled.len() > 2 {
            shuffled.swap(0, 1);
        }
        let (a, b) = (buchberger(&gens, lex, lim)?, buchberger(&shuffled, lex, lim)?);
        t.check(a == b, || format!("basis depends on generator order for {gens:?}"));

        let i = Ideal::new(PROPERTY_VARS, lex, params, gens.clone())?;
        let f = random_homogeneous::<F>(&mut rng, params);
        let c = colon_poly(&i, &f, lim)?;
        t.check(i.is_subset(&c, lim)?, || format!("I not inside I : f for {gens:?}, f = {f:?}"));
        for g in c.groebner_basis(lim)? {
            let ok = i.contains(&g.checked_mul(&f)?, lim)?;
            t.check(ok, || format!("f * (I : f) not inside I for {gens:?}, f = {f:?}"));
        }

        let drl = i.with_order(MonomialOrder::DEGREVLEX);
        for d in 0..=4 {
            let (x, y) = (hilbert_value(&i, d, lim)?, hilbert_value(&drl, d, lim)?);
            t.check(x == y, || format!("HF({d}) lex {x} vs degrevlex {y} for {gens:?}"));
        }
    }

    let rank = cfg.field.rank_field();
    for _ in 0..PROPERTY_SAMPLES {
        let gens: Vec<u32> = (0..rng.gen_range(1..=5)).map(|_| rng.gen_range(1..1u32 << 7)).collect();
        let sc = SimplicialComplex::new(&MonomialIdeal::new(7, gens)?);
        for sigma in 0..1u32 << 7 {
            let chi = sc.reduced_euler_characteristic(sigma, lim)?;
            let alt: i64 = sc
                .restricted_homology(sigma, rank, lim)?
                .iter()
                .enumerate()
                .map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) })
                .sum();
            t.check(alt == chi, || format!("Euler characteristic mismatch on {sigma:#b}"));
        }
    }
    t.note(format!("{PROPERTY_SAMPLES} ideals, {PROPERTY_SAMPLES} complexes"));
    Ok(t)
}
