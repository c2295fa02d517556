//! Binomial edge ideals `J_G = ⟨x_i y_j − x_j y_i : {i,j} ∈ E(G)⟩`, their
//! minimal primes `P_T(G)`, colon witnesses and (local) v-numbers.

use alloc::format;
use alloc::vec::Vec;

use crate::graph::{is_internal_vertex, local_completion, CrownBipartition, Family, Graph, VertexSet};
use crate::poly::{
    colon_ideal, colon_poly, ideal_equal, initial_degree_gap, intersect, Field, Ideal, Monomial, MonomialOrder,
    Polynomial, MAX_VARS,
};
use crate::primes::{enumerate_cutsets, has_cut_point_property, CutSetFamily};
use crate::{Error, Limits, Result};

/// A graph on `1..=n` together with the ring `K[x_1..x_n, y_1..y_n]`, where
/// `x_i` is slot `i` and `y_i` is slot `n + i`.
///
/// The binomial edge ideal is built once; its Gröbner basis is cached inside
/// and shared by every computation through this context.
#[derive(Debug, Clone)]
pub struct GraphIdealContext<F: Field> {
    graph: Graph,
    order: MonomialOrder,
    params: F::Params,
    j: Ideal<F>,
}

impl<F: Field> GraphIdealContext<F> {
    pub fn new(graph: Graph, order: MonomialOrder, params: F::Params) -> Result<Self> {
        if 2 * graph.n() > MAX_VARS {
            return Err(Error::InvalidParameter(format!(
                "graphs with more than {} vertices do not fit the polynomial ring",
                MAX_VARS / 2
            )));
        }
        let j = edge_ideal(&graph, &graph, order, params)?;
        Ok(GraphIdealContext { graph, order, params, j })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Number of ring variables, `2n`.
    pub fn nvars(&self) -> usize {
        2 * self.graph.n()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn params(&self) -> F::Params {
        self.params
    }

    pub fn x_slot(&self, i: usize) -> usize {
        i
    }

    pub fn y_slot(&self, i: usize) -> usize {
        self.n() + i
    }

    pub fn x(&self, i: usize) -> Result<Polynomial<F>> {
        self.graph.check_vertex(i)?;
        Ok(Polynomial::var(self.x_slot(i), self.nvars(), self.order, self.params))
    }

    pub fn y(&self, i: usize) -> Result<Polynomial<F>> {
        self.graph.check_vertex(i)?;
        Ok(Polynomial::var(self.y_slot(i), self.nvars(), self.order, self.params))
    }

    /// `x_i y_j − x_j y_i`.
    pub fn minor(&self, i: usize, j: usize) -> Result<Polynomial<F>> {
        self.graph.check_vertex(i)?;
        self.graph.check_vertex(j)?;
        Ok(minor(self.n(), i, j, self.order, self.params))
    }

    /// `J_G`.
    pub fn binomial_edge_ideal(&self) -> &Ideal<F> {
        &self.j
    }

    /// `J_H` for another graph `H` on the same vertex set.
    pub fn edge_ideal_of(&self, h: &Graph) -> Result<Ideal<F>> {
        edge_ideal(&self.graph, h, self.order, self.params)
    }

    /// `P_T(G) = ⟨x_i, y_i : i ∈ T⟩ + J_{K_{G_1}} + ⋯ + J_{K_{G_c}}`, where
    /// `G_1, …, G_c` are the components of `G[V \ T]`.
    pub fn minimal_prime_ideal(&self, t: VertexSet) -> Result<Ideal<F>> {
        self.graph.check_set(t)?;
        let (n, order, params) = (self.n(), self.order, self.params);
        let mut gens = Vec::new();
        for i in t.iter() {
            gens.push(Polynomial::var(self.x_slot(i), 2 * n, order, params));
            gens.push(Polynomial::var(self.y_slot(i), 2 * n, order, params));
        }
        for comp in self.graph.components_within(self.graph.vertices().difference(t)) {
            let vs = comp.to_vec();
            for (a, &i) in vs.iter().enumerate() {
                for &j in &vs[a + 1..] {
                    gens.push(minor(n, i, j, order, params));
                }
            }
        }
        Ideal::new(2 * n, order, params, gens)
    }

    fn cutsets(&self, limits: &Limits) -> Result<CutSetFamily> {
        enumerate_cutsets(&self.graph, limits)
    }

    fn require_cutset(&self, t: VertexSet) -> Result<()> {
        if !has_cut_point_property(&self.graph, t)? || t == self.graph.vertices() {
            return Err(Error::Precondition(format!("{t:?} does not have the cut point property")));
        }
        Ok(())
    }
}

fn minor<F: Field>(n: usize, i: usize, j: usize, order: MonomialOrder, params: F::Params) -> Polynomial<F> {
    let one = F::one(params);
    let terms = [
        (Monomial::var(i).mul(&Monomial::var(n + j)), one.clone()),
        (Monomial::var(j).mul(&Monomial::var(n + i)), one.neg()),
    ];
    Polynomial::from_terms(2 * n, order, params, terms).expect("slots are in range")
}

fn edge_ideal<F: Field>(g: &Graph, h: &Graph, order: MonomialOrder, params: F::Params) -> Result<Ideal<F>> {
    if h.n() != g.n() {
        return Err(Error::ArityMismatch { left: 2 * g.n(), right: 2 * h.n() });
    }
    let n = g.n();
    let gens = h.edges().into_iter().map(|(i, j)| minor(n, i, j, order, params)).collect();
    Ideal::new(2 * n, order, params, gens)
}

/// `J_G` over `F` with the given order.
pub fn binomial_edge_ideal<F: Field>(g: &Graph, order: MonomialOrder, params: F::Params) -> Result<Ideal<F>> {
    edge_ideal(g, g, order, params)
}

/// Checks `J_G = ⋂_{T ∈ 𝒞(G)} P_T(G)` by iterated intersection.
pub fn verify_radical_decomposition<F: Field>(ctx: &GraphIdealContext<F>, limits: &Limits) -> Result<bool> {
    if ctx.n() > limits.max_decomposition_vertices {
        return Err(Error::ResourceLimit {
            what: "vertices for the decomposition check",
            limit: limits.max_decomposition_vertices,
        });
    }
    let mut acc: Option<Ideal<F>> = None;
    for p in &ctx.cutsets(limits)? {
        let prime = ctx.minimal_prime_ideal(p.t)?;
        acc = Some(match acc {
            None => prime,
            Some(a) => intersect(&a, &prime, limits)?,
        });
    }
    let meet = acc.expect("the empty set is always a cut set");
    ideal_equal(ctx.binomial_edge_ideal(), &meet, limits)
}

/// Checks `J_G = J_{G_v} ∩ (⟨x_v, y_v⟩ + J_{G∖v})` at an internal vertex `v`.
/// `G∖v` keeps `v` as an isolated vertex so both sides live in one ring.
pub fn ohtani_identity_check<F: Field>(ctx: &GraphIdealContext<F>, v: usize, limits: &Limits) -> Result<bool> {
    let g = ctx.graph();
    if !is_internal_vertex(g, v)? {
        return Err(Error::Precondition(format!("vertex {v} is free (its neighbourhood is a clique)")));
    }
    let completed = ctx.edge_ideal_of(&local_completion(g, v)?)?;
    let deleted = ctx.edge_ideal_of(&g.delete_vertex_edges(v)?)?;
    let vars = Ideal::new(ctx.nvars(), ctx.order(), ctx.params(), alloc::vec![ctx.x(v)?, ctx.y(v)?])?;
    let right = vars.sum(&deleted)?;
    let meet = intersect(&completed, &right, limits)?;
    ideal_equal(ctx.binomial_edge_ideal(), &meet, limits)
}

/// Outcome of checking `J_G : f = P_T(G)`.
#[derive(Debug, Clone)]
pub struct WitnessReport<F: Field> {
    pub t: VertexSet,
    pub f: Polynomial<F>,
    pub degree: u32,
    /// `J_G : f = P_T(G)` and `f ∉ J_G`.
    pub verified: bool,
    pub not_in_j: bool,
}

/// The degree four witness `f` with `J_G : f = P_T(G)` for a nonempty cut
/// set `T` of the crown graph `C_{n,n}`, with the smallest admissible
/// indices. For `n = 3` the sets `X` and `Y` have no witness of this shape.
pub fn crown_witness<F: Field>(ctx: &GraphIdealContext<F>, t: VertexSet) -> Result<Polynomial<F>> {
    let n = ctx.n() / 2;
    if !ctx.n().is_multiple_of(2) || n < 3 || *ctx.graph() != Family::Crown(n).generate()? {
        return Err(Error::InvalidParameter("crown witnesses need a generated crown graph with n >= 3".into()));
    }
    if t.is_empty() {
        return Err(Error::Precondition("the empty cut set has no crown witness".into()));
    }
    ctx.require_cutset(t)?;
    let CrownBipartition { x, y } = CrownBipartition::new(n)?;
    let m = |a: usize, b: usize| ctx.minor(a, b);
    let mul = |a: Polynomial<F>, b: Polynomial<F>| a.checked_mul(&b);
    let first_other = |skip: &[usize]| (1..=n).find(|i| !skip.contains(i)).expect("n >= 3");

    if t == x || t == y {
        if n == 3 {
            return Err(Error::Precondition("for n = 3 the sides X and Y have no crown witness".into()));
        }
        // smallest i with 3 <= i <= n - 1
        let i = 3;
        return if t == x { mul(m(2, 4)?, m(2 * i, 2 * i + 2)?) } else { mul(m(1, 3)?, m(2 * i - 1, 2 * i + 1)?) };
    }
    if t.len() == n - 1 && t.is_subset(x) {
        let i = x.difference(t).first().unwrap().div_ceil(2);
        let j = first_other(&[i]);
        let k = first_other(&[i, j]);
        return mul(mul(ctx.x(2 * i - 1)?, ctx.x(2 * k)?)?, m(2 * i, 2 * j)?);
    }
    if t.len() == n - 1 && t.is_subset(y) {
        let i = y.difference(t).first().unwrap() / 2;
        let j = first_other(&[i]);
        let k = first_other(&[i, j]);
        return mul(mul(ctx.x(2 * k - 1)?, ctx.x(2 * i)?)?, m(2 * i - 1, 2 * j - 1)?);
    }
    // A ∪ (A + 1): the two pairs {2i-1, 2i}, {2j-1, 2j} left out
    let free: Vec<usize> = (1..=n).filter(|&i| !t.contains(2 * i - 1)).collect();
    if let [i, j] = free[..] {
        return mul(m(2 * i - 1, 2 * j - 1)?, m(2 * i, 2 * j)?);
    }
    Err(Error::Invariant(format!("unclassified crown cut set {t:?}")))
}

/// Computes `J_G : f`, compares it with `P_T(G)` and records whether
/// `f ∉ J_G`.
pub fn verify_colon_witness<F: Field>(
    ctx: &GraphIdealContext<F>,
    t: VertexSet,
    f: &Polynomial<F>,
    limits: &Limits,
) -> Result<WitnessReport<F>> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let j = ctx.binomial_edge_ideal();
    let not_in_j = !j.contains(f, limits)?;
    let colon = colon_poly(j, f, limits)?;
    let prime = ctx.minimal_prime_ideal(t)?;
    let verified = not_in_j && ideal_equal(&prime, &colon, limits)?;
    Ok(WitnessReport { t, f: f.clone(), degree: f.degree().unwrap_or(0), verified, not_in_j })
}

/// `vn_{P_T(G)}(J_G)`, the initial degree of `(J_G : P_T(G)) / J_G`.
pub fn local_v_number<F: Field>(ctx: &GraphIdealContext<F>, t: VertexSet, limits: &Limits) -> Result<u32> {
    ctx.require_cutset(t)?;
    let j = ctx.binomial_edge_ideal();
    if j.is_zero() {
        return Err(Error::Domain("the binomial edge ideal of an edgeless graph is zero".into()));
    }
    let prime = ctx.minimal_prime_ideal(t)?;
    let colon = colon_ideal(j, &prime, limits)?;
    initial_degree_gap(j, &colon, limits)
}

/// A lower bound for every local v-number that is known without
/// computation: 3 for generated crown graphs with `n >= 3`, otherwise 1.
pub fn v_number_lower_bound(g: &Graph) -> u32 {
    let n = g.n() / 2;
    let crown = g.n().is_multiple_of(2) && n >= 3 && Family::Crown(n).generate().is_ok_and(|c| c == *g);
    if crown {
        3
    } else {
        1
    }
}

/// `vn(J_G) = min_T vn_{P_T(G)}(J_G)` over the cut sets, scanned by
/// increasing `|T|` and stopping once the minimum meets
/// [`v_number_lower_bound`].
pub fn v_number<F: Field>(ctx: &GraphIdealContext<F>, limits: &Limits) -> Result<u32> {
    if ctx.graph().edge_count() == 0 {
        return Err(Error::Domain("the binomial edge ideal of an edgeless graph is zero".into()));
    }
    let floor = v_number_lower_bound(ctx.graph());
    let mut best = u32::MAX;
    for p in &ctx.cutsets(limits)? {
        best = best.min(local_v_number(ctx, p.t, limits)?);
        if best <= floor {
            break;
        }
    }
    Ok(best)
}
