use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use super::field::Field;
use super::groebner::{buchberger, interreduce, reduce_with};
use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use crate::{Error, Limits, Result};

/// An ideal given by generators, with its reduced Gröbner basis for the
/// ideal's order computed once on first use.
pub struct Ideal<F: Field> {
    nvars: usize,
    order: MonomialOrder,
    params: F::Params,
    gens: Vec<Polynomial<F>>,
    gb: OnceBox<Vec<Polynomial<F>>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(nvars: usize, order: MonomialOrder, params: F::Params, gens: Vec<Polynomial<F>>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::InvalidParameter(format!("at most {MAX_VARS} variables are supported")));
        }
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::ArityMismatch { left: nvars, right: g.nvars() });
            }
            if g.params() != params {
                return Err(Error::InvalidParameter("generators over different fields".into()));
            }
            if g.contains_t() {
                return Err(Error::InvalidParameter("the auxiliary variable t is reserved".into()));
            }
            if !g.is_zero() {
                out.push(g.with_order(order));
            }
        }
        Ok(Ideal { nvars, order, params, gens: out, gb: OnceBox::new() })
    }

    pub fn zero(nvars: usize, order: MonomialOrder, params: F::Params) -> Self {
        Self::with_basis(nvars, order, params, Vec::new(), Vec::new())
    }

    pub fn unit(nvars: usize, order: MonomialOrder, params: F::Params) -> Self {
        let one = alloc::vec![Polynomial::one(nvars, order, params)];
        Self::with_basis(nvars, order, params, one.clone(), one)
    }

    /// An ideal whose reduced Gröbner basis is already known.
    pub(crate) fn with_basis(
        nvars: usize,
        order: MonomialOrder,
        params: F::Params,
        gens: Vec<Polynomial<F>>,
        gb: Vec<Polynomial<F>>,
    ) -> Self {
        let cell = OnceBox::new();
        let _ = cell.set(Box::new(gb));
        Ideal { nvars, order, params, gens, gb: cell }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn params(&self) -> F::Params {
        self.params
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// The reduced Gröbner basis, sorted by increasing leading monomial.
    pub fn groebner_basis(&self, limits: &Limits) -> Result<&[Polynomial<F>]> {
        self.gb.get_or_try_init(|| buchberger(&self.gens, self.order, limits).map(Box::new)).map(Vec::as_slice)
    }

    /// The basis if it has been computed already.
    pub fn cached_basis(&self) -> Option<&[Polynomial<F>]> {
        self.gb.get().map(Vec::as_slice)
    }

    /// The same ideal under another order. The cached basis is kept only if
    /// the order is unchanged.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let gens = self.gens.iter().map(|g| g.with_order(order)).collect();
        Ideal { nvars: self.nvars, order, params: self.params, gens, gb: OnceBox::new() }
    }

    /// True if the ideal is the whole ring.
    pub fn is_unit(&self, limits: &Limits) -> Result<bool> {
        Ok(self.groebner_basis(limits)?.first().is_some_and(Polynomial::is_constant))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduction of `f` by the reduced basis.
    pub fn reduce(&self, f: &Polynomial<F>, limits: &Limits) -> Result<Polynomial<F>> {
        self.check_poly(f)?;
        let gb = self.groebner_basis(limits)?;
        reduce_with(&f.with_order(self.order), gb, limits)
    }

    pub fn contains(&self, f: &Polynomial<F>, limits: &Limits) -> Result<bool> {
        Ok(self.reduce(f, limits)?.is_zero())
    }

    /// True if every generator of `self` lies in `other`.
    pub fn is_subset(&self, other: &Ideal<F>, limits: &Limits) -> Result<bool> {
        self.check_ideal(other)?;
        for g in &self.gens {
            if !other.contains(g, limits)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True if the reduced basis consists of homogeneous polynomials, which
    /// holds exactly when the ideal is homogeneous.
    pub fn is_homogeneous(&self, limits: &Limits) -> Result<bool> {
        Ok(self.groebner_basis(limits)?.iter().all(Polynomial::is_homogeneous))
    }

    /// `self + other`.
    pub fn sum(&self, other: &Ideal<F>) -> Result<Self> {
        self.check_ideal(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().map(|g| g.with_order(self.order)));
        Ideal::new(self.nvars, self.order, self.params, gens)
    }

    fn check_poly(&self, f: &Polynomial<F>) -> Result<()> {
        if f.nvars() != self.nvars {
            return Err(Error::ArityMismatch { left: self.nvars, right: f.nvars() });
        }
        if f.params() != self.params {
            return Err(Error::InvalidParameter("polynomial over a different field".into()));
        }
        Ok(())
    }

    fn check_ideal(&self, other: &Ideal<F>) -> Result<()> {
        if other.nvars != self.nvars {
            return Err(Error::ArityMismatch { left: self.nvars, right: other.nvars });
        }
        if other.params != self.params {
            return Err(Error::InvalidParameter("ideals over different fields".into()));
        }
        Ok(())
    }
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let gb = OnceBox::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(Box::new(b.clone()));
        }
        Ideal { nvars: self.nvars, order: self.order, params: self.params, gens: self.gens.clone(), gb }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("nvars", &self.nvars)
            .field("order", &self.order)
            .field("gens", &self.gens)
            .finish()
    }
}

/// True if `f` reduces to zero modulo the reduced basis of `i`.
pub fn ideal_member<F: Field>(f: &Polynomial<F>, i: &Ideal<F>, limits: &Limits) -> Result<bool> {
    i.contains(f, limits)
}

/// True if the reduced Gröbner bases of `i` and `j` for `i`'s order coincide.
pub fn ideal_equal<F: Field>(i: &Ideal<F>, j: &Ideal<F>, limits: &Limits) -> Result<bool> {
    i.check_ideal(j)?;
    let j = j.with_order(i.order);
    Ok(i.groebner_basis(limits)? == j.groebner_basis(limits)?)
}

/// `I ∩ J`, by eliminating `t` from `t·I + (1 − t)·J`.
///
/// Both supported orders rank `t` above every other variable, so the
/// `t`-free part of the reduced basis of the auxiliary ideal is the reduced
/// basis of the intersection; the result carries it precomputed.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>, limits: &Limits) -> Result<Ideal<F>> {
    i.check_ideal(j)?;
    let j = j.with_order(i.order);
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(i.nvars, i.order, i.params));
    }
    if j.is_subset(i, limits)? {
        return Ok(j);
    }
    if i.is_subset(&j, limits)? {
        return Ok(i.clone());
    }
    eliminate_intersection(i, &j, limits)
}

fn eliminate_intersection<F: Field>(i: &Ideal<F>, j: &Ideal<F>, limits: &Limits) -> Result<Ideal<F>> {
    let (nvars, order, params) = (i.nvars, i.order, i.params);
    let one = F::one(params);
    let t = Monomial::var(0);
    let mut aux = Vec::with_capacity(i.gens.len() + j.gens.len());
    for g in &i.gens {
        aux.push(g.mul_term(&t, &one));
    }
    for h in &j.gens {
        // (1 - t) h
        aux.push(h.add_scaled(h, &one.neg(), &t));
    }
    let gb = buchberger(&aux, order, limits)?;
    let basis: Vec<Polynomial<F>> = gb.into_iter().filter(|g| !g.contains_t()).collect();
    Ok(Ideal::with_basis(nvars, order, params, basis.clone(), basis))
}

/// `I : f`. Returns the unit ideal when `f ∈ I`; otherwise computes
/// `I ∩ ⟨f⟩` and divides its reduced basis by `f`.
pub fn colon_poly<F: Field>(i: &Ideal<F>, f: &Polynomial<F>, limits: &Limits) -> Result<Ideal<F>> {
    i.check_poly(f)?;
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (nvars, order, params) = (i.nvars, i.order, i.params);
    if i.contains(f, limits)? {
        return Ok(Ideal::unit(nvars, order, params));
    }
    if i.is_zero() {
        return Ok(Ideal::zero(nvars, order, params));
    }
    let f = f.with_order(order).monic();
    let principal = Ideal::with_basis(nvars, order, params, alloc::vec![f.clone()], alloc::vec![f.clone()]);
    let meet = eliminate_intersection(i, &principal, limits)?;
    let quotients = meet
        .groebner_basis(limits)?
        .iter()
        .map(|h| h.div_exact(&f))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::Invariant("I ∩ ⟨f⟩ has an element not divisible by f".into()))?;
    // leading monomials of h/f are those of h divided by lm(f), so the
    // quotients already form a minimal Gröbner basis
    let gb = interreduce(quotients, order, limits)?;
    Ok(Ideal::with_basis(nvars, order, params, gb.clone(), gb))
}

/// `I : J = ⋂_{g} (I : g)` over the generators `g` of `J`.
pub fn colon_ideal<F: Field>(i: &Ideal<F>, j: &Ideal<F>, limits: &Limits) -> Result<Ideal<F>> {
    i.check_ideal(j)?;
    if j.is_zero() {
        return Err(Error::Precondition("colon by the zero ideal".into()));
    }
    let mut parts: Vec<Ideal<F>> = Vec::new();
    for g in j.gens() {
        let q = colon_poly(i, g, limits)?;
        if q.is_unit(limits)? {
            continue;
        }
        let mut seen = false;
        for p in &parts {
            if ideal_equal(p, &q, limits)? {
                seen = true;
                break;
            }
        }
        if !seen {
            parts.push(q);
        }
    }
    let mut parts = parts.into_iter();
    let Some(mut acc) = parts.next() else {
        return Ok(Ideal::unit(i.nvars, i.order, i.params));
    };
    for p in parts {
        acc = intersect(&acc, &p, limits)?;
    }
    Ok(acc)
}

/// `dim_K (S/I)_d`: the number of degree-`d` monomials in the ring variables
/// not divisible by any leading monomial of the reduced basis.
pub fn hilbert_value<F: Field>(i: &Ideal<F>, d: u32, limits: &Limits) -> Result<u64> {
    let leads: Vec<Monomial> = i.groebner_basis(limits)?.iter().map(|g| *g.leading_monomial().unwrap()).collect();
    count_standard_monomials(i.nvars, &leads, d, limits.max_hilbert_nodes)
}

/// Counts degree-`d` monomials in slots `1..=m` outside the monomial ideal
/// generated by `leads`. Depth-first over the variables; once no generator
/// can divide any completion, the remaining count is a binomial coefficient.
pub fn count_standard_monomials(m: usize, leads: &[Monomial], d: u32, max_nodes: usize) -> Result<u64> {
    if leads.iter().any(Monomial::is_one) {
        return Ok(0);
    }
    // demand[k][s]: degree of lead k in slots s..=m
    let demand: Vec<[u32; MAX_VARS + 2]> = leads
        .iter()
        .map(|l| {
            let mut acc = [0u32; MAX_VARS + 2];
            for s in (1..=m).rev() {
                acc[s] = acc[s + 1] + l.exp(s) as u32;
            }
            acc
        })
        .collect();
    let mut search = StandardSearch { m, leads, demand, nodes: 0, max_nodes };
    let active: Vec<usize> = (0..leads.len()).filter(|&k| leads[k].degree() <= d).collect();
    search.count(1, d, &active)
}

struct StandardSearch<'a> {
    m: usize,
    leads: &'a [Monomial],
    demand: Vec<[u32; MAX_VARS + 2]>,
    nodes: usize,
    max_nodes: usize,
}

impl StandardSearch<'_> {
    /// Monomials of degree `left` in slots `slot..=m` completing the current
    /// prefix, avoiding the generators in `active` (those still able to
    /// divide some completion).
    fn count(&mut self, slot: usize, left: u32, active: &[usize]) -> Result<u64> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::ResourceLimit { what: "Hilbert function search nodes", limit: self.max_nodes });
        }
        if active.is_empty() {
            return Ok(monomials_of_degree((self.m + 1 - slot) as u64, left as u64));
        }
        if slot == self.m {
            // the exponent is forced
            let e = left as u8;
            let hit = active.iter().any(|&k| self.leads[k].exp(slot) <= e);
            return Ok(u64::from(!hit));
        }
        let mut total = 0u64;
        let mut next = Vec::with_capacity(active.len());
        for e in 0..=left {
            next.clear();
            let mut divided = false;
            for &k in active {
                let l = &self.leads[k];
                if l.exp(slot) as u32 > e {
                    continue;
                }
                // degree still required from later slots
                let later = self.demand[k][slot + 1];
                if later == 0 {
                    divided = true;
                    break;
                }
                if later <= left - e {
                    next.push(k);
                }
            }
            if divided {
                // larger exponents stay divisible
                break;
            }
            total += self.count(slot + 1, left - e, &next)?;
        }
        Ok(total)
    }
}

/// `C(d + v - 1, d)`, the number of degree-`d` monomials in `v` variables.
fn monomials_of_degree(v: u64, d: u64) -> u64 {
    if v == 0 {
        return u64::from(d == 0);
    }
    let (n, k) = (d + v - 1, d.min(v - 1));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// The least `d ≥ 1` with `HF(S/inner, d) > HF(S/outer, d)`, i.e. the
/// initial degree of `outer / inner`.
///
/// Requires `inner ⊆ outer`, both homogeneous. Equal ideals have no such
/// degree and give [`Error::GapUndefined`].
pub fn initial_degree_gap<F: Field>(inner: &Ideal<F>, outer: &Ideal<F>, limits: &Limits) -> Result<u32> {
    inner.check_ideal(outer)?;
    let outer = outer.with_order(inner.order);
    if !inner.is_homogeneous(limits)? || !outer.is_homogeneous(limits)? {
        return Err(Error::NotHomogeneous);
    }
    if !inner.is_subset(&outer, limits)? {
        return Err(Error::Precondition("inner ideal is not contained in the outer one".into()));
    }
    let mut bound = None;
    for g in outer.groebner_basis(limits)? {
        if !inner.contains(g, limits)? {
            let d = g.degree().unwrap_or(0);
            bound = Some(bound.map_or(d, |b: u32| b.max(d)));
        }
    }
    let Some(bound) = bound else {
        return Err(Error::GapUndefined("the ideals are equal".into()));
    };
    for d in 1..=bound.max(1) {
        if hilbert_value(inner, d, limits)? > hilbert_value(&outer, d, limits)? {
            return Ok(d);
        }
    }
    Err(Error::Invariant(format!("no Hilbert function gap up to degree {bound}")))
}
