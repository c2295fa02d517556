//! Polynomial reduction and Buchberger's algorithm.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::field::Field;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use crate::{Error, Limits, Result};

/// Leading monomials of a reducer set, scanned in list order.
struct Divisors<'a, F: Field> {
    polys: Vec<&'a Polynomial<F>>,
    leads: Vec<Monomial>,
}

impl<'a, F: Field> Divisors<'a, F> {
    fn new(polys: Vec<&'a Polynomial<F>>) -> Self {
        let leads = polys.iter().map(|p| *p.leading_monomial().expect("nonzero divisor")).collect();
        Divisors { polys, leads }
    }

    #[inline]
    fn find(&self, m: &Monomial) -> Option<usize> {
        self.leads.iter().position(|l| l.divides(m))
    }
}

/// Full reduction of `f` by `divs`. Keeps the working polynomial in
/// increasing order so the current leading term is popped from the end.
fn reduce_by<F: Field>(f: Polynomial<F>, divs: &Divisors<'_, F>, max_terms: usize) -> Result<Polynomial<F>> {
    let (nvars, order, params) = (f.nvars(), f.order(), f.params());
    let mut work = f.into_terms();
    work.reverse();
    let mut buf: Vec<(Monomial, F)> = Vec::new();
    let mut rem: Vec<(Monomial, F)> = Vec::new();
    while let Some((m, c)) = work.pop() {
        let Some(k) = divs.find(&m) else {
            rem.push((m, c));
            continue;
        };
        let g = divs.polys[k];
        let gt = g.terms();
        let q = m.div(&divs.leads[k]);
        let factor = if gt[0].1.is_one() { c } else { c.div(&gt[0].1)? };
        // work -= factor * q * tail(g), merging two increasing sequences
        buf.clear();
        buf.reserve(work.len() + gt.len());
        let mut a = 0;
        let mut b = gt.len();
        let mut next_b: Option<Monomial> = None;
        while a < work.len() || b > 1 {
            let bm = if b > 1 { Some(*next_b.get_or_insert_with(|| gt[b - 1].0.mul(&q))) } else { None };
            let step = match (work.get(a), bm) {
                (Some((am, _)), Some(bm)) => order.cmp(am, &bm),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match step {
                Ordering::Less => {
                    buf.push(work[a].clone());
                    a += 1;
                }
                Ordering::Greater => {
                    buf.push((bm.unwrap(), gt[b - 1].1.mul(&factor).neg()));
                    b -= 1;
                    next_b = None;
                }
                Ordering::Equal => {
                    let v = work[a].1.sub(&gt[b - 1].1.mul(&factor));
                    if !v.is_zero() {
                        buf.push((work[a].0, v));
                    }
                    a += 1;
                    b -= 1;
                    next_b = None;
                }
            }
        }
        core::mem::swap(&mut work, &mut buf);
        if work.len() + rem.len() > max_terms {
            return Err(Error::ResourceLimit { what: "terms per polynomial", limit: max_terms });
        }
    }
    Ok(Polynomial::from_sorted(nvars, order, params, rem))
}

/// Remainder of `f` on division by `basis`: no term of the result is
/// divisible by a leading monomial of `basis`. Divisors are tried in list
/// order and the leading term is always rewritten first.
pub fn normal_form<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: MonomialOrder,
) -> Result<Polynomial<F>> {
    let sorted: Vec<Polynomial<F>> = basis
        .iter()
        .map(|g| {
            f.check_compatible(g)?;
            if g.is_zero() {
                return Err(Error::InvalidParameter("zero polynomial in a division basis".into()));
            }
            Ok(g.with_order(order))
        })
        .collect::<Result<_>>()?;
    let divs = Divisors::new(sorted.iter().collect());
    reduce_by(f.with_order(order), &divs, usize::MAX)
}

/// Reduction against a basis that is already sorted for `f`'s order.
pub(crate) fn reduce_with<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    limits: &Limits,
) -> Result<Polynomial<F>> {
    let divs = Divisors::new(basis.iter().collect());
    reduce_by(f.clone(), &divs, limits.max_terms)
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<'l, F: Field> {
    order: MonomialOrder,
    limits: &'l Limits,
    basis: Vec<Polynomial<F>>,
    leads: Vec<Monomial>,
    redundant: Vec<bool>,
    /// pending pairs, best pair last
    pairs: Vec<Pair>,
}

impl<F: Field> Engine<'_, F> {
    /// Normal strategy: smallest lcm degree first, with `t` not counted,
    /// then the monomial order, then the indices.
    fn pair_cmp(order: MonomialOrder, p: &Pair, q: &Pair) -> Ordering {
        p.lcm
            .xdegree()
            .cmp(&q.lcm.xdegree())
            .then_with(|| order.cmp(&p.lcm, &q.lcm))
            .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
    }

    fn active(&self) -> Vec<&Polynomial<F>> {
        self.basis.iter().zip(&self.redundant).filter(|(_, r)| !**r).map(|(p, _)| p).collect()
    }

    fn reduce(&self, f: Polynomial<F>) -> Result<Polynomial<F>> {
        let divs = Divisors::new(self.active());
        reduce_by(f, &divs, self.limits.max_terms)
    }

    /// Adds a monic, reduced `h` and updates the pair set with the
    /// Gebauer–Möller criteria.
    fn insert(&mut self, h: Polynomial<F>) {
        let k = self.basis.len();
        let lk = *h.leading_monomial().unwrap();
        let mut candidates: Vec<(Pair, bool)> = (0..k)
            .filter(|&i| !self.redundant[i])
            .map(|i| {
                let li = &self.leads[i];
                (Pair { i, j: k, lcm: li.lcm(&lk) }, li.is_coprime(&lk))
            })
            .collect();

        // chain criterion among the new pairs; a group of equal lcms keeps
        // one representative, preferring a coprime one
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        while let Some((p, coprime)) = candidates.pop() {
            let dominated = candidates.iter().chain(kept.iter()).any(|(q, _)| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push((p, coprime));
            }
        }
        // product criterion
        let fresh: Vec<Pair> = kept.into_iter().filter(|(_, c)| !*c).map(|(p, _)| p).collect();

        // chain criterion on old pairs
        let leads = &self.leads;
        self.pairs.retain(|p| !(lk.divides(&p.lcm) && leads[p.i].lcm(&lk) != p.lcm && leads[p.j].lcm(&lk) != p.lcm));

        for i in 0..k {
            if !self.redundant[i] && lk.divides(&self.leads[i]) {
                self.redundant[i] = true;
            }
        }
        self.basis.push(h);
        self.leads.push(lk);
        self.redundant.push(false);

        let order = self.order;
        self.pairs.extend(fresh);
        self.pairs.sort_by(|p, q| Self::pair_cmp(order, q, p));
    }

    fn s_polynomial(&self, p: &Pair) -> Polynomial<F> {
        let (f, g) = (&self.basis[p.i], &self.basis[p.j]);
        let one = F::one(f.params());
        let uf = p.lcm.div(&self.leads[p.i]);
        let ug = p.lcm.div(&self.leads[p.j]);
        f.mul_term(&uf, &one).add_scaled(g, &one.neg(), &ug)
    }
}

/// The reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// increasing leading monomial.
///
/// Uses Buchberger's algorithm with the Gebauer–Möller installation of the
/// product and chain criteria and the normal selection strategy. The zero
/// ideal has the empty basis; the unit ideal has basis `[1]`.
pub fn buchberger<F: Field>(
    gens: &[Polynomial<F>],
    order: MonomialOrder,
    limits: &Limits,
) -> Result<Vec<Polynomial<F>>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let mut input: Vec<Polynomial<F>> = Vec::with_capacity(gens.len());
    for g in gens {
        first.check_compatible(g)?;
        if !g.is_zero() {
            input.push(g.with_order(order));
        }
    }
    input.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        la.xdegree().cmp(&lb.xdegree()).then_with(|| order.cmp(la, lb))
    });

    let mut engine =
        Engine { order, limits, basis: Vec::new(), leads: Vec::new(), redundant: Vec::new(), pairs: Vec::new() };
    let unit = |p: &Polynomial<F>| alloc::vec![Polynomial::one(p.nvars(), order, p.params())];

    for g in input {
        let mut h = engine.reduce(g)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit(&h));
        }
        h.make_monic();
        engine.insert(h);
    }

    let mut processed = 0usize;
    while let Some(pair) = engine.pairs.pop() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::ResourceLimit { what: "S-pairs", limit: limits.max_pairs });
        }
        let s = engine.s_polynomial(&pair);
        let mut h = engine.reduce(s)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit(&h));
        }
        h.make_monic();
        engine.insert(h);
    }

    let minimal: Vec<Polynomial<F>> =
        engine.basis.into_iter().zip(engine.redundant).filter(|(_, r)| !*r).map(|(p, _)| p).collect();
    interreduce(minimal, order, limits)
}

/// Tail-reduces a minimal Gröbner basis (monic, no leading monomial divisible
/// by another) into the reduced one, sorted by increasing leading monomial.
pub(crate) fn interreduce<F: Field>(
    mut basis: Vec<Polynomial<F>>,
    order: MonomialOrder,
    limits: &Limits,
) -> Result<Vec<Polynomial<F>>> {
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut out = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<&Polynomial<F>> = basis.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p).collect();
        let divs = Divisors::new(others);
        let g = &basis[k];
        let (lm, lc) = g.terms()[0].clone();
        let tail = Polynomial::from_sorted(g.nvars(), order, g.params(), g.terms()[1..].to_vec());
        let tail = reduce_by(tail, &divs, limits.max_terms)?;
        let mut terms = alloc::vec![(lm, lc)];
        terms.extend(tail.into_terms());
        let mut p = Polynomial::from_sorted(g.nvars(), order, g.params(), terms);
        p.make_monic();
        out.push(p);
    }
    Ok(out)
}

/// True if the leading monomials of the monic polynomials in `basis` are
/// pairwise non-dividing and every tail term is irreducible.
pub fn is_reduced_basis<F: Field>(basis: &[Polynomial<F>]) -> bool {
    let leads: Vec<Monomial> = basis.iter().filter_map(|g| g.leading_monomial().copied()).collect();
    if leads.len() != basis.len() {
        return false;
    }
    basis.iter().enumerate().all(|(k, g)| {
        g.leading_coeff().is_some_and(F::is_one)
            && g.terms()
                .iter()
                .enumerate()
                .all(|(t, (m, _))| leads.iter().enumerate().all(|(i, l)| (t == 0 && i == k) || !l.divides(m)))
    })
}
