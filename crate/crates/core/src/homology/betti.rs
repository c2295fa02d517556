use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::complex::SimplicialComplex;
use super::rank::RankField;
use super::{initial_ideal, lcm_lattice, MonomialIdeal};
use crate::binomial::GraphIdealContext;
use crate::poly::Field;
use crate::primes::heights;
use crate::{Limits, Result};

/// Nonzero multigraded Betti numbers `β_{i,σ}(S/I)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, sigma: u32) -> usize {
        self.entries.get(&(i, sigma)).copied().unwrap_or(0)
    }

    /// `(i, σ, β_{i,σ})` for the nonzero entries, by `i` then `σ`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32, usize)> + '_ {
        self.entries.iter().map(|(&(i, s), &b)| (i, s, b))
    }

    /// `β_i = Σ_σ β_{i,σ}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, b)| b).sum()
    }

    /// `β_{i,j} = Σ_{|σ| = j} β_{i,σ}`.
    pub fn graded(&self, i: usize, j: usize) -> usize {
        self.entries
            .range((i, 0)..=(i, u32::MAX))
            .filter(|((_, s), _)| s.count_ones() as usize == j)
            .map(|(_, b)| b)
            .sum()
    }

    /// Largest `i` with a nonzero entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    fn insert(&mut self, i: usize, sigma: u32, b: usize) {
        if b > 0 {
            self.entries.insert((i, sigma), b);
        }
    }
}

/// Zero entries are dropped.
impl FromIterator<(usize, u32, usize)> for BettiTable {
    fn from_iter<I: IntoIterator<Item = (usize, u32, usize)>>(iter: I) -> Self {
        let mut table = BettiTable::default();
        for (i, s, b) in iter {
            table.insert(i, s, b);
        }
        table
    }
}

/// `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|σ)`.
pub fn betti_number(sc: &SimplicialComplex, sigma: u32, i: usize, field: RankField, limits: &Limits) -> Result<usize> {
    let j = sigma.count_ones() as i32 - i as i32 - 1;
    if j < -1 {
        return Ok(0);
    }
    sc.restricted_homology_rank(sigma, j, field, limits)
}

/// The full multigraded Betti table of `S/I` by Hochster's formula.
///
/// With `exhaustive` set every subset of the variables is visited instead of
/// the lcm lattice (only sensible for about ten variables).
pub fn graded_betti(mi: &MonomialIdeal, field: RankField, exhaustive: bool, limits: &Limits) -> Result<BettiTable> {
    let sc = SimplicialComplex::new(mi);
    let sigmas: Vec<u32> =
        if exhaustive { (1..1u64 << mi.nvars()).map(|s| s as u32).collect() } else { lcm_lattice(mi, limits)? };
    let mut table = BettiTable::default();
    table.insert(0, 0, 1);
    for sigma in sigmas {
        let size = sigma.count_ones() as usize;
        for (k, &h) in sc.restricted_homology(sigma, field, limits)?.iter().enumerate() {
            // H̃_{k-1} contributes to i = |σ| - k
            table.insert(size - k, sigma, h);
        }
    }
    Ok(table)
}

/// `pd(S/I)`, searching homological degrees downwards from the largest
/// lattice element and stopping at the first nonzero Betti number. Only low
/// homology of each restriction is needed.
pub fn pd_of_monomial_ideal(mi: &MonomialIdeal, field: RankField, limits: &Limits) -> Result<usize> {
    let lattice = lcm_lattice(mi, limits)?;
    let sc = SimplicialComplex::new(mi);
    let top = lattice.last().map_or(0, |s| s.count_ones() as usize);
    for i in (1..=top).rev() {
        // lattice is sorted by size, so the candidates form a suffix
        let start = lattice.partition_point(|s| (s.count_ones() as usize) < i);
        for &sigma in &lattice[start..] {
            if betti_number(&sc, sigma, i, field, limits)? > 0 {
                return Ok(i);
            }
        }
    }
    Ok(0)
}

/// Projective dimension compared with the big height.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PdReport {
    pub pd: usize,
    pub bigheight: usize,
    pub equal: bool,
}

/// `pd(S/J_G)`, computed as `pd(S/in(J_G))` for the context's order, with the
/// big height of `J_G` alongside.
pub fn projective_dimension<F: Field>(
    ctx: &GraphIdealContext<F>,
    field: RankField,
    limits: &Limits,
) -> Result<PdReport> {
    let mi = initial_ideal(ctx.binomial_edge_ideal(), limits)?;
    let pd = pd_of_monomial_ideal(&mi, field, limits)?;
    let bigheight = heights(ctx.graph(), limits)?.bigheight;
    Ok(PdReport { pd, bigheight, equal: pd == bigheight })
}
