//! Parallel drivers over the core algorithms. Work fans out over
//! independent subproblems (cut sets, multidegrees) and results are
//! collected in input order, so output does not depend on scheduling.

use binedge_core::binomial::{local_v_number, GraphIdealContext};
use binedge_core::graph::VertexSet;
use binedge_core::homology::{
    betti_number, initial_ideal, lcm_lattice, BettiTable, MonomialIdeal, PdReport, RankField, SimplicialComplex,
};
use binedge_core::poly::Field;
use binedge_core::primes::{enumerate_cutsets, heights_of};
use binedge_core::{Limits, Result};
use rayon::prelude::*;

/// Local v-numbers at every cut set, in cut set order.
pub fn local_v_numbers<F: Field>(ctx: &GraphIdealContext<F>, limits: &Limits) -> Result<Vec<(VertexSet, u32)>> {
    let fam = enumerate_cutsets(ctx.graph(), limits)?;
    // fill the shared basis cache once before fanning out
    ctx.binomial_edge_ideal().groebner_basis(limits)?;
    fam.as_slice().par_iter().map(|p| Ok((p.t, local_v_number(ctx, p.t, limits)?))).collect()
}

/// `pd(S/I)` by a descending search in which every homological degree
/// checks its candidate multidegrees in parallel.
pub fn pd_of_monomial_ideal(mi: &MonomialIdeal, field: RankField, limits: &Limits) -> Result<usize> {
    let lattice = lcm_lattice(mi, limits)?;
    let sc = SimplicialComplex::new(mi);
    let top = lattice.last().map_or(0, |s| s.count_ones() as usize);
    for i in (1..=top).rev() {
        let start = lattice.partition_point(|s| (s.count_ones() as usize) < i);
        let hit = lattice[start..]
            .par_iter()
            .map(|&sigma| betti_number(&sc, sigma, i, field, limits).map(|b| b > 0))
            .find_any(|r| !matches!(r, Ok(false)));
        match hit {
            Some(Ok(_)) => return Ok(i),
            Some(Err(e)) => return Err(e),
            None => {}
        }
    }
    Ok(0)
}

/// The multigraded Betti table, one restricted complex per task.
pub fn graded_betti(mi: &MonomialIdeal, field: RankField, exhaustive: bool, limits: &Limits) -> Result<BettiTable> {
    let sc = SimplicialComplex::new(mi);
    let sigmas: Vec<u32> =
        if exhaustive { (1..1u64 << mi.nvars()).map(|s| s as u32).collect() } else { lcm_lattice(mi, limits)? };
    let homology: Vec<Vec<usize>> =
        sigmas.par_iter().map(|&s| sc.restricted_homology(s, field, limits)).collect::<Result<_>>()?;
    let entries = sigmas.iter().zip(&homology).flat_map(|(&s, h)| {
        let size = s.count_ones() as usize;
        h.iter().enumerate().map(move |(k, &b)| (size - k, s, b))
    });
    Ok(std::iter::once((0, 0, 1)).chain(entries).collect())
}

/// `pd(S/J_G)` through the initial ideal, with the big height alongside.
pub fn projective_dimension<F: Field>(
    ctx: &GraphIdealContext<F>,
    field: RankField,
    limits: &Limits,
) -> Result<(PdReport, MonomialIdeal)> {
    let mi = initial_ideal(ctx.binomial_edge_ideal(), limits)?;
    let pd = pd_of_monomial_ideal(&mi, field, limits)?;
    let bigheight = heights_of(ctx.graph(), &enumerate_cutsets(ctx.graph(), limits)?).bigheight;
    Ok((PdReport { pd, bigheight, equal: pd == bigheight }, mi))
}

/// Runs `f` on a pool of `jobs` threads (all cores when `None`).
pub fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    builder.build().expect("thread pool").install(f)
}
