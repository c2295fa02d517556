//! Projective dimension through squarefree initial ideals.
//!
//! For a squarefree monomial ideal `I = I_Δ`, Hochster's formula gives the
//! multigraded Betti numbers `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|σ)`, and they
//! vanish unless `σ` is a union of generator supports. The binomial edge
//! ideal has a squarefree initial ideal under the default lex order, which
//! preserves the projective dimension.

mod betti;
mod complex;
mod rank;
mod structure;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

pub use betti::{betti_number, graded_betti, pd_of_monomial_ideal, projective_dimension, BettiTable, PdReport};
pub use complex::SimplicialComplex;
pub use rank::{sparse_rank, RankField, SparseRow};
pub use structure::{is_d5_type, is_join_with_2k1, pd_closed_form, PdFamily};

use crate::poly::{Field, Ideal, MonomialOrder};
use crate::{Error, Limits, Result};

/// A squarefree monomial ideal with its minimal generators stored as
/// variable subsets: bit `k` stands for ring slot `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<u32>,
}

impl MonomialIdeal {
    /// Minimalizes the generators and sorts them by `(degree, bits)`.
    pub fn new(nvars: usize, gens: Vec<u32>) -> Result<Self> {
        if nvars > 31 {
            return Err(Error::InvalidParameter(format!("at most 31 variables are supported, got {nvars}")));
        }
        if let Some(g) = gens.iter().find(|&&g| nvars < 32 && g >> nvars != 0) {
            return Err(Error::InvalidParameter(format!("generator {g:#b} uses a variable beyond {nvars}")));
        }
        let mut gens = gens;
        gens.sort_unstable_by_key(|&g| (g.count_ones(), g));
        gens.dedup();
        let mut minimal: Vec<u32> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|&h| h & !g == 0) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { nvars, gens: minimal })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    /// True if the generators are pairwise coprime.
    pub fn is_complete_intersection(&self) -> bool {
        let mut seen = 0u32;
        self.gens.iter().all(|&g| {
            let fresh = g & seen == 0;
            seen |= g;
            fresh
        })
    }
}

/// The minimal generators of `in(I)` under the ideal's order.
///
/// Fails if a leading monomial is not squarefree; under the default lex
/// order this cannot happen for binomial edge ideals and is reported as an
/// internal invariant violation.
pub fn initial_ideal<F: Field>(i: &Ideal<F>, limits: &Limits) -> Result<MonomialIdeal> {
    let mut gens = Vec::new();
    for g in i.groebner_basis(limits)? {
        let m = g.leading_monomial().expect("basis elements are nonzero");
        if !m.is_squarefree() {
            let msg = format!("initial ideal has the non-squarefree generator {m:?}");
            return Err(if i.order() == MonomialOrder::LEX { Error::Invariant(msg) } else { Error::Precondition(msg) });
        }
        gens.push(m.support_mask() >> 1);
    }
    MonomialIdeal::new(i.nvars(), gens)
}

/// All unions of nonempty sets of generator supports, sorted by
/// `(size, bits)`. Betti numbers of `S/I` in positive homological degree
/// live on these multidegrees.
pub fn lcm_lattice(mi: &MonomialIdeal, limits: &Limits) -> Result<Vec<u32>> {
    let mut lattice: BTreeSet<u32> = BTreeSet::new();
    for &g in mi.gens() {
        let joins: Vec<u32> = lattice.iter().map(|&l| l | g).collect();
        lattice.insert(g);
        lattice.extend(joins);
        if lattice.len() > limits.max_faces {
            return Err(Error::ResourceLimit { what: "lcm lattice elements", limit: limits.max_faces });
        }
    }
    let mut out: Vec<u32> = lattice.into_iter().collect();
    out.sort_unstable_by_key(|&s| (s.count_ones(), s));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binomial_edge_ideal;
    use crate::graph::Family;
    use crate::poly::Rational;

    #[test]
    fn initial_ideal_of_triangle() {
        let g = Family::Complete(3).generate().unwrap();
        let j = binomial_edge_ideal::<Rational>(&g, MonomialOrder::LEX, ()).unwrap();
        let mi = initial_ideal(&j, &Limits::default()).unwrap();
        // x1y2, x1y3, x2y3 with x_i at bit i-1 and y_i at bit 2+i
        let mut expect = alloc::vec![0b001 | 1 << 4, 0b001 | 1 << 5, 0b010 | 1 << 5];
        expect.sort_unstable();
        let mut got = mi.gens().to_vec();
        got.sort_unstable();
        assert_eq!(got, expect);
        assert_eq!(lcm_lattice(&mi, &Limits::default()).unwrap().len(), 6);
    }

    #[test]
    fn minimalization() {
        let mi = MonomialIdeal::new(4, alloc::vec![0b0111, 0b0011, 0b0011, 0b1000]).unwrap();
        assert_eq!(mi.gens(), &[0b1000, 0b0011]);
        assert!(mi.is_complete_intersection());
        assert!(MonomialIdeal::new(3, alloc::vec![0b1000]).is_err());
    }

    #[test]
    fn lattice_examples() {
        let lim = Limits::default();
        let single = MonomialIdeal::new(2, alloc::vec![0b11]).unwrap();
        assert_eq!(lcm_lattice(&single, &lim).unwrap(), [0b11]);
        assert!(lcm_lattice(&MonomialIdeal::new(2, Vec::new()).unwrap(), &lim).unwrap().is_empty());
    }
}
