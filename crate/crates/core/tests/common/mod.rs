#![allow(dead_code)]

use binedge_core::poly::{Field, Ideal, Monomial, MonomialOrder, Polynomial, Rational};

pub type P = Polynomial<Rational>;

/// `Σ c·Π slot^e` over `QQ` in `nvars` variables.
pub fn poly(nvars: usize, order: MonomialOrder, terms: &[(i64, &[(usize, u8)])]) -> P {
    let terms = terms.iter().map(|&(c, m)| (Monomial::from_pairs(m.iter().copied()), Rational::from_i64(c, ())));
    Polynomial::from_terms(nvars, order, (), terms).unwrap()
}

pub fn var(nvars: usize, slot: usize) -> P {
    Polynomial::var(slot, nvars, MonomialOrder::LEX, ())
}

pub fn ideal(nvars: usize, gens: Vec<P>) -> Ideal<Rational> {
    Ideal::new(nvars, MonomialOrder::LEX, (), gens).unwrap()
}

/// Monomials of degree `d` in slots `1..=m`.
pub fn monomials(m: usize, d: u32) -> Vec<Monomial> {
    fn go(slot: usize, m: usize, left: u32, cur: &mut Vec<(usize, u8)>, out: &mut Vec<Monomial>) {
        if slot > m {
            if left == 0 {
                out.push(Monomial::from_pairs(cur.iter().copied()));
            }
            return;
        }
        for e in 0..=left {
            if e > 0 {
                cur.push((slot, e as u8));
            }
            go(slot + 1, m, left - e, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(1, m, d, &mut Vec::new(), &mut out);
    out
}

/// Rank of a dense matrix over any field by plain Gaussian elimination.
pub fn dense_rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().unwrap();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let k = rows[r][c].mul(&inv);
                let pivot = rows[rank].clone();
                for (a, b) in rows[r][c..].iter_mut().zip(&pivot[c..]) {
                    *a = a.sub(&k.mul(b));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim (S/I)_d` for homogeneous generators, as the number of degree-`d`
/// monomials minus the rank of all degree-`d` multiples of the generators.
/// No Gröbner basis is involved.
pub fn hilbert_by_linear_algebra(m: usize, gens: &[P], d: u32) -> u64 {
    let basis = monomials(m, d);
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.degree().unwrap();
        if dg > d {
            continue;
        }
        for mult in monomials(m, d - dg) {
            let h = g.mul_term(&mult, &Rational::from_i64(1, ()));
            rows.push(basis.iter().map(|b| h.coeff(b)).collect::<Vec<_>>());
        }
    }
    (basis.len() - dense_rank(rows)) as u64
}

/// Squarefree monomial ideals as lists of variable bitmasks.
pub mod monomial_oracle {
    pub fn minimalize(mut gens: Vec<u32>) -> Vec<u32> {
        gens.sort_unstable_by_key(|g| (g.count_ones(), *g));
        gens.dedup();
        let mut out: Vec<u32> = Vec::new();
        for g in gens {
            if !out.iter().any(|h| h & !g == 0) {
                out.push(g);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
        minimalize(a.iter().flat_map(|x| b.iter().map(move |y| x | y)).collect())
    }

    pub fn colon_monomial(a: &[u32], m: u32) -> Vec<u32> {
        minimalize(a.iter().map(|g| g & !m).collect())
    }

    pub fn colon(a: &[u32], b: &[u32]) -> Vec<u32> {
        b.iter().map(|&m| colon_monomial(a, m)).reduce(|x, y| intersect(&x, &y)).unwrap_or_else(|| vec![0])
    }
}

/// Bitmask (bit `k` = slot `k + 1`) of a squarefree monomial polynomial.
pub fn mask_of(p: &P) -> u32 {
    assert_eq!(p.len(), 1);
    p.leading_monomial().unwrap().support_mask() >> 1
}

pub fn monomial_ideal(nvars: usize, masks: &[u32]) -> Ideal<Rational> {
    let gens = masks
        .iter()
        .map(|&m| {
            let pairs: Vec<(usize, u8)> = (0..nvars).filter(|k| m >> k & 1 == 1).map(|k| (k + 1, 1)).collect();
            poly(nvars, MonomialOrder::LEX, &[(1, &pairs)])
        })
        .collect();
    ideal(nvars, gens)
}
