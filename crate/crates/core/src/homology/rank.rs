//! Exact rank of sparse integer matrices.
//!
//! Over `Q` rows are eliminated fraction-free: combining a row with a pivot
//! row gives `a·r − b·p`, after which the row is divided by the gcd of its
//! entries. Entries stay `i64` with checked arithmetic; on overflow the whole
//! computation restarts on `BigInt`. Over `GF(p)` pivots are made monic and
//! arithmetic is modular.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Field over which homology ranks are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RankField {
    #[default]
    Rational,
    Prime(u32),
}

/// A sparse row: `(column, entry)` pairs with strictly increasing columns and
/// nonzero entries.
pub type SparseRow = Vec<(u32, i64)>;

trait Arith {
    type T: Clone;
    fn lift(&self, v: i64) -> Self::T;
    fn is_zero(&self, v: &Self::T) -> bool;
    /// `a·x − b·y`, `None` on overflow.
    fn combine(&self, a: &Self::T, x: &Self::T, b: &Self::T, y: &Self::T) -> Option<Self::T>;
    /// Scales the row to a canonical multiple.
    fn normalize(&self, row: &mut [(u32, Self::T)]);
}

struct Checked;

impl Arith for Checked {
    type T = i64;

    fn lift(&self, v: i64) -> i64 {
        v
    }

    fn is_zero(&self, v: &i64) -> bool {
        *v == 0
    }

    fn combine(&self, a: &i64, x: &i64, b: &i64, y: &i64) -> Option<i64> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }

    fn normalize(&self, row: &mut [(u32, i64)]) {
        let g = row.iter().fold(0i64, |g, (_, v)| g.gcd(v));
        if g > 1 {
            row.iter_mut().for_each(|(_, v)| *v /= g);
        }
    }
}

struct Big;

impl Arith for Big {
    type T = BigInt;

    fn lift(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn is_zero(&self, v: &BigInt) -> bool {
        v.is_zero()
    }

    fn combine(&self, a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(a * x - b * y)
    }

    fn normalize(&self, row: &mut [(u32, BigInt)]) {
        let g = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
        if !g.is_zero() && !g.abs().is_one() {
            row.iter_mut().for_each(|(_, v)| *v /= &g);
        }
    }
}

struct Modular(u64);

impl Modular {
    fn inv(&self, v: u64) -> u64 {
        // Fermat; p is prime
        let (mut base, mut e, mut acc) = (v % self.0, self.0 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            e >>= 1;
        }
        acc
    }
}

impl Arith for Modular {
    type T = u64;

    fn lift(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    fn is_zero(&self, v: &u64) -> bool {
        *v == 0
    }

    fn combine(&self, a: &u64, x: &u64, b: &u64, y: &u64) -> Option<u64> {
        let p = self.0;
        Some((a * x % p + p - b * y % p) % p)
    }

    fn normalize(&self, row: &mut [(u32, u64)]) {
        if let Some(&(_, lead)) = row.first() {
            if lead != 1 {
                let inv = self.inv(lead);
                row.iter_mut().for_each(|(_, v)| *v = *v * inv % self.0);
            }
        }
    }
}

/// Rank of the matrix with the given rows and `ncols` columns.
pub fn sparse_rank(rows: &[SparseRow], ncols: usize, field: RankField) -> usize {
    match field {
        RankField::Rational => eliminate(&Checked, rows, ncols)
            .unwrap_or_else(|| eliminate(&Big, rows, ncols).expect("BigInt never overflows")),
        RankField::Prime(p) => eliminate(&Modular(p as u64), rows, ncols).expect("modular arithmetic never overflows"),
    }
}

type Row<T> = Vec<(u32, T)>;

/// Row echelon form by insertion: each row is reduced against the pivot
/// stored for its leading column until it vanishes or claims a free column.
fn eliminate<A: Arith>(arith: &A, rows: &[SparseRow], ncols: usize) -> Option<usize> {
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&r| (rows[r].len(), r));
    let mut pivots: Vec<Option<Row<A::T>>> = alloc::vec![None; ncols];
    let mut rank = 0;
    let mut buf: Vec<(u32, A::T)> = Vec::new();
    for r in order {
        let mut row: Vec<(u32, A::T)> =
            rows[r].iter().map(|&(c, v)| (c, arith.lift(v))).filter(|(_, v)| !arith.is_zero(v)).collect();
        arith.normalize(&mut row);
        while let Some((lead, _)) = row.first() {
            let Some(pivot) = &pivots[*lead as usize] else { break };
            let a = pivot[0].1.clone();
            let b = row[0].1.clone();
            buf.clear();
            let (mut i, mut j) = (0, 0);
            let zero = arith.lift(0);
            while i < row.len() || j < pivot.len() {
                let (c, v) = match (row.get(i), pivot.get(j)) {
                    (Some((ci, x)), Some((cj, y))) if ci == cj => {
                        i += 1;
                        j += 1;
                        (*ci, arith.combine(&a, x, &b, y)?)
                    }
                    (Some((ci, x)), Some((cj, _))) if ci < cj => {
                        i += 1;
                        (*ci, arith.combine(&a, x, &b, &zero)?)
                    }
                    (Some((ci, x)), None) => {
                        i += 1;
                        (*ci, arith.combine(&a, x, &b, &zero)?)
                    }
                    (_, Some((cj, y))) => {
                        j += 1;
                        (*cj, arith.combine(&a, &zero, &b, y)?)
                    }
                    (None, None) => unreachable!(),
                };
                if !arith.is_zero(&v) {
                    buf.push((c, v));
                }
            }
            core::mem::swap(&mut row, &mut buf);
            arith.normalize(&mut row);
        }
        if let Some(lead) = row.first().map(|&(c, _)| c as usize) {
            pivots[lead] = Some(row);
            rank += 1;
        }
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn dense(m: &[&[i64]]) -> Vec<SparseRow> {
        m.iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, v)| (c as u32, *v)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(sparse_rank(&m, 3, RankField::Rational), 2);
        assert_eq!(sparse_rank(&m, 3, RankField::Prime(7)), 2);
        assert_eq!(sparse_rank(&[], 4, RankField::Rational), 0);
        // [[2, 1], [1, 2]] has determinant 3: singular only in characteristic 3
        let m = dense(&[&[2, 1], &[1, 2]]);
        assert_eq!(sparse_rank(&m, 2, RankField::Rational), 2);
        assert_eq!(sparse_rank(&m, 2, RankField::Prime(3)), 1);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let m = vec![vec![(0, big), (1, 3)], vec![(0, 3), (1, big)], vec![(0, big - 1), (1, big - 1)]];
        assert_eq!(sparse_rank(&m, 2, RankField::Rational), 2);
        assert_eq!(eliminate(&Checked, &m, 2), None);
    }
}
