use alloc::vec::Vec;

use super::rank::{sparse_rank, RankField, SparseRow};
use super::MonomialIdeal;
use crate::{Error, Limits, Result};

/// The Stanley–Reisner complex of a squarefree monomial ideal, held through
/// its minimal non-faces. A vertex set is a face iff it contains no
/// generator of the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    nvertices: usize,
    nonfaces: Vec<u32>,
}

impl SimplicialComplex {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        SimplicialComplex { nvertices: ideal.nvars(), nonfaces: ideal.gens().to_vec() }
    }

    /// Complex on `nvertices` vertices with the given minimal non-faces
    /// (bit `k` is vertex `k`).
    pub fn from_nonfaces(nvertices: usize, nonfaces: Vec<u32>) -> Result<Self> {
        Ok(SimplicialComplex::new(&MonomialIdeal::new(nvertices, nonfaces)?))
    }

    pub fn nvertices(&self) -> usize {
        self.nvertices
    }

    pub fn nonfaces(&self) -> &[u32] {
        &self.nonfaces
    }

    pub fn is_face(&self, s: u32) -> bool {
        self.nonfaces.iter().all(|&g| g & !s != 0)
    }

    /// Faces of `Δ|σ` with exactly `size` vertices, in lexicographic order of
    /// their sorted vertex lists.
    pub fn faces_within(&self, sigma: u32, size: usize, limits: &Limits) -> Result<Vec<u32>> {
        let verts: Vec<u32> = (0..32).filter(|&v| sigma >> v & 1 == 1).collect();
        let relevant: Vec<u32> = self.nonfaces.iter().copied().filter(|&g| g & !sigma == 0).collect();
        let mut out = Vec::new();
        let mut walk = FaceWalk { verts: &verts, nonfaces: &relevant, size, out: &mut out, cap: limits.max_faces };
        walk.extend(0, 0, 0)?;
        Ok(out)
    }

    /// Rank of the reduced homology `H̃_i(Δ|σ)` over `field`, for `i ≥ -1`.
    pub fn restricted_homology_rank(&self, sigma: u32, i: i32, field: RankField, limits: &Limits) -> Result<usize> {
        if i < -1 {
            return Err(Error::InvalidParameter("homology degree must be at least -1".into()));
        }
        // faces of dimension i - 1, i, i + 1 have sizes i, i + 1, i + 2
        let size = (i + 1) as usize;
        let middle = self.faces_within(sigma, size, limits)?;
        if middle.is_empty() {
            return Ok(0);
        }
        let lower = if size == 0 { Vec::new() } else { self.faces_within(sigma, size - 1, limits)? };
        let upper = self.faces_within(sigma, size + 1, limits)?;
        let rank_in = boundary_rank(&middle, &lower, field);
        let rank_out = boundary_rank(&upper, &middle, field);
        Ok(middle.len() - rank_in - rank_out)
    }

    /// All reduced homology ranks of `Δ|σ`; entry `k` is `H̃_{k-1}`.
    pub fn restricted_homology(&self, sigma: u32, field: RankField, limits: &Limits) -> Result<Vec<usize>> {
        let top = sigma.count_ones() as usize;
        let faces: Vec<Vec<u32>> = (0..=top + 1)
            .map(|size| if size > top { Ok(Vec::new()) } else { self.faces_within(sigma, size, limits) })
            .collect::<Result<_>>()?;
        let ranks: Vec<usize> = (0..=top + 1)
            .map(|size| if size == 0 { 0 } else { boundary_rank(&faces[size], &faces[size - 1], field) })
            .collect();
        Ok((0..=top).map(|size| faces[size].len() - ranks[size] - ranks[size + 1]).collect())
    }

    /// `Σ_{k ≥ -1} (-1)^k f_k(Δ|σ)`, the reduced Euler characteristic.
    pub fn reduced_euler_characteristic(&self, sigma: u32, limits: &Limits) -> Result<i64> {
        let mut chi = 0i64;
        for size in 0..=sigma.count_ones() as usize {
            let f = self.faces_within(sigma, size, limits)?.len() as i64;
            chi += if size % 2 == 1 { f } else { -f };
        }
        Ok(chi)
    }
}

struct FaceWalk<'a> {
    verts: &'a [u32],
    nonfaces: &'a [u32],
    size: usize,
    out: &'a mut Vec<u32>,
    cap: usize,
}

impl FaceWalk<'_> {
    fn extend(&mut self, start: usize, face: u32, len: usize) -> Result<()> {
        if len == self.size {
            if self.out.len() >= self.cap {
                return Err(Error::ResourceLimit { what: "faces of a restricted complex", limit: self.cap });
            }
            self.out.push(face);
            return Ok(());
        }
        if self.verts.len() - start < self.size - len {
            return Ok(());
        }
        for k in start..self.verts.len() {
            let next = face | 1 << self.verts[k];
            // only generators through the new vertex can become contained
            if self.nonfaces.iter().any(|&g| g >> self.verts[k] & 1 == 1 && g & !next == 0) {
                continue;
            }
            self.extend(k + 1, next, len + 1)?;
        }
        Ok(())
    }
}

/// Rank of the simplicial boundary map from `faces` (all of one size `k+1`)
/// to `facets_below` (all of size `k`). The map into the empty face has rank
/// one as soon as there is a vertex.
fn boundary_rank(faces: &[u32], below: &[u32], field: RankField) -> usize {
    if faces.is_empty() {
        return 0;
    }
    if faces[0].count_ones() == 0 {
        return 0;
    }
    if faces[0].count_ones() == 1 {
        return 1;
    }
    let mut index: Vec<(u32, u32)> = below.iter().enumerate().map(|(k, &f)| (f, k as u32)).collect();
    index.sort_unstable();
    let lookup = |f: u32| index[index.binary_search_by_key(&f, |&(g, _)| g).expect("boundary face present")].1;
    let rows: Vec<SparseRow> = faces
        .iter()
        .map(|&face| {
            let mut row: SparseRow = Vec::with_capacity(face.count_ones() as usize);
            let mut sign = 1i64;
            let mut rest = face;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                row.push((lookup(face & !bit), sign));
                sign = -sign;
                rest &= rest - 1;
            }
            row.sort_unstable_by_key(|&(c, _)| c);
            row
        })
        .collect();
    sparse_rank(&rows, below.len(), field)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: RankField = RankField::Rational;

    fn all_ranks(c: &SimplicialComplex, sigma: u32) -> Vec<usize> {
        let lim = Limits::default();
        (-1..sigma.count_ones() as i32 - 1).map(|i| c.restricted_homology_rank(sigma, i, Q, &lim).unwrap()).collect()
    }

    #[test]
    fn simplex_is_acyclic() {
        let c = SimplicialComplex::from_nonfaces(4, Vec::new()).unwrap();
        assert!(all_ranks(&c, 0b1111).iter().all(|&r| r == 0));
    }

    #[test]
    fn two_points() {
        // vertices 0 and 1 joined by no edge
        let c = SimplicialComplex::from_nonfaces(2, alloc::vec![0b11]).unwrap();
        assert_eq!(all_ranks(&c, 0b11), [0, 1]);
    }

    #[test]
    fn hollow_triangle() {
        let c = SimplicialComplex::from_nonfaces(3, alloc::vec![0b111]).unwrap();
        assert_eq!(all_ranks(&c, 0b111), [0, 0, 1]);
        // restricting to an edge gives a contractible complex
        assert_eq!(all_ranks(&c, 0b011), [0, 0]);
    }

    #[test]
    fn empty_restriction_has_one_class_in_degree_minus_one() {
        let c = SimplicialComplex::from_nonfaces(2, alloc::vec![0b01, 0b10]).unwrap();
        assert_eq!(all_ranks(&c, 0b11), [1, 0]);
        assert_eq!(c.restricted_homology_rank(0, -1, Q, &Limits::default()).unwrap(), 1);
    }

    #[test]
    fn faces_in_lex_order() {
        let c = SimplicialComplex::from_nonfaces(4, alloc::vec![0b0011]).unwrap();
        let f = c.faces_within(0b1111, 2, &Limits::default()).unwrap();
        // {0,2} {0,3} {1,2} {1,3} {2,3}
        assert_eq!(f, [0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
    }

    #[test]
    fn face_cap_is_reported() {
        let c = SimplicialComplex::from_nonfaces(10, Vec::new()).unwrap();
        let lim = Limits { max_faces: 5, ..Limits::default() };
        assert!(c.faces_within(0x3ff, 2, &lim).unwrap_err().is_resource());
    }
}
