//! Cut sets with the cut point property and the minimal primes they index.
//!
//! For `T ⊆ V(G)` let `c(T)` be the number of connected components of
//! `G[V \ T]`. `T` has the cut point property when `T = ∅` or
//! `c(T) > c(T \ {i})` for every `i ∈ T`; these sets index the minimal primes
//! `P_T(G)` of the binomial edge ideal, and `dim S/P_T(G) = |V| - |T| + c(T)`.

use alloc::vec::Vec;

use crate::graph::{Combinations, CrownBipartition, Family, Graph, VertexSet};
use crate::{Error, Limits, Result};

/// A cut set `T` with the vertex sets of the components of `G[V \ T]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeSupport {
    pub t: VertexSet,
    /// Components sorted by smallest label.
    pub comps: Vec<VertexSet>,
}

impl PrimeSupport {
    pub fn new(g: &Graph, t: VertexSet) -> Result<Self> {
        g.check_set(t)?;
        Ok(PrimeSupport { t, comps: g.components_within(g.vertices().difference(t)) })
    }

    /// `|V| - |T| + c(T)`.
    pub fn dimension(&self, n: usize) -> usize {
        n - self.t.len() + self.comps.len()
    }

    /// `|V| + |T| - c(T)`, the height of `P_T(G)` in the `2|V|` variable ring.
    pub fn height(&self, n: usize) -> usize {
        2 * n - self.dimension(n)
    }
}

/// All cut sets of a graph, sorted by `(|T|, T)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CutSetFamily(Vec<PrimeSupport>);

impl CutSetFamily {
    fn from_sorted(mut v: Vec<PrimeSupport>) -> Self {
        v.sort_by_key(|a| a.t);
        v.dedup_by(|a, b| a.t == b.t);
        CutSetFamily(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, PrimeSupport> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[PrimeSupport] {
        &self.0
    }

    pub fn sets(&self) -> Vec<VertexSet> {
        self.0.iter().map(|p| p.t).collect()
    }

    pub fn contains(&self, t: VertexSet) -> bool {
        self.0.binary_search_by(|p| p.t.cmp(&t)).is_ok()
    }
}

impl<'a> IntoIterator for &'a CutSetFamily {
    type Item = &'a PrimeSupport;
    type IntoIter = core::slice::Iter<'a, PrimeSupport>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// `c_G(T)`: number of components of `G[V \ T]`.
pub fn component_count_after_removal(g: &Graph, t: VertexSet) -> Result<usize> {
    g.check_set(t)?;
    if t == g.vertices() {
        return Err(Error::Precondition("the cut set covers every vertex".into()));
    }
    Ok(g.component_count_within(g.vertices().difference(t)))
}

pub fn has_cut_point_property(g: &Graph, t: VertexSet) -> Result<bool> {
    g.check_set(t)?;
    let all = g.vertices();
    let c = |s: VertexSet| g.component_count_within(all.difference(s));
    let ct = c(t);
    Ok(t.iter().all(|i| ct > c(t.without(i))))
}

/// Exhaustive scan of all `2^n` subsets.
///
/// Component counts of every complement are computed once into a table, so
/// checking each `c(T \ {i})` is a lookup.
pub fn enumerate_cutsets(g: &Graph, limits: &Limits) -> Result<CutSetFamily> {
    let n = g.n();
    if n > limits.max_cutset_vertices {
        return Err(Error::ResourceLimit {
            what: "vertices for exhaustive cut set enumeration",
            limit: limits.max_cutset_vertices,
        });
    }
    let all = g.vertices().bits();
    let size = 1usize << n;
    let counts: Vec<u8> =
        (0..size).map(|t| g.component_count_within(VertexSet::from_bits(all & !(t as u64))) as u8).collect();
    let mut out = Vec::new();
    for t in 0..size {
        let ct = counts[t];
        let mut rest = t;
        let mut ok = true;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if counts[t & !bit] >= ct {
                ok = false;
                break;
            }
            rest &= rest - 1;
        }
        if ok {
            out.push(PrimeSupport::new(g, VertexSet::from_bits(t as u64))?);
        }
    }
    Ok(CutSetFamily::from_sorted(out))
}

/// The cut sets of the crown graph `C_{n,n}` written down from their closed
/// form: `∅`, `X`, `Y`, `X \ {2i-1}`, `Y \ {2i}` and `A ∪ (A + 1)` for
/// `A ⊆ X` with `|A| = n - 2`.
pub fn crown_cutset_classification(n: usize) -> Result<CutSetFamily> {
    if n < 3 {
        return Err(Error::InvalidParameter(alloc::format!("crown cut set classification requires n >= 3, got {n}")));
    }
    let g = Family::Crown(n).generate()?;
    let CrownBipartition { x, y } = CrownBipartition::new(n)?;
    let mut sets = alloc::vec![VertexSet::EMPTY, x, y];
    sets.extend(x.iter().map(|v| x.without(v)));
    sets.extend(y.iter().map(|v| y.without(v)));
    for a in Combinations::new(x, n - 2) {
        sets.push(a.union(VertexSet::from_bits(a.bits() << 1)));
    }
    let supports = sets.into_iter().map(|t| PrimeSupport::new(&g, t)).collect::<Result<_>>()?;
    Ok(CutSetFamily::from_sorted(supports))
}

/// `dim S/P_T(G) = |V| - |T| + c(T)`.
pub fn quotient_dimension(g: &Graph, t: VertexSet) -> Result<usize> {
    g.check_set(t)?;
    let c = g.component_count_within(g.vertices().difference(t));
    Ok(g.n() - t.len() + c)
}

/// `dim S/J_G`, the maximum of [`quotient_dimension`] over the cut sets.
pub fn krull_dimension(g: &Graph, limits: &Limits) -> Result<usize> {
    let fam = enumerate_cutsets(g, limits)?;
    Ok(fam.iter().map(|p| p.dimension(g.n())).max().unwrap_or(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Heights {
    pub height: usize,
    pub bigheight: usize,
}

/// Height and big height of `J_G` in the `2|V|` variable ring.
pub fn heights(g: &Graph, limits: &Limits) -> Result<Heights> {
    let fam = enumerate_cutsets(g, limits)?;
    Ok(heights_of(g, &fam))
}

pub fn heights_of(g: &Graph, fam: &CutSetFamily) -> Heights {
    let n = g.n();
    let dims = || fam.iter().map(|p| p.dimension(n));
    Heights { height: 2 * n - dims().max().unwrap_or(2 * n), bigheight: 2 * n - dims().min().unwrap_or(2 * n) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn gen(f: Family) -> Graph {
        f.generate().unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_labels(v.iter().copied()).unwrap()
    }

    /// Independent oracle: the defining condition, checked through freshly
    /// built induced subgraphs.
    fn cut_point_oracle(g: &Graph, t: VertexSet) -> bool {
        let comps = |s: VertexSet| g.induced_subgraph(g.vertices().difference(s)).unwrap().graph.components().len();
        t.iter().all(|i| comps(t) > comps(t.without(i)))
    }

    #[test]
    fn component_count_examples() {
        let crown4 = gen(Family::Crown(4));
        let x = set(&[1, 3, 5, 7]);
        assert_eq!(component_count_after_removal(&crown4, x).unwrap(), 4);
        assert_eq!(component_count_after_removal(&crown4, x.without(1)).unwrap(), 2);
        assert_eq!(component_count_after_removal(&gen(Family::Cycle(5)), set(&[1, 3])).unwrap(), 2);
        assert!(component_count_after_removal(&crown4, crown4.vertices()).is_err());
    }

    #[test]
    fn cut_point_examples() {
        let crown4 = gen(Family::Crown(4));
        assert!(has_cut_point_property(&crown4, set(&[1, 3, 5, 7])).unwrap());
        assert!(!has_cut_point_property(&gen(Family::Cycle(4)), set(&[1])).unwrap());
        assert!(!has_cut_point_property(&crown4, set(&[1, 2])).unwrap());
        assert!(!cut_point_oracle(&crown4, set(&[1, 2])));
        assert!(has_cut_point_property(&crown4, VertexSet::EMPTY).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let lim = Limits::default();
        assert_eq!(enumerate_cutsets(&gen(Family::Crown(3)), &lim).unwrap().len(), 12);
        assert_eq!(
            enumerate_cutsets(&gen(Family::Cycle(4)), &lim).unwrap().sets(),
            vec![VertexSet::EMPTY, set(&[1, 3]), set(&[2, 4])]
        );
        assert_eq!(enumerate_cutsets(&gen(Family::Complete(5)), &lim).unwrap().sets(), vec![VertexSet::EMPTY]);
        let small = Limits { max_cutset_vertices: 5, ..lim };
        assert!(enumerate_cutsets(&gen(Family::Cycle(6)), &small).unwrap_err().is_resource());
    }

    #[test]
    fn enumeration_matches_oracle() {
        let lim = Limits::default();
        let graphs = [
            gen(Family::Crown(3)),
            gen(Family::Cycle(6)),
            gen(Family::Path(5)),
            gen(Family::Wheel(5)),
            gen(Family::CompleteMultipartite(vec![2, 2, 3])),
            gen(Family::Cycle(3)).disjoint_union(&gen(Family::Path(3))).unwrap(),
        ];
        for g in &graphs {
            let fam = enumerate_cutsets(g, &lim).unwrap();
            let expected: Vec<VertexSet> = {
                let mut v: Vec<VertexSet> =
                    (0u64..1 << g.n()).map(VertexSet::from_bits).filter(|&t| cut_point_oracle(g, t)).collect();
                v.sort();
                v
            };
            assert_eq!(fam.sets(), expected, "{g:?}");
            assert!(fam.contains(VertexSet::EMPTY));
            for p in &fam {
                // supports partition the vertices; components are separated
                let union = p.comps.iter().fold(p.t, |a, &c| a.union(c));
                assert_eq!(union, g.vertices());
                for (k, &c) in p.comps.iter().enumerate() {
                    assert!(g.is_connected_within(c));
                    for &d in &p.comps[k + 1..] {
                        assert!(c.iter().all(|v| g.neighbors(v).intersection(d).is_empty()));
                    }
                }
            }
        }
    }

    #[test]
    fn crown_classification_matches_enumeration() {
        let lim = Limits::default();
        let counts = [(3, 12), (4, 17), (5, 1 + 1 + 1 + 5 + 5 + 10)];
        for (n, count) in counts {
            let closed = crown_cutset_classification(n).unwrap();
            assert_eq!(closed.len(), count);
            assert_eq!(closed, enumerate_cutsets(&gen(Family::Crown(n)), &lim).unwrap());
        }
        let a_type = crown_cutset_classification(5).unwrap().iter().filter(|p| p.t.len() == 6).count();
        assert_eq!(a_type, 10);
        assert!(crown_cutset_classification(2).is_err());
    }

    #[test]
    fn dimension_examples() {
        let lim = Limits::default();
        let crown4 = gen(Family::Crown(4));
        assert_eq!(quotient_dimension(&crown4, VertexSet::EMPTY).unwrap(), 9);
        assert_eq!(quotient_dimension(&crown4, set(&[1, 3, 5, 7])).unwrap(), 8);
        assert_eq!(quotient_dimension(&crown4, set(&[1, 2, 3, 4])).unwrap(), 6);
        assert_eq!(krull_dimension(&gen(Family::Crown(5)), &lim).unwrap(), 11);
        assert_eq!(krull_dimension(&gen(Family::Complete(4)), &lim).unwrap(), 5);
        assert_eq!(krull_dimension(&gen(Family::Cycle(5)), &lim).unwrap(), 6);
    }

    #[test]
    fn height_examples() {
        let lim = Limits::default();
        assert_eq!(heights(&gen(Family::Crown(4)), &lim).unwrap(), Heights { height: 7, bigheight: 10 });
        assert_eq!(heights(&gen(Family::Cycle(6)), &lim).unwrap(), Heights { height: 5, bigheight: 6 });
        let k23 = gen(Family::CompleteMultipartite(vec![2, 3]));
        assert_eq!(heights(&k23, &lim).unwrap().bigheight, 6);
        for n in 3..=5 {
            let h = heights(&gen(Family::Crown(n)), &lim).unwrap();
            assert_eq!((h.height, h.bigheight), (2 * n - 1, 4 * n - 6));
        }
    }

    #[test]
    fn empty_set_dimension_counts_components() {
        let g = gen(Family::Cycle(3)).disjoint_union(&gen(Family::Path(2))).unwrap();
        assert_eq!(quotient_dimension(&g, VertexSet::EMPTY).unwrap(), 5 + 2);
    }
}
