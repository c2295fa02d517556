//! Simple undirected graphs on the labels `1..=n`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex (bit `i - 1` stands for
//! label `i`), so graphs are limited to 64 vertices. Every algebraic routine in
//! this crate is far below that bound.

mod enumerate;
mod family;
mod invariants;

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

pub use enumerate::{connected_graphs, Combinations};
pub use family::Family;
pub use invariants::{
    connected_domination_number, cut_vertices, is_internal_vertex, local_completion, minimum_connected_dominating_set,
    vertex_connectivity,
};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex labels, stored as a bitmask.
///
/// Sets order by size first and then lexicographically on their sorted label
/// lists, which is the order used for cut set families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in labels {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            let b = 1u64 << (v - 1);
            if bits & b != 0 {
                return Err(Error::InvalidParameter(alloc::format!("duplicate vertex {v} in vertex set")));
            }
            bits |= b;
        }
        Ok(VertexSet(bits))
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << (v - 1);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << (v - 1));
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << (v - 1))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest label, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Labels in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the first differing label belongs to `self`
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for VertexSet {
    /// Panics on labels outside `1..=64`; use [`VertexSet::from_labels`] for
    /// untrusted input.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!((1..=MAX_VERTICES).contains(&v), "vertex label {v} out of range");
            s.insert(v);
        }
        s
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A finite simple graph on the labels `1..=n`.
///
/// The edge set is canonical, so equal graphs compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidParameter(alloc::format!(
                "at most {MAX_VERTICES} vertices are supported, got {n}"
            )));
        }
        Ok(Graph { n, adj: alloc::vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicate edges and
    /// endpoints outside `1..=n`.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(Error::InvalidGraph(alloc::format!("self-loop at vertex {a}")));
            }
            if g.has_edge(a, b) {
                return Err(Error::InvalidGraph(alloc::format!("duplicate edge {{{a},{b}}}")));
            }
            g.add_edge_unchecked(a, b);
        }
        Ok(g)
    }

    /// Same as [`Graph::new`] but silently merges duplicate edges.
    pub(crate) fn from_edges_lenient<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Graph { n, adj: alloc::vec![0; n] };
        for (a, b) in edges {
            debug_assert!(a != b && a >= 1 && b >= 1 && a <= n && b <= n);
            g.add_edge_unchecked(a, b);
        }
        g
    }

    /// Builds a graph directly from adjacency masks.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        Graph { n: adj.len(), adj }
    }

    #[inline]
    fn add_edge_unchecked(&mut self, a: usize, b: usize) {
        self.adj[a - 1] |= 1u64 << (b - 1);
        self.adj[b - 1] |= 1u64 << (a - 1);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a - 1] >> (b - 1) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 1..=self.n {
            let higher = if i == MAX_VERTICES { 0 } else { self.adj[i - 1] & !((1u64 << i) - 1) };
            for j in VertexSet(higher).iter() {
                out.push((i, j));
            }
        }
        out
    }

    /// True if every two vertices of `s` are adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Connected components of `G[s]`, each sorted by smallest label.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = s.0;
        while rest != 0 {
            let comp = self.reach(rest & rest.wrapping_neg(), rest);
            out.push(VertexSet(comp));
            rest &= !comp;
        }
        out
    }

    /// Number of connected components of `G[s]`.
    pub fn component_count_within(&self, s: VertexSet) -> usize {
        let mut count = 0;
        let mut rest = s.0;
        while rest != 0 {
            let comp = self.reach(rest & rest.wrapping_neg(), rest);
            rest &= !comp;
            count += 1;
        }
        count
    }

    /// Vertices of `allowed` reachable from `seed` inside `G[allowed]`.
    #[inline]
    fn reach(&self, seed: u64, allowed: u64) -> u64 {
        let mut seen = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                next |= self.adj[i];
                f &= f - 1;
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        s.is_empty() || self.reach(s.0 & s.0.wrapping_neg(), s.0) == s.0
    }

    /// The partition of `1..=n` into connected components.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// `G[a]` relabelled order-preservingly to `1..=|a|`.
    pub fn induced_subgraph(&self, a: VertexSet) -> Result<InducedSubgraph> {
        self.check_set(a)?;
        let labels = a.to_vec();
        let mut adj = alloc::vec![0u64; labels.len()];
        for (new_i, &old_i) in labels.iter().enumerate() {
            for (new_j, &old_j) in labels.iter().enumerate() {
                if self.has_edge(old_i, old_j) {
                    adj[new_i] |= 1u64 << new_j;
                }
            }
        }
        Ok(InducedSubgraph { graph: Graph::from_adjacency(adj), labels })
    }

    /// `G \ v` on the original labels: `v` stays as an isolated vertex.
    pub fn delete_vertex_edges(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        let bit = 1u64 << (v - 1);
        g.adj[v - 1] = 0;
        for m in g.adj.iter_mut() {
            *m &= !bit;
        }
        Ok(g)
    }

    /// Join product: labels of `other` are shifted by `self.n()` and every
    /// vertex of `self` is joined to every vertex of `other`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        if self.n == 0 || other.n == 0 {
            return Err(Error::InvalidParameter("join requires two nonempty graphs".into()));
        }
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::full(g.n).0 & !left;
        for i in 0..g.n {
            g.adj[i] |= if i < self.n { right } else { left };
        }
        Ok(g)
    }

    /// Disjoint union with the labels of `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::InvalidParameter(alloc::format!(
                "at most {MAX_VERTICES} vertices are supported, got {n}"
            )));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph::from_adjacency(adj))
    }

    /// Complement graph on the same labels.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n).map(|i| full & !self.adj[i] & !(1u64 << i)).collect();
        Graph::from_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (a, b)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{{{a},{b}}}")?;
        }
        f.write_str("])")
    }
}

/// An induced subgraph together with its label map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[k]` is the original label of new vertex `k + 1`.
    pub labels: Vec<usize>,
}

impl InducedSubgraph {
    pub fn original_label(&self, new: usize) -> usize {
        self.labels[new - 1]
    }
}

/// The two sides of the crown graph on `2n` vertices: odd labels `X` and even
/// labels `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrownBipartition {
    pub x: VertexSet,
    pub y: VertexSet,
}

impl CrownBipartition {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || 2 * n > MAX_VERTICES {
            return Err(Error::InvalidParameter(alloc::format!(
                "crown bipartition needs 1 <= n <= {}",
                MAX_VERTICES / 2
            )));
        }
        let x = (1..=n).map(|i| 2 * i - 1).collect();
        let y = (1..=n).map(|i| 2 * i).collect();
        Ok(CrownBipartition { x, y })
    }
}
