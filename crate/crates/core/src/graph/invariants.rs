use super::{Combinations, Graph, VertexSet};
use crate::{Error, Result};

/// Vertices whose removal increases the number of connected components.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let base = g.component_count_within(all);
    all.iter().filter(|&v| g.component_count_within(all.without(v)) > base).collect()
}

/// `G_v`: the graph with the neighbourhood of `v` completed to a clique.
pub fn local_completion(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let nbhd = g.neighbors(v);
    let mut adj = g.adj.clone();
    for u in nbhd.iter() {
        adj[u - 1] |= nbhd.without(u).bits();
    }
    Ok(Graph::from_adjacency(adj))
}

/// True when `v` lies in more than one maximal clique.
///
/// A vertex lies in exactly one maximal clique iff its closed neighbourhood is
/// a clique, i.e. iff `N(v)` is a clique; so this is the same as `v` not being
/// simplicial. Isolated vertices are free.
pub fn is_internal_vertex(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(!g.is_clique(g.neighbors(v)))
}

/// Exact vertex connectivity by ascending exhaustive search over removal
/// sets. `K_n` gets `n - 1`.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return Err(Error::Domain("vertex connectivity is defined for connected graphs".into()));
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    let all = g.vertices();
    for k in 0..n {
        for removed in Combinations::new(all, k) {
            if !g.is_connected_within(all.difference(removed)) {
                return Ok(k);
            }
        }
    }
    unreachable!("a non-complete graph has a separating set")
}

/// First minimum connected dominating set, searching by size and then
/// lexicographically.
pub fn minimum_connected_dominating_set(g: &Graph) -> Result<VertexSet> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return Err(Error::Domain("connected domination is defined for connected graphs".into()));
    }
    let all = g.vertices();
    for k in 1..=n {
        for d in Combinations::new(all, k) {
            let closed = d.iter().fold(d, |acc, v| acc.union(g.neighbors(v)));
            if closed == all && g.is_connected_within(d) {
                return Ok(d);
            }
        }
    }
    unreachable!("the full vertex set of a connected graph dominates")
}

/// `γ_c(G)`, the size of a smallest connected dominating set.
pub fn connected_domination_number(g: &Graph) -> Result<usize> {
    minimum_connected_dominating_set(g).map(VertexSet::len)
}
