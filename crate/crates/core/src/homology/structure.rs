//! Closed forms for `pd(S/J_G)` on known families, and the join and
//! `D_5`-type predicates that govern the top values `2n - 4` and `2n - 5`.

use alloc::format;
use alloc::vec::Vec;

use crate::graph::{Combinations, Graph, VertexSet};
use crate::{Error, Result};

/// Graph families with a known projective dimension of `S/J_G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PdFamily {
    /// A connected block graph on `n` vertices: `n - 1`.
    Block(usize),
    /// The cycle `C_n`, `n >= 4`: `n`.
    Cycle(usize),
    /// The cone over a graph on `n` vertices whose own `pd` is `base_pd`:
    /// `2 + base_pd` if the base is connected, otherwise
    /// `max(n, 2 + base_pd)`.
    Cone { n: usize, connected: bool, base_pd: usize },
    /// The wheel over `C_n`, `n >= 4`: `n + 2`.
    Wheel(usize),
    /// `K_{n_1, ..., n_k}` with every part of size at least 2:
    /// `2(n_2 + ... + n_k) + n_1 - 2` for `n_1 <= ... <= n_k`.
    CompleteMultipartite(Vec<usize>),
    /// The crown graph `C_{n,n}`, `n >= 3`: `4n - 6`.
    Crown(usize),
    /// A graph on `n >= 4` vertices of maximal projective dimension
    /// (a join with two non-adjacent vertices): `2n - 4`.
    MaxPd(usize),
}

/// The projective dimension predicted for `family`, after checking the
/// family's hypotheses.
pub fn pd_closed_form(family: &PdFamily) -> Result<usize> {
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("closed form hypothesis violated: {what}")))
        }
    };
    match family {
        PdFamily::Block(n) => {
            need(*n >= 1, "block graphs need a vertex")?;
            Ok(n - 1)
        }
        PdFamily::Cycle(n) => {
            need(*n >= 4, "cycles need n >= 4")?;
            Ok(*n)
        }
        PdFamily::Cone { n, connected, base_pd } => {
            need(*n >= 1, "cones need a nonempty base")?;
            Ok(if *connected { 2 + base_pd } else { (*n).max(2 + base_pd) })
        }
        PdFamily::Wheel(n) => {
            need(*n >= 4, "wheels need a rim cycle with n >= 4")?;
            Ok(n + 2)
        }
        PdFamily::CompleteMultipartite(parts) => {
            need(parts.len() >= 2, "at least two parts")?;
            need(parts.iter().all(|&p| p >= 2), "every part needs at least two vertices")?;
            let mut parts = parts.clone();
            parts.sort_unstable();
            Ok(2 * parts[1..].iter().sum::<usize>() + parts[0] - 2)
        }
        PdFamily::Crown(n) => {
            need(*n >= 3, "crowns need n >= 3")?;
            Ok(4 * n - 6)
        }
        PdFamily::MaxPd(n) => {
            need(*n >= 4, "maximal projective dimension needs n >= 4")?;
            Ok(2 * n - 4)
        }
    }
}

/// True if `s` is adjacent to every vertex outside `s`.
fn joined_to_rest(g: &Graph, s: VertexSet) -> bool {
    let rest = g.vertices().difference(s);
    s.iter().all(|v| rest.is_subset(g.neighbors(v)))
}

/// True if `G = H * 2K_1`: two non-adjacent vertices adjacent to all others.
pub fn is_join_with_2k1(g: &Graph) -> bool {
    pairs(g).any(|(u, w)| !g.has_edge(u, w) && joined_to_rest(g, VertexSet::EMPTY.with(u).with(w)))
}

fn pairs(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = g.n();
    (1..=n).flat_map(move |u| (u + 1..=n).map(move |w| (u, w)))
}

/// Membership in the family `𝒢_T` for some `T`: non-adjacent `u, w` with
/// `N(u) ∪ N(w) = V \ {u, w}` such that, with `V_0 = N(u) ∩ N(w)`,
/// `V_1 = N(u) \ V_0` and `V_2 = N(w) \ V_0`, both `V_1` and `V_2` are
/// nonempty and every `V_1`–`V_2` pair is an edge.
pub fn in_family_gt(g: &Graph) -> bool {
    pairs(g).any(|(u, w)| {
        if g.has_edge(u, w) {
            return false;
        }
        let (nu, nw) = (g.neighbors(u), g.neighbors(w));
        let rest = g.vertices().without(u).without(w);
        if nu.union(nw) != rest {
            return false;
        }
        let v0 = nu.intersection(nw);
        let (v1, v2) = (nu.difference(v0), nw.difference(v0));
        !v1.is_empty() && !v2.is_empty() && v1.iter().all(|a| v2.is_subset(g.neighbors(a)))
    })
}

fn triples(g: &Graph) -> Combinations {
    Combinations::new(g.vertices(), 3)
}

/// `G = H * 3K_1` for some `H`.
fn is_join_with_3k1(g: &Graph) -> bool {
    triples(g).any(|s| g.component_count_within(s) == 3 && joined_to_rest(g, s))
}

/// `G = H * (K_1 ⊔ K_2)` for some `H`.
fn is_join_with_k1_k2(g: &Graph) -> bool {
    triples(g).any(|s| {
        let edges = s.iter().map(|v| g.neighbors(v).intersection(s).len()).sum::<usize>() / 2;
        edges == 1 && joined_to_rest(g, s)
    })
}

/// `D_5`-type: not a join with `2K_1`, and either in `𝒢_T` for some `T` or a
/// join with `3K_1` or with `K_1 ⊔ K_2`.
pub fn is_d5_type(g: &Graph) -> Result<bool> {
    if g.n() < 4 {
        return Err(Error::Precondition(format!("D5-type needs at least 4 vertices, got {}", g.n())));
    }
    Ok(!is_join_with_2k1(g) && (in_family_gt(g) || is_join_with_3k1(g) || is_join_with_k1_k2(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn gen(f: Family) -> Graph {
        f.generate().unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(pd_closed_form(&PdFamily::Crown(4)).unwrap(), 10);
        assert_eq!(pd_closed_form(&PdFamily::CompleteMultipartite(alloc::vec![2, 2])).unwrap(), 4);
        assert_eq!(pd_closed_form(&PdFamily::CompleteMultipartite(alloc::vec![3, 2])).unwrap(), 6);
        assert_eq!(pd_closed_form(&PdFamily::Wheel(5)).unwrap(), 7);
        assert_eq!(pd_closed_form(&PdFamily::Block(4)).unwrap(), 3);
        assert_eq!(pd_closed_form(&PdFamily::Cone { n: 6, connected: false, base_pd: 2 }).unwrap(), 6);
        assert!(pd_closed_form(&PdFamily::Cycle(3)).is_err());
        assert!(pd_closed_form(&PdFamily::CompleteMultipartite(alloc::vec![1, 3])).is_err());
    }

    #[test]
    fn joins_with_2k1() {
        assert!(is_join_with_2k1(&gen(Family::CompleteMultipartite(alloc::vec![2, 2]))));
        assert!(!is_join_with_2k1(&gen(Family::Cycle(5))));
        for n in 3..=5 {
            assert!(!is_join_with_2k1(&gen(Family::Crown(n))));
        }
    }

    #[test]
    fn d5_examples() {
        assert!(is_d5_type(&gen(Family::Path(4))).unwrap());
        assert!(!is_d5_type(&gen(Family::Complete(5))).unwrap());
        for n in 3..=5 {
            assert!(!is_d5_type(&gen(Family::Crown(n))).unwrap());
        }
        // K_1 ⊔ K_2 joined with a vertex
        let paw = Graph::new(4, [(1, 2), (1, 3), (1, 4), (3, 4)]).unwrap();
        assert!(is_join_with_k1_k2(&paw));
        assert!(is_join_with_3k1(&gen(Family::CompleteMultipartite(alloc::vec![3, 1]))));
        // u = 1, w = 3 with V_0 = {2}, V_1 = {5}, V_2 = {4}
        assert!(is_d5_type(&gen(Family::Cycle(5))).unwrap());
        assert!(!is_d5_type(&gen(Family::Cycle(6))).unwrap());
        assert!(is_d5_type(&gen(Family::Path(3))).is_err());
    }
}
