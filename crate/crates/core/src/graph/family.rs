use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Graph, MAX_VERTICES};
use crate::{Error, Result};

/// Named graph families with their canonical labelling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// `C_{n,n}` on `[2n]`: edges `{2i-1, 2j}` for `i != j`.
    Crown(usize),
    /// `C_n` with edges `{i, i+1}` and `{1, n}`.
    Cycle(usize),
    /// `P_n` with edges `{i, i+1}`.
    Path(usize),
    Complete(usize),
    /// Join of empty graphs; parts are labelled consecutively.
    CompleteMultipartite(Vec<usize>),
    Empty(usize),
    /// Cone over `C_n`; the apex is vertex 1 and the rim is `2..=n+1`.
    Wheel(usize),
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let g = match *self {
            Family::Crown(n) => {
                let mut edges = Vec::with_capacity(n * (n - 1));
                for i in 1..=n {
                    for j in 1..=n {
                        if i != j {
                            edges.push((2 * i - 1, 2 * j));
                        }
                    }
                }
                Graph::from_edges_lenient(2 * n, edges)
            }
            Family::Cycle(n) => Graph::from_edges_lenient(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)])),
            Family::Path(n) => Graph::from_edges_lenient(n, (1..n).map(|i| (i, i + 1))),
            Family::Complete(n) => {
                let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
                Graph::from_edges_lenient(n, edges)
            }
            Family::CompleteMultipartite(ref parts) => {
                let mut g = Graph::empty(parts[0])?;
                for &p in &parts[1..] {
                    g = g.join(&Graph::empty(p)?)?;
                }
                g
            }
            Family::Empty(n) => Graph::empty(n)?,
            Family::Wheel(n) => Graph::empty(1)?.join(&Family::Cycle(n).generate()?)?,
        };
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidParameter(msg));
        let nv = self.vertex_count();
        match *self {
            Family::Crown(n) if n < 2 => return fail(alloc::format!("crown requires n >= 2, got {n}")),
            Family::Cycle(n) if n < 3 => return fail(alloc::format!("cycle requires n >= 3, got {n}")),
            Family::Wheel(n) if n < 3 => {
                return fail(alloc::format!("wheel requires a rim cycle with n >= 3, got {n}"))
            }
            Family::Path(n) | Family::Complete(n) | Family::Empty(n) if n < 1 => {
                return fail(alloc::format!("{} requires n >= 1, got {n}", self.name()))
            }
            Family::CompleteMultipartite(ref parts) => {
                if parts.len() < 2 {
                    return fail("complete multipartite graph requires at least 2 parts".into());
                }
                if parts.contains(&0) {
                    return fail("every part of a complete multipartite graph needs size >= 1".into());
                }
            }
            _ => {}
        }
        if nv > MAX_VERTICES {
            return fail(alloc::format!("at most {MAX_VERTICES} vertices are supported, got {nv}"));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Family::Crown(n) => 2 * n,
            Family::Cycle(n) | Family::Path(n) | Family::Complete(n) | Family::Empty(n) => n,
            Family::CompleteMultipartite(ref parts) => parts.iter().sum(),
            Family::Wheel(n) => n + 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Crown(_) => "crown",
            Family::Cycle(_) => "cycle",
            Family::Path(_) => "path",
            Family::Complete(_) => "complete",
            Family::CompleteMultipartite(_) => "multipartite",
            Family::Empty(_) => "empty",
            Family::Wheel(_) => "wheel",
        }
    }

    /// Warning for parameters that are accepted but fall outside the range
    /// where the crown graph results apply.
    pub fn caveat(&self) -> Option<&'static str> {
        match self {
            Family::Crown(2) => Some("crown n=2 is the graph 2K_2; the crown graph results assume n >= 3"),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::CompleteMultipartite(parts) => {
                f.write_str("multipartite ")?;
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Family::Crown(n)
            | Family::Cycle(n)
            | Family::Path(n)
            | Family::Complete(n)
            | Family::Empty(n)
            | Family::Wheel(n) => write!(f, "{} {n}", self.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn crown3_edges() {
        let g = Family::Crown(3).generate().unwrap();
        assert_eq!(g.edges(), vec![(1, 4), (1, 6), (2, 3), (2, 5), (3, 6), (4, 5)]);
    }

    #[test]
    fn crown5_is_4_regular() {
        let g = Family::Crown(5).generate().unwrap();
        assert_eq!(g.edge_count(), 20);
        assert!((1..=10).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn crown_structure() {
        for n in 2..=7 {
            let g = Family::Crown(n).generate().unwrap();
            let parts = super::super::CrownBipartition::new(n).unwrap();
            assert_eq!(g.edge_count(), n * (n - 1));
            assert!((1..=2 * n).all(|v| g.degree(v) == n - 1));
            for (a, b) in g.edges() {
                assert!(parts.x.contains(a) != parts.x.contains(b));
            }
            assert_eq!(parts.x.union(parts.y), g.vertices());
            assert!(parts.x.intersection(parts.y).is_empty());
        }
    }

    #[test]
    fn cycle4_edges() {
        let g = Family::Cycle(4).generate().unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 4), (2, 3), (3, 4)]);
    }

    #[test]
    fn parameter_minimums() {
        for bad in [
            Family::Crown(1),
            Family::Cycle(2),
            Family::Path(0),
            Family::Complete(0),
            Family::Empty(0),
            Family::CompleteMultipartite(vec![3]),
            Family::CompleteMultipartite(vec![2, 0]),
        ] {
            assert!(matches!(bad.generate(), Err(Error::InvalidParameter(_))), "{bad:?}");
        }
        assert!(Family::Crown(2).caveat().is_some());
        assert_eq!(Family::Crown(2).generate().unwrap().components().len(), 2);
    }

    #[test]
    fn multipartite_labels_parts_consecutively() {
        let g = Family::CompleteMultipartite(vec![2, 3]).generate().unwrap();
        assert!(!g.has_edge(1, 2));
        assert!(!g.has_edge(3, 5));
        assert!(g.has_edge(2, 3));
        assert_eq!(g.edge_count(), 6);
    }
}
