use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{Graph, VertexSet};

/// The `k`-element subsets of a vertex set in lexicographic order of their
/// sorted label lists.
pub struct Combinations {
    pool: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(pool: VertexSet, k: usize) -> Self {
        let pool = pool.to_vec();
        let done = k > pool.len();
        Combinations { idx: (0..k).collect(), pool, done }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.pool[i]).collect();
        // advance to the next index tuple
        let (n, k) = (self.pool.len(), self.idx.len());
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// One representative of every isomorphism class of connected graphs on `n`
/// vertices, in a deterministic order. Brute force; intended for `n <= 7`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "exhaustive graph enumeration is limited to 10 vertices");
    if n == 0 {
        return Vec::new();
    }
    let mut classes: BTreeSet<u64> = BTreeSet::new();
    classes.insert(0); // the single vertex
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &classes {
            let base = decode(m - 1, code);
            for nbhd in 0u64..(1 << (m - 1)) {
                let mut adj = base.clone();
                adj.push(nbhd);
                for (i, a) in adj.iter_mut().enumerate().take(m - 1) {
                    if nbhd >> i & 1 == 1 {
                        *a |= 1 << (m - 1);
                    }
                }
                next.insert(canonical_code(&adj));
            }
        }
        classes = next;
    }
    classes.into_iter().map(|c| Graph::from_adjacency(decode(n, c))).filter(Graph::is_connected).collect()
}

fn decode(n: usize, code: u64) -> Vec<u64> {
    let mut adj = alloc::vec![0u64; n];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    adj
}

fn encode(adj: &[u64], order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Minimum edge code over all vertex orders that list vertices by
/// non-increasing degree. Isomorphic graphs share this code.
fn canonical_code(adj: &[u64]) -> u64 {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(adj[v].count_ones()));
    // blocks of equal degree
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || adj[order[i]].count_ones() != adj[order[start]].count_ones() {
            blocks.push((start, i));
            start = i;
        }
    }
    let mut best = u64::MAX;
    permute_blocks(adj, &mut order, &blocks, 0, &mut best);
    best
}

fn permute_blocks(adj: &[u64], order: &mut [usize], blocks: &[(usize, usize)], b: usize, best: &mut u64) {
    if b == blocks.len() {
        *best = (*best).min(encode(adj, order));
        return;
    }
    let (lo, hi) = blocks[b];
    heap_permute(adj, order, blocks, b, lo, hi - lo, best);
}

// Heap's algorithm over order[lo..lo + k], recursing into the next block at each leaf.
#[allow(clippy::too_many_arguments)]
fn heap_permute(
    adj: &[u64],
    order: &mut [usize],
    blocks: &[(usize, usize)],
    b: usize,
    lo: usize,
    k: usize,
    best: &mut u64,
) {
    if k <= 1 {
        permute_blocks(adj, order, blocks, b + 1, best);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(adj, order, blocks, b, lo, k - 1, best);
        if k.is_multiple_of(2) {
            order.swap(lo + i, lo + k - 1);
        } else {
            order.swap(lo, lo + k - 1);
        }
    }
    heap_permute(adj, order, blocks, b, lo, k - 1, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn combinations_are_lexicographic() {
        let pool = VertexSet::from_labels([1, 2, 3, 4]).unwrap();
        let got: Vec<Vec<usize>> = Combinations::new(pool, 2).map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(Combinations::new(pool, 0).count(), 1);
        assert_eq!(Combinations::new(pool, 5).count(), 0);
        assert_eq!(Combinations::new(VertexSet::full(10), 4).count(), 210);
    }

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349
        let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }
}
