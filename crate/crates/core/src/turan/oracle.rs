//! Slow reference implementations for cross-checking the search:
//! minor-based planarity, canonical codes over every vertex order, and the
//! filter-all-graphs class enumeration.

use super::canon::{code_of, graph_from_code};
use crate::pattern::{bits, BitGraph};

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Largest code over all `n!` vertex orders.
pub fn brute_canonical_code(adj: &[u64]) -> u64 {
    let mut p: Vec<usize> = (0..adj.len()).collect();
    let mut best = code_of(adj, &p);
    while next_permutation(&mut p) {
        best = best.max(code_of(adj, &p));
    }
    best
}

/// Whether the identity order already gives the largest code.
fn is_max_code(adj: &[u64], code: u64) -> bool {
    let mut p: Vec<usize> = (0..adj.len()).collect();
    while next_permutation(&mut p) {
        if code_of(adj, &p) > code {
            return false;
        }
    }
    true
}

fn contains_k5_or_k33(adj: &[u64]) -> bool {
    let n = adj.len();
    for mask in 0u64..1 << n {
        match mask.count_ones() {
            5 => {
                if bits(mask).all(|v| (adj[v] | 1 << v) & mask == mask) {
                    return true;
                }
            }
            6 => {
                let vs: Vec<usize> = bits(mask).collect();
                for side in 0u32..1 << 6 {
                    if side.count_ones() != 3 || side & 1 == 0 {
                        continue;
                    }
                    let (a, b): (Vec<usize>, Vec<usize>) =
                        (0..6).partition(|&i| side >> i & 1 == 1);
                    if a.iter().all(|&i| b.iter().all(|&j| adj[vs[i]] >> vs[j] & 1 == 1)) {
                        return true;
                    }
                }
            }
            _ => {}
        }
    }
    false
}

fn delete_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    let squeeze = |m: u64| (m & ((1 << v) - 1)) | ((m >> (v + 1)) << v);
    adj.iter().enumerate().filter(|&(u, _)| u != v).map(|(_, &m)| squeeze(m)).collect()
}

fn contract(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut g = adj.to_vec();
    let merged = (g[u] | g[v]) & !(1 << u | 1 << v);
    g[u] = merged;
    for w in bits(merged) {
        g[w] |= 1 << u;
    }
    delete_vertex(&g, v)
}

/// A graph is planar iff it has neither `K5` nor `K3,3` as a minor. Every
/// minor on fewer vertices is reached by deleting or contracting once.
fn has_kuratowski_minor(adj: &[u64]) -> bool {
    if contains_k5_or_k33(adj) {
        return true;
    }
    let n = adj.len();
    if n <= 5 {
        return false;
    }
    for v in 0..n {
        if has_kuratowski_minor(&delete_vertex(adj, v)) {
            return true;
        }
        for w in bits(adj[v] & !((1u64 << (v + 1)) - 1)) {
            if has_kuratowski_minor(&contract(adj, v, w)) {
                return true;
            }
        }
    }
    false
}

pub fn is_planar_by_minors(n: usize, edges: &[(usize, usize)]) -> bool {
    !has_kuratowski_minor(BitGraph::from_edges(n, edges).masks())
}

/// Every connected planar graph on `n` vertices up to isomorphism, as
/// sorted brute-force codes, by filtering all `2^(n choose 2)` labelled graphs.
pub fn planar_classes_naive(n: usize) -> Vec<u64> {
    let pairs = n * (n - 1) / 2;
    let mut out = Vec::new();
    for code in 0u64..1 << pairs {
        let adj = graph_from_code(n, code);
        if !BitGraph::from_masks(adj.clone()).is_connected() || !is_max_code(&adj, code) {
            continue;
        }
        if !has_kuratowski_minor(&adj) {
            out.push(code);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_counts_small() {
        let counts: Vec<usize> = (1..=5).map(|n| planar_classes_naive(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 20]);
    }
}
