//! Naive reference detectors: enumerate vertex subsets and their orderings.

use super::BitGraph;

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut dyn FnMut(&[usize])) {
    fn go(items: &mut Vec<usize>, i: usize, out: &mut dyn FnMut(&[usize])) {
        if i == items.len() {
            out(items);
            return;
        }
        for j in i..items.len() {
            items.swap(i, j);
            go(items, i + 1, out);
            items.swap(i, j);
        }
    }
    debug_assert_eq!(items.len(), k);
    go(items, 0, out);
}

/// Every ordered vertex sequence of length `k` that closes into a cycle.
fn cycles(g: &BitGraph, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        permutations(&mut vs, k, &mut |p| {
            if (0..k).all(|i| g.has_edge(p[i], p[(i + 1) % k])) {
                out.push(p.to_vec());
            }
        });
    }
    out
}

pub fn has_cycle(g: &BitGraph, k: usize) -> bool {
    !cycles(g, k).is_empty()
}

/// Lexicographically least sequence among cycles of length `k`.
pub fn first_cycle(g: &BitGraph, k: usize) -> Option<Vec<usize>> {
    cycles(g, k).into_iter().min()
}

pub fn has_theta(g: &BitGraph, k: usize, d: usize) -> bool {
    cycles(g, k).iter().any(|c| (0..k).any(|i| g.has_edge(c[i], c[(i + d) % k])))
}

pub fn circumference(g: &BitGraph) -> Option<usize> {
    (3..=g.n()).rev().find(|&k| has_cycle(g, k))
}

pub fn girth(g: &BitGraph) -> Option<usize> {
    (3..=g.n()).find(|&k| has_cycle(g, k))
}
