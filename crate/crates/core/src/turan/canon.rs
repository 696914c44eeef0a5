//! Canonical labelling of small graphs given as adjacency bitmasks.
//!
//! The code of a vertex order is the upper triangle of the permuted adjacency
//! matrix read row by row, first pair most significant. The canonical code is
//! the largest code over the leaves of an individualization-refinement tree;
//! twin vertices (equal neighborhoods apart from each other) are tried once
//! per cell since swapping them is an automorphism.

use crate::pattern::bits;

/// Largest vertex count whose code fits in a `u64`.
pub const MAX_CANON_VERTICES: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canon {
    pub code: u64,
    /// `order[i]` is the vertex placed at position `i`.
    pub order: Vec<usize>,
}

/// The code of `adj` under the vertex order `order`.
pub fn code_of(adj: &[u64], order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        let row = adj[order[i]];
        for &w in &order[i + 1..] {
            code = (code << 1) | ((row >> w) & 1);
        }
    }
    code
}

/// Adjacency masks of the graph on vertices `0..n` with the given code.
pub fn graph_from_code(n: usize, code: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    let mut bit = n * (n.saturating_sub(1)) / 2;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if (code >> bit) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Canonical code and order of the graph. Panics beyond [`MAX_CANON_VERTICES`].
pub fn canonical_form(adj: &[u64]) -> Canon {
    let n = adj.len();
    assert!(n <= MAX_CANON_VERTICES, "canonical form supports at most {MAX_CANON_VERTICES} vertices");
    if n == 0 {
        return Canon { code: 0, order: Vec::new() };
    }
    let twins = twin_masks(adj);
    let mut best: Option<Canon> = None;
    search(adj, &twins, vec![(1u64 << n) - 1], &mut best);
    best.expect("search reaches a leaf")
}

pub fn canonical_code(adj: &[u64]) -> u64 {
    canonical_form(adj).code
}

fn twin_masks(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    let mut twins = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            let mask = !((1u64 << u) | (1u64 << v));
            if adj[u] & mask == adj[v] & mask {
                twins[u] |= 1 << v;
                twins[v] |= 1 << u;
            }
        }
    }
    twins
}

/// Splits cells by neighbor counts into every cell until the ordered
/// partition is equitable.
fn refine(adj: &[u64], mut cells: Vec<u64>) -> Vec<u64> {
    loop {
        let k = cells.len();
        let mut next = Vec::with_capacity(adj.len());
        for &cell in &cells {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut sigs: Vec<(u64, usize)> = bits(cell)
                .map(|v| {
                    let sig = cells.iter().fold(0u64, |acc, &c| (acc << 4) | u64::from((adj[v] & c).count_ones()));
                    (sig, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut i = 0;
            while i < sigs.len() {
                let mut mask = 0u64;
                let mut j = i;
                while j < sigs.len() && sigs[j].0 == sigs[i].0 {
                    mask |= 1 << sigs[j].1;
                    j += 1;
                }
                next.push(mask);
                i = j;
            }
        }
        cells = next;
        if cells.len() == k {
            return cells;
        }
    }
}

fn search(adj: &[u64], twins: &[u64], cells: Vec<u64>, best: &mut Option<Canon>) {
    let cells = refine(adj, cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.count_ones() > 1)
        .min_by_key(|(i, c)| (c.count_ones(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = code_of(adj, &order);
        if best.as_ref().is_none_or(|b| code > b.code) {
            *best = Some(Canon { code, order });
        }
        return;
    };
    let cell = cells[t];
    let mut tried = 0u64;
    for v in bits(cell) {
        if twins[v] & tried != 0 {
            continue;
        }
        tried |= 1 << v;
        let mut split = Vec::with_capacity(cells.len() + 1);
        split.extend_from_slice(&cells[..t]);
        split.push(1 << v);
        split.push(cell & !(1 << v));
        split.extend_from_slice(&cells[t + 1..]);
        search(adj, twins, split, best);
    }
}

/// Permutes `adj` so that vertex `order[i]` becomes `i`.
pub fn apply_order(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut out = vec![0u64; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        for w in bits(adj[v]) {
            out[i] |= 1 << pos[w];
        }
    }
    out
}
