//! Connectivity on plain adjacency lists: components, vertex cuts, blocks.

use std::collections::VecDeque;

use super::plane::PlaneGraph;

/// Connected components of the graph with `removed` vertices deleted.
/// Components are sorted internally and ordered by their least vertex.
pub fn components_without(adj: &[Vec<usize>], removed: &[bool]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if removed[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !removed[w] && comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn is_connected_without(adj: &[Vec<usize>], removed: &[bool]) -> bool {
    components_without(adj, removed).len() <= 1
}

/// All vertex subsets of `size` (1 or 2) whose removal disconnects `g`,
/// in lexicographic order.
pub fn cuts(g: &PlaneGraph, size: usize) -> Vec<Vec<usize>> {
    assert!(size == 1 || size == 2, "cut size must be 1 or 2");
    let adj = g.rotations();
    let n = adj.len();
    let mut removed = vec![false; n];
    let mut out = Vec::new();
    if size == 1 {
        for v in 0..n {
            removed[v] = true;
            if components_without(adj, &removed).len() > 1 {
                out.push(vec![v]);
            }
            removed[v] = false;
        }
    } else {
        for a in 0..n {
            removed[a] = true;
            for b in a + 1..n {
                removed[b] = true;
                if components_without(adj, &removed).len() > 1 {
                    out.push(vec![a, b]);
                }
                removed[b] = false;
            }
            removed[a] = false;
        }
    }
    out
}

/// Biconnected components as edge lists (`(u, v)` with `u < v`, sorted),
/// ordered by their least edge. Vertices flagged in `removed` are ignored.
pub fn blocks(adj: &[Vec<usize>], removed: &[bool]) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        removed: &'a [bool],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(st: &mut State<'_>, u: usize, parent: usize) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        for i in 0..st.adj[u].len() {
            let w = st.adj[u][i];
            if st.removed[w] || w == parent {
                continue;
            }
            if st.disc[w] == 0 {
                st.stack.push((u, w));
                dfs(st, w, u);
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = st.stack.pop() {
                        block.push((a.min(b), a.max(b)));
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    st.out.push(block);
                }
            } else if st.disc[w] < st.disc[u] {
                st.stack.push((u, w));
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
    }
    let n = adj.len();
    let mut st = State {
        adj,
        removed,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for (s, &gone) in removed.iter().enumerate() {
        if !gone && st.disc[s] == 0 {
            dfs(&mut st, s, usize::MAX);
        }
    }
    let mut out = st.out;
    out.sort();
    out
}

/// Cut vertices of the graph with `removed` vertices deleted, ascending.
pub fn cut_vertices(adj: &[Vec<usize>], removed: &[bool]) -> Vec<usize> {
    let n = adj.len();
    let mut count = vec![0usize; n];
    for block in blocks(adj, removed) {
        let mut vs: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
        vs.sort_unstable();
        vs.dedup();
        for v in vs {
            count[v] += 1;
        }
    }
    (0..n).filter(|&v| count[v] > 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> PlaneGraph {
        PlaneGraph::new(
            vec![vec![1, 2], vec![2, 0], vec![0, 1, 3, 4], vec![4, 2], vec![2, 3]],
            None,
        )
        .unwrap()
    }

    #[test]
    fn bowtie_cut() {
        let g = bowtie();
        assert_eq!(cuts(&g, 1), vec![vec![2]]);
        assert_eq!(cut_vertices(g.rotations(), &[false; 5]), vec![2]);
        assert_eq!(blocks(g.rotations(), &[false; 5]).len(), 2);
    }

    #[test]
    fn four_cycle_two_cuts() {
        let g = PlaneGraph::new(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]], None).unwrap();
        assert!(cuts(&g, 1).is_empty());
        assert_eq!(cuts(&g, 2), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn k4_no_cuts() {
        let g = PlaneGraph::new(
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            None,
        )
        .unwrap();
        assert!(cuts(&g, 1).is_empty());
        assert!(cuts(&g, 2).is_empty());
        assert_eq!(blocks(g.rotations(), &[false; 4]).len(), 1);
    }

    #[test]
    fn path_blocks_are_edges() {
        let adj = vec![vec![1], vec![0, 2], vec![1]];
        assert_eq!(blocks(&adj, &[false; 3]), vec![vec![(0, 1)], vec![(1, 2)]]);
        assert_eq!(cut_vertices(&adj, &[false; 3]), vec![1]);
    }
}
