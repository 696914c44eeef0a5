//! Two vertex-disjoint paths via unit-capacity max flow with split vertices.

use std::collections::VecDeque;

/// Two vertex-disjoint paths, each from a `sources` vertex to a `sinks`
/// vertex, whose inner vertices are all `internal`. Only edges accepted by
/// `edge_ok` (called with `u < v`) are used. Paths are listed source first.
pub(crate) fn two_disjoint_paths(
    adj: &[Vec<usize>],
    sources: &[bool],
    sinks: &[bool],
    internal: &[bool],
    edge_ok: &dyn Fn(usize, usize) -> bool,
) -> Option<[Vec<usize>; 2]> {
    let n = adj.len();
    let (s, t) = (2 * n, 2 * n + 1);
    let size = 2 * n + 2;
    let mut cap = vec![vec![0i32; size]; size];
    let vin = |v: usize| 2 * v;
    let vout = |v: usize| 2 * v + 1;
    for v in 0..n {
        if sources[v] {
            cap[s][vin(v)] = 1;
            cap[vin(v)][vout(v)] = 1;
        } else if internal[v] {
            cap[vin(v)][vout(v)] = 1;
        }
        if sinks[v] && !sources[v] {
            cap[vin(v)][t] = 1;
        }
    }
    for u in 0..n {
        if !(sources[u] || internal[u]) {
            continue;
        }
        for &w in &adj[u] {
            if !edge_ok(u.min(w), u.max(w)) || sources[w] {
                continue;
            }
            if internal[w] || sinks[w] {
                cap[vout(u)][vin(w)] = 1;
            }
        }
    }
    let mut flow = vec![vec![0i32; size]; size];
    for _ in 0..2 {
        let mut prev = vec![usize::MAX; size];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for y in 0..size {
                if prev[y] == usize::MAX && cap[x][y] - flow[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            return None;
        }
        let mut y = t;
        while y != s {
            let x = prev[y];
            flow[x][y] += 1;
            flow[y][x] -= 1;
            y = x;
        }
    }
    let mut paths: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if flow[s][vin(start)] != 1 {
            continue;
        }
        let mut path = vec![start];
        let mut node = vout(start);
        loop {
            let next = (0..size).find(|&y| flow[node][y] > 0).expect("flow is conserved");
            if next == t {
                break;
            }
            flow[node][next] -= 1;
            let v = next / 2;
            path.push(v);
            if sinks[v] && flow[next][t] > 0 {
                break;
            }
            node = vout(v);
        }
        paths.push(path);
    }
    let [p, q]: [Vec<usize>; 2] = paths.try_into().ok()?;
    Some([p, q])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_has_two_paths() {
        // 0-1-2 top row, 3-4-5 bottom row, rungs 0-3, 1-4, 2-5
        let adj = vec![vec![1, 3], vec![0, 2, 4], vec![1, 5], vec![0, 4], vec![3, 5, 1], vec![4, 2]];
        let sources = [true, false, false, true, false, false];
        let sinks = [false, false, true, false, false, true];
        let internal = [false, true, false, false, true, false];
        let [p, q] = two_disjoint_paths(&adj, &sources, &sinks, &internal, &|_, _| true).unwrap();
        assert_eq!(p, vec![0, 1, 2]);
        assert_eq!(q, vec![3, 4, 5]);
        let blocked = [false, true, false, false, false, false];
        assert!(two_disjoint_paths(&adj, &sources, &sinks, &blocked, &|_, _| true).is_none());
    }
}
