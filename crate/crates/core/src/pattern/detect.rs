//! Exact exponential-time detectors on [`BitGraph`]s.
//!
//! Every search roots cycles at their least vertex and walks neighbors in
//! ascending order, so the first witness found is the lexicographically
//! least rotation/reflection representative among those visited first.

use super::bitgraph::{bits, low_mask, BitGraph};
use super::ThetaWitness;
use crate::budget::{Budget, BudgetExceeded};

type Found<T> = Result<Option<T>, BudgetExceeded>;

struct CycleSearch<'a> {
    g: &'a BitGraph,
    root: usize,
    allowed: u64,
    dist: Vec<u32>,
    path: Vec<usize>,
    budget: &'a mut Budget,
}

/// A cycle with exactly `k` vertices, if any.
pub fn cycle_of_length(g: &BitGraph, k: usize, budget: &mut Budget) -> Found<Vec<usize>> {
    if k < 3 || k > g.n() {
        return Ok(None);
    }
    let mut found = None;
    for_each_cycle(g, k, budget, &mut |c| {
        found = Some(c.to_vec());
        true
    })?;
    Ok(found)
}

/// Calls `visit` once per `k`-cycle (one orientation, rooted at its least
/// vertex) until it returns `true`. Returns whether the visit stopped early.
pub fn for_each_cycle(
    g: &BitGraph,
    k: usize,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<bool, BudgetExceeded> {
    let n = g.n();
    if k < 3 || k > n {
        return Ok(false);
    }
    for root in 0..=n - k {
        if g.degree(root) < 2 {
            continue;
        }
        let allowed = g.all_mask() & !low_mask(root + 1);
        let dist = g.distances_to(root, allowed);
        let mut s = CycleSearch { g, root, allowed, dist, path: vec![root], budget };
        if exact_cycles(&mut s, 1u64 << root, k, visit)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn exact_cycles(
    s: &mut CycleSearch<'_>,
    visited: u64,
    k: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<bool, BudgetExceeded> {
    s.budget.tick()?;
    let u = *s.path.last().unwrap();
    let len = s.path.len();
    if len == k {
        if s.g.has_edge(u, s.root) && s.path[1] < u {
            return Ok(visit(&s.path));
        }
        return Ok(false);
    }
    // after adding w we still need k - len - 1 more vertices and the closing edge
    let slack = (k - len) as u32;
    for w in bits(s.g.adj(u) & s.allowed & !visited) {
        if s.dist[w] > slack {
            continue;
        }
        s.path.push(w);
        let stop = exact_cycles(s, visited | 1 << w, k, visit)?;
        s.path.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A path from `from` to `to` with exactly `edges` edges whose inner
/// vertices avoid `avoid`.
pub fn path_of_length(
    g: &BitGraph,
    from: usize,
    to: usize,
    edges: usize,
    avoid: u64,
    budget: &mut Budget,
) -> Found<Vec<usize>> {
    if from == to || edges == 0 {
        return Ok(None);
    }
    let avail = g.all_mask() & !avoid & !(1 << from) & !(1 << to);
    let dist = g.distances_to(to, avail);
    let mut path = vec![from];
    let ok = exact_path(g, to, edges, avail, &dist, &mut path, 1 << from, budget)?;
    Ok(ok.then_some(path))
}

#[allow(clippy::too_many_arguments)]
fn exact_path(
    g: &BitGraph,
    to: usize,
    edges: usize,
    avail: u64,
    dist: &[u32],
    path: &mut Vec<usize>,
    visited: u64,
    budget: &mut Budget,
) -> Result<bool, BudgetExceeded> {
    budget.tick()?;
    let u = *path.last().unwrap();
    let used = path.len() - 1;
    if used + 1 == edges {
        if g.has_edge(u, to) {
            path.push(to);
            return Ok(true);
        }
        return Ok(false);
    }
    let left = (edges - used - 1) as u32;
    for w in bits(g.adj(u) & avail & !visited) {
        if dist[w] > left {
            continue;
        }
        path.push(w);
        if exact_path(g, to, edges, avail, dist, path, visited | 1 << w, budget)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// A `k`-cycle with a chord between two vertices at cycle distance `d`.
pub fn theta(g: &BitGraph, k: usize, d: usize, budget: &mut Budget) -> Found<ThetaWitness> {
    if k < 4 || d < 2 || d > k / 2 || k > g.n() {
        return Ok(None);
    }
    if d == 2 {
        return theta_by_triangles(g, k, budget);
    }
    let mut found = None;
    for_each_cycle(g, k, budget, &mut |c| {
        for i in 0..k {
            let (a, b) = (c[i], c[(i + d) % k]);
            if g.has_edge(a, b) {
                found = Some(ThetaWitness { cycle: c.to_vec(), chord: (a, b) });
                return true;
            }
        }
        false
    })?;
    Ok(found)
}

/// θ_k search: a triangle `x apex y` plus an `x`-`y` path with `k - 2`
/// edges avoiding the apex.
fn theta_by_triangles(g: &BitGraph, k: usize, budget: &mut Budget) -> Found<ThetaWitness> {
    let n = g.n();
    for a in 0..n {
        for b in bits(g.adj(a) & !low_mask(a + 1)) {
            for c in bits(g.adj(a) & g.adj(b) & !low_mask(b + 1)) {
                for (apex, x, y) in [(a, b, c), (b, a, c), (c, a, b)] {
                    if let Some(path) = path_of_length(g, x, y, k - 2, 1 << apex, budget)? {
                        let mut cycle = Vec::with_capacity(k);
                        cycle.push(apex);
                        cycle.extend(path);
                        return Ok(Some(ThetaWitness { cycle, chord: (x, y) }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Longest cycle (branch and bound over simple paths). `None` if acyclic.
pub fn longest_cycle(g: &BitGraph, budget: &mut Budget) -> Found<Vec<usize>> {
    long_cycle(g, usize::MAX, budget)
}

/// Some cycle with at least `k` vertices, if one exists. Stops at the first
/// cycle reaching `k`.
pub fn cycle_at_least(g: &BitGraph, k: usize, budget: &mut Budget) -> Found<Vec<usize>> {
    let best = long_cycle(g, k.max(3), budget)?;
    Ok(best.filter(|c| c.len() >= k))
}

struct LongSearch<'a> {
    g: &'a BitGraph,
    root: usize,
    allowed: u64,
    path: Vec<usize>,
    best: Vec<usize>,
    target: usize,
    budget: &'a mut Budget,
}

fn long_cycle(g: &BitGraph, target: usize, budget: &mut Budget) -> Found<Vec<usize>> {
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    for root in 0..n {
        if n - root <= best.len() || best.len() >= target {
            break;
        }
        if g.degree(root) < 2 {
            continue;
        }
        let allowed = g.all_mask() & !low_mask(root + 1);
        let mut s = LongSearch {
            g,
            root,
            allowed,
            path: vec![root],
            best: std::mem::take(&mut best),
            target,
            budget,
        };
        long_dfs(&mut s, 1 << root)?;
        best = s.best;
    }
    Ok((!best.is_empty()).then_some(best))
}

fn long_dfs(s: &mut LongSearch<'_>, visited: u64) -> Result<(), BudgetExceeded> {
    s.budget.tick()?;
    let u = *s.path.last().unwrap();
    let len = s.path.len();
    if len >= 3 && len > s.best.len() && s.g.has_edge(u, s.root) && s.path[1] < u {
        s.best = s.path.clone();
        if len >= s.target {
            return Ok(());
        }
    }
    let avail = s.allowed & !visited;
    let reachable = s.g.reach(u, avail);
    if len + (reachable.count_ones() as usize) <= s.best.len() {
        return Ok(());
    }
    for w in bits(s.g.adj(u) & avail) {
        s.path.push(w);
        long_dfs(s, visited | 1 << w)?;
        s.path.pop();
        if s.best.len() >= s.target || s.best.len() == s.g.n() {
            return Ok(());
        }
        let bound = len + (s.g.reach(u, s.allowed & !visited).count_ones() as usize);
        if bound <= s.best.len() {
            return Ok(());
        }
    }
    Ok(())
}

/// Length of a shortest cycle, `None` if acyclic.
pub fn girth(g: &BitGraph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for y in bits(g.adj(x)) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}
