//! Planarity testing with an embedding by face-based path addition, run on
//! each block. Quadratic in the number of edges per block.

use std::collections::VecDeque;

use crate::embed::{blocks, PlaneGraph, RotationBuilder};
use crate::pattern::bits;

/// A planar rotation system of the graph with adjacency lists `adj`, or
/// `None` when the graph is not planar. Blocks are embedded separately and
/// their rotations concatenated at cut vertices, which keeps genus zero.
pub fn planar_rotation(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let e = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n >= 3 && e > 3 * n - 6 {
        return None;
    }
    let mut rot = vec![Vec::new(); n];
    for block in blocks(adj, &vec![false; n]) {
        if let [(a, b)] = block[..] {
            rot[a].push(b);
            rot[b].push(a);
            continue;
        }
        for (v, r) in embed_block(&block)? {
            rot[v].extend(r);
        }
    }
    Some(rot)
}

pub fn is_planar(adj: &[Vec<usize>]) -> bool {
    planar_rotation(adj).is_some()
}

/// Embeds a connected graph given as adjacency masks. `None` when it is not
/// planar or not connected.
pub fn embed_masks(adj: &[u64]) -> Option<PlaneGraph> {
    let lists: Vec<Vec<usize>> = adj.iter().map(|&m| bits(m).collect()).collect();
    let rot = planar_rotation(&lists)?;
    let first = (0, *rot.first()?.first()?);
    PlaneGraph::with_outer_dart(rot, first).ok()
}

/// Embeds one 2-connected block with at least three vertices. Returns the
/// rotation of each block vertex in host labels.
fn embed_block(edges: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let m = verts.len();
    let local = |v: usize| verts.binary_search(&v).expect("block vertex");
    let mut adj = vec![Vec::new(); m];
    for &(a, b) in edges {
        let (a, b) = (local(a), local(b));
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut in_h = vec![false; m];
    let mut h_edge = vec![vec![false; m]; m];
    let mut placed = 0;
    let mut b = RotationBuilder::from_rotation(vec![Vec::new(); m]);

    // start from a cycle through the first edge
    let (s, t) = (0, adj[0][0]);
    let cycle = {
        let mut path = bfs_path(&adj, t, |v| v == s, |u, v| (u, v) != (t, s))?;
        path.reverse();
        path
    };
    let k = cycle.len();
    for i in 0..k {
        let (u, v) = (cycle[i], cycle[(i + 1) % k]);
        in_h[u] = true;
        h_edge[u][v] = true;
        h_edge[v][u] = true;
        b.push(u, cycle[(i + k - 1) % k]);
        b.push(u, v);
    }
    placed += k;

    while placed < edges.len() {
        let faces = b.faces();
        let face_masks: Vec<u64> = faces.iter().map(|f| f.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let fragments = fragments(&adj, &in_h, &h_edge);
        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> =
                (0..faces.len()).filter(|&f| frag.attach & !face_masks[f] == 0).collect();
            match admissible[..] {
                [] => return None,
                [f] => {
                    choice = Some((i, f));
                    break;
                }
                [f, ..] if choice.is_none() => choice = Some((i, f)),
                _ => {}
            }
        }
        let (i, f) = choice.expect("a fragment remains while edges are missing");
        let path = fragments[i].path(&adj, &in_h);
        let walk = &faces[f];
        let before = |x: usize| {
            let j = walk.iter().position(|&w| w == x).expect("attachment on face");
            walk[(j + walk.len() - 1) % walk.len()]
        };
        let (a, z) = (path[0], path[path.len() - 1]);
        let (pa, pz) = (before(a), before(z));
        if path.len() == 2 {
            b.add_chord(a, pa, z, pz);
        } else {
            b.insert_after(a, pa, path[1]);
            b.insert_after(z, pz, path[path.len() - 2]);
            for j in 1..path.len() - 1 {
                b.push(path[j], path[j - 1]);
                b.push(path[j], path[j + 1]);
            }
        }
        for w in path.windows(2) {
            h_edge[w[0]][w[1]] = true;
            h_edge[w[1]][w[0]] = true;
            in_h[w[1]] = true;
        }
        placed += path.len() - 1;
    }
    let rot = b.into_rotation();
    Some(
        rot.into_iter()
            .enumerate()
            .map(|(v, r)| (verts[v], r.into_iter().map(|w| verts[w]).collect()))
            .collect(),
    )
}

struct Fragment {
    attach: u64,
    /// A single missing edge between embedded vertices, or a component of
    /// unembedded vertices.
    edge: Option<(usize, usize)>,
    inside: u64,
}

impl Fragment {
    /// A path through the fragment between two distinct attachments.
    fn path(&self, adj: &[Vec<usize>], in_h: &[bool]) -> Vec<usize> {
        if let Some((a, z)) = self.edge {
            return vec![a, z];
        }
        let mut att = bits(self.attach);
        let a = att.next().expect("attachment");
        let inside = self.inside;
        let path = bfs_path(
            adj,
            a,
            |v| in_h[v] && v != a,
            |u, v| inside >> v & 1 == 1 || (u != a && in_h[v]),
        );
        path.expect("blocks give every fragment two attachments")
    }
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edge: &[Vec<bool>]) -> Vec<Fragment> {
    let m = adj.len();
    let mut out = Vec::new();
    for u in 0..m {
        for &v in &adj[u] {
            if u < v && in_h[u] && in_h[v] && !h_edge[u][v] {
                out.push(Fragment { attach: 1 << u | 1 << v, edge: Some((u, v)), inside: 0 });
            }
        }
    }
    let mut seen = vec![false; m];
    for s in 0..m {
        if in_h[s] || seen[s] {
            continue;
        }
        let (mut inside, mut attach) = (0u64, 0u64);
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            inside |= 1 << u;
            for &w in &adj[u] {
                if in_h[w] {
                    attach |= 1 << w;
                } else if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.push(Fragment { attach, edge: None, inside });
    }
    out
}

/// Shortest path from `from` to the first vertex satisfying `goal`, moving
/// only along `u -> v` steps accepted by `step`. Goal vertices end the path.
fn bfs_path(
    adj: &[Vec<usize>],
    from: usize,
    goal: impl Fn(usize) -> bool,
    step: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u != from && goal(u) {
            let mut path = vec![u];
            let mut x = u;
            while x != from {
                x = prev[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for &w in &adj[u] {
            if prev[w] == usize::MAX && step(u, w) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::turan::oracle::is_planar_by_minors;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn lists(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn complete(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&lists(5, &complete(5))));
        let k33: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        assert!(!is_planar(&lists(6, &k33)));
        let mut k4 = complete(4);
        assert!(is_planar(&lists(4, &k4)));
        // subdivided K5 on seven vertices
        let mut sub = complete(5);
        sub.retain(|&e| e != (0, 1) && e != (2, 3));
        sub.extend([(0, 5), (5, 1), (2, 6), (6, 3)]);
        assert!(!is_planar(&lists(7, &sub)));
        k4.push((3, 4));
        assert!(is_planar(&lists(5, &k4)));
    }

    #[test]
    fn agrees_with_minor_oracle_and_embeds() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut counts = [0usize; 2];
        for _ in 0..3000 {
            let n = rng.gen_range(3..=8);
            let p = rng.gen_range(0.2..0.8);
            let edges: Vec<_> = complete(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
            let adj = lists(n, &edges);
            let expected = is_planar_by_minors(n, &edges);
            counts[expected as usize] += 1;
            match planar_rotation(&adj) {
                Some(rot) => {
                    assert!(expected, "{edges:?}");
                    let b = crate::pattern::BitGraph::from_edges(n, &edges);
                    if b.is_connected() {
                        PlaneGraph::new(rot, None).expect("valid sphere embedding");
                    }
                }
                None => assert!(!expected, "{edges:?}"),
            }
        }
        assert!(counts[0] > 300 && counts[1] > 300, "{counts:?}");
    }
}
