//! Seeded random instances: triangulations, near triangulations and
//! circuit graphs with a prescribed deficiency budget.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::embed::{validate_circuit_graph, CircuitGraph, PlaneGraph, RotationBuilder};

/// Flips the edge `ab` when both sides are triangles and the flip keeps the
/// graph simple. Returns whether it flipped.
fn try_flip(b: &mut RotationBuilder, a: usize, c: usize) -> bool {
    let left = b.face_walk(a, c);
    let right = b.face_walk(c, a);
    if left.len() != 3 || right.len() != 3 {
        return false;
    }
    let x = left[2];
    let y = right[2];
    if x == y || b.has_edge(x, y) || b.rotation(a).len() <= 3 || b.rotation(c).len() <= 3 {
        return false;
    }
    b.remove_edge(a, c);
    let quad = b.face_walk(c, x);
    let prev = |v: usize| quad[(quad.iter().position(|&w| w == v).unwrap() + quad.len() - 1) % quad.len()];
    let (px, py) = (prev(x), prev(y));
    b.add_chord(x, px, y, py);
    true
}

/// A random triangulation on `n >= 3` vertices (random stacking followed by
/// random flips) with a random outer face.
pub fn random_triangulation<R: Rng>(n: usize, rng: &mut R) -> PlaneGraph {
    assert!(n >= 3);
    let mut b = RotationBuilder::from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]]);
    for _ in 3..n {
        let faces = b.faces();
        let f = faces.choose(rng).unwrap().clone();
        b.stack(&f);
    }
    for _ in 0..3 * n {
        let a = rng.gen_range(0..n);
        let rot = b.rotation(a).to_vec();
        let c = *rot.choose(rng).unwrap();
        try_flip(&mut b, a, c);
    }
    let faces = b.faces();
    let f = faces.choose(rng).unwrap();
    PlaneGraph::with_outer_dart(b.into_rotation(), (f[0], f[1])).expect("flips keep planarity")
}

fn delete_edge(g: &PlaneGraph, u: usize, v: usize) -> Option<CircuitGraph> {
    let outer = g.outer()?;
    let k = outer.len();
    let dart = (0..k)
        .map(|i| (outer[i], outer[(i + 1) % k]))
        .find(|&(a, b)| (a.min(b), a.max(b)) != (u.min(v), u.max(v)))?;
    let sub = g.restrict(|a, b| (a, b) != (u.min(v), u.max(v)), Some(dart)).ok()?;
    if sub.graph.n() != g.n() {
        return None;
    }
    let c = sub.graph.outer()?.to_vec();
    validate_circuit_graph(&sub.graph, &c).ok()
}

/// A random circuit graph on `n` vertices with deficiency at most `max_m`,
/// obtained from a random triangulation by deleting random edges while the
/// result stays a circuit graph. `outer_cuts` extra deletions on the outer
/// cycle lengthen it.
pub fn random_circuit_graph<R: Rng>(n: usize, max_m: usize, outer_cuts: usize, rng: &mut R) -> CircuitGraph {
    let tri = random_triangulation(n, rng);
    let c = tri.outer().unwrap().to_vec();
    let mut cg = validate_circuit_graph(&tri, &c).expect("triangulations are circuit graphs");
    let target = rng.gen_range(0..=max_m);
    let mut cuts_left = outer_cuts;
    for _ in 0..20 * n {
        let m = cg.deficiency();
        if m == target && cuts_left == 0 {
            break;
        }
        let g = cg.graph();
        let outer = g.outer().unwrap();
        let on_outer = |a: usize, b: usize| {
            let k = outer.len();
            (0..k).any(|i| {
                let (x, y) = (outer[i], outer[(i + 1) % k]);
                (x, y) == (a, b) || (y, x) == (a, b)
            })
        };
        let edges = g.edges();
        let candidates: Vec<_> = if cuts_left > 0 && rng.gen_bool(0.5) {
            edges.iter().copied().filter(|&(a, b)| on_outer(a, b)).collect()
        } else if m < target {
            edges.iter().copied().filter(|&(a, b)| !on_outer(a, b)).collect()
        } else {
            continue;
        };
        let Some(&(a, b)) = candidates.choose(rng) else { continue };
        if let Some(next) = delete_edge(g, a, b) {
            if next.deficiency() <= target {
                if on_outer(a, b) {
                    cuts_left = cuts_left.saturating_sub(1);
                }
                cg = next;
            }
        }
    }
    cg
}

/// A random near triangulation: a random triangulation with some outer
/// edges removed (each removal keeps all interior faces triangular).
pub fn random_near_triangulation<R: Rng>(n: usize, outer_cuts: usize, rng: &mut R) -> PlaneGraph {
    let cg = random_circuit_graph(n, 0, outer_cuts, rng);
    cg.into_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::is_near_triangulation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn triangulations_have_full_edge_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 3..15 {
            let g = random_triangulation(n, &mut rng);
            assert_eq!(g.edge_count(), 3 * n - 6);
        }
    }

    #[test]
    fn circuit_graphs_respect_budget() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut seen_m = [0usize; 4];
        for _ in 0..60 {
            let n = rng.gen_range(6..14);
            let cg = random_circuit_graph(n, 3, 3, &mut rng);
            assert_eq!(cg.n(), n);
            let m = cg.deficiency();
            assert!(m <= 3);
            seen_m[m] += 1;
        }
        assert!(seen_m.iter().filter(|&&c| c > 0).count() >= 3, "{seen_m:?}");
    }

    #[test]
    fn near_triangulations_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let g = random_near_triangulation(10, 4, &mut rng);
            assert!(is_near_triangulation(&g));
        }
    }
}
