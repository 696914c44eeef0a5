//! Exhaustive check: is the inside of some cycle a near triangulation on at
//! least `t` vertices?

use super::NtWitness;
use crate::budget::Budget;
use crate::embed::{interior_faces, interior_of_cycle, PlaneGraph};
use crate::pattern::{detect, BitGraph, DetectError};

/// Enumerates every cycle of `g` (outer face designated) and returns the
/// first whose inside is a near triangulation with at least `t` vertices.
pub fn oracle_near_triangulation(
    g: &PlaneGraph,
    t: usize,
    budget: &mut Budget,
) -> Result<Option<NtWitness>, DetectError> {
    let bg = BitGraph::from_plane(g).ok_or(DetectError::TooLarge { n: g.n() })?;
    let faces = g.faces();
    let mut found: Option<Vec<usize>> = None;
    for k in 3..=g.n() {
        detect::for_each_cycle(&bg, k, budget, &mut |c| {
            let Ok(inside) = interior_faces(g, c) else { return false };
            let mut count = 0;
            for (f, &ins) in inside.iter().enumerate() {
                if ins {
                    if faces.walk(f).len() != 3 {
                        return false;
                    }
                    count += 1;
                }
            }
            // a triangulated disk with `count` triangles and boundary `k`
            // has 1 + (count + k) / 2 vertices
            if 1 + (count + k) / 2 >= t {
                found = Some(c.to_vec());
                true
            } else {
                false
            }
        })?;
        if found.is_some() {
            break;
        }
    }
    Ok(found.map(|c| {
        let sub = interior_of_cycle(g, &c).expect("enumerated cycle");
        NtWitness { graph: sub.graph, to_host: sub.to_host }
    }))
}
