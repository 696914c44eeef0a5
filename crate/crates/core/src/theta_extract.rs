//! θ_k subgraphs of near triangulations by shrinking the inside of a long cycle.
//!
//! Starting from a cycle `C` with `|C| >= k`, each step either finds a
//! chord `uw` across a vertex `v` of a `k`-cycle (done), cuts off a
//! boundary vertex whose only inner face is a triangle (length -1), or
//! reroutes a cycle edge around an interior vertex (length +1). Both moves
//! push exactly one face outside `C`.

use thiserror::Error;

use crate::embed::{interior_faces, is_cycle, is_near_triangulation, PlaneGraph};
use crate::pattern::{circumference, DetectError, ThetaWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaError {
    #[error("graph is not a near triangulation with a designated outer face")]
    NotNearTriangulation,
    #[error("k must be at least 4 (got {0})")]
    KTooSmall(usize),
    #[error("seed {0:?} is not a cycle of the graph")]
    InvalidSeed(Vec<usize>),
    #[error("no cycle of length at least {k} (longest has {longest})")]
    NoLongCycle { k: usize, longest: usize },
    #[error("no move applies to cycle {0:?}")]
    DichotomyViolated(Vec<usize>),
    #[error(transparent)]
    Detect(#[from] DetectError),
}

/// One cycle transformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThetaStep {
    /// Vertex `v` dropped, its cycle neighbours joined directly.
    Shortcut { v: usize },
    /// Cycle edge `uv` replaced by the path `u x v`.
    Detour { u: usize, v: usize, x: usize },
}

impl std::fmt::Display for ThetaStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThetaStep::Shortcut { v } => write!(f, "shortcut v={v}"),
            ThetaStep::Detour { u, v, x } => write!(f, "detour u={u} v={v} x={x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaRun {
    pub witness: ThetaWitness,
    pub steps: Vec<ThetaStep>,
    /// Faces inside the cycle before each step, ending with the final cycle.
    pub measures: Vec<usize>,
}

/// A θ_k in `g`. Without a seed, a longest cycle is used.
pub fn find_theta(g: &PlaneGraph, k: usize, seed: Option<&[usize]>) -> Result<ThetaWitness, ThetaError> {
    find_theta_traced(g, k, seed).map(|r| r.witness)
}

pub fn find_theta_traced(g: &PlaneGraph, k: usize, seed: Option<&[usize]>) -> Result<ThetaRun, ThetaError> {
    if k < 4 {
        return Err(ThetaError::KTooSmall(k));
    }
    if !is_near_triangulation(g) {
        return Err(ThetaError::NotNearTriangulation);
    }
    let mut cycle = match seed {
        Some(s) => {
            if !is_cycle(g, s) {
                return Err(ThetaError::InvalidSeed(s.to_vec()));
            }
            s.to_vec()
        }
        None => circumference(g)?.1,
    };
    if cycle.len() < k {
        return Err(ThetaError::NoLongCycle { k, longest: cycle.len() });
    }
    let faces = g.faces();
    let mut steps = Vec::new();
    let mut measures = Vec::new();
    loop {
        let inside = interior_faces(g, &cycle).map_err(|_| ThetaError::InvalidSeed(cycle.clone()))?;
        let measure = inside.iter().filter(|&&b| b).count();
        if let Some(&last) = measures.last() {
            assert!(measure < last, "inside face count must decrease");
        }
        measures.push(measure);
        let len = cycle.len();
        let around = |i: usize| (cycle[(i + len - 1) % len], cycle[i], cycle[(i + 1) % len]);

        if len == k {
            let best = (0..len)
                .map(around)
                .filter(|&(u, _, w)| g.has_edge(u, w))
                .min_by_key(|&(_, v, _)| v);
            if let Some((u, _, w)) = best {
                return Ok(ThetaRun {
                    witness: ThetaWitness { cycle, chord: (u.min(w), u.max(w)) },
                    steps,
                    measures,
                });
            }
        } else {
            let inner = |a: usize, b: usize| {
                let f = faces.face_of(a, b).expect("cycle dart");
                if inside[f] {
                    f
                } else {
                    faces.face_of(b, a).expect("cycle dart")
                }
            };
            let cut = (0..len)
                .filter(|&i| {
                    let (u, v, w) = around(i);
                    let f = inner(u, v);
                    inner(v, w) == f && faces.walk(f).len() == 3 && faces.walk(f).contains(&w)
                })
                .min_by_key(|&i| cycle[i]);
            if let Some(i) = cut {
                steps.push(ThetaStep::Shortcut { v: cycle[i] });
                cycle.remove(i);
                continue;
            }
        }

        let on_cycle: Vec<bool> = {
            let mut on = vec![false; g.n()];
            cycle.iter().for_each(|&v| on[v] = true);
            on
        };
        let mut best: Option<((usize, usize), usize, usize)> = None;
        for i in 0..len {
            let (a, b) = (cycle[i], cycle[(i + 1) % len]);
            let f = faces.face_of(a, b).filter(|&f| inside[f]).or_else(|| faces.face_of(b, a).filter(|&f| inside[f]));
            let Some(f) = f else { continue };
            let walk = faces.walk(f);
            if walk.len() != 3 {
                continue;
            }
            let x = walk.iter().copied().find(|&x| x != a && x != b).unwrap();
            let key = (a.min(b), a.max(b));
            if !on_cycle[x] && best.is_none_or(|(k0, _, _)| key < k0) {
                best = Some((key, i, x));
            }
        }
        match best {
            Some((_, i, x)) => {
                steps.push(ThetaStep::Detour { u: cycle[i], v: cycle[(i + 1) % len], x });
                cycle.insert(i + 1, x);
            }
            None => return Err(ThetaError::DichotomyViolated(cycle)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{figure2_fixture, k4, kleetope, stacked_triangulation};
    use crate::pattern::{BitGraph, MAX_BIT_VERTICES};

    fn wheel(spokes: usize) -> PlaneGraph {
        let h = spokes;
        let mut rot: Vec<Vec<usize>> = (0..spokes)
            .map(|i| vec![(i + 1) % spokes, h, (i + spokes - 1) % spokes])
            .collect();
        rot.push((0..spokes).collect());
        PlaneGraph::with_outer_dart(rot, (0, 1)).unwrap()
    }

    fn check(g: &PlaneGraph, w: &ThetaWitness, k: usize) {
        assert!(g.n() <= MAX_BIT_VERTICES);
        let b = BitGraph::from_plane(g).unwrap();
        assert_eq!(w.cycle.len(), k);
        assert!(w.is_valid_in(&b, 2), "{w:?}");
    }

    #[test]
    fn wheel_and_k4() {
        let g = wheel(5);
        assert!(is_near_triangulation(&g));
        let seed = [0, 1, 2, 3, 4, 5];
        assert!(is_cycle(&g, &seed));
        let w = find_theta(&g, 6, Some(&seed)).unwrap();
        check(&g, &w, 6);
        let g = k4();
        let run = find_theta_traced(&g, 4, Some(&[0, 1, 2, 3])).unwrap();
        assert!(run.steps.is_empty());
        check(&g, &run.witness, 4);
    }

    #[test]
    fn figure2_outer_cycle() {
        let g = figure2_fixture();
        let outer = g.outer().unwrap().to_vec();
        let run = find_theta_traced(&g, 12, Some(&outer)).unwrap();
        check(&g, &run.witness, 12);
        assert!(run.measures.windows(2).all(|p| p[1] < p[0]));
    }

    #[test]
    fn errors() {
        let g = k4();
        assert_eq!(find_theta(&g, 5, None), Err(ThetaError::NoLongCycle { k: 5, longest: 4 }));
        assert_eq!(find_theta(&g, 3, None), Err(ThetaError::KTooSmall(3)));
        assert_eq!(find_theta(&g, 4, Some(&[0, 1])), Err(ThetaError::InvalidSeed(vec![0, 1])));
        let c4 = crate::constructions::cycle_graph(4);
        // a bare 4-cycle has a quadrilateral interior face
        assert_eq!(find_theta(&c4, 4, None), Err(ThetaError::NotNearTriangulation));
    }

    #[test]
    fn every_k_on_small_triangulations() {
        for g in [kleetope(&k4(), 1).unwrap(), stacked_triangulation(9), wheel(7)] {
            let (circ, _) = circumference(&g).unwrap();
            for k in 4..=circ {
                let w = find_theta(&g, k, None).unwrap();
                check(&g, &w, k);
            }
        }
    }
}
