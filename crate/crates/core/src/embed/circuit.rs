//! Circuit graphs, cycle interiors and the deficiency `m`.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use super::connectivity::{components_without, cuts};
use super::plane::{EmbedError, PlaneGraph, SubGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("not a cycle of the graph: {0:?}")]
    NotACycle(Vec<usize>),
    #[error("no outer face designated")]
    NoOuterFace,
    #[error("graph is not 2-connected (cut vertex {0:?})")]
    NotTwoConnected(Option<usize>),
    #[error("cycle is not facial")]
    NotFacial,
    #[error("2-cut {cut:?} leaves component {component:?} away from the outer cycle")]
    BadTwoCut { cut: [usize; 2], component: Vec<usize> },
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

/// Checks that `c` is a simple cycle of `g` of length at least 3.
pub fn is_cycle(g: &PlaneGraph, c: &[usize]) -> bool {
    let k = c.len();
    if k < 3 || c.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = HashSet::new();
    if !c.iter().all(|v| seen.insert(*v)) {
        return false;
    }
    (0..k).all(|i| g.has_edge(c[i], c[(i + 1) % k]))
}

fn cycle_edges(c: &[usize]) -> HashSet<(usize, usize)> {
    let k = c.len();
    (0..k)
        .map(|i| {
            let (a, b) = (c[i], c[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// A 2-connected plane graph with a facial outer cycle such that every
/// component left by a 2-cut touches the outer cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitGraph {
    graph: PlaneGraph,
}

impl CircuitGraph {
    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn into_graph(self) -> PlaneGraph {
        self.graph
    }

    pub fn outer_cycle(&self) -> &[usize] {
        self.graph.outer().expect("circuit graph has an outer cycle")
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `3v - 6 - e - (|C| - 3)`, checked against the interior face sizes.
    pub fn deficiency(&self) -> usize {
        deficiency_m(self)
    }
}

/// Certifies `(g, c)` as a circuit graph. The returned graph has its outer
/// walk set to `c`.
pub fn validate_circuit_graph(g: &PlaneGraph, c: &[usize]) -> Result<CircuitGraph, CircuitError> {
    if !is_cycle(g, c) {
        return Err(CircuitError::NotACycle(c.to_vec()));
    }
    if g.n() < 3 {
        return Err(CircuitError::NotTwoConnected(None));
    }
    if let Some(cut) = cuts(g, 1).first() {
        return Err(CircuitError::NotTwoConnected(Some(cut[0])));
    }
    let graph = g.clone().set_outer(c.to_vec()).map_err(|_| CircuitError::NotFacial)?;
    let on_c: HashSet<usize> = c.iter().copied().collect();
    let adj = g.rotations();
    let mut removed = vec![false; g.n()];
    for cut in cuts(g, 2) {
        removed[cut[0]] = true;
        removed[cut[1]] = true;
        for comp in components_without(adj, &removed) {
            if !comp.iter().any(|v| on_c.contains(v)) {
                return Err(CircuitError::BadTwoCut { cut: [cut[0], cut[1]], component: comp });
            }
        }
        removed[cut[0]] = false;
        removed[cut[1]] = false;
    }
    Ok(CircuitGraph { graph })
}

/// Validates a graph whose outer face is already designated.
pub fn circuit_from_outer(g: &PlaneGraph) -> Result<CircuitGraph, CircuitError> {
    let outer = g.outer().ok_or(CircuitError::NoOuterFace)?.to_vec();
    let mut cg = validate_circuit_graph(g, &outer)?;
    // keep the exact face designation (matters only for bare cycles)
    cg.graph = g.clone();
    Ok(cg)
}

/// `m(G) = 3v - 6 - e - (|C| - 3)`.
pub fn deficiency_m(cg: &CircuitGraph) -> usize {
    let g = cg.graph();
    let v = g.n() as i64;
    let e = g.edge_count() as i64;
    let c = cg.outer_cycle().len() as i64;
    let m = 3 * v - 6 - e - (c - 3);
    let faces = g.faces();
    let by_faces: i64 = faces.interior().map(|f| faces.walk(f).len() as i64 - 3).sum();
    assert_eq!(m, by_faces, "deficiency disagrees with interior face sizes");
    assert!(m >= 0);
    m as usize
}

/// Faces strictly inside cycle `c` (face indices of `g.faces()`).
pub(crate) fn interior_faces(g: &PlaneGraph, c: &[usize]) -> Result<Vec<bool>, CircuitError> {
    if !is_cycle(g, c) {
        return Err(CircuitError::NotACycle(c.to_vec()));
    }
    let faces = g.faces();
    let outer = faces.outer().ok_or(CircuitError::NoOuterFace)?;
    let on_cycle = cycle_edges(c);
    let mut outside = vec![false; faces.len()];
    outside[outer] = true;
    let mut queue = VecDeque::from([outer]);
    while let Some(f) = queue.pop_front() {
        let w = faces.walk(f);
        for i in 0..w.len() {
            let (a, b) = (w[i], w[(i + 1) % w.len()]);
            if on_cycle.contains(&(a.min(b), a.max(b))) {
                continue;
            }
            let other = faces.face_of(b, a).expect("reverse dart exists");
            if !outside[other] {
                outside[other] = true;
                queue.push_back(other);
            }
        }
    }
    Ok(outside.into_iter().map(|o| !o).collect())
}

/// Subgraph of everything on or inside cycle `c`, with `c` as its outer face.
pub fn interior_of_cycle(g: &PlaneGraph, c: &[usize]) -> Result<SubGraph, CircuitError> {
    let inside = interior_faces(g, c)?;
    let faces = g.faces();
    let keep = |u: usize, v: usize| {
        let f1 = faces.face_of(u, v).unwrap();
        let f2 = faces.face_of(v, u).unwrap();
        inside[f1] || inside[f2]
    };
    // The dart of c whose left face is outside c stays on the outer face.
    let (a, b) = (c[0], c[1]);
    let dart = if inside[faces.face_of(a, b).unwrap()] { (b, a) } else { (a, b) };
    Ok(g.restrict(keep, Some(dart))?)
}

/// True when every interior face of `g` (outer face designated) is a
/// triangle and the outer face is a cycle.
pub fn is_near_triangulation(g: &PlaneGraph) -> bool {
    let faces = g.faces();
    let Some(outer) = faces.outer() else { return false };
    if !is_cycle(g, faces.walk(outer)) {
        return false;
    }
    let all_triangles = faces.interior().all(|f| faces.walk(f).len() == 3);
    all_triangles
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> PlaneGraph {
        PlaneGraph::new(
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            Some(vec![0, 1, 2]),
        )
        .unwrap()
    }

    fn c4() -> PlaneGraph {
        PlaneGraph::new(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]], Some(vec![0, 1, 2, 3])).unwrap()
    }

    #[test]
    fn deficiency_examples() {
        let cg = circuit_from_outer(&k4()).unwrap();
        assert_eq!(deficiency_m(&cg), 0);
        let cg = circuit_from_outer(&c4()).unwrap();
        assert_eq!(deficiency_m(&cg), 1);
    }

    #[test]
    fn k4_interiors() {
        let g = k4();
        let sub = interior_of_cycle(&g, &[0, 1, 3]).unwrap();
        assert_eq!(sub.graph.n(), 3);
        assert_eq!(sub.graph.edge_count(), 3);
        assert_eq!(sub.to_host, vec![0, 1, 3]);
        let whole = interior_of_cycle(&g, &[0, 1, 2]).unwrap();
        assert_eq!(whole.graph.n(), 4);
        assert_eq!(whole.graph.edge_count(), 6);
        assert!(is_near_triangulation(&whole.graph));
        assert!(interior_of_cycle(&g, &[0, 1]).is_err());
    }

    #[test]
    fn validation_examples() {
        let g = k4();
        for f in g.faces().walks() {
            assert!(validate_circuit_graph(&g, f).is_ok());
        }
        let bowtie = PlaneGraph::new(
            vec![vec![1, 2], vec![2, 0], vec![0, 1, 3, 4], vec![4, 2], vec![2, 3]],
            None,
        )
        .unwrap();
        assert_eq!(
            validate_circuit_graph(&bowtie, &[0, 1, 2]),
            Err(CircuitError::NotTwoConnected(Some(2)))
        );
        assert_eq!(validate_circuit_graph(&g, &[0, 1, 2, 3]), Err(CircuitError::NotFacial));
        assert_eq!(validate_circuit_graph(&g, &[0, 1, 1]), Err(CircuitError::NotACycle(vec![0, 1, 1])));
    }

    #[test]
    fn bad_two_cut_detected() {
        // 4-cycle 0-1-2-3 with a vertex 4 inside adjacent to 0 and 2 only:
        // {0, 2} separates 4 from the outer cycle.
        let g = PlaneGraph::new(
            vec![vec![1, 4, 3], vec![2, 0], vec![3, 4, 1], vec![0, 2], vec![0, 2]],
            None,
        )
        .unwrap();
        let outer = g
            .faces()
            .walks()
            .iter()
            .find(|w| w.len() == 4 && !w.contains(&4))
            .cloned()
            .unwrap();
        match validate_circuit_graph(&g, &outer) {
            Err(CircuitError::BadTwoCut { cut, component }) => {
                assert_eq!(cut, [0, 2]);
                assert_eq!(component, vec![4]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
