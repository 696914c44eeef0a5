//! Generators for the extremal and sharpness constructions, plus small fixtures.

use thiserror::Error;

use crate::embed::{validate_circuit_graph, CircuitGraph, EmbedError, PlaneGraph, RotationBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("t must be at least 4 (got {0})")]
    TooSmallT(usize),
    #[error("host vertex {vertex} has degree {degree}; substitution needs degree 2 or 3")]
    BadHostDegree { vertex: usize, degree: usize },
    #[error("{0:?} is not a facial triangle of the block")]
    NotFacialTriangle([usize; 3]),
    #[error("block is not a triangulation")]
    NotTriangulation,
    #[error("base graph is not a triangulation")]
    BaseNotTriangulation,
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

/// Where the chain attaches its next three copies, and the edges of the
/// copies that get glued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingSpec {
    /// Outer dart `u -> v` of the current graph.
    pub host_edge: (usize, usize),
    /// `(p_j, q_j)` for the three copies of the last iteration, in host labels.
    pub copy_edges: Vec<(usize, usize)>,
}

fn is_triangulation(g: &PlaneGraph) -> bool {
    g.n() >= 3 && g.faces().walks().iter().all(|w| w.len() == 3)
}

/// `K_4` with outer face `0 1 2` and vertex 3 inside.
pub fn k4() -> PlaneGraph {
    PlaneGraph::new(
        vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        Some(vec![0, 1, 2]),
    )
    .expect("K4 is a valid plane graph")
}

/// The cycle `0 1 ... n-1` with the face left of `0 -> 1` as outer face.
pub fn cycle_graph(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let rot = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
    PlaneGraph::with_outer_dart(rot, (0, 1)).expect("cycle is planar")
}

/// The cube graph `Q_3` (vertex `v` adjacent to `v ^ 1`, `v ^ 2`, `v ^ 4`).
pub fn cube_graph() -> PlaneGraph {
    // outer square 0 1 3 2, inner square 4 5 7 6
    let rot = vec![
        vec![1, 4, 2],
        vec![3, 5, 0],
        vec![0, 6, 3],
        vec![2, 7, 1],
        vec![0, 5, 6],
        vec![1, 7, 4],
        vec![4, 7, 2],
        vec![6, 5, 3],
    ];
    PlaneGraph::with_outer_dart(rot, (0, 1)).expect("cube is planar")
}

/// Stacks `count` vertices, each into the face left of `a -> b`.
fn fill_stacked(b: &mut RotationBuilder, a: usize, c: usize, count: usize) {
    for _ in 0..count {
        let walk = b.face_walk(a, c);
        debug_assert_eq!(walk.len(), 3);
        b.stack(&walk);
    }
}

/// A stacked triangulation on `n >= 3` vertices: the triangle `0 1 2`
/// with each further vertex stacked into the face left of `1 -> 0`.
/// The outer face is the face left of `0 -> 1`.
pub fn stacked_triangulation(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let mut b = RotationBuilder::from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]]);
    fill_stacked(&mut b, 1, 0, n - 3);
    PlaneGraph::with_outer_dart(b.into_rotation(), (0, 1)).expect("stacked triangulation is planar")
}

/// Inserts one new vertex in every face, `iterations` times. The outer face
/// of the result is the face containing the old outer walk's first dart.
pub fn kleetope(base: &PlaneGraph, iterations: usize) -> Result<PlaneGraph, ConstructionError> {
    if !is_triangulation(base) {
        return Err(ConstructionError::BaseNotTriangulation);
    }
    let mut g = base.clone();
    for _ in 0..iterations {
        let mut b = RotationBuilder::from_graph(&g);
        for walk in g.faces().walks() {
            b.stack(walk);
        }
        let rot = b.into_rotation();
        g = match g.outer() {
            Some(o) => PlaneGraph::with_outer_dart(rot, (o[0], o[1]))?,
            None => PlaneGraph::new(rot, None)?,
        };
    }
    Ok(g)
}

/// Adds a vertex in the face left of `a -> c` adjacent to `a` and `c`,
/// so that the face left of `a -> c` becomes the triangle `a c x`.
fn ear(b: &mut RotationBuilder, a: usize, c: usize) -> usize {
    let x = b.add_vertex();
    let at_a = b.rotation(a);
    let i = at_a.iter().position(|&w| w == c).expect("ear: missing edge");
    let before = at_a[(i + at_a.len() - 1) % at_a.len()];
    b.insert_after(a, before, x);
    b.insert_after(c, a, x);
    b.push(x, a);
    b.push(x, c);
    x
}

/// Glues a copy of the stacked `(t-1)`-vertex triangulation onto the outer
/// dart `a -> c`, identifying its designated edge with `ac`. Returns the
/// copy's third outer vertex.
fn attach_copy(b: &mut RotationBuilder, a: usize, c: usize, t: usize) -> usize {
    let r = ear(b, a, c);
    fill_stacked(b, a, c, t - 4);
    r
}

/// One sharpness-chain graph together with the gluing it used last.
#[derive(Debug, Clone)]
pub struct SharpChain {
    pub graph: CircuitGraph,
    pub gluing: GluingSpec,
}

/// The chain of `(t-1)`-vertex triangulations. After `i` iterations the
/// result has `(t-1) + i(3t-7)` vertices and deficiency `i`, realised by
/// `i` quadrilateral interior faces.
pub fn sharp_chain(t: usize, iterations: usize) -> Result<CircuitGraph, ConstructionError> {
    sharp_chain_with_gluing(t, iterations).map(|c| c.graph)
}

pub fn sharp_chain_with_gluing(t: usize, iterations: usize) -> Result<SharpChain, ConstructionError> {
    if t < 4 {
        return Err(ConstructionError::TooSmallT(t));
    }
    let mut b = RotationBuilder::from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]]);
    fill_stacked(&mut b, 1, 0, t - 4);
    let mut dart = (0usize, 1usize);
    let mut copy_edges = Vec::new();
    for _ in 0..iterations {
        let (u, v) = dart;
        // path u q1 q2 v through the outer face; the face left of u -> v
        // becomes the quadrilateral u v q2 q1
        let q1 = b.add_vertex();
        let at_u = b.rotation(u);
        let i = at_u.iter().position(|&w| w == v).unwrap();
        let before = at_u[(i + at_u.len() - 1) % at_u.len()];
        b.insert_after(u, before, q1);
        b.push(q1, u);
        let q2 = b.add_vertex();
        b.insert_after(v, u, q2);
        b.push(q1, q2);
        b.push(q2, q1);
        b.push(q2, v);
        attach_copy(&mut b, u, q1, t);
        let r2 = attach_copy(&mut b, q1, q2, t);
        attach_copy(&mut b, q2, v, t);
        copy_edges = vec![(u, q1), (q1, q2), (q2, v)];
        dart = (q1, r2);
    }
    let g = PlaneGraph::with_outer_dart(b.into_rotation(), dart)?;
    let outer = g.outer().expect("outer set").to_vec();
    let graph = validate_circuit_graph(&g, &outer).map_err(|e| match e {
        crate::embed::CircuitError::Embed(e) => ConstructionError::Embed(e),
        other => panic!("sharp chain is not a circuit graph: {other}"),
    })?;
    Ok(SharpChain { graph, gluing: GluingSpec { host_edge: dart, copy_edges } })
}

/// Subdivides every host edge and replaces each host vertex `w` by a copy
/// of `block`, joining the subdivision vertices around `w` to the corners
/// of `face_triangle` in the same cyclic order.
///
/// Labels: the copy of host vertex `w` occupies `w * v(B) ..`, and the
/// subdivision vertex of the `j`-th host edge (sorted) is `v_h * v(B) + j`.
pub fn substitute(
    host: &PlaneGraph,
    block: &PlaneGraph,
    face_triangle: [usize; 3],
) -> Result<PlaneGraph, ConstructionError> {
    for w in 0..host.n() {
        let d = host.degree(w);
        if !(2..=3).contains(&d) {
            return Err(ConstructionError::BadHostDegree { vertex: w, degree: d });
        }
    }
    if !is_triangulation(block) {
        return Err(ConstructionError::NotTriangulation);
    }
    let [a, b, c] = face_triangle;
    let faces = block.faces();
    let corners = match faces.face_of(a, b) {
        Some(f) if faces.walk(f).len() == 3 && faces.walk(f).contains(&c) => [a, b, c],
        _ => match faces.face_of(b, a) {
            Some(f) if faces.walk(f).len() == 3 && faces.walk(f).contains(&c) => [b, a, c],
            _ => return Err(ConstructionError::NotFacialTriangle(face_triangle)),
        },
    };
    let vb = block.n();
    let vh = host.n();
    let edges = host.edges();
    let sub_of = |x: usize, y: usize| {
        let e = (x.min(y), x.max(y));
        vh * vb + edges.binary_search(&e).expect("host edge")
    };
    let mut rot: Vec<Vec<usize>> = Vec::with_capacity(vh * vb + edges.len());
    for w in 0..vh {
        for v in 0..vb {
            rot.push(block.rotation(v).iter().map(|&x| w * vb + x).collect());
        }
    }
    rot.extend(edges.iter().map(|_| Vec::with_capacity(2)));
    let mut builder = RotationBuilder::from_rotation(rot);
    for w in 0..vh {
        let nb = host.rotation(w);
        let k = nb.len();
        // the face left of corners[0] -> corners[1]: at corner i the gap
        // follows corner i-1
        for i in 0..k {
            let corner = w * vb + corners[i];
            let prev = w * vb + corners[(i + 2) % 3];
            let s = sub_of(w, nb[i]);
            builder.insert_after(corner, prev, s);
            builder.push(s, corner);
        }
    }
    Ok(builder.build(None)?)
}

/// The 13-vertex near triangulation with an outer 12-cycle in which no
/// 12-cycle has a chord between vertices at distance 6. Vertex `i` here is
/// node `i + 1` of the drawing.
pub fn figure2_fixture() -> PlaneGraph {
    let r = 1.0_f64;
    let polar = |deg: f64, rad: f64| (rad * deg.to_radians().cos(), rad * deg.to_radians().sin());
    let pos = [
        (0.0, 0.0),
        polar(90.0, r),
        polar(210.0, r),
        polar(330.0, r),
        polar(150.0, r),
        polar(270.0, r),
        polar(30.0, r),
        polar(120.0, 1.25 * r),
        polar(180.0, 1.25 * r),
        polar(240.0, 1.25 * r),
        polar(300.0, 1.25 * r),
        polar(0.0, 1.25 * r),
        polar(60.0, 1.25 * r),
    ];
    let drawn: [(usize, usize); 24] = [
        (1, 2),
        (2, 3),
        (3, 1),
        (1, 4),
        (2, 4),
        (3, 4),
        (2, 5),
        (2, 7),
        (3, 5),
        (3, 6),
        (4, 6),
        (4, 7),
        (8, 2),
        (8, 5),
        (9, 5),
        (9, 3),
        (10, 3),
        (10, 6),
        (11, 6),
        (11, 4),
        (12, 4),
        (12, 7),
        (13, 7),
        (13, 2),
    ];
    let mut rot = vec![Vec::new(); 13];
    for &(x, y) in &drawn {
        rot[x - 1].push(y - 1);
        rot[y - 1].push(x - 1);
    }
    for (v, nb) in rot.iter_mut().enumerate() {
        let angle = |w: usize| (pos[w].1 - pos[v].1).atan2(pos[w].0 - pos[v].0);
        // clockwise = decreasing angle
        nb.sort_by(|&x, &y| angle(y).total_cmp(&angle(x)));
    }
    let outer = [8, 5, 9, 3, 10, 6, 11, 4, 12, 7, 13, 2].iter().map(|x| x - 1).collect();
    PlaneGraph::new(rot, Some(outer)).expect("figure fixture is a valid plane graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{circuit_from_outer, cuts, is_near_triangulation};

    #[test]
    fn kleetope_counts() {
        let g1 = kleetope(&k4(), 1).unwrap();
        assert_eq!((g1.n(), g1.edge_count(), g1.faces().len()), (8, 18, 12));
        let g2 = kleetope(&k4(), 2).unwrap();
        assert_eq!((g2.n(), g2.edge_count()), (20, 54));
        for g in [&g1, &g2] {
            assert!(cuts(g, 1).is_empty() && cuts(g, 2).is_empty());
            assert!(is_near_triangulation(g));
        }
        assert_eq!(kleetope(&k4(), 0).unwrap(), k4());
        assert_eq!(kleetope(&cycle_graph(4), 1), Err(ConstructionError::BaseNotTriangulation));
    }

    #[test]
    fn sharp_chain_counts() {
        for t in 4..=6 {
            for i in 0..=3 {
                let cg = sharp_chain(t, i).unwrap();
                assert_eq!(cg.n(), (t - 1) + i * (3 * t - 7), "t={t} i={i}");
                assert_eq!(cg.deficiency(), i);
                let faces = cg.graph().faces();
                let quads = faces.interior().filter(|&f| faces.walk(f).len() == 4).count();
                let tris = faces.interior().filter(|&f| faces.walk(f).len() == 3).count();
                assert_eq!(quads, i);
                assert_eq!(quads + tris, faces.len() - 1);
            }
        }
        let base = sharp_chain(4, 0).unwrap();
        assert_eq!((base.n(), base.deficiency()), (3, 0));
        assert_eq!(sharp_chain(3, 1).unwrap_err(), ConstructionError::TooSmallT(3));
    }

    #[test]
    fn sharp_chain_gluing_is_recorded() {
        let c = sharp_chain_with_gluing(5, 2).unwrap();
        let g = c.graph.graph();
        let (u, v) = c.gluing.host_edge;
        assert!(g.has_edge(u, v));
        assert_eq!(c.gluing.copy_edges.len(), 3);
        for &(p, q) in &c.gluing.copy_edges {
            assert!(g.has_edge(p, q));
        }
    }

    #[test]
    fn substitute_counts() {
        let g = substitute(&k4(), &k4(), [0, 1, 2]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (22, 36));
        for w in 0..4 {
            for (x, y) in k4().edges() {
                assert!(g.has_edge(4 * w + x, 4 * w + y));
            }
        }
        let g = substitute(&cycle_graph(3), &k4(), [1, 3, 2]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (15, 24));
        let star = PlaneGraph::new(vec![vec![1, 2, 3, 4], vec![0], vec![0], vec![0], vec![0]], None).unwrap();
        assert!(matches!(
            substitute(&star, &k4(), [0, 1, 2]),
            Err(ConstructionError::BadHostDegree { vertex: 0, degree: 4 })
        ));
        let kl = kleetope(&k4(), 1).unwrap();
        assert!(matches!(
            substitute(&k4(), &kl, [0, 1, 2]),
            Err(ConstructionError::NotFacialTriangle(_))
        ));
    }

    #[test]
    fn substitute_every_face_triangle() {
        let kl = kleetope(&k4(), 1).unwrap();
        for w in kl.faces().walks() {
            let g = substitute(&cube_graph(), &kl, [w[0], w[1], w[2]]).unwrap();
            assert_eq!(g.n(), 8 * 8 + 12);
            assert_eq!(g.edge_count(), 8 * 18 + 24);
        }
    }

    #[test]
    fn figure2_shape() {
        let g = figure2_fixture();
        assert_eq!((g.n(), g.edge_count()), (13, 24));
        assert!(is_near_triangulation(&g));
        let faces = g.faces();
        assert_eq!(faces.interior().count(), 12);
        let cg = circuit_from_outer(&g).unwrap();
        assert_eq!(cg.outer_cycle().len(), 12);
        assert_eq!(cg.deficiency(), 0);
    }

    #[test]
    fn fixtures_are_valid() {
        assert_eq!(cube_graph().edge_count(), 12);
        for (u, v) in cube_graph().edges() {
            assert_eq!((u ^ v).count_ones(), 1);
        }
        for n in 3..=8 {
            let t = stacked_triangulation(n);
            assert_eq!(t.edge_count(), 3 * n - 6);
        }
    }
}
