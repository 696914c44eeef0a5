//! Plane graphs stored as rotation systems.
//!
//! A rotation lists the neighbors of a vertex in clockwise order. Faces are
//! traced with the face on the left of every dart: the dart `u -> v` is
//! followed by `v -> w` where `w` is the clockwise successor of `u` around
//! `v`. Bounded faces therefore come out counter-clockwise and the outer face
//! clockwise.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex}: neighbor {label} out of range")]
    LabelOutOfRange { vertex: usize, label: usize },
    #[error("vertex {0} lists itself as a neighbor")]
    SelfLoop(usize),
    #[error("vertex {vertex} lists neighbor {neighbor} twice")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    #[error("vertex {vertex} lists {neighbor}, but {neighbor} does not list {vertex}")]
    Asymmetric { vertex: usize, neighbor: usize },
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(usize),
    #[error("rotation system is not a sphere embedding: v - e + f = {0}")]
    NotPlanar(i64),
    #[error("outer walk is not a face of the embedding")]
    OuterNotFacial,
    #[error("dart {0}->{1} is not an edge")]
    NoSuchDart(usize, usize),
}

/// Faces of a rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    walks: Vec<Vec<usize>>,
    dart_face: Vec<usize>,
    offset: Vec<usize>,
    rotation_lens: Vec<usize>,
    outer: Option<usize>,
    neighbors: Vec<Vec<usize>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    /// Boundary walk of face `i`; entry `j` is the tail of the `j`-th dart.
    pub fn walk(&self, i: usize) -> &[usize] {
        &self.walks[i]
    }

    pub fn walks(&self) -> &[Vec<usize>] {
        &self.walks
    }

    pub fn outer(&self) -> Option<usize> {
        self.outer
    }

    /// Indices of every face except the outer one.
    pub fn interior(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.walks.len()).filter(move |&i| Some(i) != self.outer)
    }

    /// Face lying to the left of the dart `u -> v`.
    pub fn face_of(&self, u: usize, v: usize) -> Option<usize> {
        let i = self.neighbors.get(u)?.iter().position(|&w| w == v)?;
        Some(self.dart_face[self.offset[u] + i])
    }

    /// Finds the face whose walk equals `walk` up to rotation and reversal.
    pub fn find_walk(&self, walk: &[usize]) -> Option<usize> {
        self.walks
            .iter()
            .position(|w| same_cyclic_sequence(w, walk))
    }

    #[cfg(test)]
    pub(crate) fn dart_count(&self) -> usize {
        self.rotation_lens.iter().sum()
    }
}

/// True when `a` and `b` agree up to cyclic rotation or reversal.
pub fn same_cyclic_sequence(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let k = a.len();
    for start in 0..k {
        if b[start] != a[0] {
            continue;
        }
        if (0..k).all(|i| a[i] == b[(start + i) % k]) {
            return true;
        }
        if (0..k).all(|i| a[i] == b[(start + k - i) % k]) {
            return true;
        }
    }
    false
}

/// A simple connected graph with a clockwise rotation system of genus zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    outer: Option<Vec<usize>>,
    outer_face: Option<usize>,
    edges: usize,
}

impl PlaneGraph {
    /// Validates a rotation system and an optional outer walk.
    pub fn new(rotation: Vec<Vec<usize>>, outer: Option<Vec<usize>>) -> Result<Self, EmbedError> {
        let edges = check_simple(&rotation)?;
        check_connected(&rotation)?;
        let mut g = PlaneGraph { rotation, outer: None, outer_face: None, edges };
        let faces = g.faces();
        let euler = g.n() as i64 - g.edges as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(EmbedError::NotPlanar(euler));
        }
        if let Some(walk) = outer {
            let idx = faces.find_walk(&walk).ok_or(EmbedError::OuterNotFacial)?;
            g.outer = Some(walk);
            g.outer_face = Some(idx);
        }
        Ok(g)
    }

    /// Builds a plane graph whose outer face is the face left of `u -> v`.
    /// The stored outer walk is the traced walk of that face.
    pub fn with_outer_dart(rotation: Vec<Vec<usize>>, dart: (usize, usize)) -> Result<Self, EmbedError> {
        let g = PlaneGraph::new(rotation, None)?;
        g.set_outer_dart(dart)
    }

    /// Re-designates the outer face as the face left of the dart `u -> v`.
    pub fn set_outer_dart(mut self, (u, v): (usize, usize)) -> Result<Self, EmbedError> {
        let faces = self.faces();
        let idx = faces.face_of(u, v).ok_or(EmbedError::NoSuchDart(u, v))?;
        self.outer = Some(faces.walk(idx).to_vec());
        self.outer_face = Some(idx);
        Ok(self)
    }

    /// Replaces the outer designation with `walk`, which must be facial.
    pub fn set_outer(mut self, walk: Vec<usize>) -> Result<Self, EmbedError> {
        let idx = self.faces().find_walk(&walk).ok_or(EmbedError::OuterNotFacial)?;
        self.outer = Some(walk);
        self.outer_face = Some(idx);
        Ok(self)
    }

    pub fn clear_outer(mut self) -> Self {
        self.outer = None;
        self.outer_face = None;
        self
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rotation[u].contains(&v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for (u, rot) in self.rotation.iter().enumerate() {
            let mut nb: Vec<usize> = rot.iter().copied().filter(|&v| v > u).collect();
            nb.sort_unstable();
            out.extend(nb.into_iter().map(|v| (u, v)));
        }
        out
    }

    /// Clockwise successor of `u` in the rotation at `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&w| w == u).expect("succ: not a neighbor");
        rot[(i + 1) % rot.len()]
    }

    /// Clockwise predecessor of `u` in the rotation at `v`.
    pub fn pred(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&w| w == u).expect("pred: not a neighbor");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    pub fn outer(&self) -> Option<&[usize]> {
        self.outer.as_deref()
    }

    /// Index of the outer face in [`PlaneGraph::faces`].
    pub fn outer_face(&self) -> Option<usize> {
        self.outer_face
    }

    pub fn faces(&self) -> FaceSet {
        let mut faces = trace_faces(&self.rotation);
        faces.outer = self.outer_face;
        faces
    }

    /// Keeps the edges accepted by `keep` and the vertices incident to them,
    /// relabelled in increasing host order. The outer face of the result is
    /// the face left of `outer_dart` (host labels), which must survive.
    pub fn restrict<F>(&self, keep: F, outer_dart: Option<(usize, usize)>) -> Result<SubGraph, EmbedError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = self.n();
        let mut used = vec![false; n];
        for (u, rot) in self.rotation.iter().enumerate() {
            for &v in rot {
                if keep(u.min(v), u.max(v)) {
                    used[u] = true;
                    used[v] = true;
                }
            }
        }
        if n == 1 {
            used[0] = true;
        }
        let to_host: Vec<usize> = (0..n).filter(|&v| used[v]).collect();
        let mut from_host = vec![usize::MAX; n];
        for (i, &h) in to_host.iter().enumerate() {
            from_host[h] = i;
        }
        let rotation: Vec<Vec<usize>> = to_host
            .iter()
            .map(|&u| {
                self.rotation[u]
                    .iter()
                    .copied()
                    .filter(|&v| keep(u.min(v), u.max(v)))
                    .map(|v| from_host[v])
                    .collect()
            })
            .collect();
        let graph = match outer_dart {
            Some((a, b)) => {
                let (a2, b2) = (from_host.get(a).copied(), from_host.get(b).copied());
                match (a2, b2) {
                    (Some(a2), Some(b2)) if a2 != usize::MAX && b2 != usize::MAX && keep(a.min(b), a.max(b)) => {
                        PlaneGraph::with_outer_dart(rotation, (a2, b2))?
                    }
                    _ => return Err(EmbedError::NoSuchDart(a, b)),
                }
            }
            None => PlaneGraph::new(rotation, None)?,
        };
        Ok(SubGraph { graph, to_host })
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> PlaneGraph {
        let n = self.n();
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            rotation[perm[v]] = self.rotation[v].iter().map(|&w| perm[w]).collect();
        }
        let outer = self.outer.as_ref().map(|o| o.iter().map(|&v| perm[v]).collect());
        PlaneGraph::new(rotation, outer).expect("relabelling preserves validity")
    }
}

/// A subgraph together with the host label of each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubGraph {
    pub graph: PlaneGraph,
    pub to_host: Vec<usize>,
}

impl SubGraph {
    pub fn from_host(&self, h: usize) -> Option<usize> {
        self.to_host.binary_search(&h).ok()
    }

    /// Composes the label map with an outer map `host_of` (e.g. when the
    /// host is itself a subgraph).
    pub fn lift(mut self, host_of: &[usize]) -> SubGraph {
        for h in &mut self.to_host {
            *h = host_of[*h];
        }
        self
    }
}

fn check_simple(rotation: &[Vec<usize>]) -> Result<usize, EmbedError> {
    let n = rotation.len();
    if n == 0 {
        return Err(EmbedError::Empty);
    }
    let mut darts = 0;
    for (v, rot) in rotation.iter().enumerate() {
        let mut seen = vec![false; n];
        for &w in rot {
            if w >= n {
                return Err(EmbedError::LabelOutOfRange { vertex: v, label: w });
            }
            if w == v {
                return Err(EmbedError::SelfLoop(v));
            }
            if seen[w] {
                return Err(EmbedError::RepeatedNeighbor { vertex: v, neighbor: w });
            }
            seen[w] = true;
        }
        darts += rot.len();
    }
    for (v, rot) in rotation.iter().enumerate() {
        for &w in rot {
            if !rotation[w].contains(&v) {
                return Err(EmbedError::Asymmetric { vertex: v, neighbor: w });
            }
        }
    }
    Ok(darts / 2)
}

fn check_connected(rotation: &[Vec<usize>]) -> Result<(), EmbedError> {
    let n = rotation.len();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in &rotation[u] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    match seen.iter().position(|&s| !s) {
        Some(v) => Err(EmbedError::Disconnected(v)),
        None => Ok(()),
    }
}

/// Traces all faces of a (not necessarily valid) rotation system. A graph
/// without edges has a single empty face.
pub(crate) fn trace_faces(rotation: &[Vec<usize>]) -> FaceSet {
    let n = rotation.len();
    let mut offset = Vec::with_capacity(n + 1);
    let mut total = 0;
    for rot in rotation {
        offset.push(total);
        total += rot.len();
    }
    let pos = |v: usize, u: usize| rotation[v].iter().position(|&w| w == u).unwrap();
    let mut dart_face = vec![usize::MAX; total];
    let mut walks = Vec::new();
    for u in 0..n {
        let mut order: Vec<usize> = (0..rotation[u].len()).collect();
        order.sort_by_key(|&i| rotation[u][i]);
        for i in order {
            if dart_face[offset[u] + i] != usize::MAX {
                continue;
            }
            let face = walks.len();
            let mut walk = Vec::new();
            let (mut a, mut ai) = (u, i);
            loop {
                let id = offset[a] + ai;
                if dart_face[id] != usize::MAX {
                    break;
                }
                dart_face[id] = face;
                walk.push(a);
                let b = rotation[a][ai];
                let p = pos(b, a);
                let next = (p + 1) % rotation[b].len();
                a = b;
                ai = next;
            }
            walks.push(walk);
        }
    }
    if total == 0 {
        walks.push(Vec::new());
    }
    FaceSet {
        walks,
        dart_face,
        offset,
        rotation_lens: rotation.iter().map(Vec::len).collect(),
        outer: None,
        neighbors: rotation.to_vec(),
    }
}

/// Mutable rotation system used by generators and random instance builders.
#[derive(Debug, Clone, Default)]
pub struct RotationBuilder {
    rot: Vec<Vec<usize>>,
}

impl RotationBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_graph(g: &PlaneGraph) -> Self {
        RotationBuilder { rot: g.rotation.clone() }
    }

    pub fn from_rotation(rot: Vec<Vec<usize>>) -> Self {
        RotationBuilder { rot }
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rot[u].contains(&v)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }

    /// Appends `w` to the rotation at `v` (one side only).
    pub fn push(&mut self, v: usize, w: usize) {
        self.rot[v].push(w);
    }

    /// Inserts `w` into the rotation at `v` right after `after` (one side only).
    pub fn insert_after(&mut self, v: usize, after: usize, w: usize) {
        let i = self.rot[v].iter().position(|&x| x == after).expect("insert_after: missing anchor");
        self.rot[v].insert(i + 1, w);
    }

    pub fn succ(&self, v: usize, u: usize) -> usize {
        let rot = &self.rot[v];
        let i = rot.iter().position(|&w| w == u).expect("succ: not a neighbor");
        rot[(i + 1) % rot.len()]
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rot[u].retain(|&w| w != v);
        self.rot[v].retain(|&w| w != u);
    }

    /// Walk of the face left of the dart `u -> v`.
    pub fn face_walk(&self, u: usize, v: usize) -> Vec<usize> {
        let mut walk = vec![u];
        let (mut a, mut b) = (u, v);
        loop {
            let c = self.succ(b, a);
            a = b;
            b = c;
            if a == u && b == v {
                break;
            }
            walk.push(a);
        }
        walk
    }

    /// Adds the edge `a b` through the face whose walk visits `pa -> a` and
    /// `pb -> b`: `b` goes right after `pa` at `a`, and `a` right after `pb` at `b`.
    pub fn add_chord(&mut self, a: usize, pa: usize, b: usize, pb: usize) {
        self.insert_after(a, pa, b);
        self.insert_after(b, pb, a);
    }

    /// Inserts a new vertex inside the face with the given walk, joined to
    /// every vertex of the walk. Returns the new vertex.
    pub fn stack(&mut self, walk: &[usize]) -> usize {
        let x = self.add_vertex();
        let k = walk.len();
        for i in 0..k {
            let prev = walk[(i + k - 1) % k];
            self.insert_after(walk[i], prev, x);
        }
        self.rot[x].push(walk[0]);
        for i in (1..k).rev() {
            self.rot[x].push(walk[i]);
        }
        x
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        trace_faces(&self.rot).walks
    }

    pub fn into_rotation(self) -> Vec<Vec<usize>> {
        self.rot
    }

    pub fn build(self, outer: Option<Vec<usize>>) -> Result<PlaneGraph, EmbedError> {
        PlaneGraph::new(self.rot, outer)
    }
}
