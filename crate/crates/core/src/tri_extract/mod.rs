//! Large near triangulations inside sparse-deficiency circuit graphs.
//!
//! [`find_near_triangulation`] takes a circuit graph `(G, C)` and `t >= 4`
//! with `(3t - 7) m(G) < v(G) - (t - 1)` and returns a near triangulation
//! on at least `t` vertices that is the inside of some cycle of `G`. Each
//! step picks one interior non-triangular face `F` and moves to a smaller
//! circuit graph, which strictly lowers the deficiency:
//!
//! * **A** `F ∩ C` has several components: split along `F` into pieces.
//! * **B** `F ∩ C` is a path with an edge: delete the path.
//! * **C** `F ∩ C` is one vertex `x`: drop one of the two edge fans at
//!   `x`, or split into three pieces around the block of `G - x` holding `F`.
//! * **D** `F` misses `C`: cut out a region between two disjoint `C`–`F`
//!   paths, shrunk until it is a near triangulation.
//!
//! Among several pieces, the one maximising `(v - (t-1)) / m` is kept.

mod flow;
mod oracle;

use std::collections::HashSet;

use thiserror::Error;

use crate::embed::{
    blocks, circuit_from_outer, cuts, interior_faces, interior_of_cycle, is_cycle, is_near_triangulation,
    CircuitGraph, PlaneGraph, SubGraph,
};

pub use oracle::oracle_near_triangulation;

/// A near triangulation found inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NtWitness {
    /// The near triangulation, outer cycle designated.
    pub graph: PlaneGraph,
    /// Host label of each vertex.
    pub to_host: Vec<usize>,
}

impl NtWitness {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Outer cycle in host labels.
    pub fn outer_in_host(&self) -> Vec<usize> {
        self.graph.outer().unwrap_or(&[]).iter().map(|&v| self.to_host[v]).collect()
    }

    /// Checks that the witness is a near triangulation on at least `t`
    /// vertices embedded injectively as a subgraph of `host`.
    pub fn validate(&self, host: &PlaneGraph, t: usize) -> Result<(), String> {
        if self.to_host.len() != self.graph.n() {
            return Err("label map has the wrong length".into());
        }
        let mut seen = HashSet::new();
        if !self.to_host.iter().all(|&h| h < host.n() && seen.insert(h)) {
            return Err("label map is not injective into the host".into());
        }
        for (u, v) in self.graph.edges() {
            if !host.has_edge(self.to_host[u], self.to_host[v]) {
                return Err(format!("edge {}-{} missing from host", self.to_host[u], self.to_host[v]));
            }
        }
        if !is_near_triangulation(&self.graph) {
            return Err("not a near triangulation".into());
        }
        if self.graph.n() < t {
            return Err(format!("only {} vertices, need {t}", self.graph.n()));
        }
        Ok(())
    }

    /// True when the witness is exactly the inside of its outer cycle in `host`.
    pub fn is_cycle_interior_of(&self, host: &PlaneGraph) -> bool {
        let Ok(sub) = interior_of_cycle(host, &self.outer_in_host()) else { return false };
        let mut mine = self.to_host.clone();
        mine.sort_unstable();
        sub.to_host == mine && sub.graph.edge_count() == self.graph.edge_count()
    }
}

/// Which reduction a step used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    A,
    B,
    C,
    D,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CaseTag::A => "A",
            CaseTag::B => "B",
            CaseTag::C => "C",
            CaseTag::D => "D",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub case: CaseTag,
    /// The face handled, in host labels.
    pub face: Vec<usize>,
    pub m_before: usize,
    pub m_after: usize,
    pub v_before: usize,
    pub v_after: usize,
    /// Which move within the case: `split`, `path`, `fan-y`, `fan-z`,
    /// `block`, `region` or `remove-region`.
    pub action: &'static str,
}

impl std::fmt::Display for TraceStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let face: Vec<String> = self.face.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "{} {} face=[{}] m={}->{} v={}->{}",
            self.case,
            self.action,
            face.join(" "),
            self.m_before,
            self.m_after,
            self.v_before,
            self.v_after
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExtractTrace {
    pub steps: Vec<TraceStep>,
    /// Cases where a fan deletion left a 2-connected graph that failed
    /// circuit-graph validation; the decomposition branch was used instead.
    pub anomalies: Vec<String>,
}

impl ExtractTrace {
    /// Deficiency strictly decreases step to step.
    pub fn is_monotone(&self) -> bool {
        self.steps.iter().all(|s| s.m_after < s.m_before)
            && self.steps.windows(2).all(|w| w[1].m_before == w[0].m_after)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("precondition violated: {reason} (m={m}, v={v}, t={t})")]
    PreconditionViolated { m: usize, v: usize, t: usize, reason: String },
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}

fn broken<T>(msg: impl Into<String>) -> Result<T, ExtractError> {
    Err(ExtractError::InternalInvariantBroken(msg.into()))
}

/// `(3t - 7) m < v - (t - 1)` and `v >= t`.
pub fn precondition_holds(m: usize, v: usize, t: usize) -> bool {
    t >= 4 && v >= t && (3 * t - 7) * m + (t - 1) < v
}

/// A circuit graph together with the labels of its vertices in the graph
/// of the previous step.
struct Piece {
    cg: CircuitGraph,
    to_parent: Vec<usize>,
    action: &'static str,
}

fn piece(sub: SubGraph, what: &str, action: &'static str) -> Result<Piece, ExtractError> {
    match circuit_from_outer(&sub.graph) {
        Ok(cg) => Ok(Piece { cg, to_parent: sub.to_host, action }),
        Err(e) => broken(format!("{what} is not a circuit graph: {e}")),
    }
}

pub fn find_near_triangulation(cg: &CircuitGraph, t: usize) -> Result<(NtWitness, ExtractTrace), ExtractError> {
    let (m, v) = (cg.deficiency(), cg.n());
    if t < 4 {
        return Err(ExtractError::PreconditionViolated { m, v, t, reason: "t must be at least 4".into() });
    }
    if v < t {
        return Err(ExtractError::PreconditionViolated { m, v, t, reason: "fewer than t vertices".into() });
    }
    if !precondition_holds(m, v, t) {
        return Err(ExtractError::PreconditionViolated {
            m,
            v,
            t,
            reason: "(3t-7)*m < v-(t-1) fails".into(),
        });
    }
    let mut trace = ExtractTrace::default();
    let mut cur = cg.clone();
    let mut to_host: Vec<usize> = (0..v).collect();
    loop {
        let (m, v) = (cur.deficiency(), cur.n());
        if !precondition_holds(m, v, t) {
            return broken(format!("piece with m={m}, v={v} fails the precondition for t={t}"));
        }
        if m == 0 {
            let witness = NtWitness { graph: cur.into_graph(), to_host };
            return Ok((witness, trace));
        }
        let (case, face) = select_face(&cur);
        let next = match case {
            CaseTag::A => case_a(&cur, &face, t)?,
            CaseTag::B => case_b(&cur, &face)?,
            CaseTag::C => case_c(&cur, &face, t, &mut trace.anomalies)?,
            CaseTag::D => case_d(&cur, &face, t)?,
        };
        let m_after = next.cg.deficiency();
        trace.steps.push(TraceStep {
            case,
            face: face.iter().map(|&x| to_host[x]).collect(),
            m_before: m,
            m_after,
            v_before: v,
            v_after: next.cg.n(),
            action: next.action,
        });
        if m_after >= m {
            return broken(format!("deficiency did not drop in case {case} ({m} -> {m_after})"));
        }
        to_host = next.to_parent.iter().map(|&p| to_host[p]).collect();
        cur = next.cg;
    }
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn cycle_edge_set(c: &[usize]) -> HashSet<(usize, usize)> {
    (0..c.len()).map(|i| norm(c[i], c[(i + 1) % c.len()])).collect()
}

/// A contact component: its vertices and the edges it shares with `C`.
type Contact = (Vec<usize>, Vec<(usize, usize)>);

/// Components of `F ∩ C`.
fn contact_components(outer: &[usize], face: &[usize]) -> Vec<Contact> {
    let on_c: HashSet<usize> = outer.iter().copied().collect();
    let c_edges = cycle_edge_set(outer);
    let contacts: Vec<usize> = face.iter().copied().filter(|v| on_c.contains(v)).collect();
    let shared: Vec<(usize, usize)> =
        cycle_edge_set(face).into_iter().filter(|e| c_edges.contains(e)).collect();
    let mut comp: Vec<Contact> = Vec::new();
    let mut owner: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for &x in &contacts {
        owner.insert(x, comp.len());
        comp.push((vec![x], Vec::new()));
    }
    let mut sorted_shared = shared;
    sorted_shared.sort_unstable();
    for (a, b) in sorted_shared {
        let (ia, ib) = (owner[&a], owner[&b]);
        if ia != ib {
            let moved = std::mem::take(&mut comp[ib]);
            for &v in &moved.0 {
                owner.insert(v, ia);
            }
            comp[ia].0.extend(moved.0);
            comp[ia].1.extend(moved.1);
        }
        comp[ia].1.push((a, b));
    }
    comp.retain(|c| !c.0.is_empty());
    comp
}

fn classify(outer: &[usize], face: &[usize]) -> CaseTag {
    let comps = contact_components(outer, face);
    match comps.len() {
        0 => CaseTag::D,
        1 if comps[0].1.is_empty() => CaseTag::C,
        1 => CaseTag::B,
        _ => CaseTag::A,
    }
}

/// Interior non-triangular face ordered by case, size, then walk.
fn select_face(cg: &CircuitGraph) -> (CaseTag, Vec<usize>) {
    let g = cg.graph();
    let outer = cg.outer_cycle();
    let faces = g.faces();
    faces
        .interior()
        .map(|f| faces.walk(f))
        .filter(|w| w.len() > 3)
        .map(|w| (classify(outer, w), w.len(), w.to_vec()))
        .min()
        .map(|(c, _, w)| (c, w))
        .expect("positive deficiency implies a non-triangular face")
}

/// Vertices of `walk` from position of `from` to position of `to`, moving
/// forward (or backward), both ends included.
fn arc(walk: &[usize], from: usize, to: usize, forward: bool) -> Vec<usize> {
    let k = walk.len();
    let mut i = walk.iter().position(|&v| v == from).expect("arc start on walk");
    let mut out = vec![from];
    while walk[i] != to {
        i = if forward { (i + 1) % k } else { (i + k - 1) % k };
        out.push(walk[i]);
    }
    out
}

/// Keeps a piece with `m = 0` and `v >= t` if present, otherwise the piece
/// maximising `(v - (t - 1)) / m` among those with `v >= t`.
fn choose_piece(pieces: Vec<Piece>, t: usize) -> Result<Piece, ExtractError> {
    let mut best: Option<(usize, usize, Piece)> = None;
    for p in pieces {
        let (v, m) = (p.cg.n(), p.cg.deficiency());
        if v < t {
            continue;
        }
        if m == 0 {
            return Ok(p);
        }
        let num = v - (t - 1);
        let better = match &best {
            None => true,
            Some((bn, bm, _)) => num * bm > bn * m,
        };
        if better {
            best = Some((num, m, p));
        }
    }
    match best {
        Some((_, _, p)) => Ok(p),
        None => broken("no piece has at least t vertices"),
    }
}

fn case_a(cg: &CircuitGraph, face: &[usize], t: usize) -> Result<Piece, ExtractError> {
    let g = cg.graph();
    let outer = cg.outer_cycle();
    let faces = g.faces();
    let f_idx = faces.find_walk(face).expect("face is facial");
    let on_f: HashSet<usize> = face.iter().copied().collect();
    let contacts: Vec<usize> = outer.iter().copied().filter(|v| on_f.contains(v)).collect();
    let s = contacts.len();
    let mut pieces = Vec::new();
    let mut m_sum = 0;
    for i in 0..s {
        let (xi, xj) = (contacts[i], contacts[(i + 1) % s]);
        let c_arc = arc(outer, xi, xj, true);
        let mut chosen: Option<(usize, Vec<usize>)> = None;
        for forward in [true, false] {
            let f_arc = arc(face, xi, xj, forward);
            if c_arc.len() == 2 && f_arc.len() == 2 {
                continue;
            }
            let mut cycle = c_arc.clone();
            cycle.extend(f_arc[1..f_arc.len() - 1].iter().rev());
            if !is_cycle(g, &cycle) {
                continue;
            }
            let inside = interior_faces(g, &cycle).map_err(|e| ExtractError::InternalInvariantBroken(e.to_string()))?;
            if inside[f_idx] {
                continue;
            }
            let count = inside.iter().filter(|&&b| b).count();
            if chosen.as_ref().is_none_or(|(c, _)| count < *c) {
                chosen = Some((count, cycle));
            }
        }
        if let Some((_, cycle)) = chosen {
            let sub = interior_of_cycle(g, &cycle).map_err(|e| ExtractError::InternalInvariantBroken(e.to_string()))?;
            let p = piece(sub, "split piece", "split")?;
            m_sum += p.cg.deficiency();
            pieces.push(p);
        }
    }
    if cg.deficiency() != face.len() - 3 + m_sum {
        return broken("split pieces do not account for the deficiency");
    }
    choose_piece(pieces, t)
}

fn case_b(cg: &CircuitGraph, face: &[usize]) -> Result<Piece, ExtractError> {
    let g = cg.graph();
    let outer = cg.outer_cycle();
    let comps = contact_components(outer, face);
    let (verts, edges) = &comps[0];
    if edges.len() >= outer.len() {
        return broken("face coincides with the outer cycle");
    }
    let mut deg = std::collections::HashMap::new();
    for &(a, b) in edges {
        *deg.entry(a).or_insert(0) += 1;
        *deg.entry(b).or_insert(0) += 1;
    }
    let mut internal = vec![false; g.n()];
    for v in verts {
        if deg.get(v) == Some(&2) {
            internal[*v] = true;
        }
    }
    let single = if internal.iter().any(|&b| b) { None } else { Some(edges[0]) };
    let path_edges: HashSet<(usize, usize)> = edges.iter().copied().collect();
    let k = outer.len();
    let dart = (0..k)
        .map(|i| (outer[i], outer[(i + 1) % k]))
        .find(|&(a, b)| !internal[a] && !internal[b] && !path_edges.contains(&norm(a, b)));
    let Some(dart) = dart else { return broken("no outer edge survives the path deletion") };
    let keep = |u: usize, v: usize| !internal[u] && !internal[v] && Some((u, v)) != single;
    let sub = g.restrict(keep, Some(dart)).map_err(|e| ExtractError::InternalInvariantBroken(e.to_string()))?;
    piece(sub, "graph after deleting the boundary path", "path")
}

/// Neighbours of `x` from `from` clockwise through `to`, inclusive.
fn fan(g: &PlaneGraph, x: usize, from: usize, to: usize) -> Vec<usize> {
    let mut out = vec![from];
    let mut w = from;
    while w != to {
        w = g.succ(x, w);
        out.push(w);
    }
    out
}

/// Deletes the edges from `x` to `fan`; `Some` when the rest is 2-connected.
fn without_fan(
    g: &PlaneGraph,
    x: usize,
    fan: &[usize],
    dart: (usize, usize),
    action: &'static str,
    anomalies: &mut Vec<String>,
) -> Result<Option<Piece>, ExtractError> {
    let drop: HashSet<(usize, usize)> = fan.iter().map(|&y| norm(x, y)).collect();
    let sub = g
        .restrict(|u, v| !drop.contains(&(u, v)), Some(dart))
        .map_err(|e| ExtractError::InternalInvariantBroken(e.to_string()))?;
    if sub.graph.n() != g.n() || sub.graph.n() < 3 || !cuts(&sub.graph, 1).is_empty() {
        return Ok(None);
    }
    match circuit_from_outer(&sub.graph) {
        Ok(cg) => Ok(Some(Piece { cg, to_parent: sub.to_host, action })),
        Err(e) => {
            anomalies.push(format!("fan deletion at {x} is 2-connected but not a circuit graph: {e}"));
            Ok(None)
        }
    }
}

fn case_c(cg: &CircuitGraph, face: &[usize], t: usize, anomalies: &mut Vec<String>) -> Result<Piece, ExtractError> {
    let g = cg.graph();
    let outer = cg.outer_cycle();
    let on_c: HashSet<usize> = outer.iter().copied().collect();
    let fi = face.iter().position(|v| on_c.contains(v)).unwrap();
    let fk = face.len();
    let x = face[fi];
    let a = face[(fi + fk - 1) % fk];
    let b = face[(fi + 1) % fk];
    let ci = outer.iter().position(|&v| v == x).unwrap();
    let ck = outer.len();
    let c = outer[(ci + ck - 1) % ck];
    let d = outer[(ci + 1) % ck];
    debug_assert_eq!(g.succ(x, a), b);
    debug_assert_eq!(g.succ(x, c), d);

    let y_fan = fan(g, x, d, a);
    let z_fan = fan(g, x, b, c);
    if let Some(p) = without_fan(g, x, &y_fan, (c, x), "fan-y", anomalies)? {
        return Ok(p);
    }
    if let Some(p) = without_fan(g, x, &z_fan, (x, d), "fan-z", anomalies)? {
        return Ok(p);
    }

    // Split around the block of G - x containing F - x.
    let mut removed = vec![false; g.n()];
    removed[x] = true;
    let f_edge = norm(b, face[(fi + 2) % fk]);
    let block: HashSet<(usize, usize)> = match blocks(g.rotations(), &removed).into_iter().find(|bl| bl.contains(&f_edge)) {
        Some(bl) => bl.into_iter().collect(),
        None => return broken("face edge lies in no block"),
    };
    let bsub = g
        .restrict(|u, v| block.contains(&(u, v)), Some((b, face[(fi + 2) % fk])))
        .map_err(|e| ExtractError::InternalInvariantBroken(e.to_string()))?;
    let bpiece = piece(bsub, "block around the face", "block")?;
    let cb: Vec<usize> = bpiece.cg.outer_cycle().iter().map(|&v| bpiece.to_parent[v]).collect();
    let in_b: HashSet<usize> = bpiece.to_parent.iter().copied().collect();

    let path_c = arc(outer, d, c, true);
    let Some(i1) = path_c.iter().position(|v| in_b.contains(v)) else {
        return broken("block misses the outer cycle");
    };
    let i2 = path_c.iter().rposition(|v| in_b.contains(v)).unwrap();
    if i1 == i2 {
        return broken("block meets the outer cycle in a single vertex");
    }
    let (v1, v2) = (path_c[i1], path_c[i2]);
    let cb_arc = |from: usize, to: usize, avoid: usize| {
        let fwd = arc(&cb, from, to, true);
        if fwd.contains(&avoid) {
            arc(&cb, from, to, false)
        } else {
            fwd
        }
    };
    let mut c1 = vec![x];
    c1.extend(&path_c[..=i1]);
    c1.extend(&cb_arc(v1, a, b)[1..]);
    let mut c2 = vec![x];
    c2.extend(cb_arc(b, v2, a));
    c2.extend(&path_c[i2 + 1..]);
    let mut pieces = Vec::new();
    for cyc in [&c1, &c2] {
        let sub = interior_of_cycle(g, cyc).map_err(|e| ExtractError::InternalInvariantBroken(e.to_string()))?;
        pieces.push(piece(sub, "side piece at the contact vertex", "block")?);
    }
    pieces.push(bpiece);
    let sum: usize = pieces.iter().map(|p| p.cg.deficiency()).sum();
    if cg.deficiency() != sum + face.len() - 3 {
        return broken("contact-vertex pieces do not account for the deficiency");
    }
    choose_piece(pieces, t)
}

/// Region between `C` and a face bounded by two disjoint connecting paths.
struct Region {
    cycle: Vec<usize>,
    inside: Vec<bool>,
    paths: [Vec<usize>; 2],
}

fn case_d(cg: &CircuitGraph, face: &[usize], t: usize) -> Result<Piece, ExtractError> {
    let g = cg.graph();
    let outer = cg.outer_cycle();
    let faces = g.faces();
    let n = g.n();
    let mut on_c = vec![false; n];
    outer.iter().for_each(|&v| on_c[v] = true);

    let mut allowed: Vec<bool> = (0..faces.len()).map(|f| Some(f) != faces.outer()).collect();
    let mut target = faces.find_walk(face).expect("face is facial");
    let mut region_vertices = vec![true; n];
    let region = loop {
        let walk = faces.walk(target);
        let mut sources = vec![false; n];
        walk.iter().for_each(|&v| sources[v] = true);
        let sinks: Vec<bool> = (0..n).map(|v| on_c[v] && region_vertices[v]).collect();
        let internal: Vec<bool> = (0..n).map(|v| region_vertices[v] && !sources[v] && !on_c[v]).collect();
        let edge_ok = |u: usize, v: usize| {
            let f1 = faces.face_of(u, v).unwrap();
            let f2 = faces.face_of(v, u).unwrap();
            allowed[f1] || allowed[f2]
        };
        let Some(paths) = flow::two_disjoint_paths(g.rotations(), &sources, &sinks, &internal, &edge_ok) else {
            return broken("no two disjoint paths from the face to the outer cycle");
        };
        let mut best: Option<Region> = None;
        let (f1, f2) = (paths[0][0], paths[1][0]);
        let (c1, c2) = (*paths[0].last().unwrap(), *paths[1].last().unwrap());
        for f_fwd in [true, false] {
            for c_fwd in [true, false] {
                let mut cycle = arc(walk, f1, f2, f_fwd);
                cycle.extend(&paths[1][1..]);
                let carc = arc(outer, c2, c1, c_fwd);
                cycle.extend(&carc[1..]);
                let back: Vec<usize> = paths[0].iter().rev().copied().collect();
                cycle.extend(&back[1..back.len() - 1]);
                if !is_cycle(g, &cycle) {
                    continue;
                }
                let inside =
                    interior_faces(g, &cycle).map_err(|e| ExtractError::InternalInvariantBroken(e.to_string()))?;
                if inside[target] || inside.iter().zip(&allowed).any(|(&i, &a)| i && !a) {
                    continue;
                }
                let count = inside.iter().filter(|&&b| b).count();
                let smaller = match &best {
                    None => true,
                    Some(r) => count < r.inside.iter().filter(|&&b| b).count(),
                };
                if smaller {
                    best = Some(Region { cycle, inside, paths: paths.clone() });
                }
            }
        }
        let Some(region) = best else { return broken("no region between the paths excludes the face") };
        let next = faces
            .interior()
            .filter(|&f| region.inside[f] && faces.walk(f).len() > 3)
            .min_by(|&x, &y| {
                (faces.walk(x).len(), faces.walk(x)).cmp(&(faces.walk(y).len(), faces.walk(y)))
            });
        match next {
            None => break region,
            Some(f) => {
                allowed = region.inside.clone();
                region_vertices = vec![false; n];
                for (fi, &ins) in region.inside.iter().enumerate() {
                    if ins {
                        faces.walk(fi).iter().for_each(|&v| region_vertices[v] = true);
                    }
                }
                target = f;
            }
        }
    };

    let h_sub = interior_of_cycle(g, &region.cycle).map_err(|e| ExtractError::InternalInvariantBroken(e.to_string()))?;
    if h_sub.graph.n() >= t {
        return piece(h_sub, "region between the paths", "region");
    }
    let mut in_h = vec![false; n];
    h_sub.to_host.iter().for_each(|&v| in_h[v] = true);
    let mut on_path = vec![false; n];
    let mut path_edges = HashSet::new();
    for p in &region.paths {
        p.iter().for_each(|&v| on_path[v] = true);
        for w in p.windows(2) {
            path_edges.insert(norm(w[0], w[1]));
        }
    }
    let deleted: Vec<bool> = (0..n).map(|v| in_h[v] && !on_path[v]).collect();
    let h_edge = |u: usize, v: usize| {
        let f1 = faces.face_of(u, v).unwrap();
        let f2 = faces.face_of(v, u).unwrap();
        region.inside[f1] || region.inside[f2]
    };
    let k = outer.len();
    let dart = (0..k)
        .map(|i| (outer[i], outer[(i + 1) % k]))
        .find(|&(a, b)| !h_edge(a, b) && !deleted[a] && !deleted[b]);
    let Some(dart) = dart else { return broken("no outer edge survives the region deletion") };
    let keep = |u: usize, v: usize| !deleted[u] && !deleted[v] && (!h_edge(u, v) || path_edges.contains(&(u, v)));
    let sub = g.restrict(keep, Some(dart)).map_err(|e| ExtractError::InternalInvariantBroken(e.to_string()))?;
    piece(sub, "graph after removing the region", "remove-region")
}

#[cfg(test)]
mod tests;
