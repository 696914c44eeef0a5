//! Combinatorial embeddings: plane graphs, PLG serialization, face tracing,
//! connectivity and circuit graphs.

mod circuit;
mod connectivity;
mod plane;
mod plg;

pub use circuit::{
    circuit_from_outer, deficiency_m, interior_of_cycle, is_cycle, is_near_triangulation,
    validate_circuit_graph, CircuitError, CircuitGraph,
};
pub(crate) use circuit::interior_faces;
pub use connectivity::{blocks, components_without, cut_vertices, cuts, is_connected_without};
pub use plane::{same_cyclic_sequence, EmbedError, FaceSet, PlaneGraph, RotationBuilder, SubGraph};
pub use plg::{normalize_plg, parse_plg, serialize_plg, PlgError, MAX_VERTICES};

/// Faces of `g` by the next-edge rule of its rotation system.
pub fn trace_faces(g: &PlaneGraph) -> FaceSet {
    g.faces()
}
