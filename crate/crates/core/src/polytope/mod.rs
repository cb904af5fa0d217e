//! Rational polyhedra, lattice polytopes and their face lattices.

mod faces;
mod lattice;
pub mod linalg;
mod polyhedron;

pub use faces::{format_vertex_list, parse_vertex_list, Face, FaceLattice, OrderIdeal, VertexSet};
pub use lattice::{hstar_from_counts, interpolate_at, lattice_points, LatticePolytope, SliceCounter};
pub use polyhedron::{double_description, Halfspace, RationalPolyhedron};
