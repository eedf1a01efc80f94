//! Exact cones, polyhedra, faces and lattice points.

pub mod cone;
pub mod dd;
pub mod face;
pub mod lattice;
pub mod linalg;
pub mod polyhedron;
pub mod vector;

pub use cone::Cone;
pub use face::{face_lattice, face_of_point, relint_contains, Face, FaceLattice};
pub use lattice::{hilbert_basis, minimal_lattice_points, Constraint, Kind, Region};
pub use polyhedron::{newton_polyhedron, Halfspace, Polyhedron};
pub use vector::{integer, rational, LatticePoint, RationalVector};
