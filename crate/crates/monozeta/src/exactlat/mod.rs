//! Exact lattice geometry: integer linear algebra, convex hulls, polyhedra,
//! faces, and normalized/mixed volumes. All arithmetic is over BigInt (and
//! BigRational internally), so results are exact in every dimension the
//! ambient guard admits.

pub mod faces;
pub mod hull;
pub mod matrix;
pub mod num;
pub mod point;
pub mod polyhedron;
pub mod volume;

pub use faces::{
    compact_facet_data, facet_data, faces_of_dim, polyhedron_faces_of_dim, supporting_face,
    supporting_face_polyhedron, FaceData, Sense,
};
pub use hull::{convex_hull, FacetIneq, Polytope, MAX_AMBIENT_DIM};
pub use matrix::{integer_kernel, rank, row_hnf, saturate};
pub use point::{Covector, LatticePoint, LatticeVector};
pub use polyhedron::{polyhedron_hull, Polyhedron};
pub use volume::{minkowski_sum, mixed_volume, normalized_volume, volume_as_dim};

use matrix::Row;

/// Canonical basis of the integer row span (Hermite form, no saturation):
/// `{(2,2)}` stays `{(2,2)}`.
pub fn hnf_lattice_basis(vectors: &[LatticeVector]) -> Vec<LatticeVector> {
    let rows: Vec<Row> = vectors.iter().map(|v| v.0.clone()).collect();
    row_hnf(&rows).into_iter().map(LatticePoint).collect()
}

/// Canonical basis of the saturation of the span: `{(2,2)}` becomes
/// `{(1,1)}`.
pub fn saturated_lattice_basis(vectors: &[LatticeVector], ambient: usize) -> Vec<LatticeVector> {
    let rows: Vec<Row> = vectors.iter().map(|v| v.0.clone()).collect();
    saturate(&rows, ambient).into_iter().map(LatticePoint).collect()
}
