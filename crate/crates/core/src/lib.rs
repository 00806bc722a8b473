//! Exact computation of graded Betti numbers, modified type and type defect
//! of Stanley-Reisner ideals, together with the Cohen-Macaulay, chordality,
//! treeish and linear-resolution classifications built on them.

pub mod betti;
pub mod cli;
pub mod cm;
pub mod complex;
pub mod document;
pub mod error;
pub mod field;
pub mod glue;
pub mod graph;
pub mod homology;
pub mod linalg;
pub mod linres;
pub mod oracle;
pub mod report;
pub mod suites;
pub mod vertex_set;

pub use betti::{
    betti_table, dual_type, graph_type, modified_type, total_betti, type_defect, BettiTable,
};
pub use complex::{FVector, HVector, Induced, SimplicialComplex};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use homology::{boundary_matrix, reduced_homology, BoundaryMatrix, HomologyProfile};
pub use vertex_set::VertexSet;
