//! Combinatorial engine for cluster categories of Dynkin types A and D:
//! indecomposables and Hom/Ext tables of the quotient translation quiver,
//! cluster-tilting objects, quivers-with-relations of the induced
//! cluster-tilted algebras, shape classification of such quivers and
//! reconstruction of an explicit cluster-tilting object from a quiver.

pub mod ar_model;
pub mod classify;
pub mod error;
pub mod homext;
pub mod presentation;
pub mod reconstruct;
pub mod selftest;
pub mod tilting;

pub use ar_model::{CategorySpec, ClusterCategory, Cover, Family, Indec, TriangleRegion};
pub use classify::{
    classify, connecting_vertices, is_type_a_quiver, ATriangle, DCandidate, Shape,
    ShapeDecomposition, TrianglePart,
};
pub use error::{Error, RejectReason};
pub use homext::{ext_dim, hom_dim, DiagonalOracle, GabrielOracle};
pub use presentation::{
    ct_quiver, quiver_iso, relations, shortest_paths, MutationAtlas, Presentation, Quiver,
};
pub use reconstruct::{reconstruct, reconstruct_a, verify_roundtrip, Reconstruction, RoundtripReport};
pub use tilting::{enumerate_ct, CTObject, SubfactorModel};
