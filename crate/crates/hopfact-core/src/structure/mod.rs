//! Structure theory of semisimple Hopf algebras: factorizations and the
//! isomorphisms they induce, projection pairs, the normal Hopf subalgebra
//! lattice, socle and Krull–Schmidt–Remak decompositions, and lattice
//! duality.

pub mod decomposition;
pub mod duality;
pub mod factorization;
pub mod idempotents;
pub mod lattice;

pub use decomposition::{
    commuting_check, decomposition_from_factors, hopf_iso_search, ksr_decompose,
    ksr_decompose_ordered, ksr_uniqueness_check, normal_inside_cr, socle, socle_from_lattice,
    Decomposition, KsrObstruction, KsrOutcome, Matching,
};
pub use duality::verify_lattice_duality;
pub use factorization::{
    check_dimension_formula, complement_quotient_iso, factorization_from_projections,
    is_factorization, normal_factor_iso, projection_properties, projections_from_factorization,
    smash_factor_iso, Factorization, FactorizationKind, ProjectionPair,
};
pub use idempotents::rational_central_idempotents;
pub use lattice::{
    direct_factor_scan, enumerate_normal_lattice, head_property_check, minimal_normals,
    DirectFactorScan, HeadProperty, NormalLattice,
};
