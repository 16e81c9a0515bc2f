//! The Hopf algebra structure-constant bundle: axioms, duals, tensor
//! products, morphisms, integrals and semisimplicity.

pub mod algebra;
pub mod morphism;

pub use algebra::{
    require_valid, verify_axioms, Axiom, AxiomCheck, AxiomReport, Element, HopfAlgebra, SparseVec,
};
pub use morphism::HopfMorphism;
