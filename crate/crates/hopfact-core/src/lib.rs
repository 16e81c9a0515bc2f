//! Exact computations with finite-dimensional Hopf algebras given by
//! structure constants over the rationals.
//!
//! The crate builds group algebras, duals, tensor/smash/bicrossed products,
//! tests normality and factorizations, enumerates the lattice of normal Hopf
//! subalgebras, and machine-checks the structural facts that connect them:
//! complements, projection pairs, socle, Krull–Schmidt–Remak decomposition
//! and lattice duality — all in exact rational arithmetic.
//!
//! ```
//! use std::sync::Arc;
//! use hopfact_core::groups::{group_algebra, sub_hopf_from_subgroup, symmetric3};
//! use hopfact_core::structure::{enumerate_normal_lattice, smash_factor_iso};
//!
//! let s3 = symmetric3();
//! let h = Arc::new(group_algebra(&s3));
//! assert!(h.verify_axioms().all_pass());
//!
//! // Normal Hopf subalgebras of kS3: k, kA3, kS3.
//! let lattice = enumerate_normal_lattice(&h)?;
//! assert_eq!(lattice.dims(), vec![1, 3, 6]);
//!
//! // kS3 is the smash product of its rotation subalgebra by a reflection.
//! let a = sub_hopf_from_subgroup(&h, &s3, &[0, 1, 2])?;
//! let l = sub_hopf_from_subgroup(&h, &s3, &[0, 3])?;
//! assert!(smash_factor_iso(&h, &a, &l)?.is_isomorphism());
//! # Ok::<(), hopfact_core::Error>(())
//! ```

pub mod error;
pub mod exact;
pub mod format;
pub mod groups;
pub mod hopf;
pub mod products;
pub mod report;
pub mod structure;
pub mod subobjects;

pub use error::{Error, Result};
pub use exact::{Matrix, Polynomial, Scalar, Subspace};
pub use hopf::{Element, HopfAlgebra, HopfMorphism};
pub use report::{Check, Report};

/// Sweedler's four-dimensional Hopf algebra on the basis (1, g, x, gx):
/// g² = 1, x² = 0, xg = −gx, Δx = x⊗1 + g⊗x. A valid Hopf algebra whose
/// integral space is killed by the counit, so it is not semisimple; used to
/// exercise the negative semisimplicity branch.
pub fn sweedler4() -> HopfAlgebra {
    use exact::{Matrix, Scalar};
    let one = Scalar::one;
    let neg = || -Scalar::one();
    let mult = vec![
        (0, 0, 0, one()),
        (0, 1, 1, one()),
        (0, 2, 2, one()),
        (0, 3, 3, one()),
        (1, 0, 1, one()),
        (2, 0, 2, one()),
        (3, 0, 3, one()),
        (1, 1, 0, one()),
        (1, 2, 3, one()),
        (1, 3, 2, one()),
        (2, 1, 3, neg()),
        (3, 1, 2, neg()),
    ];
    let comult = vec![
        (0, 0, 0, one()),
        (1, 1, 1, one()),
        (2, 2, 0, one()),
        (2, 1, 2, one()),
        (3, 3, 1, one()),
        (3, 0, 3, one()),
    ];
    let unit = vec![one(), Scalar::zero(), Scalar::zero(), Scalar::zero()];
    let counit = vec![one(), one(), Scalar::zero(), Scalar::zero()];
    let mut antipode = Matrix::zeros(4, 4);
    antipode[(0, 0)] = one();
    antipode[(1, 1)] = one();
    antipode[(3, 2)] = neg(); // S(x) = -gx
    antipode[(2, 3)] = one(); // S(gx) = x
    HopfAlgebra::from_tensors(4, mult, unit, comult, counit, antipode)
        .expect("Sweedler algebra constants are well-formed")
}
