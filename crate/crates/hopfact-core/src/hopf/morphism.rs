//! Linear maps between Hopf algebras with exactly verified compatibility flags.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{vecops, Matrix, Scalar};

use super::algebra::HopfAlgebra;

/// An exact matrix between two Hopf algebras. The three flags are only ever
/// set by exhaustive verification over basis tuples; a Hopf algebra map
/// carries all three (antipode compatibility is implied by the other two but
/// is verified independently as a cross-check).
#[derive(Clone, Debug)]
pub struct HopfMorphism {
    pub domain: Arc<HopfAlgebra>,
    pub codomain: Arc<HopfAlgebra>,
    /// `codomain.dim × domain.dim`; column `i` is the image of `e_i`.
    pub matrix: Matrix,
    pub is_algebra_map: bool,
    pub is_coalgebra_map: bool,
    pub commutes_with_antipode: bool,
}

impl HopfMorphism {
    /// Wrap a matrix and verify all three compatibility conditions.
    pub fn verified(
        domain: Arc<HopfAlgebra>,
        codomain: Arc<HopfAlgebra>,
        matrix: Matrix,
    ) -> Self {
        assert_eq!(matrix.cols(), domain.dim(), "morphism matrix shape");
        assert_eq!(matrix.rows(), codomain.dim(), "morphism matrix shape");
        let is_algebra_map = check_algebra_map(&domain, &codomain, &matrix);
        let is_coalgebra_map = check_coalgebra_map(&domain, &codomain, &matrix);
        let commutes_with_antipode =
            matrix.mul(domain.antipode_matrix()) == codomain.antipode_matrix().mul(&matrix);
        HopfMorphism {
            domain,
            codomain,
            matrix,
            is_algebra_map,
            is_coalgebra_map,
            commutes_with_antipode,
        }
    }

    pub fn is_hopf_map(&self) -> bool {
        self.is_algebra_map && self.is_coalgebra_map && self.commutes_with_antipode
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.is_square() && self.matrix.rank() == self.matrix.rows()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_hopf_map() && self.is_bijective()
    }

    /// Error out unless this is a verified Hopf algebra isomorphism.
    pub fn require_isomorphism(self) -> Result<Self> {
        if !self.is_hopf_map() {
            return Err(Error::Structure(format!(
                "map is not a Hopf algebra map (algebra {}, coalgebra {}, antipode {})",
                self.is_algebra_map, self.is_coalgebra_map, self.commutes_with_antipode
            )));
        }
        if !self.is_bijective() {
            return Err(Error::Structure("Hopf algebra map is not bijective".into()));
        }
        Ok(self)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(x)
    }
}

fn check_algebra_map(domain: &HopfAlgebra, codomain: &HopfAlgebra, m: &Matrix) -> bool {
    if m.apply(domain.unit_vec()) != codomain.unit_vec() {
        return false;
    }
    let cols: Vec<Vec<Scalar>> = (0..domain.dim()).map(|i| m.col_to_vec(i)).collect();
    for i in 0..domain.dim() {
        for j in 0..domain.dim() {
            let mut lhs = vecops::zero(codomain.dim());
            for (k, c) in domain.basis_product(i, j) {
                vecops::add_scaled(&mut lhs, &cols[*k], c);
            }
            let rhs = codomain.mul_vec(&cols[i], &cols[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn check_coalgebra_map(domain: &HopfAlgebra, codomain: &HopfAlgebra, m: &Matrix) -> bool {
    let cols: Vec<Vec<Scalar>> = (0..domain.dim()).map(|i| m.col_to_vec(i)).collect();
    for i in 0..domain.dim() {
        // ε_B ∘ φ = ε_A
        if codomain.counit_of(&cols[i]) != *domain.counit_value(i) {
            return false;
        }
        // (φ ⊗ φ)(Δ_A e_i) = Δ_B(φ e_i)
        let mut lhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (j, k, c) in domain.comult_basis(i) {
            for (a, ca) in cols[*j].iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (b, cb) in cols[*k].iter().enumerate() {
                    if cb.is_zero() {
                        continue;
                    }
                    let v = &(c * ca) * cb;
                    if !v.is_zero() {
                        *lhs.entry((a, b)).or_insert_with(Scalar::zero) += v;
                    }
                }
            }
        }
        lhs.retain(|_, v| !v.is_zero());
        let rhs = codomain.comult_of(&cols[i]);
        if lhs != rhs {
            return false;
        }
    }
    true
}
