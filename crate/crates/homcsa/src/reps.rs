//! Representations of hom-Lie algebras, bimodules of hom-center-symmetric
//! algebras, and the semidirect constructions that tie both to the algebra
//! checks.

use crate::algebra::HomAlgebra;
use crate::linalg::{ActionTensor, BilinearTensor, LinearMap, Scalar, ShapeError};
use crate::report::{AxiomReport, CheckReport};
use num_traits::Zero;

/// A candidate representation `(rho, psi)` of a hom-Lie algebra: one operator
/// per basis vector plus a twist on the module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    base: HomAlgebra,
    rho: ActionTensor,
    psi: LinearMap,
}

impl Representation {
    pub fn new(base: HomAlgebra, rho: ActionTensor, psi: LinearMap) -> Result<Self, ShapeError> {
        if rho.alg_dim() != base.dim() {
            return Err(ShapeError::DimMismatch);
        }
        if psi.rows() != rho.mod_dim() || psi.cols() != rho.mod_dim() {
            return Err(ShapeError::DimMismatch);
        }
        Ok(Representation { base, rho, psi })
    }

    pub fn base(&self) -> &HomAlgebra {
        &self.base
    }

    pub fn rho(&self) -> &ActionTensor {
        &self.rho
    }

    pub fn psi(&self) -> &LinearMap {
        &self.psi
    }

    pub fn mod_dim(&self) -> usize {
        self.rho.mod_dim()
    }

    /// Operator of a general algebra element.
    pub fn operator(&self, coeffs: &[Scalar]) -> Result<LinearMap, ShapeError> {
        self.rho.contract(coeffs)
    }

    /// Checks the two representation identities over a skew base:
    /// `rho(a(x)) psi = psi rho(x)` and
    /// `rho([x,y]) psi = rho(a(x)) rho(y) - rho(a(y)) rho(x)`.
    /// The base's own skew-symmetry report is embedded under `base-`.
    pub fn check(&self) -> CheckReport {
        let mut out = CheckReport::new();
        out.merge_prefixed("base-", self.base.check_skew().into());

        let n = self.base.dim();
        let rho_twisted: Vec<LinearMap> = (0..n)
            .map(|i| {
                self.rho
                    .contract(&self.base.twist_column(i))
                    .expect("shapes fixed")
            })
            .collect();

        let mut tw = AxiomReport::new("twist-action");
        for i in 0..n {
            let lhs = rho_twisted[i].compose(&self.psi).expect("square");
            let rhs = self.psi.compose(self.rho.mat(i)).expect("square");
            tw.expect_map_eq(&[i], &lhs, &rhs);
        }
        out.push(tw);

        let mut br = AxiomReport::new("bracket-action");
        for i in 0..n {
            for j in 0..n {
                let rho_bracket = self
                    .rho
                    .contract(&self.base.basis_product(i, j))
                    .expect("shapes fixed");
                let lhs = rho_bracket.compose(&self.psi).expect("square");
                let rhs = rho_twisted[i]
                    .compose(self.rho.mat(j))
                    .expect("square")
                    .sub(&rho_twisted[j].compose(self.rho.mat(i)).expect("square"))
                    .expect("square");
                br.expect_map_eq(&[i, j], &lhs, &rhs);
            }
        }
        out.push(br);
        out
    }

    /// Semidirect-sum hom-algebra on `base (+) module` with the bracket
    /// `[x+u, y+v] = [x,y] + rho(x)v - rho(y)u` and block-diagonal twist.
    pub fn semidirect(&self) -> HomAlgebra {
        let n = self.base.dim();
        let m = self.mod_dim();
        let mul = BilinearTensor::from_fn(n + m, n + m, n + m, |i, j, k| {
            match (i < n, j < n, k < n) {
                (true, true, true) => self.base.mul().entry(i, j, k).clone(),
                (true, false, false) => self.rho.mat(i).entry(k - n, j - n).clone(),
                (false, true, false) => -self.rho.mat(j).entry(k - n, i - n),
                _ => Scalar::zero(),
            }
        });
        let twist = self.base.twist().block_diag(&self.psi);
        HomAlgebra::new(mul, twist).expect("dimensions consistent by construction")
    }

    /// Reads the representation as a one-sided bimodule `(rho, 0, psi)`.
    pub fn to_bimodule(&self) -> Bimodule {
        Bimodule {
            base: self.base.clone(),
            left: self.rho.clone(),
            right: ActionTensor::zero(self.base.dim(), self.mod_dim()),
            phi: self.psi.clone(),
        }
    }

    /// Tensor product of two representations over the same base:
    /// `rho(x) = rho_u(x) (x) psi_v + psi_u (x) rho_v(x)` on the tensor
    /// product module, with twist `psi_u (x) psi_v`.
    pub fn tensor_product(&self, other: &Representation) -> Result<Representation, ShapeError> {
        if self.base != other.base {
            return Err(ShapeError::DimMismatch);
        }
        let n = self.base.dim();
        let mod_dim = self.mod_dim() * other.mod_dim();
        let rho = ActionTensor::new(
            n,
            mod_dim,
            (0..n)
                .map(|i| {
                    self.rho
                        .mat(i)
                        .kron(&other.psi)
                        .add(&self.psi.kron(other.rho.mat(i)))
                        .expect("kron shapes agree")
                })
                .collect(),
        )?;
        let psi = self.psi.kron(&other.psi);
        Representation::new(self.base.clone(), rho, psi)
    }
}

/// A candidate bimodule `(l, r, phi)` over a hom-algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    base: HomAlgebra,
    left: ActionTensor,
    right: ActionTensor,
    phi: LinearMap,
}

impl Bimodule {
    pub fn new(
        base: HomAlgebra,
        left: ActionTensor,
        right: ActionTensor,
        phi: LinearMap,
    ) -> Result<Self, ShapeError> {
        if left.alg_dim() != base.dim() || right.alg_dim() != base.dim() {
            return Err(ShapeError::DimMismatch);
        }
        if left.mod_dim() != right.mod_dim() {
            return Err(ShapeError::DimMismatch);
        }
        if phi.rows() != left.mod_dim() || phi.cols() != left.mod_dim() {
            return Err(ShapeError::DimMismatch);
        }
        Ok(Bimodule {
            base,
            left,
            right,
            phi,
        })
    }

    pub fn base(&self) -> &HomAlgebra {
        &self.base
    }

    pub fn left(&self) -> &ActionTensor {
        &self.left
    }

    pub fn right(&self) -> &ActionTensor {
        &self.right
    }

    pub fn phi(&self) -> &LinearMap {
        &self.phi
    }

    pub fn mod_dim(&self) -> usize {
        self.left.mod_dim()
    }

    /// Checks the bimodule axioms; the base's hom-center-symmetry report is
    /// embedded under `base-`. The three axiom families are: the module twist
    /// intertwines both actions, the twisted associator identity linking both
    /// actions to the product, and the outer-exchange identity.
    pub fn check(&self) -> CheckReport {
        let mut out = CheckReport::new();
        out.merge_prefixed("base-", self.base.check_center_symmetric());

        let n = self.base.dim();
        let l_twisted: Vec<LinearMap> = (0..n)
            .map(|i| self.left.contract(&self.base.twist_column(i)).expect("shapes fixed"))
            .collect();
        let r_twisted: Vec<LinearMap> = (0..n)
            .map(|i| self.right.contract(&self.base.twist_column(i)).expect("shapes fixed"))
            .collect();

        let mut tl = AxiomReport::new("twist-left-action");
        for i in 0..n {
            let lhs = self.phi.compose(self.left.mat(i)).expect("square");
            let rhs = l_twisted[i].compose(&self.phi).expect("square");
            tl.expect_map_eq(&[i], &lhs, &rhs);
        }
        out.push(tl);

        let mut tr = AxiomReport::new("twist-right-action");
        for i in 0..n {
            let lhs = self.phi.compose(self.right.mat(i)).expect("square");
            let rhs = r_twisted[i].compose(&self.phi).expect("square");
            tr.expect_map_eq(&[i], &lhs, &rhs);
        }
        out.push(tr);

        let mut assoc = AxiomReport::new("action-associator");
        for i in 0..n {
            for j in 0..n {
                let l_prod = self
                    .left
                    .contract(&self.base.basis_product(i, j))
                    .expect("shapes fixed");
                let r_prod_rev = self
                    .right
                    .contract(&self.base.basis_product(j, i))
                    .expect("shapes fixed");
                let lhs = l_twisted[i]
                    .compose(self.left.mat(j))
                    .expect("square")
                    .sub(&l_prod.compose(&self.phi).expect("square"))
                    .expect("square");
                let rhs = r_prod_rev
                    .compose(&self.phi)
                    .expect("square")
                    .sub(&r_twisted[i].compose(self.right.mat(j)).expect("square"))
                    .expect("square");
                assoc.expect_map_eq(&[i, j], &lhs, &rhs);
            }
        }
        out.push(assoc);

        let mut exch = AxiomReport::new("action-exchange");
        for i in 0..n {
            for j in 0..n {
                let lhs = l_twisted[i]
                    .compose(self.right.mat(j))
                    .expect("square")
                    .sub(&r_twisted[j].compose(self.left.mat(i)).expect("square"))
                    .expect("square");
                let rhs = l_twisted[j]
                    .compose(self.right.mat(i))
                    .expect("square")
                    .sub(&r_twisted[i].compose(self.left.mat(j)).expect("square"))
                    .expect("square");
                exch.expect_map_eq(&[i, j], &lhs, &rhs);
            }
        }
        out.push(exch);
        out
    }

    /// Semidirect-sum hom-algebra on `base (+) module` with the product
    /// `(x+u)(y+v) = xy + l(x)v + r(y)u` (module times module is zero) and
    /// block-diagonal twist.
    pub fn semidirect(&self) -> HomAlgebra {
        let n = self.base.dim();
        let m = self.mod_dim();
        let mul = BilinearTensor::from_fn(n + m, n + m, n + m, |i, j, k| {
            match (i < n, j < n, k < n) {
                (true, true, true) => self.base.mul().entry(i, j, k).clone(),
                (true, false, false) => self.left.mat(i).entry(k - n, j - n).clone(),
                (false, true, false) => self.right.mat(j).entry(k - n, i - n).clone(),
                _ => Scalar::zero(),
            }
        });
        let twist = self.base.twist().block_diag(&self.phi);
        HomAlgebra::new(mul, twist).expect("dimensions consistent by construction")
    }

    /// Bimodule on the dual module: the actions swap sides and dualize, the
    /// module twist dualizes.
    pub fn dual(&self) -> Bimodule {
        Bimodule {
            base: self.base.clone(),
            left: self.right.dual(),
            right: self.left.dual(),
            phi: self.phi.dual(),
        }
    }

    /// The induced candidate representation `(l - r, phi)` of the commutator
    /// algebra of the base.
    pub fn to_representation(&self) -> Representation {
        Representation {
            base: self.base.commutator_algebra(),
            rho: self.left.sub(&self.right).expect("same dimensions"),
            psi: self.phi.clone(),
        }
    }
}

/// The regular bimodule of a hom-algebra: left and right multiplication
/// acting on the algebra itself, with the algebra twist as module twist.
pub fn regular_bimodule(a: &HomAlgebra) -> Bimodule {
    Bimodule {
        base: a.clone(),
        left: a.left_rep(),
        right: a.right_rep(),
        phi: a.twist().clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::testutil::{algebra_i64, map_i64};

    fn z2_group_algebra() -> HomAlgebra {
        algebra_i64(2, &[1, 0, 0, 1, 0, 1, 1, 0], &[1, 0, 0, 1])
    }

    fn cross_product_algebra() -> HomAlgebra {
        algebra_i64(
            3,
            &[
                0, 0, 0, 0, 0, 1, 0, -1, 0, //
                0, 0, -1, 0, 0, 0, 1, 0, 0, //
                0, 1, 0, -1, 0, 0, 0, 0, 0,
            ],
            &[1, 0, 0, 0, 1, 0, 0, 0, 1],
        )
    }

    /// Involutive non-identity twist with a compatible product.
    fn sign_twist_algebra() -> HomAlgebra {
        algebra_i64(2, &[0, 0, 0, 0, 0, 0, 1, 0], &[1, 0, 0, -1])
    }

    #[test]
    fn zero_actions_form_a_bimodule_over_any_valid_base() {
        let base = z2_group_algebra();
        let b = Bimodule::new(
            base,
            ActionTensor::zero(2, 2),
            ActionTensor::zero(2, 2),
            map_i64(2, 2, &[1, 1, 0, 1]),
        )
        .unwrap();
        assert!(b.check().passed());
    }

    #[test]
    fn regular_bimodule_passes() {
        for a in [z2_group_algebra(), sign_twist_algebra()] {
            let b = regular_bimodule(&a);
            assert!(b.check().passed(), "regular bimodule over {a:?}");
        }
    }

    #[test]
    fn invalid_base_is_reported_not_panicked() {
        // Twist fails multiplicativity; the bimodule check carries that
        // failure under the base- prefix.
        let base = algebra_i64(1, &[1], &[2]);
        let b = regular_bimodule(&base);
        let report = b.check();
        assert!(!report.passed());
        assert!(report
            .failed_axioms()
            .contains(&"base-twist-multiplicative"));
    }

    #[test]
    fn zeroed_module_twist_breaks_the_associator_axiom() {
        let a = z2_group_algebra();
        let good = regular_bimodule(&a);
        let bad = Bimodule::new(
            a,
            good.left().clone(),
            good.right().clone(),
            LinearMap::zero(2, 2),
        )
        .unwrap();
        let report = bad.check();
        assert!(!report.passed());
        assert!(report.failed_axioms().contains(&"action-associator"));
    }

    #[test]
    fn bimodule_agrees_with_semidirect_center_symmetry() {
        let a = z2_group_algebra();
        let good = regular_bimodule(&a);
        assert!(good.check().passed());
        assert!(good.semidirect().check_center_symmetric().passed());

        let bad = Bimodule::new(
            a,
            good.left().clone(),
            good.right().clone(),
            LinearMap::zero(2, 2),
        )
        .unwrap();
        assert!(!bad.check().passed());
        assert!(!bad.semidirect().check_center_symmetric().passed());
    }

    #[test]
    fn semidirect_product_has_block_structure() {
        let a = sign_twist_algebra();
        let b = regular_bimodule(&a);
        let s = b.semidirect();
        assert_eq!(s.dim(), 4);
        // Algebra block reproduces the base product.
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    assert_eq!(s.mul().entry(i, j, k), a.mul().entry(i, j, k));
                    // Products never land back in the algebra block from
                    // mixed inputs, and module times module vanishes.
                    assert_eq!(s.mul().entry(i + 2, j + 2, k), &int(0));
                    assert_eq!(s.mul().entry(i + 2, j + 2, k + 2), &int(0));
                    assert_eq!(s.mul().entry(i, j + 2, k), &int(0));
                }
            }
        }
    }

    #[test]
    fn commutator_of_semidirect_is_semidirect_of_induced_representation() {
        for a in [z2_group_algebra(), sign_twist_algebra()] {
            let b = regular_bimodule(&a);
            let lhs = b.semidirect().commutator_algebra();
            let rhs = b.to_representation().semidirect();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn regular_bimodule_induces_the_adjoint_representation() {
        let a = sign_twist_algebra();
        let rep = regular_bimodule(&a).to_representation();
        assert_eq!(rep.rho(), &a.ad_rep());
        assert_eq!(rep.base(), &a.commutator_algebra());
        assert!(rep.check().passed());
    }

    #[test]
    fn adjoint_representation_of_cross_product_passes() {
        let g = cross_product_algebra();
        assert!(g.check_hom_jacobi().passed());
        // For a skew product the bracket action is left multiplication itself.
        let rep = Representation::new(g.clone(), g.left_rep(), LinearMap::identity(3)).unwrap();
        assert!(rep.check().passed());
    }

    #[test]
    fn incompatible_module_twist_fails_twist_action() {
        let g = cross_product_algebra();
        let psi = map_i64(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 2]);
        let rep = Representation::new(g.clone(), g.left_rep(), psi).unwrap();
        let report = rep.check();
        assert!(!report.passed());
        assert!(report.failed_axioms().contains(&"twist-action"));
    }

    #[test]
    fn semidirect_hom_lie_of_adjoint_satisfies_jacobi() {
        let g = cross_product_algebra();
        let rep = Representation::new(g.clone(), g.left_rep(), LinearMap::identity(3)).unwrap();
        let s = rep.semidirect();
        assert_eq!(s.dim(), 6);
        assert!(s.check_hom_jacobi().passed());
    }

    #[test]
    fn representation_reads_as_one_sided_bimodule() {
        let g = cross_product_algebra();
        let rep = Representation::new(g.clone(), g.left_rep(), LinearMap::identity(3)).unwrap();
        let b = rep.to_bimodule();
        assert!(b.right().is_zero());
        assert_eq!(b.left(), rep.rho());
    }

    #[test]
    fn dual_bimodule_is_an_involution() {
        let b = regular_bimodule(&sign_twist_algebra());
        assert_eq!(b.dual().dual(), b);
        // Sides swap and matrices transpose.
        assert_eq!(b.dual().left(), &b.right().dual());
        assert_eq!(b.dual().phi(), &b.phi().dual());
    }

    #[test]
    fn dual_of_regular_bimodule_passes_for_involutive_twist() {
        let b = regular_bimodule(&sign_twist_algebra());
        assert!(b.base().is_twist_involutive());
        assert!(b.dual().check().passed());
    }

    #[test]
    fn tensor_with_unit_module_changes_nothing() {
        let g = cross_product_algebra();
        let rep = Representation::new(g.clone(), g.left_rep(), LinearMap::identity(3)).unwrap();
        let unit = Representation::new(
            g.clone(),
            ActionTensor::zero(3, 1),
            LinearMap::identity(1),
        )
        .unwrap();
        let t = rep.tensor_product(&unit).unwrap();
        assert_eq!(t.rho(), rep.rho());
        assert_eq!(t.psi(), rep.psi());
    }

    #[test]
    fn tensor_of_adjoint_representations_passes() {
        let g = cross_product_algebra();
        let rep = Representation::new(g.clone(), g.left_rep(), LinearMap::identity(3)).unwrap();
        let t = rep.tensor_product(&rep).unwrap();
        assert_eq!(t.mod_dim(), 9);
        assert!(t.check().passed());
    }

    #[test]
    fn tensor_product_requires_equal_bases() {
        let g = cross_product_algebra();
        let h = z2_group_algebra();
        let rg = Representation::new(g.clone(), ActionTensor::zero(3, 1), LinearMap::identity(1))
            .unwrap();
        let rh = Representation::new(h, ActionTensor::zero(2, 1), LinearMap::identity(1)).unwrap();
        assert_eq!(
            rg.tensor_product(&rh).unwrap_err(),
            ShapeError::DimMismatch
        );
    }

    #[test]
    fn zero_dimensional_module_is_legal() {
        let a = z2_group_algebra();
        let b = Bimodule::new(
            a.clone(),
            ActionTensor::zero(2, 0),
            ActionTensor::zero(2, 0),
            LinearMap::zero(0, 0),
        )
        .unwrap();
        assert!(b.check().passed());
        assert_eq!(b.semidirect().dim(), 2);
        assert_eq!(b.semidirect().mul(), a.mul());
    }
}
