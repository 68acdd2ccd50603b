//! Matched pairs: two hom-algebras acting on each other, the compatibility
//! equations that make the actions mesh, and the bicross product on the
//! direct sum.
//!
//! The cross equations are checked term by term, one basis tuple at a time;
//! their correctness is cross-validated elsewhere by the fact that a
//! candidate is a matched pair precisely when its bicross product is
//! hom-center-symmetric (respectively hom-Lie).

use crate::algebra::HomAlgebra;
use crate::linalg::{vadd, vsub, vzero, ActionTensor, BilinearTensor, Scalar, ShapeError};
use crate::report::{AxiomReport, CheckReport};
use crate::reps::{Bimodule, Representation};
use num_traits::Zero;

/// Candidate matched pair of hom-center-symmetric algebras: `a` and `b`
/// together with left/right actions of each on the other.
///
/// `left_a`/`right_a` are the actions of `a` on `b` (one `dim b` operator per
/// basis vector of `a`); `left_b`/`right_b` act the other way around.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairCsa {
    a: HomAlgebra,
    b: HomAlgebra,
    left_a: ActionTensor,
    right_a: ActionTensor,
    left_b: ActionTensor,
    right_b: ActionTensor,
}

impl MatchedPairCsa {
    pub fn new(
        a: HomAlgebra,
        b: HomAlgebra,
        left_a: ActionTensor,
        right_a: ActionTensor,
        left_b: ActionTensor,
        right_b: ActionTensor,
    ) -> Result<Self, ShapeError> {
        let (n, m) = (a.dim(), b.dim());
        for act in [&left_a, &right_a] {
            if act.alg_dim() != n || act.mod_dim() != m {
                return Err(ShapeError::DimMismatch);
            }
        }
        for act in [&left_b, &right_b] {
            if act.alg_dim() != m || act.mod_dim() != n {
                return Err(ShapeError::DimMismatch);
            }
        }
        Ok(MatchedPairCsa {
            a,
            b,
            left_a,
            right_a,
            left_b,
            right_b,
        })
    }

    pub fn a(&self) -> &HomAlgebra {
        &self.a
    }

    pub fn b(&self) -> &HomAlgebra {
        &self.b
    }

    pub fn left_a(&self) -> &ActionTensor {
        &self.left_a
    }

    pub fn right_a(&self) -> &ActionTensor {
        &self.right_a
    }

    pub fn left_b(&self) -> &ActionTensor {
        &self.left_b
    }

    pub fn right_b(&self) -> &ActionTensor {
        &self.right_b
    }

    /// Full matched-pair check: each side is a bimodule over the other
    /// (reported under `a-`/`b-`), plus the four cross equations tying the
    /// two products to the four actions.
    pub fn check(&self) -> CheckReport {
        let mut out = CheckReport::new();

        let bim_a = Bimodule::new(
            self.a.clone(),
            self.left_a.clone(),
            self.right_a.clone(),
            self.b.twist().clone(),
        )
        .expect("shapes checked in constructor");
        out.merge_prefixed("a-", bim_a.check());

        let bim_b = Bimodule::new(
            self.b.clone(),
            self.left_b.clone(),
            self.right_b.clone(),
            self.a.twist().clone(),
        )
        .expect("shapes checked in constructor");
        out.merge_prefixed("b-", bim_b.check());

        let (n, m) = (self.a.dim(), self.b.dim());
        let (a, b) = (&self.a, &self.b);
        let (la, ra, lb, rb) = (&self.left_a, &self.right_a, &self.left_b, &self.right_b);

        // First A-valued equation: for x, y in A and a in B,
        //   (lb(a)x) . aA(y) + lb(rA(x)a)(aA(y)) - lb(aB(a))(x.y)
        //   - rb(aB(a))(y.x) + aA(y) . (rb(a)x) + rb(lA(x)a)(aA(y)) = 0.
        let mut cross1 = AxiomReport::new("cross-associator-a");
        for i in 0..n {
            for j in 0..n {
                for p in 0..m {
                    let twisted_y = a.twist_column(j);
                    let twisted_a = b.twist_column(p);
                    let mut sum = a
                        .product(&lb.mat(p).column(i), &twisted_y)
                        .expect("shapes fixed");
                    sum = vadd(
                        &sum,
                        &lb.contract(&ra.mat(i).column(p))
                            .expect("shapes fixed")
                            .apply(&twisted_y)
                            .expect("shapes fixed"),
                    );
                    sum = vsub(
                        &sum,
                        &lb.contract(&twisted_a)
                            .expect("shapes fixed")
                            .apply(&a.basis_product(i, j))
                            .expect("shapes fixed"),
                    );
                    sum = vsub(
                        &sum,
                        &rb.contract(&twisted_a)
                            .expect("shapes fixed")
                            .apply(&a.basis_product(j, i))
                            .expect("shapes fixed"),
                    );
                    sum = vadd(
                        &sum,
                        &a.product(&twisted_y, &rb.mat(p).column(i))
                            .expect("shapes fixed"),
                    );
                    sum = vadd(
                        &sum,
                        &rb.contract(&la.mat(i).column(p))
                            .expect("shapes fixed")
                            .apply(&twisted_y)
                            .expect("shapes fixed"),
                    );
                    cross1.expect_eq(&[i, j, p], sum, vzero(n));
                }
            }
        }
        out.push(cross1);

        // Second A-valued equation: for x, y in A and a in B,
        //   (rb(a)x) . aA(y) + lb(lA(x)a)(aA(y)) - aA(x) . (lb(a)y)
        //   - rb(rA(y)a)(aA(x)) - (rb(a)y) . aA(x) - lb(lA(y)a)(aA(x))
        //   + aA(y) . (lb(a)x) + rb(rA(x)a)(aA(y)) = 0.
        let mut cross2 = AxiomReport::new("cross-exchange-a");
        for i in 0..n {
            for j in 0..n {
                for p in 0..m {
                    let tx = a.twist_column(i);
                    let ty = a.twist_column(j);
                    let mut sum = a.product(&rb.mat(p).column(i), &ty).expect("shapes fixed");
                    sum = vadd(
                        &sum,
                        &lb.contract(&la.mat(i).column(p))
                            .expect("shapes fixed")
                            .apply(&ty)
                            .expect("shapes fixed"),
                    );
                    sum = vsub(&sum, &a.product(&tx, &lb.mat(p).column(j)).expect("shapes fixed"));
                    sum = vsub(
                        &sum,
                        &rb.contract(&ra.mat(j).column(p))
                            .expect("shapes fixed")
                            .apply(&tx)
                            .expect("shapes fixed"),
                    );
                    sum = vsub(&sum, &a.product(&rb.mat(p).column(j), &tx).expect("shapes fixed"));
                    sum = vsub(
                        &sum,
                        &lb.contract(&la.mat(j).column(p))
                            .expect("shapes fixed")
                            .apply(&tx)
                            .expect("shapes fixed"),
                    );
                    sum = vadd(&sum, &a.product(&ty, &lb.mat(p).column(i)).expect("shapes fixed"));
                    sum = vadd(
                        &sum,
                        &rb.contract(&ra.mat(i).column(p))
                            .expect("shapes fixed")
                            .apply(&ty)
                            .expect("shapes fixed"),
                    );
                    cross2.expect_eq(&[i, j, p], sum, vzero(n));
                }
            }
        }
        out.push(cross2);

        // The two B-valued equations are the exact mirrors with the roles of
        // the algebras and their actions exchanged.
        let mut cross3 = AxiomReport::new("cross-associator-b");
        for p in 0..m {
            for q in 0..m {
                for i in 0..n {
                    let twisted_b = b.twist_column(q);
                    let twisted_x = a.twist_column(i);
                    let mut sum = b
                        .product(&la.mat(i).column(p), &twisted_b)
                        .expect("shapes fixed");
                    sum = vadd(
                        &sum,
                        &la.contract(&rb.mat(p).column(i))
                            .expect("shapes fixed")
                            .apply(&twisted_b)
                            .expect("shapes fixed"),
                    );
                    sum = vsub(
                        &sum,
                        &la.contract(&twisted_x)
                            .expect("shapes fixed")
                            .apply(&b.basis_product(p, q))
                            .expect("shapes fixed"),
                    );
                    sum = vsub(
                        &sum,
                        &ra.contract(&twisted_x)
                            .expect("shapes fixed")
                            .apply(&b.basis_product(q, p))
                            .expect("shapes fixed"),
                    );
                    sum = vadd(
                        &sum,
                        &b.product(&twisted_b, &ra.mat(i).column(p))
                            .expect("shapes fixed"),
                    );
                    sum = vadd(
                        &sum,
                        &ra.contract(&lb.mat(p).column(i))
                            .expect("shapes fixed")
                            .apply(&twisted_b)
                            .expect("shapes fixed"),
                    );
                    cross3.expect_eq(&[p, q, i], sum, vzero(m));
                }
            }
        }
        out.push(cross3);

        let mut cross4 = AxiomReport::new("cross-exchange-b");
        for p in 0..m {
            for q in 0..m {
                for i in 0..n {
                    let ta = b.twist_column(p);
                    let tb = b.twist_column(q);
                    let mut sum = b.product(&ra.mat(i).column(p), &tb).expect("shapes fixed");
                    sum = vadd(
                        &sum,
                        &la.contract(&lb.mat(p).column(i))
                            .expect("shapes fixed")
                            .apply(&tb)
                            .expect("shapes fixed"),
                    );
                    sum = vsub(&sum, &b.product(&ta, &la.mat(i).column(q)).expect("shapes fixed"));
                    sum = vsub(
                        &sum,
                        &ra.contract(&rb.mat(q).column(i))
                            .expect("shapes fixed")
                            .apply(&ta)
                            .expect("shapes fixed"),
                    );
                    sum = vsub(&sum, &b.product(&ra.mat(i).column(q), &ta).expect("shapes fixed"));
                    sum = vsub(
                        &sum,
                        &la.contract(&lb.mat(q).column(i))
                            .expect("shapes fixed")
                            .apply(&ta)
                            .expect("shapes fixed"),
                    );
                    sum = vadd(&sum, &b.product(&tb, &la.mat(i).column(p)).expect("shapes fixed"));
                    sum = vadd(
                        &sum,
                        &ra.contract(&rb.mat(p).column(i))
                            .expect("shapes fixed")
                            .apply(&tb)
                            .expect("shapes fixed"),
                    );
                    cross4.expect_eq(&[p, q, i], sum, vzero(m));
                }
            }
        }
        out.push(cross4);
        out
    }

    /// Bicross product on `a (+) b`:
    /// `(x+a)(y+b) = (x.y + lb(a)y + rb(b)x) + (a.b + la(x)b + ra(y)a)`,
    /// with block-diagonal twist.
    pub fn bicross_product(&self) -> HomAlgebra {
        let (n, m) = (self.a.dim(), self.b.dim());
        let mul = BilinearTensor::from_fn(n + m, n + m, n + m, |i, j, k| {
            match (i < n, j < n, k < n) {
                (true, true, true) => self.a.mul().entry(i, j, k).clone(),
                (true, false, true) => self.right_b.mat(j - n).entry(k, i).clone(),
                (true, false, false) => self.left_a.mat(i).entry(k - n, j - n).clone(),
                (false, true, true) => self.left_b.mat(i - n).entry(k, j).clone(),
                (false, true, false) => self.right_a.mat(j).entry(k - n, i - n).clone(),
                (false, false, false) => self.b.mul().entry(i - n, j - n, k - n).clone(),
                _ => Scalar::zero(),
            }
        });
        let twist = self.a.twist().block_diag(self.b.twist());
        HomAlgebra::new(mul, twist).expect("dimensions consistent by construction")
    }

    /// The induced candidate matched pair of hom-Lie algebras: commutator
    /// algebras on both sides, actions `l - r` member-wise.
    pub fn induced_lie_pair(&self) -> MatchedPairHomLie {
        MatchedPairHomLie {
            g: self.a.commutator_algebra(),
            h: self.b.commutator_algebra(),
            rho_g: self.left_a.sub(&self.right_a).expect("same dimensions"),
            rho_h: self.left_b.sub(&self.right_b).expect("same dimensions"),
        }
    }
}

/// Candidate matched pair of hom-Lie algebras: brackets on `g` and `h` and a
/// representation of each on the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairHomLie {
    g: HomAlgebra,
    h: HomAlgebra,
    rho_g: ActionTensor,
    rho_h: ActionTensor,
}

impl MatchedPairHomLie {
    pub fn new(
        g: HomAlgebra,
        h: HomAlgebra,
        rho_g: ActionTensor,
        rho_h: ActionTensor,
    ) -> Result<Self, ShapeError> {
        if rho_g.alg_dim() != g.dim() || rho_g.mod_dim() != h.dim() {
            return Err(ShapeError::DimMismatch);
        }
        if rho_h.alg_dim() != h.dim() || rho_h.mod_dim() != g.dim() {
            return Err(ShapeError::DimMismatch);
        }
        Ok(MatchedPairHomLie { g, h, rho_g, rho_h })
    }

    pub fn g(&self) -> &HomAlgebra {
        &self.g
    }

    pub fn h(&self) -> &HomAlgebra {
        &self.h
    }

    pub fn rho_g(&self) -> &ActionTensor {
        &self.rho_g
    }

    pub fn rho_h(&self) -> &ActionTensor {
        &self.rho_h
    }

    /// Matched-pair check for hom-Lie algebras: each action is a
    /// representation (reported under `g-`/`h-`) and the two cross-bracket
    /// equations hold.
    pub fn check(&self) -> CheckReport {
        let mut out = CheckReport::new();

        let rep_g = Representation::new(
            self.g.clone(),
            self.rho_g.clone(),
            self.h.twist().clone(),
        )
        .expect("shapes checked in constructor");
        out.merge_prefixed("g-", rep_g.check());

        let rep_h = Representation::new(
            self.h.clone(),
            self.rho_h.clone(),
            self.g.twist().clone(),
        )
        .expect("shapes checked in constructor");
        out.merge_prefixed("h-", rep_h.check());

        let (n, m) = (self.g.dim(), self.h.dim());
        let (g, h) = (&self.g, &self.h);
        let (rho_g, rho_h) = (&self.rho_g, &self.rho_h);

        // G-valued: rhoH(psiH(a))[x,y] = [rhoH(a)x, phiG(y)] + [phiG(x), rhoH(a)y]
        //           + rhoH(rhoG(y)a)(phiG(x)) - rhoH(rhoG(x)a)(phiG(y)).
        let mut cg = AxiomReport::new("bracket-compat-g");
        for i in 0..n {
            for j in 0..n {
                for p in 0..m {
                    let lhs = rho_h
                        .contract(&h.twist_column(p))
                        .expect("shapes fixed")
                        .apply(&g.basis_product(i, j))
                        .expect("shapes fixed");
                    let tx = g.twist_column(i);
                    let ty = g.twist_column(j);
                    let mut rhs = g
                        .product(&rho_h.mat(p).column(i), &ty)
                        .expect("shapes fixed");
                    rhs = vadd(&rhs, &g.product(&tx, &rho_h.mat(p).column(j)).expect("shapes fixed"));
                    rhs = vadd(
                        &rhs,
                        &rho_h
                            .contract(&rho_g.mat(j).column(p))
                            .expect("shapes fixed")
                            .apply(&tx)
                            .expect("shapes fixed"),
                    );
                    rhs = vsub(
                        &rhs,
                        &rho_h
                            .contract(&rho_g.mat(i).column(p))
                            .expect("shapes fixed")
                            .apply(&ty)
                            .expect("shapes fixed"),
                    );
                    cg.expect_eq(&[i, j, p], lhs, rhs);
                }
            }
        }
        out.push(cg);

        // H-valued mirror.
        let mut ch = AxiomReport::new("bracket-compat-h");
        for p in 0..m {
            for q in 0..m {
                for i in 0..n {
                    let lhs = rho_g
                        .contract(&g.twist_column(i))
                        .expect("shapes fixed")
                        .apply(&h.basis_product(p, q))
                        .expect("shapes fixed");
                    let ta = h.twist_column(p);
                    let tb = h.twist_column(q);
                    let mut rhs = h
                        .product(&rho_g.mat(i).column(p), &tb)
                        .expect("shapes fixed");
                    rhs = vadd(&rhs, &h.product(&ta, &rho_g.mat(i).column(q)).expect("shapes fixed"));
                    rhs = vadd(
                        &rhs,
                        &rho_g
                            .contract(&rho_h.mat(q).column(i))
                            .expect("shapes fixed")
                            .apply(&ta)
                            .expect("shapes fixed"),
                    );
                    rhs = vsub(
                        &rhs,
                        &rho_g
                            .contract(&rho_h.mat(p).column(i))
                            .expect("shapes fixed")
                            .apply(&tb)
                            .expect("shapes fixed"),
                    );
                    ch.expect_eq(&[p, q, i], lhs, rhs);
                }
            }
        }
        out.push(ch);
        out
    }

    /// Double bracket on `g (+) h`:
    /// `[x+a, y+b] = ([x,y] + rhoH(a)y - rhoH(b)x) + ([a,b] + rhoG(x)b - rhoG(y)a)`,
    /// with block-diagonal twist.
    pub fn double(&self) -> HomAlgebra {
        let (n, m) = (self.g.dim(), self.h.dim());
        let mul = BilinearTensor::from_fn(n + m, n + m, n + m, |i, j, k| {
            match (i < n, j < n, k < n) {
                (true, true, true) => self.g.mul().entry(i, j, k).clone(),
                (true, false, true) => -self.rho_h.mat(j - n).entry(k, i),
                (true, false, false) => self.rho_g.mat(i).entry(k - n, j - n).clone(),
                (false, true, true) => self.rho_h.mat(i - n).entry(k, j).clone(),
                (false, true, false) => -self.rho_g.mat(j).entry(k - n, i - n),
                (false, false, false) => self.h.mul().entry(i - n, j - n, k - n).clone(),
                _ => Scalar::zero(),
            }
        });
        let twist = self.g.twist().block_diag(self.h.twist());
        HomAlgebra::new(mul, twist).expect("dimensions consistent by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{action_i64, algebra_i64};

    fn z2_group_algebra() -> HomAlgebra {
        algebra_i64(2, &[1, 0, 0, 1, 0, 1, 1, 0], &[1, 0, 0, 1])
    }

    fn sign_twist_algebra() -> HomAlgebra {
        algebra_i64(2, &[0, 0, 0, 0, 0, 0, 1, 0], &[1, 0, 0, -1])
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

    fn zero_actions_pair(a: HomAlgebra, b: HomAlgebra) -> MatchedPairCsa {
        let (n, m) = (a.dim(), b.dim());
        MatchedPairCsa::new(
            a,
            b,
            ActionTensor::zero(n, m),
            ActionTensor::zero(n, m),
            ActionTensor::zero(m, n),
            ActionTensor::zero(m, n),
        )
        .unwrap()
    }

    #[test]
    fn zero_actions_make_a_matched_pair_of_valid_algebras() {
        let pair = zero_actions_pair(z2_group_algebra(), sign_twist_algebra());
        assert!(pair.check().passed());
        let double = pair.bicross_product();
        assert!(double.check_center_symmetric().passed());
        // Direct sum: both diagonal blocks reproduce the factors, every
        // mixed entry vanishes.
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    assert_eq!(double.mul().entry(i, j, k), pair.a().mul().entry(i, j, k));
                    assert_eq!(
                        double.mul().entry(i + 2, j + 2, k + 2),
                        pair.b().mul().entry(i, j, k)
                    );
                    assert_eq!(double.mul().entry(i, j + 2, k), &crate::linalg::int(0));
                }
            }
        }
    }

    #[test]
    fn matched_pair_verdict_agrees_with_bicross_center_symmetry() {
        // A deliberately broken candidate: nonzero action that respects no
        // axiom. Both the direct check and the bicross product must fail.
        let a = z2_group_algebra();
        let b = sign_twist_algebra();
        let la = action_i64(2, 2, &[&[1, 0, 0, 0], &[0, 0, 0, 0]]);
        let pair = MatchedPairCsa::new(
            a,
            b,
            la,
            ActionTensor::zero(2, 2),
            ActionTensor::zero(2, 2),
            ActionTensor::zero(2, 2),
        )
        .unwrap();
        let direct = pair.check().passed();
        let via_double = pair.bicross_product().check_center_symmetric().passed();
        assert_eq!(direct, via_double);
        assert!(!direct);
    }

    #[test]
    fn induced_lie_pair_takes_commutators_and_differences() {
        let a = z2_group_algebra();
        let b = sign_twist_algebra();
        let la = action_i64(2, 2, &[&[1, 2, 0, 1], &[0, 1, 1, 0]]);
        let ra = action_i64(2, 2, &[&[1, 0, 0, 1], &[1, 1, 0, 0]]);
        let pair = MatchedPairCsa::new(
            a.clone(),
            b.clone(),
            la.clone(),
            ra.clone(),
            ActionTensor::zero(2, 2),
            ActionTensor::zero(2, 2),
        )
        .unwrap();
        let lie = pair.induced_lie_pair();
        assert_eq!(lie.g(), &a.commutator_algebra());
        assert_eq!(lie.h(), &b.commutator_algebra());
        assert_eq!(lie.rho_g(), &la.sub(&ra).unwrap());
        assert!(lie.rho_h().is_zero());
    }

    #[test]
    fn commutator_of_bicross_is_double_of_induced_pair() {
        // Structural identity: holds for arbitrary tensors, matched pair or
        // not, because the commutator distributes over the four blocks.
        let a = z2_group_algebra();
        let b = sign_twist_algebra();
        let pair = MatchedPairCsa::new(
            a,
            b,
            action_i64(2, 2, &[&[1, 2, 0, 1], &[0, 1, 1, 0]]),
            action_i64(2, 2, &[&[1, 0, 0, 1], &[1, 1, 0, 0]]),
            action_i64(2, 2, &[&[0, 1, 0, 0], &[2, 0, 0, -1]]),
            action_i64(2, 2, &[&[1, 1, 1, 1], &[0, 0, 1, 0]]),
        )
        .unwrap();
        let lhs = pair.bicross_product().commutator_algebra();
        let rhs = pair.induced_lie_pair().double();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn role_swap_preserves_the_verdict() {
        let passing = zero_actions_pair(z2_group_algebra(), sign_twist_algebra());
        let failing = MatchedPairCsa::new(
            z2_group_algebra(),
            sign_twist_algebra(),
            action_i64(2, 2, &[&[1, 0, 0, 0], &[0, 0, 0, 0]]),
            ActionTensor::zero(2, 2),
            ActionTensor::zero(2, 2),
            ActionTensor::zero(2, 2),
        )
        .unwrap();
        for pair in [passing, failing] {
            let swapped = MatchedPairCsa::new(
                pair.b().clone(),
                pair.a().clone(),
                pair.left_b().clone(),
                pair.right_b().clone(),
                pair.left_a().clone(),
                pair.right_a().clone(),
            )
            .unwrap();
            assert_eq!(pair.check().passed(), swapped.check().passed());
        }
    }

    #[test]
    fn zero_lie_actions_pair_of_hom_lie_algebras_passes() {
        let g = cross_product_algebra();
        let h = algebra_i64(1, &[0], &[1]);
        let pair = MatchedPairHomLie::new(
            g,
            h,
            ActionTensor::zero(3, 1),
            ActionTensor::zero(1, 3),
        )
        .unwrap();
        assert!(pair.check().passed());
        assert!(pair.double().check_hom_jacobi().passed());
    }

    #[test]
    fn self_pair_with_adjoint_actions_fails_cross_brackets() {
        let g = cross_product_algebra();
        let pair = MatchedPairHomLie::new(g.clone(), g.clone(), g.ad_rep(), g.ad_rep()).unwrap();
        let report = pair.check();
        assert!(!report.passed());
        assert!(report.failed_axioms().contains(&"bracket-compat-g"));
        assert!(!pair.double().check_hom_jacobi().passed());
    }

    #[test]
    fn lie_pair_verdict_agrees_with_double_jacobi() {
        // One passing and one failing instance; the direct equations and the
        // double bracket must agree.
        let g = cross_product_algebra();
        let h = algebra_i64(1, &[0], &[1]);
        let passing = MatchedPairHomLie::new(
            g.clone(),
            h.clone(),
            ActionTensor::zero(3, 1),
            ActionTensor::zero(1, 3),
        )
        .unwrap();
        let failing =
            MatchedPairHomLie::new(g.clone(), g.clone(), g.ad_rep(), g.ad_rep()).unwrap();
        assert_eq!(
            passing.check().passed(),
            passing.double().check_hom_jacobi().passed()
        );
        assert_eq!(
            failing.check().passed(),
            failing.double().check_hom_jacobi().passed()
        );
    }
}
