//! Hom-algebras given by structure constants, and the axiom checks that make
//! them hom-center-symmetric or hom-Lie.
//!
//! A `HomAlgebra` is a bilinear product together with a linear twist on the
//! same space. Nothing about the pair is assumed; every property is checked
//! explicitly and reported per axiom with the full list of violating basis
//! tuples.

use crate::linalg::{vsub, vzero, ActionTensor, BilinearTensor, LinearMap, Scalar, ShapeError};
use crate::report::{AxiomReport, CheckReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    dim: usize,
    mul: BilinearTensor,
    twist: LinearMap,
}

impl HomAlgebra {
    pub fn new(mul: BilinearTensor, twist: LinearMap) -> Result<Self, ShapeError> {
        let dim = mul.dim_left();
        if mul.dim_right() != dim || mul.dim_out() != dim {
            return Err(ShapeError::DimMismatch);
        }
        if twist.rows() != dim || twist.cols() != dim {
            return Err(ShapeError::DimMismatch);
        }
        Ok(HomAlgebra { dim, mul, twist })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self) -> &BilinearTensor {
        &self.mul
    }

    pub fn twist(&self) -> &LinearMap {
        &self.twist
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, ShapeError> {
        self.mul.apply(x, y)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.mul.basis_product(i, j)
    }

    /// Image of basis vector `i` under the twist.
    pub fn twist_column(&self, i: usize) -> Vec<Scalar> {
        self.twist.column(i)
    }

    pub fn is_twist_involutive(&self) -> bool {
        self.twist
            .compose(&self.twist)
            .expect("twist is square")
            .is_identity()
    }

    /// Twisted associator `(x, y, z) = (x y) a(z) - a(x) (y z)` where `a` is
    /// the twist.
    pub fn alpha_associator(
        &self,
        x: &[Scalar],
        y: &[Scalar],
        z: &[Scalar],
    ) -> Result<Vec<Scalar>, ShapeError> {
        let xy = self.mul.apply(x, y)?;
        let az = self.twist.apply(z)?;
        let first = self.mul.apply(&xy, &az)?;
        let ax = self.twist.apply(x)?;
        let yz = self.mul.apply(y, z)?;
        let second = self.mul.apply(&ax, &yz)?;
        Ok(vsub(&first, &second))
    }

    /// Twisted associator on a basis triple.
    pub fn basis_associator(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let xy = self.mul.basis_product(i, j);
        let az = self.twist.column(k);
        let first = self.mul.apply(&xy, &az).expect("shapes fixed");
        let ax = self.twist.column(i);
        let yz = self.mul.basis_product(j, k);
        let second = self.mul.apply(&ax, &yz).expect("shapes fixed");
        vsub(&first, &second)
    }

    /// The twist commutes with the product: `a(x y) = a(x) a(y)` on all basis
    /// pairs.
    pub fn check_multiplicative(&self) -> AxiomReport {
        let mut report = AxiomReport::new("twist-multiplicative");
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self
                    .twist
                    .apply(&self.mul.basis_product(i, j))
                    .expect("shapes fixed");
                let rhs = self
                    .mul
                    .apply(&self.twist.column(i), &self.twist.column(j))
                    .expect("shapes fixed");
                report.expect_eq(&[i, j], lhs, rhs);
            }
        }
        report
    }

    /// Full hom-center-symmetry check: the twist is multiplicative and the
    /// twisted associator is symmetric under exchange of its outer arguments.
    /// Triples `(i, j, k)` and `(k, j, i)` fail together, so only `i < k` is
    /// walked; `i = k` holds identically.
    pub fn check_center_symmetric(&self) -> CheckReport {
        let mut out = CheckReport::new();
        out.push(self.check_multiplicative());
        let mut sym = AxiomReport::new("associator-symmetric");
        for i in 0..self.dim {
            for k in (i + 1)..self.dim {
                for j in 0..self.dim {
                    let lhs = self.basis_associator(i, j, k);
                    let rhs = self.basis_associator(k, j, i);
                    sym.expect_eq(&[i, j, k], lhs, rhs);
                }
            }
        }
        out.push(sym);
        out
    }

    /// Antisymmetry of the product, including vanishing of squares.
    pub fn check_skew(&self) -> AxiomReport {
        let mut report = AxiomReport::new("skew-symmetric");
        for i in 0..self.dim {
            for j in i..self.dim {
                let lhs = self.mul.basis_product(i, j);
                let rhs: Vec<Scalar> = self
                    .mul
                    .basis_product(j, i)
                    .iter()
                    .map(|c| -c)
                    .collect();
                report.expect_eq(&[i, j], lhs, rhs);
            }
        }
        report
    }

    /// Hom-Lie check: skew product, multiplicative twist, and the twisted
    /// Jacobi identity `[a(x),[y,z]] + [a(y),[z,x]] + [a(z),[x,y]] = 0`.
    pub fn check_hom_jacobi(&self) -> CheckReport {
        let mut out = CheckReport::new();
        out.push(self.check_skew());
        out.push(self.check_multiplicative());
        let mut jac = AxiomReport::new("hom-jacobi");
        let term = |i: usize, j: usize, k: usize| {
            self.mul
                .apply(&self.twist.column(i), &self.mul.basis_product(j, k))
                .expect("shapes fixed")
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let mut sum = term(i, j, k);
                    sum = crate::linalg::vadd(&sum, &term(j, k, i));
                    sum = crate::linalg::vadd(&sum, &term(k, i, j));
                    jac.expect_eq(&[i, j, k], sum, vzero(self.dim));
                }
            }
        }
        out.push(jac);
        out
    }

    /// Left multiplication operators `L_i(e_j) = e_i e_j`.
    pub fn left_rep(&self) -> ActionTensor {
        ActionTensor::from_fn(self.dim, self.dim, |i| {
            LinearMap::from_fn(self.dim, self.dim, |k, j| self.mul.entry(i, j, k).clone())
        })
    }

    /// Right multiplication operators `R_i(e_j) = e_j e_i`.
    pub fn right_rep(&self) -> ActionTensor {
        ActionTensor::from_fn(self.dim, self.dim, |i| {
            LinearMap::from_fn(self.dim, self.dim, |k, j| self.mul.entry(j, i, k).clone())
        })
    }

    /// Adjoint operators of the commutator bracket, `L - R`.
    pub fn ad_rep(&self) -> ActionTensor {
        self.left_rep()
            .sub(&self.right_rep())
            .expect("same dimensions")
    }

    /// The algebra with the commutator product `x y - y x` and the same
    /// twist. For a hom-center-symmetric algebra this is its sub-adjacent
    /// hom-Lie algebra.
    pub fn commutator_algebra(&self) -> HomAlgebra {
        let mul = BilinearTensor::from_fn(self.dim, self.dim, self.dim, |i, j, k| {
            self.mul.entry(i, j, k) - self.mul.entry(j, i, k)
        });
        HomAlgebra {
            dim: self.dim,
            mul,
            twist: self.twist.clone(),
        }
    }
}

/// Checks that `f` is a homomorphism of hom-algebras: it preserves products
/// and intertwines the twists.
pub fn check_homomorphism(
    f: &LinearMap,
    source: &HomAlgebra,
    target: &HomAlgebra,
) -> Result<CheckReport, ShapeError> {
    if f.rows() != target.dim() || f.cols() != source.dim() {
        return Err(ShapeError::DimMismatch);
    }
    let mut out = CheckReport::new();

    let mut prod = AxiomReport::new("hom-product");
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = f.apply(&source.basis_product(i, j)).expect("shape checked");
            let rhs = target
                .product(&f.column(i), &f.column(j))
                .expect("shape checked");
            prod.expect_eq(&[i, j], lhs, rhs);
        }
    }
    out.push(prod);

    let mut tw = AxiomReport::new("hom-twist");
    for j in 0..source.dim() {
        let lhs = f.apply(&source.twist_column(j)).expect("shape checked");
        let rhs = target.twist().apply(&f.column(j)).expect("shape checked");
        tw.expect_eq(&[j], lhs, rhs);
    }
    out.push(tw);

    Ok(out)
}
