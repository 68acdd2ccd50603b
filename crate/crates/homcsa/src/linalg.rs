//! Exact linear algebra over arbitrary-precision rationals.
//!
//! Conventions used throughout the crate:
//!
//! * vectors are coordinate columns; `LinearMap` entry `(i, j)` is the
//!   coefficient of output basis vector `i` in the image of input basis
//!   vector `j`, so application is the usual matrix-times-column product;
//! * tensor product bases are ordered lexicographically with the left factor
//!   major: `e_i (x) f_p` sits at index `i * dim(right) + p`;
//! * dualization is the transpose, which is the matrix of the adjoint map in
//!   the dual basis under the canonical pairing.
//!
//! No floating point anywhere; equality of scalars is exact equality of
//! reduced fractions.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

/// Arbitrary-precision rational scalar, always stored in canonical form
/// (fully reduced, denominator positive).
pub type Scalar = num_rational::BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar `num/den`. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("entry count does not match the declared dimensions")]
    EntryCount,
    #[error("operand dimensions are incompatible")]
    DimMismatch,
}

/// Sum of two coordinate vectors of equal length.
pub fn vadd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Difference of two coordinate vectors of equal length.
pub fn vsub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Zero vector of the given length.
pub fn vzero(len: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); len]
}

/// Standard basis vector `e_i` in dimension `dim`.
pub fn vunit(dim: usize, i: usize) -> Vec<Scalar> {
    assert!(i < dim, "basis index out of range");
    let mut v = vzero(dim);
    v[i] = Scalar::one();
    v
}

pub fn is_vzero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Dense matrix of a linear map, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl LinearMap {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, ShapeError> {
        if entries.len() != rows * cols {
            return Err(ShapeError::EntryCount);
        }
        Ok(LinearMap {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        LinearMap {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            entries: vzero(rows * cols),
        }
    }

    pub fn identity(dim: usize) -> Self {
        LinearMap::from_fn(dim, dim, |i, j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "entry index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Image of input basis vector `j`, as a coordinate column.
    pub fn column(&self, j: usize) -> Vec<Scalar> {
        assert!(j < self.cols, "column index out of range");
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    /// Composition `self after g`.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap, ShapeError> {
        if self.cols != g.rows {
            return Err(ShapeError::DimMismatch);
        }
        Ok(LinearMap::from_fn(self.rows, g.cols, |i, j| {
            let mut sum = Scalar::zero();
            for k in 0..self.cols {
                let a = self.entry(i, k);
                let b = g.entry(k, j);
                if !a.is_zero() && !b.is_zero() {
                    sum += a * b;
                }
            }
            sum
        }))
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, ShapeError> {
        if v.len() != self.cols {
            return Err(ShapeError::DimMismatch);
        }
        let mut out = vzero(self.rows);
        for j in 0..self.cols {
            if v[j].is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.entry(i, j);
                if !a.is_zero() {
                    out[i] += a * &v[j];
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; the resulting map acts on the tensor product with
    /// the left factor major, so `(f (x) g)(e_j (x) e_q) = f(e_j) (x) g(e_q)`.
    pub fn kron(&self, g: &LinearMap) -> LinearMap {
        LinearMap::from_fn(self.rows * g.rows, self.cols * g.cols, |i, j| {
            let (a, p) = (i / g.rows, i % g.rows);
            let (b, q) = (j / g.cols, j % g.cols);
            self.entry(a, b) * g.entry(p, q)
        })
    }

    /// Matrix of the dual (adjoint) map in the dual basis: the transpose.
    pub fn dual(&self) -> LinearMap {
        LinearMap::from_fn(self.cols, self.rows, |i, j| self.entry(j, i).clone())
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap, ShapeError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ShapeError::DimMismatch);
        }
        Ok(LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: vadd(&self.entries, &other.entries),
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap, ShapeError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ShapeError::DimMismatch);
        }
        Ok(LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: vsub(&self.entries, &other.entries),
        })
    }

    pub fn neg(&self) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_vzero(&self.entries)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.entry(i, j).is_one()
                    } else {
                        self.entry(i, j).is_zero()
                    }
                })
            })
    }

    /// Block-diagonal sum acting on the direct sum, `self` on the first
    /// block, `g` on the second.
    pub fn block_diag(&self, g: &LinearMap) -> LinearMap {
        LinearMap::from_fn(self.rows + g.rows, self.cols + g.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.entry(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                g.entry(i - self.rows, j - self.cols).clone()
            } else {
                Scalar::zero()
            }
        })
    }
}

/// The flip `x (x) y -> y (x) x` on the tensor square of an `n`-dimensional
/// space, as a permutation matrix.
pub fn tensor_swap(n: usize) -> LinearMap {
    LinearMap::from_fn(n * n, n * n, |out, inp| {
        let (i, j) = (inp / n, inp % n);
        if out == j * n + i {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// Structure constants of a bilinear map `V_left x V_right -> V_out`;
/// `entry(i, j, k)` is the coefficient of output basis vector `k` in the
/// product of left basis vector `i` with right basis vector `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct BilinearTensor {
    dim_left: usize,
    dim_right: usize,
    dim_out: usize,
    entries: Vec<Scalar>,
}

impl fmt::Debug for BilinearTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BilinearTensor{}x{}->{}",
            self.dim_left, self.dim_right, self.dim_out
        )?;
        f.debug_list().entries(self.entries.iter().map(|s| s.to_string())).finish()
    }
}

impl BilinearTensor {
    pub fn new(
        dim_left: usize,
        dim_right: usize,
        dim_out: usize,
        entries: Vec<Scalar>,
    ) -> Result<Self, ShapeError> {
        if entries.len() != dim_left * dim_right * dim_out {
            return Err(ShapeError::EntryCount);
        }
        Ok(BilinearTensor {
            dim_left,
            dim_right,
            dim_out,
            entries,
        })
    }

    pub fn from_fn(
        dim_left: usize,
        dim_right: usize,
        dim_out: usize,
        mut f: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(dim_left * dim_right * dim_out);
        for i in 0..dim_left {
            for j in 0..dim_right {
                for k in 0..dim_out {
                    entries.push(f(i, j, k));
                }
            }
        }
        BilinearTensor {
            dim_left,
            dim_right,
            dim_out,
            entries,
        }
    }

    pub fn zero(dim_left: usize, dim_right: usize, dim_out: usize) -> Self {
        BilinearTensor {
            dim_left,
            dim_right,
            dim_out,
            entries: vzero(dim_left * dim_right * dim_out),
        }
    }

    pub fn dim_left(&self) -> usize {
        self.dim_left
    }

    pub fn dim_right(&self) -> usize {
        self.dim_right
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        assert!(
            i < self.dim_left && j < self.dim_right && k < self.dim_out,
            "tensor index out of range"
        );
        &self.entries[(i * self.dim_right + j) * self.dim_out + k]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Product of two basis vectors, as a coordinate column.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim_out)
            .map(|k| self.entry(i, j, k).clone())
            .collect()
    }

    /// Bilinear evaluation on coordinate vectors.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, ShapeError> {
        if x.len() != self.dim_left || y.len() != self.dim_right {
            return Err(ShapeError::DimMismatch);
        }
        let mut out = vzero(self.dim_out);
        for i in 0..self.dim_left {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim_right {
                if y[j].is_zero() {
                    continue;
                }
                let coeff = &x[i] * &y[j];
                for k in 0..self.dim_out {
                    let c = self.entry(i, j, k);
                    if !c.is_zero() {
                        out[k] += c * &coeff;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        is_vzero(&self.entries)
    }
}

/// A linear family of operators: one `mod_dim x mod_dim` matrix per basis
/// vector of an `alg_dim`-dimensional algebra, extended linearly by
/// [`ActionTensor::contract`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTensor {
    alg_dim: usize,
    mod_dim: usize,
    mats: Vec<LinearMap>,
}

impl ActionTensor {
    pub fn new(alg_dim: usize, mod_dim: usize, mats: Vec<LinearMap>) -> Result<Self, ShapeError> {
        if mats.len() != alg_dim {
            return Err(ShapeError::EntryCount);
        }
        if mats.iter().any(|m| m.rows() != mod_dim || m.cols() != mod_dim) {
            return Err(ShapeError::DimMismatch);
        }
        Ok(ActionTensor {
            alg_dim,
            mod_dim,
            mats,
        })
    }

    pub fn from_fn(alg_dim: usize, mod_dim: usize, mut f: impl FnMut(usize) -> LinearMap) -> Self {
        let mats: Vec<LinearMap> = (0..alg_dim).map(&mut f).collect();
        ActionTensor::new(alg_dim, mod_dim, mats).expect("generator produced a wrong shape")
    }

    pub fn zero(alg_dim: usize, mod_dim: usize) -> Self {
        ActionTensor {
            alg_dim,
            mod_dim,
            mats: vec![LinearMap::zero(mod_dim, mod_dim); alg_dim],
        }
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn mod_dim(&self) -> usize {
        self.mod_dim
    }

    /// Operator attached to algebra basis vector `i`.
    pub fn mat(&self, i: usize) -> &LinearMap {
        &self.mats[i]
    }

    pub fn mats(&self) -> &[LinearMap] {
        &self.mats
    }

    /// Operator attached to a general algebra element with the given
    /// coordinates: the linear combination of the basis operators.
    pub fn contract(&self, coeffs: &[Scalar]) -> Result<LinearMap, ShapeError> {
        if coeffs.len() != self.alg_dim {
            return Err(ShapeError::DimMismatch);
        }
        let mut out = LinearMap::zero(self.mod_dim, self.mod_dim);
        for (c, m) in coeffs.iter().zip(&self.mats) {
            if !c.is_zero() {
                out = out.add(&m.scale(c)).expect("shapes fixed by constructor");
            }
        }
        Ok(out)
    }

    /// Member-wise difference; both families must share dimensions.
    pub fn sub(&self, other: &ActionTensor) -> Result<ActionTensor, ShapeError> {
        if self.alg_dim != other.alg_dim || self.mod_dim != other.mod_dim {
            return Err(ShapeError::DimMismatch);
        }
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.sub(b).expect("shapes checked above"))
            .collect();
        Ok(ActionTensor {
            alg_dim: self.alg_dim,
            mod_dim: self.mod_dim,
            mats,
        })
    }

    /// Member-wise dualization (transpose), the action on the dual module.
    pub fn dual(&self) -> ActionTensor {
        ActionTensor {
            alg_dim: self.alg_dim,
            mod_dim: self.mod_dim,
            mats: self.mats.iter().map(LinearMap::dual).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(LinearMap::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: usize, cols: usize, vals: &[i64]) -> LinearMap {
        LinearMap::new(rows, cols, vals.iter().map(|&v| int(v)).collect()).unwrap()
    }

    #[test]
    fn scalars_are_canonical() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(-3, -6), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert_eq!(rat(0, 7), int(0));
        assert_eq!(rat(1, 2) + rat(1, 2), int(1));
    }

    #[test]
    fn compose_with_identity() {
        let f = m(2, 3, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(LinearMap::identity(2).compose(&f).unwrap(), f);
        assert_eq!(f.compose(&LinearMap::identity(3)).unwrap(), f);
    }

    #[test]
    fn compose_matches_sum_of_products_oracle() {
        let f = m(3, 3, &[1, 2, 0, 0, 1, -1, 3, 0, 2]);
        let mut g_entries: Vec<Scalar> = [1, 1, 1, 0, -1, 0, 1, 0, 4].iter().map(|&v| int(v)).collect();
        g_entries[0] = rat(1, 2);
        let g = LinearMap::new(3, 3, g_entries).unwrap();

        // Independent oracle: explicit sum of products per entry.
        let oracle = LinearMap::from_fn(3, 3, |i, j| {
            (0..3).map(|k| f.entry(i, k) * g.entry(k, j)).sum()
        });

        let frozen = LinearMap::new(
            3,
            3,
            vec![
                rat(1, 2),
                int(-1),
                int(1),
                int(-1),
                int(-1),
                int(-4),
                rat(7, 2),
                int(3),
                int(11),
            ],
        )
        .unwrap();

        let composed = f.compose(&g).unwrap();
        assert_eq!(composed, oracle);
        assert_eq!(composed, frozen);
    }

    #[test]
    fn compose_rejects_mismatched_dims() {
        let f = m(2, 3, &[0; 6]);
        let g = m(2, 2, &[0; 4]);
        assert_eq!(f.compose(&g), Err(ShapeError::DimMismatch));
        assert_eq!(f.apply(&[int(1), int(2)]), Err(ShapeError::DimMismatch));
    }

    #[test]
    fn apply_is_matrix_times_column() {
        let f = m(2, 3, &[1, 0, 2, -1, 1, 0]);
        let v = vec![int(1), int(2), int(3)];
        assert_eq!(f.apply(&v).unwrap(), vec![int(7), int(1)]);
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let k = LinearMap::identity(2).kron(&LinearMap::identity(3));
        assert!(k.is_identity());
        assert_eq!(k.rows(), 6);
    }

    #[test]
    fn kron_matches_four_index_oracle() {
        let a = m(2, 2, &[1, 2, 3, 4]);
        let b = m(2, 2, &[0, 1, 1, 0]);
        let k = a.kron(&b);
        for i in 0..2 {
            for j in 0..2 {
                for p in 0..2 {
                    for q in 0..2 {
                        assert_eq!(
                            k.entry(i * 2 + p, j * 2 + q),
                            &(a.entry(i, j) * b.entry(p, q)),
                            "block ({i},{j}) inner ({p},{q})"
                        );
                    }
                }
            }
        }
        let frozen = m(4, 4, &[0, 1, 0, 2, 1, 0, 2, 0, 0, 3, 0, 4, 3, 0, 4, 0]);
        assert_eq!(k, frozen);
    }

    #[test]
    fn tensor_swap_permutes_basis_pairs() {
        assert!(tensor_swap(1).is_identity());
        let s = tensor_swap(2);
        // e_0 (x) e_1 lives at index 1 and must map to e_1 (x) e_0 at index 2.
        assert_eq!(s.apply(&vunit(4, 1)).unwrap(), vunit(4, 2));
        assert_eq!(s.apply(&vunit(4, 0)).unwrap(), vunit(4, 0));
        for n in 0..5 {
            let s = tensor_swap(n);
            assert!(s.compose(&s).unwrap().is_identity());
        }
    }

    #[test]
    fn dual_is_transpose() {
        let f = m(2, 3, &[1, 2, 3, 4, 5, 6]);
        let d = f.dual();
        assert_eq!(d.rows(), 3);
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(f.entry(i, j), d.entry(j, i));
            }
        }
        assert_eq!(f.dual().dual(), f);
    }

    #[test]
    fn bilinear_apply_matches_triple_sum_oracle() {
        // Entries picked to exercise every index role, one rational among them.
        let t = BilinearTensor::from_fn(2, 2, 2, |i, j, k| match (i, j, k) {
            (0, 0, 0) => int(1),
            (0, 1, 1) => int(2),
            (1, 0, 1) => rat(-1, 2),
            (1, 1, 0) => int(3),
            _ => int(0),
        });
        let x = vec![int(1), int(2)];
        let y = vec![int(-1), int(1)];

        let mut oracle = vzero(2);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    oracle[k] += t.entry(i, j, k) * &x[i] * &y[j];
                }
            }
        }
        let got = t.apply(&x, &y).unwrap();
        assert_eq!(got, oracle);
        assert_eq!(got, vec![int(5), int(3)]);
    }

    #[test]
    fn bilinear_zero_maps_everything_to_zero() {
        let t = BilinearTensor::zero(2, 3, 2);
        let out = t
            .apply(&[int(5), int(-1)], &[int(1), int(2), int(3)])
            .unwrap();
        assert!(is_vzero(&out));
    }

    #[test]
    fn action_contract_is_linear_combination() {
        let a = ActionTensor::new(2, 2, vec![m(2, 2, &[1, 0, 0, 0]), m(2, 2, &[0, 1, 0, 0])]).unwrap();
        let c = a.contract(&[int(2), int(-3)]).unwrap();
        assert_eq!(c, m(2, 2, &[2, -3, 0, 0]));
        assert_eq!(a.dual().mat(1), &m(2, 2, &[0, 0, 1, 0]));
    }

    #[test]
    fn zero_dimensional_objects_are_legal() {
        let f = LinearMap::zero(0, 0);
        assert!(f.compose(&f).unwrap().is_identity());
        assert_eq!(f.apply(&[]).unwrap(), Vec::<Scalar>::new());
        let t = BilinearTensor::zero(0, 0, 0);
        assert_eq!(t.apply(&[], &[]).unwrap(), Vec::<Scalar>::new());
        assert!(tensor_swap(0).is_identity());
    }

    fn small_scalar() -> impl Strategy<Value = Scalar> {
        (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
    }

    fn small_map(rows: usize, cols: usize) -> impl Strategy<Value = LinearMap> {
        proptest::collection::vec(small_scalar(), rows * cols)
            .prop_map(move |v| LinearMap::new(rows, cols, v).unwrap())
    }

    proptest! {
        #[test]
        fn compose_is_associative(
            a in small_map(2, 3),
            b in small_map(3, 2),
            c in small_map(2, 2),
        ) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn kron_satisfies_mixed_product_rule(
            a in small_map(2, 2),
            b in small_map(2, 2),
            c in small_map(2, 2),
            d in small_map(2, 2),
        ) {
            let left = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap());
            let right = a.kron(&b).compose(&c.kron(&d)).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn swap_conjugation_exchanges_kron_factors(
            f in small_map(2, 2),
            g in small_map(2, 2),
        ) {
            let s = tensor_swap(2);
            let conj = s.compose(&f.kron(&g)).unwrap().compose(&s).unwrap();
            prop_assert_eq!(conj, g.kron(&f));
        }

        #[test]
        fn dual_reverses_composition(
            f in small_map(2, 3),
            g in small_map(3, 2),
        ) {
            let left = f.compose(&g).unwrap().dual();
            let right = g.dual().compose(&f.dual()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn bilinear_apply_is_bilinear(
            x in proptest::collection::vec(small_scalar(), 2),
            y in proptest::collection::vec(small_scalar(), 2),
            z in proptest::collection::vec(small_scalar(), 2),
            entries in proptest::collection::vec(small_scalar(), 8),
        ) {
            let t = BilinearTensor::new(2, 2, 2, entries).unwrap();
            let sum = vadd(&x, &z);
            let left = t.apply(&sum, &y).unwrap();
            let right = vadd(&t.apply(&x, &y).unwrap(), &t.apply(&z, &y).unwrap());
            prop_assert_eq!(left, right);
        }
    }
}
