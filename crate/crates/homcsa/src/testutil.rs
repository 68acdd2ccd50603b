//! Shared constructors for unit tests: build exact structures from integer
//! literals.

use crate::algebra::HomAlgebra;
use crate::linalg::{int, ActionTensor, BilinearTensor, LinearMap};

pub fn map_i64(rows: usize, cols: usize, vals: &[i64]) -> LinearMap {
    LinearMap::new(rows, cols, vals.iter().map(|&v| int(v)).collect()).unwrap()
}

pub fn tensor_i64(dim_left: usize, dim_right: usize, dim_out: usize, vals: &[i64]) -> BilinearTensor {
    BilinearTensor::new(
        dim_left,
        dim_right,
        dim_out,
        vals.iter().map(|&v| int(v)).collect(),
    )
    .unwrap()
}

pub fn algebra_i64(dim: usize, mul: &[i64], twist: &[i64]) -> HomAlgebra {
    HomAlgebra::new(tensor_i64(dim, dim, dim, mul), map_i64(dim, dim, twist)).unwrap()
}

pub fn action_i64(alg_dim: usize, mod_dim: usize, mats: &[&[i64]]) -> ActionTensor {
    ActionTensor::new(
        alg_dim,
        mod_dim,
        mats.iter()
            .map(|vals| map_i64(mod_dim, mod_dim, vals))
            .collect(),
    )
    .unwrap()
}
