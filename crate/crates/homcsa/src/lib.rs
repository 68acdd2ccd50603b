//! Hom-center-symmetric algebras over exact rationals.
//!
//! A hom-center-symmetric algebra is a finite-dimensional algebra together
//! with a multiplicative twist map under which the twisted associator is
//! symmetric in its outer arguments. This crate represents such algebras by
//! structure constants over arbitrary-precision rationals and provides:
//!
//! * axiom checkers that collect every violating basis tuple (never just the
//!   first), so a failing structure is a complete counterexample certificate;
//! * the classical constructions: commutator (sub-adjacent) hom-Lie algebra,
//!   regular and dual bimodules, semidirect products, matched pairs and their
//!   bicross products, tensor products of representations;
//! * the bialgebra layer: comultiplications as cocycles, standard matched
//!   pairs built from dual actions, the double with its invariant pairing,
//!   and a four-way equivalence report.
//!
//! All arithmetic is exact; there are no tolerances anywhere. Checks are
//! total: bad preconditions surface as prefixed axiom reports, not panics.

pub mod algebra;
pub mod bialg;
pub mod linalg;
pub mod matched;
pub mod report;
pub mod reps;
#[cfg(test)]
pub(crate) mod testutil;

pub use algebra::{check_homomorphism, HomAlgebra};
pub use bialg::{
    check_bialgebra_homomorphism, standard_pairing, CocycleSide, Comultiplication,
    EquivalenceReport, PairedAlgebras,
};
pub use linalg::{ActionTensor, BilinearTensor, LinearMap, Scalar, ShapeError};
pub use matched::{MatchedPairCsa, MatchedPairHomLie};
pub use report::{AxiomReport, CheckReport, Violation};
pub use reps::{regular_bimodule, Bimodule, Representation};
