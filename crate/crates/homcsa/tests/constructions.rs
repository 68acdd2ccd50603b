//! End-to-end flows through the public constructions: regular actions,
//! semidirect sums, commutator brackets, standard pairs, and doubles.

use homcsa::{
    regular_bimodule, BilinearTensor, HomAlgebra, LinearMap, PairedAlgebras, Representation,
    Scalar,
};
use num_bigint::BigInt;
use num_rational::BigRational;

fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

fn map(rows: usize, cols: usize, entries: &[i64]) -> LinearMap {
    LinearMap::new(rows, cols, entries.iter().map(|&v| int(v)).collect()).expect("shape")
}

fn algebra(dim: usize, mul: &[i64], alpha: &[i64]) -> HomAlgebra {
    let mul = BilinearTensor::new(dim, dim, dim, mul.iter().map(|&v| int(v)).collect())
        .expect("shape");
    HomAlgebra::new(mul, map(dim, dim, alpha)).expect("dims")
}

/// e0 is a two-sided unit and e1 squares to zero; commutative associative.
fn unital() -> HomAlgebra {
    algebra(2, &[1, 0, 0, 1, 0, 1, 0, 0], &[1, 0, 0, 1])
}

/// e0 is idempotent and a left unit for e1, but e1 kills everything from
/// the left; associative and noncommutative.
fn one_sided() -> HomAlgebra {
    algebra(2, &[1, 0, 0, 1, 0, 0, 0, 0], &[1, 0, 0, 1])
}

/// Every product is -e0 - e1 and the twist swaps the basis; the twist is an
/// involution but not the identity.
fn swapped() -> HomAlgebra {
    algebra(2, &[-1, -1, -1, -1, -1, -1, -1, -1], &[0, 1, 1, 0])
}

#[test]
fn regular_actions_pass_and_their_semidirect_sum_is_center_symmetric() {
    for a in [unital(), one_sided(), swapped()] {
        assert!(a.check_center_symmetric().passed());
        let reg = regular_bimodule(&a);
        assert!(reg.check().passed());
        let sum = reg.semidirect();
        assert_eq!(sum.dim(), 4);
        assert!(sum.check_center_symmetric().passed());
    }
}

#[test]
fn duals_of_regular_actions_pass_for_involutive_twists() {
    for a in [unital(), swapped()] {
        assert!(a.is_twist_involutive());
        let dual = regular_bimodule(&a).dual();
        assert!(dual.check().passed());
        let round_trip = dual.dual();
        assert_eq!(round_trip.left().mats(), regular_bimodule(&a).left().mats());
    }
}

#[test]
fn commutator_bracket_feeds_the_whole_bracket_tool_chain() {
    let a = one_sided();
    let g = a.commutator_algebra();
    assert!(g.check_hom_jacobi().passed());
    assert!(!g.mul().is_zero());

    let adjoint = Representation::new(g.clone(), g.left_rep(), g.twist().clone()).expect("dims");
    assert!(adjoint.check().passed());
    assert!(adjoint.semidirect().check_hom_jacobi().passed());

    let square = adjoint.tensor_product(&adjoint).expect("same base");
    assert!(square.check().passed());
}

#[test]
fn standard_double_is_the_bicross_product_of_the_standard_pair() {
    // Primal: e1 idempotent. Dual product: e0 idempotent. All four
    // compatibility conditions hold on this pair.
    let primal = algebra(2, &[0, 0, 0, 0, 0, 0, 0, 1], &[1, 0, 0, 1]);
    let dual_mul = BilinearTensor::new(
        2,
        2,
        2,
        [1, 0, 0, 0, 0, 0, 0, 0].iter().map(|&v| int(v)).collect(),
    )
    .expect("shape");
    let paired = PairedAlgebras::new(primal, dual_mul).expect("dims");

    let report = paired.equivalence_report();
    assert!(report.all_hold());
    assert!(report.consistent());
    assert!(report.twist_involutive);

    let pair = paired.standard_matched_pair();
    assert!(pair.check().passed());
    let bicross = pair.bicross_product();
    let double = paired.standard_manin_algebra();
    assert_eq!(bicross.mul().entries(), double.mul().entries());
    assert_eq!(bicross.twist().entries(), double.twist().entries());
    assert!(double.check_center_symmetric().passed());

    let lie_pair = pair.induced_lie_pair();
    assert!(lie_pair.check().passed());
    assert!(lie_pair.double().check_hom_jacobi().passed());
}

#[test]
fn the_four_conditions_can_disagree_even_on_commutative_pairs() {
    // The truncated polynomial algebra paired with itself: both cocycle
    // conditions hold and the bracket pair is trivial, yet the standard
    // matched pair fails and the double is not center-symmetric.
    let c = [1, 0, 0, 1, 0, 1, 0, 0];
    let primal = unital();
    let dual_mul =
        BilinearTensor::new(2, 2, 2, c.iter().map(|&v| int(v)).collect()).expect("shape");
    let paired = PairedAlgebras::new(primal, dual_mul).expect("dims");

    let report = paired.equivalence_report();
    assert!(report.primal_center_symmetric);
    assert!(report.dual_center_symmetric);
    assert!(report.twist_involutive);
    assert_eq!(report.conditions(), [false, false, true, true]);
    assert!(!report.consistent());
}
