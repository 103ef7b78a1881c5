//! Small named presentations used by the test suites and `selftest`.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::algebra::{QTorusPresentation, ScalarAutomorphismSpec};
use crate::scalars::{ExponentVector, GeneratorBasis};

/// The 4-dimensional torus with `q_i4 = q_i` for `i = 1, 2, 3` and every
/// other multiparameter above the diagonal equal to 1.
pub fn corner_torus() -> QTorusPresentation {
    let basis = GeneratorBasis::symbolic(["q1", "q2", "q3"]).expect("valid labels");
    let upper: BTreeMap<_, _> = (0..3)
        .map(|i| ((i, 3), ExponentVector::unit(3, i)))
        .collect();
    QTorusPresentation::from_upper(4, basis, &upper).expect("valid presentation")
}

/// The automorphism `X_i -> p_i X_i` on fresh generators `p1..p4`.
pub fn fresh_sigma() -> ScalarAutomorphismSpec {
    let basis = GeneratorBasis::symbolic(["p1", "p2", "p3", "p4"]).expect("valid labels");
    let p = (0..4).map(|i| ExponentVector::unit(4, i)).collect();
    ScalarAutomorphismSpec::new(basis, p)
}

/// `n = 2` with `q_12 = g^k`.
pub fn rank_one_plane(k: i64) -> QTorusPresentation {
    let basis = GeneratorBasis::symbolic(["g"]).expect("valid labels");
    let upper = BTreeMap::from([((0, 1), ExponentVector::from_i64(&[k]))]);
    QTorusPresentation::from_upper(2, basis, &upper).expect("valid presentation")
}

/// `n = 2` over `Q` with `q_12 = p` for a prime `p`.
pub fn rational_plane(p: u64) -> QTorusPresentation {
    let basis = GeneratorBasis::rational([BigUint::from(p)]).expect("prime");
    let upper = BTreeMap::from([((0, 1), ExponentVector::from_i64(&[1]))]);
    QTorusPresentation::from_upper(2, basis, &upper).expect("valid presentation")
}

/// The commutative torus of dimension `n` over a single dummy generator.
pub fn commutative(n: usize) -> QTorusPresentation {
    QTorusPresentation::commutative(n, GeneratorBasis::symbolic(["g"]).expect("valid labels"))
}
