mod common;

use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;
use qtorus_core::algebra::{cocycle, commutator_lambda, is_commutative_sublattice, pairing};
use qtorus_core::invariants::{center_lattice, is_central, kdim, lambda_group_rank};
use qtorus_core::lattice::{self, member};
use qtorus_core::oracle::isotropic_rank_enum;
use qtorus_core::{IntegerMatrix, QTorusPresentation, Sublattice};

use common::{ints, presentation, row_ops, unimodular};

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Vectors of length `n` for a presentation drawn alongside them.
fn with_vectors(k: usize, bound: i64) -> impl Strategy<Value = (QTorusPresentation, Vec<Vec<BigInt>>)> {
    presentation(5, 3, 3).prop_flat_map(move |q| {
        let n = q.n();
        (Just(q), vec(vec(-bound..=bound, n).prop_map(|v| ints(&v)), k))
    })
}

/// The presentation of the same torus in the generators `X^{p_i}` for the
/// rows `p_i` of `p`.
fn change_basis(q: &QTorusPresentation, p: &IntegerMatrix) -> QTorusPresentation {
    let n = q.n();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| commutator_lambda(p.row(i), p.row(j), q)).collect())
        .collect();
    QTorusPresentation::validate(q.basis().clone(), rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cocycle_identity((q, xs) in with_vectors(3, 4)) {
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        let lhs = cocycle(x, y, &q).mul(&cocycle(&add(x, y), z, &q));
        let rhs = cocycle(y, z, &q).mul(&cocycle(x, &add(y, z), &q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lambda_is_bilinear_and_alternating((q, xs) in with_vectors(3, 4)) {
        let forms = pairing(&q);
        let (a, a2, b) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(forms.lambda(&add(a, a2), b), forms.lambda(a, b).mul(&forms.lambda(a2, b)));
        prop_assert!(forms.lambda(a, a).is_one());
        prop_assert_eq!(forms.lambda(a, b), forms.lambda(b, a).inv());
        prop_assert_eq!(forms.lambda(a, b), commutator_lambda(a, b, &q));
    }

    #[test]
    fn pairing_forms_have_even_rank(q in presentation(6, 3, 3)) {
        for c in pairing(&q).forms() {
            prop_assert!(c.is_antisymmetric());
            prop_assert_eq!(lattice::rank(c) % 2, 0);
        }
    }

    #[test]
    fn commutativity_ignores_generator_choice(
        (q, gens) in with_vectors(3, 2),
        take in 1usize..=3,
        ops in row_ops(6),
    ) {
        let n = q.n();
        let b = IntegerMatrix::from_rows(n, gens[..take].to_vec());
        let moved = unimodular(take, &ops).mul(&b);
        let flag = is_commutative_sublattice(&Sublattice::from_generators(&b), &q);
        prop_assert_eq!(is_commutative_sublattice(&Sublattice::from_generators(&moved), &q), flag);
        let pairwise = gens[..take]
            .iter()
            .all(|u| gens[..take].iter().all(|v| commutator_lambda(u, v, &q).is_one()));
        prop_assert_eq!(flag, pairwise);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn invariants_survive_change_of_basis(q in presentation(4, 3, 2), ops in row_ops(8)) {
        let p = unimodular(q.n(), &ops);
        let q2 = change_basis(&q, &p);
        prop_assert_eq!(lambda_group_rank(&q2), lambda_group_rank(&q));
        prop_assert_eq!(center_lattice(&q2).rank(), center_lattice(&q).rank());
        let (k1, k2) = (kdim(&q, 2), kdim(&q2, 2));
        prop_assert!(k1.lower <= k2.upper && k2.lower <= k1.upper, "{:?} vs {:?}", k1, k2);
        if k1.exact && k2.exact {
            prop_assert_eq!(k1.lower, k2.lower);
        }
    }

    #[test]
    fn center_is_the_radical(q in presentation(4, 3, 3), v in vec(-5i64..=5, 4)) {
        let z = center_lattice(&q);
        prop_assert!(z.is_saturated());
        for row in z.basis().row_iter() {
            prop_assert!(is_central(row, &q));
        }
        let v = ints(&v[..q.n()]);
        prop_assert_eq!(is_central(&v, &q), member(&v, &z));
    }

    #[test]
    fn kdim_witness_is_commutative(q in presentation(4, 3, 2)) {
        let kd = kdim(&q, 2);
        prop_assert!(kd.lower <= kd.upper && kd.upper <= q.n());
        prop_assert_eq!(kd.witness.rank(), kd.lower);
        prop_assert!(is_commutative_sublattice(&kd.witness, &q));
        prop_assert!(center_lattice(&q).rank() <= kd.lower);
        let k1 = kdim(&q, 1);
        prop_assert!(k1.lower <= kd.lower && kd.upper <= k1.upper);
        let found = isotropic_rank_enum(&pairing(&q), 2, q.n()).unwrap();
        prop_assert!(found <= kd.upper, "enumeration found {} above {:?}", found, kd);
    }
}
