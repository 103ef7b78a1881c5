mod common;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::collection::vec;
use proptest::prelude::*;
use qtorus_core::lattice;
use qtorus_core::scalars::{parse_scalar, parse_scalar_expr, primes_of, subgroup_rank, ScalarError};
use qtorus_core::{ExponentVector, GeneratorBasis, IntegerMatrix};

use common::{apply_ops, row_ops};

fn symbolic() -> GeneratorBasis {
    GeneratorBasis::symbolic(["a", "b", "q_12", "t3"]).unwrap()
}

fn rational() -> GeneratorBasis {
    GeneratorBasis::rational([2u32, 3, 5, 7, 11].map(BigUint::from)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn symbolic_round_trip(e in vec(-6i64..=6, 4)) {
        let basis = symbolic();
        let v = ExponentVector::from_i64(&e);
        prop_assert_eq!(parse_scalar(&basis.render(&v), &basis).unwrap(), v);
    }

    #[test]
    fn rational_round_trip(e in vec(-4i64..=4, 5)) {
        let basis = rational();
        let v = ExponentVector::from_i64(&e);
        prop_assert_eq!(parse_scalar(&basis.render(&v), &basis).unwrap(), v);
    }

    #[test]
    fn rational_ingestion_is_exact(num in 1u64..=2_000_000, den in 1u64..=2_000_000) {
        let text = format!("{num}/{den}");
        let basis = GeneratorBasis::rational(primes_of(&parse_scalar_expr(&text).unwrap())).unwrap();
        let v = parse_scalar(&text, &basis).unwrap();
        prop_assert_eq!(basis.evaluate(&v), BigRational::new(BigInt::from(num), BigInt::from(den)));
    }
}

proptest! {
    #[test]
    fn nonpositive_rationals_are_rejected(num in 0u64..=1000, den in 1u64..=1000) {
        let neg = format!("-{}/{den}", num + 1);
        let basis = GeneratorBasis::rational(primes_of(&parse_scalar_expr(&neg).unwrap())).unwrap();
        let torsion = matches!(parse_scalar(&neg, &basis), Err(ScalarError::TorsionScalar { .. }));
        prop_assert!(torsion);
        let zero = format!("0/{den}");
        prop_assert!(parse_scalar(&zero, &basis).is_err());
    }

    #[test]
    fn subgroup_rank_survives_row_operations(gens in vec(vec(-5i64..=5, 3), 1..=5), ops in row_ops(10)) {
        let mut rows: Vec<Vec<BigInt>> = gens.iter().map(|g| g.iter().map(|&x| x.into()).collect()).collect();
        let before = lattice::rank(&IntegerMatrix::from_rows(3, rows.clone()));
        apply_ops(&mut rows, &ops);
        let moved: Vec<ExponentVector> = rows.into_iter().map(ExponentVector::new).collect();
        prop_assert_eq!(subgroup_rank(&moved), before);
    }
}
