#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;
use qtorus_core::{ExponentVector, GeneratorBasis, IntegerMatrix, QTorusPresentation};

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntegerMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        vec(vec(-bound..=bound, c), r).prop_map(move |rows| IntegerMatrix::from_i64_rows(c, &rows))
    })
}

/// Symbolic presentation on `g1..gm` with exponents in `[-bound, bound]`.
pub fn presentation(max_n: usize, max_m: usize, bound: i64) -> impl Strategy<Value = QTorusPresentation> {
    (1..=max_n, 1..=max_m).prop_flat_map(move |(n, m)| {
        vec(vec(-bound..=bound, m), n * (n - 1) / 2).prop_map(move |entries| build(n, m, &entries))
    })
}

pub fn build(n: usize, m: usize, entries: &[Vec<i64>]) -> QTorusPresentation {
    let basis = GeneratorBasis::symbolic((1..=m).map(|k| format!("g{k}"))).unwrap();
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let upper: BTreeMap<_, _> = pairs.zip(entries).map(|(ij, e)| (ij, ExponentVector::from_i64(e))).collect();
    QTorusPresentation::from_upper(n, basis, &upper).unwrap()
}

/// Row operation on a square matrix: add `k` times row `j` to row `i`,
/// then optionally swap rows `i` and `j` and negate row `i`.
pub type RowOp = (usize, usize, i64, bool);

pub fn row_ops(len: usize) -> impl Strategy<Value = Vec<RowOp>> {
    vec((any::<usize>(), any::<usize>(), -2i64..=2, any::<bool>()), 0..=len)
}

pub fn apply_ops(rows: &mut [Vec<BigInt>], ops: &[RowOp]) {
    let r = rows.len();
    if r == 0 {
        return;
    }
    for &(i, j, k, flip) in ops {
        let (i, j) = (i % r, j % r);
        if i != j {
            let add: Vec<BigInt> = rows[j].iter().map(|x| x * k).collect();
            for (a, b) in rows[i].iter_mut().zip(add) {
                *a += b;
            }
            if flip {
                rows.swap(i, j);
            }
        }
        if flip {
            for a in rows[i].iter_mut() {
                *a = -a.clone();
            }
        }
    }
}

/// A random unimodular `n x n` matrix built from row operations.
pub fn unimodular(n: usize, ops: &[RowOp]) -> IntegerMatrix {
    let mut rows = IntegerMatrix::identity(n).to_rows();
    apply_ops(&mut rows, ops);
    IntegerMatrix::from_rows(n, rows)
}
