//! Exact integer matrices and the lattice algorithms built on them.
//!
//! Everything here works over arbitrary-precision integers. Subgroups of
//! `Z^n` are represented by [`Sublattice`], whose basis is always kept in
//! row-style Hermite normal form so that equality of subgroups is equality
//! of bases.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from explicit rows. Every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length does not match column count");
            entries.extend(row);
        }
        Self {
            rows: nrows,
            cols,
            entries,
        }
    }

    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        assert!(i < self.rows, "row {i} out of bounds");
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        self.row_iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn push_row(&mut self, row: Vec<BigInt>) {
        assert_eq!(row.len(), self.cols, "row length does not match column count");
        self.entries.extend(row);
        self.rows += 1;
    }

    /// The first `k` rows.
    pub fn top_rows(&self, k: usize) -> IntegerMatrix {
        assert!(k <= self.rows);
        Self {
            rows: k,
            cols: self.cols,
            entries: self.entries[..k * self.cols].to_vec(),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..=i).all(|j| *self.get(i, j) == -self.get(j, i))
            })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[r * self.cols + j];
            *e = -std::mem::take(e);
        }
    }

    /// `row[dst] -= factor * row[src]`
    fn sub_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.entries[src * self.cols + j] * factor;
            self.entries[dst * self.cols + j] -= s;
        }
    }

    /// Replaces rows (r, s) by (x r + y s, u r + w s).
    fn combine_rows(&mut self, r: usize, s: usize, coeffs: &Unimodular2) {
        let Unimodular2 { x, y, u, w } = coeffs;
        for j in 0..self.cols {
            let a = self.entries[r * self.cols + j].clone();
            let b = self.entries[s * self.cols + j].clone();
            self.entries[r * self.cols + j] = x * &a + y * &b;
            self.entries[s * self.cols + j] = u * &a + w * &b;
        }
    }

    /// Replaces columns (r, s) by (x r + y s, u r + w s).
    fn combine_cols(&mut self, r: usize, s: usize, coeffs: &Unimodular2) {
        let Unimodular2 { x, y, u, w } = coeffs;
        for i in 0..self.rows {
            let a = self.entries[i * self.cols + r].clone();
            let b = self.entries[i * self.cols + s].clone();
            self.entries[i * self.cols + r] = x * &a + y * &b;
            self.entries[i * self.cols + s] = u * &a + w * &b;
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", render_tuple(row))?;
        }
        Ok(())
    }
}

/// Renders an integer tuple as `[a, b, c]`.
pub fn render_tuple(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Parses the output of [`render_tuple`].
pub fn parse_tuple(text: &str) -> Option<Vec<BigInt>> {
    let inner = text.trim().strip_prefix('[')?.strip_suffix(']')?.trim();
    if inner.is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|p| p.trim().parse().ok()).collect()
}

/// A 2x2 integer matrix `[[x, y], [u, w]]` of determinant 1.
struct Unimodular2 {
    x: BigInt,
    y: BigInt,
    u: BigInt,
    w: BigInt,
}

impl Unimodular2 {
    /// Transform sending `(a, b)` to `(gcd(a, b), 0)`.
    fn clearing(a: &BigInt, b: &BigInt) -> Self {
        if !a.is_zero() && b.is_multiple_of(a) {
            return Self {
                x: BigInt::one(),
                y: BigInt::zero(),
                u: -(b / a),
                w: BigInt::one(),
            };
        }
        let (g, x, y) = extended_gcd(a, b);
        Self {
            x,
            y,
            u: -(b / &g),
            w: a / &g,
        }
    }
}

/// Returns `(g, x, y)` with `g = gcd(a, b) >= 0` and `x a + y b = g`.
/// Requires `(a, b) != (0, 0)`.
pub(crate) fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Row-style Hermite normal form `H = U A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfResult {
    pub h: IntegerMatrix,
    pub u: IntegerMatrix,
    pub rank: usize,
}

/// Smith normal form `D = U A V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    pub d: IntegerMatrix,
}

impl SnfResult {
    /// Diagonal entries of `D`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.nrows().min(self.d.ncols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Computes the row-style Hermite normal form of `a`.
///
/// The result is upper echelon: the first `rank` rows are nonzero with
/// strictly increasing pivot columns, each pivot is positive and every entry
/// above a pivot lies in `[0, pivot)`. Remaining rows are zero.
pub fn hnf(a: &IntegerMatrix) -> HnfResult {
    let m = a.nrows();
    let n = a.ncols();
    let mut h = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if h.get(i, c).is_zero() {
                continue;
            }
            let t = Unimodular2::clearing(h.get(r, c), h.get(i, c));
            h.combine_rows(r, i, &t);
            u.combine_rows(r, i, &t);
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h.get(r, c).clone();
        for i in 0..r {
            let q = h.get(i, c).div_floor(&pivot);
            h.sub_row_multiple(i, r, &q);
            u.sub_row_multiple(i, r, &q);
        }
        r += 1;
    }
    HnfResult { h, u, rank: r }
}

/// Computes the Smith normal form of `a` together with unimodular transforms.
pub fn snf(a: &IntegerMatrix) -> SnfResult {
    let m = a.nrows();
    let n = a.ncols();
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);
    for t in 0..m.min(n) {
        // smallest nonzero entry of the trailing block, first in row-major order
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let e = d.get(i, j);
                if e.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| e.abs() < d.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            for i in t + 1..m {
                if !d.get(i, t).is_zero() {
                    let tr = Unimodular2::clearing(d.get(t, t), d.get(i, t));
                    d.combine_rows(t, i, &tr);
                    u.combine_rows(t, i, &tr);
                }
            }
            for j in t + 1..n {
                if !d.get(t, j).is_zero() {
                    let tr = Unimodular2::clearing(d.get(t, t), d.get(t, j));
                    d.combine_cols(t, j, &tr);
                    v.combine_cols(t, j, &tr);
                }
            }
            if (t + 1..m).any(|i| !d.get(i, t).is_zero()) {
                continue;
            }
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    // row t += row i brings the offending entry into row t
                    let minus_one = -BigInt::one();
                    d.sub_row_multiple(t, i, &minus_one);
                    u.sub_row_multiple(t, i, &minus_one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, v, d }
}

/// Rational rank of `a`, read off the Smith normal form.
pub fn rank(a: &IntegerMatrix) -> usize {
    snf(a).rank()
}

/// The full integer kernel `{v : A v = 0}` as a saturated sublattice.
pub fn kernel(a: &IntegerMatrix) -> Sublattice {
    let n = a.ncols();
    let HnfResult { u, rank, .. } = hnf(&a.transpose());
    let rows: Vec<Vec<BigInt>> = (rank..n).map(|i| u.row(i).to_vec()).collect();
    Sublattice::from_generators(&IntegerMatrix::from_rows(n, rows))
}

/// True iff the row spans of `a` and `b` meet only in zero.
pub fn intersect_trivially(a: &IntegerMatrix, b: &IntegerMatrix) -> bool {
    assert_eq!(a.ncols(), b.ncols(), "ambient dimension mismatch");
    rank(&a.vstack(b)) == rank(a) + rank(b)
}

/// True iff `v` is an integer combination of the basis rows of `lattice`.
pub fn member(v: &[BigInt], lattice: &Sublattice) -> bool {
    assert_eq!(v.len(), lattice.ambient_rank(), "ambient dimension mismatch");
    let mut rest = v.to_vec();
    for row in lattice.basis().row_iter() {
        let p = row
            .iter()
            .position(|e| !e.is_zero())
            .expect("HNF basis rows are nonzero");
        if rest[p].is_zero() {
            continue;
        }
        let (q, r) = rest[p].div_rem(&row[p]);
        if !r.is_zero() {
            return false;
        }
        for (x, b) in rest.iter_mut().zip(row) {
            *x -= &q * b;
        }
    }
    rest.iter().all(Zero::is_zero)
}

/// A subgroup of `Z^n`, stored by its Hermite normal form basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sublattice {
    ambient_rank: usize,
    basis: IntegerMatrix,
}

impl Sublattice {
    /// The sublattice generated by the rows of `gens`.
    pub fn from_generators(gens: &IntegerMatrix) -> Self {
        let HnfResult { h, rank, .. } = hnf(gens);
        Self {
            ambient_rank: gens.ncols(),
            basis: h.top_rows(rank),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            ambient_rank: n,
            basis: IntegerMatrix::zeros(0, n),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            ambient_rank: n,
            basis: IntegerMatrix::identity(n),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &IntegerMatrix {
        &self.basis
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        member(v, self)
    }

    /// Sum of two sublattices of the same ambient lattice.
    pub fn join(&self, other: &Sublattice) -> Sublattice {
        Sublattice::from_generators(&self.basis.vstack(&other.basis))
    }

    /// The sublattice extended by one extra generator.
    pub fn with_vector(&self, v: &[BigInt]) -> Sublattice {
        let mut gens = self.basis.clone();
        gens.push_row(v.to_vec());
        Sublattice::from_generators(&gens)
    }

    /// The smallest saturated sublattice containing `self`, i.e. its
    /// rational span intersected with `Z^n`.
    pub fn saturation(&self) -> Sublattice {
        let annihilator = kernel(&self.basis);
        kernel(annihilator.basis())
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation() == *self
    }
}

impl fmt::Display for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis.row_iter().map(render_tuple).collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(cols: usize, rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_i64_rows(cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn assert_hnf_shape(res: &HnfResult) {
        let h = &res.h;
        let mut last_pivot: Option<usize> = None;
        for i in 0..h.nrows() {
            let p = h.row(i).iter().position(|e| !e.is_zero());
            if i >= res.rank {
                assert!(p.is_none(), "row {i} beyond rank must be zero");
                continue;
            }
            let p = p.expect("rows below rank are nonzero");
            if let Some(lp) = last_pivot {
                assert!(p > lp);
            }
            last_pivot = Some(p);
            let pivot = h.get(i, p);
            assert!(pivot.is_positive());
            for k in 0..i {
                let e = h.get(k, p);
                assert!(!e.is_negative() && e < pivot);
            }
        }
    }

    #[test]
    fn hnf_identity() {
        let res = hnf(&IntegerMatrix::identity(2));
        assert_eq!(res.h, IntegerMatrix::identity(2));
        assert_eq!(res.rank, 2);
    }

    #[test]
    fn hnf_index_two_lattice() {
        let a = m(2, &[&[2, 0], &[1, 1]]);
        let res = hnf(&a);
        assert_eq!(res.h, m(2, &[&[1, 1], &[0, 2]]));
        assert_eq!(res.u.mul(&a), res.h);
        assert_eq!(res.u.determinant().abs(), BigInt::one());
        assert_hnf_shape(&res);
    }

    #[test]
    fn hnf_zero() {
        let res = hnf(&IntegerMatrix::zeros(3, 3));
        assert!(res.h.is_zero());
        assert_eq!(res.rank, 0);
    }

    #[test]
    fn hnf_idempotent_and_shape_on_wide_matrix() {
        let a = m(4, &[&[3, -6, 9, 0], &[2, 4, -1, 7], &[5, -2, 8, 7]]);
        let res = hnf(&a);
        assert_hnf_shape(&res);
        assert_eq!(res.rank, 2);
        assert_eq!(hnf(&res.h).h, res.h);
    }

    #[test]
    fn snf_examples() {
        let d = snf(&m(2, &[&[2, 4], &[6, 8]])).d;
        assert_eq!(d, m(2, &[&[2, 0], &[0, 4]]));
        assert_eq!(snf(&IntegerMatrix::identity(3)).d, IntegerMatrix::identity(3));
        assert_eq!(
            snf(&m(2, &[&[0, 1], &[-1, 0]])).d,
            IntegerMatrix::identity(2)
        );
        assert_eq!(snf(&m(2, &[&[3, 0], &[0, 1]])).d, m(2, &[&[1, 0], &[0, 3]]));
    }

    #[test]
    fn snf_transform_identity_holds() {
        let a = m(3, &[&[4, 6, 2], &[-2, 10, 8], &[6, 0, 14], &[0, 0, 0]]);
        let s = snf(&a);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert_eq!(s.u.determinant().abs(), BigInt::one());
        assert_eq!(s.v.determinant().abs(), BigInt::one());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&IntegerMatrix::identity(3)), 3);
        assert_eq!(rank(&m(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])), 2);
        assert_eq!(rank(&IntegerMatrix::zeros(2, 5)), 0);
        assert_eq!(rank(&IntegerMatrix::zeros(0, 3)), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&m(2, &[&[0, 1], &[-1, 0]])).rank(), 0);
        assert_eq!(kernel(&IntegerMatrix::zeros(2, 2)), Sublattice::full(2));
        let k = kernel(&m(3, &[&[1, 1, 0]]));
        assert_eq!(k.rank(), 2);
        // canonical form of span{(1,-1,0), (0,0,1)}
        assert_eq!(
            k,
            Sublattice::from_generators(&m(3, &[&[1, -1, 0], &[0, 0, 1]]))
        );
        assert_eq!(k.basis(), &m(3, &[&[1, -1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x - 4y = 0 has kernel generated by (2, 1), not (4, 2)
        let k = kernel(&m(2, &[&[2, -4]]));
        assert_eq!(k.basis(), &m(2, &[&[2, 1]]));
        assert!(k.is_saturated());
    }

    #[test]
    fn intersect_trivially_examples() {
        let e = |i: usize, n: usize| {
            let mut r = vec![0i64; n];
            r[i] = 1;
            r
        };
        let a = IntegerMatrix::from_i64_rows(7, &[e(0, 7), e(1, 7), e(2, 7)]);
        let b = IntegerMatrix::from_i64_rows(7, &[e(3, 7), e(4, 7), e(5, 7), e(6, 7)]);
        assert!(intersect_trivially(&a, &b));
        let e1 = m(2, &[&[1, 0]]);
        assert!(!intersect_trivially(&e1, &e1));
        assert!(!intersect_trivially(&e1, &m(2, &[&[2, 0]])));
    }

    #[test]
    fn member_examples() {
        let l = Sublattice::from_generators(&m(2, &[&[1, 1], &[0, 2]]));
        assert!(member(&v(&[0, 0]), &l));
        assert!(member(&v(&[0, 0]), &Sublattice::zero(2)));
        assert!(member(&v(&[2, 0]), &l));
        assert!(!member(&v(&[1, 0]), &l));
        assert!(!member(&v(&[0, 1]), &Sublattice::zero(2)));
    }

    #[test]
    fn saturation_of_index_two() {
        let l = Sublattice::from_generators(&m(2, &[&[1, 1], &[0, 2]]));
        assert_eq!(l.saturation(), Sublattice::full(2));
        let line = Sublattice::from_generators(&m(3, &[&[2, 4, 6]]));
        assert_eq!(line.saturation().basis(), &m(3, &[&[1, 2, 3]]));
    }

    #[test]
    fn determinant_matches_hand_values() {
        assert_eq!(m(2, &[&[2, 4], &[6, 8]]).determinant(), BigInt::from(-8));
        assert_eq!(m(3, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]).determinant(), BigInt::from(-5));
        assert_eq!(IntegerMatrix::zeros(0, 0).determinant(), BigInt::one());
    }

    #[test]
    fn tuple_round_trip() {
        let t = v(&[3, -1, 0]);
        assert_eq!(render_tuple(&t), "[3, -1, 0]");
        assert_eq!(parse_tuple(&render_tuple(&t)), Some(t));
        assert_eq!(parse_tuple("[]"), Some(vec![]));
    }
}
