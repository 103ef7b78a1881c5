//! Brute-force certifiers for the lattice algorithms and the isotropic-rank
//! search.
//!
//! Nothing in this module calls into [`crate::lattice`] algorithms; the
//! oracles only share the plain [`IntegerMatrix`] container and result
//! types so their outputs can be compared directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashSet;
use thiserror::Error;

use crate::algebra::PairingForms;
use crate::lattice::{IntegerMatrix, SnfResult};

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration exceeded {limit} nodes")]
    BudgetExceeded { limit: u64 },
    #[error("oracle input too large: {0}")]
    TooLarge(String),
}

/// Rank by fraction-free Gaussian elimination.
pub fn rank_fraction_free(a: &IntegerMatrix) -> usize {
    let mut m = a.to_rows();
    let rows = m.len();
    let cols = a.ncols();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&m[i][j] * &m[rank][c] - &m[i][c] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Smith normal form by repeated Euclidean reduction around the smallest
/// nonzero pivot.
pub fn snf_oracle(a: &IntegerMatrix) -> SnfResult {
    let rows = a.nrows();
    let cols = a.ncols();
    let mut d = a.to_rows();
    let mut u = IntegerMatrix::identity(rows).to_rows();
    let mut v = IntegerMatrix::identity(cols).to_rows();

    let swap_cols = |m: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for r in m.iter_mut() {
            r.swap(a, b);
        }
    };
    let row_axpy = |m: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, k: &BigInt| {
        let s = m[src].clone();
        for (x, y) in m[dst].iter_mut().zip(&s) {
            *x -= k * y;
        }
    };
    let col_axpy = |m: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, k: &BigInt| {
        for r in m.iter_mut() {
            let y = r[src].clone();
            r[dst] -= k * y;
        }
    };

    for t in 0..rows.min(cols) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d[i][j].is_zero()
                        && pivot.is_none_or(|(pi, pj)| d[i][j].abs() < d[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return SnfResult {
                    u: IntegerMatrix::from_rows(rows, u),
                    v: IntegerMatrix::from_rows(cols, v),
                    d: IntegerMatrix::from_rows(cols, d),
                };
            };
            d.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let p = d[t][t].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                let q = &d[i][t] / &p;
                row_axpy(&mut d, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                dirty |= !d[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = &d[t][j] / &p;
                col_axpy(&mut d, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                dirty |= !d[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut d, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -std::mem::take(x);
            }
            for x in u[t].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
    }
    SnfResult {
        u: IntegerMatrix::from_rows(rows, u),
        v: IntegerMatrix::from_rows(cols, v),
        d: IntegerMatrix::from_rows(cols, d),
    }
}

/// Solves `sum x_i basis_i = target` over Q for linearly independent rows.
fn rational_solve(basis: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let n = target.len();
    // augmented n x (k + 1) system with the basis vectors as columns
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..k {
        let Some(p) = (row..n).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][c].recip();
        for x in aug[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != row && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                let src = aug[row].clone();
                for (x, y) in aug[i].iter_mut().zip(&src) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    if aug[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][k].clone();
    }
    Some(x)
}

const MEMBERSHIP_ENUM_LIMIT: u64 = 5_000_000;

/// Decides whether `v` is an integer combination of the rows of `gens`.
///
/// A maximal independent subset of the generators fixes the rational
/// coordinates of `v`; the remaining generators enter with coefficients
/// that only matter modulo the denominators of their own coordinates, so a
/// finite box of coefficients is enumerated and each candidate checked for
/// integrality.
pub fn membership_oracle(v: &[BigInt], gens: &IntegerMatrix) -> Result<bool, OracleError> {
    assert_eq!(v.len(), gens.ncols(), "ambient dimension mismatch");
    if v.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    let to_q = |r: &[BigInt]| r.iter().map(|x| BigRational::from(x.clone())).collect::<Vec<_>>();
    let mut independent: Vec<Vec<BigRational>> = Vec::new();
    let mut dependent: Vec<Vec<BigRational>> = Vec::new();
    for r in gens.row_iter() {
        let q = to_q(r);
        if q.iter().all(Zero::is_zero) {
            continue;
        }
        if rational_solve(&independent, &q).is_some() {
            dependent.push(q);
        } else {
            independent.push(q);
        }
    }
    let Some(x0) = rational_solve(&independent, &to_q(v)) else {
        return Ok(false);
    };
    let shifts: Vec<Vec<BigRational>> = dependent
        .iter()
        .map(|d| rational_solve(&independent, d).expect("dependent row"))
        .collect();
    let periods: Vec<BigInt> = shifts
        .iter()
        .map(|s| s.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom())))
        .collect();
    let total = periods
        .iter()
        .try_fold(1u64, |acc, p| p.to_u64().and_then(|p| acc.checked_mul(p)))
        .filter(|&t| t <= MEMBERSHIP_ENUM_LIMIT)
        .ok_or_else(|| OracleError::TooLarge("coefficient box too large".into()))?;

    let mut coeffs = vec![BigInt::zero(); periods.len()];
    for _ in 0..total {
        let mut x = x0.clone();
        for (c, s) in coeffs.iter().zip(&shifts) {
            if c.is_zero() {
                continue;
            }
            let c = BigRational::from(c.clone());
            for (xi, si) in x.iter_mut().zip(s) {
                *xi -= &c * si;
            }
        }
        if x.iter().all(BigRational::is_integer) {
            return Ok(true);
        }
        // odometer step
        for (c, p) in coeffs.iter_mut().zip(&periods) {
            *c += 1;
            if *c < *p {
                break;
            }
            *c = BigInt::zero();
        }
    }
    Ok(false)
}

/// Incremental row echelon form over the integers, for independence tests.
/// Largest dimension [`isotropic_rank_enum`] accepts.
pub const MAX_ENUM_DIM: usize = 9;
/// Box vectors allowed in [`isotropic_rank_enum`].
pub const MAX_ENUM_VECTORS: i64 = 20_000;
const MAX_FORM_ENTRY: i64 = 1 << 20;

type Vector = [i64; MAX_ENUM_DIM];

struct Overflow;

fn primitive(w: &mut Vector) {
    let g = w.iter().fold(0u64, |g, x| g.gcd(&x.unsigned_abs())) as i64;
    if g > 1 {
        for x in w.iter_mut() {
            *x /= g;
        }
    }
    if w.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
        for x in w.iter_mut() {
            *x = -*x;
        }
    }
}

/// `w <- a w - b r`, made primitive.
fn eliminate(w: &mut Vector, a: i64, b: i64, r: &Vector) -> Result<(), Overflow> {
    for (x, y) in w.iter_mut().zip(r) {
        *x = a
            .checked_mul(*x)
            .zip(b.checked_mul(*y))
            .and_then(|(s, t)| s.checked_sub(t))
            .ok_or(Overflow)?;
    }
    primitive(w);
    Ok(())
}

/// Rational span kept in fully reduced echelon form with primitive rows, so
/// equal spans have equal row lists.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
struct Echelon {
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    /// A multiple of the unique representative of `v + span` vanishing at
    /// every pivot, made primitive with positive leading entry.
    fn reduce(&self, v: &Vector) -> Result<Vector, Overflow> {
        let mut w = *v;
        for (p, r) in &self.rows {
            if w[*p] != 0 {
                let b = w[*p];
                eliminate(&mut w, r[*p], b, r)?;
            }
        }
        Ok(w)
    }

    fn insert(&mut self, v: &Vector) -> Result<bool, Overflow> {
        let w = self.reduce(v)?;
        let Some(p) = w.iter().position(|x| *x != 0) else {
            return Ok(false);
        };
        for (_, r) in self.rows.iter_mut() {
            if r[p] != 0 {
                let b = r[p];
                eliminate(r, w[p], b, &w)?;
            }
        }
        self.rows.push((p, w));
        self.rows.sort();
        Ok(true)
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

struct IsotropicEnum {
    vectors: Vec<Vector>,
    /// `adjacent[i]` has bit `j` set iff vectors `i` and `j` are orthogonal
    /// for every form.
    adjacent: Vec<Vec<u64>>,
    max_rank: usize,
    best: usize,
    seen: FxHashSet<Echelon>,
    nodes: u64,
    limit: u64,
}

impl IsotropicEnum {
    fn partners(&self, c: usize, cands: &[usize], mask: Option<&[u64]>) -> Vec<usize> {
        let row = &self.adjacent[c];
        match mask {
            Some(mask) => row
                .iter()
                .zip(mask)
                .enumerate()
                .flat_map(|(w, (a, m))| {
                    let mut bits = a & m;
                    std::iter::from_fn(move || {
                        (bits != 0).then(|| {
                            let k = bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            w * 64 + k
                        })
                    })
                })
                .collect(),
            None => cands
                .iter()
                .copied()
                .filter(|&d| row[d / 64] >> (d % 64) & 1 == 1)
                .collect(),
        }
    }

    /// `cands` indexes every box vector orthogonal to `span` and outside
    /// it, one per class modulo `span`. Orthogonality of two such vectors
    /// does not depend on the class representative since `span` is
    /// isotropic and orthogonal to both.
    fn dfs(&mut self, span: Echelon, cands: Vec<usize>) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(OracleError::BudgetExceeded { limit: self.limit });
        }
        let overflow = |_| OracleError::TooLarge("intermediate entries".into());
        let depth = span.rank();
        self.best = self.best.max(depth + usize::from(!cands.is_empty()));
        if self.best >= self.max_rank {
            return Ok(());
        }
        let mut reach = span.clone();
        let mut reachable = false;
        for c in &cands {
            reach.insert(&self.vectors[*c]).map_err(overflow)?;
            if reach.rank() > self.best {
                reachable = true;
                break;
            }
        }
        if !reachable {
            return Ok(());
        }
        let words = self.adjacent.first().map_or(0, Vec::len);
        let mask = (cands.len() > 4 * words).then(|| {
            let mut mask = vec![0u64; words];
            for &c in &cands {
                mask[c / 64] |= 1 << (c % 64);
            }
            mask
        });
        for &c in &cands {
            let partners = self.partners(c, &cands, mask.as_deref());
            if partners.is_empty() {
                continue;
            }
            let mut next = span.clone();
            next.insert(&self.vectors[c]).map_err(overflow)?;
            // the classes below depend on `next` only, not on the path to it
            if !self.seen.insert(next.clone()) {
                continue;
            }
            let mut classes = Vec::with_capacity(partners.len());
            for d in partners {
                let w = next.reduce(&self.vectors[d]).map_err(overflow)?;
                if w.iter().any(|x| *x != 0) {
                    classes.push((w, d));
                }
            }
            classes.sort_unstable();
            classes.dedup_by(|a, b| a.0 == b.0);
            // the child reaches depth + 2 at once and at most depth + 1 + |classes|
            self.best = self.best.max(depth + 1 + usize::from(!classes.is_empty()));
            if self.best >= self.max_rank {
                return Ok(());
            }
            if depth + 1 + classes.len() <= self.best {
                continue;
            }
            self.dfs(next, classes.into_iter().map(|(_, d)| d).collect())?;
            if self.best >= self.max_rank {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Largest `r <= max_rank` such that some `r` linearly independent vectors
/// with entries in `[-bound, bound]` are pairwise orthogonal for every form.
/// A lower bound on the largest isotropic rank.
pub fn isotropic_rank_enum(forms: &PairingForms, bound: u32, max_rank: usize) -> Result<usize, OracleError> {
    isotropic_rank_enum_with_limit(forms, bound, max_rank, DEFAULT_NODE_LIMIT)
}

pub fn isotropic_rank_enum_with_limit(
    forms: &PairingForms,
    bound: u32,
    max_rank: usize,
    limit: u64,
) -> Result<usize, OracleError> {
    let n = forms.n();
    let b = i64::from(bound);
    let total = (2 * b + 1)
        .checked_pow(n as u32)
        .filter(|t| *t <= MAX_ENUM_VECTORS && n <= MAX_ENUM_DIM)
        .ok_or_else(|| OracleError::TooLarge(format!("n = {n}, bound = {bound}")))?;
    let mut flat: Vec<i64> = Vec::new();
    for c in forms.forms() {
        for x in c.row_iter().flatten() {
            let x = x.to_i64().filter(|v| v.abs() <= MAX_FORM_ENTRY);
            flat.push(x.ok_or_else(|| OracleError::TooLarge("form entries".into()))?);
        }
    }

    let mut vectors = Vec::new();
    for code in 0..total {
        let mut rest = code;
        let mut v: Vector = [0; MAX_ENUM_DIM];
        for x in v[..n].iter_mut().rev() {
            *x = rest % (2 * b + 1) - b;
            rest /= 2 * b + 1;
        }
        primitive(&mut v);
        if v.iter().any(|x| *x != 0) {
            vectors.push(v);
        }
    }
    vectors.sort_unstable();
    vectors.dedup();

    // images[k][i] = C_k v_i
    let images: Vec<Vec<Vector>> = flat
        .chunks(n * n)
        .map(|c| {
            vectors
                .iter()
                .map(|v| {
                    let mut cv: Vector = [0; MAX_ENUM_DIM];
                    for (x, row) in cv.iter_mut().zip(c.chunks(n)) {
                        *x = row.iter().zip(v).map(|(a, b)| a * b).sum();
                    }
                    cv
                })
                .collect()
        })
        .collect();
    let words = vectors.len().div_ceil(64);
    let mut adjacent = vec![vec![0u64; words]; vectors.len()];
    for i in 0..vectors.len() {
        let v = &vectors[i];
        for j in i + 1..vectors.len() {
            let ortho = images
                .iter()
                .all(|img| img[j].iter().zip(v).map(|(x, y)| x * y).sum::<i64>() == 0);
            if ortho {
                adjacent[i][j / 64] |= 1 << (j % 64);
                adjacent[j][i / 64] |= 1 << (i % 64);
            }
        }
    }

    let all: Vec<usize> = (0..vectors.len()).collect();
    let mut search = IsotropicEnum {
        vectors,
        adjacent,
        max_rank: max_rank.min(n),
        best: 0,
        seen: FxHashSet::default(),
        nodes: 0,
        limit,
    };
    search.dfs(Echelon::default(), all)?;
    Ok(search.best)
}

/// Seeded random inputs shared by the randomized suites.
pub mod sample {
    use std::collections::BTreeMap;

    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use crate::algebra::{PairingForms, QTorusPresentation};
    use crate::lattice::IntegerMatrix;
    use crate::scalars::{ExponentVector, GeneratorBasis};

    /// Seed used by every randomized suite unless stated otherwise.
    pub const SUITE_SEED: u64 = 20_190_617;

    /// Generator for case `index` of the suite seeded with `seed`. Each case
    /// gets its own stream, so results do not depend on evaluation order.
    pub fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        rng
    }

    pub fn int(rng: &mut impl Rng, lo: i64, hi: i64) -> BigInt {
        BigInt::from(rng.gen_range(lo..=hi))
    }

    pub fn vector(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> Vec<BigInt> {
        (0..n).map(|_| int(rng, lo, hi)).collect()
    }

    pub fn matrix(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> IntegerMatrix {
        IntegerMatrix::from_rows(cols, (0..rows).map(|_| vector(rng, cols, lo, hi)).collect())
    }

    pub fn antisymmetric(rng: &mut impl Rng, n: usize, bound: i64) -> IntegerMatrix {
        let mut c = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let x = int(rng, -bound, bound);
                c.set(j, i, -x.clone());
                c.set(i, j, x);
            }
        }
        c
    }

    pub fn single_form(rng: &mut impl Rng, n: usize, bound: i64) -> PairingForms {
        PairingForms::new(n, vec![antisymmetric(rng, n, bound)])
    }

    /// A symbolic presentation on generators `g1..gm` with exponents of the
    /// entries above the diagonal drawn from `[-bound, bound]`.
    pub fn presentation(rng: &mut impl Rng, n: usize, m: usize, bound: i64) -> QTorusPresentation {
        let labels: Vec<String> = (1..=m).map(|k| format!("g{k}")).collect();
        let basis = GeneratorBasis::symbolic(labels).expect("valid labels");
        let mut upper = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                upper.insert((i, j), ExponentVector::new(vector(rng, m, -bound, bound)));
            }
        }
        QTorusPresentation::from_upper(n, basis, &upper).expect("antisymmetric by construction")
    }
}
