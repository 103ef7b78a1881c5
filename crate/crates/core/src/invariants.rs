//! Algebra-level invariants: the lambda-group rank, the center, the Krull
//! dimension and the holonomic bound.
//!
//! The Krull dimension of a quantum torus equals the largest rank of a
//! sublattice on which every commutator form vanishes. For a single form
//! this is `n - rank/2`. For several forms there is no closed form, so
//! [`kdim`] returns certified bounds: the lower bound comes with an explicit
//! isotropic witness, the upper bound from ranks of the forms and of random
//! integer combinations of them.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{is_isotropic, pairing, PairingForms, QTorusPresentation};
use crate::lattice::{self, IntegerMatrix, Sublattice};
use crate::scalars::{subgroup_rank, ExponentVector};

/// Seed for the random form combinations used in the upper bound.
pub const COMBINATION_SEED: u64 = 0x7174_6f72_7573;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("Krull dimension is only bracketed: {lower} <= K.dim <= {upper}; raise --bound")]
    InexactKdim { lower: usize, upper: usize },
}

/// Bracket on the Krull dimension with an isotropic witness of rank `lower`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KdimEstimate {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub witness: Sublattice,
}

impl KdimEstimate {
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.lower)
    }

    pub fn require_exact(&self) -> Result<usize, InvariantError> {
        self.value().ok_or(InvariantError::InexactKdim {
            lower: self.lower,
            upper: self.upper,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KdimOptions {
    /// Largest absolute entry of candidate vectors in the branch search.
    pub search_bound: u32,
    /// Number of random form combinations tried for the upper bound.
    pub combination_samples: usize,
    pub seed: u64,
    /// Number of search states visited per bound before giving up.
    pub node_budget: usize,
}

impl Default for KdimOptions {
    fn default() -> Self {
        Self {
            search_bound: 2,
            combination_samples: 64,
            seed: COMBINATION_SEED,
            node_budget: 5_000,
        }
    }
}

/// Rank of the subgroup of `k^x` generated by the multiparameters.
pub fn lambda_group_rank(q: &QTorusPresentation) -> usize {
    let n = q.n();
    let gens: Vec<ExponentVector> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| q.q(i, j).clone())
        .collect();
    subgroup_rank(&gens)
}

/// The sublattice `Z` with center `k * Z`: all `a` with `lambda(a, e_i) = 1`
/// for every `i`.
pub fn center_lattice(q: &QTorusPresentation) -> Sublattice {
    radical(&pairing(q))
}

pub(crate) fn radical(forms: &PairingForms) -> Sublattice {
    lattice::kernel(&forms.stacked())
}

/// GK dimension of the torus itself.
pub fn gk_algebra(q: &QTorusPresentation) -> usize {
    q.n()
}

/// Smallest possible GK dimension of a finitely generated module:
/// `n - K.dim`.
pub fn holonomic_bound(q: &QTorusPresentation, kd: &KdimEstimate) -> Result<usize, InvariantError> {
    Ok(q.n() - kd.require_exact()?)
}

/// Krull dimension estimate with default options and the given search bound.
pub fn kdim(q: &QTorusPresentation, search_bound: u32) -> KdimEstimate {
    kdim_with(
        q,
        &KdimOptions {
            search_bound,
            ..KdimOptions::default()
        },
    )
}

pub fn kdim_with(q: &QTorusPresentation, opts: &KdimOptions) -> KdimEstimate {
    kdim_of_forms(&pairing(q), opts)
}

pub fn kdim_of_forms(forms: &PairingForms, opts: &KdimOptions) -> KdimEstimate {
    let upper = kdim_upper_bound(forms, opts);
    let center = radical(forms);
    let mut best = greedy_isotropic(forms, center.clone());
    if best.rank() < upper && upper + 1 == forms.n() {
        if let Some(h) = isotropic_hyperplane(forms) {
            best = h;
        }
    }
    if forms.forms().len() > 1 {
        for bound in 1..=opts.search_bound {
            if best.rank() >= upper {
                break;
            }
            let found = BranchSearch::new(forms, bound, upper, opts.node_budget).run(&center);
            if better(&found, &best) {
                best = found;
            }
        }
    }
    debug_assert!(is_isotropic(&best, forms));
    let lower = best.rank();
    assert!(lower <= upper, "isotropic witness exceeds a proven upper bound");
    KdimEstimate {
        lower,
        upper,
        exact: lower == upper,
        witness: best,
    }
}

/// Higher rank wins; equal ranks are broken by the smaller HNF basis.
fn better(a: &Sublattice, b: &Sublattice) -> bool {
    a.rank() > b.rank() || (a.rank() == b.rank() && a.basis() < b.basis())
}

/// `min(n, n - rank(C)/2)` over every form and over random integer
/// combinations of the forms. A sublattice isotropic for all forms is
/// isotropic for every combination. A bound of `n - 1` is then settled
/// exactly by [`isotropic_hyperplane`].
pub fn kdim_upper_bound(forms: &PairingForms, opts: &KdimOptions) -> usize {
    let n = forms.n();
    let bound_for = |c: &IntegerMatrix| n - lattice::rank(c) / 2;
    let mut upper = forms.forms().iter().map(bound_for).fold(n, usize::min);
    if forms.forms().len() > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.combination_samples {
            let mut combo = IntegerMatrix::zeros(n, n);
            for c in forms.forms() {
                let k = BigInt::from(rng.gen_range(-8i64..=8));
                for i in 0..n {
                    for j in 0..n {
                        let v = combo.get(i, j) + &k * c.get(i, j);
                        combo.set(i, j, v);
                    }
                }
            }
            upper = upper.min(bound_for(&combo));
        }
    }
    if upper + 1 == n && isotropic_hyperplane(forms).is_none() {
        upper -= 1;
    }
    upper
}

/// A rank `n - 1` sublattice isotropic for every form, if one exists.
///
/// The forms vanish on the hyperplane `f = 0` iff each nonzero form is
/// `f ^ g` for some `g`, i.e. has rank 2 and `f` in its image.
pub fn isotropic_hyperplane(forms: &PairingForms) -> Option<Sublattice> {
    let n = forms.n();
    let nonzero: Vec<&IntegerMatrix> = forms.forms().iter().filter(|c| !c.is_zero()).collect();
    if nonzero.is_empty() || nonzero.iter().any(|c| lattice::rank(c) != 2) {
        return None;
    }
    // the image of an antisymmetric C is its row space, cut out by ker C
    let mut equations = IntegerMatrix::zeros(0, n);
    for c in nonzero {
        equations = equations.vstack(lattice::kernel(c).basis());
    }
    let common = lattice::kernel(&equations);
    let f = common.basis().row_iter().next()?.to_vec();
    Some(lattice::kernel(&IntegerMatrix::from_rows(n, vec![f])))
}

/// Orthogonal complement of an isotropic sublattice: all `v` with
/// `lambda(v, b) = 1` for every basis vector `b`. Always saturated and
/// contains the sublattice itself.
fn complement(forms: &PairingForms, s: &Sublattice) -> Sublattice {
    lattice::kernel(&forms.orthogonality_conditions(s.basis()))
}

/// Extends `start` one kernel vector at a time until it is maximal.
/// For a single form every maximal isotropic sublattice has the largest
/// possible rank, so this is exact when `m <= 1`.
pub(crate) fn greedy_isotropic(forms: &PairingForms, start: Sublattice) -> Sublattice {
    let mut s = start;
    loop {
        let perp = complement(forms, &s);
        if perp.rank() == s.rank() {
            return s;
        }
        let v = perp
            .basis()
            .row_iter()
            .find(|r| !s.contains(r))
            .expect("complement strictly larger than the sublattice")
            .to_vec();
        s = s.with_vector(&v).saturation();
    }
}

/// Depth-first extension of isotropic sublattices by short vectors, with
/// memoized canonical states.
struct BranchSearch<'a> {
    forms: &'a PairingForms,
    /// Candidate vectors with entries in `[-bound, bound]`, first nonzero
    /// entry positive, shortest first.
    candidates: Vec<Vec<i64>>,
    target: usize,
    budget: usize,
    visited: HashSet<Sublattice>,
    best: Option<Sublattice>,
}

impl<'a> BranchSearch<'a> {
    fn new(forms: &'a PairingForms, bound: u32, target: usize, budget: usize) -> Self {
        Self {
            forms,
            candidates: short_vectors(forms.n(), bound as i64),
            target,
            budget,
            visited: HashSet::new(),
            best: None,
        }
    }

    fn run(mut self, start: &Sublattice) -> Sublattice {
        self.visit(start.clone());
        self.best.unwrap_or_else(|| start.clone())
    }

    fn best_rank(&self) -> usize {
        self.best.as_ref().map_or(0, Sublattice::rank)
    }

    fn visit(&mut self, s: Sublattice) {
        if self.best_rank() >= self.target || self.visited.len() >= self.budget {
            return;
        }
        if !self.visited.insert(s.clone()) {
            return;
        }
        if self.best.as_ref().is_none_or(|b| better(&s, b)) {
            self.best = Some(s.clone());
        }
        let perp = complement(self.forms, &s);
        if perp.rank() <= self.best_rank() {
            return;
        }
        for v in self.children(&s, &perp) {
            let child = s.with_vector(&v).saturation();
            self.visit(child);
            if self.best_rank() >= self.target || self.visited.len() >= self.budget {
                return;
            }
        }
    }

    /// Basis vectors of the complement, then short vectors of it, that are
    /// not already in `s`.
    fn children(&self, s: &Sublattice, perp: &Sublattice) -> Vec<Vec<BigInt>> {
        let mut out: Vec<Vec<BigInt>> = perp
            .basis()
            .row_iter()
            .filter(|r| !s.contains(r))
            .map(|r| r.to_vec())
            .collect();
        let conditions = small_matrix(&self.forms.orthogonality_conditions(s.basis()));
        for c in &self.candidates {
            let in_perp = match &conditions {
                Some(rows) => rows
                    .iter()
                    .all(|r| r.iter().zip(c).map(|(a, b)| a * *b as i128).sum::<i128>() == 0),
                None => perp.contains(&to_big(c)),
            };
            if in_perp {
                let big = to_big(c);
                if !s.contains(&big) {
                    out.push(big);
                }
            }
        }
        out
    }
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// The matrix as `i128` rows when every entry is small enough for exact
/// dot products against short vectors.
fn small_matrix(m: &IntegerMatrix) -> Option<Vec<Vec<i128>>> {
    const LIMIT: i128 = 1 << 80;
    m.row_iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i128().filter(|v| v.abs() < LIMIT))
                .collect::<Option<Vec<i128>>>()
        })
        .collect()
}

/// All nonzero vectors in `[-bound, bound]^n` with positive first nonzero
/// entry, ordered by max-norm and then lexicographically.
pub(crate) fn short_vectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-bound; n];
    if n == 0 {
        return out;
    }
    loop {
        if let Some(first) = cur.iter().find(|x| **x != 0) {
            if *first > 0 {
                out.push(cur.clone());
            }
        }
        let mut k = n;
        loop {
            if k == 0 {
                out.sort_by_key(|v| (v.iter().map(|x| x.abs()).max().unwrap_or(0), v.clone()));
                return out;
            }
            k -= 1;
            if cur[k] < bound {
                cur[k] += 1;
                break;
            }
            cur[k] = -bound;
        }
    }
}

/// True iff `v` lies in the center lattice.
pub fn is_central(v: &[BigInt], q: &QTorusPresentation) -> bool {
    let forms = pairing(q);
    (0..q.n()).all(|i| {
        let mut e = vec![BigInt::zero(); q.n()];
        e[i] = 1.into();
        forms.lambda(v, &e).is_one()
    })
}
