//! Randomized certification suites comparing the library against the
//! oracles. Every case draws its inputs from its own seeded stream, so the
//! outcome is the same for any number of worker threads.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{
    cocycle, commutator_lambda, is_commutative_sublattice, multiply, pairing, LaurentElement,
};
use crate::invariants::{center_lattice, kdim, kdim_of_forms, KdimOptions};
use crate::lattice::{self, hnf, kernel, member, snf, IntegerMatrix, Sublattice};
use crate::oracle::{self, sample};
use crate::scalars::UnitMonomial;

pub type Check = fn(&mut ChaCha8Rng) -> Result<(), String>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {:<20} {}/{} cases",
            self.name,
            self.cases - self.failures,
            self.cases
        )?;
        if let Some(msg) = &self.first_failure {
            write!(f, "; first failure: {msg}")?;
        }
        Ok(())
    }
}

/// Runs `check` on `cases` seeded cases, in parallel.
pub fn run_suite(name: &'static str, cases: usize, seed: u64, check: Check) -> SuiteReport {
    let outcomes: Vec<Result<(), String>> = (0..cases as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample::case_rng(seed, i);
            check(&mut rng).map_err(|e| format!("case {i}: {e}"))
        })
        .collect();
    let failures = outcomes.iter().filter(|o| o.is_err()).count();
    let first_failure = outcomes.into_iter().find_map(Result::err);
    SuiteReport {
        name,
        cases,
        failures,
        first_failure,
    }
}

/// `(name, full case count, seed offset, check)` for every suite.
pub const SUITES: &[(&str, usize, u64, Check)] = &[
    ("snf_hnf_certificate", 500, 1, check_snf_hnf),
    ("kernel", 200, 2, check_kernel),
    ("membership", 500, 3, check_membership),
    ("isotropic_rank_m1", 100, 4, check_isotropic_single_form),
    ("cocycle_identity", 1000, 5, check_cocycle),
    ("defining_relations", 100, 6, check_relations),
    ("associativity", 300, 7, check_associativity),
    ("center", 200, 8, check_center),
    ("kdim_bounds", 100, 9, check_kdim_bounds),
];

pub fn run_all(quick: bool) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|&(name, count, offset, check)| {
            let cases = if quick { count.div_ceil(10) } else { count };
            run_suite(name, cases, sample::SUITE_SEED + offset, check)
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn is_unimodular(u: &IntegerMatrix) -> bool {
    u.determinant().abs().is_one()
}

/// Checks the Smith form `D = U A V` and Hermite form `H = U A` of `a`.
pub fn certify_snf_hnf(a: &IntegerMatrix) -> Result<(), String> {
    let s = snf(a);
    ensure(s.u.mul(a).mul(&s.v) == s.d, || format!("UAV != D for {a:?}"))?;
    ensure(is_unimodular(&s.u) && is_unimodular(&s.v), || "SNF transform not unimodular".into())?;
    for i in 0..s.d.nrows() {
        for j in 0..s.d.ncols() {
            ensure(i == j || s.d.get(i, j).is_zero(), || "D not diagonal".into())?;
        }
    }
    let diag = s.diagonal();
    let r = diag.iter().take_while(|d| d.is_positive()).count();
    ensure(diag[r..].iter().all(Zero::is_zero), || format!("bad diagonal {diag:?}"))?;
    for w in diag[..r].windows(2) {
        ensure((&w[1] % &w[0]).is_zero(), || format!("divisibility chain broken: {diag:?}"))?;
    }
    let o = oracle::snf_oracle(a);
    ensure(o.d == s.d, || format!("oracle D {:?} != {:?}", o.diagonal(), diag))?;
    ensure(o.u.mul(a).mul(&o.v) == o.d, || "oracle certificate broken".into())?;
    let ff = oracle::rank_fraction_free(a);
    ensure(lattice::rank(a) == ff, || format!("rank {} != fraction-free {ff}", lattice::rank(a)))?;

    let h = hnf(a);
    ensure(h.u.mul(a) == h.h, || "UA != H".into())?;
    ensure(is_unimodular(&h.u), || "HNF transform not unimodular".into())?;
    ensure(h.rank == ff, || "HNF rank mismatch".into())?;
    let mut prev: Option<usize> = None;
    for i in 0..h.h.nrows() {
        let p = h.h.row(i).iter().position(|e| !e.is_zero());
        if i >= h.rank {
            ensure(p.is_none(), || "nonzero row below rank".into())?;
            continue;
        }
        let p = p.ok_or("zero row above rank")?;
        ensure(prev.is_none_or(|q| p > q), || "pivots not increasing".into())?;
        let pivot = h.h.get(i, p);
        ensure(pivot.is_positive(), || "pivot not positive".into())?;
        for k in 0..i {
            let e = h.h.get(k, p);
            ensure(!e.is_negative() && e < pivot, || "entry above pivot not reduced".into())?;
        }
        prev = Some(p);
    }
    ensure(hnf(&h.h).h == h.h, || "HNF not idempotent".into())
}

fn check_snf_hnf(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let rows = rng.gen_range(1..=6);
    let cols = rng.gen_range(1..=6);
    let a = sample::matrix(rng, rows, cols, -9, 9);
    certify_snf_hnf(&a)
}

fn check_kernel(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let rows = rng.gen_range(1..=5);
    let cols = rng.gen_range(1..=6);
    // low-rank inputs make the kernel interesting
    let inner = rng.gen_range(1..=cols);
    let left = sample::matrix(rng, rows, inner, -3, 3);
    let right = sample::matrix(rng, left.ncols(), cols, -3, 3);
    let a = left.mul(&right);
    let k = kernel(&a);
    ensure(k.rank() == cols - lattice::rank(&a), || "kernel rank wrong".into())?;
    for row in k.basis().row_iter() {
        ensure(a.mul_vec(row).iter().all(Zero::is_zero), || "basis vector not in kernel".into())?;
    }
    ensure(snf(k.basis()).diagonal().iter().all(One::is_one), || "kernel not saturated".into())?;
    for _ in 0..5 {
        let mut v = vec![BigInt::zero(); cols];
        for row in k.basis().row_iter() {
            let c = sample::int(rng, -4, 4);
            for (x, b) in v.iter_mut().zip(row) {
                *x += &c * b;
            }
        }
        ensure(a.mul_vec(&v).iter().all(Zero::is_zero), || "combination left kernel".into())?;
        ensure(member(&v, &k), || "combination not a member".into())?;
        let w = sample::vector(rng, cols, -5, 5);
        if !a.mul_vec(&w).iter().all(Zero::is_zero) {
            ensure(!member(&w, &k), || "vector outside kernel accepted".into())?;
        }
    }
    Ok(())
}

fn check_membership(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=4);
    let count = rng.gen_range(1..=4);
    let gens = sample::matrix(rng, count, n, -3, 3);
    let l = Sublattice::from_generators(&gens);
    let v = if rng.gen_bool(0.5) {
        let mut v = vec![BigInt::zero(); n];
        for row in gens.row_iter() {
            let c = sample::int(rng, -3, 3);
            for (x, b) in v.iter_mut().zip(row) {
                *x += &c * b;
            }
        }
        v
    } else {
        sample::vector(rng, n, -6, 6)
    };
    let expected = oracle::membership_oracle(&v, &gens).map_err(|e| e.to_string())?;
    ensure(member(&v, &l) == expected, || {
        format!("member({v:?}) = {} but oracle says {expected}", !expected)
    })
}

fn check_isotropic_single_form(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=6);
    let forms = sample::single_form(rng, n, 3);
    let closed = n - lattice::rank(&forms.forms()[0]) / 2;
    let found = oracle::isotropic_rank_enum(&forms, 2, n).map_err(|e| e.to_string())?;
    ensure(found == closed, || format!("n = {n}: closed form {closed}, enumeration {found}"))?;
    let kd = kdim_of_forms(&forms, &KdimOptions::default());
    ensure(kd.exact && kd.lower == closed, || format!("kdim {kd:?} vs closed form {closed}"))
}

fn check_cocycle(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=5);
    let m = rng.gen_range(1..=3);
    let q = sample::presentation(rng, n, m, 3);
    let x = sample::vector(rng, n, -4, 4);
    let y = sample::vector(rng, n, -4, 4);
    let z = sample::vector(rng, n, -4, 4);
    let add = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> { a.iter().zip(b).map(|(s, t)| s + t).collect() };
    let lhs = cocycle(&x, &y, &q).mul(&cocycle(&add(&x, &y), &z, &q));
    let rhs = cocycle(&y, &z, &q).mul(&cocycle(&x, &add(&y, &z), &q));
    ensure(lhs == rhs, || format!("cocycle identity fails at {x:?}, {y:?}, {z:?}"))
}

fn check_relations(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=3);
    let q = sample::presentation(rng, n, m, 3);
    for i in 0..n {
        for j in 0..n {
            let xi = LaurentElement::generator(i, &q);
            let xj = LaurentElement::generator(j, &q);
            let qij = UnitMonomial::from_exps(q.q(i, j).clone());
            ensure(
                multiply(&xi, &xj, &q) == multiply(&xj, &xi, &q).scale(&qij, &q),
                || format!("X_{}X_{} != q_{0}{1} X_{1}X_{0}", i + 1, j + 1),
            )?;
        }
    }
    let one = UnitMonomial::from_exps(q.basis().one());
    for _ in 0..100 {
        let a = sample::vector(rng, n, -3, 3);
        let b = sample::vector(rng, n, -3, 3);
        let xa = LaurentElement::monomial(a.clone(), &one, &q);
        let xb = LaurentElement::monomial(b.clone(), &one, &q);
        let lam = UnitMonomial::from_exps(commutator_lambda(&a, &b, &q));
        ensure(
            multiply(&xa, &xb, &q) == multiply(&xb, &xa, &q).scale(&lam, &q),
            || format!("commutator fails at {a:?}, {b:?}"),
        )?;
    }
    Ok(())
}

fn random_element(rng: &mut ChaCha8Rng, q: &crate::algebra::QTorusPresentation) -> LaurentElement {
    let mut out = LaurentElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let a = sample::vector(rng, q.n(), -2, 2);
        let s = crate::scalars::ExponentVector::new(sample::vector(rng, q.m(), -2, 2));
        let c = num_rational::BigRational::new(
            sample::int(rng, -5, 5),
            sample::int(rng, 1, 4),
        );
        if c.is_zero() {
            continue;
        }
        out = out.add(&LaurentElement::monomial(a, &UnitMonomial::new(c, s), q), q);
    }
    out
}

fn check_associativity(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=3);
    let q = sample::presentation(rng, n, m, 3);
    let x = random_element(rng, &q);
    let y = random_element(rng, &q);
    let z = random_element(rng, &q);
    let left = multiply(&multiply(&x, &y, &q), &z, &q);
    let right = multiply(&x, &multiply(&y, &z, &q), &q);
    ensure(left == right, || "(xy)z != x(yz)".into())
}

fn violates_some_condition(v: &[BigInt], q: &crate::algebra::QTorusPresentation) -> bool {
    let n = q.n();
    (0..n).any(|i| {
        let mut e = vec![BigInt::zero(); n];
        e[i] = BigInt::one();
        !commutator_lambda(v, &e, q).is_one()
    })
}

fn check_center(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=3);
    let q = sample::presentation(rng, n, m, 3);
    let z = center_lattice(&q);
    for row in z.basis().row_iter() {
        ensure(!violates_some_condition(row, &q), || format!("{row:?} is not central"))?;
    }
    if z.rank() == n {
        return Ok(());
    }
    let mut tested = 0;
    while tested < 50 {
        let v = sample::vector(rng, n, -5, 5);
        if member(&v, &z) {
            continue;
        }
        ensure(violates_some_condition(&v, &q), || format!("{v:?} outside Z but central"))?;
        tested += 1;
    }
    Ok(())
}

fn check_kdim_bounds(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=3);
    let q = sample::presentation(rng, n, m, 2);
    let k1 = kdim(&q, 1);
    let k2 = kdim(&q, 2);
    for kd in [&k1, &k2] {
        ensure(kd.lower <= kd.upper && kd.upper <= n, || format!("bad bracket {kd:?}"))?;
        ensure(kd.witness.rank() == kd.lower, || "witness rank mismatch".into())?;
        ensure(is_commutative_sublattice(&kd.witness, &q), || "witness not commutative".into())?;
    }
    ensure(k2.lower >= k1.lower && k2.upper <= k1.upper, || "bound not monotone".into())?;
    ensure(center_lattice(&q).rank() <= k1.lower, || "center larger than K.dim".into())?;
    let forms = pairing(&q);
    let found = oracle::isotropic_rank_enum(&forms, 1, n).map_err(|e| e.to_string())?;
    ensure(found <= k1.upper, || format!("oracle found {found} above upper bound {}", k1.upper))
}
