//! Quantum torus presentations, the commutator pairing and exact
//! arithmetic in the twisted group algebra.
//!
//! Monomials use the ordered normal form `X^a = X_1^{a_1} ... X_n^{a_n}`.
//! With this choice the multiplication cocycle is
//! `gamma(a, b) = prod_{i > j} q_ij^{a_i b_j}`, so that
//! `X^a X^b = gamma(a, b) X^{a+b}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lattice::{IntegerMatrix, Sublattice};
use crate::scalars::{ExponentVector, GeneratorBasis, ScalarError, UnitMonomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix is not multiplicatively antisymmetric: q_{j}{i} != q_{i}{j}^-1", i = .i + 1, j = .j + 1)]
    NotAntisymmetric { i: usize, j: usize },
    #[error("diagonal entry q_{i}{i} is not 1", i = .i + 1)]
    NonUnitDiagonal { i: usize },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("entry ({i}, {j}) has {found} exponents but the basis has {expected} generators", i = .i + 1, j = .j + 1)]
    BasisMismatch {
        i: usize,
        j: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A validated multiplicatively antisymmetric matrix of multiparameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTorusPresentation {
    n: usize,
    basis: GeneratorBasis,
    q: Vec<Vec<ExponentVector>>,
}

impl QTorusPresentation {
    /// Validates a full `n x n` matrix of multiparameters.
    pub fn validate(
        basis: GeneratorBasis,
        q: Vec<Vec<ExponentVector>>,
    ) -> Result<Self, AlgebraError> {
        let n = q.len();
        let m = basis.len();
        for (i, row) in q.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::LengthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, e) in row.iter().enumerate() {
                if e.len() != m {
                    return Err(AlgebraError::BasisMismatch {
                        i,
                        j,
                        expected: m,
                        found: e.len(),
                    });
                }
            }
        }
        for (i, row) in q.iter().enumerate() {
            if !row[i].is_one() {
                return Err(AlgebraError::NonUnitDiagonal { i });
            }
            for (j, e) in row.iter().enumerate().skip(i + 1) {
                if q[j][i] != e.inv() {
                    return Err(AlgebraError::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(Self { n, basis, q })
    }

    /// Builds a presentation from the entries above the diagonal; missing
    /// entries are 1 and the lower triangle is filled by inversion.
    pub fn from_upper(
        n: usize,
        basis: GeneratorBasis,
        upper: &BTreeMap<(usize, usize), ExponentVector>,
    ) -> Result<Self, AlgebraError> {
        let mut q = vec![vec![basis.one(); n]; n];
        for (&(i, j), e) in upper {
            assert!(i < j && j < n, "upper entries need 0 <= i < j < n");
            q[i][j] = e.clone();
            q[j][i] = e.inv();
        }
        Self::validate(basis, q)
    }

    /// The commutative torus of dimension `n`.
    pub fn commutative(n: usize, basis: GeneratorBasis) -> Self {
        Self::from_upper(n, basis, &BTreeMap::new()).expect("all-ones matrix is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &GeneratorBasis {
        &self.basis
    }

    /// Number of scalar generators.
    pub fn m(&self) -> usize {
        self.basis.len()
    }

    /// The multiparameter `q_ij` (0-based indices).
    pub fn q(&self, i: usize, j: usize) -> &ExponentVector {
        &self.q[i][j]
    }

    pub fn matrix(&self) -> &[Vec<ExponentVector>] {
        &self.q
    }

    /// The same presentation over a larger basis.
    pub fn rebase(&self, basis: GeneratorBasis, map: &[usize]) -> Self {
        let m = basis.len();
        let q = self
            .q
            .iter()
            .map(|row| row.iter().map(|e| e.embed(map, m)).collect())
            .collect();
        Self {
            n: self.n,
            basis,
            q,
        }
    }
}

/// The `m` antisymmetric integer matrices encoding the commutator pairing:
/// `(C_k)_ij` is the exponent of generator `k` in `q_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingForms {
    n: usize,
    forms: Vec<IntegerMatrix>,
}

impl PairingForms {
    pub fn new(n: usize, forms: Vec<IntegerMatrix>) -> Self {
        for c in &forms {
            assert!(c.nrows() == n && c.is_antisymmetric(), "forms must be antisymmetric n x n");
        }
        Self { n, forms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn forms(&self) -> &[IntegerMatrix] {
        &self.forms
    }

    /// `lambda(a, b)` with k-th coordinate `a^T C_k b`.
    pub fn lambda(&self, a: &[BigInt], b: &[BigInt]) -> ExponentVector {
        ExponentVector::new(self.forms.iter().map(|c| bilinear(c, a, b)).collect())
    }

    /// All forms stacked into one `(m n) x n` matrix.
    pub fn stacked(&self) -> IntegerMatrix {
        self.forms
            .iter()
            .fold(IntegerMatrix::zeros(0, self.n), |acc, c| acc.vstack(c))
    }

    /// Linear conditions `v -> lambda(v, b)` for each `b` in `rows`, one row
    /// per (row, form) pair. Their kernel is the orthogonal complement.
    pub fn orthogonality_conditions(&self, rows: &IntegerMatrix) -> IntegerMatrix {
        let mut out = IntegerMatrix::zeros(0, self.n);
        for b in rows.row_iter() {
            for c in &self.forms {
                out.push_row(c.mul_vec(b));
            }
        }
        out
    }
}

pub(crate) fn bilinear(c: &IntegerMatrix, a: &[BigInt], b: &[BigInt]) -> BigInt {
    let cb = c.mul_vec(b);
    a.iter().zip(&cb).map(|(x, y)| x * y).sum()
}

/// Extracts the commutator pairing of a presentation.
pub fn pairing(q: &QTorusPresentation) -> PairingForms {
    let n = q.n();
    let forms = (0..q.m())
        .map(|k| {
            let mut c = IntegerMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    c.set(i, j, q.q(i, j).coords()[k].clone());
                }
            }
            c
        })
        .collect();
    PairingForms::new(n, forms)
}

/// The normal-form cocycle `gamma(a, b) = prod_{i > j} q_ij^{a_i b_j}`.
pub fn cocycle(a: &[BigInt], b: &[BigInt], q: &QTorusPresentation) -> UnitMonomial {
    assert!(a.len() == q.n() && b.len() == q.n(), "monomial length mismatch");
    let mut exps = q.basis().one();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(i) {
            let k = ai * bj;
            if !k.is_zero() {
                exps = &exps + &q.q(i, j).pow(&k);
            }
        }
    }
    UnitMonomial::from_exps(exps)
}

/// `lambda(a, b)` such that `X^a X^b = lambda(a, b) X^b X^a`.
pub fn commutator_lambda(a: &[BigInt], b: &[BigInt], q: &QTorusPresentation) -> ExponentVector {
    pairing(q).lambda(a, b)
}

/// True iff every pair of basis vectors of `sub` commutes.
pub fn is_commutative_sublattice(sub: &Sublattice, q: &QTorusPresentation) -> bool {
    assert_eq!(sub.ambient_rank(), q.n(), "sublattice lives in the wrong lattice");
    is_isotropic(sub, &pairing(q))
}

pub(crate) fn is_isotropic(sub: &Sublattice, forms: &PairingForms) -> bool {
    let rows: Vec<&[BigInt]> = sub.basis().row_iter().collect();
    (0..rows.len()).all(|i| (i + 1..rows.len()).all(|j| forms.lambda(rows[i], rows[j]).is_one()))
}

/// A scalar automorphism `X_i -> p_i X_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarAutomorphismSpec {
    pub basis: GeneratorBasis,
    pub p: Vec<ExponentVector>,
}

impl ScalarAutomorphismSpec {
    pub fn new(basis: GeneratorBasis, p: Vec<ExponentVector>) -> Self {
        for e in &p {
            assert_eq!(e.len(), basis.len(), "scalar does not match basis");
        }
        Self { basis, p }
    }

    pub fn identity(n: usize, basis: GeneratorBasis) -> Self {
        let p = vec![basis.one(); n];
        Self { basis, p }
    }
}

/// Brings a presentation and an automorphism into one exponent space.
pub fn common_basis(
    q: &QTorusPresentation,
    sigma: &ScalarAutomorphismSpec,
) -> Result<(QTorusPresentation, Vec<ExponentVector>), AlgebraError> {
    let merge = q.basis().merge(&sigma.basis)?;
    let q2 = q.rebase(merge.basis.clone(), &merge.left);
    let p = sigma.p.iter().map(|e| merge.embed_right(e)).collect();
    Ok((q2, p))
}

/// The presentation of `Lambda[Y^{+-1}; sigma]` with `Y X_i = p_i X_i Y`.
/// `Y` becomes generator `n + 1`.
pub fn skew_extension(
    q: &QTorusPresentation,
    sigma: &ScalarAutomorphismSpec,
) -> Result<QTorusPresentation, AlgebraError> {
    let n = q.n();
    if sigma.p.len() != n {
        return Err(AlgebraError::LengthMismatch {
            expected: n,
            found: sigma.p.len(),
        });
    }
    let (q, p) = common_basis(q, sigma)?;
    let one = q.basis().one();
    let mut rows: Vec<Vec<ExponentVector>> = Vec::with_capacity(n + 1);
    for (i, row) in q.matrix().iter().enumerate() {
        let mut r = row.clone();
        r.push(p[i].inv());
        rows.push(r);
    }
    let mut last = p.clone();
    last.push(one);
    rows.push(last);
    QTorusPresentation::validate(q.basis().clone(), rows)
}

/// Sparse coefficient of a monomial: a finite combination of scalar
/// monomials with rational coefficients. In rational mode every scalar is
/// folded into the rational part so representations are unique.
type Coefficient = BTreeMap<ExponentVector, BigRational>;

/// An element of the quantum torus in the `X^a` basis. Terms are kept
/// sorted and no zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentElement {
    terms: BTreeMap<Vec<BigInt>, Coefficient>,
}

impl LaurentElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `c * X^a`.
    pub fn monomial(a: Vec<BigInt>, c: &UnitMonomial, q: &QTorusPresentation) -> Self {
        assert_eq!(a.len(), q.n(), "monomial length mismatch");
        let mut out = Self::zero();
        out.add_term(a, c.exps.clone(), c.coeff.clone(), q.basis());
        out
    }

    pub fn one(q: &QTorusPresentation) -> Self {
        Self::monomial(vec![BigInt::zero(); q.n()], &UnitMonomial::from_exps(q.basis().one()), q)
    }

    /// The generator `X_i` (0-based).
    pub fn generator(i: usize, q: &QTorusPresentation) -> Self {
        let mut a = vec![BigInt::zero(); q.n()];
        a[i] = BigInt::one();
        Self::monomial(a, &UnitMonomial::from_exps(q.basis().one()), q)
    }

    /// Number of `(X^a, scalar monomial)` terms.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(BTreeMap::len).sum()
    }

    /// Iterates over `(a, scalar exponents, rational coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[BigInt], &ExponentVector, &BigRational)> {
        self.terms
            .iter()
            .flat_map(|(a, c)| c.iter().map(move |(s, r)| (a.as_slice(), s, r)))
    }

    fn add_term(&mut self, a: Vec<BigInt>, s: ExponentVector, r: BigRational, basis: &GeneratorBasis) {
        let (s, r) = match basis {
            GeneratorBasis::Rational(_) => (basis.one(), r * basis.evaluate(&s)),
            GeneratorBasis::Symbolic(_) => (s, r),
        };
        if r.is_zero() {
            return;
        }
        let coeff = self.terms.entry(a.clone()).or_default();
        let slot = coeff.entry(s.clone()).or_insert_with(BigRational::zero);
        *slot += r;
        if slot.is_zero() {
            coeff.remove(&s);
            if coeff.is_empty() {
                self.terms.remove(&a);
            }
        }
    }

    pub fn add(&self, other: &LaurentElement, q: &QTorusPresentation) -> LaurentElement {
        let mut out = self.clone();
        for (a, s, r) in other.terms() {
            out.add_term(a.to_vec(), s.clone(), r.clone(), q.basis());
        }
        out
    }

    pub fn neg(&self) -> LaurentElement {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            for r in c.values_mut() {
                *r = -std::mem::take(r);
            }
        }
        out
    }

    pub fn sub(&self, other: &LaurentElement, q: &QTorusPresentation) -> LaurentElement {
        self.add(&other.neg(), q)
    }

    /// Left multiplication by a scalar.
    pub fn scale(&self, c: &UnitMonomial, q: &QTorusPresentation) -> LaurentElement {
        let mut out = LaurentElement::zero();
        for (a, s, r) in self.terms() {
            out.add_term(a.to_vec(), s + &c.exps, r * &c.coeff, q.basis());
        }
        out
    }
}

/// Product in the quantum torus, by bilinear extension of
/// `X^a X^b = gamma(a, b) X^{a+b}`.
pub fn multiply(x: &LaurentElement, y: &LaurentElement, q: &QTorusPresentation) -> LaurentElement {
    let mut out = LaurentElement::zero();
    for (a, s, r) in x.terms() {
        for (b, t, u) in y.terms() {
            let g = cocycle(a, b, q);
            let sum: Vec<BigInt> = a.iter().zip(b).map(|(i, j)| i + j).collect();
            let scalar = &(s + t) + &g.exps;
            out.add_term(sum, scalar, r * u * &g.coeff, q.basis());
        }
    }
    out
}

/// Renders an element with scalar names from the presentation basis.
pub struct DisplayElement<'a> {
    pub element: &'a LaurentElement,
    pub basis: &'a GeneratorBasis,
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .element
            .terms()
            .map(|(a, s, r)| {
                let mono: Vec<String> = a.iter().map(|e| e.to_string()).collect();
                let scalar = self.basis.render(s);
                let prefix = match (r.is_one(), scalar.as_str()) {
                    (true, "1") => String::new(),
                    (true, _) => format!("{scalar}*"),
                    (false, "1") => format!("{r}*"),
                    (false, _) => format!("{r}*{scalar}*"),
                };
                format!("{prefix}X^({})", mono.join(","))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use num_bigint::BigUint;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn e(n: usize, i: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n];
        out[i] = BigInt::one();
        out
    }

    #[test]
    fn validate_example_and_commutative() {
        let q = catalog::corner_torus();
        assert_eq!(q.n(), 4);
        assert_eq!(q.m(), 3);
        let c = QTorusPresentation::commutative(3, GeneratorBasis::symbolic(["g"]).unwrap());
        assert!(pairing(&c).forms().iter().all(IntegerMatrix::is_zero));
    }

    #[test]
    fn validate_rejects_bad_matrices() {
        let b = GeneratorBasis::symbolic(["q1"]).unwrap();
        let g = ExponentVector::from_i64(&[1]);
        let one = ExponentVector::from_i64(&[0]);
        let bad = vec![vec![one.clone(), g.clone()], vec![g.clone(), one.clone()]];
        assert_eq!(
            QTorusPresentation::validate(b.clone(), bad),
            Err(AlgebraError::NotAntisymmetric { i: 0, j: 1 })
        );
        let diag = vec![vec![g.clone(), one.clone()], vec![one.clone(), one.clone()]];
        assert_eq!(
            QTorusPresentation::validate(b, diag),
            Err(AlgebraError::NonUnitDiagonal { i: 0 })
        );
    }

    #[test]
    fn pairing_examples() {
        let q = catalog::corner_torus();
        let forms = pairing(&q);
        for k in 0..3 {
            let c = &forms.forms()[k];
            for i in 0..4 {
                for j in 0..4 {
                    let expected = match (i, j) {
                        (a, 3) if a == k => 1,
                        (3, b) if b == k => -1,
                        _ => 0,
                    };
                    assert_eq!(c.get(i, j), &BigInt::from(expected), "C_{k} at ({i},{j})");
                }
            }
        }
        let q2 = catalog::rank_one_plane(3);
        assert_eq!(
            pairing(&q2).forms()[0],
            IntegerMatrix::from_i64_rows(2, &[vec![0, 3], vec![-3, 0]])
        );
    }

    #[test]
    fn cocycle_examples() {
        let q = catalog::corner_torus();
        assert!(cocycle(&e(4, 0), &e(4, 1), &q).exps.is_one());
        assert_eq!(cocycle(&e(4, 1), &e(4, 0), &q).exps, q.q(1, 0).clone());
        assert_eq!(
            cocycle(&e(4, 3), &e(4, 0), &q).exps,
            ExponentVector::from_i64(&[-1, 0, 0])
        );
    }

    #[test]
    fn multiply_examples() {
        let q = catalog::rank_one_plane(1);
        let x1 = LaurentElement::generator(0, &q);
        let x2 = LaurentElement::generator(1, &q);
        let one = UnitMonomial::from_exps(q.basis().one());
        assert_eq!(multiply(&x1, &x2, &q), LaurentElement::monomial(v(&[1, 1]), &one, &q));
        let q21 = UnitMonomial::from_exps(q.q(1, 0).clone());
        assert_eq!(multiply(&x2, &x1, &q), LaurentElement::monomial(v(&[1, 1]), &q21, &q));

        // (X1 + X2)(X1 - X2) = X^{2e1} - X^{e1+e2} + q21 X^{e1+e2} - X^{2e2}
        let lhs = multiply(&x1.add(&x2, &q), &x1.sub(&x2, &q), &q);
        let expected = LaurentElement::monomial(v(&[2, 0]), &one, &q)
            .sub(&LaurentElement::monomial(v(&[1, 1]), &one, &q), &q)
            .add(&LaurentElement::monomial(v(&[1, 1]), &q21, &q), &q)
            .sub(&LaurentElement::monomial(v(&[0, 2]), &one, &q), &q);
        assert_eq!(lhs, expected);
        assert_eq!(lhs.term_count(), 4);

        // commutative case collapses to X^{2e1} - X^{2e2}
        let c = QTorusPresentation::commutative(2, GeneratorBasis::symbolic(["g"]).unwrap());
        let y1 = LaurentElement::generator(0, &c);
        let y2 = LaurentElement::generator(1, &c);
        let prod = multiply(&y1.add(&y2, &c), &y1.sub(&y2, &c), &c);
        assert_eq!(prod.term_count(), 2);
    }

    #[test]
    fn rational_mode_folds_scalars() {
        let q = catalog::rational_plane(2);
        let x1 = LaurentElement::generator(0, &q);
        let x2 = LaurentElement::generator(1, &q);
        // X2 X1 = (1/2) X1 X2, so X1X2 + X2X1 = (3/2) X^{(1,1)}
        let s = multiply(&x1, &x2, &q).add(&multiply(&x2, &x1, &q), &q);
        let terms: Vec<_> = s.terms().collect();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].2, &BigRational::new(3.into(), 2.into()));
        assert!(terms[0].1.is_one());
    }

    #[test]
    fn commutator_examples() {
        let q = catalog::corner_torus();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(commutator_lambda(&e(4, i), &e(4, j), &q), q.q(i, j).clone());
            }
        }
        let a = v(&[2, -1, 3, 5]);
        assert!(commutator_lambda(&a, &a, &q).is_one());
        assert_eq!(
            commutator_lambda(&e(4, 3), &e(4, 0), &q),
            ExponentVector::from_i64(&[-1, 0, 0])
        );
    }

    #[test]
    fn commutative_sublattices() {
        let q = catalog::corner_torus();
        let span = |rows: &[Vec<i64>]| {
            Sublattice::from_generators(&IntegerMatrix::from_i64_rows(4, rows))
        };
        assert!(is_commutative_sublattice(
            &span(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]]),
            &q
        ));
        assert!(!is_commutative_sublattice(
            &span(&[vec![1, 0, 0, 0], vec![0, 0, 0, 1]]),
            &q
        ));
        assert!(is_commutative_sublattice(&Sublattice::zero(4), &q));
    }

    #[test]
    fn skew_extension_examples() {
        let q = catalog::corner_torus();
        let sigma = catalog::fresh_sigma();
        let star = skew_extension(&q, &sigma).unwrap();
        assert_eq!(star.n(), 5);
        assert_eq!(star.m(), 7);
        for i in 0..4 {
            let p = ExponentVector::unit(7, 3 + i);
            assert_eq!(star.q(i, 4), &p.inv());
            assert_eq!(star.q(4, i), &p);
            for j in 0..4 {
                assert_eq!(star.q(i, j).coords()[..3], q.q(i, j).coords()[..]);
            }
        }

        let id = ScalarAutomorphismSpec::identity(4, q.basis().clone());
        let central = skew_extension(&q, &id).unwrap();
        assert_eq!(central.m(), 3);
        assert!((0..4).all(|i| central.q(i, 4).is_one()));

        let b = GeneratorBasis::symbolic(["g"]).unwrap();
        let line = QTorusPresentation::commutative(1, b.clone());
        let s = ScalarAutomorphismSpec::new(b, vec![ExponentVector::from_i64(&[1])]);
        let ext = skew_extension(&line, &s).unwrap();
        assert_eq!(ext.q(0, 1), &ExponentVector::from_i64(&[-1]));
        // Y X_1 = g X_1 Y
        let x = LaurentElement::generator(0, &ext);
        let y = LaurentElement::generator(1, &ext);
        let g = UnitMonomial::from_exps(ExponentVector::from_i64(&[1]));
        assert_eq!(multiply(&y, &x, &ext), multiply(&x, &y, &ext).scale(&g, &ext));
    }

    #[test]
    fn skew_extension_errors() {
        let q = catalog::corner_torus();
        let short = ScalarAutomorphismSpec::identity(3, q.basis().clone());
        assert_eq!(
            skew_extension(&q, &short),
            Err(AlgebraError::LengthMismatch { expected: 4, found: 3 })
        );
        let rational = ScalarAutomorphismSpec::identity(4, GeneratorBasis::rational([BigUint::from(2u8)]).unwrap());
        assert!(matches!(
            skew_extension(&q, &rational),
            Err(AlgebraError::Scalar(ScalarError::ModeMismatch))
        ));
    }

    #[test]
    fn skew_extension_identifies_shared_labels() {
        let q = catalog::corner_torus();
        let mut p = vec![ExponentVector::zero(1); 4];
        p[0] = ExponentVector::from_i64(&[1]);
        let sigma = ScalarAutomorphismSpec::new(GeneratorBasis::symbolic(["q2"]).unwrap(), p);
        let ext = skew_extension(&q, &sigma).unwrap();
        assert_eq!(ext.m(), 3);
        assert_eq!(ext.q(4, 0), &ExponentVector::from_i64(&[0, 1, 0]));
    }

    #[test]
    fn display_element() {
        let q = catalog::rank_one_plane(1);
        let x1 = LaurentElement::generator(0, &q);
        let x2 = LaurentElement::generator(1, &q);
        let s = multiply(&x2, &x1, &q);
        let text = DisplayElement { element: &s, basis: q.basis() }.to_string();
        assert_eq!(text, "g^-1*X^(1,1)");
    }
}
