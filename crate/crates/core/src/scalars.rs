//! Elements of the free abelian subgroup of `k^x` spanned by a fixed set of
//! generators.
//!
//! A scalar is stored as its [`ExponentVector`] over a [`GeneratorBasis`].
//! In symbolic mode the generators are named indeterminates that the user
//! declares independent. In rational mode `k = Q` and the generators are
//! distinct primes, so independence follows from unique factorization.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{self, IntegerMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("syntax error in scalar `{text}` at column {column}: {message}")]
    Syntax {
        text: String,
        column: usize,
        message: String,
    },
    #[error("unknown generator `{label}`; declare it in a `generators = ...` line")]
    UnknownGenerator { label: String },
    #[error("`{text}` is not a unit: {reason}")]
    NonUnitRational { text: String, reason: String },
    #[error("`{text}` has a torsion factor -1; multiparameters must be positive")]
    TorsionScalar { text: String },
    #[error("prime {prime} in `{text}` is not part of the generator basis")]
    PrimeOutsideBasis { text: String, prime: BigUint },
    #[error("generator `{label}` is declared twice")]
    DuplicateGenerator { label: String },
    #[error("{value} is not a prime")]
    NotPrime { value: BigUint },
    #[error("generator sets overlap on `{label}`; use fresh names for the automorphism scalars")]
    OverlappingGenerators { label: String },
    #[error("cannot combine a symbolic generator basis with a rational one")]
    ModeMismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarMode {
    Symbolic,
    Rational,
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarMode::Symbolic => f.write_str("symbolic"),
            ScalarMode::Rational => f.write_str("rational"),
        }
    }
}

/// Ordered list of independent generators of the scalar group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorBasis {
    Symbolic(Vec<String>),
    /// Distinct primes in increasing order.
    Rational(Vec<BigUint>),
}

impl GeneratorBasis {
    pub fn symbolic<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, ScalarError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !is_label(l) {
                return Err(ScalarError::Syntax {
                    text: l.clone(),
                    column: 1,
                    message: "generator names must match [A-Za-z_][A-Za-z0-9_]*".into(),
                });
            }
            if !seen.insert(l.as_str()) {
                return Err(ScalarError::DuplicateGenerator { label: l.clone() });
            }
        }
        Ok(GeneratorBasis::Symbolic(labels))
    }

    /// Rational basis over the given primes, sorted and deduplicated.
    pub fn rational(primes: impl IntoIterator<Item = BigUint>) -> Result<Self, ScalarError> {
        let set: BTreeSet<BigUint> = primes.into_iter().collect();
        for p in &set {
            if !num_prime::nt_funcs::is_prime(p, None).probably() {
                return Err(ScalarError::NotPrime { value: p.clone() });
            }
        }
        Ok(GeneratorBasis::Rational(set.into_iter().collect()))
    }

    pub fn mode(&self) -> ScalarMode {
        match self {
            GeneratorBasis::Symbolic(_) => ScalarMode::Symbolic,
            GeneratorBasis::Rational(_) => ScalarMode::Rational,
        }
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        match self {
            GeneratorBasis::Symbolic(l) => l.len(),
            GeneratorBasis::Rational(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn labels(&self) -> Vec<String> {
        match self {
            GeneratorBasis::Symbolic(l) => l.clone(),
            GeneratorBasis::Rational(p) => p.iter().map(|p| p.to_string()).collect(),
        }
    }

    pub fn one(&self) -> ExponentVector {
        ExponentVector::zero(self.len())
    }

    /// Exponent vector of the `k`-th generator.
    pub fn generator(&self, k: usize) -> ExponentVector {
        ExponentVector::unit(self.len(), k)
    }

    /// Combines two bases into one exponent space.
    ///
    /// Identical bases are returned unchanged. Symbolic bases are joined by
    /// label, keeping the order of `self` and appending new labels of
    /// `other`; rational bases take the union of their primes. The returned maps send each input generator index to its
    /// index in the merged basis.
    pub fn merge(&self, other: &GeneratorBasis) -> Result<BasisMerge, ScalarError> {
        if self == other {
            let id: Vec<usize> = (0..self.len()).collect();
            return Ok(BasisMerge {
                basis: self.clone(),
                left: id.clone(),
                right: id,
            });
        }
        match (self, other) {
            (GeneratorBasis::Symbolic(a), GeneratorBasis::Symbolic(b)) => {
                let mut labels = a.clone();
                let right = b
                    .iter()
                    .map(|l| {
                        labels.iter().position(|x| x == l).unwrap_or_else(|| {
                            labels.push(l.clone());
                            labels.len() - 1
                        })
                    })
                    .collect();
                Ok(BasisMerge {
                    basis: GeneratorBasis::Symbolic(labels),
                    left: (0..a.len()).collect(),
                    right,
                })
            }
            (GeneratorBasis::Rational(a), GeneratorBasis::Rational(b)) => {
                let union: Vec<BigUint> = a
                    .iter()
                    .chain(b)
                    .cloned()
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                let index = |p: &BigUint| union.binary_search(p).expect("prime in union");
                Ok(BasisMerge {
                    left: a.iter().map(index).collect(),
                    right: b.iter().map(index).collect(),
                    basis: GeneratorBasis::Rational(union),
                })
            }
            _ => Err(ScalarError::ModeMismatch),
        }
    }

    /// Canonical text form of a scalar, accepted back by [`parse_scalar`].
    pub fn render(&self, v: &ExponentVector) -> String {
        assert_eq!(v.len(), self.len(), "exponent vector length mismatch");
        match self {
            GeneratorBasis::Symbolic(labels) => {
                let terms: Vec<String> = labels
                    .iter()
                    .zip(v.coords())
                    .filter(|(_, e)| !e.is_zero())
                    .map(|(l, e)| {
                        if e.is_one() {
                            l.clone()
                        } else {
                            format!("{l}^{e}")
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    "1".into()
                } else {
                    terms.join("*")
                }
            }
            GeneratorBasis::Rational(_) => {
                let r = self.evaluate(v);
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// The rational number a rational-mode exponent vector stands for.
    pub fn evaluate(&self, v: &ExponentVector) -> BigRational {
        let GeneratorBasis::Rational(primes) = self else {
            panic!("evaluate is only defined for rational bases");
        };
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (p, e) in primes.iter().zip(v.coords()) {
            let k = e.abs().to_u32().expect("exponent fits in u32");
            let pk = BigInt::from(p.pow(k));
            if e.is_negative() {
                den *= pk;
            } else {
                num *= pk;
            }
        }
        BigRational::new(num, den)
    }
}

/// Result of [`GeneratorBasis::merge`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMerge {
    pub basis: GeneratorBasis,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl BasisMerge {
    pub fn embed_left(&self, v: &ExponentVector) -> ExponentVector {
        v.embed(&self.left, self.basis.len())
    }

    pub fn embed_right(&self, v: &ExponentVector) -> ExponentVector {
        v.embed(&self.right, self.basis.len())
    }
}

/// Exponents of a scalar with respect to a [`GeneratorBasis`]. Addition of
/// exponent vectors is multiplication of scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(Vec<BigInt>);

impl ExponentVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(m: usize) -> Self {
        Self(vec![BigInt::zero(); m])
    }

    pub fn unit(m: usize, k: usize) -> Self {
        let mut v = Self::zero(m);
        v.0[k] = BigInt::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        self + other
    }

    pub fn inv(&self) -> ExponentVector {
        -self
    }

    pub fn pow(&self, k: &BigInt) -> ExponentVector {
        ExponentVector(self.0.iter().map(|e| e * k).collect())
    }

    /// Re-indexes into a larger basis: coordinate `i` moves to `map[i]`.
    pub fn embed(&self, map: &[usize], m: usize) -> ExponentVector {
        assert_eq!(map.len(), self.len(), "embedding map length mismatch");
        let mut out = ExponentVector::zero(m);
        for (e, &target) in self.0.iter().zip(map) {
            out.0[target] += e;
        }
        out
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        assert_eq!(self.len(), rhs.len(), "exponent vector length mismatch");
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        self + &(-rhs)
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&lattice::render_tuple(&self.0))
    }
}

/// A scalar `coeff * g^exps` with `coeff` a nonzero rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitMonomial {
    pub coeff: BigRational,
    pub exps: ExponentVector,
}

impl UnitMonomial {
    pub fn new(coeff: BigRational, exps: ExponentVector) -> Self {
        assert!(!coeff.is_zero(), "unit monomial coefficient must be nonzero");
        Self { coeff, exps }
    }

    pub fn from_exps(exps: ExponentVector) -> Self {
        Self::new(BigRational::one(), exps)
    }

    pub fn mul(&self, other: &UnitMonomial) -> UnitMonomial {
        UnitMonomial::new(&self.coeff * &other.coeff, &self.exps + &other.exps)
    }
}

/// Rank of the subgroup generated by the given scalars.
pub fn subgroup_rank(gens: &[ExponentVector]) -> usize {
    let Some(first) = gens.first() else {
        return 0;
    };
    let rows = gens.iter().map(|g| g.coords().to_vec()).collect();
    lattice::rank(&IntegerMatrix::from_rows(first.len(), rows))
}

pub(crate) fn is_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A parsed scalar before it is resolved against a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarExpr {
    Rational { num: BigInt, den: BigUint },
    Monomial(Vec<(String, BigInt)>),
}

fn syntax(text: &str, column: usize, message: impl Into<String>) -> ScalarError {
    ScalarError::Syntax {
        text: text.to_string(),
        column,
        message: message.into(),
    }
}

/// Reads `text` according to the scalar grammar
///
/// ```text
/// scalar   := rational | monomial
/// monomial := term ('*' term)*
/// term     := label ('^' signed-integer)?
/// rational := signed-integer ('/' positive-integer)?
/// ```
///
/// Whitespace is ignored. Columns in errors are 1-based positions in the
/// original text.
pub fn parse_scalar_expr(text: &str) -> Result<ScalarExpr, ScalarError> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i + 1, c))
        .collect();
    let end_col = text.len() + 1;
    let col = |k: usize| chars.get(k).map_or(end_col, |&(i, _)| i);
    if chars.is_empty() {
        return Err(syntax(text, 1, "empty scalar"));
    }
    let mut pos = 0;

    let read_int = |pos: &mut usize, signed: bool| -> Result<BigInt, ScalarError> {
        let start = *pos;
        let mut s = String::new();
        if signed {
            if let Some(&(_, c @ ('+' | '-'))) = chars.get(*pos) {
                s.push(c);
                *pos += 1;
            }
        }
        let digits_start = *pos;
        while let Some(&(_, c)) = chars.get(*pos) {
            if c.is_ascii_digit() {
                s.push(c);
                *pos += 1;
            } else {
                break;
            }
        }
        if *pos == digits_start {
            return Err(syntax(text, col(start), "expected an integer"));
        }
        Ok(s.parse().expect("validated digits"))
    };

    let first = chars[0].1;
    if first.is_ascii_digit() || first == '-' || first == '+' {
        let num = read_int(&mut pos, true)?;
        let mut den = BigUint::one();
        if let Some(&(_, '/')) = chars.get(pos) {
            pos += 1;
            let d = read_int(&mut pos, false)?;
            if d.is_zero() {
                return Err(syntax(text, col(pos - 1), "denominator must be positive"));
            }
            den = d.to_biguint().expect("non-negative");
        }
        if pos != chars.len() {
            return Err(syntax(text, col(pos), "unexpected trailing input"));
        }
        return Ok(ScalarExpr::Rational { num, den });
    }

    let mut terms = Vec::new();
    loop {
        let start = pos;
        let mut label = String::new();
        while let Some(&(_, c)) = chars.get(pos) {
            if c.is_ascii_alphanumeric() || c == '_' {
                label.push(c);
                pos += 1;
            } else {
                break;
            }
        }
        if !is_label(&label) {
            return Err(syntax(text, col(start), "expected a generator name"));
        }
        let mut exp = BigInt::one();
        if let Some(&(_, '^')) = chars.get(pos) {
            pos += 1;
            exp = read_int(&mut pos, true)?;
        }
        terms.push((label, exp));
        match chars.get(pos) {
            None => break,
            Some(&(_, '*')) => pos += 1,
            Some(_) => return Err(syntax(text, col(pos), "expected `*` or end of scalar")),
        }
    }
    Ok(ScalarExpr::Monomial(terms))
}

/// Prime factorization of a positive integer as `(prime, exponent)` pairs.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, usize)> {
    if n.is_one() || n.is_zero() {
        return Vec::new();
    }
    num_prime::nt_funcs::factorize(n.clone()).into_iter().collect()
}

/// The primes occurring in a rational scalar expression. Used to build a
/// rational basis before resolving scalars against it.
pub fn primes_of(expr: &ScalarExpr) -> Vec<BigUint> {
    match expr {
        ScalarExpr::Rational { num, den } => {
            let mut ps: BTreeSet<BigUint> = factorize(num.magnitude())
                .into_iter()
                .map(|(p, _)| p)
                .collect();
            ps.extend(factorize(den).into_iter().map(|(p, _)| p));
            ps.into_iter().collect()
        }
        ScalarExpr::Monomial(_) => Vec::new(),
    }
}

/// Resolves a parsed scalar against `basis`.
pub fn resolve_scalar(
    text: &str,
    expr: &ScalarExpr,
    basis: &GeneratorBasis,
) -> Result<ExponentVector, ScalarError> {
    let mut out = basis.one();
    match (expr, basis) {
        (ScalarExpr::Monomial(terms), GeneratorBasis::Symbolic(labels)) => {
            for (label, e) in terms {
                let k = labels
                    .iter()
                    .position(|l| l == label)
                    .ok_or_else(|| ScalarError::UnknownGenerator { label: label.clone() })?;
                out.0[k] += e;
            }
            Ok(out)
        }
        (ScalarExpr::Monomial(terms), GeneratorBasis::Rational(_)) => Err(syntax(
            text,
            1,
            format!(
                "generator name `{}` used in rational mode; write the value as a fraction",
                terms[0].0
            ),
        )),
        (ScalarExpr::Rational { num, den }, _) => {
            if num.is_zero() {
                return Err(ScalarError::NonUnitRational {
                    text: text.to_string(),
                    reason: "zero is not an element of k^x".into(),
                });
            }
            if num.sign() == Sign::Minus {
                return Err(ScalarError::TorsionScalar {
                    text: text.to_string(),
                });
            }
            match basis {
                GeneratorBasis::Symbolic(_) => {
                    let is_one = num.is_one() && den.is_one();
                    if is_one {
                        Ok(out)
                    } else {
                        Err(ScalarError::NonUnitRational {
                            text: text.to_string(),
                            reason: "in symbolic mode the only rational constant is 1".into(),
                        })
                    }
                }
                GeneratorBasis::Rational(primes) => {
                    let parts = factorize(num.magnitude())
                        .into_iter()
                        .map(|(p, e)| (p, BigInt::from(e)))
                        .chain(factorize(den).into_iter().map(|(p, e)| (p, -BigInt::from(e))));
                    for (p, e) in parts {
                        let k = primes.binary_search(&p).map_err(|_| {
                            ScalarError::PrimeOutsideBasis {
                                text: text.to_string(),
                                prime: p.clone(),
                            }
                        })?;
                        out.0[k] += e;
                    }
                    Ok(out)
                }
            }
        }
    }
}

/// Parses `text` with the scalar grammar and resolves it against `basis`.
pub fn parse_scalar(text: &str, basis: &GeneratorBasis) -> Result<ExponentVector, ScalarError> {
    let expr = parse_scalar_expr(text)?;
    resolve_scalar(text, &expr, basis)
}
