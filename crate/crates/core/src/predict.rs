//! Predicted GK dimensions of simple modules.
//!
//! Two operators live here. For a torus of Krull dimension `n - 1` the GK
//! dimension of a simple module is either 1 or `n - rk(Z) - 1`. For the
//! skew-Laurent extension by a scalar automorphism whose scalars generate a
//! group meeting the lambda-group trivially, the possible GK dimensions lie
//! in `{rk(H), ..., n} ∪ (V + 1)`. Neither operator claims that every value
//! in its output is attained.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{common_basis, AlgebraError, QTorusPresentation, ScalarAutomorphismSpec};
use crate::invariants::{center_lattice, InvariantError, KdimEstimate};
use crate::lattice::{self, IntegerMatrix};
use crate::scalars::{subgroup_rank, ExponentVector};

pub const KDIM_HYPOTHESIS: &str = "K.dim = n - 1";
pub const TRIVIAL_INTERSECTION_HYPOTHESIS: &str = "lambda-group and H_sigma intersect trivially";
pub const USER_VSET_HYPOTHESIS: &str = "user-supplied V(Lambda) contains every GK dimension of a simple module";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredictError {
    #[error("hypothesis `{name}` fails: {detail}")]
    HypothesisFailed { name: String, detail: String },
    #[error(transparent)]
    Inexact(#[from] InvariantError),
    #[error("no V(Lambda) available: {reason}; pass one with --vset")]
    MissingVSet { reason: String },
    #[error("invalid V(Lambda): {0}")]
    InvalidVSet(String),
    #[error("forbidden dimensions need a superset, got {0:?}")]
    WrongSemantics(DimSemantics),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimSemantics {
    /// Every simple module has one of these dimensions (two-way dichotomy).
    DichotomyCandidates,
    /// Every simple module has a dimension in this set; attainment of each
    /// value is not claimed.
    Superset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub satisfied: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimSet {
    pub values: BTreeSet<usize>,
    pub semantics: DimSemantics,
    pub hypotheses: Vec<Hypothesis>,
}

/// Where the set `V(Lambda)` fed into the extension step came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VSetSource {
    User,
    Dichotomy,
}

/// The dichotomy `{1, n - rk(Z) - 1}` for tori of Krull dimension `n - 1`.
pub fn dichotomy_set(q: &QTorusPresentation, kd: &KdimEstimate) -> Result<DimSet, PredictError> {
    let n = q.n();
    if kd.upper + 1 < n || kd.lower >= n {
        let known = match kd.value() {
            Some(k) => format!("K.dim = {k}"),
            None => format!("{} <= K.dim <= {}", kd.lower, kd.upper),
        };
        return Err(PredictError::HypothesisFailed {
            name: KDIM_HYPOTHESIS.into(),
            detail: format!("{known} but n - 1 = {}", n as i64 - 1),
        });
    }
    let k = kd.require_exact()?;
    let z = center_lattice(q).rank();
    // a center of rank n - 1 would make the torus commutative
    if z + 2 > n {
        return Err(PredictError::Internal(format!(
            "center rank {z} with K.dim = n - 1 = {k}"
        )));
    }
    Ok(DimSet {
        values: BTreeSet::from([1, n - z - 1]),
        semantics: DimSemantics::DichotomyCandidates,
        hypotheses: vec![Hypothesis {
            name: KDIM_HYPOTHESIS.into(),
            satisfied: true,
            detail: format!("K.dim = {k} = n - 1"),
        }],
    })
}

/// Rank of `H_sigma`, the group generated by the automorphism scalars.
pub fn hs_rank(sigma: &ScalarAutomorphismSpec) -> usize {
    subgroup_rank(&sigma.p)
}

fn exponent_rows(m: usize, vs: impl Iterator<Item = ExponentVector>) -> IntegerMatrix {
    IntegerMatrix::from_rows(m, vs.map(ExponentVector::into_coords).collect())
}

/// True iff the lambda-group of `q` and `H_sigma` intersect trivially.
pub fn gh_trivial(q: &QTorusPresentation, sigma: &ScalarAutomorphismSpec) -> Result<bool, PredictError> {
    let (q, p) = common_basis(q, sigma)?;
    let n = q.n();
    let m = q.m();
    let g = exponent_rows(
        m,
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| q.q(i, j).clone()),
    );
    let h = exponent_rows(m, p.into_iter());
    Ok(lattice::intersect_trivially(&g, &h))
}

/// `{rk(H_sigma), ..., n} ∪ (V + 1)` for the extension of `q` by `sigma`.
pub fn extension_superset(
    q: &QTorusPresentation,
    sigma: &ScalarAutomorphismSpec,
    v: &DimSet,
) -> Result<DimSet, PredictError> {
    let n = q.n();
    if sigma.p.len() != n {
        return Err(AlgebraError::LengthMismatch {
            expected: n,
            found: sigma.p.len(),
        }
        .into());
    }
    if !gh_trivial(q, sigma)? {
        return Err(PredictError::HypothesisFailed {
            name: TRIVIAL_INTERSECTION_HYPOTHESIS.into(),
            detail: "some nontrivial scalar lies in both groups".into(),
        });
    }
    if let Some(bad) = v.values.iter().find(|&&x| x > n) {
        return Err(PredictError::InvalidVSet(format!(
            "{bad} exceeds the dimension n = {n}"
        )));
    }
    let r = hs_rank(sigma);
    let mut values: BTreeSet<usize> = (r..=n).collect();
    values.extend(v.values.iter().map(|x| x + 1));
    let mut hypotheses = vec![Hypothesis {
        name: TRIVIAL_INTERSECTION_HYPOTHESIS.into(),
        satisfied: true,
        detail: format!("rk(G) + rk(H) = rk(G + H); rk(H_sigma) = {r}"),
    }];
    hypotheses.extend(v.hypotheses.iter().cloned());
    Ok(DimSet {
        values,
        semantics: DimSemantics::Superset,
        hypotheses,
    })
}

/// `{1, ..., n_star} \ S`: dimensions no simple module can have.
pub fn forbidden_dims(s: &DimSet, n_star: usize) -> Result<BTreeSet<usize>, PredictError> {
    if s.semantics != DimSemantics::Superset {
        return Err(PredictError::WrongSemantics(s.semantics));
    }
    Ok((1..=n_star).filter(|d| !s.values.contains(d)).collect())
}

/// Wraps a user-supplied `V(Lambda)` as a superset.
pub fn user_vset(values: BTreeSet<usize>) -> DimSet {
    DimSet {
        values,
        semantics: DimSemantics::Superset,
        hypotheses: vec![Hypothesis {
            name: USER_VSET_HYPOTHESIS.into(),
            satisfied: true,
            detail: "trusted input".into(),
        }],
    }
}

/// Picks `V(Lambda)` for the extension step: a user set wins, otherwise the
/// dichotomy is used when its hypothesis holds.
pub fn resolve_vset(
    q: &QTorusPresentation,
    kd: &KdimEstimate,
    user: Option<BTreeSet<usize>>,
) -> Result<(DimSet, VSetSource), PredictError> {
    if let Some(values) = user {
        return Ok((user_vset(values), VSetSource::User));
    }
    match dichotomy_set(q, kd) {
        Ok(set) => Ok((set, VSetSource::Dichotomy)),
        Err(PredictError::HypothesisFailed { detail, .. }) => Err(PredictError::MissingVSet {
            reason: format!("the dichotomy does not apply ({detail})"),
        }),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::invariants::kdim;
    use crate::scalars::GeneratorBasis;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn dichotomy_examples() {
        let q = catalog::corner_torus();
        let s = dichotomy_set(&q, &kdim(&q, 2)).unwrap();
        assert_eq!(s.values, set(&[1, 3]));
        assert_eq!(s.semantics, DimSemantics::DichotomyCandidates);
        assert!(s.hypotheses[0].satisfied);

        let c = catalog::commutative(3);
        match dichotomy_set(&c, &kdim(&c, 2)) {
            Err(PredictError::HypothesisFailed { name, detail }) => {
                assert_eq!(name, KDIM_HYPOTHESIS);
                assert!(detail.contains("K.dim = 3"), "{detail}");
            }
            other => panic!("expected hypothesis failure, got {other:?}"),
        }

        let p = catalog::rank_one_plane(1);
        assert_eq!(dichotomy_set(&p, &kdim(&p, 2)).unwrap().values, set(&[1]));
    }

    #[test]
    fn dichotomy_needs_exact_kdim() {
        let q = catalog::corner_torus();
        let kd = KdimEstimate {
            lower: 2,
            upper: 3,
            exact: false,
            witness: crate::lattice::Sublattice::zero(4),
        };
        assert!(matches!(dichotomy_set(&q, &kd), Err(PredictError::Inexact(_))));
        let below = KdimEstimate { lower: 1, upper: 2, ..kd };
        match dichotomy_set(&q, &below) {
            Err(PredictError::HypothesisFailed { detail, .. }) => assert!(detail.contains("1 <= K.dim <= 2")),
            other => panic!("expected HypothesisFailed, got {other:?}"),
        }
    }

    #[test]
    fn hs_rank_examples() {
        assert_eq!(hs_rank(&catalog::fresh_sigma()), 4);
        let b = GeneratorBasis::symbolic(["g"]).unwrap();
        assert_eq!(hs_rank(&ScalarAutomorphismSpec::identity(3, b.clone())), 0);
        let dep = ScalarAutomorphismSpec::new(
            b,
            vec![ExponentVector::from_i64(&[1]), ExponentVector::from_i64(&[2])],
        );
        assert_eq!(hs_rank(&dep), 1);
    }

    #[test]
    fn gh_trivial_examples() {
        let q = catalog::corner_torus();
        assert!(gh_trivial(&q, &catalog::fresh_sigma()).unwrap());
        assert!(gh_trivial(&q, &ScalarAutomorphismSpec::identity(4, q.basis().clone())).unwrap());

        let plane = catalog::rank_one_plane(1);
        let shared = ScalarAutomorphismSpec::new(
            plane.basis().clone(),
            vec![plane.q(0, 1).clone(), plane.basis().one()],
        );
        assert!(!gh_trivial(&plane, &shared).unwrap());
    }

    #[test]
    fn extension_examples() {
        let q = catalog::corner_torus();
        let sigma = catalog::fresh_sigma();
        let v = dichotomy_set(&q, &kdim(&q, 2)).unwrap();
        let s = extension_superset(&q, &sigma, &v).unwrap();
        assert_eq!(s.values, set(&[2, 4]));
        assert_eq!(s.semantics, DimSemantics::Superset);
        assert_eq!(forbidden_dims(&s, 5).unwrap(), set(&[1, 3, 5]));

        // rk(H) = 0, V = {1}, n = 2
        let plane = catalog::rank_one_plane(1);
        let id = ScalarAutomorphismSpec::identity(2, GeneratorBasis::symbolic(["p"]).unwrap());
        let s = extension_superset(&plane, &id, &user_vset(set(&[1]))).unwrap();
        assert_eq!(s.values, set(&[0, 1, 2]));

        // rk(H) = n with V = {1, n - 1} gives {2, n}
        let s = extension_superset(&q, &sigma, &user_vset(set(&[1, 3]))).unwrap();
        assert_eq!(s.values, set(&[2, 4]));
    }

    #[test]
    fn extension_rejects_shared_scalars() {
        let plane = catalog::rank_one_plane(1);
        let shared = ScalarAutomorphismSpec::new(
            plane.basis().clone(),
            vec![plane.q(0, 1).clone(), plane.basis().one()],
        );
        assert!(matches!(
            extension_superset(&plane, &shared, &user_vset(set(&[1]))),
            Err(PredictError::HypothesisFailed { .. })
        ));
    }

    #[test]
    fn forbidden_examples() {
        let full = user_vset((1..=4).collect());
        assert!(forbidden_dims(&full, 4).unwrap().is_empty());
        assert_eq!(forbidden_dims(&user_vset(set(&[2])), 3).unwrap(), set(&[1, 3]));
        let q = catalog::corner_torus();
        let dich = dichotomy_set(&q, &kdim(&q, 2)).unwrap();
        assert!(matches!(forbidden_dims(&dich, 4), Err(PredictError::WrongSemantics(_))));
    }

    #[test]
    fn vset_resolution_order() {
        let q = catalog::corner_torus();
        let kd = kdim(&q, 2);
        let (v, src) = resolve_vset(&q, &kd, Some(set(&[2]))).unwrap();
        assert_eq!((v.values, src), (set(&[2]), VSetSource::User));
        let (v, src) = resolve_vset(&q, &kd, None).unwrap();
        assert_eq!((v.values, src), (set(&[1, 3]), VSetSource::Dichotomy));
        let c = catalog::commutative(3);
        assert!(matches!(
            resolve_vset(&c, &kdim(&c, 2), None),
            Err(PredictError::MissingVSet { .. })
        ));
    }
}
