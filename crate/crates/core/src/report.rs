//! The invariant report shared by the text and JSON renderers.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{skew_extension, AlgebraError, QTorusPresentation};
use crate::input::ParsedInput;
use crate::invariants::{center_lattice, gk_algebra, holonomic_bound, kdim, lambda_group_rank, KdimEstimate};
use crate::lattice::{render_tuple, Sublattice};
use crate::predict::{
    dichotomy_set, extension_superset, forbidden_dims, gh_trivial, hs_rank, resolve_vset, DimSet, PredictError,
    VSetSource,
};
use crate::scalars::{GeneratorBasis, ScalarMode};

/// Identifies the JSON layout; bumped on incompatible changes.
pub const REPORT_FORMAT: &str = "qtorus-report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationEcho {
    pub n: usize,
    pub m: usize,
    pub mode: ScalarMode,
    pub generators: Vec<String>,
    /// Row `i` lists `q_i1, ..., q_in` as scalars.
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterBlock {
    pub rank: usize,
    /// Hermite basis rows as bracketed tuples.
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KdimBlock {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub search_bound: u32,
    /// Basis of a commutative sublattice of rank `lower`.
    pub witness: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DichotomyStatus {
    Holds,
    HypothesisFailed,
    InexactKdim,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DichotomyBlock {
    pub status: DichotomyStatus,
    pub set: Option<DimSet>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VSetBlock {
    pub source: VSetSource,
    pub set: DimSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionBlock {
    /// The extended torus; `Y` is generator `n + 1`.
    pub presentation: PresentationEcho,
    pub lambda_rank: usize,
    pub hs_rank: usize,
    pub gh_trivial: bool,
    pub vset: VSetBlock,
    pub superset: DimSet,
    pub forbidden: BTreeSet<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub format: String,
    pub presentation: PresentationEcho,
    pub lambda_rank: usize,
    pub center: CenterBlock,
    pub kdim: KdimBlock,
    pub gk_algebra: usize,
    /// `n - K.dim`; absent when K.dim is not exact.
    pub holonomic_bound: Option<usize>,
    pub dichotomy: DichotomyBlock,
    pub extension: Option<ExtensionBlock>,
    pub assumptions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("the input has no [sigma] section")]
    MissingSigma,
    #[error(transparent)]
    Predict(#[from] PredictError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn echo(q: &QTorusPresentation) -> PresentationEcho {
    let basis = q.basis();
    PresentationEcho {
        n: q.n(),
        m: q.m(),
        mode: basis.mode(),
        generators: basis.labels(),
        matrix: q
            .matrix()
            .iter()
            .map(|row| row.iter().map(|e| basis.render(e)).collect())
            .collect(),
    }
}

fn tuples(s: &Sublattice) -> Vec<String> {
    s.basis().row_iter().map(render_tuple).collect()
}

fn join(values: &BTreeSet<usize>) -> String {
    let parts: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn basis_assumption(basis: &GeneratorBasis) -> String {
    match basis {
        GeneratorBasis::Symbolic(labels) if labels.is_empty() => {
            "no generators: every multiparameter is 1".to_string()
        }
        GeneratorBasis::Symbolic(labels) => format!(
            "generators {} are declared multiplicatively independent in k^x (trusted, not verified)",
            labels.join(", ")
        ),
        GeneratorBasis::Rational(primes) if primes.is_empty() => {
            "k = Q; every multiparameter is 1".to_string()
        }
        GeneratorBasis::Rational(primes) => {
            let ps: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
            format!(
                "k = Q; scalars are products of the primes {} (independent by unique factorization)",
                ps.join(", ")
            )
        }
    }
}

fn dichotomy_block(q: &QTorusPresentation, kd: &KdimEstimate) -> DichotomyBlock {
    match dichotomy_set(q, kd) {
        Ok(set) => DichotomyBlock {
            status: DichotomyStatus::Holds,
            set: Some(set),
            detail: None,
        },
        Err(PredictError::Inexact(e)) => DichotomyBlock {
            status: DichotomyStatus::InexactKdim,
            set: None,
            detail: Some(e.to_string()),
        },
        Err(e) => DichotomyBlock {
            status: DichotomyStatus::HypothesisFailed,
            set: None,
            detail: Some(e.to_string()),
        },
    }
}

/// Invariants of the torus and the dichotomy prediction.
pub fn analyze(input: &ParsedInput, search_bound: u32) -> InvariantReport {
    let q = &input.torus;
    let kd = kdim(q, search_bound);
    let center = center_lattice(q);
    let mut assumptions = vec![
        basis_assumption(q.basis()),
        "dimension sets list possible GK dimensions of simple modules; not every value is claimed to occur"
            .to_string(),
    ];
    if !kd.exact {
        assumptions.push(format!(
            "K.dim is bracketed, not exact: the witness proves {} and a form rank bound proves {}",
            kd.lower, kd.upper
        ));
    }
    InvariantReport {
        format: REPORT_FORMAT.to_string(),
        presentation: echo(q),
        lambda_rank: lambda_group_rank(q),
        center: CenterBlock {
            rank: center.rank(),
            basis: tuples(&center),
        },
        kdim: KdimBlock {
            lower: kd.lower,
            upper: kd.upper,
            exact: kd.exact,
            search_bound,
            witness: tuples(&kd.witness),
        },
        gk_algebra: gk_algebra(q),
        holonomic_bound: holonomic_bound(q, &kd).ok(),
        dichotomy: dichotomy_block(q, &kd),
        extension: None,
        assumptions,
    }
}

/// [`analyze`] plus the skew-Laurent extension by the `[sigma]` block.
pub fn extend(
    input: &ParsedInput,
    search_bound: u32,
    vset: Option<BTreeSet<usize>>,
) -> Result<InvariantReport, ExtendError> {
    let sigma = input.sigma.as_ref().ok_or(ExtendError::MissingSigma)?;
    let q = &input.torus;
    let mut report = analyze(input, search_bound);
    let kd = kdim(q, search_bound);
    let trivial = gh_trivial(q, sigma)?;
    let (v, source) = resolve_vset(q, &kd, vset)?;
    let superset = extension_superset(q, sigma, &v)?;
    let star = skew_extension(q, sigma)?;
    let forbidden = forbidden_dims(&superset, star.n())?;
    report.assumptions[0] = basis_assumption(star.basis());
    if source == VSetSource::User {
        report.assumptions.push(format!(
            "V(Lambda) = {} is user-supplied and trusted",
            join(&v.values)
        ));
    }
    report.extension = Some(ExtensionBlock {
        presentation: echo(&star),
        lambda_rank: lambda_group_rank(&star),
        hs_rank: hs_rank(sigma),
        gh_trivial: trivial,
        vset: VSetBlock { source, set: v },
        superset,
        forbidden,
    });
    Ok(report)
}

fn matrix_lines(out: &mut String, p: &PresentationEcho) -> fmt::Result {
    let width = p.matrix.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in &p.matrix {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "    {}", cells.join("  "))?;
    }
    Ok(())
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "(none)".to_string()
    } else {
        items.join(" ")
    }
}

fn render(r: &InvariantReport) -> Result<String, fmt::Error> {
    let mut out = String::new();
    let p = &r.presentation;
    let mode = match p.mode {
        ScalarMode::Symbolic => "symbolic",
        ScalarMode::Rational => "rational",
    };
    writeln!(out, "quantum torus: n = {}, m = {} ({mode}; {})", p.n, p.m, list(&p.generators))?;
    matrix_lines(&mut out, p)?;
    writeln!(out, "lambda-group rank      {}", r.lambda_rank)?;
    writeln!(out, "center rank            {}", r.center.rank)?;
    writeln!(out, "center basis           {}", list(&r.center.basis))?;
    let k = &r.kdim;
    if k.exact {
        writeln!(out, "Krull = global dim     {} (exact, search bound {})", k.lower, k.search_bound)?;
    } else {
        writeln!(
            out,
            "Krull = global dim     {}..{} (not exact, search bound {})",
            k.lower, k.upper, k.search_bound
        )?;
    }
    writeln!(out, "commutative witness    {}", list(&k.witness))?;
    writeln!(out, "GK dimension           {}", r.gk_algebra)?;
    match r.holonomic_bound {
        Some(h) => writeln!(out, "holonomic bound        {h}")?,
        None => writeln!(out, "holonomic bound        unknown (K.dim not exact)")?,
    }
    let d = &r.dichotomy;
    match (&d.set, d.status) {
        (Some(set), _) => writeln!(out, "dichotomy              {}", join(&set.values))?,
        (None, DichotomyStatus::InexactKdim) => {
            writeln!(out, "dichotomy              undecided: {}", d.detail.as_deref().unwrap_or(""))?
        }
        (None, _) => writeln!(out, "dichotomy              not applicable: {}", d.detail.as_deref().unwrap_or(""))?,
    }
    if let Some(x) = &r.extension {
        writeln!(out)?;
        writeln!(out, "skew-Laurent extension: n = {}, m = {}", x.presentation.n, x.presentation.m)?;
        matrix_lines(&mut out, &x.presentation)?;
        writeln!(out, "lambda-group rank      {}", x.lambda_rank)?;
        writeln!(out, "rk(H_sigma)            {}", x.hs_rank)?;
        writeln!(out, "G and H_sigma trivial  {}", if x.gh_trivial { "yes" } else { "no" })?;
        let source = match x.vset.source {
            VSetSource::User => "user",
            VSetSource::Dichotomy => "dichotomy",
        };
        writeln!(out, "V(Lambda)              {} (from {source})", join(&x.vset.set.values))?;
        writeln!(out, "superset               {}", join(&x.superset.values))?;
        writeln!(out, "forbidden              {}", join(&x.forbidden))?;
    }
    writeln!(out)?;
    writeln!(out, "assumptions:")?;
    for a in &r.assumptions {
        writeln!(out, "  - {a}")?;
    }
    Ok(out)
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_presentation;

    const CORNER: &str = "[torus]\nn = 4\ngenerators = q1 q2 q3\nq 1 4 = q1\nq 2 4 = q2\nq 3 4 = q3\n\
                          [sigma]\ngenerators = p1 p2 p3 p4\np 1 = p1\np 2 = p2\np 3 = p3\np 4 = p4\n";

    #[test]
    fn corner_analysis() {
        let r = analyze(&parse_presentation(CORNER).unwrap(), 2);
        assert_eq!(r.lambda_rank, 3);
        assert_eq!(r.center.rank, 0);
        assert!(r.kdim.exact);
        assert_eq!(r.kdim.lower, 3);
        assert_eq!(r.kdim.witness, ["[1, 0, 0, 0]", "[0, 1, 0, 0]", "[0, 0, 1, 0]"]);
        assert_eq!(r.holonomic_bound, Some(1));
        assert_eq!(r.dichotomy.set.unwrap().values, BTreeSet::from([1, 3]));
        assert!(r.extension.is_none());
    }

    #[test]
    fn corner_extension() {
        let r = extend(&parse_presentation(CORNER).unwrap(), 2, None).unwrap();
        assert!(r.assumptions[0].contains("q1, q2, q3, p1, p2, p3, p4"));
        let x = r.extension.unwrap();
        assert_eq!(x.hs_rank, 4);
        assert!(x.gh_trivial);
        assert_eq!(x.presentation.matrix[0][4], "p1^-1");
        assert_eq!(x.presentation.matrix[4][3], "p4");
        assert_eq!(x.superset.values, BTreeSet::from([2, 4]));
        assert_eq!(x.forbidden, BTreeSet::from([1, 3, 5]));
        assert_eq!(x.vset.source, VSetSource::Dichotomy);
    }

    #[test]
    fn commutative_torus_reports_failed_hypothesis() {
        let r = analyze(&parse_presentation("[torus]\nn = 3\n").unwrap(), 2);
        assert_eq!((r.lambda_rank, r.center.rank, r.kdim.lower), (0, 3, 3));
        assert_eq!(r.dichotomy.status, DichotomyStatus::HypothesisFailed);
        assert_eq!(r.holonomic_bound, Some(0));
        assert!(r.dichotomy.detail.unwrap().contains("K.dim = 3"));
    }

    #[test]
    fn extend_errors() {
        let no_sigma = parse_presentation("[torus]\nn = 2\ngenerators = g\nq 1 2 = g\n").unwrap();
        assert_eq!(extend(&no_sigma, 2, None), Err(ExtendError::MissingSigma));
        let shared = parse_presentation("[torus]\nn = 2\ngenerators = g\nq 1 2 = g\n[sigma]\np 1 = g\n").unwrap();
        assert!(matches!(
            extend(&shared, 2, None),
            Err(ExtendError::Predict(PredictError::HypothesisFailed { .. }))
        ));
        let flat = parse_presentation("[torus]\nn = 3\n[sigma]\ngenerators = p\np 1 = p\n").unwrap();
        assert!(matches!(
            extend(&flat, 2, None),
            Err(ExtendError::Predict(PredictError::MissingVSet { .. }))
        ));
        let r = extend(&flat, 2, Some(BTreeSet::from([3]))).unwrap();
        assert_eq!(r.extension.unwrap().superset.values, BTreeSet::from([1, 2, 3, 4]));
        assert!(r.assumptions.iter().any(|a| a.contains("user-supplied")));
    }

    #[test]
    fn text_mentions_every_number() {
        let r = extend(&parse_presentation(CORNER).unwrap(), 2, None).unwrap();
        let text = r.to_string();
        for needle in ["lambda-group rank      3", "center rank            0", "{1, 3}", "{2, 4}", "{1, 3, 5}"] {
            assert!(text.contains(needle), "missing {needle:?} in\n{text}");
        }
    }
}
