//! The presentation file format.
//!
//! ```text
//! # comments run to the end of the line
//! [torus]
//! n = 4
//! mode = symbolic          # or rational
//! generators = q1, q2, q3  # symbolic mode only
//! q 1 4 = q1               # 1 <= i < j <= n; missing entries are 1
//!
//! [sigma]                  # optional
//! generators = p1, p2      # fresh labels for the automorphism scalars
//! p 1 = p1                 # missing scalars are 1
//! ```
//!
//! In rational mode the generator basis is the sorted set of primes
//! occurring in any scalar of either section.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::algebra::{AlgebraError, QTorusPresentation, ScalarAutomorphismSpec};
use crate::scalars::{
    parse_scalar_expr, primes_of, resolve_scalar, GeneratorBasis, ScalarError, ScalarExpr, ScalarMode,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: {source}")]
    Scalar {
        line: usize,
        column: usize,
        source: ScalarError,
    },
    #[error("line {line}: index {index} is outside 1..={n}")]
    LengthMismatch { line: usize, index: usize, n: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl InputError {
    /// Short machine-friendly name of the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            InputError::Parse { .. } => "parse",
            InputError::Scalar { source, .. } => match source {
                ScalarError::Syntax { .. } => "parse",
                ScalarError::UnknownGenerator { .. } => "unknown_generator",
                ScalarError::TorsionScalar { .. } => "torsion_scalar",
                ScalarError::OverlappingGenerators { .. } => "overlapping_generators",
                _ => "invalid_scalar",
            },
            InputError::LengthMismatch { .. } => "length_mismatch",
            InputError::Algebra(AlgebraError::NotAntisymmetric { .. }) => "not_antisymmetric",
            InputError::Algebra(_) => "invalid_presentation",
        }
    }
}

/// A parsed file: the torus and, when a `[sigma]` block is present, the
/// automorphism. In symbolic mode the torus uses the `[torus]` labels and
/// the automorphism those followed by the `[sigma]` labels; in rational mode
/// both use the primes of every scalar in the file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInput {
    pub torus: QTorusPresentation,
    pub sigma: Option<ScalarAutomorphismSpec>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Torus,
    Sigma,
}

/// A scalar as written, with its position for error messages.
struct Pending {
    line: usize,
    column: usize,
    text: String,
    expr: ScalarExpr,
}

#[derive(Default)]
struct Labels {
    line: usize,
    column: usize,
    labels: Vec<String>,
}

#[derive(Default)]
struct Draft {
    n: Option<usize>,
    mode: Option<ScalarMode>,
    torus_labels: Option<Labels>,
    sigma_labels: Option<Labels>,
    has_torus: bool,
    has_sigma: bool,
    q: BTreeMap<(usize, usize), Pending>,
    p: BTreeMap<usize, Pending>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Byte offset to 1-based character column.
fn column_of(raw: &str, offset: usize) -> usize {
    raw[..offset].chars().count() + 1
}

fn parse_index(tok: &str, line: usize, column: usize) -> Result<usize, InputError> {
    match tok.parse::<usize>() {
        Ok(i) if i >= 1 => Ok(i),
        _ => Err(parse_err(line, column, format!("expected a positive index, found `{tok}`"))),
    }
}

/// Splits `s` into whitespace-separated tokens with their byte offsets.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(b)) => {
                out.push((b, &s[b..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((b, &s[b..]));
    }
    out
}

fn scalar_error(line: usize, column: usize, e: ScalarError) -> InputError {
    match e {
        ScalarError::Syntax {
            column: inner,
            message,
            ..
        } => parse_err(line, column + inner - 1, message),
        source => InputError::Scalar {
            line,
            column,
            source,
        },
    }
}

impl Draft {
    fn key_value(&mut self, section: Section, raw: &str, line: usize, body: &str) -> Result<(), InputError> {
        let base = body.as_ptr() as usize - raw.as_ptr() as usize;
        let Some(eq) = body.find('=') else {
            return Err(parse_err(
                line,
                column_of(raw, base),
                "expected `key = value`",
            ));
        };
        let keys = tokens(&body[..eq]);
        let value = &body[eq + 1..];
        let value_off = base + eq + 1 + (value.len() - value.trim_start().len());
        let value = value.trim();
        let value_col = column_of(raw, value_off);
        let col = |off: usize| column_of(raw, base + off);
        let Some(&(key_off, key)) = keys.first() else {
            return Err(parse_err(line, col(0), "missing key before `=`"));
        };
        let args = &keys[1..];
        let arity = |want: usize| -> Result<(), InputError> {
            if args.len() == want {
                Ok(())
            } else {
                Err(parse_err(
                    line,
                    col(key_off),
                    format!("`{key}` takes {want} index argument(s), found {}", args.len()),
                ))
            }
        };
        if value.is_empty() && key != "generators" {
            return Err(parse_err(line, value_col, format!("missing value for `{key}`")));
        }
        match (section, key) {
            (Section::Torus, "n") => {
                arity(0)?;
                if self.n.is_some() {
                    return Err(parse_err(line, col(key_off), "`n` is set twice"));
                }
                let n = value
                    .parse::<usize>()
                    .ok()
                    .filter(|n| *n >= 1)
                    .ok_or_else(|| parse_err(line, value_col, format!("`n` must be a positive integer, found `{value}`")))?;
                self.n = Some(n);
            }
            (Section::Torus, "mode") => {
                arity(0)?;
                if self.mode.is_some() {
                    return Err(parse_err(line, col(key_off), "`mode` is set twice"));
                }
                self.mode = Some(match value {
                    "symbolic" => ScalarMode::Symbolic,
                    "rational" => ScalarMode::Rational,
                    _ => {
                        return Err(parse_err(
                            line,
                            value_col,
                            format!("mode must be `symbolic` or `rational`, found `{value}`"),
                        ))
                    }
                });
            }
            (_, "generators") => {
                arity(0)?;
                let slot = match section {
                    Section::Torus => &mut self.torus_labels,
                    Section::Sigma => &mut self.sigma_labels,
                };
                if slot.is_some() {
                    return Err(parse_err(line, col(key_off), "`generators` is set twice in this section"));
                }
                let labels = value
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect();
                *slot = Some(Labels {
                    line,
                    column: value_col,
                    labels,
                });
            }
            (Section::Torus, "q") => {
                arity(2)?;
                let i = parse_index(args[0].1, line, col(args[0].0))?;
                let j = parse_index(args[1].1, line, col(args[1].0))?;
                if i >= j {
                    return Err(parse_err(
                        line,
                        col(args[0].0),
                        format!("write entries with i < j only; q {j} {i} is implied by q {i} {j}"),
                    ));
                }
                if self.q.contains_key(&(i, j)) {
                    return Err(parse_err(line, col(key_off), format!("entry q {i} {j} is set twice")));
                }
                let expr = parse_scalar_expr(value).map_err(|e| scalar_error(line, value_col, e))?;
                self.q.insert(
                    (i, j),
                    Pending {
                        line,
                        column: value_col,
                        text: value.to_string(),
                        expr,
                    },
                );
            }
            (Section::Sigma, "p") => {
                arity(1)?;
                let i = parse_index(args[0].1, line, col(args[0].0))?;
                if self.p.contains_key(&i) {
                    return Err(parse_err(line, col(key_off), format!("scalar p {i} is set twice")));
                }
                let expr = parse_scalar_expr(value).map_err(|e| scalar_error(line, value_col, e))?;
                self.p.insert(
                    i,
                    Pending {
                        line,
                        column: value_col,
                        text: value.to_string(),
                        expr,
                    },
                );
            }
            (Section::Torus, _) => {
                return Err(parse_err(
                    line,
                    col(key_off),
                    format!("unknown key `{key}` in [torus]; expected n, mode, generators or q"),
                ))
            }
            (Section::Sigma, _) => {
                return Err(parse_err(
                    line,
                    col(key_off),
                    format!("unknown key `{key}` in [sigma]; expected generators or p"),
                ))
            }
        }
        Ok(())
    }

    /// The torus basis and the basis the `[sigma]` scalars are read in.
    fn bases(&self, mode: ScalarMode) -> Result<(GeneratorBasis, GeneratorBasis), InputError> {
        match mode {
            ScalarMode::Symbolic => {
                let at = |slot: &Labels, source| InputError::Scalar {
                    line: slot.line,
                    column: slot.column,
                    source,
                };
                let mut all: Vec<String> = Vec::new();
                if let Some(t) = &self.torus_labels {
                    GeneratorBasis::symbolic(t.labels.clone()).map_err(|e| at(t, e))?;
                    all.extend(t.labels.iter().cloned());
                }
                let torus = GeneratorBasis::symbolic(all.clone()).expect("labels checked above");
                if let Some(s) = &self.sigma_labels {
                    GeneratorBasis::symbolic(s.labels.clone()).map_err(|e| at(s, e))?;
                    if let Some(label) = s.labels.iter().find(|l| all.contains(l)) {
                        let e = ScalarError::OverlappingGenerators { label: label.clone() };
                        return Err(at(s, e));
                    }
                    all.extend(s.labels.iter().cloned());
                }
                Ok((torus, GeneratorBasis::symbolic(all).expect("labels checked above")))
            }
            ScalarMode::Rational => {
                if let Some(slot) = self.torus_labels.as_ref().or(self.sigma_labels.as_ref()) {
                    return Err(parse_err(
                        slot.line,
                        slot.column,
                        "`generators` is only used in symbolic mode; rational mode reads primes from the scalars",
                    ));
                }
                let primes: BTreeSet<_> = self
                    .q
                    .values()
                    .chain(self.p.values())
                    .flat_map(|s| primes_of(&s.expr))
                    .collect();
                let basis = GeneratorBasis::rational(primes).expect("factorization yields primes");
                Ok((basis.clone(), basis))
            }
        }
    }
}

fn resolve(s: &Pending, basis: &GeneratorBasis) -> Result<crate::scalars::ExponentVector, InputError> {
    resolve_scalar(&s.text, &s.expr, basis).map_err(|e| scalar_error(s.line, s.column, e))
}

/// Parses and validates a presentation file.
pub fn parse_presentation(text: &str) -> Result<ParsedInput, InputError> {
    let mut draft = Draft::default();
    let mut section: Option<Section> = None;
    let mut torus_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let body = content.trim();
        if body.is_empty() {
            continue;
        }
        let start = content.len() - content.trim_start().len();
        if let Some(rest) = body.strip_prefix('[') {
            let name = rest
                .strip_suffix(']')
                .ok_or_else(|| parse_err(line, column_of(raw, start), "unterminated section header"))?
                .trim();
            let (next, seen) = match name {
                "torus" => (Section::Torus, &mut draft.has_torus),
                "sigma" => (Section::Sigma, &mut draft.has_sigma),
                _ => {
                    return Err(parse_err(
                        line,
                        column_of(raw, start),
                        format!("unknown section `[{name}]`; expected [torus] or [sigma]"),
                    ))
                }
            };
            if *seen {
                return Err(parse_err(line, column_of(raw, start), format!("section [{name}] appears twice")));
            }
            *seen = true;
            if next == Section::Torus {
                torus_line = line;
            }
            section = Some(next);
            continue;
        }
        let Some(current) = section else {
            return Err(parse_err(
                line,
                column_of(raw, start),
                "content before the first section; start with [torus]",
            ));
        };
        draft.key_value(current, raw, line, &content[start..start + body.len()])?;
    }

    if !draft.has_torus {
        return Err(parse_err(1, 1, "missing [torus] section"));
    }
    let Some(n) = draft.n else {
        return Err(parse_err(torus_line, 1, "missing `n = ...` in [torus]"));
    };
    let mode = draft.mode.unwrap_or(ScalarMode::Symbolic);
    let (basis, sigma_basis) = draft.bases(mode)?;

    let mut upper = BTreeMap::new();
    for (&(i, j), s) in &draft.q {
        if j > n {
            return Err(InputError::LengthMismatch { line: s.line, index: j, n });
        }
        upper.insert((i - 1, j - 1), resolve(s, &basis)?);
    }
    let torus = QTorusPresentation::from_upper(n, basis.clone(), &upper)?;

    let sigma = if draft.has_sigma {
        let mut p = vec![sigma_basis.one(); n];
        for (&i, s) in &draft.p {
            if i > n {
                return Err(InputError::LengthMismatch { line: s.line, index: i, n });
            }
            p[i - 1] = resolve(s, &sigma_basis)?;
        }
        Some(ScalarAutomorphismSpec::new(sigma_basis, p))
    } else {
        None
    };
    Ok(ParsedInput { torus, sigma })
}
