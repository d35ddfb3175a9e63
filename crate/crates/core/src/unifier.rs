//! Type unification, expectation folding and metonymic coercion.
//!
//! `t1 • t2` succeeds with the more specific type when the two are
//! comparable. When they are not, a salient relation may bridge them: in
//! `omelet • person` the referent becomes a `person` and the `omelet`
//! survives as a related object (`person EATING omelet`).
//!
//! [`analyze`] applies this to every bound variable of a logical form and
//! rewrites the form so that the coerced relation is explicit.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::lexicon::{Lexicon, LexiconError, SalientRelation};
use crate::logform::{canonicalize, CanonError, LogicalForm, QuantKind, Term};
use crate::ontology::{Ontology, OntologyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Ontology(#[from] OntologyError),
    #[error("no expectations to fold")]
    NoExpectations,
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("type error for `{subject}` declared `{declared}`: cannot unify `{left}` with `{right}`")]
    TypeMismatch {
        subject: String,
        declared: String,
        left: String,
        right: String,
    },
    #[error("constant `{constant}` would need coercion via `{relation}`; only variables can be re-typed")]
    ConstantCoercion { constant: String, relation: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnificationOutcome {
    Unified(String),
    /// The referent is re-typed to `result`; the original object, of type
    /// `relatum`, is reached through `relation`.
    Coerced {
        result: String,
        relation: SalientRelation,
        relatum: String,
    },
    Failed {
        left: String,
        right: String,
    },
}

impl UnificationOutcome {
    pub fn result(&self) -> Option<&str> {
        match self {
            Self::Unified(t) | Self::Coerced { result: t, .. } => Some(t),
            Self::Failed { .. } => None,
        }
    }

    pub fn is_failed(&self) -> bool {
        matches!(self, Self::Failed { .. })
    }
}

impl fmt::Display for UnificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Unified(t) => write!(f, "Unified {t}"),
            Self::Coerced {
                result,
                relation,
                relatum,
            } => write!(f, "Coerced {result} via {}({result}, {relatum})", relation.name),
            Self::Failed { left, right } => write!(f, "Failed ({left} • {right})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    /// One application of `•`.
    Unify {
        subject: String,
        left: String,
        right: String,
        outcome: UnificationOutcome,
    },
    /// A subject with no argument-slot expectations keeps its declared type.
    Declare { subject: String, ty: String },
    /// A coercion introduced `subject` as the relatum of `referent`.
    Introduce {
        subject: String,
        ty: String,
        relation: String,
        referent: String,
    },
}

impl TraceStep {
    pub fn subject(&self) -> &str {
        match self {
            Self::Unify { subject, .. } | Self::Declare { subject, .. } | Self::Introduce { subject, .. } => subject,
        }
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Unify {
                left, right, outcome, ..
            } => {
                write!(f, "({left} • {right}) → ")?;
                match outcome {
                    UnificationOutcome::Unified(t) => write!(f, "{t}"),
                    UnificationOutcome::Coerced {
                        result,
                        relation,
                        relatum,
                    } => write!(f, "coerced {result} via {}({result}, {relatum})", relation.name),
                    UnificationOutcome::Failed { .. } => write!(f, "failed"),
                }
            }
            Self::Declare { subject, ty } => write!(f, "{subject} :: {ty}"),
            Self::Introduce {
                subject,
                ty,
                relation,
                referent,
            } => write!(f, "introduce {subject} :: {ty} with {relation}({referent}, {subject})"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DerivationTrace {
    pub steps: Vec<TraceStep>,
}

impl DerivationTrace {
    pub fn for_subject<'a>(&'a self, subject: &'a str) -> impl Iterator<Item = &'a TraceStep> + 'a {
        self.steps.iter().filter(move |s| s.subject() == subject)
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// One `subject: step` line per step.
    pub fn lines(&self) -> Vec<String> {
        self.steps.iter().map(|s| format!("{}: {s}", s.subject())).collect()
    }
}

/// `t1 • t2`.
///
/// Comparable types unify to the more specific one. Otherwise the first
/// coercion candidate with `t2` as target and `t1` as source re-types the
/// referent to (the more specific of) `t2` and the relation's domain; if no
/// relation fits that way round, the reverse orientation is tried so that
/// the operator is symmetric up to roles.
pub fn unify_types(ont: &Ontology, lex: &Lexicon, t1: &str, t2: &str) -> Result<UnificationOutcome, AnalyzeError> {
    if let Some(t) = ont.more_specific(t1, t2)? {
        return Ok(UnificationOutcome::Unified(t.to_string()));
    }
    for (target, source) in [(t2, t1), (t1, t2)] {
        if let Some(rel) = lex.coercion_candidates(ont, target, source)?.first() {
            let result = ont
                .more_specific(target, &rel.domain)?
                .expect("candidate domain is comparable with target");
            return Ok(UnificationOutcome::Coerced {
                result: result.to_string(),
                relation: (*rel).clone(),
                relatum: source.to_string(),
            });
        }
    }
    Ok(UnificationOutcome::Failed {
        left: t1.to_string(),
        right: t2.to_string(),
    })
}

/// Folds the argument-slot expectations on one referent, then confronts
/// the result with its declared type.
///
/// `expectations` are right-folded as written, so `[animal, person]` with
/// declared `omelet` computes `omelet • (animal • person)`. Only the
/// declared type can be coerced, since it is the one handed to the
/// relatum; a coercion between two expectations fails.
pub fn fold_expectations(
    ont: &Ontology,
    lex: &Lexicon,
    declared: &str,
    expectations: &[String],
) -> Result<(UnificationOutcome, DerivationTrace), AnalyzeError> {
    let innermost_first: Vec<String> = expectations.iter().rev().cloned().collect();
    fold_for(ont, lex, "", declared, &innermost_first)
}

fn fold_for(
    ont: &Ontology,
    lex: &Lexicon,
    subject: &str,
    declared: &str,
    expectations: &[String],
) -> Result<(UnificationOutcome, DerivationTrace), AnalyzeError> {
    let (first, rest) = expectations.split_first().ok_or(AnalyzeError::NoExpectations)?;
    let mut trace = DerivationTrace::default();
    let mut acc = first.clone();
    let mut coercion: Option<(SalientRelation, String)> = None;

    let lefts = rest
        .iter()
        .map(|e| (e.as_str(), false))
        .chain(std::iter::once((declared, true)));
    for (left, is_declared) in lefts {
        let outcome = unify_types(ont, lex, left, &acc)?;
        trace.steps.push(TraceStep::Unify {
            subject: subject.to_string(),
            left: left.to_string(),
            right: acc.clone(),
            outcome: outcome.clone(),
        });
        match outcome {
            UnificationOutcome::Unified(t) => acc = t,
            UnificationOutcome::Coerced {
                result,
                relation,
                relatum,
            } if is_declared && relatum == left => {
                acc = result;
                coercion = Some((relation, relatum));
            }
            UnificationOutcome::Coerced { .. } | UnificationOutcome::Failed { .. } => {
                let failed = UnificationOutcome::Failed {
                    left: left.to_string(),
                    right: acc,
                };
                return Ok((failed, trace));
            }
        }
    }
    let outcome = match coercion {
        Some((relation, relatum)) => UnificationOutcome::Coerced {
            result: acc,
            relation,
            relatum,
        },
        None => UnificationOutcome::Unified(acc),
    };
    Ok((outcome, trace))
}

/// A coercion performed during analysis, with what is needed to gloss it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoercionNote {
    pub variable: String,
    pub introduced: String,
    pub referent_type: String,
    pub relation: String,
    pub relatum_type: String,
    /// Unary predicates said of the referent, in form order.
    pub descriptors: Vec<String>,
    /// Binary predicates with the referent as first argument.
    pub continuations: Vec<(String, Term)>,
}

impl CoercionNote {
    /// "some loud person eating the omelet".
    pub fn gloss(&self) -> String {
        let mut words = vec!["some".to_string()];
        words.extend(self.descriptors.iter().cloned());
        words.push(self.referent_type.clone());
        words.push(self.relation.to_lowercase());
        words.push("the".to_string());
        words.push(self.relatum_type.clone());
        words.join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyzedForm {
    pub form: LogicalForm,
    pub trace: DerivationTrace,
    /// One gloss per coercion, in binding order.
    pub missing_text: Vec<String>,
    pub coercions: Vec<CoercionNote>,
}

/// Types every variable of `lf` by folding the expectations of the atoms
/// it occurs in, rewriting coerced variables so the implicit relation and
/// relatum become part of the form.
pub fn analyze(lf: &LogicalForm, ont: &Ontology, lex: &Lexicon) -> Result<AnalyzedForm, AnalyzeError> {
    let canonical = canonicalize(lf, ont, lex)?;
    let form = canonical.form();
    let mut cx = Analysis {
        ont,
        lex,
        trace: DerivationTrace::default(),
        coercions: Vec::new(),
        used: form.binders().into_iter().map(|(_, v, _)| v.to_string()).collect(),
    };

    cx.check_constants(form)?;
    let rewritten = cx.rewrite(form.clone())?;
    let final_form = canonicalize(&rewritten, ont, lex)?.into_form();

    let missing_text = cx.coercions.iter().map(CoercionNote::gloss).collect();
    Ok(AnalyzedForm {
        form: final_form,
        trace: cx.trace,
        missing_text,
        coercions: cx.coercions,
    })
}

/// One line per coercion: the gloss plus what the referent goes on to do,
/// e.g. "some loud person eating the omelet wants a beer".
pub fn missing_text_report(analyzed: &AnalyzedForm) -> String {
    if analyzed.coercions.is_empty() {
        return "no missing text detected".to_string();
    }
    let types: HashMap<&str, &str> = analyzed
        .form
        .binders()
        .into_iter()
        .filter_map(|(_, v, r)| r.map(|r| (v, r)))
        .collect();
    let lines: Vec<String> = analyzed
        .coercions
        .iter()
        .map(|note| {
            let mut line = note.gloss();
            for (predicate, other) in &note.continuations {
                let object = match other {
                    Term::Var(v) => types
                        .get(v.as_str())
                        .map(|t| with_article(t))
                        .unwrap_or_else(|| v.clone()),
                    Term::Const(c) => c.clone(),
                };
                line.push_str(&format!(" {predicate}s {object}"));
            }
            line
        })
        .collect();
    lines.join("\n")
}

fn with_article(noun: &str) -> String {
    let article = if noun.starts_with(['a', 'e', 'i', 'o', 'u']) {
        "an"
    } else {
        "a"
    };
    format!("{article} {noun}")
}

struct Analysis<'a> {
    ont: &'a Ontology,
    lex: &'a Lexicon,
    trace: DerivationTrace,
    coercions: Vec<CoercionNote>,
    used: HashSet<String>,
}

impl Analysis<'_> {
    fn expectations(&self, body: &LogicalForm, subject: &Term) -> Result<Vec<String>, AnalyzeError> {
        let mut out = Vec::new();
        for (predicate, args) in body.atoms() {
            for (i, arg) in args.iter().enumerate() {
                if arg == subject {
                    out.push(self.lex.slot_type(predicate, i + 1)?.to_string());
                }
            }
        }
        Ok(out)
    }

    fn check_constants(&mut self, form: &LogicalForm) -> Result<(), AnalyzeError> {
        let mut seen = Vec::new();
        for (_, args) in form.atoms() {
            for arg in args {
                if let Term::Const(c) = arg {
                    if !seen.contains(c) {
                        seen.push(c.clone());
                    }
                }
            }
        }
        for c in seen {
            let decl = self
                .lex
                .name(&c)
                .ok_or_else(|| AnalyzeError::UnknownConstant(c.clone()))?;
            let declared = decl.declared_type.clone();
            let exps = self.expectations(form, &Term::Const(c.clone()))?;
            if exps.is_empty() {
                self.trace.steps.push(TraceStep::Declare {
                    subject: c,
                    ty: declared,
                });
                continue;
            }
            let (outcome, trace) = fold_for(self.ont, self.lex, &c, &declared, &exps)?;
            self.trace.steps.extend(trace.steps);
            match outcome {
                UnificationOutcome::Unified(_) => {}
                UnificationOutcome::Coerced { relation, .. } => {
                    return Err(AnalyzeError::ConstantCoercion {
                        constant: c,
                        relation: relation.name,
                    })
                }
                UnificationOutcome::Failed { left, right } => {
                    return Err(AnalyzeError::TypeMismatch {
                        subject: c,
                        declared,
                        left,
                        right,
                    })
                }
            }
        }
        Ok(())
    }

    fn fresh_name(&mut self, base: &str) -> String {
        let mut n = 2;
        loop {
            let candidate = format!("{base}{n}");
            if self.used.insert(candidate.clone()) {
                return candidate;
            }
            n += 1;
        }
    }

    fn rewrite(&mut self, lf: LogicalForm) -> Result<LogicalForm, AnalyzeError> {
        Ok(match lf {
            LogicalForm::Quant {
                kind,
                var,
                restriction,
                body,
            } => {
                let declared = restriction.unwrap_or_else(|| self.ont.root().to_string());
                let subject = Term::Var(var.clone());
                let exps = self.expectations(&body, &subject)?;
                let outcome = if exps.is_empty() {
                    self.trace.steps.push(TraceStep::Declare {
                        subject: var.clone(),
                        ty: declared.clone(),
                    });
                    UnificationOutcome::Unified(declared.clone())
                } else {
                    let (outcome, trace) = fold_for(self.ont, self.lex, &var, &declared, &exps)?;
                    self.trace.steps.extend(trace.steps);
                    outcome
                };

                match outcome {
                    UnificationOutcome::Unified(t) => {
                        let body = self.rewrite(*body)?;
                        LogicalForm::quant(kind, &var, Some(&t), body)
                    }
                    UnificationOutcome::Coerced {
                        result,
                        relation,
                        relatum,
                    } => {
                        let introduced = self.fresh_name(&var);
                        self.trace.steps.push(TraceStep::Introduce {
                            subject: introduced.clone(),
                            ty: relatum.clone(),
                            relation: relation.name.clone(),
                            referent: var.clone(),
                        });
                        let (descriptors, continuations) = describe(&body, &var, self.ont);
                        self.coercions.push(CoercionNote {
                            variable: var.clone(),
                            introduced: introduced.clone(),
                            referent_type: result.clone(),
                            relation: relation.name.clone(),
                            relatum_type: relatum.clone(),
                            descriptors,
                            continuations,
                        });

                        let body = self.rewrite(*body)?;
                        let link = LogicalForm::Atom {
                            predicate: relation.name.clone(),
                            args: vec![Term::Var(var.clone()), Term::Var(introduced.clone())],
                        };
                        let inner = if kind.is_existential() {
                            LogicalForm::quant(
                                QuantKind::Exists,
                                &introduced,
                                Some(&relatum),
                                LogicalForm::And(vec![link, body]),
                            )
                        } else {
                            LogicalForm::implies(
                                LogicalForm::quant(QuantKind::Exists, &introduced, Some(&relatum), link),
                                body,
                            )
                        };
                        LogicalForm::quant(kind, &var, Some(&result), inner)
                    }
                    UnificationOutcome::Failed { left, right } => {
                        return Err(AnalyzeError::TypeMismatch {
                            subject: var,
                            declared,
                            left,
                            right,
                        })
                    }
                }
            }
            LogicalForm::And(cs) => {
                LogicalForm::And(cs.into_iter().map(|c| self.rewrite(c)).collect::<Result<_, _>>()?)
            }
            LogicalForm::Not(inner) => LogicalForm::negate(self.rewrite(*inner)?),
            LogicalForm::Implies(a, b) => LogicalForm::implies(self.rewrite(*a)?, self.rewrite(*b)?),
            atom @ LogicalForm::Atom { .. } => atom,
        })
    }
}

/// Positive (un-negated) unary and binary predications of `var` in `body`.
fn describe(body: &LogicalForm, var: &str, ont: &Ontology) -> (Vec<String>, Vec<(String, Term)>) {
    fn walk(lf: &LogicalForm, var: &str, ont: &Ontology, unary: &mut Vec<String>, binary: &mut Vec<(String, Term)>) {
        match lf {
            LogicalForm::Atom { predicate, args } if !ont.contains(predicate) => match args.as_slice() {
                [only] if only.is_var(var) => unary.push(predicate.clone()),
                [first, second] if first.is_var(var) && !second.is_var(var) => {
                    binary.push((predicate.clone(), second.clone()))
                }
                _ => {}
            },
            LogicalForm::Atom { .. } | LogicalForm::Not(_) => {}
            LogicalForm::Quant { body, .. } => walk(body, var, ont, unary, binary),
            LogicalForm::And(cs) => cs.iter().for_each(|c| walk(c, var, ont, unary, binary)),
            LogicalForm::Implies(_, b) => walk(b, var, ont, unary, binary),
        }
    }
    let mut unary = Vec::new();
    let mut binary = Vec::new();
    walk(body, var, ont, &mut unary, &mut binary);
    (unary, binary)
}
