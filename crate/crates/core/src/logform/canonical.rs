//! Rewrite normalization into restricted-quantifier form.
//!
//! One pass applies, in order:
//!
//! 1. double-negation elimination, `¬¬φ → φ`;
//! 2. contraposition, `(¬φ → ¬ψ) → (ψ → φ)`, and `(φ → ¬T(x)) → (T(x) → ¬φ)`
//!    for a type atom `T(x)`;
//! 3. type lifting: a type atom `T(x)` guarding a universal's implication,
//!    or conjoined under an existential, becomes the quantifier's
//!    restriction;
//! 4. conjunction flattening and sorting by printed form.
//!
//! Passes repeat until nothing changes. Remaining implications are then
//! expanded to `¬(φ ∧ ¬ψ)` and unrestricted quantifiers range over the
//! ontology root.

use std::fmt;

use thiserror::Error;

use super::{alpha_equivalent, LogicalForm, QuantKind};
use crate::lexicon::Lexicon;
use crate::ontology::Ontology;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown type `{0}` in quantifier restriction")]
    UnknownType(String),
    #[error("`{predicate}` takes {expected} argument(s), got {found}")]
    Arity {
        predicate: String,
        expected: usize,
        found: usize,
    },
    #[error("type atom `{0}` cannot be lifted into a quantifier restriction")]
    Unliftable(String),
}

/// A form in restricted-quantifier normal form: no implications, no type
/// atoms, no double negations, every quantifier restricted and every
/// conjunction flattened and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm(LogicalForm);

impl CanonicalForm {
    pub fn form(&self) -> &LogicalForm {
        &self.0
    }

    pub fn into_form(self) -> LogicalForm {
        self.0
    }

    /// Equivalence of canonical forms is alpha-equivalence.
    pub fn alpha_equal(&self, other: &CanonicalForm) -> bool {
        alpha_equivalent(&self.0, &other.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn canonicalize(lf: &LogicalForm, ont: &Ontology, lex: &Lexicon) -> Result<CanonicalForm, CanonError> {
    check_vocabulary(lf, ont, lex)?;
    let rw = Rewriter { ont };

    let mut cur = lf.clone();
    loop {
        let next = rw.sort(rw.lift(rw.contrapose(double_negation(cur.clone()))));
        if next == cur {
            break;
        }
        cur = next;
    }

    if let Some(atom) = first_type_atom(&cur, ont) {
        return Err(CanonError::Unliftable(atom));
    }

    let mut cur = restrict_to_root(expand_implications(cur), ont.root());
    loop {
        let next = rw.sort(double_negation(cur.clone()));
        if next == cur {
            break;
        }
        cur = next;
    }
    Ok(CanonicalForm(cur))
}

fn check_vocabulary(lf: &LogicalForm, ont: &Ontology, lex: &Lexicon) -> Result<(), CanonError> {
    for (predicate, args) in lf.atoms() {
        let expected = match lex.arity(predicate) {
            Some(n) => n,
            None if ont.contains(predicate) => 1,
            None => return Err(CanonError::UnknownPredicate(predicate.to_string())),
        };
        if args.len() != expected {
            return Err(CanonError::Arity {
                predicate: predicate.to_string(),
                expected,
                found: args.len(),
            });
        }
    }
    for (_, _, restriction) in lf.binders() {
        if let Some(ty) = restriction {
            if !ont.contains(ty) {
                return Err(CanonError::UnknownType(ty.to_string()));
            }
        }
    }
    Ok(())
}

fn map_children(lf: LogicalForm, f: &impl Fn(LogicalForm) -> LogicalForm) -> LogicalForm {
    match lf {
        LogicalForm::Quant {
            kind,
            var,
            restriction,
            body,
        } => LogicalForm::Quant {
            kind,
            var,
            restriction,
            body: Box::new(f(*body)),
        },
        atom @ LogicalForm::Atom { .. } => atom,
        LogicalForm::And(cs) => LogicalForm::And(cs.into_iter().map(f).collect()),
        LogicalForm::Not(inner) => LogicalForm::negate(f(*inner)),
        LogicalForm::Implies(a, b) => LogicalForm::implies(f(*a), f(*b)),
    }
}

fn double_negation(lf: LogicalForm) -> LogicalForm {
    match map_children(lf, &double_negation) {
        LogicalForm::Not(inner) => match *inner {
            LogicalForm::Not(x) => *x,
            other => LogicalForm::negate(other),
        },
        other => other,
    }
}

fn expand_implications(lf: LogicalForm) -> LogicalForm {
    match map_children(lf, &expand_implications) {
        LogicalForm::Implies(a, b) => LogicalForm::negate(LogicalForm::And(vec![*a, LogicalForm::Not(b)])),
        other => other,
    }
}

fn restrict_to_root(lf: LogicalForm, root: &str) -> LogicalForm {
    match map_children(lf, &|c| restrict_to_root(c, root)) {
        LogicalForm::Quant {
            kind,
            var,
            restriction,
            body,
        } => LogicalForm::Quant {
            kind,
            var,
            restriction: restriction.or_else(|| Some(root.to_string())),
            body,
        },
        other => other,
    }
}

fn first_type_atom(lf: &LogicalForm, ont: &Ontology) -> Option<String> {
    lf.atoms()
        .into_iter()
        .find(|(p, _)| ont.contains(p))
        .map(|(p, args)| LogicalForm::Atom {
            predicate: p.to_string(),
            args: args.to_vec(),
        })
        .map(|a| a.to_string())
}

struct Rewriter<'a> {
    ont: &'a Ontology,
}

impl Rewriter<'_> {
    fn is_type_atom(&self, lf: &LogicalForm) -> bool {
        matches!(lf, LogicalForm::Atom { predicate, args } if args.len() == 1 && self.ont.contains(predicate))
    }

    fn contrapose(&self, lf: LogicalForm) -> LogicalForm {
        match map_children(lf, &|c| self.contrapose(c)) {
            LogicalForm::Implies(a, b) => match (*a, *b) {
                (LogicalForm::Not(p), LogicalForm::Not(q)) => LogicalForm::Implies(q, p),
                (p, LogicalForm::Not(t)) if self.is_type_atom(&t) && !self.is_type_atom(&p) => {
                    LogicalForm::Implies(t, Box::new(LogicalForm::negate(p)))
                }
                (p, q) => LogicalForm::implies(p, q),
            },
            other => other,
        }
    }

    /// Restriction after adding type `ty` to `current`, if the two agree.
    fn merged(&self, current: &Option<String>, ty: &str) -> Option<String> {
        match current {
            None => Some(ty.to_string()),
            Some(r) => self.ont.more_specific(r, ty).ok().flatten().map(str::to_string),
        }
    }

    /// Index of the first conjunct `T(var)` whose type can join `restriction`.
    fn liftable_conjunct(
        &self,
        cs: &[LogicalForm],
        var: &str,
        restriction: &Option<String>,
    ) -> Option<(usize, String)> {
        cs.iter().enumerate().find_map(|(i, c)| {
            let ty = c.is_unary_on(var).filter(|p| self.ont.contains(p))?;
            self.merged(restriction, ty).map(|m| (i, m))
        })
    }

    fn lift(&self, lf: LogicalForm) -> LogicalForm {
        let lf = match lf {
            LogicalForm::Quant {
                kind,
                var,
                restriction,
                body,
            } => {
                let (restriction, body) = if kind == QuantKind::Forall {
                    self.lift_universal(&var, restriction, *body)
                } else {
                    self.lift_existential(&var, restriction, *body)
                };
                LogicalForm::Quant {
                    kind,
                    var,
                    restriction,
                    body: Box::new(body),
                }
            }
            other => other,
        };
        map_children(lf, &|c| self.lift(c))
    }

    fn lift_universal(
        &self,
        var: &str,
        restriction: Option<String>,
        body: LogicalForm,
    ) -> (Option<String>, LogicalForm) {
        let LogicalForm::Implies(antecedent, consequent) = body else {
            return (restriction, body);
        };
        if let Some(ty) = antecedent.is_unary_on(var).filter(|p| self.ont.contains(p)) {
            if let Some(m) = self.merged(&restriction, ty) {
                return (Some(m), *consequent);
            }
        }
        if let LogicalForm::And(cs) = antecedent.as_ref() {
            if let Some((i, m)) = self.liftable_conjunct(cs, var, &restriction) {
                let mut rest = cs.clone();
                rest.remove(i);
                let body = if rest.is_empty() {
                    *consequent
                } else {
                    LogicalForm::Implies(Box::new(LogicalForm::And(rest)), consequent)
                };
                return (Some(m), body);
            }
        }
        (restriction, LogicalForm::Implies(antecedent, consequent))
    }

    /// Lifts a conjoined type atom, looking through directly nested
    /// existentials: `(E o)(E b)(and (omelet(o)) ...)`.
    fn lift_existential(
        &self,
        var: &str,
        restriction: Option<String>,
        mut body: LogicalForm,
    ) -> (Option<String>, LogicalForm) {
        let core = existential_core(&mut body, var);
        let lifted = match core {
            LogicalForm::And(cs) => self.liftable_conjunct(cs, var, &restriction).map(|(i, m)| {
                cs.remove(i);
                m
            }),
            atom @ LogicalForm::Atom { .. } => {
                let found = atom
                    .is_unary_on(var)
                    .filter(|p| self.ont.contains(p))
                    .and_then(|p| self.merged(&restriction, p));
                if found.is_some() {
                    *atom = LogicalForm::And(Vec::new());
                }
                found
            }
            _ => None,
        };
        (lifted.or(restriction), body)
    }

    fn sort(&self, lf: LogicalForm) -> LogicalForm {
        match map_children(lf, &|c| self.sort(c)) {
            LogicalForm::And(cs) => {
                let mut flat = Vec::with_capacity(cs.len());
                for c in cs {
                    match c {
                        LogicalForm::And(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                if flat.len() == 1 {
                    return flat.pop().unwrap();
                }
                let mut keyed: Vec<(String, LogicalForm)> = flat.into_iter().map(|c| (c.to_string(), c)).collect();
                keyed.sort_by(|a, b| a.0.cmp(&b.0));
                LogicalForm::And(keyed.into_iter().map(|(_, c)| c).collect())
            }
            other => other,
        }
    }
}

fn existential_core<'b>(lf: &'b mut LogicalForm, var: &str) -> &'b mut LogicalForm {
    let descend = matches!(lf, LogicalForm::Quant { kind, var: inner, .. } if kind.is_existential() && inner != var);
    if !descend {
        return lf;
    }
    match lf {
        LogicalForm::Quant { body, .. } => existential_core(body, var),
        _ => unreachable!("checked above"),
    }
}
