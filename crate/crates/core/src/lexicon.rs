//! Predicates, salient relations and proper names.
//!
//! These are the logical concepts: things that are *said of* typed
//! objects. Nothing here may share a name with a type in the ontology.

use std::collections::HashMap;

use thiserror::Error;

use crate::ontology::{Ontology, OntologyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("line {line}: malformed declaration `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: unknown type `{ty}` in declaration of `{name}`")]
    UnknownType { line: usize, name: String, ty: String },
    #[error("line {line}: `{name}` is already a type in the ontology")]
    NameClash { line: usize, name: String },
    #[error("line {line}: `{name}` is declared twice")]
    Duplicate { line: usize, name: String },
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("argument {index} out of range for `{predicate}`/{arity}")]
    ArgumentOutOfRange {
        predicate: String,
        index: usize,
        arity: usize,
    },
    #[error(transparent)]
    Ontology(#[from] OntologyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateSignature {
    pub name: String,
    pub arg_types: Vec<String>,
}

impl PredicateSignature {
    pub fn arity(&self) -> usize {
        self.arg_types.len()
    }
}

/// A typed binary relation that licenses reinterpreting an object of the
/// range type as an object of the domain type (e.g. `EATING(person, food)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SalientRelation {
    pub name: String,
    pub domain: String,
    pub range: String,
    /// Declaration order, lower wins ties.
    pub priority: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NameDecl {
    pub name: String,
    pub declared_type: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    signatures: HashMap<String, PredicateSignature>,
    order: Vec<String>,
    relations: Vec<SalientRelation>,
    names: HashMap<String, NameDecl>,
}

impl Lexicon {
    /// Parses the lexicon format and validates it against `ont`:
    ///
    /// ```text
    /// pred want(animal, entity)
    /// rel EATING(person, food)
    /// name Julie :: person
    /// ```
    pub fn load(source: &str, ont: &Ontology) -> Result<Self, LexiconError> {
        let mut lex = Lexicon::default();
        for (i, raw) in source.lines().enumerate() {
            let line = i + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let malformed = || LexiconError::Malformed {
                line,
                text: text.to_string(),
            };
            let (keyword, rest) = text.split_once(char::is_whitespace).ok_or_else(malformed)?;
            let rest = rest.trim();
            match keyword {
                "pred" => {
                    let (name, args) = parse_call(rest).ok_or_else(malformed)?;
                    lex.check_fresh(line, &name, ont)?;
                    check_types(line, &name, &args, ont)?;
                    lex.order.push(name.clone());
                    lex.signatures
                        .insert(name.clone(), PredicateSignature { name, arg_types: args });
                }
                "rel" => {
                    let (name, args) = parse_call(rest).ok_or_else(malformed)?;
                    let [domain, range]: [String; 2] = args.try_into().map_err(|_| malformed())?;
                    lex.check_fresh(line, &name, ont)?;
                    check_types(line, &name, &[domain.clone(), range.clone()], ont)?;
                    let priority = lex.relations.len();
                    lex.relations.push(SalientRelation {
                        name,
                        domain,
                        range,
                        priority,
                    });
                }
                "name" => {
                    let (name, ty) = rest.split_once("::").ok_or_else(malformed)?;
                    let (name, ty) = (name.trim(), ty.trim());
                    if !is_identifier(name) || ty.is_empty() {
                        return Err(malformed());
                    }
                    lex.check_fresh(line, name, ont)?;
                    check_types(line, name, &[ty.to_string()], ont)?;
                    lex.names.insert(
                        name.to_string(),
                        NameDecl {
                            name: name.to_string(),
                            declared_type: ty.to_string(),
                        },
                    );
                }
                _ => return Err(malformed()),
            }
        }
        Ok(lex)
    }

    fn check_fresh(&self, line: usize, name: &str, ont: &Ontology) -> Result<(), LexiconError> {
        if ont.contains(name) {
            return Err(LexiconError::NameClash {
                line,
                name: name.to_string(),
            });
        }
        if self.is_symbol(name) {
            return Err(LexiconError::Duplicate {
                line,
                name: name.to_string(),
            });
        }
        Ok(())
    }

    fn is_symbol(&self, name: &str) -> bool {
        self.signatures.contains_key(name) || self.relation(name).is_some() || self.names.contains_key(name)
    }

    pub fn signature(&self, predicate: &str) -> Option<&PredicateSignature> {
        self.signatures.get(predicate)
    }

    /// Signatures in declaration order.
    pub fn signatures(&self) -> impl Iterator<Item = &PredicateSignature> + '_ {
        self.order.iter().map(|n| &self.signatures[n])
    }

    pub fn relations(&self) -> &[SalientRelation] {
        &self.relations
    }

    pub fn relation(&self, name: &str) -> Option<&SalientRelation> {
        self.relations.iter().find(|r| r.name == name)
    }

    pub fn name(&self, name: &str) -> Option<&NameDecl> {
        self.names.get(name)
    }

    /// Case-insensitive proper-name lookup, for sentence input.
    pub fn name_ignore_case(&self, name: &str) -> Option<&NameDecl> {
        self.names.values().find(|d| d.name.eq_ignore_ascii_case(name))
    }

    /// Declared type of argument slot `arg_index` (1-based) of `predicate`.
    pub fn expectation(&self, predicate: &str, arg_index: usize) -> Result<&str, LexiconError> {
        let sig = self
            .signatures
            .get(predicate)
            .ok_or_else(|| LexiconError::UnknownPredicate(predicate.to_string()))?;
        slot(predicate, &sig.arg_types, arg_index)
    }

    /// Like [`Lexicon::expectation`], but also treats salient relations as
    /// binary predicates over (domain, range). Analysed forms contain
    /// relation atoms, so re-analysis needs this.
    pub fn slot_type(&self, predicate: &str, arg_index: usize) -> Result<&str, LexiconError> {
        match self.relation(predicate) {
            Some(rel) if !self.signatures.contains_key(predicate) => match arg_index {
                1 => Ok(&rel.domain),
                2 => Ok(&rel.range),
                _ => Err(LexiconError::ArgumentOutOfRange {
                    predicate: predicate.to_string(),
                    index: arg_index,
                    arity: 2,
                }),
            },
            _ => self.expectation(predicate, arg_index),
        }
    }

    pub fn arity(&self, predicate: &str) -> Option<usize> {
        self.signatures
            .get(predicate)
            .map(PredicateSignature::arity)
            .or_else(|| self.relation(predicate).map(|_| 2))
    }

    /// Salient relations able to bridge `source` (the stated type) to
    /// `target` (the expected type).
    ///
    /// A relation qualifies when its domain is comparable with `target` and
    /// its range is comparable with `source`. Exact range matches come
    /// first, then exact domain matches, then declaration order.
    pub fn coercion_candidates(
        &self,
        ont: &Ontology,
        target: &str,
        source: &str,
    ) -> Result<Vec<&SalientRelation>, LexiconError> {
        // Validate both names up front so an empty relation list still errors.
        ont.compare(target, source)?;
        let mut out = Vec::new();
        for rel in &self.relations {
            if ont.compare(&rel.domain, target)?.is_comparable() && ont.compare(&rel.range, source)?.is_comparable() {
                out.push(rel);
            }
        }
        out.sort_by_key(|r| (r.range != source, r.domain != target, r.priority));
        Ok(out)
    }
}

fn slot<'a>(predicate: &str, types: &'a [String], arg_index: usize) -> Result<&'a str, LexiconError> {
    if arg_index == 0 || arg_index > types.len() {
        return Err(LexiconError::ArgumentOutOfRange {
            predicate: predicate.to_string(),
            index: arg_index,
            arity: types.len(),
        });
    }
    Ok(&types[arg_index - 1])
}

fn check_types(line: usize, name: &str, types: &[String], ont: &Ontology) -> Result<(), LexiconError> {
    match types.iter().find(|t| !ont.contains(t)) {
        Some(ty) => Err(LexiconError::UnknownType {
            line,
            name: name.to_string(),
            ty: ty.clone(),
        }),
        None => Ok(()),
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `name(a, b)` → (`name`, [`a`, `b`]).
fn parse_call(text: &str) -> Option<(String, Vec<String>)> {
    let (name, rest) = text.split_once('(')?;
    let args = rest.trim_end().strip_suffix(')')?;
    let name = name.trim();
    if !is_identifier(name) || name == "and" {
        return None;
    }
    let args: Vec<String> = args.split(',').map(|a| a.trim().to_string()).collect();
    if args.iter().any(|a| !is_identifier(a)) {
        return None;
    }
    Some((name.to_string(), args))
}
