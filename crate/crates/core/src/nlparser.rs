//! Controlled-English front end.
//!
//! Four sentence shapes are recognized (case-insensitive, trailing
//! punctuation ignored):
//!
//! | pattern | example |
//! |---|---|
//! | copular | `Julie is an articulate person`, `Julie is articulate` |
//! | transitive | `The loud omelet wants another beer` |
//! | universal affirmative | `All ravens are black` |
//! | universal contrapositive | `All non-black things are non-ravens` |
//!
//! The output is an untyped [`LogicalForm`]: nouns appear as type atoms,
//! to be lifted into restrictions by canonicalization.

use thiserror::Error;

use crate::lexicon::Lexicon;
use crate::logform::{LogicalForm, QuantKind};
use crate::ontology::Ontology;

/// Irregular plurals; anything else must pluralize with a plain `s`.
pub const IRREGULAR_PLURALS: &[(&str, &str)] = &[("people", "person")];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SentenceError {
    #[error("sentence matches no supported pattern: `{0}`")]
    NoPattern(String),
    #[error("unknown word `{0}`")]
    UnknownWord(String),
    #[error("`{word}` is not {expected}")]
    WrongCategory { word: String, expected: &'static str },
    #[error("irregular plural `{0}` is not in the plural table")]
    IrregularPlural(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SentencePattern {
    Copular {
        name: String,
        declared_type: String,
        adjectives: Vec<String>,
        noun: Option<String>,
    },
    Transitive {
        subject_adjectives: Vec<String>,
        subject: String,
        verb: String,
        object_adjectives: Vec<String>,
        object: String,
    },
    UniversalAffirmative {
        noun: String,
        adjective: String,
    },
    UniversalContrapositive {
        adjective: String,
        noun: String,
    },
}

/// Parses a sentence straight to its untyped logical form.
pub fn parse_sentence(text: &str, lex: &Lexicon, ont: &Ontology) -> Result<LogicalForm, SentenceError> {
    Ok(recognize(text, lex, ont)?.logical_form())
}

struct Vocabulary<'a> {
    lex: &'a Lexicon,
    ont: &'a Ontology,
}

impl Vocabulary<'_> {
    fn is_adjective(&self, word: &str) -> bool {
        self.lex.signature(word).is_some_and(|s| s.arity() == 1)
    }

    fn is_noun(&self, word: &str) -> bool {
        self.ont.contains(word)
    }

    fn adjective(&self, word: &str) -> Result<String, SentenceError> {
        if self.is_adjective(word) {
            Ok(word.to_string())
        } else {
            Err(self.miss(word, "an adjective"))
        }
    }

    fn plural_noun(&self, word: &str) -> Result<String, SentenceError> {
        let singular = match IRREGULAR_PLURALS.iter().find(|(pl, _)| *pl == word) {
            Some((_, sg)) => sg.to_string(),
            None => match word.strip_suffix('s') {
                Some(stem) if !stem.is_empty() => stem.to_string(),
                _ => return Err(SentenceError::IrregularPlural(word.to_string())),
            },
        };
        if self.is_noun(&singular) {
            Ok(singular)
        } else if self.lex.signature(&singular).is_some() {
            Err(self.miss(word, "a plural noun"))
        } else {
            Err(SentenceError::UnknownWord(word.to_string()))
        }
    }

    fn verb(&self, word: &str) -> Result<String, SentenceError> {
        let stem = word.strip_suffix('s').unwrap_or(word);
        match self.lex.signature(stem) {
            Some(sig) if sig.arity() == 2 => Ok(stem.to_string()),
            Some(_) => Err(SentenceError::WrongCategory {
                word: word.to_string(),
                expected: "a transitive verb",
            }),
            None => Err(self.miss(word, "a transitive verb")),
        }
    }

    fn miss(&self, word: &str, expected: &'static str) -> SentenceError {
        if self.lex.signature(word).is_some() || self.is_noun(word) {
            SentenceError::WrongCategory {
                word: word.to_string(),
                expected,
            }
        } else {
            SentenceError::UnknownWord(word.to_string())
        }
    }

    /// `adj* noun` starting at `words[0]`; returns the phrase and the rest.
    fn noun_phrase<'w>(&self, words: &'w [String]) -> Result<(Vec<String>, String, &'w [String]), SentenceError> {
        let mut adjectives = Vec::new();
        for (i, w) in words.iter().enumerate() {
            if self.is_noun(w) {
                return Ok((adjectives, w.clone(), &words[i + 1..]));
            }
            adjectives.push(self.adjective(w)?);
        }
        Err(SentenceError::NoPattern(words.join(" ")))
    }
}

fn words_of(text: &str) -> Vec<String> {
    let trimmed = text.trim().trim_end_matches(['.', '!', '?']);
    trimmed.split_whitespace().map(str::to_ascii_lowercase).collect()
}

/// Classifies a sentence and captures its slots.
pub fn recognize(text: &str, lex: &Lexicon, ont: &Ontology) -> Result<SentencePattern, SentenceError> {
    let vocab = Vocabulary { lex, ont };
    let words = words_of(text);
    let no_pattern = || SentenceError::NoPattern(text.trim().to_string());
    let strs: Vec<&str> = words.iter().map(String::as_str).collect();

    match strs.as_slice() {
        ["all", adj, "things", "are", noun] if adj.starts_with("non-") && noun.starts_with("non-") => {
            Ok(SentencePattern::UniversalContrapositive {
                adjective: vocab.adjective(&adj["non-".len()..])?,
                noun: vocab.plural_noun(&noun["non-".len()..])?,
            })
        }
        ["all", noun, "are", adj] => Ok(SentencePattern::UniversalAffirmative {
            noun: vocab.plural_noun(noun)?,
            adjective: vocab.adjective(adj)?,
        }),
        ["all", ..] => Err(no_pattern()),
        ["the", ..] => {
            let (subject_adjectives, subject, rest) = vocab.noun_phrase(&words[1..])?;
            let (verb, rest) = rest.split_first().ok_or_else(no_pattern)?;
            let verb = vocab.verb(verb)?;
            let rest = match rest.first().map(String::as_str) {
                Some("a" | "an" | "another") => &rest[1..],
                _ => rest,
            };
            let (object_adjectives, object, rest) = vocab.noun_phrase(rest)?;
            if !rest.is_empty() {
                return Err(no_pattern());
            }
            Ok(SentencePattern::Transitive {
                subject_adjectives,
                subject,
                verb,
                object_adjectives,
                object,
            })
        }
        [name, "is", ..] => {
            let decl = lex
                .name_ignore_case(name)
                .ok_or_else(|| SentenceError::UnknownWord(name.to_string()))?;
            let mut rest = &words[2..];
            if matches!(rest.first().map(String::as_str), Some("a" | "an")) {
                rest = &rest[1..];
            }
            let (adjectives, noun) = match rest.split_last() {
                None => return Err(no_pattern()),
                Some((last, init)) if vocab.is_noun(last) => (init, Some(last.clone())),
                Some(_) => (rest, None),
            };
            let adjectives = adjectives
                .iter()
                .map(|w| vocab.adjective(w))
                .collect::<Result<Vec<_>, _>>()?;
            if adjectives.is_empty() && noun.is_none() {
                return Err(no_pattern());
            }
            Ok(SentencePattern::Copular {
                name: decl.name.clone(),
                declared_type: decl.declared_type.clone(),
                adjectives,
                noun,
            })
        }
        _ => Err(no_pattern()),
    }
}

fn initial(word: &str) -> String {
    word.chars()
        .next()
        .map(|c| c.to_ascii_lowercase().to_string())
        .unwrap_or_else(|| "x".into())
}

fn conjoin(mut conjuncts: Vec<LogicalForm>) -> LogicalForm {
    if conjuncts.len() == 1 {
        conjuncts.pop().unwrap()
    } else {
        LogicalForm::And(conjuncts)
    }
}

impl SentencePattern {
    pub fn logical_form(&self) -> LogicalForm {
        match self {
            SentencePattern::Copular {
                name,
                declared_type,
                adjectives,
                noun,
            } => {
                let v = initial(name);
                let mut conjuncts: Vec<LogicalForm> = noun.iter().map(|n| LogicalForm::atom(n, &[&v])).collect();
                conjuncts.extend(adjectives.iter().map(|a| LogicalForm::atom(a, &[&v])));
                // Without a noun the name's declared type supplies the restriction.
                let restriction = noun.is_none().then_some(declared_type.as_str());
                LogicalForm::quant(QuantKind::ExistsUnique, &v, restriction, conjoin(conjuncts))
            }
            SentencePattern::Transitive {
                subject_adjectives,
                subject,
                verb,
                object_adjectives,
                object,
            } => {
                let s = initial(subject);
                let mut o = initial(object);
                if o == s {
                    o.push('1');
                }
                let mut conjuncts = vec![LogicalForm::atom(subject, &[&s]), LogicalForm::atom(object, &[&o])];
                conjuncts.extend(subject_adjectives.iter().map(|a| LogicalForm::atom(a, &[&s])));
                conjuncts.extend(object_adjectives.iter().map(|a| LogicalForm::atom(a, &[&o])));
                conjuncts.push(LogicalForm::atom(verb, &[&s, &o]));
                LogicalForm::quant(
                    QuantKind::Exists,
                    &s,
                    None,
                    LogicalForm::quant(QuantKind::Exists, &o, None, LogicalForm::And(conjuncts)),
                )
            }
            SentencePattern::UniversalAffirmative { noun, adjective } => LogicalForm::quant(
                QuantKind::Forall,
                "x",
                None,
                LogicalForm::implies(LogicalForm::atom(noun, &["x"]), LogicalForm::atom(adjective, &["x"])),
            ),
            SentencePattern::UniversalContrapositive { adjective, noun } => LogicalForm::quant(
                QuantKind::Forall,
                "x",
                None,
                LogicalForm::implies(
                    LogicalForm::negate(LogicalForm::atom(adjective, &["x"])),
                    LogicalForm::negate(LogicalForm::atom(noun, &["x"])),
                ),
            ),
        }
    }
}
