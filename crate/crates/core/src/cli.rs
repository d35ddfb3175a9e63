//! Command-line front end.
//!
//! Every command produces one [`Record`]. Human mode prints a readable
//! report; structured mode prints the record as a single JSON line.
//! Exit codes: 0 success, 2 semantic or type failure, 3 parse or load
//! failure.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::aor::{self, AorVerdict};
use crate::confirm::{self, ConfirmError, Observation};
use crate::fixtures;
use crate::lexicon::Lexicon;
use crate::logform::{parse_lf, CanonError, LogicalForm};
use crate::nlparser::parse_sentence;
use crate::ontology::Ontology;
use crate::unifier::{self, AnalyzeError, UnificationOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SEMANTIC: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Directory holding `reference.ont` and `reference.lex`; overrides the
/// compiled-in fixtures.
pub const FIXTURES_ENV: &str = "ONTOLOGIK_FIXTURES";

/// Prefix marking `analyze` input as logical-form text.
pub const LF_PREFIX: &str = "@lf:";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Human,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "ontologik", version, about = "Typed logical forms over a type ontology")]
struct Cli {
    /// Ontology file (default: shipped reference tree)
    #[arg(long, global = true)]
    ontology: Option<PathBuf>,
    /// Lexicon file (default: shipped reference lexicon)
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: OutputMode,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Type a sentence (or `@lf:` logical form) and surface missing text
    Analyze { input: String },
    /// Check an adjective ordering, outermost adjective first
    Aor {
        adjectives: Vec<String>,
        #[arg(long)]
        noun: String,
    },
    /// Compare two hypotheses and evaluate observations against both
    Hempel {
        #[arg(long)]
        h1: String,
        #[arg(long)]
        h2: String,
        /// `<type>: <pred>[=true|false], ...`
        #[arg(long)]
        observe: Vec<String>,
    },
    /// Unify two types
    Unify { t1: String, t2: String },
    /// Print the untyped logical form of a sentence
    Parse { sentence: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Aor { .. } => "aor",
            Command::Hempel { .. } => "hempel",
            Command::Unify { .. } => "unify",
            Command::Parse { .. } => "parse",
        }
    }
}

/// The structured output record. Every command fills the same fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub command: String,
    pub status: String,
    pub canonical: Vec<String>,
    pub trace: Vec<String>,
    pub glosses: Vec<String>,
}

impl Record {
    fn new(command: &str, status: &str) -> Self {
        Record {
            command: command.to_string(),
            status: status.to_string(),
            canonical: Vec::new(),
            trace: Vec::new(),
            glosses: Vec::new(),
        }
    }
}

struct Outcome {
    code: i32,
    record: Record,
    human: Vec<String>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }

    fn semantic(e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_SEMANTIC,
            message: e.to_string(),
        }
    }
}

/// Loaded resources plus the output mode.
pub struct Session {
    pub ontology: Ontology,
    pub lexicon: Lexicon,
    pub mode: OutputMode,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

impl Session {
    /// Explicit paths win, then `$ONTOLOGIK_FIXTURES`, then the built-in fixtures.
    fn load(ontology: Option<&Path>, lexicon: Option<&Path>, mode: OutputMode) -> Result<Self, Failure> {
        let dir = std::env::var_os(FIXTURES_ENV).map(PathBuf::from);
        let source = |explicit: Option<&Path>, file: &str, builtin: &str| -> Result<String, Failure> {
            match (explicit, &dir) {
                (Some(p), _) => read(p),
                (None, Some(d)) => read(&d.join(file)),
                (None, None) => Ok(builtin.to_string()),
            }
        };
        let ont_src = source(ontology, "reference.ont", fixtures::REFERENCE_ONTOLOGY)?;
        let lex_src = source(lexicon, "reference.lex", fixtures::REFERENCE_LEXICON)?;
        let ontology = Ontology::load(&ont_src).map_err(|e| Failure::input(format!("ontology: {e}")))?;
        let lexicon = Lexicon::load(&lex_src, &ontology).map_err(|e| Failure::input(format!("lexicon: {e}")))?;
        Ok(Session {
            ontology,
            lexicon,
            mode,
        })
    }

    /// Logical-form text if prefixed with `@lf:` or opening with `(`, else a sentence.
    fn read_input(&self, text: &str) -> Result<LogicalForm, Failure> {
        let trimmed = text.trim();
        if let Some(lf) = trimmed.strip_prefix(LF_PREFIX) {
            parse_lf(lf).map_err(Failure::input)
        } else if trimmed.starts_with('(') {
            parse_lf(trimmed).map_err(Failure::input)
        } else {
            parse_sentence(trimmed, &self.lexicon, &self.ontology).map_err(Failure::input)
        }
    }

    fn analyze(&self, input: &str) -> Result<Outcome, Failure> {
        let lf = self.read_input(input)?;
        let analyzed = unifier::analyze(&lf, &self.ontology, &self.lexicon).map_err(|e| match e {
            AnalyzeError::TypeMismatch { .. }
            | AnalyzeError::ConstantCoercion { .. }
            | AnalyzeError::NoExpectations
            | AnalyzeError::Canon(CanonError::Unliftable { .. }) => Failure::semantic(e),
            _ => Failure::input(e),
        })?;
        let typed = analyzed.form.to_string();
        let trace = analyzed.trace.lines();
        let glosses: Vec<String> = if analyzed.coercions.is_empty() {
            Vec::new()
        } else {
            unifier::missing_text_report(&analyzed)
                .lines()
                .map(str::to_string)
                .collect()
        };

        let mut human = vec![format!("typed form: {typed}"), "trace:".to_string()];
        human.extend(trace.iter().map(|l| format!("  {l}")));
        human.push("missing text:".to_string());
        if glosses.is_empty() {
            human.push(format!("  {}", unifier::missing_text_report(&analyzed)));
        } else {
            human.extend(glosses.iter().map(|g| format!("  {g}")));
        }

        let mut record = Record::new("analyze", "ok");
        record.canonical = vec![typed];
        record.trace = trace;
        record.glosses = glosses;
        Ok(Outcome {
            code: EXIT_OK,
            record,
            human,
        })
    }

    fn aor(&self, adjectives: &[String], noun: &str) -> Result<Outcome, Failure> {
        let adjs: Vec<&str> = adjectives.iter().map(String::as_str).collect();
        let verdict = aor::check_order(&self.ontology, &self.lexicon, &adjs, noun).map_err(Failure::input)?;
        let phrase = adjs.iter().copied().chain([noun]).collect::<Vec<_>>().join(" ");
        let mut record = Record::new("aor", "");
        record.canonical = vec![phrase.clone()];
        let (code, line) = match &verdict {
            AorVerdict::Accepted {
                running_types,
                coercions,
            } => {
                record.status = "accepted".into();
                record.trace = running_types.clone();
                record.glosses = coercions
                    .iter()
                    .map(|c| format!("`{}` coerced via {}", adjs[c.at_index], c.relation))
                    .collect();
                (EXIT_OK, format!("Accepted: {}", running_types.join(" → ")))
            }
            AorVerdict::Violation {
                at_index,
                expected,
                running,
            } => {
                record.status = "violation".into();
                record.trace = vec![format!(
                    "{at_index}: {} expects {expected}, running type {running}",
                    adjs[*at_index]
                )];
                (
                    EXIT_SEMANTIC,
                    format!(
                        "Violation at index {at_index} (`{}`): expects {expected}, more specific than running type {running}",
                        adjs[*at_index]
                    ),
                )
            }
            AorVerdict::TypeFailure { at_index } => {
                record.status = "type-failure".into();
                record.trace = vec![format!("{at_index}: {} has no bridge", adjs[*at_index])];
                (
                    EXIT_SEMANTIC,
                    format!(
                        "Type failure at index {at_index} (`{}`): no salient relation applies",
                        adjs[*at_index]
                    ),
                )
            }
        };
        let mut human = vec![phrase, line];
        human.extend(record.glosses.iter().map(|g| format!("  {g}")));
        Ok(Outcome { code, record, human })
    }

    fn hempel(&self, h1: &str, h2: &str, observations: &[String]) -> Result<Outcome, Failure> {
        let side = |side: &'static str, text: &str| {
            self.read_input(text)
                .map_err(|f| Failure::input(format!("{side}: {}", f.message)))
        };
        let f1 = side("h1", h1)?;
        let f2 = side("h2", h2)?;
        let eq = confirm::equivalence_of(&f1, &f2, &self.ontology, &self.lexicon).map_err(Failure::input)?;

        let mut agree = true;
        let mut trace = Vec::new();
        for text in observations {
            let obs = Observation::parse(text, &self.ontology, &self.lexicon).map_err(Failure::input)?;
            let verdict = |h| confirm::evaluate(h, &obs, &self.ontology).map_err(|e: ConfirmError| Failure::input(e));
            let (v1, v2) = (verdict(&eq.first)?, verdict(&eq.second)?);
            agree &= v1 == v2;
            trace.push(format!("{obs} => H1 {v1}, H2 {v2}"));
        }

        let ok = eq.equivalent && agree;
        let mut human = vec![
            format!("H1: {}", eq.first),
            format!("H2: {}", eq.second),
            format!("equivalent: {}", eq.equivalent),
        ];
        human.extend(trace.iter().cloned());

        let status = match (eq.equivalent, agree) {
            (true, true) => "equivalent",
            (false, _) => "not-equivalent",
            (true, false) => "verdicts-disagree",
        };
        let mut record = Record::new("hempel", status);
        record.canonical = vec![eq.first.to_string(), eq.second.to_string()];
        record.trace = trace;
        Ok(Outcome {
            code: if ok { EXIT_OK } else { EXIT_SEMANTIC },
            record,
            human,
        })
    }

    fn unify(&self, t1: &str, t2: &str) -> Result<Outcome, Failure> {
        let outcome = unifier::unify_types(&self.ontology, &self.lexicon, t1, t2).map_err(Failure::input)?;
        let (status, code) = match outcome {
            UnificationOutcome::Unified(_) => ("unified", EXIT_OK),
            UnificationOutcome::Coerced { .. } => ("coerced", EXIT_OK),
            UnificationOutcome::Failed { .. } => ("failed", EXIT_SEMANTIC),
        };
        let line = outcome.to_string();
        let mut record = Record::new("unify", status);
        record.canonical = outcome.result().map(str::to_string).into_iter().collect();
        record.trace = vec![format!("({t1} • {t2})"), line.clone()];
        Ok(Outcome {
            code,
            record,
            human: vec![line],
        })
    }

    fn parse(&self, sentence: &str) -> Result<Outcome, Failure> {
        let lf = parse_sentence(sentence, &self.lexicon, &self.ontology).map_err(Failure::input)?;
        let mut record = Record::new("parse", "ok");
        record.canonical = vec![lf.to_string()];
        Ok(Outcome {
            code: EXIT_OK,
            record,
            human: vec![lf.to_string()],
        })
    }

    fn dispatch(&self, command: &Command) -> Result<Outcome, Failure> {
        match command {
            Command::Analyze { input } => self.analyze(input),
            Command::Aor { adjectives, noun } => self.aor(adjectives, noun),
            Command::Hempel { h1, h2, observe } => self.hempel(h1, h2, observe),
            Command::Unify { t1, t2 } => self.unify(t1, t2),
            Command::Parse { sentence } => self.parse(sentence),
        }
    }
}

fn emit_record(out: &mut dyn Write, record: &Record) {
    let line = serde_json::to_string(record).expect("record serializes");
    let _ = writeln!(out, "{line}");
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INPUT
                }
            };
        }
    };
    let command = cli.command.name();
    let result = Session::load(cli.ontology.as_deref(), cli.lexicon.as_deref(), cli.format)
        .and_then(|session| session.dispatch(&cli.command));

    match result {
        Ok(outcome) => {
            match cli.format {
                OutputMode::Human => {
                    for line in &outcome.human {
                        let _ = writeln!(out, "{line}");
                    }
                }
                OutputMode::Structured => emit_record(out, &outcome.record),
            }
            outcome.code
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            if cli.format == OutputMode::Structured {
                let status = if failure.code == EXIT_INPUT {
                    "input-error"
                } else {
                    "type-error"
                };
                let mut record = Record::new(command, status);
                record.trace = vec![failure.message];
                emit_record(out, &record);
            }
            failure.code
        }
    }
}
