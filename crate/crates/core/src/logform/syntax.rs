use thiserror::Error;

use super::{is_constant_name, LogicalForm, QuantKind, Term};

/// Positions are 1-based character columns.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LfParseError {
    #[error("column {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("column {pos}: unbound variable `{var}`")]
    UnboundVariable { pos: usize, var: String },
    #[error("column {pos}: variable `{var}` is already bound in an enclosing scope")]
    Rebound { pos: usize, var: String },
    #[error("column {pos}: unknown quantifier `{kind}`")]
    UnknownQuantifier { pos: usize, kind: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Comma,
    Bang,
    Arrow,
    DoubleColon,
    Ident(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::DoubleColon => "`::`".into(),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, LfParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => out.push((Tok::LParen, pos)),
            ')' => out.push((Tok::RParen, pos)),
            ',' => out.push((Tok::Comma, pos)),
            '!' => out.push((Tok::Bang, pos)),
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push((Tok::Arrow, pos));
                i += 1;
            }
            ':' if chars.get(i + 1) == Some(&':') => {
                out.push((Tok::DoubleColon, pos));
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..=i].iter().collect()), pos));
            }
            other => {
                return Err(LfParseError::Syntax {
                    pos,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
        i += 1;
    }
    out.push((Tok::Eof, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    scope: Vec<String>,
}

/// Parses the parenthesized surface syntax into a well-scoped form.
///
/// `(and φ)` with a single conjunct parses to `φ` itself, mirroring how
/// such a conjunction prints.
pub fn parse_lf(source: &str) -> Result<LogicalForm, LfParseError> {
    let mut p = Parser {
        toks: tokenize(source)?,
        at: 0,
        scope: Vec::new(),
    };
    let form = p.form()?;
    if p.peek(0) != &Tok::Eof {
        return Err(p.unexpected("end of input"));
    }
    Ok(form)
}

impl Parser {
    fn peek(&self, ahead: usize) -> &Tok {
        let i = (self.at + ahead).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at.min(self.toks.len() - 1)].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at < self.toks.len() - 1 {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> LfParseError {
        LfParseError::Syntax {
            pos: self.pos(),
            message: format!("expected {wanted}, found {}", self.peek(0).describe()),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), LfParseError> {
        if self.peek(0) == &tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn ident(&mut self, wanted: &str) -> Result<(String, usize), LfParseError> {
        let pos = self.pos();
        match self.peek(0) {
            Tok::Ident(s) => {
                let s = s.clone();
                self.bump();
                Ok((s, pos))
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    fn form(&mut self) -> Result<LogicalForm, LfParseError> {
        match self.peek(0) {
            Tok::LParen => {
                self.bump();
                self.paren()
            }
            Tok::Ident(_) if self.peek(1) == &Tok::LParen => self.atom(),
            _ => Err(self.unexpected("a formula")),
        }
    }

    // Called just after an opening parenthesis.
    fn paren(&mut self) -> Result<LogicalForm, LfParseError> {
        if let Some(kind) = self.quantifier_head()? {
            return self.quantified(kind);
        }
        match self.peek(0) {
            Tok::Ident(s) if s == "and" => {
                self.bump();
                let mut conjuncts = Vec::new();
                while self.peek(0) != &Tok::RParen {
                    conjuncts.push(self.form()?);
                }
                self.bump();
                Ok(if conjuncts.len() == 1 {
                    conjuncts.pop().unwrap()
                } else {
                    LogicalForm::And(conjuncts)
                })
            }
            Tok::Bang => {
                self.bump();
                let inner = self.form()?;
                self.expect(Tok::RParen)?;
                Ok(LogicalForm::negate(inner))
            }
            _ => {
                let left = self.form()?;
                if self.peek(0) == &Tok::Arrow {
                    self.bump();
                    let right = self.form()?;
                    self.expect(Tok::RParen)?;
                    Ok(LogicalForm::implies(left, right))
                } else {
                    self.expect(Tok::RParen)?;
                    Ok(left)
                }
            }
        }
    }

    /// Recognizes `E x`, `E! x`, `A x` (and reports `Q x` for unknown `Q`).
    fn quantifier_head(&mut self) -> Result<Option<QuantKind>, LfParseError> {
        let Tok::Ident(word) = self.peek(0).clone() else {
            return Ok(None);
        };
        let bang = self.peek(1) == &Tok::Bang;
        let var_at = if bang { 2 } else { 1 };
        if !matches!(self.peek(var_at), Tok::Ident(_)) || word == "and" {
            return Ok(None);
        }
        let kind = match (word.as_str(), bang) {
            ("E", false) => QuantKind::Exists,
            ("E", true) => QuantKind::ExistsUnique,
            ("A", false) => QuantKind::Forall,
            _ => {
                return Err(LfParseError::UnknownQuantifier {
                    pos: self.pos(),
                    kind: if bang { format!("{word}!") } else { word },
                })
            }
        };
        self.at += var_at;
        Ok(Some(kind))
    }

    fn quantified(&mut self, kind: QuantKind) -> Result<LogicalForm, LfParseError> {
        let (var, pos) = self.ident("a variable")?;
        if is_constant_name(&var) {
            return Err(LfParseError::Syntax {
                pos,
                message: format!("`{var}` is capitalized and cannot be bound"),
            });
        }
        if self.scope.contains(&var) {
            return Err(LfParseError::Rebound { pos, var });
        }
        let restriction = if self.peek(0) == &Tok::DoubleColon {
            self.bump();
            Some(self.ident("a type name")?.0)
        } else {
            None
        };
        self.expect(Tok::RParen)?;
        self.scope.push(var.clone());
        let body = self.form();
        self.scope.pop();
        Ok(LogicalForm::Quant {
            kind,
            var,
            restriction,
            body: Box::new(body?),
        })
    }

    fn atom(&mut self) -> Result<LogicalForm, LfParseError> {
        let (predicate, pos) = self.ident("a predicate")?;
        if predicate == "and" {
            return Err(LfParseError::Syntax {
                pos,
                message: "`and` is reserved".into(),
            });
        }
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        loop {
            let (name, pos) = self.ident("a term")?;
            let term = Term::from_ident(&name);
            if let Term::Var(v) = &term {
                if !self.scope.contains(v) {
                    return Err(LfParseError::UnboundVariable { pos, var: name });
                }
            }
            args.push(term);
            match self.bump() {
                Tok::Comma => continue,
                Tok::RParen => break,
                _ => {
                    self.at -= 1;
                    return Err(self.unexpected("`,` or `)`"));
                }
            }
        }
        Ok(LogicalForm::Atom { predicate, args })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unique_existential_with_restriction() {
        let f = parse_lf("(E! j :: person)(articulate(j))").unwrap();
        assert_eq!(
            f,
            LogicalForm::quant(
                QuantKind::ExistsUnique,
                "j",
                Some("person"),
                LogicalForm::atom("articulate", &["j"])
            )
        );
    }

    #[test]
    fn unrestricted_universal_implication() {
        let f = parse_lf("(A x)(raven(x) -> black(x))").unwrap();
        assert_eq!(
            f,
            LogicalForm::quant(
                QuantKind::Forall,
                "x",
                None,
                LogicalForm::implies(LogicalForm::atom("raven", &["x"]), LogicalForm::atom("black", &["x"]))
            )
        );
    }

    #[test]
    fn unbound_variable_is_rejected() {
        assert_eq!(
            parse_lf("(E x)(p(y))"),
            Err(LfParseError::UnboundVariable {
                pos: 9,
                var: "y".into()
            })
        );
    }

    #[test]
    fn unknown_quantifier() {
        assert!(matches!(
            parse_lf("(Q x)(p(x))"),
            Err(LfParseError::UnknownQuantifier { kind, .. }) if kind == "Q"
        ));
        assert!(matches!(
            parse_lf("(A! x)(p(x))"),
            Err(LfParseError::UnknownQuantifier { kind, .. }) if kind == "A!"
        ));
    }

    #[test]
    fn syntax_errors_have_positions() {
        assert!(matches!(
            parse_lf("(E x)(p(x)"),
            Err(LfParseError::Syntax { pos: 11, .. })
        ));
        assert!(matches!(parse_lf("p(Julie"), Err(LfParseError::Syntax { .. })));
        assert!(matches!(parse_lf("p()"), Err(LfParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_lf("(E x)(p(x)) q(x)"), Err(LfParseError::Syntax { .. })));
        assert!(matches!(
            parse_lf("(E x)(p(x) & q(x))"),
            Err(LfParseError::Syntax { .. })
        ));
        assert!(matches!(parse_lf("and(Julie)"), Err(LfParseError::Syntax { .. })));
    }

    #[test]
    fn rebinding_is_rejected() {
        assert!(matches!(
            parse_lf("(E x)(E x)(p(x))"),
            Err(LfParseError::Rebound { .. })
        ));
        // sibling scopes may reuse a name
        assert!(parse_lf("(and ((E x)(p(x))) ((E x)(q(x))))").is_ok());
    }

    #[test]
    fn constants_need_no_binder() {
        let f = parse_lf("want(Julie, Jon)").unwrap();
        assert_eq!(f, LogicalForm::atom("want", &["Julie", "Jon"]));
    }

    #[test]
    fn conjunction_forms() {
        let f = parse_lf("(E! j)(and (person(j)) (articulate(j)))").unwrap();
        let LogicalForm::Quant { body, .. } = f else { panic!() };
        assert!(matches!(*body, LogicalForm::And(ref cs) if cs.len() == 2));
        assert_eq!(
            parse_lf("(and (p(Julie)))").unwrap(),
            LogicalForm::atom("p", &["Julie"])
        );
        assert_eq!(parse_lf("(and)").unwrap(), LogicalForm::And(vec![]));
    }

    #[test]
    fn arrows_need_no_spaces() {
        let f = parse_lf("(A x)(raven(x)->black(x))").unwrap();
        assert_eq!(f.to_string(), "(A x)(raven(x) -> black(x))");
    }
}
