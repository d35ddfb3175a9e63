//! Typed logical forms.
//!
//! The surface syntax is fully parenthesized ASCII:
//!
//! ```text
//! (E! j :: person)(articulate(j))
//! (A x)((! black(x)) -> (! raven(x)))
//! (E o)(E b)(and (omelet(o)) (beer(b)) (loud(o)) (want(o, b)))
//! ```
//!
//! Identifiers starting with an uppercase letter inside atoms are
//! constants (proper names); everything else must be a bound variable.

mod canonical;
mod syntax;

use std::collections::BTreeSet;
use std::fmt;

pub use canonical::{canonicalize, CanonError, CanonicalForm};
pub use syntax::{parse_lf, LfParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuantKind {
    Exists,
    ExistsUnique,
    Forall,
}

impl QuantKind {
    pub fn symbol(self) -> &'static str {
        match self {
            QuantKind::Exists => "E",
            QuantKind::ExistsUnique => "E!",
            QuantKind::Forall => "A",
        }
    }

    pub fn is_existential(self) -> bool {
        matches!(self, QuantKind::Exists | QuantKind::ExistsUnique)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const(String),
}

impl Term {
    /// Classifies an identifier by case: `Julie` is a constant, `j` a variable.
    pub fn from_ident(ident: &str) -> Self {
        if is_constant_name(ident) {
            Term::Const(ident.to_string())
        } else {
            Term::Var(ident.to_string())
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Term::Var(n) | Term::Const(n) => n,
        }
    }

    pub fn is_var(&self, name: &str) -> bool {
        matches!(self, Term::Var(v) if v == name)
    }
}

pub(crate) fn is_constant_name(ident: &str) -> bool {
    ident.chars().next().is_some_and(|c| c.is_ascii_uppercase())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LogicalForm {
    Quant {
        kind: QuantKind,
        var: String,
        restriction: Option<String>,
        body: Box<LogicalForm>,
    },
    Atom {
        predicate: String,
        args: Vec<Term>,
    },
    /// Conjunction. The empty conjunction is `true`.
    And(Vec<LogicalForm>),
    Not(Box<LogicalForm>),
    Implies(Box<LogicalForm>, Box<LogicalForm>),
}

impl LogicalForm {
    pub fn quant(kind: QuantKind, var: &str, restriction: Option<&str>, body: LogicalForm) -> Self {
        LogicalForm::Quant {
            kind,
            var: var.to_string(),
            restriction: restriction.map(str::to_string),
            body: Box::new(body),
        }
    }

    /// Builds an atom, classifying each argument with [`Term::from_ident`].
    pub fn atom(predicate: &str, args: &[&str]) -> Self {
        LogicalForm::Atom {
            predicate: predicate.to_string(),
            args: args.iter().map(|a| Term::from_ident(a)).collect(),
        }
    }

    pub fn negate(inner: LogicalForm) -> Self {
        LogicalForm::Not(Box::new(inner))
    }

    pub fn implies(antecedent: LogicalForm, consequent: LogicalForm) -> Self {
        LogicalForm::Implies(Box::new(antecedent), Box::new(consequent))
    }

    /// Unary atom `predicate(var)`.
    pub fn is_unary_on(&self, var: &str) -> Option<&str> {
        match self {
            LogicalForm::Atom { predicate, args } if args.len() == 1 && args[0].is_var(var) => Some(predicate),
            _ => None,
        }
    }

    /// All atoms in pre-order, left to right.
    pub fn atoms(&self) -> Vec<(&str, &[Term])> {
        let mut out = Vec::new();
        self.visit(&mut |f| {
            if let LogicalForm::Atom { predicate, args } = f {
                out.push((predicate.as_str(), args.as_slice()));
            }
        });
        out
    }

    /// Bound variables with their restrictions, in binding (pre-)order.
    pub fn binders(&self) -> Vec<(QuantKind, &str, Option<&str>)> {
        let mut out = Vec::new();
        self.visit(&mut |f| {
            if let LogicalForm::Quant {
                kind, var, restriction, ..
            } = f
            {
                out.push((*kind, var.as_str(), restriction.as_deref()));
            }
        });
        out
    }

    pub fn constants(&self) -> BTreeSet<&str> {
        self.atoms()
            .into_iter()
            .flat_map(|(_, args)| args.iter())
            .filter_map(|t| match t {
                Term::Const(c) => Some(c.as_str()),
                Term::Var(_) => None,
            })
            .collect()
    }

    pub fn predicates(&self) -> BTreeSet<&str> {
        self.atoms().into_iter().map(|(p, _)| p).collect()
    }

    /// Quantifier nesting plus connective depth; an atom has depth 1.
    pub fn depth(&self) -> usize {
        match self {
            LogicalForm::Atom { .. } => 1,
            LogicalForm::Quant { body, .. } => 1 + body.depth(),
            LogicalForm::Not(inner) => 1 + inner.depth(),
            LogicalForm::Implies(a, b) => 1 + a.depth().max(b.depth()),
            LogicalForm::And(cs) => 1 + cs.iter().map(LogicalForm::depth).max().unwrap_or(0),
        }
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a LogicalForm)) {
        f(self);
        match self {
            LogicalForm::Atom { .. } => {}
            LogicalForm::Quant { body, .. } => body.visit(f),
            LogicalForm::Not(inner) => inner.visit(f),
            LogicalForm::Implies(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            LogicalForm::And(cs) => cs.iter().for_each(|c| c.visit(f)),
        }
    }

    /// Printed form, see the module docs. `pretty` never rewrites.
    pub fn pretty(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// Atoms are wrapped in parentheses when they stand as a quantifier body or
// a conjunct; compound forms carry their own.
struct Grouped<'a>(&'a LogicalForm);

impl fmt::Display for Grouped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            atom @ LogicalForm::Atom { .. } => write!(f, "({atom})"),
            LogicalForm::And(cs) if cs.len() == 1 => write!(f, "{}", Grouped(&cs[0])),
            other => write!(f, "{other}"),
        }
    }
}

impl fmt::Display for LogicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicalForm::Quant {
                kind,
                var,
                restriction,
                body,
            } => {
                write!(f, "({} {var}", kind.symbol())?;
                if let Some(ty) = restriction {
                    write!(f, " :: {ty}")?;
                }
                write!(f, "){}", Grouped(body))
            }
            LogicalForm::Atom { predicate, args } => {
                write!(f, "{predicate}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            LogicalForm::And(cs) if cs.len() == 1 => write!(f, "{}", cs[0]),
            LogicalForm::And(cs) => {
                f.write_str("(and")?;
                for c in cs {
                    write!(f, " {}", Grouped(c))?;
                }
                f.write_str(")")
            }
            LogicalForm::Not(inner) => write!(f, "(! {inner})"),
            LogicalForm::Implies(a, b) => write!(f, "({a} -> {b})"),
        }
    }
}

/// Structural equality up to consistent renaming of bound variables.
pub fn alpha_equivalent(a: &LogicalForm, b: &LogicalForm) -> bool {
    let mut env = Vec::new();
    alpha_eq(a, b, &mut env)
}

fn alpha_eq<'a>(a: &'a LogicalForm, b: &'a LogicalForm, env: &mut Vec<(&'a str, &'a str)>) -> bool {
    use LogicalForm::*;
    match (a, b) {
        (
            Quant {
                kind: k1,
                var: v1,
                restriction: r1,
                body: b1,
            },
            Quant {
                kind: k2,
                var: v2,
                restriction: r2,
                body: b2,
            },
        ) => {
            if k1 != k2 || r1 != r2 {
                return false;
            }
            env.push((v1, v2));
            let eq = alpha_eq(b1, b2, env);
            env.pop();
            eq
        }
        (
            Atom {
                predicate: p1,
                args: a1,
            },
            Atom {
                predicate: p2,
                args: a2,
            },
        ) => p1 == p2 && a1.len() == a2.len() && a1.iter().zip(a2).all(|(x, y)| term_eq(x, y, env)),
        (And(c1), And(c2)) => c1.len() == c2.len() && c1.iter().zip(c2).all(|(x, y)| alpha_eq(x, y, env)),
        (Not(x), Not(y)) => alpha_eq(x, y, env),
        (Implies(x1, y1), Implies(x2, y2)) => alpha_eq(x1, x2, env) && alpha_eq(y1, y2, env),
        _ => false,
    }
}

fn term_eq(a: &Term, b: &Term, env: &[(&str, &str)]) -> bool {
    match (a, b) {
        (Term::Const(x), Term::Const(y)) => x == y,
        (Term::Var(x), Term::Var(y)) => {
            let left = env.iter().rposition(|(l, _)| l == x);
            let right = env.iter().rposition(|(_, r)| r == y);
            match (left, right) {
                (Some(i), Some(j)) => i == j,
                (None, None) => x == y,
                _ => false,
            }
        }
        _ => false,
    }
}
