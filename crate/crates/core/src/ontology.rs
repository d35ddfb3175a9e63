//! The type tree that holds every ontological concept.
//!
//! An [`Ontology`] is a rooted single-inheritance tree of lowercase type
//! names connected by IsA edges. It answers subsumption, comparison and
//! least-upper-bound queries and is immutable once loaded.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OntologyError {
    #[error("line {line}: malformed declaration `{text}`")]
    Syntax { line: usize, text: String },
    #[error("line {line}: invalid type name `{name}` (expected a lowercase token)")]
    InvalidName { line: usize, name: String },
    #[error("line {line}: duplicate type `{name}`")]
    Duplicate { line: usize, name: String },
    #[error("line {line}: type `{name}` already has parent `{existing}`, cannot add `{parent}`")]
    MultipleParents {
        line: usize,
        name: String,
        existing: String,
        parent: String,
    },
    #[error("line {line}: declaring `{name}` isa `{parent}` creates a cycle")]
    Cycle { line: usize, name: String, parent: String },
    #[error("line {line}: unknown parent `{parent}` for `{name}`")]
    UnknownParent { line: usize, name: String, parent: String },
    #[error("line {line}: second root `{name}` (root `{root}` declared earlier)")]
    MultipleRoots { line: usize, name: String, root: String },
    #[error("line {line}: no root type declared")]
    MissingRoot { line: usize },
    #[error("unknown type `{0}`")]
    UnknownType(String),
}

/// How two types relate under IsA. Exactly one variant holds for any pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubsumptionVerdict {
    Equal,
    FirstSubsumesSecond,
    SecondSubsumesFirst,
    Incomparable,
}

impl SubsumptionVerdict {
    /// The verdict obtained by swapping the two arguments.
    pub fn mirrored(self) -> Self {
        match self {
            Self::FirstSubsumesSecond => Self::SecondSubsumesFirst,
            Self::SecondSubsumesFirst => Self::FirstSubsumesSecond,
            other => other,
        }
    }

    pub fn is_comparable(self) -> bool {
        self != Self::Incomparable
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Node {
    name: String,
    parent: Option<usize>,
    depth: usize,
}

/// A validated type tree.
///
/// Nodes are stored in declaration order, so every parent index is smaller
/// than its child's index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ontology {
    nodes: Vec<Node>,
    index: HashMap<String, usize>,
}

pub(crate) fn is_type_token(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl Ontology {
    /// Parses and validates the line-oriented ontology format:
    ///
    /// ```text
    /// type entity
    /// type physical isa entity
    /// ```
    pub fn load(source: &str) -> Result<Self, OntologyError> {
        let mut nodes: Vec<Node> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut root: Option<usize> = None;
        let mut last_line = 0;

        for (i, raw) in source.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let words: Vec<&str> = text.split_whitespace().collect();
            let (name, parent) = match words.as_slice() {
                ["type", name] => (*name, None),
                ["type", name, "isa", parent] => (*name, Some(*parent)),
                _ => {
                    return Err(OntologyError::Syntax {
                        line,
                        text: text.to_string(),
                    })
                }
            };
            for token in std::iter::once(name).chain(parent) {
                if !is_type_token(token) {
                    return Err(OntologyError::InvalidName {
                        line,
                        name: token.to_string(),
                    });
                }
            }

            if let Some(&existing) = index.get(name) {
                return Err(redeclaration_error(&nodes, &index, line, existing, parent));
            }

            let parent_idx = match parent {
                None => {
                    if let Some(r) = root {
                        return Err(OntologyError::MultipleRoots {
                            line,
                            name: name.to_string(),
                            root: nodes[r].name.clone(),
                        });
                    }
                    root = Some(nodes.len());
                    None
                }
                Some(p) if p == name => {
                    return Err(OntologyError::Cycle {
                        line,
                        name: name.to_string(),
                        parent: p.to_string(),
                    })
                }
                Some(p) => match index.get(p) {
                    Some(&pi) => Some(pi),
                    None => {
                        return Err(OntologyError::UnknownParent {
                            line,
                            name: name.to_string(),
                            parent: p.to_string(),
                        })
                    }
                },
            };
            let depth = parent_idx.map_or(0, |p| nodes[p].depth + 1);
            index.insert(name.to_string(), nodes.len());
            nodes.push(Node {
                name: name.to_string(),
                parent: parent_idx,
                depth,
            });
        }

        if root.is_none() {
            return Err(OntologyError::MissingRoot { line: last_line });
        }
        Ok(Self { nodes, index })
    }

    pub fn root(&self) -> &str {
        &self.nodes[0].name
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Type names in declaration order (root first).
    pub fn types(&self) -> impl Iterator<Item = &str> + '_ {
        self.nodes.iter().map(|n| n.name.as_str())
    }

    pub fn parent(&self, name: &str) -> Result<Option<&str>, OntologyError> {
        let i = self.id(name)?;
        Ok(self.nodes[i].parent.map(|p| self.nodes[p].name.as_str()))
    }

    /// Number of IsA edges between `name` and the root.
    pub fn depth(&self, name: &str) -> Result<usize, OntologyError> {
        Ok(self.nodes[self.id(name)?].depth)
    }

    /// The parent path from `name` up to the root, `name` included.
    pub fn ancestors(&self, name: &str) -> Result<Vec<&str>, OntologyError> {
        let mut cur = Some(self.id(name)?);
        let mut out = Vec::new();
        while let Some(i) = cur {
            out.push(self.nodes[i].name.as_str());
            cur = self.nodes[i].parent;
        }
        Ok(out)
    }

    /// True iff `general` lies on the parent path from `specific` to the
    /// root (reflexive).
    pub fn subsumes(&self, general: &str, specific: &str) -> Result<bool, OntologyError> {
        let g = self.id(general)?;
        let s = self.id(specific)?;
        Ok(self.subsumes_id(g, s))
    }

    pub fn compare(&self, t1: &str, t2: &str) -> Result<SubsumptionVerdict, OntologyError> {
        let a = self.id(t1)?;
        let b = self.id(t2)?;
        Ok(if a == b {
            SubsumptionVerdict::Equal
        } else if self.subsumes_id(a, b) {
            SubsumptionVerdict::FirstSubsumesSecond
        } else if self.subsumes_id(b, a) {
            SubsumptionVerdict::SecondSubsumesFirst
        } else {
            SubsumptionVerdict::Incomparable
        })
    }

    /// Deepest type subsuming both arguments.
    pub fn least_upper_bound(&self, t1: &str, t2: &str) -> Result<&str, OntologyError> {
        let mut a = self.id(t1)?;
        let mut b = self.id(t2)?;
        while self.nodes[a].depth > self.nodes[b].depth {
            a = self.nodes[a].parent.expect("non-root has a parent");
        }
        while self.nodes[b].depth > self.nodes[a].depth {
            b = self.nodes[b].parent.expect("non-root has a parent");
        }
        while a != b {
            a = self.nodes[a].parent.expect("non-root has a parent");
            b = self.nodes[b].parent.expect("non-root has a parent");
        }
        Ok(&self.nodes[a].name)
    }

    /// The more specific of two comparable types, `None` if incomparable.
    pub fn more_specific<'a>(&self, t1: &'a str, t2: &'a str) -> Result<Option<&'a str>, OntologyError> {
        Ok(match self.compare(t1, t2)? {
            SubsumptionVerdict::Equal | SubsumptionVerdict::SecondSubsumesFirst => Some(t1),
            SubsumptionVerdict::FirstSubsumesSecond => Some(t2),
            SubsumptionVerdict::Incomparable => None,
        })
    }

    fn id(&self, name: &str) -> Result<usize, OntologyError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| OntologyError::UnknownType(name.to_string()))
    }

    fn subsumes_id(&self, general: usize, specific: usize) -> bool {
        let target = self.nodes[general].depth;
        let mut cur = specific;
        while self.nodes[cur].depth > target {
            cur = self.nodes[cur].parent.expect("non-root has a parent");
        }
        cur == general
    }
}

fn redeclaration_error(
    nodes: &[Node],
    index: &HashMap<String, usize>,
    line: usize,
    existing: usize,
    parent: Option<&str>,
) -> OntologyError {
    let name = nodes[existing].name.clone();
    let Some(parent) = parent else {
        return OntologyError::Duplicate { line, name };
    };
    // A parent that already descends from the redeclared type closes a loop.
    let mut cur = index.get(parent).copied();
    while let Some(i) = cur {
        if i == existing {
            return OntologyError::Cycle {
                line,
                name,
                parent: parent.to_string(),
            };
        }
        cur = nodes[i].parent;
    }
    match nodes[existing].parent {
        Some(p) if nodes[p].name == parent => OntologyError::Duplicate { line, name },
        Some(p) => OntologyError::MultipleParents {
            line,
            name,
            existing: nodes[p].name.clone(),
            parent: parent.to_string(),
        },
        None => OntologyError::MultipleParents {
            line,
            name,
            existing: "(root)".to_string(),
            parent: parent.to_string(),
        },
    }
}

impl fmt::Display for Ontology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for node in &self.nodes {
            match node.parent {
                None => writeln!(f, "type {}", node.name)?,
                Some(p) => writeln!(f, "type {} isa {}", node.name, self.nodes[p].name)?,
            }
        }
        Ok(())
    }
}
