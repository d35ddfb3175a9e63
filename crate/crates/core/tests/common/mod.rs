//! Generators and brute-force oracles shared by the property tests and the
//! acceptance runner. The oracles read the fixture text directly and never
//! call the library's query methods.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use ontologik::aor::{AorCoercion, AorVerdict};
use ontologik::fixtures::{REFERENCE_LEXICON, REFERENCE_ONTOLOGY};
use ontologik::{LogicalForm, QuantKind};
use proptest::prelude::*;

// ---------------------------------------------------------------- trees

/// A tree as a parent table; `parents[i] < i` for every non-root node.
#[derive(Debug, Clone)]
pub struct RandomTree {
    pub parents: Vec<Option<usize>>,
}

impl RandomTree {
    pub fn name(i: usize) -> String {
        format!("t{i}")
    }

    pub fn source(&self) -> String {
        let mut s = String::new();
        for (i, p) in self.parents.iter().enumerate() {
            match p {
                None => s.push_str(&format!("type {}\n", Self::name(i))),
                Some(p) => s.push_str(&format!("type {} isa {}\n", Self::name(i), Self::name(*p))),
            }
        }
        s
    }

    pub fn oracle(&self) -> TreeOracle {
        let mut ancestors = BTreeMap::new();
        for i in 0..self.parents.len() {
            let mut set = BTreeSet::new();
            let mut cur = Some(i);
            while let Some(c) = cur {
                set.insert(Self::name(c));
                cur = self.parents[c];
            }
            ancestors.insert(Self::name(i), set);
        }
        TreeOracle { ancestors }
    }
}

pub fn random_tree(max_nodes: usize) -> impl Strategy<Value = RandomTree> {
    (1..=max_nodes)
        .prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<Option<usize>>> = (0..n)
                .map(|i| {
                    if i == 0 {
                        Just(None).boxed()
                    } else {
                        (0..i).prop_map(Some).boxed()
                    }
                })
                .collect();
            parents
        })
        .prop_map(|parents| RandomTree { parents })
}

/// Reflexive ancestor sets, computed by walking parent links.
#[derive(Debug, Clone)]
pub struct TreeOracle {
    pub ancestors: BTreeMap<String, BTreeSet<String>>,
}

impl TreeOracle {
    /// Reads `type X [isa Y]` lines.
    pub fn from_source(src: &str) -> Self {
        let mut parent: BTreeMap<String, Option<String>> = BTreeMap::new();
        for line in src
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
        {
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["type", t] => parent.insert(t.to_string(), None),
                ["type", t, "isa", p] => parent.insert(t.to_string(), Some(p.to_string())),
                _ => panic!("oracle cannot read `{line}`"),
            };
        }
        let mut ancestors = BTreeMap::new();
        for t in parent.keys() {
            let mut set = BTreeSet::new();
            let mut cur = Some(t.clone());
            while let Some(c) = cur {
                cur = parent[&c].clone();
                set.insert(c);
            }
            ancestors.insert(t.clone(), set);
        }
        TreeOracle { ancestors }
    }

    pub fn reference() -> Self {
        Self::from_source(REFERENCE_ONTOLOGY)
    }

    pub fn types(&self) -> Vec<String> {
        self.ancestors.keys().cloned().collect()
    }

    pub fn subsumes(&self, general: &str, specific: &str) -> bool {
        self.ancestors[specific].contains(general)
    }

    pub fn comparable(&self, a: &str, b: &str) -> bool {
        self.subsumes(a, b) || self.subsumes(b, a)
    }

    /// Deepest common ancestor: the shared ancestor with the most ancestors.
    pub fn lub(&self, a: &str, b: &str) -> String {
        self.ancestors[a]
            .intersection(&self.ancestors[b])
            .max_by_key(|t| self.ancestors[*t].len())
            .expect("trees share a root")
            .clone()
    }
}

// ---------------------------------------------------------------- lexicon

/// `rel NAME(domain, range)` lines of a lexicon, in declaration order.
pub fn relations_of(src: &str) -> Vec<(String, String, String)> {
    src.lines()
        .filter_map(|l| l.trim().strip_prefix("rel "))
        .map(|rest| {
            let (name, args) = rest.split_once('(').unwrap();
            let args = args.trim_end_matches(')');
            let (d, r) = args.split_once(',').unwrap();
            (name.trim().to_string(), d.trim().to_string(), r.trim().to_string())
        })
        .collect()
}

/// The reference lexicon plus one adjective `a_<type>` per ontology type.
pub fn extended_lexicon_source() -> String {
    let mut src = REFERENCE_LEXICON.to_string();
    for t in TreeOracle::reference().types() {
        src.push_str(&format!("pred a_{t}({t})\n"));
    }
    src
}

// ---------------------------------------------------------------- aor

/// Verdict characterization: with `s = [noun, e_n-1, ..., e_0]` each step
/// `s[i] -> s[i+1]` must generalize, or be incomparable and bridged by a
/// relation. The innermost bad step decides the verdict.
pub fn aor_oracle(
    tree: &TreeOracle,
    relations: &[(String, String, String)],
    expectations: &[String],
    noun: &str,
) -> AorVerdict {
    let n = expectations.len();
    let mut s = vec![noun.to_string()];
    s.extend(expectations.iter().rev().cloned());
    let mut coercions = Vec::new();
    for i in 0..n {
        let (from, to) = (&s[i], &s[i + 1]);
        let at_index = n - 1 - i;
        if tree.subsumes(to, from) {
            continue;
        }
        if tree.subsumes(from, to) {
            return AorVerdict::Violation {
                at_index,
                expected: to.clone(),
                running: from.clone(),
            };
        }
        let mut bridges: Vec<&(String, String, String)> = relations
            .iter()
            .filter(|(_, d, r)| tree.comparable(d, to) && tree.comparable(r, from))
            .collect();
        bridges.sort_by_key(|(_, d, r)| (r != from, d != to));
        match bridges.first() {
            Some((name, _, _)) => coercions.push(AorCoercion {
                at_index,
                relation: name.clone(),
            }),
            None => return AorVerdict::TypeFailure { at_index },
        }
    }
    AorVerdict::Accepted {
        running_types: s,
        coercions,
    }
}

// ---------------------------------------------------------------- forms

pub const UNARY: &[&str] = &["articulate", "loud", "beautiful", "red", "black"];
pub const BINARY: &[&str] = &["want", "EATING"];
pub const CONSTANTS: &[&str] = &["Julie", "Jon"];

/// Scope-free skeleton; variables are resolved against the enclosing
/// binders when the skeleton is built into a form.
#[derive(Debug, Clone)]
pub enum Shape {
    Unary(usize, usize),
    Binary(usize, usize, usize),
    TypeAtom(usize, usize),
    Not(Box<Shape>),
    And(Vec<Shape>),
    Implies(Box<Shape>, Box<Shape>),
    Quant(u8, Option<usize>, Box<Shape>),
}

fn leaf() -> impl Strategy<Value = Shape> {
    prop_oneof![
        4 => (0..UNARY.len(), any::<usize>()).prop_map(|(p, a)| Shape::Unary(p, a)),
        2 => (0..BINARY.len(), any::<usize>(), any::<usize>()).prop_map(|(p, a, b)| Shape::Binary(p, a, b)),
        1 => (any::<usize>(), any::<usize>()).prop_map(|(t, a)| Shape::TypeAtom(t, a)),
    ]
}

pub fn shape() -> impl Strategy<Value = Shape> {
    leaf().prop_recursive(6, 96, 2, |inner| {
        prop_oneof![
            1 => inner.clone().prop_map(|s| Shape::Not(Box::new(s))),
            1 => prop_oneof![Just(Vec::new()), prop::collection::vec(inner.clone(), 2..=3)].prop_map(Shape::And),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Shape::Implies(Box::new(a), Box::new(b))),
            3 => (0u8..3, prop::option::of(any::<usize>()), inner).prop_map(|(k, r, b)| Shape::Quant(k, r, Box::new(b))),
        ]
    })
}

pub struct FormBuilder {
    pub types: Vec<String>,
    fresh: usize,
}

impl FormBuilder {
    pub fn new(types: Vec<String>) -> Self {
        FormBuilder { types, fresh: 0 }
    }

    fn term(&self, scope: &[String], pick: usize) -> String {
        let k = pick % (scope.len() + CONSTANTS.len());
        match scope.get(k) {
            Some(v) => v.clone(),
            None => CONSTANTS[k - scope.len()].to_string(),
        }
    }

    pub fn build(&mut self, shape: &Shape, scope: &mut Vec<String>) -> LogicalForm {
        match shape {
            Shape::Unary(p, a) => LogicalForm::atom(UNARY[*p], &[&self.term(scope, *a)]),
            Shape::Binary(p, a, b) => LogicalForm::atom(BINARY[*p], &[&self.term(scope, *a), &self.term(scope, *b)]),
            Shape::TypeAtom(t, a) => LogicalForm::atom(&self.types[t % self.types.len()], &[&self.term(scope, *a)]),
            Shape::Not(s) => LogicalForm::negate(self.build(s, scope)),
            Shape::And(cs) => LogicalForm::And(cs.iter().map(|c| self.build(c, scope)).collect()),
            Shape::Implies(a, b) => LogicalForm::implies(self.build(a, scope), self.build(b, scope)),
            Shape::Quant(k, r, body) => {
                let kind = [QuantKind::Exists, QuantKind::ExistsUnique, QuantKind::Forall][*k as usize];
                let var = format!("v{}", self.fresh);
                self.fresh += 1;
                let restriction = r.map(|r| self.types[r % self.types.len()].clone());
                scope.push(var.clone());
                let body = self.build(body, scope);
                scope.pop();
                LogicalForm::quant(kind, &var, restriction.as_deref(), body)
            }
        }
    }
}

/// Well-scoped forms over the reference vocabulary, depth at most 6.
pub fn reference_form() -> impl Strategy<Value = LogicalForm> {
    let types = TreeOracle::reference().types();
    shape()
        .prop_map(move |s| FormBuilder::new(types.clone()).build(&s, &mut Vec::new()))
        .prop_filter("depth at most 6", |lf| lf.depth() <= 6)
}
