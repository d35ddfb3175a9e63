//! Acceptance runner: one PASS/FAIL line per criterion.
//!
//! Tolerances: structural checks are exact; property suites allow 0
//! failures; each worked-example criterion must finish within 1 s.

mod common;

use std::time::{Duration, Instant};

use common::{aor_oracle, extended_lexicon_source, random_tree, reference_form, relations_of, TreeOracle};
use ontologik::aor::check_order;
use ontologik::confirm::{equivalence_of, evaluate, ConfirmationVerdict, Observation};
use ontologik::nlparser::parse_sentence;
use ontologik::unifier::{analyze, unify_types, TraceStep, UnificationOutcome};
use ontologik::{alpha_equivalent, canonicalize, cli, fixtures, parse_lf, Lexicon, LogicalForm, Ontology};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const TIME_LIMIT: Duration = Duration::from_secs(1);
const TREES: usize = 200;
const MAX_TREE_NODES: usize = 50;
const FORMS: usize = 500;
const AOR_DRAWS: usize = 500;

struct Check {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Check {
    Check {
        ok,
        detail: detail.into(),
    }
}

fn structured(args: &[&str]) -> (i32, serde_json::Value) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = ["ontologik", "--format", "structured"]
        .into_iter()
        .chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    let line = String::from_utf8(out).unwrap();
    (
        code,
        serde_json::from_str(line.trim()).unwrap_or(serde_json::Value::Null),
    )
}

fn strings(v: &serde_json::Value) -> Vec<String> {
    v.as_array()
        .map(|a| a.iter().filter_map(|s| s.as_str().map(str::to_string)).collect())
        .unwrap_or_default()
}

fn runner() -> TestRunner {
    TestRunner::new_with_rng(Config::default(), TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn sample<S: Strategy>(strategy: &S, runner: &mut TestRunner, n: usize) -> Vec<S::Value> {
    (0..n).map(|_| strategy.new_tree(runner).unwrap().current()).collect()
}

fn sentence_equivalence() -> Check {
    let expected = parse_lf("(E! j :: person)(articulate(j))").unwrap();
    let mut forms = Vec::new();
    for s in ["Julie is an articulate person", "Julie is articulate"] {
        let (code, rec) = structured(&["analyze", s]);
        let Some(lf) = strings(&rec["canonical"]).first().and_then(|c| parse_lf(c).ok()) else {
            return check(false, format!("no typed form for `{s}`"));
        };
        if code != 0 {
            return check(false, format!("`{s}` exit {code}"));
        }
        forms.push(lf);
    }
    let ok = forms.iter().all(|f| *f == expected) && alpha_equivalent(&forms[0], &forms[1]);
    check(ok, format!("both analyze to {}", forms[0]))
}

fn loud_omelet() -> Check {
    let sentence = "The loud omelet wants another beer";
    let (code, rec) = structured(&["analyze", sentence]);
    let glosses = strings(&rec["glosses"]);
    let gloss_ok = glosses.iter().any(|g| g.contains("person") && g.contains("omelet"));

    let ont = fixtures::reference_ontology();
    let lex = fixtures::reference_lexicon();
    let analyzed = analyze(&parse_sentence(sentence, &lex, &ont).unwrap(), &ont, &lex).unwrap();
    let binders = analyzed.form.binders();
    let note = &analyzed.coercions[0];
    let referent_ok = binders
        .iter()
        .any(|(_, v, r)| *v == note.variable && *r == Some("person"));
    let relatum_ok = binders
        .iter()
        .any(|(_, v, r)| *v == note.introduced && *r == Some("omelet"));
    let eating_ok = analyzed.form.atoms().iter().any(|(p, args)| {
        *p == "EATING"
            && args
                .iter()
                .map(|t| t.name())
                .eq([note.variable.as_str(), note.introduced.as_str()])
    });
    let reductions: Vec<String> = analyzed
        .trace
        .for_subject(&note.variable)
        .filter(|s| matches!(s, TraceStep::Unify { .. }))
        .map(|s| s.to_string())
        .collect();
    let trace_ok = reductions.len() == 2
        && reductions[0] == "(animal • person) → person"
        && reductions[1].starts_with("(omelet • person) → coerced");
    let cli_trace_ok = strings(&rec["trace"]) == analyzed.trace.lines();
    check(
        code == 0 && gloss_ok && referent_ok && relatum_ok && eating_ok && trace_ok && cli_trace_ok,
        format!("gloss `{}`; reductions {:?}", glosses.join("; "), reductions),
    )
}

fn adjective_order() -> Check {
    let (ok_code, ok_rec) = structured(&["aor", "beautiful", "red", "--noun", "car"]);
    let chain = strings(&ok_rec["trace"]);
    let (bad_code, bad_rec) = structured(&["aor", "red", "beautiful", "--noun", "car"]);
    let violation = strings(&bad_rec["trace"]);
    let index_ok = violation.first().is_some_and(|l| l.starts_with("0: red "));
    check(
        ok_code == 0
            && chain == ["car", "physical", "entity"]
            && bad_code == 2
            && bad_rec["status"] == "violation"
            && index_ok,
        format!("chain {}; violation {:?}", chain.join("→"), violation),
    )
}

fn raven_equivalence() -> Check {
    let (code, rec) = structured(&[
        "hempel",
        "--h1",
        "All ravens are black",
        "--h2",
        "All non-black things are non-ravens",
    ]);
    let expected = parse_lf("(A x :: raven)(black(x))").unwrap();
    let canon: Vec<LogicalForm> = strings(&rec["canonical"])
        .iter()
        .filter_map(|c| parse_lf(c).ok())
        .collect();
    let ok = code == 0
        && rec["status"] == "equivalent"
        && canon.len() == 2
        && canon.iter().all(|c| alpha_equivalent(c, &expected));
    check(ok, format!("canonical {:?}", strings(&rec["canonical"])))
}

fn paradox_dissolution() -> Check {
    let ont = fixtures::reference_ontology();
    let lex = fixtures::reference_lexicon();
    let h1 = parse_sentence("All ravens are black", &lex, &ont).unwrap();
    let h2 = parse_sentence("All non-black things are non-ravens", &lex, &ont).unwrap();
    let eq = equivalence_of(&h1, &h2, &ont, &lex).unwrap();

    let mut cases = 0;
    let mut agree = 0;
    for t in TreeOracle::reference().types() {
        for pred in ["black", "red", ""] {
            for value in [true, false] {
                let text = if pred.is_empty() {
                    format!("{t}:")
                } else {
                    format!("{t}: {pred}={value}")
                };
                let obs = Observation::parse(&text, &ont, &lex).unwrap();
                cases += 1;
                if evaluate(&eq.first, &obs, &ont).unwrap() == evaluate(&eq.second, &obs, &ont).unwrap() {
                    agree += 1;
                }
            }
        }
    }
    let ball = Observation::parse("ball: red", &ont, &lex).unwrap();
    let ball_neutral = evaluate(&eq.first, &ball, &ont).unwrap() == ConfirmationVerdict::Neutral
        && evaluate(&eq.second, &ball, &ont).unwrap() == ConfirmationVerdict::Neutral;
    check(
        agree == cases && ball_neutral,
        format!("{agree}/{cases} verdict pairs agree; ball: red neutral for both = {ball_neutral}"),
    )
}

fn suite_subsumption(runner: &mut TestRunner) -> Check {
    let mut failures = 0;
    let trees = sample(&random_tree(MAX_TREE_NODES), runner, TREES);
    let mut pairs = 0;
    for tree in &trees {
        let ont = Ontology::load(&tree.source()).unwrap();
        let oracle = tree.oracle();
        let types = oracle.types();
        for a in &types {
            for b in &types {
                pairs += 1;
                let ab = ont.subsumes(a, b).unwrap();
                let ba = ont.subsumes(b, a).unwrap();
                let reflexive = ont.subsumes(a, a).unwrap();
                let antisymmetric = !(ab && ba) || a == b;
                let lub = ont.least_upper_bound(a, b).unwrap();
                let bounds = ont.subsumes(lub, a).unwrap() && ont.subsumes(lub, b).unwrap();
                if ab != oracle.subsumes(a, b) || !reflexive || !antisymmetric || !bounds || lub != oracle.lub(a, b) {
                    failures += 1;
                }
            }
            // transitivity along the ancestor chain
            let chain = ont.ancestors(a).unwrap();
            if chain.windows(2).any(|w| !ont.subsumes(w[1], a).unwrap()) {
                failures += 1;
            }
        }
    }
    check(
        failures == 0,
        format!("{TREES} trees, {pairs} pairs, {failures} failures"),
    )
}

fn suite_round_trip(forms: &[LogicalForm]) -> Check {
    let max_depth = forms.iter().map(LogicalForm::depth).max().unwrap_or(0);
    let failures = forms
        .iter()
        .filter(|lf| parse_lf(&lf.to_string()).ok().as_ref() != Some(*lf))
        .count();
    check(
        failures == 0 && max_depth <= 6,
        format!("{} forms, max depth {max_depth}, {failures} failures", forms.len()),
    )
}

fn suite_idempotence(forms: &[LogicalForm]) -> Check {
    let ont = fixtures::reference_ontology();
    let lex = fixtures::reference_lexicon();
    let mut canonical = 0;
    let mut failures = 0;
    for lf in forms {
        if let Ok(once) = canonicalize(lf, &ont, &lex) {
            canonical += 1;
            if canonicalize(once.form(), &ont, &lex).ok().as_ref() != Some(&once) {
                failures += 1;
            }
        }
    }
    check(
        failures == 0,
        format!("{canonical}/{} forms canonicalize, {failures} failures", forms.len()),
    )
}

fn suite_aor(runner: &mut TestRunner) -> Check {
    let ont = fixtures::reference_ontology();
    let src = extended_lexicon_source();
    let lex = Lexicon::load(&src, &ont).unwrap();
    let relations = relations_of(&src);
    let oracle = TreeOracle::reference();
    let pick = proptest::sample::select(oracle.types());
    let draws = sample(
        &(proptest::collection::vec(pick.clone(), 0..=5), pick),
        runner,
        AOR_DRAWS,
    );
    let mut failures = 0;
    let mut accepted = 0;
    for (expectations, noun) in &draws {
        let adjectives: Vec<String> = expectations.iter().map(|t| format!("a_{t}")).collect();
        let adjs: Vec<&str> = adjectives.iter().map(String::as_str).collect();
        let got = check_order(&ont, &lex, &adjs, noun).unwrap();
        accepted += usize::from(got.is_accepted());
        if got != aor_oracle(&oracle, &relations, expectations, noun) {
            failures += 1;
        }
    }
    check(
        failures == 0,
        format!("{AOR_DRAWS} draws ({accepted} accepted), {failures} failures"),
    )
}

fn suite_commutativity() -> Check {
    let ont = fixtures::reference_ontology();
    let lex = fixtures::reference_lexicon();
    let types = TreeOracle::reference().types();
    let mut failures = 0;
    let mut coerced = 0;
    for a in &types {
        for b in &types {
            let ab = unify_types(&ont, &lex, a, b).unwrap();
            let ba = unify_types(&ont, &lex, b, a).unwrap();
            let same = match (&ab, &ba) {
                (UnificationOutcome::Failed { .. }, UnificationOutcome::Failed { .. }) => true,
                _ => ab == ba,
            };
            coerced += usize::from(matches!(ab, UnificationOutcome::Coerced { .. }));
            failures += usize::from(!same);
        }
    }
    check(
        failures == 0,
        format!(
            "{} pairs ({coerced} coerced), {failures} failures",
            types.len() * types.len()
        ),
    )
}

fn main() {
    let mut results: Vec<(&str, Check, Duration, bool)> = Vec::new();
    let mut timed = |name: &'static str, limited: bool, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let c = f();
        results.push((name, c, start.elapsed(), limited));
    };

    timed("1 sentence equivalence", true, &mut sentence_equivalence);
    timed("2 loud-omelet coercion", true, &mut loud_omelet);
    timed("3 adjective ordering", true, &mut adjective_order);
    timed("4 raven equivalence", true, &mut raven_equivalence);
    timed("5 paradox dissolution", true, &mut paradox_dissolution);

    let mut rng = runner();
    timed("6a subsumption axioms and LUB", false, &mut || {
        suite_subsumption(&mut rng)
    });
    let forms = sample(&reference_form(), &mut rng, FORMS);
    timed("6b parse/pretty round trip", false, &mut || suite_round_trip(&forms));
    timed("6c canonicalize idempotence", false, &mut || suite_idempotence(&forms));
    timed("6d AOR characterization", false, &mut || suite_aor(&mut rng));
    timed("6e unify commutativity", false, &mut suite_commutativity);

    let mut failed = 0;
    for (name, c, elapsed, limited) in &results {
        let in_time = !limited || *elapsed < TIME_LIMIT;
        let pass = c.ok && in_time;
        failed += usize::from(!pass);
        let limit = if *limited { " (limit 1 s)" } else { "" };
        println!(
            "[{}] {name}: {} [{:.3} s{limit}]",
            if pass { "PASS" } else { "FAIL" },
            c.detail,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
