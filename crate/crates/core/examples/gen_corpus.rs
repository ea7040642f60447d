//! Writes the bundled synthetic corpus: Java-like interface and class edits
//! whose histogram diff differs from the plain shortest diff.
//!
//! ```text
//! cargo run -p idiff --example gen_corpus -- corpus/synthetic
//! ```

use std::fs;
use std::path::PathBuf;
use std::time::Duration;

use idiff::corpus::{CorpusEntry, FilterConfig};
use idiff::search::SearchLimits;
use idiff::{solve_min_feedback, LinePair};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DIVERGING: usize = 20;
const AGREEING: usize = 4;
/// At most this many kept cases may be fixed by a single action.
const SINGLE_ACTION: usize = 6;

const TYPES: [&str; 6] = ["int", "long", "String", "boolean", "void", "List<Item>"];
const VERBS: [&str; 8] = ["get", "set", "find", "load", "save", "remove", "update", "count"];
const NOUNS: [&str; 8] = ["Count", "Range", "Name", "Items", "Owner", "Limit", "State", "Value"];
const DOCS: [&str; 5] = [
    "     * Returns the current value.",
    "     * @deprecated use the builder instead",
    "     * @return never null",
    "     * @since 2.0",
    "     * Not thread safe.",
];
const BODIES: [&str; 6] = [
    "        return value;",
    "        return null;",
    "        checkOpen();",
    "        count++;",
    "        return items.size();",
    "        throw new UnsupportedOperationException();",
];

#[derive(Clone)]
struct Method {
    signature: String,
    doc: Option<usize>,
    body: Vec<usize>,
}

fn random_method(rng: &mut ChaCha8Rng, with_body: bool) -> Method {
    let signature = format!(
        "    public {} {}{}();",
        TYPES.choose(rng).unwrap(),
        VERBS.choose(rng).unwrap(),
        NOUNS.choose(rng).unwrap()
    );
    let body = if with_body {
        (0..rng.gen_range(1..=3))
            .map(|_| rng.gen_range(0..BODIES.len()))
            .collect()
    } else {
        Vec::new()
    };
    Method {
        signature,
        doc: rng.gen_bool(0.5).then(|| rng.gen_range(0..DOCS.len())),
        body,
    }
}

/// A method whose signature is not in `taken`.
fn fresh_method(rng: &mut ChaCha8Rng, with_body: bool, taken: &[Method]) -> Method {
    loop {
        let m = random_method(rng, with_body);
        if taken.iter().all(|t| t.signature != m.signature) {
            return m;
        }
    }
}

fn render(name: &str, class: bool, methods: &[Method]) -> String {
    let kind = if class { "class" } else { "interface" };
    let mut out = format!("package org.example;\n\npublic {kind} {name} {{\n");
    for m in methods {
        out.push('\n');
        if let Some(doc) = m.doc {
            out.push_str(&format!("    /**\n{}\n     */\n", DOCS[doc]));
        }
        if class {
            out.push_str(&format!("{} {{\n", m.signature.trim_end_matches(';')));
            for &b in &m.body {
                out.push_str(BODIES[b]);
                out.push('\n');
            }
            out.push_str("    }\n");
        } else {
            out.push_str(&m.signature);
            out.push('\n');
        }
    }
    out.push_str("}\n");
    out
}

/// One revision: methods removed, documented, added and edited.
fn evolve(rng: &mut ChaCha8Rng, methods: &[Method], class: bool) -> Vec<Method> {
    let mut next: Vec<Method> = methods.iter().filter(|_| rng.gen_bool(0.75)).cloned().collect();
    for m in next.iter_mut() {
        if rng.gen_bool(0.4) {
            m.doc = Some(rng.gen_range(0..DOCS.len()));
        }
        if class && rng.gen_bool(0.3) {
            let k = rng.gen_range(0..m.body.len());
            m.body[k] = rng.gen_range(0..BODIES.len());
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let at = rng.gen_range(0..=next.len());
        let m = fresh_method(rng, class, &next);
        next.insert(at, m);
    }
    next
}

fn main() {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpus/synthetic".into()));
    let filter = FilterConfig {
        max_candidates: 12,
        ..FilterConfig::default()
    };
    let limits = SearchLimits::with_budget(Duration::from_secs(2));
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let (mut diverging, mut agreeing, mut single) = (0, 0, 0);
    while diverging < DIVERGING || agreeing < AGREEING {
        let class = rng.gen_bool(0.5);
        let mut methods: Vec<Method> = Vec::new();
        for _ in 0..rng.gen_range(5..=10) {
            let m = fresh_method(&mut rng, class, &methods);
            methods.push(m);
        }
        let name = format!(
            "{}{}",
            NOUNS.choose(&mut rng).unwrap(),
            if class { "Store" } else { "View" }
        );
        let old = render(&name, class, &methods);
        let new = render(&name, class, &evolve(&mut rng, &methods, class));
        let pair = LinePair::from_texts(&old, &new, true);
        if !pair.old_lines().iter().zip(pair.new_lines()).any(|(a, b)| a != b) && pair.n() == pair.m() {
            continue;
        }
        let entry = CorpusEntry::from_pair(String::new(), PathBuf::new(), PathBuf::new(), pair);
        let keep = if filter.keeps(&entry) && diverging < DIVERGING {
            // Only cases the search settles quickly, and mostly ones that
            // need more than one action.
            match solve_min_feedback(&entry.case, limits) {
                Ok(found) if found.min_feedback > 1 => true,
                Ok(_) if single < SINGLE_ACTION => {
                    single += 1;
                    true
                }
                _ => false,
            }
        } else {
            false
        };
        let slot = if keep {
            diverging += 1;
            true
        } else if !entry.stats.diverges && entry.stats.changed_lines > 0 && agreeing < AGREEING {
            agreeing += 1;
            true
        } else {
            false
        };
        if slot {
            let dir = out.join(format!("case-{:02}", diverging + agreeing));
            fs::create_dir_all(&dir).expect("create case directory");
            fs::write(dir.join("old.java"), &old).expect("write old");
            fs::write(dir.join("new.java"), &new).expect("write new");
        }
    }
}
