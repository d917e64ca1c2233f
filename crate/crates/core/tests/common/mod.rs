#![allow(dead_code)]

pub mod formats;
pub mod gen;
pub mod oracle;
pub mod props;

use std::path::PathBuf;

use isar_lint::engine::{lint_document, resolve_selection, Report, Selection};
use isar_lint::keywords::KeywordTable;
use isar_lint::lexer::tokenize;
use isar_lint::model::split_commands;
use isar_lint::rules::{builtin_store, RuleSets};

pub fn fixture_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(rel)
}

pub fn fixture(rel: &str) -> String {
    std::fs::read_to_string(fixture_path(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

/// Every `.thy` file under the fixtures directory, sorted.
pub fn all_fixture_theories() -> Vec<(String, String)> {
    let mut out = Vec::new();
    let root = fixture_path("");
    let mut stack = vec![root.clone()];
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(&dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else if path.extension().is_some_and(|e| e == "thy") {
                let rel = path.strip_prefix(&root).unwrap().display().to_string();
                out.push((rel, std::fs::read_to_string(&path).unwrap()));
            }
        }
    }
    out.sort();
    out
}

pub fn lint_with(selection: &Selection, path: &str, text: &str) -> Report {
    let store = builtin_store();
    let commands = split_commands(&tokenize(text, &KeywordTable::builtin()));
    let mut report = lint_document(&commands, selection, &store, &RuleSets::default());
    report.path = path.to_owned();
    report
}

pub fn bundle_selection(bundles: &[&str]) -> Selection {
    resolve_selection(&builtin_store(), bundles, &[], &[]).unwrap()
}

pub fn lint_bundles(bundles: &[&str], path: &str, text: &str) -> Report {
    lint_with(&bundle_selection(bundles), path, text)
}

pub struct RuleCase {
    pub id: String,
    pub bundles: Vec<String>,
    pub source: String,
    pub expect: Vec<String>,
    pub edits: Option<Vec<String>>,
}

fn strings(v: &serde_json::Value) -> Vec<String> {
    v.as_array()
        .map(|a| a.iter().map(|s| s.as_str().unwrap().to_owned()).collect())
        .unwrap_or_default()
}

/// The hand-annotated rule corpus.
pub fn rule_cases() -> Vec<RuleCase> {
    let doc: serde_json::Value = serde_json::from_str(&fixture("rule_cases.json")).unwrap();
    doc.as_array()
        .unwrap()
        .iter()
        .map(|c| RuleCase {
            id: c["id"].as_str().unwrap().to_owned(),
            bundles: strings(&c["bundles"]),
            source: c["source"].as_str().unwrap().to_owned(),
            expect: strings(&c["expect"]),
            edits: c.get("edits").map(strings),
        })
        .collect()
}

/// Compares a case against its annotation; `Err` carries a diff.
pub fn check_case(case: &RuleCase) -> Result<(), String> {
    let bundles: Vec<&str> = case.bundles.iter().map(String::as_str).collect();
    let report = lint_bundles(&bundles, &case.id, &case.source);
    let mut got: Vec<String> = report
        .results
        .iter()
        .map(|r| format!("{}@{}", r.lint_name, r.range.start_line))
        .collect();
    let mut want = case.expect.clone();
    got.sort();
    want.sort();
    if got != want {
        return Err(format!("{}: expected {want:?}, got {got:?}", case.id));
    }
    if let Some(edits) = &case.edits {
        let replacements: Vec<String> = report
            .results
            .iter()
            .filter_map(|r| r.edit.as_ref().map(|e| e.replacement.clone()))
            .collect();
        if &replacements != edits {
            return Err(format!(
                "{}: expected edits {edits:?}, got {replacements:?}",
                case.id
            ));
        }
    }
    Ok(())
}
