//! WebAssembly bindings for the isar-lint playground.
//!
//! Every export returns a JSON string; errors are returned as a JSON object
//! with an `error` field so the page can render them uniformly.

use isar_lint::engine::{resolve_selection, Linter};
use isar_lint::keywords::KeywordTable;
use isar_lint::model::parse_method as parse_method_tokens;
use isar_lint::report::present_json;
use isar_lint::rules::builtin_store;
use isar_lint::{tokenize as lex, Method};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct TokenView<'a> {
    kind: &'static str,
    text: &'a str,
    line: usize,
    col: usize,
    proper: bool,
}

fn error_json(message: impl std::fmt::Display) -> String {
    json!({ "error": message.to_string() }).to_string()
}

/// Lints `source` with the comma-separated `bundles` (empty for default)
/// and returns the JSON report.
pub fn lint_json(source: &str, bundles: &str) -> Result<String, String> {
    let names: Vec<&str> = bundles
        .split(',')
        .map(str::trim)
        .filter(|b| !b.is_empty())
        .collect();
    let store = builtin_store();
    let none: &[&str] = &[];
    let selection = resolve_selection(&store, &names, none, none).map_err(|e| e.to_string())?;
    let linter = Linter {
        store,
        selection,
        keywords: KeywordTable::builtin(),
        rules: Default::default(),
    };
    Ok(present_json(
        &[linter.lint_source("playground.thy", source)],
    ))
}

pub fn tokens_json(source: &str) -> String {
    let tokens = lex(source, &KeywordTable::builtin());
    let views: Vec<TokenView<'_>> = tokens
        .iter()
        .map(|t| TokenView {
            kind: t.kind.name(),
            text: &t.source,
            line: t.range.start_line,
            col: t.range.start_col,
            proper: !t.is_improper(),
        })
        .collect();
    serde_json::to_string(&views).expect("tokens serialize")
}

/// Parses a single method expression and returns its tree together with
/// the normalised, fully parenthesised rendering.
pub fn method_json(source: &str) -> Result<String, String> {
    let tokens = lex(source, &KeywordTable::builtin());
    let proper: Vec<_> = tokens.iter().filter(|t| !t.is_improper()).collect();
    let method: Method = parse_method_tokens(&proper).map_err(|e| e.to_string())?;
    Ok(json!({
        "tree": tree(&method),
        "display": method.to_string(),
        "combinators": method.combinator_count(),
    })
    .to_string())
}

fn tree(m: &Method) -> serde_json::Value {
    let mods: Vec<String> = m.modifiers().iter().map(|x| x.to_string()).collect();
    match m {
        Method::Simple { name, args, .. } => json!({
            "type": "simple",
            "name": name,
            "args": args.iter().map(|t| t.source.as_str()).collect::<Vec<_>>().join(" "),
            "modifiers": mods,
        }),
        Method::Combined {
            left,
            combinator,
            right,
            ..
        } => json!({
            "type": "combined",
            "combinator": combinator.symbol(),
            "left": tree(left),
            "right": tree(right),
            "modifiers": mods,
        }),
        Method::Placeholder => json!({ "type": "placeholder" }),
    }
}

#[wasm_bindgen]
pub fn lint(source: &str, bundles: &str) -> String {
    lint_json(source, bundles).unwrap_or_else(error_json)
}

#[wasm_bindgen]
pub fn tokenize(source: &str) -> String {
    tokens_json(source)
}

#[wasm_bindgen]
pub fn parse_method(source: &str) -> String {
    method_json(source).unwrap_or_else(error_json)
}

/// Names of the built-in bundles, for the bundle picker.
#[wasm_bindgen]
pub fn bundles() -> String {
    let store = builtin_store();
    let list: Vec<_> = store
        .bundles()
        .map(|b| json!({ "name": b.name, "add_on": b.add_on, "lints": b.lints }))
        .collect();
    serde_json::Value::from(list).to_string()
}
