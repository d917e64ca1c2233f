//! Lint interface, lint store, bundles and the per-document driver.

mod abstractions;
mod store;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::keywords::KeywordTable;
use crate::lexer::{sloc_of_tokens, tokenize, SourceRange};
use crate::model::{proper_commands, split_commands, Command};
use crate::rules::RuleSets;

pub use abstractions::{
    AstAdapter, AstLint, Check, Context, ParserAdapter, ParserLint, ProperCommandsAdapter,
    ProperCommandsLint,
};
pub use store::{resolve_selection, Bundle, EngineError, LintStore, Selection};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Info,
    Warn,
    Error,
}

impl Severity {
    pub const ALL: [Severity; 3] = [Severity::Info, Severity::Warn, Severity::Error];

    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warn => "warn",
            Severity::Error => "error",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Severity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "info" => Ok(Severity::Info),
            "warn" | "warning" => Ok(Severity::Warn),
            "error" => Ok(Severity::Error),
            _ => Err(format!(
                "unknown severity `{s}` (expected info, warn or error)"
            )),
        }
    }
}

impl Serialize for Severity {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Which lint abstraction a lint is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Abstraction {
    Parser,
    Ast,
    ProperCommands,
}

impl Abstraction {
    pub fn as_str(self) -> &'static str {
        match self {
            Abstraction::Parser => "parser",
            Abstraction::Ast => "ast",
            Abstraction::ProperCommands => "proper_commands",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LintDescriptor {
    pub name: String,
    pub severity: Severity,
    pub short_description: String,
    pub long_description: String,
    pub abstraction: Abstraction,
}

/// A suggested replacement of a source range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edit {
    pub range: SourceRange,
    pub replacement: String,
}

impl Edit {
    /// Applies the edit to the text it was computed from.
    pub fn apply(&self, text: &str) -> String {
        let mut out = String::with_capacity(text.len());
        out.push_str(&text[..self.range.byte_offset_start]);
        out.push_str(&self.replacement);
        out.push_str(&text[self.range.byte_offset_end..]);
        out
    }
}

/// What a lint reports before the engine stamps its name and severity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub message: String,
    pub range: SourceRange,
    pub command_index: usize,
    pub edit: Option<Edit>,
}

impl Finding {
    /// A finding covering the proper part of `command`.
    pub fn at_command(command: &Command, message: impl Into<String>) -> Finding {
        Finding {
            message: message.into(),
            range: command.proper_range(),
            command_index: command.index,
            edit: None,
        }
    }

    /// A finding covering `first` through `last`, reported at `first`.
    pub fn spanning(first: &Command, last: &Command, message: impl Into<String>) -> Finding {
        Finding {
            message: message.into(),
            range: first.proper_range().cover(last.proper_range()),
            command_index: first.index,
            edit: None,
        }
    }

    pub fn with_edit(mut self, edit: Edit) -> Finding {
        self.edit = Some(edit);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LintResult {
    pub lint_name: String,
    pub severity: Severity,
    pub message: String,
    pub range: SourceRange,
    pub command_index: usize,
    pub edit: Option<Edit>,
}

impl LintResult {
    fn order(&self, other: &Self) -> Ordering {
        (self.range.start_line, self.range.start_col, &self.lint_name)
            .cmp(&(
                other.range.start_line,
                other.range.start_col,
                &other.lint_name,
            ))
            .then_with(|| self.range.cmp(&other.range))
            .then_with(|| self.message.cmp(&other.message))
    }
}

/// Results for one file, sorted by start position and lint name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub path: String,
    pub results: Vec<LintResult>,
    pub sloc: usize,
}

impl Report {
    pub fn is_sorted(&self) -> bool {
        self.results
            .windows(2)
            .all(|w| w[0].order(&w[1]) != Ordering::Greater)
    }

    /// Highest severity present, if any result exists.
    pub fn max_severity(&self) -> Option<Severity> {
        self.results.iter().map(|r| r.severity).max()
    }
}

/// Runs every selected lint over `commands`.
///
/// Lints see the proper commands only. A command a lint cannot parse
/// contributes no results for that lint.
pub fn lint_document(
    commands: &[Command],
    selection: &Selection,
    store: &LintStore,
    rules: &RuleSets,
) -> Report {
    let proper = proper_commands(commands);
    let cx = Context { rules };
    let mut results = Vec::new();
    let mut findings = Vec::new();
    for name in selection.iter() {
        let Some((descriptor, check)) = store.get(name) else {
            continue;
        };
        findings.clear();
        check.check(&proper, &cx, &mut findings);
        results.extend(findings.drain(..).map(|f| LintResult {
            lint_name: descriptor.name.clone(),
            severity: descriptor.severity,
            message: f.message,
            range: f.range,
            command_index: f.command_index,
            edit: f.edit,
        }));
    }
    results.sort_by(LintResult::order);
    let sloc = commands.iter().map(|c| sloc_of_tokens(&c.tokens)).sum();
    Report {
        path: String::new(),
        results,
        sloc,
    }
}

/// Everything needed to lint theory sources: store, selection, keyword
/// table and rule-set configuration.
pub struct Linter {
    pub store: LintStore,
    pub selection: Selection,
    pub keywords: KeywordTable,
    pub rules: RuleSets,
}

impl Linter {
    /// Built-in lints with the default bundle.
    pub fn with_defaults() -> Linter {
        let store = crate::rules::builtin_store();
        let selection =
            resolve_selection::<&str>(&store, &[], &[], &[]).expect("default bundle resolves");
        Linter {
            store,
            selection,
            keywords: KeywordTable::builtin(),
            rules: RuleSets::default(),
        }
    }

    pub fn lint_source(&self, path: &str, text: &str) -> Report {
        let tokens = tokenize(text, &self.keywords);
        let commands = split_commands(&tokens);
        let mut report = lint_document(&commands, &self.selection, &self.store, &self.rules);
        report.path = path.to_owned();
        report
    }
}
