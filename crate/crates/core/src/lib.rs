//! Outer-syntax linter for Isabelle/Isar theory files.
//!
//! Theory text is tokenized ([`lexer`]), grouped into commands
//! ([`model`]), and checked by the lints registered in a
//! [`LintStore`](engine::LintStore). The catalog of built-in lints lives in
//! [`rules`]; [`report`] turns results into text, JSON or XML and
//! aggregates corpus statistics.

pub mod engine;
pub mod keywords;
pub mod lexer;
pub mod model;
pub mod report;
pub mod rules;

#[cfg(feature = "cli")]
pub mod cli;

pub use engine::{
    lint_document, Edit, LintDescriptor, LintResult, LintStore, Linter, Report, Selection, Severity,
};
pub use keywords::{CommandCategory, KeywordTable};
pub use lexer::{source_lines_of_code, tokenize, SourceRange, Token, TokenKind};
pub use model::{proper_commands, split_commands, Command, Method};
