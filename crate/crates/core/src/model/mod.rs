//! Commands, proof methods and statement heads.

pub mod combinator;
mod method;
mod statement;

use serde::Serialize;
use thiserror::Error;

use crate::keywords::CommandCategory;
use crate::lexer::{SourceRange, Token};

pub use method::{parse_method, parse_method_list, Combinator, Method, Modifier};
pub use statement::{parse_statement_head, Attribute, FactRef, StatementHead};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("malformed proof method at {}", fmt_position(.at))]
    MalformedMethod { at: Option<SourceRange> },
    #[error("malformed statement head at {}", fmt_position(.at))]
    MalformedHead { at: Option<SourceRange> },
}

fn fmt_position(at: &Option<SourceRange>) -> String {
    match at {
        Some(r) => format!("{}:{}", r.start_line, r.start_col),
        None => "end of command".to_owned(),
    }
}

/// A maximal token span beginning with a command keyword.
///
/// Improper tokens between two commands belong to the earlier one; improper
/// tokens before the first command form a preamble with an empty keyword.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Command {
    pub keyword: String,
    pub category: Option<CommandCategory>,
    pub tokens: Vec<Token>,
    pub range: SourceRange,
    pub index: usize,
}

impl Command {
    pub fn is_preamble(&self) -> bool {
        self.keyword.is_empty()
    }

    pub fn is(&self, keyword: &str) -> bool {
        self.keyword == keyword
    }

    pub fn proper_tokens(&self) -> Vec<&Token> {
        self.tokens.iter().filter(|t| !t.is_improper()).collect()
    }

    /// Proper tokens after the command keyword.
    pub fn arguments(&self) -> Vec<&Token> {
        let mut proper = self.proper_tokens();
        if !self.is_preamble() && !proper.is_empty() {
            proper.remove(0);
        }
        proper
    }

    /// Range from the keyword to the last proper token.
    pub fn proper_range(&self) -> SourceRange {
        let proper = self.proper_tokens();
        match (proper.first(), proper.last()) {
            (Some(first), Some(last)) => first.range.cover(last.range),
            _ => self.range,
        }
    }

    /// Source text of the arguments, from the first to the last argument
    /// token, including interior whitespace.
    pub fn argument_source(&self) -> String {
        let args = self.arguments();
        let (Some(first), Some(last)) = (args.first(), args.last()) else {
            return String::new();
        };
        let start = first.range.byte_offset_start;
        let end = last.range.byte_offset_end;
        self.tokens
            .iter()
            .filter(|t| t.range.byte_offset_start >= start && t.range.byte_offset_end <= end)
            .map(|t| t.source.as_str())
            .collect()
    }

    /// Proof methods carried by `apply`, `apply_end`, `by`, `proof` and `qed`.
    ///
    /// Other commands carry none. `proof` without a method yields a
    /// placeholder.
    pub fn methods(&self) -> Result<Vec<Method>, ModelError> {
        let args = self.arguments();
        match self.keyword.as_str() {
            "apply" | "apply_end" => parse_method_list(&args, 1, 1),
            "by" => parse_method_list(&args, 1, 2),
            "proof" => {
                let mut methods = parse_method_list(&args, 0, 1)?;
                if methods.is_empty() {
                    methods.push(Method::Placeholder);
                }
                Ok(methods)
            }
            "qed" => parse_method_list(&args, 0, 1),
            _ => Ok(Vec::new()),
        }
    }

    pub fn carries_methods(&self) -> bool {
        matches!(
            self.keyword.as_str(),
            "apply" | "apply_end" | "by" | "proof" | "qed"
        )
    }
}

/// Groups a token stream into commands.
pub fn split_commands(tokens: &[Token]) -> Vec<Command> {
    let mut commands: Vec<Command> = Vec::new();
    let mut start = 0;
    let flush = |commands: &mut Vec<Command>, span: &[Token]| {
        if span.is_empty() {
            return;
        }
        let head = span.iter().find(|t| t.kind.is_command());
        let (keyword, category) = match head {
            Some(t) => match t.kind {
                crate::lexer::TokenKind::Command(c) => (t.source.clone(), Some(c)),
                _ => unreachable!(),
            },
            None => (String::new(), None),
        };
        let range = span[0].range.cover(span[span.len() - 1].range);
        let index = commands.len();
        commands.push(Command {
            keyword,
            category,
            tokens: span.to_vec(),
            range,
            index,
        });
    };
    for (i, token) in tokens.iter().enumerate() {
        if token.kind.is_command() && i > start {
            flush(&mut commands, &tokens[start..i]);
            start = i;
        }
    }
    flush(&mut commands, &tokens[start..]);
    commands
}

/// Drops the preamble and any command without proper content.
pub fn proper_commands(commands: &[Command]) -> Vec<Command> {
    commands
        .iter()
        .filter(|c| !c.is_preamble() && c.tokens.iter().any(|t| !t.is_improper()))
        .cloned()
        .collect()
}
