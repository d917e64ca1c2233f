//! The three lint abstractions and their adapters onto [`Check`].
//!
//! Concrete lints implement one of [`ParserLint`], [`AstLint`] or
//! [`ProperCommandsLint`] and are wrapped in the matching adapter before
//! registration.

use super::Finding;
use crate::model::combinator::Input;
use crate::model::{parse_statement_head, Command, Method, StatementHead};
use crate::rules::RuleSets;

/// Read-only state shared by all lints during one run.
pub struct Context<'a> {
    pub rules: &'a RuleSets,
}

/// The base lint interface: proper commands in, findings appended.
pub trait Check: Send + Sync {
    fn check(&self, commands: &[Command], cx: &Context<'_>, out: &mut Vec<Finding>);
}

/// A lint that parses the anti-pattern from one command's proper tokens.
pub trait ParserLint: Send + Sync {
    fn parse(&self, command: &Command, tokens: Input<'_>, cx: &Context<'_>) -> Option<Finding>;
}

/// A lint over the partial AST. Override only the hooks you need.
pub trait AstLint: Send + Sync {
    fn lint_method(
        &self,
        _method: &Method,
        _command: &Command,
        _cx: &Context<'_>,
    ) -> Option<Finding> {
        None
    }

    fn lint_statement(
        &self,
        _head: &StatementHead,
        _command: &Command,
        _cx: &Context<'_>,
    ) -> Option<Finding> {
        None
    }
}

/// A lint over the whole filtered command list.
pub trait ProperCommandsLint: Send + Sync {
    fn lint_proper_commands(&self, commands: &[Command], cx: &Context<'_>, out: &mut Vec<Finding>);
}

pub struct ParserAdapter<L>(pub L);

impl<L: ParserLint> Check for ParserAdapter<L> {
    fn check(&self, commands: &[Command], cx: &Context<'_>, out: &mut Vec<Finding>) {
        for command in commands {
            let tokens = command.proper_tokens();
            out.extend(self.0.parse(command, &tokens, cx));
        }
    }
}

const STATEMENT_KEYWORDS: &[&str] = &[
    "lemma",
    "theorem",
    "corollary",
    "proposition",
    "schematic_goal",
    "lemmas",
    "theorems",
    "declare",
    "axiomatization",
];

pub struct AstAdapter<L>(pub L);

impl<L: AstLint> Check for AstAdapter<L> {
    fn check(&self, commands: &[Command], cx: &Context<'_>, out: &mut Vec<Finding>) {
        for command in commands {
            if command.carries_methods() {
                if let Ok(methods) = command.methods() {
                    for method in &methods {
                        out.extend(self.0.lint_method(method, command, cx));
                    }
                }
            } else if STATEMENT_KEYWORDS.contains(&command.keyword.as_str()) {
                if let Ok(head) = parse_statement_head(command) {
                    out.extend(self.0.lint_statement(&head, command, cx));
                }
            }
        }
    }
}

pub struct ProperCommandsAdapter<L>(pub L);

impl<L: ProperCommandsLint> Check for ProperCommandsAdapter<L> {
    fn check(&self, commands: &[Command], cx: &Context<'_>, out: &mut Vec<Finding>) {
        self.0.lint_proper_commands(commands, cx, out);
    }
}
