//! Lints decided by a command's keyword and its option lists.

use crate::engine::{Context, Finding, ParserLint};
use crate::lexer::Token;
use crate::model::combinator::{
    balanced_until, delimited, keyword, map, name, opt, preceded, sep_by1, seq, Input, PResult,
};
use crate::model::Command;

/// `name` or `name = value`.
struct Opt {
    name: String,
    value: Vec<String>,
}

fn option<'a>(input: Input<'a>) -> PResult<'a, Opt> {
    let value = preceded(keyword("="), balanced_until(|t: &Token| t.is_keyword(",")));
    map(
        seq(name(), opt(value)),
        |(n, v): (&Token, Option<Vec<&Token>>)| Opt {
            name: n.source.clone(),
            value: v
                .unwrap_or_default()
                .into_iter()
                .map(|t| t.source.clone())
                .collect(),
        },
    )(input)
}

fn option_list<'a>(input: Input<'a>) -> PResult<'a, Vec<Opt>> {
    map(sep_by1(option, keyword(",")), |(first, tail)| {
        std::iter::once(first)
            .chain(tail.into_iter().map(|(_, o)| o))
            .collect()
    })(input)
}

/// `[opts]`
fn bracketed<'a>(input: Input<'a>) -> PResult<'a, Vec<Opt>> {
    delimited(keyword("["), option_list, keyword("]"))(input)
}

/// `[[opts]]`
fn declaration<'a>(input: Input<'a>) -> PResult<'a, Vec<Opt>> {
    delimited(keyword("["), bracketed, keyword("]"))(input)
}

/// All options of every group `group` parses, anywhere in `tokens`.
fn scan_options<'a>(
    tokens: Input<'a>,
    group: impl Fn(Input<'a>) -> PResult<'a, Vec<Opt>>,
) -> Vec<Opt> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        match group(&tokens[i..]) {
            Ok((opts, rest)) => {
                out.extend(opts);
                i = tokens.len() - rest.len();
            }
            Err(_) => i += 1,
        }
    }
    out
}

pub struct BadStyleCommand;

impl ParserLint for BadStyleCommand {
    fn parse(&self, command: &Command, _tokens: Input<'_>, cx: &Context<'_>) -> Option<Finding> {
        cx.rules
            .bad_style_commands
            .contains(&command.keyword)
            .then(|| {
                Finding::at_command(command, format!("bad style command `{}`", command.keyword))
            })
    }
}

pub struct CounterExampleFinder;

impl ParserLint for CounterExampleFinder {
    fn parse(&self, command: &Command, tokens: Input<'_>, cx: &Context<'_>) -> Option<Finding> {
        if !cx.rules.counterexample_commands.contains(&command.keyword) {
            return None;
        }
        let exempt = scan_options(tokens, bracketed)
            .iter()
            .any(|o| o.name == "expect" || (command.keyword == "nitpick" && o.name == "satisfy"));
        (!exempt).then(|| {
            Finding::at_command(
                command,
                format!("`{}` without an `expect` option", command.keyword),
            )
        })
    }
}

pub struct SmtOracle;

impl ParserLint for SmtOracle {
    fn parse(&self, command: &Command, tokens: Input<'_>, _cx: &Context<'_>) -> Option<Finding> {
        let enabled = scan_options(tokens, declaration)
            .iter()
            .any(|o| o.name == "smt_oracle" && (o.value.is_empty() || o.value == ["true"]));
        enabled.then(|| Finding::at_command(command, "`smt_oracle` is enabled"))
    }
}

pub struct ProofFinder;

impl ParserLint for ProofFinder {
    fn parse(&self, command: &Command, _tokens: Input<'_>, cx: &Context<'_>) -> Option<Finding> {
        cx.rules
            .proof_finder_commands
            .contains(&command.keyword)
            .then(|| {
                Finding::at_command(
                    command,
                    format!("proof finder `{}` left in theory", command.keyword),
                )
            })
    }
}

pub struct DiagnosticCommand;

impl ParserLint for DiagnosticCommand {
    fn parse(&self, command: &Command, _tokens: Input<'_>, cx: &Context<'_>) -> Option<Finding> {
        cx.rules
            .diagnostic_commands
            .contains(&command.keyword)
            .then(|| {
                Finding::at_command(
                    command,
                    format!("diagnostic command `{}` left in theory", command.keyword),
                )
            })
    }
}

#[cfg(test)]
mod tests {
    use crate::rules::testing::count;

    #[test]
    fn bad_style_command() {
        let lint = "bad_style_command";
        assert_eq!(count(lint, "back"), 1);
        assert_eq!(count(lint, "apply_end simp"), 1);
        assert_eq!(count(lint, "apply simp"), 0);
    }

    #[test]
    fn counter_example_finder() {
        let lint = "counter_example_finder";
        assert_eq!(count(lint, "nitpick"), 1);
        assert_eq!(count(lint, "nitpick [expect = genuine]"), 0);
        assert_eq!(count(lint, "nitpick [satisfy]"), 0);
        assert_eq!(count(lint, "quickcheck [satisfy]"), 1);
        assert_eq!(
            count(lint, "quickcheck [random, expect = counterexample]"),
            0
        );
        assert_eq!(count(lint, "nunchaku [card = 1]"), 1);
    }

    #[test]
    fn smt_oracle() {
        let lint = "smt_oracle";
        assert_eq!(count(lint, "declare [[smt_oracle]]"), 1);
        assert_eq!(count(lint, "declare [[smt_oracle = false]]"), 0);
        assert_eq!(count(lint, "declare [[show_types]]"), 0);
        assert_eq!(count(lint, "declare [[show_types, smt_oracle = true]]"), 1);
        assert_eq!(count(lint, "using [[smt_oracle]] by smt"), 1);
    }

    #[test]
    fn proof_finder() {
        let lint = "proof_finder";
        assert_eq!(count(lint, "sledgehammer"), 1);
        assert_eq!(count(lint, "try0"), 1);
        assert_eq!(count(lint, "by simp"), 0);
    }

    #[test]
    fn diagnostic_command() {
        let lint = "diagnostic_command";
        assert_eq!(count(lint, "find_theorems \u{2039}_ + _\u{203a}"), 1);
        assert_eq!(
            count(lint, "find_consts \u{2039}nat \u{21d2} nat\u{203a}"),
            1
        );
        assert_eq!(count(lint, "thm foo"), 0);
    }
}
