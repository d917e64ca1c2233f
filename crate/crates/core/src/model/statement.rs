//! Heads of theorem statements, fact declarations and axiomatizations.

use serde::Serialize;

use super::combinator::{
    alt, balanced_until, delimited, keyword, map, name, opt, preceded, satisfy, sep_by1, seq,
    Failure, Input, PResult,
};
use super::{Command, ModelError};
use crate::lexer::Token;

pub const GOAL_KEYWORDS: &[&str] = &[
    "lemma",
    "theorem",
    "corollary",
    "proposition",
    "schematic_goal",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Attribute {
    pub name: String,
    pub args: Vec<String>,
}

/// A fact reference with its attributes, as in `declare foo[simp del]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactRef {
    pub name: String,
    pub attributes: Vec<Attribute>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatementHead {
    pub keyword: String,
    pub name: Option<String>,
    pub attributes: Vec<Attribute>,
    pub has_where_clause: bool,
    /// Facts on the right of `lemmas`, or the facts of `declare`.
    pub facts: Vec<FactRef>,
}

impl StatementHead {
    /// Attributes of the head and of every referenced fact.
    pub fn all_attributes(&self) -> impl Iterator<Item = &Attribute> {
        self.attributes
            .iter()
            .chain(self.facts.iter().flat_map(|f| f.attributes.iter()))
    }
}

fn attribute<'a>(input: Input<'a>) -> PResult<'a, Attribute> {
    let args = balanced_until(|t: &Token| t.is_keyword(","));
    map(seq(name(), args), |(n, args): (&Token, Vec<&Token>)| {
        Attribute {
            name: n.source.clone(),
            args: args.into_iter().map(|t| t.source.clone()).collect(),
        }
    })(input)
}

/// `[a, b args, ...]` or `[]`.
fn attributes<'a>(input: Input<'a>) -> PResult<'a, Vec<Attribute>> {
    let nonempty = map(sep_by1(attribute, keyword(",")), |(first, tail)| {
        std::iter::once(first)
            .chain(tail.into_iter().map(|(_, a)| a))
            .collect::<Vec<_>>()
    });
    let list = alt(nonempty, |i| Ok((Vec::new(), i)));
    delimited(keyword("["), list, keyword("]"))(input)
}

/// `(in locale)`
fn target<'a>(input: Input<'a>) -> PResult<'a, ()> {
    map(
        delimited(keyword("("), preceded(keyword("in"), name()), keyword(")")),
        |_| (),
    )(input)
}

/// `name attributes?` or `attributes`, followed by `sep`.
fn binding<'a>(
    sep: &'static str,
) -> impl Fn(Input<'a>) -> PResult<'a, (Option<String>, Vec<Attribute>)> {
    move |input| {
        let named = map(
            seq(satisfy(is_binding_name), opt(attributes)),
            |(n, attrs): (&Token, Option<Vec<Attribute>>)| {
                (Some(n.source.clone()), attrs.unwrap_or_default())
            },
        );
        let unnamed = map(attributes, |attrs| (None, attrs));
        let (b, rest) = alt(named, unnamed)(input)?;
        let (_, rest) = keyword(sep)(rest)?;
        Ok((b, rest))
    }
}

fn is_binding_name(t: &Token) -> bool {
    use crate::lexer::TokenKind;
    matches!(
        t.kind,
        TokenKind::Ident | TokenKind::LongIdent | TokenKind::SymIdent
    )
}

/// Fact references, skipping anything that is not one.
fn facts(mut input: Input<'_>) -> Result<Vec<FactRef>, Failure> {
    let mut out = Vec::new();
    while let Some(tok) = input.first() {
        if tok.is_keyword("[") {
            if input.get(1).is_some_and(|t| t.is_keyword("[")) {
                // `[[config]]` declarations carry no fact.
                input = skip_brackets(input)?;
                continue;
            }
            let (attrs, rest) = attributes(input)?;
            out.push(FactRef {
                name: String::new(),
                attributes: attrs,
            });
            input = rest;
        } else if is_binding_name(tok) {
            let mut rest = &input[1..];
            if rest.first().is_some_and(|t| t.is_keyword("(")) {
                rest = skip_brackets(rest)?;
            }
            let (attrs, after) = opt(attributes)(rest)?;
            out.push(FactRef {
                name: tok.source.clone(),
                attributes: attrs.unwrap_or_default(),
            });
            input = after;
        } else {
            input = &input[1..];
        }
    }
    Ok(out)
}

/// Skips one balanced bracket group starting at `input[0]`.
fn skip_brackets(input: Input<'_>) -> Result<Input<'_>, Failure> {
    let mut depth = 0usize;
    for (i, t) in input.iter().enumerate() {
        if t.is_keyword("(") || t.is_keyword("[") {
            depth += 1;
        } else if t.is_keyword(")") || t.is_keyword("]") {
            depth = depth.saturating_sub(1);
            if depth == 0 {
                return Ok(&input[i + 1..]);
            }
        }
    }
    Err(Failure::at(input))
}

fn where_at_depth_zero(input: Input<'_>) -> bool {
    let mut depth = 0usize;
    for t in input {
        if t.is_keyword("(") || t.is_keyword("[") {
            depth += 1;
        } else if t.is_keyword(")") || t.is_keyword("]") {
            depth = depth.saturating_sub(1);
        } else if depth == 0 && t.is_keyword("where") {
            return true;
        }
    }
    false
}

fn malformed(at: Option<crate::lexer::SourceRange>) -> ModelError {
    ModelError::MalformedHead { at }
}

/// Extracts name, attributes and facts from a statement-like command.
pub fn parse_statement_head(command: &Command) -> Result<StatementHead, ModelError> {
    let args = command.arguments();
    let input: Input<'_> = &args;
    let mut head = StatementHead {
        keyword: command.keyword.clone(),
        name: None,
        attributes: Vec::new(),
        has_where_clause: false,
        facts: Vec::new(),
    };
    let keyword = command.keyword.as_str();
    let (_, input) = opt(target)(input).map_err(|f| malformed(f.at))?;

    if GOAL_KEYWORDS.contains(&keyword) {
        match binding(":")(input) {
            Ok(((name, attrs), _)) => {
                head.name = name;
                head.attributes = attrs;
            }
            Err(f) if input.first().is_some_and(|t| t.is_keyword("[")) => {
                return Err(malformed(f.at));
            }
            Err(_) => {}
        }
    } else if keyword == "lemmas" || keyword == "theorems" {
        let rest = match binding("=")(input) {
            Ok(((name, attrs), rest)) => {
                head.name = name;
                head.attributes = attrs;
                rest
            }
            Err(_) => input,
        };
        head.facts = facts(rest).map_err(|f| malformed(f.at))?;
    } else if keyword == "declare" {
        head.facts = facts(input).map_err(|f| malformed(f.at))?;
    } else if keyword == "axiomatization" {
        head.has_where_clause = where_at_depth_zero(input);
    } else {
        return Err(malformed(Some(command.proper_range())));
    }
    Ok(head)
}
