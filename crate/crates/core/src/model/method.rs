//! Proof method expressions.
//!
//! Grammar, weakest to strongest binding:
//!
//! ```text
//! methods   ::= seq ('|' seq)*
//! seq       ::= struct (',' struct)*
//! struct    ::= unit (';' unit)*
//! unit      ::= atom modifier* | name args
//! atom      ::= '(' methods ')' | name | '-'
//! modifier  ::= '?' | '+' | '[' nat? ']'
//! ```
//!
//! At command level only `atom modifier*` is allowed; `by` accepts two of
//! them. Chains of one combinator associate to the left. Arguments are kept
//! as raw tokens.

use std::fmt;

use serde::Serialize;

use super::combinator::{
    alt, balanced_until, keyword, kind, many, map, satisfy, sep_by1, seq, Failure, Input, PResult,
};
use super::ModelError;
use crate::lexer::{Token, TokenKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Combinator {
    /// `,`
    Seq,
    /// `;`
    Struct,
    /// `|`
    Alt,
}

impl Combinator {
    pub fn symbol(self) -> &'static str {
        match self {
            Combinator::Seq => ",",
            Combinator::Struct => ";",
            Combinator::Alt => "|",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Modifier {
    /// `?`
    Try,
    /// `+`
    Repeat,
    /// `[n]`
    Restrict(usize),
}

/// Partial AST of a proof method.
///
/// Equality compares names, argument spellings and structure; source
/// positions of argument tokens are ignored.
#[derive(Debug, Clone, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Method {
    Simple {
        name: String,
        args: Vec<Token>,
        modifiers: Vec<Modifier>,
    },
    Combined {
        left: Box<Method>,
        combinator: Combinator,
        right: Box<Method>,
        modifiers: Vec<Modifier>,
    },
    /// `-`, or `proof` without a method.
    Placeholder,
}

impl PartialEq for Method {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (
                Method::Simple {
                    name: n1,
                    args: a1,
                    modifiers: m1,
                },
                Method::Simple {
                    name: n2,
                    args: a2,
                    modifiers: m2,
                },
            ) => {
                n1 == n2
                    && m1 == m2
                    && a1.len() == a2.len()
                    && a1
                        .iter()
                        .zip(a2)
                        .all(|(x, y)| x.kind == y.kind && x.source == y.source)
            }
            (
                Method::Combined {
                    left: l1,
                    combinator: c1,
                    right: r1,
                    modifiers: m1,
                },
                Method::Combined {
                    left: l2,
                    combinator: c2,
                    right: r2,
                    modifiers: m2,
                },
            ) => c1 == c2 && m1 == m2 && l1 == l2 && r1 == r2,
            (Method::Placeholder, Method::Placeholder) => true,
            _ => false,
        }
    }
}

impl Method {
    pub fn simple(name: &str) -> Method {
        Method::Simple {
            name: name.to_owned(),
            args: Vec::new(),
            modifiers: Vec::new(),
        }
    }

    /// Name of a simple method.
    pub fn name(&self) -> Option<&str> {
        match self {
            Method::Simple { name, .. } => Some(name),
            _ => None,
        }
    }

    pub fn modifiers(&self) -> &[Modifier] {
        match self {
            Method::Simple { modifiers, .. } | Method::Combined { modifiers, .. } => modifiers,
            Method::Placeholder => &[],
        }
    }

    pub fn is_restricted(&self) -> bool {
        self.modifiers()
            .iter()
            .any(|m| matches!(m, Modifier::Restrict(_)))
    }

    /// Visits every node, parents before children, left before right.
    pub fn walk<'m>(&'m self, f: &mut impl FnMut(&'m Method)) {
        f(self);
        if let Method::Combined { left, right, .. } = self {
            left.walk(f);
            right.walk(f);
        }
    }

    pub fn any(&self, mut pred: impl FnMut(&Method) -> bool) -> bool {
        let mut found = false;
        self.walk(&mut |m| found |= pred(m));
        found
    }

    pub fn combinator_count(&self) -> usize {
        let mut n = 0;
        self.walk(&mut |m| {
            if matches!(m, Method::Combined { .. }) {
                n += 1;
            }
        });
        n
    }

    /// Names of all simple methods in the tree.
    pub fn simple_names(&self) -> Vec<&str> {
        let mut names = Vec::new();
        self.walk(&mut |m| {
            if let Some(n) = m.name() {
                names.push(n);
            }
        });
        names
    }

    fn with_modifiers(self, extra: Vec<Modifier>) -> Option<Method> {
        if extra.is_empty() {
            return Some(self);
        }
        match self {
            Method::Simple {
                name,
                args,
                mut modifiers,
            } => {
                modifiers.extend(extra);
                Some(Method::Simple {
                    name,
                    args,
                    modifiers,
                })
            }
            Method::Combined {
                left,
                combinator,
                right,
                mut modifiers,
            } => {
                modifiers.extend(extra);
                Some(Method::Combined {
                    left,
                    combinator,
                    right,
                    modifiers,
                })
            }
            Method::Placeholder => None,
        }
    }
}

impl fmt::Display for Modifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modifier::Try => f.write_str("?"),
            Modifier::Repeat => f.write_str("+"),
            Modifier::Restrict(n) => write!(f, "[{n}]"),
        }
    }
}

fn fmt_modifiers(f: &mut fmt::Formatter<'_>, modifiers: &[Modifier]) -> fmt::Result {
    modifiers.iter().try_for_each(|m| write!(f, "{m}"))
}

/// Concrete syntax that parses back to the same method.
impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Simple {
                name,
                args,
                modifiers,
            } => {
                if args.is_empty() {
                    f.write_str(name)?;
                } else {
                    write!(f, "({name}")?;
                    for a in args {
                        write!(f, " {}", a.source)?;
                    }
                    f.write_str(")")?;
                }
                fmt_modifiers(f, modifiers)
            }
            Method::Combined {
                left,
                combinator,
                right,
                modifiers,
            } => {
                write!(f, "({left} {} {right})", combinator.symbol())?;
                fmt_modifiers(f, modifiers)
            }
            Method::Placeholder => f.write_str("-"),
        }
    }
}

fn is_modifier_run(t: &Token) -> bool {
    t.kind == TokenKind::SymIdent && t.source.chars().all(|c| c == '?' || c == '+')
}

fn is_method_name(t: &Token) -> bool {
    match t.kind {
        TokenKind::Ident | TokenKind::LongIdent => true,
        TokenKind::SymIdent => !is_modifier_run(t),
        _ => false,
    }
}

fn modifier<'a>(input: Input<'a>) -> PResult<'a, Vec<Modifier>> {
    let single = map(alt(keyword("?"), keyword("+")), |t: &Token| {
        vec![if t.source == "?" {
            Modifier::Try
        } else {
            Modifier::Repeat
        }]
    });
    let run = map(satisfy(is_modifier_run), |t: &Token| {
        t.source
            .chars()
            .map(|c| {
                if c == '?' {
                    Modifier::Try
                } else {
                    Modifier::Repeat
                }
            })
            .collect()
    });
    let restrict_n = map(
        seq(keyword("["), seq(kind(TokenKind::Nat), keyword("]"))),
        |(_, (n, _)): (&Token, (&Token, &Token))| {
            vec![Modifier::Restrict(n.source.parse().unwrap_or(usize::MAX))]
        },
    );
    let restrict_default = map(seq(keyword("["), keyword("]")), |_| {
        vec![Modifier::Restrict(1)]
    });
    alt(alt(single, run), alt(restrict_n, restrict_default))(input)
}

fn modifiers<'a>(input: Input<'a>) -> PResult<'a, Vec<Modifier>> {
    map(many(modifier), |groups| {
        groups.into_iter().flatten().collect()
    })(input)
}

fn attach(method: Method, mods: Vec<Modifier>, input: Input<'_>) -> Result<Method, Failure> {
    method
        .with_modifiers(mods)
        .ok_or_else(|| Failure::at(input))
}

fn placeholder<'a>(input: Input<'a>) -> PResult<'a, Method> {
    map(keyword("-"), |_| Method::Placeholder)(input)
}

fn bare_name<'a>(input: Input<'a>) -> PResult<'a, Method> {
    map(satisfy(is_method_name), |t: &Token| {
        Method::simple(&t.source)
    })(input)
}

fn parenthesized<'a>(input: Input<'a>) -> PResult<'a, Method> {
    let (_, rest) = keyword("(")(input)?;
    let (method, rest) = methods(rest)?;
    let (_, rest) = keyword(")")(rest)?;
    Ok((method, rest))
}

/// `atom modifier*`
fn modified_atom<'a>(input: Input<'a>) -> PResult<'a, Method> {
    let (method, rest) = alt(alt(parenthesized, placeholder), bare_name)(input)?;
    let (mods, after) = modifiers(rest)?;
    Ok((attach(method, mods, rest)?, after))
}

/// `name args` inside parentheses, where args stop at a combinator.
fn name_with_args<'a>(input: Input<'a>) -> PResult<'a, Method> {
    let (head, rest) = satisfy(is_method_name)(input)?;
    let stop = |t: &Token| t.is_keyword(",") || t.is_keyword(";") || t.is_keyword("|");
    let (args, rest) = balanced_until(stop)(rest)?;
    Ok((
        Method::Simple {
            name: head.source.clone(),
            args: args.into_iter().cloned().collect(),
            modifiers: Vec::new(),
        },
        rest,
    ))
}

fn unit<'a>(input: Input<'a>) -> PResult<'a, Method> {
    // A bare name followed by something other than a modifier takes arguments.
    let named_then_modifier = |input: Input<'a>| {
        let (method, rest) = bare_name(input)?;
        let (mods, after) = modifiers(rest)?;
        if mods.is_empty() {
            return Err(Failure::at(rest));
        }
        Ok((attach(method, mods, rest)?, after))
    };
    alt(
        alt(
            alt(parenthesized_with_modifiers, placeholder),
            named_then_modifier,
        ),
        name_with_args,
    )(input)
}

fn parenthesized_with_modifiers<'a>(input: Input<'a>) -> PResult<'a, Method> {
    let (method, rest) = parenthesized(input)?;
    let (mods, after) = modifiers(rest)?;
    Ok((attach(method, mods, rest)?, after))
}

fn fold_left(first: Method, tail: Vec<(&Token, Method)>, combinator: Combinator) -> Method {
    tail.into_iter()
        .fold(first, |left, (_, right)| Method::Combined {
            left: Box::new(left),
            combinator,
            right: Box::new(right),
            modifiers: Vec::new(),
        })
}

fn struct_expr<'a>(input: Input<'a>) -> PResult<'a, Method> {
    map(sep_by1(unit, keyword(";")), |(first, tail)| {
        fold_left(first, tail, Combinator::Struct)
    })(input)
}

fn seq_expr<'a>(input: Input<'a>) -> PResult<'a, Method> {
    map(sep_by1(struct_expr, keyword(",")), |(first, tail)| {
        fold_left(first, tail, Combinator::Seq)
    })(input)
}

fn methods<'a>(input: Input<'a>) -> PResult<'a, Method> {
    map(sep_by1(seq_expr, keyword("|")), |(first, tail)| {
        fold_left(first, tail, Combinator::Alt)
    })(input)
}

/// Parses exactly one command-level method from proper tokens.
pub fn parse_method(tokens: &[&Token]) -> Result<Method, ModelError> {
    let mut methods = parse_method_list(tokens, 1, 1)?;
    Ok(methods.remove(0))
}

/// Parses between `min` and `max` command-level methods covering all of
/// `tokens`.
pub fn parse_method_list(
    tokens: &[&Token],
    min: usize,
    max: usize,
) -> Result<Vec<Method>, ModelError> {
    let (found, rest) = many(modified_atom)(tokens).map_err(malformed)?;
    if !rest.is_empty() {
        // Re-run the failing atom to report the furthest position reached.
        let at = match modified_atom(rest) {
            Err(f) => f.at,
            Ok(_) => rest.first().map(|t| t.range),
        };
        return Err(ModelError::MalformedMethod { at });
    }
    if found.len() < min || found.len() > max {
        return Err(ModelError::MalformedMethod {
            at: tokens.first().map(|t| t.range),
        });
    }
    Ok(found)
}

fn malformed(f: Failure) -> ModelError {
    ModelError::MalformedMethod { at: f.at }
}
