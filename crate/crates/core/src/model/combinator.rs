//! Backtracking parser combinators over proper tokens.
//!
//! A parser maps an input slice to a value plus the unconsumed remainder.
//! Inputs are immutable slices, so a failing parser never consumes anything
//! and alternation simply retries on the original input.

use crate::lexer::{SourceRange, Token, TokenKind};

pub type Input<'a> = &'a [&'a Token];

/// Where a parse stopped making progress.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Failure {
    /// Tokens left when the failure happened; smaller means further along.
    pub remaining: usize,
    pub at: Option<SourceRange>,
}

impl Failure {
    pub fn at(input: Input<'_>) -> Failure {
        Failure {
            remaining: input.len(),
            at: input.first().map(|t| t.range),
        }
    }

    /// The failure that got further into the input.
    pub fn furthest(self, other: Failure) -> Failure {
        if other.remaining < self.remaining {
            other
        } else {
            self
        }
    }
}

pub type PResult<'a, O> = Result<(O, Input<'a>), Failure>;

pub trait Parser<'a, O> {
    fn parse(&self, input: Input<'a>) -> PResult<'a, O>;
}

impl<'a, O, F> Parser<'a, O> for F
where
    F: Fn(Input<'a>) -> PResult<'a, O>,
{
    fn parse(&self, input: Input<'a>) -> PResult<'a, O> {
        self(input)
    }
}

/// One token satisfying `pred`.
pub fn satisfy<'a>(pred: impl Fn(&Token) -> bool) -> impl Fn(Input<'a>) -> PResult<'a, &'a Token> {
    move |input: Input<'a>| match input.split_first() {
        Some((tok, rest)) if pred(tok) => Ok((*tok, rest)),
        _ => Err(Failure::at(input)),
    }
}

pub fn any_token<'a>() -> impl Fn(Input<'a>) -> PResult<'a, &'a Token> {
    satisfy(|_| true)
}

pub fn kind<'a>(kind: TokenKind) -> impl Fn(Input<'a>) -> PResult<'a, &'a Token> {
    satisfy(move |t| t.kind == kind)
}

/// A keyword or command token spelled `word`.
pub fn keyword<'a>(word: &'static str) -> impl Fn(Input<'a>) -> PResult<'a, &'a Token> {
    satisfy(move |t| t.is_keyword(word))
}

/// Any non-quoted token spelled `word`.
pub fn word<'a>(word: &'static str) -> impl Fn(Input<'a>) -> PResult<'a, &'a Token> {
    satisfy(move |t| {
        t.source == word
            && !matches!(
                t.kind,
                TokenKind::String | TokenKind::AltString | TokenKind::Cartouche
            )
    })
}

/// A name token (identifier, long identifier, symbolic identifier, nat,
/// or alphabetic minor keyword).
pub fn name<'a>() -> impl Fn(Input<'a>) -> PResult<'a, &'a Token> {
    satisfy(Token::is_name)
}

pub fn eof<'a>() -> impl Fn(Input<'a>) -> PResult<'a, ()> {
    |input: Input<'a>| {
        if input.is_empty() {
            Ok(((), input))
        } else {
            Err(Failure::at(input))
        }
    }
}

pub fn map<'a, A, B>(
    p: impl Parser<'a, A>,
    f: impl Fn(A) -> B,
) -> impl Fn(Input<'a>) -> PResult<'a, B> {
    move |input| p.parse(input).map(|(a, rest)| (f(a), rest))
}

pub fn opt<'a, A>(p: impl Parser<'a, A>) -> impl Fn(Input<'a>) -> PResult<'a, Option<A>> {
    move |input| match p.parse(input) {
        Ok((a, rest)) => Ok((Some(a), rest)),
        Err(_) => Ok((None, input)),
    }
}

pub fn many<'a, A>(p: impl Parser<'a, A>) -> impl Fn(Input<'a>) -> PResult<'a, Vec<A>> {
    move |mut input| {
        let mut out = Vec::new();
        while let Ok((a, rest)) = p.parse(input) {
            if rest.len() == input.len() {
                break;
            }
            out.push(a);
            input = rest;
        }
        Ok((out, input))
    }
}

pub fn many1<'a, A>(p: impl Parser<'a, A>) -> impl Fn(Input<'a>) -> PResult<'a, Vec<A>> {
    let inner = many(p);
    move |input| {
        let (items, rest) = inner(input)?;
        if items.is_empty() {
            Err(Failure::at(input))
        } else {
            Ok((items, rest))
        }
    }
}

/// Tries `p`, then `q` on the same input.
pub fn alt<'a, A>(
    p: impl Parser<'a, A>,
    q: impl Parser<'a, A>,
) -> impl Fn(Input<'a>) -> PResult<'a, A> {
    move |input| match p.parse(input) {
        Ok(ok) => Ok(ok),
        Err(e1) => q.parse(input).map_err(|e2| e1.furthest(e2)),
    }
}

pub fn seq<'a, A, B>(
    p: impl Parser<'a, A>,
    q: impl Parser<'a, B>,
) -> impl Fn(Input<'a>) -> PResult<'a, (A, B)> {
    move |input| {
        let (a, rest) = p.parse(input)?;
        let (b, rest) = q.parse(rest)?;
        Ok(((a, b), rest))
    }
}

pub fn preceded<'a, A, B>(
    p: impl Parser<'a, A>,
    q: impl Parser<'a, B>,
) -> impl Fn(Input<'a>) -> PResult<'a, B> {
    map(seq(p, q), |(_, b)| b)
}

pub fn terminated<'a, A, B>(
    p: impl Parser<'a, A>,
    q: impl Parser<'a, B>,
) -> impl Fn(Input<'a>) -> PResult<'a, A> {
    map(seq(p, q), |(a, _)| a)
}

pub fn delimited<'a, A, B, C>(
    open: impl Parser<'a, A>,
    p: impl Parser<'a, B>,
    close: impl Parser<'a, C>,
) -> impl Fn(Input<'a>) -> PResult<'a, B> {
    preceded(open, terminated(p, close))
}

/// The first item and every following `(separator, item)` pair.
pub type Separated<A, S> = (A, Vec<(S, A)>);

/// One or more `p` separated by `sep`; separators are returned alongside.
pub fn sep_by1<'a, A, S>(
    p: impl Parser<'a, A>,
    sep: impl Parser<'a, S>,
) -> impl Fn(Input<'a>) -> PResult<'a, Separated<A, S>> {
    move |input| {
        let (first, mut rest) = p.parse(input)?;
        let mut tail = Vec::new();
        loop {
            let Ok((s, after_sep)) = sep.parse(rest) else {
                break;
            };
            match p.parse(after_sep) {
                Ok((a, after)) => {
                    tail.push((s, a));
                    rest = after;
                }
                Err(e) => return Err(e),
            }
        }
        Ok(((first, tail), rest))
    }
}

/// Tokens up to (not including) the first token at bracket depth zero for
/// which `stop` holds. Parentheses and brackets nest; an unbalanced closer
/// at depth zero also stops.
pub fn balanced_until<'a>(
    stop: impl Fn(&Token) -> bool,
) -> impl Fn(Input<'a>) -> PResult<'a, Vec<&'a Token>> {
    move |input: Input<'a>| {
        let mut depth = 0usize;
        let mut taken = 0;
        for tok in input {
            if depth == 0 && (stop(tok) || tok.is_keyword(")") || tok.is_keyword("]")) {
                break;
            }
            if tok.is_keyword("(") || tok.is_keyword("[") {
                depth += 1;
            } else if tok.is_keyword(")") || tok.is_keyword("]") {
                depth -= 1;
            }
            taken += 1;
        }
        if depth != 0 {
            return Err(Failure {
                remaining: 0,
                at: None,
            });
        }
        Ok((input[..taken].to_vec(), &input[taken..]))
    }
}

/// Runs `p` and requires it to consume the whole input.
pub fn complete<'a, A>(p: impl Parser<'a, A>, input: Input<'a>) -> Result<A, Failure> {
    let (a, rest) = p.parse(input)?;
    if rest.is_empty() {
        Ok(a)
    } else {
        Err(Failure::at(rest))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::keywords::KeywordTable;
    use crate::lexer::tokenize;

    fn proper(text: &str) -> Vec<Token> {
        tokenize(text, &KeywordTable::builtin())
            .into_iter()
            .filter(|t| !t.is_improper())
            .collect()
    }

    #[test]
    fn failure_consumes_nothing() {
        let toks = proper("a b");
        let refs: Vec<&Token> = toks.iter().collect();
        let p = seq(word("a"), word("c"));
        let err = p(&refs).unwrap_err();
        assert_eq!(err.remaining, 1);
        let q = alt(seq(word("a"), word("c")), seq(word("a"), word("b")));
        let ((x, y), rest) = q(&refs).unwrap();
        assert_eq!((x.source.as_str(), y.source.as_str()), ("a", "b"));
        assert!(rest.is_empty());
    }

    #[test]
    fn many_and_opt() {
        let toks = proper("x x x y");
        let refs: Vec<&Token> = toks.iter().collect();
        let (xs, rest) = many(word("x"))(&refs).unwrap();
        assert_eq!(xs.len(), 3);
        assert_eq!(rest.len(), 1);
        let (none, rest2) = opt(word("z"))(rest).unwrap();
        assert!(none.is_none());
        assert_eq!(rest2.len(), 1);
        assert!(many1(word("z"))(rest).is_err());
    }

    #[test]
    fn sep_by_collects_separators() {
        let toks = proper("a, b; c");
        let refs: Vec<&Token> = toks.iter().collect();
        let sep = alt(keyword(","), keyword(";"));
        let ((first, tail), rest) = sep_by1(name(), sep)(&refs).unwrap();
        assert_eq!(first.source, "a");
        assert_eq!(tail.len(), 2);
        assert_eq!(tail[1].0.source, ";");
        assert!(rest.is_empty());
    }

    #[test]
    fn balanced_until_respects_nesting() {
        let toks = proper("foo[of x, y] (a, b), c");
        let refs: Vec<&Token> = toks.iter().collect();
        let (taken, rest) = balanced_until(|t| t.is_keyword(","))(&refs).unwrap();
        assert_eq!(taken.len(), 12);
        assert_eq!(rest[0].source, ",");
        let open = proper("(a");
        let refs: Vec<&Token> = open.iter().collect();
        assert!(balanced_until(|_| false)(&refs).is_err());
    }

    #[test]
    fn complete_rejects_leftovers() {
        let toks = proper("a b");
        let refs: Vec<&Token> = toks.iter().collect();
        let err = complete(word("a"), &refs).unwrap_err();
        assert_eq!(err.at.unwrap().start_col, 3);
    }
}
