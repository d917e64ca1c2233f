//! Outer-syntax tokenizer for theory files.
//!
//! The token stream is lossless: concatenating every token's `source`
//! reproduces the input exactly. Malformed regions become [`TokenKind::Error`]
//! tokens instead of aborting, so later stages can still lint the rest of the
//! file.

use serde::Serialize;

use crate::keywords::{CommandCategory, KeywordTable};

/// Position of a token or lint in the source text.
///
/// Lines and columns are 1-based; columns count Unicode scalar values and
/// `end_col` is exclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SourceRange {
    pub start_line: usize,
    pub start_col: usize,
    pub end_line: usize,
    pub end_col: usize,
    pub byte_offset_start: usize,
    pub byte_offset_end: usize,
}

impl SourceRange {
    /// Smallest range covering both `self` and `other`.
    pub fn cover(self, other: SourceRange) -> SourceRange {
        let (start, end) = if self.byte_offset_start <= other.byte_offset_start {
            (self, other)
        } else {
            (other, self)
        };
        let end = if end.byte_offset_end >= start.byte_offset_end {
            end
        } else {
            start
        };
        SourceRange {
            start_line: start.start_line,
            start_col: start.start_col,
            end_line: end.end_line,
            end_col: end.end_col,
            byte_offset_start: start.byte_offset_start,
            byte_offset_end: end.byte_offset_end,
        }
    }

    pub fn contains(&self, other: &SourceRange) -> bool {
        self.byte_offset_start <= other.byte_offset_start
            && other.byte_offset_end <= self.byte_offset_end
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    Command(CommandCategory),
    Keyword,
    Ident,
    LongIdent,
    SymIdent,
    Var,
    TypeIdent,
    TypeVar,
    Nat,
    Float,
    String,
    AltString,
    Cartouche,
    Verbatim,
    Comment,
    InformalComment,
    Space,
    Error,
}

impl TokenKind {
    /// Whitespace and comments.
    pub fn is_improper(self) -> bool {
        matches!(
            self,
            TokenKind::Space | TokenKind::Comment | TokenKind::InformalComment
        )
    }

    pub fn is_command(self) -> bool {
        matches!(self, TokenKind::Command(_))
    }

    pub fn name(self) -> &'static str {
        match self {
            TokenKind::Command(_) => "command",
            TokenKind::Keyword => "keyword",
            TokenKind::Ident => "ident",
            TokenKind::LongIdent => "long_ident",
            TokenKind::SymIdent => "sym_ident",
            TokenKind::Var => "var",
            TokenKind::TypeIdent => "type_ident",
            TokenKind::TypeVar => "type_var",
            TokenKind::Nat => "nat",
            TokenKind::Float => "float",
            TokenKind::String => "string",
            TokenKind::AltString => "alt_string",
            TokenKind::Cartouche => "cartouche",
            TokenKind::Verbatim => "verbatim",
            TokenKind::Comment => "comment",
            TokenKind::InformalComment => "informal_comment",
            TokenKind::Space => "space",
            TokenKind::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Token {
    pub kind: TokenKind,
    pub source: String,
    pub range: SourceRange,
}

impl Token {
    pub fn is_improper(&self) -> bool {
        self.kind.is_improper()
    }

    /// True for keyword and command tokens spelled exactly `word`.
    pub fn is_keyword(&self, word: &str) -> bool {
        matches!(self.kind, TokenKind::Keyword | TokenKind::Command(_)) && self.source == word
    }

    /// Identifier-like tokens usable as names (facts, methods, attributes).
    pub fn is_name(&self) -> bool {
        matches!(
            self.kind,
            TokenKind::Ident | TokenKind::LongIdent | TokenKind::SymIdent | TokenKind::Nat
        ) || (self.kind == TokenKind::Keyword && self.source.chars().all(is_quasi_ascii))
    }
}

fn is_quasi_ascii(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

const GREEK_LETTERS: &[&str] = &[
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa", "mu",
    "nu", "xi", "pi", "rho", "sigma", "tau", "upsilon", "phi", "chi", "psi", "omega", "Gamma",
    "Delta", "Theta", "Lambda", "Xi", "Pi", "Sigma", "Upsilon", "Phi", "Psi", "Omega",
];

const QUASI_LETTER_CONTROLS: &[&str] = &["sub", "sup", "isub", "isup"];

const COMMENT_MARKERS: &[&str] = &["\\<comment>", "\u{2014}", "\\<^cancel>", "\\<^marker>"];

const OPEN_ESCAPE: &str = "\\<open>";
const CLOSE_ESCAPE: &str = "\\<close>";

/// Symbol starting at the beginning of `s`, if any: `\<name>` or `\<^name>`.
fn symbol_at(s: &str) -> Option<&str> {
    let rest = s.strip_prefix("\\<")?;
    let body = rest.strip_prefix('^').unwrap_or(rest);
    let name_len = body
        .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_' || c == '\''))
        .unwrap_or(body.len());
    if name_len == 0 || !body[name_len..].starts_with('>') {
        return None;
    }
    let total = 2 + (rest.len() - body.len()) + name_len + 1;
    Some(&s[..total])
}

fn is_letter_symbol(sym: &str) -> bool {
    let name = &sym[2..sym.len() - 1];
    if name.starts_with('^') {
        return false;
    }
    let ascii_letters = name.chars().all(|c| c.is_ascii_alphabetic());
    (ascii_letters
        && (name.len() == 1 || (name.len() == 2 && name.as_bytes()[0] == name.as_bytes()[1])))
        || GREEK_LETTERS.contains(&name)
}

fn is_quasi_control(sym: &str) -> bool {
    sym.strip_prefix("\\<^")
        .and_then(|s| s.strip_suffix('>'))
        .is_some_and(|name| QUASI_LETTER_CONTROLS.contains(&name))
}

fn is_unicode_letter(c: char) -> bool {
    // U+03BB is the lambda binder, never part of a name.
    !c.is_ascii() && c.is_alphabetic() && c != '\u{3bb}'
}

/// Byte length of a letter at the start of `s` (ASCII, Unicode or symbol).
fn letter_len(s: &str) -> usize {
    match s.chars().next() {
        Some(c) if c.is_ascii_alphabetic() => 1,
        Some(c) if is_unicode_letter(c) => c.len_utf8(),
        Some('\\') => symbol_at(s)
            .filter(|sym| is_letter_symbol(sym))
            .map_or(0, str::len),
        _ => 0,
    }
}

/// Byte length of a quasi-letter (letter, digit, `_`, `'`, subscript).
fn quasi_len(s: &str) -> usize {
    match s.chars().next() {
        Some(c) if c.is_ascii_digit() || c == '_' || c == '\'' => 1,
        Some('\\') => match symbol_at(s) {
            Some(sym) if is_quasi_control(sym) || is_letter_symbol(sym) => sym.len(),
            _ => 0,
        },
        _ => letter_len(s),
    }
}

fn is_blank(c: char) -> bool {
    matches!(c, ' ' | '\t' | '\n' | '\r' | '\u{b}' | '\u{c}')
}

fn is_symbolic_char(c: char) -> bool {
    "!#$%&*+-/<=>?@^_|~".contains(c)
}

struct Scanner<'a> {
    input: &'a str,
    keywords: &'a KeywordTable,
    pos: usize,
    line: usize,
    col: usize,
    tokens: Vec<Token>,
}

impl<'a> Scanner<'a> {
    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn emit(&mut self, kind: TokenKind, len: usize) {
        debug_assert!(len > 0);
        let source = &self.input[self.pos..self.pos + len];
        let (start_line, start_col) = (self.line, self.col);
        for c in source.chars() {
            if c == '\n' {
                self.line += 1;
                self.col = 1;
            } else {
                self.col += 1;
            }
        }
        self.tokens.push(Token {
            kind,
            source: source.to_owned(),
            range: SourceRange {
                start_line,
                start_col,
                end_line: self.line,
                end_col: self.col,
                byte_offset_start: self.pos,
                byte_offset_end: self.pos + len,
            },
        });
        self.pos += len;
    }

    fn run(mut self) -> Vec<Token> {
        while self.pos < self.input.len() {
            let (kind, len) = self.scan();
            self.emit(kind, len);
        }
        self.tokens
    }

    fn scan(&self) -> (TokenKind, usize) {
        let rest = self.rest();
        let first = rest.chars().next().expect("scan past end of input");

        if is_blank(first) {
            let len = rest.find(|c| !is_blank(c)).unwrap_or(rest.len());
            return (TokenKind::Space, len);
        }
        if rest.starts_with("(*") {
            return match scan_comment(rest) {
                Some(len) => (TokenKind::Comment, len),
                None => (TokenKind::Error, rest.len()),
            };
        }
        if let Some(marker) = COMMENT_MARKERS.iter().find(|m| rest.starts_with(**m)) {
            return scan_informal_comment(rest, marker.len());
        }
        if is_cartouche_open(rest) > 0 {
            return match scan_cartouche(rest) {
                Some(len) => (TokenKind::Cartouche, len),
                None => (TokenKind::Error, rest.len()),
            };
        }
        if first == '"' || first == '`' {
            let kind = if first == '"' {
                TokenKind::String
            } else {
                TokenKind::AltString
            };
            return match scan_quoted(rest, first) {
                Some(len) => (kind, len),
                None => (TokenKind::Error, rest.len()),
            };
        }
        if let Some(body) = rest.strip_prefix("{*") {
            return match body.find("*}") {
                Some(end) => (TokenKind::Verbatim, end + 4),
                None => (TokenKind::Error, rest.len()),
            };
        }
        if let Some(len) = is_cartouche_close(rest) {
            return (TokenKind::Error, len);
        }
        if letter_len(rest) > 0 {
            return self.scan_word(rest);
        }
        if first == '\'' && letter_len(&rest[1..]) > 0 {
            return (TokenKind::TypeIdent, 1 + ident_len(&rest[1..]));
        }
        if first == '?' {
            if letter_len(&rest[1..]) > 0 {
                return (TokenKind::Var, 1 + var_len(&rest[1..]));
            }
            if rest[1..].starts_with('\'') && letter_len(&rest[2..]) > 0 {
                return (TokenKind::TypeVar, 2 + ident_len(&rest[2..]));
            }
        }
        if first.is_ascii_digit() {
            let nat = digits_len(rest);
            if rest[nat..].starts_with('.') {
                let frac = digits_len(&rest[nat + 1..]);
                if frac > 0 {
                    return (TokenKind::Float, nat + 1 + frac);
                }
            }
            return (TokenKind::Nat, nat);
        }
        if first == '\\' {
            return match symbol_at(rest) {
                Some(sym) if sym.starts_with("\\<^") => {
                    let after = &rest[sym.len()..];
                    if is_cartouche_open(after) > 0 {
                        match scan_cartouche(after) {
                            Some(len) => (TokenKind::Cartouche, sym.len() + len),
                            None => (TokenKind::Error, rest.len()),
                        }
                    } else {
                        (TokenKind::SymIdent, sym.len())
                    }
                }
                Some(sym) => {
                    if self.keywords.is_minor(sym) {
                        (TokenKind::Keyword, sym.len())
                    } else {
                        (TokenKind::SymIdent, sym.len())
                    }
                }
                None => (TokenKind::Error, 1),
            };
        }

        let keyword_len = self.keywords.longest_symbolic_prefix(rest);
        let sym_len = rest.find(|c| !is_symbolic_char(c)).unwrap_or(rest.len());
        if keyword_len > 0 && keyword_len >= sym_len {
            let word = &rest[..keyword_len];
            return match self.keywords.command_category(word) {
                Some(category) => (TokenKind::Command(category), keyword_len),
                None => (TokenKind::Keyword, keyword_len),
            };
        }
        if sym_len > 0 {
            return (TokenKind::SymIdent, sym_len);
        }
        if !first.is_ascii() && !first.is_control() {
            return (TokenKind::SymIdent, first.len_utf8());
        }
        (TokenKind::Error, first.len_utf8())
    }

    fn scan_word(&self, rest: &str) -> (TokenKind, usize) {
        let mut len = ident_len(rest);
        let mut long = false;
        while rest[len..].starts_with('.') && letter_len(&rest[len + 1..]) > 0 {
            len += 1 + ident_len(&rest[len + 1..]);
            long = true;
        }
        if long {
            return (TokenKind::LongIdent, len);
        }
        let word = &rest[..len];
        if let Some(category) = self.keywords.command_category(word) {
            (TokenKind::Command(category), len)
        } else if self.keywords.is_minor(word) {
            (TokenKind::Keyword, len)
        } else {
            (TokenKind::Ident, len)
        }
    }
}

fn ident_len(s: &str) -> usize {
    let mut len = letter_len(s);
    loop {
        let step = quasi_len(&s[len..]);
        if step == 0 {
            return len;
        }
        len += step;
    }
}

fn var_len(s: &str) -> usize {
    let mut len = ident_len(s);
    if s[len..].starts_with('.') {
        let index = digits_len(&s[len + 1..]);
        if index > 0 {
            len += 1 + index;
        }
    }
    len
}

fn digits_len(s: &str) -> usize {
    s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len())
}

fn is_cartouche_open(s: &str) -> usize {
    if s.starts_with('\u{2039}') {
        '\u{2039}'.len_utf8()
    } else if s.starts_with(OPEN_ESCAPE) {
        OPEN_ESCAPE.len()
    } else {
        0
    }
}

fn is_cartouche_close(s: &str) -> Option<usize> {
    if s.starts_with('\u{203a}') {
        Some('\u{203a}'.len_utf8())
    } else if s.starts_with(CLOSE_ESCAPE) {
        Some(CLOSE_ESCAPE.len())
    } else {
        None
    }
}

/// Length of a nested cartouche starting at `s`, or `None` if unterminated.
fn scan_cartouche(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    let mut pos = 0;
    while pos < s.len() {
        let rest = &s[pos..];
        let open = is_cartouche_open(rest);
        if open > 0 {
            depth += 1;
            pos += open;
        } else if let Some(close) = is_cartouche_close(rest) {
            depth -= 1;
            pos += close;
            if depth == 0 {
                return Some(pos);
            }
        } else {
            pos += rest.chars().next().map_or(1, char::len_utf8);
        }
    }
    None
}

/// Length of a nested `(* *)` comment starting at `s`.
fn scan_comment(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    let mut depth = 0usize;
    let mut pos = 0;
    while pos + 1 < bytes.len() {
        match (bytes[pos], bytes[pos + 1]) {
            (b'(', b'*') => {
                depth += 1;
                pos += 2;
            }
            (b'*', b')') => {
                depth -= 1;
                pos += 2;
                if depth == 0 {
                    return Some(pos);
                }
            }
            _ => pos += 1,
        }
    }
    None
}

fn scan_quoted(s: &str, quote: char) -> Option<usize> {
    let mut chars = s.char_indices().skip(1);
    while let Some((i, c)) = chars.next() {
        if c == '\\' {
            chars.next()?;
        } else if c == quote {
            return Some(i + c.len_utf8());
        }
    }
    None
}

/// A comment marker, optionally followed by blanks and a cartouche.
fn scan_informal_comment(s: &str, marker_len: usize) -> (TokenKind, usize) {
    let after = &s[marker_len..];
    let blanks = after.find(|c| !is_blank(c)).unwrap_or(after.len());
    let body = &after[blanks..];
    if is_cartouche_open(body) > 0 {
        match scan_cartouche(body) {
            Some(len) => (TokenKind::InformalComment, marker_len + blanks + len),
            None => (TokenKind::Error, s.len()),
        }
    } else {
        (TokenKind::InformalComment, marker_len)
    }
}

/// Splits `text` into outer-syntax tokens.
pub fn tokenize(text: &str, keywords: &KeywordTable) -> Vec<Token> {
    Scanner {
        input: text,
        keywords,
        pos: 0,
        line: 1,
        col: 1,
        tokens: Vec::new(),
    }
    .run()
}

/// Number of lines carrying at least one token other than whitespace or
/// comments.
pub fn source_lines_of_code(text: &str, keywords: &KeywordTable) -> usize {
    sloc_of_tokens(&tokenize(text, keywords))
}

pub fn sloc_of_tokens(tokens: &[Token]) -> usize {
    let mut count = 0;
    let mut last_counted = 0;
    for token in tokens.iter().filter(|t| !t.is_improper()) {
        let first = token.range.start_line.max(last_counted + 1);
        if token.range.end_line >= first {
            count += token.range.end_line - first + 1;
            last_counted = token.range.end_line;
        }
    }
    count
}
