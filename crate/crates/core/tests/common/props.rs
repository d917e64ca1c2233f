//! Property checks shared by the property tests and the acceptance run.

use rand::rngs::StdRng;
use rand::SeedableRng;

use isar_lint::keywords::KeywordTable;
use isar_lint::lexer::{source_lines_of_code, tokenize, TokenKind};
use isar_lint::model::parse_method;

use super::gen;
use super::oracle::{self, Tree};

/// Lexer invariants that fail on `text`, as readable messages.
pub fn lexer_violations(text: &str) -> Vec<String> {
    let kw = KeywordTable::builtin();
    let tokens = tokenize(text, &kw);
    let mut out = Vec::new();
    let joined: String = tokens.iter().map(|t| t.source.as_str()).collect();
    if joined != text {
        out.push(format!("round trip failed for {text:?}"));
    }
    if tokenize(&joined, &kw) != tokens {
        out.push(format!("re-tokenizing changed the stream for {text:?}"));
    }
    let mut offset = 0;
    for pair in tokens.windows(2) {
        if pair[0].kind == TokenKind::Space && pair[1].kind == TokenKind::Space {
            out.push(format!("adjacent spaces in {text:?}"));
        }
    }
    for t in &tokens {
        if t.source.is_empty() {
            out.push(format!("empty token in {text:?}"));
        }
        if t.range.byte_offset_start != offset || t.range.byte_offset_end != offset + t.source.len()
        {
            out.push(format!("byte range of {:?} off in {text:?}", t.source));
        }
        offset = t.range.byte_offset_end;
    }
    out
}

/// Appending one proper line adds exactly one to SLOC. The text is first
/// closed off with a newline so the new line stands alone.
pub fn sloc_step_violation(text: &str) -> Option<String> {
    let kw = KeywordTable::builtin();
    let mut base = text.to_owned();
    let closed = tokenize(&base, &kw).last().is_none_or(|t| {
        !matches!(
            t.kind,
            TokenKind::Error | TokenKind::Comment | TokenKind::InformalComment
        )
    });
    if !closed {
        return None;
    }
    if !base.is_empty() && !base.ends_with('\n') {
        base.push('\n');
    }
    let before = source_lines_of_code(&base, &kw);
    let after = source_lines_of_code(&format!("{base}x\n"), &kw);
    (after != before + 1).then(|| format!("sloc {before} -> {after} for {text:?}"))
}

/// The generated tree with each argument split the way the oracle lexes it.
pub fn normalize(t: &Tree) -> Tree {
    match t {
        Tree::Simple { name, args, mods } => Tree::Simple {
            name: name.clone(),
            args: args.iter().flat_map(|a| oracle::lex(a)).collect(),
            mods: mods.clone(),
        },
        Tree::Combined {
            left,
            op,
            right,
            mods,
        } => Tree::Combined {
            left: Box::new(normalize(left)),
            op: *op,
            right: Box::new(normalize(right)),
            mods: mods.clone(),
        },
        Tree::Placeholder => Tree::Placeholder,
    }
}

fn library_parse(text: &str) -> Result<isar_lint::Method, String> {
    let tokens = tokenize(text, &KeywordTable::builtin());
    let proper: Vec<_> = tokens.iter().filter(|t| !t.is_improper()).collect();
    parse_method(&proper).map_err(|e| format!("{text:?}: {e}"))
}

/// One random method expression checked against the oracle, then printed
/// and parsed again.
pub fn method_case(seed: u64) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let tree = gen::tree(&mut rng, 4);
    let text = gen::render(&mut rng, &tree);
    let want = normalize(&tree);
    let by_oracle = oracle::parse(&text);
    if by_oracle.as_ref() != Some(&want) {
        return Err(format!(
            "seed {seed}: oracle disagrees with generator on {text:?}: {by_oracle:?}"
        ));
    }
    let method = library_parse(&text)?;
    let got = oracle::from_method(&method);
    if got != want {
        return Err(format!(
            "seed {seed}: parse_method disagrees on {text:?}: {got:?}"
        ));
    }
    let printed = method.to_string();
    let again = library_parse(&printed)?;
    if again != method {
        return Err(format!(
            "seed {seed}: {text:?} printed as {printed:?} parses differently"
        ));
    }
    Ok(())
}
