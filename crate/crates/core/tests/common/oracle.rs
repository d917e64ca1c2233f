//! A reference method parser written independently of the library.
//!
//! It works on a tiny character-level tokenizer and parses by splitting at
//! the last top-level occurrence of the weakest combinator, which yields
//! left-associated trees without any combinator machinery.

use isar_lint::model::{Combinator, Method, Modifier};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tree {
    Simple {
        name: String,
        args: Vec<String>,
        mods: Vec<String>,
    },
    Combined {
        left: Box<Tree>,
        op: char,
        right: Box<Tree>,
        mods: Vec<String>,
    },
    Placeholder,
}

fn mods_of(ms: &[Modifier]) -> Vec<String> {
    ms.iter()
        .map(|m| match m {
            Modifier::Try => "?".to_owned(),
            Modifier::Repeat => "+".to_owned(),
            Modifier::Restrict(n) => format!("[{n}]"),
        })
        .collect()
}

/// The library's tree in oracle form.
pub fn from_method(m: &Method) -> Tree {
    match m {
        Method::Simple {
            name,
            args,
            modifiers,
        } => Tree::Simple {
            name: name.clone(),
            args: args.iter().map(|t| t.source.clone()).collect(),
            mods: mods_of(modifiers),
        },
        Method::Combined {
            left,
            combinator,
            right,
            modifiers,
        } => Tree::Combined {
            left: Box::new(from_method(left)),
            op: match combinator {
                Combinator::Seq => ',',
                Combinator::Struct => ';',
                Combinator::Alt => '|',
            },
            right: Box::new(from_method(right)),
            mods: mods_of(modifiers),
        },
        Method::Placeholder => Tree::Placeholder,
    }
}

/// Splits text into identifiers, numbers, cartouches and single
/// punctuation characters.
pub fn lex(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_alphanumeric() || matches!(chars[i], '_' | '\'' | '.'))
            {
                i += 1;
            }
            out.push(chars[start..i].iter().collect());
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(chars[start..i].iter().collect());
        } else if c == '\u{2039}' {
            let start = i;
            let mut depth = 0;
            loop {
                match chars[i] {
                    '\u{2039}' => depth += 1,
                    '\u{203a}' => depth -= 1,
                    _ => {}
                }
                i += 1;
                if depth == 0 {
                    break;
                }
            }
            out.push(chars[start..i].iter().collect());
        } else {
            out.push(c.to_string());
            i += 1;
        }
    }
    out
}

fn opens(t: &str) -> bool {
    t == "(" || t == "["
}

fn closes(t: &str) -> bool {
    t == ")" || t == "]"
}

/// Index of the last top-level `sep`.
fn last_top_level(toks: &[String], sep: &str) -> Option<usize> {
    let mut depth = 0i32;
    let mut found = None;
    for (i, t) in toks.iter().enumerate() {
        if opens(t) {
            depth += 1;
        } else if closes(t) {
            depth -= 1;
        } else if depth == 0 && t == sep {
            found = Some(i);
        }
    }
    found
}

/// Reads a run of modifiers covering all of `toks`.
fn modifier_run(toks: &[String]) -> Option<Vec<String>> {
    let mut mods = Vec::new();
    let mut i = 0;
    while i < toks.len() {
        match toks[i].as_str() {
            "?" | "+" => {
                mods.push(toks[i].clone());
                i += 1;
            }
            "[" if toks.get(i + 1).map(String::as_str) == Some("]") => {
                mods.push("[1]".to_owned());
                i += 2;
            }
            "[" if toks.get(i + 2).map(String::as_str) == Some("]")
                && toks[i + 1].chars().all(|c| c.is_ascii_digit()) =>
            {
                mods.push(format!("[{}]", toks[i + 1].parse::<usize>().ok()?));
                i += 3;
            }
            _ => return None,
        }
    }
    Some(mods)
}

fn add_mods(tree: Tree, extra: Vec<String>) -> Option<Tree> {
    if extra.is_empty() {
        return Some(tree);
    }
    match tree {
        Tree::Simple {
            name,
            args,
            mut mods,
        } => {
            mods.extend(extra);
            Some(Tree::Simple { name, args, mods })
        }
        Tree::Combined {
            left,
            op,
            right,
            mut mods,
        } => {
            mods.extend(extra);
            Some(Tree::Combined {
                left,
                op,
                right,
                mods,
            })
        }
        Tree::Placeholder => None,
    }
}

fn is_name(t: &str) -> bool {
    t.chars()
        .next()
        .is_some_and(|c| c.is_alphabetic() || c == '_')
}

/// Index of the `)` matching the `(` at 0.
fn matching_paren(toks: &[String]) -> Option<usize> {
    let mut depth = 0i32;
    for (i, t) in toks.iter().enumerate() {
        if opens(t) {
            depth += 1;
        } else if closes(t) {
            depth -= 1;
            if depth == 0 {
                return (t == ")").then_some(i);
            }
        }
    }
    None
}

fn group(toks: &[String]) -> Option<Tree> {
    let close = matching_paren(toks)?;
    let inner = expr(&toks[1..close])?;
    add_mods(inner, modifier_run(&toks[close + 1..])?)
}

fn unit(toks: &[String]) -> Option<Tree> {
    let first = toks.first()?;
    if first == "(" {
        return group(toks);
    }
    if first == "-" {
        return (toks.len() == 1).then_some(Tree::Placeholder);
    }
    if !is_name(first) {
        return None;
    }
    let rest = &toks[1..];
    let simple = |args: Vec<String>, mods| Tree::Simple {
        name: first.clone(),
        args,
        mods,
    };
    match modifier_run(rest) {
        Some(mods) if !mods.is_empty() => Some(simple(Vec::new(), mods)),
        _ => Some(simple(rest.to_vec(), Vec::new())),
    }
}

fn level(toks: &[String], seps: &[(&str, char)]) -> Option<Tree> {
    let Some(((sep, op), weaker)) = seps.split_first() else {
        return unit(toks);
    };
    match last_top_level(toks, sep) {
        Some(i) => Some(Tree::Combined {
            left: Box::new(level(&toks[..i], seps)?),
            op: *op,
            right: Box::new(level(&toks[i + 1..], weaker)?),
            mods: Vec::new(),
        }),
        None => level(toks, weaker),
    }
}

fn expr(toks: &[String]) -> Option<Tree> {
    level(toks, &[("|", '|'), (",", ','), (";", ';')])
}

/// Parses one command-level method: a group, a bare name or `-`, each
/// optionally followed by modifiers.
pub fn parse(text: &str) -> Option<Tree> {
    let toks = lex(text);
    let first = toks.first()?;
    if first == "(" {
        return group(&toks);
    }
    if first == "-" {
        return (toks.len() == 1).then_some(Tree::Placeholder);
    }
    if !is_name(first) {
        return None;
    }
    let mods = modifier_run(&toks[1..])?;
    Some(Tree::Simple {
        name: first.clone(),
        args: Vec::new(),
        mods,
    })
}

/// Sanity checks on hand-written inputs.
pub fn self_check() {
    let t = parse("(a, b; c | d)").unwrap();
    let Tree::Combined { op: '|', left, .. } = t else {
        panic!("{t:?}")
    };
    let Tree::Combined { op: ',', right, .. } = *left else {
        panic!()
    };
    assert!(matches!(*right, Tree::Combined { op: ';', .. }));
    assert_eq!(
        parse("(simp add: foo)[2]"),
        Some(Tree::Simple {
            name: "simp".into(),
            args: vec!["add".into(), ":".into(), "foo".into()],
            mods: vec!["[2]".into()]
        })
    );
    assert_eq!(parse("simp add"), None);
}
