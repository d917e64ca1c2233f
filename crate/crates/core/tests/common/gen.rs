//! Seeded generators for random inputs.

use rand::seq::IndexedRandom;
use rand::Rng;

use super::oracle::Tree;

const NAMES: &[&str] = &[
    "simp",
    "auto",
    "blast",
    "force",
    "fastforce",
    "metis",
    "rule",
    "erule",
    "cases",
    "induct",
    "intro",
    "arith",
    "simp_all",
    "subst",
    "linarith",
];
const ARGS: &[&str] = &[
    "add:",
    "foo",
    "bar",
    "only:",
    "del:",
    "x=\u{2039}y\u{203a}",
    "conjI",
    "in",
    "exI",
    "\u{2039}P x\u{203a}",
    "2",
];
const OPS: &[char] = &['|', ',', ';'];

fn pick<'a, R: Rng>(rng: &mut R, items: &'a [&'a str]) -> &'a str {
    items.choose(rng).expect("non-empty")
}

fn modifiers<R: Rng>(rng: &mut R) -> Vec<String> {
    let n = if rng.random_bool(0.7) {
        0
    } else {
        rng.random_range(1..=2)
    };
    (0..n)
        .map(|_| match rng.random_range(0..4) {
            0 => "?".to_owned(),
            1 => "+".to_owned(),
            2 => format!("[{}]", rng.random_range(1..4)),
            _ => "[1]".to_owned(),
        })
        .collect()
}

/// A random method tree of at most `depth` combinator levels.
pub fn tree<R: Rng>(rng: &mut R, depth: usize) -> Tree {
    if depth == 0 || rng.random_bool(0.35) {
        if depth < 4 && rng.random_bool(0.08) {
            return Tree::Placeholder;
        }
        let args = if rng.random_bool(0.3) {
            (0..rng.random_range(1..=3))
                .map(|_| pick(rng, ARGS).to_owned())
                .collect()
        } else {
            Vec::new()
        };
        return Tree::Simple {
            name: pick(rng, NAMES).to_owned(),
            args,
            mods: modifiers(rng),
        };
    }
    Tree::Combined {
        left: Box::new(tree(rng, depth - 1)),
        op: *OPS.choose(rng).expect("non-empty"),
        right: Box::new(tree(rng, depth - 1)),
        mods: modifiers(rng),
    }
}

fn prec(op: char) -> u8 {
    match op {
        '|' => 0,
        ',' => 1,
        _ => 2,
    }
}

fn args_text(rng: &mut impl Rng, args: &[String]) -> String {
    let mut out = String::new();
    for a in args {
        out.push(' ');
        // `add:` may be written with the colon detached.
        match a.strip_suffix(':') {
            Some(word) if rng.random_bool(0.3) => {
                out.push_str(word);
                out.push_str(" :");
            }
            _ => out.push_str(a),
        }
    }
    out
}

fn mods_text(rng: &mut impl Rng, mods: &[String]) -> String {
    let mut out = String::new();
    for m in mods {
        if rng.random_bool(0.3) {
            out.push(' ');
        }
        out.push_str(m);
    }
    out
}

/// Renders `t` so that it parses back as `t` in a context binding at least
/// as tightly as `min` (0 alt .. 2 struct, 3 unit with arguments, 4 atom).
fn render_in(rng: &mut impl Rng, t: &Tree, min: u8) -> String {
    let (text, p) = match t {
        Tree::Placeholder => ("-".to_owned(), 4),
        Tree::Simple { name, args, mods } if args.is_empty() => {
            (format!("{name}{}", mods_text(rng, mods)), 4)
        }
        Tree::Simple { name, args, mods } if mods.is_empty() => {
            (format!("{name}{}", args_text(rng, args)), 3)
        }
        Tree::Simple { name, args, mods } => (
            format!("({name}{}){}", args_text(rng, args), mods_text(rng, mods)),
            4,
        ),
        Tree::Combined {
            left,
            op,
            right,
            mods,
        } => {
            let p = prec(*op);
            let body = format!(
                "{} {op} {}",
                render_in(rng, left, p),
                render_in(rng, right, p + 1)
            );
            if mods.is_empty() {
                (body, p)
            } else {
                (format!("({body}){}", mods_text(rng, mods)), 4)
            }
        }
    };
    if p < min || (p == 4 && rng.random_bool(0.05)) {
        format!("({text})")
    } else {
        text
    }
}

/// Command-level concrete syntax for `t`.
pub fn render(rng: &mut impl Rng, t: &Tree) -> String {
    render_in(rng, t, 4)
}

const FRAGMENTS: &[&str] = &[
    "(*",
    "*)",
    "\u{2039}",
    "\u{203a}",
    "\\<open>",
    "\\<close>",
    "\"",
    "`",
    "{*",
    "*}",
    "\\",
    " ",
    "  ",
    "\n",
    "\t",
    "lemma",
    "apply",
    "by",
    "proof",
    "qed",
    "done",
    "foo",
    "x1",
    "'a",
    "?x",
    "1",
    "1.5",
    "::",
    ":",
    "=",
    "(",
    ")",
    "[",
    "]",
    ",",
    ";",
    "|",
    "+",
    "?",
    "-",
    ".",
    "..",
    "\\<comment>",
    "\u{2014}",
    "\\<^sub>",
    "\\<alpha>",
    "\u{3b1}",
    "\\<^cancel>",
    "@{",
    "}",
    "%",
    "#",
    "_",
    "A.B",
    "\r\n",
    "\u{e9}",
];

/// Random text mixing syntax fragments with arbitrary characters.
pub fn theory_noise<R: Rng>(rng: &mut R, max_parts: usize) -> String {
    let n = rng.random_range(0..=max_parts);
    let mut out = String::new();
    for _ in 0..n {
        if rng.random_bool(0.85) {
            out.push_str(pick(rng, FRAGMENTS));
        } else {
            let c = loop {
                if let Some(c) = char::from_u32(rng.random_range(0..0x3000)) {
                    break c;
                }
            };
            out.push(c);
        }
    }
    out
}

/// A well-formed theory body of roughly `target_sloc` source lines that
/// exercises every lint family.
pub fn synthetic_theory(target_sloc: usize) -> String {
    let blocks = [
        "lemma l{i}: \u{2039}P{i} x\u{203a}\n  apply (rule conjI)\n  apply (erule disjE)\n  apply (simp add: foo{i})\n  done\n",
        "lemma [simp]: \u{2039}Q{i} = Q{i}\u{203a}\n  by (simp; auto; force)\n",
        "(* block {i} *)\nlemma m{i}:\n  assumes \"A\"\n  shows \"B\"\nproof (cases x)\n  case True\n  then show ?thesis by auto\nnext\n  case False\n  then show ?thesis by (auto simp: bar)\nqed\n",
        "declare foo{i}[simp]\nlemmas n{i} = foo[simplified]\n\n",
        "lemma k{i}: \u{2039}R{i}\u{203a}\n  apply auto\n  apply (subgoal_tac \u{2039}S\u{203a})\n  apply (rule_tac x=\u{2039}y\u{203a} in exI)\n  apply rule\nproof -\n  show ?thesis sorry\nqed\n",
        "axiomatization c{i} :: \u{2039}nat\u{203a} where ax{i}: \u{2039}c{i} = 0\u{203a}\ntext \u{2039}Some prose about {i}.\u{203a}\n",
    ];
    let mut out = String::from("theory Synthetic\n  imports Main\nbegin\n\n");
    let mut i = 0;
    while out
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with("(*"))
        .count()
        < target_sloc
    {
        out.push_str(&blocks[i % blocks.len()].replace("{i}", &i.to_string()));
        i += 1;
    }
    out.push_str("\nend\n");
    out
}

/// Like [`theory_noise`] but without any fragment that opens a literal or
/// comment, so the text always ends outside of one.
pub fn closed_noise<R: Rng>(rng: &mut R, max_parts: usize) -> String {
    const OPENERS: &[&str] = &[
        "(*",
        "\u{2039}",
        "\\<open>",
        "\"",
        "`",
        "{*",
        "\\<comment>",
        "\u{2014}",
        "\\<^cancel>",
        "@{",
        "\\",
    ];
    let closed: Vec<&str> = FRAGMENTS
        .iter()
        .copied()
        .filter(|f| !OPENERS.contains(f))
        .collect();
    let n = rng.random_range(0..=max_parts);
    (0..n)
        .map(|_| *closed.choose(rng).expect("non-empty"))
        .collect()
}
