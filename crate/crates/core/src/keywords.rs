//! Command and minor keyword classification.
//!
//! Isabelle normally derives this table from the session's theory headers.
//! A standalone linter cannot assume a prover installation, so a static
//! table for Pure and HOL ships here and can be extended from a keywords
//! file (`word<TAB>category`, one entry per line).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Coarse classification of a command word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CommandCategory {
    TheoryBegin,
    TheoryBody,
    GoalStatement,
    ProofOpen,
    ProofStep,
    ProofClose,
    Diagnostic,
    Other,
}

impl CommandCategory {
    pub const ALL: [CommandCategory; 8] = [
        CommandCategory::TheoryBegin,
        CommandCategory::TheoryBody,
        CommandCategory::GoalStatement,
        CommandCategory::ProofOpen,
        CommandCategory::ProofStep,
        CommandCategory::ProofClose,
        CommandCategory::Diagnostic,
        CommandCategory::Other,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CommandCategory::TheoryBegin => "theory_begin",
            CommandCategory::TheoryBody => "theory_body",
            CommandCategory::GoalStatement => "goal_statement",
            CommandCategory::ProofOpen => "proof_open",
            CommandCategory::ProofStep => "proof_step",
            CommandCategory::ProofClose => "proof_close",
            CommandCategory::Diagnostic => "diagnostic",
            CommandCategory::Other => "other",
        }
    }

    /// Commands that operate on a pending goal.
    pub fn is_proof(self) -> bool {
        matches!(
            self,
            CommandCategory::ProofOpen | CommandCategory::ProofStep | CommandCategory::ProofClose
        )
    }
}

impl fmt::Display for CommandCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CommandCategory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CommandCategory::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown command category `{s}`"))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KeywordFileError {
    #[error("line {line}: expected `word category`")]
    MissingCategory { line: usize },
    #[error("line {line}: empty keyword")]
    EmptyWord { line: usize },
    #[error("line {line}: {message}")]
    BadCategory { line: usize, message: String },
    #[error("line {line}: `{word}` is declared both as a command and as a minor keyword")]
    Conflict { line: usize, word: String },
}

const THEORY_BEGIN: &[&str] = &["theory", "imports", "keywords", "abbrevs", "begin"];

const THEORY_BODY: &[&str] = &[
    "end",
    "context",
    "locale",
    "class",
    "instantiation",
    "overloading",
    "bundle",
    "unbundle",
    "definition",
    "abbreviation",
    "fun",
    "primrec",
    "primcorec",
    "inductive",
    "inductive_set",
    "coinductive",
    "coinductive_set",
    "datatype",
    "codatatype",
    "record",
    "type_synonym",
    "typedecl",
    "consts",
    "axiomatization",
    "declare",
    "lemmas",
    "theorems",
    "named_theorems",
    "notation",
    "no_notation",
    "type_notation",
    "no_type_notation",
    "syntax",
    "no_syntax",
    "translations",
    "no_translations",
    "hide_const",
    "hide_fact",
    "hide_type",
    "hide_class",
    "setup",
    "local_setup",
    "method_setup",
    "attribute_setup",
    "simproc_setup",
    "declaration",
    "ML",
    "ML_file",
    "SML_file",
    "export_code",
    "code_printing",
    "code_identifier",
    "code_datatype",
    "chapter",
    "section",
    "subsection",
    "subsubsection",
    "paragraph",
    "subparagraph",
    "text",
    "txt",
    "text_raw",
    "nitpick_params",
    "sledgehammer_params",
    "quickcheck_params",
    "setup_lifting",
    "quotient_type",
    "default_sort",
    "nonterminal",
    "print_translation",
    "parse_translation",
    "experiment",
    "qualified",
    "private",
];

const GOAL_STATEMENT: &[&str] = &[
    "lemma",
    "theorem",
    "corollary",
    "proposition",
    "schematic_goal",
    "have",
    "show",
    "hence",
    "thus",
    "obtain",
    "consider",
    "interpret",
    "function",
    "termination",
    "typedef",
    "instance",
    "interpretation",
    "global_interpretation",
    "sublocale",
    "specification",
    "lift_definition",
    "notepad",
];

const PROOF_OPEN: &[&str] = &["proof", "subgoal"];

const PROOF_STEP: &[&str] = &[
    "apply",
    "apply_end",
    "using",
    "unfolding",
    "including",
    "supply",
    "defer",
    "prefer",
    "back",
    "fix",
    "assume",
    "presume",
    "define",
    "let",
    "note",
    "from",
    "with",
    "then",
    "also",
    "finally",
    "moreover",
    "ultimately",
    "case",
    "next",
    "{",
    "}",
];

const PROOF_CLOSE: &[&str] = &["done", "by", "qed", "sorry", "oops", ".", ".."];

const DIAGNOSTIC: &[&str] = &[
    "thm",
    "term",
    "typ",
    "prop",
    "value",
    "find_theorems",
    "find_consts",
    "print_state",
    "print_theorems",
    "print_simpset",
    "print_statement",
    "print_context",
    "print_commands",
    "print_methods",
    "print_attributes",
    "print_cases",
    "print_facts",
    "print_term_bindings",
    "nitpick",
    "nunchaku",
    "quickcheck",
    "sledgehammer",
    "try",
    "try0",
    "solve_direct",
    "ML_val",
    "ML_command",
    "welcome",
];

const MINOR: &[&str] = &[
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
    ":",
    "::",
    "=",
    "==",
    "=>",
    "...",
    "\\<equiv>",
    "\\<Rightarrow>",
    "and",
    "assumes",
    "attach",
    "binder",
    "defines",
    "fixes",
    "for",
    "if",
    "in",
    "includes",
    "infix",
    "infixl",
    "infixr",
    "is",
    "monos",
    "morphisms",
    "notes",
    "obtains",
    "open",
    "output",
    "overloaded",
    "pervasive",
    "rewrites",
    "shows",
    "structure",
    "unchecked",
    "when",
    "where",
];

/// Map from command word to category, plus the set of minor keywords.
#[derive(Debug, Clone)]
pub struct KeywordTable {
    commands: HashMap<String, CommandCategory>,
    minor: HashSet<String>,
    max_symbolic_len: usize,
}

impl Default for KeywordTable {
    fn default() -> Self {
        Self::builtin()
    }
}

impl KeywordTable {
    pub fn empty() -> Self {
        KeywordTable {
            commands: HashMap::new(),
            minor: HashSet::new(),
            max_symbolic_len: 0,
        }
    }

    /// The built-in table for Pure and HOL commands.
    pub fn builtin() -> Self {
        let mut table = Self::empty();
        let groups = [
            (THEORY_BEGIN, CommandCategory::TheoryBegin),
            (THEORY_BODY, CommandCategory::TheoryBody),
            (GOAL_STATEMENT, CommandCategory::GoalStatement),
            (PROOF_OPEN, CommandCategory::ProofOpen),
            (PROOF_STEP, CommandCategory::ProofStep),
            (PROOF_CLOSE, CommandCategory::ProofClose),
            (DIAGNOSTIC, CommandCategory::Diagnostic),
        ];
        for (words, category) in groups {
            for word in words {
                table.insert_command(word, category);
            }
        }
        for word in MINOR {
            table.insert_minor(word);
        }
        table
    }

    pub fn insert_command(&mut self, word: &str, category: CommandCategory) {
        self.minor.remove(word);
        self.note_len(word);
        self.commands.insert(word.to_owned(), category);
    }

    pub fn insert_minor(&mut self, word: &str) {
        self.commands.remove(word);
        self.note_len(word);
        self.minor.insert(word.to_owned());
    }

    fn note_len(&mut self, word: &str) {
        if !starts_like_word(word) {
            self.max_symbolic_len = self.max_symbolic_len.max(word.len());
        }
    }

    pub fn command_category(&self, word: &str) -> Option<CommandCategory> {
        self.commands.get(word).copied()
    }

    pub fn is_command(&self, word: &str) -> bool {
        self.commands.contains_key(word)
    }

    pub fn is_minor(&self, word: &str) -> bool {
        self.minor.contains(word)
    }

    pub fn is_keyword(&self, word: &str) -> bool {
        self.is_command(word) || self.is_minor(word)
    }

    pub fn commands(&self) -> impl Iterator<Item = (&str, CommandCategory)> {
        self.commands.iter().map(|(w, c)| (w.as_str(), *c))
    }

    /// Longest keyword (command or minor) that is a prefix of `input` and
    /// does not start like an identifier.
    pub(crate) fn longest_symbolic_prefix(&self, input: &str) -> usize {
        let upper = self.max_symbolic_len.min(input.len());
        (1..=upper)
            .rev()
            .filter(|&len| input.is_char_boundary(len))
            .find(|&len| self.is_keyword(&input[..len]))
            .unwrap_or(0)
    }

    /// Parses keyword-file contents and merges them into this table.
    ///
    /// Each non-empty line is `word category`; `#` starts a comment
    /// line. The pseudo-category `minor` declares a minor keyword.
    pub fn extend_from_str(&mut self, contents: &str) -> Result<(), KeywordFileError> {
        let mut seen: HashMap<String, bool> = HashMap::new();
        for (idx, raw) in contents.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim_end_matches('\r');
            if trimmed.trim().is_empty() || trimmed.trim_start().starts_with('#') {
                continue;
            }
            let (word, category) = trimmed
                .trim()
                .split_once(char::is_whitespace)
                .ok_or(KeywordFileError::MissingCategory { line })?;
            let word = word.trim();
            let category = category.trim();
            if word.is_empty() {
                return Err(KeywordFileError::EmptyWord { line });
            }
            let is_minor = category == "minor";
            if let Some(prev) = seen.insert(word.to_owned(), is_minor) {
                if prev != is_minor {
                    return Err(KeywordFileError::Conflict {
                        line,
                        word: word.to_owned(),
                    });
                }
            }
            if is_minor {
                self.insert_minor(word);
            } else {
                let category = category
                    .parse()
                    .map_err(|message| KeywordFileError::BadCategory { line, message })?;
                self.insert_command(word, category);
            }
        }
        Ok(())
    }
}

fn starts_like_word(word: &str) -> bool {
    word.chars()
        .next()
        .is_some_and(|c| c.is_alphanumeric() || c == '_')
}
