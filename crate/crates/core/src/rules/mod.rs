//! The built-in lint catalog.

mod commands;
mod methods;
mod proofs;
mod statements;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::engine::{
    Abstraction, AstAdapter, Bundle, Check, LintDescriptor, LintStore, ParserAdapter,
    ProperCommandsAdapter, Severity,
};
use crate::keywords::KeywordTable;

pub use commands::{
    BadStyleCommand, CounterExampleFinder, DiagnosticCommand, ProofFinder, SmtOracle,
};
pub use methods::{
    AutoStructuralComposition, ComplexIsarInitialMethod, ComplexMethod, ImplicitRule, TacticProofs,
};
pub use proofs::{
    ApplyIsarSwitch, GlobalAttributeChanges, LowLevelApplyChain, UnrestrictedAuto, UseBy,
};
pub use statements::{
    AxiomatizationWithWhere, GlobalAttributeOnUnnamedLemma, LemmaTransformingAttribute,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleSetError {
    #[error("unknown rule-set key `{0}`")]
    UnknownKey(String),
    #[error("`{key}`: `{word}` is not a command in the keyword table")]
    NotACommand { key: String, word: String },
    #[error("apply_chain_threshold must be an integer >= 2, got `{0}`")]
    BadThreshold(String),
}

/// Membership sets and thresholds the rules consult. Every field can be
/// overridden from configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSets {
    pub tactic_methods: BTreeSet<String>,
    pub low_level_methods: BTreeSet<String>,
    pub simplifier_methods: BTreeSet<String>,
    pub bad_style_commands: BTreeSet<String>,
    pub counterexample_commands: BTreeSet<String>,
    pub proof_finder_commands: BTreeSet<String>,
    pub diagnostic_commands: BTreeSet<String>,
    pub transforming_attributes: BTreeSet<String>,
    pub apply_chain_threshold: usize,
}

pub const TACTIC_METHODS: &[&str] = &[
    "insert",
    "subgoal_tac",
    "rule_tac",
    "erule_tac",
    "drule_tac",
    "frule_tac",
    "cut_tac",
    "induct_tac",
    "case_tac",
    "rotate_tac",
    "tactic",
];
pub const LOW_LEVEL_METHODS: &[&str] = &[
    "rule", "erule", "drule", "frule", "insert", "subst", "intro", "elim",
];
pub const SIMPLIFIER_METHODS: &[&str] = &["simp", "simp_all", "auto", "fastforce", "force"];
pub const BAD_STYLE_COMMANDS: &[&str] = &["back", "apply_end"];
pub const COUNTEREXAMPLE_COMMANDS: &[&str] = &["nitpick", "quickcheck", "nunchaku"];
pub const PROOF_FINDER_COMMANDS: &[&str] = &["sledgehammer", "try", "try0", "solve_direct"];
pub const DIAGNOSTIC_COMMANDS: &[&str] = &["find_theorems", "find_consts"];
pub const TRANSFORMING_ATTRIBUTES: &[&str] = &[
    "simplified",
    "unfolded",
    "folded",
    "rotated",
    "THEN",
    "OF",
    "of",
    "where",
];
pub const APPLY_CHAIN_THRESHOLD: usize = 5;

/// Configuration keys accepted by [`RuleSets::set`].
pub const RULE_SET_KEYS: &[&str] = &[
    "tactic_methods",
    "low_level_methods",
    "simplifier_methods",
    "bad_style_commands",
    "counterexample_commands",
    "proof_finder_commands",
    "diagnostic_commands",
    "transforming_attributes",
    "apply_chain_threshold",
];

fn set_of(words: &[&str]) -> BTreeSet<String> {
    words.iter().map(|w| (*w).to_owned()).collect()
}

impl Default for RuleSets {
    fn default() -> Self {
        RuleSets {
            tactic_methods: set_of(TACTIC_METHODS),
            low_level_methods: set_of(LOW_LEVEL_METHODS),
            simplifier_methods: set_of(SIMPLIFIER_METHODS),
            bad_style_commands: set_of(BAD_STYLE_COMMANDS),
            counterexample_commands: set_of(COUNTEREXAMPLE_COMMANDS),
            proof_finder_commands: set_of(PROOF_FINDER_COMMANDS),
            diagnostic_commands: set_of(DIAGNOSTIC_COMMANDS),
            transforming_attributes: set_of(TRANSFORMING_ATTRIBUTES),
            apply_chain_threshold: APPLY_CHAIN_THRESHOLD,
        }
    }
}

impl RuleSets {
    /// Replaces one set from a comma-separated word list, or the threshold
    /// from an integer.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), RuleSetError> {
        if key == "apply_chain_threshold" {
            let n: usize = value
                .trim()
                .parse()
                .map_err(|_| RuleSetError::BadThreshold(value.to_owned()))?;
            if n < 2 {
                return Err(RuleSetError::BadThreshold(value.to_owned()));
            }
            self.apply_chain_threshold = n;
            return Ok(());
        }
        let words: BTreeSet<String> = value
            .split(',')
            .map(str::trim)
            .filter(|w| !w.is_empty())
            .map(str::to_owned)
            .collect();
        *self
            .set_mut(key)
            .ok_or_else(|| RuleSetError::UnknownKey(key.to_owned()))? = words;
        Ok(())
    }

    fn set_mut(&mut self, key: &str) -> Option<&mut BTreeSet<String>> {
        Some(match key {
            "tactic_methods" => &mut self.tactic_methods,
            "low_level_methods" => &mut self.low_level_methods,
            "simplifier_methods" => &mut self.simplifier_methods,
            "bad_style_commands" => &mut self.bad_style_commands,
            "counterexample_commands" => &mut self.counterexample_commands,
            "proof_finder_commands" => &mut self.proof_finder_commands,
            "diagnostic_commands" => &mut self.diagnostic_commands,
            "transforming_attributes" => &mut self.transforming_attributes,
            _ => return None,
        })
    }

    /// Checks that every command set names commands known to `keywords`.
    pub fn validate(&self, keywords: &KeywordTable) -> Result<(), RuleSetError> {
        let command_sets = [
            ("bad_style_commands", &self.bad_style_commands),
            ("counterexample_commands", &self.counterexample_commands),
            ("proof_finder_commands", &self.proof_finder_commands),
            ("diagnostic_commands", &self.diagnostic_commands),
        ];
        for (key, set) in command_sets {
            if let Some(word) = set.iter().find(|w| !keywords.is_command(w)) {
                return Err(RuleSetError::NotACommand {
                    key: key.to_owned(),
                    word: word.clone(),
                });
            }
        }
        if self.apply_chain_threshold < 2 {
            return Err(RuleSetError::BadThreshold(
                self.apply_chain_threshold.to_string(),
            ));
        }
        Ok(())
    }
}

fn descriptor(
    name: &str,
    severity: Severity,
    abstraction: Abstraction,
    short: &str,
    long: &str,
) -> LintDescriptor {
    LintDescriptor {
        name: name.to_owned(),
        severity,
        short_description: short.to_owned(),
        long_description: long.to_owned(),
        abstraction,
    }
}

fn register(store: &mut LintStore, d: LintDescriptor, check: impl Check + 'static) {
    store
        .register_lint(d, check)
        .expect("built-in lint names are unique");
}

/// Registers the 18 built-in lints.
pub fn register_builtins(store: &mut LintStore) {
    use Abstraction::{Ast, Parser, ProperCommands};
    use Severity::{Error, Info, Warn};

    register(store, descriptor(
        "apply_isar_switch", Warn, ProperCommands,
        "Structured proof opened after an apply script.",
        "A `proof` that directly follows `apply` steps starts from goals produced by the script. \
         Small changes to the script or the simplifier alter those goals and break the structured part. \
         Write the whole proof in structured form instead.",
    ), ProperCommandsAdapter(ApplyIsarSwitch));
    register(store, descriptor(
        "auto_structural_composition", Info, Ast,
        "`auto` composed structurally with `;`.",
        "`auto; m` runs `m` on every goal `auto` leaves behind. Which goals those are depends on the \
         whole simp set, so the combination is fragile.",
    ), AstAdapter(AutoStructuralComposition));
    register(store, descriptor(
        "axiomatization_with_where", Error, Ast,
        "Axiomatization introducing axioms.",
        "An `axiomatization ... where` adds unchecked axioms and may make the theory inconsistent. \
         Prefer definitions, or declare only constants.",
    ), AstAdapter(AxiomatizationWithWhere));
    register(store, descriptor(
        "bad_style_command", Error, Parser,
        "Use of `back` or `apply_end`.",
        "`back` selects among unifiers by position and `apply_end` manipulates goals after a block. \
         Both make proofs hard to read and to maintain.",
    ), ParserAdapter(BadStyleCommand));
    register(store, descriptor(
        "complex_isar_initial_method", Warn, Ast,
        "Complex initial method of a structured proof.",
        "When `proof` starts with a combined method, modifiers or a simplifier call, the goals the \
         structured proof works on are hard to predict. Use `-` or a simple rule instead.",
    ), AstAdapter(ComplexIsarInitialMethod));
    register(store, descriptor(
        "complex_method", Warn, Ast,
        "Method expression with several combinators.",
        "Methods with two or more combinators, or modifiers on a combined method, are hard to read \
         and to repair when they fail.",
    ), AstAdapter(ComplexMethod));
    register(store, descriptor(
        "counter_example_finder", Error, Parser,
        "Counterexample finder without `expect`.",
        "Calls to nitpick, quickcheck or nunchaku in a finished theory must state the expected \
         outcome with `expect`. For nitpick, `satisfy` is also accepted.",
    ), ParserAdapter(CounterExampleFinder));
    register(store, descriptor(
        "diagnostic_command", Info, Parser,
        "Left-over diagnostic command.",
        "Search commands such as `find_theorems` are useful interactively but do not belong in \
         finished theories.",
    ), ParserAdapter(DiagnosticCommand));
    register(store, descriptor(
        "global_attribute_changes", Info, ProperCommands,
        "Attribute declared and later removed globally, or the reverse.",
        "Toggling an attribute such as `simp` back and forth with `declare` makes the effective \
         simp set depend on position. Use a bundle or local `simp add:`/`simp del:` instead.",
    ), ProperCommandsAdapter(GlobalAttributeChanges));
    register(
        store,
        descriptor(
            "global_attribute_on_unnamed_lemma",
            Error,
            Ast,
            "Unnamed lemma with an attribute.",
            "An unnamed lemma with an attribute such as `simp` or `cong` changes global state but \
         cannot be referred to, so the change cannot be undone.",
        ),
        AstAdapter(GlobalAttributeOnUnnamedLemma),
    );
    register(
        store,
        descriptor(
            "implicit_rule",
            Warn,
            Ast,
            "`rule` without an explicit rule.",
            "A bare `rule` picks a rule from the context. Readers cannot see which rule was used. \
         Name it explicitly.",
        ),
        AstAdapter(ImplicitRule),
    );
    register(store, descriptor(
        "lemma_transforming_attribute", Warn, Ast,
        "Lemma transformed by an attribute.",
        "Attributes like `simplified`, `OF` or `THEN` on a statement or in `lemmas` produce facts \
         whose exact form is not visible in the source. State the fact explicitly.",
    ), AstAdapter(LemmaTransformingAttribute));
    register(store, descriptor(
        "low_level_apply_chain", Info, ProperCommands,
        "Long chain of single rule applications.",
        "Many consecutive `apply` steps that each use one low-level rule method are better written \
         as a structured proof.",
    ), ProperCommandsAdapter(LowLevelApplyChain));
    register(store, descriptor(
        "proof_finder", Info, Parser,
        "Left-over proof finder call.",
        "Commands such as `sledgehammer` or `try0` search for proofs interactively. Remove them from \
         finished theories.",
    ), ParserAdapter(ProofFinder));
    register(
        store,
        descriptor(
            "smt_oracle",
            Error,
            Parser,
            "`smt_oracle` enabled.",
            "With `smt_oracle` set, SMT solver results are trusted without proof reconstruction.",
        ),
        ParserAdapter(SmtOracle),
    );
    register(store, descriptor(
        "tactic_proofs", Error, Ast,
        "Use of tactic-style methods.",
        "Methods such as `subgoal_tac` or `rule_tac` rely on generated names and goal order, which \
         makes proofs brittle.",
    ), AstAdapter(TacticProofs));
    register(store, descriptor(
        "unrestricted_auto", Error, ProperCommands,
        "`apply auto` in the middle of a proof.",
        "`auto` that does not finish the proof leaves an unpredictable set of goals for the following \
         steps. Close the proof with it, or restrict it to one goal with `[1]`.",
    ), ProperCommandsAdapter(UnrestrictedAuto));
    register(
        store,
        descriptor(
            "use_by",
            Info,
            ProperCommands,
            "Short apply script that could use `by`.",
            "One or two `apply` steps followed by `done` read better as a terminal `by` proof.",
        ),
        ProperCommandsAdapter(UseBy),
    );
}

pub const FOUNDATIONAL: &[&str] = &[
    "apply_isar_switch",
    "auto_structural_composition",
    "bad_style_command",
    "complex_isar_initial_method",
    "complex_method",
    "global_attribute_changes",
    "global_attribute_on_unnamed_lemma",
    "implicit_rule",
    "lemma_transforming_attribute",
    "low_level_apply_chain",
    "tactic_proofs",
    "unrestricted_auto",
];
pub const AFP_MANDATORY: &[&str] = &[
    "bad_style_command",
    "counter_example_finder",
    "global_attribute_on_unnamed_lemma",
    "smt_oracle",
];
pub const PEDANTIC: &[&str] = &["use_by"];
pub const NON_INTERACTIVE: &[&str] = &[
    "counter_example_finder",
    "diagnostic_command",
    "proof_finder",
];

fn bundle(name: &str, description: &str, lints: &[&str], add_on: bool) -> Bundle {
    Bundle {
        name: name.to_owned(),
        description: description.to_owned(),
        lints: set_of(lints),
        add_on,
    }
}

/// Registers the five built-in bundles. The lints must already be present.
pub fn register_bundles(store: &mut LintStore) {
    let mut default: Vec<&str> = FOUNDATIONAL.to_vec();
    default.push("axiomatization_with_where");
    let bundles = [
        bundle(
            "foundational",
            "Core proof-style lints.",
            FOUNDATIONAL,
            false,
        ),
        bundle(
            "default",
            "Foundational lints plus axiomatization checks.",
            &default,
            false,
        ),
        bundle(
            "afp_mandatory",
            "Checks for AFP submission guidelines.",
            AFP_MANDATORY,
            false,
        ),
        bundle("pedantic", "Stricter style suggestions.", PEDANTIC, true),
        bundle(
            "non_interactive",
            "Interactive-only commands left in a theory.",
            NON_INTERACTIVE,
            true,
        ),
    ];
    for b in bundles {
        store
            .register_bundle(b)
            .expect("built-in bundles are valid");
    }
}

/// A store holding every built-in lint and bundle.
pub fn builtin_store() -> LintStore {
    let mut store = LintStore::new();
    register_builtins(&mut store);
    register_bundles(&mut store);
    store
}
