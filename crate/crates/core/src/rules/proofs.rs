//! Lints that look at neighbouring commands.

use std::collections::HashMap;

use crate::engine::{Context, Edit, Finding, ProperCommandsLint};
use crate::keywords::CommandCategory;
use crate::model::{parse_statement_head, Command, Method};

pub struct ApplyIsarSwitch;

impl ProperCommandsLint for ApplyIsarSwitch {
    fn lint_proper_commands(
        &self,
        commands: &[Command],
        _cx: &Context<'_>,
        out: &mut Vec<Finding>,
    ) {
        for pair in commands.windows(2) {
            if pair[0].is("apply") && pair[1].is("proof") {
                out.push(Finding::at_command(
                    &pair[1],
                    "structured proof continues an apply script",
                ));
            }
        }
    }
}

pub struct GlobalAttributeChanges;

impl ProperCommandsLint for GlobalAttributeChanges {
    fn lint_proper_commands(
        &self,
        commands: &[Command],
        _cx: &Context<'_>,
        out: &mut Vec<Finding>,
    ) {
        // (fact, attribute) -> last polarity; true means added.
        let mut state: HashMap<(String, String), bool> = HashMap::new();
        for command in commands.iter().filter(|c| c.is("declare")) {
            let Ok(head) = parse_statement_head(command) else {
                continue;
            };
            let mut flipped = None;
            for fact in head.facts.iter().filter(|f| !f.name.is_empty()) {
                for attr in &fact.attributes {
                    let added = !attr.args.iter().any(|a| a == "del");
                    let key = (fact.name.clone(), attr.name.clone());
                    if let Some(prev) = state.insert(key, added) {
                        if prev != added && flipped.is_none() {
                            flipped = Some((fact.name.clone(), attr.name.clone(), added));
                        }
                    }
                }
            }
            if let Some((fact, attr, added)) = flipped {
                let verb = if added { "re-added to" } else { "removed from" };
                out.push(Finding::at_command(
                    command,
                    format!(
                        "attribute `{attr}` {verb} `{fact}` after an earlier global declaration"
                    ),
                ));
            }
        }
    }
}

pub struct LowLevelApplyChain;

impl LowLevelApplyChain {
    fn is_link(command: &Command, cx: &Context<'_>) -> bool {
        if !command.is("apply") {
            return false;
        }
        matches!(command.methods().as_deref(), Ok([Method::Simple { name, .. }])
            if cx.rules.low_level_methods.contains(name))
    }
}

impl ProperCommandsLint for LowLevelApplyChain {
    fn lint_proper_commands(&self, commands: &[Command], cx: &Context<'_>, out: &mut Vec<Finding>) {
        let threshold = cx.rules.apply_chain_threshold;
        let mut i = 0;
        while i < commands.len() {
            let start = i;
            while i < commands.len() && Self::is_link(&commands[i], cx) {
                i += 1;
            }
            let len = i - start;
            if len >= threshold {
                out.push(Finding::spanning(
                    &commands[start],
                    &commands[i - 1],
                    format!("chain of {len} low-level rule applications"),
                ));
            }
            if len == 0 {
                i += 1;
            }
        }
    }
}

/// Commands after which an `apply auto` has not finished the proof.
const CONTINUATIONS: &[&str] = &[
    "apply",
    "apply_end",
    "proof",
    "by",
    "defer",
    "prefer",
    "subgoal",
    "back",
    "using",
    "unfolding",
    "supply",
    "including",
    ".",
    "..",
];

pub struct UnrestrictedAuto;

impl ProperCommandsLint for UnrestrictedAuto {
    fn lint_proper_commands(
        &self,
        commands: &[Command],
        _cx: &Context<'_>,
        out: &mut Vec<Finding>,
    ) {
        for pair in commands.windows(2) {
            let (current, next) = (&pair[0], &pair[1]);
            if !current.is("apply") || !CONTINUATIONS.contains(&next.keyword.as_str()) {
                continue;
            }
            let unrestricted = matches!(current.methods().as_deref(), Ok([m @ Method::Simple { .. }])
                if m.name() == Some("auto") && !m.is_restricted());
            if unrestricted {
                out.push(Finding::at_command(
                    current,
                    "`auto` does not close the proof",
                ));
            }
        }
    }
}

const FACT_PREFIXES: &[&str] = &["using", "unfolding", "including", "supply"];

pub struct UseBy;

impl UseBy {
    fn opens_goal(commands: &[Command], before: usize) -> bool {
        let mut j = before;
        while j > 0 {
            j -= 1;
            let c = &commands[j];
            if FACT_PREFIXES.contains(&c.keyword.as_str()) {
                continue;
            }
            return c.category == Some(CommandCategory::GoalStatement) || c.is("subgoal");
        }
        false
    }
}

impl ProperCommandsLint for UseBy {
    fn lint_proper_commands(
        &self,
        commands: &[Command],
        _cx: &Context<'_>,
        out: &mut Vec<Finding>,
    ) {
        for (k, done) in commands.iter().enumerate() {
            if !done.is("done") {
                continue;
            }
            let mut start = k;
            while start > 0 && commands[start - 1].is("apply") {
                start -= 1;
            }
            let applies = &commands[start..k];
            if applies.is_empty() || applies.len() > 2 || !Self::opens_goal(commands, start) {
                continue;
            }
            if applies.iter().any(|c| c.methods().is_err()) {
                continue;
            }
            let methods: Vec<String> = applies.iter().map(Command::argument_source).collect();
            let replacement = format!("by {}", methods.join(" "));
            let finding = Finding::spanning(
                &applies[0],
                done,
                format!("apply script can be written as `{replacement}`"),
            );
            let range = finding.range;
            out.push(finding.with_edit(Edit { range, replacement }));
        }
    }
}
