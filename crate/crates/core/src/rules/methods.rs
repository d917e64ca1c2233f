//! Lints over proof method trees.

use crate::engine::{AstLint, Context, Finding};
use crate::model::{Combinator, Command, Method};

pub struct AutoStructuralComposition;

impl AstLint for AutoStructuralComposition {
    fn lint_method(
        &self,
        method: &Method,
        command: &Command,
        _cx: &Context<'_>,
    ) -> Option<Finding> {
        let hit = method.any(|m| {
            matches!(m, Method::Combined { left, combinator: Combinator::Struct, .. }
                if left.name() == Some("auto"))
        });
        hit.then(|| {
            Finding::at_command(
                command,
                "`auto` is followed by a structural `;` composition",
            )
        })
    }
}

pub struct ComplexIsarInitialMethod;

impl AstLint for ComplexIsarInitialMethod {
    fn lint_method(&self, method: &Method, command: &Command, cx: &Context<'_>) -> Option<Finding> {
        if !command.is("proof") {
            return None;
        }
        let complex = match method {
            Method::Placeholder => false,
            Method::Combined { .. } => true,
            Method::Simple {
                name, modifiers, ..
            } => !modifiers.is_empty() || cx.rules.simplifier_methods.contains(name),
        };
        complex.then(|| {
            Finding::at_command(
                command,
                "structured proof starts with a complex initial method",
            )
        })
    }
}

pub struct ComplexMethod;

impl AstLint for ComplexMethod {
    fn lint_method(
        &self,
        method: &Method,
        command: &Command,
        _cx: &Context<'_>,
    ) -> Option<Finding> {
        let combinators = method.combinator_count();
        let modified_combination = method
            .any(|m| matches!(m, Method::Combined { modifiers, .. } if !modifiers.is_empty()));
        (combinators >= 2 || modified_combination).then(|| {
            let message = if modified_combination && combinators < 2 {
                "complex method expression (modified combination)".to_owned()
            } else {
                format!("complex method expression ({combinators} combinators)")
            };
            Finding::at_command(command, message)
        })
    }
}

pub struct ImplicitRule;

impl AstLint for ImplicitRule {
    fn lint_method(
        &self,
        method: &Method,
        command: &Command,
        _cx: &Context<'_>,
    ) -> Option<Finding> {
        method
            .any(|m| matches!(m, Method::Simple { name, args, .. } if name == "rule" && args.is_empty()))
            .then(|| Finding::at_command(command, "`rule` is applied without naming the rule"))
    }
}

pub struct TacticProofs;

impl AstLint for TacticProofs {
    fn lint_method(&self, method: &Method, command: &Command, cx: &Context<'_>) -> Option<Finding> {
        let tactic = method
            .simple_names()
            .into_iter()
            .find(|n| cx.rules.tactic_methods.contains(*n))?;
        Some(Finding::at_command(
            command,
            format!("tactic method `{tactic}` used"),
        ))
    }
}
