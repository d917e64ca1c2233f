//! Lints over statement heads.

use crate::engine::{AstLint, Context, Finding};
use crate::model::{Command, StatementHead};

const GOALS: &[&str] = &[
    "lemma",
    "theorem",
    "corollary",
    "proposition",
    "schematic_goal",
];

pub struct GlobalAttributeOnUnnamedLemma;

impl AstLint for GlobalAttributeOnUnnamedLemma {
    fn lint_statement(
        &self,
        head: &StatementHead,
        command: &Command,
        _cx: &Context<'_>,
    ) -> Option<Finding> {
        if !GOALS.contains(&head.keyword.as_str()) || head.name.is_some() {
            return None;
        }
        let first = head.attributes.first()?;
        Some(Finding::at_command(
            command,
            format!("unnamed {} has attribute `{}`", head.keyword, first.name),
        ))
    }
}

pub struct LemmaTransformingAttribute;

impl AstLint for LemmaTransformingAttribute {
    fn lint_statement(
        &self,
        head: &StatementHead,
        command: &Command,
        cx: &Context<'_>,
    ) -> Option<Finding> {
        let keyword = head.keyword.as_str();
        if !GOALS.contains(&keyword) && keyword != "lemmas" && keyword != "theorems" {
            return None;
        }
        let attr = head
            .all_attributes()
            .find(|a| cx.rules.transforming_attributes.contains(&a.name))?;
        Some(Finding::at_command(
            command,
            format!("fact is transformed by attribute `{}`", attr.name),
        ))
    }
}

pub struct AxiomatizationWithWhere;

impl AstLint for AxiomatizationWithWhere {
    fn lint_statement(
        &self,
        head: &StatementHead,
        command: &Command,
        _cx: &Context<'_>,
    ) -> Option<Finding> {
        (head.keyword == "axiomatization" && head.has_where_clause)
            .then(|| Finding::at_command(command, "axiomatization introduces axioms"))
    }
}

#[cfg(test)]
mod tests {
    use crate::rules::testing::count;

    #[test]
    fn global_attribute_on_unnamed_lemma() {
        let lint = "global_attribute_on_unnamed_lemma";
        assert_eq!(count(lint, "lemma [simp]: \u{2039}x = x\u{203a}"), 1);
        assert_eq!(count(lint, "lemma foo[simp]: \u{2039}x = x\u{203a}"), 0);
        assert_eq!(count(lint, "lemma \u{2039}x = x\u{203a}"), 0);
        assert_eq!(count(lint, "theorem [intro]: \"P\""), 1);
        assert_eq!(count(lint, "lemmas [simp] = foo"), 0);
    }

    #[test]
    fn lemma_transforming_attribute() {
        let lint = "lemma_transforming_attribute";
        assert_eq!(count(lint, "lemmas foo' = foo[simplified]"), 1);
        assert_eq!(count(lint, "lemma foo[simp]: \u{2039}x = x\u{203a}"), 0);
        assert_eq!(count(lint, "lemma bar[OF assms]: \u{2039}P\u{203a}"), 1);
        assert_eq!(count(lint, "declare foo[simplified]"), 0);
    }

    #[test]
    fn axiomatization_with_where() {
        let lint = "axiomatization_with_where";
        assert_eq!(
            count(lint, "axiomatization c where ax: \u{2039}P c\u{203a}"),
            1
        );
        assert_eq!(count(lint, "axiomatization c :: \u{2039}nat\u{203a}"), 0);
        assert_eq!(count(lint, "definition f where \"f = 0\""), 0);
    }
}
