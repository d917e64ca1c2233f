use std::fmt::Write;

use crate::engine::LintStore;

/// Markdown reference: one section per lint, one table per bundle.
pub fn generate_docs(store: &LintStore) -> String {
    let mut out = String::from("# Lint reference\n");
    if !store.is_empty() {
        out.push_str("\n## Lints\n");
        for d in store.descriptors() {
            let _ = write!(
                out,
                "\n### {}\n\n- severity: {}\n- abstraction: {}\n\n{}\n\n{}\n",
                d.name,
                d.severity,
                d.abstraction.as_str(),
                d.short_description,
                d.long_description
            );
        }
    }
    let mut bundles = store.bundles().peekable();
    if bundles.peek().is_some() {
        out.push_str("\n## Bundles\n");
        for b in bundles {
            let kind = if b.add_on { " (add-on)" } else { "" };
            let _ = write!(
                out,
                "\n### {}{}\n\n{}\n\n| lint | severity |\n|------|----------|\n",
                b.name, kind, b.description
            );
            for name in &b.lints {
                let severity = store
                    .descriptor(name)
                    .map(|d| d.severity.as_str())
                    .unwrap_or("?");
                let _ = writeln!(out, "| {name} | {severity} |");
            }
        }
    }
    out
}
