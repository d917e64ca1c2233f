use std::fmt::Write;

use super::{aggregate_stats, CorpusStats};
use crate::engine::{Report, Severity};

/// One `path:line:col: severity: message [lint]` line per result, then a
/// summary line. With `stats`, a statistics block follows.
pub fn present_text(reports: &[Report], stats: bool) -> String {
    let mut out = String::new();
    for report in reports {
        for r in &report.results {
            let _ = writeln!(
                out,
                "{}:{}:{}: {}: {} [{}]",
                report.path,
                r.range.start_line,
                r.range.start_col,
                r.severity,
                r.message,
                r.lint_name
            );
        }
    }
    let summary = aggregate_stats(reports);
    let _ = writeln!(
        out,
        "{} results (info: {}, warn: {}, error: {}) in {} files",
        summary.total(),
        summary.info,
        summary.warn,
        summary.error,
        summary.files
    );
    if stats {
        write_stats(&mut out, &summary);
    }
    out
}

fn write_stats(out: &mut String, s: &CorpusStats) {
    out.push_str("\nstatistics:\n");
    let _ = writeln!(out, "  files: {}", s.files);
    let _ = writeln!(out, "  sloc: {}", s.total_sloc);
    let _ = writeln!(out, "  lints: {}", s.total());
    for sev in Severity::ALL {
        let _ = writeln!(
            out,
            "  {}: {} ({:.1}%)",
            sev,
            s.count(sev),
            s.rounded_share(sev)
        );
    }
    match s.lines_per_lint() {
        Some(r) => {
            let _ = writeln!(out, "  lines per lint: {r:.1}");
        }
        None => out.push_str("  lines per lint: n/a\n"),
    }
    if !s.per_lint.is_empty() {
        out.push_str("  per lint:\n");
        for (name, n) in &s.per_lint {
            let _ = writeln!(out, "    {name}: {n}");
        }
    }
}
