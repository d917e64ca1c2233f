use std::fmt::Write;

use super::{aggregate_stats, CorpusStats};
use crate::engine::{Report, Severity};

/// Escapes text for use in attribute values and character data. Characters
/// XML 1.0 forbids are replaced by U+FFFD.
fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            '\t' | '\n' | '\r' => out.push(c),
            c if (c as u32) < 0x20 || c == '\u{FFFE}' || c == '\u{FFFF}' => out.push('\u{FFFD}'),
            c => out.push(c),
        }
    }
    out
}

pub fn present_xml(reports: &[Report]) -> String {
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<report>\n");
    if reports.is_empty() {
        out.push_str("  <files/>\n");
    } else {
        out.push_str("  <files>\n");
        for report in reports {
            write_file(&mut out, report);
        }
        out.push_str("  </files>\n");
    }
    write_summary(&mut out, &aggregate_stats(reports));
    out.push_str("</report>\n");
    out
}

fn write_file(out: &mut String, report: &Report) {
    let _ = write!(
        out,
        "    <file path=\"{}\" sloc=\"{}\"",
        escape(&report.path),
        report.sloc
    );
    if report.results.is_empty() {
        out.push_str(">\n      <lints/>\n    </file>\n");
        return;
    }
    out.push_str(">\n      <lints>\n");
    for r in &report.results {
        let _ = writeln!(
            out,
            "        <lint name=\"{}\" severity=\"{}\" start_line=\"{}\" start_col=\"{}\" end_line=\"{}\" end_col=\"{}\">",
            escape(&r.lint_name),
            r.severity,
            r.range.start_line,
            r.range.start_col,
            r.range.end_line,
            r.range.end_col
        );
        let _ = writeln!(out, "          <message>{}</message>", escape(&r.message));
        if let Some(e) = &r.edit {
            let _ = writeln!(
                out,
                "          <edit start_line=\"{}\" start_col=\"{}\" end_line=\"{}\" end_col=\"{}\">",
                e.range.start_line, e.range.start_col, e.range.end_line, e.range.end_col
            );
            let _ = writeln!(
                out,
                "            <replacement>{}</replacement>",
                escape(&e.replacement)
            );
            out.push_str("          </edit>\n");
        }
        out.push_str("        </lint>\n");
    }
    out.push_str("      </lints>\n    </file>\n");
}

fn write_summary(out: &mut String, s: &CorpusStats) {
    let _ = write!(
        out,
        "  <summary files=\"{}\" sloc=\"{}\" total=\"{}\"",
        s.files,
        s.total_sloc,
        s.total()
    );
    if let Some(r) = s.lines_per_lint() {
        let _ = write!(out, " lines_per_lint=\"{:.1}\"", r);
    }
    out.push_str(">\n    <severities>\n");
    for sev in Severity::ALL {
        let _ = writeln!(
            out,
            "      <severity name=\"{}\" count=\"{}\" share=\"{:.1}\"/>",
            sev,
            s.count(sev),
            s.rounded_share(sev)
        );
    }
    out.push_str("    </severities>\n");
    if s.per_lint.is_empty() {
        out.push_str("    <lints/>\n");
    } else {
        out.push_str("    <lints>\n");
        for (name, n) in &s.per_lint {
            let _ = writeln!(
                out,
                "      <lint name=\"{}\" count=\"{}\"/>",
                escape(name),
                n
            );
        }
        out.push_str("    </lints>\n");
    }
    out.push_str("  </summary>\n");
}
