use std::collections::BTreeMap;

use serde::Serialize;

use super::{aggregate_stats, round1, CorpusStats};
use crate::engine::{Report, Severity};

/// The JSON schema the JSON presenter conforms to.
pub const JSON_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Serialize)]
struct Document<'a> {
    files: Vec<File<'a>>,
    summary: Summary<'a>,
}

#[derive(Serialize)]
struct File<'a> {
    path: &'a str,
    sloc: usize,
    lints: Vec<Lint<'a>>,
}

#[derive(Serialize)]
struct Lint<'a> {
    name: &'a str,
    severity: Severity,
    start_line: usize,
    start_col: usize,
    end_line: usize,
    end_col: usize,
    message: &'a str,
    edit: Option<Edit<'a>>,
}

#[derive(Serialize)]
struct Edit<'a> {
    start_line: usize,
    start_col: usize,
    end_line: usize,
    end_col: usize,
    replacement: &'a str,
}

#[derive(Serialize)]
struct Summary<'a> {
    files: usize,
    sloc: usize,
    total: usize,
    severities: BTreeMap<&'static str, Share>,
    lints: &'a BTreeMap<String, usize>,
    lines_per_lint: Option<f64>,
}

#[derive(Serialize)]
struct Share {
    count: usize,
    share: f64,
}

fn summary(stats: &CorpusStats) -> Summary<'_> {
    Summary {
        files: stats.files,
        sloc: stats.total_sloc,
        total: stats.total(),
        severities: Severity::ALL
            .iter()
            .map(|&s| {
                (
                    s.as_str(),
                    Share {
                        count: stats.count(s),
                        share: stats.rounded_share(s),
                    },
                )
            })
            .collect(),
        lints: &stats.per_lint,
        lines_per_lint: stats.lines_per_lint().map(round1),
    }
}

pub fn present_json(reports: &[Report]) -> String {
    let stats = aggregate_stats(reports);
    let files = reports
        .iter()
        .map(|report| File {
            path: &report.path,
            sloc: report.sloc,
            lints: report
                .results
                .iter()
                .map(|r| Lint {
                    name: &r.lint_name,
                    severity: r.severity,
                    start_line: r.range.start_line,
                    start_col: r.range.start_col,
                    end_line: r.range.end_line,
                    end_col: r.range.end_col,
                    message: &r.message,
                    edit: r.edit.as_ref().map(|e| Edit {
                        start_line: e.range.start_line,
                        start_col: e.range.start_col,
                        end_line: e.range.end_line,
                        end_col: e.range.end_col,
                        replacement: &e.replacement,
                    }),
                })
                .collect(),
        })
        .collect();
    let doc = Document {
        files,
        summary: summary(&stats),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
    out.push('\n');
    out
}
