//! Corpus statistics and output presenters.

mod docs;
mod json;
mod text;
mod xml;

use std::collections::BTreeMap;

use crate::engine::{Report, Severity};

pub use docs::generate_docs;
pub use json::{present_json, JSON_SCHEMA};
pub use text::present_text;
pub use xml::present_xml;

/// Aggregated counts over a set of reports.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CorpusStats {
    pub files: usize,
    pub per_lint: BTreeMap<String, usize>,
    pub info: usize,
    pub warn: usize,
    pub error: usize,
    pub total_sloc: usize,
}

/// Rounds a percentage to one decimal place.
pub fn round1(x: f64) -> f64 {
    (x * 10.0).round() / 10.0
}

impl CorpusStats {
    /// Stats from bare severity counts, as in a published table column.
    pub fn from_counts(info: usize, warn: usize, error: usize, sloc: usize) -> CorpusStats {
        CorpusStats {
            info,
            warn,
            error,
            total_sloc: sloc,
            ..CorpusStats::default()
        }
    }

    pub fn add_report(&mut self, report: &Report) {
        self.files += 1;
        self.total_sloc += report.sloc;
        for r in &report.results {
            *self.per_lint.entry(r.lint_name.clone()).or_default() += 1;
            *self.count_mut(r.severity) += 1;
        }
    }

    pub fn merge(&mut self, other: &CorpusStats) {
        self.files += other.files;
        self.total_sloc += other.total_sloc;
        self.info += other.info;
        self.warn += other.warn;
        self.error += other.error;
        for (name, n) in &other.per_lint {
            *self.per_lint.entry(name.clone()).or_default() += n;
        }
    }

    fn count_mut(&mut self, severity: Severity) -> &mut usize {
        match severity {
            Severity::Info => &mut self.info,
            Severity::Warn => &mut self.warn,
            Severity::Error => &mut self.error,
        }
    }

    pub fn count(&self, severity: Severity) -> usize {
        match severity {
            Severity::Info => self.info,
            Severity::Warn => self.warn,
            Severity::Error => self.error,
        }
    }

    pub fn total(&self) -> usize {
        self.info + self.warn + self.error
    }

    /// Unrounded percentage of lints with `severity`; 0 without lints.
    pub fn share(&self, severity: Severity) -> f64 {
        match self.total() {
            0 => 0.0,
            total => 100.0 * self.count(severity) as f64 / total as f64,
        }
    }

    /// Percentage rounded for display.
    pub fn rounded_share(&self, severity: Severity) -> f64 {
        round1(self.share(severity))
    }

    /// SLOC per lint; `None` when there are no lints.
    pub fn lines_per_lint(&self) -> Option<f64> {
        match self.total() {
            0 => None,
            total => Some(self.total_sloc as f64 / total as f64),
        }
    }
}

/// Sums counts over `reports`.
pub fn aggregate_stats<'a>(reports: impl IntoIterator<Item = &'a Report>) -> CorpusStats {
    let mut stats = CorpusStats::default();
    for report in reports {
        stats.add_report(report);
    }
    stats
}
