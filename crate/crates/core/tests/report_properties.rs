mod common;

use isar_lint::cli::{exit_code, FailLevel};
use isar_lint::engine::{Report, Severity};
use isar_lint::report::aggregate_stats;
use std::sync::OnceLock;

use proptest::prelude::*;

fn reports() -> &'static [Report] {
    static POOL: OnceLock<Vec<Report>> = OnceLock::new();
    POOL.get_or_init(build_pool)
}

fn build_pool() -> Vec<Report> {
    let mut out: Vec<Report> = common::rule_cases()
        .iter()
        .map(|c| {
            common::lint_bundles(
                &["default", "pedantic", "non_interactive", "afp_mandatory"],
                &c.id,
                &c.source,
            )
        })
        .collect();
    out.extend(
        common::all_fixture_theories()
            .iter()
            .map(|(p, t)| common::lint_bundles(&["default"], p, t)),
    );
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn stats_merge_matches_concatenation(picks in proptest::collection::vec(0usize..1000, 0..30), split in 0usize..30) {
        let pool = reports();
        let chosen: Vec<Report> = picks.iter().map(|i| pool[i % pool.len()].clone()).collect();
        let split = split.min(chosen.len());
        let (a, b) = chosen.split_at(split);
        let mut merged = aggregate_stats(a);
        merged.merge(&aggregate_stats(b));
        prop_assert_eq!(merged, aggregate_stats(&chosen));
    }

    #[test]
    fn exit_code_depends_only_on_severities(picks in proptest::collection::vec(0usize..1000, 0..10), level in 0usize..4) {
        let pool = reports();
        let chosen: Vec<Report> = picks.iter().map(|i| pool[i % pool.len()].clone()).collect();
        let fail = FailLevel([None, Some(Severity::Info), Some(Severity::Warn), Some(Severity::Error)][level]);
        let code = exit_code(&chosen, fail);
        let expected = match fail.0 {
            None => 0,
            Some(l) => u8::from(chosen.iter().flat_map(|r| &r.results).any(|r| r.severity >= l)),
        };
        prop_assert_eq!(code, expected);
        let mut reversed = chosen.clone();
        reversed.reverse();
        prop_assert_eq!(exit_code(&reversed, fail), code);
    }
}
