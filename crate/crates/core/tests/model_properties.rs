mod common;

use isar_lint::keywords::KeywordTable;
use isar_lint::lexer::tokenize;
use isar_lint::model::{proper_commands, split_commands};
use proptest::prelude::*;

#[test]
fn oracle_self_check() {
    common::oracle::self_check();
}

#[test]
fn oracle_on_hand_written_methods() {
    let cases = [
        "simp",
        "(simp add: foo)",
        "(auto; simp)",
        "(rule conjI, simp | blast)+",
        "(simp | (auto, force))[2]",
        "((simp | auto)+)",
        "(induct xs; simp_all)",
        "(-, simp)",
        "simp?+",
    ];
    for text in cases {
        let tokens = tokenize(text, &KeywordTable::builtin());
        let proper: Vec<_> = tokens.iter().filter(|t| !t.is_improper()).collect();
        let m = isar_lint::model::parse_method(&proper).unwrap();
        assert_eq!(
            Some(common::oracle::from_method(&m)),
            common::oracle::parse(text),
            "{text}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn method_parser_matches_oracle(seed in any::<u64>()) {
        if let Err(e) = common::props::method_case(seed) {
            prop_assert!(false, "{}", e);
        }
    }

    #[test]
    fn commands_partition_the_token_stream(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let text = common::gen::theory_noise(&mut rng, 60);
        let tokens = tokenize(&text, &KeywordTable::builtin());
        let commands = split_commands(&tokens);
        let rejoined: Vec<_> = commands.iter().flat_map(|c| c.tokens.iter().cloned()).collect();
        prop_assert_eq!(&rejoined, &tokens);
        for (i, c) in commands.iter().enumerate() {
            prop_assert_eq!(c.index, i);
            prop_assert!(!c.tokens.is_empty());
        }
        prop_assert!(proper_commands(&commands).iter().all(|c| !c.is_preamble()));
    }
}

#[test]
fn fixtures_partition_into_commands() {
    for (path, text) in common::all_fixture_theories() {
        let tokens = tokenize(&text, &KeywordTable::builtin());
        let rejoined: Vec<_> = split_commands(&tokens)
            .into_iter()
            .flat_map(|c| c.tokens)
            .collect();
        assert_eq!(rejoined, tokens, "{path}");
    }
}
