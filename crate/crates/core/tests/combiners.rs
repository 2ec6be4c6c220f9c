mod common;

use std::collections::BTreeMap;

use common::cases::{bucket, combine, generate, Rule};
use common::{brute_force_dual, rng};

#[test]
fn every_rule_and_subcase_matches_brute_force() {
    let mut r = rng(99);
    let mut seen: BTreeMap<(Rule, &str), usize> = BTreeMap::new();
    for rule in Rule::ALL {
        for _ in 0..4000 {
            let Some((h, case)) = generate(rule, &mut r) else {
                continue;
            };
            let out =
                combine(&h, &case).unwrap_or_else(|e| panic!("{e}: {case:?}\n{}", h.to_text()));
            assert_eq!(
                out.dual.edges(),
                brute_force_dual(&h).as_slice(),
                "{case:?} {}\n{}",
                out.subcase,
                h.to_text()
            );
            assert_eq!(out.checks.barred_violations, 0);
            *seen.entry((rule, out.subcase)).or_default() += 1;
        }
    }
    eprintln!("{seen:?}");
    for (rule, b) in [
        (Rule::Case2, "IV"),
        (Rule::Case3, "IV"),
        (Rule::Case1, "II"),
    ] {
        assert!(
            seen.iter()
                .any(|(&(ru, s), _)| ru == rule && bucket(s) == b),
            "{rule:?} {b}"
        );
    }
}
