//! Integrity checks on the embedded published-results table and unit checks
//! of the row-judging rules.

use std::collections::HashSet;

use sha2::{Digest, Sha256};
use vso_cli::reference::{
    entries, find, CountClass, RefAlgorithm, ValueClass, Verdict, REFERENCE_CSV,
};

/// The table is transcribed data; any edit must be deliberate. Update this
/// digest only together with a re-check of the transcription.
const PINNED_SHA256: &str = "f38690f11da6403fa8e549d37adb94a6e9b94430eab91733733bc7b39cc641ac";

#[test]
fn checksum_is_pinned() {
    let digest = Sha256::digest(REFERENCE_CSV.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    assert_eq!(hex, PINNED_SHA256, "reference table drifted from the transcription");
}

#[test]
fn table_has_the_expected_shape() {
    let all = entries();
    assert_eq!(all.len(), 128);

    let count = |algo: RefAlgorithm| all.iter().filter(|e| e.algorithm == algo).count();
    // 6 functions x 3 dimensions, plus 23 functions.
    assert_eq!(count(RefAlgorithm::Vso), 18 + 23);
    assert_eq!(count(RefAlgorithm::Sahc), 23);
    // One v-PSO row per measured six-function row, plus a CFO row and a
    // best-other row per 23-suite function.
    assert_eq!(count(RefAlgorithm::OtherPublished), 18 + 23 + 23);
}

#[test]
fn judged_rows_appear_exactly_once() {
    let mut seen = HashSet::new();
    for e in entries() {
        if e.algorithm == RefAlgorithm::OtherPublished {
            continue;
        }
        let key = (format!("{:?}", e.algorithm), e.id.clone(), e.nd);
        assert!(seen.insert(key.clone()), "duplicate judged row {key:?}");
    }
    assert_eq!(seen.len(), 64);
}

#[test]
fn rows_carry_complete_policies() {
    for e in entries() {
        assert!(!e.source.is_empty(), "{}: empty source", e.id);
        assert!(e.table.starts_with("table-"), "{}: bad table label", e.id);
        assert!(!e.display_fmax.is_empty(), "{}: empty display_fmax", e.id);
        assert!(!e.display_best.is_empty(), "{}: empty display_best", e.id);
        match e.algorithm {
            RefAlgorithm::Vso => {
                assert_ne!(e.value_class, ValueClass::Display, "{}", e.id);
                assert_ne!(e.value_class, ValueClass::Statistical, "{}", e.id);
                assert_eq!(e.count_class, CountClass::ExactCount, "{}", e.id);
                assert!(e.n_eval.is_some(), "{}: vso row without n_eval", e.id);
            }
            RefAlgorithm::Sahc => {
                assert_eq!(e.value_class, ValueClass::Statistical, "{}", e.id);
                assert_eq!(e.count_class, CountClass::EvalFloor, "{}", e.id);
                assert!(e.n_eval.is_some(), "{}: sahc row without n_eval", e.id);
            }
            RefAlgorithm::OtherPublished => {
                assert_eq!(e.value_class, ValueClass::Display, "{}", e.id);
                assert!(
                    matches!(e.count_class, CountClass::Display | CountClass::None),
                    "{}: judged count class on a display row",
                    e.id
                );
            }
        }
    }
}

#[test]
fn only_the_step_function_has_an_alternate_count() {
    let alts: Vec<_> = entries().iter().filter(|e| e.n_eval_alt.is_some()).collect();
    assert_eq!(alts.len(), 1);
    assert_eq!(alts[0].id, "gso/f6");
    assert_eq!(alts[0].n_eval, Some(29_600));
    assert_eq!(alts[0].n_eval_alt, Some(29_400));
}

#[test]
fn find_matches_algorithm_function_and_dimension() {
    let row = find(RefAlgorithm::Vso, "gso/f8", 30).expect("judged row exists");
    assert_eq!(row.n_eval, Some(67_200));
    assert_eq!(row.best, 12569.4866);

    assert!(find(RefAlgorithm::Vso, "gso/f8", 10).is_none());
    // The six-function suite has no published SAHC column.
    assert!(find(RefAlgorithm::Sahc, "vpso/ackley", 10).is_none());
}

#[test]
fn judge_macroscopic_value_and_exact_count() {
    let row = find(RefAlgorithm::Vso, "gso/f8", 30).unwrap();
    let (fmax, np) = (12_569.486617, 4_200);

    let j = row.judge(12_569.49, 67_200, fmax, np, 1);
    assert_eq!(j.verdict, Verdict::Pass, "{}", j.detail);

    let j = row.judge(12_500.0, 67_200, fmax, np, 1);
    assert_eq!(j.verdict, Verdict::Fail, "{}", j.detail);

    // A count off by exactly three sweeps is reported, not failed.
    let j = row.judge(12_569.49, 67_200 + 3 * np, fmax, np, 1);
    assert_eq!(j.verdict, Verdict::PassWithDeviation, "{}", j.detail);
    assert!(j.detail.contains("+3 sweeps"), "{}", j.detail);

    let j = row.judge(12_569.49, 67_199, fmax, np, 1);
    assert_eq!(j.verdict, Verdict::Fail, "{}", j.detail);
}

#[test]
fn judge_tiny_residual() {
    let row = find(RefAlgorithm::Vso, "gso/f1", 30).unwrap();
    let np = 4_200;

    let j = row.judge(-1e-12, 29_400, 0.0, np, 1);
    assert_eq!(j.verdict, Verdict::Pass, "{}", j.detail);

    // Residual above the tolerance fails even though it is small.
    let j = row.judge(-1e-9, 29_400, 0.0, np, 1);
    assert_eq!(j.verdict, Verdict::Fail, "{}", j.detail);

    // Overshooting the known optimum means the optimum is wrong, not the
    // run; flag it.
    let j = row.judge(1e-3, 29_400, 0.0, np, 1);
    assert_eq!(j.verdict, Verdict::Fail, "{}", j.detail);
}

#[test]
fn judge_tiny_residual_tolerance_override() {
    // The shifted-Schwefel rows publish residuals below 64-bit reach; the
    // table widens their gate to 1e-3.
    let row = find(RefAlgorithm::Vso, "vpso/schwefel", 30).unwrap();
    assert_eq!(row.tol, Some(1e-3));
    let fmax = -3.81827e-4;
    let j = row.judge(-3.83e-4, 67_200, fmax, 4_200, 1);
    assert_eq!(j.verdict, Verdict::Pass, "{}", j.detail);
}

#[test]
fn judge_statistical_value_and_eval_floor() {
    let row = find(RefAlgorithm::Sahc, "gso/f14", 2).unwrap();
    let (fmax, np, runs) = (-0.9980038377944498, 280, 1_000);
    let floor = runs * np * 4;

    let j = row.judge(-0.9985, floor, fmax, np, runs);
    assert_eq!(j.verdict, Verdict::Pass, "{}", j.detail);

    let j = row.judge(-0.9985, floor - 1, fmax, np, runs);
    assert_eq!(j.verdict, Verdict::Fail, "{}", j.detail);

    let j = row.judge(-1.5, floor, fmax, np, runs);
    assert_eq!(j.verdict, Verdict::Fail, "{}", j.detail);
}

#[test]
fn judge_statistical_slack_scales_with_published_shortfall() {
    // Published best 8.9088 against an optimum near 10.15 widens the slack;
    // a run somewhat short of the published value still passes.
    let row = find(RefAlgorithm::Sahc, "gso/f21", 4).unwrap();
    let (fmax, np, runs) = (10.15319967905823, 560, 1_000);
    let j = row.judge(8.40, runs as u64 * np * 4, fmax, np, runs as u64);
    assert_eq!(j.verdict, Verdict::Pass, "{}", j.detail);
}
