use metamob_cli::report::{merge, read_rows_csv, write_rows_csv, ResultRow};
use proptest::prelude::*;

fn row(scenario: &str, k: usize, n: usize, tau0: f64, method: &str, fdr: f64) -> ResultRow {
    ResultRow {
        scenario: scenario.into(),
        n_trials: k,
        n_total: n,
        tau0,
        tau1: 0.0,
        tau_gamma: 5.0,
        corr_target: "none".into(),
        splitter: "X2".into(),
        nonsplitter: "X10".into(),
        seed: 1,
        method: method.into(),
        reps: 10,
        included: 10,
        excluded: 0,
        discovery_rate: fdr,
        discovery_se: 0.01,
        mean_subgroups: 1.0 + fdr,
        accuracy: None,
        accuracy_se: None,
        mean_effect_corr: Some(0.5),
        n_effect_corr: 3,
        warning_rate: 0.0,
        converged_rate: 1.0,
        within_three_rate: 1.0,
        mean_iter: 2.0,
        excluded_by_reason: String::new(),
        warnings_by_kind: "iteration_limit=1".into(),
    }
}

const METHODS: [&str; 4] = ["mob", "mob-ri", "metamob-ri", "metamob-si"];

fn arb_rows() -> impl Strategy<Value = Vec<ResultRow>> {
    prop::collection::vec((0usize..2, 0usize..3, 0usize..3, 0usize..4, 0u32..100), 0..20).prop_map(|v| {
        v.into_iter()
            .map(|(k, n, t, m, f)| {
                row("null", [5, 10][k], [200, 500, 1000][n], [0.0, 5.0, 10.0][t], METHODS[m], f64::from(f) / 100.0)
            })
            .collect()
    })
}

#[test]
fn disjoint_files_merge_to_their_union() {
    let a = vec![row("null", 5, 200, 0.0, "mob", 0.05), row("null", 5, 200, 0.0, "mob-ri", 0.04)];
    let b = vec![row("sim-a", 5, 200, 0.0, "mob", 0.9)];
    let merged = merge(vec![a.clone(), b.clone()]).unwrap();
    assert_eq!(merged.len(), 3);
    for r in a.iter().chain(&b) {
        assert!(merged.contains(r));
    }
}

#[test]
fn conflicting_duplicates_are_an_error() {
    let a = vec![row("null", 5, 200, 0.0, "mob", 0.05)];
    let b = vec![row("null", 5, 200, 0.0, "mob", 0.06)];
    assert!(merge(vec![a, b]).is_err());
}

proptest! {
    #[test]
    fn merge_has_unique_keys_and_is_idempotent(rows in arb_rows()) {
        // Rows sharing a key are made identical so the set is consistent.
        let mut seen = std::collections::BTreeMap::new();
        let rows: Vec<ResultRow> = rows.into_iter().map(|r| seen.entry(r.key()).or_insert(r).clone()).collect();
        let once = merge(vec![rows.clone()]).unwrap();
        let keys: std::collections::BTreeSet<_> = once.iter().map(ResultRow::key).collect();
        prop_assert_eq!(keys.len(), once.len());
        prop_assert_eq!(keys.len(), seen.len());
        let twice = merge(vec![once.clone(), rows]).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn rows_round_trip_through_csv(rows in arb_rows()) {
        let mut buf = Vec::new();
        write_rows_csv(&mut buf, &rows).unwrap();
        let back = read_rows_csv(std::str::from_utf8(&buf).unwrap()).unwrap();
        prop_assert_eq!(back, rows);
    }
}
