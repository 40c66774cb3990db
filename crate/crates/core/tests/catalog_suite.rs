use curvecount::graph::{catalog, catalog_names};
use curvecount::verify::{render_json, render_text, run_check, run_suite, tally, CheckOptions, Status, SuiteOptions, CHECK_NAMES};
use curvecount::Multigraph;

fn catalog_graphs() -> Vec<(String, Multigraph)> {
    catalog_names().iter().map(|&n| (n.to_string(), catalog(n).unwrap())).collect()
}

#[test]
fn default_suite_passes_on_catalog() {
    let results = run_suite(&catalog_graphs(), &[], &SuiteOptions::default()).unwrap();
    let failures: Vec<_> = results.iter().filter(|r| r.failed()).map(|r| format!("{} on {}", r.name, r.graph)).collect();
    assert!(failures.is_empty(), "{failures:?}");
    assert_eq!(results.len(), catalog_names().len() * CHECK_NAMES.len());
    assert!(tally(&results).pass > tally(&results).skip);
}

#[test]
fn empty_graph_never_fails() {
    let g = catalog("empty").unwrap();
    for name in CHECK_NAMES {
        let r = run_check(name, "empty", &g, &CheckOptions::default()).unwrap();
        assert_ne!(r.status, Status::Fail, "{name}");
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let options = SuiteOptions {
        seed: 11,
        random: 8,
        max_edges: 7,
        ..SuiteOptions::default()
    };
    let names: Vec<String> = ["subsum", "severi", "multidegrees"].iter().map(|s| s.to_string()).collect();
    let a = run_suite(&catalog_graphs(), &names, &options).unwrap();
    let b = run_suite(&catalog_graphs(), &names, &options).unwrap();
    assert_eq!(render_json(&a), render_json(&b));
    assert_eq!(render_text(&a), render_text(&b));
}

#[test]
fn subsum_on_random_connected_graphs() {
    let options = SuiteOptions {
        seed: 0,
        random: 200,
        ..SuiteOptions::default()
    };
    let results = run_suite(&[], &["subsum".to_string()], &options).unwrap();
    assert_eq!(results.len(), 200);
    assert!(results.iter().all(|r| r.passed()));
}
