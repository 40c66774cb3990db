use std::time::Instant;

use super::checks::{is_check_name, run_check, CheckOptions, CHECK_NAMES};
use super::{CheckResult, Status};
use crate::error::{Error, Result};
use crate::graph::generate::{random_multigraph, seeded_rng, RandomGraphParams};
use crate::graph::Multigraph;

/// What a suite run covers beyond the explicit graphs.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Random connected multigraphs appended to the explicit graphs.
    pub random: usize,
    /// Edge bound for the random graphs.
    pub max_edges: usize,
    /// Record `elapsed_ms`; off by default so reports are reproducible.
    pub timings: bool,
    pub check: CheckOptions,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            random: 0,
            max_edges: 10,
            timings: false,
            check: CheckOptions::default(),
        }
    }
}

/// The random graphs of a suite run, labelled `random-<seed>-<k>`.
pub fn random_graphs(seed: u64, count: usize, max_edges: usize) -> Vec<(String, Multigraph)> {
    let mut rng = seeded_rng(seed);
    let params = RandomGraphParams::connected(max_edges);
    (0..count)
        .map(|k| (format!("random-{seed}-{k:04}"), random_multigraph(&mut rng, &params)))
        .collect()
}

/// Resolves `all` or a list of names, rejecting unknown ones.
pub fn resolve_checks(names: &[String]) -> Result<Vec<&'static str>> {
    if names.is_empty() || names.iter().any(|n| n == "all") {
        return Ok(CHECK_NAMES.to_vec());
    }
    let mut out = Vec::new();
    for name in names {
        if !is_check_name(name) {
            return Err(Error::UnknownCheck(name.clone()));
        }
        let known = CHECK_NAMES.iter().find(|&&c| c == name).expect("checked above");
        if !out.contains(known) {
            out.push(*known);
        }
    }
    Ok(out)
}

/// Runs every requested check on every graph, sorted by check name and then
/// graph label.
pub fn run_suite(graphs: &[(String, Multigraph)], names: &[String], options: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let checks = resolve_checks(names)?;
    let mut all: Vec<(String, Multigraph)> = graphs.to_vec();
    all.extend(random_graphs(options.seed, options.random, options.max_edges));
    let check_options = CheckOptions {
        seed: options.seed,
        ..options.check.clone()
    };
    let mut results = Vec::with_capacity(all.len() * checks.len());
    for (label, g) in &all {
        for &name in &checks {
            let start = Instant::now();
            let mut r = run_check(name, label, g, &check_options)?;
            if options.timings {
                r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            results.push(r);
        }
    }
    results.sort_by(|a, b| (&a.name, &a.graph).cmp(&(&b.name, &b.graph)));
    Ok(results)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

pub fn tally(results: &[CheckResult]) -> Tally {
    let mut t = Tally::default();
    for r in results {
        match r.status {
            Status::Pass => t.pass += 1,
            Status::Fail => t.fail += 1,
            Status::Skip => t.skip += 1,
        }
    }
    t
}

/// One line per result plus a summary line.
pub fn render_text(results: &[CheckResult]) -> String {
    let name_w = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let graph_w = results.iter().map(|r| r.graph.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        let detail = match r.status {
            Status::Skip => String::new(),
            Status::Pass => format!("lhs = rhs = {}", r.lhs),
            Status::Fail => format!("lhs = {}  rhs = {}  diff = {}", r.lhs, r.rhs, r.diff),
        };
        let mut line = format!("{:<4}  {:<name_w$}  {:<graph_w$}  {detail}", r.status.to_string(), r.name, r.graph);
        if let Some(note) = &r.note {
            line.push_str(&format!("  ({note})"));
        }
        if let Some(ms) = r.elapsed_ms {
            line.push_str(&format!("  [{ms} ms]"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let t = tally(results);
    out.push_str(&format!("{} passed, {} failed, {} skipped\n", t.pass, t.fail, t.skip));
    out
}

pub fn render_json(results: &[CheckResult]) -> String {
    serde_json::to_string_pretty(results).expect("check results serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    fn named(names: &[&str]) -> Vec<(String, Multigraph)> {
        names.iter().map(|&n| (n.to_string(), catalog(n).unwrap())).collect()
    }

    #[test]
    fn deterministic_and_sorted() {
        let opts = SuiteOptions {
            seed: 7,
            random: 5,
            max_edges: 6,
            ..SuiteOptions::default()
        };
        let graphs = named(&["banana", "node"]);
        let names = vec!["subsum".to_string(), "nodalhilb".to_string()];
        let a = run_suite(&graphs, &names, &opts).unwrap();
        let b = run_suite(&graphs, &names, &opts).unwrap();
        assert_eq!(render_json(&a), render_json(&b));
        assert_eq!(a.len(), 14);
        assert!(a.windows(2).all(|w| (&w[0].name, &w[0].graph) <= (&w[1].name, &w[1].graph)));
        assert_eq!(tally(&a).fail, 0);
        assert_eq!(a[0].name, "nodalhilb");
    }

    #[test]
    fn unknown_name_rejected() {
        assert!(resolve_checks(&["bogus".into()]).is_err());
        assert_eq!(resolve_checks(&[]).unwrap().len(), 13);
        assert_eq!(resolve_checks(&["severi".into(), "severi".into()]).unwrap(), vec!["severi"]);
    }

    #[test]
    fn text_report() {
        let results = run_suite(&named(&["banana"]), &["jacobian-strata".into()], &SuiteOptions::default()).unwrap();
        let text = render_text(&results);
        assert_eq!(text, "pass  jacobian-strata  banana  lhs = rhs = 2*L\n1 passed, 0 failed, 0 skipped\n");
        let json: serde_json::Value = serde_json::from_str(&render_json(&results)).unwrap();
        assert_eq!(json[0]["status"], "pass");
        assert!(json[0].get("elapsed_ms").is_none());
    }
}
