//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qtforge::cli::{run_suite, SuiteParams};

struct Criterion {
    id: u32,
    title: &'static str,
    suite: &'static str,
    params: SuiteParams,
    limit: Option<Duration>,
}

fn params(n: Option<usize>, deg: Option<i64>, cap: Option<usize>) -> SuiteParams {
    SuiteParams { n, deg, cap, timing: false }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, title: "pnp worked examples", suite: "pnp-examples", params: params(None, None, None), limit: secs(1) },
        Criterion { id: 2, title: "Garsia-Haiman per tableau, n <= 6", suite: "gh-equivalence", params: params(Some(6), None, None), limit: secs(120) },
        Criterion { id: 3, title: "rank n! at q = t = 1, n <= 7", suite: "regular-rank", params: params(Some(7), None, None), limit: secs(60) },
        Criterion { id: 4, title: "two routes to the R character, n <= 3, D = 4", suite: "chi-r-agreement", params: params(Some(3), Some(4), None), limit: secs(300) },
        Criterion { id: 5, title: "modified Kostka-Macdonald properties, n <= 5", suite: "kostka-macdonald", params: params(Some(5), None, None), limit: secs(120) },
        Criterion { id: 6, title: "Phi identities", suite: "thm-identities", params: params(Some(4), None, Some(3)), limit: secs(300) },
        Criterion { id: 7, title: "Hesselink comparison, n <= 3, |mu|+ <= 4", suite: "hesselink", params: params(Some(3), None, Some(4)), limit: None },
        Criterion { id: 8, title: "fake degrees vs Molien series, n <= 5", suite: "fake-degree", params: params(Some(5), None, None), limit: None },
        Criterion { id: 9, title: "Gordon's lemma, m <= 5, l <= 5", suite: "gordon", params: params(Some(5), None, Some(5)), limit: None },
        Criterion { id: 10, title: "R^nil specialization t = 1/q, n <= 4", suite: "rnil-specialization", params: params(Some(4), None, None), limit: None },
        Criterion { id: 11, title: "Pieri inverses, E-sets, plethystic round trip", suite: "pieri-combinatorics", params: params(Some(5), None, None), limit: None },
        Criterion { id: 12, title: "GH lemmas, n <= 8", suite: "gh-lemmas", params: params(Some(8), None, None), limit: None },
        Criterion { id: 13, title: "merge lemma and connectivity, n <= 5", suite: "merge-lemma", params: params(Some(5), None, None), limit: secs(120) },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let report = run_suite(c.suite, &c.params);
        let took = start.elapsed();
        let (ok, detail) = match &report {
            Ok(r) if !r.all_pass() => {
                let label = r.counterexample.as_ref().map(|x| x.label.as_str()).unwrap_or("?");
                (false, format!("{}/{} instances, first failure at {}", r.passed, r.total, label))
            }
            Ok(r) => match c.limit {
                Some(l) if took > l => (false, format!("{}/{} instances but over the {}s budget", r.passed, r.total, l.as_secs())),
                _ => (true, format!("{}/{} instances", r.passed, r.total)),
            },
            Err(e) => (false, format!("error: {}", e)),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {:<48} {:>9.3}s  {}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            took.as_secs_f64(),
            detail
        );
    }
    if failed == 0 {
        println!("acceptance: all 13 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} of 13 criteria fail", failed);
        ExitCode::FAILURE
    }
}
