//! Full-size agreement suites, one line per criterion.

use std::time::{Duration, Instant};

use polyhedral::check::{run_suite, Suite};

const SEED: u64 = 0;
const LP_BUDGET: Duration = Duration::from_secs(30);

struct Criterion {
    label: &'static str,
    suite: Suite,
    budget: Option<Duration>,
}

const CRITERIA: [Criterion; 9] = [
    Criterion { label: "representation round trip", suite: Suite::Roundtrip, budget: None },
    Criterion { label: "projection soundness", suite: Suite::Projection, budget: None },
    Criterion { label: "composition", suite: Suite::Compose, budget: None },
    Criterion { label: "sum", suite: Suite::Sum, budget: None },
    Criterion { label: "optimal value function", suite: Suite::Optval, budget: None },
    Criterion { label: "relative interior formula", suite: Suite::Relint, budget: None },
    Criterion { label: "graph decomposition", suite: Suite::RiGraph, budget: None },
    Criterion { label: "linear image", suite: Suite::LinearImage, budget: None },
    Criterion { label: "lp engine", suite: Suite::Lp, budget: Some(LP_BUDGET) },
];

fn main() {
    let mut failed = Vec::new();
    for (k, c) in CRITERIA.iter().enumerate() {
        let count = c.suite.default_count();
        let start = Instant::now();
        let report = run_suite(c.suite, SEED, count);
        let elapsed = start.elapsed();
        let in_budget = c.budget.is_none_or(|b| elapsed <= b);
        let ok = report.passed() && in_budget;
        println!(
            "{} criterion {} ({}): {} instances, {} checks, {:.2}s",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            c.label,
            count,
            report.total_checks(),
            elapsed.as_secs_f64()
        );
        for bad in report.failures().take(3) {
            println!("    instance {}: {}", bad.index, bad.failure.as_deref().unwrap_or(""));
        }
        if !in_budget {
            println!("    exceeded time budget of {}s", c.budget.unwrap().as_secs());
        }
        if !ok {
            failed.push(k + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
