//! Acceptance gate: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ubg_core::harness::table1::{table, Cell, Row};
use ubg_core::harness::{run_suite, Suite, SuiteReport, TrialConfig};
use ubg_core::Pattern;

const SEED: u64 = 20_241_015;

struct Outcome {
    passed: bool,
    detail: String,
}

fn suite(s: Suite, trials: usize) -> SuiteReport {
    run_suite(&TrialConfig::new(s, trials, SEED)).expect("valid config")
}

fn from_report(r: &SuiteReport) -> Outcome {
    let mut detail = format!(
        "{} trials, {} failures, {} ms",
        r.trials,
        r.failures.len(),
        r.wall_time_ms
    );
    if let Some(f) = r.failures.first() {
        detail.push_str(&format!(
            "; first: trial {} seed {} violates {}",
            f.trial, f.trial_seed, f.property
        ));
    }
    Outcome {
        passed: r.passed(),
        detail,
    }
}

fn tree_strongly_chordal() -> Outcome {
    let start = Instant::now();
    let r = suite(Suite::TreeStronglyChordal, 500);
    let elapsed = start.elapsed();
    let mut out = from_report(&r);
    out.passed &= elapsed < Duration::from_secs(60);
    out.detail.push_str(&format!(
        ", limit 60 s, took {:.2} s",
        elapsed.as_secs_f64()
    ));
    out
}

fn table1() -> Outcome {
    let mut problems = Vec::new();
    let (mut realized, mut rejected, mut out_of_scope) = (0, 0, 0);
    for (row, cells) in table() {
        for (p, cell) in cells {
            let expect_realized = match row {
                Row::Line => false,
                Row::Circle => p == Pattern::ChordlessCycle(4),
                Row::EuclideanPlane => true,
                Row::MaxNormPlane => p != Pattern::K15,
            };
            match (&cell, expect_realized) {
                (Cell::Realized(_), true) => realized += 1,
                (Cell::Rejected(_), false) if matches!(row, Row::Line | Row::Circle) => {
                    rejected += 1
                }
                (Cell::OutOfScope, false) if row == Row::MaxNormPlane && p == Pattern::K15 => {
                    out_of_scope += 1
                }
                _ => problems.push(format!("{} {p}: {:?}", row.name(), cell.to_json())),
            }
        }
    }
    let report = suite(Suite::Table1, 1);
    Outcome {
        passed: problems.is_empty()
            && report.passed()
            && (realized, rejected, out_of_scope) == (10, 9, 1),
        detail: format!(
            "{realized} realized, {rejected} rejected, {out_of_scope} out of scope{}",
            if problems.is_empty() {
                String::new()
            } else {
                format!("; unexpected: {}", problems.join(", "))
            }
        ),
    }
}

type Check = Box<dyn Fn() -> Outcome>;

fn main() -> ExitCode {
    let criteria: Vec<(&str, Check)> = vec![
        (
            "1  tree unit ball graphs are strongly chordal",
            Box::new(tree_strongly_chordal),
        ),
        (
            "2  interval and circle graphs are claw-free, net-free, Hamiltonian-hereditary",
            Box::new(|| from_report(&suite(Suite::IntervalCircleClawNet, 500))),
        ),
        (
            "3  interval graphs pass the unit interval recognizer",
            Box::new(|| from_report(&suite(Suite::IntervalUnitInterval, 500))),
        ),
        (
            "4  cycle witnesses carry a certified chordless cycle",
            Box::new(|| from_report(&suite(Suite::CycleWitness, 50))),
        ),
        (
            "5  tripod witnesses carry a certified claw or net",
            Box::new(|| from_report(&suite(Suite::TripodWitness, 50))),
        ),
        (
            "6  net-like extraction agrees with induced search",
            Box::new(|| from_report(&suite(Suite::NetLike, 200))),
        ),
        (
            "7  every graph is a unit ball graph of its gluing",
            Box::new(|| from_report(&suite(Suite::AllGraphs, 100))),
        ),
        (
            "8  open/closed thresholds and scaling",
            Box::new(|| from_report(&suite(Suite::OpenClosedScale, 500))),
        ),
        (
            "9  recombination inequality and disjoint segments",
            Box::new(|| from_report(&suite(Suite::Recombination, 500))),
        ),
        ("10 membership table", Box::new(table1)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let o = check();
        if !o.passed {
            failed += 1;
        }
        println!(
            "criterion {name}: {} ({})",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
