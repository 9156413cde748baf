//! Randomized theorem suites with replayable seeds.
//!
//! Every trial draws its inputs from a ChaCha8 stream seeded by
//! [`trial_seed`], so any failure can be replayed with [`run_trial`].

pub mod generators;
mod suites;
pub mod table1;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::caps::caps;
use crate::error::{Error, Result};

/// Largest tree host a suite may sample.
pub const MAX_TREE_VERTICES: usize = 8;
/// Largest point count a suite may sample.
pub const MAX_POINTS: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    TreeStronglyChordal,
    IntervalCircleClawNet,
    IntervalUnitInterval,
    CycleWitness,
    TripodWitness,
    NetLike,
    AllGraphs,
    OpenClosedScale,
    Recombination,
    Table1,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::TreeStronglyChordal,
        Suite::IntervalCircleClawNet,
        Suite::IntervalUnitInterval,
        Suite::CycleWitness,
        Suite::TripodWitness,
        Suite::NetLike,
        Suite::AllGraphs,
        Suite::OpenClosedScale,
        Suite::Recombination,
        Suite::Table1,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::TreeStronglyChordal => "tree-strongly-chordal",
            Suite::IntervalCircleClawNet => "interval-circle-clawnet",
            Suite::IntervalUnitInterval => "interval-unit-interval",
            Suite::CycleWitness => "cycle-witness",
            Suite::TripodWitness => "tripod-witness",
            Suite::NetLike => "net-like",
            Suite::AllGraphs => "all-graphs",
            Suite::OpenClosedScale => "open-closed-scale",
            Suite::Recombination => "recombination",
            Suite::Table1 => "table1",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .iter()
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Domain(format!(
                    "unknown suite {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialConfig {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    /// Vertex bound for sampled metric graphs.
    pub max_tree_vertices: usize,
    /// Point bound for sampled realizations.
    pub max_points: usize,
    /// Smallest sampled threshold, in 64ths.
    pub min_delta_64ths: i64,
}

impl TrialConfig {
    pub fn new(suite: Suite, trials: usize, seed: u64) -> TrialConfig {
        let max_points = match suite {
            Suite::TreeStronglyChordal => 12,
            _ => MAX_POINTS,
        };
        TrialConfig {
            suite,
            trials,
            seed,
            max_tree_vertices: MAX_TREE_VERTICES,
            max_points,
            min_delta_64ths: 8,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Domain("trials must be positive".into()));
        }
        if !(4..=MAX_TREE_VERTICES).contains(&self.max_tree_vertices) {
            return Err(Error::Capacity {
                what: "metric graph vertices",
                n: self.max_tree_vertices,
                cap: MAX_TREE_VERTICES,
            });
        }
        let point_cap = MAX_POINTS.min(caps().exponential);
        if self.max_points == 0 || self.max_points > point_cap {
            return Err(Error::Capacity {
                what: "sampled points",
                n: self.max_points,
                cap: point_cap,
            });
        }
        if self.min_delta_64ths <= 0 {
            return Err(Error::Domain(
                "the smallest threshold must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// One violated property, with everything needed to replay it.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub trial: usize,
    pub trial_seed: u64,
    pub property: String,
    pub detail: Value,
}

impl Failure {
    pub fn to_json(&self) -> Value {
        json!({
            "trial": self.trial,
            "trial_seed": self.trial_seed,
            "property": self.property,
            "detail": self.detail,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    pub failures: Vec<Failure>,
    pub wall_time_ms: u128,
    /// Suite-specific summary data.
    pub extra: Value,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed(),
            "failures": self.failures.iter().map(Failure::to_json).collect::<Vec<_>>(),
            "wall_time_ms": self.wall_time_ms,
            "extra": self.extra,
        })
    }
}

/// Seed of trial `index` under `master`: two rounds of the splitmix64
/// finalizer.
pub fn trial_seed(master: u64, index: usize) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
    mix(master ^ mix(index as u64))
}

/// A violated property and its replay data.
#[derive(Debug, Clone)]
pub(crate) struct Violation {
    pub property: String,
    pub detail: Value,
}

impl Violation {
    pub fn new(property: impl Into<String>, detail: Value) -> Violation {
        Violation {
            property: property.into(),
            detail,
        }
    }
}

/// Replays one trial.
pub fn run_trial(cfg: &TrialConfig, index: usize) -> Result<Option<Failure>> {
    cfg.validate()?;
    Ok(trial(cfg, index))
}

fn trial(cfg: &TrialConfig, index: usize) -> Option<Failure> {
    let seed = trial_seed(cfg.seed, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    suites::run(cfg, &mut rng).err().map(|v| Failure {
        trial: index,
        trial_seed: seed,
        property: v.property,
        detail: v.detail,
    })
}

pub fn run_suite(cfg: &TrialConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let (trials, mut failures, extra) = match cfg.suite {
        Suite::Table1 => {
            let (failures, extra) = suites::table1_report();
            let cells = table1::Row::ALL.len() * table1::COLUMNS.len();
            (cells, failures, extra)
        }
        _ => {
            let mut failures: Vec<Failure> = (0..cfg.trials)
                .into_par_iter()
                .filter_map(|i| trial(cfg, i))
                .collect();
            let mut extra = json!({});
            if cfg.suite == Suite::AllGraphs {
                let (checked, exhaustive_failures) =
                    suites::all_small_connected_graphs(6, cfg.trials);
                failures.extend(exhaustive_failures);
                extra = json!({"exhaustive_connected_graphs": checked});
            }
            (cfg.trials, failures, extra)
        }
    };
    failures.sort_by_key(|f| f.trial);
    Ok(SuiteReport {
        suite: cfg.suite,
        trials,
        seed: cfg.seed,
        failures,
        wall_time_ms: start.elapsed().as_millis(),
        extra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn config_over_caps_is_rejected() {
        let mut cfg = TrialConfig::new(Suite::TreeStronglyChordal, 1, 0);
        cfg.max_points = 40;
        assert!(matches!(run_suite(&cfg), Err(Error::Capacity { .. })));
        cfg.max_points = 12;
        cfg.max_tree_vertices = 9;
        assert!(run_suite(&cfg).is_err());
        let cfg = TrialConfig::new(Suite::TreeStronglyChordal, 0, 0);
        assert!(run_suite(&cfg).is_err());
    }

    #[test]
    fn seeds_differ_per_trial() {
        assert_ne!(trial_seed(7, 0), trial_seed(7, 1));
        assert_ne!(trial_seed(7, 0), trial_seed(8, 0));
    }
}
