//! Benchmark harness: combinatorial construction versus the exact
//! rank-factorization oracle on seeded random unicyclic graphs.

use std::error::Error;
use std::fmt;
use std::time::{Duration, Instant};

use crate::cli::gen::{generate_unicyclic, CycleParity, GenError, GenSpec};
use crate::matrices::IncidenceMatrix;
use crate::oracle::{check_penrose, pinv_rank_factorization};
use crate::pinv::combinatorial_pinv;

/// One measured cell. `t_oracle` is absent when the size is above the
/// oracle cap. Records only count toward reports when `verified` is true.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub n: usize,
    pub cycle_length: usize,
    pub seed: u64,
    pub t_combinatorial: Duration,
    pub t_oracle: Option<Duration>,
    pub verified: bool,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub seeds_per_size: usize,
    pub base_seed: u64,
    pub cycle_length: Option<usize>,
    pub oracle_cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BenchError {
    SizeTooSmall { size: usize },
    Gen(GenError),
}

impl fmt::Display for BenchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchError::SizeTooSmall { size } => {
                write!(f, "benchmark sizes must be at least 4, got {size}")
            }
            BenchError::Gen(e) => write!(f, "{e}"),
        }
    }
}

impl Error for BenchError {}

impl From<GenError> for BenchError {
    fn from(e: GenError) -> Self {
        BenchError::Gen(e)
    }
}

/// Runs every `(size, seed)` cell: times the combinatorial construction,
/// certifies it against the Penrose axioms, and times the oracle up to the
/// size cap.
pub fn run(config: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    let cycle_length = config.cycle_length.unwrap_or(4);
    let mut records = Vec::new();
    for &n in &config.sizes {
        if n < 4 {
            return Err(BenchError::SizeTooSmall { size: n });
        }
        for idx in 0..config.seeds_per_size {
            let seed = config.base_seed + idx as u64;
            let spec = GenSpec {
                n,
                cycle_length,
                parity: CycleParity::Any,
                seed,
            };
            let graph = generate_unicyclic(&spec)?;
            let m = IncidenceMatrix::from_graph(&graph);

            let started = Instant::now();
            let decomposition = graph.decompose().expect("generated graph is unicyclic");
            let h = combinatorial_pinv(&decomposition);
            let t_combinatorial = started.elapsed();

            let verified = check_penrose(m.as_matrix(), h.h()).all_pass();

            let t_oracle = (n <= config.oracle_cap).then(|| {
                let started = Instant::now();
                let _ = pinv_rank_factorization(m.as_matrix())
                    .expect("oracle certifies on incidence matrices");
                started.elapsed()
            });

            records.push(BenchRecord {
                n,
                cycle_length,
                seed,
                t_combinatorial,
                t_oracle,
                verified,
            });
        }
    }
    Ok(records)
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// CSV with one line per record; the oracle column is empty above the cap.
pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("n,cycle_length,seed,t_combinatorial_ms,t_oracle_ms,verified\n");
    for r in records {
        let oracle = r
            .t_oracle
            .map(|d| format!("{:.3}", ms(d)))
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{:.3},{},{}\n",
            r.n,
            r.cycle_length,
            r.seed,
            ms(r.t_combinatorial),
            oracle,
            r.verified
        ));
    }
    out
}

/// Median per-size wall times, in milliseconds.
#[derive(Debug, Clone, PartialEq)]
pub struct SizeSummary {
    pub n: usize,
    pub median_combinatorial_ms: f64,
    pub median_oracle_ms: Option<f64>,
    pub all_verified: bool,
}

fn median(mut values: Vec<f64>) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).expect("durations are finite"));
    let k = values.len();
    if k % 2 == 1 {
        values[k / 2]
    } else {
        (values[k / 2 - 1] + values[k / 2]) / 2.0
    }
}

/// Aggregates records into per-size medians, in first-seen size order.
pub fn summarize(records: &[BenchRecord]) -> Vec<SizeSummary> {
    let mut sizes = Vec::new();
    for r in records {
        if !sizes.contains(&r.n) {
            sizes.push(r.n);
        }
    }
    sizes
        .into_iter()
        .map(|n| {
            let group: Vec<&BenchRecord> = records.iter().filter(|r| r.n == n).collect();
            let combinatorial = group.iter().map(|r| ms(r.t_combinatorial)).collect();
            let oracle: Vec<f64> = group.iter().filter_map(|r| r.t_oracle.map(ms)).collect();
            SizeSummary {
                n,
                median_combinatorial_ms: median(combinatorial),
                median_oracle_ms: (oracle.len() == group.len()).then(|| median(oracle)),
                all_verified: group.iter().all(|r| r.verified),
            }
        })
        .collect()
}
