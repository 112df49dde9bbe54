//! Shared fixtures for the integration suites: the 9-vertex worked example
//! with its externally known incidence matrix and pseudoinverse, and seeded
//! random unicyclic graph helpers.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use unipinv::cli::gen::{generate_unicyclic, CycleParity, GenSpec};
use unipinv::exact::{rational, RationalMatrix};
use unipinv::graph::{parse_graph, Graph};

pub const EXAMPLE_9: &str = include_str!("../data/example9.txt");
pub const TRIANGLE: &str = include_str!("../data/triangle.txt");
pub const PATH_3: &str = include_str!("../data/path3.txt");

/// The known 9x9 incidence matrix of the worked example (rows are vertices
/// 1..9, columns are edges e1..e9).
pub const EXAMPLE_9_INCIDENCE: [[i64; 9]; 9] = [
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 1, 0, 1, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 0],
];

/// The known pseudoinverse of the worked example, times 36 (rows are edges
/// e1..e9, columns are vertices 1..9).
pub const EXAMPLE_9_PINV_TIMES_36: [[i64; 9]; 9] = [
    [4, -4, 4, 4, 4, -4, -4, 32, -4],
    [4, -4, 4, 4, 4, 32, -4, -4, -4],
    [32, 4, -4, -4, -4, 4, 4, 4, 4],
    [-24, 24, -24, 12, 12, -12, -12, -12, -12],
    [-4, 4, 32, -4, -4, 4, 4, 4, 4],
    [10, -10, 10, -8, 10, 8, 17, 8, -1],
    [-6, 6, -6, 12, -6, -12, -3, -12, 15],
    [10, -10, 10, -8, 10, 8, -1, 8, 17],
    [-6, 6, -6, 12, -6, -12, 15, -12, -3],
];

pub fn example_9() -> Graph {
    parse_graph(EXAMPLE_9).unwrap()
}

pub fn example_9_incidence() -> RationalMatrix {
    RationalMatrix::from_integer_rows(
        &EXAMPLE_9_INCIDENCE
            .iter()
            .map(|row| row.to_vec())
            .collect::<Vec<_>>(),
    )
}

pub fn example_9_pinv() -> RationalMatrix {
    RationalMatrix::from_fn(9, 9, |r, c| rational(EXAMPLE_9_PINV_TIMES_36[r][c], 36))
}

/// Deterministic random unicyclic graph: vertex count drawn from
/// `n_range`, cycle length uniform over the lengths of the requested parity.
pub fn random_unicyclic(
    seed: u64,
    n_range: std::ops::RangeInclusive<usize>,
    parity: CycleParity,
) -> (Graph, GenSpec) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(n_range);
    let min_cycle = match parity {
        CycleParity::Even => 4,
        _ => 3,
    };
    assert!(n >= min_cycle, "vertex range too small for the parity");
    let candidates: Vec<usize> = (min_cycle..=n)
        .filter(|len| match parity {
            CycleParity::Even => len % 2 == 0,
            CycleParity::Odd => len % 2 == 1,
            CycleParity::Any => true,
        })
        .collect();
    let cycle_length = candidates[rng.random_range(0..candidates.len())];
    let spec = GenSpec {
        n,
        cycle_length,
        parity,
        seed: rng.random(),
    };
    let graph = generate_unicyclic(&spec).unwrap();
    (graph, spec)
}
