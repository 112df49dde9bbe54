//! Seeded random unicyclic graph generation.
//!
//! The sampler builds a cycle, attaches every remaining vertex to a
//! uniformly chosen existing vertex, then shuffles vertex labels and edge
//! order. Output is fully determined by the spec, including the seed.
//! Uniformity over all unicyclic graphs is not claimed.

use std::error::Error;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Cycle-length parity constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleParity {
    Even,
    Odd,
    Any,
}

impl CycleParity {
    fn admits(self, len: usize) -> bool {
        match self {
            CycleParity::Even => len.is_multiple_of(2),
            CycleParity::Odd => !len.is_multiple_of(2),
            CycleParity::Any => true,
        }
    }
}

impl fmt::Display for CycleParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CycleParity::Even => "even",
            CycleParity::Odd => "odd",
            CycleParity::Any => "any",
        };
        write!(f, "{name}")
    }
}

/// Parameters of one generated graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub cycle_length: usize,
    pub parity: CycleParity,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    CycleTooShort { cycle_length: usize },
    CycleExceedsVertexCount { cycle_length: usize, n: usize },
    ParityUnsatisfiable { parity: CycleParity, detail: String },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::CycleTooShort { cycle_length } => {
                write!(f, "cycle length {cycle_length} is below the minimum of 3")
            }
            GenError::CycleExceedsVertexCount { cycle_length, n } => {
                write!(f, "cycle length {cycle_length} exceeds vertex count {n}")
            }
            GenError::ParityUnsatisfiable { parity, detail } => {
                write!(f, "{parity} parity constraint unsatisfiable: {detail}")
            }
        }
    }
}

impl Error for GenError {}

impl GenSpec {
    pub fn validate(&self) -> Result<(), GenError> {
        if self.cycle_length < 3 {
            return Err(GenError::CycleTooShort {
                cycle_length: self.cycle_length,
            });
        }
        if self.cycle_length > self.n {
            return Err(GenError::CycleExceedsVertexCount {
                cycle_length: self.cycle_length,
                n: self.n,
            });
        }
        if !self.parity.admits(self.cycle_length) {
            return Err(GenError::ParityUnsatisfiable {
                parity: self.parity,
                detail: format!("cycle length {} has the wrong parity", self.cycle_length),
            });
        }
        Ok(())
    }
}

/// Uniformly samples a valid cycle length for `n` vertices under the parity
/// constraint.
pub fn sample_cycle_length<R: Rng>(
    n: usize,
    parity: CycleParity,
    rng: &mut R,
) -> Result<usize, GenError> {
    let candidates: Vec<usize> = (3..=n).filter(|&len| parity.admits(len)).collect();
    if candidates.is_empty() {
        return Err(GenError::ParityUnsatisfiable {
            parity,
            detail: format!("no valid cycle length for n = {n}"),
        });
    }
    Ok(candidates[rng.random_range(0..candidates.len())])
}

/// Generates the unicyclic graph determined by `spec`.
pub fn generate_unicyclic(spec: &GenSpec) -> Result<Graph, GenError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let c = spec.cycle_length;

    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    for v in c..n {
        edges.push((rng.random_range(0..v), v));
    }

    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut rng);
    let mut relabeled: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| (labels[u] + 1, labels[v] + 1))
        .collect();
    relabeled.shuffle(&mut rng);

    Ok(Graph::from_edges(n, &relabeled).expect("generated graph is valid by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphClass;

    #[test]
    fn four_cycle_without_attachments() {
        let spec = GenSpec {
            n: 4,
            cycle_length: 4,
            parity: CycleParity::Even,
            seed: 1,
        };
        let g = generate_unicyclic(&spec).unwrap();
        assert_eq!(g.classify(), GraphClass::EvenUnicyclic);
        assert!(g.edges().iter().all(|&(u, v)| u < 4 && v < 4));
    }

    #[test]
    fn requested_shape_is_produced() {
        let spec = GenSpec {
            n: 9,
            cycle_length: 4,
            parity: CycleParity::Even,
            seed: 7,
        };
        let g = generate_unicyclic(&spec).unwrap();
        assert_eq!(g.classify(), GraphClass::EvenUnicyclic);
        assert_eq!(g.find_cycle().unwrap().len(), 4);
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = GenSpec {
            n: 30,
            cycle_length: 7,
            parity: CycleParity::Odd,
            seed: 99,
        };
        let a = generate_unicyclic(&spec).unwrap();
        let b = generate_unicyclic(&spec).unwrap();
        assert_eq!(a.edges(), b.edges());
        let other = generate_unicyclic(&GenSpec { seed: 100, ..spec }).unwrap();
        assert_ne!(a.edges(), other.edges());
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let base = GenSpec {
            n: 3,
            cycle_length: 4,
            parity: CycleParity::Any,
            seed: 0,
        };
        assert_eq!(
            generate_unicyclic(&base),
            Err(GenError::CycleExceedsVertexCount {
                cycle_length: 4,
                n: 3
            })
        );
        assert_eq!(
            generate_unicyclic(&GenSpec {
                cycle_length: 2,
                ..base
            }),
            Err(GenError::CycleTooShort { cycle_length: 2 })
        );
        assert!(matches!(
            generate_unicyclic(&GenSpec {
                cycle_length: 3,
                parity: CycleParity::Even,
                ..base
            }),
            Err(GenError::ParityUnsatisfiable { .. })
        ));
    }

    #[test]
    fn sampled_cycle_lengths_respect_parity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let len = sample_cycle_length(10, CycleParity::Even, &mut rng).unwrap();
            assert!(len % 2 == 0 && (4..=10).contains(&len));
            let len = sample_cycle_length(10, CycleParity::Odd, &mut rng).unwrap();
            assert!(len % 2 == 1 && (3..=10).contains(&len));
        }
        assert!(matches!(
            sample_cycle_length(3, CycleParity::Even, &mut rng),
            Err(GenError::ParityUnsatisfiable { .. })
        ));
    }
}
