//! Exact Moore-Penrose inverses of unicyclic graph incidence matrices.
//!
//! A connected graph with as many edges as vertices carries exactly one
//! cycle, and its vertex-edge incidence matrix is square: invertible when
//! the cycle is odd, singular when it is even. This crate constructs the
//! inverse (odd case) and the Moore-Penrose pseudoinverse (even case) in
//! O(n^2) from purely combinatorial data — distances, branch sizes, and the
//! two-component splits behind each edge — rather than by cubic elimination,
//! and certifies every result against the four Penrose axioms and an
//! independent rank-factorization oracle, all in exact rational arithmetic.
//!
//! Modules:
//!
//! - [`exact`]: arbitrary-precision rationals and dense rational matrices
//! - [`graph`]: edge-list parsing, classification, cycle extraction, and
//!   the distance/branch machinery
//! - [`matrices`]: incidence, distance-parity, and signless Laplacians
//! - [`pinv`]: the closed-form constructions and predicted products
//! - [`oracle`]: rank-factorization pseudoinverse, Penrose checker,
//!   parity annihilation
//! - [`cli`]: the `unipinv` command-line surface, random generator, and
//!   benchmark harness

pub mod cli;
pub mod exact;
pub mod graph;
pub mod matrices;
pub mod oracle;
pub mod pinv;
