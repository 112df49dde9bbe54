//! Independent verification machinery: an exact pseudoinverse oracle via
//! rank factorization, the four-axiom Penrose checker, and the bipartite
//! parity-annihilation check.
//!
//! The Penrose checker is the acceptance authority: the Moore-Penrose
//! inverse is unique, so four exact passes prove a candidate is it, with no
//! appeal to any other computation. The rank-factorization oracle is a
//! second, fully independent construction used to cross-check the
//! combinatorial formulas structurally.

use std::error::Error;
use std::fmt;

use serde_json::{json, Value};

use crate::exact::RationalMatrix;
use crate::graph::Graph;
use crate::matrices::{IncidenceMatrix, ParityMatrix};

/// Location of the first Penrose-axiom violation: which axiom (1..=4) and
/// the first differing coordinate of the compared matrices, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PenroseViolation {
    pub axiom: u8,
    pub row: usize,
    pub col: usize,
}

/// Per-axiom certificate for a candidate pseudoinverse `X` of `A`:
/// `A X A = A`, `X A X = X`, and symmetry of `A X` and `X A`.
/// All four passing proves `X` is the Moore-Penrose inverse of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PenroseReport {
    pub axiom1: bool,
    pub axiom2: bool,
    pub axiom3: bool,
    pub axiom4: bool,
    pub first_violation: Option<PenroseViolation>,
}

impl PenroseReport {
    pub fn all_pass(&self) -> bool {
        self.axiom1 && self.axiom2 && self.axiom3 && self.axiom4
    }

    /// JSON form with 1-based witness coordinates, `witness` null when all
    /// axioms pass.
    pub fn to_json(&self) -> Value {
        let witness = match &self.first_violation {
            None => Value::Null,
            Some(v) => json!({"axiom": v.axiom, "row": v.row + 1, "col": v.col + 1}),
        };
        json!({
            "axiom1": self.axiom1,
            "axiom2": self.axiom2,
            "axiom3": self.axiom3,
            "axiom4": self.axiom4,
            "witness": witness,
        })
    }
}

/// Internal failure of the self-certifying oracle; indicates an arithmetic
/// bug, never an input condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    CertificationFailed(PenroseReport),
    FactorNotInvertible,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::CertificationFailed(report) => {
                write!(f, "oracle output failed self-certification: {report:?}")
            }
            OracleError::FactorNotInvertible => {
                write!(f, "Gram matrix of a full-rank factor was singular")
            }
        }
    }
}

impl Error for OracleError {}

fn first_difference(a: &RationalMatrix, b: &RationalMatrix) -> Option<(usize, usize)> {
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            if a.get(r, c) != b.get(r, c) {
                return Some((r, c));
            }
        }
    }
    None
}

/// Checks the four Penrose axioms for `x` as a candidate pseudoinverse of
/// `a`, by exact multiplication and structural equality. Panics if the
/// shapes are not transposes of each other.
pub fn check_penrose(a: &RationalMatrix, x: &RationalMatrix) -> PenroseReport {
    assert_eq!(
        (a.rows(), a.cols()),
        (x.cols(), x.rows()),
        "candidate pseudoinverse must have the transposed shape"
    );
    let ax = a.mul(x);
    let xa = x.mul(a);

    let mut first_violation = None;
    let mut record = |axiom: u8, diff: Option<(usize, usize)>| -> bool {
        match diff {
            None => true,
            Some((row, col)) => {
                if first_violation.is_none() {
                    first_violation = Some(PenroseViolation { axiom, row, col });
                }
                false
            }
        }
    };

    let axiom1 = record(1, first_difference(&ax.mul(a), a));
    let axiom2 = record(2, first_difference(&xa.mul(x), x));
    let axiom3 = record(3, first_difference(&ax, &ax.transpose()));
    let axiom4 = record(4, first_difference(&xa, &xa.transpose()));

    PenroseReport {
        axiom1,
        axiom2,
        axiom3,
        axiom4,
        first_violation,
    }
}

/// Rank of a matrix over the rationals.
pub fn rank(a: &RationalMatrix) -> usize {
    a.reduced_row_echelon_form().1.len()
}

/// Full-rank factorization `A = F G` with `F` of full column rank and `G`
/// of full row rank, read off the reduced row echelon form: `G` is the
/// nonzero rows of the echelon form and `F` the pivot columns of `A`.
/// Returns `None` for the zero matrix (rank zero).
pub fn rank_factorization(a: &RationalMatrix) -> Option<(RationalMatrix, RationalMatrix)> {
    let (echelon, pivot_cols) = a.reduced_row_echelon_form();
    let r = pivot_cols.len();
    if r == 0 {
        return None;
    }
    let f = RationalMatrix::from_fn(a.rows(), r, |i, k| a.get(i, pivot_cols[k]).clone());
    let g = RationalMatrix::from_fn(r, a.cols(), |k, j| echelon.get(k, j).clone());
    Some((f, g))
}

/// Exact Moore-Penrose inverse of any rational matrix via rank
/// factorization: `A+ = G^T (G G^T)^-1 (F^T F)^-1 F^T`. The result is
/// certified against the four Penrose axioms before it is returned.
pub fn pinv_rank_factorization(a: &RationalMatrix) -> Result<RationalMatrix, OracleError> {
    let pinv = match rank_factorization(a) {
        None => RationalMatrix::zeros(a.cols(), a.rows()),
        Some((f, g)) => {
            let gt = g.transpose();
            let ft = f.transpose();
            let ggt_inv = g
                .mul(&gt)
                .solve_full_rank(&RationalMatrix::identity(g.rows()))
                .map_err(|_| OracleError::FactorNotInvertible)?;
            let ftf_inv = ft
                .mul(&f)
                .solve_full_rank(&RationalMatrix::identity(f.cols()))
                .map_err(|_| OracleError::FactorNotInvertible)?;
            gt.mul(&ggt_inv).mul(&ftf_inv).mul(&ft)
        }
    };
    let report = check_penrose(a, &pinv);
    if !report.all_pass() {
        return Err(OracleError::CertificationFailed(report));
    }
    Ok(pinv)
}

/// True exactly when the distance-parity matrix annihilates the incidence
/// matrix from the left, which happens precisely for bipartite graphs.
pub fn check_parity_annihilation(g: &Graph, m: &IncidenceMatrix) -> bool {
    ParityMatrix::from_graph(g)
        .as_matrix()
        .mul(m.as_matrix())
        .is_zero()
}
