//! The named matrices of a graph: vertex-edge incidence, the distance-parity
//! matrix, and the signless vertex/edge Laplacians.

use num_traits::One;

use crate::exact::{integer, Rational, RationalMatrix};
use crate::graph::Graph;

/// Vertex-edge incidence matrix: rows are vertices, columns are edges, and
/// entry `(i, j)` is one exactly when vertex `i` is an endpoint of edge `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    matrix: RationalMatrix,
}

impl IncidenceMatrix {
    pub fn from_graph(g: &Graph) -> Self {
        let mut matrix = RationalMatrix::zeros(g.vertex_count(), g.edge_count());
        for (j, &(u, v)) in g.edges().iter().enumerate() {
            matrix.set(u, j, Rational::one());
            matrix.set(v, j, Rational::one());
        }
        IncidenceMatrix { matrix }
    }

    /// Vertex count (row dimension).
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    /// Edge count (column dimension).
    pub fn m(&self) -> usize {
        self.matrix.cols()
    }

    pub fn as_matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RationalMatrix {
        self.matrix
    }
}

/// The symmetric n x n matrix with entry `(i, j)` equal to `(-1)^d(i,j)`.
/// It annihilates the incidence matrix from the left exactly when the graph
/// is bipartite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityMatrix {
    matrix: RationalMatrix,
}

impl ParityMatrix {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut matrix = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for (j, sign) in distance_signs(g, i).into_iter().enumerate() {
                matrix.set(i, j, sign);
            }
        }
        ParityMatrix { matrix }
    }

    pub fn as_matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RationalMatrix {
        self.matrix
    }
}

fn distance_signs(g: &Graph, src: usize) -> Vec<Rational> {
    (0..g.vertex_count())
        .map(|v| {
            integer(if g.dist(src, v).is_multiple_of(2) {
                1
            } else {
                -1
            })
        })
        .collect()
}

/// Signless Laplacian `Q = M * M^T` (vertex by vertex) and its edge analogue
/// `S = M^T * M` (edge by edge).
pub fn signless_laplacians(m: &IncidenceMatrix) -> (RationalMatrix, RationalMatrix) {
    let mt = m.as_matrix().transpose();
    let q = m.as_matrix().mul(&mt);
    let s = mt.mul(m.as_matrix());
    (q, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn triangle() -> Graph {
        parse_graph("3 3\n1 2\n2 3\n1 3\n").unwrap()
    }

    #[test]
    fn triangle_incidence() {
        let m = IncidenceMatrix::from_graph(&triangle());
        assert_eq!(
            m.as_matrix(),
            &RationalMatrix::from_integer_rows(&[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1],])
        );
    }

    #[test]
    fn single_edge_incidence() {
        let g = parse_graph("2 1\n1 2\n").unwrap();
        let m = IncidenceMatrix::from_graph(&g);
        assert_eq!(
            m.as_matrix(),
            &RationalMatrix::from_integer_rows(&[vec![1], vec![1]])
        );
    }

    #[test]
    fn incidence_column_sums_are_two_and_row_sums_are_degrees() {
        let g = parse_graph(crate::graph::EXAMPLE_9).unwrap();
        let m = IncidenceMatrix::from_graph(&g);
        for j in 0..m.m() {
            let sum: Rational = (0..m.n()).map(|i| m.as_matrix().get(i, j).clone()).sum();
            assert_eq!(sum, integer(2));
        }
        for i in 0..m.n() {
            let sum: Rational = (0..m.m()).map(|j| m.as_matrix().get(i, j).clone()).sum();
            assert_eq!(sum, integer(g.degree(i) as i64));
        }
    }

    #[test]
    fn parity_of_single_vertex() {
        let g = parse_graph("1 0\n").unwrap();
        let p = ParityMatrix::from_graph(&g);
        assert_eq!(p.as_matrix(), &RationalMatrix::identity(1));
    }

    #[test]
    fn parity_entries_on_example_9() {
        let g = parse_graph(crate::graph::EXAMPLE_9).unwrap();
        let p = ParityMatrix::from_graph(&g);
        // d(1,8) = 5, so the (1,8) entry is -1.
        assert_eq!(p.as_matrix().get(0, 7), &integer(-1));
        for i in 0..9 {
            assert_eq!(p.as_matrix().get(i, i), &integer(1));
        }
        assert!(p.as_matrix().is_symmetric());
    }

    #[test]
    fn triangle_signless_laplacians() {
        let m = IncidenceMatrix::from_graph(&triangle());
        let (q, s) = signless_laplacians(&m);
        assert_eq!(
            q,
            RationalMatrix::from_integer_rows(&[vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]])
        );
        assert!(s.is_symmetric());
        for i in 0..3 {
            assert_eq!(s.get(i, i), &integer(2));
        }
    }

    #[test]
    fn q_diagonal_is_degree_on_example_9() {
        let g = parse_graph(crate::graph::EXAMPLE_9).unwrap();
        let m = IncidenceMatrix::from_graph(&g);
        let (q, s) = signless_laplacians(&m);
        // Vertex 4 has degree 4.
        assert_eq!(q.get(3, 3), &integer(4));
        for v in 0..9 {
            assert_eq!(q.get(v, v), &integer(g.degree(v) as i64));
        }
        // Off-diagonal entries of Q are adjacency indicators.
        for u in 0..9 {
            for v in 0..u {
                let adjacent = g.incident(u).iter().any(|&(w, _)| w == v);
                assert_eq!(q.get(u, v), &integer(if adjacent { 1 } else { 0 }));
            }
        }
        for e in 0..9 {
            assert_eq!(s.get(e, e), &integer(2));
        }
    }
}
