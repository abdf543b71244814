//! Digraphs and the bridge between square 0/1 matrices and competition
//! graphs: arcs follow the matrix entries, and two vertices compete when
//! they share enough out-neighbors.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::matrix::{BinaryMatrix, MatrixError};

/// Directed graph with loops permitted; out-neighborhoods as bit masks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    n: usize,
    out: Vec<u128>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        assert!((1..=128).contains(&n));
        let mut out = vec![0u128; n];
        for (u, v) in arcs {
            assert!(u < n && v < n, "arc endpoint out of range");
            out[u] |= 1 << v;
        }
        Digraph { n, out }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_arc(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Graph with an edge between distinct `x`, `y` exactly when they have
    /// at least `p` common out-neighbors.
    pub fn p_competition(&self, p: usize) -> Graph {
        assert!(p >= 1);
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if (self.out[u] & self.out[v]).count_ones() as usize >= p {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, edges).expect("n >= 1")
    }
}

/// Arc `(i, j)` exactly when entry `(i, j)` is 1; input must be square.
pub fn matrix_to_digraph(m: &BinaryMatrix) -> Result<Digraph, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(Digraph {
        n: m.rows(),
        out: (0..m.rows()).map(|r| m.row_mask(r)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_matrix_yields_loop_digraph_with_empty_competition() {
        let d = matrix_to_digraph(&BinaryMatrix::identity(3).unwrap()).unwrap();
        assert_eq!(d.arcs(), vec![(0, 0), (1, 1), (2, 2)]);
        assert!(d.p_competition(1).is_edgeless());
    }

    #[test]
    fn all_ones_matrix_competes_completely() {
        let d = matrix_to_digraph(&BinaryMatrix::ones(3, 3).unwrap()).unwrap();
        assert!(d.p_competition(3).is_complete());
    }

    #[test]
    fn rejects_rectangular_input() {
        assert!(matrix_to_digraph(&BinaryMatrix::ones(2, 3).unwrap()).is_err());
    }

    #[test]
    fn competition_matches_row_graph() {
        let m = BinaryMatrix::from_bit_strings(&["1100", "1110", "0111", "0011"]).unwrap();
        let d = matrix_to_digraph(&m).unwrap();
        for p in 1..=4 {
            assert_eq!(d.p_competition(p), m.p_row_graph(p));
        }
    }
}
