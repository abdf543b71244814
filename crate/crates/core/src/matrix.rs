//! Rectangular 0/1 matrices with popcount-based row intersection, and the
//! row graph construction parameterized by the overlap threshold `p`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

pub const MAX_COLS: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    TooManyColumns { cols: usize },
    NoRows,
    DimensionMismatch { detail: String },
    NotSquare { rows: usize, cols: usize },
    EntryOutOfRange { row: usize, col: usize },
    BadBitChar { row: usize, col: usize },
}

impl core::fmt::Display for MatrixError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MatrixError::TooManyColumns { cols } => {
                write!(f, "{cols} columns exceeds the {MAX_COLS}-column limit")
            }
            MatrixError::NoRows => write!(f, "matrix needs at least one row"),
            MatrixError::DimensionMismatch { detail } => write!(f, "dimension mismatch: {detail}"),
            MatrixError::NotSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            MatrixError::EntryOutOfRange { row, col } => {
                write!(f, "entry ({row}, {col}) out of range")
            }
            MatrixError::BadBitChar { row, col } => {
                write!(f, "row {row} column {col}: expected '0' or '1'")
            }
        }
    }
}

impl core::error::Error for MatrixError {}

/// 0/1 matrix; each row is stored as a column-index bit mask.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u128>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self, MatrixError> {
        if rows == 0 {
            return Err(MatrixError::NoRows);
        }
        if cols > MAX_COLS {
            return Err(MatrixError::TooManyColumns { cols });
        }
        Ok(BinaryMatrix {
            rows,
            cols,
            data: vec![0; rows],
        })
    }

    pub fn ones(rows: usize, cols: usize) -> Result<Self, MatrixError> {
        let mut m = BinaryMatrix::zeros(rows, cols)?;
        let mask = Self::col_mask(cols);
        m.data.fill(mask);
        Ok(m)
    }

    pub fn identity(n: usize) -> Result<Self, MatrixError> {
        let mut m = BinaryMatrix::zeros(n, n)?;
        for (i, row) in m.data.iter_mut().enumerate() {
            *row = 1 << i;
        }
        Ok(m)
    }

    fn col_mask(cols: usize) -> u128 {
        if cols == 0 {
            0
        } else if cols == 128 {
            u128::MAX
        } else {
            (1u128 << cols) - 1
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<u128>) -> Result<Self, MatrixError> {
        if rows.is_empty() {
            return Err(MatrixError::NoRows);
        }
        if cols > MAX_COLS {
            return Err(MatrixError::TooManyColumns { cols });
        }
        let mask = Self::col_mask(cols);
        debug_assert!(rows.iter().all(|r| r & !mask == 0));
        Ok(BinaryMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Parses rows of '0'/'1' characters; all rows must share one length.
    pub fn from_bit_strings(rows: &[&str]) -> Result<Self, MatrixError> {
        if rows.is_empty() {
            return Err(MatrixError::NoRows);
        }
        let cols = rows[0].len();
        if cols > MAX_COLS {
            return Err(MatrixError::TooManyColumns { cols });
        }
        let mut data = Vec::with_capacity(rows.len());
        for (i, line) in rows.iter().enumerate() {
            if line.len() != cols {
                return Err(MatrixError::DimensionMismatch {
                    detail: alloc::format!(
                        "row {} has {} columns, expected {cols}",
                        i + 1,
                        line.len()
                    ),
                });
            }
            let mut mask = 0u128;
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '1' => mask |= 1 << j,
                    '0' => {}
                    _ => {
                        return Err(MatrixError::BadBitChar {
                            row: i + 1,
                            col: j + 1,
                        })
                    }
                }
            }
            data.push(mask);
        }
        Ok(BinaryMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row] >> col & 1 == 1
    }

    pub fn row_mask(&self, row: usize) -> u128 {
        self.data[row]
    }

    pub fn row_weight(&self, row: usize) -> usize {
        self.data[row].count_ones() as usize
    }

    /// Columns holding a 1 in `row`, in increasing order (0-indexed).
    pub fn lambda(&self, row: usize) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.get(row, c)).collect()
    }

    pub fn intersection_count(&self, a: usize, b: usize) -> usize {
        (self.data[a] & self.data[b]).count_ones() as usize
    }

    /// Returns a copy with entry `(row, col)` set to `value`.
    pub fn replace_entry(&self, row: usize, col: usize, value: bool) -> Result<Self, MatrixError> {
        if row >= self.rows || col >= self.cols {
            return Err(MatrixError::EntryOutOfRange { row, col });
        }
        let mut out = self.clone();
        if value {
            out.data[row] |= 1 << col;
        } else {
            out.data[row] &= !(1 << col);
        }
        Ok(out)
    }

    /// Appends `ones` all-one columns followed by `zeros` all-zero columns.
    pub fn append_columns(&self, ones: usize, zeros: usize) -> Result<Self, MatrixError> {
        let cols = self.cols + ones + zeros;
        if cols > MAX_COLS {
            return Err(MatrixError::TooManyColumns { cols });
        }
        let ones_mask = (Self::col_mask(self.cols + ones)) & !Self::col_mask(self.cols);
        let data = self.data.iter().map(|&r| r | ones_mask).collect();
        Ok(BinaryMatrix {
            rows: self.rows,
            cols,
            data,
        })
    }

    /// Stacks a grid of blocks; rows of blocks must agree on height and
    /// columns on width.
    pub fn assemble(blocks: &[Vec<&BinaryMatrix>]) -> Result<Self, MatrixError> {
        if blocks.is_empty() || blocks[0].is_empty() {
            return Err(MatrixError::NoRows);
        }
        let block_cols = blocks[0].len();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols()).collect();
        let total_cols: usize = widths.iter().sum();
        if total_cols > MAX_COLS {
            return Err(MatrixError::TooManyColumns { cols: total_cols });
        }
        let mut data = Vec::new();
        for (bi, band) in blocks.iter().enumerate() {
            if band.len() != block_cols {
                return Err(MatrixError::DimensionMismatch {
                    detail: alloc::format!(
                        "band {bi} has {} blocks, expected {block_cols}",
                        band.len()
                    ),
                });
            }
            let height = band[0].rows();
            for (bj, block) in band.iter().enumerate() {
                if block.rows() != height {
                    return Err(MatrixError::DimensionMismatch {
                        detail: alloc::format!(
                            "block ({bi},{bj}) height {} != {height}",
                            block.rows()
                        ),
                    });
                }
                if block.cols() != widths[bj] {
                    return Err(MatrixError::DimensionMismatch {
                        detail: alloc::format!(
                            "block ({bi},{bj}) width {} != {}",
                            block.cols(),
                            widths[bj]
                        ),
                    });
                }
            }
            for r in 0..height {
                let mut mask = 0u128;
                let mut offset = 0;
                for (bj, block) in band.iter().enumerate() {
                    mask |= block.data[r] << offset;
                    offset += widths[bj];
                }
                data.push(mask);
            }
        }
        Ok(BinaryMatrix {
            rows: data.len(),
            cols: total_cols,
            data,
        })
    }

    /// Reorders rows: row `i` of the result is row `perm[i]` of `self`.
    pub fn select_rows(&self, perm: &[usize]) -> Result<Self, MatrixError> {
        if perm.is_empty() {
            return Err(MatrixError::NoRows);
        }
        let data = perm.iter().map(|&i| self.data[i]).collect();
        Ok(BinaryMatrix {
            rows: perm.len(),
            cols: self.cols,
            data,
        })
    }

    /// Reorders columns: column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self, MatrixError> {
        if perm.len() != self.cols {
            return Err(MatrixError::DimensionMismatch {
                detail: alloc::format!(
                    "permutation length {} != {} columns",
                    perm.len(),
                    self.cols
                ),
            });
        }
        let mut out = BinaryMatrix::zeros(self.rows, self.cols)?;
        for r in 0..self.rows {
            let mut mask = 0u128;
            for (j, &src) in perm.iter().enumerate() {
                if self.get(r, src) {
                    mask |= 1 << j;
                }
            }
            out.data[r] = mask;
        }
        Ok(out)
    }

    pub fn row_string(&self, row: usize) -> String {
        (0..self.cols)
            .map(|c| if self.get(row, c) { '1' } else { '0' })
            .collect()
    }

    /// Graph on the rows: rows `i != j` are adjacent when they share ones
    /// in at least `p` columns. Works for rectangular matrices.
    pub fn p_row_graph(&self, p: usize) -> Graph {
        assert!(p >= 1, "threshold must be positive");
        let mut edges = Vec::new();
        for i in 0..self.rows {
            for j in i + 1..self.rows {
                if self.intersection_count(i, j) >= p {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(self.rows, edges).expect("rows >= 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use crate::iso::are_isomorphic;

    #[test]
    fn all_ones_rows_give_complete_row_graph() {
        let j33 = BinaryMatrix::ones(3, 3).unwrap();
        assert!(j33.p_row_graph(2).is_complete());
        assert!(j33.p_row_graph(3).is_complete());
    }

    #[test]
    fn band_matrix_two_row_graph_is_a_path() {
        let m = BinaryMatrix::from_bit_strings(&["1100", "1110", "0111", "0011"]).unwrap();
        let g = m.p_row_graph(2);
        assert!(are_isomorphic(&g, &family::path(4)).is_some());
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn lambda_examples() {
        let m = BinaryMatrix::from_bit_strings(&["1100", "0000"]).unwrap();
        assert_eq!(m.lambda(0), vec![0, 1]);
        assert_eq!(m.lambda(1), Vec::<usize>::new());
        let i3 = BinaryMatrix::identity(3).unwrap();
        for r in 0..3 {
            assert_eq!(i3.lambda(r), vec![r]);
        }
        let j4 = BinaryMatrix::ones(2, 4).unwrap();
        assert_eq!(j4.lambda(0), vec![0, 1, 2, 3]);
    }

    #[test]
    fn assemble_block_grid() {
        let a = BinaryMatrix::zeros(2, 3).unwrap();
        let j = BinaryMatrix::ones(2, 2).unwrap();
        let o = BinaryMatrix::zeros(1, 3).unwrap();
        let i = BinaryMatrix::identity(2).unwrap();
        let bad = BinaryMatrix::identity(2).unwrap();
        let m = BinaryMatrix::assemble(&[vec![&a, &j], vec![&o, &i.select_rows(&[0]).unwrap()]])
            .unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 5));
        assert!(BinaryMatrix::assemble(&[vec![&a, &j], vec![&bad, &i]]).is_err());
    }

    #[test]
    fn append_columns_pads_square() {
        // An n x m matrix plus i all-one and n-m-i all-zero columns is square.
        let m = BinaryMatrix::zeros(5, 3).unwrap();
        let padded = m.append_columns(1, 1).unwrap();
        assert!(padded.is_square());
        assert_eq!(padded.row_string(0), "00010");
    }

    #[test]
    fn replace_entry_is_value_semantics() {
        let m = BinaryMatrix::ones(2, 2).unwrap();
        let m2 = m.replace_entry(0, 1, false).unwrap();
        assert!(m.get(0, 1));
        assert!(!m2.get(0, 1));
        assert!(m.replace_entry(5, 0, true).is_err());
    }

    #[test]
    fn row_graph_monotone_in_p() {
        let m = BinaryMatrix::from_bit_strings(&["1101", "1011", "0111", "1110"]).unwrap();
        for p in 1..4 {
            let lo = m.p_row_graph(p);
            let hi = m.p_row_graph(p + 1);
            for (u, v) in hi.edges() {
                assert!(lo.has_edge(u, v));
            }
        }
    }

    #[test]
    fn column_permutation_preserves_row_graph() {
        let m = BinaryMatrix::from_bit_strings(&["1100", "1110", "0111", "0011"]).unwrap();
        let p = m.permute_columns(&[3, 0, 2, 1]).unwrap();
        assert_eq!(m.p_row_graph(2), p.p_row_graph(2));
    }

    #[test]
    fn hexagon_with_chord_as_a_two_row_graph() {
        // Order-6 witness for the hexagon 1-2-3-6-5-4-1 with chord 2-5.
        let m = BinaryMatrix::from_bit_strings(&[
            "110010", "010011", "010101", "101010", "001011", "001101",
        ])
        .unwrap();
        let g1 = crate::graph::Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (1, 4)],
        )
        .unwrap();
        assert_eq!(m.p_row_graph(2), g1);
    }
}
