//! Dense matrices over a commutative ring: construction and access, row and
//! column surgery, the algebraic operations, and the minor machinery that
//! cofactor expansion needs.
//!
//! Column operations are routed through [`Matrix::transpose`]: a column is
//! replaced or deleted by transposing, doing the row operation, and
//! transposing back. Minors delete a row directly and a column via that
//! route.

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::ring::{Element, Ring};
use crate::vector::Vector;

/// An `m x n` matrix over `ring`, stored as a row list. Both dimensions are
/// at least one, every row has the same length, and every entry is a
/// canonical element of the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: Vec<Vector>,
    ncols: usize,
}

/// Checks the matrix predicate without constructing: `rows` has exactly `m`
/// rows, each a length-`n` vector of elements of `ring`. With `m = 0` this
/// holds exactly for the empty row list.
pub fn is_matrix(ring: &Ring, rows: &[Vector], m: usize, n: usize) -> bool {
    rows.len() == m
        && rows
            .iter()
            .all(|row| row.len() == n && row.iter().all(|e| ring.contains(e)))
}

impl Matrix {
    /// Builds a matrix from its rows, validating shape and membership.
    pub fn from_rows(ring: Ring, rows: Vec<Vector>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::MustBePositive { what: "row count" });
        }
        let ncols = rows[0].len();
        if ncols == 0 {
            return Err(Error::MustBePositive {
                what: "column count",
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::RaggedRow {
                    row: i,
                    expected: ncols,
                    got: row.len(),
                });
            }
            if !row.iter().all(|e| ring.contains(e)) {
                return Err(Error::NotInRing {
                    ring: ring.to_string(),
                });
            }
        }
        Ok(Matrix { ring, rows, ncols })
    }

    /// Builds a matrix of small integers via the ring's canonical map.
    /// Convenient for fixtures and tests.
    pub fn from_i64_rows(ring: Ring, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|&k| ring.from_i64(k)).collect())
            .collect();
        Matrix::from_rows(ring, rows)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    /// Errors unless the matrix is square; returns its order.
    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.nrows())
        } else {
            Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols(),
            })
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<&Element> {
        let row = self.row(i)?;
        row.get(j).ok_or(Error::IndexOutOfRange {
            index: j,
            size: self.ncols,
        })
    }

    pub fn row(&self, i: usize) -> Result<&Vector> {
        self.rows.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            size: self.nrows(),
        })
    }

    /// Column `j` as an owned vector.
    pub fn col(&self, j: usize) -> Result<Vector> {
        if j >= self.ncols {
            return Err(Error::IndexOutOfRange {
                index: j,
                size: self.ncols,
            });
        }
        Ok(self.rows.iter().map(|row| row[j].clone()).collect())
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    /// Replaces row `i`, keeping everything else.
    pub fn replace_row(&self, i: usize, row: Vector) -> Result<Matrix> {
        if i >= self.nrows() {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: self.nrows(),
            });
        }
        if row.len() != self.ncols {
            return Err(Error::LengthMismatch {
                left: row.len(),
                right: self.ncols,
            });
        }
        if !row.iter().all(|e| self.ring.contains(e)) {
            return Err(Error::NotInRing {
                ring: self.ring.to_string(),
            });
        }
        let mut rows = self.rows.clone();
        rows[i] = row;
        Ok(Matrix {
            ring: self.ring.clone(),
            rows,
            ncols: self.ncols,
        })
    }

    /// Replaces column `j` by the transpose route.
    pub fn replace_col(&self, j: usize, col: Vector) -> Result<Matrix> {
        Ok(self.transpose().replace_row(j, col)?.transpose())
    }

    /// Deletes row `i`; the matrix must keep at least one row.
    pub fn delete_row(&self, i: usize) -> Result<Matrix> {
        if i >= self.nrows() {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: self.nrows(),
            });
        }
        if self.nrows() < 2 {
            return Err(Error::TooSmall {
                what: "row deletion",
                min: 2,
                got: self.nrows(),
            });
        }
        let mut rows = self.rows.clone();
        rows.remove(i);
        Ok(Matrix {
            ring: self.ring.clone(),
            rows,
            ncols: self.ncols,
        })
    }

    /// Deletes column `j` by the transpose route.
    pub fn delete_col(&self, j: usize) -> Result<Matrix> {
        if self.ncols < 2 {
            return Err(Error::TooSmall {
                what: "column deletion",
                min: 2,
                got: self.ncols,
            });
        }
        Ok(self.transpose().delete_row(j)?.transpose())
    }

    /// The `(i, j)` minor: delete row `i`, then column `j`.
    pub fn minor(&self, i: usize, j: usize) -> Result<Matrix> {
        self.delete_row(i)?.delete_col(j)
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|row| row[j].clone()).collect())
            .collect();
        Matrix {
            ring: self.ring.clone(),
            rows,
            ncols: self.nrows(),
        }
    }

    fn require_same_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    /// Entrywise sum of two matrices of equal shape.
    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.require_same_ring(other)?;
        if self.nrows() != other.nrows() || self.ncols != other.ncols {
            return Err(Error::DimMismatch(
                self.nrows(),
                self.ncols,
                other.nrows(),
                other.ncols,
            ));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| self.ring.add(x, y)).collect())
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            rows,
            ncols: self.ncols,
        })
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &Element) -> Matrix {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|e| self.ring.mul(c, e)).collect())
            .collect();
        Matrix {
            ring: self.ring.clone(),
            rows,
            ncols: self.ncols,
        }
    }

    /// Matrix product; inner dimensions must agree.
    pub fn multiply(&self, other: &Matrix) -> Result<Matrix> {
        self.require_same_ring(other)?;
        if self.ncols != other.nrows() {
            return Err(Error::InnerDimMismatch(
                self.nrows(),
                self.ncols,
                other.nrows(),
                other.ncols,
            ));
        }
        let cols: Vec<Vector> = (0..other.ncols)
            .map(|j| other.col(j).expect("column index in range"))
            .collect();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                cols.iter()
                    .map(|col| {
                        crate::vector::dot(&self.ring, row, col).expect("inner dims checked")
                    })
                    .collect()
            })
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            rows,
            ncols: other.ncols,
        })
    }

    /// Reorders rows so row `i` of the result is row `p[i]` of `self`.
    pub fn permute_rows(&self, p: &Permutation) -> Result<Matrix> {
        let rows = p.apply(&self.rows)?;
        Ok(Matrix {
            ring: self.ring.clone(),
            rows,
            ncols: self.ncols,
        })
    }

    /// Locates the first entry (row-major) where the two matrices differ.
    /// `None` means they are equal; shape differences report position (0, 0)
    /// conservatively.
    pub fn entry_diff(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.nrows() != other.nrows() || self.ncols != other.ncols {
            return Some((0, 0));
        }
        for (i, (a, b)) in self.rows.iter().zip(&other.rows).enumerate() {
            for (j, (x, y)) in a.iter().zip(b).enumerate() {
                if x != y {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// A matrix of independently sampled ring elements.
    pub fn sample<R: Rng + ?Sized>(ring: &Ring, m: usize, n: usize, rng: &mut R) -> Result<Matrix> {
        let rows = (0..m)
            .map(|_| crate::vector::sample_vector(ring, n, rng))
            .collect();
        Matrix::from_rows(ring.clone(), rows)
    }
}

/// Sum of all entries, folded row-major from zero.
pub fn mat_sum(a: &Matrix) -> Element {
    a.rows()
        .iter()
        .fold(a.ring().zero(), |acc, row| {
            a.ring().add(&acc, &crate::vector::vec_sum(a.ring(), row))
        })
}

/// Kronecker delta: one if `i == j`, else zero.
pub fn delta(ring: &Ring, i: usize, j: usize) -> Element {
    if i == j {
        ring.one()
    } else {
        ring.zero()
    }
}

/// The `i`-th standard unit vector of length `n`.
pub fn unit_vector(ring: &Ring, n: usize, i: usize) -> Result<Vector> {
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, size: n });
    }
    Ok((0..n).map(|j| delta(ring, i, j)).collect())
}

/// The `n x n` identity matrix.
pub fn identity(ring: &Ring, n: usize) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::MustBePositive {
            what: "identity size",
        });
    }
    let rows = (0..n)
        .map(|i| unit_vector(ring, n, i).expect("index in range"))
        .collect();
    Matrix::from_rows(ring.clone(), rows)
}
