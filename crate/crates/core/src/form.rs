//! Bilinear forms as square scalar matrices.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                context: "bilinear form",
                expected: matrix.rows(),
                got: matrix.cols(),
            });
        }
        Ok(BilinearForm { matrix })
    }

    pub fn zero(dim: usize) -> Self {
        BilinearForm {
            matrix: Matrix::zero(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        BilinearForm {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        BilinearForm::new(Matrix::from_int_rows(rows)).expect("square literal")
    }

    /// Sparse symmetric builder: each `(i, j, v)` sets both `B(i,j)` and
    /// `B(j,i)`.
    pub fn symmetric_from_entries(dim: usize, entries: &[(usize, usize, Scalar)]) -> Self {
        let mut m = Matrix::zero(dim, dim);
        for (i, j, v) in entries {
            m.set(*i, *j, v.clone());
            m.set(*j, *i, v.clone());
        }
        BilinearForm { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(i, j)
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix.is_symmetric()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.det().is_zero()
    }

    /// `B(x, y)` on coordinate vectors.
    pub fn evaluate(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        assert_eq!(x.len(), self.dim());
        assert_eq!(y.len(), self.dim());
        let mut acc = Scalar::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc = acc.add(&xi.mul(yj).mul(self.matrix.get(i, j)));
            }
        }
        acc
    }

    pub fn add(&self, other: &BilinearForm) -> BilinearForm {
        BilinearForm {
            matrix: self.matrix.add(&other.matrix),
        }
    }

    pub fn scale(&self, k: &Scalar) -> BilinearForm {
        BilinearForm {
            matrix: self.matrix.scale(k),
        }
    }
}
