//! Exact dense matrices over [`Scalar`].
//!
//! Elimination uses fraction-free (Bareiss) forward steps with a fixed pivot
//! rule — first nonzero entry in a column-major scan — so every derived basis
//! (nullspaces, solution spaces) is reproducible bit for bit.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense `rows x cols` matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// A linear map is just its matrix; the spaces it connects are positional in
/// every API that consumes one.
pub type LinearMap = Matrix;

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer literal rows, mostly for tests and the built-in catalog.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c).neg())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).add(other.get(r, c))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).sub(other.get(r, c))
        })
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c).mul(k))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(other.get(k, c)));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (c, vc) in v.iter().enumerate() {
                    if vc.is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.get(r, c).mul(vc));
                }
                acc
            })
            .collect()
    }

    /// Exact determinant (Bareiss fraction-free elimination).
    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Scalar::one();
        }
        let mut m = self.clone();
        let mut prev = Scalar::one();
        let mut sign = false;
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = !sign;
                    }
                    None => return Scalar::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m
                        .get(i, j)
                        .mul(m.get(k, k))
                        .sub(&m.get(i, k).mul(m.get(k, j)));
                    m.set(i, j, t.div(&prev));
                }
                m.set(i, k, Scalar::zero());
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        if sign {
            d.neg()
        } else {
            d
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv();
            for c in col..m.cols {
                let t = m.get(row, c).mul(&inv);
                m.set(row, c, t);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in col..m.cols {
                    let t = m.get(r, c).sub(&f.mul(m.get(row, c)));
                    m.set(r, c, t);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical nullspace basis: free columns in ascending order, each basis
    /// vector has 1 at its free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().copied().enumerate();
        let mut pivot_of_col = vec![None; self.cols];
        for (row, col) in piv_iter.by_ref() {
            pivot_of_col[col] = Some(row);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (col, pr) in pivot_of_col.iter().enumerate() {
                if let Some(prow) = pr {
                    v[col] = r.get(*prow, free).neg();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse; `Err(SingularMatrix)` when not invertible.
    pub fn inverse(&self) -> Result<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// Solves `self * x = b`; `None` when inconsistent. When the system is
    /// underdetermined this returns the solution with free variables zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for (r, rhs) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs.clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, col) in pivots.iter().enumerate() {
            x[*col] = red.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Characteristic polynomial coefficients `[c_0, ..., c_n]` of a square
    /// matrix, `det(xI - M) = sum c_k x^k`, computed from principal minors.
    /// Division-free, so it works in every scalar mode.
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        for k in 1..=n {
            let mut sum = Scalar::zero();
            for subset in subsets(n, k) {
                sum = sum.add(&self.principal_minor(&subset));
            }
            // coefficient of x^{n-k} is (-1)^k e_k
            coeffs[n - k] = if k % 2 == 1 { sum.neg() } else { sum };
        }
        coeffs
    }

    fn principal_minor(&self, idx: &[usize]) -> Scalar {
        let k = idx.len();
        let sub = Matrix::from_fn(k, k, |r, c| self.get(idx[r], idx[c]).clone());
        sub.det()
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det(), Scalar::from_int(-2));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let sing = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.det(), Scalar::zero());
        assert!(sing.inverse().is_err());
    }

    #[test]
    fn det_with_row_swap() {
        let m = Matrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 3]]);
        assert_eq!(m.det(), Scalar::from_int(-3));
    }

    #[test]
    fn nullspace_canonical() {
        // x + y + z = 0 twice
        let m = Matrix::from_int_rows(&[&[1, 1, 1], &[2, 2, 2]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        assert_eq!(
            ns[0],
            vec![Scalar::from_int(-1), Scalar::one(), Scalar::zero()]
        );
        assert_eq!(
            ns[1],
            vec![Scalar::from_int(-1), Scalar::zero(), Scalar::one()]
        );
        // every basis vector solves the system
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_linear_system() {
        let m = Matrix::from_int_rows(&[&[2, 0], &[0, 4]]);
        let x = m
            .solve(&[Scalar::from_int(1), Scalar::from_int(2)])
            .unwrap();
        assert_eq!(x, vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)]);
        let inconsistent = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(inconsistent
            .solve(&[Scalar::from_int(0), Scalar::from_int(1)])
            .is_none());
    }

    #[test]
    fn char_poly_small() {
        // [[2,0],[0,3]]: x^2 - 5x + 6
        let m = Matrix::from_int_rows(&[&[2, 0], &[0, 3]]);
        assert_eq!(
            m.char_poly(),
            vec![Scalar::from_int(6), Scalar::from_int(-5), Scalar::one()]
        );
        // works mod p as well
        let mp = Matrix::from_fn(2, 2, |r, c| {
            if r == c {
                Scalar::mod_p(2, 5)
            } else {
                Scalar::zero()
            }
        });
        assert_eq!(
            mp.char_poly(),
            vec![Scalar::mod_p(4, 5), Scalar::mod_p(-4, 5), Scalar::one()]
        );
    }

    #[test]
    fn mod_p_elimination() {
        let m = Matrix::from_fn(2, 2, |r, c| Scalar::mod_p((r + 2 * c + 1) as i64, 3));
        // [[1,0],[2,1]] over F_3 -> invertible
        assert_eq!(m.det(), Scalar::mod_p(1, 3));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).sub(&Matrix::identity(2)).is_zero());
    }
}
