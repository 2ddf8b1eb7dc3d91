//! Structure-constant algebras.
//!
//! An [`Algebra`] is one bilinear operation on an `n`-dimensional space,
//! stored as the dense tensor `c[i][j][k]` with
//! `e_i o e_j = sum_k c[i][j][k] e_k`. No identity is assumed — identities
//! are checked, never presupposed. A [`TwoOpAlgebra`] carries two operations
//! on one space for Poisson-type structures.

use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Matrix};
use crate::scalar::Scalar;

/// Semantic tag for a single-operation algebra. The tensor layout is
/// identical; the tag records whether the operation is meant as a product or
/// as a Lie bracket (solvers use it to validate their preconditions).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraRole {
    Product,
    Bracket,
}

/// Which slot the second operation of a [`TwoOpAlgebra`] plays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecondRole {
    /// An anti-pre-Lie-type product.
    Circ,
    /// A Novikov-type product.
    Star,
    /// A Lie bracket.
    Bracket,
}

/// Left or right multiplication operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    basis_labels: Vec<String>,
    role: AlgebraRole,
    /// Flat `dim^3` tensor, index `(i*dim + j)*dim + k`.
    tensor: Vec<Scalar>,
}

fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl Algebra {
    pub fn new(dim: usize, role: AlgebraRole, tensor: Vec<Scalar>) -> Self {
        assert_eq!(tensor.len(), dim * dim * dim, "tensor size mismatch");
        Algebra {
            dim,
            basis_labels: default_labels(dim),
            role,
            tensor,
        }
    }

    pub fn zero(dim: usize) -> Self {
        Algebra::new(
            dim,
            AlgebraRole::Product,
            vec![Scalar::zero(); dim * dim * dim],
        )
    }

    /// Builds from sparse entries `((i, j, k), coefficient)`.
    pub fn from_entries(
        dim: usize,
        role: AlgebraRole,
        entries: &[((usize, usize, usize), Scalar)],
    ) -> Self {
        let mut tensor = vec![Scalar::zero(); dim * dim * dim];
        for ((i, j, k), v) in entries {
            tensor[(i * dim + j) * dim + k] = v.clone();
        }
        Algebra::new(dim, role, tensor)
    }

    /// Integer-entry convenience used throughout the catalog and tests.
    pub fn from_int_entries(
        dim: usize,
        role: AlgebraRole,
        entries: &[(usize, usize, usize, i64)],
    ) -> Self {
        let sparse: Vec<_> = entries
            .iter()
            .map(|&(i, j, k, v)| ((i, j, k), Scalar::from_int(v)))
            .collect();
        Algebra::from_entries(dim, role, &sparse)
    }

    pub fn with_labels(mut self, labels: &[&str]) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.basis_labels = labels.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_role(mut self, role: AlgebraRole) -> Self {
        self.role = role;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn role(&self) -> AlgebraRole {
        self.role
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.tensor
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.tensor[(i * self.dim + j) * self.dim + k]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.tensor[(i * self.dim + j) * self.dim + k] = v;
    }

    /// Coordinates of `e_i o e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.dim + j) * self.dim;
        &self.tensor[base..base + self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    pub fn is_zero_algebra(&self) -> bool {
        self.tensor.iter().all(Scalar::is_zero)
    }

    /// `x o v` for a basis element `x = e_i` and a coordinate vector `v`.
    pub fn mul_basis_vec(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (m, vm) in v.iter().enumerate() {
            if vm.is_zero() {
                continue;
            }
            let prod = self.basis_product(i, m);
            for k in 0..self.dim {
                if prod[k].is_zero() {
                    continue;
                }
                out[k] = out[k].add(&vm.mul(&prod[k]));
            }
        }
        out
    }

    /// `v o x` for a coordinate vector `v` and basis element `x = e_j`.
    pub fn mul_vec_basis(&self, v: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (m, vm) in v.iter().enumerate() {
            if vm.is_zero() {
                continue;
            }
            let prod = self.basis_product(m, j);
            for k in 0..self.dim {
                if prod[k].is_zero() {
                    continue;
                }
                out[k] = out[k].add(&vm.mul(&prod[k]));
            }
        }
        out
    }

    /// Exact bilinear evaluation `x o y` on coordinate vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "multiply: left vector",
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "multiply: right vector",
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                let prod = self.basis_product(i, j);
                for k in 0..self.dim {
                    if prod[k].is_zero() {
                        continue;
                    }
                    out[k] = out[k].add(&c.mul(&prod[k]));
                }
            }
        }
        Ok(out)
    }

    /// Same algebra written in the new basis `f_c = sum_i S[i][c] e_i`.
    /// `change_basis(alg, Id) = alg`; errors on singular `S`.
    pub fn change_basis(&self, s: &LinearMap) -> Result<Algebra> {
        if s.rows() != self.dim || s.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "change_basis",
                expected: self.dim,
                got: s.rows(),
            });
        }
        let s_inv = s.inverse()?;
        let mut out = Algebra::zero(self.dim).with_role(self.role);
        out.basis_labels = self.basis_labels.clone();
        for a in 0..self.dim {
            let fa: Vec<Scalar> = (0..self.dim).map(|i| s.get(i, a).clone()).collect();
            for b in 0..self.dim {
                let fb: Vec<Scalar> = (0..self.dim).map(|i| s.get(i, b).clone()).collect();
                let prod_old = self.multiply(&fa, &fb).expect("dims checked");
                let prod_new = s_inv.mul_vec(&prod_old);
                for (k, v) in prod_new.into_iter().enumerate() {
                    out.set_coeff(a, b, k, v);
                }
            }
        }
        Ok(out)
    }

    /// The commutator algebra `[x, y] = x o y - y o x`, tagged as a bracket.
    pub fn commutator_algebra(&self) -> Algebra {
        let mut out = Algebra::zero(self.dim).with_role(AlgebraRole::Bracket);
        out.basis_labels = self.basis_labels.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.set_coeff(i, j, k, self.coeff(i, j, k).sub(self.coeff(j, i, k)));
                }
            }
        }
        out
    }

    /// Matrix of `y -> x o y` (left) or `y -> y o x` (right).
    pub fn mult_operator(&self, x: &[Scalar], side: Side) -> Result<LinearMap> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "mult_operator",
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut m = Matrix::zero(self.dim, self.dim);
        for c in 0..self.dim {
            let col = match side {
                Side::Left => self.mul_vec_basis_left(x, c),
                Side::Right => self.mul_basis_left(c, x),
            };
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        Ok(m)
    }

    // x o e_c with x a vector
    fn mul_vec_basis_left(&self, x: &[Scalar], c: usize) -> Vec<Scalar> {
        self.mul_vec_basis(x, c)
    }

    // e_c o x with x a vector
    fn mul_basis_left(&self, c: usize, x: &[Scalar]) -> Vec<Scalar> {
        self.mul_basis_vec(c, x)
    }

    /// Entrywise scaling of the operation.
    pub fn scale(&self, k: &Scalar) -> Algebra {
        let mut out = self.clone();
        for v in &mut out.tensor {
            *v = v.mul(k);
        }
        out
    }

    /// Span dimension of all basis products `e_i o e_j`.
    pub fn product_span_dim(&self) -> usize {
        let rows: Vec<Vec<Scalar>> = (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| self.basis_product(i, j).to_vec()))
            .collect();
        Matrix::from_rows(rows).rank()
    }

    /// Dimension of `{x : x o A = 0}` (left) or `{x : A o x = 0}` (right).
    pub fn annihilator_dim(&self, side: Side) -> usize {
        // rows: for each (j, k) one equation in the unknown vector
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let row: Vec<Scalar> = (0..self.dim)
                    .map(|m| match side {
                        Side::Left => self.coeff(m, j, k).clone(),
                        Side::Right => self.coeff(j, m, k).clone(),
                    })
                    .collect();
                rows.push(row);
            }
        }
        Matrix::from_rows(rows).nullspace().len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoOpAlgebra {
    dim: usize,
    basis_labels: Vec<String>,
    dot: Vec<Scalar>,
    second: Vec<Scalar>,
    second_role: SecondRole,
}

impl TwoOpAlgebra {
    pub fn new(dot: &Algebra, second: &Algebra, second_role: SecondRole) -> Result<Self> {
        if dot.dim() != second.dim() {
            return Err(Error::DimensionMismatch {
                context: "two-op algebra",
                expected: dot.dim(),
                got: second.dim(),
            });
        }
        Ok(TwoOpAlgebra {
            dim: dot.dim(),
            basis_labels: dot.basis_labels().to_vec(),
            dot: dot.tensor().to_vec(),
            second: second.tensor().to_vec(),
            second_role,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn second_role(&self) -> SecondRole {
        self.second_role
    }

    /// The commutative-associative slot as an algebra.
    pub fn dot_algebra(&self) -> Algebra {
        let mut a = Algebra::new(self.dim, AlgebraRole::Product, self.dot.clone());
        a.basis_labels = self.basis_labels.clone();
        a
    }

    /// The second operation as an algebra, role derived from its tag.
    pub fn second_algebra(&self) -> Algebra {
        let role = match self.second_role {
            SecondRole::Bracket => AlgebraRole::Bracket,
            _ => AlgebraRole::Product,
        };
        let mut a = Algebra::new(self.dim, role, self.second.clone());
        a.basis_labels = self.basis_labels.clone();
        a
    }

    pub fn with_second(&self, second: &Algebra, role: SecondRole) -> Result<TwoOpAlgebra> {
        TwoOpAlgebra::new(&self.dot_algebra(), second, role)
    }
}
