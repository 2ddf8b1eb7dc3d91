//! Linear representations of Lie algebras: one carrier-space matrix per basis
//! element of the acting algebra. The representation law itself is checked by
//! `identities::is_representation`, never assumed.

use crate::algebra::{Algebra, Side};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    carrier_dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    pub fn new(matrices: Vec<Matrix>) -> Self {
        let carrier_dim = matrices.first().map_or(0, Matrix::rows);
        assert!(
            matrices
                .iter()
                .all(|m| m.rows() == carrier_dim && m.cols() == carrier_dim),
            "representation matrices must be square and uniform"
        );
        Representation {
            carrier_dim,
            matrices,
        }
    }

    /// Zero action of an `n`-dimensional algebra on an `m`-dimensional space.
    pub fn trivial(algebra_dim: usize, carrier_dim: usize) -> Self {
        Representation {
            carrier_dim,
            matrices: vec![Matrix::zero(carrier_dim, carrier_dim); algebra_dim],
        }
    }

    /// Adjoint representation `ad(x)y = [x, y]` of a bracket algebra.
    pub fn adjoint(lie: &Algebra) -> Self {
        let mats = (0..lie.dim())
            .map(|i| {
                lie.mult_operator(&lie.basis_vector(i), Side::Left)
                    .expect("basis vector dims")
            })
            .collect();
        Representation::new(mats)
    }

    /// The `-L` assignment `x -> -(y -> x o y)` of a product algebra; for an
    /// anti-pre-Lie algebra this is a representation of the commutator
    /// algebra.
    pub fn neg_left_mult(alg: &Algebra) -> Self {
        let mats = (0..alg.dim())
            .map(|i| {
                alg.mult_operator(&alg.basis_vector(i), Side::Left)
                    .expect("basis vector dims")
                    .neg()
            })
            .collect();
        Representation::new(mats)
    }

    pub fn algebra_dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    /// `rho(x)` for an arbitrary coordinate vector `x`.
    pub fn apply(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.algebra_dim());
        let mut acc = Matrix::zero(self.carrier_dim, self.carrier_dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            acc = acc.add(&self.matrices[i].scale(xi));
        }
        acc
    }

    /// Dual representation: every matrix replaced by its negated transpose.
    pub fn dual(&self) -> Representation {
        Representation {
            carrier_dim: self.carrier_dim,
            matrices: self.matrices.iter().map(|m| m.transpose().neg()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraRole;

    fn two_dim_nonabelian() -> Algebra {
        // [e1, e2] = e1
        Algebra::from_int_entries(2, AlgebraRole::Bracket, &[(0, 1, 0, 1), (1, 0, 0, -1)])
    }

    #[test]
    fn dual_is_negated_transpose_and_involutive() {
        let ad = Representation::adjoint(&two_dim_nonabelian());
        let dual = ad.dual();
        for (m, d) in ad.matrices().iter().zip(dual.matrices()) {
            assert_eq!(*d, m.transpose().neg());
        }
        assert_eq!(dual.dual(), ad);
        let z = Representation::trivial(3, 2);
        assert_eq!(z.dual(), z);
    }

    #[test]
    fn dual_of_a_representation_is_a_representation() {
        let lie = two_dim_nonabelian();
        let ad = Representation::adjoint(&lie);
        assert!(
            crate::identities::is_representation(&lie, &ad)
                .unwrap()
                .pass
        );
        assert!(
            crate::identities::is_representation(&lie, &ad.dual())
                .unwrap()
                .pass
        );
    }
}
