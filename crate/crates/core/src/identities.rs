//! Catalog of single-operation identities as basis-tuple predicates.
//!
//! Every identity is a multilinear residual of arity at most 3, so checking
//! it on all basis tuples is complete. Failures report the lexicographically
//! first bad tuple together with the exact residual vector.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rep::Representation;
use crate::report::CheckReport;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// `x o (y o z) - y o (x o z) = [y, x] o z`
    AntiPreLie1,
    /// `[x, y] o z + [y, z] o x + [z, x] o y = 0`
    AntiPreLie2,
    /// `x o [y, z] + y o [z, x] + z o [x, y] = 0`
    AliaLeft,
    /// Jacobi identity of the commutator `[x, y] = x o y - y o x`
    LieAdmissible,
    /// `(x o y) o z - x o (y o z) = (y o x) o z - y o (x o z)`
    PreLie,
    /// `(x o y) o z = (x o z) o y`
    NovikovRight,
    /// `2 x o [y, z] = (x o y) o z - (x o z) o y`
    AdmissibleNovikov,
    Commutative,
    Associative,
    /// `(x o y) o z + x o (y o z) = 0`
    AntiAssociative,
    /// `x o (y o z) = (x o y) o z = 0`
    TwoStepNilpotent,
    /// Skew-symmetry plus the Jacobi identity of the operation itself
    Jacobi,
}

impl IdentityId {
    pub const ALL: [IdentityId; 12] = [
        IdentityId::AntiPreLie1,
        IdentityId::AntiPreLie2,
        IdentityId::AliaLeft,
        IdentityId::LieAdmissible,
        IdentityId::PreLie,
        IdentityId::NovikovRight,
        IdentityId::AdmissibleNovikov,
        IdentityId::Commutative,
        IdentityId::Associative,
        IdentityId::AntiAssociative,
        IdentityId::TwoStepNilpotent,
        IdentityId::Jacobi,
    ];

    /// CLI token, kebab-case.
    pub fn token(&self) -> &'static str {
        match self {
            IdentityId::AntiPreLie1 => "anti-pre-lie-1",
            IdentityId::AntiPreLie2 => "anti-pre-lie-2",
            IdentityId::AliaLeft => "alia-left",
            IdentityId::LieAdmissible => "lie-admissible",
            IdentityId::PreLie => "pre-lie",
            IdentityId::NovikovRight => "novikov-right",
            IdentityId::AdmissibleNovikov => "admissible-novikov",
            IdentityId::Commutative => "commutative",
            IdentityId::Associative => "associative",
            IdentityId::AntiAssociative => "anti-associative",
            IdentityId::TwoStepNilpotent => "two-step-nilpotent",
            IdentityId::Jacobi => "jacobi",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.token() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown identity `{s}`")))
    }
}

fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `[e_i, e_j]` as a coordinate vector.
fn commutator(alg: &Algebra, i: usize, j: usize) -> Vec<Scalar> {
    vec_sub(alg.basis_product(i, j), alg.basis_product(j, i))
}

/// Residual of an arity-3 identity at the basis triple `(i, j, k)`.
fn residual3(alg: &Algebra, id: IdentityId, i: usize, j: usize, k: usize) -> Vec<Scalar> {
    match id {
        IdentityId::AntiPreLie1 => {
            // x o (y o z) - y o (x o z) - [y, x] o z
            let t1 = alg.mul_basis_vec(i, alg.basis_product(j, k));
            let t2 = alg.mul_basis_vec(j, alg.basis_product(i, k));
            let t3 = alg.mul_vec_basis(&commutator(alg, j, i), k);
            vec_sub(&vec_sub(&t1, &t2), &t3)
        }
        IdentityId::AntiPreLie2 => {
            // [x,y] o z + [y,z] o x + [z,x] o y
            let t1 = alg.mul_vec_basis(&commutator(alg, i, j), k);
            let t2 = alg.mul_vec_basis(&commutator(alg, j, k), i);
            let t3 = alg.mul_vec_basis(&commutator(alg, k, i), j);
            vec_add(&vec_add(&t1, &t2), &t3)
        }
        IdentityId::AliaLeft => {
            // x o [y,z] + y o [z,x] + z o [x,y]
            let t1 = alg.mul_basis_vec(i, &commutator(alg, j, k));
            let t2 = alg.mul_basis_vec(j, &commutator(alg, k, i));
            let t3 = alg.mul_basis_vec(k, &commutator(alg, i, j));
            vec_add(&vec_add(&t1, &t2), &t3)
        }
        IdentityId::LieAdmissible => {
            // Jacobi of the commutator: [[x,y],z] + [[y,z],x] + [[z,x],y]
            let br = |u: &[Scalar], m: usize| {
                vec_sub(&alg.mul_vec_basis(u, m), &alg.mul_basis_vec(m, u))
            };
            let t1 = br(&commutator(alg, i, j), k);
            let t2 = br(&commutator(alg, j, k), i);
            let t3 = br(&commutator(alg, k, i), j);
            vec_add(&vec_add(&t1, &t2), &t3)
        }
        IdentityId::PreLie => {
            // (x o y) o z - x o (y o z) - (y o x) o z + y o (x o z)
            let t1 = alg.mul_vec_basis(alg.basis_product(i, j), k);
            let t2 = alg.mul_basis_vec(i, alg.basis_product(j, k));
            let t3 = alg.mul_vec_basis(alg.basis_product(j, i), k);
            let t4 = alg.mul_basis_vec(j, alg.basis_product(i, k));
            vec_add(&vec_sub(&vec_sub(&t1, &t2), &t3), &t4)
        }
        IdentityId::NovikovRight => {
            // (x o y) o z - (x o z) o y
            let t1 = alg.mul_vec_basis(alg.basis_product(i, j), k);
            let t2 = alg.mul_vec_basis(alg.basis_product(i, k), j);
            vec_sub(&t1, &t2)
        }
        IdentityId::AdmissibleNovikov => {
            // 2 x o [y,z] - (x o y) o z + (x o z) o y
            let t1 = alg.mul_basis_vec(i, &commutator(alg, j, k));
            let two = Scalar::from_int(2);
            let t1: Vec<Scalar> = t1.iter().map(|v| v.mul(&two)).collect();
            let t2 = alg.mul_vec_basis(alg.basis_product(i, j), k);
            let t3 = alg.mul_vec_basis(alg.basis_product(i, k), j);
            vec_add(&vec_sub(&t1, &t2), &t3)
        }
        IdentityId::Associative => {
            let t1 = alg.mul_vec_basis(alg.basis_product(i, j), k);
            let t2 = alg.mul_basis_vec(i, alg.basis_product(j, k));
            vec_sub(&t1, &t2)
        }
        IdentityId::AntiAssociative => {
            let t1 = alg.mul_vec_basis(alg.basis_product(i, j), k);
            let t2 = alg.mul_basis_vec(i, alg.basis_product(j, k));
            vec_add(&t1, &t2)
        }
        IdentityId::Jacobi => {
            // Jacobi of the operation itself
            let t1 = alg.mul_vec_basis(alg.basis_product(i, j), k);
            let t2 = alg.mul_vec_basis(alg.basis_product(j, k), i);
            let t3 = alg.mul_vec_basis(alg.basis_product(k, i), j);
            vec_add(&vec_add(&t1, &t2), &t3)
        }
        _ => unreachable!("not an arity-3 single-residual identity"),
    }
}

/// Evaluates one identity on all basis tuples; pass iff all residuals vanish.
pub fn check_identity(alg: &Algebra, id: IdentityId) -> CheckReport {
    let n = alg.dim();
    match id {
        IdentityId::Commutative => {
            for i in 0..n {
                for j in 0..n {
                    let r = commutator(alg, i, j);
                    if !vec_is_zero(&r) {
                        return CheckReport::fail(id.token(), vec![i as i64, j as i64], r);
                    }
                }
            }
            CheckReport::pass()
        }
        IdentityId::TwoStepNilpotent => {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let left = alg.mul_vec_basis(alg.basis_product(i, j), k);
                        if !vec_is_zero(&left) {
                            return CheckReport::fail(
                                id.token(),
                                vec![i as i64, j as i64, k as i64],
                                left,
                            );
                        }
                        let right = alg.mul_basis_vec(i, alg.basis_product(j, k));
                        if !vec_is_zero(&right) {
                            return CheckReport::fail(
                                id.token(),
                                vec![i as i64, j as i64, k as i64],
                                right,
                            );
                        }
                    }
                }
            }
            CheckReport::pass()
        }
        IdentityId::Jacobi => {
            // skew-symmetry first, on pairs
            for i in 0..n {
                for j in 0..n {
                    let r = vec_add(alg.basis_product(i, j), alg.basis_product(j, i));
                    if !vec_is_zero(&r) {
                        return CheckReport::fail(id.token(), vec![i as i64, j as i64], r);
                    }
                }
            }
            check_arity3(alg, id)
        }
        _ => check_arity3(alg, id),
    }
}

fn check_arity3(alg: &Algebra, id: IdentityId) -> CheckReport {
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = residual3(alg, id, i, j, k);
                if !vec_is_zero(&r) {
                    return CheckReport::fail(id.token(), vec![i as i64, j as i64, k as i64], r);
                }
            }
        }
    }
    CheckReport::pass()
}

/// The set of catalog identities the algebra satisfies.
pub fn identity_profile(alg: &Algebra) -> BTreeSet<IdentityId> {
    IdentityId::ALL
        .iter()
        .copied()
        .filter(|id| check_identity(alg, *id).pass)
        .collect()
}

/// Checks the representation law `rho([x_i, x_j]) = rho(x_i) rho(x_j) -
/// rho(x_j) rho(x_i)` on all basis pairs of a Lie algebra.
pub fn is_representation(lie: &Algebra, rho: &Representation) -> Result<CheckReport> {
    if !check_identity(lie, IdentityId::Jacobi).pass {
        return Err(Error::Precondition(
            "is_representation: the acting algebra must satisfy jacobi".into(),
        ));
    }
    if rho.algebra_dim() != lie.dim() {
        return Err(Error::DimensionMismatch {
            context: "is_representation",
            expected: lie.dim(),
            got: rho.algebra_dim(),
        });
    }
    let n = lie.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = rho.apply(lie.basis_product(i, j));
            let rhs = rho
                .matrix(i)
                .mul(rho.matrix(j))
                .sub(&rho.matrix(j).mul(rho.matrix(i)));
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                return Ok(CheckReport::fail(
                    "representation-law",
                    vec![i as i64, j as i64],
                    diff.entries().to_vec(),
                ));
            }
        }
    }
    Ok(CheckReport::pass())
}
