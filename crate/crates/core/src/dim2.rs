//! Fast exhaustive oracles over dim-2 structure tensors with small integer
//! entries.
//!
//! The correspondence theorems quantified over all tensors with entries in a
//! prime-field transversal are char-0 statements, so the enumeration runs on
//! the integer lifts `{0, .., p-1}` (or a symmetric lift) with plain `i64`
//! arithmetic. Residual values stay tiny, so this is orders of magnitude
//! faster than big-rational scalars; the test suite cross-checks these
//! predicates against the general machinery on random samples.

use crate::algebra::{Algebra, AlgebraRole};
use crate::scalar::Scalar;

/// Flat dim-2 tensor, index `(i*2 + j)*2 + k`.
pub type Tensor2 = [i64; 8];

#[inline]
pub fn coeff(t: &Tensor2, i: usize, j: usize, k: usize) -> i64 {
    t[(i * 2 + j) * 2 + k]
}

#[inline]
fn prod(t: &Tensor2, i: usize, j: usize) -> [i64; 2] {
    [coeff(t, i, j, 0), coeff(t, i, j, 1)]
}

#[inline]
fn mul_vec_basis(t: &Tensor2, v: [i64; 2], j: usize) -> [i64; 2] {
    let p0 = prod(t, 0, j);
    let p1 = prod(t, 1, j);
    [v[0] * p0[0] + v[1] * p1[0], v[0] * p0[1] + v[1] * p1[1]]
}

#[inline]
fn mul_basis_vec(t: &Tensor2, i: usize, v: [i64; 2]) -> [i64; 2] {
    let p0 = prod(t, i, 0);
    let p1 = prod(t, i, 1);
    [v[0] * p0[0] + v[1] * p1[0], v[0] * p0[1] + v[1] * p1[1]]
}

#[inline]
fn sub(a: [i64; 2], b: [i64; 2]) -> [i64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
fn add(a: [i64; 2], b: [i64; 2]) -> [i64; 2] {
    [a[0] + b[0], a[1] + b[1]]
}

#[inline]
fn comm(t: &Tensor2, i: usize, j: usize) -> [i64; 2] {
    sub(prod(t, i, j), prod(t, j, i))
}

pub fn is_commutative(t: &Tensor2) -> bool {
    (0..2).all(|i| (0..2).all(|j| comm(t, i, j) == [0, 0]))
}

pub fn is_associative(t: &Tensor2) -> bool {
    triples(|i, j, k| {
        sub(
            mul_vec_basis(t, prod(t, i, j), k),
            mul_basis_vec(t, i, prod(t, j, k)),
        )
    })
}

pub fn is_pre_lie(t: &Tensor2) -> bool {
    triples(|i, j, k| {
        let t1 = mul_vec_basis(t, prod(t, i, j), k);
        let t2 = mul_basis_vec(t, i, prod(t, j, k));
        let t3 = mul_vec_basis(t, prod(t, j, i), k);
        let t4 = mul_basis_vec(t, j, prod(t, i, k));
        add(sub(sub(t1, t2), t3), t4)
    })
}

pub fn is_novikov_right(t: &Tensor2) -> bool {
    triples(|i, j, k| {
        sub(
            mul_vec_basis(t, prod(t, i, j), k),
            mul_vec_basis(t, prod(t, i, k), j),
        )
    })
}

pub fn is_anti_pre_lie_1(t: &Tensor2) -> bool {
    triples(|i, j, k| {
        let t1 = mul_basis_vec(t, i, prod(t, j, k));
        let t2 = mul_basis_vec(t, j, prod(t, i, k));
        let t3 = mul_vec_basis(t, comm(t, j, i), k);
        sub(sub(t1, t2), t3)
    })
}

pub fn is_anti_pre_lie_2(t: &Tensor2) -> bool {
    triples(|i, j, k| {
        let t1 = mul_vec_basis(t, comm(t, i, j), k);
        let t2 = mul_vec_basis(t, comm(t, j, k), i);
        let t3 = mul_vec_basis(t, comm(t, k, i), j);
        add(add(t1, t2), t3)
    })
}

pub fn is_admissible_novikov(t: &Tensor2) -> bool {
    triples(|i, j, k| {
        let c = comm(t, j, k);
        let t1 = mul_basis_vec(t, i, c);
        let t2 = mul_vec_basis(t, prod(t, i, j), k);
        let t3 = mul_vec_basis(t, prod(t, i, k), j);
        add(sub([2 * t1[0], 2 * t1[1]], t2), t3)
    })
}

fn triples(mut residual: impl FnMut(usize, usize, usize) -> [i64; 2]) -> bool {
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                if residual(i, j, k) != [0, 0] {
                    return false;
                }
            }
        }
    }
    true
}

/// `q`-algebra of the tensor: `c'[i][j] = c[i][j] + q c[j][i]`.
pub fn q_transform(t: &Tensor2, q: i64) -> Tensor2 {
    let mut out = [0i64; 8];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                out[(i * 2 + j) * 2 + k] = coeff(t, i, j, k) + q * coeff(t, j, i, k);
            }
        }
    }
    out
}

// Two-operation residuals: `dot` is the commutative slot, `circ` the second
// operation.

fn dot_vec(dot: &Tensor2, v: [i64; 2], j: usize) -> [i64; 2] {
    mul_vec_basis(dot, v, j)
}

fn dot_basis_vec(dot: &Tensor2, i: usize, v: [i64; 2]) -> [i64; 2] {
    mul_basis_vec(dot, i, v)
}

/// `2(x o y).z - 2(y o x).z = y.(x o z) - x.(y o z)`
pub fn is_aplp_1(dot: &Tensor2, circ: &Tensor2) -> bool {
    triples(|i, j, k| {
        let t1 = dot_vec(dot, prod(circ, i, j), k);
        let t2 = dot_vec(dot, prod(circ, j, i), k);
        let t3 = dot_basis_vec(dot, j, prod(circ, i, k));
        let t4 = dot_basis_vec(dot, i, prod(circ, j, k));
        [
            2 * t1[0] - 2 * t2[0] - t3[0] + t4[0],
            2 * t1[1] - 2 * t2[1] - t3[1] + t4[1],
        ]
    })
}

/// `2 x o (y.z) = (z.x) o y + z.(x o y)`
pub fn is_aplp_2(dot: &Tensor2, circ: &Tensor2) -> bool {
    triples(|i, j, k| {
        let t1 = mul_basis_vec(circ, i, prod(dot, j, k));
        let t2 = mul_vec_basis(circ, prod(dot, k, i), j);
        let t3 = dot_basis_vec(dot, k, prod(circ, i, j));
        [2 * t1[0] - t2[0] - t3[0], 2 * t1[1] - t2[1] - t3[1]]
    })
}

/// `(x.y) * z = x.(y * z)`
pub fn is_np_1(dot: &Tensor2, star: &Tensor2) -> bool {
    triples(|i, j, k| {
        sub(
            mul_vec_basis(star, prod(dot, i, j), k),
            dot_basis_vec(dot, i, prod(star, j, k)),
        )
    })
}

/// `(x*y).z - (y*x).z = x*(y.z) - y*(x.z)`
pub fn is_np_2(dot: &Tensor2, star: &Tensor2) -> bool {
    triples(|i, j, k| {
        let t1 = dot_vec(dot, prod(star, i, j), k);
        let t2 = dot_vec(dot, prod(star, j, i), k);
        let t3 = mul_basis_vec(star, i, prod(dot, j, k));
        let t4 = mul_basis_vec(star, j, prod(dot, i, k));
        sub(sub(t1, t2), sub(t3, t4))
    })
}

/// The seven derived two-operation identities that follow from aplp-1 and
/// aplp-2 over a commutative associative `dot`.
pub fn derived_identities_hold(dot: &Tensor2, circ: &Tensor2) -> bool {
    let d3 = triples(|i, j, k| {
        let t1 = mul_basis_vec(circ, i, prod(dot, j, k));
        let t2 = mul_vec_basis(circ, prod(dot, j, i), k);
        let t3 = dot_basis_vec(dot, j, prod(circ, i, k));
        [2 * t1[0] - t2[0] - t3[0], 2 * t1[1] - t2[1] - t3[1]]
    });
    let d4 = triples(|i, j, k| {
        let t1 = mul_vec_basis(circ, prod(dot, k, i), j);
        let t2 = dot_basis_vec(dot, k, prod(circ, i, j));
        let t3 = mul_vec_basis(circ, prod(dot, j, i), k);
        let t4 = dot_basis_vec(dot, j, prod(circ, i, k));
        sub(add(t1, t2), add(t3, t4))
    });
    let d5 = triples(|i, j, k| {
        let t1 = dot_basis_vec(dot, i, prod(circ, j, k));
        let t2 = dot_basis_vec(dot, j, prod(circ, i, k));
        let t3 = mul_basis_vec(circ, j, prod(dot, i, k));
        let t4 = mul_basis_vec(circ, i, prod(dot, j, k));
        [
            t1[0] - t2[0] - 2 * t3[0] + 2 * t4[0],
            t1[1] - t2[1] - 2 * t3[1] + 2 * t4[1],
        ]
    });
    let d6 = triples(|i, j, k| {
        let t1 = dot_basis_vec(dot, i, prod(circ, j, k));
        let t2 = dot_basis_vec(dot, j, prod(circ, i, k));
        let t3 = dot_basis_vec(dot, i, prod(circ, k, j));
        let t4 = dot_basis_vec(dot, j, prod(circ, k, i));
        [
            t1[0] - t2[0] - 2 * t3[0] + 2 * t4[0],
            t1[1] - t2[1] - 2 * t3[1] + 2 * t4[1],
        ]
    });
    let d7 = triples(|i, j, k| {
        let t1 = dot_basis_vec(dot, i, prod(circ, k, j));
        let t2 = dot_basis_vec(dot, j, prod(circ, k, i));
        let t3 = mul_basis_vec(circ, j, prod(dot, i, k));
        let t4 = mul_basis_vec(circ, i, prod(dot, j, k));
        sub(sub(t1, t2), sub(t3, t4))
    });
    let d8 = triples(|i, j, k| {
        let jk = prod(dot, j, k);
        let ik = prod(dot, i, k);
        let t1 = add(mul_basis_vec(circ, i, jk), mul_vec_basis(circ, jk, i));
        let t2 = add(mul_basis_vec(circ, j, ik), mul_vec_basis(circ, ik, j));
        sub(t1, t2)
    });
    let d9 = triples(|i, j, k| {
        let t1 = dot_basis_vec(dot, k, prod(circ, i, j));
        let t2 = dot_basis_vec(dot, k, prod(circ, j, i));
        let t3 = mul_basis_vec(circ, i, prod(dot, j, k));
        let t4 = mul_basis_vec(circ, j, prod(dot, i, k));
        sub(sub(t1, t2), sub(t3, t4))
    });
    d3 && d4 && d5 && d6 && d7 && d8 && d9
}

/// Converts a lift tensor into a rational-scalar [`Algebra`] for cross checks.
pub fn to_algebra(t: &Tensor2) -> Algebra {
    Algebra::new(
        2,
        AlgebraRole::Product,
        t.iter().map(|&v| Scalar::from_int(v)).collect(),
    )
}

/// All `values.len()^8` tensors with entries drawn from `values`,
/// lexicographic in the flat index.
pub fn enumerate_tensors(values: &[i64]) -> impl Iterator<Item = Tensor2> + '_ {
    let base = values.len() as u64;
    let total = base.pow(8);
    (0..total).map(move |code| {
        let mut t = [0i64; 8];
        let mut c = code;
        for slot in &mut t {
            *slot = values[(c % base) as usize];
            c /= base;
        }
        t
    })
}
