//! Two-operation (Poisson-type) structures: anti-pre-Lie Poisson and
//! (admissible) Novikov-Poisson identities, the transform between them, the
//! sub-adjacent transposed Poisson algebra, form-induced structures and the
//! tensor product theorem.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Algebra, SecondRole, TwoOpAlgebra};
use crate::cocycles::{check_form, induce_compatible_product, FormMode};
use crate::constructions::q_transform;
use crate::dim2;
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::identities::{check_identity, IdentityId};
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// Trilinear compatibility identities between the commutative associative
/// operation and the second operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PoissonIdentityId {
    /// `2(x o y).z - 2(y o x).z = y.(x o z) - x.(y o z)`
    Aplp1,
    /// `2 x o (y.z) = (z.x) o y + z.(x o y)`
    Aplp2,
    /// `2 x o (y.z) = (y.x) o z + y.(x o z)`
    Derived3,
    /// `(z.x) o y + z.(x o y) = (y.x) o z + y.(x o z)`
    Derived4,
    /// `x.(y o z) - y.(x o z) = 2 y o (x.z) - 2 x o (y.z)`
    Derived5,
    /// `x.(y o z) - y.(x o z) = 2 x.(z o y) - 2 y.(z o x)`
    Derived6,
    /// `x.(z o y) - y.(z o x) = y o (x.z) - x o (y.z)`
    Derived7,
    /// `x o (y.z) + (y.z) o x = y o (x.z) + (x.z) o y`
    Derived8,
    /// `z.(x o y) - z.(y o x) = x o (y.z) - y o (x.z)`
    Derived9,
    /// `(x.y) * z = x.(y * z)`
    Np1,
    /// `(x*y).z - (y*x).z = x*(y.z) - y*(x.z)`
    Np2,
    /// `2 z.[x,y] = [z.x, y] + [x, z.y]`
    Transposed,
}

impl PoissonIdentityId {
    pub const ALL: [PoissonIdentityId; 12] = [
        PoissonIdentityId::Aplp1,
        PoissonIdentityId::Aplp2,
        PoissonIdentityId::Derived3,
        PoissonIdentityId::Derived4,
        PoissonIdentityId::Derived5,
        PoissonIdentityId::Derived6,
        PoissonIdentityId::Derived7,
        PoissonIdentityId::Derived8,
        PoissonIdentityId::Derived9,
        PoissonIdentityId::Np1,
        PoissonIdentityId::Np2,
        PoissonIdentityId::Transposed,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            PoissonIdentityId::Aplp1 => "aplp-1",
            PoissonIdentityId::Aplp2 => "aplp-2",
            PoissonIdentityId::Derived3 => "derived-3",
            PoissonIdentityId::Derived4 => "derived-4",
            PoissonIdentityId::Derived5 => "derived-5",
            PoissonIdentityId::Derived6 => "derived-6",
            PoissonIdentityId::Derived7 => "derived-7",
            PoissonIdentityId::Derived8 => "derived-8",
            PoissonIdentityId::Derived9 => "derived-9",
            PoissonIdentityId::Np1 => "np-1",
            PoissonIdentityId::Np2 => "np-2",
            PoissonIdentityId::Transposed => "transposed",
        }
    }
}

impl fmt::Display for PoissonIdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for PoissonIdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PoissonIdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.token() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown poisson identity `{s}`")))
    }
}

fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn vec_scale(a: &[Scalar], k: i64) -> Vec<Scalar> {
    let k = Scalar::from_int(k);
    a.iter().map(|x| x.mul(&k)).collect()
}

/// Residual at basis triple `(i, j, k)` of one Poisson-type identity.
fn residual(
    dot: &Algebra,
    op: &Algebra,
    id: PoissonIdentityId,
    i: usize,
    j: usize,
    k: usize,
) -> Vec<Scalar> {
    let d = dot;
    let o = op;
    match id {
        PoissonIdentityId::Aplp1 => {
            let t1 = d.mul_vec_basis(o.basis_product(i, j), k);
            let t2 = d.mul_vec_basis(o.basis_product(j, i), k);
            let t3 = d.mul_basis_vec(j, o.basis_product(i, k));
            let t4 = d.mul_basis_vec(i, o.basis_product(j, k));
            vec_add(&vec_sub(&vec_scale(&vec_sub(&t1, &t2), 2), &t3), &t4)
        }
        PoissonIdentityId::Aplp2 => {
            let t1 = o.mul_basis_vec(i, d.basis_product(j, k));
            let t2 = o.mul_vec_basis(d.basis_product(k, i), j);
            let t3 = d.mul_basis_vec(k, o.basis_product(i, j));
            vec_sub(&vec_sub(&vec_scale(&t1, 2), &t2), &t3)
        }
        PoissonIdentityId::Derived3 => {
            let t1 = o.mul_basis_vec(i, d.basis_product(j, k));
            let t2 = o.mul_vec_basis(d.basis_product(j, i), k);
            let t3 = d.mul_basis_vec(j, o.basis_product(i, k));
            vec_sub(&vec_sub(&vec_scale(&t1, 2), &t2), &t3)
        }
        PoissonIdentityId::Derived4 => {
            let t1 = o.mul_vec_basis(d.basis_product(k, i), j);
            let t2 = d.mul_basis_vec(k, o.basis_product(i, j));
            let t3 = o.mul_vec_basis(d.basis_product(j, i), k);
            let t4 = d.mul_basis_vec(j, o.basis_product(i, k));
            vec_sub(&vec_add(&t1, &t2), &vec_add(&t3, &t4))
        }
        PoissonIdentityId::Derived5 => {
            let t1 = d.mul_basis_vec(i, o.basis_product(j, k));
            let t2 = d.mul_basis_vec(j, o.basis_product(i, k));
            let t3 = o.mul_basis_vec(j, d.basis_product(i, k));
            let t4 = o.mul_basis_vec(i, d.basis_product(j, k));
            vec_add(
                &vec_sub(&vec_sub(&t1, &t2), &vec_scale(&t3, 2)),
                &vec_scale(&t4, 2),
            )
        }
        PoissonIdentityId::Derived6 => {
            let t1 = d.mul_basis_vec(i, o.basis_product(j, k));
            let t2 = d.mul_basis_vec(j, o.basis_product(i, k));
            let t3 = d.mul_basis_vec(i, o.basis_product(k, j));
            let t4 = d.mul_basis_vec(j, o.basis_product(k, i));
            vec_add(
                &vec_sub(&vec_sub(&t1, &t2), &vec_scale(&t3, 2)),
                &vec_scale(&t4, 2),
            )
        }
        PoissonIdentityId::Derived7 => {
            let t1 = d.mul_basis_vec(i, o.basis_product(k, j));
            let t2 = d.mul_basis_vec(j, o.basis_product(k, i));
            let t3 = o.mul_basis_vec(j, d.basis_product(i, k));
            let t4 = o.mul_basis_vec(i, d.basis_product(j, k));
            vec_sub(&vec_sub(&t1, &t2), &vec_sub(&t3, &t4))
        }
        PoissonIdentityId::Derived8 => {
            let jk = d.basis_product(j, k).to_vec();
            let ik = d.basis_product(i, k).to_vec();
            let t1 = vec_add(&o.mul_basis_vec(i, &jk), &o.mul_vec_basis(&jk, i));
            let t2 = vec_add(&o.mul_basis_vec(j, &ik), &o.mul_vec_basis(&ik, j));
            vec_sub(&t1, &t2)
        }
        PoissonIdentityId::Derived9 => {
            let t1 = d.mul_basis_vec(k, o.basis_product(i, j));
            let t2 = d.mul_basis_vec(k, o.basis_product(j, i));
            let t3 = o.mul_basis_vec(i, d.basis_product(j, k));
            let t4 = o.mul_basis_vec(j, d.basis_product(i, k));
            vec_sub(&vec_sub(&t1, &t2), &vec_sub(&t3, &t4))
        }
        PoissonIdentityId::Np1 => {
            let t1 = o.mul_vec_basis(d.basis_product(i, j), k);
            let t2 = d.mul_basis_vec(i, o.basis_product(j, k));
            vec_sub(&t1, &t2)
        }
        PoissonIdentityId::Np2 => {
            let t1 = d.mul_vec_basis(o.basis_product(i, j), k);
            let t2 = d.mul_vec_basis(o.basis_product(j, i), k);
            let t3 = o.mul_basis_vec(i, d.basis_product(j, k));
            let t4 = o.mul_basis_vec(j, d.basis_product(i, k));
            vec_sub(&vec_sub(&t1, &t2), &vec_sub(&t3, &t4))
        }
        PoissonIdentityId::Transposed => {
            // 2 z.[x,y] - [z.x, y] - [x, z.y] with the bracket as `op`
            let br = |u: &[Scalar], t: usize| o.mul_vec_basis(u, t);
            let br2 = |t: usize, u: &[Scalar]| o.mul_basis_vec(t, u);
            let xy = o.basis_product(i, j);
            let t1 = vec_scale(&d.mul_basis_vec(k, xy), 2);
            let t2 = br(d.basis_product(k, i), j);
            let t3 = br2(i, d.basis_product(k, j));
            vec_sub(&vec_sub(&t1, &t2), &t3)
        }
    }
}

/// Evaluates one Poisson-type identity on all basis triples.
pub fn check_poisson_identity(two: &TwoOpAlgebra, id: PoissonIdentityId) -> CheckReport {
    let dot = two.dot_algebra();
    let op = two.second_algebra();
    let n = two.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = residual(&dot, &op, id, i, j, k);
                if r.iter().any(|s| !s.is_zero()) {
                    return CheckReport::fail(id.token(), vec![i as i64, j as i64, k as i64], r);
                }
            }
        }
    }
    CheckReport::pass()
}

/// Asserted consequence: a pair satisfying aplp-1 and aplp-2 over a
/// commutative associative dot satisfies all seven derived identities.
/// Failure indicates an implementation bug, not a property of the input.
pub fn derived_identities_hold(two: &TwoOpAlgebra) -> Result<CheckReport> {
    for id in [PoissonIdentityId::Aplp1, PoissonIdentityId::Aplp2] {
        if !check_poisson_identity(two, id).pass {
            return Err(Error::Precondition(format!(
                "derived_identities_hold: input does not satisfy {id}"
            )));
        }
    }
    for id in [
        PoissonIdentityId::Derived3,
        PoissonIdentityId::Derived4,
        PoissonIdentityId::Derived5,
        PoissonIdentityId::Derived6,
        PoissonIdentityId::Derived7,
        PoissonIdentityId::Derived8,
        PoissonIdentityId::Derived9,
    ] {
        let r = check_poisson_identity(two, id);
        if !r.pass {
            return Ok(r);
        }
    }
    Ok(CheckReport::pass())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoissonTransform {
    /// keep `.`, replace the second operation by its (-2)-algebra
    ToNovikov,
    /// keep `.`, replace the second operation by its 2-algebra
    ToAdmissible,
}

impl PoissonTransform {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "to-novikov" => PoissonTransform::ToNovikov,
            "to-admissible" => PoissonTransform::ToAdmissible,
            _ => {
                return Err(Error::Unsupported(format!(
                    "unknown poisson transform `{s}`"
                )))
            }
        })
    }
}

pub fn poisson_two_transform(two: &TwoOpAlgebra, direction: PoissonTransform) -> TwoOpAlgebra {
    let (q, role) = match direction {
        PoissonTransform::ToNovikov => (Scalar::from_int(-2), SecondRole::Star),
        PoissonTransform::ToAdmissible => (Scalar::from_int(2), SecondRole::Circ),
    };
    let second = q_transform(&two.second_algebra(), &q);
    two.with_second(&second, role).expect("dims match")
}

/// Replaces the second operation by its commutator; for an anti-pre-Lie
/// Poisson algebra the result is a transposed Poisson algebra.
pub fn sub_adjacent_transposed(two: &TwoOpAlgebra) -> Result<TwoOpAlgebra> {
    for id in [PoissonIdentityId::Aplp1, PoissonIdentityId::Aplp2] {
        if !check_poisson_identity(two, id).pass {
            return Err(Error::Precondition(format!(
                "sub_adjacent_transposed: input does not satisfy {id}"
            )));
        }
    }
    let second = two.second_algebra();
    if !check_identity(&second, IdentityId::LieAdmissible).pass {
        return Err(Error::Precondition(
            "sub_adjacent_transposed: the second operation is not Lie-admissible".into(),
        ));
    }
    two.with_second(&second.commutator_algebra(), SecondRole::Bracket)
}

/// From a transposed Poisson algebra and a nondegenerate symmetric form that
/// is invariant on the dot and a commutative 2-cocycle on the bracket,
/// builds the anti-pre-Lie Poisson structure with the induced product.
pub fn induce_poisson_from_form(two: &TwoOpAlgebra, b: &BilinearForm) -> Result<TwoOpAlgebra> {
    let dot = two.dot_algebra();
    if !check_identity(&dot, IdentityId::Commutative).pass
        || !check_identity(&dot, IdentityId::Associative).pass
    {
        return Err(Error::Precondition(
            "induce_poisson_from_form: the dot is not commutative associative".into(),
        ));
    }
    if two.second_role() != SecondRole::Bracket {
        return Err(Error::Precondition(
            "induce_poisson_from_form: the second operation must be tagged as a bracket".into(),
        ));
    }
    let bracket = two.second_algebra();
    if !check_identity(&bracket, IdentityId::Jacobi).pass {
        return Err(Error::Precondition(
            "induce_poisson_from_form: the bracket does not satisfy jacobi".into(),
        ));
    }
    if !check_poisson_identity(two, PoissonIdentityId::Transposed).pass {
        return Err(Error::Precondition(
            "induce_poisson_from_form: the pair is not a transposed Poisson algebra".into(),
        ));
    }
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !b.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    if !check_form(&dot, b, FormMode::AssocInvariant)?.pass {
        return Err(Error::Precondition(
            "induce_poisson_from_form: the form is not invariant on the dot".into(),
        ));
    }
    let circ = induce_compatible_product(&bracket, b)?;
    two.with_second(&circ, SecondRole::Circ)
}

/// Tensor product of two anti-pre-Lie Poisson algebras on the product space:
/// dot (x) dot, and `circ = circ (x) dot + dot (x) circ`.
pub fn tensor_poisson(a: &TwoOpAlgebra, b: &TwoOpAlgebra) -> Result<TwoOpAlgebra> {
    for (name, two) in [("left", a), ("right", b)] {
        for id in [PoissonIdentityId::Aplp1, PoissonIdentityId::Aplp2] {
            if !check_poisson_identity(two, id).pass {
                return Err(Error::Precondition(format!(
                    "tensor_poisson: {name} factor does not satisfy {id}"
                )));
            }
        }
    }
    let (n1, n2) = (a.dim(), b.dim());
    let dot1 = a.dot_algebra();
    let dot2 = b.dot_algebra();
    let c1 = a.second_algebra();
    let c2 = b.second_algebra();
    let dim = n1 * n2;
    let mut dot = Algebra::zero(dim);
    let mut circ = Algebra::zero(dim);
    for i1 in 0..n1 {
        for i2 in 0..n2 {
            for j1 in 0..n1 {
                for j2 in 0..n2 {
                    let d1 = dot1.basis_product(i1, j1);
                    let d2 = dot2.basis_product(i2, j2);
                    let o1 = c1.basis_product(i1, j1);
                    let o2 = c2.basis_product(i2, j2);
                    for k1 in 0..n1 {
                        for k2 in 0..n2 {
                            let dv = d1[k1].mul(&d2[k2]);
                            if !dv.is_zero() {
                                dot.set_coeff(i1 * n2 + i2, j1 * n2 + j2, k1 * n2 + k2, dv);
                            }
                            let cv = o1[k1].mul(&d2[k2]).add(&d1[k1].mul(&o2[k2]));
                            if !cv.is_zero() {
                                circ.set_coeff(i1 * n2 + i2, j1 * n2 + j2, k1 * n2 + k2, cv);
                            }
                        }
                    }
                }
            }
        }
    }
    TwoOpAlgebra::new(&dot, &circ, SecondRole::Circ)
}

/// Outcome of the exhaustive dim-2 Poisson correspondence verification.
#[derive(Debug, Clone)]
pub struct PoissonCorrespondenceOutcome {
    pub pairs: usize,
    pub comm_assoc_dots: usize,
    pub aplp_count: usize,
    /// Pairs with commutative associative dot violating
    /// `{aplp-1, aplp-2} <=> (-2)-transform {np-1, np-2}`.
    pub mismatches: Vec<(dim2::Tensor2, dim2::Tensor2)>,
    /// aplp pairs whose derived identities fail (none exist in char 0).
    pub derived_violations: Vec<(dim2::Tensor2, dim2::Tensor2)>,
}

/// Verifies the Poisson correspondence over every dim-2 two-operation pair
/// with entries drawn from `values` (checked in characteristic 0): whenever
/// the dot is commutative associative,
/// `(., o)` is anti-pre-Lie Poisson iff `(., o - 2 o^T)` is Novikov-Poisson,
/// and the seven derived identities follow.
pub fn poisson_correspondence_exhaustive(values: &[i64]) -> PoissonCorrespondenceOutcome {
    let mut out = PoissonCorrespondenceOutcome {
        pairs: 0,
        comm_assoc_dots: 0,
        aplp_count: 0,
        mismatches: Vec::new(),
        derived_violations: Vec::new(),
    };
    let dots: Vec<(dim2::Tensor2, bool)> = dim2::enumerate_tensors(values)
        .map(|d| {
            let ok = dim2::is_commutative(&d) && dim2::is_associative(&d);
            (d, ok)
        })
        .collect();
    out.comm_assoc_dots = dots.iter().filter(|(_, ok)| *ok).count();
    for (d, dot_ok) in &dots {
        for c in dim2::enumerate_tensors(values) {
            out.pairs += 1;
            if !dot_ok {
                continue;
            }
            let aplp = dim2::is_aplp_1(d, &c) && dim2::is_aplp_2(d, &c);
            let star = dim2::q_transform(&c, -2);
            let np = dim2::is_np_1(d, &star) && dim2::is_np_2(d, &star);
            if aplp != np {
                out.mismatches.push((*d, c));
            }
            if aplp {
                out.aplp_count += 1;
                if !dim2::derived_identities_hold(d, &c) {
                    out.derived_violations.push((*d, c));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraRole;
    use crate::classify::{self, CatalogId};
    use crate::constructions::{pair_based_product, PairMode};

    fn sc(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    /// The worked 3-dimensional example: `e3.e3 = e3`;
    /// `e1 o e2 = e2, e3 o e3 = e3`.
    fn dim3_example() -> TwoOpAlgebra {
        let dot = Algebra::from_int_entries(3, AlgebraRole::Product, &[(2, 2, 2, 1)]);
        let circ =
            Algebra::from_int_entries(3, AlgebraRole::Product, &[(0, 1, 1, 1), (2, 2, 2, 1)]);
        TwoOpAlgebra::new(&dot, &circ, SecondRole::Circ).unwrap()
    }

    /// Admissible-pair Poisson structure on `F[x]/(x^3)` with `P = x d/dx`.
    fn trunc_poly_poisson() -> TwoOpAlgebra {
        let obj = classify::catalog(&CatalogId::TruncPoly { n: 3, k: 1 }).unwrap();
        let (alg, p) = (obj.algebra().clone(), obj.derivation().unwrap().clone());
        let circ = pair_based_product(&alg, &p, &p, PairMode::AdmissibleNovikov).unwrap();
        TwoOpAlgebra::new(&alg, &circ, SecondRole::Circ).unwrap()
    }

    #[test]
    fn dim3_example_is_anti_pre_lie_poisson_but_not_admissible() {
        let two = dim3_example();
        assert!(check_poisson_identity(&two, PoissonIdentityId::Aplp1).pass);
        assert!(check_poisson_identity(&two, PoissonIdentityId::Aplp2).pass);
        // the circ operation is not admissible Novikov
        assert!(!check_identity(&two.second_algebra(), IdentityId::AdmissibleNovikov).pass);
        // trivial dot: any second operation satisfies both identities
        let trivial = TwoOpAlgebra::new(
            &Algebra::zero(2),
            &classify::catalog(&CatalogId::A1).unwrap().into_algebra(),
            SecondRole::Circ,
        )
        .unwrap();
        assert!(check_poisson_identity(&trivial, PoissonIdentityId::Aplp1).pass);
        assert!(check_poisson_identity(&trivial, PoissonIdentityId::Aplp2).pass);
    }

    #[test]
    fn derived_identities() {
        assert!(derived_identities_hold(&dim3_example()).unwrap().pass);
        assert!(derived_identities_hold(&trunc_poly_poisson()).unwrap().pass);
        // precondition violations error out
        let bad = TwoOpAlgebra::new(
            &classify::catalog(&CatalogId::Dim2AssocFrob)
                .unwrap()
                .into_algebra(),
            &classify::catalog(&CatalogId::A1).unwrap().into_algebra(),
            SecondRole::Circ,
        )
        .unwrap();
        assert!(derived_identities_hold(&bad).is_err());
    }

    #[test]
    fn transform_roundtrip_scales_by_minus_three() {
        let two = trunc_poly_poisson();
        let nov = poisson_two_transform(&two, PoissonTransform::ToNovikov);
        assert!(check_poisson_identity(&nov, PoissonIdentityId::Np1).pass);
        assert!(check_poisson_identity(&nov, PoissonIdentityId::Np2).pass);
        let back = poisson_two_transform(&nov, PoissonTransform::ToAdmissible);
        let scaled = two.second_algebra().scale(&sc(-3));
        assert_eq!(back.second_algebra().tensor(), scaled.tensor());
        assert_eq!(back.dot_algebra().tensor(), two.dot_algebra().tensor());
        // profile preserved under the nonzero scaling
        for id in PoissonIdentityId::ALL {
            let direct = check_poisson_identity(&two, id).pass;
            let after =
                check_poisson_identity(&two.with_second(&scaled, SecondRole::Circ).unwrap(), id)
                    .pass;
            assert_eq!(direct, after, "{id} not scale-invariant");
        }
        // zero second op transforms to zero
        let z = TwoOpAlgebra::new(&Algebra::zero(2), &Algebra::zero(2), SecondRole::Circ).unwrap();
        assert!(poisson_two_transform(&z, PoissonTransform::ToNovikov)
            .second_algebra()
            .is_zero_algebra());
    }

    #[test]
    fn sub_adjacent_is_transposed_poisson() {
        for two in [dim3_example(), trunc_poly_poisson()] {
            let tp = sub_adjacent_transposed(&two).unwrap();
            assert!(check_poisson_identity(&tp, PoissonIdentityId::Transposed).pass);
            assert!(check_identity(&tp.second_algebra(), IdentityId::Jacobi).pass);
        }
        // trivial dot: any Lie bracket gives a transposed Poisson algebra
        let lie = classify::catalog(&CatalogId::Dim2NonabelianLie)
            .unwrap()
            .into_algebra();
        let two = TwoOpAlgebra::new(&Algebra::zero(2), &lie, SecondRole::Bracket).unwrap();
        assert!(check_poisson_identity(&two, PoissonIdentityId::Transposed).pass);
    }

    #[test]
    fn induced_poisson_from_frobenius_form() {
        // dim-2 Frobenius algebra with the bracket from its derivation
        let frob = classify::catalog(&CatalogId::Dim2AssocFrob).unwrap();
        let (alg, form) = (frob.algebra().clone(), frob.form().unwrap().clone());
        let q = crate::linalg::Matrix::from_int_rows(&[&[0, 0], &[0, 1]]);
        let bracket = pair_based_product(&alg, &q, &q, PairMode::Lie).unwrap();
        let two = TwoOpAlgebra::new(&alg, &bracket, SecondRole::Bracket).unwrap();
        let induced = induce_poisson_from_form(&two, &form).unwrap();
        assert!(check_poisson_identity(&induced, PoissonIdentityId::Aplp1).pass);
        assert!(check_poisson_identity(&induced, PoissonIdentityId::Aplp2).pass);
        // the induced circ is the third Frobenius product
        let (_, _, c3) = crate::constructions::frobenius_triple_products(&alg, &form, &q).unwrap();
        assert_eq!(induced.second_algebra().tensor(), c3.tensor());

        // F[x]/(x^3) with its Frobenius form
        let obj = classify::catalog(&CatalogId::TruncPoly { n: 3, k: 1 }).unwrap();
        let (alg, p) = (obj.algebra().clone(), obj.derivation().unwrap().clone());
        let b = classify::trunc_poly_frobenius_form(3);
        let bracket = pair_based_product(&alg, &p, &p, PairMode::Lie).unwrap();
        let two = TwoOpAlgebra::new(&alg, &bracket, SecondRole::Bracket).unwrap();
        let induced = induce_poisson_from_form(&two, &b).unwrap();
        assert!(check_poisson_identity(&induced, PoissonIdentityId::Aplp1).pass);
        assert!(check_poisson_identity(&induced, PoissonIdentityId::Aplp2).pass);

        // abelian bracket with a valid form induces the zero product
        let abelian = Algebra::zero(2).with_role(AlgebraRole::Bracket);
        let dot = frob.algebra().clone();
        let two = TwoOpAlgebra::new(&dot, &abelian, SecondRole::Bracket).unwrap();
        let induced = induce_poisson_from_form(&two, &form).unwrap();
        assert!(induced.second_algebra().is_zero_algebra());
    }

    #[test]
    fn tensor_poisson_products() {
        // tensoring with the 1-dimensional unital algebra is an isomorphism
        let unit_dot = Algebra::from_int_entries(1, AlgebraRole::Product, &[(0, 0, 0, 1)]);
        let unit = TwoOpAlgebra::new(&unit_dot, &Algebra::zero(1), SecondRole::Circ).unwrap();
        let a = dim3_example();
        let t = tensor_poisson(&a, &unit).unwrap();
        assert_eq!(t.dot_algebra().tensor(), a.dot_algebra().tensor());
        assert_eq!(t.second_algebra().tensor(), a.second_algebra().tensor());
        // dim 3 x dim 3
        let t = tensor_poisson(&a, &a).unwrap();
        assert_eq!(t.dim(), 9);
        assert!(check_poisson_identity(&t, PoissonIdentityId::Aplp1).pass);
        assert!(check_poisson_identity(&t, PoissonIdentityId::Aplp2).pass);
        // two admissible-pair Poisson algebras tensor to an admissible one
        let ap = trunc_poly_poisson();
        let t = tensor_poisson(&ap, &ap).unwrap();
        assert!(check_identity(&t.second_algebra(), IdentityId::AdmissibleNovikov).pass);
        assert!(check_identity(&t.second_algebra(), IdentityId::AntiPreLie1).pass);
    }

    #[test]
    fn poisson_correspondence_over_f2_lifts() {
        let out = poisson_correspondence_exhaustive(&[0, 1]);
        assert_eq!(out.pairs, 65536);
        assert!(out.comm_assoc_dots > 0);
        assert!(out.mismatches.is_empty());
        assert!(out.derived_violations.is_empty());
        assert!(out.aplp_count > 0);
    }
}
