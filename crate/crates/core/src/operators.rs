//! Anti-O-operators on Lie algebras, their strong and admissible
//! refinements, anti-Rota-Baxter operators, induced products, structure-map
//! checks on commutative associative algebras, and finite-field exhaustive
//! enumeration.

use std::str::FromStr;

use crate::algebra::{Algebra, AlgebraRole};
use crate::classify::{decode_tensor2, encode_tensor2, reduce_mod_p};
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::identities::{check_identity, IdentityId};
use crate::linalg::{LinearMap, Matrix};
use crate::rep::Representation;
use crate::report::CheckReport;
use crate::scalar::{is_prime, Scalar};

/// Which operator condition to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorLevel {
    /// `[T(u), T(v)] = T(rho(T(v))u - rho(T(u))v)`
    AntiO,
    /// `rho([T(u),T(v)])w + rho([T(v),T(w)])u + rho([T(w),T(u)])v = 0`
    Strong,
    /// `2 rho(T(u)) rho(T(v)) w - 2 rho(T(u)) rho(T(w)) v =
    ///  rho(T(rho(T(u))v)) w - rho(T(rho(T(u))w)) v`
    Admissible,
    /// `[[R(x),R(y)] + R([x,R(y)] + [R(x),y]), z] = 0`
    Cons2,
    /// `D([x,y]) = rho(y) D(x) - rho(x) D(y)` for a map `D: g -> V`
    AntiDerivation,
}

impl OperatorLevel {
    pub fn token(&self) -> &'static str {
        match self {
            OperatorLevel::AntiO => "anti-o",
            OperatorLevel::Strong => "strong",
            OperatorLevel::Admissible => "admissible",
            OperatorLevel::Cons2 => "cons2",
            OperatorLevel::AntiDerivation => "anti-derivation",
        }
    }
}

impl FromStr for OperatorLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "anti-o" => OperatorLevel::AntiO,
            "strong" => OperatorLevel::Strong,
            "admissible" => OperatorLevel::Admissible,
            "cons2" => OperatorLevel::Cons2,
            "anti-derivation" => OperatorLevel::AntiDerivation,
            _ => return Err(Error::Unsupported(format!("unknown operator level `{s}`"))),
        })
    }
}

fn column(m: &Matrix, c: usize) -> Vec<Scalar> {
    (0..m.rows()).map(|r| m.get(r, c).clone()).collect()
}

fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn vec_scale(a: &[Scalar], k: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x.mul(k)).collect()
}

fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Verifies one operator condition on all basis tuples.
///
/// `T` maps the representation space into the Lie algebra for the anti-O
/// levels, acts on the Lie algebra itself for `cons2`, and maps the Lie
/// algebra into the representation space for `anti-derivation`.
pub fn check_operator(
    t: &LinearMap,
    lie: &Algebra,
    rho: &Representation,
    level: OperatorLevel,
) -> Result<CheckReport> {
    if !check_identity(lie, IdentityId::Jacobi).pass {
        return Err(Error::Precondition(
            "check_operator: the algebra must satisfy jacobi".into(),
        ));
    }
    if rho.algebra_dim() != lie.dim() {
        return Err(Error::DimensionMismatch {
            context: "check_operator: representation",
            expected: lie.dim(),
            got: rho.algebra_dim(),
        });
    }
    let n = lie.dim();
    let m = rho.carrier_dim();
    let expect_shape = |rows: usize, cols: usize| -> Result<()> {
        if t.rows() != rows || t.cols() != cols {
            return Err(Error::DimensionMismatch {
                context: "check_operator: operator shape",
                expected: rows,
                got: t.rows(),
            });
        }
        Ok(())
    };
    match level {
        OperatorLevel::AntiO => {
            expect_shape(n, m)?;
            for i in 0..m {
                for j in 0..m {
                    let tu = column(t, i);
                    let tv = column(t, j);
                    let lhs = lie.multiply(&tu, &tv)?;
                    let arg = vec_sub(&column(&rho.apply(&tv), i), &column(&rho.apply(&tu), j));
                    let rhs = t.mul_vec(&arg);
                    let r = vec_sub(&lhs, &rhs);
                    if !vec_is_zero(&r) {
                        return Ok(CheckReport::fail(
                            level.token(),
                            vec![i as i64, j as i64],
                            r,
                        ));
                    }
                }
            }
        }
        OperatorLevel::Strong => {
            expect_shape(n, m)?;
            for i in 0..m {
                for j in 0..m {
                    for k in 0..m {
                        let term = |a: usize, b: usize, c: usize| -> Vec<Scalar> {
                            let br = lie
                                .multiply(&column(t, a), &column(t, b))
                                .expect("dims checked");
                            column(&rho.apply(&br), c)
                        };
                        let r = vec_add(&vec_add(&term(i, j, k), &term(j, k, i)), &term(k, i, j));
                        if !vec_is_zero(&r) {
                            return Ok(CheckReport::fail(
                                level.token(),
                                vec![i as i64, j as i64, k as i64],
                                r,
                            ));
                        }
                    }
                }
            }
        }
        OperatorLevel::Admissible => {
            expect_shape(n, m)?;
            let two = Scalar::from_int(2);
            for i in 0..m {
                let a = rho.apply(&column(t, i));
                for j in 0..m {
                    for k in 0..m {
                        let b = rho.apply(&column(t, j));
                        let t1 = vec_scale(&a.mul_vec(&column(&b, k)), &two);
                        let c = rho.apply(&column(t, k));
                        let t2 = vec_scale(&a.mul_vec(&column(&c, j)), &two);
                        let t3 = column(&rho.apply(&t.mul_vec(&column(&a, j))), k);
                        let t4 = column(&rho.apply(&t.mul_vec(&column(&a, k))), j);
                        let r = vec_add(&vec_sub(&vec_sub(&t1, &t2), &t3), &t4);
                        if !vec_is_zero(&r) {
                            return Ok(CheckReport::fail(
                                level.token(),
                                vec![i as i64, j as i64, k as i64],
                                r,
                            ));
                        }
                    }
                }
            }
        }
        OperatorLevel::Cons2 => {
            expect_shape(n, n)?;
            for i in 0..n {
                for j in 0..n {
                    let rx = column(t, i);
                    let ry = column(t, j);
                    let mut inner = lie.multiply(&rx, &ry)?;
                    let arg = vec_add(&lie.mul_basis_vec(i, &ry), &lie.mul_vec_basis(&rx, j));
                    inner = vec_add(&inner, &t.mul_vec(&arg));
                    for k in 0..n {
                        let r = lie.mul_vec_basis(&inner, k);
                        if !vec_is_zero(&r) {
                            return Ok(CheckReport::fail(
                                level.token(),
                                vec![i as i64, j as i64, k as i64],
                                r,
                            ));
                        }
                    }
                }
            }
        }
        OperatorLevel::AntiDerivation => {
            expect_shape(m, n)?;
            for i in 0..n {
                for j in 0..n {
                    let lhs = t.mul_vec(lie.basis_product(i, j));
                    let rhs = vec_sub(
                        &rho.matrix(j).mul_vec(&column(t, i)),
                        &rho.matrix(i).mul_vec(&column(t, j)),
                    );
                    let r = vec_sub(&lhs, &rhs);
                    if !vec_is_zero(&r) {
                        return Ok(CheckReport::fail(
                            level.token(),
                            vec![i as i64, j as i64],
                            r,
                        ));
                    }
                }
            }
        }
    }
    Ok(CheckReport::pass())
}

/// The product `u o v = -rho(T(u)) v` on the representation space. When `T`
/// passes anti-O and strong, the result is an anti-pre-Lie algebra and `T` is
/// a homomorphism onto its image.
pub fn induced_algebra(t: &LinearMap, rho: &Representation) -> Result<Algebra> {
    let m = rho.carrier_dim();
    if t.cols() != m || t.rows() != rho.algebra_dim() {
        return Err(Error::DimensionMismatch {
            context: "induced_algebra",
            expected: m,
            got: t.cols(),
        });
    }
    let mut out = Algebra::zero(m);
    for i in 0..m {
        let act = rho.apply(&column(t, i)).neg();
        for j in 0..m {
            for (k, v) in column(&act, j).into_iter().enumerate() {
                out.set_coeff(i, j, k, v);
            }
        }
    }
    Ok(out)
}

/// Structure-map checks on a commutative associative algebra.
pub enum StructureMapCheck<'a> {
    /// Leibniz: `P(x . y) = P(x) . y + x . P(y)`
    Derivation {
        algebra: &'a Algebra,
        map: &'a LinearMap,
    },
    /// `Q(x . y) = Q(x) . y + x . P(y)`
    AdmissiblePair {
        algebra: &'a Algebra,
        p: &'a LinearMap,
        q: &'a LinearMap,
    },
    /// `B(Q(x), y) = B(x, Q_hat(y))`
    AdjointConsistency {
        algebra: &'a Algebra,
        q: &'a LinearMap,
        q_hat: &'a LinearMap,
        form: &'a BilinearForm,
    },
}

pub fn check_structure_map(check: &StructureMapCheck) -> Result<CheckReport> {
    match check {
        StructureMapCheck::Derivation { algebra, map } => {
            admissible_pair_residuals(algebra, map, map, "derivation")
        }
        StructureMapCheck::AdmissiblePair { algebra, p, q } => {
            admissible_pair_residuals(algebra, p, q, "admissible-pair")
        }
        StructureMapCheck::AdjointConsistency {
            algebra,
            q,
            q_hat,
            form,
        } => {
            let n = algebra.dim();
            if q.rows() != n || q_hat.rows() != n || form.dim() != n {
                return Err(Error::DimensionMismatch {
                    context: "adjoint consistency",
                    expected: n,
                    got: q.rows(),
                });
            }
            for i in 0..n {
                for j in 0..n {
                    let lhs = form.evaluate(&column(q, i), &basis_vec(n, j));
                    let rhs = form.evaluate(&basis_vec(n, i), &column(q_hat, j));
                    let r = lhs.sub(&rhs);
                    if !r.is_zero() {
                        return Ok(CheckReport::fail(
                            "adjoint-consistency",
                            vec![i as i64, j as i64],
                            vec![r],
                        ));
                    }
                }
            }
            Ok(CheckReport::pass())
        }
    }
}

fn basis_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn admissible_pair_residuals(
    algebra: &Algebra,
    p: &LinearMap,
    q: &LinearMap,
    label: &str,
) -> Result<CheckReport> {
    let n = algebra.dim();
    if p.rows() != n || p.cols() != n || q.rows() != n || q.cols() != n {
        return Err(Error::DimensionMismatch {
            context: "structure map",
            expected: n,
            got: p.rows(),
        });
    }
    for i in 0..n {
        for j in 0..n {
            // Q(e_i . e_j) - Q(e_i) . e_j - e_i . P(e_j)
            let lhs = q.mul_vec(algebra.basis_product(i, j));
            let t1 = algebra.mul_vec_basis(&column(q, i), j);
            let t2 = algebra.mul_basis_vec(i, &column(p, j));
            let r = vec_sub(&vec_sub(&lhs, &t1), &t2);
            if !vec_is_zero(&r) {
                return Ok(CheckReport::fail(label, vec![i as i64, j as i64], r));
            }
        }
    }
    Ok(CheckReport::pass())
}

/// The two-parameter anti-Rota-Baxter operator families on the 2-dimensional
/// non-abelian Lie algebra `[e1, e2] = e1`. Parameters must be nonzero where
/// a family uses them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RFamily {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
}

impl RFamily {
    pub const ALL: [RFamily; 8] = [
        RFamily::R1,
        RFamily::R2,
        RFamily::R3,
        RFamily::R4,
        RFamily::R5,
        RFamily::R6,
        RFamily::R7,
        RFamily::R8,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            RFamily::R1 => "r1",
            RFamily::R2 => "r2",
            RFamily::R3 => "r3",
            RFamily::R4 => "r4",
            RFamily::R5 => "r5",
            RFamily::R6 => "r6",
            RFamily::R7 => "r7",
            RFamily::R8 => "r8",
        }
    }

    pub fn uses_a(&self) -> bool {
        !matches!(self, RFamily::R1)
    }

    pub fn uses_b(&self) -> bool {
        matches!(self, RFamily::R4 | RFamily::R6 | RFamily::R8)
    }

    pub fn is_admissible_family(&self) -> bool {
        !matches!(self, RFamily::R3 | RFamily::R4)
    }

    /// Operator matrix at concrete parameters.
    pub fn operator(&self, a: &Scalar, b: &Scalar) -> Result<LinearMap> {
        if self.uses_a() && a.is_zero() {
            return Err(Error::OutOfDomain(format!(
                "{} requires a != 0",
                self.token()
            )));
        }
        if self.uses_b() && b.is_zero() {
            return Err(Error::OutOfDomain(format!(
                "{} requires b != 0",
                self.token()
            )));
        }
        let z = Scalar::zero;
        let half_neg_a = a.div(&Scalar::from_int(-2));
        let rows = match self {
            RFamily::R1 => [[z(), z()], [z(), z()]],
            RFamily::R2 => [[z(), a.clone()], [z(), z()]],
            RFamily::R3 => [[z(), z()], [z(), a.clone()]],
            RFamily::R4 => [[z(), b.clone()], [z(), a.clone()]],
            RFamily::R5 => [[a.clone(), z()], [z(), half_neg_a.clone()]],
            RFamily::R6 => [[a.clone(), b.clone()], [z(), half_neg_a.clone()]],
            RFamily::R7 => [[z(), z()], [a.clone(), z()]],
            RFamily::R8 => [[a.clone(), a.mul(a).div(b).neg()], [b.clone(), a.neg()]],
        };
        Ok(Matrix::from_rows(
            rows.into_iter().map(|r| r.to_vec()).collect(),
        ))
    }

    /// The isomorphism class of the induced product `x o y = -[R(x), y]`,
    /// returned as an explicit target tensor together with a basis-change
    /// witness: `change_basis(induced, witness) = target`.
    pub fn induced_target(&self, a: &Scalar, b: &Scalar) -> Result<(Algebra, LinearMap)> {
        let one = Scalar::one();
        let id2 = Matrix::identity(2);
        let e22_to_e1 = Algebra::from_int_entries(2, AlgebraRole::Product, &[(1, 1, 0, 1)]);
        let e11_to_e1 = Algebra::from_int_entries(2, AlgebraRole::Product, &[(0, 0, 0, 1)]);
        let a2_0 = crate::classify::catalog(&crate::classify::CatalogId::A2 {
            lambda: Scalar::zero(),
        })?
        .into_algebra();
        let a4_1 = crate::classify::catalog(&crate::classify::CatalogId::A4 {
            lambda: Scalar::one(),
        })?
        .into_algebra();
        let col = |m: Vec<Vec<Scalar>>| Matrix::from_rows(m);
        Ok(match self {
            RFamily::R1 => (Algebra::zero(2), id2),
            RFamily::R2 => (
                e22_to_e1,
                col(vec![
                    vec![a.neg(), Scalar::zero()],
                    vec![Scalar::zero(), one.clone()],
                ]),
            ),
            RFamily::R3 => (
                a2_0,
                col(vec![
                    vec![one.clone(), Scalar::zero()],
                    vec![Scalar::zero(), a.inv().neg()],
                ]),
            ),
            RFamily::R4 => (
                a2_0,
                col(vec![
                    vec![one.clone(), b.div(&a.mul(a)).neg()],
                    vec![Scalar::zero(), a.inv().neg()],
                ]),
            ),
            RFamily::R5 => (
                a4_1,
                col(vec![
                    vec![one.clone(), Scalar::zero()],
                    vec![Scalar::zero(), Scalar::from_int(-2).div(a)],
                ]),
            ),
            RFamily::R6 => (
                a4_1,
                col(vec![
                    vec![
                        one.clone(),
                        Scalar::from_int(4)
                            .mul(b)
                            .div(&Scalar::from_int(3).mul(a).mul(a)),
                    ],
                    vec![Scalar::zero(), Scalar::from_int(-2).div(a)],
                ]),
            ),
            RFamily::R7 => (
                e11_to_e1,
                col(vec![
                    vec![a.inv(), Scalar::zero()],
                    vec![Scalar::zero(), one.clone()],
                ]),
            ),
            RFamily::R8 => (
                e11_to_e1,
                col(vec![
                    vec![b.inv(), a.div(b)],
                    vec![Scalar::zero(), one.clone()],
                ]),
            ),
        })
    }
}

/// Predicate for finite-field exhaustive enumeration.
pub enum FfPredicate<'a> {
    /// Structure tensors satisfying all listed identities.
    Profile(&'a [IdentityId]),
    /// Operator matrices satisfying the anti-Rota-Baxter equation on the
    /// given bracket (integer entries are reduced mod p).
    AntiRotaBaxter { bracket: &'a Algebra },
}

#[derive(Debug, Clone)]
pub enum FfSolution {
    Tensor(Algebra),
    Matrix(LinearMap),
}

#[derive(Debug, Clone)]
pub struct FfEnumeration {
    pub p: u64,
    pub solutions: Vec<FfSolution>,
    /// Number of `GL_2(F_p)` orbits among tensor solutions, when requested.
    pub orbit_count: Option<usize>,
}

/// Exhaustively enumerates dim-2 structure tensors (or operator matrices)
/// over `F_p`, in lexicographic encoding order.
pub fn ff_enumerate(
    p: u64,
    dim: usize,
    predicate: &FfPredicate,
    orbits: bool,
) -> Result<FfEnumeration> {
    if dim != 2 {
        return Err(Error::Unsupported(
            "finite-field enumeration is limited to dim 2".into(),
        ));
    }
    if !is_prime(p) || !(2..=5).contains(&p) {
        return Err(Error::Unsupported(format!(
            "finite-field enumeration needs a prime p in {{2, 3, 5}}, got {p}"
        )));
    }
    let mut solutions = Vec::new();
    match predicate {
        FfPredicate::Profile(ids) => {
            for code in 0..p.pow(8) {
                let enc: Vec<u64> = (0..8).map(|i| (code / p.pow(i)) % p).collect();
                let alg = decode_tensor2(&enc, p);
                if ids.iter().all(|id| check_identity(&alg, *id).pass) {
                    solutions.push(FfSolution::Tensor(alg));
                }
            }
        }
        FfPredicate::AntiRotaBaxter { bracket } => {
            if bracket.dim() != 2 {
                return Err(Error::DimensionMismatch {
                    context: "ff_enumerate bracket",
                    expected: 2,
                    got: bracket.dim(),
                });
            }
            let bracket = reduce_mod_p(bracket, p);
            let rho = Representation::adjoint(&bracket);
            for code in 0..p.pow(4) {
                let e: Vec<i64> = (0..4).map(|i| ((code / p.pow(i)) % p) as i64).collect();
                let m = Matrix::from_rows(vec![
                    vec![Scalar::mod_p(e[0], p), Scalar::mod_p(e[1], p)],
                    vec![Scalar::mod_p(e[2], p), Scalar::mod_p(e[3], p)],
                ]);
                if check_operator(&m, &bracket, &rho, OperatorLevel::AntiO)?.pass {
                    solutions.push(FfSolution::Matrix(m));
                }
            }
        }
    }
    let orbit_count = if orbits {
        let mut reps = std::collections::BTreeSet::new();
        let gl: Vec<Matrix> = {
            let mut out = Vec::new();
            for code in 0..p.pow(4) {
                let e: Vec<i64> = (0..4).map(|i| ((code / p.pow(i)) % p) as i64).collect();
                let m = Matrix::from_rows(vec![
                    vec![Scalar::mod_p(e[0], p), Scalar::mod_p(e[1], p)],
                    vec![Scalar::mod_p(e[2], p), Scalar::mod_p(e[3], p)],
                ]);
                if !m.det().is_zero() {
                    out.push(m);
                }
            }
            out
        };
        for s in &solutions {
            if let FfSolution::Tensor(alg) = s {
                let rep = gl
                    .iter()
                    .map(|g| encode_tensor2(&alg.change_basis(g).expect("invertible")))
                    .min()
                    .expect("GL is nonempty");
                reps.insert(rep);
            }
        }
        Some(reps.len())
    } else {
        None
    };
    Ok(FfEnumeration {
        p,
        solutions,
        orbit_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{self, CatalogId};

    fn nonabelian() -> Algebra {
        classify::catalog(&CatalogId::Dim2NonabelianLie)
            .unwrap()
            .into_algebra()
    }

    fn sc(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn r_families_are_anti_rota_baxter_and_strong() {
        let lie = nonabelian();
        let ad = Representation::adjoint(&lie);
        for fam in RFamily::ALL {
            for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                let t = fam.operator(&sc(a), &sc(b)).unwrap();
                assert!(
                    check_operator(&t, &lie, &ad, OperatorLevel::AntiO)
                        .unwrap()
                        .pass,
                    "{} at ({a},{b}) fails anti-o",
                    fam.token()
                );
                assert!(
                    check_operator(&t, &lie, &ad, OperatorLevel::Strong)
                        .unwrap()
                        .pass,
                    "{} at ({a},{b}) fails strong",
                    fam.token()
                );
            }
        }
    }

    #[test]
    fn admissible_families_are_exactly_the_papers() {
        let lie = nonabelian();
        let ad = Representation::adjoint(&lie);
        for fam in RFamily::ALL {
            let t = fam.operator(&sc(1), &sc(1)).unwrap();
            let admissible = check_operator(&t, &lie, &ad, OperatorLevel::Admissible)
                .unwrap()
                .pass;
            assert_eq!(
                admissible,
                fam.is_admissible_family(),
                "{} admissibility mismatch",
                fam.token()
            );
        }
    }

    #[test]
    fn zero_map_is_anti_o() {
        let lie = nonabelian();
        let ad = Representation::adjoint(&lie);
        let zero = Matrix::zero(2, 2);
        assert!(
            check_operator(&zero, &lie, &ad, OperatorLevel::AntiO)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn induced_algebras_match_the_catalog_list() {
        let lie = nonabelian();
        let ad = Representation::adjoint(&lie);
        for fam in RFamily::ALL {
            for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                let (a, b) = (sc(a), sc(b));
                let t = fam.operator(&a, &b).unwrap();
                let induced = induced_algebra(&t, &ad).unwrap();
                let (target, witness) = fam.induced_target(&a, &b).unwrap();
                let report = classify::verify_iso_witness(&induced, &target, &witness).unwrap();
                assert!(report.pass, "{}: {report}", fam.token());
            }
        }
    }

    #[test]
    fn r2_induced_is_commutative_associative() {
        let lie = nonabelian();
        let ad = Representation::adjoint(&lie);
        let t = RFamily::R2.operator(&sc(1), &sc(1)).unwrap();
        let induced = induced_algebra(&t, &ad).unwrap();
        // e2 o e2 = -e1 here; commutative associative
        assert!(check_identity(&induced, IdentityId::Commutative).pass);
        assert!(check_identity(&induced, IdentityId::Associative).pass);
        // zero map induces the zero algebra
        let z = induced_algebra(&Matrix::zero(2, 2), &ad).unwrap();
        assert!(z.is_zero_algebra());
    }

    #[test]
    fn structure_map_examples() {
        // F[x]/(x^4) with P = x d/dx is a derivation
        let obj = classify::catalog(&CatalogId::TruncPoly { n: 4, k: 1 }).unwrap();
        let (alg, p) = (obj.algebra().clone(), obj.derivation().unwrap().clone());
        assert!(
            check_structure_map(&StructureMapCheck::Derivation {
                algebra: &alg,
                map: &p
            })
            .unwrap()
            .pass
        );
        // (P, P) is an admissible pair
        assert!(
            check_structure_map(&StructureMapCheck::AdmissiblePair {
                algebra: &alg,
                p: &p,
                q: &p
            })
            .unwrap()
            .pass
        );
        // adjoint consistency on the dim-2 Frobenius algebra
        let frob = classify::catalog(&CatalogId::Dim2AssocFrob).unwrap();
        let algebra = frob.algebra().clone();
        let form = frob.form().unwrap().clone();
        let q = Matrix::from_int_rows(&[&[0, 0], &[0, 1]]);
        let q_hat = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        assert!(
            check_structure_map(&StructureMapCheck::AdjointConsistency {
                algebra: &algebra,
                q: &q,
                q_hat: &q_hat,
                form: &form
            })
            .unwrap()
            .pass
        );
    }

    #[test]
    fn ff_enumeration_anti_rota_baxter_mod_3() {
        let lie = nonabelian();
        let out =
            ff_enumerate(3, 2, &FfPredicate::AntiRotaBaxter { bracket: &lie }, false).unwrap();
        // brute-force count over all 81 matrices, frozen
        assert_eq!(out.solutions.len(), 21);
        // every solution satisfies r11(r11 + 2 r22) = r21 r12 and
        // r21(r11 + r22) = 0 mod 3
        for s in &out.solutions {
            let FfSolution::Matrix(m) = s else { panic!() };
            let val = |r: usize, c: usize| -> i64 {
                match m.get(r, c) {
                    Scalar::Mod { value, .. } => *value as i64,
                    s if s.is_zero() => 0,
                    _ => panic!(),
                }
            };
            let (r11, r12, r21, r22) = (val(0, 0), val(0, 1), val(1, 0), val(1, 1));
            assert_eq!((r11 * (r11 + 2 * r22) - r21 * r12).rem_euclid(3), 0);
            assert_eq!((r21 * (r11 + r22)).rem_euclid(3), 0);
        }
    }

    #[test]
    fn ff_enumeration_rejects_unsupported_inputs() {
        let pred = FfPredicate::Profile(&[IdentityId::Commutative]);
        assert!(ff_enumerate(7, 2, &pred, false).is_err());
        assert!(ff_enumerate(4, 2, &pred, false).is_err());
        assert!(ff_enumerate(3, 3, &pred, false).is_err());
    }

    #[test]
    fn ff_profile_includes_zero_tensor() {
        let out = ff_enumerate(
            2,
            2,
            &FfPredicate::Profile(&[IdentityId::Commutative, IdentityId::Associative]),
            false,
        )
        .unwrap();
        assert!(out
            .solutions
            .iter()
            .any(|s| matches!(s, FfSolution::Tensor(a) if a.is_zero_algebra())));
    }

    #[test]
    fn ff_anti_pre_lie_profile_satisfies_equivalent_formulations() {
        // char-free equivalence: apl1 + apl2 imply lie-admissibility and the
        // left Alia identity
        let out = ff_enumerate(
            3,
            2,
            &FfPredicate::Profile(&[IdentityId::AntiPreLie1, IdentityId::AntiPreLie2]),
            true,
        )
        .unwrap();
        assert!(out.orbit_count.is_some());
        for s in &out.solutions {
            let FfSolution::Tensor(alg) = s else { panic!() };
            assert!(check_identity(alg, IdentityId::LieAdmissible).pass);
            assert!(check_identity(alg, IdentityId::AliaLeft).pass);
        }
    }
}
