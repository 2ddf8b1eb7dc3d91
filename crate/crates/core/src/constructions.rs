//! Generative constructions: products from linear functions and symmetric
//! forms, q-algebra transforms, admissible-pair products, semidirect and
//! tensor Lie brackets, and the affinization Jacobi certificate.

use crate::algebra::{Algebra, AlgebraRole};
use crate::dim2;
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::identities::{check_identity, IdentityId};
use crate::linalg::{LinearMap, Matrix};
use crate::operators::{check_structure_map, StructureMapCheck};
use crate::rep::Representation;
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// `x o y = f(y) x + g(x) y` for two linear functionals given by coefficient
/// rows. Also reports whether `f = 0` or `g = 2f`, which is equivalent to
/// the result being an anti-pre-Lie algebra.
pub fn from_linear_functions(f: &[Scalar], g: &[Scalar]) -> Result<(Algebra, bool)> {
    let n = f.len();
    if g.len() != n {
        return Err(Error::DimensionMismatch {
            context: "from_linear_functions",
            expected: n,
            got: g.len(),
        });
    }
    if n < 2 {
        return Err(Error::Precondition(
            "from_linear_functions needs dim >= 2".into(),
        ));
    }
    let mut alg = Algebra::zero(n);
    for i in 0..n {
        for j in 0..n {
            // e_i o e_j = f(e_j) e_i + g(e_i) e_j
            let mut v = vec![Scalar::zero(); n];
            v[i] = v[i].add(&f[j]);
            v[j] = v[j].add(&g[i]);
            for (k, c) in v.into_iter().enumerate() {
                alg.set_coeff(i, j, k, c);
            }
        }
    }
    let f_zero = f.iter().all(Scalar::is_zero);
    let g_is_2f = f
        .iter()
        .zip(g)
        .all(|(fi, gi)| gi == &fi.mul(&Scalar::from_int(2)));
    Ok((alg, f_zero || g_is_2f))
}

/// `x o y = B(x, y) s - B(x, s) y` for a symmetric form and a fixed vector;
/// always an anti-pre-Lie algebra with `B` invariant on it.
pub fn from_symmetric_form(b: &BilinearForm, s: &[Scalar]) -> Result<Algebra> {
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = b.dim();
    if s.len() != n {
        return Err(Error::DimensionMismatch {
            context: "from_symmetric_form",
            expected: n,
            got: s.len(),
        });
    }
    let bs: Vec<Scalar> = (0..n)
        .map(|i| {
            let mut acc = Scalar::zero();
            for (m, sm) in s.iter().enumerate() {
                if !sm.is_zero() {
                    acc = acc.add(&b.get(i, m).mul(sm));
                }
            }
            acc
        })
        .collect();
    let mut alg = Algebra::zero(n);
    for (i, bsi) in bs.iter().enumerate() {
        for j in 0..n {
            for (k, sk) in s.iter().enumerate() {
                let mut v = b.get(i, j).mul(sk);
                if j == k {
                    v = v.sub(bsi);
                }
                alg.set_coeff(i, j, k, v);
            }
        }
    }
    Ok(alg)
}

/// The q-algebra `x o y = x * y + q y * x`.
pub fn q_transform(alg: &Algebra, q: &Scalar) -> Algebra {
    let n = alg.dim();
    let mut out = alg.clone();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set_coeff(i, j, k, alg.coeff(i, j, k).add(&q.mul(alg.coeff(j, i, k))));
            }
        }
    }
    out
}

/// Exact inverse of the 2-transform: `x * y = -(1/3) x o y + (2/3) y o x`.
pub fn exact_inverse_two_transform(alg: &Algebra) -> Algebra {
    let n = alg.dim();
    let third = Scalar::ratio(-1, 3);
    let two_thirds = Scalar::ratio(2, 3);
    let mut out = alg.clone();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = third
                    .mul(alg.coeff(i, j, k))
                    .add(&two_thirds.mul(alg.coeff(j, i, k)));
                out.set_coeff(i, j, k, v);
            }
        }
    }
    out
}

/// Which product an admissible pair induces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMode {
    /// `x * y = x . Q(y)` — a Novikov algebra.
    Novikov,
    /// `x o y = x . Q(y) + 2 Q(x) . y` — an admissible Novikov algebra.
    AdmissibleNovikov,
    /// `[x, y] = Q(x) . y - x . Q(y)` — a Lie bracket.
    Lie,
}

impl PairMode {
    pub fn parse(s: &str) -> Result<PairMode> {
        Ok(match s {
            "novikov" => PairMode::Novikov,
            "admissible-novikov" => PairMode::AdmissibleNovikov,
            "lie" => PairMode::Lie,
            _ => return Err(Error::Unsupported(format!("unknown pair mode `{s}`"))),
        })
    }
}

fn require_comm_assoc(assoc: &Algebra, context: &str) -> Result<()> {
    if !check_identity(assoc, IdentityId::Commutative).pass
        || !check_identity(assoc, IdentityId::Associative).pass
    {
        return Err(Error::Precondition(format!(
            "{context}: the base algebra must be commutative associative"
        )));
    }
    Ok(())
}

/// Product on a commutative associative algebra induced by an admissible
/// pair `(P, Q)`.
pub fn pair_based_product(
    assoc: &Algebra,
    p: &LinearMap,
    q: &LinearMap,
    mode: PairMode,
) -> Result<Algebra> {
    require_comm_assoc(assoc, "pair_based_product")?;
    let pair = check_structure_map(&StructureMapCheck::AdmissiblePair {
        algebra: assoc,
        p,
        q,
    })?;
    if !pair.pass {
        return Err(Error::Precondition(format!(
            "pair_based_product: (P, Q) is not an admissible pair ({pair})"
        )));
    }
    let n = assoc.dim();
    let col =
        |m: &Matrix, c: usize| -> Vec<Scalar> { (0..n).map(|r| m.get(r, c).clone()).collect() };
    let mut out = Algebra::zero(n);
    if matches!(mode, PairMode::Lie) {
        out = out.with_role(AlgebraRole::Bracket);
    }
    let two = Scalar::from_int(2);
    for i in 0..n {
        for j in 0..n {
            let x_qy = assoc.mul_basis_vec(i, &col(q, j));
            let qx_y = assoc.mul_vec_basis(&col(q, i), j);
            let v: Vec<Scalar> = match mode {
                PairMode::Novikov => x_qy,
                PairMode::AdmissibleNovikov => x_qy
                    .iter()
                    .zip(&qx_y)
                    .map(|(a, b)| a.add(&b.mul(&two)))
                    .collect(),
                PairMode::Lie => qx_y.iter().zip(&x_qy).map(|(a, b)| a.sub(b)).collect(),
            };
            for (k, c) in v.into_iter().enumerate() {
                out.set_coeff(i, j, k, c);
            }
        }
    }
    let labels: Vec<&str> = assoc.basis_labels().iter().map(String::as_str).collect();
    Ok(out.with_labels(&labels))
}

/// Adjoint `Q_hat = B^{-1} Q^T B` of an operator with respect to a
/// nondegenerate symmetric invariant form.
pub fn adjoint_operator(assoc: &Algebra, b: &BilinearForm, q: &LinearMap) -> Result<LinearMap> {
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !b.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    if !crate::cocycles::check_form(assoc, b, crate::cocycles::FormMode::AssocInvariant)?.pass {
        return Err(Error::Precondition(
            "adjoint_operator: the form is not invariant on the algebra".into(),
        ));
    }
    Ok(b.matrix().inverse()?.mul(&q.transpose()).mul(b.matrix()))
}

/// Semidirect-product bracket on `g + V`:
/// `[x + u, y + v] = [x, y] + rho(x) v - rho(y) u`.
pub fn semidirect_lie(lie: &Algebra, rho: &Representation) -> Result<Algebra> {
    if !check_identity(lie, IdentityId::Jacobi).pass {
        return Err(Error::Precondition(
            "semidirect_lie: the algebra must satisfy jacobi".into(),
        ));
    }
    let rep_ok = crate::identities::is_representation(lie, rho)?;
    if !rep_ok.pass {
        return Err(Error::Precondition(format!(
            "semidirect_lie: not a representation ({rep_ok})"
        )));
    }
    let n = lie.dim();
    let m = rho.carrier_dim();
    let total = n + m;
    let mut out = Algebra::zero(total).with_role(AlgebraRole::Bracket);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set_coeff(i, j, k, lie.coeff(i, j, k).clone());
            }
        }
        for j in 0..m {
            // [e_i, v_j] = rho(e_i) v_j  and  [v_j, e_i] = -rho(e_i) v_j
            for r in 0..m {
                let v = rho.matrix(i).get(r, j).clone();
                out.set_coeff(i, n + j, n + r, v.clone());
                out.set_coeff(n + j, i, n + r, v.neg());
            }
        }
    }
    Ok(out)
}

/// The canonical pairing form `B(x + a*, y + b*) = <x, b*> + <a*, y>` on
/// `g + g*`.
pub fn canonical_pairing_form(n: usize) -> BilinearForm {
    let mut m = Matrix::zero(2 * n, 2 * n);
    for i in 0..n {
        m.set(i, n + i, Scalar::one());
        m.set(n + i, i, Scalar::one());
    }
    BilinearForm::new(m).expect("square")
}

/// Mode of the tensor-product Lie bracket built from an admissible pair and
/// a (admissible) Novikov algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorLieMode {
    /// `[x (x) u, y (x) v] = Q(x).y (x) u*v - x.Q(y) (x) v*u`
    Novikov,
    /// `[x (x) u, y (x) v] = (Q(x).y + 2x.Q(y)) (x) u o v
    ///                      - (x.Q(y) + 2Q(x).y) (x) v o u`
    Admissible,
}

pub fn tensor_lie(
    assoc: &Algebra,
    p: &LinearMap,
    q: &LinearMap,
    v_alg: &Algebra,
    mode: TensorLieMode,
) -> Result<Algebra> {
    require_comm_assoc(assoc, "tensor_lie")?;
    let pair = check_structure_map(&StructureMapCheck::AdmissiblePair {
        algebra: assoc,
        p,
        q,
    })?;
    if !pair.pass {
        return Err(Error::Precondition(
            "tensor_lie: (P, Q) is not an admissible pair".into(),
        ));
    }
    match mode {
        TensorLieMode::Novikov => {
            if !check_identity(v_alg, IdentityId::PreLie).pass
                || !check_identity(v_alg, IdentityId::NovikovRight).pass
            {
                return Err(Error::Precondition(
                    "tensor_lie: the second factor must be a Novikov algebra".into(),
                ));
            }
        }
        TensorLieMode::Admissible => {
            if !check_identity(v_alg, IdentityId::AntiPreLie1).pass
                || !check_identity(v_alg, IdentityId::AdmissibleNovikov).pass
            {
                return Err(Error::Precondition(
                    "tensor_lie: the second factor must be an admissible Novikov algebra".into(),
                ));
            }
        }
    }
    let n = assoc.dim();
    let m = v_alg.dim();
    let col =
        |mat: &Matrix, c: usize| -> Vec<Scalar> { (0..n).map(|r| mat.get(r, c).clone()).collect() };
    let two = Scalar::from_int(2);
    let mut out = Algebra::zero(n * m).with_role(AlgebraRole::Bracket);
    for i in 0..n {
        for a in 0..m {
            for j in 0..n {
                for b_idx in 0..m {
                    let qx_y = assoc.mul_vec_basis(&col(q, i), j);
                    let x_qy = assoc.mul_basis_vec(i, &col(q, j));
                    let (wa, ta, wb, tb): (Vec<Scalar>, &[Scalar], Vec<Scalar>, &[Scalar]) =
                        match mode {
                            TensorLieMode::Novikov => (
                                qx_y.clone(),
                                v_alg.basis_product(a, b_idx),
                                x_qy.clone(),
                                v_alg.basis_product(b_idx, a),
                            ),
                            TensorLieMode::Admissible => (
                                qx_y.iter()
                                    .zip(&x_qy)
                                    .map(|(u, w)| u.add(&w.mul(&two)))
                                    .collect(),
                                v_alg.basis_product(a, b_idx),
                                x_qy.iter()
                                    .zip(&qx_y)
                                    .map(|(u, w)| u.add(&w.mul(&two)))
                                    .collect(),
                                v_alg.basis_product(b_idx, a),
                            ),
                        };
                    for k in 0..n {
                        for c in 0..m {
                            let v = wa[k].mul(&ta[c]).sub(&wb[k].mul(&tb[c]));
                            if !v.is_zero() {
                                let cur = out.coeff(i * m + a, j * m + b_idx, k * m + c).add(&v);
                                out.set_coeff(i * m + a, j * m + b_idx, k * m + c, cur);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Coefficient scheme of the affinization bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffinizationMode {
    /// `[(x, m), (y, n)] = ((m+1) x*y - (n+1) y*x, m+n)`
    Novikov,
    /// `[(x, m), (y, n)] = ((m+2n+3) x o y - (2m+n+3) y o x, m+n)`
    Admissible,
}

impl AffinizationMode {
    pub fn parse(s: &str) -> Result<AffinizationMode> {
        Ok(match s {
            "novikov" => AffinizationMode::Novikov,
            "admissible" => AffinizationMode::Admissible,
            _ => {
                return Err(Error::Unsupported(format!(
                    "unknown affinization mode `{s}`"
                )))
            }
        })
    }

    fn coeffs(&self, m: i64, n: i64) -> (i64, i64) {
        match self {
            AffinizationMode::Novikov => (m + 1, n + 1),
            AffinizationMode::Admissible => (m + 2 * n + 3, 2 * m + n + 3),
        }
    }
}

/// Grid certificate for the affinization Jacobi identity.
///
/// The Jacobi residual of the graded bracket has coefficients that are
/// polynomials of degree at most 2 in each grade variable, so vanishing on a
/// grid of 3 distinct values per variable certifies vanishing for all
/// integer grades. Pass therefore asserts the full infinite-dimensional
/// statement.
pub fn affinization_check(
    alg: &Algebra,
    mode: AffinizationMode,
    window: &[i64],
) -> Result<CheckReport> {
    let mut grades: Vec<i64> = window.to_vec();
    grades.sort_unstable();
    grades.dedup();
    if grades.len() < 3 {
        return Err(Error::Precondition(
            "affinization_check: the window must contain at least 3 distinct integers".into(),
        ));
    }
    let n = alg.dim();
    // graded bracket of (u, g1) and (v, g2) -> (w, g1 + g2)
    let bracket = |u: &[Scalar], g1: i64, v: &[Scalar], g2: i64| -> Result<(Vec<Scalar>, i64)> {
        let (cu, cv) = mode.coeffs(g1, g2);
        let uv = alg.multiply(u, v)?;
        let vu = alg.multiply(v, u)?;
        let w: Vec<Scalar> = uv
            .iter()
            .zip(&vu)
            .map(|(a, b)| {
                a.mul(&Scalar::from_int(cu))
                    .sub(&b.mul(&Scalar::from_int(cv)))
            })
            .collect();
        Ok((w, g1 + g2))
    };
    let basis = |i: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        v
    };
    let token = match mode {
        AffinizationMode::Novikov => "affinization-novikov",
        AffinizationMode::Admissible => "affinization-admissible",
    };
    for &gm in &grades {
        for &gn in &grades {
            for &gp in &grades {
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            let (t1, g1) = bracket(&basis(i), gm, &basis(j), gn)?;
                            let (t1, _) = bracket(&t1, g1, &basis(k), gp)?;
                            let (t2, g2) = bracket(&basis(j), gn, &basis(k), gp)?;
                            let (t2, _) = bracket(&t2, g2, &basis(i), gm)?;
                            let (t3, g3) = bracket(&basis(k), gp, &basis(i), gm)?;
                            let (t3, _) = bracket(&t3, g3, &basis(j), gn)?;
                            let r: Vec<Scalar> = t1
                                .iter()
                                .zip(&t2)
                                .zip(&t3)
                                .map(|((a, b), c)| a.add(b).add(c))
                                .collect();
                            if r.iter().any(|s| !s.is_zero()) {
                                return Ok(CheckReport::fail(
                                    token,
                                    vec![gm, gn, gp, i as i64, j as i64, k as i64],
                                    r,
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(CheckReport::pass())
}

/// The three products attached to a symmetric Frobenius algebra with a
/// derivation `Q` and its adjoint `Q_hat`:
/// `x o1 y = x.Q(y) + 2Q(x).y`, `x o2 y = -x.Q_hat(y) - 2Q_hat(x).y`, and
/// `o3` induced by the form as a commutative 2-cocycle on the derived
/// bracket `[x, y] = Q(x).y - x.Q(y)`.
pub fn frobenius_triple_products(
    assoc: &Algebra,
    b: &BilinearForm,
    q: &LinearMap,
) -> Result<(Algebra, Algebra, Algebra)> {
    let leibniz = check_structure_map(&StructureMapCheck::Derivation {
        algebra: assoc,
        map: q,
    })?;
    if !leibniz.pass {
        return Err(Error::Precondition(
            "frobenius_triple_products: Q must be a derivation".into(),
        ));
    }
    let q_hat = adjoint_operator(assoc, b, q)?;
    let circ1 = pair_based_product(assoc, q, q, PairMode::AdmissibleNovikov)?;
    let neg_q_hat = q_hat.neg();
    let circ2 = pair_based_product(assoc, q, &neg_q_hat, PairMode::AdmissibleNovikov)?;
    let bracket = pair_based_product(assoc, q, q, PairMode::Lie)?;
    let circ3 = crate::cocycles::induce_compatible_product(&bracket, b)?;
    Ok((circ1, circ2, circ3))
}

/// Outcome of the exhaustive dim-2 q-correspondence verification.
#[derive(Debug, Clone)]
pub struct QCorrespondenceOutcome {
    pub tensors: usize,
    pub novikov_count: usize,
    pub admissible_count: usize,
    /// Lifts violating `{pre-lie, novikov} <=> 2-algebra {apl-1, adm-novikov}`.
    pub forward_mismatches: Vec<dim2::Tensor2>,
    /// Lifts violating `{apl-1, adm-novikov} <=> (-2)-algebra {pre-lie, novikov}`.
    pub converse_mismatches: Vec<dim2::Tensor2>,
    /// Lifts with `{apl-1, adm-novikov}` but not `apl-2` (none exist in
    /// characteristic 0).
    pub apl2_violations: Vec<dim2::Tensor2>,
}

/// Verifies, over every dim-2 tensor with entries drawn from `values`
/// (a transversal of a prime field, checked in characteristic 0), that
///
/// * `A` is Novikov iff its 2-algebra is admissible Novikov, and
/// * `A` is admissible Novikov iff its (-2)-algebra is Novikov, and
/// * admissible Novikov implies the second anti-pre-Lie identity.
pub fn q_correspondence_exhaustive(values: &[i64]) -> QCorrespondenceOutcome {
    let mut out = QCorrespondenceOutcome {
        tensors: 0,
        novikov_count: 0,
        admissible_count: 0,
        forward_mismatches: Vec::new(),
        converse_mismatches: Vec::new(),
        apl2_violations: Vec::new(),
    };
    for t in dim2::enumerate_tensors(values) {
        out.tensors += 1;
        let is_nov = dim2::is_pre_lie(&t) && dim2::is_novikov_right(&t);
        let two_alg = dim2::q_transform(&t, 2);
        let two_is_adm = dim2::is_anti_pre_lie_1(&two_alg) && dim2::is_admissible_novikov(&two_alg);
        if is_nov {
            out.novikov_count += 1;
        }
        if is_nov != two_is_adm {
            out.forward_mismatches.push(t);
        }
        let is_adm = dim2::is_anti_pre_lie_1(&t) && dim2::is_admissible_novikov(&t);
        let minus_two = dim2::q_transform(&t, -2);
        let minus_two_is_nov = dim2::is_pre_lie(&minus_two) && dim2::is_novikov_right(&minus_two);
        if is_adm {
            out.admissible_count += 1;
            if !dim2::is_anti_pre_lie_2(&t) {
                out.apl2_violations.push(t);
            }
        }
        if is_adm != minus_two_is_nov {
            out.converse_mismatches.push(t);
        }
    }
    out
}
