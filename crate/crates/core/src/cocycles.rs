//! Exact solvers for bilinear-form conditions (commutative 2-cocycles,
//! invariant forms) and the compatible product induced by a nondegenerate
//! commutative 2-cocycle.

use crate::algebra::{Algebra, AlgebraRole};
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::identities::{check_identity, IdentityId};
use crate::linalg::{LinearMap, Matrix};
use crate::rep::Representation;
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// Linear condition a bilinear form can satisfy relative to an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormMode {
    /// `B([x,y],z) + B([y,z],x) + B([z,x],y) = 0` on a bracket algebra.
    Cocycle,
    /// `B(x o y, z) = B(y, [x, z])` on a product algebra.
    AplInvariant,
    /// `B(x . y, z) = B(x, y . z)` on a product algebra.
    AssocInvariant,
    /// `B(x * y, z) = -B(y, x * z + z * x)`, the condition on a Novikov
    /// algebra matching invariance on its 2-algebra.
    NovikovInvariance,
}

impl FormMode {
    pub fn token(&self) -> &'static str {
        match self {
            FormMode::Cocycle => "cocycle",
            FormMode::AplInvariant => "apl-invariant",
            FormMode::AssocInvariant => "assoc-invariant",
            FormMode::NovikovInvariance => "novikov-invariance",
        }
    }

    pub fn parse(s: &str) -> Result<FormMode> {
        match s {
            "cocycle" => Ok(FormMode::Cocycle),
            "apl-invariant" => Ok(FormMode::AplInvariant),
            "assoc-invariant" => Ok(FormMode::AssocInvariant),
            "novikov-invariance" => Ok(FormMode::NovikovInvariance),
            _ => Err(Error::Unsupported(format!("unknown form mode `{s}`"))),
        }
    }

    fn check_role(&self, alg: &Algebra) -> Result<()> {
        let want = match self {
            FormMode::Cocycle => AlgebraRole::Bracket,
            _ => AlgebraRole::Product,
        };
        if alg.role() != want {
            return Err(Error::Precondition(format!(
                "form mode `{}` expects an algebra tagged {:?}",
                self.token(),
                want
            )));
        }
        Ok(())
    }
}

/// Residual of the mode's condition at the basis triple `(i, j, k)`:
/// one scalar per triple.
fn form_residual(
    alg: &Algebra,
    b: &BilinearForm,
    mode: FormMode,
    i: usize,
    j: usize,
    k: usize,
) -> Scalar {
    let n = alg.dim();
    let eval_vec_basis = |v: &[Scalar], t: usize| -> Scalar {
        let mut acc = Scalar::zero();
        for (m, vm) in v.iter().enumerate() {
            if vm.is_zero() {
                continue;
            }
            acc = acc.add(&vm.mul(b.get(m, t)));
        }
        acc
    };
    let eval_basis_vec = |t: usize, v: &[Scalar]| -> Scalar {
        let mut acc = Scalar::zero();
        for (m, vm) in v.iter().enumerate() {
            if vm.is_zero() {
                continue;
            }
            acc = acc.add(&vm.mul(b.get(t, m)));
        }
        acc
    };
    let comm = |x: usize, y: usize| -> Vec<Scalar> {
        (0..n)
            .map(|m| alg.coeff(x, y, m).sub(alg.coeff(y, x, m)))
            .collect()
    };
    match mode {
        FormMode::Cocycle => {
            // the algebra is the bracket itself
            let t1 = eval_vec_basis(alg.basis_product(i, j), k);
            let t2 = eval_vec_basis(alg.basis_product(j, k), i);
            let t3 = eval_vec_basis(alg.basis_product(k, i), j);
            t1.add(&t2).add(&t3)
        }
        FormMode::AplInvariant => {
            let t1 = eval_vec_basis(alg.basis_product(i, j), k);
            let t2 = eval_basis_vec(j, &comm(i, k));
            t1.sub(&t2)
        }
        FormMode::AssocInvariant => {
            let t1 = eval_vec_basis(alg.basis_product(i, j), k);
            let t2 = eval_basis_vec(i, alg.basis_product(j, k));
            t1.sub(&t2)
        }
        FormMode::NovikovInvariance => {
            let t1 = eval_vec_basis(alg.basis_product(i, j), k);
            let t2 = eval_basis_vec(j, alg.basis_product(i, k));
            let t3 = eval_basis_vec(j, alg.basis_product(k, i));
            t1.add(&t2).add(&t3)
        }
    }
}

/// Checks whether a given form satisfies the mode's condition.
pub fn check_form(alg: &Algebra, b: &BilinearForm, mode: FormMode) -> Result<CheckReport> {
    if b.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            context: "check_form",
            expected: alg.dim(),
            got: b.dim(),
        });
    }
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = form_residual(alg, b, mode, i, j, k);
                if !r.is_zero() {
                    return Ok(CheckReport::fail(
                        mode.token(),
                        vec![i as i64, j as i64, k as i64],
                        vec![r],
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass())
}

/// Basis of a solution space of bilinear forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSpace {
    ambient_dim: usize,
    symmetric: bool,
    basis: Vec<BilinearForm>,
}

impl FormSpace {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn basis(&self) -> &[BilinearForm] {
        &self.basis
    }

    /// Exact membership test.
    pub fn contains(&self, b: &BilinearForm) -> bool {
        if b.dim() != self.ambient_dim {
            return false;
        }
        let n = self.ambient_dim;
        let cols = self.basis.len();
        if cols == 0 {
            return b.matrix().is_zero();
        }
        let a = Matrix::from_fn(n * n, cols, |r, c| self.basis[c].get(r / n, r % n).clone());
        let target: Vec<Scalar> = (0..n * n).map(|r| b.get(r / n, r % n).clone()).collect();
        match a.solve(&target) {
            None => false,
            Some(x) => {
                // consistency of solve already guarantees membership, but the
                // system may be underdetermined; verify exactly
                let mut acc = Matrix::zero(n, n);
                for (c, coeff) in x.iter().enumerate() {
                    acc = acc.add(&self.basis[c].matrix().scale(coeff));
                }
                &acc == b.matrix()
            }
        }
    }
}

/// Packing of the unknown form: symmetric packs `(i <= j)` pairs
/// lexicographically, the general case packs row-major. This order is part
/// of the wire format.
fn sym_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * (2 * n - i + 1) / 2 + (j - i)
}

fn unknown_count(n: usize, symmetric: bool) -> usize {
    if symmetric {
        n * (n + 1) / 2
    } else {
        n * n
    }
}

fn pack_index(n: usize, symmetric: bool, i: usize, j: usize) -> usize {
    if symmetric {
        sym_index(n, i, j)
    } else {
        i * n + j
    }
}

/// One linear equation per basis triple and mode, rows stacked over all
/// modes then all triples in lexicographic order.
fn build_equations(alg: &Algebra, modes: &[FormMode], symmetric: bool) -> Matrix {
    let n = alg.dim();
    let cols = unknown_count(n, symmetric);
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(modes.len() * n * n * n);
    let comm = |x: usize, y: usize, m: usize| alg.coeff(x, y, m).sub(alg.coeff(y, x, m));
    for &mode in modes {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut row = vec![Scalar::zero(); cols];
                    let mut add = |a: usize, b_idx: usize, v: Scalar| {
                        if v.is_zero() {
                            return;
                        }
                        let idx = pack_index(n, symmetric, a, b_idx);
                        row[idx] = row[idx].add(&v);
                    };
                    match mode {
                        FormMode::Cocycle => {
                            for m in 0..n {
                                add(m, k, alg.coeff(i, j, m).clone());
                                add(m, i, alg.coeff(j, k, m).clone());
                                add(m, j, alg.coeff(k, i, m).clone());
                            }
                        }
                        FormMode::AplInvariant => {
                            for m in 0..n {
                                add(m, k, alg.coeff(i, j, m).clone());
                                add(j, m, comm(i, k, m).neg());
                            }
                        }
                        FormMode::AssocInvariant => {
                            for m in 0..n {
                                add(m, k, alg.coeff(i, j, m).clone());
                                add(i, m, alg.coeff(j, k, m).neg());
                            }
                        }
                        FormMode::NovikovInvariance => {
                            for m in 0..n {
                                add(m, k, alg.coeff(i, j, m).clone());
                                add(j, m, alg.coeff(i, k, m).clone());
                                add(j, m, alg.coeff(k, i, m).clone());
                            }
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(rows)
}

fn unpack_form(n: usize, symmetric: bool, v: &[Scalar]) -> BilinearForm {
    let m = Matrix::from_fn(n, n, |i, j| {
        if symmetric {
            v[sym_index(n, i, j)].clone()
        } else {
            v[i * n + j].clone()
        }
    });
    BilinearForm::new(m).expect("square")
}

/// Exact nullspace basis of the stacked linear system for the mode.
pub fn solve_form_space(alg: &Algebra, mode: FormMode, symmetric: bool) -> Result<FormSpace> {
    solve_form_space_modes(alg, &[mode], symmetric)
}

/// Joint solution space of several conditions at once.
pub fn solve_form_space_modes(
    alg: &Algebra,
    modes: &[FormMode],
    symmetric: bool,
) -> Result<FormSpace> {
    for mode in modes {
        mode.check_role(alg)?;
    }
    let system = build_equations(alg, modes, symmetric);
    let basis = system
        .nullspace()
        .iter()
        .map(|v| unpack_form(alg.dim(), symmetric, v))
        .collect();
    Ok(FormSpace {
        ambient_dim: alg.dim(),
        symmetric,
        basis,
    })
}

/// Deterministic search for a member with nonzero determinant: integer
/// coefficient vectors are enumerated in expanding max-norm shells
/// (lexicographic inside each shell), radius 1 up to `max_radius`.
/// `None` means "not found within the box", never "none exists".
pub const DEFAULT_SEARCH_RADIUS: i64 = 3;

pub fn nondegenerate_member(space: &FormSpace, max_radius: i64) -> Option<BilinearForm> {
    let mats: Vec<&Matrix> = space.basis.iter().map(BilinearForm::matrix).collect();
    search_nonsingular_combination(&mats, max_radius).map(|m| BilinearForm::new(m).expect("square"))
}

fn search_nonsingular_combination(basis: &[&Matrix], max_radius: i64) -> Option<Matrix> {
    if basis.is_empty() {
        return None;
    }
    let n = basis[0].rows();
    if n != basis[0].cols() {
        return None;
    }
    let k = basis.len();
    for radius in 1..=max_radius {
        let mut coeffs = vec![-radius; k];
        'shell: loop {
            // only the outer shell of the box; inner points were seen at
            // smaller radii
            if coeffs.iter().any(|c| c.abs() == radius) {
                let mut acc = Matrix::zero(n, n);
                for (c, m) in coeffs.iter().zip(basis) {
                    if *c != 0 {
                        acc = acc.add(&m.scale(&Scalar::from_int(*c)));
                    }
                }
                if !acc.det().is_zero() {
                    return Some(acc);
                }
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    break 'shell;
                }
                pos -= 1;
                if coeffs[pos] < radius {
                    coeffs[pos] += 1;
                    for c in coeffs.iter_mut().skip(pos + 1) {
                        *c = -radius;
                    }
                    break;
                }
            }
        }
    }
    None
}

/// The unique compatible product determined by `B(x o y, z) = B(y, [x, z])`
/// for a nondegenerate symmetric commutative 2-cocycle on a Lie algebra.
/// The result is an anti-pre-Lie algebra whose commutator is `lie`.
pub fn induce_compatible_product(lie: &Algebra, b: &BilinearForm) -> Result<Algebra> {
    if lie.role() != AlgebraRole::Bracket {
        return Err(Error::Precondition(
            "induce_compatible_product expects a bracket-tagged algebra".into(),
        ));
    }
    if !check_identity(lie, IdentityId::Jacobi).pass {
        return Err(Error::Precondition(
            "induce_compatible_product: the bracket does not satisfy jacobi".into(),
        ));
    }
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !b.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    if !check_form(lie, b, FormMode::Cocycle)?.pass {
        return Err(Error::Precondition(
            "induce_compatible_product: the form is not a commutative 2-cocycle".into(),
        ));
    }
    let n = lie.dim();
    let m_inv = b.matrix().inverse()?;
    let mut out = Algebra::zero(n);
    for i in 0..n {
        for j in 0..n {
            // w_k = B(e_j, [e_i, e_k])
            let w: Vec<Scalar> = (0..n)
                .map(|k| {
                    let mut acc = Scalar::zero();
                    for m in 0..n {
                        let c = lie.coeff(i, k, m);
                        if c.is_zero() {
                            continue;
                        }
                        acc = acc.add(&c.mul(b.get(j, m)));
                    }
                    acc
                })
                .collect();
            let u = m_inv.mul_vec(&w);
            for (k, v) in u.into_iter().enumerate() {
                out.set_coeff(i, j, k, v);
            }
        }
    }
    let labels: Vec<&str> = lie.basis_labels().iter().map(String::as_str).collect();
    Ok(out.with_labels(&labels))
}

/// Quadrilinear admissibility criterion
/// `2 B([x,w],[y,z]) = B([x o y, w], z) - B([x o z, w], y)`:
/// pass iff the product induced by `B` is an admissible Novikov algebra.
pub fn check_admissibility_form(lie: &Algebra, b: &BilinearForm) -> Result<CheckReport> {
    let induced = induce_compatible_product(lie, b)?;
    let n = lie.dim();
    let bracket_vec_basis = |v: &[Scalar], t: usize| lie.mul_vec_basis(v, t);
    let two = Scalar::from_int(2);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    // 2 B([x,w],[y,z])
                    let xw = lie.basis_product(i, l);
                    let yz = lie.basis_product(j, k);
                    let mut lhs = Scalar::zero();
                    for (a, va) in xw.iter().enumerate() {
                        if va.is_zero() {
                            continue;
                        }
                        for (c, vc) in yz.iter().enumerate() {
                            if vc.is_zero() {
                                continue;
                            }
                            lhs = lhs.add(&va.mul(vc).mul(b.get(a, c)));
                        }
                    }
                    lhs = lhs.mul(&two);
                    // B([x o y, w], z) - B([x o z, w], y)
                    let t1v = bracket_vec_basis(induced.basis_product(i, j), l);
                    let t2v = bracket_vec_basis(induced.basis_product(i, k), l);
                    let eval = |v: &[Scalar], t: usize| -> Scalar {
                        let mut acc = Scalar::zero();
                        for (a, va) in v.iter().enumerate() {
                            if va.is_zero() {
                                continue;
                            }
                            acc = acc.add(&va.mul(b.get(a, t)));
                        }
                        acc
                    };
                    let rhs = eval(&t1v, k).sub(&eval(&t2v, j));
                    let r = lhs.sub(&rhs);
                    if !r.is_zero() {
                        return Ok(CheckReport::fail(
                            "admissibility-form",
                            vec![i as i64, j as i64, k as i64, l as i64],
                            vec![r],
                        ));
                    }
                }
            }
        }
    }
    Ok(CheckReport::pass())
}

/// Solution space of intertwiners `phi rho_A(x) = rho_B(x) phi`.
#[derive(Debug, Clone)]
pub struct MapSpace {
    rows: usize,
    cols: usize,
    basis: Vec<LinearMap>,
}

impl MapSpace {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LinearMap] {
        &self.basis
    }

    pub fn contains(&self, phi: &LinearMap) -> bool {
        if phi.rows() != self.rows || phi.cols() != self.cols {
            return false;
        }
        if self.basis.is_empty() {
            return phi.is_zero();
        }
        let len = self.rows * self.cols;
        let a = Matrix::from_fn(len, self.basis.len(), |r, c| {
            self.basis[c].get(r / self.cols, r % self.cols).clone()
        });
        let target: Vec<Scalar> = (0..len)
            .map(|r| phi.get(r / self.cols, r % self.cols).clone())
            .collect();
        match a.solve(&target) {
            None => false,
            Some(x) => {
                let mut acc = Matrix::zero(self.rows, self.cols);
                for (c, coeff) in x.iter().enumerate() {
                    acc = acc.add(&self.basis[c].scale(coeff));
                }
                &acc == phi
            }
        }
    }

    /// Deterministic expanding-box search for an invertible member.
    pub fn invertible_member(&self, max_radius: i64) -> Option<LinearMap> {
        if self.rows != self.cols {
            return None;
        }
        let mats: Vec<&Matrix> = self.basis.iter().collect();
        search_nonsingular_combination(&mats, max_radius)
    }
}

/// Exact solution space of `phi rho_A(x) = rho_B(x) phi` over all basis `x`.
/// The two representations must act for the same Lie algebra; they are
/// equivalent iff the space has an invertible member.
pub fn solve_intertwiners(rho_a: &Representation, rho_b: &Representation) -> Result<MapSpace> {
    if rho_a.algebra_dim() != rho_b.algebra_dim() {
        return Err(Error::DimensionMismatch {
            context: "solve_intertwiners",
            expected: rho_a.algebra_dim(),
            got: rho_b.algebra_dim(),
        });
    }
    let m1 = rho_a.carrier_dim();
    let m2 = rho_b.carrier_dim();
    let unknowns = m1 * m2; // phi is m2 x m1, packed row-major
    let mut rows = Vec::new();
    for t in 0..rho_a.algebra_dim() {
        let ra = rho_a.matrix(t);
        let rb = rho_b.matrix(t);
        for r in 0..m2 {
            for c in 0..m1 {
                let mut row = vec![Scalar::zero(); unknowns];
                // (phi ra)[r][c] = sum_s phi[r][s] ra[s][c]
                for s in 0..m1 {
                    let v = ra.get(s, c);
                    if !v.is_zero() {
                        row[r * m1 + s] = row[r * m1 + s].add(v);
                    }
                }
                // -(rb phi)[r][c] = -sum_s rb[r][s] phi[s][c]
                for s in 0..m2 {
                    let v = rb.get(r, s);
                    if !v.is_zero() {
                        row[s * m1 + c] = row[s * m1 + c].sub(v);
                    }
                }
                rows.push(row);
            }
        }
    }
    let basis = Matrix::from_rows(rows)
        .nullspace()
        .iter()
        .map(|v| Matrix::from_fn(m2, m1, |r, c| v[r * m1 + c].clone()))
        .collect();
    Ok(MapSpace {
        rows: m2,
        cols: m1,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{self, CatalogId};

    fn sl2() -> Algebra {
        classify::catalog(&CatalogId::Sl2Lie)
            .unwrap()
            .into_algebra()
    }

    fn sl2_form() -> BilinearForm {
        // B(x, y) = -1, B(h, h) = 4 in basis order (x, h, y)
        BilinearForm::symmetric_from_entries(
            3,
            &[(0, 2, Scalar::from_int(-1)), (1, 1, Scalar::from_int(4))],
        )
    }

    #[test]
    fn dim2_nonabelian_has_full_symmetric_cocycle_space() {
        let lie = classify::catalog(&CatalogId::Dim2NonabelianLie)
            .unwrap()
            .into_algebra();
        let space = solve_form_space(&lie, FormMode::Cocycle, true).unwrap();
        assert_eq!(space.dim(), 3);
    }

    #[test]
    fn abelian_cocycle_space_is_everything() {
        let abelian = Algebra::zero(3).with_role(AlgebraRole::Bracket);
        let space = solve_form_space(&abelian, FormMode::Cocycle, true).unwrap();
        assert_eq!(space.dim(), 6);
    }

    #[test]
    fn general_form_space_contains_the_symmetric_one() {
        // over n^2 unknowns instead of n(n+1)/2; on the 2-dim non-abelian
        // Lie algebra the cyclic condition vanishes identically, so every
        // bilinear form qualifies
        let lie = classify::catalog(&CatalogId::Dim2NonabelianLie)
            .unwrap()
            .into_algebra();
        let general = solve_form_space(&lie, FormMode::Cocycle, false).unwrap();
        assert_eq!(general.dim(), 4);
        let symmetric = solve_form_space(&lie, FormMode::Cocycle, true).unwrap();
        for b in symmetric.basis() {
            assert!(general.contains(b));
        }
    }

    #[test]
    fn sl2_cocycle_space_contains_paper_form() {
        let space = solve_form_space(&sl2(), FormMode::Cocycle, true).unwrap();
        let b = sl2_form();
        assert!(check_form(&sl2(), &b, FormMode::Cocycle).unwrap().pass);
        assert!(space.contains(&b));
        for member in space.basis() {
            assert!(check_form(&sl2(), member, FormMode::Cocycle).unwrap().pass);
        }
    }

    #[test]
    fn nondegenerate_member_search() {
        // span of the sl2 form alone: the member found is the form itself
        let space = FormSpace {
            ambient_dim: 3,
            symmetric: true,
            basis: vec![sl2_form()],
        };
        let found = nondegenerate_member(&space, DEFAULT_SEARCH_RADIUS).unwrap();
        assert!(!found.matrix().det().is_zero());
        // zero space: absent
        let empty = FormSpace {
            ambient_dim: 2,
            symmetric: true,
            basis: vec![],
        };
        assert!(nondegenerate_member(&empty, DEFAULT_SEARCH_RADIUS).is_none());
        // all symmetric forms in dim 2: found within radius 1
        let abelian = Algebra::zero(2).with_role(AlgebraRole::Bracket);
        let all = solve_form_space(&abelian, FormMode::Cocycle, true).unwrap();
        let member = nondegenerate_member(&all, 1).unwrap();
        assert!(!member.matrix().det().is_zero());
    }

    #[test]
    fn sl2_induced_product_matches_table() {
        let induced = induce_compatible_product(&sl2(), &sl2_form()).unwrap();
        let expected = classify::catalog(&CatalogId::Sl2Apl)
            .unwrap()
            .into_algebra();
        assert_eq!(induced.tensor(), expected.tensor());
    }

    #[test]
    fn abelian_with_identity_form_induces_zero() {
        let abelian = Algebra::zero(2).with_role(AlgebraRole::Bracket);
        let induced = induce_compatible_product(&abelian, &BilinearForm::identity(2)).unwrap();
        assert!(induced.is_zero_algebra());
    }

    #[test]
    fn dim2_nonabelian_identity_form_induced_product() {
        // [e1, e2] = a e1 + b e2 with a = b = 1 and B = Id gives
        // e1oe1 = a e2, e1oe2 = b e2, e2oe1 = -a e1, e2oe2 = -b e1
        let lie = Algebra::from_int_entries(
            2,
            AlgebraRole::Bracket,
            &[(0, 1, 0, 1), (0, 1, 1, 1), (1, 0, 0, -1), (1, 0, 1, -1)],
        );
        let induced = induce_compatible_product(&lie, &BilinearForm::identity(2)).unwrap();
        let expected = Algebra::from_int_entries(
            2,
            AlgebraRole::Product,
            &[(0, 0, 1, 1), (0, 1, 1, 1), (1, 0, 0, -1), (1, 1, 0, -1)],
        );
        assert_eq!(induced.tensor(), expected.tensor());
    }

    #[test]
    fn induce_rejects_bad_inputs() {
        let degenerate = BilinearForm::zero(3);
        assert!(matches!(
            induce_compatible_product(&sl2(), &degenerate),
            Err(Error::DegenerateForm)
        ));
        let skew = BilinearForm::from_int_rows(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]]);
        assert!(matches!(
            induce_compatible_product(&sl2(), &skew),
            Err(Error::NotSymmetric)
        ));
    }

    #[test]
    fn admissibility_form_examples() {
        // sl(2): fails (the induced product is not admissible Novikov)
        assert!(!check_admissibility_form(&sl2(), &sl2_form()).unwrap().pass);
        // abelian + identity: passes
        let abelian = Algebra::zero(2).with_role(AlgebraRole::Bracket);
        assert!(
            check_admissibility_form(&abelian, &BilinearForm::identity(2))
                .unwrap()
                .pass
        );
        // cross-check against the identity profile of the induced product
        let lie =
            Algebra::from_int_entries(2, AlgebraRole::Bracket, &[(0, 1, 1, 1), (1, 0, 1, -1)]);
        // [e1,e2] = e2 (a = 0, b = 1 case)
        let b = BilinearForm::identity(2);
        let induced = induce_compatible_product(&lie, &b).unwrap();
        let direct = check_identity(&induced, IdentityId::AdmissibleNovikov).pass
            && check_identity(&induced, IdentityId::AntiPreLie1).pass;
        assert_eq!(check_admissibility_form(&lie, &b).unwrap().pass, direct);
    }

    #[test]
    fn intertwiner_spaces() {
        let lie = sl2();
        let ad = Representation::adjoint(&lie);
        // rho vs itself contains the identity
        let space = solve_intertwiners(&ad, &ad).unwrap();
        assert!(space.contains(&Matrix::identity(3)));
        // ad vs trivial of equal dimension: zero space
        let trivial = Representation::trivial(3, 3);
        let zero_space = solve_intertwiners(&ad, &trivial).unwrap();
        assert_eq!(zero_space.dim(), 0);
        // -L of the induced sl2 product vs ad*: the Gram matrix intertwines
        let apl = classify::catalog(&CatalogId::Sl2Apl)
            .unwrap()
            .into_algebra();
        let neg_l = Representation::neg_left_mult(&apl);
        let coad = ad.dual();
        let space = solve_intertwiners(&neg_l, &coad).unwrap();
        assert!(space.contains(sl2_form().matrix()));
        let inv = space.invertible_member(DEFAULT_SEARCH_RADIUS).unwrap();
        assert!(!inv.det().is_zero());
    }
}
