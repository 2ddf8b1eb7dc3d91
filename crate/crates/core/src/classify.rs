//! Built-in catalog of named algebras, expected-profile verification,
//! idempotent-based isomorphism fingerprints and stored isomorphism
//! witnesses.

use std::fmt;

use crate::algebra::{Algebra, AlgebraRole, Side};
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::identities::{check_identity, IdentityId};
use crate::linalg::{LinearMap, Matrix};
use crate::poly::Poly;
use crate::report::CheckReport;
use crate::scalar::{FieldMode, Scalar};

/// Identifier of a catalog entry, with parameters where the family has them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogId {
    A1,
    A2 {
        lambda: Scalar,
    },
    A3,
    /// rejects `lambda = -1`
    A4 {
        lambda: Scalar,
    },
    A5,
    B1 {
        n: usize,
    },
    B2 {
        k: usize,
        n: usize,
    },
    B3 {
        n: usize,
    },
    B4 {
        k: usize,
        n: usize,
    },
    B5 {
        n: usize,
    },
    B6 {
        k: usize,
        n: usize,
    },
    N1 {
        lambda: Scalar,
    },
    N2,
    NPrime1,
    NPrime2,
    /// rejects `l` in `{0, 1}`
    NPrime3 {
        l: Scalar,
    },
    NPrime4,
    AN1 {
        lambda: Scalar,
    },
    AN2,
    Sl2Apl,
    Sl2Lie,
    Dim2NonabelianLie,
    Dim2AssocFrob,
    /// `F[x]/(x^n)` with the derivation `x^k d/dx`
    TruncPoly {
        n: usize,
        k: usize,
    },
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::A1 => write!(f, "A1"),
            CatalogId::A2 { lambda } => write!(f, "A2?lambda={lambda}"),
            CatalogId::A3 => write!(f, "A3"),
            CatalogId::A4 { lambda } => write!(f, "A4?lambda={lambda}"),
            CatalogId::A5 => write!(f, "A5"),
            CatalogId::B1 { n } => write!(f, "B1?n={n}"),
            CatalogId::B2 { k, n } => write!(f, "B2?k={k}&n={n}"),
            CatalogId::B3 { n } => write!(f, "B3?n={n}"),
            CatalogId::B4 { k, n } => write!(f, "B4?k={k}&n={n}"),
            CatalogId::B5 { n } => write!(f, "B5?n={n}"),
            CatalogId::B6 { k, n } => write!(f, "B6?k={k}&n={n}"),
            CatalogId::N1 { lambda } => write!(f, "N1?lambda={lambda}"),
            CatalogId::N2 => write!(f, "N2"),
            CatalogId::NPrime1 => write!(f, "NPRIME1"),
            CatalogId::NPrime2 => write!(f, "NPRIME2"),
            CatalogId::NPrime3 { l } => write!(f, "NPRIME3?l={l}"),
            CatalogId::NPrime4 => write!(f, "NPRIME4"),
            CatalogId::AN1 { lambda } => write!(f, "AN1?lambda={lambda}"),
            CatalogId::AN2 => write!(f, "AN2"),
            CatalogId::Sl2Apl => write!(f, "SL2_APL"),
            CatalogId::Sl2Lie => write!(f, "SL2_LIE"),
            CatalogId::Dim2NonabelianLie => write!(f, "DIM2_NONABELIAN_LIE"),
            CatalogId::Dim2AssocFrob => write!(f, "DIM2_ASSOC_FROB"),
            CatalogId::TruncPoly { n, k } => write!(f, "TRUNC_POLY?n={n}&k={k}"),
        }
    }
}

impl CatalogId {
    /// Parses a CLI token such as `A2?lambda=-1/2` or `B4?k=2&n=3`.
    /// Scalar parameters are read in the given field mode.
    pub fn parse_token(token: &str, mode: FieldMode) -> Result<CatalogId> {
        let (name, query) = match token.split_once('?') {
            Some((n, q)) => (n, Some(q)),
            None => (token, None),
        };
        let name = name.to_ascii_lowercase().replace(['-', '\''], "_");
        let mut params: Vec<(String, String)> = Vec::new();
        if let Some(q) = query {
            for pair in q.split('&') {
                let (k, v) = pair.split_once('=').ok_or_else(|| {
                    Error::Unsupported(format!("malformed catalog parameter `{pair}`"))
                })?;
                params.push((k.trim().to_ascii_lowercase(), v.trim().to_string()));
            }
        }
        let scalar = |key: &str| -> Result<Scalar> {
            let v = params
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| {
                    Error::OutOfDomain(format!("catalog id `{token}` needs parameter `{key}`"))
                })?;
            Ok(Scalar::parse(v, mode)?.0)
        };
        let int = |key: &str| -> Result<usize> {
            let v = params
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| {
                    Error::OutOfDomain(format!("catalog id `{token}` needs parameter `{key}`"))
                })?;
            v.parse()
                .map_err(|_| Error::OutOfDomain(format!("parameter `{key}={v}` is not an integer")))
        };
        Ok(match name.as_str() {
            "a1" => CatalogId::A1,
            "a2" => CatalogId::A2 {
                lambda: scalar("lambda")?,
            },
            "a3" => CatalogId::A3,
            "a4" => CatalogId::A4 {
                lambda: scalar("lambda")?,
            },
            "a5" => CatalogId::A5,
            "b1" => CatalogId::B1 { n: int("n")? },
            "b2" => CatalogId::B2 {
                k: int("k")?,
                n: int("n")?,
            },
            "b3" => CatalogId::B3 { n: int("n")? },
            "b4" => CatalogId::B4 {
                k: int("k")?,
                n: int("n")?,
            },
            "b5" => CatalogId::B5 { n: int("n")? },
            "b6" => CatalogId::B6 {
                k: int("k")?,
                n: int("n")?,
            },
            "n1" => CatalogId::N1 {
                lambda: scalar("lambda")?,
            },
            "n2" => CatalogId::N2,
            "nprime1" | "n_1" => CatalogId::NPrime1,
            "nprime2" | "n_2" => CatalogId::NPrime2,
            "nprime3" | "n_3" => CatalogId::NPrime3 { l: scalar("l")? },
            "nprime4" | "n_4" => CatalogId::NPrime4,
            "an1" => CatalogId::AN1 {
                lambda: scalar("lambda")?,
            },
            "an2" => CatalogId::AN2,
            "sl2_apl" => CatalogId::Sl2Apl,
            "sl2_lie" => CatalogId::Sl2Lie,
            "dim2_nonabelian_lie" => CatalogId::Dim2NonabelianLie,
            "dim2_assoc_frob" => CatalogId::Dim2AssocFrob,
            "trunc_poly" => CatalogId::TruncPoly {
                n: int("n")?,
                k: int("k")?,
            },
            _ => return Err(Error::Unsupported(format!("unknown catalog id `{token}`"))),
        })
    }
}

/// What a catalog entry provides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogObject {
    Algebra(Algebra),
    AlgebraWithForm {
        algebra: Algebra,
        form: BilinearForm,
    },
    AlgebraWithDerivation {
        algebra: Algebra,
        derivation: LinearMap,
    },
}

impl CatalogObject {
    pub fn algebra(&self) -> &Algebra {
        match self {
            CatalogObject::Algebra(a) => a,
            CatalogObject::AlgebraWithForm { algebra, .. } => algebra,
            CatalogObject::AlgebraWithDerivation { algebra, .. } => algebra,
        }
    }

    pub fn into_algebra(self) -> Algebra {
        match self {
            CatalogObject::Algebra(a) => a,
            CatalogObject::AlgebraWithForm { algebra, .. } => algebra,
            CatalogObject::AlgebraWithDerivation { algebra, .. } => algebra,
        }
    }

    pub fn form(&self) -> Option<&BilinearForm> {
        match self {
            CatalogObject::AlgebraWithForm { form, .. } => Some(form),
            _ => None,
        }
    }

    pub fn derivation(&self) -> Option<&LinearMap> {
        match self {
            CatalogObject::AlgebraWithDerivation { derivation, .. } => Some(derivation),
            _ => None,
        }
    }
}

fn sc(v: i64) -> Scalar {
    Scalar::from_int(v)
}

/// Exact structure tensors of every named algebra in the catalog.
pub fn catalog(id: &CatalogId) -> Result<CatalogObject> {
    use CatalogObject::Algebra as Alg;
    let one = Scalar::one;
    let obj = match id {
        CatalogId::A1 => Alg(Algebra::from_int_entries(
            2,
            AlgebraRole::Product,
            &[(0, 0, 1, -1), (1, 0, 0, -1)],
        )),
        CatalogId::A2 { lambda } => Alg(Algebra::from_entries(
            2,
            AlgebraRole::Product,
            &[((1, 0, 0), sc(-1)), ((1, 1, 1), lambda.clone())],
        )),
        CatalogId::A3 => Alg(Algebra::from_int_entries(
            2,
            AlgebraRole::Product,
            &[(1, 0, 0, -1), (1, 1, 0, 1), (1, 1, 1, -1)],
        )),
        CatalogId::A4 { lambda } => {
            if *lambda == sc(-1) {
                return Err(Error::OutOfDomain("A4 requires lambda != -1".into()));
            }
            Alg(an1_tensor(lambda))
        }
        CatalogId::A5 | CatalogId::AN2 => Alg(Algebra::from_int_entries(
            2,
            AlgebraRole::Product,
            &[(0, 1, 0, -1), (1, 0, 0, -2), (1, 1, 0, 1), (1, 1, 1, -3)],
        )),
        CatalogId::B1 { n } => {
            check_dim("B1", *n, 1)?;
            Alg(Algebra::zero(*n))
        }
        CatalogId::B2 { k, n } => {
            check_range("B2", *k, 2, *n)?;
            let entries: Vec<_> = (1..*k).map(|j| (j, j, 0, 1)).collect();
            Alg(Algebra::from_int_entries(
                *n,
                AlgebraRole::Product,
                &entries,
            ))
        }
        CatalogId::B3 { n } => {
            check_dim("B3", *n, 2)?;
            let entries: Vec<_> = (1..*n).map(|j| (0, j, j, 1)).collect();
            Alg(Algebra::from_int_entries(
                *n,
                AlgebraRole::Product,
                &entries,
            ))
        }
        CatalogId::B4 { k, n } => {
            check_range("B4", *k, 2, *n)?;
            let mut entries: Vec<_> = (1..*n).map(|j| (0, j, j, 1)).collect();
            entries.extend((1..*k).map(|l| (l, l, 0, 1)));
            Alg(Algebra::from_int_entries(
                *n,
                AlgebraRole::Product,
                &entries,
            ))
        }
        CatalogId::B5 { n } => {
            check_dim("B5", *n, 2)?;
            let mut entries = vec![(0, 1, 0, -1)];
            entries.extend((1..*n).map(|j| (1, j, j, 1)));
            Alg(Algebra::from_int_entries(
                *n,
                AlgebraRole::Product,
                &entries,
            ))
        }
        CatalogId::B6 { k, n } => {
            check_range("B6", *k, 3, *n)?;
            let mut entries = vec![(0, 1, 0, -1), (1, 1, 1, 1)];
            entries.extend((2..*n).map(|j| (1, j, j, 1)));
            entries.extend((2..*k).map(|l| (l, l, 0, 1)));
            Alg(Algebra::from_int_entries(
                *n,
                AlgebraRole::Product,
                &entries,
            ))
        }
        CatalogId::N1 { lambda } => {
            let om = one().sub(lambda); // 1 - lambda
            Alg(Algebra::from_entries(
                2,
                AlgebraRole::Product,
                &[
                    ((0, 1, 0), om.clone()),
                    ((1, 0, 0), lambda.add(&sc(2)).neg()),
                    ((1, 1, 1), om),
                ],
            ))
        }
        CatalogId::N2 => Alg(Algebra::from_int_entries(
            2,
            AlgebraRole::Product,
            &[(0, 1, 0, 3), (1, 1, 0, -1), (1, 1, 1, 3)],
        )),
        CatalogId::NPrime1 => Alg(Algebra::from_int_entries(
            2,
            AlgebraRole::Product,
            &[(1, 0, 0, -1)],
        )),
        CatalogId::NPrime2 => Alg(Algebra::from_int_entries(
            2,
            AlgebraRole::Product,
            &[(0, 1, 0, 1), (1, 1, 1, 1)],
        )),
        CatalogId::NPrime3 { l } => {
            if l.is_zero() || l.is_one() {
                return Err(Error::OutOfDomain(
                    "NPRIME3 requires l outside {0, 1}".into(),
                ));
            }
            Alg(Algebra::from_entries(
                2,
                AlgebraRole::Product,
                &[
                    ((0, 1, 0), one()),
                    ((1, 0, 0), l.clone()),
                    ((1, 1, 1), one()),
                ],
            ))
        }
        CatalogId::NPrime4 => Alg(Algebra::from_int_entries(
            2,
            AlgebraRole::Product,
            &[(0, 1, 0, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
        )),
        CatalogId::AN1 { lambda } => Alg(an1_tensor(lambda)),
        CatalogId::Sl2Apl => Alg(Algebra::from_entries(
            3,
            AlgebraRole::Product,
            &[
                ((0, 1, 0), sc(-4)),
                ((0, 2, 1), Scalar::ratio(1, 2)),
                ((1, 0, 0), sc(-2)),
                ((1, 2, 2), sc(2)),
                ((2, 0, 1), Scalar::ratio(-1, 2)),
                ((2, 1, 2), sc(4)),
            ],
        )
        .with_labels(&["x", "h", "y"])),
        CatalogId::Sl2Lie => Alg(Algebra::from_int_entries(
            3,
            AlgebraRole::Bracket,
            &[
                (0, 1, 0, -2),
                (1, 0, 0, 2),
                (1, 2, 2, -2),
                (2, 1, 2, 2),
                (0, 2, 1, 1),
                (2, 0, 1, -1),
            ],
        )
        .with_labels(&["x", "h", "y"])),
        CatalogId::Dim2NonabelianLie => Alg(Algebra::from_int_entries(
            2,
            AlgebraRole::Bracket,
            &[(0, 1, 0, 1), (1, 0, 0, -1)],
        )),
        CatalogId::Dim2AssocFrob => CatalogObject::AlgebraWithForm {
            algebra: Algebra::from_int_entries(
                2,
                AlgebraRole::Product,
                &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
            ),
            form: BilinearForm::from_int_rows(&[&[0, 1], &[1, 0]]),
        },
        CatalogId::TruncPoly { n, k } => {
            check_dim("TRUNC_POLY", *n, 2)?;
            if *k < 1 {
                return Err(Error::OutOfDomain(
                    "TRUNC_POLY requires k >= 1 (d/dx alone does not descend)".into(),
                ));
            }
            let mut entries = Vec::new();
            for i in 0..*n {
                for j in 0..*n {
                    if i + j < *n {
                        entries.push((i, j, i + j, 1));
                    }
                }
            }
            let labels: Vec<String> = (0..*n)
                .map(|i| match i {
                    0 => "1".to_string(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                })
                .collect();
            let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            let algebra = Algebra::from_int_entries(*n, AlgebraRole::Product, &entries)
                .with_labels(&label_refs);
            // P(x^i) = i x^{i+k-1}
            let mut p = Matrix::zero(*n, *n);
            for i in 1..*n {
                let target = i + *k - 1;
                if target < *n {
                    p.set(target, i, sc(i as i64));
                }
            }
            CatalogObject::AlgebraWithDerivation {
                algebra,
                derivation: p,
            }
        }
    };
    Ok(obj)
}

fn an1_tensor(lambda: &Scalar) -> Algebra {
    Algebra::from_entries(
        2,
        AlgebraRole::Product,
        &[
            ((0, 1, 0), lambda.add(&sc(1))),
            ((1, 0, 0), lambda.clone()),
            ((1, 1, 1), lambda.sub(&sc(1))),
        ],
    )
}

fn check_dim(name: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::OutOfDomain(format!("{name} requires n >= {min}")));
    }
    Ok(())
}

fn check_range(name: &str, k: usize, min: usize, n: usize) -> Result<()> {
    if k < min || k > n {
        return Err(Error::OutOfDomain(format!(
            "{name} requires {min} <= k <= n (got k={k}, n={n})"
        )));
    }
    Ok(())
}

/// Frobenius form `B(x^i, x^j) = 1` iff `i + j = n - 1` on `F[x]/(x^n)`.
pub fn trunc_poly_frobenius_form(n: usize) -> BilinearForm {
    BilinearForm::symmetric_from_entries(
        n,
        &(0..n)
            .filter(|i| n > *i && n - 1 - *i >= *i)
            .map(|i| (i, n - 1 - i, Scalar::one()))
            .collect::<Vec<_>>(),
    )
}

/// Result of checking a catalog entry against its expected identity profile.
#[derive(Debug, Clone)]
pub struct CatalogVerification {
    pub id: String,
    /// `(identity, expected_pass, actual report)`
    pub checks: Vec<(IdentityId, bool, CheckReport)>,
    /// Named auxiliary checks (form invariance, derivation law).
    pub extra: Vec<(String, CheckReport)>,
    pub ok: bool,
}

/// Expected identity profile per catalog family.
fn expected_profile(id: &CatalogId) -> (Vec<IdentityId>, Vec<IdentityId>) {
    use IdentityId::*;
    let apl = [AntiPreLie1, AntiPreLie2, AliaLeft, LieAdmissible];
    let comm_assoc = [
        Commutative,
        Associative,
        AntiPreLie1,
        AntiPreLie2,
        AliaLeft,
        LieAdmissible,
        PreLie,
        NovikovRight,
        AdmissibleNovikov,
    ];
    match id {
        CatalogId::A1 => (
            apl.to_vec(),
            vec![
                Commutative,
                PreLie,
                Associative,
                AntiAssociative,
                AdmissibleNovikov,
            ],
        ),
        CatalogId::A2 { lambda } => {
            let mut pass = apl.to_vec();
            pass.push(PreLie);
            let mut fail = vec![Commutative, AntiAssociative];
            if *lambda == sc(-1) {
                pass.push(Associative);
            } else {
                fail.push(Associative);
            }
            if *lambda == sc(-2) {
                pass.push(AdmissibleNovikov);
            } else {
                fail.push(AdmissibleNovikov);
            }
            (pass, fail)
        }
        CatalogId::A3 => (
            [apl.as_slice(), &[PreLie]].concat(),
            vec![Commutative, Associative, AntiAssociative, AdmissibleNovikov],
        ),
        CatalogId::A4 { .. } | CatalogId::A5 | CatalogId::AN2 => (
            [apl.as_slice(), &[AdmissibleNovikov]].concat(),
            vec![Commutative, PreLie, Associative, AntiAssociative],
        ),
        CatalogId::AN1 { lambda } => {
            let mut pass = [apl.as_slice(), &[AdmissibleNovikov]].concat();
            let mut fail = vec![Commutative, AntiAssociative];
            if *lambda == sc(-1) {
                pass.push(PreLie);
            } else {
                fail.push(PreLie);
            }
            (pass, fail)
        }
        CatalogId::B1 { .. } => (IdentityId::ALL.to_vec(), vec![]),
        CatalogId::B2 { .. } => (
            [comm_assoc.as_slice(), &[AntiAssociative, TwoStepNilpotent]].concat(),
            vec![Jacobi],
        ),
        CatalogId::B3 { .. } => (
            [apl.as_slice(), &[PreLie, NovikovRight]].concat(),
            vec![Commutative, Associative, AntiAssociative, AdmissibleNovikov],
        ),
        CatalogId::B4 { .. } | CatalogId::B6 { .. } => (
            apl.to_vec(),
            vec![
                Commutative,
                PreLie,
                Associative,
                AntiAssociative,
                AdmissibleNovikov,
            ],
        ),
        CatalogId::B5 { n } => {
            let mut pass = apl.to_vec();
            let mut fail = vec![Commutative, PreLie, Associative, AntiAssociative];
            if *n == 2 {
                pass.push(AdmissibleNovikov);
            } else {
                fail.push(AdmissibleNovikov);
            }
            (pass, fail)
        }
        CatalogId::N1 { .. }
        | CatalogId::N2
        | CatalogId::NPrime1
        | CatalogId::NPrime2
        | CatalogId::NPrime3 { .. }
        | CatalogId::NPrime4 => (vec![PreLie, NovikovRight, LieAdmissible], vec![Commutative]),
        CatalogId::Sl2Apl => (
            apl.to_vec(),
            vec![Commutative, PreLie, Associative, AdmissibleNovikov],
        ),
        CatalogId::Sl2Lie | CatalogId::Dim2NonabelianLie => {
            (vec![Jacobi, LieAdmissible], vec![Commutative])
        }
        CatalogId::Dim2AssocFrob => (comm_assoc.to_vec(), vec![Jacobi, TwoStepNilpotent]),
        CatalogId::TruncPoly { .. } => (comm_assoc.to_vec(), vec![Jacobi]),
    }
}

/// Runs the expected identity profile for a catalog entry and reports any
/// deviation. Entries with attached forms or derivations also get their
/// defining law checked.
pub fn verify_catalog_entry(id: &CatalogId) -> Result<CatalogVerification> {
    let obj = catalog(id)?;
    let alg = obj.algebra();
    let (pass_ids, fail_ids) = expected_profile(id);
    let mut checks = Vec::new();
    let mut ok = true;
    for (expected, ids) in [(true, pass_ids), (false, fail_ids)] {
        for iid in ids {
            let report = check_identity(alg, iid);
            if report.pass != expected {
                ok = false;
            }
            checks.push((iid, expected, report));
        }
    }
    let mut extra = Vec::new();
    if let Some(form) = obj.form() {
        let inv =
            crate::cocycles::check_form(alg, form, crate::cocycles::FormMode::AssocInvariant)?;
        ok &= inv.pass;
        extra.push(("form-assoc-invariant".to_string(), inv));
        let nondeg = if form.is_nondegenerate() {
            CheckReport::pass()
        } else {
            CheckReport::fail("form-nondegenerate", vec![], vec![Scalar::zero()])
        };
        ok &= nondeg.pass;
        extra.push(("form-nondegenerate".to_string(), nondeg));
    }
    if let Some(derivation) = obj.derivation() {
        let leibniz = crate::operators::check_structure_map(
            &crate::operators::StructureMapCheck::Derivation {
                algebra: alg,
                map: derivation,
            },
        )?;
        ok &= leibniz.pass;
        extra.push(("derivation-leibniz".to_string(), leibniz));
    }
    Ok(CatalogVerification {
        id: id.to_string(),
        checks,
        extra,
        ok,
    })
}

/// Nonzero solutions of `x o x = x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdempotentSet {
    /// Sorted list of coordinate vectors.
    Finite(Vec<Vec<Scalar>>),
    /// The solution variety is positive-dimensional.
    Infinite,
}

/// All nonzero idempotents, exactly.
///
/// Over the rational/quadratic domain this is supported in dimension <= 2 by
/// exact elimination; solutions whose coordinates need algebraic numbers of
/// degree > 2 do not exist in the scalar domain and are omitted. Over `F_p`
/// any dimension is handled by exhaustion.
pub fn idempotents(alg: &Algebra) -> Result<IdempotentSet> {
    if let Some(p) = tensor_modulus(alg) {
        return Ok(idempotents_mod_p(alg, p));
    }
    match alg.dim() {
        1 => {
            let c = alg.coeff(0, 0, 0);
            if c.is_zero() {
                Ok(IdempotentSet::Finite(vec![]))
            } else {
                Ok(IdempotentSet::Finite(vec![vec![c.inv()]]))
            }
        }
        2 => idempotents_dim2(alg),
        d => Err(Error::Unsupported(format!(
            "exact idempotent solving over the rationals is limited to dim <= 2 (got {d})"
        ))),
    }
}

fn tensor_modulus(alg: &Algebra) -> Option<u64> {
    alg.tensor().iter().find_map(|s| match s {
        Scalar::Mod { modulus, .. } => Some(*modulus),
        _ => None,
    })
}

fn idempotents_mod_p(alg: &Algebra, p: u64) -> IdempotentSet {
    let n = alg.dim();
    let total = (p as u128).pow(n as u32);
    let mut out = Vec::new();
    for code in 1..total {
        let mut c = code;
        let x: Vec<Scalar> = (0..n)
            .map(|_| {
                let v = (c % p as u128) as i64;
                c /= p as u128;
                Scalar::mod_p(v, p)
            })
            .collect();
        let xx = alg.multiply(&x, &x).expect("dims fixed");
        if xx == x {
            out.push(x);
        }
    }
    out.sort();
    IdempotentSet::Finite(out)
}

/// Exact solver for `x o x = x` in dimension 2: eliminate to a univariate
/// polynomial of degree <= 4, keep the roots that live in the scalar domain
/// and back-substitute.
fn idempotents_dim2(alg: &Algebra) -> Result<IdempotentSet> {
    // x = a e1 + b e2, equations F1 (e1-coordinate) and F2 (e2-coordinate)
    // as polynomials in b with Poly coefficients in a.
    let coeff = |i: usize, j: usize, k: usize| alg.coeff(i, j, k).clone();
    // Fi = Ai b^2 + Bi(a) b + Ci(a)
    let build = |k: usize| -> [Poly; 3] {
        let quad_a = coeff(0, 0, k); // a^2
        let cross = coeff(0, 1, k).add(&coeff(1, 0, k)); // ab
        let quad_b = coeff(1, 1, k); // b^2
        let lin_a = if k == 0 {
            Scalar::from_int(-1)
        } else {
            Scalar::zero()
        };
        let lin_b = if k == 1 {
            Scalar::from_int(-1)
        } else {
            Scalar::zero()
        };
        [
            Poly::new(vec![Scalar::zero(), lin_a, quad_a]),
            Poly::new(vec![lin_b, cross]),
            Poly::constant(quad_b),
        ]
    };
    // [C(a), B(a), A] with A constant
    let f1 = build(0);
    let f2 = build(1);

    let poly_in_b = |f: &[Poly; 3], a0: &Scalar| -> Poly {
        Poly::new(vec![f[0].eval(a0), f[1].eval(a0), f[2].eval(a0)])
    };

    let mut points: Vec<Vec<Scalar>> = Vec::new();

    // the b-degree of F2 is always >= 1 (its linear b-coefficient has the
    // constant term -1); F1 may be b-free
    let f1_b_free = f1[2].is_zero() && f1[1].is_zero();
    let a_candidates: Vec<Scalar> = if f1_b_free {
        representable_roots(&f1[0])
    } else {
        let r = resultant_in_b(&f1, &f2);
        if r.is_zero() {
            // common curve of solutions
            return Ok(IdempotentSet::Infinite);
        }
        representable_roots(&r)
    };

    for a0 in a_candidates {
        let p1 = poly_in_b(&f1, &a0);
        let p2 = poly_in_b(&f2, &a0);
        if p1.is_zero() && p2.is_zero() {
            return Ok(IdempotentSet::Infinite);
        }
        let g = if p1.is_zero() {
            p2.clone()
        } else if p2.is_zero() {
            p1.clone()
        } else {
            p1.gcd(&p2)
        };
        let ext = match &a0 {
            Scalar::Quadratic { d, .. } => Some(*d),
            _ => None,
        };
        match g.degree() {
            None => return Ok(IdempotentSet::Infinite),
            Some(0) => {} // spurious resultant root
            Some(1) => {
                let b0 = g.coeff(0).neg().div(&g.coeff(1));
                push_point(&mut points, a0.clone(), b0, ext);
            }
            Some(2) => {
                for b0 in quadratic_roots_in_extension(&g, ext) {
                    push_point(&mut points, a0.clone(), b0, ext);
                }
            }
            Some(_) => unreachable!("gcd of quadratics has degree <= 2"),
        }
    }

    points.retain(|p| !p.iter().all(Scalar::is_zero));
    points.sort();
    points.dedup();
    Ok(IdempotentSet::Finite(points))
}

fn push_point(points: &mut Vec<Vec<Scalar>>, a0: Scalar, b0: Scalar, ext: Option<i64>) {
    // a point is representable when its coordinates fit in one extension
    if let (Some(d), Scalar::Quadratic { d: db, .. }) = (ext, &b0) {
        if d != *db {
            return;
        }
    }
    points.push(vec![a0, b0]);
}

/// Resultant in `b` of two polynomials with coefficients in `Q[a]`, given as
/// `[C(a), B(a), A(a)]` (coefficient of `b^0`, `b^1`, `b^2`).
fn resultant_in_b(f: &[Poly; 3], g: &[Poly; 3]) -> Poly {
    let fd = if !f[2].is_zero() { 2 } else { 1 };
    let gd = if !g[2].is_zero() { 2 } else { 1 };
    // Sylvester matrix of size fd + gd with Poly entries
    let n = fd + gd;
    let mut m: Vec<Vec<Poly>> = vec![vec![Poly::zero(); n]; n];
    for row in 0..gd {
        for (k, item) in f.iter().enumerate().take(fd + 1) {
            m[row][row + fd - k] = item.clone();
        }
    }
    for row in 0..fd {
        for (k, item) in g.iter().enumerate().take(gd + 1) {
            m[gd + row][row + gd - k] = item.clone();
        }
    }
    poly_det(&m)
}

fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for (c, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&poly_det(&minor));
        acc = if c % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Roots of a rational-coefficient polynomial of degree <= 4 that are
/// representable in the scalar domain (rational or in one `Q(sqrt(d))`).
/// Roots of algebraic degree >= 3 are outside the domain and omitted.
fn representable_roots(p: &Poly) -> Vec<Scalar> {
    let mut roots = Vec::new();
    if p.is_zero() {
        return roots;
    }
    let mut rem = p.clone();
    for r in p.rational_roots() {
        let lin = Poly::new(vec![Scalar::Rational(-r.clone()), Scalar::one()]);
        loop {
            let (q, rest) = rem.div_rem(&lin);
            if rest.is_zero() {
                rem = q;
            } else {
                break;
            }
        }
        roots.push(Scalar::Rational(r));
    }
    match rem.degree() {
        None | Some(0) => {}
        Some(2) => roots.extend(quadratic_roots_in_extension(&rem, None)),
        Some(4) => {
            if let Some((q1, q2)) = quartic_into_quadratics(&rem) {
                roots.extend(quadratic_roots_in_extension(&q1, None));
                roots.extend(quadratic_roots_in_extension(&q2, None));
            }
            // irreducible quartic: all roots have degree 4, none representable
        }
        // no rational roots left, so degree 3 means an irreducible cubic
        Some(_) => {}
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Roots of a quadratic with coefficients in the (optional) extension.
/// When the discriminant has no square root inside the allowed extension the
/// roots have degree 4 over `Q` and are skipped.
fn quadratic_roots_in_extension(g: &Poly, ext: Option<i64>) -> Vec<Scalar> {
    let a = g.coeff(2);
    let b = g.coeff(1);
    let c = g.coeff(0);
    assert!(!a.is_zero());
    let disc = b.mul(&b).sub(&Scalar::from_int(4).mul(&a).mul(&c));
    let sqrt = match (&disc, ext) {
        (d, _) if d.is_zero() => Some(Scalar::zero()),
        (d, None) => d.sqrt(),
        (d, Some(e)) => match d.sqrt() {
            Some(Scalar::Quadratic { d: dd, .. }) if dd != e => None,
            other => other,
        },
    };
    let Some(s) = sqrt else {
        return vec![];
    };
    let two_a = Scalar::from_int(2).mul(&a);
    let r1 = b.neg().add(&s).div(&two_a);
    if s.is_zero() {
        return vec![r1];
    }
    let r2 = b.neg().sub(&s).div(&two_a);
    vec![r1, r2]
}

/// Factors a monic-izable rational quartic with no rational roots into two
/// rational quadratics, when possible.
fn quartic_into_quadratics(p: &Poly) -> Option<(Poly, Poly)> {
    let lead = p.leading().unwrap().inv();
    let m = p.scale(&lead); // monic
    let p3 = m.coeff(3);
    let p2 = m.coeff(2);
    let p1 = m.coeff(1);
    let p0 = m.coeff(0);
    // depress via x = y - p3/4, expanding m(y - shift) directly
    let shift = p3.div(&Scalar::from_int(4));
    let depressed = {
        let y = Poly::new(vec![shift.neg(), Scalar::one()]);
        let mut acc = Poly::constant(p0.clone());
        let mut pow = Poly::constant(Scalar::one());
        for c in [&p1, &p2, &p3, &Scalar::one()] {
            pow = pow.mul(&y);
            acc = acc.add(&pow.scale(c));
        }
        acc
    };
    let qq = depressed.coeff(2);
    let rr = depressed.coeff(1);
    let ss = depressed.coeff(0);
    debug_assert!(depressed.coeff(3).is_zero());

    let mut factors: Option<(Poly, Poly)> = None;
    if rr.is_zero() {
        // biquadratic y^4 + qq y^2 + ss = (y^2 - t1)(y^2 - t2) with t_i the
        // roots of t^2 + qq t + ss; rational t's give rational quadratics
        let tpoly = Poly::new(vec![ss.clone(), qq.clone(), Scalar::one()]);
        let ts = quadratic_roots_in_extension(&tpoly, None);
        if ts.iter().all(|t| matches!(t, Scalar::Rational(_))) && !ts.is_empty() {
            let t1 = ts[0].clone();
            let t2 = ts.get(1).cloned().unwrap_or_else(|| ts[0].clone());
            factors = Some((
                Poly::new(vec![t1.neg(), Scalar::zero(), Scalar::one()]),
                Poly::new(vec![t2.neg(), Scalar::zero(), Scalar::one()]),
            ));
        }
    } else {
        // resolvent: z^3 + 2 qq z^2 + (qq^2 - 4 ss) z - rr^2 = 0 with z = a^2
        let resolvent = Poly::new(vec![
            rr.mul(&rr).neg(),
            qq.mul(&qq).sub(&Scalar::from_int(4).mul(&ss)),
            Scalar::from_int(2).mul(&qq),
            Scalar::one(),
        ]);
        for z in resolvent.rational_roots() {
            let zs = Scalar::Rational(z);
            if zs.is_zero() {
                continue;
            }
            if let Some(a @ Scalar::Rational(_)) = zs.sqrt() {
                let b = qq.add(&zs).sub(&rr.div(&a)).div(&Scalar::from_int(2));
                let c = qq.add(&zs).add(&rr.div(&a)).div(&Scalar::from_int(2));
                factors = Some((
                    Poly::new(vec![b, a.clone(), Scalar::one()]),
                    Poly::new(vec![c, a.neg(), Scalar::one()]),
                ));
                break;
            }
        }
    }

    factors.map(|(f, g)| {
        // undo the depression: y = x + shift
        let x_shift = Poly::new(vec![shift.clone(), Scalar::one()]);
        let lift = |f: &Poly| -> Poly {
            let mut acc = Poly::zero();
            let mut pow = Poly::constant(Scalar::one());
            for k in 0..=f.degree().unwrap() {
                acc = acc.add(&pow.scale(&f.coeff(k)));
                pow = pow.mul(&x_shift);
            }
            acc
        };
        (lift(&f), lift(&g))
    })
}

/// Basis-change-invariant summary used to certify non-isomorphism: equal
/// fingerprints prove nothing, distinct fingerprints certify the algebras
/// are not isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub commutative: bool,
    pub product_span_dim: usize,
    pub left_annihilator_dim: usize,
    pub right_annihilator_dim: usize,
    pub subadjacent_abelian: bool,
    pub idempotents: IdempotentInvariants,
}

/// Invariant data of the idempotent variety. Raw coordinates are not basis
/// invariant, so only the characteristic polynomials of the multiplication
/// operators at each idempotent are kept (sorted), plus the finite/infinite
/// distinction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdempotentInvariants {
    /// Sorted `(char_poly(L_x), char_poly(R_x))` per idempotent.
    Finite(Vec<(Vec<Scalar>, Vec<Scalar>)>),
    Infinite,
}

pub fn fingerprint(alg: &Algebra) -> Result<Fingerprint> {
    let idem = match idempotents(alg)? {
        IdempotentSet::Infinite => IdempotentInvariants::Infinite,
        IdempotentSet::Finite(points) => {
            let mut data: Vec<(Vec<Scalar>, Vec<Scalar>)> = points
                .iter()
                .map(|x| {
                    let l = alg.mult_operator(x, Side::Left).expect("dims");
                    let r = alg.mult_operator(x, Side::Right).expect("dims");
                    (l.char_poly(), r.char_poly())
                })
                .collect();
            data.sort();
            IdempotentInvariants::Finite(data)
        }
    };
    Ok(Fingerprint {
        commutative: check_identity(alg, IdentityId::Commutative).pass,
        product_span_dim: alg.product_span_dim(),
        left_annihilator_dim: alg.annihilator_dim(Side::Left),
        right_annihilator_dim: alg.annihilator_dim(Side::Right),
        subadjacent_abelian: alg.commutator_algebra().is_zero_algebra(),
        idempotents: idem,
    })
}

/// Pass iff `change_basis(a, s) = b` entrywise (tensor comparison; role tags
/// are ignored).
pub fn verify_iso_witness(a: &Algebra, b: &Algebra, s: &LinearMap) -> Result<CheckReport> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            context: "verify_iso_witness",
            expected: a.dim(),
            got: b.dim(),
        });
    }
    let moved = a.change_basis(s)?;
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let diff = moved.coeff(i, j, k).sub(b.coeff(i, j, k));
                if !diff.is_zero() {
                    return Ok(CheckReport::fail(
                        "iso-witness",
                        vec![i as i64, j as i64, k as i64],
                        vec![diff],
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass())
}

/// A precomputed isomorphism witness for a claim about two catalog entries.
/// Every stored witness was found by bounded search (box radius noted) and is
/// re-verified exactly by the test suite.
#[derive(Debug, Clone)]
pub struct StoredWitness {
    pub key: &'static str,
    pub from: CatalogId,
    pub to: CatalogId,
    pub matrix: LinearMap,
    pub note: &'static str,
}

pub fn stored_witnesses() -> Vec<StoredWitness> {
    vec![
        StoredWitness {
            key: "b3-n2-to-a2-l0",
            from: CatalogId::B3 { n: 2 },
            to: CatalogId::A2 { lambda: sc(0) },
            matrix: Matrix::from_int_rows(&[&[0, -1], &[1, 0]]),
            note: "integer search, box radius 1",
        },
        StoredWitness {
            key: "b4-k2-n2-to-a1",
            from: CatalogId::B4 { k: 2, n: 2 },
            to: CatalogId::A1,
            matrix: Matrix::from_int_rows(&[&[0, -1], &[1, 0]]),
            note: "integer search, box radius 1",
        },
        StoredWitness {
            key: "b5-n2-to-a4-l0",
            from: CatalogId::B5 { n: 2 },
            to: CatalogId::A4 { lambda: sc(0) },
            matrix: Matrix::from_int_rows(&[&[1, 0], &[0, -1]]),
            note: "integer search, box radius 1",
        },
        StoredWitness {
            key: "n1-l1-to-nprime1",
            from: CatalogId::N1 { lambda: sc(1) },
            to: CatalogId::NPrime1,
            matrix: Matrix::from_rows(vec![
                vec![Scalar::one(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::ratio(1, 3)],
            ]),
            note: "rational search, denominators up to 3",
        },
        StoredWitness {
            key: "n1-lm2-to-nprime2",
            from: CatalogId::N1 { lambda: sc(-2) },
            to: CatalogId::NPrime2,
            matrix: Matrix::from_rows(vec![
                vec![Scalar::one(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::ratio(1, 3)],
            ]),
            note: "rational search, denominators up to 3",
        },
        StoredWitness {
            key: "n1-l0-to-nprime3-lm2",
            from: CatalogId::N1 { lambda: sc(0) },
            to: CatalogId::NPrime3 { l: sc(-2) },
            matrix: Matrix::identity(2),
            note: "identical tensors at this parameter",
        },
        StoredWitness {
            key: "n2-to-nprime4",
            from: CatalogId::N2,
            to: CatalogId::NPrime4,
            matrix: Matrix::from_rows(vec![
                vec![Scalar::ratio(-1, 9), Scalar::zero()],
                vec![Scalar::zero(), Scalar::ratio(1, 3)],
            ]),
            note: "rational search, denominators up to 9",
        },
    ]
}

pub fn stored_witness(key: &str) -> Option<StoredWitness> {
    stored_witnesses().into_iter().find(|w| w.key == key)
}

/// Looks up a stored witness for an ordered pair of catalog entries.
pub fn stored_witness_for(from: &CatalogId, to: &CatalogId) -> Option<StoredWitness> {
    stored_witnesses()
        .into_iter()
        .find(|w| &w.from == from && &w.to == to)
}

/// `N1(lambda) ~ NPRIME3(l)` with `l = 1 - 3/(1 - lambda)`; the witness is
/// `diag(1, 1/(1 - lambda))` for `lambda` outside `{1, -2}`.
pub fn n1_to_nprime3_witness(lambda: &Scalar) -> Result<(CatalogId, LinearMap)> {
    let one = Scalar::one();
    let om = one.sub(lambda);
    if om.is_zero() {
        return Err(Error::OutOfDomain(
            "lambda = 1 corresponds to NPRIME1".into(),
        ));
    }
    let l = one.sub(&Scalar::from_int(3).div(&om));
    if l.is_zero() || l.is_one() {
        return Err(Error::OutOfDomain(
            "lambda in {1, -2} falls outside the NPRIME3 domain".into(),
        ));
    }
    let mut m = Matrix::identity(2);
    m.set(1, 1, om.inv());
    Ok((CatalogId::NPrime3 { l }, m))
}

/// Exhaustive dim-2 survey over `F_p`: every tensor satisfying the
/// anti-pre-Lie profile and non-commutativity either lies in the
/// `GL_2(F_p)`-orbit of a catalog specialization or is reported as an extra
/// class (field dependence is expected, nothing is asserted about extras).
#[derive(Debug, Clone)]
pub struct Dim2FfSurvey {
    pub p: u64,
    pub passing: usize,
    pub in_catalog_orbits: usize,
    /// Lexicographically least representatives of the extra orbits.
    pub extra_class_reps: Vec<Vec<u64>>,
}

pub fn dim2_ff_survey(p: u64) -> Result<Dim2FfSurvey> {
    use std::collections::BTreeSet;
    if !crate::scalar::is_prime(p) || !(2..=5).contains(&p) {
        return Err(Error::Unsupported(format!("unsupported prime {p}")));
    }
    let gl = gl2(p);

    let orbit_of = |enc: &[u64]| -> BTreeSet<Vec<u64>> {
        let alg = decode_tensor2(enc, p);
        gl.iter()
            .map(|s| encode_tensor2(&alg.change_basis(s).expect("invertible")))
            .collect()
    };

    // catalog specializations mod p
    let mut catalog_union: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut specializations: Vec<Algebra> = vec![
        catalog(&CatalogId::A1)?.into_algebra(),
        catalog(&CatalogId::A3)?.into_algebra(),
        catalog(&CatalogId::A5)?.into_algebra(),
    ];
    for l in 0..p {
        specializations.push(
            catalog(&CatalogId::A2 {
                lambda: sc(l as i64),
            })?
            .into_algebra(),
        );
        if (l + 1) % p != 0 {
            specializations.push(
                catalog(&CatalogId::A4 {
                    lambda: sc(l as i64),
                })?
                .into_algebra(),
            );
        }
    }
    for s in &specializations {
        let enc = encode_tensor2(&reduce_mod_p(s, p));
        catalog_union.extend(orbit_of(&enc));
    }

    let mut passing = 0usize;
    let mut in_orbits = 0usize;
    let mut extra: BTreeSet<Vec<u64>> = BTreeSet::new();
    for code in 0..(p.pow(8)) {
        let enc: Vec<u64> = (0..8).map(|i| (code / p.pow(i)) % p).collect();
        let alg = decode_tensor2(&enc, p);
        if check_identity(&alg, IdentityId::Commutative).pass {
            continue;
        }
        if !check_identity(&alg, IdentityId::AntiPreLie1).pass
            || !check_identity(&alg, IdentityId::AntiPreLie2).pass
        {
            continue;
        }
        passing += 1;
        if catalog_union.contains(&enc) {
            in_orbits += 1;
        } else {
            // record the canonical representative of its orbit
            let rep = orbit_of(&enc).into_iter().next().unwrap();
            extra.insert(rep);
        }
    }
    Ok(Dim2FfSurvey {
        p,
        passing,
        in_catalog_orbits: in_orbits,
        extra_class_reps: extra.into_iter().collect(),
    })
}

fn gl2(p: u64) -> Vec<Matrix> {
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
}

/// Reduces an integer-entry algebra mod `p`.
pub fn reduce_mod_p(alg: &Algebra, p: u64) -> Algebra {
    use num::Integer;
    let tensor: Vec<Scalar> = alg
        .tensor()
        .iter()
        .map(|s| match s {
            Scalar::Rational(r) => {
                assert!(r.denom() == &num::BigInt::from(1), "non-integer entry");
                let v: i64 = r
                    .numer()
                    .mod_floor(&num::BigInt::from(p))
                    .try_into()
                    .expect("residue fits");
                Scalar::mod_p(v, p)
            }
            Scalar::Mod { value, modulus } => {
                assert_eq!(*modulus, p);
                Scalar::mod_p(*value as i64, p)
            }
            Scalar::Quadratic { .. } => panic!("quadratic entry cannot reduce mod p"),
        })
        .collect();
    Algebra::new(alg.dim(), alg.role(), tensor)
}

pub(crate) fn encode_tensor2(alg: &Algebra) -> Vec<u64> {
    assert_eq!(alg.dim(), 2);
    alg.tensor()
        .iter()
        .map(|s| match s {
            Scalar::Mod { value, .. } => *value,
            s if s.is_zero() => 0,
            _ => panic!("tensor is not in F_p form"),
        })
        .collect()
}

pub(crate) fn decode_tensor2(enc: &[u64], p: u64) -> Algebra {
    Algebra::new(
        2,
        AlgebraRole::Product,
        enc.iter().map(|&v| Scalar::mod_p(v as i64, p)).collect(),
    )
}
