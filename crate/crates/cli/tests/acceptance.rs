//! Acceptance suite: one test per criterion, exact comparisons throughout.
//! Each test prints a `criterion N (...): PASS` line on success; run with
//! `cargo test -p apla-cli --test acceptance -- --nocapture` to see them.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use apla_core::algebra::{Algebra, AlgebraRole, SecondRole, TwoOpAlgebra};
use apla_core::classify::{self, CatalogId};
use apla_core::cocycles::{self, FormMode};
use apla_core::constructions::{self, AffinizationMode, PairMode};
use apla_core::form::BilinearForm;
use apla_core::identities::{check_identity, IdentityId};
use apla_core::linalg::Matrix;
use apla_core::operators::{check_operator, induced_algebra, OperatorLevel, RFamily};
use apla_core::poisson::{self, PoissonIdentityId, PoissonTransform};
use apla_core::rep::Representation;
use apla_core::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sc(v: i64) -> Scalar {
    Scalar::from_int(v)
}

fn cat(id: &CatalogId) -> Algebra {
    classify::catalog(id).unwrap().into_algebra()
}

/// The A-family samples used by criteria 2 and 3: parameters in
/// {-2, -1, 0, 1, 2}, respecting each family's domain.
fn a_family_samples() -> Vec<CatalogId> {
    let mut ids = vec![CatalogId::A1, CatalogId::A3, CatalogId::A5];
    for l in [-2i64, -1, 0, 1, 2] {
        ids.push(CatalogId::A2 { lambda: sc(l) });
        if l != -1 {
            ids.push(CatalogId::A4 { lambda: sc(l) });
        }
    }
    ids
}

fn sl2_reference_form() -> BilinearForm {
    BilinearForm::symmetric_from_entries(3, &[(0, 2, sc(-1)), (1, 1, sc(4))])
}

#[test]
fn criterion_01_sl2_pipeline() {
    let sl2 = cat(&CatalogId::Sl2Lie);
    let space = cocycles::solve_form_space(&sl2, FormMode::Cocycle, true).unwrap();
    let b = sl2_reference_form();
    assert!(
        cocycles::check_form(&sl2, &b, FormMode::Cocycle)
            .unwrap()
            .pass,
        "the reference form must satisfy the cocycle condition"
    );
    assert!(
        space.contains(&b),
        "the solved space must contain the reference form"
    );
    assert!(b.is_nondegenerate());
    let induced = cocycles::induce_compatible_product(&sl2, &b).unwrap();
    let expected = cat(&CatalogId::Sl2Apl);
    assert_eq!(induced.tensor(), expected.tensor(), "exact product table");
    println!("criterion 1 (sl(2) pipeline): PASS");
}

#[test]
fn criterion_02_classification_tables() {
    // every entry passes its declared identity profile
    let mut ids = a_family_samples();
    for n in 1..=4usize {
        ids.push(CatalogId::B1 { n });
    }
    for n in 2..=4usize {
        ids.push(CatalogId::B3 { n });
        ids.push(CatalogId::B5 { n });
        for k in 2..=n {
            ids.push(CatalogId::B2 { k, n });
            ids.push(CatalogId::B4 { k, n });
        }
    }
    for n in 3..=4usize {
        for k in 3..=n {
            ids.push(CatalogId::B6 { k, n });
        }
    }
    for l in [-2i64, -1, 0, 1, 2] {
        ids.push(CatalogId::N1 { lambda: sc(l) });
        ids.push(CatalogId::AN1 { lambda: sc(l) });
    }
    ids.push(CatalogId::N2);
    ids.push(CatalogId::AN2);
    ids.push(CatalogId::NPrime1);
    ids.push(CatalogId::NPrime2);
    ids.push(CatalogId::NPrime4);
    for l in [-2i64, -1, 2, 3] {
        ids.push(CatalogId::NPrime3 { l: sc(l) });
    }
    for id in &ids {
        let v = classify::verify_catalog_entry(id).unwrap();
        assert!(
            v.ok,
            "catalog entry {id} deviates from its expected profile"
        );
    }

    // membership lists over the sampled A-family
    let mut associative = Vec::new();
    let mut pre_lie = Vec::new();
    let mut anti_associative = Vec::new();
    for id in a_family_samples() {
        let alg = cat(&id);
        if check_identity(&alg, IdentityId::Associative).pass {
            associative.push(id.to_string());
        }
        if check_identity(&alg, IdentityId::PreLie).pass {
            pre_lie.push(id.to_string());
        }
        if check_identity(&alg, IdentityId::AntiAssociative).pass {
            anti_associative.push(id.to_string());
        }
    }
    assert_eq!(associative, vec!["A2?lambda=-1".to_string()]);
    let expected_pre_lie: BTreeSet<String> = [
        "A3",
        "A2?lambda=-2",
        "A2?lambda=-1",
        "A2?lambda=0",
        "A2?lambda=1",
        "A2?lambda=2",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    assert_eq!(
        pre_lie.into_iter().collect::<BTreeSet<_>>(),
        expected_pre_lie
    );
    assert!(
        anti_associative.is_empty(),
        "no dim-2 non-commutative anti-associative algebra"
    );
    println!("criterion 2 (classification tables): PASS");
}

#[test]
fn criterion_03_fingerprints() {
    let ids = a_family_samples();
    let prints: Vec<_> = ids
        .iter()
        .map(|id| classify::fingerprint(&cat(id)).unwrap())
        .collect();
    for i in 0..prints.len() {
        for j in 0..i {
            assert_ne!(
                prints[i], prints[j],
                "fingerprints of {} and {} must differ",
                ids[i], ids[j]
            );
        }
    }
    // 200 random invertible basis changes per entry leave the fingerprint
    // unchanged
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    for (id, fp) in ids.iter().zip(&prints) {
        let alg = cat(id);
        for _ in 0..200 {
            let s = loop {
                let cand = Matrix::from_fn(2, 2, |_, _| sc(rng.gen_range(-3..=3)));
                if !cand.det().is_zero() {
                    break cand;
                }
            };
            let moved = alg.change_basis(&s).unwrap();
            assert_eq!(
                &classify::fingerprint(&moved).unwrap(),
                fp,
                "{id} under {s:?}"
            );
        }
    }
    println!("criterion 3 (non-isomorphism fingerprints): PASS");
}

#[test]
fn criterion_04_q_correspondence() {
    // AN1 -> N1 entrywise under the (-2)-transform
    for l in [-2i64, 0, 1, 3] {
        let an1 = cat(&CatalogId::AN1 { lambda: sc(l) });
        let n1 = cat(&CatalogId::N1 { lambda: sc(l) });
        assert_eq!(
            constructions::q_transform(&an1, &sc(-2)).tensor(),
            n1.tensor()
        );
    }
    // exact inverse of the 2-transform on 100 random dim-3 tensors
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for _ in 0..100 {
        let mut alg = Algebra::zero(3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    alg.set_coeff(i, j, k, sc(rng.gen_range(-5..=5)));
                }
            }
        }
        let round =
            constructions::exact_inverse_two_transform(&constructions::q_transform(&alg, &sc(2)));
        assert_eq!(round.tensor(), alg.tensor());
    }
    // both biconditionals, exhaustively over the 6561 F_3 transversal
    // tensors (integer lifts, characteristic-0 arithmetic)
    let start = Instant::now();
    let out = constructions::q_correspondence_exhaustive(&[-1, 0, 1]);
    assert_eq!(out.tensors, 6561);
    assert!(
        out.forward_mismatches.is_empty(),
        "Novikov <=> 2-algebra admissible Novikov"
    );
    assert!(
        out.converse_mismatches.is_empty(),
        "admissible Novikov <=> (-2)-algebra Novikov"
    );
    assert!(out.apl2_violations.is_empty());
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "took {elapsed:?}, budget 10 s");
    println!("criterion 4 (q-correspondence, 6561 tensors in {elapsed:?}): PASS");
}

#[test]
fn criterion_05_operator_families() {
    let lie = cat(&CatalogId::Dim2NonabelianLie);
    let ad = Representation::adjoint(&lie);
    for fam in RFamily::ALL {
        for (a, b) in [(1i64, 1i64), (1, 2), (2, 1), (2, 2)] {
            let (a, b) = (sc(a), sc(b));
            let t = fam.operator(&a, &b).unwrap();
            assert!(
                check_operator(&t, &lie, &ad, OperatorLevel::AntiO)
                    .unwrap()
                    .pass
            );
            assert!(
                check_operator(&t, &lie, &ad, OperatorLevel::Strong)
                    .unwrap()
                    .pass
            );
            let admissible = check_operator(&t, &lie, &ad, OperatorLevel::Admissible)
                .unwrap()
                .pass;
            assert_eq!(
                admissible,
                fam.is_admissible_family(),
                "exactly R1, R2, R5, R6, R7, R8 are admissible"
            );
            // induced products match the catalog list via stored witnesses
            let induced = induced_algebra(&t, &ad).unwrap();
            let (target, witness) = fam.induced_target(&a, &b).unwrap();
            assert!(
                classify::verify_iso_witness(&induced, &target, &witness)
                    .unwrap()
                    .pass,
                "{} induced product",
                fam.token()
            );
        }
    }
    println!("criterion 5 (anti-Rota-Baxter families R1-R8): PASS");
}

#[test]
fn criterion_06_operator_theorems() {
    let lie = cat(&CatalogId::Dim2NonabelianLie);
    let ad = Representation::adjoint(&lie);
    let mut rng = ChaCha8Rng::seed_from_u64(606);

    // invertible => strong on 100 random valid inputs
    let mut invertible_checked = 0;
    while invertible_checked < 100 {
        let fam = if invertible_checked % 2 == 0 {
            RFamily::R5
        } else {
            RFamily::R6
        };
        let a = Scalar::ratio(rng.gen_range(1..=9), rng.gen_range(1..=4));
        let b = sc(rng.gen_range(-5..=5));
        if fam.uses_b() && b.is_zero() {
            continue;
        }
        let t = fam.operator(&a, &b).unwrap();
        assert!(
            check_operator(&t, &lie, &ad, OperatorLevel::AntiO)
                .unwrap()
                .pass
        );
        assert!(!t.det().is_zero(), "R5/R6 instances are invertible");
        assert!(
            check_operator(&t, &lie, &ad, OperatorLevel::Strong)
                .unwrap()
                .pass
        );
        invertible_checked += 1;
    }

    // admissible => strong on 100 random valid inputs
    let families = [
        RFamily::R1,
        RFamily::R2,
        RFamily::R5,
        RFamily::R6,
        RFamily::R7,
        RFamily::R8,
    ];
    for k in 0..100 {
        let fam = families[k % families.len()];
        let a = sc(rng.gen_range(1..=9));
        let b = sc(rng.gen_range(1..=9));
        let t = fam.operator(&a, &b).unwrap();
        assert!(
            check_operator(&t, &lie, &ad, OperatorLevel::Admissible)
                .unwrap()
                .pass
        );
        assert!(
            check_operator(&t, &lie, &ad, OperatorLevel::Strong)
                .unwrap()
                .pass
        );
    }

    // the identity map is an anti-O-operator against -L on the commutator
    // for every catalog anti-pre-Lie algebra
    let mut apl_entries = a_family_samples();
    apl_entries.push(CatalogId::Sl2Apl);
    apl_entries.push(CatalogId::B3 { n: 3 });
    apl_entries.push(CatalogId::B4 { k: 2, n: 3 });
    apl_entries.push(CatalogId::B5 { n: 3 });
    apl_entries.push(CatalogId::B6 { k: 3, n: 3 });
    for id in &apl_entries {
        let alg = cat(id);
        let commutator = alg.commutator_algebra();
        let rho = Representation::neg_left_mult(&alg);
        let t = Matrix::identity(alg.dim());
        assert!(
            check_operator(&t, &commutator, &rho, OperatorLevel::AntiO)
                .unwrap()
                .pass,
            "identity operator fails anti-o for {id}"
        );
    }
    println!("criterion 6 (operator theorems as properties): PASS");
}

#[test]
fn criterion_07_cocycle_solver() {
    // full 3-dimensional symmetric form space on the 2-dim non-abelian Lie
    // algebra
    let lie = cat(&CatalogId::Dim2NonabelianLie);
    let space = cocycles::solve_form_space(&lie, FormMode::Cocycle, true).unwrap();
    assert_eq!(space.dim(), 3, "any symmetric bilinear form is a cocycle");

    // canonical pairing form on g x_{-L*} A* is a cocycle for every dim-2
    // catalog anti-pre-Lie algebra
    let mut ids = a_family_samples();
    ids.extend([
        CatalogId::AN1 { lambda: sc(0) },
        CatalogId::AN2,
        CatalogId::B1 { n: 2 },
        CatalogId::B2 { k: 2, n: 2 },
        CatalogId::B3 { n: 2 },
        CatalogId::B4 { k: 2, n: 2 },
        CatalogId::B5 { n: 2 },
        CatalogId::Dim2AssocFrob,
    ]);
    for id in &ids {
        let alg = cat(id);
        let rho = Representation::neg_left_mult(&alg).dual();
        let sd = constructions::semidirect_lie(&alg.commutator_algebra(), &rho).unwrap();
        let b = constructions::canonical_pairing_form(2);
        assert!(
            cocycles::check_form(&sd, &b, FormMode::Cocycle)
                .unwrap()
                .pass,
            "pairing form fails the cocycle check for {id}"
        );
    }
    println!("criterion 7 (cocycle solver + semidirect pairing): PASS");
}

#[test]
fn criterion_08_admissible_pair_pipeline() {
    for n in [3usize, 4, 5] {
        for k in [1usize, 2] {
            let obj = classify::catalog(&CatalogId::TruncPoly { n, k }).unwrap();
            let (alg, p) = (obj.algebra().clone(), obj.derivation().unwrap().clone());
            // the pair (P, P) passes
            assert!(
                apla_core::operators::check_structure_map(
                    &apla_core::operators::StructureMapCheck::AdmissiblePair {
                        algebra: &alg,
                        p: &p,
                        q: &p,
                    }
                )
                .unwrap()
                .pass
            );
            let star = constructions::pair_based_product(&alg, &p, &p, PairMode::Novikov).unwrap();
            assert!(check_identity(&star, IdentityId::PreLie).pass);
            assert!(check_identity(&star, IdentityId::NovikovRight).pass);
            let circ = constructions::pair_based_product(&alg, &p, &p, PairMode::AdmissibleNovikov)
                .unwrap();
            assert!(check_identity(&circ, IdentityId::AdmissibleNovikov).pass);
            let lie = constructions::pair_based_product(&alg, &p, &p, PairMode::Lie).unwrap();
            assert_eq!(lie.tensor(), circ.commutator_algebra().tensor());
            // Frobenius form: invariant on the product, cocycle on the bracket
            let b = classify::trunc_poly_frobenius_form(n);
            assert!(
                cocycles::check_form(&alg, &b, FormMode::AssocInvariant)
                    .unwrap()
                    .pass
            );
            assert!(
                cocycles::check_form(&lie, &b, FormMode::Cocycle)
                    .unwrap()
                    .pass
            );
        }
    }
    println!("criterion 8 (admissible-pair pipeline): PASS");
}

#[test]
fn criterion_09_triple_products() {
    let frob = classify::catalog(&CatalogId::Dim2AssocFrob).unwrap();
    let (alg, form) = (frob.algebra().clone(), frob.form().unwrap().clone());
    let q = Matrix::from_int_rows(&[&[0, 0], &[0, 1]]);
    let (c1, c2, c3) = constructions::frobenius_triple_products(&alg, &form, &q).unwrap();
    let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
    for (label, product, target) in [
        ("o1", c1, CatalogId::A4 { lambda: sc(1) }),
        ("o2", c2, CatalogId::A4 { lambda: sc(-2) }),
        ("o3", c3, CatalogId::A4 { lambda: sc(0) }),
    ] {
        assert!(
            classify::verify_iso_witness(&product, &cat(&target), &swap)
                .unwrap()
                .pass,
            "{label} should match {target}"
        );
    }
    println!("criterion 9 (Frobenius triple products): PASS");
}

#[test]
fn criterion_10_affinization() {
    let window = [0i64, 1, 2];
    for (id, mode) in [
        (CatalogId::N1 { lambda: sc(0) }, AffinizationMode::Novikov),
        (CatalogId::N2, AffinizationMode::Novikov),
        (
            CatalogId::AN1 { lambda: sc(0) },
            AffinizationMode::Admissible,
        ),
        (CatalogId::AN2, AffinizationMode::Admissible),
    ] {
        assert!(
            constructions::affinization_check(&cat(&id), mode, &window)
                .unwrap()
                .pass,
            "{id} must pass its affinization certificate"
        );
    }
    let fail = constructions::affinization_check(
        &cat(&CatalogId::A2 { lambda: sc(0) }),
        AffinizationMode::Admissible,
        &window,
    )
    .unwrap();
    assert!(!fail.pass);
    let w = fail.witness.unwrap();
    assert_eq!(
        w.indices.len(),
        6,
        "witness carries (m, n, p) and the triple"
    );
    println!("criterion 10 (affinization certificates): PASS");
}

#[test]
fn criterion_11_poisson_suite() {
    // the worked dim-3 example
    let dot = Algebra::from_int_entries(3, AlgebraRole::Product, &[(2, 2, 2, 1)]);
    let circ = Algebra::from_int_entries(3, AlgebraRole::Product, &[(0, 1, 1, 1), (2, 2, 2, 1)]);
    let two = TwoOpAlgebra::new(&dot, &circ, SecondRole::Circ).unwrap();
    assert!(poisson::check_poisson_identity(&two, PoissonIdentityId::Aplp1).pass);
    assert!(poisson::check_poisson_identity(&two, PoissonIdentityId::Aplp2).pass);
    assert!(!check_identity(&two.second_algebra(), IdentityId::AdmissibleNovikov).pass);

    // exhaustive F_2 verification of the Poisson biconditional
    let start = Instant::now();
    let out = poisson::poisson_correspondence_exhaustive(&[0, 1]);
    assert_eq!(out.pairs, 65536);
    assert!(out.mismatches.is_empty());
    assert!(out.derived_violations.is_empty());
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5, "took {elapsed:?}, budget 5 s");

    // derived identities and the transposed sub-adjacent structure on
    // generated instances
    let obj = classify::catalog(&CatalogId::TruncPoly { n: 3, k: 1 }).unwrap();
    let (alg, p) = (obj.algebra().clone(), obj.derivation().unwrap().clone());
    let pair_circ =
        constructions::pair_based_product(&alg, &p, &p, PairMode::AdmissibleNovikov).unwrap();
    let pair_poisson = TwoOpAlgebra::new(&alg, &pair_circ, SecondRole::Circ).unwrap();
    for instance in [&two, &pair_poisson] {
        assert!(poisson::derived_identities_hold(instance).unwrap().pass);
        let tp = poisson::sub_adjacent_transposed(instance).unwrap();
        assert!(poisson::check_poisson_identity(&tp, PoissonIdentityId::Transposed).pass);
        assert!(check_identity(&tp.second_algebra(), IdentityId::Jacobi).pass);
        // the Novikov-Poisson side of the correspondence
        let nov = poisson::poisson_two_transform(instance, PoissonTransform::ToNovikov);
        assert!(poisson::check_poisson_identity(&nov, PoissonIdentityId::Np1).pass);
        assert!(poisson::check_poisson_identity(&nov, PoissonIdentityId::Np2).pass);
    }

    // tensor product of two admissible-pair Poisson algebras: dim 9,
    // anti-pre-Lie Poisson and admissible Novikov
    let t = poisson::tensor_poisson(&pair_poisson, &pair_poisson).unwrap();
    assert_eq!(t.dim(), 9);
    assert!(poisson::check_poisson_identity(&t, PoissonIdentityId::Aplp1).pass);
    assert!(poisson::check_poisson_identity(&t, PoissonIdentityId::Aplp2).pass);
    assert!(check_identity(&t.second_algebra(), IdentityId::AdmissibleNovikov).pass);
    assert!(check_identity(&t.second_algebra(), IdentityId::AntiPreLie1).pass);
    println!("criterion 11 (Poisson suite, 65536 pairs in {elapsed:?}): PASS");
}

#[test]
fn criterion_12_cli_smoke() {
    let doc = include_str!("full_coverage.json");
    let dir = std::env::temp_dir().join("apla-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("full_coverage.json");
    std::fs::write(&path, doc).unwrap();

    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_apla"))
        .arg("run")
        .arg(&path)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(
        output.status.success(),
        "exit status {:?}\n{stdout}",
        output.status
    );
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget 60 s");
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let summary = &report["summary"];
    assert_eq!(summary["errors"], 0);
    assert_eq!(summary["failed"], 0);
    // every operation family is exercised
    let ops: BTreeSet<&str> = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["op"].as_str().unwrap())
        .collect();
    for required in [
        "check",
        "profile",
        "cocycles-solve",
        "cocycles-nondegenerate",
        "cocycles-induce",
        "cocycles-admissible-form",
        "operator-check",
        "operator-induce",
        "operator-enumerate-ff",
        "construct-linear-functions",
        "construct-symmetric-form",
        "construct-q-transform",
        "construct-pair",
        "construct-adjoint",
        "construct-semidirect",
        "construct-tensor-lie",
        "poisson-check",
        "poisson-derived",
        "poisson-transform",
        "poisson-sub-adjacent",
        "poisson-induce",
        "poisson-tensor",
        "classify-catalog",
        "classify-verify",
        "classify-fingerprint",
        "classify-witness",
        "affinize-check",
    ] {
        assert!(
            ops.contains(required),
            "recipe coverage misses `{required}`"
        );
    }
    println!(
        "criterion 12 (full-coverage CLI recipe, {} operations in {elapsed:?}): PASS",
        report["results"].as_array().unwrap().len()
    );
}
