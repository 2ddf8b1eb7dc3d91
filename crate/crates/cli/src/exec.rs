//! Execution engine shared by the direct subcommands and the `run` recipe
//! interpreter: one entry point per operation token, reading named arguments
//! and an object environment, producing a deterministic JSON result record.

use anyhow::{anyhow, bail, Result};
use apla_core::algebra::{Algebra, SecondRole, TwoOpAlgebra};
use apla_core::classify::{self, CatalogId, CatalogObject, IdempotentInvariants};
use apla_core::cocycles::{self, FormMode};
use apla_core::constructions::{self, AffinizationMode, PairMode, TensorLieMode};
use apla_core::form::BilinearForm;
use apla_core::identities::{self, IdentityId};
use apla_core::linalg::Matrix;
use apla_core::operators::{self, FfPredicate, FfSolution, OperatorLevel};
use apla_core::poisson::{self, PoissonIdentityId, PoissonTransform};
use apla_core::rep::Representation;
use apla_core::report::CheckReport;
use apla_core::scalar::Scalar;
use serde_json::{json, Map, Value};

use crate::document::{
    algebra_to_json, form_to_json, matrix_to_json, two_op_to_json, Document, Recipe,
};

/// Mutable object environment for a run: starts from the input document and
/// accumulates objects stored under `as` names.
pub struct Env {
    pub doc: Document,
    /// JSON-lines sink for streaming enumeration output.
    pub stream: Option<Box<dyn std::io::Write>>,
}

/// Outcome of one operation.
pub struct Outcome {
    /// `pass` / `fail` for checks, `ok` for constructions and queries.
    pub status: &'static str,
    pub record: Map<String, Value>,
}

impl Outcome {
    fn from_report(op: &str, extra: Map<String, Value>, report: &CheckReport) -> Outcome {
        let mut record = extra;
        record.insert("op".into(), Value::String(op.into()));
        let status = if report.pass { "pass" } else { "fail" };
        record.insert("status".into(), Value::String(status.into()));
        if let Some(w) = &report.witness {
            record.insert(
                "witness".into(),
                json!({
                    "identity": w.identity,
                    "indices": w.indices,
                    "residual": w.residual.iter().map(|s| s.canonical_string()).collect::<Vec<_>>(),
                }),
            );
        }
        Outcome { status, record }
    }

    fn ok(op: &str, mut record: Map<String, Value>) -> Outcome {
        record.insert("op".into(), Value::String(op.into()));
        record.insert("status".into(), Value::String("ok".into()));
        Outcome {
            status: "ok",
            record,
        }
    }
}

fn arg<'a>(args: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    args.get(key)
        .ok_or_else(|| anyhow!("missing argument `{key}`"))
}

fn str_arg<'a>(args: &'a Map<String, Value>, key: &str) -> Result<&'a str> {
    arg(args, key)?
        .as_str()
        .ok_or_else(|| anyhow!("argument `{key}` must be a string"))
}

fn opt_str<'a>(args: &'a Map<String, Value>, key: &str) -> Option<&'a str> {
    args.get(key).and_then(Value::as_str)
}

fn bool_arg(args: &Map<String, Value>, key: &str) -> bool {
    args.get(key).and_then(Value::as_bool).unwrap_or(false)
}

fn parse_scalar(env: &Env, text: &str) -> Result<Scalar> {
    let (value, canonical) = Scalar::parse(text, env.doc.mode)?;
    if env.doc.strict && !canonical {
        bail!("`{text}` is not canonical (expected `{value}`)");
    }
    Ok(value)
}

fn scalar_arg(env: &Env, args: &Map<String, Value>, key: &str) -> Result<Scalar> {
    parse_scalar(env, str_arg(args, key)?)
}

fn scalar_list(env: &Env, v: &Value, at: &str) -> Result<Vec<Scalar>> {
    let arr = v
        .as_array()
        .ok_or_else(|| anyhow!("`{at}` must be an array of scalar strings"))?;
    arr.iter()
        .map(|s| {
            let s = s
                .as_str()
                .ok_or_else(|| anyhow!("`{at}` entries must be strings"))?;
            parse_scalar(env, s)
        })
        .collect()
}

/// Resolves an algebra reference: a document name first, then a catalog
/// token such as `A2?lambda=-1/2`.
pub fn resolve_algebra(env: &Env, name: &str) -> Result<Algebra> {
    if let Some(a) = env.doc.algebras.get(name) {
        return Ok(a.clone());
    }
    let id = CatalogId::parse_token(name, env.doc.mode)
        .map_err(|e| anyhow!("unknown algebra `{name}`: {e}"))?;
    Ok(classify::catalog(&id)?.into_algebra())
}

fn resolve_catalog_object(env: &Env, name: &str) -> Result<CatalogObject> {
    let id = CatalogId::parse_token(name, env.doc.mode)?;
    Ok(classify::catalog(&id)?)
}

/// Form references: a document name, `identity:<n>`, `pairing:<n>`,
/// `trunc-frobenius:<n>`, or `catalog:<token>` for a catalog entry's
/// attached form.
fn resolve_form(env: &Env, name: &str) -> Result<BilinearForm> {
    if let Some(f) = env.doc.forms.get(name) {
        return Ok(f.clone());
    }
    if let Some(rest) = name.strip_prefix("identity:") {
        return Ok(BilinearForm::identity(rest.parse()?));
    }
    if let Some(rest) = name.strip_prefix("pairing:") {
        return Ok(constructions::canonical_pairing_form(rest.parse()?));
    }
    if let Some(rest) = name.strip_prefix("trunc-frobenius:") {
        return Ok(classify::trunc_poly_frobenius_form(rest.parse()?));
    }
    if let Some(rest) = name.strip_prefix("catalog:") {
        return resolve_catalog_object(env, rest)?
            .form()
            .cloned()
            .ok_or_else(|| anyhow!("catalog entry `{rest}` carries no form"));
    }
    bail!("unknown form `{name}`")
}

/// Map references: a document name, `identity:<n>`, or
/// `derivation:<catalog token>`.
fn resolve_map(env: &Env, name: &str) -> Result<Matrix> {
    if let Some(m) = env.doc.maps.get(name) {
        return Ok(m.clone());
    }
    if let Some(rest) = name.strip_prefix("identity:") {
        return Ok(Matrix::identity(rest.parse()?));
    }
    if let Some(rest) = name.strip_prefix("derivation:") {
        return resolve_catalog_object(env, rest)?
            .derivation()
            .cloned()
            .ok_or_else(|| anyhow!("catalog entry `{rest}` carries no derivation"));
    }
    bail!("unknown map `{name}`")
}

/// Representation references: a document name or one of
/// `adjoint:<alg>`, `coadjoint:<alg>`, `neg-left-mult:<alg>`,
/// `dual-neg-left-mult:<alg>`, `trivial:<n>x<m>`.
fn resolve_rep(env: &Env, name: &str) -> Result<Representation> {
    if let Some(r) = env.doc.representations.get(name) {
        return Ok(r.clone());
    }
    if let Some(rest) = name.strip_prefix("adjoint:") {
        return Ok(Representation::adjoint(&resolve_algebra(env, rest)?));
    }
    if let Some(rest) = name.strip_prefix("coadjoint:") {
        return Ok(Representation::adjoint(&resolve_algebra(env, rest)?).dual());
    }
    if let Some(rest) = name.strip_prefix("neg-left-mult:") {
        return Ok(Representation::neg_left_mult(&resolve_algebra(env, rest)?));
    }
    if let Some(rest) = name.strip_prefix("dual-neg-left-mult:") {
        return Ok(Representation::neg_left_mult(&resolve_algebra(env, rest)?).dual());
    }
    if let Some(rest) = name.strip_prefix("trivial:") {
        let (n, m) = rest
            .split_once('x')
            .ok_or_else(|| anyhow!("trivial rep needs `<n>x<m>`"))?;
        return Ok(Representation::trivial(n.parse()?, m.parse()?));
    }
    bail!("unknown representation `{name}`")
}

/// Two-op references: a document name or an inline object
/// `{"dot": <alg ref>, "circ"|"star"|"bracket": <alg ref>}`.
fn resolve_two_op(env: &Env, v: &Value) -> Result<TwoOpAlgebra> {
    if let Some(name) = v.as_str() {
        return env
            .doc
            .two_ops
            .get(name)
            .cloned()
            .ok_or_else(|| anyhow!("unknown two-op algebra `{name}`"));
    }
    let obj = v
        .as_object()
        .ok_or_else(|| anyhow!("two-op reference must be a name or an object"))?;
    let dot = resolve_algebra(
        env,
        obj.get("dot")
            .and_then(Value::as_str)
            .ok_or_else(|| anyhow!("inline two-op needs `dot`"))?,
    )?;
    for (key, role) in [
        ("circ", SecondRole::Circ),
        ("star", SecondRole::Star),
        ("bracket", SecondRole::Bracket),
    ] {
        if let Some(second) = obj.get(key).and_then(Value::as_str) {
            let second = resolve_algebra(env, second)?;
            return Ok(TwoOpAlgebra::new(&dot, &second, role)?);
        }
    }
    bail!("inline two-op needs one of `circ`, `star`, `bracket`")
}

fn store_algebra(env: &mut Env, args: &Map<String, Value>, alg: &Algebra) {
    if let Some(name) = opt_str(args, "as") {
        env.doc.algebras.insert(name.to_string(), alg.clone());
    }
}

fn store_two_op(env: &mut Env, args: &Map<String, Value>, two: &TwoOpAlgebra) {
    if let Some(name) = opt_str(args, "as") {
        env.doc.two_ops.insert(name.to_string(), two.clone());
    }
}

fn store_form(env: &mut Env, name: Option<&str>, form: &BilinearForm) {
    if let Some(name) = name {
        env.doc.forms.insert(name.to_string(), form.clone());
    }
}

fn store_map(env: &mut Env, args: &Map<String, Value>, m: &Matrix) {
    if let Some(name) = opt_str(args, "as") {
        env.doc.maps.insert(name.to_string(), m.clone());
    }
}

fn form_space_to_json(space: &cocycles::FormSpace) -> Value {
    json!({
        "ambient-dim": space.ambient_dim(),
        "symmetric": space.symmetric(),
        "dim": space.dim(),
        "basis": space.basis().iter().map(form_to_json).collect::<Vec<_>>(),
    })
}

/// Executes one operation. Errors signal validation/precondition problems;
/// check failures come back as `fail` outcomes.
pub fn execute(env: &mut Env, recipe: &Recipe) -> Result<Outcome> {
    let args = &recipe.args;
    let mut extra = Map::new();
    match recipe.op.as_str() {
        "check" => {
            let alg = resolve_algebra(env, str_arg(args, "alg")?)?;
            let id: IdentityId = str_arg(args, "identity")?.parse()?;
            extra.insert("alg".into(), Value::String(str_arg(args, "alg")?.into()));
            extra.insert("identity".into(), Value::String(id.token().into()));
            let report = identities::check_identity(&alg, id);
            Ok(Outcome::from_report("check", extra, &report))
        }
        "profile" => {
            let alg = resolve_algebra(env, str_arg(args, "alg")?)?;
            let profile = identities::identity_profile(&alg);
            extra.insert(
                "profile".into(),
                Value::Array(
                    profile
                        .iter()
                        .map(|id| Value::String(id.token().into()))
                        .collect(),
                ),
            );
            Ok(Outcome::ok("profile", extra))
        }
        "cocycles-solve" => {
            let alg = resolve_algebra(env, str_arg(args, "alg")?)?;
            let mode = FormMode::parse(str_arg(args, "mode")?)?;
            let symmetric = args
                .get("symmetric")
                .and_then(Value::as_bool)
                .unwrap_or(true);
            let space = cocycles::solve_form_space(&alg, mode, symmetric)?;
            extra.insert("space".into(), form_space_to_json(&space));
            if let Some(name) = opt_str(args, "as") {
                // spaces are stored member-wise under `<name>.<k>`
                for (k, b) in space.basis().iter().enumerate() {
                    store_form(env, Some(&format!("{name}.{k}")), b);
                }
                extra.insert("stored".into(), Value::from(space.dim()));
            }
            Ok(Outcome::ok("cocycles-solve", extra))
        }
        "cocycles-nondegenerate" => {
            let alg = resolve_algebra(env, str_arg(args, "alg")?)?;
            let mode = FormMode::parse(str_arg(args, "mode")?)?;
            let symmetric = args
                .get("symmetric")
                .and_then(Value::as_bool)
                .unwrap_or(true);
            let radius = args
                .get("max-radius")
                .and_then(Value::as_i64)
                .unwrap_or(cocycles::DEFAULT_SEARCH_RADIUS);
            let space = cocycles::solve_form_space(&alg, mode, symmetric)?;
            match cocycles::nondegenerate_member(&space, radius) {
                Some(b) => {
                    extra.insert("form".into(), form_to_json(&b));
                    store_form(env, opt_str(args, "as"), &b);
                    Ok(Outcome::ok("cocycles-nondegenerate", extra))
                }
                None => {
                    extra.insert(
                        "message".into(),
                        Value::String(format!(
                            "no nondegenerate member found within box radius {radius}"
                        )),
                    );
                    extra.insert("op".into(), Value::String("cocycles-nondegenerate".into()));
                    extra.insert("status".into(), Value::String("fail".into()));
                    Ok(Outcome {
                        status: "fail",
                        record: extra,
                    })
                }
            }
        }
        "cocycles-induce" => {
            let lie = resolve_algebra(env, str_arg(args, "lie")?)?;
            let form = resolve_form(env, str_arg(args, "form")?)?;
            let induced = cocycles::induce_compatible_product(&lie, &form)?;
            extra.insert("algebra".into(), algebra_to_json(&induced));
            store_algebra(env, args, &induced);
            Ok(Outcome::ok("cocycles-induce", extra))
        }
        "cocycles-admissible-form" => {
            let lie = resolve_algebra(env, str_arg(args, "lie")?)?;
            let form = resolve_form(env, str_arg(args, "form")?)?;
            let report = cocycles::check_admissibility_form(&lie, &form)?;
            Ok(Outcome::from_report(
                "cocycles-admissible-form",
                extra,
                &report,
            ))
        }
        "operator-check" => {
            let lie = resolve_algebra(env, str_arg(args, "lie")?)?;
            let map = resolve_map(env, str_arg(args, "map")?)?;
            let rep = match opt_str(args, "rep") {
                Some(r) => resolve_rep(env, r)?,
                None => Representation::adjoint(&lie),
            };
            let level: OperatorLevel = str_arg(args, "level")?.parse()?;
            extra.insert("level".into(), Value::String(level.token().into()));
            let report = operators::check_operator(&map, &lie, &rep, level)?;
            Ok(Outcome::from_report("operator-check", extra, &report))
        }
        "operator-induce" => {
            let lie = resolve_algebra(env, str_arg(args, "lie")?)?;
            let map = resolve_map(env, str_arg(args, "map")?)?;
            let rep = match opt_str(args, "rep") {
                Some(r) => resolve_rep(env, r)?,
                None => Representation::adjoint(&lie),
            };
            let induced = operators::induced_algebra(&map, &rep)?;
            extra.insert("algebra".into(), algebra_to_json(&induced));
            store_algebra(env, args, &induced);
            Ok(Outcome::ok("operator-induce", extra))
        }
        "operator-enumerate-ff" => {
            let p = arg(args, "p")?
                .as_u64()
                .ok_or_else(|| anyhow!("`p` must be an integer"))?;
            let orbits = bool_arg(args, "orbits");
            let bracket;
            let profile_ids;
            let predicate = if let Some(ids) = args.get("profile") {
                let ids = ids
                    .as_array()
                    .ok_or_else(|| anyhow!("`profile` must be an array of identity tokens"))?;
                profile_ids = ids
                    .iter()
                    .map(|v| {
                        v.as_str()
                            .ok_or_else(|| anyhow!("identity tokens must be strings"))?
                            .parse::<IdentityId>()
                            .map_err(Into::into)
                    })
                    .collect::<Result<Vec<_>>>()?;
                FfPredicate::Profile(&profile_ids)
            } else if let Some(b) = opt_str(args, "anti-rota-baxter") {
                bracket = resolve_algebra(env, b)?;
                FfPredicate::AntiRotaBaxter { bracket: &bracket }
            } else {
                bail!("operator-enumerate-ff needs `profile` or `anti-rota-baxter`")
            };
            let out = operators::ff_enumerate(p, 2, &predicate, orbits)?;
            extra.insert("p".into(), Value::from(p));
            extra.insert("count".into(), Value::from(out.solutions.len()));
            if let Some(orbits) = out.orbit_count {
                extra.insert("orbit-count".into(), Value::from(orbits));
            }
            if bool_arg(args, "stream") {
                if let Some(sink) = env.stream.as_mut() {
                    for s in &out.solutions {
                        let line = match s {
                            FfSolution::Tensor(a) => {
                                json!({"tensor": crate::document::tensor_to_json(a)})
                            }
                            FfSolution::Matrix(m) => json!({"matrix": matrix_to_json(m)}),
                        };
                        writeln!(sink, "{line}")?;
                    }
                }
            } else {
                extra.insert(
                    "solutions".into(),
                    Value::Array(
                        out.solutions
                            .iter()
                            .map(|s| match s {
                                FfSolution::Tensor(a) => {
                                    json!({"tensor": crate::document::tensor_to_json(a)})
                                }
                                FfSolution::Matrix(m) => json!({"matrix": matrix_to_json(m)}),
                            })
                            .collect(),
                    ),
                );
            }
            Ok(Outcome::ok("operator-enumerate-ff", extra))
        }
        "construct-linear-functions" => {
            let f = scalar_list(env, arg(args, "f")?, "f")?;
            let g = scalar_list(env, arg(args, "g")?, "g")?;
            let (alg, is_apl) = constructions::from_linear_functions(&f, &g)?;
            extra.insert("algebra".into(), algebra_to_json(&alg));
            extra.insert("anti-pre-lie".into(), Value::Bool(is_apl));
            store_algebra(env, args, &alg);
            Ok(Outcome::ok("construct-linear-functions", extra))
        }
        "construct-symmetric-form" => {
            let form = resolve_form(env, str_arg(args, "form")?)?;
            let s = scalar_list(env, arg(args, "s")?, "s")?;
            let alg = constructions::from_symmetric_form(&form, &s)?;
            extra.insert("algebra".into(), algebra_to_json(&alg));
            store_algebra(env, args, &alg);
            Ok(Outcome::ok("construct-symmetric-form", extra))
        }
        "construct-q-transform" => {
            let alg = resolve_algebra(env, str_arg(args, "alg")?)?;
            let out = if bool_arg(args, "inverse-two") {
                constructions::exact_inverse_two_transform(&alg)
            } else {
                let q = scalar_arg(env, args, "q")?;
                constructions::q_transform(&alg, &q)
            };
            extra.insert("algebra".into(), algebra_to_json(&out));
            store_algebra(env, args, &out);
            Ok(Outcome::ok("construct-q-transform", extra))
        }
        "construct-pair" => {
            let assoc = resolve_algebra(env, str_arg(args, "assoc")?)?;
            let p = resolve_map(env, str_arg(args, "p")?)?;
            let q = resolve_map(env, str_arg(args, "q")?)?;
            let mode = PairMode::parse(str_arg(args, "mode")?)?;
            let out = constructions::pair_based_product(&assoc, &p, &q, mode)?;
            extra.insert("algebra".into(), algebra_to_json(&out));
            store_algebra(env, args, &out);
            Ok(Outcome::ok("construct-pair", extra))
        }
        "construct-adjoint" => {
            let assoc = resolve_algebra(env, str_arg(args, "assoc")?)?;
            let form = resolve_form(env, str_arg(args, "form")?)?;
            let q = resolve_map(env, str_arg(args, "q")?)?;
            let out = constructions::adjoint_operator(&assoc, &form, &q)?;
            extra.insert("map".into(), matrix_to_json(&out));
            store_map(env, args, &out);
            Ok(Outcome::ok("construct-adjoint", extra))
        }
        "construct-semidirect" => {
            let lie = resolve_algebra(env, str_arg(args, "lie")?)?;
            let rep = resolve_rep(env, str_arg(args, "rep")?)?;
            let out = constructions::semidirect_lie(&lie, &rep)?;
            extra.insert("algebra".into(), algebra_to_json(&out));
            store_algebra(env, args, &out);
            if bool_arg(args, "with-pairing-form") {
                let b = constructions::canonical_pairing_form(lie.dim());
                extra.insert("pairing-form".into(), form_to_json(&b));
                store_form(env, opt_str(args, "as-form"), &b);
            }
            Ok(Outcome::ok("construct-semidirect", extra))
        }
        "construct-tensor-lie" => {
            let assoc = resolve_algebra(env, str_arg(args, "assoc")?)?;
            let p = resolve_map(env, str_arg(args, "p")?)?;
            let q = resolve_map(env, str_arg(args, "q")?)?;
            let v = resolve_algebra(env, str_arg(args, "v")?)?;
            let mode = match str_arg(args, "mode")? {
                "novikov" => TensorLieMode::Novikov,
                "admissible" => TensorLieMode::Admissible,
                other => bail!("unknown tensor-lie mode `{other}`"),
            };
            let out = constructions::tensor_lie(&assoc, &p, &q, &v, mode)?;
            extra.insert("algebra".into(), algebra_to_json(&out));
            store_algebra(env, args, &out);
            Ok(Outcome::ok("construct-tensor-lie", extra))
        }
        "poisson-check" => {
            let two = resolve_two_op(env, arg(args, "two")?)?;
            let id: PoissonIdentityId = str_arg(args, "identity")?.parse()?;
            extra.insert("identity".into(), Value::String(id.token().into()));
            let report = poisson::check_poisson_identity(&two, id);
            Ok(Outcome::from_report("poisson-check", extra, &report))
        }
        "poisson-derived" => {
            let two = resolve_two_op(env, arg(args, "two")?)?;
            let report = poisson::derived_identities_hold(&two)?;
            Ok(Outcome::from_report("poisson-derived", extra, &report))
        }
        "poisson-transform" => {
            let two = resolve_two_op(env, arg(args, "two")?)?;
            let direction = PoissonTransform::parse(str_arg(args, "direction")?)?;
            let out = poisson::poisson_two_transform(&two, direction);
            extra.insert("two-op".into(), two_op_to_json(&out));
            store_two_op(env, args, &out);
            Ok(Outcome::ok("poisson-transform", extra))
        }
        "poisson-sub-adjacent" => {
            let two = resolve_two_op(env, arg(args, "two")?)?;
            let out = poisson::sub_adjacent_transposed(&two)?;
            extra.insert("two-op".into(), two_op_to_json(&out));
            store_two_op(env, args, &out);
            Ok(Outcome::ok("poisson-sub-adjacent", extra))
        }
        "poisson-induce" => {
            let two = resolve_two_op(env, arg(args, "two")?)?;
            let form = resolve_form(env, str_arg(args, "form")?)?;
            let out = poisson::induce_poisson_from_form(&two, &form)?;
            extra.insert("two-op".into(), two_op_to_json(&out));
            store_two_op(env, args, &out);
            Ok(Outcome::ok("poisson-induce", extra))
        }
        "poisson-tensor" => {
            let a = resolve_two_op(env, arg(args, "a")?)?;
            let b = resolve_two_op(env, arg(args, "b")?)?;
            let out = poisson::tensor_poisson(&a, &b)?;
            extra.insert("dim".into(), Value::from(out.dim()));
            extra.insert("two-op".into(), two_op_to_json(&out));
            store_two_op(env, args, &out);
            Ok(Outcome::ok("poisson-tensor", extra))
        }
        "classify-catalog" => {
            let token = str_arg(args, "id")?;
            let obj = resolve_catalog_object(env, token)?;
            extra.insert("id".into(), Value::String(token.into()));
            extra.insert("algebra".into(), algebra_to_json(obj.algebra()));
            if let Some(f) = obj.form() {
                extra.insert("form".into(), form_to_json(f));
            }
            if let Some(d) = obj.derivation() {
                extra.insert("derivation".into(), matrix_to_json(d));
            }
            if let Some(name) = opt_str(args, "as") {
                env.doc
                    .algebras
                    .insert(name.to_string(), obj.algebra().clone());
                if let Some(f) = obj.form() {
                    env.doc.forms.insert(format!("{name}.form"), f.clone());
                }
                if let Some(d) = obj.derivation() {
                    env.doc.maps.insert(format!("{name}.derivation"), d.clone());
                }
            }
            Ok(Outcome::ok("classify-catalog", extra))
        }
        "classify-verify" => {
            let token = str_arg(args, "id")?;
            let id = CatalogId::parse_token(token, env.doc.mode)?;
            let v = classify::verify_catalog_entry(&id)?;
            extra.insert("id".into(), Value::String(v.id.clone()));
            extra.insert(
                "checks".into(),
                Value::Array(
                    v.checks
                        .iter()
                        .map(|(iid, expected, report)| {
                            json!({
                                "identity": iid.token(),
                                "expected-pass": expected,
                                "actual-pass": report.pass,
                            })
                        })
                        .collect(),
                ),
            );
            if !v.extra.is_empty() {
                extra.insert(
                    "extra-checks".into(),
                    Value::Array(
                        v.extra
                            .iter()
                            .map(|(name, report)| json!({"name": name, "pass": report.pass}))
                            .collect(),
                    ),
                );
            }
            let status = if v.ok { "pass" } else { "fail" };
            extra.insert("op".into(), Value::String("classify-verify".into()));
            extra.insert("status".into(), Value::String(status.into()));
            Ok(Outcome {
                status,
                record: extra,
            })
        }
        "classify-fingerprint" => {
            let alg = resolve_algebra(env, str_arg(args, "alg")?)?;
            let fp = classify::fingerprint(&alg)?;
            let idem = match &fp.idempotents {
                IdempotentInvariants::Infinite => Value::String("infinite".into()),
                IdempotentInvariants::Finite(data) => Value::Array(
                    data.iter()
                        .map(|(l, r)| {
                            json!({
                                "left-char-poly": l.iter().map(|s| s.canonical_string()).collect::<Vec<_>>(),
                                "right-char-poly": r.iter().map(|s| s.canonical_string()).collect::<Vec<_>>(),
                            })
                        })
                        .collect(),
                ),
            };
            extra.insert(
                "fingerprint".into(),
                json!({
                    "commutative": fp.commutative,
                    "product-span-dim": fp.product_span_dim,
                    "left-annihilator-dim": fp.left_annihilator_dim,
                    "right-annihilator-dim": fp.right_annihilator_dim,
                    "subadjacent-abelian": fp.subadjacent_abelian,
                    "idempotents": idem,
                }),
            );
            Ok(Outcome::ok("classify-fingerprint", extra))
        }
        "classify-witness" => {
            let a_tok = str_arg(args, "a")?;
            let b_tok = str_arg(args, "b")?;
            let a = resolve_algebra(env, a_tok)?;
            let b = resolve_algebra(env, b_tok)?;
            let matrix = if let Some(m) = opt_str(args, "map") {
                resolve_map(env, m)?
            } else {
                let ia = CatalogId::parse_token(a_tok, env.doc.mode)?;
                let ib = CatalogId::parse_token(b_tok, env.doc.mode)?;
                classify::stored_witness_for(&ia, &ib)
                    .ok_or_else(|| anyhow!("no stored witness for `{a_tok}` -> `{b_tok}`"))?
                    .matrix
            };
            let report = classify::verify_iso_witness(&a, &b, &matrix)?;
            extra.insert("map".into(), matrix_to_json(&matrix));
            Ok(Outcome::from_report("classify-witness", extra, &report))
        }
        "affinize-check" => {
            let alg = resolve_algebra(env, str_arg(args, "alg")?)?;
            let mode = AffinizationMode::parse(str_arg(args, "mode")?)?;
            let window: Vec<i64> = match args.get("window") {
                None => vec![0, 1, 2],
                Some(v) => v
                    .as_array()
                    .ok_or_else(|| anyhow!("`window` must be an array of integers"))?
                    .iter()
                    .map(|x| {
                        x.as_i64()
                            .ok_or_else(|| anyhow!("window entries must be integers"))
                    })
                    .collect::<Result<_>>()?,
            };
            let report = constructions::affinization_check(&alg, mode, &window)?;
            Ok(Outcome::from_report("affinize-check", extra, &report))
        }
        other => bail!("unknown operation `{other}`"),
    }
}

/// Runs every recipe of the environment's document, collecting one record
/// per recipe. Operation errors become `error` records, not crashes.
pub fn run_document(env: &mut Env) -> (Vec<Value>, RunSummary) {
    let recipes = env.doc.recipes.clone();
    let mut results = Vec::new();
    let mut summary = RunSummary::default();
    for recipe in &recipes {
        match execute(env, recipe) {
            Ok(outcome) => {
                match outcome.status {
                    "pass" | "ok" => summary.passed += 1,
                    _ => summary.failed += 1,
                }
                results.push(Value::Object(outcome.record));
            }
            Err(e) => {
                summary.errors += 1;
                results.push(json!({
                    "op": recipe.op,
                    "status": "error",
                    "message": format!("{e:#}"),
                }));
            }
        }
        summary.total += 1;
    }
    (results, summary)
}

#[derive(Debug, Default, Clone, Copy)]
pub struct RunSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

impl RunSummary {
    pub fn exit_code(&self) -> i32 {
        if self.errors > 0 {
            2
        } else if self.failed > 0 {
            1
        } else {
            0
        }
    }
}
