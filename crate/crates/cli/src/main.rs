//! `apla` — batch front end for the exact nonassociative-algebra workbench.
//!
//! One command per invocation; reports are deterministic JSON documents.
//! Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
//! validation error.

mod document;
mod exec;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use document::{parse_document, Document, Recipe};
use exec::{Env, RunSummary};

#[derive(Parser)]
#[command(
    name = "apla",
    version,
    about = "Exact workbench for structure-constant algebras"
)]
struct Cli {
    /// Input document with named algebras, forms, maps and representations.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one identity on an algebra.
    Check {
        /// Algebra reference: a document name or a catalog token like `A2?lambda=-1/2`.
        #[arg(long)]
        alg: String,
        /// Identity token, e.g. `anti-pre-lie-1`.
        #[arg(long)]
        identity: String,
    },
    /// Compute the full identity profile of an algebra.
    Profile {
        #[arg(long)]
        alg: String,
    },
    /// Bilinear-form solvers and the induced compatible product.
    #[command(subcommand)]
    Cocycles(CocyclesCmd),
    /// Anti-O-operator checks, induced products and finite-field enumeration.
    #[command(subcommand)]
    Operator(OperatorCmd),
    /// Generative constructions.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Two-operation (Poisson-type) structures.
    #[command(subcommand)]
    Poisson(PoissonCmd),
    /// Catalog access, verification, fingerprints and witnesses.
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Grid certificate for the affinization Jacobi identity.
    AffinizeCheck {
        #[arg(long)]
        alg: String,
        /// `novikov` or `admissible`.
        #[arg(long)]
        mode: String,
        /// Comma-separated grades, default `0,1,2`.
        #[arg(long)]
        window: Option<String>,
    },
    /// Execute every recipe in a document.
    Run {
        /// Recipe document (also provides the named objects).
        document: PathBuf,
    },
}

#[derive(Subcommand)]
enum CocyclesCmd {
    /// Solve the linear system of a form condition.
    Solve(FormSpaceArgs),
    /// Solve, then search for a nondegenerate member.
    Nondegenerate {
        #[command(flatten)]
        space: FormSpaceArgs,
        /// Expanding-box search radius.
        #[arg(long, default_value_t = 3)]
        max_radius: i64,
    },
    /// Induce the compatible product from a nondegenerate cocycle.
    Induce {
        #[arg(long)]
        lie: String,
        #[arg(long)]
        form: String,
    },
    /// Quadrilinear admissibility criterion of a cocycle.
    AdmissibleForm {
        #[arg(long)]
        lie: String,
        #[arg(long)]
        form: String,
    },
}

#[derive(Args)]
struct FormSpaceArgs {
    #[arg(long)]
    alg: String,
    /// `cocycle`, `apl-invariant`, `assoc-invariant` or `novikov-invariance`.
    #[arg(long)]
    mode: String,
    /// Solve over general (not symmetric) forms.
    #[arg(long)]
    general: bool,
}

#[derive(Subcommand)]
enum OperatorCmd {
    /// Check an operator condition.
    Check {
        #[arg(long)]
        map: String,
        #[arg(long)]
        lie: String,
        /// Representation reference; defaults to the adjoint of `--lie`.
        #[arg(long)]
        rep: Option<String>,
        /// `anti-o`, `strong`, `admissible`, `cons2` or `anti-derivation`.
        #[arg(long)]
        level: String,
    },
    /// Product induced on the representation space.
    Induce {
        #[arg(long)]
        map: String,
        #[arg(long)]
        lie: String,
        #[arg(long)]
        rep: Option<String>,
    },
    /// Exhaustive dim-2 enumeration over a prime field.
    EnumerateFf {
        #[arg(long)]
        p: u64,
        /// Comma-separated identity tokens the tensors must satisfy.
        #[arg(long)]
        profile: Option<String>,
        /// Enumerate anti-Rota-Baxter operators on this bracket instead.
        #[arg(long)]
        anti_rota_baxter: Option<String>,
        /// Group tensor solutions into GL_2-orbits.
        #[arg(long)]
        orbits: bool,
        /// Stream solutions as JSON lines on stdout.
        #[arg(long)]
        stream: bool,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// `x o y = f(y) x + g(x) y`.
    LinearFunctions {
        /// Comma-separated coefficient row of `f`.
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// `x o y = B(x, y) s - B(x, s) y`.
    SymmetricForm {
        #[arg(long)]
        form: String,
        /// Comma-separated coordinates of `s`.
        #[arg(long)]
        s: String,
    },
    /// The q-algebra, or the exact inverse of the 2-transform.
    QTransform {
        #[arg(long)]
        alg: String,
        #[arg(long)]
        q: Option<String>,
        /// Apply `x * y = -(1/3) x o y + (2/3) y o x` instead.
        #[arg(long)]
        inverse_two: bool,
    },
    /// Product induced by an admissible pair.
    Pair {
        #[arg(long)]
        assoc: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        /// `novikov`, `admissible-novikov` or `lie`.
        #[arg(long)]
        mode: String,
    },
    /// Adjoint operator with respect to an invariant form.
    Adjoint {
        #[arg(long)]
        assoc: String,
        #[arg(long)]
        form: String,
        #[arg(long)]
        q: String,
    },
    /// Semidirect-product Lie bracket.
    Semidirect {
        #[arg(long)]
        lie: String,
        #[arg(long)]
        rep: String,
        /// Also emit the canonical pairing form on `g + g*`.
        #[arg(long)]
        with_pairing_form: bool,
    },
    /// Tensor-product Lie bracket from an admissible pair and a (admissible)
    /// Novikov algebra.
    TensorLie {
        #[arg(long)]
        assoc: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        v: String,
        /// `novikov` or `admissible`.
        #[arg(long)]
        mode: String,
    },
}

#[derive(Subcommand)]
enum PoissonCmd {
    /// Check one two-operation identity.
    Check {
        #[arg(long)]
        two: String,
        #[arg(long)]
        identity: String,
    },
    /// The seven derived identities, given aplp-1 and aplp-2.
    Derived {
        #[arg(long)]
        two: String,
    },
    /// Transform between anti-pre-Lie Poisson and Novikov-Poisson.
    Transform {
        #[arg(long)]
        two: String,
        /// `to-novikov` or `to-admissible`.
        #[arg(long)]
        direction: String,
    },
    /// Replace the second operation by its commutator.
    SubAdjacent {
        #[arg(long)]
        two: String,
    },
    /// Induce the anti-pre-Lie Poisson structure from a form.
    Induce {
        #[arg(long)]
        two: String,
        #[arg(long)]
        form: String,
    },
    /// Tensor product of two anti-pre-Lie Poisson algebras.
    Tensor {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
}

#[derive(Subcommand)]
enum ClassifyCmd {
    /// Print a catalog entry.
    Catalog {
        #[arg(long)]
        id: String,
    },
    /// Verify a catalog entry against its expected identity profile.
    Verify {
        #[arg(long)]
        id: String,
    },
    /// Basis-invariant fingerprint of an algebra.
    Fingerprint {
        #[arg(long)]
        alg: String,
    },
    /// Verify an isomorphism witness.
    Witness {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Witness matrix reference; omitted means "use the stored witness".
        #[arg(long)]
        map: Option<String>,
    },
}

fn scalar_csv(s: &str) -> Value {
    Value::Array(
        s.split(',')
            .map(|x| Value::String(x.trim().to_string()))
            .collect(),
    )
}

fn to_recipe(command: &Command) -> Option<Recipe> {
    let mut args = Map::new();
    let op: &str = match command {
        Command::Check { alg, identity } => {
            args.insert("alg".into(), json!(alg));
            args.insert("identity".into(), json!(identity));
            "check"
        }
        Command::Profile { alg } => {
            args.insert("alg".into(), json!(alg));
            "profile"
        }
        Command::Cocycles(c) => match c {
            CocyclesCmd::Solve(space) => {
                args.insert("alg".into(), json!(space.alg));
                args.insert("mode".into(), json!(space.mode));
                args.insert("symmetric".into(), json!(!space.general));
                "cocycles-solve"
            }
            CocyclesCmd::Nondegenerate { space, max_radius } => {
                args.insert("alg".into(), json!(space.alg));
                args.insert("mode".into(), json!(space.mode));
                args.insert("symmetric".into(), json!(!space.general));
                args.insert("max-radius".into(), json!(max_radius));
                "cocycles-nondegenerate"
            }
            CocyclesCmd::Induce { lie, form } => {
                args.insert("lie".into(), json!(lie));
                args.insert("form".into(), json!(form));
                "cocycles-induce"
            }
            CocyclesCmd::AdmissibleForm { lie, form } => {
                args.insert("lie".into(), json!(lie));
                args.insert("form".into(), json!(form));
                "cocycles-admissible-form"
            }
        },
        Command::Operator(o) => match o {
            OperatorCmd::Check {
                map,
                lie,
                rep,
                level,
            } => {
                args.insert("map".into(), json!(map));
                args.insert("lie".into(), json!(lie));
                if let Some(rep) = rep {
                    args.insert("rep".into(), json!(rep));
                }
                args.insert("level".into(), json!(level));
                "operator-check"
            }
            OperatorCmd::Induce { map, lie, rep } => {
                args.insert("map".into(), json!(map));
                args.insert("lie".into(), json!(lie));
                if let Some(rep) = rep {
                    args.insert("rep".into(), json!(rep));
                }
                "operator-induce"
            }
            OperatorCmd::EnumerateFf {
                p,
                profile,
                anti_rota_baxter,
                orbits,
                stream,
            } => {
                args.insert("p".into(), json!(p));
                if let Some(profile) = profile {
                    args.insert(
                        "profile".into(),
                        Value::Array(
                            profile
                                .split(',')
                                .map(|t| Value::String(t.trim().to_string()))
                                .collect(),
                        ),
                    );
                }
                if let Some(b) = anti_rota_baxter {
                    args.insert("anti-rota-baxter".into(), json!(b));
                }
                args.insert("orbits".into(), json!(orbits));
                args.insert("stream".into(), json!(stream));
                "operator-enumerate-ff"
            }
        },
        Command::Construct(c) => match c {
            ConstructCmd::LinearFunctions { f, g } => {
                args.insert("f".into(), scalar_csv(f));
                args.insert("g".into(), scalar_csv(g));
                "construct-linear-functions"
            }
            ConstructCmd::SymmetricForm { form, s } => {
                args.insert("form".into(), json!(form));
                args.insert("s".into(), scalar_csv(s));
                "construct-symmetric-form"
            }
            ConstructCmd::QTransform {
                alg,
                q,
                inverse_two,
            } => {
                args.insert("alg".into(), json!(alg));
                if let Some(q) = q {
                    args.insert("q".into(), json!(q));
                }
                args.insert("inverse-two".into(), json!(inverse_two));
                "construct-q-transform"
            }
            ConstructCmd::Pair { assoc, p, q, mode } => {
                args.insert("assoc".into(), json!(assoc));
                args.insert("p".into(), json!(p));
                args.insert("q".into(), json!(q));
                args.insert("mode".into(), json!(mode));
                "construct-pair"
            }
            ConstructCmd::Adjoint { assoc, form, q } => {
                args.insert("assoc".into(), json!(assoc));
                args.insert("form".into(), json!(form));
                args.insert("q".into(), json!(q));
                "construct-adjoint"
            }
            ConstructCmd::Semidirect {
                lie,
                rep,
                with_pairing_form,
            } => {
                args.insert("lie".into(), json!(lie));
                args.insert("rep".into(), json!(rep));
                args.insert("with-pairing-form".into(), json!(with_pairing_form));
                "construct-semidirect"
            }
            ConstructCmd::TensorLie {
                assoc,
                p,
                q,
                v,
                mode,
            } => {
                args.insert("assoc".into(), json!(assoc));
                args.insert("p".into(), json!(p));
                args.insert("q".into(), json!(q));
                args.insert("v".into(), json!(v));
                args.insert("mode".into(), json!(mode));
                "construct-tensor-lie"
            }
        },
        Command::Poisson(p) => match p {
            PoissonCmd::Check { two, identity } => {
                args.insert("two".into(), json!(two));
                args.insert("identity".into(), json!(identity));
                "poisson-check"
            }
            PoissonCmd::Derived { two } => {
                args.insert("two".into(), json!(two));
                "poisson-derived"
            }
            PoissonCmd::Transform { two, direction } => {
                args.insert("two".into(), json!(two));
                args.insert("direction".into(), json!(direction));
                "poisson-transform"
            }
            PoissonCmd::SubAdjacent { two } => {
                args.insert("two".into(), json!(two));
                "poisson-sub-adjacent"
            }
            PoissonCmd::Induce { two, form } => {
                args.insert("two".into(), json!(two));
                args.insert("form".into(), json!(form));
                "poisson-induce"
            }
            PoissonCmd::Tensor { a, b } => {
                args.insert("a".into(), json!(a));
                args.insert("b".into(), json!(b));
                "poisson-tensor"
            }
        },
        Command::Classify(c) => match c {
            ClassifyCmd::Catalog { id } => {
                args.insert("id".into(), json!(id));
                "classify-catalog"
            }
            ClassifyCmd::Verify { id } => {
                args.insert("id".into(), json!(id));
                "classify-verify"
            }
            ClassifyCmd::Fingerprint { alg } => {
                args.insert("alg".into(), json!(alg));
                "classify-fingerprint"
            }
            ClassifyCmd::Witness { a, b, map } => {
                args.insert("a".into(), json!(a));
                args.insert("b".into(), json!(b));
                if let Some(map) = map {
                    args.insert("map".into(), json!(map));
                }
                "classify-witness"
            }
        },
        Command::AffinizeCheck { alg, mode, window } => {
            args.insert("alg".into(), json!(alg));
            args.insert("mode".into(), json!(mode));
            if let Some(w) = window {
                let grades: Vec<Value> = w
                    .split(',')
                    .filter_map(|x| x.trim().parse::<i64>().ok().map(Value::from))
                    .collect();
                args.insert("window".into(), Value::Array(grades));
            }
            "affinize-check"
        }
        Command::Run { .. } => return None,
    };
    Some(Recipe {
        op: op.to_string(),
        args,
    })
}

fn emit_report(output: &Option<PathBuf>, report: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(report)?;
    match output {
        Some(path) => std::fs::write(path, text + "\n")
            .with_context(|| format!("writing {}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn report_value(doc: &Document, results: Vec<Value>, summary: &RunSummary) -> Value {
    let field = match doc.mode {
        apla_core::scalar::FieldMode::Rational => json!("rational"),
        apla_core::scalar::FieldMode::Quadratic(d) => json!({ "quadratic": d }),
        apla_core::scalar::FieldMode::Mod(p) => json!({ "mod": p }),
    };
    json!({
        "field": field,
        "results": results,
        "warnings": doc.warnings,
        "summary": {
            "total": summary.total,
            "passed": summary.passed,
            "failed": summary.failed,
            "errors": summary.errors,
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let doc = match (&cli.command, &cli.input) {
        (Command::Run { document }, _) => {
            let text = std::fs::read_to_string(document)
                .with_context(|| format!("reading {}", document.display()))?;
            parse_document(&text)?
        }
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            parse_document(&text)?
        }
        _ => Document::default(),
    };

    let mut env = Env {
        doc,
        stream: Some(Box::new(std::io::stdout())),
    };

    match to_recipe(&cli.command) {
        None => {
            // run: execute all document recipes
            let (results, summary) = exec::run_document(&mut env);
            let report = report_value(&env.doc, results, &summary);
            emit_report(&cli.output, &report)?;
            Ok(summary.exit_code())
        }
        Some(recipe) => {
            let mut summary = RunSummary {
                total: 1,
                ..Default::default()
            };
            let results = match exec::execute(&mut env, &recipe) {
                Ok(outcome) => {
                    match outcome.status {
                        "pass" | "ok" => summary.passed += 1,
                        _ => summary.failed += 1,
                    }
                    vec![Value::Object(outcome.record)]
                }
                Err(e) => {
                    summary.errors += 1;
                    vec![json!({
                        "op": recipe.op,
                        "status": "error",
                        "message": format!("{e:#}"),
                    })]
                }
            };
            if let Some(sink) = env.stream.as_mut() {
                sink.flush().ok();
            }
            let report = report_value(&env.doc, results, &summary);
            emit_report(&cli.output, &report)?;
            Ok(summary.exit_code())
        }
    }
}
