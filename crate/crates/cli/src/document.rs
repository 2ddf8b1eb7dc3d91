//! Input documents: named algebras, two-operation algebras, forms, maps and
//! representations over one declared field mode, plus a recipe list.
//!
//! Scalars travel as canonical strings (`p/q`, `a+b*sqrt(d)`, or mod-p
//! residues), never as floats. Non-canonical scalar strings are normalized
//! with a warning, or rejected when `strict` is set.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use apla_core::algebra::{Algebra, AlgebraRole, SecondRole, TwoOpAlgebra};
use apla_core::form::BilinearForm;
use apla_core::linalg::Matrix;
use apla_core::rep::Representation;
use apla_core::scalar::{FieldMode, Scalar};
use serde::Deserialize;
use serde_json::Value;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum WireField {
    Name(String),
    Tagged(BTreeMap<String, i64>),
}

#[derive(Debug, Clone, Deserialize)]
struct WireAlgebra {
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    #[serde(default)]
    role: Option<String>,
    tensor: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Deserialize)]
struct WireTwoOp {
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    dot: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    circ: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default)]
    star: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default)]
    bracket: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Debug, Clone, Deserialize)]
struct WireDocument {
    #[serde(default)]
    field: Option<WireField>,
    #[serde(default)]
    strict: Option<bool>,
    #[serde(default)]
    algebras: BTreeMap<String, WireAlgebra>,
    #[serde(default)]
    two_op: BTreeMap<String, WireTwoOp>,
    #[serde(default)]
    forms: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    maps: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    representations: BTreeMap<String, Vec<Vec<Vec<String>>>>,
    #[serde(default)]
    recipes: Vec<Value>,
}

/// A fully validated input document.
#[derive(Debug, Clone)]
pub struct Document {
    pub mode: FieldMode,
    pub strict: bool,
    pub algebras: BTreeMap<String, Algebra>,
    pub two_ops: BTreeMap<String, TwoOpAlgebra>,
    pub forms: BTreeMap<String, BilinearForm>,
    pub maps: BTreeMap<String, Matrix>,
    pub representations: BTreeMap<String, Representation>,
    pub recipes: Vec<Recipe>,
    /// Normalization warnings collected while parsing scalars.
    pub warnings: Vec<String>,
}

/// One operation invocation: an op token plus named arguments.
#[derive(Debug, Clone)]
pub struct Recipe {
    pub op: String,
    pub args: serde_json::Map<String, Value>,
}

impl Default for Document {
    fn default() -> Self {
        Document {
            mode: FieldMode::Rational,
            strict: false,
            algebras: BTreeMap::new(),
            two_ops: BTreeMap::new(),
            forms: BTreeMap::new(),
            maps: BTreeMap::new(),
            representations: BTreeMap::new(),
            recipes: Vec::new(),
            warnings: Vec::new(),
        }
    }
}

struct ScalarReader<'a> {
    mode: FieldMode,
    strict: bool,
    warnings: &'a mut Vec<String>,
}

impl ScalarReader<'_> {
    fn scalar(&mut self, text: &str, at: &str) -> Result<Scalar> {
        let (value, canonical) =
            Scalar::parse(text, self.mode).with_context(|| format!("in {at}"))?;
        if !canonical {
            if self.strict {
                bail!("in {at}: `{text}` is not canonical (expected `{value}`)");
            }
            self.warnings
                .push(format!("{at}: normalized `{text}` to `{value}`"));
        }
        Ok(value)
    }

    fn tensor(&mut self, wire: &[Vec<Vec<String>>], dim: usize, at: &str) -> Result<Vec<Scalar>> {
        if wire.len() != dim {
            bail!("{at}: tensor has {} rows, expected {dim}", wire.len());
        }
        let mut out = Vec::with_capacity(dim * dim * dim);
        for (i, plane) in wire.iter().enumerate() {
            if plane.len() != dim {
                bail!("{at}: tensor[{i}] has {} rows, expected {dim}", plane.len());
            }
            for (j, row) in plane.iter().enumerate() {
                if row.len() != dim {
                    bail!(
                        "{at}: tensor[{i}][{j}] has {} entries, expected {dim}",
                        row.len()
                    );
                }
                for (k, s) in row.iter().enumerate() {
                    out.push(self.scalar(s, &format!("{at}[{i}][{j}][{k}]"))?);
                }
            }
        }
        Ok(out)
    }

    fn matrix(&mut self, wire: &[Vec<String>], at: &str) -> Result<Matrix> {
        let rows = wire.len();
        if rows == 0 {
            bail!("{at}: empty matrix");
        }
        let cols = wire[0].len();
        let mut out = Vec::new();
        for (r, row) in wire.iter().enumerate() {
            if row.len() != cols {
                bail!("{at}: ragged matrix at row {r}");
            }
            let mut rv = Vec::with_capacity(cols);
            for (c, s) in row.iter().enumerate() {
                rv.push(self.scalar(s, &format!("{at}[{r}][{c}]"))?);
            }
            out.push(rv);
        }
        Ok(Matrix::from_rows(out))
    }
}

fn parse_field(wire: &Option<WireField>) -> Result<FieldMode> {
    match wire {
        None => Ok(FieldMode::Rational),
        Some(WireField::Name(s)) if s == "rational" => Ok(FieldMode::Rational),
        Some(WireField::Name(s)) => bail!("unknown field mode `{s}`"),
        Some(WireField::Tagged(map)) => {
            if let Some(d) = map.get("quadratic") {
                return Ok(FieldMode::Quadratic(*d));
            }
            if let Some(p) = map.get("mod") {
                if *p < 2 || !apla_core::scalar::is_prime(*p as u64) {
                    bail!("field mode `mod` needs a prime, got {p}");
                }
                return Ok(FieldMode::Mod(*p as u64));
            }
            bail!("field mode object must have key `quadratic` or `mod`")
        }
    }
}

/// Parses and fully validates a document.
pub fn parse_document(text: &str) -> Result<Document> {
    let wire: WireDocument =
        serde_json::from_str(text).map_err(|e| anyhow!("document parse error: {e}"))?;
    let mode = parse_field(&wire.field)?;
    let strict = wire.strict.unwrap_or(false);
    let mut warnings = Vec::new();
    let mut rd = ScalarReader {
        mode,
        strict,
        warnings: &mut warnings,
    };

    let mut algebras = BTreeMap::new();
    for (name, a) in &wire.algebras {
        if a.dim == 0 {
            bail!("algebra `{name}`: dim must be positive");
        }
        let role = match a.role.as_deref() {
            None | Some("product") => AlgebraRole::Product,
            Some("bracket") => AlgebraRole::Bracket,
            Some(other) => bail!("algebra `{name}`: unknown role `{other}`"),
        };
        let tensor = rd.tensor(&a.tensor, a.dim, &format!("algebra `{name}`"))?;
        let mut alg = Algebra::new(a.dim, role, tensor);
        if let Some(basis) = &a.basis {
            if basis.len() != a.dim {
                bail!(
                    "algebra `{name}`: basis has {} labels, expected {}",
                    basis.len(),
                    a.dim
                );
            }
            let refs: Vec<&str> = basis.iter().map(String::as_str).collect();
            alg = alg.with_labels(&refs);
        }
        algebras.insert(name.clone(), alg);
    }

    let mut two_ops = BTreeMap::new();
    for (name, t) in &wire.two_op {
        let dot = rd.tensor(&t.dot, t.dim, &format!("two_op `{name}` dot"))?;
        let seconds = [
            (&t.circ, SecondRole::Circ, "circ"),
            (&t.star, SecondRole::Star, "star"),
            (&t.bracket, SecondRole::Bracket, "bracket"),
        ];
        let mut chosen = None;
        for (slot, role, key) in seconds {
            if let Some(wire_tensor) = slot {
                if chosen.is_some() {
                    bail!("two_op `{name}`: more than one second operation given");
                }
                let tensor = rd.tensor(wire_tensor, t.dim, &format!("two_op `{name}` {key}"))?;
                chosen = Some((tensor, role));
            }
        }
        let Some((second, role)) = chosen else {
            bail!("two_op `{name}`: needs one of `circ`, `star`, `bracket`");
        };
        let mut dot_alg = Algebra::new(t.dim, AlgebraRole::Product, dot);
        if let Some(basis) = &t.basis {
            if basis.len() != t.dim {
                bail!(
                    "two_op `{name}`: basis has {} labels, expected {}",
                    basis.len(),
                    t.dim
                );
            }
            let refs: Vec<&str> = basis.iter().map(String::as_str).collect();
            dot_alg = dot_alg.with_labels(&refs);
        }
        let second_alg = Algebra::new(t.dim, AlgebraRole::Product, second);
        two_ops.insert(
            name.clone(),
            TwoOpAlgebra::new(&dot_alg, &second_alg, role)
                .map_err(|e| anyhow!("two_op `{name}`: {e}"))?,
        );
    }

    let mut forms = BTreeMap::new();
    for (name, rows) in &wire.forms {
        let m = rd.matrix(rows, &format!("form `{name}`"))?;
        forms.insert(
            name.clone(),
            BilinearForm::new(m).map_err(|e| anyhow!("form `{name}`: {e}"))?,
        );
    }

    let mut maps = BTreeMap::new();
    for (name, rows) in &wire.maps {
        maps.insert(name.clone(), rd.matrix(rows, &format!("map `{name}`"))?);
    }

    let mut representations = BTreeMap::new();
    for (name, mats) in &wire.representations {
        let mut parsed = Vec::new();
        for (i, m) in mats.iter().enumerate() {
            let m = rd.matrix(m, &format!("representation `{name}`[{i}]"))?;
            if !m.is_square() {
                bail!("representation `{name}`[{i}] must be square");
            }
            parsed.push(m);
        }
        if parsed.is_empty() {
            bail!("representation `{name}` has no matrices");
        }
        let m0 = parsed[0].rows();
        if parsed.iter().any(|m| m.rows() != m0) {
            bail!("representation `{name}`: matrices have mixed sizes");
        }
        representations.insert(name.clone(), Representation::new(parsed));
    }

    let mut recipes = Vec::new();
    for (i, r) in wire.recipes.iter().enumerate() {
        let obj = r
            .as_object()
            .ok_or_else(|| anyhow!("recipe[{i}] must be an object"))?;
        let op = obj
            .get("op")
            .and_then(Value::as_str)
            .ok_or_else(|| anyhow!("recipe[{i}] needs an `op` string"))?
            .to_string();
        let mut args = obj.clone();
        args.remove("op");
        recipes.push(Recipe { op, args });
    }

    Ok(Document {
        mode,
        strict,
        algebras,
        two_ops,
        forms,
        maps,
        representations,
        recipes,
        warnings,
    })
}

// ---- serialization back to the wire format ----

pub fn scalar_to_json(s: &Scalar) -> Value {
    Value::String(s.canonical_string())
}

pub fn tensor_to_json(alg: &Algebra) -> Value {
    let n = alg.dim();
    Value::Array(
        (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| {
                            Value::Array(
                                (0..n).map(|k| scalar_to_json(alg.coeff(i, j, k))).collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn algebra_to_json(alg: &Algebra) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("dim".into(), Value::from(alg.dim()));
    obj.insert(
        "basis".into(),
        Value::Array(
            alg.basis_labels()
                .iter()
                .map(|s| Value::String(s.clone()))
                .collect(),
        ),
    );
    obj.insert(
        "role".into(),
        Value::String(
            match alg.role() {
                AlgebraRole::Product => "product",
                AlgebraRole::Bracket => "bracket",
            }
            .to_string(),
        ),
    );
    obj.insert("tensor".into(), tensor_to_json(alg));
    Value::Object(obj)
}

pub fn two_op_to_json(two: &TwoOpAlgebra) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("dim".into(), Value::from(two.dim()));
    obj.insert(
        "basis".into(),
        Value::Array(
            two.basis_labels()
                .iter()
                .map(|s| Value::String(s.clone()))
                .collect(),
        ),
    );
    obj.insert("dot".into(), tensor_to_json(&two.dot_algebra()));
    let key = match two.second_role() {
        SecondRole::Circ => "circ",
        SecondRole::Star => "star",
        SecondRole::Bracket => "bracket",
    };
    obj.insert(key.into(), tensor_to_json(&two.second_algebra()));
    Value::Object(obj)
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| scalar_to_json(m.get(r, c))).collect()))
            .collect(),
    )
}

pub fn form_to_json(b: &BilinearForm) -> Value {
    matrix_to_json(b.matrix())
}
