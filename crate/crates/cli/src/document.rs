//! JSON documents: one object per file, tagged by `"kind"`, rationals as strings.

use serde_json::{json, Map, Value};

use polyhedral::convex_function::PCFunc;
use polyhedral::linalg::{parse_rat, Matrix, Rat};
use polyhedral::multifunction::MultiFn;
use polyhedral::polyhedron::{HRep, VRep};
use polyhedral::relint::RelOpenHRep;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("schema error at {path}: {msg}")]
pub struct SchemaError {
    pub path: String,
    pub msg: String,
}

fn err<T>(path: &str, msg: impl Into<String>) -> Result<T, SchemaError> {
    Err(SchemaError { path: path.to_string(), msg: msg.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    HRep(HRep),
    VRep(VRep),
    MultiFn(MultiFn),
    Pcf(PCFunc),
    RelOpen(RelOpenHRep),
    Point(Vec<Rat>),
    Matrix(Matrix),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::HRep(_) => "hrep",
            Document::VRep(_) => "vrep",
            Document::MultiFn(_) => "multifn",
            Document::Pcf(_) => "pcf",
            Document::RelOpen(_) => "relopen",
            Document::Point(_) => "point",
            Document::Matrix(_) => "matrix",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Document::HRep(p) => hrep_json(p),
            Document::VRep(v) => json!({
                "kind": "vrep",
                "dim": v.dim(),
                "points": vecs_json(v.points()),
                "rays": vecs_json(v.rays()),
                "lineality": vecs_json(v.lineality()),
            }),
            Document::MultiFn(f) => {
                json!({"kind": "multifn", "nx": f.nx(), "ny": f.ny(), "graph": hrep_json(f.graph())})
            }
            Document::Pcf(f) => json!({"kind": "pcf", "n": f.n(), "epi": hrep_json(f.epi())}),
            Document::RelOpen(r) => json!({
                "kind": "relopen",
                "dim": r.dim(),
                "eq": {"A": vecs_json(r.eq_a().rows()), "b": vec_json(r.eq_b())},
                "strict": {"C": vecs_json(r.strict_c().rows()), "d": vec_json(r.strict_d())},
            }),
            Document::Point(x) => json!({"kind": "point", "v": vec_json(x)}),
            Document::Matrix(m) => json!({"kind": "matrix", "ncols": m.ncols(), "rows": vecs_json(m.rows())}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Document, SchemaError> {
        let obj = object(v, "$")?;
        let kind = obj.get("kind").and_then(Value::as_str);
        let doc = match kind {
            Some("hrep") => Document::HRep(parse_hrep(v, "$")?),
            Some("vrep") => {
                expect_keys(obj, "$", &["kind", "dim", "points", "rays", "lineality"])?;
                let dim = usize_field(obj, "$", "dim")?;
                let vecs = |k: &str| vectors(field(obj, "$", k)?, &format!("$.{k}"), dim);
                let out = VRep::new(dim, vecs("points")?, vecs("rays")?, vecs("lineality")?);
                Document::VRep(out.or_else(|e| err("$", e.to_string()))?)
            }
            Some("multifn") => {
                expect_keys(obj, "$", &["kind", "nx", "ny", "graph"])?;
                let (nx, ny) = (usize_field(obj, "$", "nx")?, usize_field(obj, "$", "ny")?);
                let graph = parse_hrep(field(obj, "$", "graph")?, "$.graph")?;
                Document::MultiFn(MultiFn::new(nx, ny, graph).or_else(|e| err("$", e.to_string()))?)
            }
            Some("pcf") => {
                expect_keys(obj, "$", &["kind", "n", "epi"])?;
                let n = usize_field(obj, "$", "n")?;
                let epi = parse_hrep(field(obj, "$", "epi")?, "$.epi")?;
                Document::Pcf(PCFunc::new(n, epi).or_else(|e| err("$", e.to_string()))?)
            }
            Some("relopen") => {
                expect_keys(obj, "$", &["kind", "dim", "eq", "strict"])?;
                let dim = usize_field(obj, "$", "dim")?;
                let (a, b) = block(field(obj, "$", "eq")?, "$.eq", ("A", "b"), dim)?;
                let (c, d) = block(field(obj, "$", "strict")?, "$.strict", ("C", "d"), dim)?;
                Document::RelOpen(RelOpenHRep::new(dim, a, b, c, d).or_else(|e| err("$", e.to_string()))?)
            }
            Some("point") => {
                expect_keys(obj, "$", &["kind", "v"])?;
                Document::Point(vector(field(obj, "$", "v")?, "$.v", None)?)
            }
            Some("matrix") => {
                expect_keys(obj, "$", &["kind", "ncols", "rows"])?;
                let ncols = usize_field(obj, "$", "ncols")?;
                let rows = vectors(field(obj, "$", "rows")?, "$.rows", ncols)?;
                Document::Matrix(Matrix::from_rows(rows, ncols).or_else(|e| err("$", e.to_string()))?)
            }
            Some(other) => return err("$.kind", format!("unknown kind '{other}'")),
            None => return err("$.kind", "missing or not a string"),
        };
        Ok(doc)
    }
}

fn vec_json(x: &[Rat]) -> Value {
    Value::Array(x.iter().map(|r| Value::String(r.to_string())).collect())
}

fn vecs_json(xs: &[Vec<Rat>]) -> Value {
    Value::Array(xs.iter().map(|x| vec_json(x)).collect())
}

fn hrep_json(p: &HRep) -> Value {
    json!({
        "kind": "hrep",
        "dim": p.dim(),
        "eq": {"A": vecs_json(p.eq_a().rows()), "b": vec_json(p.eq_b())},
        "ineq": {"C": vecs_json(p.ineq_c().rows()), "d": vec_json(p.ineq_d())},
    })
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, SchemaError> {
    v.as_object().map_or_else(|| err(path, "expected an object"), Ok)
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value, SchemaError> {
    obj.get(key).map_or_else(|| err(path, format!("missing field '{key}'")), Ok)
}

fn expect_keys(obj: &Map<String, Value>, path: &str, keys: &[&str]) -> Result<(), SchemaError> {
    match obj.keys().find(|k| !keys.contains(&k.as_str())) {
        Some(k) => err(path, format!("unexpected field '{k}'")),
        None => Ok(()),
    }
}

fn usize_field(obj: &Map<String, Value>, path: &str, key: &str) -> Result<usize, SchemaError> {
    let v = field(obj, path, key)?;
    match v.as_u64().and_then(|n| usize::try_from(n).ok()) {
        Some(n) => Ok(n),
        None => err(&format!("{path}.{key}"), "expected a nonnegative integer"),
    }
}

fn rational(v: &Value, path: &str) -> Result<Rat, SchemaError> {
    match v.as_str() {
        Some(s) => parse_rat(s).or_else(|e| err(path, e.to_string())),
        None => err(path, "expected a rational string such as \"-3/4\""),
    }
}

fn vector(v: &Value, path: &str, len: Option<usize>) -> Result<Vec<Rat>, SchemaError> {
    let Some(items) = v.as_array() else {
        return err(path, "expected an array");
    };
    if let Some(n) = len {
        if items.len() != n {
            return err(path, format!("expected {n} entries, found {}", items.len()));
        }
    }
    items.iter().enumerate().map(|(i, x)| rational(x, &format!("{path}[{i}]"))).collect()
}

fn vectors(v: &Value, path: &str, len: usize) -> Result<Vec<Vec<Rat>>, SchemaError> {
    let Some(items) = v.as_array() else {
        return err(path, "expected an array of arrays");
    };
    items.iter().enumerate().map(|(i, x)| vector(x, &format!("{path}[{i}]"), Some(len))).collect()
}

fn block(v: &Value, path: &str, (mk, vk): (&str, &str), dim: usize) -> Result<(Matrix, Vec<Rat>), SchemaError> {
    let obj = object(v, path)?;
    expect_keys(obj, path, &[mk, vk])?;
    let rows = vectors(field(obj, path, mk)?, &format!("{path}.{mk}"), dim)?;
    let rhs = vector(field(obj, path, vk)?, &format!("{path}.{vk}"), Some(rows.len()))?;
    let m = Matrix::from_rows(rows, dim).or_else(|e| err(path, e.to_string()))?;
    Ok((m, rhs))
}

fn parse_hrep(v: &Value, path: &str) -> Result<HRep, SchemaError> {
    let obj = object(v, path)?;
    expect_keys(obj, path, &["kind", "dim", "eq", "ineq"])?;
    if obj.get("kind").and_then(Value::as_str) != Some("hrep") {
        return err(&format!("{path}.kind"), "expected \"hrep\"");
    }
    let dim = usize_field(obj, path, "dim")?;
    let (a, b) = block(field(obj, path, "eq")?, &format!("{path}.eq"), ("A", "b"), dim)?;
    let (c, d) = block(field(obj, path, "ineq")?, &format!("{path}.ineq"), ("C", "d"), dim)?;
    HRep::new(dim, a, b, c, d).or_else(|e| err(path, e.to_string()))
}
