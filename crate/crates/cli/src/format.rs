//! The JSON document format for algebras, graded homomorphisms and group
//! homomorphisms.

use std::path::Path;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use gradalg::galg::{AlgebraError, GradedAlgebra, Products};
use gradalg::groups::{FiniteGroup, Group, GroupElement, GroupHom, Letter, Word};
use gradalg::linalg::{Field, Matrix, Scalar};
use gradalg::morph::GradedMorphism;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
    #[error("grading check failed: {0}")]
    Grading(AlgebraError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn invalid(location: impl Into<String>, message: impl ToString) -> FormatError {
    FormatError::Invalid {
        location: location.into(),
        message: message.to_string(),
    }
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    Q,
    GF { p: u64 },
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field, FormatError> {
        match self {
            FieldSpec::Q => Ok(Field::Rational),
            FieldSpec::GF { p } => Field::prime(p).map_err(|e| invalid("field", e)),
        }
    }

    pub fn of(field: Field) -> FieldSpec {
        match field {
            Field::Rational => FieldSpec::Q,
            Field::Prime(p) => FieldSpec::GF { p },
        }
    }
}

/// `Q`, `GF:p` or `GF(p)` on the command line.
impl FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Q);
        }
        let digits = s
            .strip_prefix("GF:")
            .or_else(|| s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| format!("expected Q or GF:p, got {s}"))?;
        let p: u64 = digits.parse().map_err(|_| format!("bad field size {digits}"))?;
        Field::prime(p).map_err(|_| format!("GF({p}) is not a prime field"))?;
        Ok(FieldSpec::GF { p })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic { n: usize },
    Product { factors: Vec<GroupSpec> },
    Symmetric { n: usize },
    Cayley {
        table: Vec<Vec<usize>>,
        identity: usize,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
    FreeAbelian { rank: usize },
    Free { rank: usize },
}

impl GroupSpec {
    pub fn to_group(&self) -> Result<Group, FormatError> {
        Ok(match self {
            GroupSpec::FreeAbelian { rank } => Group::FreeAbelian(*rank),
            GroupSpec::Free { rank } => Group::Free(*rank),
            finite => Group::finite(finite.to_finite()?),
        })
    }

    fn to_finite(&self) -> Result<FiniteGroup, FormatError> {
        let g = match self {
            GroupSpec::Cyclic { n } => FiniteGroup::cyclic(*n),
            GroupSpec::Symmetric { n } => FiniteGroup::symmetric(*n),
            GroupSpec::Product { factors } => {
                let mut acc = FiniteGroup::cyclic(1).expect("order 1");
                for (i, f) in factors.iter().enumerate() {
                    let g = f.to_finite().map_err(|e| invalid(format!("group.factors[{i}]"), e))?;
                    acc = if i == 0 { g } else { FiniteGroup::product(&acc, &g) };
                }
                Ok(acc)
            }
            GroupSpec::Cayley { table, identity, labels } => {
                let labels = labels.clone().unwrap_or_else(|| (0..table.len()).map(|i| i.to_string()).collect());
                FiniteGroup::from_table(table.clone(), *identity, labels)
            }
            GroupSpec::FreeAbelian { .. } | GroupSpec::Free { .. } => {
                return Err(invalid("group", "expected a finite group"))
            }
        };
        g.map_err(|e| invalid("group", e))
    }

    /// Canonical spec: `cyclic` or `symmetric` when the table and labels
    /// agree with the standard construction, `cayley` otherwise.
    pub fn of(group: &Group) -> GroupSpec {
        match group {
            Group::FreeAbelian(rank) => GroupSpec::FreeAbelian { rank: *rank },
            Group::Free(rank) => GroupSpec::Free { rank: *rank },
            Group::Finite(g) => {
                let n = g.order();
                if FiniteGroup::cyclic(n).is_ok_and(|c| &c == g.as_ref()) {
                    return GroupSpec::Cyclic { n };
                }
                if let Some(k) = (1..=4).find(|&k| FiniteGroup::symmetric(k).is_ok_and(|s| &s == g.as_ref())) {
                    return GroupSpec::Symmetric { n: k };
                }
                GroupSpec::Cayley {
                    table: g.table().to_vec(),
                    identity: g.identity(),
                    labels: Some(g.labels().to_vec()),
                }
            }
        }
    }
}

/// Shorthand group names for the command line: `Z4` or `C4` (cyclic),
/// `S3` (symmetric), products such as `Z2xZ2`, or a JSON group spec.
pub fn parse_group_arg(s: &str) -> Result<Group, FormatError> {
    let s = s.trim();
    if s.starts_with('{') {
        return from_json::<GroupSpec>(s)?.to_group();
    }
    let factors = s
        .split(['x', '×'])
        .map(|part| {
            let (kind, n) = part.split_at(part.find(|c: char| c.is_ascii_digit()).unwrap_or(part.len()));
            let n: usize = n.parse().map_err(|_| invalid("group", format!("cannot read {part}")))?;
            match kind {
                "Z" | "C" => Ok(GroupSpec::Cyclic { n }),
                "S" => Ok(GroupSpec::Symmetric { n }),
                _ => Err(invalid("group", format!("unknown group {part}"))),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    match factors.as_slice() {
        [one] => one.to_group(),
        _ => GroupSpec::Product { factors }.to_group(),
    }
}

/// A scalar in the document: `"num/den"`, `"num"` or a JSON integer.
pub fn parse_scalar(field: Field, v: &Value, location: &str) -> Result<Scalar, FormatError> {
    let q = match v {
        Value::String(s) => BigRational::from_str(s.trim()).map_err(|_| invalid(location, format!("bad scalar {s:?}")))?,
        Value::Number(n) => match n.as_i64() {
            Some(i) => BigRational::from_integer(i.into()),
            None => return Err(invalid(location, "scalars must be integers or \"num/den\" strings")),
        },
        _ => return Err(invalid(location, "expected a scalar")),
    };
    field
        .from_rational(&q)
        .map_err(|_| invalid(location, format!("{q} is not defined in {field}")))
}

fn render_scalar(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn parse_degree(group: &Group, v: &Value, location: &str) -> Result<GroupElement, FormatError> {
    let x = match (group, v) {
        (Group::Finite(_), Value::Number(n)) => n.as_u64().map(|i| GroupElement::Finite(i as usize)),
        (Group::Finite(g), Value::String(s)) => g.index_of_label(s).map(GroupElement::Finite),
        (Group::FreeAbelian(_), Value::Array(xs)) => xs
            .iter()
            .map(Value::as_i64)
            .collect::<Option<Vec<i64>>>()
            .map(GroupElement::Abelian),
        (Group::FreeAbelian(1), Value::Number(n)) => n.as_i64().map(GroupElement::int),
        (Group::Free(_), Value::String(s)) => parse_word(s).map(GroupElement::Word),
        _ => None,
    };
    match x {
        Some(x) if group.contains(&x) => Ok(x),
        _ => Err(invalid(location, format!("{v} is not an element of {group}"))),
    }
}

pub fn render_degree(x: &GroupElement) -> Value {
    match x {
        GroupElement::Finite(i) => json!(i),
        GroupElement::Abelian(v) => json!(v),
        GroupElement::Word(w) => json!(w.to_string()),
    }
}

/// Words such as `g1 g2^-1 g1^3`; `1` or the empty string is the identity.
pub fn parse_word(s: &str) -> Option<Word> {
    let mut letters = Vec::new();
    for token in s.split_whitespace().filter(|t| *t != "1") {
        let (name, exp) = match token.split_once('^') {
            Some((name, e)) => (name, e.parse::<i64>().ok()?),
            None => (token, 1),
        };
        let g: usize = name.strip_prefix('g')?.parse().ok()?;
        if g == 0 {
            return None;
        }
        let letter = Letter::new(g - 1, exp < 0);
        letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
    }
    Some(Word::new(letters))
}

/// `[i, j, [[k, c], …]]`: `e_i e_j = Σ c e_k`.
pub type ProductEntry = (usize, usize, Vec<(usize, Value)>);

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub field: FieldSpec,
    pub group: GroupSpec,
    pub basis: Vec<String>,
    pub degrees: Vec<Value>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Value>>,
}

impl AlgebraDocument {
    /// Builds the algebra without checking associativity or the grading.
    pub fn build(&self) -> Result<GradedAlgebra, FormatError> {
        let field = self.field.to_field()?;
        let group = self.group.to_group()?;
        let degrees = self
            .degrees
            .iter()
            .enumerate()
            .map(|(i, v)| parse_degree(&group, v, &format!("degrees[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let mut products: Products = Vec::new();
        for (p, (i, j, coeffs)) in self.products.iter().enumerate() {
            let coeffs = coeffs
                .iter()
                .enumerate()
                .map(|(c, (k, s))| Ok((*k, parse_scalar(field, s, &format!("products[{p}][2][{c}]"))?)))
                .collect::<Result<Vec<_>, FormatError>>()?;
            products.push((*i, *j, coeffs));
        }
        let unit = match &self.unit {
            None => None,
            Some(u) => Some(
                u.iter()
                    .enumerate()
                    .map(|(i, s)| parse_scalar(field, s, &format!("unit[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        GradedAlgebra::new(field, group, self.basis.clone(), degrees, products, unit).map_err(|e| invalid("algebra", e))
    }

    pub fn of(a: &GradedAlgebra) -> AlgebraDocument {
        let products = a
            .products()
            .into_iter()
            .map(|(i, j, coeffs)| (i, j, coeffs.iter().map(|(k, c)| (*k, render_scalar(c))).collect()))
            .collect();
        AlgebraDocument {
            field: FieldSpec::of(a.field()),
            group: GroupSpec::of(a.group()),
            basis: a.labels().to_vec(),
            degrees: a.degrees().iter().map(render_degree).collect(),
            products,
            unit: a.unit().map(|u| u.iter().map(render_scalar).collect()),
        }
    }
}

/// Parses and validates, including associativity and the grading.
pub fn parse_algebra(text: &str) -> Result<GradedAlgebra, FormatError> {
    let a = parse_algebra_unverified(text)?;
    a.verify_grading().map_err(|v| FormatError::Grading(AlgebraError::Violation(v)))?;
    Ok(a)
}

pub fn parse_algebra_unverified(text: &str) -> Result<GradedAlgebra, FormatError> {
    from_json::<AlgebraDocument>(text)?.build()
}

pub fn algebra_value(a: &GradedAlgebra) -> Value {
    serde_json::to_value(AlgebraDocument::of(a)).expect("serializable")
}

pub fn render_algebra(a: &GradedAlgebra) -> String {
    render_value(&algebra_value(a))
}

/// An algebra inline or as a path relative to the referring document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(Box<AlgebraDocument>),
}

impl AlgebraRef {
    fn resolve(&self, base: Option<&Path>, location: &str) -> Result<GradedAlgebra, FormatError> {
        let text = match self {
            AlgebraRef::Inline(doc) => {
                let a = doc.build().map_err(|e| invalid(location, e))?;
                a.verify_grading().map_err(|v| invalid(location, v))?;
                return Ok(a);
            }
            AlgebraRef::Path(p) => read_file(&base.map_or_else(|| Path::new(p).to_path_buf(), |b| b.join(p)))?,
        };
        parse_algebra(&text).map_err(|e| invalid(location, e))
    }
}

/// A graded homomorphism: `matrix` has one row per codomain basis vector
/// and one column per domain basis vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomDocument {
    pub domain: AlgebraRef,
    pub codomain: AlgebraRef,
    pub matrix: Vec<Vec<Value>>,
    #[serde(default)]
    pub unital: bool,
}

/// `base` is the directory against which path references are resolved.
pub fn parse_hom(text: &str, base: Option<&Path>) -> Result<GradedMorphism, FormatError> {
    let doc: HomDocument = from_json(text)?;
    let a = doc.domain.resolve(base, "domain")?;
    let b = doc.codomain.resolve(base, "codomain")?;
    if doc.matrix.len() != b.dim() || doc.matrix.iter().any(|r| r.len() != a.dim()) {
        return Err(invalid("matrix", format!("expected {} rows of {} entries", b.dim(), a.dim())));
    }
    let field = a.field();
    let rows = doc
        .matrix
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, v)| parse_scalar(field, v, &format!("matrix[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let m = if rows.is_empty() {
        Matrix::zeros(field, 0, a.dim())
    } else {
        Matrix::from_rows(field, rows).map_err(|e| invalid("matrix", e))?
    };
    let phi = GradedMorphism::new(a, b, m).map_err(|e| invalid("matrix", e))?;
    if doc.unital && !phi.is_unital() {
        return Err(invalid("unital", "morphism is not unital"));
    }
    Ok(phi)
}

pub fn render_hom(phi: &GradedMorphism) -> String {
    render_value(&hom_value(phi))
}

pub fn hom_value(phi: &GradedMorphism) -> Value {
    let m = phi.matrix();
    let doc = HomDocument {
        domain: AlgebraRef::Inline(Box::new(AlgebraDocument::of(phi.domain()))),
        codomain: AlgebraRef::Inline(Box::new(AlgebraDocument::of(phi.codomain()))),
        matrix: (0..m.rows()).map(|i| (0..m.cols()).map(|j| render_scalar(m.get(i, j))).collect()).collect(),
        unital: phi.is_unital(),
    };
    serde_json::to_value(doc).expect("serializable")
}

/// A group homomorphism, given by the image of every element when the
/// domain is finite and of every generator otherwise.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupHomDocument {
    pub domain: GroupSpec,
    pub codomain: GroupSpec,
    pub images: Vec<Value>,
}

pub fn parse_group_hom(text: &str) -> Result<GroupHom, FormatError> {
    let doc: GroupHomDocument = from_json(text)?;
    let (g, h) = (doc.domain.to_group()?, doc.codomain.to_group()?);
    let images = doc
        .images
        .iter()
        .enumerate()
        .map(|(i, v)| parse_degree(&h, v, &format!("images[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    GroupHom::new(g, h, images).map_err(|e| invalid("images", e))
}

pub fn render_group_hom(phi: &GroupHom) -> String {
    let doc = GroupHomDocument {
        domain: GroupSpec::of(phi.domain()),
        codomain: GroupSpec::of(phi.codomain()),
        images: phi.images().iter().map(render_degree).collect(),
    };
    render_value(&serde_json::to_value(doc).expect("serializable"))
}

pub fn read_file(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

const LINE_WIDTH: usize = 100;

/// JSON with one entry per line wherever the compact form of a value
/// would not fit on a line. Object keys keep their insertion order.
pub fn render_value(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let compact = v.to_string();
    if indent + compact.len() <= LINE_WIDTH {
        out.push_str(&compact);
        return;
    }
    let pad = " ".repeat(indent + 2);
    match v {
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(x, indent + 2, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(x, indent + 2, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push('}');
        }
        _ => out.push_str(&compact),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gradalg::catalog;

    #[test]
    fn catalog_round_trip() {
        for f in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            for name in catalog::ALGEBRA_NAMES {
                let a = catalog::algebra(name, f).unwrap();
                let text = render_algebra(&a);
                assert_eq!(parse_algebra(&text).unwrap(), a, "{name} over {f}");
            }
        }
    }

    #[test]
    fn free_group_degrees() {
        let w = parse_word("g1 g2^-1 g1^2").unwrap();
        assert_eq!(w.to_string(), "g1 g2^-1 g1 g1");
        assert_eq!(parse_word("1"), Some(Word::identity()));
        assert_eq!(parse_word("h1"), None);
        assert_eq!(parse_word("g0"), None);
    }

    #[test]
    fn empty_basis_is_zero_algebra() {
        let a = parse_algebra(r#"{"field":{"kind":"Q"},"group":{"kind":"cyclic","n":1},"basis":[],"degrees":[]}"#).unwrap();
        assert_eq!(a.dim(), 0);
    }

    #[test]
    fn syntax_errors_are_located() {
        match parse_algebra("{\n  \"field\": {\"kind\": \"Q\"},\n  oops\n}") {
            Err(FormatError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bad_scalar_is_located() {
        let text = r#"{"field":{"kind":"GF","p":3},"group":{"kind":"cyclic","n":1},"basis":["x"],"degrees":[0],"products":[[0,0,[[0,"1/3"]]]]}"#;
        let err = parse_algebra(text).unwrap_err().to_string();
        assert!(err.starts_with("products[0][2][0]"), "{err}");
    }

    #[test]
    fn group_shorthand() {
        assert_eq!(parse_group_arg("Z4").unwrap().order(), Some(4));
        assert_eq!(parse_group_arg("S3").unwrap().order(), Some(6));
        assert_eq!(parse_group_arg("Z2xZ2").unwrap().order(), Some(4));
        assert!(parse_group_arg("Q8").is_err());
        assert_eq!(GroupSpec::of(&parse_group_arg("S3").unwrap()), GroupSpec::Symmetric { n: 3 });
    }

    #[test]
    fn field_arguments() {
        assert_eq!("GF:3".parse::<FieldSpec>(), Ok(FieldSpec::GF { p: 3 }));
        assert_eq!("Q".parse::<FieldSpec>(), Ok(FieldSpec::Q));
        assert!("GF:4".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn hom_round_trip() {
        let f = Field::Prime(3);
        let pi = catalog::example_5_7(f);
        assert_eq!(parse_hom(&render_hom(&pi), None).unwrap(), pi);
        let z = Group::integers();
        let z2 = Group::cyclic(2).unwrap();
        let phi = GroupHom::new(z, z2, vec![GroupElement::Finite(1)]).unwrap();
        assert_eq!(parse_group_hom(&render_group_hom(&phi)).unwrap(), phi);
    }
}
