//! Input files: quadratic algebras and bilinear forms as JSON.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use tannakit_core::bilform::BilinearForm;
use tannakit_core::quadalg::QuadraticAlgebra;
use tannakit_core::{Field, MatrixExact, Scalar, Subspace};

/// `"Q"` or `{"Fp": p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[derive(Default)]
pub enum FieldSpec {
    #[default]
    Q,
    Fp(u64),
}


impl FieldSpec {
    pub fn field(self) -> Result<Field, String> {
        match self {
            FieldSpec::Q => Ok(Field::Rational),
            FieldSpec::Fp(p) => Field::prime(p).map_err(|e| format!("field: {e}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coef: String,
    pub word: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub field: FieldSpec,
    pub dim_v: usize,
    pub variables: Vec<String>,
    pub relations: Vec<Vec<Term>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    #[serde(default)]
    pub field: FieldSpec,
    pub form: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormsSpec {
    #[serde(default)]
    pub field: FieldSpec,
    pub forms: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSpec {
    Algebra(AlgebraSpec),
    Form(FormSpec),
    Forms(FormsSpec),
}

/// Parses and validates an input document.
pub fn parse_spec(text: &str) -> Result<InputSpec, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let obj = value.as_object().ok_or("top level must be a JSON object")?;
    let typed = |e: serde_json::Error| format!("schema violation: {e}");
    let spec = if obj.contains_key("relations") || obj.contains_key("dim_v") {
        InputSpec::Algebra(serde_json::from_str(text).map_err(typed)?)
    } else if obj.contains_key("form") {
        InputSpec::Form(serde_json::from_str(text).map_err(typed)?)
    } else if obj.contains_key("forms") {
        InputSpec::Forms(serde_json::from_str(text).map_err(typed)?)
    } else {
        return Err("expected an algebra (\"relations\") or forms (\"form\" / \"forms\")".into());
    };
    validate(&spec)?;
    Ok(spec)
}

pub fn emit_spec(spec: &InputSpec) -> String {
    let json = match spec {
        InputSpec::Algebra(s) => serde_json::to_string_pretty(s),
        InputSpec::Form(s) => serde_json::to_string_pretty(s),
        InputSpec::Forms(s) => serde_json::to_string_pretty(s),
    };
    json.expect("plain data serializes") + "\n"
}

fn validate(spec: &InputSpec) -> Result<(), String> {
    match spec {
        InputSpec::Algebra(s) => s.to_algebra().map(|_| ()),
        InputSpec::Form(s) => s.to_form().map(|_| ()),
        InputSpec::Forms(s) => s.to_forms().map(|_| ()),
    }
}

/// An exact coefficient; over `Q` it must be written reduced.
fn coefficient(field: Field, text: &str, at: &str) -> Result<Scalar, String> {
    let c = field.parse_scalar(text).map_err(|e| format!("{at}: {e}"))?;
    if field.is_characteristic_zero() && c.to_text() != text.trim_start_matches('+') {
        return Err(format!("{at}: {text:?} is not a reduced rational (expected {:?})", c.to_text()));
    }
    Ok(c)
}

impl AlgebraSpec {
    pub fn to_algebra(&self) -> Result<QuadraticAlgebra, String> {
        let field = self.field.field()?;
        let n = self.dim_v;
        if n == 0 {
            return Err("dim_v: must be positive".into());
        }
        if self.variables.len() != n {
            return Err(format!("variables: {} names for dim_v = {n}", self.variables.len()));
        }
        let mut vectors = Vec::new();
        for (k, rel) in self.relations.iter().enumerate() {
            let mut v = vec![field.zero(); n * n];
            for (t, term) in rel.iter().enumerate() {
                let at = format!("relations[{k}][{t}]");
                if term.word.len() != 2 {
                    return Err(format!("{at}.word: length {}, relations must be quadratic", term.word.len()));
                }
                if let Some(&i) = term.word.iter().find(|&&i| i >= n) {
                    return Err(format!("{at}.word: variable index {i} out of range"));
                }
                let c = coefficient(field, &term.coef, &format!("{at}.coef"))?;
                let idx = term.word[0] * n + term.word[1];
                v[idx] = &v[idx] + &c;
            }
            vectors.push(v);
        }
        let r = Subspace::from_vectors(field, n * n, vectors).map_err(|e| e.to_string())?;
        QuadraticAlgebra::new(n, r, self.variables.clone()).map_err(|e| e.to_string())
    }
}

fn matrix(field: Field, rows: &[Vec<String>], at: &str) -> Result<MatrixExact, String> {
    let n = rows.len();
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(format!("{at}[{i}]: {} entries in a {n}x{n} form", row.len()));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, x)| coefficient(field, x, &format!("{at}[{i}][{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(parsed);
    }
    MatrixExact::from_rows(field, n, out).map_err(|e| e.to_string())
}

fn form(field: Field, rows: &[Vec<String>], at: &str) -> Result<BilinearForm, String> {
    BilinearForm::new(matrix(field, rows, at)?).map_err(|e| format!("{at}: {e}"))
}

impl FormSpec {
    pub fn to_form(&self) -> Result<BilinearForm, String> {
        form(self.field.field()?, &self.form, "form")
    }
}

impl FormsSpec {
    pub fn to_forms(&self) -> Result<Vec<BilinearForm>, String> {
        let field = self.field.field()?;
        if self.forms.is_empty() {
            return Err("forms: empty list".into());
        }
        self.forms.iter().enumerate().map(|(k, rows)| form(field, rows, &format!("forms[{k}]"))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KXY: &str = r#"{"field":"Q","dim_v":2,"variables":["x","y"],
        "relations":[[{"coef":"1","word":[0,1]},{"coef":"-1","word":[1,0]}]]}"#;

    #[test]
    fn parses_an_algebra() {
        let InputSpec::Algebra(s) = parse_spec(KXY).unwrap() else { panic!("not an algebra") };
        let a = s.to_algebra().unwrap();
        assert_eq!(a.relations().dim(), 1);
        assert_eq!(a.names(), ["x", "y"]);
    }

    #[test]
    fn prime_fields() {
        let text = KXY.replace("\"Q\"", "{\"Fp\": 7}");
        let InputSpec::Algebra(s) = parse_spec(&text).unwrap() else { panic!("not an algebra") };
        assert_eq!(s.field, FieldSpec::Fp(7));
        assert!(parse_spec(&KXY.replace("\"Q\"", "{\"Fp\": 8}")).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_spec(&KXY.replace("\"-1\"", "\"1/0\"")).unwrap_err().contains("coef"));
        assert!(parse_spec(&KXY.replace("\"-1\"", "\"-2/2\"")).unwrap_err().contains("reduced"));
        assert!(parse_spec(&KXY.replace("[1,0]", "[1,0,1]")).unwrap_err().contains("quadratic"));
        assert!(parse_spec(&KXY.replace("[1,0]", "[1,2]")).unwrap_err().contains("out of range"));
        assert!(parse_spec(&KXY.replace("\"dim_v\":2", "\"dim_v\":\"2\"")).unwrap_err().contains("line"));
        assert!(parse_spec(r#"{"form":[["1","2"],["2","4"]]}"#).unwrap_err().contains("degenerate"));
        assert!(parse_spec("[]").is_err());
    }

    #[test]
    fn forms_default_to_the_rationals() {
        let InputSpec::Forms(s) = parse_spec(r#"{"forms":[[["1","0"],["0","1"]]]}"#).unwrap() else {
            panic!("not a form list")
        };
        assert_eq!(s.field, FieldSpec::Q);
        assert_eq!(s.to_forms().unwrap().len(), 1);
    }
}
