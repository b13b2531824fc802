//! Output documents in JSON, plain text and LaTeX.

use serde_json::Value;

use tannakit_core::ncpoly::NCPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

/// One command result in all three renderings. JSON object keys come out
/// sorted, so identical inputs give byte-identical output.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub json: Value,
    pub text: Vec<String>,
    pub latex: Vec<String>,
}

impl Document {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("values serialize") + "\n",
            Format::Text => lines(&self.text),
            Format::Latex => lines(&self.latex),
        }
    }
}

fn lines(v: &[String]) -> String {
    let mut s = v.join("\n");
    s.push('\n');
    s
}

/// `delta^-1 → \delta^{-1}`, `z1_2 → z_{12}`, single letters unchanged.
pub fn latex_name(name: &str) -> String {
    let (base, inv) = match name.strip_suffix("^-1") {
        Some(b) => (b, true),
        None => (name, false),
    };
    let greek = ["alpha", "beta", "gamma", "delta", "epsilon", "phi", "psi", "theta"];
    let mut out = if greek.contains(&base) {
        format!("\\{base}")
    } else if let Some(rest) = base.strip_prefix('z').filter(|r| r.contains('_')) {
        format!("z_{{{}}}", rest.replace('_', ""))
    } else if let Some((head, idx)) = base.split_once('[') {
        format!("{head}_{{{}}}", idx.trim_end_matches(']').replace(',', ""))
    } else {
        base.to_string()
    };
    if inv {
        out.push_str("^{-1}");
    }
    out
}

pub fn latex_poly(p: &NCPoly, names: &[String]) -> String {
    let tex: Vec<String> = names.iter().map(|n| latex_name(n) + " ").collect();
    p.pretty(&tex).replace('*', "").replace("  ", " ").trim().to_string()
}

/// `\begin{align*} … \end{align*}` with one `p = 0` per line.
pub fn latex_relations(rels: &[NCPoly], names: &[String]) -> Vec<String> {
    let mut out = vec!["\\begin{align*}".to_string()];
    for (k, r) in rels.iter().enumerate() {
        let end = if k + 1 == rels.len() { "" } else { " \\\\" };
        out.push(format!("  {} &= 0{end}", latex_poly(r, names)));
    }
    out.push("\\end{align*}".to_string());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use tannakit_core::Field;

    #[test]
    fn latex_names() {
        assert_eq!(latex_name("delta^-1"), "\\delta^{-1}");
        assert_eq!(latex_name("z1_2"), "z_{12}");
        assert_eq!(latex_name("v[1,2]"), "v_{12}");
        assert_eq!(latex_name("a"), "a");
    }

    #[test]
    fn latex_polynomials() {
        let names: Vec<String> = ["a", "b", "c", "d", "delta"].iter().map(|s| s.to_string()).collect();
        let p = NCPoly::parse_text(Field::Rational, &names, "+1 a d -1 c b -1 delta").unwrap();
        assert_eq!(latex_poly(&p, &names), "a d - c b - \\delta");
    }
}
