//! Subcommand dispatch.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use tannakit_core::bilform::{comorita_components, hb_presentation, quantum_dimension, BilinearForm};
use tannakit_core::coendc::{uaut, uend_compiled, uend_direct, PresentedBialgebra};
use tannakit_core::comodrep::ASContext;
use tannakit_core::moncat::{interval, lambda_gens, lambda_word, leq, normalize, Letter, ObjectWord};
use tannakit_core::ncpoly::{span_equal, NCMonomial, NCPoly, PresentedAlgebra};
use tannakit_core::quadalg::QuadraticAlgebra;
use tannakit_core::{Error, MatrixExact};

use crate::emit::{latex_poly, latex_relations, Document};
use crate::spec::InputSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Analyze,
    Uend,
    Uaut,
    Comod,
    Poset,
    Hb,
    Classify,
    Hilbert,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetQuery {
    Leq(String, String),
    Interval(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub nmax: usize,
    pub length_bound: usize,
    pub maxlen: usize,
    pub max_passes: usize,
    pub poset: Option<PosetQuery>,
    /// Words for `comod`; all words up to `maxlen` when empty.
    pub words: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { nmax: 6, length_bound: 3, maxlen: 5, max_passes: 10_000, poset: None, words: Vec::new() }
    }
}

impl RunConfig {
    /// Applies `--bound` to the bound the command is driven by.
    pub fn with_bound(mut self, command: Command, bound: usize) -> Result<Self, CliError> {
        if bound == 0 {
            return Err(CliError::Input("--bound must be positive".into()));
        }
        match command {
            Command::Analyze | Command::Hilbert | Command::Uaut => self.nmax = bound,
            Command::Uend | Command::Hb => self.length_bound = bound,
            Command::Comod | Command::Poset => self.maxlen = bound,
            Command::Classify => {}
        }
        Ok(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Math(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Math(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Shape(_) | Error::InvalidField(_) | Error::InvalidParameter(_) => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Math(e.to_string()),
        }
    }
}

/// `TANNAKIT_THREADS`, if set, must be a positive integer.
pub fn threads_from_env(value: Option<&str>) -> Result<Option<usize>, CliError> {
    match value {
        None => Ok(None),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Input(format!("TANNAKIT_THREADS must be a positive integer, got {v:?}"))),
        },
    }
}

pub fn run(command: Command, spec: &InputSpec, cfg: &RunConfig) -> Result<Document, CliError> {
    match (command, spec) {
        (Command::Hb, InputSpec::Form(f)) => hb(&f.to_form().map_err(CliError::Input)?, cfg),
        (Command::Classify, InputSpec::Form(f)) => classify(&[f.to_form().map_err(CliError::Input)?]),
        (Command::Classify, InputSpec::Forms(f)) => classify(&f.to_forms().map_err(CliError::Input)?),
        (Command::Hb | Command::Classify, _) => {
            Err(CliError::Input(format!("{command:?} expects a form file").to_lowercase()))
        }
        (_, InputSpec::Algebra(s)) => {
            let a = s.to_algebra().map_err(CliError::Input)?;
            match command {
                Command::Analyze => analyze(&a, cfg),
                Command::Hilbert => hilbert(&a, cfg),
                Command::Uend => uend(&a, cfg),
                Command::Uaut => uaut_doc(&a, cfg),
                Command::Comod => comod(&a, cfg),
                Command::Poset => poset(&a, cfg),
                Command::Hb | Command::Classify => unreachable!("handled above"),
            }
        }
        _ => Err(CliError::Input(format!("{command:?} expects an algebra file").to_lowercase())),
    }
}

/// The relations of `A` as polynomials in its variables.
fn quadratic_relations(a: &QuadraticAlgebra) -> Vec<NCPoly> {
    let n = a.dim_v();
    let r = a.relations();
    (0..r.dim())
        .map(|s| {
            NCPoly::from_terms(
                a.field(),
                r.basis_vector(s)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (NCMonomial(vec![(i / n) as u32, (i % n) as u32]), c.clone())),
            )
        })
        .collect()
}

fn field_label(a: &QuadraticAlgebra) -> Value {
    match a.field() {
        tannakit_core::Field::Rational => json!("Q"),
        tannakit_core::Field::Prime(p) => json!({ "Fp": p }),
    }
}

fn matrix_json(m: &MatrixExact) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_text()).collect()).collect();
    json!(rows)
}

/// Like `pretty` but with products written by juxtaposition, which stays
/// readable for names such as `x*`.
fn spaced(p: &NCPoly, names: &[String]) -> String {
    let padded: Vec<String> = names.iter().map(|n| format!("{n}\u{1f}")).collect();
    p.pretty(&padded).replace("\u{1f}*", " ").replace('\u{1f}', "")
}

fn spaced_all(rels: &[NCPoly], names: &[String]) -> Vec<String> {
    rels.iter().map(|r| spaced(r, names)).collect()
}

fn text_all(rels: &[NCPoly], names: &[String]) -> Vec<String> {
    rels.iter().map(|r| r.to_text(names)).collect()
}

fn dims_line(label: &str, dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    format!("{label}: {}", parts.join(", "))
}

fn analyze(a: &QuadraticAlgebra, cfg: &RunConfig) -> Result<Document, CliError> {
    let names = a.names().to_vec();
    let rels = quadratic_relations(a);
    let dual = a.koszul_dual();
    let dual_names = dual.names().to_vec();
    let dual_rels = quadratic_relations(&dual);
    let dims = a.graded_dims(cfg.nmax).0;
    let dual_dims = dual.graded_dims(cfg.nmax).0;
    let (regular, regular_text) = match a.as_regular_check(cfg.nmax) {
        Ok(r) => {
            let pairings: Vec<Value> = r.pairings.iter().map(matrix_json).collect();
            let text = vec![
                format!("as_regular: {}", r.as_regular),
                format!("global dimension: {}", r.global_dimension),
                dims_line("dim R_l", &r.relation_dims),
                format!("dim R_d = 1: {}", r.frobenius_top_one),
                format!("pairings nondegenerate: {}", r.pairings_nondegenerate),
                format!("Hilbert series consistent with Koszulity: {}", r.koszul_series_consistent),
            ];
            let v = json!({
                "as_regular": r.as_regular,
                "global_dimension": r.global_dimension,
                "relation_dims": r.relation_dims,
                "frobenius_top_one": r.frobenius_top_one,
                "pairings_nondegenerate": r.pairings_nondegenerate,
                "koszul_series_consistent": r.koszul_series_consistent,
                "pairings": pairings,
            });
            (v, text)
        }
        Err(e @ Error::NotFiniteType { .. }) => {
            let msg = e.to_string();
            (json!({ "as_regular": false, "note": msg }), vec!["as_regular: false".into(), msg])
        }
        Err(e) => return Err(e.into()),
    };
    let json = json!({
        "command": "analyze",
        "field": field_label(a),
        "dim_v": a.dim_v(),
        "variables": names,
        "relations": spaced_all(&rels, &names),
        "graded_dims": dims,
        "koszul_dual": {
            "variables": dual_names,
            "relations": spaced_all(&dual_rels, &dual_names),
            "graded_dims": dual_dims,
        },
        "as_regular_check": regular,
    });
    let mut text = vec![
        format!("A = T({}) / ({})", names.join(", "), spaced_all(&rels, &names).join(", ")),
        format!("A^! = T({}) / ({})", dual_names.join(", "), spaced_all(&dual_rels, &dual_names).join(", ")),
        dims_line("dim A_n", &dims),
        dims_line("dim A^!_n", &dual_dims),
    ];
    text.extend(regular_text);
    let mut latex = vec![format!("% relations of A in {}", names.join(", "))];
    latex.extend(latex_relations(&rels, &names));
    Ok(Document { json, text, latex })
}

fn hilbert(a: &QuadraticAlgebra, cfg: &RunConfig) -> Result<Document, CliError> {
    let dims = a.graded_dims(cfg.nmax).0;
    let dual = a.koszul_dual().graded_dims(cfg.nmax).0;
    let json = json!({ "command": "hilbert", "nmax": cfg.nmax, "graded_dims": dims, "koszul_dual_dims": dual });
    let text = vec![dims_line("dim A_n", &dims), dims_line("dim A^!_n", &dual)];
    let terms: Vec<String> = dims
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(n, d)| match n {
            0 => format!("{d}"),
            1 => format!("{d}t"),
            _ => format!("{d}t^{{{n}}}"),
        })
        .collect();
    let latex = vec![format!("h_A(t) = {} + O(t^{{{}}})", terms.join(" + "), cfg.nmax + 1)];
    Ok(Document { json, text, latex })
}

fn presentation(alg: &PresentedAlgebra) -> (Value, Vec<String>, Vec<String>) {
    let names = alg.names();
    let gens: Vec<Value> = alg.generators.iter().map(|g| json!({ "name": g.name, "weight": g.weight })).collect();
    let json = json!({ "generators": gens, "relations": text_all(&alg.relations, &names) });
    let mut text = vec![format!("generators: {}", names.join(" ")), format!("relations ({}):", alg.relations.len())];
    text.extend(alg.relations.iter().map(|r| format!("  {} = 0", r.pretty(&names))));
    (json, text, latex_relations(&alg.relations, &names))
}

fn uend(a: &QuadraticAlgebra, cfg: &RunConfig) -> Result<Document, CliError> {
    let direct = uend_direct(a);
    let compiled = uend_compiled(a)?;
    let n = direct.num_generators();
    let agree = span_equal(&compiled.algebra.relations, &direct.relations, n, cfg.length_bound);
    if !agree {
        return Err(CliError::Math(format!(
            "compiled and direct presentations of uend differ up to length {}",
            cfg.length_bound
        )));
    }
    let dims: Vec<usize> = (0..=cfg.length_bound).map(|k| direct.graded_dim(k)).collect::<Result<_, _>>()?;
    let (p, mut text, latex) = presentation(&direct);
    let json = json!({
        "command": "uend",
        "presentation": p,
        "compiled_matches_direct": agree,
        "length_bound": cfg.length_bound,
        "graded_dims": dims,
    });
    text.push(format!("compiled presentation agrees up to length {}", cfg.length_bound));
    text.push(dims_line("dim uend_n", &dims));
    Ok(Document { json, text, latex })
}

fn coalgebra(b: &PresentedBialgebra) -> (Vec<Value>, Vec<String>) {
    let names = b.names();
    let mut json = Vec::new();
    let mut text = Vec::new();
    for g in 0..names.len() as u32 {
        let delta: Vec<[&str; 2]> =
            b.comultiplication(g).iter().map(|&(x, y)| [names[x as usize].as_str(), names[y as usize].as_str()]).collect();
        let antipode = b.antipode.as_ref().and_then(|s| s[g as usize].as_ref());
        let name = &names[g as usize];
        json.push(json!({
            "generator": name,
            "comultiplication": delta,
            "counit": b.counit(g).to_text(),
            "antipode": antipode.map(|p| p.to_text(&names)),
        }));
        let sum: Vec<String> = delta.iter().map(|[x, y]| format!("{x} ⊗ {y}")).collect();
        let s = antipode.map(|p| p.pretty(&names)).unwrap_or_else(|| "-".into());
        text.push(format!("  Δ({name}) = {}   ε = {}   S = {s}", sum.join(" + "), b.counit(g)));
    }
    (json, text)
}

fn uaut_doc(a: &QuadraticAlgebra, cfg: &RunConfig) -> Result<Document, CliError> {
    let b = uaut(a, cfg.nmax, cfg.max_passes)?;
    let (p, mut text, mut latex) = presentation(&b.algebra);
    let (co, co_text) = coalgebra(&b);
    text.push("coalgebra:".into());
    text.extend(co_text);
    let names = b.names();
    if let Some(s) = &b.antipode {
        latex.push("\\begin{align*}".into());
        let defined: Vec<(usize, &NCPoly)> = s.iter().enumerate().filter_map(|(k, p)| p.as_ref().map(|p| (k, p))).collect();
        for (i, (k, p)) in defined.iter().enumerate() {
            let end = if i + 1 == defined.len() { "" } else { " \\\\" };
            latex.push(format!("  S({}) &= {}{end}", crate::emit::latex_name(&names[*k]), latex_poly(p, &names)));
        }
        latex.push("\\end{align*}".into());
    }
    let json = json!({ "command": "uaut", "presentation": p, "coalgebra": co });
    Ok(Document { json, text, latex })
}

/// All normalized words of `Λ(d)` with at most `maxlen` letters, shortest
/// first.
pub fn all_words(d: usize, maxlen: usize) -> Vec<ObjectWord> {
    let gens = lambda_gens(d);
    let mut alphabet: Vec<Letter> = (0..d).map(Letter::new).collect();
    alphabet.push(Letter::inv(d - 1));
    let mut found = BTreeSet::new();
    let mut stack = vec![Vec::<Letter>::new()];
    while let Some(ls) = stack.pop() {
        let w = normalize(&ls, &gens).expect("letters of Λ(d)");
        if w.len() == ls.len() {
            found.insert(w);
        }
        if ls.len() < maxlen {
            for &l in &alphabet {
                let mut next = ls.clone();
                next.push(l);
                stack.push(next);
            }
        }
    }
    let mut out: Vec<ObjectWord> = found.into_iter().collect();
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

fn parse_word(text: &str, d: usize) -> Result<ObjectWord, CliError> {
    lambda_word(text, d).map_err(|e| CliError::Input(format!("word {text:?}: {e}")))
}

fn comod(a: &QuadraticAlgebra, cfg: &RunConfig) -> Result<Document, CliError> {
    let ctx = ASContext::new(a, cfg.nmax)?;
    let d = ctx.d();
    let gens = lambda_gens(d);
    let words = if cfg.words.is_empty() {
        all_words(d, cfg.maxlen)
    } else {
        cfg.words.iter().map(|w| parse_word(w, d)).collect::<Result<_, _>>()?
    };
    let certified = a.field().is_characteristic_zero();
    let simple_label = if certified { "L" } else { "rank" };
    let mut rows = Vec::new();
    let mut text = vec![format!("{:<24} {:>5} {:>5} {:>5} {:>5}  wt", "λ", "M", "∇", "Δ", simple_label)];
    let mut latex = vec![
        "\\begin{tabular}{lrrrrl}".to_string(),
        format!("$\\lambda$ & $M$ & $\\nabla$ & $\\Delta$ & ${simple_label}$ & wt \\\\ \\hline"),
    ];
    for w in &words {
        let row = ctx.table_row(w)?;
        let label = w.render(&gens);
        let weight = row.weight.map(|t| t.to_string());
        rows.push(json!({
            "word": label,
            "dim_m": row.dim_m,
            "dim_nabla": row.dim_nabla,
            "dim_delta": row.dim_delta,
            "dim_simple": row.dim_simple,
            "weight": weight,
        }));
        let wt = weight.clone().unwrap_or_default();
        text.push(format!(
            "{:<24} {:>5} {:>5} {:>5} {:>5}  {wt}",
            label, row.dim_m, row.dim_nabla, row.dim_delta, row.dim_simple
        ));
        latex.push(format!(
            "${}$ & {} & {} & {} & {} & ${}$ \\\\",
            label.replace("^-1", "^{-1}").replace('r', "r_"),
            row.dim_m,
            row.dim_nabla,
            row.dim_delta,
            row.dim_simple,
            wt
        ));
    }
    latex.push("\\end{tabular}".into());
    if !certified {
        text.push("over a prime field the last column is a rank only, not a certified simple dimension".into());
    }
    let json = json!({ "command": "comod", "d": d, "simple_certified": certified, "rows": rows });
    Ok(Document { json, text, latex })
}

fn poset(a: &QuadraticAlgebra, cfg: &RunConfig) -> Result<Document, CliError> {
    let report = a.as_regular_check(cfg.nmax)?;
    if !report.as_regular {
        return Err(CliError::Math("the algebra is not AS-regular, so Λ is undefined".into()));
    }
    let d = report.global_dimension;
    let gens = lambda_gens(d);
    match &cfg.poset {
        Some(PosetQuery::Leq(x, y)) => {
            let (l, m) = (parse_word(x, d)?, parse_word(y, d)?);
            let result = leq(&l, &m, d);
            let (ls, ms) = (l.render(&gens), m.render(&gens));
            let json = json!({ "command": "poset", "d": d, "query": "leq", "lambda": ls, "mu": ms, "result": result });
            let text = vec![format!("{ls} ≤ {ms}: {result}")];
            let rel = if result { "\\leq" } else { "\\not\\leq" };
            let latex = vec![format!("${ls} {rel} {ms}$")];
            Ok(Document { json, text, latex })
        }
        Some(PosetQuery::Interval(x, y)) => {
            let (l, m) = (parse_word(x, d)?, parse_word(y, d)?);
            let members: Vec<String> = interval(&l, &m, d).iter().map(|w| w.render(&gens)).collect();
            let (ls, ms) = (l.render(&gens), m.render(&gens));
            let json = json!({ "command": "poset", "d": d, "query": "interval", "lambda": ls, "mu": ms, "interval": members });
            let text = vec![format!("[{ls}, {ms}] = {{{}}}", members.join(", "))];
            let latex = vec![format!("$[{ls}, {ms}] = \\{{{}\\}}$", members.join(",\\ "))];
            Ok(Document { json, text, latex })
        }
        None => Err(CliError::Input("poset needs --leq A B or --interval A B".into())),
    }
}

fn hb(bf: &BilinearForm, cfg: &RunConfig) -> Result<Document, CliError> {
    let h = hb_presentation(bf, cfg.max_passes)?;
    let q = quantum_dimension(bf);
    let (p, mut text, latex) = presentation(&h.algebra);
    let (co, co_text) = coalgebra(&h);
    text.push("coalgebra:".into());
    text.extend(co_text);
    text.push(format!("q(b) = {}   -q(b) = {}", q.value, q.negated()));
    let json = json!({
        "command": "hb",
        "form": matrix_json(bf.matrix()),
        "presentation": p,
        "coalgebra": co,
        "q": q.value.to_text(),
        "minus_q": q.negated().to_text(),
        "q_convention": "snake-normalized",
    });
    Ok(Document { json, text, latex })
}

fn classify(forms: &[BilinearForm]) -> Result<Document, CliError> {
    let classes = comorita_components(forms);
    let json_classes: Vec<Value> =
        classes.iter().map(|c| json!({ "q": c.q.to_text(), "minus_q": (-&c.q).to_text(), "members": c.members })).collect();
    let text = classes
        .iter()
        .map(|c| {
            let m: Vec<String> = c.members.iter().map(|i| i.to_string()).collect();
            format!("q(b) = {}: forms {}", c.q, m.join(", "))
        })
        .collect();
    let latex = classes
        .iter()
        .map(|c| {
            let m: Vec<String> = c.members.iter().map(|i| format!("b_{{{i}}}")).collect();
            format!("$q = {}$: ${}$", c.q, m.join(", "))
        })
        .collect();
    Ok(Document { json: json!({ "command": "classify", "classes": json_classes }), text, latex })
}
