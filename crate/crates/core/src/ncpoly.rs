//! Noncommutative polynomials over an exact field, bounded two-sided ideal
//! spans and oriented rewriting.
//!
//! Monomials are ordered degree-lexicographically: first by length, then
//! lexicographically by generator index.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactlin::{Field, MatrixExact, Scalar};

/// A word in the free monoid on generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NCMonomial(pub Vec<u32>);

impl Ord for NCMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NCMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl NCMonomial {
    pub fn one() -> Self {
        NCMonomial(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &NCMonomial) -> NCMonomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        NCMonomial(v)
    }

    /// Leftmost position where `pat` occurs as a factor.
    pub fn find(&self, pat: &NCMonomial) -> Option<usize> {
        if pat.len() > self.len() {
            return None;
        }
        if pat.is_empty() {
            return Some(0);
        }
        self.0.windows(pat.len()).position(|w| w == pat.0.as_slice())
    }

    /// All words of length exactly `n` over `num_gens` letters, in increasing order.
    pub fn all_of_length(num_gens: usize, n: usize) -> Vec<NCMonomial> {
        let mut out = vec![NCMonomial::one()];
        for _ in 0..n {
            out = out
                .iter()
                .flat_map(|m| {
                    (0..num_gens as u32).map(move |g| {
                        let mut v = m.0.clone();
                        v.push(g);
                        NCMonomial(v)
                    })
                })
                .collect();
        }
        out
    }
}

/// A noncommutative polynomial: monomials with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    field: Field,
    terms: BTreeMap<NCMonomial, Scalar>,
}

impl NCPoly {
    pub fn zero(field: Field) -> Self {
        NCPoly { field, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(NCMonomial::one(), c)
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn term(m: NCMonomial, c: Scalar) -> Self {
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        NCPoly { field, terms }
    }

    pub fn generator(field: Field, g: u32) -> Self {
        Self::term(NCMonomial(vec![g]), field.one())
    }

    pub fn from_terms<I: IntoIterator<Item = (NCMonomial, Scalar)>>(field: Field, terms: I) -> Self {
        let mut p = Self::zero(field);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NCMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &NCMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Largest monomial and its coefficient.
    pub fn leading(&self) -> Option<(&NCMonomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Maximal monomial length; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.leading().map_or(0, |(m, _)| m.len())
    }

    pub fn is_length_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(NCMonomial::len);
        match lens.next() {
            None => true,
            Some(l) => lens.all(|k| k == l),
        }
    }

    /// Common weight of all monomials, if there is one.
    pub fn homogeneous_weight(&self, weights: &[i64]) -> Option<Option<i64>> {
        let mut ws = self.terms.keys().map(|m| m.0.iter().map(|&g| weights[g as usize]).sum::<i64>());
        match ws.next() {
            None => Some(None),
            Some(w) => ws.all(|k| k == w).then_some(Some(w)),
        }
    }

    pub fn add_term(&mut self, m: NCMonomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = &*existing + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> NCPoly {
        if s.is_zero() {
            return Self::zero(self.field);
        }
        NCPoly { field: self.field, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&-self.field.one())
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = Self::zero(self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.concat(m2), &(c1 * c2));
            }
        }
        out
    }

    /// `left · self · right` for monomials.
    pub fn sandwich(&self, left: &NCMonomial, right: &NCMonomial) -> NCPoly {
        NCPoly {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (left.concat(m).concat(right), c.clone())).collect(),
        }
    }

    /// Replaces every generator `g` by `f(g)`, or keeps it when `f` gives `None`.
    pub fn substitute<F: Fn(u32) -> Option<NCPoly>>(&self, f: F) -> NCPoly {
        let mut out = Self::zero(self.field);
        for (m, c) in &self.terms {
            let mut prod = Self::constant(c.clone());
            for &g in &m.0 {
                let image = f(g).unwrap_or_else(|| Self::generator(self.field, g));
                prod = prod.mul(&image);
            }
            out = out.add(&prod);
        }
        out
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> NCPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    /// Terms in display order: longer monomials first, then lexicographic.
    fn display_terms(&self) -> Vec<(&NCMonomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.len().cmp(&a.len()).then_with(|| a.0.cmp(&b.0)));
        v
    }

    /// Signed term list such as `"+1 a d -1 c b -1 delta"`.
    pub fn to_text(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.display_terms() {
            let coef = if c.is_negative() { format!("{c}") } else { format!("+{c}") };
            parts.push(coef);
            parts.extend(m.0.iter().map(|&g| names[g as usize].clone()));
        }
        parts.join(" ")
    }

    /// Parses the signed term list produced by [`NCPoly::to_text`].
    pub fn parse_text(field: Field, names: &[String], text: &str) -> Result<NCPoly> {
        let text = text.trim();
        if text == "0" {
            return Ok(Self::zero(field));
        }
        let mut out = Self::zero(field);
        let mut current: Option<(Scalar, Vec<u32>)> = None;
        for tok in text.split_whitespace() {
            if tok.starts_with('+') || tok.starts_with('-') {
                if let Some((c, m)) = current.take() {
                    out.add_term(NCMonomial(m), &c);
                }
                let c = field.parse_scalar(tok.trim_start_matches('+'))?;
                current = Some((c, Vec::new()));
            } else {
                let g = names
                    .iter()
                    .position(|n| n == tok)
                    .ok_or_else(|| Error::Parse(format!("unknown generator {tok:?}")))?;
                match current.as_mut() {
                    Some((_, m)) => m.push(g as u32),
                    None => return Err(Error::Parse("term list must start with a signed coefficient".into())),
                }
            }
        }
        if let Some((c, m)) = current {
            out.add_term(NCMonomial(m), &c);
        }
        Ok(out)
    }

    /// Readable form such as `"a*d - c*b - delta"`.
    pub fn pretty(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let word: Vec<&str> = m.0.iter().map(|&g| names[g as usize].as_str()).collect();
            match (abs.is_one(), word.is_empty()) {
                (true, true) => s.push('1'),
                (true, false) => s.push_str(&word.join("*")),
                (false, true) => s.push_str(&format!("{abs}")),
                (false, false) => s.push_str(&format!("{abs}*{}", word.join("*"))),
            }
        }
        s
    }
}

/// A matrix with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<NCPoly>,
}

impl PolyMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, field, entries: vec![NCPoly::zero(field); rows * cols] }
    }

    pub fn from_scalars(m: &MatrixExact) -> Self {
        let entries = m.entries().iter().map(|c| NCPoly::constant(c.clone())).collect();
        PolyMatrix { rows: m.rows(), cols: m.cols(), field: m.field(), entries }
    }

    /// Matrix of generators `first + i·cols + j`.
    pub fn generic(field: Field, rows: usize, cols: usize, first: u32) -> Self {
        let entries = (0..rows * cols).map(|k| NCPoly::generator(field, first + k as u32)).collect();
        PolyMatrix { rows, cols, field, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: NCPoly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[NCPoly] {
        &self.entries
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = NCPoly::zero(self.field);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Shape("matrix difference of unequal shapes".into()));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.sub(b)).collect();
        Ok(PolyMatrix { entries, ..self.clone_shape() })
    }

    fn clone_shape(&self) -> PolyMatrix {
        PolyMatrix { rows: self.rows, cols: self.cols, field: self.field, entries: Vec::new() }
    }

    /// Kronecker product; entries multiply in the order `a_{ij} · b_{kl}`.
    pub fn kron(&self, b: &PolyMatrix) -> PolyMatrix {
        let mut out = Self::zeros(self.field, self.rows * b.rows, self.cols * b.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        out.set(i * b.rows + k, j * b.cols + l, a.mul(b.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map<F: Fn(&NCPoly) -> NCPoly>(&self, f: F) -> PolyMatrix {
        PolyMatrix { entries: self.entries.iter().map(f).collect(), ..self.clone_shape() }
    }
}

/// A generator symbol with its `ℓ`-weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub weight: i64,
}

/// Generators and relations of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedAlgebra {
    pub field: Field,
    pub generators: Vec<Generator>,
    pub relations: Vec<NCPoly>,
}

impl PresentedAlgebra {
    /// Drops zero relations and checks the rest are weight-homogeneous.
    pub fn new(field: Field, generators: Vec<Generator>, relations: Vec<NCPoly>) -> Result<Self> {
        let weights: Vec<i64> = generators.iter().map(|g| g.weight).collect();
        let names = Self::names_of(&generators);
        let relations: Vec<NCPoly> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        for r in &relations {
            if r.terms().any(|(m, _)| m.0.iter().any(|&g| g as usize >= generators.len())) {
                return Err(Error::Shape("relation uses an undeclared generator".into()));
            }
            if r.homogeneous_weight(&weights).is_none() {
                return Err(Error::NotGraded(format!("relation {} is not homogeneous", r.pretty(&names))));
            }
        }
        Ok(PresentedAlgebra { field, generators, relations })
    }

    fn names_of(gens: &[Generator]) -> Vec<String> {
        gens.iter().map(|g| g.name.clone()).collect()
    }

    pub fn names(&self) -> Vec<String> {
        Self::names_of(&self.generators)
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// `dim` of the length-`n` component of the quotient.
    pub fn graded_dim(&self, n: usize) -> Result<usize> {
        if self.generators.iter().any(|g| g.weight != 1) {
            return Err(Error::NotGraded("graded_dim needs every generator of weight 1".into()));
        }
        if let Some(r) = self.relations.iter().find(|r| !r.is_length_homogeneous()) {
            return Err(Error::NotGraded(format!(
                "relation {} is not length-homogeneous",
                r.pretty(&self.names())
            )));
        }
        let gens = self.num_generators();
        let mut span = EchelonSpan::new(self.field);
        for r in &self.relations {
            let k = r.degree();
            if k > n {
                continue;
            }
            for split in 0..=n - k {
                for left in NCMonomial::all_of_length(gens, split) {
                    for right in NCMonomial::all_of_length(gens, n - k - split) {
                        span.insert(r.sandwich(&left, &right));
                    }
                }
            }
        }
        Ok(gens.pow(n as u32) - span.dim())
    }
}

/// Span of polynomials kept in semi-echelon form, indexed by leading monomial.
///
/// Rows are sparse; only leading terms are eliminated on insertion, which is
/// enough for dimension counts and membership tests.
#[derive(Clone, Debug)]
pub struct EchelonSpan {
    field: Field,
    rows: BTreeMap<NCMonomial, NCPoly>,
}

impl EchelonSpan {
    pub fn new(field: Field) -> Self {
        EchelonSpan { field, rows: BTreeMap::new() }
    }

    /// Reduces `p` until its leading monomial is not a pivot.
    fn reduce_leading(&self, mut p: NCPoly) -> NCPoly {
        while let Some((m, c)) = p.leading() {
            match self.rows.get(m) {
                Some(row) => {
                    let c = c.clone();
                    p = p.sub(&row.scale(&c));
                }
                None => break,
            }
        }
        p
    }

    /// Adds `p`; returns whether the span grew.
    pub fn insert(&mut self, p: NCPoly) -> bool {
        let r = self.reduce_leading(p);
        match r.leading() {
            None => false,
            Some((m, _)) => {
                let m = m.clone();
                self.rows.insert(m, r.monic());
                true
            }
        }
    }

    pub fn contains(&self, p: &NCPoly) -> bool {
        self.reduce_leading(p.clone()).is_zero()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &NCPoly> {
        self.rows.values()
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// `span{ m₁·r·m₂ : |m₁| + deg r + |m₂| ≤ bound }`.
pub fn two_sided_span(field: Field, rels: &[NCPoly], num_gens: usize, bound: usize) -> EchelonSpan {
    let mut span = EchelonSpan::new(field);
    for r in rels {
        if r.is_zero() || r.degree() > bound {
            continue;
        }
        let room = bound - r.degree();
        for total in 0..=room {
            for split in 0..=total {
                for left in NCMonomial::all_of_length(num_gens, split) {
                    for right in NCMonomial::all_of_length(num_gens, total - split) {
                        span.insert(r.sandwich(&left, &right));
                    }
                }
            }
        }
    }
    span
}

/// Whether two relation sets generate the same bounded two-sided span.
pub fn span_equal(rels_a: &[NCPoly], rels_b: &[NCPoly], num_gens: usize, length_bound: usize) -> bool {
    let Some(field) = rels_a.iter().chain(rels_b).map(NCPoly::field).next() else {
        return true;
    };
    let a = two_sided_span(field, rels_a, num_gens, length_bound);
    let b = two_sided_span(field, rels_b, num_gens, length_bound);
    a.dim() == b.dim() && a.rows().all(|p| b.contains(p))
}

/// An oriented rule `lhs → rhs` with `rhs` below `lhs` in the monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: NCMonomial,
    pub rhs: NCPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    pub rules: Vec<Rule>,
}

impl RewriteSystem {
    /// Interreduces the relations and orients each one at its leading monomial.
    pub fn from_relations(rels: &[NCPoly]) -> RewriteSystem {
        let Some(field) = rels.first().map(NCPoly::field) else {
            return RewriteSystem { rules: Vec::new() };
        };
        let mut span = EchelonSpan::new(field);
        for r in rels {
            span.insert(r.clone());
        }
        let rules = span
            .rows
            .into_iter()
            .map(|(lhs, p)| {
                let mut rhs = p.neg();
                rhs.add_term(lhs.clone(), &field.one());
                Rule { lhs, rhs }
            })
            .collect();
        RewriteSystem { rules }
    }

    /// Rule applying at the leftmost position of `m`, preferring short patterns.
    fn find_match(&self, m: &NCMonomial) -> Option<(usize, &Rule)> {
        self.rules
            .iter()
            .filter_map(|r| m.find(&r.lhs).map(|p| (p, r)))
            .min_by(|(p1, r1), (p2, r2)| p1.cmp(p2).then(r1.lhs.len().cmp(&r2.lhs.len())))
    }
}

/// Outcome of [`rewrite_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub result: NCPoly,
    /// The pass cap was hit before a normal form was reached.
    pub capped: bool,
    pub passes: usize,
}

impl Reduction {
    /// `true` only when the input is certified to lie in the ideal.
    pub fn certifies_zero(&self) -> bool {
        self.result.is_zero()
    }
}

/// Rewrites the largest reducible monomial at its leftmost match until none
/// remains or `max_passes` rewrites have been made. A zero result proves
/// ideal membership; anything else is inconclusive.
pub fn rewrite_reduce(p: &NCPoly, rules: &RewriteSystem, max_passes: usize) -> Reduction {
    let mut cur = p.clone();
    let mut passes = 0;
    loop {
        let hit = cur
            .terms()
            .rev()
            .find_map(|(m, c)| rules.find_match(m).map(|(pos, r)| (m.clone(), c.clone(), pos, r)));
        let Some((m, c, pos, rule)) = hit else {
            return Reduction { result: cur, capped: false, passes };
        };
        if passes == max_passes {
            return Reduction { result: cur, capped: true, passes };
        }
        let left = NCMonomial(m.0[..pos].to_vec());
        let right = NCMonomial(m.0[pos + rule.lhs.len()..].to_vec());
        cur.add_term(m, &-&c);
        cur = cur.add(&rule.rhs.sandwich(&left, &right).scale(&c));
        passes += 1;
    }
}
