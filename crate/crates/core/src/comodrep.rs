//! Comodules over `uaut(A)` for an AS-regular `A`: the spaces `M(λ)`, the
//! structure maps `Φ_{a,b}` and `Θ_{a,b}`, costandard, standard and simple
//! comodules, and torus weights for `d = 2`.
//!
//! `M(λ)` is the tensor product over the letters of `λ`, with `R_i` for
//! `r_i` and the dual line `R_d^*` for `r_d⁻¹`. Since `dim R_d = 1`, a
//! cancelled pair `r_d r_d⁻¹` contributes the scalar 1 and Kronecker
//! coordinates are unaffected by normalization.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{kron_all, Field, MatrixExact, Subspace};
use crate::moncat::{
    self, build_category, CategoryKind, Composite, Direction, Letter, MorGenTag, ObjectWord,
    PresentedMonoidalCategory,
};
use crate::quadalg::QuadraticAlgebra;

/// The data of an AS-regular algebra needed to realize `𝒰(d)`.
#[derive(Clone, Debug)]
pub struct ASContext {
    field: Field,
    d: usize,
    /// `R_1, …, R_d`.
    spaces: Vec<Subspace>,
    /// `C^{(a)}` for `a = 1, …, d-1`.
    pairings: Vec<MatrixExact>,
}

/// `Φ` or `Θ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Phi,
    Theta,
}

impl ASContext {
    /// Fails with [`Error::NotAsRegular`] unless the Frobenius test passes
    /// with relation spaces vanishing by `nmax`.
    pub fn new(a: &QuadraticAlgebra, nmax: usize) -> Result<Self> {
        let report = a.as_regular_check(nmax)?;
        if !report.as_regular {
            return Err(Error::NotAsRegular(format!(
                "dim R_d = {}, pairings non-degenerate: {}, series consistent: {}",
                report.relation_dims[report.global_dimension - 1],
                report.pairings_nondegenerate,
                report.koszul_series_consistent
            )));
        }
        let d = report.global_dimension;
        let mut spaces = a.relation_spaces(d)?;
        spaces.truncate(d);
        Ok(ASContext { field: a.field(), d, spaces, pairings: report.pairings })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `R_l` for `1 ≤ l ≤ d`.
    pub fn space(&self, l: usize) -> &Subspace {
        &self.spaces[l - 1]
    }

    /// `dim R_l`, with `dim R_0 = 1`.
    pub fn dim_r(&self, l: usize) -> usize {
        if l == 0 {
            1
        } else {
            self.spaces[l - 1].dim()
        }
    }

    /// `C^{(a)}`, the coordinates of `w_d` in `R_a ⊗ R_{d-a}`.
    pub fn pairing(&self, a: usize) -> &MatrixExact {
        &self.pairings[a - 1]
    }

    fn identity(&self, n: usize) -> MatrixExact {
        MatrixExact::identity(self.field, n)
    }

    /// `Φ_{i,j}: R_{i+j} → R_i ⊗ R_j`; the identity when `i` or `j` is 0.
    pub fn phi(&self, i: usize, j: usize) -> Result<MatrixExact> {
        if i + j == 0 || i + j > self.d {
            return Err(Error::InvalidParameter(format!("Φ_{{{i},{j}}} needs 1 ≤ i + j ≤ {}", self.d)));
        }
        if i == 0 || j == 0 {
            return Ok(self.identity(self.dim_r(i + j)));
        }
        let ambient = self.space(i).tensor(self.space(j));
        let target = self.space(i + j);
        let columns = (0..target.dim())
            .map(|k| {
                ambient.coordinates(target.basis_vector(k)).ok_or_else(|| {
                    Error::Invariant(format!("R_{} is not inside R_{i} ⊗ R_{j}", i + j))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MatrixExact::from_columns(self.field, ambient.dim(), &columns)
    }

    /// `Θ_{a,b}: R_a ⊗ R_d^* ⊗ R_b → R_{a+b-d}` for `1 ≤ a, b ≤ d`, `a + b ≥ d`.
    ///
    /// For `a + b = d` this is the evaluation with matrix `(C^{(d-a)})^{-1}`,
    /// the normalization forced by the degenerate cases of the mixed squares.
    /// For `a + b > d` it is `(I ⊗ Θ_{d-b,b}) ∘ (Φ_{a+b-d,d-b} ⊗ I ⊗ I)`.
    pub fn theta(&self, a: usize, b: usize) -> Result<MatrixExact> {
        let d = self.d;
        if a == 0 || b == 0 || a > d || b > d || a + b < d {
            return Err(Error::InvalidParameter(format!("Θ_{{{a},{b}}} outside the valid range for d = {d}")));
        }
        if a == d || b == d {
            return Ok(self.identity(self.dim_r(a + b - d)));
        }
        if a + b == d {
            let inv = self.pairing(b).inverse()?;
            return inv.reshape(1, self.dim_r(a) * self.dim_r(b));
        }
        let c = a + b - d;
        let split = self.phi(c, d - b)?.kron(&self.identity(self.dim_r(b)));
        let contract = self.identity(self.dim_r(c)).kron(&self.theta(d - b, b)?);
        contract.mul(&split)
    }

    pub fn structure_map(&self, family: Family, i: usize, j: usize) -> Result<MatrixExact> {
        match family {
            Family::Phi => self.phi(i, j),
            Family::Theta => self.theta(i, j),
        }
    }

    fn letter_dim(&self, l: Letter) -> usize {
        if l.inverse {
            1
        } else {
            self.dim_r(l.gen + 1)
        }
    }

    /// `dim M(λ)`.
    pub fn word_dim(&self, w: &ObjectWord) -> usize {
        w.letters().iter().map(|&l| self.letter_dim(l)).product()
    }

    /// Letter-wise dimensions of `M(λ)`.
    pub fn factorization(&self, w: &ObjectWord) -> Vec<usize> {
        w.letters().iter().map(|&l| self.letter_dim(l)).collect()
    }

    /// Matrix of a generator of `𝒰(d)` under `M`.
    pub fn generator_matrix(&self, tag: MorGenTag) -> Result<MatrixExact> {
        match tag {
            MorGenTag::Phi { a, b } => self.phi(a, b),
            MorGenTag::Theta { a, b } => self.theta(a, b),
            other => Err(Error::InvalidParameter(format!(
                "{} is not a morphism of U(d)",
                moncat::tag_label(other)
            ))),
        }
    }

    /// `I_{M(left)} ⊗ G ⊗ I_{M(right)}`.
    pub fn whiskered(&self, left: &ObjectWord, tag: MorGenTag, right: &ObjectWord) -> Result<MatrixExact> {
        let g = self.generator_matrix(tag)?;
        let l = self.identity(self.word_dim(left));
        let r = self.identity(self.word_dim(right));
        Ok(kron_all(self.field, [&l, &g, &r]))
    }

    /// Matrix of a formal composite in `cat`, which must be `𝒰(d)` for this `d`.
    pub fn evaluate(&self, cat: &PresentedMonoidalCategory, c: &Composite) -> Result<MatrixExact> {
        let mut acc = self.identity(self.word_dim(&c.source));
        for step in &c.steps {
            let tag = cat.morphisms[step.generator].tag;
            let m = self.whiskered(&step.left, tag, &step.right)?;
            acc = m.mul(&acc)?;
        }
        Ok(acc)
    }

    /// Evaluates both sides of every stored relation of `𝒰(d)`.
    pub fn check_relations(&self) -> Result<Vec<RelationCheck>> {
        let cat = build_category(CategoryKind::U { d: self.d })?;
        cat.relations
            .iter()
            .map(|r| {
                let lhs = self.evaluate(&cat, &r.lhs)?;
                let rhs = self.evaluate(&cat, &r.rhs)?;
                Ok(RelationCheck { name: r.name.clone(), holds: lhs == rhs })
            })
            .collect()
    }

    fn incoming_images(&self, lambda: &ObjectWord) -> Result<Subspace> {
        let n = self.word_dim(lambda);
        let mut sum = Subspace::zero(self.field, n);
        for e in moncat::elementary_maps(lambda, self.d, Direction::Into) {
            let m = self.whiskered(&e.left, e.generator.tag, &e.right)?;
            sum = sum.sum(&Subspace::column_space(&m))?;
        }
        Ok(sum)
    }

    fn outgoing_kernel(&self, lambda: &ObjectWord) -> Result<Subspace> {
        let n = self.word_dim(lambda);
        let mut stacked = MatrixExact::zeros(self.field, 0, n);
        for e in moncat::elementary_maps(lambda, self.d, Direction::OutOf) {
            stacked = stacked.vstack(&self.whiskered(&e.left, e.generator.tag, &e.right)?)?;
        }
        Ok(stacked.kernel())
    }

    /// `∇(λ)` and `Δ(λ)`.
    pub fn nabla_delta(&self, lambda: &ObjectWord) -> Result<(ComoduleWitness, ComoduleWitness)> {
        self.check_word(lambda)?;
        let m = self.word_dim(lambda);
        let image = self.incoming_images(lambda)?;
        let kernel = self.outgoing_kernel(lambda)?;
        let nabla = ComoduleWitness {
            word: lambda.clone(),
            kind: WitnessKind::Costandard,
            dim: m - image.dim(),
            subspace: image,
        };
        let delta = ComoduleWitness {
            word: lambda.clone(),
            kind: WitnessKind::Standard,
            dim: kernel.dim(),
            subspace: kernel,
        };
        Ok((nabla, delta))
    }

    /// Rank of `Δ(λ) ↪ M(λ) ↠ ∇(λ)` over any field.
    pub fn simple_rank(&self, lambda: &ObjectWord) -> Result<usize> {
        let (nabla, delta) = self.nabla_delta(lambda)?;
        let overlap = delta.subspace.intersect(&nabla.subspace)?;
        Ok(delta.dim - overlap.dim())
    }

    /// `dim L(λ)`; only certified in characteristic zero.
    pub fn simple_dim(&self, lambda: &ObjectWord) -> Result<usize> {
        if !self.field.is_characteristic_zero() {
            return Err(Error::NeedsCharacteristicZero);
        }
        self.simple_rank(lambda)
    }

    /// One table row for `λ`.
    pub fn table_row(&self, lambda: &ObjectWord) -> Result<ComodRow> {
        let (nabla, delta) = self.nabla_delta(lambda)?;
        let simple = self.simple_rank(lambda)?;
        Ok(ComodRow {
            word: lambda.clone(),
            dim_m: self.word_dim(lambda),
            dim_nabla: nabla.dim,
            dim_delta: delta.dim,
            dim_simple: simple,
            simple_certified: self.field.is_characteristic_zero(),
            weight: (self.d == 2).then(|| wt(lambda)),
        })
    }

    fn check_word(&self, w: &ObjectWord) -> Result<()> {
        for l in w.letters() {
            if l.gen >= self.d || (l.inverse && l.gen != self.d - 1) {
                return Err(Error::InvalidParameter(format!("{w} is not a word of Λ({})", self.d)));
            }
        }
        Ok(())
    }

    /// `Σ dim ∇(λ)` over the weight fiber of `t` up to `maxlen`.
    pub fn induced_dim(&self, t: TorusWeight, maxlen: usize) -> Result<usize> {
        if self.d != 2 {
            return Err(Error::InvalidParameter("torus weights need d = 2".into()));
        }
        weight_fiber(t, maxlen)
            .iter()
            .map(|w| self.nabla_delta(w).map(|(n, _)| n.dim))
            .sum()
    }
}

/// Outcome of checking one relation of `𝒰(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Costandard,
    Standard,
}

/// A computed comodule. For `∇` the subspace is the sum of incoming images,
/// with `∇(λ) = M(λ)/subspace`; for `Δ` it is the kernel itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleWitness {
    pub word: ObjectWord,
    pub kind: WitnessKind,
    pub subspace: Subspace,
    pub dim: usize,
}

/// Dimensions for one word, in the column order of the `comod` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComodRow {
    pub word: ObjectWord,
    pub dim_m: usize,
    pub dim_nabla: usize,
    pub dim_delta: usize,
    /// Rank of `Δ → ∇`; a simple dimension only when `simple_certified`.
    pub dim_simple: usize,
    pub simple_certified: bool,
    pub weight: Option<TorusWeight>,
}

/// The Laurent monomial `a^p d^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusWeight {
    pub p: i64,
    pub q: i64,
}

impl TorusWeight {
    pub fn new(p: i64, q: i64) -> Self {
        TorusWeight { p, q }
    }

    pub fn add(self, other: TorusWeight) -> TorusWeight {
        TorusWeight { p: self.p + other.p, q: self.q + other.q }
    }
}

impl fmt::Display for TorusWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = |base: &str, e: i64| match e {
            0 => None,
            1 => Some(String::from(base)),
            e => Some(format!("{base}^{e}")),
        };
        let parts: Vec<String> = [power("a", self.p), power("d", self.q)].into_iter().flatten().collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// `wt(r_1) = d`, `wt(r_2) = ad`, extended multiplicatively (`d = 2`).
pub fn wt(w: &ObjectWord) -> TorusWeight {
    w.letters().iter().fold(TorusWeight::new(0, 0), |acc, l| {
        let t = match (l.gen, l.inverse) {
            (0, _) => TorusWeight::new(0, 1),
            (_, false) => TorusWeight::new(1, 1),
            (_, true) => TorusWeight::new(-1, -1),
        };
        acc.add(t)
    })
}

/// All normalized words of `Λ(2)` of length at most `maxlen` with weight `t`,
/// shortest first.
pub fn weight_fiber(t: TorusWeight, maxlen: usize) -> Vec<ObjectWord> {
    let alphabet = [Letter::new(0), Letter::new(1), Letter::inv(1)];
    let gens = moncat::lambda_gens(2);
    let mut found = BTreeSet::new();
    let mut layer = alloc::vec![Vec::<Letter>::new()];
    for _ in 0..=maxlen {
        let mut next = Vec::new();
        for letters in layer {
            let w = moncat::normalize(&letters, &gens).expect("valid letters");
            if w.len() == letters.len() && wt(&w) == t {
                found.insert(w);
            }
            for &l in &alphabet {
                if letters.last().is_some_and(|last| last.gen == l.gen && last.inverse != l.inverse) {
                    continue;
                }
                let mut ext = letters.clone();
                ext.push(l);
                next.push(ext);
            }
        }
        layer = next;
    }
    let mut out: Vec<ObjectWord> = found.into_iter().collect();
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}
