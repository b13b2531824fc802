//! Presentations of `coend(F)` for a fiber functor on a presented monoidal
//! category, the direct presentation of `uend(A)`, generator elimination and
//! antipodes from duality data.
//!
//! Conventions: `F(φ)` for `φ: X → Y` has columns indexed by the basis of
//! `F(X)`, so `F(φ)(e_j) = Σ_i P_{ij} e_i`. The coaction is
//! `δ(e_i) = Σ_j z_{ij} ⊗ e_j`, and `φ` is a comodule map exactly when
//! `Pᵀ·Z_Y = Z_X·Pᵀ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::comodrep::{ASContext, RelationCheck};
use crate::error::{Error, Result};
use crate::exactlin::{Field, MatrixExact, Scalar};
use crate::moncat::{
    build_category, CategoryKind, Composite, MorGenTag, ObjectWord, PresentedMonoidalCategory,
};
use crate::ncpoly::{
    rewrite_reduce, Generator, NCMonomial, NCPoly, PolyMatrix, PresentedAlgebra, RewriteSystem,
};
use crate::quadalg::QuadraticAlgebra;

/// A fiber functor given on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberFunctorData {
    pub field: Field,
    /// `dim F(X_k)` per object generator.
    pub dims: Vec<usize>,
    /// `F(φ_l)` per morphism generator, `dim F(target) × dim F(source)`.
    pub morphisms: Vec<MatrixExact>,
}

impl FiberFunctorData {
    /// `dim F(W)`; inverse letters contribute the dual of a line.
    pub fn word_dim(&self, w: &ObjectWord) -> usize {
        w.letters().iter().map(|l| if l.inverse { 1 } else { self.dims[l.gen] }).product()
    }

    pub fn validate(&self, cat: &PresentedMonoidalCategory) -> Result<()> {
        if self.dims.len() != cat.object_gens.len() {
            return Err(Error::Shape(format!(
                "{} object dimensions for {} generators",
                self.dims.len(),
                cat.object_gens.len()
            )));
        }
        if self.morphisms.len() != cat.morphisms.len() {
            return Err(Error::Shape(format!(
                "{} morphism matrices for {} generators",
                self.morphisms.len(),
                cat.morphisms.len()
            )));
        }
        for (g, &n) in cat.object_gens.iter().zip(&self.dims) {
            if g.invertible && n != 1 {
                return Err(Error::InvalidParameter(format!(
                    "invertible generator {} has dimension {n}; only lines can be inverted",
                    g.name
                )));
            }
        }
        for (m, p) in cat.morphisms.iter().zip(&self.morphisms) {
            let want = (self.word_dim(&m.target), self.word_dim(&m.source));
            if (p.rows(), p.cols()) != want || p.field() != self.field {
                return Err(Error::Shape(format!(
                    "F({}) is {}x{}, expected {}x{}",
                    m.name,
                    p.rows(),
                    p.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        Ok(())
    }
}

impl FiberFunctorData {
    /// `F` of a formal composite: each step is `I ⊗ F(g) ⊗ I`.
    pub fn evaluate(&self, c: &Composite) -> Result<MatrixExact> {
        let mut acc = MatrixExact::identity(self.field, self.word_dim(&c.source));
        for step in &c.steps {
            let p = &self.morphisms[step.generator];
            let m = MatrixExact::identity(self.field, self.word_dim(&step.left))
                .kron(p)
                .kron(&MatrixExact::identity(self.field, self.word_dim(&step.right)));
            acc = m.mul(&acc)?;
        }
        Ok(acc)
    }

    /// Evaluates both sides of every stored relation of `cat`.
    pub fn check_relations(&self, cat: &PresentedMonoidalCategory) -> Result<Vec<RelationCheck>> {
        cat.relations
            .iter()
            .map(|r| {
                let holds = self.evaluate(&r.lhs)? == self.evaluate(&r.rhs)?;
                Ok(RelationCheck { name: r.name.clone(), holds })
            })
            .collect()
    }
}

/// Coefficient symbols of one object generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorBlock {
    pub object: usize,
    /// Index of `z_{k,0,0}`; `z_{k,i,j}` is at `first + i·dim + j`.
    pub first: u32,
    pub dim: usize,
    /// Index of the formal inverse, for invertible generators.
    pub inverse: Option<u32>,
}

impl GeneratorBlock {
    pub fn z(&self, i: usize, j: usize) -> u32 {
        self.first + (i * self.dim + j) as u32
    }

    pub fn matrix(&self, field: Field) -> PolyMatrix {
        PolyMatrix::generic(field, self.dim, self.dim, self.first)
    }
}

/// A bialgebra presentation: the algebra, plus the coalgebra structure on
/// generators, plus an optional antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedBialgebra {
    pub algebra: PresentedAlgebra,
    pub blocks: Vec<GeneratorBlock>,
    /// `S(g)` per generator, where known.
    pub antipode: Option<Vec<Option<NCPoly>>>,
}

impl PresentedBialgebra {
    pub fn field(&self) -> Field {
        self.algebra.field
    }

    pub fn names(&self) -> Vec<String> {
        self.algebra.names()
    }

    /// Block and matrix position of a generator; `None` position for a
    /// formal inverse.
    fn locate(&self, g: u32) -> Option<(&GeneratorBlock, Option<(usize, usize)>)> {
        self.blocks.iter().find_map(|b| {
            if b.inverse == Some(g) {
                return Some((b, None));
            }
            let n = (b.dim * b.dim) as u32;
            (g >= b.first && g < b.first + n).then(|| {
                let k = (g - b.first) as usize;
                (b, Some((k / b.dim, k % b.dim)))
            })
        })
    }

    /// `Δ(g) = Σ_p z_{ip} ⊗ z_{pj}`, as pairs of generator indices.
    pub fn comultiplication(&self, g: u32) -> Vec<(u32, u32)> {
        match self.locate(g) {
            Some((b, Some((i, j)))) => (0..b.dim).map(|p| (b.z(i, p), b.z(p, j))).collect(),
            Some((_, None)) => vec![(g, g)],
            None => Vec::new(),
        }
    }

    /// `ε(z_{ij}) = δ_{ij}`, and `ε = 1` on formal inverses.
    pub fn counit(&self, g: u32) -> Scalar {
        let field = self.field();
        match self.locate(g) {
            Some((_, Some((i, j)))) if i != j => field.zero(),
            Some(_) => field.one(),
            None => field.zero(),
        }
    }

    /// `ε` extended as an algebra map.
    pub fn counit_poly(&self, p: &NCPoly) -> Scalar {
        let field = self.field();
        p.terms().fold(field.zero(), |acc, (m, c)| {
            let v = m.0.iter().fold(c.clone(), |v, &g| &v * &self.counit(g));
            &acc + &v
        })
    }

    /// Replaces generator names, e.g. with `a, b, c, d, delta, delta^-1`.
    pub fn rename(&mut self, names: &[&str]) -> Result<()> {
        if names.len() != self.algebra.generators.len() {
            return Err(Error::Shape(format!(
                "{} names for {} generators",
                names.len(),
                self.algebra.generators.len()
            )));
        }
        for (g, n) in self.algebra.generators.iter_mut().zip(names) {
            g.name = String::from(*n);
        }
        Ok(())
    }
}

/// `Z_W`: the Kronecker product of the coefficient matrices of the letters,
/// with `[g⁻¹]` for an inverse letter and `[1]` for the empty word.
fn word_matrix(field: Field, blocks: &[GeneratorBlock], w: &ObjectWord) -> PolyMatrix {
    let mut acc = PolyMatrix::from_scalars(&MatrixExact::identity(field, 1));
    for l in w.letters() {
        let b = &blocks[l.gen];
        let factor = if l.inverse {
            PolyMatrix::generic(field, 1, 1, b.inverse.expect("validated invertible"))
        } else {
            b.matrix(field)
        };
        acc = acc.kron(&factor);
    }
    acc
}

/// Compiles the presentation of `coend(F)`: generators are the matrix
/// coefficients of each object generator, relations are the entries of
/// `Pᵀ·Z_Y − Z_X·Pᵀ` for each morphism generator, plus `g g⁻¹ = 1 = g⁻¹ g`
/// for invertible generators. Relations stored on the category are not used.
pub fn compile_coend(cat: &PresentedMonoidalCategory, f: &FiberFunctorData) -> Result<PresentedBialgebra> {
    f.validate(cat)?;
    let field = f.field;
    let mut generators = Vec::new();
    let mut blocks = Vec::new();
    for (k, g) in cat.object_gens.iter().enumerate() {
        let n = f.dims[k];
        let first = generators.len() as u32;
        for i in 0..n {
            for j in 0..n {
                let name = if n == 1 { g.name.clone() } else { format!("{}[{},{}]", g.name, i + 1, j + 1) };
                generators.push(Generator { name, weight: g.weight });
            }
        }
        let inverse = if g.invertible {
            generators.push(Generator { name: format!("{}^-1", g.name), weight: -g.weight });
            Some(first + 1)
        } else {
            None
        };
        blocks.push(GeneratorBlock { object: k, first, dim: n, inverse });
    }

    let mut relations = Vec::new();
    for (m, p) in cat.morphisms.iter().zip(&f.morphisms) {
        let pt = PolyMatrix::from_scalars(&p.transpose());
        let zx = word_matrix(field, &blocks, &m.source);
        let zy = word_matrix(field, &blocks, &m.target);
        let diff = pt.mul(&zy)?.sub(&zx.mul(&pt)?)?;
        relations.extend(diff.entries().iter().filter(|r| !r.is_zero()).cloned());
    }
    for b in &blocks {
        if let Some(inv) = b.inverse {
            let g = NCPoly::generator(field, b.first);
            let gi = NCPoly::generator(field, inv);
            let one = NCPoly::one(field);
            relations.push(g.mul(&gi).sub(&one));
            relations.push(gi.mul(&g).sub(&one));
        }
    }
    let algebra = PresentedAlgebra::new(field, generators, relations)?;
    Ok(PresentedBialgebra { algebra, blocks, antipode: None })
}

/// Names `a, b, c, …` for a small matrix of generators, `z11, z12, …` otherwise.
pub fn matrix_names(n: usize) -> Vec<String> {
    if n * n <= 26 && n <= 3 {
        (0..n * n).map(|k| String::from((b'a' + k as u8) as char)).collect()
    } else {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                out.push(format!("z{i}_{j}"));
            }
        }
        out
    }
}

/// `uend(A) = T(V^*⊗V)/(σ₂₃(R^⊥⊗R))` on generators `z_{ij}` at index
/// `i·n + j`.
///
/// The generator `z_{ij}` stands for the coefficient pairing `e_j^*` with
/// `e_i`, matching [`compile_coend`], so the relation for `x ∈ R` and
/// `u ∈ R^⊥` is `Σ x_{i₁i₂} u_{k₁k₂} z_{i₁k₁} z_{i₂k₂}`.
pub fn uend_direct(a: &QuadraticAlgebra) -> PresentedAlgebra {
    let n = a.dim_v();
    let field = a.field();
    let r = a.relations();
    let perp = r.annihilator();
    let mut relations = Vec::new();
    for s in 0..r.dim() {
        let x = r.basis_vector(s);
        for t in 0..perp.dim() {
            let u = perp.basis_vector(t);
            let mut p = NCPoly::zero(field);
            for (xi, xc) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (ui, uc) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let (i1, i2) = (xi / n, xi % n);
                    let (k1, k2) = (ui / n, ui % n);
                    let m = NCMonomial(vec![(i1 * n + k1) as u32, (i2 * n + k2) as u32]);
                    p.add_term(m, &(xc * uc));
                }
            }
            relations.push(p);
        }
    }
    let generators = matrix_names(n).into_iter().map(|name| Generator { name, weight: 1 }).collect();
    PresentedAlgebra::new(field, generators, relations).expect("quadratic relations are homogeneous")
}

/// `𝒞 = ⟨r_1, r_2 | r_2 → r_1 r_1⟩` with `F(r_1) = V`, `F(r_2) = R`.
pub fn uend_functor(a: &QuadraticAlgebra) -> Result<(PresentedMonoidalCategory, FiberFunctorData)> {
    let cat = build_category(CategoryKind::C)?;
    let r = a.relations();
    let f = FiberFunctorData {
        field: a.field(),
        dims: vec![a.dim_v(), r.dim()],
        morphisms: vec![r.basis().transpose()],
    };
    Ok((cat, f))
}

/// `𝒟(d, pairing)` with `G(r_i) = R_i`, the inclusions `R_i ↪ V^{⊗i}` and
/// `Θ_{a,d-a}` on the pairing generator.
pub fn uaut_functor(ctx: &ASContext, pairing: usize) -> Result<(PresentedMonoidalCategory, FiberFunctorData)> {
    let d = ctx.d();
    let cat = build_category(CategoryKind::D { d, a: pairing })?;
    let mut morphisms = Vec::new();
    for m in &cat.morphisms {
        morphisms.push(match m.tag {
            MorGenTag::Inclusion { i } => ctx.space(i).basis().transpose(),
            MorGenTag::PairingToUnit { a } => ctx.theta(a, d - a)?,
            other => return Err(Error::Invariant(format!("unexpected generator {other:?} in D"))),
        });
    }
    let f = FiberFunctorData { field: ctx.field(), dims: (1..=d).map(|l| ctx.dim_r(l)).collect(), morphisms };
    Ok((cat, f))
}

/// The result of eliminating defined generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eliminated {
    pub algebra: PresentedAlgebra,
    /// Each removed generator (by its old name) with its value in the
    /// remaining generators.
    pub substitutions: Vec<(String, NCPoly)>,
}

/// Removes the coefficients of every object generator that is the source of
/// exactly one morphism generator, using `Z_X = Pᵀ·Z_Y·S` with `S` a right
/// inverse of `Pᵀ` (`P` injective), and rewrites the relations in the
/// remaining generators.
pub fn eliminate_defined_generators(
    b: &PresentedBialgebra,
    cat: &PresentedMonoidalCategory,
    f: &FiberFunctorData,
) -> Result<Eliminated> {
    let field = b.field();
    let nobj = cat.object_gens.len();
    let mut defining: Vec<Option<usize>> = vec![None; nobj];
    for k in 0..nobj {
        let sources: Vec<usize> = cat
            .morphisms
            .iter()
            .enumerate()
            .filter(|(_, m)| m.source.letters().len() == 1 && m.source.letters()[0].gen == k && !m.source.letters()[0].inverse)
            .map(|(l, _)| l)
            .collect();
        match sources.as_slice() {
            [] => {}
            [l] => defining[k] = Some(*l),
            _ => {
                return Err(Error::Elimination(format!(
                    "{} is the source of several morphism generators",
                    cat.object_gens[k].name
                )))
            }
        }
    }

    // Values of eliminated generators in terms of the old generator indices,
    // resolved in dependency order.
    let mut values: BTreeMap<u32, NCPoly> = BTreeMap::new();
    let mut resolved: Vec<bool> = defining.iter().map(Option::is_none).collect();
    while resolved.iter().any(|r| !r) {
        let mut progress = false;
        for k in 0..nobj {
            if resolved[k] {
                continue;
            }
            let l = defining[k].expect("unresolved generators have a definition");
            let target = &cat.morphisms[l].target;
            if target.letters().iter().any(|x| !resolved[x.gen]) {
                continue;
            }
            if b.blocks[k].inverse.is_some() {
                return Err(Error::Elimination(format!(
                    "cannot eliminate invertible generator {}",
                    cat.object_gens[k].name
                )));
            }
            let p = &f.morphisms[l];
            if p.rank() != p.cols() {
                return Err(Error::Elimination(format!("F({}) is not injective", cat.morphisms[l].name)));
            }
            let pt = p.transpose();
            let s = pt.right_inverse()?;
            let zt = word_matrix(field, &b.blocks, target).map(|e| e.substitute(|g| values.get(&g).cloned()));
            let zk = PolyMatrix::from_scalars(&pt).mul(&zt)?.mul(&PolyMatrix::from_scalars(&s))?;
            let blk = &b.blocks[k];
            for i in 0..blk.dim {
                for j in 0..blk.dim {
                    values.insert(blk.z(i, j), zk.get(i, j).clone());
                }
            }
            resolved[k] = true;
            progress = true;
        }
        if !progress {
            return Err(Error::Elimination("circular generator definitions".into()));
        }
    }

    let kept: Vec<u32> =
        (0..b.algebra.generators.len() as u32).filter(|g| !values.contains_key(g)).collect();
    let new_index: BTreeMap<u32, u32> = kept.iter().enumerate().map(|(i, &g)| (g, i as u32)).collect();
    let reindex = |p: &NCPoly| {
        NCPoly::from_terms(
            field,
            p.terms().map(|(m, c)| (NCMonomial(m.0.iter().map(|g| new_index[g]).collect()), c.clone())),
        )
    };
    let relations = b
        .algebra
        .relations
        .iter()
        .map(|r| reindex(&r.substitute(|g| values.get(&g).cloned())))
        .collect();
    let generators = kept.iter().map(|&g| b.algebra.generators[g as usize].clone()).collect();
    let substitutions = values
        .iter()
        .map(|(&g, v)| (b.algebra.generators[g as usize].name.clone(), reindex(v)))
        .collect();
    Ok(Eliminated { algebra: PresentedAlgebra::new(field, generators, relations)?, substitutions })
}

/// A right dual `Y` of an object generator `X`: `ev: X ⊗ Y → 1` and,
/// optionally, `coev: 1 → Y ⊗ X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityDatum {
    pub object: usize,
    pub dual: ObjectWord,
    /// `1 × (dim X · dim Y)`.
    pub ev: MatrixExact,
    /// `(dim Y · dim X) × 1`; when absent the inverse of `ev` is used.
    pub coev: Option<MatrixExact>,
}

/// Derives `S(z_{jk}) = (E·Z_Yᵀ·K)_{jk}` from each duality datum, with `E`
/// the reshaped evaluation and `K` the reshaped coevaluation; formal
/// inverses get `S(g) = g⁻¹`. Both antipode identities are then checked by
/// rewriting to zero.
pub fn antipode_derive(
    b: &PresentedBialgebra,
    data: &[DualityDatum],
    max_passes: usize,
) -> Result<Vec<Option<NCPoly>>> {
    let field = b.field();
    let mut table: Vec<Option<NCPoly>> = vec![None; b.algebra.generators.len()];
    for blk in &b.blocks {
        if let Some(inv) = blk.inverse {
            table[blk.first as usize] = Some(NCPoly::generator(field, inv));
            table[inv as usize] = Some(NCPoly::generator(field, blk.first));
        }
    }
    let mut verify = Vec::new();
    for datum in data {
        let blk = b
            .blocks
            .get(datum.object)
            .ok_or_else(|| Error::InvalidParameter(format!("no object generator {}", datum.object)))?;
        let n = blk.dim;
        let m = word_dim_of(b, &datum.dual);
        if n != m || datum.ev.rows() != 1 || datum.ev.cols() != n * m {
            return Err(Error::Shape(format!("evaluation must be 1x{}", n * m)));
        }
        let e = datum.ev.reshape(n, m)?;
        let k = match &datum.coev {
            Some(c) => {
                if c.rows() != n * m || c.cols() != 1 {
                    return Err(Error::Shape(format!("coevaluation must be {}x1", n * m)));
                }
                c.reshape(m, n)?
            }
            None => e.inverse()?,
        };
        let id_n = MatrixExact::identity(field, n);
        if e.mul(&k)? != id_n || k.mul(&e)? != MatrixExact::identity(field, m) {
            return Err(Error::InvalidParameter("snake identities fail for the duality datum".into()));
        }
        let w = word_matrix(field, &b.blocks, &datum.dual);
        let s = PolyMatrix::from_scalars(&e).mul(&w.transpose())?.mul(&PolyMatrix::from_scalars(&k))?;
        for j in 0..n {
            for l in 0..n {
                table[blk.z(j, l) as usize] = Some(s.get(j, l).clone());
            }
        }
        verify.push(blk.clone());
    }

    for blk in &verify {
        verify_antipode(b, &table, blk, true, max_passes)?;
    }
    Ok(table)
}

/// Rewrites `z·S(z) − 1` (and `S(z)·z − 1` when `both`) to zero on one block.
fn verify_antipode(
    b: &PresentedBialgebra,
    table: &[Option<NCPoly>],
    blk: &GeneratorBlock,
    both: bool,
    max_passes: usize,
) -> Result<()> {
    let field = b.field();
    let rules = RewriteSystem::from_relations(&b.algebra.relations);
    let z = blk.matrix(field);
    let s = z.map(|p| p.substitute(|g| table[g as usize].clone()));
    let id = PolyMatrix::from_scalars(&MatrixExact::identity(field, blk.dim));
    let mut products = alloc::vec![("z·S(z)", z.mul(&s)?)];
    if both {
        products.push(("S(z)·z", s.mul(&z)?));
    }
    for (label, prod) in products {
        for entry in prod.sub(&id)?.entries() {
            let red = rewrite_reduce(entry, &rules, max_passes);
            if !red.certifies_zero() {
                return Err(Error::Inconclusive(format!(
                    "{label} − 1 does not reduce to zero (capped: {}, residue {})",
                    red.capped,
                    red.result.pretty(&b.names())
                )));
            }
        }
    }
    Ok(())
}

fn word_dim_of(b: &PresentedBialgebra, w: &ObjectWord) -> usize {
    w.letters().iter().map(|l| if l.inverse { 1 } else { b.blocks[l.gen].dim }).product()
}

/// `uaut(A)` compiled from `(𝒟(d, 1), G)`, with the antipode on the
/// coefficients of `r_1` and on `r_d^{±1}`.
///
/// For `dim V = 2, d = 2` the generators are named `a, b, c, d, delta,
/// delta^-1`.
pub fn uaut(a: &QuadraticAlgebra, nmax: usize, max_passes: usize) -> Result<PresentedBialgebra> {
    let ctx = ASContext::new(a, nmax)?;
    let d = ctx.d();
    let (cat, f) = uaut_functor(&ctx, 1)?;
    let mut b = compile_coend(&cat, &f)?;
    let dual = ObjectWord::concat(
        &ObjectWord::parse(&format!("r{d}^-1"), &cat.object_gens)?,
        &ObjectWord::parse(&format!("r{}", d - 1), &cat.object_gens)?,
    );
    let pairing = cat
        .morphism_index(MorGenTag::PairingToUnit { a: 1 })
        .expect("pairing generator present");
    let datum = DualityDatum { object: 0, dual, ev: f.morphisms[pairing].clone(), coev: None };
    if d == 2 {
        let table = antipode_derive(&b, core::slice::from_ref(&datum), max_passes)?;
        b.antipode = Some(table);
        if a.dim_v() == 2 {
            b.rename(&["a", "b", "c", "d", "delta", "delta^-1"])?;
        }
    } else {
        // The dual of r_1 involves r_{d-1}, whose own antipode is not
        // derived, so only the identity z·S(z) = 1 is checked.
        let table = antipode_table(&b, &datum)?;
        verify_antipode(&b, &table, &b.blocks[0], false, max_passes)?;
        b.antipode = Some(table);
    }
    Ok(b)
}

/// The antipode table from one duality datum, without verification.
fn antipode_table(b: &PresentedBialgebra, datum: &DualityDatum) -> Result<Vec<Option<NCPoly>>> {
    let field = b.field();
    let mut table: Vec<Option<NCPoly>> = vec![None; b.algebra.generators.len()];
    for blk in &b.blocks {
        if let Some(inv) = blk.inverse {
            table[blk.first as usize] = Some(NCPoly::generator(field, inv));
            table[inv as usize] = Some(NCPoly::generator(field, blk.first));
        }
    }
    let blk = &b.blocks[datum.object];
    let n = blk.dim;
    let e = datum.ev.reshape(n, n)?;
    let k = e.inverse()?;
    let w = word_matrix(field, &b.blocks, &datum.dual);
    let s = PolyMatrix::from_scalars(&e).mul(&w.transpose())?.mul(&PolyMatrix::from_scalars(&k))?;
    for j in 0..n {
        for l in 0..n {
            table[blk.z(j, l) as usize] = Some(s.get(j, l).clone());
        }
    }
    Ok(table)
}

/// `uend(A)` compiled over `𝒞` with the coefficients of `r_2` eliminated.
pub fn uend_compiled(a: &QuadraticAlgebra) -> Result<Eliminated> {
    let (cat, f) = uend_functor(a)?;
    let b = compile_coend(&cat, &f)?;
    let mut e = eliminate_defined_generators(&b, &cat, &f)?;
    for (g, name) in e.algebra.generators.iter_mut().zip(matrix_names(a.dim_v())) {
        g.name = name;
    }
    Ok(e)
}
