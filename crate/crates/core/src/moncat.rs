//! Finitely presented strict monoidal categories and the monoid
//! `Λ = ⟨r_1, …, r_{d-1}, r_d^{±1}⟩` with its partial order.
//!
//! Generators are 0-based internally: `r_i` is generator `i - 1`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// One letter of an object word: a generator, possibly inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn inv(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// An object of a presented monoidal category, kept in normal form: no
/// adjacent `g g⁻¹` or `g⁻¹ g`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectWord {
    letters: Vec<Letter>,
}

impl ObjectWord {
    pub fn empty() -> Self {
        ObjectWord { letters: Vec::new() }
    }

    /// Cancels adjacent inverse pairs without validating invertibility.
    fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            match letters.last() {
                Some(&top) if top.cancels(l) => {
                    letters.pop();
                }
                _ => letters.push(l),
            }
        }
        ObjectWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Tensor product, renormalized at the seam.
    pub fn concat(&self, other: &ObjectWord) -> ObjectWord {
        Self::reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn concat3(left: &ObjectWord, mid: &ObjectWord, right: &ObjectWord) -> ObjectWord {
        Self::reduce(
            left.letters.iter().chain(mid.letters.iter()).chain(right.letters.iter()).copied(),
        )
    }

    /// Renders with the given generator names, e.g. `"r1 r2^-1 r1"`. The
    /// empty word renders as `"1"`.
    pub fn render(&self, gens: &[ObjectGen]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                let name = gens.get(l.gen).map_or_else(|| format!("g{}", l.gen), |g| g.name.clone());
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name
                }
            })
            .collect();
        parts.join(" ")
    }

    /// Parses space-separated generator names with optional `^-1`; `"1"` or
    /// blank text is the empty word.
    pub fn parse(text: &str, gens: &[ObjectGen]) -> Result<ObjectWord> {
        let mut raw = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, inverse) = match tok.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let gen = gens
                .iter()
                .position(|g| g.name == name)
                .ok_or_else(|| Error::Parse(format!("unknown generator {name:?}")))?;
            raw.push(Letter { gen, inverse });
        }
        normalize(&raw, gens)
    }
}

impl fmt::Display for ObjectWord {
    /// Uses the default names `r1, r2, …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "r{}", l.gen + 1)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Cancels adjacent inverse pairs to a fixpoint. The result is unique since
/// free-group reduction is confluent.
pub fn normalize(raw: &[Letter], gens: &[ObjectGen]) -> Result<ObjectWord> {
    for l in raw {
        let g = gens
            .get(l.gen)
            .ok_or_else(|| Error::InvalidParameter(format!("generator index {} out of range", l.gen)))?;
        if l.inverse && !g.invertible {
            return Err(Error::NotInvertible(g.name.clone()));
        }
    }
    Ok(ObjectWord::reduce(raw.iter().copied()))
}

/// An object generator with its invertibility flag and `ℓ`-weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectGen {
    pub name: String,
    pub invertible: bool,
    pub weight: i64,
}

/// Family of a morphism generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MorGenTag {
    /// `r_i → r_1^{⊗i}`.
    Inclusion { i: usize },
    /// `r_{a+b} → r_a r_b`.
    Phi { a: usize, b: usize },
    /// `r_a r_d⁻¹ r_b → r_{a+b-d}`.
    Theta { a: usize, b: usize },
    /// `1 → v v`.
    Cup,
    /// `v v → 1`.
    Cap,
    /// `r_a r_d⁻¹ r_{d-a} → 1`.
    PairingToUnit { a: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorGen {
    pub name: String,
    pub source: ObjectWord,
    pub target: ObjectWord,
    pub tag: MorGenTag,
}

/// A generator whiskered as `left ⊗ g ⊗ right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub left: ObjectWord,
    pub generator: usize,
    pub right: ObjectWord,
}

/// A formal composite of whiskered steps, applied first to last. No steps
/// means the identity on `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composite {
    pub source: ObjectWord,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: Composite,
    pub rhs: Composite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CategoryKind {
    /// `⟨r_1, r_2 | r_2 → r_1 r_1⟩`.
    C,
    /// `⟨r_1, …, r_{d-1}, r_d^{±1} | r_i → r_1^i, r_a r_d⁻¹ r_{d-a} → 1⟩`.
    D { d: usize, a: usize },
    /// The category `𝒰` on `Λ` with `φ`, `θ`, their associativity and the two mixed squares.
    U { d: usize },
    /// The subcategory of `𝒰_↑` on `r_1, …, r_d`.
    UUpPlus { d: usize },
    TemperleyLieb,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedMonoidalCategory {
    pub kind: CategoryKind,
    pub object_gens: Vec<ObjectGen>,
    pub morphisms: Vec<MorGen>,
    /// Kept for documentation; nothing downstream consumes them.
    pub relations: Vec<Relation>,
}

impl PresentedMonoidalCategory {
    pub fn morphism_index(&self, tag: MorGenTag) -> Option<usize> {
        self.morphisms.iter().position(|m| m.tag == tag)
    }

    /// Source and target of a whiskered step.
    pub fn step_ends(&self, step: &Step) -> Result<(ObjectWord, ObjectWord)> {
        let g = self
            .morphisms
            .get(step.generator)
            .ok_or_else(|| Error::InvalidParameter(format!("no morphism {}", step.generator)))?;
        Ok((
            ObjectWord::concat3(&step.left, &g.source, &step.right),
            ObjectWord::concat3(&step.left, &g.target, &step.right),
        ))
    }

    /// Target of a composite, after checking each step starts where the
    /// previous one ended.
    pub fn composite_target(&self, c: &Composite) -> Result<ObjectWord> {
        let mut cur = c.source.clone();
        for (k, step) in c.steps.iter().enumerate() {
            let (s, t) = self.step_ends(step)?;
            if s != cur {
                return Err(Error::Shape(format!(
                    "step {k} starts at {} but the composite is at {}",
                    s.render(&self.object_gens),
                    cur.render(&self.object_gens)
                )));
            }
            cur = t;
        }
        Ok(cur)
    }

    /// Checks both sides of every relation are composable with equal ends.
    pub fn validate(&self) -> Result<()> {
        for r in &self.relations {
            let lt = self.composite_target(&r.lhs)?;
            let rt = self.composite_target(&r.rhs)?;
            if r.lhs.source != r.rhs.source || lt != rt {
                return Err(Error::Shape(format!("relation {} has mismatched ends", r.name)));
            }
        }
        Ok(())
    }

    pub fn word(&self, text: &str) -> Result<ObjectWord> {
        ObjectWord::parse(text, &self.object_gens)
    }

    /// `ℓ` of a word: the sum of letter weights, negated for inverses.
    pub fn weight(&self, w: &ObjectWord) -> i64 {
        w.letters
            .iter()
            .map(|l| {
                let wt = self.object_gens[l.gen].weight;
                if l.inverse {
                    -wt
                } else {
                    wt
                }
            })
            .sum()
    }
}

/// Index ranges for the generating morphisms and inequalities of `𝒰(d)`.
///
/// These are the broadest type-correct choices; narrowing them here changes
/// every consumer consistently.
pub mod ranges {
    use alloc::vec::Vec;

    /// `(a, b)` with `a, b ≥ 1` and `a + b ≤ d`, for `φ_{a,b}: r_{a+b} → r_a r_b`.
    pub fn phi_pairs(d: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..d {
            for b in 1..=d - a {
                out.push((a, b));
            }
        }
        out
    }

    /// `(a, b)` with `1 ≤ a, b ≤ d-1` and `a + b ≥ d`, for
    /// `θ_{a,b}: r_a r_d⁻¹ r_b → r_{a+b-d}`. The cases `a = d` or `b = d`
    /// are identities and are not generators.
    pub fn theta_pairs(d: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..d {
            for b in 1..d {
                if a + b >= d {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

use ranges::{phi_pairs, theta_pairs};

/// Generators `r_1, …, r_d` of `Λ`, with `r_d` invertible and `ℓ(r_i) = i`.
pub fn lambda_gens(d: usize) -> Vec<ObjectGen> {
    (1..=d)
        .map(|i| ObjectGen { name: format!("r{i}"), invertible: i == d, weight: i as i64 })
        .collect()
}

fn check_d(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("d = {d}, need d ≥ 2")));
    }
    Ok(())
}

/// `r_i` for `1 ≤ i ≤ d`; `r_0` is the empty word.
fn r(i: usize) -> ObjectWord {
    if i == 0 {
        ObjectWord::empty()
    } else {
        ObjectWord { letters: vec![Letter::new(i - 1)] }
    }
}

fn r_inv(d: usize) -> ObjectWord {
    ObjectWord { letters: vec![Letter::inv(d - 1)] }
}

fn word(parts: &[&ObjectWord]) -> ObjectWord {
    ObjectWord::reduce(parts.iter().flat_map(|w| w.letters.iter().copied()))
}

fn phi_gen(a: usize, b: usize) -> MorGen {
    MorGen {
        name: format!("phi_{a},{b}"),
        source: r(a + b),
        target: word(&[&r(a), &r(b)]),
        tag: MorGenTag::Phi { a, b },
    }
}

fn theta_gen(a: usize, b: usize, d: usize) -> MorGen {
    MorGen {
        name: format!("theta_{a},{b}"),
        source: word(&[&r(a), &r_inv(d), &r(b)]),
        target: r(a + b - d),
        tag: MorGenTag::Theta { a, b },
    }
}

/// Builds the presentation for `kind`.
pub fn build_category(kind: CategoryKind) -> Result<PresentedMonoidalCategory> {
    let cat = match kind {
        CategoryKind::C => {
            let gens = vec![
                ObjectGen { name: "r1".into(), invertible: false, weight: 1 },
                ObjectGen { name: "r2".into(), invertible: false, weight: 2 },
            ];
            let morphisms = vec![MorGen {
                name: "incl_2".into(),
                source: r(2),
                target: word(&[&r(1), &r(1)]),
                tag: MorGenTag::Inclusion { i: 2 },
            }];
            PresentedMonoidalCategory { kind, object_gens: gens, morphisms, relations: Vec::new() }
        }
        CategoryKind::D { d, a } => {
            check_d(d)?;
            if a == 0 || a >= d {
                return Err(Error::InvalidParameter(format!("a = {a} outside 1..{}", d - 1)));
            }
            let mut morphisms: Vec<MorGen> = (2..=d)
                .map(|i| MorGen {
                    name: format!("incl_{i}"),
                    source: r(i),
                    target: ObjectWord { letters: vec![Letter::new(0); i] },
                    tag: MorGenTag::Inclusion { i },
                })
                .collect();
            morphisms.push(MorGen {
                name: format!("pair_{a}"),
                source: word(&[&r(a), &r_inv(d), &r(d - a)]),
                target: ObjectWord::empty(),
                tag: MorGenTag::PairingToUnit { a },
            });
            PresentedMonoidalCategory {
                kind,
                object_gens: lambda_gens(d),
                morphisms,
                relations: Vec::new(),
            }
        }
        CategoryKind::U { d } => {
            check_d(d)?;
            let mut morphisms: Vec<MorGen> =
                phi_pairs(d).into_iter().map(|(a, b)| phi_gen(a, b)).collect();
            morphisms.extend(theta_pairs(d).into_iter().map(|(a, b)| theta_gen(a, b, d)));
            let mut cat = PresentedMonoidalCategory {
                kind,
                object_gens: lambda_gens(d),
                morphisms,
                relations: Vec::new(),
            };
            cat.relations = u_relations(&cat, d, true);
            cat
        }
        CategoryKind::UUpPlus { d } => {
            check_d(d)?;
            let gens = (1..=d)
                .map(|i| ObjectGen { name: format!("r{i}"), invertible: false, weight: i as i64 })
                .collect();
            let morphisms = phi_pairs(d).into_iter().map(|(a, b)| phi_gen(a, b)).collect();
            let mut cat =
                PresentedMonoidalCategory { kind, object_gens: gens, morphisms, relations: Vec::new() };
            cat.relations = u_relations(&cat, d, false);
            cat
        }
        CategoryKind::TemperleyLieb => temperley_lieb(),
    };
    cat.validate()?;
    Ok(cat)
}

/// Steps for `left ⊗ g ⊗ right`, or nothing when `g` is a degenerate identity.
fn step(cat: &PresentedMonoidalCategory, left: ObjectWord, tag: Option<MorGenTag>, right: ObjectWord) -> Vec<Step> {
    match tag {
        None => Vec::new(),
        Some(t) => {
            let generator = cat.morphism_index(t).expect("generator present");
            vec![Step { left, generator, right }]
        }
    }
}

fn composite(source: ObjectWord, parts: Vec<Vec<Step>>) -> Composite {
    Composite { source, steps: parts.into_iter().flatten().collect() }
}

/// `φ_{a,b}`, with `φ_{a,0} = φ_{0,b} = id`.
fn phi_tag(a: usize, b: usize) -> Option<MorGenTag> {
    (a > 0 && b > 0).then_some(MorGenTag::Phi { a, b })
}

/// `θ_{a,b}`, with `θ_{d,c} = θ_{c,d} = id`.
fn theta_tag(a: usize, b: usize, d: usize) -> Option<MorGenTag> {
    (a < d && b < d).then_some(MorGenTag::Theta { a, b })
}

fn u_relations(cat: &PresentedMonoidalCategory, d: usize, with_theta: bool) -> Vec<Relation> {
    let e = ObjectWord::empty;
    let mut rels = Vec::new();
    for a in 1..=d {
        for b in 1..=d {
            for c in 1..=d {
                if a + b + c > d {
                    continue;
                }
                let lhs = composite(
                    r(a + b + c),
                    vec![
                        step(cat, e(), phi_tag(a, b + c), e()),
                        step(cat, r(a), phi_tag(b, c), e()),
                    ],
                );
                let rhs = composite(
                    r(a + b + c),
                    vec![
                        step(cat, e(), phi_tag(a + b, c), e()),
                        step(cat, e(), phi_tag(a, b), r(c)),
                    ],
                );
                rels.push(Relation { name: format!("phi_assoc[{a},{b},{c}]"), lhs, rhs });
            }
        }
    }
    if !with_theta {
        return rels;
    }
    let inv = r_inv(d);
    for a in 1..d {
        for b in 1..d {
            for c in 1..d {
                if a + b <= d || b + c <= d || a + b + c < 2 * d {
                    continue;
                }
                let src = word(&[&r(a), &inv, &r(b), &inv, &r(c)]);
                let lhs = composite(
                    src.clone(),
                    vec![
                        step(cat, e(), theta_tag(a, b, d), word(&[&inv, &r(c)])),
                        step(cat, e(), theta_tag(a + b - d, c, d), e()),
                    ],
                );
                let rhs = composite(
                    src,
                    vec![
                        step(cat, word(&[&r(a), &inv]), theta_tag(b, c, d), e()),
                        step(cat, e(), theta_tag(a, b + c - d, d), e()),
                    ],
                );
                rels.push(Relation { name: format!("theta_assoc[{a},{b},{c}]"), lhs, rhs });
            }
        }
    }
    // Mixed square on r_{a+b} r_d⁻¹ r_c with a + b ≤ d ≤ b + c.
    for (a, b) in phi_pairs(d) {
        for c in 1..d {
            if b + c < d {
                continue;
            }
            let src = word(&[&r(a + b), &inv, &r(c)]);
            let lhs = composite(
                src.clone(),
                vec![
                    step(cat, e(), phi_tag(a, b), word(&[&inv, &r(c)])),
                    step(cat, r(a), theta_tag(b, c, d), e()),
                ],
            );
            let rhs = composite(
                src,
                vec![
                    step(cat, e(), theta_tag(a + b, c, d), e()),
                    step(cat, e(), phi_tag(a, b + c - d), e()),
                ],
            );
            rels.push(Relation { name: format!("phi_theta_left[{a},{b},{c}]"), lhs, rhs });
        }
    }
    // Mixed square on r_a r_d⁻¹ r_{b+c} with b + c ≤ d ≤ a + b.
    for (b, c) in phi_pairs(d) {
        for a in 1..d {
            if a + b < d {
                continue;
            }
            let src = word(&[&r(a), &inv, &r(b + c)]);
            let lhs = composite(
                src.clone(),
                vec![
                    step(cat, word(&[&r(a), &inv]), phi_tag(b, c), e()),
                    step(cat, e(), theta_tag(a, b, d), r(c)),
                ],
            );
            let rhs = composite(
                src,
                vec![
                    step(cat, e(), theta_tag(a, b + c, d), e()),
                    step(cat, e(), phi_tag(a + b - d, c), e()),
                ],
            );
            rels.push(Relation { name: format!("phi_theta_right[{a},{b},{c}]"), lhs, rhs });
        }
    }
    rels
}

fn temperley_lieb() -> PresentedMonoidalCategory {
    let v = ObjectWord { letters: vec![Letter::new(0)] };
    let vv = word(&[&v, &v]);
    let e = ObjectWord::empty;
    let gens = vec![ObjectGen { name: "v".into(), invertible: false, weight: 0 }];
    let morphisms = vec![
        MorGen { name: "phi".into(), source: e(), target: vv.clone(), tag: MorGenTag::Cup },
        MorGen { name: "psi".into(), source: vv, target: e(), tag: MorGenTag::Cap },
    ];
    let (phi, psi) = (0, 1);
    let st = |left: &ObjectWord, g, right: &ObjectWord| Step { left: left.clone(), generator: g, right: right.clone() };
    let id_v = Composite { source: v.clone(), steps: Vec::new() };
    let right_snake =
        Composite { source: v.clone(), steps: vec![st(&v, phi, &e()), st(&e(), psi, &v)] };
    let left_snake =
        Composite { source: v.clone(), steps: vec![st(&e(), phi, &v), st(&v, psi, &e())] };
    let right_loop =
        Composite { source: v.clone(), steps: vec![st(&v, phi, &e()), st(&v, psi, &e())] };
    let left_loop = Composite { source: v.clone(), steps: vec![st(&e(), phi, &v), st(&e(), psi, &v)] };
    let relations = vec![
        Relation { name: "snake_right".into(), lhs: right_snake, rhs: id_v.clone() },
        Relation { name: "snake_left".into(), lhs: left_snake, rhs: id_v },
        Relation { name: "loop_central".into(), lhs: right_loop, rhs: left_loop },
    ];
    PresentedMonoidalCategory {
        kind: CategoryKind::TemperleyLieb,
        object_gens: gens,
        morphisms,
        relations,
    }
}

/// Parses a word of `Λ(d)` such as `"r1 r2^-1 r1"`.
pub fn lambda_word(text: &str, d: usize) -> Result<ObjectWord> {
    ObjectWord::parse(text, &lambda_gens(d))
}

/// `ℓ(λ) = Σ i` over letters `r_i`, minus `d` per `r_d⁻¹`.
pub fn weight_ell(w: &ObjectWord, d: usize) -> i64 {
    w.letters
        .iter()
        .map(|l| {
            if l.inverse {
                -(d as i64)
            } else {
                (l.gen + 1) as i64
            }
        })
        .sum()
}

fn is_rd(l: Letter, d: usize) -> bool {
    l.gen == d - 1
}

fn rd_power(e: i64, d: usize) -> impl Iterator<Item = Letter> {
    let l = if e < 0 { Letter::inv(d - 1) } else { Letter::new(d - 1) };
    core::iter::repeat_n(l, e.unsigned_abs() as usize)
}

/// Words reachable from `w` by one whiskered generating inequality, up to
/// length `bound`.
///
/// A rewrite of `r_d` or of the empty word may be whiskered by words that
/// cancel against `w`, so around every maximal run `r_d^n` (or a gap with
/// `n = 0`) the rewrite can land at any split `r_d^e · y · r_d^f`.
fn successors(w: &ObjectWord, d: usize, bound: usize) -> BTreeSet<ObjectWord> {
    let ls = &w.letters;
    let mut out = BTreeSet::new();
    let mut emit = |prefix: &[Letter], mid: &mut dyn Iterator<Item = Letter>, suffix: &[Letter]| {
        let letters: Vec<Letter> =
            prefix.iter().copied().chain(mid).chain(suffix.iter().copied()).collect();
        if letters.len() <= bound {
            out.insert(ObjectWord { letters });
        }
    };
    let rd_inv = Letter::inv(d - 1);

    // Literal occurrences of letters r_c with c < d.
    for (p, l) in ls.iter().enumerate() {
        if is_rd(*l, d) {
            continue;
        }
        let c = l.gen + 1;
        for (a, b) in phi_pairs(d) {
            if a + b == c {
                emit(&ls[..p], &mut [Letter::new(a - 1), Letter::new(b - 1)].into_iter(), &ls[p + 1..]);
            }
        }
        for (a, b) in theta_pairs(d) {
            if a + b == d + c {
                emit(
                    &ls[..p],
                    &mut [Letter::new(a - 1), rd_inv, Letter::new(b - 1)].into_iter(),
                    &ls[p + 1..],
                );
            }
        }
    }

    // Slots: maximal r_d-runs, and gaps not touching any r_d letter.
    let mut slots: Vec<(usize, usize, i64)> = Vec::new();
    let mut p = 0;
    while p <= ls.len() {
        if p < ls.len() && is_rd(ls[p], d) {
            let start = p;
            while p < ls.len() && is_rd(ls[p], d) {
                p += 1;
            }
            let n = (p - start) as i64;
            slots.push((start, p, if ls[start].inverse { -n } else { n }));
            continue;
        }
        let before_ok = p == 0 || !is_rd(ls[p - 1], d);
        if before_ok {
            slots.push((p, p, 0));
        }
        p += 1;
    }
    for (start, end, n) in slots {
        let (prefix, suffix) = (&ls[..start], &ls[end..]);
        let fixed = prefix.len() + suffix.len();
        let mut inserts: Vec<(Vec<Letter>, i64)> = Vec::new();
        for (a, b) in phi_pairs(d) {
            if a + b == d {
                inserts.push((vec![Letter::new(a - 1), Letter::new(b - 1)], n - 1));
            }
        }
        for (a, b) in theta_pairs(d) {
            if a + b == d {
                inserts.push((vec![Letter::new(a - 1), rd_inv, Letter::new(b - 1)], n));
            }
        }
        for (y, total) in inserts {
            if fixed + y.len() > bound {
                continue;
            }
            let budget = (bound - fixed - y.len()) as i64;
            for e in -budget..=budget {
                let f = total - e;
                if e.abs() + f.abs() <= budget {
                    emit(prefix, &mut rd_power(e, d).chain(y.iter().copied()).chain(rd_power(f, d)), suffix);
                }
            }
        }
    }
    out
}

/// All words `ψ ≥ λ` with `|ψ| ≤ bound`. Each generating step strictly
/// lengthens the normal form, so this is finite.
pub fn up_set(lambda: &ObjectWord, d: usize, bound: usize) -> BTreeSet<ObjectWord> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    if lambda.len() <= bound {
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
    }
    while let Some(w) = queue.pop_front() {
        for s in successors(&w, d, bound) {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen
}

/// `λ ≤ μ` in `Λ(d)`.
pub fn leq(lambda: &ObjectWord, mu: &ObjectWord, d: usize) -> bool {
    if lambda == mu {
        return true;
    }
    if weight_ell(lambda, d) != weight_ell(mu, d) || lambda.len() >= mu.len() {
        return false;
    }
    let bound = mu.len();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([lambda.clone()]);
    seen.insert(lambda.clone());
    while let Some(w) = queue.pop_front() {
        for s in successors(&w, d, bound) {
            if &s == mu {
                return true;
            }
            // Words of full length can only equal μ, which was checked.
            if s.len() < bound && seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    false
}

/// The interval `[λ, μ]`, empty unless `λ ≤ μ`, sorted by length and then
/// lexicographically.
pub fn interval(lambda: &ObjectWord, mu: &ObjectWord, d: usize) -> Vec<ObjectWord> {
    if !leq(lambda, mu, d) {
        return Vec::new();
    }
    let mut out: Vec<ObjectWord> =
        up_set(lambda, d, mu.len()).into_iter().filter(|psi| leq(psi, mu, d)).collect();
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Whiskered `φ`-steps `μ → λ`.
    Into,
    /// Whiskered `θ`-steps `λ → μ`.
    OutOf,
}

/// A whiskered generator `left ⊗ g ⊗ right` touching `λ`, and its other end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryMap {
    pub left: ObjectWord,
    pub generator: MorGen,
    pub right: ObjectWord,
    pub other: ObjectWord,
}

/// One-step whiskered generators into or out of `λ`.
///
/// Morphisms of `𝒰` factor uniquely as a `θ`-part followed by a `φ`-part, so
/// any morphism `μ → λ` with `μ < λ` ends with one of these `φ`-steps and any
/// `λ → μ` starts with a `θ`-step. Images (resp. kernels) over all morphisms
/// therefore agree with those over the one-step maps.
pub fn elementary_maps(lambda: &ObjectWord, d: usize, direction: Direction) -> Vec<ElementaryMap> {
    let ls = &lambda.letters;
    let mut out = Vec::new();
    let split = |p: usize, width: usize| {
        (ObjectWord { letters: ls[..p].to_vec() }, ObjectWord { letters: ls[p + width..].to_vec() })
    };
    match direction {
        Direction::Into => {
            for p in 0..ls.len().saturating_sub(1) {
                let (x, y) = (ls[p], ls[p + 1]);
                if x.inverse || y.inverse {
                    continue;
                }
                let (a, b) = (x.gen + 1, y.gen + 1);
                if !phi_pairs(d).contains(&(a, b)) {
                    continue;
                }
                let (left, right) = split(p, 2);
                let other = word(&[&left, &r(a + b), &right]);
                out.push(ElementaryMap { left, generator: phi_gen(a, b), right, other });
            }
        }
        Direction::OutOf => {
            for p in 0..ls.len().saturating_sub(2) {
                let (x, m, y) = (ls[p], ls[p + 1], ls[p + 2]);
                if x.inverse || y.inverse || m != Letter::inv(d - 1) {
                    continue;
                }
                let (a, b) = (x.gen + 1, y.gen + 1);
                if !theta_pairs(d).contains(&(a, b)) {
                    continue;
                }
                let (left, right) = split(p, 3);
                let other = word(&[&left, &r(a + b - d), &right]);
                out.push(ElementaryMap { left, generator: theta_gen(a, b, d), right, other });
            }
        }
    }
    out
}

impl ElementaryMap {
    /// Source and target of the whiskered map.
    pub fn ends(&self) -> (ObjectWord, ObjectWord) {
        (
            ObjectWord::concat3(&self.left, &self.generator.source, &self.right),
            ObjectWord::concat3(&self.left, &self.generator.target, &self.right),
        )
    }
}

/// Short label used in reports, e.g. `"phi_1,1"`.
pub fn tag_label(tag: MorGenTag) -> String {
    match tag {
        MorGenTag::Inclusion { i } => format!("incl_{i}"),
        MorGenTag::Phi { a, b } => format!("phi_{a},{b}"),
        MorGenTag::Theta { a, b } => format!("theta_{a},{b}"),
        MorGenTag::Cup => "cup".to_string(),
        MorGenTag::Cap => "cap".to_string(),
        MorGenTag::PairingToUnit { a } => format!("pair_{a}"),
    }
}
