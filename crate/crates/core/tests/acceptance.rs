//! Acceptance gate: one line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tannakit_core::bilform::{comorita_components, hb_presentation, quantum_dimension, BilinearForm};
use tannakit_core::coendc::{compile_coend, uaut, uend_compiled, uend_direct, uend_functor, PresentedBialgebra};
use tannakit_core::comodrep::{weight_fiber, ASContext, TorusWeight};
use tannakit_core::moncat::{interval, lambda_gens, lambda_word, leq, normalize, up_set, weight_ell, Letter, ObjectWord};
use tannakit_core::ncpoly::{
    rewrite_reduce, span_equal, Generator, NCMonomial, NCPoly, PolyMatrix, PresentedAlgebra, RewriteSystem,
};
use tannakit_core::quadalg::corpus::{jordan_plane, monomial_xy, polynomial_ring, quantum_plane};
use tannakit_core::quadalg::QuadraticAlgebra;
use tannakit_core::{Field, MatrixExact};

const Q: Field = Field::Rational;
const NMAX: usize = 6;
const MAX_PASSES: usize = 10_000;

/// `dim uend(k[x,y])_3`, from the dense rank oracle below.
const UEND_KXY_DIM3: usize = 40;

/// Normalized words of weight `d` (torus exponents (0,1)) with at most five
/// letters, from exhaustive enumeration.
const FIBER_D_MAXLEN5: &[&str] =
    &["r1", "r2 r1 r2^-1", "r2 r2 r1 r2^-1 r2^-1", "r2^-1 r1 r2", "r2^-1 r2^-1 r1 r2 r2"];

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn corpus() -> Vec<(&'static str, QuadraticAlgebra, usize)> {
    vec![
        ("k[x,y]", polynomial_ring(Q, 2), 2),
        ("quantum plane q=2", quantum_plane(Q, &Q.from_i64(2)), 2),
        ("Jordan plane", jordan_plane(Q), 2),
        ("k[x,y,z]", polynomial_ring(Q, 3), 3),
    ]
}

fn rel(names: &[String], text: &str) -> NCPoly {
    NCPoly::parse_text(Q, names, text).expect("well-formed relation")
}

/// `A` as a presented algebra on `dim V` generators, one relation per basis
/// vector of `R`.
fn presented(a: &QuadraticAlgebra) -> PresentedAlgebra {
    let n = a.dim_v();
    let r = a.relations();
    let relations = (0..r.dim())
        .map(|s| {
            let v = r.basis_vector(s);
            NCPoly::from_terms(
                Q,
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (NCMonomial(vec![(i / n) as u32, (i % n) as u32]), c.clone())),
            )
        })
        .collect();
    let generators = (0..n).map(|i| Generator { name: format!("x{i}"), weight: 1 }).collect();
    PresentedAlgebra::new(Q, generators, relations).expect("homogeneous")
}

/// Dense rank of a list of vectors.
fn rank(vectors: &[Vec<tannakit_core::Scalar>], ambient: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    MatrixExact::from_rows(Q, ambient, vectors.to_vec()).expect("consistent lengths").rank()
}

/// `e_{w}` for a word of basis indices in `V^{⊗k}`.
fn basis_index(word: &[usize], n: usize) -> usize {
    word.iter().fold(0, |acc, &i| acc * n + i)
}

/// The commutator `xy − yx` inside `V^{⊗2}`, written out by hand.
fn commutator_kxy() -> Vec<tannakit_core::Scalar> {
    vec![Q.zero(), Q.one(), Q.from_i64(-1), Q.zero()]
}

/// `dim V^{⊗i} / Σ V^a R V^b` for `k[x,y]`.
fn nabla_r1_power_oracle(i: usize) -> usize {
    let total = 2usize.pow(i as u32);
    if i < 2 {
        return total;
    }
    let r = commutator_kxy();
    let mut vectors = Vec::new();
    for a in 0..=i - 2 {
        let b = i - 2 - a;
        for left in 0..2usize.pow(a as u32) {
            for right in 0..2usize.pow(b as u32) {
                let mut v = vec![Q.zero(); total];
                for (k, c) in r.iter().enumerate() {
                    let idx = (left * 4 + k) * 2usize.pow(b as u32) + right;
                    v[idx] = c.clone();
                }
                vectors.push(v);
            }
        }
    }
    total - rank(&vectors, total)
}

fn criterion_1() -> Check {
    let b = uaut(&polynomial_ring(Q, 2), NMAX, MAX_PASSES).map_err(|e| e.to_string())?;
    let names = b.names();
    ensure(names == ["a", "b", "c", "d", "delta", "delta^-1"], format!("generators {names:?}"))?;
    let expected: Vec<NCPoly> = [
        "+1 a c -1 c a",
        "+1 b d -1 d b",
        "+1 a d -1 c b -1 delta",
        "+1 d a -1 b c -1 delta",
        "+1 delta delta^-1 -1",
        "+1 delta^-1 delta -1",
        "+1 a delta^-1 d -1 b delta^-1 c -1",
        "+1 d delta^-1 a -1 c delta^-1 b -1",
        "+1 b delta^-1 a -1 a delta^-1 b",
        "+1 c delta^-1 d -1 d delta^-1 c",
    ]
    .iter()
    .map(|t| rel(&names, t))
    .collect();
    ensure(span_equal(&b.algebra.relations, &expected, names.len(), 3), "relation spans differ at length 3")
}

fn criterion_2() -> Check {
    for (label, a, _) in corpus() {
        let compiled = uend_compiled(&a).map_err(|e| e.to_string())?;
        let direct = uend_direct(&a);
        let n = direct.num_generators();
        ensure(compiled.algebra.num_generators() == n, format!("{label}: generator count"))?;
        ensure(
            span_equal(&compiled.algebra.relations, &direct.relations, n, 3),
            format!("{label}: compiled and direct spans differ"),
        )?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    for (label, a, _) in corpus() {
        let dd = a.koszul_dual().koszul_dual();
        ensure(dd.relations().basis() == a.relations().basis(), format!("{label}: (A^!)^! has a different RREF"))?;
        let spaces = a.relation_spaces(5).map_err(|e| e.to_string())?;
        let dual = presented(&a.koszul_dual());
        for l in 1..=5 {
            let lhs = spaces[l - 1].dim();
            let rhs = dual.graded_dim(l).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, format!("{label}: dim R_{l} = {lhs}, dim A^!_{l} = {rhs}"))?;
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    for (label, a, d) in corpus() {
        let report = a.as_regular_check(NMAX).map_err(|e| e.to_string())?;
        ensure(report.as_regular, format!("{label}: not AS-regular"))?;
        ensure(report.global_dimension == d, format!("{label}: d = {}", report.global_dimension))?;
        ensure(report.relation_dims[d - 1] == 1, format!("{label}: dim R_d != 1"))?;
    }
    let m = monomial_xy(Q);
    let report = m.as_regular_check(NMAX).map_err(|e| e.to_string())?;
    ensure(!report.as_regular, "TV/(x⊗y) reported AS-regular")?;
    let singular = MatrixExact::from_i64(Q, &[&[0, 1], &[0, 0]]);
    ensure(report.pairings.first() == Some(&singular), format!("pairing {:?}", report.pairings.first()))
}

fn criterion_5() -> Check {
    let mut seen_d = BTreeSet::new();
    for (label, a, d) in corpus() {
        let ctx = ASContext::new(&a, NMAX).map_err(|e| e.to_string())?;
        let checks = ctx.check_relations().map_err(|e| e.to_string())?;
        ensure(!checks.is_empty(), format!("{label}: no relations checked"))?;
        if let Some(bad) = checks.iter().find(|c| !c.holds) {
            return Err(format!("{label}: {} fails", bad.name));
        }
        for a in 1..d {
            ensure(ctx.theta(a, d).map_err(|e| e.to_string())? == MatrixExact::identity(Q, ctx.dim_r(a)), "θ_{a,d} != id")?;
            ensure(ctx.phi(a, 0).map_err(|e| e.to_string())? == MatrixExact::identity(Q, ctx.dim_r(a)), "φ_{a,0} != id")?;
        }
        seen_d.insert(d);
    }
    ensure(seen_d == BTreeSet::from([2, 3]), "both d = 2 and d = 3 covered")
}

fn criterion_6() -> Check {
    let ctx = ASContext::new(&polynomial_ring(Q, 2), NMAX).map_err(|e| e.to_string())?;
    let w = |t: &str| lambda_word(t, 2).map_err(|e| e.to_string());
    for i in 1..=4 {
        let word = w(&vec!["r1"; i].join(" "))?;
        let (nabla, _) = ctx.nabla_delta(&word).map_err(|e| e.to_string())?;
        let oracle = nabla_r1_power_oracle(i);
        ensure(oracle == i + 1, format!("oracle ∇(r1^{i}) = {oracle}"))?;
        ensure(nabla.dim == oracle, format!("∇(r1^{i}) = {}, oracle {oracle}", nabla.dim))?;
    }

    // r1 r1: nothing leaves it downwards, and the quotient is by span(xy − yx).
    let r1r1 = w("r1 r1")?;
    let (_, delta) = ctx.nabla_delta(&r1r1).map_err(|e| e.to_string())?;
    ensure(delta.dim == 4, format!("Δ(r1 r1) = {}", delta.dim))?;
    let full: Vec<_> = (0..4).map(|k| (0..4).map(|j| if j == k { Q.one() } else { Q.zero() }).collect()).collect();
    let mut with_r = full.clone();
    with_r.push(commutator_kxy());
    let simple_oracle = rank(&with_r, 4) - rank(&[commutator_kxy()], 4);
    let simple = ctx.simple_dim(&r1r1).map_err(|e| e.to_string())?;
    ensure(simple == simple_oracle && simple == 3, format!("L(r1 r1) = {simple}, oracle {simple_oracle}"))?;

    let (nabla_r2, _) = ctx.nabla_delta(&w("r2")?).map_err(|e| e.to_string())?;
    ensure(nabla_r2.dim == 1, format!("∇(r2) = {}", nabla_r2.dim))?;

    // r1 r2^-1 r1 only maps down to the unit, through a nonzero functional.
    let (_, d3) = ctx.nabla_delta(&w("r1 r2^-1 r1")?).map_err(|e| e.to_string())?;
    let oracle = 4 - rank(&[commutator_kxy()], 4);
    ensure(d3.dim == oracle && oracle == 3, format!("Δ(r1 r2^-1 r1) = {}, oracle {oracle}", d3.dim))
}

fn check_antipode(b: &PresentedBialgebra, table: &[Option<NCPoly>], n: usize) -> Check {
    let rules = RewriteSystem::from_relations(&b.algebra.relations);
    let z = PolyMatrix::generic(Q, n, n, 0);
    let s = z.map(|p| p.substitute(|g| table[g as usize].clone()));
    let id = PolyMatrix::from_scalars(&MatrixExact::identity(Q, n));
    for prod in [z.mul(&s), s.mul(&z)] {
        let diff = prod.map_err(|e| e.to_string())?.sub(&id).map_err(|e| e.to_string())?;
        for entry in diff.entries() {
            let red = rewrite_reduce(entry, &rules, MAX_PASSES);
            ensure(
                red.certifies_zero(),
                format!("{} reduces to {}", entry.pretty(&b.names()), red.result.pretty(&b.names())),
            )?;
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    let bq = BilinearForm::q_form(Q, &Q.from_i64(3)).map_err(|e| e.to_string())?;
    let h = hb_presentation(&bq, MAX_PASSES).map_err(|e| e.to_string())?;
    let b = PolyMatrix::from_scalars(bq.matrix());
    let binv = PolyMatrix::from_scalars(&bq.inverse());
    let z = PolyMatrix::generic(Q, 2, 2, 0);
    let id = PolyMatrix::from_scalars(&MatrixExact::identity(Q, 2));
    let m = |x: PolyMatrix, y: &PolyMatrix| x.mul(y).expect("2x2");
    let first = m(m(m(binv.clone(), &z.transpose()), &b), &z).sub(&id).expect("2x2");
    let second = m(m(m(z.clone(), &binv), &z.transpose()), &b).sub(&id).expect("2x2");
    let expected: Vec<NCPoly> = first.entries().iter().chain(second.entries()).cloned().collect();
    ensure(span_equal(&h.algebra.relations, &expected, 4, 3), "H(B_q) span differs from the matrix relations")?;

    let q = quantum_dimension(&bq).value;
    ensure(&q * &q == Q.parse_scalar("100/9").expect("rational"), format!("q(b) = {q}"))?;

    let stated = m(m(binv, &z.transpose()), &b);
    let table: Vec<Option<NCPoly>> = stated.entries().iter().cloned().map(Some).collect();
    check_antipode(&h, &table, 2)?;
    let derived = h.antipode.as_ref().ok_or("no antipode derived")?;
    ensure(derived == &table, "derived antipode differs from B⁻¹ZᵀB")
}

fn criterion_8() -> Check {
    let b = uaut(&polynomial_ring(Q, 2), NMAX, MAX_PASSES).map_err(|e| e.to_string())?;
    let table = b.antipode.clone().ok_or("no antipode")?;
    check_antipode(&b, &table, 2)
}

fn random_word(rng: &mut StdRng, d: usize) -> ObjectWord {
    let len = rng.gen_range(0..=4);
    let letters: Vec<Letter> = (0..len)
        .map(|_| {
            let k = rng.gen_range(0..=d);
            if k == d {
                Letter::inv(d - 1)
            } else {
                Letter::new(k)
            }
        })
        .collect();
    normalize(&letters, &lambda_gens(d)).expect("valid letters")
}

fn criterion_9() -> Check {
    let r2 = lambda_word("r2", 2).map_err(|e| e.to_string())?;
    let r1r1 = lambda_word("r1 r1", 2).map_err(|e| e.to_string())?;
    ensure(interval(&r2, &r1r1, 2) == vec![r2.clone(), r1r1.clone()], "interval [r2, r1 r1]")?;

    let mut rng = StdRng::seed_from_u64(0x7a11);
    let mut comparable = Vec::new();
    for _ in 0..500 {
        let d = rng.gen_range(2..=3);
        let (x, y) = (random_word(&mut rng, d), random_word(&mut rng, d));
        ensure(leq(&x, &x, d), format!("{x} ≤ {x} fails"))?;
        let (xy, yx) = (leq(&x, &y, d), leq(&y, &x, d));
        ensure(!(xy && yx) || x == y, format!("antisymmetry fails for {x}, {y}"))?;
        if xy {
            comparable.push((x.clone(), y.clone(), d));
        }
        if yx {
            comparable.push((y.clone(), x.clone(), d));
        }

        // A chain x ≤ m ≤ t drawn from up-sets, so transitivity is exercised.
        let ups: Vec<ObjectWord> = up_set(&x, d, 4).into_iter().collect();
        let m = ups[rng.gen_range(0..ups.len())].clone();
        let ups_m: Vec<ObjectWord> = up_set(&m, d, 4).into_iter().collect();
        let t = ups_m[rng.gen_range(0..ups_m.len())].clone();
        ensure(leq(&x, &m, d) && leq(&m, &t, d), format!("up-set member not above: {x}, {m}, {t}"))?;
        ensure(leq(&x, &t, d), format!("transitivity fails for {x} ≤ {m} ≤ {t}"))?;
        comparable.extend([(x.clone(), m.clone(), d), (m, t.clone(), d), (x, t, d)]);
    }
    for (x, y, d) in &comparable {
        ensure(weight_ell(x, *d) == weight_ell(y, *d), format!("ℓ({x}) != ℓ({y})"))?;
    }
    Ok(())
}

fn criterion_10() -> Check {
    let u = uend_direct(&polynomial_ring(Q, 2));
    // Degree 3 of T(V*⊗V)/(rels): 24 shifted relations in a 64-dim space.
    let mut shifted = Vec::new();
    for r in &u.relations {
        for g in 0..4u32 {
            for (left, right) in [(vec![g], vec![]), (vec![], vec![g])] {
                let mut v = vec![Q.zero(); 64];
                for (mono, c) in r.terms() {
                    let word: Vec<usize> =
                        left.iter().chain(&mono.0).chain(&right).map(|&x| x as usize).collect();
                    v[basis_index(&word, 4)] = c.clone();
                }
                shifted.push(v);
            }
        }
    }
    ensure(shifted.len() == 24, format!("{} shifted relations", shifted.len()))?;
    let oracle = 64 - rank(&shifted, 64);
    ensure(oracle == UEND_KXY_DIM3, format!("oracle dim_3 = {oracle}, frozen {UEND_KXY_DIM3}"))?;
    let dims: Vec<usize> = (0..=3).map(|n| u.graded_dim(n)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(dims == [1, 4, 13, UEND_KXY_DIM3], format!("graded dims {dims:?}"))?;
    let binom3 = |n: usize| (n + 3) * (n + 2) * (n + 1) / 6;
    for n in 2..=3 {
        ensure(dims[n] > binom3(n), format!("dim_{n} = {} not above {}", dims[n], binom3(n)))?;
    }
    Ok(())
}

/// All reduced words over `{r1, r2, r2^-1}` with at most `maxlen` letters and
/// torus weight `t`, rendered.
fn fiber_oracle(t: (i64, i64), maxlen: usize) -> BTreeSet<String> {
    // 0 = r1, 1 = r2, 2 = r2^-1
    let mut out = BTreeSet::new();
    let mut stack: Vec<Vec<u8>> = vec![Vec::new()];
    while let Some(w) = stack.pop() {
        let weight = w.iter().fold((0i64, 0i64), |(p, q), &x| match x {
            0 => (p, q + 1),
            1 => (p + 1, q + 1),
            _ => (p - 1, q - 1),
        });
        if weight == t {
            let text: Vec<&str> = w.iter().map(|&x| ["r1", "r2", "r2^-1"][x as usize]).collect();
            out.insert(text.join(" "));
        }
        if w.len() < maxlen {
            for x in 0..3u8 {
                let cancels = matches!((w.last(), x), (Some(1), 2) | (Some(2), 1));
                if !cancels {
                    let mut next = w.clone();
                    next.push(x);
                    stack.push(next);
                }
            }
        }
    }
    out
}

fn criterion_11() -> Check {
    let t = TorusWeight::new(0, 1);
    let gens = lambda_gens(2);
    let fiber = weight_fiber(t, 5);
    let rendered: BTreeSet<String> = fiber.iter().map(|w| w.render(&gens)).collect();
    let oracle = fiber_oracle((0, 1), 5);
    ensure(rendered == oracle, format!("fiber {rendered:?}, oracle {oracle:?}"))?;
    let golden: BTreeSet<String> = FIBER_D_MAXLEN5.iter().map(|s| s.to_string()).collect();
    ensure(oracle == golden, format!("oracle fiber {oracle:?} differs from the frozen list"))?;
    for w in ["r1", "r2 r1 r2^-1", "r2^-1 r1 r2"] {
        ensure(golden.contains(w), format!("{w} missing"))?;
    }

    let ctx = ASContext::new(&polynomial_ring(Q, 2), NMAX).map_err(|e| e.to_string())?;
    let mut sum = 0;
    for w in &fiber {
        let (nabla, _) = ctx.nabla_delta(w).map_err(|e| e.to_string())?;
        sum += nabla.dim;
    }
    let induced = ctx.induced_dim(t, 5).map_err(|e| e.to_string())?;
    ensure(induced == sum, format!("induced {induced}, oracle sum {sum}"))
}

fn counit_and_grading(label: &str, b: &PresentedBialgebra) -> Check {
    let weights: Vec<i64> = b.algebra.generators.iter().map(|g| g.weight).collect();
    for r in &b.algebra.relations {
        let names = b.names();
        ensure(b.counit_poly(r).is_zero(), format!("{label}: ε({}) != 0", r.pretty(&names)))?;
        ensure(r.homogeneous_weight(&weights).is_some(), format!("{label}: {} is not ℓ-homogeneous", r.pretty(&names)))?;
    }
    Ok(())
}

fn criterion_12() -> Check {
    for (label, a, _) in corpus() {
        let (cat, f) = uend_functor(&a).map_err(|e| e.to_string())?;
        counit_and_grading(label, &compile_coend(&cat, &f).map_err(|e| e.to_string())?)?;
        counit_and_grading(label, &uaut(&a, NMAX, MAX_PASSES).map_err(|e| e.to_string())?)?;
    }
    for bf in [
        BilinearForm::q_form(Q, &Q.from_i64(3)).map_err(|e| e.to_string())?,
        BilinearForm::new(MatrixExact::identity(Q, 2)).map_err(|e| e.to_string())?,
    ] {
        counit_and_grading("H(b)", &hb_presentation(&bf, MAX_PASSES).map_err(|e| e.to_string())?)?;
    }
    let classes = comorita_components(&[
        BilinearForm::new(MatrixExact::identity(Q, 2)).map_err(|e| e.to_string())?,
        BilinearForm::new(MatrixExact::identity(Q, 3)).map_err(|e| e.to_string())?,
    ]);
    ensure(classes.len() == 2, "I_2 and I_3 share a class")
}

fn main() -> ExitCode {
    let criteria: [(&str, Option<Duration>, fn() -> Check); 12] = [
        ("uaut(k[x,y]) presentation, ten relations", Some(Duration::from_secs(1)), criterion_1),
        ("uend compiled vs direct, corpus", Some(Duration::from_secs(5)), criterion_2),
        ("Koszul duality involution and dims", None, criterion_3),
        ("AS-regularity of corpus, TV/(x⊗y) rejected", None, criterion_4),
        ("structure-map relations, d = 2, 3", Some(Duration::from_secs(10)), criterion_5),
        ("comodule dims for k[x,y]", None, criterion_6),
        ("H(B_q): relations, q(b)², antipode", Some(Duration::from_secs(2)), criterion_7),
        ("uaut(k[x,y]) antipode identities", None, criterion_8),
        ("poset interval and order axioms", Some(Duration::from_secs(10)), criterion_9),
        ("uend(k[x,y]) Hilbert regression", None, criterion_10),
        ("weight fiber of d, maxlen 5", None, criterion_11),
        ("counit and grading of compiled relations", None, criterion_12),
    ];
    let mut failures = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, limit) {
            if elapsed > *limit {
                outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("[PASS] {:>2} {name} ({elapsed:.2?})", k + 1),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {:>2} {name} ({elapsed:.2?}): {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
