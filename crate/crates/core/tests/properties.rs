use proptest::prelude::*;

use tannakit_core::bilform::{hb_presentation, quantum_dimension, BilinearForm};
use tannakit_core::coendc::{compile_coend, uend_compiled, uend_direct, uend_functor};
use tannakit_core::exactlin::{intersect_many, intersect_many_by_annihilators};
use tannakit_core::moncat::{
    elementary_maps, lambda_gens, leq, normalize, weight_ell, Direction, Letter, ObjectWord,
};
use tannakit_core::ncpoly::{rewrite_reduce, span_equal, two_sided_span, NCMonomial, NCPoly, RewriteSystem};
use tannakit_core::quadalg::QuadraticAlgebra;
use tannakit_core::{Field, MatrixExact, Scalar, Subspace};

const Q: Field = Field::Rational;

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn vectors(n: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(small(), n), 0..=count)
        .prop_map(|vs| vs.into_iter().map(|v| v.into_iter().map(|x| Q.from_i64(x)).collect()).collect())
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    vectors(n, n).prop_map(move |vs| Subspace::from_vectors(Q, n, vs).unwrap())
}

fn invertible(n: usize) -> impl Strategy<Value = MatrixExact> {
    prop::collection::vec(small(), n * n)
        .prop_map(move |xs| {
            let rows: Vec<Vec<Scalar>> = xs.chunks(n).map(|r| r.iter().map(|&x| Q.from_i64(x)).collect()).collect();
            MatrixExact::from_rows(Q, n, rows).unwrap()
        })
        .prop_filter("invertible", |m| m.is_invertible())
}

fn lambda_letters(d: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(0..=d, 0..=4)
        .prop_map(move |ks| ks.into_iter().map(|k| if k == d { Letter::inv(d - 1) } else { Letter::new(k) }).collect())
}

fn word(d: usize) -> impl Strategy<Value = ObjectWord> {
    lambda_letters(d).prop_map(move |ls| normalize(&ls, &lambda_gens(d)).unwrap())
}

fn poly(num_gens: u32) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((prop::collection::vec(0..num_gens, 0..=2), small()), 0..=4).prop_map(|terms| {
        NCPoly::from_terms(Q, terms.into_iter().map(|(m, c)| (NCMonomial(m), Q.from_i64(c))))
    })
}

fn quadratic(n: usize) -> impl Strategy<Value = QuadraticAlgebra> {
    vectors(n * n, 3).prop_map(move |vs| QuadraticAlgebra::from_relation_vectors(Q, n, vs).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn intersections_agree(subs in prop::collection::vec(subspace(4), 1..=3)) {
        let a = intersect_many(&subs).unwrap();
        let b = intersect_many_by_annihilators(&subs).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn annihilator_is_an_involution(s in subspace(5)) {
        let back = s.annihilator().annihilator();
        prop_assert_eq!(back.basis(), s.basis());
        prop_assert_eq!(s.dim() + s.annihilator().dim(), 5);
    }

    #[test]
    fn normalize_is_idempotent(d in 2usize..=3, ls in lambda_letters(3)) {
        let ls: Vec<Letter> = ls.into_iter().filter(|l| l.gen < d).map(|l| if l.inverse { Letter::inv(d - 1) } else { l }).collect();
        let gens = lambda_gens(d);
        let w = normalize(&ls, &gens).unwrap();
        prop_assert_eq!(normalize(w.letters(), &gens).unwrap(), w);
    }

    #[test]
    fn leq_is_reflexive_and_preserves_ell(lambda in word(3), mu in word(3)) {
        prop_assert!(leq(&lambda, &lambda, 3));
        if leq(&lambda, &mu, 3) {
            prop_assert_eq!(weight_ell(&lambda, 3), weight_ell(&mu, 3));
        }
    }

    #[test]
    fn elementary_maps_go_down(lambda in word(3)) {
        for dir in [Direction::Into, Direction::OutOf] {
            for m in elementary_maps(&lambda, 3, dir) {
                let (src, tgt) = m.ends();
                let (here, there) = match dir { Direction::Into => (tgt, src), Direction::OutOf => (src, tgt) };
                prop_assert_eq!(&here, &lambda);
                prop_assert_eq!(&there, &m.other);
                prop_assert!(leq(&m.other, &lambda, 3) && m.other != lambda);
            }
        }
    }

    #[test]
    fn span_equal_is_reflexive_and_symmetric(a in prop::collection::vec(poly(2), 0..=3), b in prop::collection::vec(poly(2), 0..=3)) {
        prop_assert!(span_equal(&a, &a, 2, 3));
        prop_assert_eq!(span_equal(&a, &b, 2, 3), span_equal(&b, &a, 2, 3));
    }

    #[test]
    fn spans_grow_with_relations(a in prop::collection::vec(poly(2), 0..=3), extra in poly(2)) {
        let small = two_sided_span(Q, &a, 2, 3);
        let mut more = a.clone();
        more.push(extra);
        let big = two_sided_span(Q, &more, 2, 3);
        prop_assert!(small.dim() <= big.dim());
        for r in small.rows() {
            prop_assert!(big.contains(r));
        }
    }

    #[test]
    fn rewriting_stays_in_the_coset(rels in prop::collection::vec(poly(2), 1..=2), p in poly(2)) {
        let sys = RewriteSystem::from_relations(&rels);
        let red = rewrite_reduce(&p, &sys, 200);
        let span = two_sided_span(Q, &rels, 2, 4);
        if p.degree() <= 4 && red.result.degree() <= 4 {
            prop_assert!(span.contains(&p.sub(&red.result)));
        }
    }

    #[test]
    fn quantum_dimension_is_a_congruence_invariant(b in invertible(2), g in invertible(2)) {
        let bf = BilinearForm::new(b).unwrap();
        let q = quantum_dimension(&bf).value;
        prop_assert_eq!(&quantum_dimension(&bf.congruent(&g).unwrap()).value, &q);
        prop_assert_eq!(&quantum_dimension(&bf.transpose()).value, &q);
    }

    #[test]
    fn counit_kills_hb_relations(b in invertible(2)) {
        let bf = BilinearForm::new(b).unwrap();
        let h = hb_presentation(&bf, 10_000).unwrap();
        for r in &h.algebra.relations {
            prop_assert!(h.counit_poly(r).is_zero());
        }
    }

    #[test]
    fn counit_kills_uend_relations(a in quadratic(2)) {
        let (cat, f) = uend_functor(&a).unwrap();
        let b = compile_coend(&cat, &f).unwrap();
        for r in &b.algebra.relations {
            prop_assert!(b.counit_poly(r).is_zero());
        }
        let e = uend_compiled(&a).unwrap();
        prop_assert!(span_equal(&e.algebra.relations, &uend_direct(&a).relations, 4, 2));
    }

    #[test]
    fn koszul_dual_is_an_involution(a in quadratic(2)) {
        let back = a.koszul_dual().koszul_dual();
        prop_assert_eq!(back.relations().basis(), a.relations().basis());
    }
}
