mod common;

use lrcoh::algebra::module::{ModuleElement, PresentedModule};
use lrcoh::algebra::parse::{parse_expr, parse_polynomial, Expr, Params};
use lrcoh::algebra::poly::{Monomial, Polynomial};
use lrcoh::algebra::polymatrix::PolyMatrix;
use lrcoh::algebra::rational::{frac, int};
use lrcoh::algebra::ring::{HypersurfaceRing, WeightSystem, WeightedDegree};
use lrcoh::brieskorn;
use lrcoh::complex::StandardComplex;
use lrcoh::lie::{Connection, Derivation, LieRinehartAlgebra};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::Arc;

fn plane(weights: &[i64]) -> Arc<HypersurfaceRing> {
    Arc::new(
        HypersurfaceRing::polynomial_ring(vec!["x".into(), "y".into()], WeightSystem::new(weights).unwrap()).unwrap(),
    )
}

fn poly_strategy(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        ((-4i64..=4), (1i64..=3), prop::collection::vec(0..=max_exp, nvars)),
        0..=max_terms,
    )
    .prop_map(move |terms| Polynomial::from_terms(nvars, terms.into_iter().map(|(a, b, e)| (frac(a, b), e))))
}

/// A weighted-homogeneous polynomial of degree `d` with small coefficients.
fn homogeneous(ring: &HypersurfaceRing, d: i64, coeffs: &[i64]) -> Polynomial {
    let monos = ring.monomials_of_degree(d);
    Polynomial::from_terms(
        ring.nvars(),
        monos
            .iter()
            .zip(coeffs.iter().cycle())
            .map(|(m, &c)| (int(c), m.exponents().to_vec())),
    )
}

fn derivation(ring: &Arc<HypersurfaceRing>, c: [Polynomial; 2]) -> Derivation {
    Derivation::new(ring.clone(), c.to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent_and_a_ring_map(
        p in poly_strategy(3, 4, 5),
        q in poly_strategy(3, 4, 5),
        mn in (1i64..=4, 1i64..=4),
    ) {
        let a = brieskorn::ring(mn.0, mn.1).unwrap();
        let np = a.nf(&p).unwrap();
        let nq = a.nf(&q).unwrap();
        prop_assert_eq!(a.nf(&np).unwrap(), np.clone());
        prop_assert!(np.terms().all(|(m, _)| m.exponent(2) < 2));
        prop_assert_eq!(a.nf(&(&p + &q)).unwrap(), &np + &nq);
        prop_assert_eq!(a.nf(&(&p * &q)).unwrap(), a.nf(&(&np * &nq)).unwrap());
        // p - nf(p) is a multiple of the relation
        let (_, r) = a.div_rem(&p).unwrap();
        prop_assert_eq!(r, np);
    }

    #[test]
    fn weighted_degree_is_additive(d1 in 0i64..6, d2 in 0i64..6, c1 in prop::collection::vec(1i64..4, 1..4), c2 in prop::collection::vec(1i64..4, 1..4)) {
        let b = plane(&[2, 3]);
        let p = homogeneous(&b, d1, &c1);
        let q = homogeneous(&b, d2, &c2);
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!(b.degree(&p), WeightedDegree::Homogeneous(d1));
        prop_assert_eq!(b.degree(&(&p * &q)), WeightedDegree::Homogeneous(d1 + d2));
    }

    #[test]
    fn derivations_satisfy_leibniz(
        c in prop::array::uniform2(poly_strategy(2, 3, 3)),
        p in poly_strategy(2, 3, 4),
        q in poly_strategy(2, 3, 4),
    ) {
        let b = plane(&[1, 1]);
        let d = derivation(&b, c);
        let lhs = d.apply(&(&p * &q)).unwrap();
        let rhs = &(&d.apply(&p).unwrap() * &q) + &(&p * &d.apply(&q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_a_lie_rinehart_bracket(
        u in prop::array::uniform2(poly_strategy(2, 2, 2)),
        v in prop::array::uniform2(poly_strategy(2, 2, 2)),
        w in prop::array::uniform2(poly_strategy(2, 2, 2)),
        a in poly_strategy(2, 2, 3),
        g in poly_strategy(2, 3, 3),
    ) {
        let b = plane(&[1, 1]);
        let (u, v, w) = (derivation(&b, u), derivation(&b, v), derivation(&b, w));
        let uv = u.bracket(&v).unwrap();
        prop_assert_eq!(uv.scale(&int(-1)), v.bracket(&u).unwrap());
        let j = u.bracket(&v.bracket(&w).unwrap()).unwrap()
            .add(&v.bracket(&w.bracket(&u).unwrap()).unwrap()).unwrap()
            .add(&w.bracket(&u.bracket(&v).unwrap()).unwrap()).unwrap();
        prop_assert!(j.is_zero());
        // [u, a v] = a [u, v] + u(a) v
        let lhs = u.bracket(&v.mul_poly(&a)).unwrap();
        let rhs = uv.mul_poly(&a).add(&v.mul_poly(&u.apply(&a).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
        // the commutator acts as the bracket
        let direct = &u.apply(&v.apply(&g).unwrap()).unwrap() - &v.apply(&u.apply(&g).unwrap()).unwrap();
        prop_assert_eq!(uv.apply(&g).unwrap(), direct);
    }

    #[test]
    fn brieskorn_generators_bracket_inside_the_algebra(mn in (2i64..=4, 2i64..=4), i in 0usize..4, j in 0usize..4) {
        let alg = brieskorn::der_algebra(mn.0, mn.1).unwrap();
        let c = alg.structure_constants(i, j, 64).unwrap();
        let lhs = alg.generator(i).unwrap().bracket(alg.generator(j).unwrap()).unwrap();
        let rhs = alg.combination(&c).unwrap();
        let ring = alg.ring();
        for v in 0..3 {
            prop_assert!(ring.is_zero_in_quotient(&(lhs.coefficient(v) - rhs.coefficient(v))).unwrap());
        }
    }

    #[test]
    fn connections_satisfy_leibniz_and_curvature_is_linear(
        entries in prop::collection::vec(-3i64..=3, 8),
        a in poly_strategy(2, 2, 3),
        w0 in poly_strategy(2, 3, 3),
        w1 in poly_strategy(2, 3, 3),
        cu in prop::collection::vec(-2i64..=2, 4),
        cv in prop::collection::vec(-2i64..=2, 4),
        ca in (0i64..=2, prop::collection::vec(1i64..=3, 1..3)),
    ) {
        let b = plane(&[1, 1]);
        let ring = &*b;
        let l = LieRinehartAlgebra::new(
            b.clone(),
            vec!["dx".into(), "dy".into()],
            vec![Derivation::partial(b.clone(), 0).unwrap(), Derivation::partial(b.clone(), 1).unwrap()],
        ).unwrap();
        // degrees (0, 2): the (0, 1) entries are linear forms, possibly curved
        let lin = |p: i64, q: i64| &b.var(0).scale(&int(p)) + &b.var(1).scale(&int(q));
        let mut ax = PolyMatrix::zeros(2, 2, 2);
        ax.set(0, 1, lin(entries[0], entries[1]));
        let mut ay = PolyMatrix::zeros(2, 2, 2);
        ay.set(0, 1, lin(entries[2], entries[3]));
        let conn = Connection::new(l, PresentedModule::free(b.clone(), vec![0, 2], 0), vec![ax, ay]).unwrap();
        let w = ModuleElement::basis(2, 0, w0).add(&ModuleElement::basis(2, 1, w1));
        for g in 0..2 {
            let lhs = conn.apply(g, &w.mul_poly(ring, &a)).unwrap();
            let da = conn.algebra().generator(g).unwrap().apply(&a).unwrap();
            let rhs = w.mul_poly(ring, &da).add(&conn.apply(g, &w).unwrap().mul_poly(ring, &a));
            prop_assert!(lhs.sub(&rhs).is_zero());
        }
        // the bracket must be expressible, so u, v and the scalar are homogeneous
        let u = [lin(cu[0], cu[1]), lin(cu[2], cu[3])];
        let v = [lin(cv[0], cv[1]), lin(cv[2], cv[3])];
        let h = homogeneous(ring, ca.0, &ca.1);
        let r = |w: &ModuleElement| conn.curvature_apply(&u, &v, w, 16).unwrap();
        prop_assert!(r(&w.mul_poly(ring, &a)).sub(&r(&w).mul_poly(ring, &a)).is_zero());
        // R(h u, v) = h R(u, v)
        let au: Vec<Polynomial> = u.iter().map(|c| c * &h).collect();
        let lhs = conn.curvature_apply(&au, &v, &w, 16).unwrap();
        prop_assert!(lhs.sub(&r(&w).mul_poly(ring, &h)).is_zero());
    }

    #[test]
    fn cohomology_dimensions_ignore_orderings(
        seed in prop::collection::vec(-2i64..=2, 6),
        degs in prop::collection::vec(0i64..=2, 3),
        perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
    ) {
        let b = plane(&[1, 1]);
        let l = LieRinehartAlgebra::new(
            b.clone(),
            vec!["dx".into(), "dy".into()],
            vec![Derivation::partial(b.clone(), 0).unwrap(), Derivation::partial(b.clone(), 1).unwrap()],
        ).unwrap();
        // A_x = 0 and A_y depending on y only is flat
        let mut ay = PolyMatrix::zeros(3, 3, 2);
        let mut s = seed.iter().cycle();
        for i in 0..3 {
            for j in 0..3 {
                let e = degs[j] - degs[i] - 1;
                let c = *s.next().unwrap();
                if e >= 0 && c != 0 {
                    ay.set(i, j, Polynomial::term(int(c), Monomial::from_exponents(vec![0, e as u32])));
                }
            }
        }
        let conn = Connection::new(l, PresentedModule::free(b.clone(), degs.clone(), 0), vec![PolyMatrix::zeros(3, 3, 2), ay]).unwrap();
        let h = StandardComplex::new(&conn, 8).unwrap().cohomology_range(-2, 4).unwrap();
        let pm = conn.permute_module(&perm).unwrap();
        let hm = StandardComplex::new(&pm, 8).unwrap().cohomology_range(-2, 4).unwrap();
        let pa = conn.permute_algebra(&[1, 0]).unwrap();
        let ha = StandardComplex::new(&pa, 8).unwrap().cohomology_range(-2, 4).unwrap();
        for p in 0..=2 {
            prop_assert_eq!(h.row(p), hm.row(p));
            prop_assert_eq!(h.row(p), ha.row(p));
        }
    }

    #[test]
    fn polynomials_print_and_parse_back(p in poly_strategy(3, 4, 5)) {
        let names: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
        let text = p.display(&names);
        prop_assert_eq!(parse_polynomial(&text, &names, &Params::new()).unwrap(), p);
    }

    #[test]
    fn expressions_print_and_parse_back(e in expr_strategy()) {
        let text = e.to_string();
        prop_assert_eq!(parse_expr(&text).unwrap(), e);
    }
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..50).prop_map(|n| Expr::Num(BigInt::from(n))),
        prop::sample::select(vec!["x", "y", "z", "m", "n"]).prop_map(|s| Expr::Ident(s.to_string())),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            (inner, 0u32..4).prop_map(|(a, k)| Expr::Pow(Box::new(a), Box::new(Expr::Num(BigInt::from(k))))),
        ]
    })
}

#[test]
fn oracle_rank_matches_library_rank() {
    use lrcoh::algebra::linalg::Matrix;
    let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 5]];
    let m = Matrix::from_rows(
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(),
        3,
    );
    assert_eq!(common::rank_mod_p(rows), m.rank());
}
