use proptest::prelude::*;

use hopf_core::linalg::{echelonize, quotient_space, span_closure, ClosureMode, Space, SparseLinear, Vect};
use hopf_core::scalar::{euler_phi, Cyclotomic, QContext};
use hopf_core::suite::Fixtures;
use hopf_core::ydcat::braiding;

/// `Σ (a_k / b_k) ζ^k` over the power basis of `Q(ζ_N)`.
fn scalar(order: u32, coeffs: &[(i64, i64)]) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(order);
    for (k, (a, b)) in coeffs.iter().enumerate() {
        let c = &Cyclotomic::from_int(order, *a) * &Cyclotomic::from_int(order, *b).inv().unwrap();
        acc += &(&c * &Cyclotomic::zeta_pow(order, k as i64));
    }
    acc
}

fn scalars(order: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-12i64..=12, 1i64..=6), euler_phi(order)).prop_map(move |c| scalar(order, &c))
}

fn triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop_oneof![Just(8u32), Just(12u32)].prop_flat_map(|n| (scalars(n), scalars(n), scalars(n)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 10_000, ..ProptestConfig::default() })]

    #[test]
    fn field_laws((a, b, c) in triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }
}

#[test]
fn zeta_is_primitive_for_every_session_order() {
    for p in 2..=5 {
        let ctx = QContext::new(p).unwrap();
        let n = ctx.order() as i64;
        for k in 1..n {
            assert!(!ctx.zeta_pow(k).is_one(), "ζ^{k} = 1 in order {n}");
        }
        assert!(ctx.zeta_pow(n).is_one());
    }
}

/// A random element of the Taft algebra at p = 2 with small integer coefficients.
fn taft_vect() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..16, -3i64..=3), 1..4)
}

fn to_vect(fx: &Fixtures, terms: &[(usize, i64)]) -> Vect {
    let b = fx.t.b();
    let o = fx.t.ctx.order();
    terms.iter().fold(Vect::zero(b.space()), |acc, (i, c)| acc.add(&b.basis(*i).scale(&Cyclotomic::from_int(o, *c))))
}

thread_local! {
    static FX2: Fixtures = Fixtures::new(2).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn span_closure_is_a_closure_operator(s1 in prop::collection::vec(taft_vect(), 1..3), extra in taft_vect()) {
        FX2.with(|fx| {
            let a = fx.t.b().algebra();
            let mode = ClosureMode::Subalgebra { unit: a.one() };
            let seed: Vec<Vect> = s1.iter().map(|t| to_vect(fx, t)).collect();
            let c = span_closure(&a.space, &seed, &a.mult, &mode).unwrap();
            for v in &seed {
                assert!(c.contains(v), "not extensive");
            }
            let again = span_closure(&a.space, &c.basis(), &a.mult, &mode).unwrap();
            assert!(again.same_as(&c), "not idempotent");
            let mut bigger = seed.clone();
            bigger.push(to_vect(fx, &extra));
            let c2 = span_closure(&a.space, &bigger, &a.mult, &mode).unwrap();
            assert!(c2.includes(&c), "not monotone");
            let e = echelonize(&a.space, &c.basis()).unwrap();
            assert!(e.same_as(&c), "echelonize not idempotent");
        });
    }

    #[test]
    fn quotients_split_exactly(s in prop::collection::vec(taft_vect(), 1..3)) {
        FX2.with(|fx| {
            let a = fx.t.b().algebra();
            let o = a.order;
            let gens: Vec<Vect> = (0..a.dim()).map(|i| a.basis(i)).collect();
            let seed: Vec<Vect> = s.iter().map(|t| to_vect(fx, t)).collect();
            let ideal = span_closure(&a.space, &seed, &a.mult, &ClosureMode::TwoSidedIdeal { generators: gens }).unwrap();
            let q = quotient_space(&a.space, &ideal, "B/I", o).unwrap();
            assert!(q.projection.compose(&q.section).same_as(&SparseLinear::identity(&q.space, o)));
            for i in 0..a.dim() {
                let e = a.basis(i);
                assert!(ideal.contains(&q.section.apply(&q.projection.apply(&e)).sub(&e)));
            }
        });
    }

    #[test]
    fn braiding_satisfies_the_braid_relation(i in 0usize..16, j in 0usize..16, k in 0usize..16, second in any::<bool>()) {
        FX2.with(|fx| {
            let (x, y) = fx.factors().unwrap();
            let m = if second { y } else { x };
            let c = braiding(m, m).unwrap();
            let n = m.dim();
            let o = m.order();
            let id = SparseLinear::identity(&m.algebra.space, o);
            let left_sp = Space::tensor(c.domain(), &m.algebra.space);
            let right_sp = Space::tensor(&m.algebra.space, c.domain());
            let c12 = SparseLinear::tensor(&c, &id, &left_sp, &left_sp);
            let c23 = SparseLinear::tensor(&id, &c, &right_sp, &right_sp);
            let on_left = |v: Vect| c12.apply(&v.relabel(left_sp.id()));
            let on_right = |v: Vect| c23.apply(&v.relabel(right_sp.id()));
            let v = Vect::basis(&left_sp, (i * n + j) * n + k, o);
            let lhs = on_left(on_right(on_left(v.clone())));
            let rhs = on_right(on_left(on_right(v)));
            assert_eq!(lhs.relabel(left_sp.id()), rhs.relabel(left_sp.id()));
        });
    }
}
