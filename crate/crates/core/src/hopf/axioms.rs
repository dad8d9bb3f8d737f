use crate::linalg::{Accumulator, Space, Vect};
use crate::scalar::Cyclotomic;
use crate::report::{Axis, CheckResult, Mode, Property};

use super::FiniteHopf;

/// The individual Hopf axioms as properties over basis tuples.
pub fn hopf_axiom_properties(h: &FiniteHopf) -> Vec<Property<'_>> {
    let o = h.order();
    let sp = h.space();
    let t2 = h.tensor_space().clone();
    let t3 = Space::tensor(&t2, sp);
    let line = Space::line();
    let d = h.dim();
    let ax = |n: &str| Axis::basis_of(n, sp, o);
    let idx = |v: &Vect| v.terms()[0].0;
    let pre = h.name().to_string();
    let sc = move |c| Vect::monomial(line.id(), 0, c);
    let line = Space::line();

    let coassoc = {
        let t3id = t3.id();
        move |v: &[&Vect]| {
            let i = idx(v[0]);
            let mut l = Accumulator::new(t3id);
            let mut r = Accumulator::new(t3id);
            for (a, b, c) in h.coproduct_terms(i) {
                for (x, y, e) in h.coproduct_terms(a) {
                    l.push((x * d + y) * d + b, &c * &e);
                }
                for (x, y, e) in h.coproduct_terms(b) {
                    r.push((a * d + x) * d + y, &c * &e);
                }
            }
            (l.finish(), r.finish())
        }
    };
    let counit_l = move |v: &[&Vect]| {
        let mut acc = Accumulator::new(sp.id());
        for (a, b, c) in h.coproduct_terms(idx(v[0])) {
            acc.push(b, &c * &h.counit_values()[a]);
        }
        (acc.finish(), v[0].clone())
    };
    let counit_r = move |v: &[&Vect]| {
        let mut acc = Accumulator::new(sp.id());
        for (a, b, c) in h.coproduct_terms(idx(v[0])) {
            acc.push(a, &c * &h.counit_values()[b]);
        }
        (acc.finish(), v[0].clone())
    };
    let conv = move |left: bool| {
        move |v: &[&Vect]| {
            let mut acc = Accumulator::new(sp.id());
            for (a, b, c) in h.coproduct_terms(idx(v[0])) {
                let x = if left { h.mul(&h.s(&h.basis(a)), &h.basis(b)) } else { h.mul(&h.basis(a), &h.s(&h.basis(b))) };
                acc.add_scaled(&x, &c);
            }
            (acc.finish(), h.scalar(h.counit(v[0])))
        }
    };

    vec![
        Property::new(format!("{pre}.associativity"), vec![ax("x"), ax("y"), ax("z")], sp, |v| {
            (h.mul(&h.mul(v[0], v[1]), v[2]), h.mul(v[0], &h.mul(v[1], v[2])))
        }),
        Property::new(format!("{pre}.unit"), vec![ax("x")], &t2, move |v| {
            (h.tensor(&h.mul(&h.one(), v[0]), &h.mul(v[0], &h.one())), h.tensor(v[0], v[0]))
        }),
        Property::new(format!("{pre}.coassociativity"), vec![ax("x")], &t3, coassoc),
        Property::new(format!("{pre}.counit-left"), vec![ax("x")], sp, counit_l),
        Property::new(format!("{pre}.counit-right"), vec![ax("x")], sp, counit_r),
        Property::new(format!("{pre}.coproduct-multiplicative"), vec![ax("x"), ax("y")], &t2, |v| {
            (h.coproduct(&h.mul(v[0], v[1])), h.tensor_mul(&h.coproduct(v[0]), &h.coproduct(v[1])))
        }),
        Property::new(format!("{pre}.counit-multiplicative"), vec![ax("x"), ax("y")], &line, move |v| {
            (sc(h.counit(&h.mul(v[0], v[1]))), sc(&h.counit(v[0]) * &h.counit(v[1])))
        }),
        Property::new(format!("{pre}.unit-coalgebra"), vec![Axis::from_list("1", vec![("1".into(), h.one())])], &t2, move |v| {
            let e = h.counit(v[0]);
            (h.coproduct(v[0]).add(&h.tensor(&h.one(), &h.one()).scale(&(e - Cyclotomic::one(o)))), h.tensor(&h.one(), &h.one()))
        }),
        Property::new(format!("{pre}.antipode-left"), vec![ax("x")], sp, conv(true)),
        Property::new(format!("{pre}.antipode-right"), vec![ax("x")], sp, conv(false)),
        Property::new(format!("{pre}.antipode-inverse"), vec![ax("x")], &t2, move |v| {
            (h.tensor(&h.s(&h.s_inv(v[0])), &h.s_inv(&h.s(v[0]))), h.tensor(v[0], v[0]))
        }),
    ]
}

/// Verifies all Hopf axioms; the first failing axiom supplies the witness.
pub fn check_hopf_axioms(h: &FiniteHopf, mode: &Mode) -> CheckResult {
    let parts = hopf_axiom_properties(h)
        .iter()
        .map(|p| {
            // Single-input axioms are always cheap enough to run on every basis element.
            let m = if p.arity() == 1 { Mode::Exhaustive } else { *mode };
            p.run(&m)
        })
        .collect();
    CheckResult::all(format!("hopf-axioms.{}", h.name()), parts)
}
