//! Left–left Yetter–Drinfeld module algebras over a finite Hopf algebra.
//!
//! Generator mode for the module and module-algebra laws rests on induction: if
//! `(MN)▷x = M▷(N▷x)` holds for generators `M`, all `N` and all `x`, it holds for every word
//! in the generators; `M▷(AC) = (M′▷A)(M″▷C)` likewise propagates from generators because
//! `Δ` is multiplicative and the action is already known to be a module structure. The same
//! argument covers the Yetter–Drinfeld condition. Every generator-mode run also draws a seeded
//! sample over full basis tuples as a guard, since the induction presupposes the earlier laws.

mod braiding;
mod product;

use crate::error::{Error, Result};
use crate::hopf::{Algebra, FiniteHopf};
use crate::linalg::{outer, split, Accumulator, Space, SpaceRef, SparseBilinear, SparseLinear, Vect};
use crate::report::{Axis, CheckResult, Mode, Property};
use crate::scalar::Cyclotomic;

pub use braiding::{
    braid_relation, braiding, braiding_inverse, check_braided_symmetric, check_braiding_inverse, check_locked_identity,
};
pub use product::{braided_product, chain_product, flip_isomorphism, BraidedProductAlgebra};

/// An algebra `X` with an `H`-action `H × X → X`.
#[derive(Clone, Debug)]
pub struct ModuleAlgebra {
    pub hopf: FiniteHopf,
    pub algebra: Algebra,
    pub action: SparseBilinear,
}

/// An algebra `X` with an `H`-coaction `X → H ⊗ X`, `δ(u) = u₍₋₁₎ ⊗ u₍₀₎`.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    pub hopf: FiniteHopf,
    pub algebra: Algebra,
    pub coaction: SparseLinear,
}

/// Action and coaction on the same algebra, a candidate Yetter–Drinfeld module algebra.
#[derive(Clone, Debug)]
pub struct YDModuleAlgebra {
    pub name: String,
    pub hopf: FiniteHopf,
    pub algebra: Algebra,
    pub action: SparseBilinear,
    pub coaction: SparseLinear,
}

fn check_action_shape(hopf: &FiniteHopf, algebra: &Algebra, action: &SparseBilinear) -> Result<()> {
    if action.left().id() != hopf.space().id() || action.right().id() != algebra.space.id() || action.codomain().id() != algebra.space.id() {
        return Err(Error::Structural(format!("action must map {} × {0} → {0}", algebra.space.name())));
    }
    Ok(())
}

fn check_coaction_shape(hopf: &FiniteHopf, algebra: &Algebra, coaction: &SparseLinear) -> Result<()> {
    let t = Space::tensor(hopf.space(), &algebra.space);
    if coaction.domain().id() != algebra.space.id() || coaction.codomain().id() != t.id() {
        return Err(Error::Structural(format!("coaction must map {} → {}", algebra.space.name(), t.name())));
    }
    Ok(())
}

impl ModuleAlgebra {
    pub fn new(hopf: FiniteHopf, algebra: Algebra, action: SparseBilinear) -> Result<Self> {
        check_action_shape(&hopf, &algebra, &action)?;
        Ok(ModuleAlgebra { hopf, algebra, action })
    }

    /// `h ▷ x = ε(h) x`.
    pub fn trivial(hopf: &FiniteHopf, algebra: &Algebra) -> Self {
        ModuleAlgebra { hopf: hopf.clone(), algebra: algebra.clone(), action: trivial_action(hopf, algebra) }
    }

    pub fn act(&self, h: &Vect, x: &Vect) -> Vect {
        self.action.apply(h, x)
    }
}

impl ComoduleAlgebra {
    pub fn new(hopf: FiniteHopf, algebra: Algebra, coaction: SparseLinear) -> Result<Self> {
        check_coaction_shape(&hopf, &algebra, &coaction)?;
        Ok(ComoduleAlgebra { hopf, algebra, coaction })
    }

    /// `x ↦ 1 ⊗ x`.
    pub fn trivial(hopf: &FiniteHopf, algebra: &Algebra) -> Self {
        ComoduleAlgebra { hopf: hopf.clone(), algebra: algebra.clone(), coaction: trivial_coaction(hopf, algebra) }
    }

    pub fn coact(&self, x: &Vect) -> Vect {
        self.coaction.apply(x)
    }
}

fn trivial_action(hopf: &FiniteHopf, algebra: &Algebra) -> SparseBilinear {
    let (h, x) = (hopf.clone(), algebra.space.clone());
    let o = algebra.order;
    SparseBilinear::from_rule(hopf.space(), &algebra.space, &algebra.space, move |i, j| {
        Vect::basis(&x, j, o).scale(&h.counit_values()[i])
    })
    .materialize()
}

fn trivial_coaction(hopf: &FiniteHopf, algebra: &Algebra) -> SparseLinear {
    let t = Space::tensor(hopf.space(), &algebra.space);
    let one = hopf.one();
    let n = algebra.dim();
    let images = (0..n).map(|j| outer(&one, &algebra.basis(j), t.id(), n)).collect();
    SparseLinear::from_table(&algebra.space, &t, images).expect("shapes match")
}

impl YDModuleAlgebra {
    pub fn new(name: impl Into<String>, hopf: FiniteHopf, algebra: Algebra, action: SparseBilinear, coaction: SparseLinear) -> Result<Self> {
        check_action_shape(&hopf, &algebra, &action)?;
        check_coaction_shape(&hopf, &algebra, &coaction)?;
        Ok(YDModuleAlgebra { name: name.into(), hopf, algebra, action, coaction })
    }

    pub fn from_parts(name: impl Into<String>, m: ModuleAlgebra, c: ComoduleAlgebra) -> Result<Self> {
        if !m.algebra.same_structure(&c.algebra) || m.hopf.space().id() != c.hopf.space().id() {
            return Err(Error::Structural("module and comodule parts differ".into()));
        }
        Self::new(name, m.hopf, m.algebra, m.action, c.coaction)
    }

    /// Trivial action and trivial coaction.
    pub fn trivial(name: impl Into<String>, hopf: &FiniteHopf, algebra: &Algebra) -> Self {
        YDModuleAlgebra {
            name: name.into(),
            hopf: hopf.clone(),
            algebra: algebra.clone(),
            action: trivial_action(hopf, algebra),
            coaction: trivial_coaction(hopf, algebra),
        }
    }

    pub fn module(&self) -> ModuleAlgebra {
        ModuleAlgebra { hopf: self.hopf.clone(), algebra: self.algebra.clone(), action: self.action.clone() }
    }

    pub fn comodule(&self) -> ComoduleAlgebra {
        ComoduleAlgebra { hopf: self.hopf.clone(), algebra: self.algebra.clone(), coaction: self.coaction.clone() }
    }

    pub fn with_action(&self, action: SparseBilinear) -> Self {
        YDModuleAlgebra { action, ..self.clone() }
    }

    pub fn with_coaction(&self, coaction: SparseLinear) -> Self {
        YDModuleAlgebra { coaction, ..self.clone() }
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        YDModuleAlgebra { name: name.into(), ..self.clone() }
    }

    pub fn space(&self) -> &SpaceRef {
        &self.algebra.space
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn order(&self) -> u32 {
        self.algebra.order
    }

    /// `H ⊗ X`, the codomain of the coaction.
    pub fn coaction_space(&self) -> &SpaceRef {
        self.coaction.codomain()
    }

    pub fn act(&self, h: &Vect, x: &Vect) -> Vect {
        self.action.apply(h, x)
    }

    pub fn act_basis(&self, h: usize, x: usize) -> Vect {
        self.action.basis(h, x).into_owned()
    }

    pub fn coact(&self, x: &Vect) -> Vect {
        self.coaction.apply(x)
    }

    /// Terms `(h, x, c)` of `δ(e_i)`.
    pub fn coact_terms(&self, i: usize) -> Vec<(usize, usize, Cyclotomic)> {
        split_terms(&self.coaction.image(i), self.dim())
    }

    /// Terms of `δ(v)` for an arbitrary vector.
    pub fn coact_vec_terms(&self, v: &Vect) -> Vec<(usize, usize, Cyclotomic)> {
        split_terms(&self.coact(v), self.dim())
    }

    pub fn mul(&self, x: &Vect, y: &Vect) -> Vect {
        self.algebra.mul(x, y)
    }

    pub fn axis(&self, name: &str) -> Axis {
        self.algebra.axis(name)
    }

    fn hopf_axis(&self, name: &str) -> Axis {
        hopf_axis(&self.hopf, name)
    }

    /// `h ⊗ x` in `H ⊗ X`.
    pub fn hx(&self, h: &Vect, x: &Vect) -> Vect {
        outer(h, x, self.coaction_space().id(), self.dim())
    }
}

pub(crate) fn split_terms(v: &Vect, right_dim: usize) -> Vec<(usize, usize, Cyclotomic)> {
    v.terms().iter().map(|(k, c)| {
        let (a, b) = split(*k, right_dim);
        (a, b, c.clone())
    }).collect()
}

pub(crate) fn hopf_axis(h: &FiniteHopf, name: &str) -> Axis {
    let a = Axis::basis_of(name, h.space(), h.order());
    if h.generators().is_empty() {
        a
    } else {
        a.with_generators(h.generators().to_vec())
    }
}

/// `Σ (h′ ▷ x) ⊗ (h″ ▷ y)`-style helper: applies `f(h′, h″)` over the coproduct of `h`.
pub(crate) fn over_coproduct(hopf: &FiniteHopf, h: &Vect, space: &SpaceRef, mut f: impl FnMut(usize, usize) -> Vect) -> Vect {
    let mut acc = Accumulator::new(space.id());
    for (i, c) in h.terms() {
        for (a, b, d) in hopf.coproduct_terms(*i) {
            acc.add_scaled(&f(a, b), &(c * &d));
        }
    }
    acc.finish()
}

fn module_props<'a>(name: &str, hopf: &'a FiniteHopf, algebra: &'a Algebra, action: &'a SparseBilinear) -> Vec<Property<'a>> {
    let o = algebra.order;
    let comp = Property::new(
        format!("module.{name}.composition"),
        vec![hopf_axis(hopf, "M"), Axis::basis_of("N", hopf.space(), o), Axis::basis_of("x", &algebra.space, o)],
        &algebra.space,
        move |v| (action.apply(&hopf.mul(v[0], v[1]), v[2]), action.apply(v[0], &action.apply(v[1], v[2]))),
    );
    let unit = Property::new(format!("module.{name}.unit"), vec![Axis::basis_of("x", &algebra.space, o)], &algebra.space, move |v| {
        (action.apply(&hopf.one(), v[0]), v[0].clone())
    });
    vec![comp, unit]
}

/// `(MN)▷x = M▷(N▷x)` and `1▷x = x`.
pub fn check_module(m: &ModuleAlgebra, mode: &Mode) -> CheckResult {
    let name = m.algebra.name.clone();
    let props = module_props(&name, &m.hopf, &m.algebra, &m.action);
    let parts = vec![props[0].run(mode), props[1].run(&Mode::Exhaustive)];
    CheckResult::all(format!("module.{name}"), parts)
}

/// `M▷(AC) = (M′▷A)(M″▷C)` over generator or basis `M` and basis `A`, `C`.
pub fn module_algebra_property(m: &ModuleAlgebra) -> Property<'_> {
    let (h, x, act) = (&m.hopf, &m.algebra, &m.action);
    let o = x.order;
    Property::new(
        format!("module-algebra.{}.product", x.name),
        vec![hopf_axis(h, "M"), Axis::basis_of("A", &x.space, o), Axis::basis_of("C", &x.space, o)],
        &x.space,
        move |v| {
            let lhs = act.apply(v[0], &x.mul(v[1], v[2]));
            let rhs = over_coproduct(h, v[0], &x.space, |a, b| x.mul(&act.apply(&h.basis(a), v[1]), &act.apply(&h.basis(b), v[2])));
            (lhs, rhs)
        },
    )
}

/// `M▷(AC) = (M′▷A)(M″▷C)` and `M▷1 = ε(M)1`.
pub fn check_module_algebra(m: &ModuleAlgebra, mode: &Mode) -> CheckResult {
    let name = m.algebra.name.clone();
    let (h, x, act) = (&m.hopf, &m.algebra, &m.action);
    let o = x.order;
    let law = module_algebra_property(m).run(mode);
    let unit = Property::new(format!("module-algebra.{name}.unit"), vec![Axis::basis_of("M", h.space(), o)], &x.space, |v| {
        (act.apply(v[0], &x.one()), x.one().scale(&h.counit(v[0])))
    })
    .run(&Mode::Exhaustive);
    CheckResult::all(format!("module-algebra.{name}"), vec![law, unit])
}

/// Counit and coassociativity of `δ`, `δ(xy) = δ(x)δ(y)` and `δ(1) = 1 ⊗ 1`.
pub fn check_comodule_algebra(c: &ComoduleAlgebra, mode: &Mode) -> CheckResult {
    let (h, x, co) = (&c.hopf, &c.algebra, &c.coaction);
    let name = x.name.clone();
    let o = x.order;
    let n = x.dim();
    let hx = co.codomain().clone();
    let hh = h.tensor_space().clone();
    let hhx = Space::tensor(&hh, &x.space);
    let counit = Property::new(format!("comodule-algebra.{name}.counit"), vec![Axis::basis_of("x", &x.space, o)], &x.space, |v| {
        let mut acc = Accumulator::new(x.space.id());
        for (a, b, cc) in split_terms(&co.apply(v[0]), n) {
            let e = &h.counit_values()[a];
            if !e.is_zero() {
                acc.add_scaled(&x.basis(b), &(&cc * e));
            }
        }
        (acc.finish(), v[0].clone())
    })
    .run(&Mode::Exhaustive);
    let coassoc = Property::new(format!("comodule-algebra.{name}.coassociativity"), vec![Axis::basis_of("x", &x.space, o)], &hhx, |v| {
        let d = split_terms(&co.apply(v[0]), n);
        let mut l = Accumulator::new(hhx.id());
        let mut r = Accumulator::new(hhx.id());
        for (a, b, cc) in &d {
            l.add_scaled(&outer(&h.coproduct_basis(*a), &x.basis(*b), hhx.id(), n), cc);
            for (a2, b2, c2) in split_terms(&co.image(*b), n) {
                let hhv = outer(&h.basis(*a), &h.basis(a2), hh.id(), h.dim());
                r.add_scaled(&outer(&hhv, &x.basis(b2), hhx.id(), n), &(cc * &c2));
            }
        }
        (l.finish(), r.finish())
    })
    .run(&Mode::Exhaustive);
    let mult = Property::new(
        format!("comodule-algebra.{name}.product"),
        vec![x.axis("x"), Axis::basis_of("y", &x.space, o)],
        &hx,
        |v| (co.apply(&x.mul(v[0], v[1])), tensor_mul_hx(h, x, &co.apply(v[0]), &co.apply(v[1]))),
    )
    .run(mode);
    let unit = CheckResult::fact(
        format!("comodule-algebra.{name}.unit"),
        co.apply(&x.one()) == outer(&h.one(), &x.one(), hx.id(), n),
        co.apply(&x.one()).render(&hx),
        outer(&h.one(), &x.one(), hx.id(), n).render(&hx),
    );
    CheckResult::all(format!("comodule-algebra.{name}"), vec![counit, coassoc, mult, unit])
}

/// Product in the algebra `H ⊗ X`.
pub(crate) fn tensor_mul_hx(h: &FiniteHopf, x: &Algebra, a: &Vect, b: &Vect) -> Vect {
    let n = x.dim();
    let sid = a.space();
    let mut acc = Accumulator::new(sid);
    for (k1, c1) in a.terms() {
        let (h1, x1) = split(*k1, n);
        for (k2, c2) in b.terms() {
            let (h2, x2) = split(*k2, n);
            let hv = h.mul_basis(h1, h2);
            if hv.is_zero() {
                continue;
            }
            let xv = x.mult.basis(x1, x2);
            acc.add_scaled(&outer(&hv, &xv, sid, n), &(c1 * c2));
        }
    }
    acc.finish()
}

/// The Yetter–Drinfeld condition `(M′▷A)₍₋₁₎M″ ⊗ (M′▷A)₍₀₎ = M′A₍₋₁₎ ⊗ (M″▷A₍₀₎)`.
pub fn yd_property(y: &YDModuleAlgebra) -> Property<'_> {
    let out = y.coaction_space().clone();
    let oid = out.id();
    let n = y.dim();
    Property::new(format!("yd.{}.condition", y.name), vec![y.hopf_axis("M"), Axis::basis_of("A", y.space(), y.order())], &out, move |v| {
        let h = &y.hopf;
        let (m, a) = (v[0], v[1]);
        let mut l = Accumulator::new(oid);
        let mut r = Accumulator::new(oid);
        let da = y.coact_vec_terms(a);
        for (i, c) in m.terms() {
            for (m1, m2, d) in h.coproduct_terms(*i) {
                let cd = c * &d;
                let acted = y.act(&h.basis(m1), a);
                for (g, x0, e) in y.coact_vec_terms(&acted) {
                    l.add_scaled(&outer(&h.mul_basis(g, m2), &y.algebra.basis(x0), oid, n), &(&cd * &e));
                }
                for (g, x0, e) in &da {
                    let act = y.act_basis(m2, *x0);
                    r.add_scaled(&outer(&h.mul_basis(m1, *g), &act, oid, n), &(&cd * e));
                }
            }
        }
        (l.finish(), r.finish())
    })
}

pub fn check_yd(y: &YDModuleAlgebra, mode: &Mode) -> CheckResult {
    yd_property(y).run(mode).renamed(format!("yd.{}", y.name))
}

/// Braided commutativity `yx = (y₍₋₁₎▷x) y₍₀₎`.
pub fn braided_commutative_property(y: &YDModuleAlgebra) -> Property<'_> {
    let o = y.order();
    Property::new(
        format!("braided-comm.{}", y.name),
        vec![Axis::basis_of("x", y.space(), o), Axis::basis_of("y", y.space(), o)],
        y.space(),
        move |v| {
            let (x, w) = (v[0], v[1]);
            let lhs = y.mul(w, x);
            let mut acc = Accumulator::new(y.space().id());
            for (g, w0, c) in y.coact_vec_terms(w) {
                let acted = y.act(&y.hopf.basis(g), x);
                acc.add_scaled(&y.algebra.mult.apply(&acted, &y.algebra.basis(w0)), &c);
            }
            (lhs, acc.finish())
        },
    )
}

pub fn check_braided_commutative(y: &YDModuleAlgebra, mode: &Mode) -> CheckResult {
    braided_commutative_property(y).run(mode)
}

/// Plain commutativity `yx = xy`, as a contrast to the braided version.
pub fn check_commutative(x: &Algebra, mode: &Mode) -> CheckResult {
    let o = x.order;
    Property::new(format!("commutative.{}", x.name), vec![Axis::basis_of("x", &x.space, o), Axis::basis_of("y", &x.space, o)], &x.space, |v| {
        (x.mul(v[1], v[0]), x.mul(v[0], v[1]))
    })
    .run(mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::examples::group_algebra;

    fn adjoint(h: &FiniteHopf) -> ModuleAlgebra {
        let a = h.algebra();
        let hh = h.clone();
        let act = SparseBilinear::from_rule(h.space(), h.space(), h.space(), move |i, j| {
            let mut acc = Accumulator::new(hh.space().id());
            for (a, b, c) in hh.coproduct_terms(i) {
                acc.add_scaled(&hh.mul(&hh.mul(&hh.basis(a), &hh.basis(j)), &hh.s(&hh.basis(b))), &c);
            }
            acc.finish()
        })
        .materialize();
        ModuleAlgebra::new(h.clone(), a, act).unwrap()
    }

    #[test]
    fn trivial_structures_pass() {
        let h = group_algebra(4, 8).unwrap();
        let x = h.algebra();
        let y = YDModuleAlgebra::trivial("C[Z/4]", &h, &x);
        assert!(check_module(&y.module(), &Mode::Exhaustive).passed());
        assert!(check_module_algebra(&y.module(), &Mode::Exhaustive).passed());
        assert!(check_comodule_algebra(&y.comodule(), &Mode::Exhaustive).passed());
        assert!(check_yd(&y, &Mode::Exhaustive).passed());
        assert!(check_braided_commutative(&y, &Mode::Exhaustive).passed());
    }

    #[test]
    fn adjoint_action_of_group_algebra() {
        let h = group_algebra(4, 8).unwrap();
        let m = adjoint(&h);
        assert!(check_module(&m, &Mode::Exhaustive).passed());
        assert!(check_module_algebra(&m, &Mode::Exhaustive).passed());
    }

    #[test]
    fn left_multiplication_is_not_a_module_algebra() {
        let h = group_algebra(3, 12).unwrap();
        let m = ModuleAlgebra::new(h.clone(), h.algebra(), h.mult().clone()).unwrap();
        assert!(check_module(&m, &Mode::Exhaustive).passed());
        let r = check_module_algebra(&m, &Mode::Exhaustive);
        assert!(r.failed());
        assert!(r.witness.is_some());
    }
}
