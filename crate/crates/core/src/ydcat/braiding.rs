use crate::error::{Error, Result};
use crate::linalg::{outer, split, Accumulator, Space, SpaceRef, SparseLinear, Vect};
use crate::report::{Axis, CheckResult, Mode, Property};

use super::YDModuleAlgebra;

fn same_hopf(u: &YDModuleAlgebra, v: &YDModuleAlgebra) -> Result<()> {
    if u.hopf.space().id() != v.hopf.space().id() {
        return Err(Error::Structural(format!("{} and {} live over different Hopf algebras", u.name, v.name)));
    }
    Ok(())
}

/// `c(u ⊗ v) = (u₍₋₁₎▷v) ⊗ u₍₀₎` as a map `U ⊗ V → V ⊗ U`.
pub fn braiding(u: &YDModuleAlgebra, v: &YDModuleAlgebra) -> Result<SparseLinear> {
    same_hopf(u, v)?;
    let dom = Space::tensor(u.space(), v.space());
    let cod = Space::tensor(v.space(), u.space());
    let (u2, v2, cid) = (u.clone(), v.clone(), cod.id());
    let (du, dv) = (u.dim(), v.dim());
    let o = u.order();
    let map = SparseLinear::from_rule(&dom, &cod, move |k| {
        let (i, j) = split(k, dv);
        let mut acc = Accumulator::new(cid);
        for (h, u0, c) in u2.coact_terms(i) {
            acc.add_scaled(&outer(&v2.act_basis(h, j), &Vect::basis_in(u2.space().id(), u0, o), cid, du), &c);
        }
        acc.finish()
    });
    Ok(if dom.dim() <= 1 << 16 { map.materialize() } else { map })
}

/// `c⁻¹(v ⊗ u) = u₍₀₎ ⊗ S⁻¹(u₍₋₁₎)▷v` as a map `V ⊗ U → U ⊗ V`.
pub fn braiding_inverse(u: &YDModuleAlgebra, v: &YDModuleAlgebra) -> Result<SparseLinear> {
    same_hopf(u, v)?;
    let dom = Space::tensor(v.space(), u.space());
    let cod = Space::tensor(u.space(), v.space());
    let (u2, v2, cid) = (u.clone(), v.clone(), cod.id());
    let (du, dv) = (u.dim(), v.dim());
    let o = u.order();
    let map = SparseLinear::from_rule(&dom, &cod, move |k| {
        let (j, i) = split(k, du);
        let mut acc = Accumulator::new(cid);
        let vj = Vect::basis_in(v2.space().id(), j, o);
        for (h, u0, c) in u2.coact_terms(i) {
            let g = u2.hopf.s_inv(&u2.hopf.basis(h));
            acc.add_scaled(&outer(&Vect::basis_in(u2.space().id(), u0, o), &v2.act(&g, &vj), cid, dv), &c);
        }
        acc.finish()
    });
    Ok(if dom.dim() <= 1 << 16 { map.materialize() } else { map })
}

/// `c ∘ c⁻¹ = id` on `V ⊗ U` and `c⁻¹ ∘ c = id` on `U ⊗ V`.
pub fn check_braiding_inverse(u: &YDModuleAlgebra, v: &YDModuleAlgebra) -> Result<CheckResult> {
    let c = braiding(u, v)?;
    let ci = braiding_inverse(u, v)?;
    let o = u.order();
    let name = format!("braiding-inverse.{}.{}", u.name, v.name);
    let a = Property::new(format!("{name}.c-cinv"), vec![Axis::basis_of("w", ci.domain(), o)], ci.domain(), |w| {
        (c.apply(&ci.apply(w[0])), w[0].clone())
    })
    .run(&Mode::Exhaustive);
    let b = Property::new(format!("{name}.cinv-c"), vec![Axis::basis_of("w", c.domain(), o)], c.domain(), |w| {
        (ci.apply(&c.apply(w[0])), w[0].clone())
    })
    .run(&Mode::Exhaustive);
    Ok(CheckResult::all(name, vec![a, b]))
}

/// `(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c)` on `X ⊗ X ⊗ X`.
pub fn braid_relation(x: &YDModuleAlgebra, mode: &Mode) -> Result<CheckResult> {
    let c = braiding(x, x)?;
    let n = x.dim();
    let xx = c.domain().clone();
    let xxx: SpaceRef = Space::tensor(&xx, x.space());
    let o = x.order();
    let left = |w: &Vect| -> Vect {
        let mut acc = Accumulator::new(xxx.id());
        for (k, a) in w.terms() {
            let (ab, z) = split(*k, n);
            for (k2, b) in c.image(ab).terms() {
                acc.push(k2 * n + z, a * b);
            }
        }
        acc.finish()
    };
    let right = |w: &Vect| -> Vect {
        let mut acc = Accumulator::new(xxx.id());
        for (k, a) in w.terms() {
            let (i, bc) = split(*k, n * n);
            for (k2, b) in c.image(bc).terms() {
                acc.push(i * n * n + k2, a * b);
            }
        }
        acc.finish()
    };
    let r = Property::new(
        format!("braid-relation.{}", x.name),
        vec![Axis::basis_of("x", x.space(), o), Axis::basis_of("y", x.space(), o), Axis::basis_of("z", x.space(), o)],
        &xxx,
        |v| {
            let w = outer(&outer(v[0], v[1], xx.id(), n), v[2], xxx.id(), n);
            (left(&right(&left(&w))), right(&left(&right(&w))))
        },
    )
    .run(mode);
    Ok(r)
}

/// `(y₍₋₁₎▷x) ⊗ y₍₀₎ = x₍₀₎ ⊗ (S⁻¹(x₍₋₁₎)▷y)` in `X ⊗ Y`.
pub fn check_braided_symmetric(x: &YDModuleAlgebra, y: &YDModuleAlgebra, mode: &Mode) -> Result<CheckResult> {
    same_hopf(x, y)?;
    let out = Space::tensor(x.space(), y.space());
    let (o, ny) = (x.order(), y.dim());
    let h = &x.hopf;
    let r = Property::new(
        format!("braided-sym.{}.{}", x.name, y.name),
        vec![Axis::basis_of("x", x.space(), o), Axis::basis_of("y", y.space(), o)],
        &out,
        |v| {
            let mut l = Accumulator::new(out.id());
            for (g, y0, c) in y.coact_vec_terms(v[1]) {
                l.add_scaled(&outer(&x.act(&h.basis(g), v[0]), &y.algebra.basis(y0), out.id(), ny), &c);
            }
            let mut r = Accumulator::new(out.id());
            for (g, x0, c) in x.coact_vec_terms(v[0]) {
                let s = h.s_inv(&h.basis(g));
                r.add_scaled(&outer(&x.algebra.basis(x0), &y.act(&s, v[1]), out.id(), ny), &c);
            }
            (l.finish(), r.finish())
        },
    )
    .run(mode);
    Ok(r)
}

/// `((x₍₋₁₎▷y)₍₋₁₎▷x₍₀₎) ⊗ (x₍₋₁₎▷y)₍₀₎ = x ⊗ y` in `X ⊗ Y`.
pub fn check_locked_identity(x: &YDModuleAlgebra, y: &YDModuleAlgebra, mode: &Mode) -> Result<CheckResult> {
    same_hopf(x, y)?;
    let out = Space::tensor(x.space(), y.space());
    let (o, ny) = (x.order(), y.dim());
    let h = &x.hopf;
    let r = Property::new(
        format!("locked.{}.{}", x.name, y.name),
        vec![Axis::basis_of("x", x.space(), o), Axis::basis_of("y", y.space(), o)],
        &out,
        |v| {
            let mut l = Accumulator::new(out.id());
            for (g, x0, c) in x.coact_vec_terms(v[0]) {
                let gy = y.act(&h.basis(g), v[1]);
                for (g2, y0, d) in y.coact_vec_terms(&gy) {
                    l.add_scaled(&outer(&x.act_basis(g2, x0), &y.algebra.basis(y0), out.id(), ny), &(&c * &d));
                }
            }
            (l.finish(), outer(v[0], v[1], out.id(), ny))
        },
    )
    .run(mode);
    Ok(r)
}
