use crate::error::Result;
use crate::hopf::Algebra;
use crate::linalg::{kernel, Accumulator, BasisLabel, Space, SparseBilinear, SparseLinear, Vect};
use crate::report::{Axis, CheckResult, Mode, Property};
use crate::scalar::QContext;
use crate::truncate::restrict_yd;
use crate::ydcat::{check_braided_commutative, check_yd, YDModuleAlgebra};

use super::hq::HqSl2;
use super::monomial_name;

/// `ℂ_q[z,∂] = ℂ[z,∂]/(z^p, ∂^p, ∂z − (q−q⁻¹) − q⁻²z∂)` on the basis `z^a∂^b` (index `a·p + b`),
/// built by rewriting `∂z^i = q^{−2i}z^i∂ + (q−q⁻¹)q^{1−i}[i]z^{i−1}`.
pub fn cqzd_algebra(ctx: &QContext) -> Result<Algebra> {
    let p = ctx.p() as usize;
    let o = ctx.order();
    let labels = (0..p * p)
        .map(|i| {
            let (a, b) = ((i / p) as i64, (i % p) as i64);
            BasisLabel { tuple: vec![a, b], name: monomial_name(&[("z", a), ("∂", b)]) }
        })
        .collect();
    let space = Space::new("Cq[z,∂]", labels);
    let sid = space.id();
    // ∂ · z^i∂^j in normal form.
    let del_times = |v: &Vect| -> Vect {
        let mut acc = Accumulator::new(sid);
        for (k, c) in v.terms() {
            let (i, j) = (k / p, k % p);
            if j + 1 < p {
                acc.push(i * p + j + 1, c * &ctx.q_pow(-2 * i as i64));
            }
            if i > 0 {
                let w = &(&ctx.q_minus_q_inv * &ctx.q_pow(1 - i as i64)) * &ctx.q_int(i as i64);
                acc.push((i - 1) * p + j, c * &w);
            }
        }
        acc.finish()
    };
    let mut table = Vec::with_capacity(p.pow(4));
    for x in 0..p * p {
        let (a, b) = (x / p, x % p);
        for y in 0..p * p {
            let mut v = Vect::basis(&space, y, o);
            for _ in 0..b {
                v = del_times(&v);
            }
            // z^a on the left only raises the z exponent.
            let terms = v.into_terms().into_iter().filter(|(k, _)| k / p + a < p).map(|(k, c)| (k + a * p, c)).collect();
            table.push(Vect::from_terms(sid, terms));
        }
    }
    let mult = SparseBilinear::from_table(&space, &space, &space, table)?;
    let z = Vect::basis(&space, if p > 1 { p } else { 0 }, o);
    let d = Vect::basis(&space, 1, o);
    Ok(Algebra::new("Cq[z,∂]", o, &space, mult, Vect::basis(&space, 0, o))?.with_generators(vec![("z".into(), z), ("∂".into(), d)]))
}

/// Basis of the center, from the kernel of `x ↦ ([x, z], [x, ∂])`.
pub fn center(a: &Algebra) -> Result<Vec<Vect>> {
    let n = a.dim();
    let two = Space::from_names("gens", a.generators.iter().map(|(g, _)| g.clone()).collect());
    let target = Space::tensor(&two, &a.space);
    let gens = a.generators.clone();
    let images = (0..n)
        .map(|i| {
            let x = a.basis(i);
            let mut acc = Accumulator::new(target.id());
            for (k, (_, g)) in gens.iter().enumerate() {
                let c = a.mul(&x, g).sub(&a.mul(g, &x));
                for (j, v) in c.terms() {
                    acc.push(k * n + j, v.clone());
                }
            }
            acc.finish()
        })
        .collect();
    let f = SparseLinear::from_table(&a.space, &target, images)?;
    Ok(kernel(&f, a.order))
}

/// Dimension `p²`, associativity, the defining relations, and a one-dimensional center.
pub fn cqzd_check(ctx: &QContext) -> Result<(Algebra, CheckResult)> {
    let a = cqzd_algebra(ctx)?;
    let p = ctx.p();
    let name = format!("cqzd.p{p}");
    let (z, d) = (a.generators[0].1.clone(), a.generators[1].1.clone());
    let sp = &a.space;
    let mut parts = vec![CheckResult::fact(format!("{name}.dimension"), a.dim() == (p * p) as usize, a.dim().to_string(), (p * p).to_string())];
    parts.push(a.check_algebra(&Mode::Exhaustive).renamed(format!("{name}.associative")));
    let rhs = a.one().scale(&ctx.q_minus_q_inv).add(&a.mul(&z, &d).scale(&ctx.q_pow(-2)));
    parts.push(super::presentation::relation(format!("{name}.del-z"), sp, &a.mul(&d, &z), &rhs));
    parts.push(super::presentation::relation(format!("{name}.z^p"), sp, &a.pow(&z, p), &a.zero()));
    parts.push(super::presentation::relation(format!("{name}.del^p"), sp, &a.pow(&d, p), &a.zero()));
    let c = center(&a)?;
    parts.push(CheckResult::fact(format!("{name}.center-dimension"), c.len() == 1, c.len().to_string(), "1"));
    let result = CheckResult::all(name, parts);
    Ok((a, result))
}

/// The `λ⁰` part of `H_q sl(2)`: `z^a∂^b ↦ z^a∂^b` is multiplicative from `ℂ_q[z,∂]`, and the span
/// is a braided commutative Yetter–Drinfeld submodule algebra.
pub fn cqzd_in_hq(a: &Algebra, h: &HqSl2, mode: &Mode) -> Result<(Option<YDModuleAlgebra>, CheckResult)> {
    let p = h.p as usize;
    let image: Vec<Vect> = (0..p * p).map(|i| h.monomial((i / p) as u32, 0, (i % p) as u32)).collect();
    let phi = SparseLinear::from_table(&a.space, &h.yd.algebra.space, image.clone())?;
    let hq = &h.yd.algebra;
    let o = a.order;
    let name = format!("cqzd-in-hq.p{}", h.p);
    let hom = Property::new(format!("{name}.multiplicative"), vec![Axis::basis_of("x", &a.space, o), Axis::basis_of("y", &a.space, o)], &hq.space, |v| {
        (phi.apply(&a.mul(v[0], v[1])), hq.mul(&phi.apply(v[0]), &phi.apply(v[1])))
    })
    .run(&Mode::Exhaustive);
    let basis = (0..p * p).map(|i| (BasisLabel { tuple: a.space.tuple(i), name: a.space.label(i) }, image[i].clone())).collect();
    let (sub, cert) = restrict_yd(&h.yd, basis, "Cq[z,∂]")?;
    let mut parts = vec![hom, cert];
    if let Some(y) = &sub {
        parts.push(check_yd(y, mode));
        parts.push(check_braided_commutative(y, mode));
    }
    Ok((sub, CheckResult::all(name, parts)))
}
