//! Hopf-ideal quotients, sub-Hopf algebras, subalgebra-then-quotient truncations, and the
//! transport of Yetter–Drinfeld structures to such subquotients.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{Algebra, FiniteHopf, HopfData};
use crate::linalg::{
    outer, quotient_space, span_closure, split, Accumulator, BasisLabel, ClosureMode, Coordinates, Quotient, Space, SpaceRef,
    SparseBilinear, SparseLinear, Subspace, Vect,
};
use crate::report::{Axis, CheckResult, Mode, Property};
use crate::scalar::Cyclotomic;
use crate::ydcat::YDModuleAlgebra;

/// Smallest two-sided ideal of `a` containing `seeds`, grown by multiplying with `gens` on both sides.
pub fn two_sided_ideal(a: &Algebra, seeds: &[Vect], gens: &[Vect]) -> Result<Subspace> {
    span_closure(&a.space, seeds, &a.mult, &ClosureMode::TwoSidedIdeal { generators: gens.to_vec() })
}

/// Smallest subalgebra of `a` containing `seeds` and the unit.
pub fn generated_subalgebra(a: &Algebra, seeds: &[Vect]) -> Result<Subspace> {
    span_closure(&a.space, seeds, &a.mult, &ClosureMode::Subalgebra { unit: a.one() })
}

fn algebra_generators(h: &FiniteHopf) -> Vec<Vect> {
    if h.generators().is_empty() {
        (0..h.dim()).map(|i| h.basis(i)).collect()
    } else {
        h.generators().iter().map(|(_, v)| v.clone()).collect()
    }
}

fn rows_axis(name: &str, rows: Vec<Vect>, space: &SpaceRef) -> Axis {
    Axis::from_list(name, rows.into_iter().enumerate().map(|(i, v)| (format!("r{i} = {}", v.render(space)), v)).collect())
}

/// Hopf-ideal test: two-sidedness, `ε(I) = 0`, `S(I) ⊆ I`, `Δ(I) ⊆ I⊗H + H⊗I`, and centrality of
/// each element in `central`.
///
/// The coproduct condition is tested as `(π⊗π)Δ(I) = 0`, since `I⊗H + H⊗I` is the kernel of `π⊗π`.
pub fn check_hopf_ideal(h: &FiniteHopf, ideal: &Subspace, central: &[(String, Vect)]) -> Result<CheckResult> {
    let o = h.order();
    let q = quotient_space(h.space(), ideal, "quotient", o)?;
    let qq = Space::tensor(&q.space, &q.space);
    let nq = q.space.dim();
    let line = Space::line();
    let rows = ideal.basis();
    let space = h.space();
    let gens = algebra_generators(h);
    let gen_axis = Axis::from_list("g", gens.iter().enumerate().map(|(i, g)| (format!("g{i}"), g.clone())).collect());
    let name = format!("hopf-ideal.{}", h.name());
    let mut parts = Vec::new();
    parts.push(
        Property::new(format!("{name}.two-sided"), vec![rows_axis("x", rows.clone(), space), gen_axis.clone()], space, |v| {
            let (l, r) = (h.mul(v[1], v[0]), h.mul(v[0], v[1]));
            (ideal.reduce(&l).add(&ideal.reduce(&r)), h.zero())
        })
        .run(&Mode::Exhaustive),
    );
    parts.push(
        Property::new(format!("{name}.counit"), vec![rows_axis("x", rows.clone(), space)], &line, |v| {
            (Vect::monomial(line.id(), 0, h.counit(v[0])), Vect::zero(&line))
        })
        .run(&Mode::Exhaustive),
    );
    parts.push(
        Property::new(format!("{name}.antipode"), vec![rows_axis("x", rows.clone(), space)], space, |v| (ideal.reduce(&h.s(v[0])), h.zero()))
            .run(&Mode::Exhaustive),
    );
    parts.push(
        Property::new(format!("{name}.coproduct"), vec![rows_axis("x", rows, space)], &qq, |v| {
            let mut acc = Accumulator::new(qq.id());
            for (k, c) in h.coproduct(v[0]).terms() {
                let (a, b) = split(*k, h.dim());
                acc.add_scaled(&outer(&q.projection.image(a), &q.projection.image(b), qq.id(), nq), c);
            }
            (acc.finish(), Vect::zero(&qq))
        })
        .run(&Mode::Exhaustive),
    );
    for (cn, c) in central {
        parts.push(
            Property::new(format!("{name}.central.{cn}"), vec![gen_axis.clone()], space, |v| (h.mul(c, v[0]), h.mul(v[0], c))).run(&Mode::Exhaustive),
        );
    }
    Ok(CheckResult::all(name, parts))
}

/// A quotient Hopf algebra `H/I` on the complement of the pivot labels of `I`.
#[derive(Clone, Debug)]
pub struct HopfQuotient {
    pub parent: FiniteHopf,
    pub ideal: Subspace,
    pub quotient: FiniteHopf,
    /// `H → H/I`.
    pub projection: SparseLinear,
    /// Monomial representatives `H/I → H`.
    pub section: SparseLinear,
    pub certificate: CheckResult,
}

/// `H/I`, with structure maps `π∘(structure)∘σ`. Fails if `I` is not a Hopf ideal.
pub fn hopf_quotient(h: &FiniteHopf, ideal: &Subspace, name: &str, central: &[(String, Vect)]) -> Result<HopfQuotient> {
    let certificate = check_hopf_ideal(h, ideal, central)?;
    if !certificate.passed() {
        return Err(certificate_error(&certificate));
    }
    let o = h.order();
    let Quotient { space, projection, section, .. } = quotient_space(h.space(), ideal, name, o)?;
    let n = space.dim();
    let tensor = Space::tensor(&space, &space);
    let lift = |i: usize| section.image(i).into_owned();
    let pi = |v: &Vect| projection.apply(v);
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(pi(&h.mul(&lift(i), &lift(j))));
        }
    }
    let comult = (0..n)
        .map(|i| {
            let mut acc = Accumulator::new(tensor.id());
            for (k, c) in h.coproduct(&lift(i)).terms() {
                let (a, b) = split(*k, h.dim());
                acc.add_scaled(&outer(&projection.image(a), &projection.image(b), tensor.id(), n), c);
            }
            acc.finish()
        })
        .collect();
    let data = HopfData {
        name: name.to_string(),
        order: o,
        space: space.clone(),
        mult: SparseBilinear::from_table(&space, &space, &space, table)?,
        unit: pi(&h.one()),
        comult: SparseLinear::from_table(&space, &tensor, comult)?,
        counit: (0..n).map(|i| h.counit(&lift(i))).collect(),
        antipode: SparseLinear::from_table(&space, &space, (0..n).map(|i| pi(&h.s(&lift(i)))).collect())?,
    };
    let inv = SparseLinear::from_table(&space, &space, (0..n).map(|i| pi(&h.s_inv(&lift(i)))).collect())?;
    let gens = h.generators().iter().map(|(g, v)| (g.clone(), pi(v))).collect();
    let quotient = FiniteHopf::with_antipode_inverse(data, inv)?.with_generators(gens);
    Ok(HopfQuotient { parent: h.clone(), ideal: ideal.clone(), quotient, projection, section, certificate })
}

/// `π` is an algebra and coalgebra morphism on all basis (pairs) of the parent.
pub fn check_projection_morphism(q: &HopfQuotient, mode: &Mode) -> CheckResult {
    let (h, t) = (&q.parent, &q.quotient);
    let o = h.order();
    let pi = &q.projection;
    let n = t.dim();
    let name = format!("projection.{}", t.name());
    let m = Property::new(format!("{name}.product"), vec![Axis::basis_of("x", h.space(), o), Axis::basis_of("y", h.space(), o)], t.space(), |v| {
        (pi.apply(&h.mul(v[0], v[1])), t.mul(&pi.apply(v[0]), &pi.apply(v[1])))
    })
    .run(mode);
    let c = Property::new(format!("{name}.coproduct"), vec![Axis::basis_of("x", h.space(), o)], t.tensor_space(), |v| {
        let mut acc = Accumulator::new(t.tensor_space().id());
        for (k, c) in h.coproduct(v[0]).terms() {
            let (a, b) = split(*k, h.dim());
            acc.add_scaled(&outer(&pi.image(a), &pi.image(b), t.tensor_space().id(), n), c);
        }
        (acc.finish(), t.coproduct(&pi.apply(v[0])))
    })
    .run(&Mode::Exhaustive);
    let s = Property::new(format!("{name}.antipode"), vec![Axis::basis_of("x", h.space(), o)], t.space(), |v| {
        (pi.apply(&h.s(v[0])), t.s(&pi.apply(v[0])))
    })
    .run(&Mode::Exhaustive);
    CheckResult::all(name, vec![m, c, s])
}

/// Coordinates of `t ∈ A⊗A` in `U⊗U`, for `U ⊂ A` with coordinates `coords`; `None` if `t ∉ U⊗U`.
fn tensor_coords(coords: &Coordinates, ambient: &SpaceRef, t: &Vect, out: &SpaceRef, nu: usize) -> Option<Vect> {
    let d = ambient.dim();
    let mut by_right: BTreeMap<usize, Vec<(usize, Cyclotomic)>> = Default::default();
    for (k, c) in t.terms() {
        let (a, b) = split(*k, d);
        by_right.entry(b).or_default().push((a, c.clone()));
    }
    // Σ_b x_b ⊗ e_b with x_b = Σ_i α_ib u_i, then y_i = Σ_b α_ib e_b must lie in U.
    let mut y: BTreeMap<usize, Vec<(usize, Cyclotomic)>> = Default::default();
    for (b, terms) in by_right {
        let xb = coords.coords(&Vect::from_terms(ambient.id(), terms))?;
        for (i, c) in xb.into_terms() {
            y.entry(i).or_default().push((b, c));
        }
    }
    let mut acc = Accumulator::new(out.id());
    for (i, terms) in y {
        let yi = coords.coords(&Vect::from_terms(ambient.id(), terms))?;
        for (j, c) in yi.into_terms() {
            acc.push(i * nu + j, c);
        }
    }
    Some(acc.finish())
}

/// A sub-Hopf algebra `U ⊂ H` given by a basis, with its inclusion.
#[derive(Clone, Debug)]
pub struct SubHopf {
    pub hopf: FiniteHopf,
    pub inclusion: SparseLinear,
    pub coords: Arc<Coordinates>,
}

/// The span of `basis` as a Hopf subalgebra, with closure certificates for product, unit,
/// coproduct and antipode. The Hopf algebra is returned only when all of them pass.
pub fn sub_hopf(h: &FiniteHopf, basis: Vec<(BasisLabel, Vect)>, name: &str) -> Result<(Option<SubHopf>, CheckResult)> {
    let o = h.order();
    let (labels, vecs): (Vec<BasisLabel>, Vec<Vect>) = basis.into_iter().unzip();
    let space = Space::new(name, labels);
    let n = space.dim();
    let coords = Coordinates::new(h.space(), &vecs, &space, o)?;
    let tensor = Space::tensor(&space, &space);
    let cname = format!("sub-hopf.{name}");
    let axis = || Axis::from_list("u", vecs.iter().enumerate().map(|(i, v)| (space.label(i), v.clone())).collect());
    let inside = |v: &Vect| if coords.coords(v).is_some() { Vect::zero(h.space()) } else { v.clone() };
    let mult = Property::new(format!("{cname}.product"), vec![axis(), axis()], h.space(), |v| (inside(&h.mul(v[0], v[1])), h.zero()))
        .run(&Mode::Exhaustive);
    let unit = CheckResult::fact(format!("{cname}.unit"), coords.coords(&h.one()).is_some(), "", "");
    let comult = Property::new(format!("{cname}.coproduct"), vec![axis()], h.tensor_space(), |v| {
        let d = h.coproduct(v[0]);
        let ok = tensor_coords(&coords, h.space(), &d, &tensor, n).is_some();
        (if ok { Vect::zero(h.tensor_space()) } else { d }, Vect::zero(h.tensor_space()))
    })
    .run(&Mode::Exhaustive);
    let anti = Property::new(format!("{cname}.antipode"), vec![axis()], h.space(), |v| (inside(&h.s(v[0])), h.zero())).run(&Mode::Exhaustive);
    let cert = CheckResult::all(cname, vec![mult, unit, comult, anti]);
    if !cert.passed() {
        return Ok((None, cert));
    }
    let c = |v: &Vect| coords.coords(v).expect("closure certified");
    let mut table = Vec::with_capacity(n * n);
    for x in &vecs {
        for y in &vecs {
            table.push(c(&h.mul(x, y)));
        }
    }
    let data = HopfData {
        name: name.to_string(),
        order: o,
        space: space.clone(),
        mult: SparseBilinear::from_table(&space, &space, &space, table)?,
        unit: c(&h.one()),
        comult: SparseLinear::from_table(
            &space,
            &tensor,
            vecs.iter().map(|v| tensor_coords(&coords, h.space(), &h.coproduct(v), &tensor, n).expect("certified")).collect(),
        )?,
        counit: vecs.iter().map(|v| h.counit(v)).collect(),
        antipode: SparseLinear::from_table(&space, &space, vecs.iter().map(|v| c(&h.s(v))).collect())?,
    };
    let inv = SparseLinear::from_table(&space, &space, vecs.iter().map(|v| c(&h.s_inv(v))).collect())?;
    let hopf = FiniteHopf::with_antipode_inverse(data, inv)?;
    let inclusion = SparseLinear::from_table(&space, h.space(), vecs)?;
    Ok((Some(SubHopf { hopf, inclusion, coords: Arc::new(coords) }), cert))
}

/// A subalgebra `S ⊂ A` on a chosen basis, with its inclusion and coordinates.
#[derive(Clone, Debug)]
pub struct SubAlgebra {
    pub algebra: Algebra,
    pub inclusion: SparseLinear,
    pub coords: Arc<Coordinates>,
}

impl SubAlgebra {
    pub fn coords(&self, v: &Vect) -> Option<Vect> {
        self.coords.coords(v)
    }
}

/// The span of `basis` as a subalgebra of `a`; fails if the span is not closed.
pub fn subalgebra_on(a: &Algebra, basis: Vec<(BasisLabel, Vect)>, name: &str) -> Result<SubAlgebra> {
    let o = a.order;
    let (labels, vecs): (Vec<BasisLabel>, Vec<Vect>) = basis.into_iter().unzip();
    let space = Space::new(name, labels);
    let coords = Coordinates::new(&a.space, &vecs, &space, o)?;
    let n = vecs.len();
    let mut table = Vec::with_capacity(n * n);
    for (i, x) in vecs.iter().enumerate() {
        for (j, y) in vecs.iter().enumerate() {
            let p = a.mul(x, y);
            table.push(coords.coords(&p).ok_or_else(|| {
                Error::Structural(format!("{name}: product {} · {} leaves the span", space.label(i), space.label(j)))
            })?);
        }
    }
    let unit = coords.coords(&a.one()).ok_or_else(|| Error::Structural(format!("{name}: unit outside the span")))?;
    let algebra = Algebra::new(name, o, &space, SparseBilinear::from_table(&space, &space, &space, table)?, unit)?;
    let inclusion = SparseLinear::from_table(&space, &a.space, vecs)?;
    Ok(SubAlgebra { algebra, inclusion, coords: Arc::new(coords) })
}

/// `A/J` for a two-sided ideal `J`, on the complement of the pivot labels.
pub fn algebra_quotient(a: &Algebra, ideal: &Subspace, name: &str) -> Result<(Algebra, Quotient)> {
    let q = quotient_space(&a.space, ideal, name, a.order)?;
    let n = q.space.dim();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(q.projection.apply(&a.mul(&q.section.image(i), &q.section.image(j))));
        }
    }
    let unit = q.projection.apply(&a.one());
    let gens = a.generators.iter().map(|(g, v)| (g.clone(), q.projection.apply(v))).collect();
    let alg = Algebra::new(name, a.order, &q.space, SparseBilinear::from_table(&q.space, &q.space, &q.space, table)?, unit)?.with_generators(gens);
    Ok((alg, q))
}

/// Subquotient data for transport: `S ⊂ X` and an ideal `J ⊂ S` (in `S`-coordinates), acted on by
/// `U ⊂ H/I` through `σ` and the inclusion.
pub struct TransportSpec<'a> {
    pub source: &'a YDModuleAlgebra,
    pub hopf_quotient: &'a HopfQuotient,
    pub sub_hopf: &'a SubHopf,
    pub sub: &'a SubAlgebra,
    pub ideal: &'a Subspace,
    pub name: &'a str,
}

/// The induced Yetter–Drinfeld structure on `S/J` over `U`, with its well-definedness certificates.
#[derive(Clone, Debug)]
pub struct TransportedStructure {
    pub target: Option<YDModuleAlgebra>,
    pub quotient: Quotient,
    pub certificates: CheckResult,
}

/// Transports the `H`-structure of `X` to `S/J` over `U ⊂ H/I`.
///
/// Certificates: `S` and `J` are stable under lifts of the generators of `U`; every element of `I` kills `S`
/// (checked on the basis of `I` against the basis of `S`), so the action factors through `H/I`;
/// `δ(S) ⊆ H⊗S`; after projection the coaction of `S` lands in `U ⊗ S/J` and that of `J` vanishes.
pub fn transport_action(spec: &TransportSpec) -> Result<TransportedStructure> {
    let TransportSpec { source, hopf_quotient: hq, sub_hopf: u, sub, ideal, name } = *spec;
    let h = &source.hopf;
    let x_space = source.space();
    let s_space = sub.algebra.space.clone();
    let (quot_alg, quotient) = algebra_quotient(&sub.algebra, ideal, name)?;
    let t_space = quotient.space.clone();
    let nt = t_space.dim();
    let o = h.order();
    let incl = |v: &Vect| sub.inclusion.apply(v);
    let s_axis = Axis::basis_of("s", &s_space, o);
    let j_axis = rows_axis("j", ideal.basis(), &s_space);
    // Only the action of U matters, so stability is tested against lifts of its generators.
    let u_gens: Vec<(String, Vect)> = if u.hopf.generators().is_empty() {
        (0..u.hopf.dim()).map(|i| (u.hopf.space().label(i), u.hopf.basis(i))).collect()
    } else {
        u.hopf.generators().to_vec()
    };
    let gen_axis = Axis::from_list("g", u_gens.into_iter().map(|(g, v)| (g, hq.section.apply(&u.inclusion.apply(&v)))).collect());
    let i_axis = rows_axis("i", hq.ideal.basis(), h.space());
    let outside = |v: &Vect| if sub.coords(v).is_some() { Vect::zero(x_space) } else { v.clone() };
    let mut parts = Vec::new();
    parts.push(
        Property::new(format!("transport.{name}.sub-stable"), vec![gen_axis.clone(), s_axis.clone()], x_space, |v| {
            (outside(&source.act(v[0], &incl(v[1]))), Vect::zero(x_space))
        })
        .run(&Mode::Exhaustive),
    );
    parts.push(
        Property::new(format!("transport.{name}.ideal-kills"), vec![i_axis, s_axis.clone()], x_space, |v| {
            (source.act(v[0], &incl(v[1])), Vect::zero(x_space))
        })
        .run(&Mode::Exhaustive),
    );
    let in_s = |v: &Vect| sub.coords(v).unwrap_or_else(|| Vect::zero(&s_space));
    parts.push(
        Property::new(format!("transport.{name}.ideal-stable"), vec![gen_axis, j_axis.clone()], &s_space, |v| {
            let w = in_s(&source.act(v[0], &incl(v[1])));
            (ideal.reduce(&w), Vect::zero(&s_space))
        })
        .run(&Mode::Exhaustive),
    );
    // Projected coaction: δ(s) ↦ (coords_U ∘ π_I ⊗ π_J ∘ coords_S).
    let hb = u.hopf.dim();
    let ut = Space::tensor(u.hopf.space(), &t_space);
    let coact_proj = |v: &Vect| -> std::result::Result<Vect, Vect> {
        let mut by_s: BTreeMap<usize, Vec<(usize, Cyclotomic)>> = Default::default();
        for (k, c) in source.coact(v).terms() {
            let (g, xi) = split(*k, source.dim());
            by_s.entry(g).or_default().push((xi, c.clone()));
        }
        let mut acc = Accumulator::new(ut.id());
        for (g, terms) in by_s {
            let xv = Vect::from_terms(x_space.id(), terms);
            let sv = sub.coords(&xv).ok_or_else(|| xv.clone())?;
            let tv = quotient.projection.apply(&sv);
            if tv.is_zero() {
                continue;
            }
            let hg = hq.projection.image(g);
            let ug = u.coords.coords(&hg).ok_or_else(|| hg.clone().into_owned())?;
            acc.add(&outer(&ug, &tv, ut.id(), nt));
        }
        Ok(acc.finish())
    };
    parts.push(
        Property::new(format!("transport.{name}.coaction-lands"), vec![s_axis], &ut, |v| match coact_proj(&incl(v[0])) {
            Ok(_) => (Vect::zero(&ut), Vect::zero(&ut)),
            Err(_) => (Vect::basis(&ut, 0, o), Vect::zero(&ut)),
        })
        .run(&Mode::Exhaustive),
    );
    parts.push(
        Property::new(format!("transport.{name}.coaction-ideal"), vec![j_axis], &ut, |v| {
            (coact_proj(&incl(v[0])).unwrap_or_else(|_| Vect::basis(&ut, 0, o)), Vect::zero(&ut))
        })
        .run(&Mode::Exhaustive),
    );
    let certificates = CheckResult::all(format!("transport.{name}"), parts);
    if !certificates.passed() {
        return Ok(TransportedStructure { target: None, quotient, certificates });
    }
    let lift_u = |i: usize| hq.section.apply(&u.inclusion.image(i));
    let rep = |t: usize| incl(&quotient.section.image(t));
    let down = |v: &Vect| quotient.projection.apply(&in_s(v));
    let mut act_table = Vec::with_capacity(hb * nt);
    for i in 0..hb {
        let l = lift_u(i);
        for t in 0..nt {
            act_table.push(down(&source.act(&l, &rep(t))));
        }
    }
    let action = SparseBilinear::from_table(u.hopf.space(), &t_space, &t_space, act_table)?;
    let coaction = SparseLinear::from_table(&t_space, &ut, (0..nt).map(|t| coact_proj(&rep(t)).expect("certified")).collect())?;
    let target = YDModuleAlgebra::new(name, u.hopf.clone(), quot_alg, action, coaction)?;
    Ok(TransportedStructure { target: Some(target), quotient, certificates })
}

/// The restriction of `y` to the span of `basis`, which must be a subalgebra stable under the
/// action and with `δ(S) ⊆ H⊗S`. The structure is returned only when the certificate passes.
pub fn restrict_yd(y: &YDModuleAlgebra, basis: Vec<(BasisLabel, Vect)>, name: &str) -> Result<(Option<YDModuleAlgebra>, CheckResult)> {
    let sub = subalgebra_on(&y.algebra, basis, name)?;
    let h = &y.hopf;
    let o = h.order();
    let s_space = sub.algebra.space.clone();
    let ns = s_space.dim();
    let hs = Space::tensor(h.space(), &s_space);
    let incl = |v: &Vect| sub.inclusion.apply(v);
    let coact_s = |v: &Vect| -> Option<Vect> {
        let mut by_h: BTreeMap<usize, Vec<(usize, Cyclotomic)>> = Default::default();
        for (g, x0, c) in y.coact_vec_terms(v) {
            by_h.entry(g).or_default().push((x0, c));
        }
        let mut acc = Accumulator::new(hs.id());
        for (g, terms) in by_h {
            let w = sub.coords(&Vect::from_terms(y.space().id(), terms))?;
            acc.add(&outer(&h.basis(g), &w, hs.id(), ns));
        }
        Some(acc.finish())
    };
    let outside = |v: &Vect| if sub.coords(v).is_some() { y.algebra.zero() } else { v.clone() };
    let cname = format!("restrict.{name}");
    let stable = Property::new(format!("{cname}.action-stable"), vec![Axis::basis_of("h", h.space(), o), Axis::basis_of("s", &s_space, o)], y.space(), |v| {
        (outside(&y.act(v[0], &incl(v[1]))), y.algebra.zero())
    })
    .run(&Mode::Exhaustive);
    let lands = Property::new(format!("{cname}.coaction-lands"), vec![Axis::basis_of("s", &s_space, o)], y.space(), |v| {
        let x = incl(v[0]);
        (if coact_s(&x).is_some() { y.algebra.zero() } else { x }, y.algebra.zero())
    })
    .run(&Mode::Exhaustive);
    let cert = CheckResult::all(cname, vec![stable, lands]);
    if !cert.passed() {
        return Ok((None, cert));
    }
    let mut act = Vec::with_capacity(h.dim() * ns);
    for i in 0..h.dim() {
        for s in 0..ns {
            act.push(sub.coords(&y.act(&h.basis(i), &incl(&Vect::basis(&s_space, s, o)))).expect("certified"));
        }
    }
    let coact = (0..ns).map(|s| coact_s(&incl(&Vect::basis(&s_space, s, o))).expect("certified")).collect();
    let out = YDModuleAlgebra::new(
        name,
        h.clone(),
        sub.algebra.clone(),
        SparseBilinear::from_table(h.space(), &s_space, &s_space, act)?,
        SparseLinear::from_table(&s_space, &hs, coact)?,
    )?;
    Ok((Some(out), cert))
}

fn certificate_error(c: &CheckResult) -> Error {
    let detail = c.witness.as_ref().map(|w| format!("{}: {} vs {}", w.detail.clone().unwrap_or_default(), w.lhs, w.rhs)).unwrap_or_default();
    Error::Certificate { name: c.name.clone(), detail }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf_axioms;
    use crate::hopf::examples::group_algebra;
    use crate::linalg::echelonize;

    #[test]
    fn zero_ideal_and_augmentation() {
        let h = group_algebra(4, 8).unwrap();
        let z = Subspace::zero(h.space());
        let q = hopf_quotient(&h, &z, "same", &[]).unwrap();
        assert_eq!(q.quotient.dim(), 4);
        let aug: Vec<Vect> = (1..4).map(|i| h.basis(i).sub(&h.basis(0))).collect();
        let i = echelonize(h.space(), &aug).unwrap();
        let q = hopf_quotient(&h, &i, "line", &[]).unwrap();
        assert_eq!(q.quotient.dim(), 1);
        assert!(check_hopf_axioms(&q.quotient, &Mode::Exhaustive).passed());
        assert!(check_projection_morphism(&q, &Mode::Exhaustive).passed());
    }

    #[test]
    fn non_hopf_ideal_is_rejected() {
        let h = group_algebra(4, 8).unwrap();
        let alg = h.algebra();
        // (g - 1) generates the augmentation ideal; (g) alone is everything and fails ε(I) = 0.
        let i = two_sided_ideal(&alg, &[h.basis(1)], &[h.basis(1)]).unwrap();
        let c = check_hopf_ideal(&h, &i, &[]).unwrap();
        assert!(c.failed());
        assert!(hopf_quotient(&h, &i, "bad", &[]).is_err());
    }

    #[test]
    fn subgroup_is_sub_hopf() {
        let h = group_algebra(4, 8).unwrap();
        let basis = vec![(BasisLabel { tuple: vec![0], name: "1".into() }, h.basis(0)), (BasisLabel { tuple: vec![2], name: "g^2".into() }, h.basis(2))];
        let (s, c) = sub_hopf(&h, basis, "sub").unwrap();
        assert!(c.passed());
        assert!(check_hopf_axioms(&s.unwrap().hopf, &Mode::Exhaustive).passed());
        let basis = vec![(BasisLabel { tuple: vec![0], name: "1".into() }, h.basis(0)), (BasisLabel { tuple: vec![1], name: "g".into() }, h.basis(1))];
        let (s, c) = sub_hopf(&h, basis, "nosub").unwrap();
        assert!(s.is_none() && c.failed());
    }
}
