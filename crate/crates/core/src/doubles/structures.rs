use crate::error::Result;
use crate::hopf::{Algebra, FiniteHopf};
use crate::linalg::{outer, split, Accumulator, Space, SparseBilinear, SparseLinear, Vect};
use crate::report::{Axis, CheckResult, Mode, Property};
use crate::ydcat::{chain_product, BraidedProductAlgebra, YDModuleAlgebra};

use super::{DrinfeldDouble, HeisenbergDouble, MATERIALIZE_LIMIT};

/// `δ(β#b) = (β″⊗b′) ⊗ (β′#b″)`, from `H(B*)` to `D(B) ⊗ H(B*)`.
pub fn canonical_coaction(d: &DrinfeldDouble, hd: &HeisenbergDouble) -> SparseLinear {
    let (b, bs) = (d.b(), d.b_star());
    let db = b.dim();
    let nh = hd.dim();
    let cod = Space::tensor(d.space(), hd.space());
    let images = (0..nh)
        .map(|k| {
            let (beta, bb) = split(k, db);
            let mut acc = Accumulator::new(cod.id());
            for (b1, b2, c) in b.coproduct_terms(bb) {
                for (beta1, beta2, e) in bs.coproduct_terms(beta) {
                    acc.push((beta2 * db + b1) * nh + beta1 * db + b2, &c * &e);
                }
            }
            acc.finish()
        })
        .collect();
    SparseLinear::from_table(hd.space(), &cod, images).expect("shapes match")
}

/// The canonical action and its two factors.
#[derive(Clone, Debug)]
pub struct ActionParts {
    /// `(ε⊗m)▷(α#a) = (m′⇀α) # m″aS(m‴)`, as `B × H(B*) → H(B*)`.
    pub primal: SparseBilinear,
    /// `(μ⊗1)▷(α#a) = μ‴αS*⁻¹(μ″) # (a↼S*⁻¹(μ′))`, as `B* × H(B*) → H(B*)`.
    pub dual: SparseBilinear,
    /// `(μ⊗m)▷A = (μ⊗1)▷((ε⊗m)▷A)`.
    pub full: SparseBilinear,
}

/// Assembles the `D(B)`-action on `H(B*)` from the `B` and `B^{*cop}` factors.
pub fn canonical_action(d: &DrinfeldDouble, hd: &HeisenbergDouble) -> ActionParts {
    let pair = d.pair.clone();
    let (b, bs) = (pair.primal.clone(), pair.dual.clone());
    let db = b.dim();
    let hs = hd.space().clone();
    let sid = hs.id();
    let (p1, b1, bs1) = (pair.clone(), b.clone(), bs.clone());
    let primal = SparseBilinear::from_rule(b.space(), &hs, &hs, move |m, k| {
        let (alpha, a) = split(k, db);
        let mut acc = Accumulator::new(sid);
        let av = b1.basis(a);
        for (m1, m2, m3, c) in b1.coproduct2_terms(m) {
            let l = p1.lhd(&b1.basis(m1), &bs1.basis(alpha));
            if l.is_zero() {
                continue;
            }
            let r = b1.product_of(&[&b1.basis(m2), &av, &b1.s(&b1.basis(m3))]);
            acc.add_scaled(&outer(&l, &r, sid, db), &c);
        }
        acc.finish()
    })
    .materialize();
    let (p2, b2, bs2) = (pair.clone(), b.clone(), bs.clone());
    let dual = SparseBilinear::from_rule(bs.space(), &hs, &hs, move |mu, k| {
        let (alpha, a) = split(k, db);
        let mut acc = Accumulator::new(sid);
        let (alv, av) = (bs2.basis(alpha), b2.basis(a));
        for (mu1, mu2, mu3, c) in bs2.coproduct2_terms(mu) {
            let r = p2.dual_rhd(&av, &bs2.s_inv(&bs2.basis(mu1)));
            if r.is_zero() {
                continue;
            }
            let l = bs2.product_of(&[&bs2.basis(mu3), &alv, &bs2.s_inv(&bs2.basis(mu2))]);
            acc.add_scaled(&outer(&l, &r, sid, db), &c);
        }
        acc.finish()
    })
    .materialize();
    let (pr, du) = (primal.clone(), dual.clone());
    let o = d.order();
    let full = SparseBilinear::from_rule(d.space(), &hs, &hs, move |i, k| {
        let (mu, m) = split(i, db);
        let inner = pr.basis(m, k);
        du.apply(&Vect::basis_in(bs.space().id(), mu, o), &inner)
    });
    let full = if d.dim() * hd.dim() <= MATERIALIZE_LIMIT { full.materialize() } else { full };
    ActionParts { primal, dual, full }
}

/// The composite action against the one-line formula
/// `(μ⊗m)▷(α#a) = μ‴(m′⇀α)S*⁻¹(μ″) # ((m″aS(m‴))↼S*⁻¹(μ′))`.
pub fn check_action_formula(d: &DrinfeldDouble, hd: &HeisenbergDouble, parts: &ActionParts, mode: &Mode) -> CheckResult {
    let (pair, b, bs) = (&d.pair, d.b(), d.b_star());
    let db = b.dim();
    let sid = hd.space().id();
    let o = d.order();
    let direct = |i: usize, k: usize| {
        let (mu, m) = split(i, db);
        let (alpha, a) = split(k, db);
        let mut acc = Accumulator::new(sid);
        let mu3 = bs.coproduct2_terms(mu);
        for (m1, m2, m3, c) in b.coproduct2_terms(m) {
            let moved = pair.lhd(&b.basis(m1), &bs.basis(alpha));
            if moved.is_zero() {
                continue;
            }
            let right = b.product_of(&[&b.basis(m2), &b.basis(a), &b.s(&b.basis(m3))]);
            for (n1, n2, n3, e) in &mu3 {
                let l = bs.product_of(&[&bs.basis(*n3), &moved, &bs.s_inv(&bs.basis(*n2))]);
                let r = pair.dual_rhd(&right, &bs.s_inv(&bs.basis(*n1)));
                acc.add_scaled(&outer(&l, &r, sid, db), &(&c * e));
            }
        }
        acc.finish()
    };
    let r = Property::new(
        "the-action",
        vec![Axis::basis_of("M", d.space(), o), Axis::basis_of("A", hd.space(), o)],
        hd.space(),
        |v| {
            let (i, k) = (v[0].terms()[0].0, v[1].terms()[0].0);
            (parts.full.basis(i, k).into_owned(), direct(i, k))
        },
    )
    .run(mode);
    r
}

/// `(ε⊗m)▷((μ⊗1)▷A) = ((ε⊗m)(μ⊗1))▷A` over basis triples `(μ, m, A)`.
pub fn check_to_show_action(d: &DrinfeldDouble, hd: &HeisenbergDouble, parts: &ActionParts, mode: &Mode) -> CheckResult {
    let o = d.order();
    let r = Property::new(
        "to-show-action",
        vec![
            Axis::basis_of("μ", d.b_star().space(), o),
            Axis::basis_of("m", d.b().space(), o),
            Axis::basis_of("A", hd.space(), o),
        ],
        hd.space(),
        |v| {
            let lhs = parts.primal.apply(v[1], &parts.dual.apply(v[0], v[2]));
            let prod = d.hopf.mul(&d.from_primal(v[1]), &d.from_dual(v[0]));
            (lhs, parts.full.apply(&prod, v[2]))
        },
    )
    .run(mode);
    r
}

/// `(ε⊗(a↼S*⁻¹(μ″)))(μ′⊗1) = μ″⊗(S*⁻¹(μ′)⇀a)` over basis pairs.
pub fn check_double_identity(d: &DrinfeldDouble) -> CheckResult {
    check_double_identity_with(d, d.b_star().antipode_inverse())
}

/// The same identity with `S*⁻¹` replaced by `s_inv`.
pub fn check_double_identity_with(d: &DrinfeldDouble, s_inv: &SparseLinear) -> CheckResult {
    let (pair, b, bs) = (&d.pair, d.b(), d.b_star());
    let o = d.order();
    let sid = d.space().id();
    let r = Property::new(
        "double-identity",
        vec![Axis::basis_of("μ", bs.space(), o), Axis::basis_of("a", b.space(), o)],
        d.space(),
        |v| {
            let (mu, a) = (v[0].terms()[0].0, v[1]);
            let (mut l, mut r) = (Accumulator::new(sid), Accumulator::new(sid));
            for (m1, m2, c) in bs.coproduct_terms(mu) {
                let left = pair.dual_rhd(a, &s_inv.image(m2));
                l.add_scaled(&d.hopf.mul(&d.from_primal(&left), &d.from_dual(&bs.basis(m1))), &c);
                let right = pair.dual_lhd(&s_inv.image(m1), a);
                r.add_scaled(&d.pure(&bs.basis(m2), &right), &c);
            }
            (l.finish(), r.finish())
        },
    )
    .run(&Mode::Exhaustive);
    r
}

/// `H(B*)` with the canonical action and coaction.
pub fn yd_structure(d: &DrinfeldDouble, hd: &HeisenbergDouble, parts: &ActionParts) -> Result<YDModuleAlgebra> {
    YDModuleAlgebra::new(hd.algebra.name.clone(), d.hopf.clone(), hd.algebra.clone(), parts.full.clone(), canonical_coaction(d, hd))
}

/// `B^{*cop}` and `B` as Yetter–Drinfeld `D(B)`-module algebras.
pub fn factor_structures(d: &DrinfeldDouble) -> Result<(YDModuleAlgebra, YDModuleAlgebra)> {
    let (pair, b, bs) = (&d.pair, d.b(), d.b_star());
    let db = b.dim();
    let (ds, dd) = (bs.space().clone(), d.space().clone());
    let dual_act: Vec<Vect> = (0..d.dim() * bs.dim())
        .map(|k| {
            let (i, beta) = split(k, bs.dim());
            let (mu, m) = split(i, db);
            let moved = pair.lhd(&b.basis(m), &bs.basis(beta));
            let mut acc = Accumulator::new(ds.id());
            for (mu1, mu2, c) in bs.coproduct_terms(mu) {
                acc.add_scaled(&bs.product_of(&[&bs.basis(mu2), &moved, &bs.s_inv(&bs.basis(mu1))]), &c);
            }
            acc.finish()
        })
        .collect();
    let prim_act: Vec<Vect> = (0..d.dim() * db)
        .map(|k| {
            let (i, x) = split(k, db);
            let (mu, m) = split(i, db);
            let mut acc = Accumulator::new(b.space().id());
            for (m1, m2, c) in b.coproduct_terms(m) {
                acc.add_scaled(&b.product_of(&[&b.basis(m1), &b.basis(x), &b.s(&b.basis(m2))]), &c);
            }
            pair.dual_rhd(&acc.finish(), &bs.s_inv(&bs.basis(mu)))
        })
        .collect();
    let co_d = Space::tensor(&dd, &ds);
    let dual_coact = (0..bs.dim())
        .map(|beta| {
            let mut acc = Accumulator::new(co_d.id());
            for (b1, b2, c) in bs.coproduct_terms(beta) {
                acc.push((b2 * db) * bs.dim() + b1, c);
            }
            acc.finish()
        })
        .collect();
    let co_p = Space::tensor(&dd, b.space());
    let prim_coact = (0..db)
        .map(|x| {
            let mut acc = Accumulator::new(co_p.id());
            for (x1, x2, c) in b.coproduct_terms(x) {
                acc.push(x1 * db + x2, c);
            }
            acc.finish()
        })
        .collect();
    let dual_alg = named_algebra(bs, &format!("{}cop", bs.name()));
    let prim_alg = named_algebra(b, b.name());
    let x = YDModuleAlgebra::new(
        dual_alg.name.clone(),
        d.hopf.clone(),
        dual_alg,
        SparseBilinear::from_table(&dd, &ds, &ds, dual_act)?,
        SparseLinear::from_table(&ds, &co_d, dual_coact)?,
    )?;
    let y = YDModuleAlgebra::new(
        prim_alg.name.clone(),
        d.hopf.clone(),
        prim_alg,
        SparseBilinear::from_table(&dd, b.space(), b.space(), prim_act)?,
        SparseLinear::from_table(b.space(), &co_p, prim_coact)?,
    )?;
    Ok((x, y))
}

fn named_algebra(h: &FiniteHopf, name: &str) -> Algebra {
    let mut a = h.algebra();
    a.name = name.to_string();
    a
}

/// Which factor type sits in position 1 of a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainStart {
    Dual,
    Primal,
}

impl ChainStart {
    /// Whether the zero-based position `i` carries a `B^{*cop}` factor.
    pub fn is_dual(self, i: usize) -> bool {
        (i % 2 == 0) == (self == ChainStart::Dual)
    }
}

/// The alternating chain of `n` factors `B^{*cop}` and `B`.
pub fn heisenberg_chain(d: &DrinfeldDouble, n: usize, start: ChainStart) -> Result<BraidedProductAlgebra> {
    let (x, y) = factor_structures(d)?;
    let factors: Vec<YDModuleAlgebra> = (0..n).map(|i| if start.is_dual(i) { x.clone() } else { y.clone() }).collect();
    chain_product(&factors)
}

/// The relation families of an alternating chain, checked over factor basis pairs:
/// `b[P]β[Q] = (b′⇀β)[Q]b″[P]` for all positions, and for same-type factors with `P ≥ Q`
/// `α[P]β[Q] = (α‴βS*⁻¹(α″))[Q]α′[P]`, `a[P]b[Q] = (a′bS(a″))[Q]a‴[P]`, together with the inverse
/// forms `β[P]α[Q] = α′[Q](S*(α″)βα‴)[P]`, `b[P]a[Q] = a‴[Q](S⁻¹(a″)ba′)[P]` for `P ≤ Q`.
/// A `B^{*cop}` factor left of or right of a `B` factor obeys `x[P]y[Q] = (x₍₋₁₎▷y)[Q]x₍₀₎[P]`.
pub fn heisenberg_chain_relations(d: &DrinfeldDouble, chain: &BraidedProductAlgebra, start: ChainStart, mode: &Mode) -> CheckResult {
    let (pair, b, bs) = (&d.pair, d.b(), d.b_star());
    let o = d.order();
    let n = chain.factors.len();
    let sp = chain.yd.space();
    let e = |i: usize, v: &Vect| chain.embed(i, v);
    let mul = |x: &Vect, y: &Vect| chain.yd.mul(x, y);
    let mut parts = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let (fp, fq) = (&chain.factors[p], &chain.factors[q]);
            let axes = vec![Axis::basis_of("x", fp.space(), o), Axis::basis_of("y", fq.space(), o)];
            let tag = |s: &str| format!("chain.{s}.{}-{}", p + 1, q + 1);
            match (start.is_dual(p), start.is_dual(q)) {
                (false, true) => parts.push(
                    Property::new(tag("mixed"), axes, sp, |v| {
                        let (x, y) = (v[0].terms()[0].0, v[1]);
                        let mut acc = Accumulator::new(sp.id());
                        for (x1, x2, c) in b.coproduct_terms(x) {
                            acc.add_scaled(&mul(&e(q, &pair.lhd(&b.basis(x1), y)), &e(p, &b.basis(x2))), &c);
                        }
                        (mul(&e(p, v[0]), &e(q, y)), acc.finish())
                    })
                    .run(mode),
                ),
                (true, false) => parts.push(
                    Property::new(tag("cross"), axes, sp, |v| {
                        let mut acc = Accumulator::new(sp.id());
                        for (g, x0, c) in fp.coact_vec_terms(v[0]) {
                            let gy = fq.act(&d.hopf.basis(g), v[1]);
                            acc.add_scaled(&mul(&e(q, &gy), &e(p, &fp.algebra.basis(x0))), &c);
                        }
                        (mul(&e(p, v[0]), &e(q, v[1])), acc.finish())
                    })
                    .run(mode),
                ),
                (true, true) => {
                    if p >= q {
                        parts.push(
                            Property::new(tag("dual"), axes.clone(), sp, |v| {
                                let (x, y) = (v[0].terms()[0].0, v[1]);
                                let mut acc = Accumulator::new(sp.id());
                                for (a1, a2, a3, c) in bs.coproduct2_terms(x) {
                                    let w = bs.product_of(&[&bs.basis(a3), y, &bs.s_inv(&bs.basis(a2))]);
                                    acc.add_scaled(&mul(&e(q, &w), &e(p, &bs.basis(a1))), &c);
                                }
                                (mul(&e(p, v[0]), &e(q, y)), acc.finish())
                            })
                            .run(mode),
                        );
                    }
                    if p <= q {
                        parts.push(
                            Property::new(tag("dual-inverse"), axes, sp, |v| {
                                let (y, x) = (v[0], v[1].terms()[0].0);
                                let mut acc = Accumulator::new(sp.id());
                                for (a1, a2, a3, c) in bs.coproduct2_terms(x) {
                                    let w = bs.product_of(&[&bs.s(&bs.basis(a2)), y, &bs.basis(a3)]);
                                    acc.add_scaled(&mul(&e(q, &bs.basis(a1)), &e(p, &w)), &c);
                                }
                                (mul(&e(p, y), &e(q, v[1])), acc.finish())
                            })
                            .run(mode),
                        );
                    }
                }
                (false, false) => {
                    if p >= q {
                        parts.push(
                            Property::new(tag("primal"), axes.clone(), sp, |v| {
                                let (x, y) = (v[0].terms()[0].0, v[1]);
                                let mut acc = Accumulator::new(sp.id());
                                for (a1, a2, a3, c) in b.coproduct2_terms(x) {
                                    let w = b.product_of(&[&b.basis(a1), y, &b.s(&b.basis(a2))]);
                                    acc.add_scaled(&mul(&e(q, &w), &e(p, &b.basis(a3))), &c);
                                }
                                (mul(&e(p, v[0]), &e(q, y)), acc.finish())
                            })
                            .run(mode),
                        );
                    }
                    if p <= q {
                        parts.push(
                            Property::new(tag("primal-inverse"), axes, sp, |v| {
                                let (y, x) = (v[0], v[1].terms()[0].0);
                                let mut acc = Accumulator::new(sp.id());
                                for (a1, a2, a3, c) in b.coproduct2_terms(x) {
                                    let w = b.product_of(&[&b.s_inv(&b.basis(a2)), y, &b.basis(a1)]);
                                    acc.add_scaled(&mul(&e(q, &b.basis(a3)), &e(p, &w)), &c);
                                }
                                (mul(&e(p, y), &e(q, v[1])), acc.finish())
                            })
                            .run(mode),
                        );
                    }
                }
            }
        }
    }
    CheckResult::all(format!("chain-relations.{}", chain.yd.name), parts)
}
