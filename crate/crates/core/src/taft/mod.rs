//! The Taft algebra family and its truncations to `U_q sl(2)` and `H_q sl(2)`.

mod basis;
mod chains;
mod cqzd;
mod hq;
mod presentation;
mod smash;
mod uq;

use crate::error::Result;
use crate::hopf::{dual, DualPair, FiniteHopf, HopfData};
use crate::linalg::{BasisLabel, Space, SparseBilinear, SparseLinear, Vect};
use crate::report::CheckResult;
use crate::scalar::{render_q, HalfInt, QContext};

pub use basis::{basis_change, heisenberg_generators, HeisenbergBasisChange};
pub use chains::{chain_check, chain_factors, chain_relations_check, h2_is_cqzd, three_chain_not_braided_commutative, truly_heisenberg_chain, ChainFactors};
pub use cqzd::{center, cqzd_algebra, cqzd_check, cqzd_in_hq};
pub use hq::{action_table_check, coaction_table_check, hq_structure_check, hq_yd_check, hqsl2, HqSl2};
pub use presentation::double_presentation_check;
pub use smash::{check_closed_form_smash, closed_form_property, closed_form_smash, SmashMonomial};
pub use uq::{uq_presentation_check, uqsl2, UqSl2};

/// A structure check split into relations that hold and relations taken verbatim whose
/// failure is a known discrepancy.
#[derive(Clone, Debug)]
pub struct StructureChecks {
    pub name: String,
    pub holds: CheckResult,
    pub literal: CheckResult,
}

impl StructureChecks {
    fn new(name: String, holds: Vec<CheckResult>, literal: Vec<CheckResult>) -> Self {
        let h = CheckResult::all(format!("{name}.relations"), holds);
        let l = CheckResult::all(format!("{name}.literal"), literal);
        StructureChecks { name, holds: h, literal: l }
    }

    /// Both parts together, under the plain name.
    pub fn combined(&self) -> CheckResult {
        CheckResult::all(self.name.clone(), vec![self.holds.clone(), self.literal.clone()])
    }
}

/// Renders a monomial such as `E^1 k^3`; zero exponents are dropped and the empty monomial is `1`.
pub fn monomial_name(parts: &[(&str, i64)]) -> String {
    let s: Vec<String> = parts.iter().filter(|(_, e)| *e != 0).map(|(g, e)| format!("{g}^{e}")).collect();
    if s.is_empty() {
        "1".into()
    } else {
        s.join(" ")
    }
}

/// Taft algebra `B` with basis `E^m k^n`, its dual in the basis `F^a κ^b`, and the pairing.
#[derive(Clone, Debug)]
pub struct TaftData {
    pub p: u32,
    pub ctx: QContext,
    pub pair: DualPair,
    /// `F` and `κ` in the `F^a κ^b` basis of `B*`.
    pub f: Vect,
    pub kappa: Vect,
}

impl TaftData {
    pub fn b(&self) -> &FiniteHopf {
        &self.pair.primal
    }

    pub fn b_star(&self) -> &FiniteHopf {
        &self.pair.dual
    }

    /// Period of `k` and `κ`.
    pub fn period(&self) -> usize {
        4 * self.p as usize
    }

    /// Index of `E^m k^n` (also of `F^m κ^n` in `B*`); `n` is reduced mod `4p`.
    pub fn index(&self, m: usize, n: i64) -> usize {
        let per = self.period() as i64;
        m * self.period() + n.rem_euclid(per) as usize
    }

    /// `E^m k^n`, zero when `m ≥ p`.
    pub fn ek(&self, m: usize, n: i64) -> Vect {
        if m >= self.p as usize {
            return self.b().zero();
        }
        self.b().basis(self.index(m, n))
    }

    /// `F^a κ^b`, zero when `a ≥ p`.
    pub fn fk(&self, a: usize, b: i64) -> Vect {
        if a >= self.p as usize {
            return self.b_star().zero();
        }
        self.b_star().basis(self.index(a, b))
    }
}

/// Builds `B(p)`: `kE = qEk`, `E^p = 0`, `k^{4p} = 1`, `Δ(E) = 1⊗E + E⊗k²`, `Δ(k) = k⊗k`,
/// `S(E) = −Ek^{-2}`, `S(k) = k^{-1}`.
pub fn taft_algebra(p: u32) -> Result<TaftData> {
    let ctx = QContext::new(p)?;
    let o = ctx.order();
    let (pu, per) = (p as usize, 4 * p as usize);
    let n = pu * per;
    let idx = |m: usize, k: i64| m * per + k.rem_euclid(per as i64) as usize;
    let labels = (0..n)
        .map(|i| {
            let (m, k) = (i / per, i % per);
            BasisLabel { tuple: vec![m as i64, k as i64], name: monomial_name(&[("E", m as i64), ("k", k as i64)]) }
        })
        .collect();
    let space = Space::new("B", labels);
    let tensor = Space::tensor(&space, &space);

    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        let (m1, k1) = (i / per, (i % per) as i64);
        for j in 0..n {
            let (m2, k2) = (j / per, (j % per) as i64);
            if m1 + m2 >= pu {
                table.push(Vect::zero(&space));
            } else {
                table.push(Vect::monomial(space.id(), idx(m1 + m2, k1 + k2), ctx.q_pow(k1 * m2 as i64)));
            }
        }
    }
    let mult = SparseBilinear::from_table(&space, &space, &space, table)?;

    let comult = (0..n)
        .map(|i| {
            let (m, k) = (i / per, (i % per) as i64);
            let terms = (0..=m)
                .map(|s| (idx(s, k) * n + idx(m - s, 2 * s as i64 + k), ctx.gauss_binomial(m as i64, s as i64)))
                .collect();
            Vect::from_terms(tensor.id(), terms)
        })
        .collect();
    let counit = (0..n).map(|i| if i / per == 0 { ctx.one() } else { ctx.zero() }).collect();

    let e = Vect::basis(&space, idx(1, 0), o);
    let k = Vect::basis(&space, idx(0, 1), o);
    let mul = |x: &Vect, y: &Vect| mult.apply(x, y);
    let pow = |x: &Vect, e: usize| (0..e).fold(Vect::basis(&space, 0, o), |acc, _| mul(&acc, x));
    let minus = -ctx.one();
    // S(E) = −E k^{-2}, S^{-1}(E) = −k^{-2} E.
    let s_e = Vect::monomial(space.id(), idx(1, -2), minus.clone());
    let s_inv_e = mul(&Vect::basis(&space, idx(0, -2), o), &e).scale(&minus);
    let k_inv = Vect::basis(&space, idx(0, -1), o);
    let mut s_img = Vec::with_capacity(n);
    let mut s_inv_img = Vec::with_capacity(n);
    for i in 0..n {
        let (m, kk) = (i / per, i % per);
        // S(E^m k^n) = S(k)^n S(E)^m, likewise for the inverse.
        s_img.push(mul(&pow(&k_inv, kk), &pow(&s_e, m)));
        s_inv_img.push(mul(&pow(&k_inv, kk), &pow(&s_inv_e, m)));
    }
    let data = HopfData {
        name: "B".into(),
        order: o,
        space: space.clone(),
        mult,
        unit: Vect::basis(&space, 0, o),
        comult: SparseLinear::from_table(&space, &tensor, comult)?,
        counit,
        antipode: SparseLinear::from_table(&space, &space, s_img)?,
    };
    let b = FiniteHopf::with_antipode_inverse(data, SparseLinear::from_table(&space, &space, s_inv_img)?)?
        .with_generators(vec![("E".into(), e), ("k".into(), k)]);

    // Dual generators in the canonical dual basis.
    let bd = dual(&b);
    let qq = &ctx.q_minus_one_inverse_factor;
    let f_can = Vect::from_terms(bd.space().id(), (0..per).map(|j| (idx(1, j as i64), &ctx.q_pow(-(j as i64)) * qq)).collect());
    let kap_can = Vect::from_terms(bd.space().id(), (0..per).map(|j| (idx(0, j as i64), ctx.zeta_pow(-(j as i64)))).collect());
    let mut dual_basis = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    let mut f_pow = bd.one();
    for a in 0..pu {
        let mut v = f_pow.clone();
        for bexp in 0..per {
            dual_basis.push(v.clone());
            labels.push(BasisLabel { tuple: vec![a as i64, bexp as i64], name: monomial_name(&[("F", a as i64), ("κ", bexp as i64)]) });
            v = bd.mul(&v, &kap_can);
        }
        f_pow = bd.mul(&f_pow, &f_can);
    }
    let dspace = Space::new("B*", labels);
    let pair = DualPair::with_dual_basis(&b, "B*", &dspace, &dual_basis)?;
    let f = Vect::basis(&dspace, idx(1, 0), o);
    let kappa = Vect::basis(&dspace, idx(0, 1), o);
    let pair = DualPair::new(
        pair.primal.clone(),
        pair.dual.clone().with_generators(vec![("F".into(), f.clone()), ("κ".into(), kappa.clone())]),
        pair.pairing.clone(),
    )?;
    Ok(TaftData { p, ctx, pair, f, kappa })
}

/// Spanning set, relations and pairing values of the dual generators `F`, `κ`.
pub fn taft_dual_check(t: &TaftData) -> CheckResult {
    let ctx = &t.ctx;
    let (pu, per) = (t.p as usize, t.period());
    let bs = t.b_star();
    let mut parts = Vec::new();
    parts.push(CheckResult::fact("dual.dimension", bs.dim() == 4 * pu * pu, bs.dim().to_string(), (4 * pu * pu).to_string()));
    let kf = bs.mul(&t.kappa, &t.f);
    let fk = bs.mul(&t.f, &t.kappa).scale(&ctx.q);
    parts.push(CheckResult::fact("dual.kappa-F", kf == fk, kf.render(bs.space()), fk.render(bs.space())));
    let fp = bs.pow(&t.f, t.p);
    parts.push(CheckResult::fact("dual.F^p", fp.is_zero(), fp.render(bs.space()), "0"));
    let k4p = bs.pow(&t.kappa, 4 * t.p);
    parts.push(CheckResult::fact("dual.kappa^4p", k4p == bs.one(), k4p.render(bs.space()), "1"));
    let mut bad = None;
    'outer: for m in 0..pu {
        for n in 0..per {
            let e = t.ek(m, n as i64);
            let want_f = if m == 1 { &ctx.q_pow(-(n as i64)) * &ctx.q_minus_one_inverse_factor } else { ctx.zero() };
            let want_k = if m == 0 { ctx.q_pow_half(HalfInt::half(-(n as i64))) } else { ctx.zero() };
            let (gf, gk) = (t.pair.pair(&t.f, &e), t.pair.pair(&t.kappa, &e));
            if gf != want_f || gk != want_k {
                bad = Some((t.b().space().label(t.index(m, n as i64)), gf, want_f, gk, want_k));
                break 'outer;
            }
        }
    }
    parts.push(match bad {
        None => CheckResult::fact("dual.pairing-values", true, "", ""),
        Some((l, gf, wf, gk, wk)) => CheckResult::fact(
            "dual.pairing-values",
            false,
            format!("⟨F, {l}⟩ = {}, ⟨κ, {l}⟩ = {}", render_q(&gf), render_q(&gk)),
            format!("⟨F, {l}⟩ = {}, ⟨κ, {l}⟩ = {}", render_q(&wf), render_q(&wk)),
        ),
    });
    parts.push(t.pair.check_pairing());
    CheckResult::all(format!("taft.dual.p{}", t.p), parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf_axioms;
    use crate::report::Mode;

    #[test]
    fn taft_p2_basics() {
        let t = taft_algebra(2).unwrap();
        let b = t.b();
        assert_eq!(b.dim(), 16);
        let (e, k) = (t.ek(1, 0), t.ek(0, 1));
        assert_eq!(b.mul(&k, &e), b.mul(&e, &k).scale(&t.ctx.q));
        assert!(b.pow(&e, 2).is_zero());
        assert_eq!(b.pow(&k, 8), b.one());
        assert!(check_hopf_axioms(b, &Mode::Exhaustive).passed());
        assert!(check_hopf_axioms(t.b_star(), &Mode::Exhaustive).passed());
        let r = taft_dual_check(&t);
        assert!(r.passed(), "{r:?}");
        let want = &t.ctx.q_pow(-3) * &t.ctx.q_minus_one_inverse_factor;
        assert_eq!(t.pair.pair(&t.f, &t.ek(1, 3)), want);
        assert_eq!(t.pair.pair(&t.kappa, &k), t.ctx.zeta_pow(-1));
        assert_eq!(b.space().label(t.index(1, 3)), "E^1 k^3");
        assert_eq!(t.b_star().space().label(t.index(1, 2)), "F^1 κ^2");
    }

    #[test]
    fn coproduct_of_e_squared_p3() {
        let t = taft_algebra(3).unwrap();
        let b = t.b();
        let e = t.ek(1, 0);
        let got = b.coproduct(&b.mul(&e, &e));
        let de = b.coproduct(&e);
        assert_eq!(got, b.tensor_mul(&de, &de));
        let q2 = t.ctx.q_pow(2);
        let want = b
            .tensor(&b.one(), &t.ek(2, 0))
            .add_scaled(&b.tensor(&e, &t.ek(1, 2)), &(&t.ctx.one() + &q2))
            .add(&b.tensor(&t.ek(2, 0), &t.ek(0, 4)));
        assert_eq!(got, want);
        assert!(taft_dual_check(&t).passed());
    }
}
