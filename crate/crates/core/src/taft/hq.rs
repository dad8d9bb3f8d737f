use crate::doubles::{canonical_action, yd_structure, DrinfeldDouble, HeisenbergDouble};
use crate::error::{Error, Result};
use crate::linalg::{outer, Accumulator, BasisLabel, Quotient, Subspace, Vect};
use crate::report::{CheckResult, Mode};
use crate::scalar::{BinomialConvention, Cyclotomic, HalfInt};
use crate::truncate::{subalgebra_on, transport_action, two_sided_ideal, SubAlgebra, TransportSpec};
use crate::ydcat::{check_braided_commutative, check_yd, YDModuleAlgebra};

use super::basis::heisenberg_generators;
use super::presentation::relation;
use super::uq::UqSl2;
use super::{monomial_name, StructureChecks, TaftData};

/// `H_q sl(2)`: the subalgebra `S = ⟨z, λ, ∂⟩ ⊂ H(B*)` modulo `Λ − 1`, `Λ = κ^{2p}#k^{2p}`,
/// as a Yetter–Drinfeld `U_q sl(2)`-module algebra.
#[derive(Clone, Debug)]
pub struct HqSl2 {
    pub p: u32,
    pub sub: SubAlgebra,
    /// `z, λ, ∂` in `S`-coordinates.
    pub sub_gens: [Vect; 3],
    /// The ideal `(Λ − 1)` of `S`, in `S`-coordinates.
    pub ideal: Subspace,
    pub quotient: Quotient,
    pub yd: YDModuleAlgebra,
    pub z: Vect,
    pub lam: Vect,
    pub del: Vect,
    /// Well-definedness certificates of the transported structure.
    pub certificates: CheckResult,
}

impl HqSl2 {
    /// `z^a λ^c ∂^b` in normal form.
    pub fn monomial(&self, a: u32, c: u32, b: u32) -> Vect {
        let alg = &self.yd.algebra;
        alg.product_of(&[&alg.pow(&self.z, a), &alg.pow(&self.lam, c), &alg.pow(&self.del, b)])
    }
}

/// `z^a λ^c ∂^b` for `c < 4p` in `H(B*)`, labelled with the tuple `[a, c, b]`.
fn s_basis(t: &TaftData, hd: &HeisenbergDouble) -> Vec<(BasisLabel, Vect)> {
    let (z, lam, del) = heisenberg_generators(t, hd);
    let alg = &hd.algebra;
    let (p, per) = (t.p, 4 * t.p);
    let mut out = Vec::new();
    for a in 0..p {
        let za = alg.pow(&z, a);
        for c in 0..per {
            let zl = hd.mul(&za, &alg.pow(&lam, c));
            for b in 0..p {
                let name = monomial_name(&[("z", a as i64), ("λ", c as i64), ("∂", b as i64)]);
                out.push((BasisLabel { tuple: vec![a as i64, c as i64, b as i64], name }, hd.mul(&zl, &alg.pow(&del, b))));
            }
        }
    }
    out
}

/// `S` and its generators `z, λ, ∂` in `S`-coordinates.
fn subalgebra_s(t: &TaftData, hd: &HeisenbergDouble) -> Result<(SubAlgebra, [Vect; 3])> {
    let sub = subalgebra_on(&hd.algebra, s_basis(t, hd), "S")?;
    let (z, lam, del) = heisenberg_generators(t, hd);
    let c = |v: &Vect| sub.coords(v).ok_or_else(|| Error::Structural("generator outside S".into()));
    let gens = [c(&z)?, c(&lam)?, c(&del)?];
    Ok((sub, gens))
}

/// Builds `H_q sl(2)` from the canonical `D(B)` structure on `H(B*)` through `D̄ ⊃ U_q sl(2)`.
pub fn hqsl2(t: &TaftData, d: &DrinfeldDouble, hd: &HeisenbergDouble, u: &UqSl2) -> Result<HqSl2> {
    let parts = canonical_action(d, hd);
    let source = yd_structure(d, hd, &parts)?;
    let (sub, gens) = subalgebra_s(t, hd)?;
    let per = t.period() as i64;
    let big_lambda = hd.pure(&t.fk(0, per / 2), &t.ek(0, per / 2));
    let seed = sub.coords(&big_lambda.sub(&hd.algebra.one())).ok_or_else(|| Error::Structural("Λ outside S".into()))?;
    let ideal = two_sided_ideal(&sub.algebra, &[seed], &gens)?;
    let name = format!("Hq sl(2).p{}", t.p);
    let spec = TransportSpec { source: &source, hopf_quotient: &u.dbar, sub_hopf: &u.sub, sub: &sub, ideal: &ideal, name: &name };
    let tr = transport_action(&spec)?;
    let yd = tr.target.ok_or_else(|| Error::Certificate { name: tr.certificates.name.clone(), detail: format!("{:?}", tr.certificates.witness) })?;
    let q = &tr.quotient;
    let down = |v: &Vect| q.projection.apply(v);
    let [z, lam, del] = gens.clone().map(|g| down(&g));
    let mut yd = yd;
    yd.algebra = yd.algebra.clone().with_generators(vec![("z".into(), z.clone()), ("λ".into(), lam.clone()), ("∂".into(), del.clone())]);
    Ok(HqSl2 { p: t.p, sub, sub_gens: gens, ideal, quotient: tr.quotient, yd, z, lam, del, certificates: tr.certificates })
}

/// Dimension, transport certificates, the `H(B*)` relations that survive in `H_q sl(2)`
/// (`z^p = ∂^p = 0`, `λz = zλ`, `λ∂ = ∂λ`, `∂z = (q−q⁻¹) + q⁻²z∂`). The literal part holds
/// `λ^{4p} = 1` and the quotient of `S` by `λ^{2p} − 1`, whose dimension should be `2p³`.
pub fn hq_structure_check(t: &TaftData, h: &HqSl2) -> Result<StructureChecks> {
    let ctx = &t.ctx;
    let pu = t.p as usize;
    let alg = &h.yd.algebra;
    let sp = &alg.space;
    let name = format!("hqsl2.structure.p{}", t.p);
    let mut parts = vec![h.certificates.clone()];
    let want = 2 * pu.pow(3);
    parts.push(CheckResult::fact(format!("{name}.dimension"), alg.dim() == want, alg.dim().to_string(), want.to_string()));
    let m = |x: &Vect, y: &Vect| alg.mul(x, y);
    let (z, lam, del) = (&h.z, &h.lam, &h.del);
    let mut rel = |n: &str, l: Vect, r: Vect| parts.push(relation(format!("{name}.{n}"), sp, &l, &r));
    rel("z^p", alg.pow(z, t.p), alg.zero());
    rel("del^p", alg.pow(del, t.p), alg.zero());
    rel("lambda-z", m(lam, z), m(z, lam));
    rel("lambda-del", m(lam, del), m(del, lam));
    rel("del-z", m(del, z), alg.one().scale(&ctx.q_minus_q_inv).add(&m(z, del).scale(&ctx.q_pow(-2))));
    let mut literal = vec![relation(format!("{name}.lambda^4p"), sp, &alg.pow(lam, 4 * t.p), &alg.one())];
    // The quotient by λ^{2p} − 1 taken literally inside S.
    let (sub, gens) = (&h.sub, &h.sub_gens);
    let l2p = sub.algebra.pow(&gens[1], 2 * t.p).sub(&sub.algebra.one());
    let lit = two_sided_ideal(&sub.algebra, &[l2p], gens)?;
    let qdim = sub.algebra.dim() - lit.dim();
    literal.push(CheckResult::fact(format!("{name}.literal-quotient-dimension"), qdim == want, qdim.to_string(), want.to_string()));
    Ok(StructureChecks::new(name, parts, literal))
}

fn table_row(name: String, space: &crate::linalg::Space, got: &Vect, want: &Vect) -> CheckResult {
    relation(name, space, got, want)
}

/// The nine action formulas on `λ^n` (`n < 2p`), `z^n`, `∂^n` (`n < p`), with `K = k²`:
/// `E▷λ^n = q^{−n/2}[n/2]λ^n z`, `K▷λ^n = q^{−n}λ^n`, `F▷λ^n = −q^{n/2}[n/2]λ^n ∂`,
/// `E▷z^n = −q^n[n]z^{n+1}`, `K▷z^n = q^{2n}z^n`, `F▷z^n = [n]q^{1−n}z^{n−1}`,
/// `E▷∂^n = q^{1−n}[n]∂^{n−1}`, `K▷∂^n = q^{−2n}∂^n`, `F▷∂^n = −q^n[n]∂^{n+1}`.
pub fn action_table_check(t: &TaftData, u: &UqSl2, h: &HqSl2) -> CheckResult {
    let ctx = &t.ctx;
    let y = &h.yd;
    let alg = &y.algebra;
    let sp = &alg.space;
    let (e, f, k) = (u.e(), u.f(), u.k());
    let name = format!("hqsl2.action-table.p{}", t.p);
    let pw = |x: &Vect, n: i64| if n < 0 { alg.zero() } else { alg.pow(x, n as u32) };
    let mut parts = Vec::new();
    let row = |parts: &mut Vec<CheckResult>, label: String, g: &Vect, x: &Vect, want: Vect| {
        parts.push(table_row(format!("{name}.{label}"), sp, &y.act(g, x), &want));
    };
    let half = |n: i64| HalfInt::half(n);
    for n in 0..2 * t.p as i64 {
        let ln = pw(&h.lam, n);
        let br = ctx.q_number(half(n));
        row(&mut parts, format!("E|>lambda^{n}"), &e, &ln, alg.mul(&ln, &h.z).scale(&(&ctx.q_pow_half(half(-n)) * &br)));
        row(&mut parts, format!("K|>lambda^{n}"), &k, &ln, ln.scale(&ctx.q_pow(-n)));
        row(&mut parts, format!("F|>lambda^{n}"), &f, &ln, alg.mul(&ln, &h.del).scale(&-(&ctx.q_pow_half(half(n)) * &br)));
    }
    for n in 0..t.p as i64 {
        let zn = pw(&h.z, n);
        let qn = ctx.q_int(n);
        row(&mut parts, format!("E|>z^{n}"), &e, &zn, pw(&h.z, n + 1).scale(&-(&ctx.q_pow(n) * &qn)));
        row(&mut parts, format!("K|>z^{n}"), &k, &zn, zn.scale(&ctx.q_pow(2 * n)));
        row(&mut parts, format!("F|>z^{n}"), &f, &zn, pw(&h.z, n - 1).scale(&(&qn * &ctx.q_pow(1 - n))));
        let dn = pw(&h.del, n);
        row(&mut parts, format!("E|>del^{n}"), &e, &dn, pw(&h.del, n - 1).scale(&(&ctx.q_pow(1 - n) * &qn)));
        row(&mut parts, format!("K|>del^{n}"), &k, &dn, dn.scale(&ctx.q_pow(-2 * n)));
        row(&mut parts, format!("F|>del^{n}"), &f, &dn, pw(&h.del, n + 1).scale(&-(&ctx.q_pow(n) * &qn)));
    }
    CheckResult::all(name, parts)
}

/// `δ(λ) = 1⊗λ`,
/// `δ(z^m) = Σ_s (−1)^s q^{s(1−m)}(q−q⁻¹)^s [m,s] E^s K^{−m} ⊗ z^{m−s}`,
/// `δ(∂^m) = Σ_s q^{s(m−s)}(q−q⁻¹)^s [m,s] F^s K^{−(m−s)} ⊗ ∂^{m−s}`, for all `m < p`.
pub fn coaction_table_check(t: &TaftData, u: &UqSl2, h: &HqSl2, conv: BinomialConvention) -> CheckResult {
    let ctx = &t.ctx;
    let y = &h.yd;
    let alg = &y.algebra;
    let cs = y.coaction_space();
    let nh = alg.dim();
    let uh = &u.hopf;
    let name = format!("hqsl2.coaction-table.p{}", t.p);
    let tens = |a: &Vect, b: &Vect| outer(a, b, cs.id(), nh);
    let mut parts = vec![relation(format!("{name}.lambda"), cs, &y.coact(&h.lam), &tens(&uh.one(), &h.lam))];
    let c_pow = |s: i64| (0..s).fold(ctx.one(), |acc: Cyclotomic, _| &acc * &ctx.q_minus_q_inv);
    for m in 0..t.p as i64 {
        let mut zs = Accumulator::new(cs.id());
        let mut ds = Accumulator::new(cs.id());
        for s in 0..=m {
            let bin = &ctx.binomial(conv, m, s) * &c_pow(s);
            let sign = if s % 2 == 0 { ctx.one() } else { -ctx.one() };
            let cz = &(&sign * &ctx.q_pow(s * (1 - m))) * &bin;
            let ez = uh.mul(&u.fek(0, s as usize, 0), &u.fek(0, 0, -m));
            zs.add_scaled(&tens(&ez, &alg.pow(&h.z, (m - s) as u32)), &cz);
            let cd = &ctx.q_pow(s * (m - s)) * &bin;
            let fd = uh.mul(&u.fek(s as usize, 0, 0), &u.fek(0, 0, -(m - s)));
            ds.add_scaled(&tens(&fd, &alg.pow(&h.del, (m - s) as u32)), &cd);
        }
        parts.push(relation(format!("{name}.z^{m}"), cs, &y.coact(&alg.pow(&h.z, m as u32)), &zs.finish()));
        parts.push(relation(format!("{name}.del^{m}"), cs, &y.coact(&alg.pow(&h.del, m as u32)), &ds.finish()));
    }
    CheckResult::all(name, parts)
}

/// `H_q sl(2)` is a braided commutative Yetter–Drinfeld module algebra.
pub fn hq_yd_check(h: &HqSl2, mode: &Mode) -> CheckResult {
    let yd = check_yd(&h.yd, mode);
    let bc = check_braided_commutative(&h.yd, mode);
    CheckResult::all(format!("hqsl2.yd.p{}", h.p), vec![yd, bc])
}
