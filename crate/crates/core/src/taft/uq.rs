use crate::doubles::DrinfeldDouble;
use crate::error::{Error, Result};
use crate::hopf::FiniteHopf;
use crate::linalg::{BasisLabel, Vect};
use crate::report::CheckResult;
use crate::truncate::{hopf_quotient, sub_hopf, two_sided_ideal, HopfQuotient, SubHopf};

use super::presentation::Rel;
use super::{monomial_name, TaftData};

/// `U_q sl(2)` inside `D̄ = D(B)/(κk − 1)`.
#[derive(Clone, Debug)]
pub struct UqSl2 {
    pub p: u32,
    pub dbar: HopfQuotient,
    pub sub: SubHopf,
    /// The Hopf algebra on the basis `F^ℓ E^m K^n`, with generators `E`, `F`, `K`.
    pub hopf: FiniteHopf,
}

impl UqSl2 {
    /// Index of `F^ℓ E^m K^n` (`n` taken mod `2p`).
    pub fn index(&self, l: usize, m: usize, n: i64) -> usize {
        let (p, per) = (self.p as usize, 2 * self.p as i64);
        (l * p + m) * per as usize + n.rem_euclid(per) as usize
    }

    /// `F^ℓ E^m K^n`, zero when a nilpotent exponent reaches `p`.
    pub fn fek(&self, l: usize, m: usize, n: i64) -> Vect {
        if l >= self.p as usize || m >= self.p as usize {
            return self.hopf.zero();
        }
        self.hopf.basis(self.index(l, m, n))
    }

    pub fn e(&self) -> Vect {
        self.fek(0, 1, 0)
    }

    pub fn f(&self) -> Vect {
        self.fek(1, 0, 0)
    }

    pub fn k(&self) -> Vect {
        self.fek(0, 0, 1)
    }
}

/// Builds `D̄` and its subalgebra spanned by `F^ℓ E^m k^{2n}`; the certificate collects the
/// Hopf-ideal test, the sub-Hopf closure, the dimension `2p³`, and the presentation.
pub fn uqsl2(t: &TaftData, d: &DrinfeldDouble) -> Result<(UqSl2, CheckResult)> {
    let h = &d.hopf;
    let (p, pu) = (t.p, t.p as usize);
    let x = d.pure(&t.kappa, &t.ek(0, 1));
    let seed = x.sub(&h.one());
    let gens: Vec<Vect> = h.generators().iter().map(|(_, v)| v.clone()).collect();
    let seeds: Vec<Vect> = (0..h.dim()).map(|i| h.mul(&seed, &h.basis(i))).collect();
    let ideal = two_sided_ideal(&h.algebra(), &seeds, &gens)?;
    let dbar = hopf_quotient(h, &ideal, "D̄(B)", &[("kappa k".into(), x)])?;
    let pi = |v: &Vect| dbar.projection.apply(v);
    let mut basis = Vec::new();
    for l in 0..pu {
        for m in 0..pu {
            for n in 0..2 * pu {
                let name = monomial_name(&[("F", l as i64), ("E", m as i64), ("K", n as i64)]);
                let v = pi(&d.pure(&t.fk(l, 0), &t.ek(m, 2 * n as i64)));
                basis.push((BasisLabel { tuple: vec![l as i64, m as i64, n as i64], name }, v));
            }
        }
    }
    let (sub, closure) = sub_hopf(&dbar.quotient, basis, "Uq sl(2)")?;
    let sub = sub.ok_or_else(|| Error::Certificate { name: closure.name.clone(), detail: "span of F^l E^m k^2n is not a sub-Hopf algebra".into() })?;
    let mut u = UqSl2 { p, dbar: dbar.clone(), sub: sub.clone(), hopf: sub.hopf.clone() };
    let gens = vec![("E".to_string(), u.e()), ("F".to_string(), u.f()), ("K".to_string(), u.k())];
    u.hopf = u.hopf.clone().with_generators(gens);
    u.sub.hopf = u.hopf.clone();
    let dim = CheckResult::fact(format!("uqsl2.dimension.p{p}"), u.hopf.dim() == 2 * pu.pow(3), u.hopf.dim().to_string(), (2 * pu.pow(3)).to_string());
    let pres = uq_presentation_check(t, &u);
    let cert = CheckResult::all(format!("uqsl2.p{p}"), vec![dbar.certificate.clone(), closure, dim, pres]);
    Ok((u, cert))
}

/// `KEK⁻¹ = q²E`, `KFK⁻¹ = q⁻²F`, `[E,F] = (K−K⁻¹)/(q−q⁻¹)`, `E^p = F^p = 0`, `K^{2p} = 1`, and
/// `Δ(E) = E⊗K + 1⊗E`, `Δ(K) = K⊗K`, `Δ(F) = F⊗1 + K⁻¹⊗F`, `ε`, `S(E) = −EK⁻¹`, `S(K) = K⁻¹`,
/// `S(F) = −KF`.
pub fn uq_presentation_check(t: &TaftData, u: &UqSl2) -> CheckResult {
    let h = &u.hopf;
    let ctx = &t.ctx;
    let (e, f, k) = (u.e(), u.f(), u.k());
    let k_inv = u.fek(0, 0, -1);
    let one = h.one();
    let m = |xs: &[&Vect]| h.product_of(xs);
    let mut r = Rel::new(h, format!("presentation.uqsl2.p{}", t.p));
    r.eq("KEK^-1", &m(&[&k, &e, &k_inv]), &e.scale(&ctx.q_pow(2)));
    r.eq("KFK^-1", &m(&[&k, &f, &k_inv]), &f.scale(&ctx.q_pow(-2)));
    r.eq("[E,F]", &h.commutator(&e, &f), &k.sub(&k_inv).scale(&ctx.q_minus_one_inverse_factor));
    r.eq("E^p", &h.pow(&e, t.p), &h.zero());
    r.eq("F^p", &h.pow(&f, t.p), &h.zero());
    r.eq("K^2p", &h.pow(&k, 2 * t.p), &one);
    r.eq2("Delta(E)", &h.coproduct(&e), &h.tensor(&e, &k).add(&h.tensor(&one, &e)));
    r.eq2("Delta(K)", &h.coproduct(&k), &h.tensor(&k, &k));
    r.eq2("Delta(F)", &h.coproduct(&f), &h.tensor(&f, &one).add(&h.tensor(&k_inv, &f)));
    r.counit("eps(E)", &e, ctx.zero());
    r.counit("eps(F)", &f, ctx.zero());
    r.counit("eps(K)", &k, ctx.one());
    r.eq("S(E)", &h.s(&e), &m(&[&e, &k_inv]).neg());
    r.eq("S(K)", &h.s(&k), &k_inv);
    r.eq("S(F)", &h.s(&f), &m(&[&k, &f]).neg());
    r.finish()
}
