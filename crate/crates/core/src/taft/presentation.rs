use crate::doubles::DrinfeldDouble;
use crate::hopf::FiniteHopf;
use crate::linalg::Vect;
use crate::report::CheckResult;

use super::TaftData;

/// Exact equality of two elements of `h`, rendered on failure.
pub(crate) fn relation(name: String, space: &crate::linalg::Space, lhs: &Vect, rhs: &Vect) -> CheckResult {
    CheckResult::fact(name, lhs == rhs, lhs.render(space), rhs.render(space))
}

/// Named elements of a Hopf algebra used by presentation checks.
pub(crate) struct Rel<'a> {
    pub h: &'a FiniteHopf,
    pub prefix: String,
    pub parts: Vec<CheckResult>,
}

impl<'a> Rel<'a> {
    pub fn new(h: &'a FiniteHopf, prefix: impl Into<String>) -> Self {
        Rel { h, prefix: prefix.into(), parts: Vec::new() }
    }

    pub fn eq(&mut self, name: &str, lhs: &Vect, rhs: &Vect) {
        self.parts.push(relation(format!("{}.{name}", self.prefix), self.h.space(), lhs, rhs));
    }

    pub fn eq2(&mut self, name: &str, lhs: &Vect, rhs: &Vect) {
        self.parts.push(relation(format!("{}.{name}", self.prefix), self.h.tensor_space(), lhs, rhs));
    }

    pub fn counit(&mut self, name: &str, x: &Vect, want: crate::scalar::Cyclotomic) {
        let got = self.h.counit(x);
        self.parts.push(CheckResult::fact(format!("{}.{name}", self.prefix), got == want, crate::scalar::render_q(&got), crate::scalar::render_q(&want)));
    }

    pub fn finish(self) -> CheckResult {
        let name = self.prefix.clone();
        CheckResult::all(name, self.parts)
    }
}

/// The presentation of `D(B)`: relations i) to iii) including the cross relation
/// `[E,F] = (k² − κ²)/(q − q⁻¹)`, and the coalgebra and antipode on `E, k, F, κ`.
pub fn double_presentation_check(t: &TaftData, d: &DrinfeldDouble) -> CheckResult {
    let h = &d.hopf;
    let ctx = &t.ctx;
    let per = t.period() as u32;
    let e = d.from_primal(&t.ek(1, 0));
    let k = d.from_primal(&t.ek(0, 1));
    let k_inv = d.from_primal(&t.ek(0, -1));
    let f = d.from_dual(&t.f);
    let kap = d.from_dual(&t.kappa);
    let kap_inv = d.from_dual(&t.fk(0, -1));
    let one = h.one();
    let m = |xs: &[&Vect]| h.product_of(xs);
    let mut r = Rel::new(h, format!("presentation.D(B).p{}", t.p));
    r.eq("kE", &m(&[&k, &e]), &m(&[&e, &k]).scale(&ctx.q));
    r.eq("E^p", &h.pow(&e, t.p), &h.zero());
    r.eq("k^4p", &h.pow(&k, per), &one);
    r.eq("kappaF", &m(&[&kap, &f]), &m(&[&f, &kap]).scale(&ctx.q));
    r.eq("F^p", &h.pow(&f, t.p), &h.zero());
    r.eq("kappa^4p", &h.pow(&kap, per), &one);
    r.eq("k-kappa", &m(&[&k, &kap]), &m(&[&kap, &k]));
    r.eq("kFk^-1", &m(&[&k, &f, &k_inv]), &f.scale(&ctx.q_pow(-1)));
    r.eq("kappaEkappa^-1", &m(&[&kap, &e, &kap_inv]), &e.scale(&ctx.q_pow(-1)));
    let k2 = h.pow(&k, 2);
    let kap2 = h.pow(&kap, 2);
    r.eq("[E,F]", &h.commutator(&e, &f), &k2.sub(&kap2).scale(&ctx.q_minus_one_inverse_factor));
    r.eq2("Delta(E)", &h.coproduct(&e), &h.tensor(&one, &e).add(&h.tensor(&e, &k2)));
    r.eq2("Delta(k)", &h.coproduct(&k), &h.tensor(&k, &k));
    r.eq2("Delta(F)", &h.coproduct(&f), &h.tensor(&kap2, &f).add(&h.tensor(&f, &one)));
    r.eq2("Delta(kappa)", &h.coproduct(&kap), &h.tensor(&kap, &kap));
    r.counit("eps(E)", &e, ctx.zero());
    r.counit("eps(k)", &k, ctx.one());
    r.counit("eps(F)", &f, ctx.zero());
    r.counit("eps(kappa)", &kap, ctx.one());
    let k_inv2 = h.pow(&k_inv, 2);
    let kap_inv2 = h.pow(&kap_inv, 2);
    r.eq("S(E)", &h.s(&e), &m(&[&e, &k_inv2]).neg());
    r.eq("S(k)", &h.s(&k), &k_inv);
    r.eq("S(F)", &h.s(&f), &m(&[&kap_inv2, &f]).neg());
    r.eq("S(kappa)", &h.s(&kap), &kap_inv);
    r.finish()
}
