use crate::doubles::HeisenbergDouble;
use crate::linalg::{split, Vect};
use crate::report::{Axis, CheckResult, Mode, Property};
use crate::scalar::BinomialConvention;

use super::TaftData;

/// Exponents `(r, s, m, n)` of `F^r κ^s # E^m k^n`.
pub type SmashMonomial = [i64; 4];

impl TaftData {
    /// Exponents of the basis element `i` of `H(B*)`.
    pub fn smash_exponents(&self, i: usize) -> SmashMonomial {
        let per = self.period();
        let (alpha, b) = split(i, self.b().dim());
        [(alpha / per) as i64, (alpha % per) as i64, (b / per) as i64, (b % per) as i64]
    }

    /// Index of `F^r κ^s # E^m k^n`, or `None` when a nilpotent exponent reaches `p`.
    pub fn smash_index(&self, e: SmashMonomial) -> Option<usize> {
        let p = self.p as i64;
        if e[0] < 0 || e[0] >= p || e[2] < 0 || e[2] >= p {
            return None;
        }
        Some(self.index(e[0] as usize, e[1]) * self.b().dim() + self.index(e[2] as usize, e[3]))
    }
}

/// The explicit product
/// `(F^rκ^s#E^mk^n)(F^aκ^b#E^ck^d) = Σ_u q^{-u(u-1)/2} [m,u][a,u] [u]!/(q-q⁻¹)^u
/// q^{-bn/2 + cn + a(s-n) + u(2c-a-b+m-s)} F^{a+r-u}κ^{b+s} # E^{m+c-u}k^{n+d+2u}`.
pub fn closed_form_smash(t: &TaftData, hd: &HeisenbergDouble, conv: BinomialConvention, x: SmashMonomial, y: SmashMonomial) -> Vect {
    let ctx = &t.ctx;
    let [r, s, m, n] = x;
    let [a, b, c, d] = y;
    let mut terms = Vec::new();
    let mut inv_pow = ctx.one();
    for u in 0..=m.min(a) {
        let coeff = &(&ctx.binomial(conv, m, u) * &ctx.binomial(conv, a, u)) * &(&ctx.q_factorial(u as u32) * &inv_pow);
        inv_pow = &inv_pow * &ctx.q_minus_one_inverse_factor;
        if coeff.is_zero() {
            continue;
        }
        // Twice the q-exponent, so that the bn/2 term stays integral.
        let twice = -u * (u - 1) - b * n + 2 * c * n + 2 * a * (s - n) + 2 * u * (2 * c - a - b + m - s);
        if let Some(k) = t.smash_index([a + r - u, b + s, m + c - u, n + d + 2 * u]) {
            terms.push((k, &coeff * &ctx.zeta_pow(twice)));
        }
    }
    Vect::from_terms(hd.space().id(), terms)
}

/// Equality of the closed form with the generic smash product under one binomial convention.
pub fn closed_form_property<'a>(t: &'a TaftData, hd: &'a HeisenbergDouble, conv: BinomialConvention) -> Property<'a> {
    let o = t.ctx.order();
    Property::new(
        format!("smash.closed-form.{conv:?}.p{}", t.p),
        vec![Axis::basis_of("x", hd.space(), o), Axis::basis_of("y", hd.space(), o)],
        hd.space(),
        move |v| {
            let (i, j) = (v[0].terms()[0].0, v[1].terms()[0].0);
            (closed_form_smash(t, hd, conv, t.smash_exponents(i), t.smash_exponents(j)), hd.algebra.mult.basis(i, j).into_owned())
        },
    )
}

/// Runs the closed-form comparison with balanced q-binomials and, if that fails, with one-sided
/// ones; the note records which convention matched.
pub fn check_closed_form_smash(t: &TaftData, hd: &HeisenbergDouble, mode: &Mode) -> (CheckResult, Option<BinomialConvention>) {
    let name = format!("smash.closed-form.p{}", t.p);
    let balanced = closed_form_property(t, hd, BinomialConvention::Balanced).run(mode);
    if balanced.passed() {
        return (balanced.renamed(name).with_note("balanced q-binomials"), Some(BinomialConvention::Balanced));
    }
    let one_sided = closed_form_property(t, hd, BinomialConvention::OneSided).run(mode);
    if one_sided.passed() {
        return (one_sided.renamed(name).with_note("balanced q-binomials fail; one-sided Gaussian binomials match"), Some(BinomialConvention::OneSided));
    }
    (balanced.renamed(name).with_note("neither binomial convention matches"), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubles::heisenberg_double;
    use crate::taft::taft_algebra;

    #[test]
    fn unit_and_kappa_e() {
        let t = taft_algebra(2).unwrap();
        let hd = heisenberg_double(&t.pair).unwrap();
        let conv = BinomialConvention::Balanced;
        let f = [1, 0, 0, 0];
        assert_eq!(closed_form_smash(&t, &hd, conv, [0, 0, 0, 0], f), hd.from_dual(&t.f));
        let ke = closed_form_smash(&t, &hd, conv, [0, 1, 0, 0], [0, 0, 1, 0]);
        assert_eq!(ke, hd.mul(&hd.from_dual(&t.kappa), &hd.from_primal(&t.ek(1, 0))));
    }
}
