use crate::doubles::HeisenbergDouble;
use crate::error::Result;
use crate::linalg::{linear_map_inverse, BasisLabel, Space, SpaceRef, SparseLinear, Vect};
use crate::report::CheckResult;

use super::StructureChecks;

use super::presentation::relation;
use super::{monomial_name, TaftData};

/// The basis `z^a λ^c ∂^b κ^e` of `H(B*)` and the change of basis to `F^aκ^b # E^ck^d`.
#[derive(Clone, Debug)]
pub struct HeisenbergBasisChange {
    pub p: u32,
    /// `z = −(q−q⁻¹) ε#Ek⁻²`.
    pub z: Vect,
    /// `λ = κ#k`.
    pub lam: Vect,
    /// `∂ = (q−q⁻¹) F#1`.
    pub del: Vect,
    /// `κ#1`.
    pub kappa: Vect,
    pub pbw_space: SpaceRef,
    /// PBW coordinates to monomial coordinates.
    pub to_monomial: SparseLinear,
    pub to_pbw: SparseLinear,
}

impl HeisenbergBasisChange {
    /// Index of `z^a λ^c ∂^b κ^e`.
    pub fn pbw_index(&self, a: usize, c: usize, b: usize, e: usize) -> usize {
        let (p, per) = (self.p as usize, 4 * self.p as usize);
        ((a * per + c) * p + b) * per + e
    }
}

/// `z`, `λ`, `∂` in `H(B*)`.
pub fn heisenberg_generators(t: &TaftData, hd: &HeisenbergDouble) -> (Vect, Vect, Vect) {
    let c = &t.ctx.q_minus_q_inv;
    let z = hd.from_primal(&t.ek(1, -2)).scale(&-c.clone());
    let lam = hd.pure(&t.kappa, &t.ek(0, 1));
    let del = hd.from_dual(&t.f).scale(c);
    (z, lam, del)
}

fn powers(hd: &HeisenbergDouble, x: &Vect, n: usize) -> Vec<Vect> {
    let mut out = vec![hd.algebra.one()];
    for i in 1..n {
        out.push(hd.mul(&out[i - 1], x));
    }
    out
}

/// Builds the PBW basis and checks that it is a basis together with every relation
/// `κz = q⁻¹zκ`, `κλ = q^{1/2}λκ`, `κ∂ = q∂κ`, `κ^{4p} = 1`, `z^p = 0`, `∂^p = 0`,
/// `λz = zλ`, `λ∂ = ∂λ`, `∂z = (q−q⁻¹) + q⁻²z∂`. The period `λ^{4p} = 1` is checked separately
/// in [`StructureChecks::literal`].
pub fn basis_change(t: &TaftData, hd: &HeisenbergDouble) -> Result<(HeisenbergBasisChange, StructureChecks)> {
    let ctx = &t.ctx;
    let (p, per) = (t.p as usize, t.period());
    let o = ctx.order();
    let (z, lam, del) = heisenberg_generators(t, hd);
    let kappa = hd.from_dual(&t.kappa);
    let (zp, lp, dp, kp) = (powers(hd, &z, p), powers(hd, &lam, per), powers(hd, &del, p), powers(hd, &kappa, per));
    let mut labels = Vec::with_capacity(hd.dim());
    let mut images = Vec::with_capacity(hd.dim());
    for a in 0..p {
        for c in 0..per {
            let zl = hd.mul(&zp[a], &lp[c]);
            for b in 0..p {
                let zld = hd.mul(&zl, &dp[b]);
                for e in 0..per {
                    images.push(hd.mul(&zld, &kp[e]));
                    let name = monomial_name(&[("z", a as i64), ("λ", c as i64), ("∂", b as i64), ("κ", e as i64)]);
                    labels.push(BasisLabel { tuple: vec![a as i64, c as i64, b as i64, e as i64], name });
                }
            }
        }
    }
    let pbw_space = Space::new("H(B*) pbw", labels);
    let to_monomial = SparseLinear::from_table(&pbw_space, hd.space(), images)?;
    let name = format!("basis-change.p{}", t.p);
    let mut parts = Vec::new();
    let to_pbw = match linear_map_inverse(&to_monomial, &name, o) {
        Ok(inv) => {
            parts.push(CheckResult::fact(format!("{name}.bijective"), true, "invertible", "invertible"));
            inv
        }
        Err(e) => {
            parts.push(CheckResult::fact(format!("{name}.bijective"), false, e.to_string(), "invertible"));
            SparseLinear::identity(hd.space(), o)
        }
    };
    let m = |x: &Vect, y: &Vect| hd.mul(x, y);
    let sp = hd.space();
    let one = hd.algebra.one();
    let zero = hd.algebra.zero();
    let mut rel = |n: &str, l: Vect, r: Vect| parts.push(relation(format!("{name}.{n}"), sp, &l, &r));
    rel("kappa-z", m(&kappa, &z), m(&z, &kappa).scale(&ctx.q_pow(-1)));
    rel("kappa-lambda", m(&kappa, &lam), m(&lam, &kappa).scale(&ctx.q_half));
    rel("kappa-del", m(&kappa, &del), m(&del, &kappa).scale(&ctx.q));
    rel("kappa^4p", hd.algebra.pow(&kappa, per as u32), one.clone());
    rel("z^p", hd.algebra.pow(&z, t.p), zero.clone());
    rel("del^p", hd.algebra.pow(&del, t.p), zero);
    rel("lambda-z", m(&lam, &z), m(&z, &lam));
    rel("lambda-del", m(&lam, &del), m(&del, &lam));
    rel("del-z", m(&del, &z), one.scale(&ctx.q_minus_q_inv).add(&m(&z, &del).scale(&ctx.q_pow(-2))));
    let lam_per = hd.algebra.pow(&lam, per as u32);
    let literal = relation(format!("{name}.lambda^4p"), sp, &lam_per, &one);
    let bc = HeisenbergBasisChange { p: t.p, z, lam, del, kappa, pbw_space, to_monomial, to_pbw };
    Ok((bc, StructureChecks::new(name, parts, vec![literal])))
}
