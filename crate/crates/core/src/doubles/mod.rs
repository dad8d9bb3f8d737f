//! Drinfeld double `D(B)`, Heisenberg double `H(B*)` and the structures connecting them.

mod heisenberg;
mod remarks;
mod structures;

use crate::error::Result;
use crate::hopf::{DualPair, FiniteHopf, HopfData};
use crate::linalg::{outer, split, Accumulator, Space, SpaceRef, SparseBilinear, SparseLinear, Vect};
use crate::report::{Axis, CheckResult, Mode, Property};
use crate::scalar::Cyclotomic;

pub use heisenberg::{eta_twist_check, eta_twist_product, eta_twist_property, heisenberg_double, EtaVariant, HeisenbergDouble};
pub use remarks::{check_quantum_comm_remarks, remark1_property, remark2_property};
pub use structures::{
    canonical_action, canonical_coaction, check_action_formula, check_double_identity, check_double_identity_with,
    check_to_show_action, factor_structures, heisenberg_chain, heisenberg_chain_relations, yd_structure, ActionParts,
    ChainStart,
};

/// Products with at most this many basis pairs are tabulated at construction.
pub const MATERIALIZE_LIMIT: usize = 512 * 512;

/// `D(B)` on the basis `μ ⊗ m` of `B* ⊗ B`, with its universal R-matrix.
#[derive(Clone, Debug)]
pub struct DrinfeldDouble {
    pub pair: DualPair,
    pub hopf: FiniteHopf,
    r_terms: Vec<(Vect, Vect)>,
}

impl DrinfeldDouble {
    pub fn b(&self) -> &FiniteHopf {
        &self.pair.primal
    }

    pub fn b_star(&self) -> &FiniteHopf {
        &self.pair.dual
    }

    pub fn space(&self) -> &SpaceRef {
        self.hopf.space()
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn order(&self) -> u32 {
        self.hopf.order()
    }

    /// `μ ⊗ m`.
    pub fn pure(&self, mu: &Vect, m: &Vect) -> Vect {
        outer(mu, m, self.space().id(), self.b().dim())
    }

    /// `μ ⊗ 1`.
    pub fn from_dual(&self, mu: &Vect) -> Vect {
        self.pure(mu, &self.b().one())
    }

    /// `ε ⊗ m`.
    pub fn from_primal(&self, m: &Vect) -> Vect {
        self.pure(&self.b_star().one(), m)
    }

    /// Basis index of `e_μ ⊗ e_m`.
    pub fn index(&self, mu: usize, m: usize) -> usize {
        mu * self.b().dim() + m
    }

    /// Terms `(R⁽¹⁾, R⁽²⁾)` of `ℛ = Σ_I (ε⊗e_I) ⊗ (e^I⊗1)`.
    pub fn r_terms(&self) -> &[(Vect, Vect)] {
        &self.r_terms
    }

    /// `ℛ` in `D ⊗ D`.
    pub fn r_matrix(&self) -> Vect {
        let mut acc = Accumulator::new(self.hopf.tensor_space().id());
        for (a, b) in &self.r_terms {
            acc.add(&self.hopf.tensor(a, b));
        }
        acc.finish()
    }

    /// `ℛ⁻¹ = (S_D ⊗ id)ℛ`.
    pub fn r_inverse(&self) -> Vect {
        let mut acc = Accumulator::new(self.hopf.tensor_space().id());
        for (a, b) in &self.r_terms {
            acc.add(&self.hopf.tensor(&self.hopf.s(a), b));
        }
        acc.finish()
    }
}

/// Builds `D(B)`: `(μ⊗m)(ν⊗n) = μ(m′⇀ν↼S⁻¹(m‴)) ⊗ m″n`, coalgebra of `B*^cop ⊗ B`,
/// `S_D(μ⊗m) = (ε⊗S(m))(S*⁻¹(μ)⊗1)`.
pub fn drinfeld_double(pair: &DualPair) -> Result<DrinfeldDouble> {
    let (b, bs) = (&pair.primal, &pair.dual);
    let o = b.order();
    let (db, ds) = (b.dim(), bs.dim());
    let name = format!("D({})", b.name());
    let space = Space::tensor_with(bs.space(), b.space(), "⊗");
    let sid = space.id();
    let n = space.dim();

    // cross[m·ds + ν] = Σ (m′⇀ν↼S⁻¹(m‴)) ⊗ m″
    let cross: Vec<Vect> = (0..db * ds)
        .map(|k| {
            let (m, nu) = split(k, ds);
            let mut acc = Accumulator::new(sid);
            let nu_v = bs.basis(nu);
            for (m1, m2, m3, c) in b.coproduct2_terms(m) {
                let right = pair.rhd(&nu_v, &b.s_inv(&b.basis(m3)));
                let both = pair.lhd(&b.basis(m1), &right);
                acc.add_scaled(&outer(&both, &b.basis(m2), sid, db), &c);
            }
            acc.finish()
        })
        .collect();
    let (b2, bs2) = (b.clone(), bs.clone());
    let mult = SparseBilinear::from_rule(&space, &space, &space, move |i, j| {
        let (mu, m) = split(i, db);
        let (nu, nn) = split(j, db);
        let mut acc = Accumulator::new(sid);
        for (k, c) in cross[m * ds + nu].terms() {
            let (nu2, m2) = split(*k, db);
            let l = bs2.mul_basis(mu, nu2);
            if l.is_zero() {
                continue;
            }
            let r = b2.mul_basis(m2, nn);
            acc.add_scaled(&outer(&l, &r, sid, db), c);
        }
        acc.finish()
    });
    let mult = if n * n <= MATERIALIZE_LIMIT { mult.materialize() } else { mult };

    let tensor = Space::tensor(&space, &space);
    let comult = (0..n)
        .map(|k| {
            let (mu, m) = split(k, db);
            let mut acc = Accumulator::new(tensor.id());
            for (m1, m2, c) in b.coproduct_terms(m) {
                for (mu1, mu2, d) in bs.coproduct_terms(mu) {
                    acc.push((mu2 * db + m1) * n + mu1 * db + m2, &c * &d);
                }
            }
            acc.finish()
        })
        .collect();
    let counit: Vec<Cyclotomic> = (0..n)
        .map(|k| {
            let (mu, m) = split(k, db);
            &bs.counit_values()[mu] * &b.counit_values()[m]
        })
        .collect();
    let pure = |mu: &Vect, m: &Vect| outer(mu, m, sid, db);
    let antipode: Vec<Vect> = (0..n)
        .map(|k| {
            let (mu, m) = split(k, db);
            let l = pure(&bs.one(), &b.s(&b.basis(m)));
            let r = pure(&bs.s_inv(&bs.basis(mu)), &b.one());
            mult.apply(&l, &r)
        })
        .collect();
    let antipode_inv: Vec<Vect> = (0..n)
        .map(|k| {
            let (mu, m) = split(k, db);
            let l = pure(&bs.one(), &b.s_inv(&b.basis(m)));
            let r = pure(&bs.s(&bs.basis(mu)), &b.one());
            mult.apply(&l, &r)
        })
        .collect();
    let data = HopfData {
        name: name.clone(),
        order: o,
        space: space.clone(),
        mult,
        unit: pure(&bs.one(), &b.one()),
        comult: SparseLinear::from_table(&space, &tensor, comult)?,
        counit,
        antipode: SparseLinear::from_table(&space, &space, antipode)?,
    };
    let mut gens: Vec<(String, Vect)> = bs.generators().iter().map(|(g, v)| (g.clone(), pure(v, &b.one()))).collect();
    gens.extend(b.generators().iter().map(|(g, v)| (g.clone(), pure(&bs.one(), v))));
    let hopf = FiniteHopf::with_antipode_inverse(data, SparseLinear::from_table(&space, &space, antipode_inv)?)?.with_generators(gens);

    let r_terms = (0..db)
        .map(|i| (pure(&bs.one(), &b.basis(i)), pure(pair.pairing.dual_basis(i), &b.one())))
        .collect();
    Ok(DrinfeldDouble { pair: pair.clone(), hopf, r_terms })
}

/// Product in the `k`-fold tensor power of `h`.
fn power_mul(h: &FiniteHopf, k: u32, a: &Vect, b: &Vect) -> Vect {
    let n = h.dim();
    let mut acc = Accumulator::new(a.space());
    for (i1, c1) in a.terms() {
        for (i2, c2) in b.terms() {
            let mut terms: Vec<(usize, Cyclotomic)> = vec![(0, c1 * c2)];
            let (mut r1, mut r2) = (*i1, *i2);
            let mut digits = Vec::with_capacity(k as usize);
            for _ in 0..k {
                digits.push((r1 % n, r2 % n));
                r1 /= n;
                r2 /= n;
            }
            let mut stride = 1;
            for (x, y) in digits {
                let p = h.mul_basis(x, y);
                let mut next = Vec::with_capacity(terms.len() * p.len());
                for (t, c) in &terms {
                    for (z, d) in p.terms() {
                        next.push((t + z * stride, c * d));
                    }
                }
                terms = next;
                stride *= n;
            }
            for (t, c) in terms {
                acc.push(t, c);
            }
        }
    }
    acc.finish()
}

/// Quasitriangularity of `ℛ`: both coproduct identities, `ℛΔ(x) = Δ^op(x)ℛ`, and `ℛ⁻¹` as a two-sided inverse.
pub fn check_quasitriangular(d: &DrinfeldDouble, mode: &Mode) -> CheckResult {
    let h = &d.hopf;
    let n = d.dim();
    let dd = h.tensor_space().clone();
    let ddd = Space::tensor(&dd, h.space());
    let t3 = |a: &Vect, b: &Vect, c: &Vect| outer(&outer(a, b, dd.id(), n), c, ddd.id(), n);
    let one = h.one();
    let r = d.r_terms();
    let sum3 = |f: &dyn Fn(&Vect, &Vect) -> Vect| {
        let mut acc = Accumulator::new(ddd.id());
        for (a, b) in r {
            acc.add(&f(a, b));
        }
        acc.finish()
    };
    let r13 = sum3(&|a, b| t3(a, &one, b));
    let r23 = sum3(&|a, b| t3(&one, a, b));
    let r12 = sum3(&|a, b| t3(a, b, &one));
    let delta_left = sum3(&|a, b| outer(&h.coproduct(a), b, ddd.id(), n));
    let delta_right = sum3(&|a, b| t3_from(a, &h.coproduct(b), &ddd, n));
    let lhs1 = power_mul(h, 3, &r13, &r23);
    let c1 = CheckResult::fact("quasitriangular.delta-left", delta_left == lhs1, delta_left.render(&ddd), lhs1.render(&ddd));
    let lhs2 = power_mul(h, 3, &r13, &r12);
    let c2 = CheckResult::fact("quasitriangular.delta-right", delta_right == lhs2, delta_right.render(&ddd), lhs2.render(&ddd));
    let rm = d.r_matrix();
    let ri = d.r_inverse();
    let one2 = h.tensor(&one, &one);
    let a = h.tensor_mul(&rm, &ri);
    let b = h.tensor_mul(&ri, &rm);
    let c3 = CheckResult::fact("quasitriangular.inverse", a == one2 && b == one2, format!("{} ; {}", a.render(&dd), b.render(&dd)), "1⊗1 ; 1⊗1");
    let o = d.order();
    let c4 = Property::new("quasitriangular.intertwining", vec![Axis::basis_of("x", h.space(), o)], &dd, |v| {
        let dx = h.coproduct(v[0]);
        (h.tensor_mul(&rm, &dx), h.tensor_mul(&h.flip(&dx), &rm))
    })
    .run(mode);
    CheckResult::all(format!("quasitriangular.{}", h.name()), vec![c1, c2, c3, c4])
}

fn t3_from(a: &Vect, bc: &Vect, ddd: &SpaceRef, n: usize) -> Vect {
    outer(a, bc, ddd.id(), n * n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf_axioms;
    use crate::hopf::examples::group_algebra;

    #[test]
    fn double_of_cyclic_group_is_quasitriangular_hopf() {
        let h = group_algebra(3, 12).unwrap();
        let pair = DualPair::canonical(&h).unwrap();
        let d = drinfeld_double(&pair).unwrap();
        assert_eq!(d.dim(), 9);
        assert!(check_hopf_axioms(&d.hopf, &Mode::Exhaustive).passed());
        let q = check_quasitriangular(&d, &Mode::Exhaustive);
        assert!(q.passed(), "{q:?}");
        let mu = pair.dual.basis(1);
        assert_eq!(d.hopf.s(&d.from_dual(&mu)), d.from_dual(&pair.dual.s_inv(&mu)));
    }
}
