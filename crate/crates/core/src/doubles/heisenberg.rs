use crate::error::Result;
use crate::hopf::{Algebra, DualPair};
use crate::linalg::{outer, split, Accumulator, Space, SpaceRef, SparseBilinear, Vect};
use crate::report::{Axis, CheckResult, Mode, Property};

use super::{DrinfeldDouble, MATERIALIZE_LIMIT};

/// `H(B*)` on the basis `α # a` of `B* ⊗ B`.
#[derive(Clone, Debug)]
pub struct HeisenbergDouble {
    pub pair: DualPair,
    pub algebra: Algebra,
}

impl HeisenbergDouble {
    pub fn space(&self) -> &SpaceRef {
        &self.algebra.space
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `α # a`.
    pub fn pure(&self, alpha: &Vect, a: &Vect) -> Vect {
        outer(alpha, a, self.space().id(), self.pair.primal.dim())
    }

    /// `α # 1`.
    pub fn from_dual(&self, alpha: &Vect) -> Vect {
        self.pure(alpha, &self.pair.primal.one())
    }

    /// `ε # a`.
    pub fn from_primal(&self, a: &Vect) -> Vect {
        self.pure(&self.pair.dual.one(), a)
    }

    pub fn mul(&self, x: &Vect, y: &Vect) -> Vect {
        self.algebra.mul(x, y)
    }
}

/// Smash product `(α#a)(β#b) = α(a′⇀β) # a″b`.
pub fn heisenberg_double(pair: &DualPair) -> Result<HeisenbergDouble> {
    let (b, bs) = (pair.primal.clone(), pair.dual.clone());
    let (db, ds) = (b.dim(), bs.dim());
    let space = Space::tensor_with(bs.space(), b.space(), "#");
    let sid = space.id();
    let n = space.dim();
    // cross[a·ds + β] = Σ (a′⇀β) # a″
    let cross: Vec<Vect> = (0..db * ds)
        .map(|k| {
            let (a, beta) = split(k, ds);
            let mut acc = Accumulator::new(sid);
            for (a1, a2, c) in b.coproduct_terms(a) {
                let moved = pair.lhd(&b.basis(a1), &bs.basis(beta));
                acc.add_scaled(&outer(&moved, &b.basis(a2), sid, db), &c);
            }
            acc.finish()
        })
        .collect();
    let mult = SparseBilinear::from_rule(&space, &space, &space, move |i, j| {
        let (alpha, a) = split(i, db);
        let (beta, bb) = split(j, db);
        let mut acc = Accumulator::new(sid);
        for (k, c) in cross[a * ds + beta].terms() {
            let (beta2, a2) = split(*k, db);
            let l = bs.mul_basis(alpha, beta2);
            if l.is_zero() {
                continue;
            }
            acc.add_scaled(&outer(&l, &b.mul_basis(a2, bb), sid, db), c);
        }
        acc.finish()
    });
    let mult = if n * n <= MATERIALIZE_LIMIT { mult.materialize() } else { mult };
    let unit = outer(&pair.dual.one(), &pair.primal.one(), sid, db);
    let mut gens: Vec<(String, Vect)> =
        pair.dual.generators().iter().map(|(g, v)| (format!("{g}#1"), outer(v, &pair.primal.one(), sid, db))).collect();
    gens.extend(pair.primal.generators().iter().map(|(g, v)| (format!("ε#{g}"), outer(&pair.dual.one(), v, sid, db))));
    let algebra = Algebra::new(format!("H({})", pair.dual.name()), pair.order(), &space, mult, unit)?.with_generators(gens);
    Ok(HeisenbergDouble { pair: pair.clone(), algebra })
}

/// Which pairing feeds the twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaVariant {
    /// `η(μ⊗m, ν⊗n) = ⟨μ,1⟩⟨ε,n⟩⟨ν,m⟩`.
    Standard,
    /// Arguments exchanged, `η(N, M)`.
    Swapped,
    /// The counit factors dropped, `η(μ⊗m, ν⊗n) = ⟨ν,m⟩`.
    PairingOnly,
}

/// `M ·_η N = M′N′ η(M″, N″)` on the space of `H(B*)`.
pub fn eta_twist_product(d: &DrinfeldDouble, hd: &HeisenbergDouble, variant: EtaVariant) -> SparseBilinear {
    let db = d.b().dim();
    let eps_dual = d.b_star().counit_values().to_vec();
    let eps = d.b().counit_values().to_vec();
    let pairing = d.pair.pairing.clone();
    let eta = move |x: usize, y: usize| {
        let (x, y) = if variant == EtaVariant::Swapped { (y, x) } else { (x, y) };
        let (mu, m) = split(x, db);
        let (nu, n) = split(y, db);
        if variant == EtaVariant::PairingOnly {
            return pairing.value(nu, m);
        }
        &(&eps_dual[mu] * &eps[n]) * &pairing.value(nu, m)
    };
    let h = d.hopf.clone();
    let sid = hd.space().id();
    SparseBilinear::from_rule(hd.space(), hd.space(), hd.space(), move |i, j| {
        let mut acc = Accumulator::new(sid);
        for (a1, a2, c) in h.coproduct_terms(i) {
            for (b1, b2, e) in h.coproduct_terms(j) {
                let w = eta(a2, b2);
                if w.is_zero() {
                    continue;
                }
                let f = &(&c * &e) * &w;
                for (k, v) in h.mul_basis(a1, b1).terms() {
                    acc.push(*k, v * &f);
                }
            }
        }
        acc.finish()
    })
}

/// `M ·_η N = MN` in `H(B*)` for a given twisted product.
pub fn eta_twist_property<'a>(hd: &'a HeisenbergDouble, twist: &'a SparseBilinear, variant: EtaVariant) -> Property<'a> {
    let o = hd.algebra.order;
    let tag = match variant {
        EtaVariant::Standard => "eta-twist",
        EtaVariant::Swapped => "eta-twist.swapped",
        EtaVariant::PairingOnly => "eta-twist.pairing-only",
    };
    Property::new(
        format!("{tag}.{}", hd.algebra.name),
        vec![Axis::basis_of("M", hd.space(), o), Axis::basis_of("N", hd.space(), o)],
        hd.space(),
        move |v| (twist.apply(v[0], v[1]), hd.mul(v[0], v[1])),
    )
}

/// The twisted product agrees with the smash product on every basis pair.
pub fn eta_twist_check(d: &DrinfeldDouble, hd: &HeisenbergDouble, variant: EtaVariant, mode: &Mode) -> CheckResult {
    let twist = eta_twist_product(d, hd, variant);
    let r = eta_twist_property(hd, &twist, variant).run(mode);
    r
}
