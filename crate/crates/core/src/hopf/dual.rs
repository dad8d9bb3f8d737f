use crate::error::{Error, Result};
use crate::linalg::{linear_map_inverse, BasisLabel, Space, SpaceRef, SparseBilinear, SparseLinear, Vect};
use crate::scalar::Cyclotomic;

use super::{FiniteHopf, HopfData};

/// The dual Hopf algebra on the canonical dual basis `e^I`, labeled `e^(label of e_I)`.
///
/// Product is the transposed coproduct, `⟨αβ, b⟩ = ⟨α, b′⟩⟨β, b″⟩`; coproduct is the transposed product.
pub fn dual(h: &FiniteHopf) -> FiniteHopf {
    let n = h.dim();
    let o = h.order();
    let labels = (0..n).map(|i| BasisLabel { tuple: h.space().tuple(i), name: format!("e^({})", h.space().label(i)) }).collect();
    let space = Space::new(format!("{}*", h.name()), labels);
    let tensor = Space::tensor(&space, &space);
    let sid = space.id();

    let mut mult: Vec<Vec<(usize, Cyclotomic)>> = vec![Vec::new(); n * n];
    for i in 0..n {
        for (j, k, c) in h.coproduct_terms(i) {
            mult[j * n + k].push((i, c));
        }
    }
    let mult = mult.into_iter().map(|t| Vect::from_terms(sid, t)).collect();
    let unit = Vect::from_terms(sid, h.counit_values().iter().cloned().enumerate().collect());

    let mut comult: Vec<Vec<(usize, Cyclotomic)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_basis(i, j).terms() {
                comult[*k].push((i * n + j, c.clone()));
            }
        }
    }
    let comult = comult.into_iter().map(|t| Vect::from_terms(tensor.id(), t)).collect();
    let counit = (0..n).map(|i| h.one().coeff(i).cloned().unwrap_or_else(|| Cyclotomic::zero(o))).collect();

    let transpose = |f: &SparseLinear| {
        let mut t: Vec<Vec<(usize, Cyclotomic)>> = vec![Vec::new(); n];
        for i in 0..n {
            for (j, c) in f.image(i).terms() {
                t[*j].push((i, c.clone()));
            }
        }
        SparseLinear::from_table(&space, &space, t.into_iter().map(|t| Vect::from_terms(sid, t)).collect()).expect("square")
    };
    let antipode = transpose(h.antipode());
    let inverse = transpose(h.antipode_inverse());
    let data = HopfData {
        name: format!("{}*", h.name()),
        order: o,
        space: space.clone(),
        mult: SparseBilinear::from_table(&space, &space, &space, mult).expect("square"),
        unit,
        comult: SparseLinear::from_table(&space, &tensor, comult).expect("shapes match"),
        counit,
        antipode,
    };
    FiniteHopf::with_antipode_inverse(data, inverse).expect("transpose of an invertible antipode")
}

/// An evaluation pairing `⟨f_I, e_J⟩` between a functional space and a primal space.
#[derive(Clone, Debug)]
pub struct Pairing {
    left: SpaceRef,
    right: SpaceRef,
    order: u32,
    rows: Vec<Vect>,
    cols: Vec<Vec<(usize, Cyclotomic)>>,
    dual_basis: Vec<Vect>,
}

impl Pairing {
    /// `rows[I]` holds the values `⟨f_I, e_J⟩` as a vector over the primal space.
    pub fn new(left: &SpaceRef, right: &SpaceRef, rows: Vec<Vect>, order: u32) -> Result<Self> {
        let a = SparseLinear::from_table(left, right, rows.clone())?;
        let inv = linear_map_inverse(&a, "pairing matrix", order)
            .map_err(|_| Error::Singular(format!("pairing {} × {} is degenerate", left.name(), right.name())))?;
        let dual_basis = (0..right.dim()).map(|j| inv.image(j).into_owned()).collect();
        let mut cols = vec![Vec::new(); right.dim()];
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in r.terms() {
                cols[*j].push((i, c.clone()));
            }
        }
        Ok(Pairing { left: left.clone(), right: right.clone(), order, rows, cols, dual_basis })
    }

    pub fn left(&self) -> &SpaceRef {
        &self.left
    }

    pub fn right(&self) -> &SpaceRef {
        &self.right
    }

    pub fn value(&self, i: usize, j: usize) -> Cyclotomic {
        self.rows[i].coeff(j).cloned().unwrap_or_else(|| Cyclotomic::zero(self.order))
    }

    pub fn row(&self, i: usize) -> &Vect {
        &self.rows[i]
    }

    /// Nonzero `(I, ⟨f_I, e_J⟩)` for fixed `J`.
    pub fn column(&self, j: usize) -> &[(usize, Cyclotomic)] {
        &self.cols[j]
    }

    pub fn pair(&self, f: &Vect, e: &Vect) -> Cyclotomic {
        debug_assert_eq!(f.space(), self.left.id());
        debug_assert_eq!(e.space(), self.right.id());
        let mut s = Cyclotomic::zero(self.order);
        for (i, a) in f.terms() {
            for (j, b) in e.terms() {
                if let Some(v) = self.rows[*i].coeff(*j) {
                    s += &(&(a * b) * v);
                }
            }
        }
        s
    }

    /// The functional `ẽ^J` with `⟨ẽ^J, e_K⟩ = δ_{JK}`.
    pub fn dual_basis(&self, j: usize) -> &Vect {
        &self.dual_basis[j]
    }
}

/// The four regular actions between a Hopf algebra and its dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularAction {
    /// `b⇀β = ⟨β″, b⟩β′`
    PrimalOnDualLeft,
    /// `β↼b = ⟨β′, b⟩β″`
    PrimalOnDualRight,
    /// `β⇀b = ⟨β, b″⟩b′`
    DualOnPrimalLeft,
    /// `b↼β = ⟨β, b′⟩b″`
    DualOnPrimalRight,
}

/// A Hopf algebra `B`, a Hopf algebra `B*` and a nondegenerate Hopf pairing between them.
#[derive(Clone, Debug)]
pub struct DualPair {
    pub primal: FiniteHopf,
    pub dual: FiniteHopf,
    pub pairing: Pairing,
    acts: [SparseBilinear; 4],
}

impl DualPair {
    /// `B` with its canonical dual.
    pub fn canonical(b: &FiniteHopf) -> Result<Self> {
        let d = dual(b);
        let rows = (0..b.dim()).map(|i| b.basis(i)).collect();
        let pairing = Pairing::new(d.space(), b.space(), rows, b.order())?;
        Self::new(b.clone(), d, pairing)
    }

    /// `B` with the canonical dual rewritten in the basis `basis` (given in canonical coordinates).
    pub fn with_dual_basis(b: &FiniteHopf, name: &str, space: &SpaceRef, basis: &[Vect]) -> Result<Self> {
        let d = dual(b).change_basis(name, space, basis)?;
        let rows = basis.iter().map(|v| v.clone().relabel(b.space().id())).collect();
        let pairing = Pairing::new(space, b.space(), rows, b.order())?;
        Self::new(b.clone(), d, pairing)
    }

    pub fn new(primal: FiniteHopf, dual: FiniteHopf, pairing: Pairing) -> Result<Self> {
        if pairing.left().id() != dual.space().id() || pairing.right().id() != primal.space().id() {
            return Err(Error::Structural("pairing spaces do not match the pair".into()));
        }
        let n = primal.dim();
        if dual.dim() != n {
            return Err(Error::Structural("dual dimension differs".into()));
        }
        let (ps, ds) = (primal.space().clone(), dual.space().clone());
        let mut t = [vec![Vec::new(); n * n], vec![Vec::new(); n * n], vec![Vec::new(); n * n], vec![Vec::new(); n * n]];
        for i in 0..n {
            for (j, k, c) in dual.coproduct_terms(i) {
                // b⇀β: table (b, β); β↼b: table (β, b).
                for (l, v) in pairing.row(k).terms() {
                    t[0][l * n + i].push((j, &c * v));
                }
                for (l, v) in pairing.row(j).terms() {
                    t[1][i * n + l].push((k, &c * v));
                }
            }
        }
        for l in 0..n {
            for (a, b, c) in primal.coproduct_terms(l) {
                for (i, v) in pairing.column(b) {
                    t[2][i * n + l].push((a, &c * v));
                }
                for (i, v) in pairing.column(a) {
                    t[3][l * n + i].push((b, &c * v));
                }
            }
        }
        let [t0, t1, t2, t3] = t;
        let mk = |t: Vec<Vec<(usize, Cyclotomic)>>, l: &SpaceRef, r: &SpaceRef, cod: &SpaceRef| {
            let v = t.into_iter().map(|x| Vect::from_terms(cod.id(), x)).collect();
            SparseBilinear::from_table(l, r, cod, v).expect("shapes match")
        };
        let acts = [mk(t0, &ps, &ds, &ds), mk(t1, &ds, &ps, &ds), mk(t2, &ds, &ps, &ps), mk(t3, &ps, &ds, &ps)];
        Ok(DualPair { primal, dual, pairing, acts })
    }

    pub fn order(&self) -> u32 {
        self.primal.order()
    }

    pub fn action_map(&self, kind: RegularAction) -> &SparseBilinear {
        &self.acts[kind as usize]
    }

    /// Checked application; argument order follows the written formula (`b⇀β` takes `(b, β)`).
    pub fn regular_action(&self, kind: RegularAction, x: &Vect, y: &Vect) -> Result<Vect> {
        let m = self.action_map(kind);
        if x.space() != m.left().id() || y.space() != m.right().id() {
            return Err(Error::Structural(format!("{kind:?} expects ({}, {})", m.left().name(), m.right().name())));
        }
        Ok(m.apply(x, y))
    }

    /// `b⇀β`
    pub fn lhd(&self, b: &Vect, beta: &Vect) -> Vect {
        self.acts[0].apply(b, beta)
    }

    /// `β↼b`
    pub fn rhd(&self, beta: &Vect, b: &Vect) -> Vect {
        self.acts[1].apply(beta, b)
    }

    /// `β⇀b`
    pub fn dual_lhd(&self, beta: &Vect, b: &Vect) -> Vect {
        self.acts[2].apply(beta, b)
    }

    /// `b↼β`
    pub fn dual_rhd(&self, b: &Vect, beta: &Vect) -> Vect {
        self.acts[3].apply(b, beta)
    }

    pub fn pair(&self, beta: &Vect, b: &Vect) -> Cyclotomic {
        self.pairing.pair(beta, b)
    }

    /// Checks that the pairing is a Hopf pairing: products against coproducts and counit against unit.
    pub fn check_pairing(&self) -> crate::report::CheckResult {
        use crate::report::{Axis, CheckResult, Mode, Property};
        let (b, d) = (&self.primal, &self.dual);
        let o = self.order();
        let line = Space::line();
        let sc = |c: Cyclotomic| Vect::monomial(line.id(), 0, c);
        let prod = Property::new(
            "pairing.product",
            vec![Axis::basis_of("α", d.space(), o), Axis::basis_of("β", d.space(), o), Axis::basis_of("b", b.space(), o)],
            &line,
            |v| {
                let l = self.pair(&d.mul(v[0], v[1]), v[2]);
                let mut r = Cyclotomic::zero(o);
                for (x, y, c) in b.coproduct_terms(v[2].terms()[0].0) {
                    r += &(&c * &(&self.pair(v[0], &b.basis(x)) * &self.pair(v[1], &b.basis(y))));
                }
                (sc(l), sc(r))
            },
        )
        .run(&Mode::Exhaustive);
        let coprod = Property::new(
            "pairing.coproduct",
            vec![Axis::basis_of("β", d.space(), o), Axis::basis_of("a", b.space(), o), Axis::basis_of("b", b.space(), o)],
            &line,
            |v| {
                let l = self.pair(v[0], &b.mul(v[1], v[2]));
                let mut r = Cyclotomic::zero(o);
                for (x, y, c) in d.coproduct_terms(v[0].terms()[0].0) {
                    r += &(&c * &(&self.pair(&d.basis(x), v[1]) * &self.pair(&d.basis(y), v[2])));
                }
                (sc(l), sc(r))
            },
        )
        .run(&Mode::Exhaustive);
        let unit = Property::new("pairing.unit", vec![Axis::basis_of("β", d.space(), o)], &line, |v| {
            (sc(self.pair(v[0], &b.one())), sc(d.counit(v[0])))
        })
        .run(&Mode::Exhaustive);
        let counit = Property::new("pairing.counit", vec![Axis::basis_of("b", b.space(), o)], &line, |v| {
            (sc(self.pair(&d.one(), v[0])), sc(b.counit(v[0])))
        })
        .run(&Mode::Exhaustive);
        CheckResult::all(format!("pairing.{}", b.name()), vec![prod, coprod, unit, counit])
    }
}
