//! Finite-dimensional Hopf algebras given by structure constants.

mod algebra;
mod axioms;
mod dual;
pub mod examples;
mod variants;

use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::linalg::{linear_map_inverse, outer, split, Accumulator, Coordinates, Space, SpaceRef, SparseBilinear, SparseLinear, Vect};
use crate::scalar::Cyclotomic;

pub use algebra::Algebra;
pub use axioms::{check_hopf_axioms, hopf_axiom_properties};
pub use dual::{dual, DualPair, Pairing, RegularAction};

/// A Hopf algebra on a labeled basis. Immutable; the antipode inverse is computed once.
#[derive(Clone, Debug)]
pub struct FiniteHopf {
    name: String,
    order: u32,
    space: SpaceRef,
    tensor: SpaceRef,
    mult: SparseBilinear,
    unit: Vect,
    comult: SparseLinear,
    counit: Vec<Cyclotomic>,
    antipode: SparseLinear,
    antipode_inverse: SparseLinear,
    generators: Vec<(String, Vect)>,
}

/// The raw structure tensors of a Hopf algebra.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub name: String,
    pub order: u32,
    pub space: SpaceRef,
    pub mult: SparseBilinear,
    pub unit: Vect,
    /// Into `space ⊗ space`, as built by [`Space::tensor`].
    pub comult: SparseLinear,
    pub counit: Vec<Cyclotomic>,
    pub antipode: SparseLinear,
}

impl FiniteHopf {
    /// Validates shapes and inverts the antipode.
    pub fn new(data: HopfData) -> Result<Self> {
        let inv = linear_map_inverse(&data.antipode.materialize(), &format!("antipode of {}", data.name), data.order)?;
        Self::with_antipode_inverse(data, inv)
    }

    /// Uses a known antipode inverse; it is checked by composition.
    pub fn with_antipode_inverse(data: HopfData, inverse: SparseLinear) -> Result<Self> {
        let HopfData { name, order, space, mult, unit, comult, counit, antipode } = data;
        let tensor = Space::tensor(&space, &space);
        let sid = space.id();
        if mult.left().id() != sid || mult.right().id() != sid || mult.codomain().id() != sid {
            return Err(Error::Structural(format!("{name}: product not on {}", space.name())));
        }
        if unit.space() != sid {
            return Err(Error::Structural(format!("{name}: unit outside the algebra")));
        }
        if comult.domain().id() != sid || comult.codomain().id() != tensor.id() {
            return Err(Error::Structural(format!("{name}: coproduct must map into {}", tensor.name())));
        }
        if counit.len() != space.dim() {
            return Err(Error::Structural(format!("{name}: counit needs {} values", space.dim())));
        }
        for f in [&antipode, &inverse] {
            if f.domain().id() != sid || f.codomain().id() != sid {
                return Err(Error::Structural(format!("{name}: antipode must be an endomorphism")));
            }
        }
        let inverse = inverse.materialize();
        for i in 0..space.dim() {
            let e = Vect::basis(&space, i, order);
            if antipode.apply(&inverse.apply(&e)) != e {
                return Err(Error::Singular(format!("supplied inverse of the antipode of {name}")));
            }
        }
        Ok(FiniteHopf {
            name,
            order,
            space,
            tensor,
            mult,
            unit,
            comult,
            counit,
            antipode,
            antipode_inverse: inverse,
            generators: Vec::new(),
        })
    }

    pub fn data(&self) -> HopfData {
        HopfData {
            name: self.name.clone(),
            order: self.order,
            space: self.space.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
        }
    }

    /// Declares named algebra generators, used by generator-mode checks.
    pub fn with_generators(mut self, gens: Vec<(String, Vect)>) -> Self {
        self.generators = gens;
        self
    }

    pub fn generators(&self) -> &[(String, Vect)] {
        &self.generators
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    /// `H ⊗ H`, the codomain of the coproduct.
    pub fn tensor_space(&self) -> &SpaceRef {
        &self.tensor
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn mult(&self) -> &SparseBilinear {
        &self.mult
    }

    pub fn comult(&self) -> &SparseLinear {
        &self.comult
    }

    pub fn counit_values(&self) -> &[Cyclotomic] {
        &self.counit
    }

    /// The counit as a map to the scalar line.
    pub fn counit_map(&self) -> SparseLinear {
        let line = Space::line();
        let images = self.counit.iter().map(|c| Vect::monomial(line.id(), 0, c.clone())).collect();
        SparseLinear::from_table(&self.space, &line, images).expect("shapes match")
    }

    pub fn antipode(&self) -> &SparseLinear {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> &SparseLinear {
        &self.antipode_inverse
    }

    pub fn one(&self) -> Vect {
        self.unit.clone()
    }

    pub fn basis(&self, i: usize) -> Vect {
        Vect::basis(&self.space, i, self.order)
    }

    pub fn scalar(&self, c: Cyclotomic) -> Vect {
        self.unit.scale(&c)
    }

    pub fn zero(&self) -> Vect {
        Vect::zero(&self.space)
    }

    /// Basis element by label name.
    pub fn element(&self, label: &str) -> Option<Vect> {
        self.space.index_of(label).map(|i| self.basis(i))
    }

    pub fn mul(&self, x: &Vect, y: &Vect) -> Vect {
        self.mult.apply(x, y)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Cow<'_, Vect> {
        self.mult.basis(i, j)
    }

    pub fn pow(&self, x: &Vect, n: u32) -> Vect {
        let mut r = self.one();
        for _ in 0..n {
            r = self.mul(&r, x);
        }
        r
    }

    pub fn product_of(&self, xs: &[&Vect]) -> Vect {
        xs.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn commutator(&self, x: &Vect, y: &Vect) -> Vect {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    pub fn coproduct(&self, x: &Vect) -> Vect {
        self.comult.apply(x)
    }

    pub fn coproduct_basis(&self, i: usize) -> Cow<'_, Vect> {
        self.comult.image(i)
    }

    /// `Δ(e_i)` as `(left, right, coefficient)` triples.
    pub fn coproduct_terms(&self, i: usize) -> Vec<(usize, usize, Cyclotomic)> {
        let d = self.dim();
        self.comult.image(i).terms().iter().map(|(k, c)| {
            let (a, b) = split(*k, d);
            (a, b, c.clone())
        }).collect()
    }

    /// `(Δ ⊗ id)Δ(e_i)` as `(a, b, c, coefficient)`.
    pub fn coproduct2_terms(&self, i: usize) -> Vec<(usize, usize, usize, Cyclotomic)> {
        let mut acc: Vec<(usize, usize, usize, Cyclotomic)> = Vec::new();
        for (ab, c, x) in self.coproduct_terms(i) {
            for (a, b, y) in self.coproduct_terms(ab) {
                acc.push((a, b, c, &x * &y));
            }
        }
        acc.sort_by_key(|t| (t.0, t.1, t.2));
        let mut out: Vec<(usize, usize, usize, Cyclotomic)> = Vec::with_capacity(acc.len());
        for t in acc {
            match out.last_mut() {
                Some(l) if (l.0, l.1, l.2) == (t.0, t.1, t.2) => l.3 += &t.3,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.3.is_zero());
        out
    }

    pub fn counit(&self, x: &Vect) -> Cyclotomic {
        let mut s = Cyclotomic::zero(self.order);
        for (i, c) in x.terms() {
            if !self.counit[*i].is_zero() {
                s += &(c * &self.counit[*i]);
            }
        }
        s
    }

    pub fn s(&self, x: &Vect) -> Vect {
        self.antipode.apply(x)
    }

    pub fn s_inv(&self, x: &Vect) -> Vect {
        self.antipode_inverse.apply(x)
    }

    pub fn tensor(&self, x: &Vect, y: &Vect) -> Vect {
        outer(x, y, self.tensor.id(), self.dim())
    }

    /// Product in the algebra `H ⊗ H`.
    pub fn tensor_mul(&self, a: &Vect, b: &Vect) -> Vect {
        let d = self.dim();
        let mut acc = Accumulator::new(self.tensor.id());
        for (k1, c1) in a.terms() {
            let (i1, j1) = split(*k1, d);
            for (k2, c2) in b.terms() {
                let (i2, j2) = split(*k2, d);
                let c = c1 * c2;
                let l = self.mult.basis(i1, i2);
                let r = self.mult.basis(j1, j2);
                for (x, cx) in l.terms() {
                    let cc = &c * cx;
                    for (y, cy) in r.terms() {
                        acc.push(x * d + y, &cc * cy);
                    }
                }
            }
        }
        acc.finish()
    }

    /// Flip `x ⊗ y ↦ y ⊗ x` on `H ⊗ H`.
    pub fn flip(&self, t: &Vect) -> Vect {
        let d = self.dim();
        Vect::from_terms(
            self.tensor.id(),
            t.terms().iter().map(|(k, c)| {
                let (a, b) = split(*k, d);
                (b * d + a, c.clone())
            }).collect(),
        )
    }

    /// The same structure on a new basis `new_basis[i]` (old coordinates), labeled by `space`.
    pub fn change_basis(&self, name: &str, space: &SpaceRef, new_basis: &[Vect]) -> Result<FiniteHopf> {
        let o = self.order;
        let coords = Coordinates::new(&self.space, new_basis, space, o)?;
        let to_new = |v: &Vect| coords.coords(v).expect("new basis spans");
        let n = space.dim();
        if n != self.dim() {
            return Err(Error::Structural(format!("{name}: new basis has {n} elements, need {}", self.dim())));
        }
        let tensor = Space::tensor(space, space);
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(to_new(&self.mul(&new_basis[i], &new_basis[j])));
            }
        }
        let mult = SparseBilinear::from_table(space, space, space, table)?;
        let unit = to_new(&self.unit);
        let d = self.dim();
        let mut comult = Vec::with_capacity(n);
        let mut antipode = Vec::with_capacity(n);
        let mut antipode_inv = Vec::with_capacity(n);
        let old_images: Vec<Vect> = (0..d).map(|i| to_new(&self.basis(i))).collect();
        for b in new_basis {
            let mut acc = Accumulator::new(tensor.id());
            for (k, c) in self.coproduct(b).terms() {
                let (x, y) = split(*k, d);
                acc.add_scaled(&outer(&old_images[x], &old_images[y], tensor.id(), n), c);
            }
            comult.push(acc.finish());
            antipode.push(to_new(&self.s(b)));
            antipode_inv.push(to_new(&self.s_inv(b)));
        }
        let data = HopfData {
            name: name.to_string(),
            order: o,
            space: space.clone(),
            mult,
            unit,
            comult: SparseLinear::from_table(space, &tensor, comult)?,
            counit: new_basis.iter().map(|b| self.counit(b)).collect(),
            antipode: SparseLinear::from_table(space, space, antipode)?,
        };
        let gens = self.generators.iter().map(|(n, g)| (n.clone(), to_new(g))).collect();
        Ok(FiniteHopf::with_antipode_inverse(data, SparseLinear::from_table(space, space, antipode_inv)?)?.with_generators(gens))
    }

    /// Replaces the structure maps listed in `edit`, keeping everything else. For mutation fixtures.
    pub fn modified(&self, edit: impl FnOnce(&mut HopfData)) -> Result<FiniteHopf> {
        let mut d = self.data();
        edit(&mut d);
        FiniteHopf::new(d)
    }

    /// A relabeled copy with the same structure constants and a new space.
    pub fn relabeled(&self, name: &str, space: &SpaceRef) -> Result<FiniteHopf> {
        let basis: Vec<Vect> = (0..self.dim()).map(|i| self.basis(i)).collect();
        self.change_basis(name, space, &basis)
    }
}
