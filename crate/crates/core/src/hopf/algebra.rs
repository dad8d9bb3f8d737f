use crate::error::{Error, Result};
use crate::linalg::{SpaceRef, SparseBilinear, Vect};
use crate::report::{Axis, CheckResult, Mode, Property};
use crate::scalar::Cyclotomic;

use super::FiniteHopf;

/// A unital associative algebra on a labeled basis.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub name: String,
    pub order: u32,
    pub space: SpaceRef,
    pub mult: SparseBilinear,
    pub unit: Vect,
    /// Named generators for generator-mode checks; may be empty.
    pub generators: Vec<(String, Vect)>,
}

impl Algebra {
    pub fn new(name: impl Into<String>, order: u32, space: &SpaceRef, mult: SparseBilinear, unit: Vect) -> Result<Self> {
        let name = name.into();
        let sid = space.id();
        if mult.left().id() != sid || mult.right().id() != sid || mult.codomain().id() != sid || unit.space() != sid {
            return Err(Error::Structural(format!("{name}: product or unit not on {}", space.name())));
        }
        Ok(Algebra { name, order, space: space.clone(), mult, unit, generators: Vec::new() })
    }

    pub fn with_generators(mut self, gens: Vec<(String, Vect)>) -> Self {
        self.generators = gens;
        self
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn one(&self) -> Vect {
        self.unit.clone()
    }

    pub fn zero(&self) -> Vect {
        Vect::zero(&self.space)
    }

    pub fn basis(&self, i: usize) -> Vect {
        Vect::basis(&self.space, i, self.order)
    }

    pub fn scalar(&self, c: Cyclotomic) -> Vect {
        self.unit.scale(&c)
    }

    pub fn element(&self, label: &str) -> Option<Vect> {
        self.space.index_of(label).map(|i| self.basis(i))
    }

    pub fn mul(&self, x: &Vect, y: &Vect) -> Vect {
        self.mult.apply(x, y)
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

    pub fn axis(&self, name: &str) -> Axis {
        let a = Axis::basis_of(name, &self.space, self.order);
        if self.generators.is_empty() {
            a
        } else {
            a.with_generators(self.generators.clone())
        }
    }

    /// Associativity on basis triples and the two unit laws.
    pub fn check_algebra(&self, mode: &Mode) -> CheckResult {
        let o = self.order;
        let assoc = Property::new(
            format!("{}.associativity", self.name),
            vec![
                Axis::basis_of("x", &self.space, o),
                Axis::basis_of("y", &self.space, o),
                Axis::basis_of("z", &self.space, o),
            ],
            &self.space,
            |v| (self.mul(&self.mul(v[0], v[1]), v[2]), self.mul(v[0], &self.mul(v[1], v[2]))),
        )
        .run(mode);
        let left = Property::new(format!("{}.unit-left", self.name), vec![Axis::basis_of("x", &self.space, o)], &self.space, |v| {
            (self.mul(&self.unit, v[0]), v[0].clone())
        })
        .run(&Mode::Exhaustive);
        let right = Property::new(format!("{}.unit-right", self.name), vec![Axis::basis_of("x", &self.space, o)], &self.space, |v| {
            (self.mul(v[0], &self.unit), v[0].clone())
        })
        .run(&Mode::Exhaustive);
        CheckResult::all(format!("algebra.{}", self.name), vec![assoc, left, right])
    }

    /// True when both products agree on every basis pair.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.dim() == other.dim() && self.unit.terms() == other.unit.terms() && {
            let n = self.dim();
            (0..n).all(|i| (0..n).all(|j| self.mult.basis(i, j).terms() == other.mult.basis(i, j).terms()))
        }
    }
}

impl FiniteHopf {
    /// The underlying algebra.
    pub fn algebra(&self) -> Algebra {
        Algebra {
            name: self.name.clone(),
            order: self.order,
            space: self.space.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            generators: self.generators.clone(),
        }
    }
}
