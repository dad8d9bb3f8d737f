use std::borrow::Cow;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Cyclotomic;

use super::space::{Space, SpaceRef};
use super::vect::{split, Accumulator, Vect};

type LinRule = Arc<dyn Fn(usize) -> Vect + Send + Sync>;
type BilRule = Arc<dyn Fn(usize, usize) -> Vect + Send + Sync>;

#[derive(Clone)]
enum LinRepr {
    Table(Arc<Vec<Vect>>),
    Rule(LinRule),
}

/// A linear map given by the images of basis vectors, either tabulated or computed on demand.
#[derive(Clone)]
pub struct SparseLinear {
    domain: SpaceRef,
    codomain: SpaceRef,
    repr: LinRepr,
}

/// A linear map `V -> A ⊗ V` or `V -> V ⊗ V`; a [`SparseLinear`] whose codomain is a tensor space.
pub type SparseColinear = SparseLinear;

impl fmt::Debug for SparseLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseLinear({} -> {})", self.domain.name(), self.codomain.name())
    }
}

impl SparseLinear {
    pub fn from_table(domain: &SpaceRef, codomain: &SpaceRef, images: Vec<Vect>) -> Result<Self> {
        if images.len() != domain.dim() {
            return Err(Error::Structural(format!(
                "linear map on {} needs {} images, got {}",
                domain.name(),
                domain.dim(),
                images.len()
            )));
        }
        if let Some(v) = images.iter().find(|v| v.space() != codomain.id()) {
            return Err(Error::Structural(format!("image {v:?} not in {}", codomain.name())));
        }
        Ok(SparseLinear { domain: domain.clone(), codomain: codomain.clone(), repr: LinRepr::Table(Arc::new(images)) })
    }

    pub fn from_rule(
        domain: &SpaceRef,
        codomain: &SpaceRef,
        f: impl Fn(usize) -> Vect + Send + Sync + 'static,
    ) -> Self {
        SparseLinear { domain: domain.clone(), codomain: codomain.clone(), repr: LinRepr::Rule(Arc::new(f)) }
    }

    pub fn identity(space: &SpaceRef, order: u32) -> Self {
        let images = (0..space.dim()).map(|i| Vect::basis(space, i, order)).collect();
        Self::from_table(space, space, images).expect("identity is well formed")
    }

    pub fn domain(&self) -> &SpaceRef {
        &self.domain
    }

    pub fn codomain(&self) -> &SpaceRef {
        &self.codomain
    }

    pub fn is_table(&self) -> bool {
        matches!(self.repr, LinRepr::Table(_))
    }

    pub fn image(&self, i: usize) -> Cow<'_, Vect> {
        match &self.repr {
            LinRepr::Table(t) => Cow::Borrowed(&t[i]),
            LinRepr::Rule(f) => Cow::Owned(f(i)),
        }
    }

    pub fn apply(&self, v: &Vect) -> Vect {
        debug_assert_eq!(v.space(), self.domain.id(), "input not in {}", self.domain.name());
        if let [(i, c)] = v.terms() {
            return self.image(*i).scale(c);
        }
        let mut acc = Accumulator::new(self.codomain.id());
        for (i, c) in v.terms() {
            acc.add_scaled(&self.image(*i), c);
        }
        acc.finish()
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &SparseLinear) -> SparseLinear {
        assert_eq!(g.codomain.id(), self.domain.id(), "composition of incompatible maps");
        if self.is_table() && g.is_table() {
            let images = (0..g.domain.dim()).map(|i| self.apply(&g.image(i))).collect();
            return Self::from_table(&g.domain, &self.codomain, images).expect("shapes match");
        }
        let (f, g2) = (self.clone(), g.clone());
        Self::from_rule(&g.domain, &self.codomain, move |i| f.apply(&g2.image(i)))
    }

    /// Tabulates all images, in parallel.
    pub fn materialize(&self) -> SparseLinear {
        match &self.repr {
            LinRepr::Table(_) => self.clone(),
            LinRepr::Rule(f) => {
                let images: Vec<Vect> = (0..self.domain.dim()).into_par_iter().map(|i| f(i)).collect();
                SparseLinear { domain: self.domain.clone(), codomain: self.codomain.clone(), repr: LinRepr::Table(Arc::new(images)) }
            }
        }
    }

    /// `f ⊗ g` on the given tensor spaces.
    pub fn tensor(f: &SparseLinear, g: &SparseLinear, domain: &SpaceRef, codomain: &SpaceRef) -> SparseLinear {
        let (f, g) = (f.clone(), g.clone());
        let dg = g.domain.dim();
        let cg = g.codomain.dim();
        let cid = codomain.id();
        Self::from_rule(domain, codomain, move |i| {
            let (a, b) = split(i, dg);
            super::vect::outer(&f.image(a), &g.image(b), cid, cg)
        })
    }

    /// `(domain index, codomain index, scalar)`, sorted.
    pub fn entries(&self) -> Vec<(usize, usize, Cyclotomic)> {
        let mut out = Vec::new();
        for i in 0..self.domain.dim() {
            for (j, c) in self.image(i).terms() {
                out.push((i, *j, c.clone()));
            }
        }
        out
    }

    /// Entries of a map into a tensor space as `(i, j, k, scalar)`.
    pub fn colinear_entries(&self) -> Result<Vec<(usize, usize, usize, Cyclotomic)>> {
        let (_, right) = self
            .codomain
            .factors()
            .ok_or_else(|| Error::Structural(format!("{} is not a tensor space", self.codomain.name())))?;
        let d = right.dim();
        Ok(self.entries().into_iter().map(|(i, jk, c)| (i, jk / d, jk % d, c)).collect())
    }

    /// Exact equality of all basis images.
    pub fn same_as(&self, other: &SparseLinear) -> bool {
        self.domain.id() == other.domain.id()
            && self.codomain.id() == other.codomain.id()
            && (0..self.domain.dim()).all(|i| self.image(i) == other.image(i))
    }
}

#[derive(Clone)]
enum BilRepr {
    Table(Arc<Vec<Vect>>),
    Rule(BilRule),
}

/// A bilinear map `U × V -> W` given on basis pairs.
#[derive(Clone)]
pub struct SparseBilinear {
    left: SpaceRef,
    right: SpaceRef,
    codomain: SpaceRef,
    repr: BilRepr,
}

impl fmt::Debug for SparseBilinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseBilinear({} × {} -> {})", self.left.name(), self.right.name(), self.codomain.name())
    }
}

impl SparseBilinear {
    /// Table indexed by `i * dim(right) + j`.
    pub fn from_table(left: &SpaceRef, right: &SpaceRef, codomain: &SpaceRef, table: Vec<Vect>) -> Result<Self> {
        if table.len() != left.dim() * right.dim() {
            return Err(Error::Structural(format!(
                "bilinear map {} × {} needs {} entries, got {}",
                left.name(),
                right.name(),
                left.dim() * right.dim(),
                table.len()
            )));
        }
        if table.iter().any(|v| v.space() != codomain.id()) {
            return Err(Error::Structural(format!("bilinear value outside {}", codomain.name())));
        }
        Ok(SparseBilinear {
            left: left.clone(),
            right: right.clone(),
            codomain: codomain.clone(),
            repr: BilRepr::Table(Arc::new(table)),
        })
    }

    pub fn from_rule(
        left: &SpaceRef,
        right: &SpaceRef,
        codomain: &SpaceRef,
        f: impl Fn(usize, usize) -> Vect + Send + Sync + 'static,
    ) -> Self {
        SparseBilinear { left: left.clone(), right: right.clone(), codomain: codomain.clone(), repr: BilRepr::Rule(Arc::new(f)) }
    }

    /// Builds from `(i, j, k, scalar)` entries.
    pub fn from_entries(
        left: &SpaceRef,
        right: &SpaceRef,
        codomain: &SpaceRef,
        entries: Vec<(usize, usize, usize, Cyclotomic)>,
    ) -> Result<Self> {
        let dr = right.dim();
        let mut buckets: Vec<Vec<(usize, Cyclotomic)>> = vec![Vec::new(); left.dim() * dr];
        for (i, j, k, c) in entries {
            if i >= left.dim() || j >= dr || k >= codomain.dim() {
                return Err(Error::Structural(format!("entry ({i}, {j}, {k}) out of bounds")));
            }
            buckets[i * dr + j].push((k, c));
        }
        let table = buckets.into_iter().map(|t| Vect::from_terms(codomain.id(), t)).collect();
        Self::from_table(left, right, codomain, table)
    }

    pub fn left(&self) -> &SpaceRef {
        &self.left
    }

    pub fn right(&self) -> &SpaceRef {
        &self.right
    }

    pub fn codomain(&self) -> &SpaceRef {
        &self.codomain
    }

    pub fn is_table(&self) -> bool {
        matches!(self.repr, BilRepr::Table(_))
    }

    pub fn basis(&self, i: usize, j: usize) -> Cow<'_, Vect> {
        match &self.repr {
            BilRepr::Table(t) => Cow::Borrowed(&t[i * self.right.dim() + j]),
            BilRepr::Rule(f) => Cow::Owned(f(i, j)),
        }
    }

    pub fn apply(&self, x: &Vect, y: &Vect) -> Vect {
        debug_assert_eq!(x.space(), self.left.id(), "left input not in {}", self.left.name());
        debug_assert_eq!(y.space(), self.right.id(), "right input not in {}", self.right.name());
        if let ([(i, a)], [(j, b)]) = (x.terms(), y.terms()) {
            let v = self.basis(*i, *j);
            return v.scale(&(a * b));
        }
        let mut acc = Accumulator::new(self.codomain.id());
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                acc.add_scaled(&self.basis(*i, *j), &(a * b));
            }
        }
        acc.finish()
    }

    /// `x ↦ f(x, y)` as a linear map.
    pub fn apply_left(&self, x: &Vect) -> impl Fn(&Vect) -> Vect + '_ {
        let x = x.clone();
        move |y| self.apply(&x, y)
    }

    /// Tabulates every basis pair, in parallel.
    pub fn materialize(&self) -> SparseBilinear {
        match &self.repr {
            BilRepr::Table(_) => self.clone(),
            BilRepr::Rule(f) => {
                let dr = self.right.dim();
                let n = self.left.dim() * dr;
                let table: Vec<Vect> = (0..n).into_par_iter().map(|k| f(k / dr, k % dr)).collect();
                SparseBilinear {
                    left: self.left.clone(),
                    right: self.right.clone(),
                    codomain: self.codomain.clone(),
                    repr: BilRepr::Table(Arc::new(table)),
                }
            }
        }
    }

    /// `(i, j, k, scalar)` sorted by index tuple.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Cyclotomic)> {
        let mut out = Vec::new();
        for i in 0..self.left.dim() {
            for j in 0..self.right.dim() {
                for (k, c) in self.basis(i, j).terms() {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// The same map with its inputs swapped: `(y, x) ↦ f(x, y)`.
    pub fn swapped(&self) -> SparseBilinear {
        let f = self.clone();
        Self::from_rule(&self.right, &self.left, &self.codomain, move |j, i| f.basis(i, j).into_owned())
    }

    /// Post-composition with a linear map on the codomain.
    pub fn then(&self, g: &SparseLinear) -> SparseBilinear {
        let (f, g2) = (self.clone(), g.clone());
        Self::from_rule(&self.left, &self.right, g.codomain(), move |i, j| g2.apply(&f.basis(i, j)))
    }

    pub fn same_as(&self, other: &SparseBilinear) -> bool {
        self.left.id() == other.left.id()
            && self.right.id() == other.right.id()
            && self.codomain.id() == other.codomain.id()
            && (0..self.left.dim()).all(|i| (0..self.right.dim()).all(|j| self.basis(i, j) == other.basis(i, j)))
    }
}

/// The linear map `X ⊗ Y -> Z` induced by a bilinear map.
pub fn linearize(f: &SparseBilinear, tensor: &SpaceRef) -> SparseLinear {
    let f = f.clone();
    let dr = f.right().dim();
    SparseLinear::from_rule(tensor, &f.codomain().clone(), move |k| f.basis(k / dr, k % dr).into_owned())
}

/// Applies a bilinear map to a tensor-space vector, `Σ c · f(x_i, y_j)`.
pub fn apply_to_tensor(f: &SparseBilinear, t: &Vect) -> Vect {
    let dr = f.right().dim();
    let mut acc = Accumulator::new(f.codomain().id());
    for (k, c) in t.terms() {
        let (i, j) = split(*k, dr);
        acc.add_scaled(&f.basis(i, j), c);
    }
    acc.finish()
}

/// A one-dimensional functional space helper: the scalar line.
pub fn scalar_line() -> SpaceRef {
    Space::line()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_identity() {
        let s = Space::from_names("s", vec!["a".into(), "b".into()]);
        let o = 8;
        let swap = SparseLinear::from_table(&s, &s, vec![Vect::basis(&s, 1, o), Vect::basis(&s, 0, o)]).unwrap();
        let id = SparseLinear::identity(&s, o);
        assert!(swap.compose(&swap).same_as(&id));
        let rule = SparseLinear::from_rule(&s, &s, {
            let s = s.clone();
            move |i| Vect::basis(&s, 1 - i, 8)
        });
        assert!(rule.materialize().same_as(&swap));
    }

    #[test]
    fn bilinear_entries_roundtrip() {
        let s = Space::from_names("s", vec!["a".into(), "b".into()]);
        let o = 8;
        let one = Cyclotomic::one(o);
        let f = SparseBilinear::from_entries(&s, &s, &s, vec![(0, 0, 0, one.clone()), (1, 1, 1, one.clone()), (0, 1, 1, one)]).unwrap();
        let g = SparseBilinear::from_entries(&s, &s, &s, f.entries()).unwrap();
        assert!(f.same_as(&g));
        assert!(SparseBilinear::from_entries(&s, &s, &s, vec![(2, 0, 0, Cyclotomic::one(o))]).is_err());
    }
}
