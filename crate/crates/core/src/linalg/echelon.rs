use std::collections::HashMap;

use crate::error::{Error, Result};
use super::maps::SparseLinear;
use super::space::{SpaceId, SpaceRef};
use super::vect::Vect;

/// A subspace in reduced row-echelon form.
///
/// Each row's pivot is its largest basis index, normalized to 1, and no other row has a
/// nonzero entry in a pivot column. The reduced form is unique for a given subspace, so
/// equal subspaces have identical rows regardless of how they were generated.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: SpaceId,
    ambient_dim: usize,
    rows: Vec<Vect>,
    pivot_row: HashMap<usize, usize>,
}

impl Subspace {
    pub fn zero(ambient: &SpaceRef) -> Self {
        Subspace { ambient: ambient.id(), ambient_dim: ambient.dim(), rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn ambient(&self) -> SpaceId {
        self.ambient
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Rows sorted by pivot.
    pub fn basis(&self) -> Vec<Vect> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|r| r.leading().map(|l| l.0));
        rows
    }

    /// Pivot indices, ascending.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_row.keys().copied().collect();
        p.sort_unstable();
        p
    }

    /// Non-pivot indices, ascending: the canonical complement.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|i| !self.pivot_row.contains_key(i)).collect()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivot_row.contains_key(&i)
    }

    /// Normal form of `v` modulo the subspace; zero iff `v` belongs to it.
    pub fn reduce(&self, v: &Vect) -> Vect {
        assert_eq!(v.space(), self.ambient, "vector outside the ambient space");
        let mut out = v.clone();
        // Rows never contain foreign pivot columns, so one pass over the input support suffices.
        for (i, _) in v.terms() {
            if let Some(&r) = self.pivot_row.get(i) {
                if let Some(c) = out.coeff(*i).cloned() {
                    out = out.add_scaled(&self.rows[r], &-c);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &Vect) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds a vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: &Vect) -> bool {
        let r = self.reduce(v);
        self.insert_reduced(r)
    }

    fn insert_reduced(&mut self, r: Vect) -> bool {
        let Some((p, lead)) = r.leading() else { return false };
        let inv = lead.inv().expect("nonzero leading coefficient");
        let row = r.scale(&inv);
        for existing in self.rows.iter_mut() {
            if let Some(c) = existing.coeff(p).cloned() {
                *existing = existing.add_scaled(&row, &-c);
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Whether every row of `other` lies in `self`.
    pub fn includes(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.includes(other)
    }
}

/// Reduced row-echelon basis of the span of `vectors`.
pub fn echelonize(ambient: &SpaceRef, vectors: &[Vect]) -> Result<Subspace> {
    let mut s = Subspace::zero(ambient);
    for v in vectors {
        if v.space() != ambient.id() {
            return Err(Error::Structural(format!("vector outside {}", ambient.name())));
        }
        s.insert(v);
    }
    Ok(s)
}

/// Row reduction that tracks, for every row, the combination of inputs producing it.
pub(crate) struct Tracked {
    rows: Vec<(Vect, Vect)>,
    pivot_row: HashMap<usize, usize>,
}

impl Tracked {
    pub(crate) fn new() -> Self {
        Tracked { rows: Vec::new(), pivot_row: HashMap::new() }
    }

    fn reduce(&self, v: &Vect, combo: &Vect) -> (Vect, Vect) {
        let (mut out, mut cmb) = (v.clone(), combo.clone());
        for (i, _) in v.terms() {
            if let Some(&r) = self.pivot_row.get(i) {
                if let Some(c) = out.coeff(*i).cloned() {
                    let m = -c;
                    out = out.add_scaled(&self.rows[r].0, &m);
                    cmb = cmb.add_scaled(&self.rows[r].1, &m);
                }
            }
        }
        (out, cmb)
    }

    /// Inserts `v` (the image of `combo`); returns the reduced combination if `v` was dependent.
    pub(crate) fn insert(&mut self, v: &Vect, combo: &Vect) -> Option<Vect> {
        let (r, c) = self.reduce(v, combo);
        let Some((p, lead)) = r.leading() else { return Some(c) };
        let inv = lead.inv().expect("nonzero");
        let (row, cmb) = (r.scale(&inv), c.scale(&inv));
        for (er, ec) in self.rows.iter_mut() {
            if let Some(x) = er.coeff(p).cloned() {
                let m = -x;
                *er = er.add_scaled(&row, &m);
                *ec = ec.add_scaled(&cmb, &m);
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push((row, cmb));
        None
    }

    /// Expresses `v` as a combination of inserted vectors, if it lies in their span.
    pub(crate) fn solve(&self, v: &Vect, combo_space: SpaceId) -> Option<Vect> {
        let (r, c) = self.reduce(v, &Vect::zero_in(combo_space));
        if r.is_zero() {
            Some(c.neg())
        } else {
            None
        }
    }
}

/// Basis of `{x : f(x) = 0}` for `f` given by basis images.
pub fn kernel(f: &SparseLinear, order: u32) -> Vec<Vect> {
    let dom = f.domain().clone();
    let mut t = Tracked::new();
    let mut out = Vec::new();
    for i in 0..dom.dim() {
        if let Some(k) = t.insert(&f.image(i), &Vect::basis(&dom, i, order)) {
            out.push(k);
        }
    }
    out
}

/// Exact inverse of a square invertible linear map.
pub fn linear_map_inverse(f: &SparseLinear, name: &str, order: u32) -> Result<SparseLinear> {
    let (dom, cod) = (f.domain().clone(), f.codomain().clone());
    if dom.dim() != cod.dim() {
        return Err(Error::Singular(format!("{name} (not square: {} -> {})", dom.dim(), cod.dim())));
    }
    let mut t = Tracked::new();
    for i in 0..dom.dim() {
        if t.insert(&f.image(i), &Vect::basis(&dom, i, order)).is_some() {
            return Err(Error::Singular(name.to_string()));
        }
    }
    // Full rank: the reduced rows are exactly the unit vectors of the codomain.
    let mut images = vec![Vect::zero(&dom); cod.dim()];
    for (row, combo) in &t.rows {
        let (p, _) = row.leading().expect("nonzero row");
        debug_assert_eq!(row.len(), 1);
        images[p] = combo.clone();
    }
    SparseLinear::from_table(&cod, &dom, images)
}

/// Coordinates with respect to an arbitrary linearly independent family.
pub struct Coordinates {
    tracked: Tracked,
    coord_space: SpaceRef,
    ambient: SpaceId,
}

impl std::fmt::Debug for Coordinates {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Coordinates({})", self.coord_space.name())
    }
}

impl Coordinates {
    /// Fails if the family is dependent.
    pub fn new(ambient: &SpaceRef, family: &[Vect], coord_space: &SpaceRef, order: u32) -> Result<Self> {
        if family.len() != coord_space.dim() {
            return Err(Error::Structural("family size differs from coordinate space dimension".into()));
        }
        let mut t = Tracked::new();
        for (i, v) in family.iter().enumerate() {
            if t.insert(v, &Vect::basis(coord_space, i, order)).is_some() {
                return Err(Error::Structural(format!("family member {i} is linearly dependent on earlier ones")));
            }
        }
        Ok(Coordinates { tracked: t, coord_space: coord_space.clone(), ambient: ambient.id() })
    }

    pub fn coord_space(&self) -> &SpaceRef {
        &self.coord_space
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &Vect) -> Option<Vect> {
        assert_eq!(v.space(), self.ambient);
        self.tracked.solve(v, self.coord_space.id())
    }
}

/// Coordinates modulo a subspace: `v ≡ Σ c_i r_i (mod ideal)`.
pub struct QuotientCoordinates {
    ideal: Subspace,
    coords: Coordinates,
}

impl QuotientCoordinates {
    /// `reps` must be independent modulo `ideal`.
    pub fn new(ambient: &SpaceRef, ideal: Subspace, reps: &[Vect], coord_space: &SpaceRef, order: u32) -> Result<Self> {
        let reduced: Vec<Vect> = reps.iter().map(|r| ideal.reduce(r)).collect();
        let coords = Coordinates::new(ambient, &reduced, coord_space, order)?;
        Ok(QuotientCoordinates { ideal, coords })
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn coords(&self, v: &Vect) -> Option<Vect> {
        self.coords.coords(&self.ideal.reduce(v))
    }
}

/// A determinant-free rank helper: dimension of the span.
pub fn rank(ambient: &SpaceRef, vectors: &[Vect]) -> Result<usize> {
    Ok(echelonize(ambient, vectors)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Space;
    use crate::scalar::Cyclotomic;

    fn sp(n: usize) -> SpaceRef {
        Space::from_names(format!("v{n}"), (0..n).map(|i| format!("e{i}")).collect())
    }

    #[test]
    fn duplicate_vectors_have_rank_one() {
        let s = sp(3);
        let v = Vect::basis(&s, 0, 8).add(&Vect::basis(&s, 2, 8));
        let w = v.scale(&Cyclotomic::from_int(8, 2));
        assert_eq!(echelonize(&s, &[v, w]).unwrap().dim(), 1);
        assert_eq!(echelonize(&s, &[]).unwrap().dim(), 0);
    }

    #[test]
    fn reduced_form_is_canonical() {
        let s = sp(4);
        let o = 8;
        let a = Vect::basis(&s, 0, o).add(&Vect::basis(&s, 3, o));
        let b = Vect::basis(&s, 1, o).add(&Vect::basis(&s, 3, o));
        let x = echelonize(&s, &[a.clone(), b.clone()]).unwrap();
        let y = echelonize(&s, &[b.add(&a), a.sub(&b)]).unwrap();
        assert_eq!(x.basis(), y.basis());
        assert_eq!(x.complement(), vec![0, 2]);
        let again = echelonize(&s, &x.basis()).unwrap();
        assert_eq!(again.basis(), x.basis());
    }

    #[test]
    fn mixed_spaces_rejected() {
        let s = sp(2);
        let t = sp(3);
        assert!(echelonize(&s, &[Vect::basis(&t, 0, 8)]).is_err());
    }

    #[test]
    fn inverse_and_kernel() {
        let s = sp(3);
        let o = 12;
        let q = Cyclotomic::zeta_pow(o, 2);
        let f = SparseLinear::from_table(
            &s,
            &s,
            vec![
                Vect::basis(&s, 1, o),
                Vect::basis(&s, 0, o).scale(&q),
                Vect::basis(&s, 2, o).add(&Vect::basis(&s, 0, o)),
            ],
        )
        .unwrap();
        let g = linear_map_inverse(&f, "f", o).unwrap();
        assert!(f.compose(&g).same_as(&SparseLinear::identity(&s, o)));
        assert!(g.compose(&f).same_as(&SparseLinear::identity(&s, o)));
        let sing = SparseLinear::from_table(&s, &s, vec![Vect::basis(&s, 0, o), Vect::basis(&s, 0, o), Vect::zero(&s)]).unwrap();
        assert_eq!(kernel(&sing, o).len(), 2);
        assert!(matches!(linear_map_inverse(&sing, "sing", o), Err(Error::Singular(n)) if n == "sing"));
    }
}
