use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::echelon::Subspace;
use super::maps::{SparseBilinear, SparseLinear};
use super::space::{BasisLabel, Space, SpaceRef};
use super::vect::Vect;

/// What kind of closure [`span_closure`] computes.
#[derive(Clone, Debug)]
pub enum ClosureMode {
    /// Smallest subalgebra containing the seed and `unit`.
    Subalgebra { unit: Vect },
    /// Smallest two-sided ideal containing the seed; `generators` generate the ambient algebra.
    TwoSidedIdeal { generators: Vec<Vect> },
}

/// Fixed-point closure of `seed` under multiplication.
///
/// Each newly found basis vector is multiplied by the generators only (the seed itself in
/// subalgebra mode); bilinearity makes this enough.
pub fn span_closure(ambient: &SpaceRef, seed: &[Vect], mult: &SparseBilinear, mode: &ClosureMode) -> Result<Subspace> {
    if mult.left().id() != ambient.id() || mult.right().id() != ambient.id() || mult.codomain().id() != ambient.id() {
        return Err(Error::Structural(format!("product is not defined on {}", ambient.name())));
    }
    let mut s = Subspace::zero(ambient);
    let mut queue: VecDeque<Vect> = VecDeque::new();
    let push = |s: &mut Subspace, q: &mut VecDeque<Vect>, v: Vect| {
        let r = s.reduce(&v);
        if !r.is_zero() {
            s.insert(&r);
            q.push_back(r);
        }
    };
    for v in seed {
        if v.space() != ambient.id() {
            return Err(Error::Structural(format!("seed vector outside {}", ambient.name())));
        }
        push(&mut s, &mut queue, v.clone());
    }
    match mode {
        ClosureMode::Subalgebra { unit } => {
            push(&mut s, &mut queue, unit.clone());
            let gens: Vec<Vect> = seed.to_vec();
            while let Some(v) = queue.pop_front() {
                for g in &gens {
                    push(&mut s, &mut queue, mult.apply(&v, g));
                }
            }
        }
        ClosureMode::TwoSidedIdeal { generators } => {
            while let Some(v) = queue.pop_front() {
                for g in generators {
                    push(&mut s, &mut queue, mult.apply(g, &v));
                    push(&mut s, &mut queue, mult.apply(&v, g));
                }
            }
        }
    }
    Ok(s)
}

/// A quotient `V / I` with basis the non-pivot labels of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub space: SpaceRef,
    pub projection: SparseLinear,
    pub section: SparseLinear,
    pub ideal: Subspace,
    /// Ambient index of each quotient basis element.
    pub reps: Vec<usize>,
}

/// Builds the canonical quotient by an echelonized subspace.
pub fn quotient_space(ambient: &SpaceRef, ideal: &Subspace, name: &str, order: u32) -> Result<Quotient> {
    if ideal.ambient() != ambient.id() {
        return Err(Error::Structural("ideal lives in a different space".into()));
    }
    let reps = ideal.complement();
    let labels = reps.iter().map(|&i| BasisLabel { tuple: ambient.tuple(i), name: ambient.label(i) }).collect();
    let space = Space::new(name, labels);
    let mut pos = vec![usize::MAX; ambient.dim()];
    for (k, &i) in reps.iter().enumerate() {
        pos[i] = k;
    }
    let qid = space.id();
    let images = (0..ambient.dim())
        .map(|i| {
            let r = ideal.reduce(&Vect::basis(ambient, i, order));
            let terms = r.into_terms().into_iter().map(|(j, c)| (pos[j], c)).collect();
            Vect::from_terms(qid, terms)
        })
        .collect();
    let projection = SparseLinear::from_table(ambient, &space, images)?;
    let section_images = reps.iter().map(|&i| Vect::basis(ambient, i, order)).collect();
    let section = SparseLinear::from_table(&space, ambient, section_images)?;
    Ok(Quotient { space, projection, section, ideal: ideal.clone(), reps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cyclotomic;

    // Z/4 group algebra with basis g^0..g^3.
    fn group_algebra() -> (SpaceRef, SparseBilinear) {
        let s = Space::from_names("cz4", (0..4).map(|i| format!("g^{i}")).collect());
        let mut t = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                t.push(Vect::basis(&s, (i + j) % 4, 8));
            }
        }
        let m = SparseBilinear::from_table(&s, &s, &s, t).unwrap();
        (s, m)
    }

    #[test]
    fn unit_closure_is_line() {
        let (s, m) = group_algebra();
        let one = Vect::basis(&s, 0, 8);
        let c = span_closure(&s, &[one.clone()], &m, &ClosureMode::Subalgebra { unit: one }).unwrap();
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn subgroup_closure() {
        let (s, m) = group_algebra();
        let one = Vect::basis(&s, 0, 8);
        let g2 = Vect::basis(&s, 2, 8);
        let c = span_closure(&s, &[g2], &m, &ClosureMode::Subalgebra { unit: one }).unwrap();
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn augmentation_ideal_quotient() {
        let (s, m) = group_algebra();
        let o = 8;
        let seed = Vect::basis(&s, 1, o).sub(&Vect::basis(&s, 0, o));
        let gens = vec![Vect::basis(&s, 1, o)];
        let i = span_closure(&s, &[seed], &m, &ClosureMode::TwoSidedIdeal { generators: gens }).unwrap();
        assert_eq!(i.dim(), 3);
        let q = quotient_space(&s, &i, "cz4/aug", o).unwrap();
        assert_eq!(q.space.dim(), 1);
        assert!(q.projection.compose(&q.section).same_as(&SparseLinear::identity(&q.space, o)));
        for k in 0..4 {
            let e = Vect::basis(&s, k, o);
            let back = q.section.apply(&q.projection.apply(&e)).sub(&e);
            assert!(i.contains(&back));
        }
        let _ = Cyclotomic::one(o);
    }

    #[test]
    fn zero_and_full_ideals() {
        let (s, _) = group_algebra();
        let z = Subspace::zero(&s);
        let q = quotient_space(&s, &z, "same", 8).unwrap();
        assert!(q.projection.same_as(&SparseLinear::from_table(&s, &q.space, (0..4).map(|i| Vect::basis(&q.space, i, 8)).collect()).unwrap()));
        let full = crate::linalg::echelonize(&s, &(0..4).map(|i| Vect::basis(&s, i, 8)).collect::<Vec<_>>()).unwrap();
        assert_eq!(quotient_space(&s, &full, "zero", 8).unwrap().space.dim(), 0);
    }
}
