use std::fmt;
use std::sync::Arc;

/// Stable identifier of a labeled space, derived from its name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceId(pub u64);

fn fnv(bytes: &[u8], seed: u64) -> u64 {
    let mut h = seed;
    for b in bytes {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

const FNV_OFFSET: u64 = 0xcbf29ce484222325;

/// Canonical basis label: an integer tuple plus its rendered name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisLabel {
    pub tuple: Vec<i64>,
    pub name: String,
}

enum Labels {
    Simple(Vec<BasisLabel>),
    Tensor { left: SpaceRef, right: SpaceRef, sep: &'static str },
}

/// A finite-dimensional space with a totally ordered labeled basis.
///
/// Basis index order coincides with label order, so sorting by index is sorting by label.
pub struct Space {
    id: SpaceId,
    name: String,
    dim: usize,
    labels: Labels,
}

pub type SpaceRef = Arc<Space>;

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Space({}, dim {})", self.name, self.dim)
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Space {
    /// A space whose labels are given in ascending order.
    pub fn new(name: impl Into<String>, labels: Vec<BasisLabel>) -> SpaceRef {
        let name = name.into();
        let id = SpaceId(fnv(name.as_bytes(), FNV_OFFSET));
        Arc::new(Space { id, name, dim: labels.len(), labels: Labels::Simple(labels) })
    }

    /// Labels from plain names; tuples are the indices.
    pub fn from_names(name: impl Into<String>, names: Vec<String>) -> SpaceRef {
        let labels = names
            .into_iter()
            .enumerate()
            .map(|(i, n)| BasisLabel { tuple: vec![i as i64], name: n })
            .collect();
        Self::new(name, labels)
    }

    /// The one-dimensional scalar line.
    pub fn line() -> SpaceRef {
        Self::from_names("k", vec!["1".into()])
    }

    pub fn tensor(left: &SpaceRef, right: &SpaceRef) -> SpaceRef {
        Self::tensor_with(left, right, "⊗")
    }

    /// Tensor product with a custom separator (e.g. `⋈` or `#`) in labels and name.
    pub fn tensor_with(left: &SpaceRef, right: &SpaceRef, sep: &'static str) -> SpaceRef {
        let name = format!("({}){}({})", left.name, sep, right.name);
        let id = SpaceId(fnv(name.as_bytes(), FNV_OFFSET));
        Arc::new(Space {
            id,
            name,
            dim: left.dim * right.dim,
            labels: Labels::Tensor { left: left.clone(), right: right.clone(), sep },
        })
    }

    /// Same basis as `base` under a new name (e.g. `B^cop` reuses the labels of `B*`).
    pub fn renamed(base: &SpaceRef, name: impl Into<String>) -> SpaceRef {
        let labels = (0..base.dim).map(|i| BasisLabel { tuple: base.tuple(i), name: base.label(i) }).collect();
        Self::new(name, labels)
    }

    pub fn id(&self) -> SpaceId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Left and right factors, when this is a tensor space.
    pub fn factors(&self) -> Option<(&SpaceRef, &SpaceRef)> {
        match &self.labels {
            Labels::Tensor { left, right, .. } => Some((left, right)),
            Labels::Simple(_) => None,
        }
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Labels::Simple(l) => l[i].name.clone(),
            Labels::Tensor { left, right, sep } => {
                let d = right.dim;
                let wrap = |s: &SpaceRef, j: usize| {
                    let t = s.label(j);
                    if s.factors().is_some() {
                        format!("({t})")
                    } else {
                        t
                    }
                };
                format!("{} {} {}", wrap(left, i / d), sep, wrap(right, i % d))
            }
        }
    }

    pub fn tuple(&self, i: usize) -> Vec<i64> {
        match &self.labels {
            Labels::Simple(l) => l[i].tuple.clone(),
            Labels::Tensor { left, right, .. } => {
                let d = right.dim;
                let mut t = left.tuple(i / d);
                t.extend(right.tuple(i % d));
                t
            }
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim).map(|i| self.label(i)).collect()
    }

    /// Index of the basis element with the given name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        match &self.labels {
            Labels::Simple(l) => l.iter().position(|b| b.name == name),
            Labels::Tensor { .. } => (0..self.dim).find(|&i| self.label(i) == name),
        }
    }

    /// Index of the basis element with the given tuple.
    pub fn index_of_tuple(&self, tuple: &[i64]) -> Option<usize> {
        match &self.labels {
            Labels::Simple(l) => l.iter().position(|b| b.tuple == tuple),
            Labels::Tensor { left, right, .. } => {
                let n = left.tuple(0).len();
                if tuple.len() < n {
                    return None;
                }
                let i = left.index_of_tuple(&tuple[..n])?;
                let j = right.index_of_tuple(&tuple[n..])?;
                Some(i * right.dim + j)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_labels_and_ids() {
        let a = Space::from_names("a", vec!["x".into(), "y".into()]);
        let b = Space::from_names("b", vec!["1".into(), "2".into(), "3".into()]);
        let t = Space::tensor(&a, &b);
        assert_eq!(t.dim(), 6);
        assert_eq!(t.label(4), "y ⊗ 2");
        assert_eq!(t.tuple(4), vec![1, 1]);
        assert_eq!(t.index_of_tuple(&[1, 1]), Some(4));
        assert_eq!(Space::tensor(&a, &b).id(), t.id());
        assert_ne!(Space::tensor(&b, &a).id(), t.id());
        let tt = Space::tensor(&t, &a);
        assert_eq!(tt.label(9), "(y ⊗ 2) ⊗ y");
    }
}
