use crate::linalg::{split, SparseLinear, Vect};

use super::{FiniteHopf, HopfData};

impl FiniteHopf {
    /// Opposite multiplication, antipode replaced by its inverse. Same basis space.
    pub fn op(&self) -> FiniteHopf {
        let data = HopfData {
            name: toggle(&self.name, "op"),
            mult: self.mult.swapped(),
            antipode: self.antipode_inverse.clone(),
            ..self.data()
        };
        FiniteHopf::with_antipode_inverse(data, self.antipode.clone())
            .expect("op of a valid Hopf algebra")
            .with_generators(self.generators.clone())
    }

    /// Opposite comultiplication, antipode replaced by its inverse. Same basis space.
    pub fn cop(&self) -> FiniteHopf {
        let d = self.dim();
        let tid = self.tensor.id();
        let images = (0..d)
            .map(|i| {
                let terms = self.comult.image(i).terms().iter().map(|(k, c)| {
                    let (a, b) = split(*k, d);
                    (b * d + a, c.clone())
                }).collect();
                Vect::from_terms(tid, terms)
            })
            .collect();
        let data = HopfData {
            name: toggle(&self.name, "cop"),
            comult: SparseLinear::from_table(&self.space, &self.tensor, images).expect("shapes match"),
            antipode: self.antipode_inverse.clone(),
            ..self.data()
        };
        FiniteHopf::with_antipode_inverse(data, self.antipode.clone())
            .expect("cop of a valid Hopf algebra")
            .with_generators(self.generators.clone())
    }
}

fn toggle(name: &str, tag: &str) -> String {
    let suffix = format!("^{tag}");
    match name.strip_suffix(&suffix) {
        Some(base) => base.to_string(),
        None => format!("{name}{suffix}"),
    }
}
