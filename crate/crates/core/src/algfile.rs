//! Canonical algebra files: structure constants as sorted-key json.
//!
//! Every tensor is a list of sparse entries sorted by index tuple; scalars are coefficient arrays
//! in the power basis of `Q(zeta_N)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{Algebra, FiniteHopf, HopfData};
use crate::linalg::{Space, SpaceRef, SparseBilinear, SparseLinear, Vect};
use crate::report::{scalar_from_json, scalar_to_json, ScalarJson};
use crate::scalar::Cyclotomic;
use crate::ydcat::YDModuleAlgebra;

pub const ALGEBRA_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    #[serde(rename = "type")]
    pub kind: String,
    pub order: u32,
}

/// An action `H ⊗ X → X` (`[h, x, y, c]`) or coaction `X → H ⊗ X` (`[x, h, y, c]`) by the named Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureBlock {
    pub hopf: String,
    pub hopf_dim: usize,
    pub entries: Vec<(usize, usize, usize, ScalarJson)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub schema_version: u32,
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Vec<(usize, ScalarJson)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<(usize, ScalarJson)>>,
    pub mult: Vec<(usize, usize, usize, ScalarJson)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<(usize, usize, usize, ScalarJson)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, ScalarJson)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<StructureBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<StructureBlock>,
}

fn vec_entries(v: &Vect) -> Vec<(usize, ScalarJson)> {
    v.terms().iter().map(|(i, c)| (*i, scalar_to_json(c))).collect()
}

fn tri(e: Vec<(usize, usize, usize, Cyclotomic)>) -> Vec<(usize, usize, usize, ScalarJson)> {
    e.into_iter().map(|(i, j, k, c)| (i, j, k, scalar_to_json(&c))).collect()
}

impl AlgebraFile {
    fn skeleton(a: &Algebra) -> Self {
        AlgebraFile {
            schema_version: ALGEBRA_SCHEMA_VERSION,
            name: a.name.clone(),
            field: FieldSpec { kind: "cyclotomic".into(), order: a.order },
            dim: a.dim(),
            labels: a.space.labels(),
            unit: vec_entries(&a.unit),
            counit: None,
            mult: tri(a.mult.entries()),
            comult: None,
            antipode: None,
            action: None,
            coaction: None,
        }
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        Self::skeleton(a)
    }

    pub fn from_hopf(h: &FiniteHopf) -> Result<Self> {
        let mut f = Self::skeleton(&h.algebra());
        f.counit = Some(h.counit_values().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, scalar_to_json(c))).collect());
        f.comult = Some(tri(h.comult().colinear_entries()?));
        f.antipode = Some(h.antipode().entries().into_iter().map(|(i, j, c)| (i, j, scalar_to_json(&c))).collect());
        Ok(f)
    }

    /// The algebra with its action and coaction; `hopf` names the acting Hopf algebra.
    pub fn from_yd(y: &YDModuleAlgebra, hopf: &str) -> Result<Self> {
        let mut f = Self::skeleton(&y.algebra);
        f.name = y.name.clone();
        let hd = y.hopf.dim();
        f.action = Some(StructureBlock { hopf: hopf.into(), hopf_dim: hd, entries: tri(y.action.entries()) });
        f.coaction = Some(StructureBlock { hopf: hopf.into(), hopf_dim: hd, entries: tri(y.coaction.colinear_entries()?) });
        Ok(f)
    }

    /// Sorted-key compact json with a trailing newline.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("algebra file serializes");
        let mut s = serde_json::to_string(&v).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: AlgebraFile = serde_json::from_str(s).map_err(|e| Error::Format(format!("algebra json: {e}")))?;
        if f.schema_version != ALGEBRA_SCHEMA_VERSION {
            return Err(Error::Format(format!("unsupported algebra schema version {}", f.schema_version)));
        }
        if f.field.kind != "cyclotomic" {
            return Err(Error::Format(format!("unsupported field type {:?}", f.field.kind)));
        }
        if f.labels.len() != f.dim {
            return Err(Error::Format(format!("{} labels for dimension {}", f.labels.len(), f.dim)));
        }
        Ok(f)
    }

    fn scalar(&self, s: &ScalarJson) -> Result<Cyclotomic> {
        scalar_from_json(self.field.order, s)
    }

    fn space(&self) -> SpaceRef {
        Space::from_names(self.name.clone(), self.labels.clone())
    }

    fn vect(&self, space: &SpaceRef, entries: &[(usize, ScalarJson)]) -> Result<Vect> {
        let mut terms = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            if *i >= space.dim() {
                return Err(Error::Format(format!("index {i} out of range for dimension {}", space.dim())));
            }
            terms.push((*i, self.scalar(c)?));
        }
        Ok(Vect::from_terms(space.id(), terms))
    }

    fn bilinear(&self, l: &SpaceRef, r: &SpaceRef, c: &SpaceRef, e: &[(usize, usize, usize, ScalarJson)]) -> Result<SparseBilinear> {
        let entries = e.iter().map(|(i, j, k, s)| Ok((*i, *j, *k, self.scalar(s)?))).collect::<Result<Vec<_>>>()?;
        SparseBilinear::from_entries(l, r, c, entries)
    }

    fn algebra_on(&self, space: &SpaceRef) -> Result<Algebra> {
        let mult = self.bilinear(space, space, space, &self.mult)?;
        let unit = self.vect(space, &self.unit)?;
        Algebra::new(self.name.clone(), self.field.order, space, mult, unit)
    }

    /// The algebra part on a fresh space.
    pub fn to_algebra(&self) -> Result<Algebra> {
        self.algebra_on(&self.space())
    }

    /// Requires the counit, comultiplication, and antipode blocks.
    pub fn to_hopf(&self) -> Result<FiniteHopf> {
        let missing = |what: &str| Error::Format(format!("{} has no {what} block", self.name));
        let space = self.space();
        let a = self.algebra_on(&space)?;
        let tensor = Space::tensor(&space, &space);
        let n = self.dim;
        let counit_v = self.vect(&space, self.counit.as_ref().ok_or_else(|| missing("counit"))?)?;
        let mut counit = vec![Cyclotomic::zero(self.field.order); n];
        for (i, c) in counit_v.terms() {
            counit[*i] = c.clone();
        }
        let comult_e = self.comult.as_ref().ok_or_else(|| missing("comult"))?;
        let mut images = vec![Vec::new(); n];
        for (i, j, k, s) in comult_e {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::Format(format!("comult entry ({i}, {j}, {k}) out of range")));
            }
            images[*i].push((j * n + k, self.scalar(s)?));
        }
        let comult = SparseLinear::from_table(&space, &tensor, images.into_iter().map(|t| Vect::from_terms(tensor.id(), t)).collect())?;
        let mut s_images = vec![Vec::new(); n];
        for (i, j, s) in self.antipode.as_ref().ok_or_else(|| missing("antipode"))? {
            if *i >= n || *j >= n {
                return Err(Error::Format(format!("antipode entry ({i}, {j}) out of range")));
            }
            s_images[*i].push((*j, self.scalar(s)?));
        }
        let antipode = SparseLinear::from_table(&space, &space, s_images.into_iter().map(|t| Vect::from_terms(space.id(), t)).collect())?;
        FiniteHopf::new(HopfData { name: self.name.clone(), order: self.field.order, space, mult: a.mult, unit: a.unit, comult, counit, antipode })
    }

    /// Re-attaches the action and coaction to `hopf`, whose dimension must match the blocks.
    pub fn to_yd(&self, hopf: &FiniteHopf) -> Result<YDModuleAlgebra> {
        let (act, co) = match (&self.action, &self.coaction) {
            (Some(a), Some(c)) => (a, c),
            _ => return Err(Error::Format(format!("{} has no action/coaction blocks", self.name))),
        };
        if act.hopf_dim != hopf.dim() || co.hopf_dim != hopf.dim() {
            return Err(Error::Format(format!("blocks refer to a {}-dimensional Hopf algebra, got {}", act.hopf_dim, hopf.dim())));
        }
        let space = self.space();
        let a = self.algebra_on(&space)?;
        let action = self.bilinear(hopf.space(), &space, &space, &act.entries)?;
        let hx = Space::tensor(hopf.space(), &space);
        let n = self.dim;
        let mut images = vec![Vec::new(); n];
        for (x, h, y, s) in &co.entries {
            if *x >= n || *h >= hopf.dim() || *y >= n {
                return Err(Error::Format(format!("coaction entry ({x}, {h}, {y}) out of range")));
            }
            images[*x].push((h * n + y, self.scalar(s)?));
        }
        let coaction = SparseLinear::from_table(&space, &hx, images.into_iter().map(|t| Vect::from_terms(hx.id(), t)).collect())?;
        YDModuleAlgebra::new(self.name.clone(), hopf.clone(), a, action, coaction)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::examples::group_algebra;

    #[test]
    fn hopf_round_trip_is_byte_identical() {
        let h = group_algebra(3, 12).unwrap();
        let f = AlgebraFile::from_hopf(&h).unwrap();
        let s = f.to_json();
        let back = AlgebraFile::from_json(&s).unwrap().to_hopf().unwrap();
        assert_eq!(AlgebraFile::from_hopf(&back).unwrap().to_json(), s);
    }

    #[test]
    fn rejects_bad_schema_and_missing_blocks() {
        let h = group_algebra(2, 4).unwrap();
        let mut f = AlgebraFile::from_algebra(&h.algebra());
        assert!(f.to_hopf().is_err());
        f.schema_version = 99;
        assert!(AlgebraFile::from_json(&f.to_json()).is_err());
    }
}
