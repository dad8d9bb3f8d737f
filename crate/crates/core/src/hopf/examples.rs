//! Small reference Hopf algebras.

use crate::error::Result;
use crate::linalg::{BasisLabel, Space, SparseBilinear, SparseLinear, Vect};
use crate::scalar::Cyclotomic;

use super::{FiniteHopf, HopfData};

/// The group algebra of `Z/n` with basis `g^0 .. g^{n-1}`, over `Q(zeta_order)`.
pub fn group_algebra(n: usize, order: u32) -> Result<FiniteHopf> {
    let labels = (0..n).map(|i| BasisLabel { tuple: vec![i as i64], name: format!("g^{i}") }).collect();
    let space = Space::new(format!("C[Z/{n}]"), labels);
    let tensor = Space::tensor(&space, &space);
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(Vect::basis(&space, (i + j) % n, order));
        }
    }
    let comult = (0..n).map(|i| Vect::basis(&tensor, i * n + i, order)).collect();
    let antipode = (0..n).map(|i| Vect::basis(&space, (n - i) % n, order)).collect();
    FiniteHopf::new(HopfData {
        name: format!("C[Z/{n}]"),
        order,
        space: space.clone(),
        mult: SparseBilinear::from_table(&space, &space, &space, table)?,
        unit: Vect::basis(&space, 0, order),
        comult: SparseLinear::from_table(&space, &tensor, comult)?,
        counit: vec![Cyclotomic::one(order); n],
        antipode: SparseLinear::from_table(&space, &space, antipode)?,
    })
}

/// The one-dimensional Hopf algebra.
pub fn trivial(order: u32) -> Result<FiniteHopf> {
    let h = group_algebra(1, order)?;
    let space = Space::from_names("C", vec!["1".into()]);
    h.relabeled("C", &space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{check_hopf_axioms, dual, DualPair};
    use crate::report::Mode;

    #[test]
    fn cyclic_group_algebras_are_hopf() {
        for n in [1, 4, 8] {
            let h = group_algebra(n, 8).unwrap();
            let r = check_hopf_axioms(&h, &Mode::Exhaustive);
            assert!(r.passed(), "{r:?}");
        }
        assert!(check_hopf_axioms(&trivial(8).unwrap(), &Mode::Exhaustive).passed());
    }

    #[test]
    fn dual_is_hopf_and_reflexive() {
        let h = group_algebra(4, 8).unwrap();
        let d = dual(&h);
        assert!(check_hopf_axioms(&d, &Mode::Exhaustive).passed());
        let dd = dual(&d);
        let n = h.dim();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(dd.mul_basis(i, j).terms(), h.mul_basis(i, j).terms());
            }
            assert_eq!(dd.coproduct_basis(i).terms(), h.coproduct_basis(i).terms());
            assert_eq!(dd.s(&dd.basis(i)).terms(), h.s(&h.basis(i)).terms());
        }
        assert_eq!(dd.counit_values(), h.counit_values());
        let pair = DualPair::canonical(&h).unwrap();
        assert!(pair.check_pairing().passed());
    }

    #[test]
    fn cop_of_cocommutative_is_itself() {
        let h = group_algebra(4, 8).unwrap();
        let c = h.cop();
        for i in 0..4 {
            assert_eq!(c.coproduct_basis(i), h.coproduct_basis(i));
        }
        let cc = c.cop();
        assert_eq!(cc.name(), h.name());
        assert!(check_hopf_axioms(&h.op(), &Mode::Exhaustive).passed());
    }

    #[test]
    fn corrupted_antipode_fails() {
        let h = group_algebra(4, 8).unwrap();
        let bad = h
            .modified(|d| d.antipode = SparseLinear::identity(&d.space, 8))
            .unwrap();
        let r = check_hopf_axioms(&bad, &Mode::Exhaustive);
        assert!(r.failed());
        assert!(r.witness.unwrap().detail.unwrap().contains("antipode"));
    }
}
