use crate::linalg::Accumulator;
use crate::report::{Axis, CheckResult, Mode, Property};
use crate::ydcat::YDModuleAlgebra;

use super::DrinfeldDouble;

/// Generators of `H(B*)` together with the unit.
fn generator_axis(y: &YDModuleAlgebra, name: &str) -> Axis {
    let mut list = vec![("1".to_string(), y.algebra.one())];
    list.extend(y.algebra.generators.iter().cloned());
    Axis::from_list(name, list)
}

/// `yx = (R⁽²⁾▷x)(R⁽¹⁾▷y)`.
pub fn remark1_property<'a>(d: &'a DrinfeldDouble, y: &'a YDModuleAlgebra) -> Property<'a> {
    Property::new("remark1.quantum-commutative", vec![generator_axis(y, "x"), generator_axis(y, "y")], y.space(), move |v| {
        let (a, b) = (v[0], v[1]);
        let mut acc = Accumulator::new(y.space().id());
        for (r1, r2) in d.r_terms() {
            acc.add(&y.mul(&y.act(r2, a), &y.act(r1, b)));
        }
        (y.mul(b, a), acc.finish())
    })
}

/// `yx = ·(ℛ⁻¹▷(x⊗y))` with `ℛ⁻¹ = Σ_A (ε⊗S_D(e_A)) ⊗ (e^A⊗1)` in `D(D(B))`, where `e^A⊗1` acts by
/// `p▷y = ⟨S*⁻¹(p), y₍₋₁₎⟩y₍₀₎`.
pub fn remark2_property<'a>(d: &'a DrinfeldDouble, y: &'a YDModuleAlgebra) -> Property<'a> {
    let h = &d.hopf;
    Property::new("remark2.r-inverse-form", vec![generator_axis(y, "x"), generator_axis(y, "y")], y.space(), move |v| {
        let (a, b) = (v[0], v[1]);
        let mut acc = Accumulator::new(y.space().id());
        for (g, y0, c) in y.coact_vec_terms(b) {
            // ⟨S*⁻¹(e^A), u⟩ = ⟨e^A, S_D⁻¹(u)⟩ picks the coefficients of S_D⁻¹(u).
            let w = h.s_inv(&h.basis(g));
            let y0 = y.algebra.basis(y0);
            for (ai, ca) in w.terms() {
                let moved = y.act(&h.s(&h.basis(*ai)), a);
                acc.add_scaled(&y.mul(&moved, &y0), &(&c * ca));
            }
        }
        (y.mul(b, a), acc.finish())
    })
}

/// Quantum-commutativity counterexample search (a pass means a witness was found) and the ℛ⁻¹ restatement.
pub fn check_quantum_comm_remarks(d: &DrinfeldDouble, y: &YDModuleAlgebra) -> (CheckResult, CheckResult) {
    let r1 = remark1_property(d, y).run(&Mode::Exhaustive).expect_failure("remark1.counterexample");
    let r2 = remark2_property(d, y).run(&Mode::Exhaustive);
    (r1, r2)
}
