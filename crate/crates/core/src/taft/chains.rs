use crate::error::{Error, Result};
use crate::hopf::Algebra;
use crate::linalg::{BasisLabel, SparseLinear, Vect};
use crate::report::{Axis, CheckResult, Mode, Property};
use crate::truncate::restrict_yd;
use crate::ydcat::{chain_product, check_braided_commutative, check_yd, BraidedProductAlgebra, YDModuleAlgebra};

use super::hq::HqSl2;
use super::monomial_name;
use super::presentation::relation;

/// `ℂ[∂]/∂^p` and `ℂ[z]/z^p` as Yetter–Drinfeld `U_q sl(2)`-module algebras inside `H_q sl(2)`.
#[derive(Clone, Debug)]
pub struct ChainFactors {
    pub del: YDModuleAlgebra,
    pub z: YDModuleAlgebra,
    pub certificates: CheckResult,
}

fn powers_basis(h: &HqSl2, g: &str, f: impl Fn(u32) -> Vect) -> Vec<(BasisLabel, Vect)> {
    (0..h.p).map(|n| (BasisLabel { tuple: vec![n as i64], name: monomial_name(&[(g, n as i64)]) }, f(n))).collect()
}

/// The two one-generator factors, restricted from `H_q sl(2)`.
pub fn chain_factors(h: &HqSl2) -> Result<ChainFactors> {
    let (d, dc) = restrict_yd(&h.yd, powers_basis(h, "∂", |n| h.monomial(0, 0, n)), "Cq[∂]")?;
    let (z, zc) = restrict_yd(&h.yd, powers_basis(h, "z", |n| h.monomial(n, 0, 0)), "Cq[z]")?;
    let certificates = CheckResult::all(format!("chain-factors.p{}", h.p), vec![dc, zc]);
    match (d, z) {
        (Some(mut del), Some(mut z)) => {
            let g = |y: &YDModuleAlgebra, name: &str| vec![(name.to_string(), y.algebra.basis(1))];
            del.algebra = del.algebra.clone().with_generators(g(&del, "∂"));
            z.algebra = z.algebra.clone().with_generators(g(&z, "z"));
            Ok(ChainFactors { del, z, certificates })
        }
        _ => Err(Error::Certificate { name: certificates.name.clone(), detail: format!("{:?}", certificates.witness) }),
    }
}

/// `x` in position `i` (1-based) carries `∂` for odd `i` and `z` for even `i`.
pub fn truly_heisenberg_chain(f: &ChainFactors, n: usize) -> Result<BraidedProductAlgebra> {
    let factors: Vec<YDModuleAlgebra> = (1..=n).map(|i| if i % 2 == 1 { f.del.clone() } else { f.z.clone() }).collect();
    chain_product(&factors)
}

/// Generator of position `i` (1-based) embedded in the chain.
fn gen(chain: &BraidedProductAlgebra, i: usize) -> Vect {
    let fac = &chain.factors[i - 1];
    chain.embed(i - 1, &fac.algebra.generators[0].1)
}

/// `∂_i z_j = q − q⁻¹ + q⁻²z_j∂_i` for all odd `i`, even `j`; for `i ≥ j`
/// `z_iz_j = q⁻²z_jz_i + (1−q⁻²)z_j²` and `∂_i∂_j = q²∂_j∂_i + (1−q²)∂_j²`; and `z_i^p = ∂_i^p = 0`.
pub fn chain_relations_check(h: &HqSl2, chain: &BraidedProductAlgebra) -> CheckResult {
    let ctx = crate::scalar::QContext::new(h.p).expect("p ≥ 2");
    let y = &chain.yd;
    let sp = y.space();
    let n = chain.factors.len();
    let name = format!("truly-heisenberg.n{n}.p{}", h.p);
    let m = |a: &Vect, b: &Vect| y.mul(a, b);
    let one = y.algebra.one();
    let (q2, qm2) = (ctx.q_pow(2), ctx.q_pow(-2));
    let mut parts = Vec::new();
    for i in 1..=n {
        let gi = gen(chain, i);
        let tag = if i % 2 == 1 { "del" } else { "z" };
        parts.push(relation(format!("{name}.{tag}{i}^p"), sp, &y.algebra.pow(&gi, h.p), &y.algebra.zero()));
        for j in 1..=n {
            let gj = gen(chain, j);
            match (i % 2, j % 2) {
                (1, 0) => {
                    let rhs = one.scale(&ctx.q_minus_q_inv).add(&m(&gj, &gi).scale(&qm2));
                    parts.push(relation(format!("{name}.del{i}-z{j}"), sp, &m(&gi, &gj), &rhs));
                }
                (0, 0) if i >= j => {
                    let rhs = m(&gj, &gi).scale(&qm2).add(&m(&gj, &gj).scale(&(&ctx.one() - &qm2)));
                    parts.push(relation(format!("{name}.z{i}-z{j}"), sp, &m(&gi, &gj), &rhs));
                }
                (1, 1) if i >= j => {
                    let rhs = m(&gj, &gi).scale(&q2).add(&m(&gj, &gj).scale(&(&ctx.one() - &q2)));
                    parts.push(relation(format!("{name}.del{i}-del{j}"), sp, &m(&gi, &gj), &rhs));
                }
                _ => {}
            }
        }
    }
    CheckResult::all(name, parts)
}

/// `H_2 = ℂ_q[∂₁] ⋈ ℂ_q[z₂]` against `ℂ_q[z,∂]`: `z^a∂^b ↦ z₂^a ∂₁^b` is a bijective algebra map.
pub fn h2_is_cqzd(a: &Algebra, chain: &BraidedProductAlgebra) -> Result<CheckResult> {
    let y = &chain.yd;
    let p = chain.factors[0].dim();
    let (d1, z2) = (gen(chain, 1), gen(chain, 2));
    let image: Vec<Vect> = (0..p * p).map(|i| y.mul(&y.algebra.pow(&z2, (i / p) as u32), &y.algebra.pow(&d1, (i % p) as u32))).collect();
    let phi = SparseLinear::from_table(&a.space, y.space(), image)?;
    let o = a.order;
    let name = "truly-heisenberg.H2-is-cqzd";
    let bij = match crate::linalg::linear_map_inverse(&phi, name, o) {
        Ok(_) => CheckResult::fact(format!("{name}.bijective"), true, "invertible", "invertible"),
        Err(e) => CheckResult::fact(format!("{name}.bijective"), false, e.to_string(), "invertible"),
    };
    let hom = Property::new(format!("{name}.structure-constants"), vec![Axis::basis_of("x", &a.space, o), Axis::basis_of("y", &a.space, o)], y.space(), |v| {
        (phi.apply(&a.mul(v[0], v[1])), y.mul(&phi.apply(v[0]), &phi.apply(v[1])))
    })
    .run(&Mode::Exhaustive);
    Ok(CheckResult::all(name, vec![bij, hom]))
}

/// Dimension `p^n`, the relation families, and the Yetter–Drinfeld condition for the `n`-chain.
pub fn chain_check(h: &HqSl2, f: &ChainFactors, n: usize, mode: &Mode) -> Result<(BraidedProductAlgebra, CheckResult)> {
    let chain = truly_heisenberg_chain(f, n)?;
    let want = (h.p as usize).pow(n as u32);
    let name = format!("truly-heisenberg.n{n}.p{}", h.p);
    let dim = CheckResult::fact(format!("{name}.dimension"), chain.dim() == want, chain.dim().to_string(), want.to_string());
    let rel = chain_relations_check(h, &chain);
    let yd = check_yd(&chain.yd, mode);
    let r = CheckResult::all(format!("{name}.structure"), vec![dim, rel, yd]);
    Ok((chain, r))
}

/// A three-factor chain is not braided commutative: passes when a counterexample is found.
pub fn three_chain_not_braided_commutative(chain: &BraidedProductAlgebra) -> CheckResult {
    check_braided_commutative(&chain.yd, &Mode::Exhaustive).expect_failure(format!("{}.not-braided-commutative", chain.yd.name))
}
