use hopf_core::doubles::*;
use hopf_core::hopf::check_hopf_axioms;
use hopf_core::report::Mode;
use hopf_core::scalar::BinomialConvention;
use hopf_core::taft::*;

struct Fixture {
    t: TaftData,
    d: DrinfeldDouble,
    hd: HeisenbergDouble,
    u: UqSl2,
    h: HqSl2,
}

fn fixture(p: u32) -> Fixture {
    let t = taft_algebra(p).unwrap();
    let d = drinfeld_double(&t.pair).unwrap();
    let hd = heisenberg_double(&t.pair).unwrap();
    let (u, cert) = uqsl2(&t, &d).unwrap();
    assert!(cert.passed(), "{cert:?}");
    let h = hqsl2(&t, &d, &hd, &u).unwrap();
    Fixture { t, d, hd, u, h }
}

#[test]
fn smash_closed_form_uses_balanced_binomials() {
    let t = taft_algebra(2).unwrap();
    let hd = heisenberg_double(&t.pair).unwrap();
    let (r, conv) = check_closed_form_smash(&t, &hd, &Mode::Exhaustive);
    assert!(r.passed(), "{r:?}");
    assert_eq!(conv, Some(BinomialConvention::Balanced));
    let t3 = taft_algebra(3).unwrap();
    let hd3 = heisenberg_double(&t3.pair).unwrap();
    let (r, _) = check_closed_form_smash(&t3, &hd3, &Mode::Sample { n: 5_000, seed: 11 });
    assert!(r.passed(), "{r:?}");
}

#[test]
fn double_presentation_p2_p3() {
    for p in [2, 3] {
        let t = taft_algebra(p).unwrap();
        let d = drinfeld_double(&t.pair).unwrap();
        let r = double_presentation_check(&t, &d);
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn pbw_relations_except_lambda_period() {
    let f = fixture(2);
    let (bc, checks) = basis_change(&f.t, &f.hd).unwrap();
    assert!(checks.holds.passed(), "{:?}", checks.holds);
    let r = checks.combined();
    assert!(r.failed());
    let w = r.witness.unwrap();
    assert!(w.detail.unwrap().ends_with("lambda^4p"));
    // λ^{4p} = −1 from the explicit product.
    let l = f.hd.algebra.pow(&bc.lam, 8);
    assert_eq!(l, f.hd.algebra.one().neg());
    let alg = &f.hd.algebra;
    let lhs = alg.mul(&bc.del, &bc.z);
    let rhs = alg.one().scale(&f.t.ctx.q_minus_q_inv).add(&alg.mul(&bc.z, &bc.del).scale(&f.t.ctx.q_pow(-2)));
    assert_eq!(lhs, rhs);
    assert_eq!(alg.mul(&bc.kappa, &bc.lam), alg.mul(&bc.lam, &bc.kappa).scale(&f.t.ctx.q_half));
}

#[test]
fn uq_sl2_is_a_hopf_algebra_of_dim_2p3() {
    for p in [2usize, 3] {
        let f = fixture(p as u32);
        assert_eq!(f.u.hopf.dim(), 2 * p.pow(3));
        assert_eq!(f.u.dbar.quotient.dim(), 4 * p.pow(3));
        assert!(check_hopf_axioms(&f.u.hopf, &Mode::Exhaustive).passed());
    }
}

#[test]
fn hq_tables_and_yd_p2() {
    let f = fixture(2);
    assert_eq!(f.h.yd.dim(), 16);
    assert!(f.h.certificates.passed());
    assert!(action_table_check(&f.t, &f.u, &f.h).passed());
    assert!(coaction_table_check(&f.t, &f.u, &f.h, BinomialConvention::Balanced).passed());
    let r = hq_yd_check(&f.h, &Mode::Exhaustive);
    assert!(r.passed(), "{r:?}");
    // E▷z = −q z² and F▷λ² = −q λ²∂.
    let y = &f.h.yd;
    let q = &f.t.ctx.q;
    assert_eq!(y.act(&f.u.e(), &f.h.z), f.h.monomial(2, 0, 0).scale(&-q.clone()));
    assert_eq!(y.act(&f.u.f(), &f.h.monomial(0, 2, 0)), f.h.monomial(0, 2, 1).scale(&-q.clone()));
}

#[test]
fn hq_literal_relations_fail() {
    let f = fixture(2);
    let checks = hq_structure_check(&f.t, &f.h).unwrap();
    assert!(checks.holds.passed(), "{:?}", checks.holds);
    assert!(checks.literal.failed());
    assert!(checks.combined().failed());
    let alg = &f.h.yd.algebra;
    assert_eq!(alg.pow(&f.h.lam, 8), alg.one().neg());
}

#[test]
fn hq_tables_p3() {
    let f = fixture(3);
    assert_eq!(f.h.yd.dim(), 54);
    assert!(action_table_check(&f.t, &f.u, &f.h).passed());
    assert!(coaction_table_check(&f.t, &f.u, &f.h, BinomialConvention::Balanced).passed());
    let y = &f.h.yd;
    assert_eq!(y.act(&f.u.e(), &f.h.z), f.h.monomial(2, 0, 0).scale(&-f.t.ctx.q.clone()));
}

#[test]
fn cqzd_center_and_chains() {
    for p in [2u32, 3] {
        let f = fixture(p);
        let (a, r) = cqzd_check(&f.t.ctx).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(center(&a).unwrap().len(), 1);
        let (sub, r) = cqzd_in_hq(&a, &f.h, &Mode::Exhaustive).unwrap();
        assert!(r.passed() && sub.is_some(), "{r:?}");
        let factors = chain_factors(&f.h).unwrap();
        let top = if p == 2 { 4 } else { 3 };
        for n in 1..=top {
            let (c, r) = chain_check(&f.h, &factors, n, &Mode::Exhaustive).unwrap();
            assert_eq!(c.dim(), (p as usize).pow(n as u32));
            assert!(r.passed(), "{r:?}");
            if n == 2 {
                assert!(h2_is_cqzd(&a, &c).unwrap().passed());
            }
            if n == 3 {
                let nbc = three_chain_not_braided_commutative(&c);
                // At p = 2 the truncated 3-chain happens to be braided commutative; at p = 3 it is not.
                assert_eq!(nbc.passed(), p == 3, "{nbc:?}");
            }
        }
    }
}

#[test]
fn three_factor_double_chain_not_braided_commutative() {
    let f = fixture(2);
    let c = heisenberg_chain(&f.d, 3, ChainStart::Dual).unwrap();
    let r = hopf_core::ydcat::check_braided_commutative(&c.yd, &Mode::Generators { guard_samples: 500, seed: 5 });
    assert!(r.failed() && r.witness.is_some());
}
