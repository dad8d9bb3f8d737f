use std::time::Instant;

use hopf_core::doubles::*;
use hopf_core::hopf::check_hopf_axioms;
use hopf_core::report::Mode;
use hopf_core::taft::taft_algebra;
use hopf_core::ydcat::{braided_product, check_braided_commutative, check_braided_symmetric, check_yd};

const GEN: Mode = Mode::Generators { guard_samples: 200, seed: 7 };

#[test]
fn drinfeld_double_p2_axioms_and_cross_relation() {
    let t = taft_algebra(2).unwrap();
    let d = drinfeld_double(&t.pair).unwrap();
    assert_eq!(d.dim(), 256);
    let start = Instant::now();
    let r = check_hopf_axioms(&d.hopf, &Mode::Exhaustive);
    assert!(r.passed(), "{r:?}");
    assert!(start.elapsed().as_secs() < 60);
    let h = &d.hopf;
    let e = d.from_primal(&t.ek(1, 0));
    let f = d.from_dual(&t.f);
    let k2 = d.from_primal(&t.ek(0, 2));
    let kap2 = d.from_dual(&t.b_star().pow(&t.kappa, 2));
    let want = k2.sub(&kap2).scale(&t.ctx.q_minus_one_inverse_factor);
    assert_eq!(h.commutator(&e, &f), want);
    assert_eq!(h.mul(&h.one(), &e), e);
}

#[test]
fn drinfeld_double_p2_quasitriangular() {
    let t = taft_algebra(2).unwrap();
    let d = drinfeld_double(&t.pair).unwrap();
    let r = check_quasitriangular(&d, &Mode::Exhaustive);
    assert!(r.passed(), "{r:?}");
}

#[test]
fn heisenberg_double_p2_structures() {
    let t = taft_algebra(2).unwrap();
    let d = drinfeld_double(&t.pair).unwrap();
    let hd = heisenberg_double(&t.pair).unwrap();
    assert!(hd.algebra.check_algebra(&Mode::Sample { n: 2000, seed: 1 }).passed());
    let tw = eta_twist_check(&d, &hd, EtaVariant::Standard, &Mode::Exhaustive);
    assert!(tw.passed(), "{tw:?}");
    assert!(eta_twist_check(&d, &hd, EtaVariant::Swapped, &Mode::Exhaustive).failed());
    let parts = canonical_action(&d, &hd);
    let a = check_action_formula(&d, &hd, &parts, &Mode::Exhaustive);
    assert!(a.passed(), "{a:?}");
    let s = check_to_show_action(&d, &hd, &parts, &Mode::Exhaustive);
    assert!(s.passed(), "{s:?}");
    let di = check_double_identity(&d);
    assert!(di.passed(), "{di:?}");
    assert!(check_double_identity_with(&d, d.b_star().antipode()).failed());
    let yd = yd_structure(&d, &hd, &parts).unwrap();
    let r = check_yd(&yd, &GEN);
    assert!(r.passed(), "{r:?}");
    let bc = check_braided_commutative(&yd, &Mode::Exhaustive);
    assert!(bc.passed(), "{bc:?}");
    let (r1, r2) = check_quantum_comm_remarks(&d, &yd);
    assert!(r1.passed(), "{r1:?}");
    assert!(r2.passed(), "{r2:?}");
}

#[test]
fn factors_and_chains_p2() {
    let t = taft_algebra(2).unwrap();
    let d = drinfeld_double(&t.pair).unwrap();
    let hd = heisenberg_double(&t.pair).unwrap();
    let (x, y) = factor_structures(&d).unwrap();
    for f in [&x, &y] {
        let r = check_yd(f, &Mode::Exhaustive);
        assert!(r.passed(), "{r:?}");
        assert!(check_braided_commutative(f, &Mode::Exhaustive).passed());
    }
    let s = check_braided_symmetric(&x, &y, &Mode::Exhaustive).unwrap();
    assert!(s.passed(), "{s:?}");
    let xy = braided_product(&x, &y).unwrap();
    assert!(xy.yd.algebra.same_structure(&hd.algebra));
    let c3 = heisenberg_chain(&d, 3, ChainStart::Dual).unwrap();
    assert_eq!(c3.dim(), 16 * 16 * 16);
    let r = heisenberg_chain_relations(&d, &c3, ChainStart::Dual, &Mode::Exhaustive);
    assert!(r.passed(), "{r:?}");
    let c3p = heisenberg_chain(&d, 3, ChainStart::Primal).unwrap();
    let r = heisenberg_chain_relations(&d, &c3p, ChainStart::Primal, &Mode::Exhaustive);
    assert!(r.passed(), "{r:?}");
}

#[test]
fn doubles_p3_sampled() {
    let t = taft_algebra(3).unwrap();
    let d = drinfeld_double(&t.pair).unwrap();
    assert_eq!(d.dim(), 1296);
    let h = &d.hopf;
    let e = d.from_primal(&t.ek(1, 0));
    let f = d.from_dual(&t.f);
    let k2 = d.from_primal(&t.ek(0, 2));
    let kap2 = d.from_dual(&t.b_star().pow(&t.kappa, 2));
    assert_eq!(h.commutator(&e, &f), k2.sub(&kap2).scale(&t.ctx.q_minus_one_inverse_factor));
    let hd = heisenberg_double(&t.pair).unwrap();
    let parts = canonical_action(&d, &hd);
    let yd = yd_structure(&d, &hd, &parts).unwrap();
    let sample = Mode::Sample { n: 300, seed: 3 };
    let r = check_yd(&yd, &sample);
    assert!(r.passed(), "{r:?}");
    assert!(check_braided_commutative(&yd, &sample).passed());
}

