use hopf_core::algfile::AlgebraFile;
use hopf_core::error::Error;
use hopf_core::report::{parse, render, Format, Mode};
use hopf_core::scalar::BinomialConvention;
use hopf_core::suite::*;
use hopf_core::taft::closed_form_smash;

#[test]
fn empty_selection_gives_empty_report() {
    let r = run_suite(&SuiteConfig::new(2, "")).unwrap();
    assert!(r.checks.is_empty());
    assert_eq!((r.summary.total, r.summary.passed, r.summary.failed, r.summary.skipped), (0, 0, 0, 0));
}

#[test]
fn invalid_configs_are_usage_errors() {
    assert!(matches!(run_suite(&SuiteConfig::new(1, "all")), Err(Error::Usage(_))));
    assert!(matches!(run_suite(&SuiteConfig::new(2, "nonsense")), Err(Error::Usage(_))));
    let c = SuiteConfig::new(2, "yd").with_mode(Mode::Sample { n: 0, seed: 1 });
    assert!(matches!(run_suite(&c), Err(Error::Usage(_))));
    assert_eq!(SuiteConfig::new(2, "all,yd").selection().unwrap(), SUITES.to_vec());
}

#[test]
fn every_mutation_fails_and_replays_from_the_report() {
    let r = run_suite(&SuiteConfig::new(2, "mutations")).unwrap();
    assert_eq!(r.checks.len(), MUTATIONS.len());
    assert!(MUTATIONS.len() >= 6);
    assert_eq!(r.summary.failed, MUTATIONS.len() as u64);
    let back = parse(&render(&r, Format::Json)).unwrap();
    assert_eq!(back, r);
    let fx = Fixtures::new(2).unwrap();
    for c in &back.checks {
        let w = c.witness.as_ref().expect("failing mutation has a witness");
        assert!(replay_mutation(&fx, &c.name, w).unwrap(), "{} does not replay", c.name);
    }
    let text = String::from_utf8(render(&r, Format::Text)).unwrap();
    assert!(text.contains("[FAIL] mutation.eta.swapped") && text.contains("lhs: ") && text.contains("inputs: M = "));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let c = SuiteConfig::new(2, "remarks,chains,tables").with_mode(Mode::Generators { guard_samples: 500, seed: 42 });
    let a = render(&run_suite(&c).unwrap(), Format::Json);
    let b = render(&run_suite(&c).unwrap(), Format::Json);
    assert_eq!(a, b);
}

#[test]
fn exports_round_trip_byte_for_byte() {
    let fx = Fixtures::new(2).unwrap();
    for (name, dim) in [("taft", 16), ("taft-dual", 16), ("ddouble", 256), ("hdouble", 256), ("uqsl2", 16), ("hqsl2", 16), ("cqzd", 4), ("chain(3)", 8)] {
        let f = export_object(&fx, name).unwrap();
        assert_eq!(f.dim, dim, "{name}");
        let s = f.to_json();
        let parsed = AlgebraFile::from_json(&s).unwrap();
        let hopf = parsed.action.as_ref().map(|b| b.hopf.clone());
        let rebuilt = import_object(&parsed).unwrap();
        assert_eq!(rebuilt.dim(), dim);
        assert_eq!(rebuilt.export(hopf.as_deref()).unwrap().to_json(), s, "{name}");
    }
    assert!(matches!(export_object(&fx, "chain(0)"), Err(Error::Usage(_))));
    assert!(matches!(export_object(&fx, "nothing"), Err(Error::Usage(_))));
}

#[test]
fn exported_heisenberg_product_matches_closed_form() {
    let fx = Fixtures::new(2).unwrap();
    let file = export_object(&fx, "hdouble").unwrap();
    let alg = import_object(&file).unwrap();
    let Imported::Algebra(a) = alg else { panic!("hdouble exports as an algebra") };
    let (t, hd) = (&fx.t, fx.hd().unwrap());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let want = closed_form_smash(t, hd, BinomialConvention::Balanced, t.smash_exponents(i), t.smash_exponents(j));
            assert_eq!(a.mult.basis(i, j).terms(), want.terms(), "({i}, {j})");
        }
    }
}
