//! Acceptance criteria 1 to 14, one line each. Exits non-zero when any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use hopf_core::doubles::{
    check_quantum_comm_remarks, check_quasitriangular, check_to_show_action, eta_twist_check, heisenberg_chain, heisenberg_chain_relations, ChainStart,
    EtaVariant,
};
use hopf_core::hopf::check_hopf_axioms;
use hopf_core::report::{render, CheckResult, Format, Mode, Status};
use hopf_core::scalar::BinomialConvention;
use hopf_core::suite::{run_mutations, run_suite, Fixtures, SuiteConfig, MUTATIONS};
use hopf_core::taft::{
    action_table_check, basis_change, chain_check, check_closed_form_smash, coaction_table_check, cqzd_check, double_presentation_check, h2_is_cqzd,
    hq_structure_check, hq_yd_check, three_chain_not_braided_commutative, truly_heisenberg_chain,
};
use hopf_core::ydcat::{
    braided_product, check_braided_commutative, check_braided_symmetric, check_locked_identity, check_module_algebra, check_yd, flip_isomorphism,
};
use hopf_core::Result;

const GEN_1E4: Mode = Mode::Generators { guard_samples: 10_000, seed: 0 };

struct Outcome {
    ok: bool,
    detail: String,
}

/// Folds check results into one outcome, naming every failure.
fn judge(checks: &[CheckResult], extra: &[(bool, String)]) -> Outcome {
    let mut failures: Vec<String> = checks.iter().filter(|c| !c.passed()).map(|c| format!("{} {:?}", c.name, c.status)).collect();
    failures.extend(extra.iter().filter(|(ok, _)| !ok).map(|(_, why)| why.clone()));
    let cases: u64 = checks.iter().map(|c| c.cases_checked).sum();
    if failures.is_empty() {
        Outcome { ok: true, detail: format!("{} checks, {cases} cases, {} further conditions", checks.len(), extra.len()) }
    } else {
        Outcome { ok: false, detail: failures.join("; ") }
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> (bool, String) {
    let t = start.elapsed();
    (t < limit, format!("{what} took {:.1}s, limit {}s", t.as_secs_f64(), limit.as_secs()))
}

fn c1(fx: &Fixtures) -> Result<Outcome> {
    let start = Instant::now();
    let b = fx.t.b();
    let rb = check_hopf_axioms(b, &Mode::Exhaustive);
    let d = fx.d()?;
    let rd = check_hopf_axioms(&d.hopf, &Mode::Exhaustive);
    let dims = (b.dim() == 16 && d.hopf.dim() == 256, format!("dims {} and {}", b.dim(), d.hopf.dim()));
    Ok(judge(&[rb, rd], &[dims, within(start, Duration::from_secs(60), "hopf axioms")]))
}

fn c2(fx2: &Fixtures, fx3: &Fixtures) -> Result<Outcome> {
    let checks = [double_presentation_check(&fx2.t, fx2.d()?), double_presentation_check(&fx3.t, fx3.d()?)];
    Ok(judge(&checks, &[]))
}

fn c3(fx: &Fixtures) -> Result<Outcome> {
    let (d, hd) = (fx.d()?, fx.hd()?);
    let start = Instant::now();
    let r = eta_twist_check(d, hd, EtaVariant::Standard, &Mode::Exhaustive);
    let pairs = (r.cases_checked >= 256 * 256, format!("{} cases, want 65536 pairs", r.cases_checked));
    Ok(judge(&[r], &[pairs, within(start, Duration::from_secs(120), "eta twist")]))
}

fn c4(fx2: &Fixtures, fx3: &Fixtures) -> Result<Outcome> {
    let (r2, _) = check_closed_form_smash(&fx2.t, fx2.hd()?, &Mode::Exhaustive);
    let (r3, _) = check_closed_form_smash(&fx3.t, fx3.hd()?, &Mode::Sample { n: 100_000, seed: 0 });
    Ok(judge(&[r2, r3], &[]))
}

fn c5(fx: &Fixtures) -> Result<Outcome> {
    let (d, hd, parts, yd) = (fx.d()?, fx.hd()?, fx.parts()?, fx.yd()?);
    Ok(judge(&[check_to_show_action(d, hd, parts, &GEN_1E4), check_module_algebra(&yd.module(), &GEN_1E4)], &[]))
}

fn c6(fx: &Fixtures) -> Result<Outcome> {
    let yd = fx.yd()?;
    let start = Instant::now();
    let checks = [check_yd(yd, &GEN_1E4), check_braided_commutative(yd, &Mode::Exhaustive)];
    Ok(judge(&checks, &[within(start, Duration::from_secs(600), "yd and braided commutativity")]))
}

fn c7(fx: &Fixtures) -> Result<Outcome> {
    let (x, y) = fx.factors()?;
    let ex = Mode::Exhaustive;
    let xy = braided_product(x, y)?;
    let same = xy.yd.algebra.same_structure(&fx.hd()?.algebra);
    let checks = [check_braided_commutative(x, &ex), check_braided_commutative(y, &ex), check_braided_symmetric(x, y, &ex)?, flip_isomorphism(x, y, &ex)?.1];
    Ok(judge(&checks, &[(same, "braided product differs from H(B*)".into())]))
}

fn c8(fx: &Fixtures) -> Result<Outcome> {
    let (x, y) = fx.factors()?;
    let d = fx.d()?;
    let mut checks = vec![check_locked_identity(x, y, &Mode::Exhaustive)?];
    let mut extra = Vec::new();
    for start in [ChainStart::Dual, ChainStart::Primal] {
        let c = heisenberg_chain(d, 3, start)?;
        checks.push(heisenberg_chain_relations(d, &c, start, &Mode::Exhaustive));
        let nb = three_chain_not_braided_commutative(&c);
        extra.push((nb.witness.is_some(), format!("{} has no witness", nb.name)));
        checks.push(nb);
    }
    Ok(judge(&checks, &extra))
}

/// Dimensions, presentations and transport certificates, including the literal relations.
fn c9(fxs: &[&Fixtures]) -> Result<Outcome> {
    let mut checks = Vec::new();
    for fx in fxs {
        let (u, cert) = fx.uq()?;
        let p = fx.p() as usize;
        checks.push(CheckResult::fact(format!("uqsl2.p{p}.dim"), u.hopf.dim() == 2 * p.pow(3), u.hopf.dim().to_string(), (2 * p.pow(3)).to_string()));
        checks.push(cert.clone());
        let h = fx.hq()?;
        checks.push(CheckResult::fact(format!("hqsl2.p{p}.dim"), h.yd.dim() == 2 * p.pow(3), h.yd.dim().to_string(), (2 * p.pow(3)).to_string()));
        checks.push(h.certificates.clone());
        checks.push(hq_structure_check(&fx.t, h)?.combined());
        checks.push(basis_change(&fx.t, fx.hd()?)?.1.combined());
    }
    Ok(judge(&checks, &[]))
}

fn c10(fxs: &[&Fixtures]) -> Result<Outcome> {
    let mut checks = Vec::new();
    for fx in fxs {
        let (t, (u, _), h) = (&fx.t, fx.uq()?, fx.hq()?);
        checks.push(action_table_check(t, u, h));
        checks.push(coaction_table_check(t, u, h, BinomialConvention::Balanced));
    }
    let hq_yd = hq_yd_check(fxs[0].hq()?, &Mode::Exhaustive);
    let pairs = (hq_yd.cases_checked >= 16 * 16, format!("hq yd covered {} cases", hq_yd.cases_checked));
    checks.push(hq_yd);
    Ok(judge(&checks, &[pairs]))
}

fn c11(fx2: &Fixtures, fx3: &Fixtures) -> Result<Outcome> {
    let (h, f) = (fx2.hq()?, fx2.chain_factors()?);
    let mut checks = vec![f.certificates.clone()];
    for n in 1..=4 {
        checks.push(chain_check(h, f, n, &Mode::Exhaustive)?.1);
    }
    let (a, r2) = cqzd_check(&fx2.t.ctx)?;
    checks.push(r2);
    checks.push(h2_is_cqzd(&a, &truly_heisenberg_chain(f, 2)?)?);
    checks.push(cqzd_check(&fx3.t.ctx)?.1);
    Ok(judge(&checks, &[]))
}

fn c12(fx: &Fixtures) -> Result<Outcome> {
    let (d, yd) = (fx.d()?, fx.yd()?);
    let (r1, r2) = check_quantum_comm_remarks(d, yd);
    let witness = (r1.witness.is_some(), "quantum commutativity counterexample has no witness".to_string());
    Ok(judge(&[r2, r1, check_quasitriangular(d, &Mode::Exhaustive)], &[witness]))
}

fn c13(fx: &Fixtures) -> Result<Outcome> {
    let outcomes = run_mutations(fx, &Mode::Exhaustive)?;
    let mut extra = vec![(outcomes.len() >= 6 && outcomes.len() == MUTATIONS.len(), format!("{} fixtures", outcomes.len()))];
    for family in ["antipode.", "coaction.", "action.", "eta."] {
        let any = MUTATIONS.iter().any(|(n, _)| n.starts_with(family));
        extra.push((any, format!("no {family}* mutation")));
    }
    for m in &outcomes {
        let ok = m.result.status == Status::Fail && m.result.witness.is_some() && m.replayed;
        extra.push((ok, format!("{} did not fail with a replayable witness", m.result.name)));
    }
    let code = Command::new(env!("CARGO_BIN_EXE_hopfbench")).args(["verify", "--p", "2", "--suite", "mutations"]).output().expect("binary runs").status.code();
    extra.push((code == Some(1), format!("exit code {code:?}, want 1")));
    Ok(judge(&[], &extra))
}

fn c14() -> Result<Outcome> {
    let config = SuiteConfig { p: 2, suite: "remarks,chains,mutations".into(), mode: Mode::Exhaustive, fail_fast: false };
    let a = render(&run_suite(&config)?, Format::Json);
    let b = render(&run_suite(&config)?, Format::Json);
    let cli = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_hopfbench"))
            .args(["verify", "--p", "3", "--suite", "tables,truncation", "--mode", "sample", "--sample-size", "500", "--seed", "42", "--format", "json", "--jobs", jobs])
            .output()
            .expect("binary runs")
            .stdout
    };
    let (c, e) = (cli("1"), cli("4"));
    Ok(judge(&[], &[(a == b, "library reports differ".into()), (!c.is_empty() && c == e, "cli reports differ".into())]))
}

fn main() {
    let fx2 = Fixtures::new(2).expect("p = 2 fixtures");
    let fx3 = Fixtures::new(3).expect("p = 3 fixtures");
    let criteria: Vec<(&str, Box<dyn Fn() -> Result<Outcome> + '_>)> = vec![
        ("Hopf axioms of B and D(B) at p = 2", Box::new(|| c1(&fx2))),
        ("D(B) presentation at p = 2, 3", Box::new(|| c2(&fx2, &fx3))),
        ("eta-twist equals the smash product at p = 2", Box::new(|| c3(&fx2))),
        ("closed-form smash product at p = 2, 3", Box::new(|| c4(&fx2, &fx3))),
        ("action well-definedness and module-algebra law", Box::new(|| c5(&fx2))),
        ("Yetter-Drinfeld condition and braided commutativity of H(B*)", Box::new(|| c6(&fx2))),
        ("factors, braided symmetry, braided product, flip", Box::new(|| c7(&fx2))),
        ("locked identity and three-factor chains", Box::new(|| c8(&fx2))),
        ("truncations U_q sl(2) and H_q sl(2)", Box::new(|| c9(&[&fx2, &fx3]))),
        ("action and coaction tables, H_q Yetter-Drinfeld", Box::new(|| c10(&[&fx2, &fx3]))),
        ("truly Heisenberg chains and C_q[z,del]", Box::new(|| c11(&fx2, &fx3))),
        ("remarks on R^{-1} and quasitriangularity", Box::new(|| c12(&fx2))),
        ("mutation fixtures fail with replayable witnesses", Box::new(|| c13(&fx2))),
        ("byte-identical reports", Box::new(c14)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run().unwrap_or_else(|e| Outcome { ok: false, detail: format!("error: {e}") });
        let tag = if out.ok { "PASS" } else { "FAIL" };
        failed += usize::from(!out.ok);
        println!("criterion {:>2} [{tag}] {name} ({:.1}s): {}", i + 1, start.elapsed().as_secs_f64(), out.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
