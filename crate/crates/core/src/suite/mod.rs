//! Named verification suites over the Taft family at a fixed `p`.

mod export;
mod fixtures;
mod mutations;

use crate::doubles::{
    check_action_formula, check_double_identity, check_quantum_comm_remarks, check_quasitriangular, check_to_show_action, eta_twist_check,
    heisenberg_chain, heisenberg_chain_relations, ChainStart, EtaVariant,
};
use crate::error::{Error, Result};
use crate::hopf::check_hopf_axioms;
use crate::report::{CheckResult, Mode, VerificationReport};
use crate::scalar::BinomialConvention;
use crate::taft::{
    action_table_check, basis_change, chain_check, check_closed_form_smash, coaction_table_check, cqzd_check, cqzd_in_hq, double_presentation_check,
    h2_is_cqzd, hq_structure_check, hq_yd_check, three_chain_not_braided_commutative, truly_heisenberg_chain,
};
use crate::truncate::check_projection_morphism;
use crate::ydcat::{braided_product, check_braided_commutative, check_braided_symmetric, check_locked_identity, check_module_algebra, check_yd, flip_isomorphism};

pub use export::{export_object, import_object, named_hopf, Imported, EXPORTABLE};
pub use fixtures::Fixtures;
pub use mutations::{replay_mutation, run_mutation, run_mutations, with_mutation, MutationOutcome, MUTATIONS};

/// Suites in the order `all` runs them. `mutations` is selected only by name.
pub const SUITES: &[&str] = &["hopf-axioms", "doubles", "yd", "remarks", "chains", "truncation", "tables"];

/// Largest chain length `n` checked for the truly Heisenberg chains.
pub const MAX_CHAIN: usize = 4;

/// Which suites to run, at which `p`, and how inputs are covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub p: u32,
    /// Comma-separated suite names, `all`, or empty for none.
    pub suite: String,
    pub mode: Mode,
    /// Stop after the first failing check.
    pub fail_fast: bool,
}

impl SuiteConfig {
    /// Exhaustive at `p = 2`, generators plus `sample_size` seeded samples above.
    pub fn default_mode(p: u32, sample_size: u64, seed: u64) -> Mode {
        if p <= 2 {
            Mode::Exhaustive
        } else {
            Mode::Generators { guard_samples: sample_size, seed }
        }
    }

    pub fn new(p: u32, suite: impl Into<String>) -> Self {
        SuiteConfig { p, suite: suite.into(), mode: Self::default_mode(p, 10_000, 0), fail_fast: false }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    /// The selected suite names, in run order.
    pub fn selection(&self) -> Result<Vec<&'static str>> {
        if self.p < 2 {
            return Err(Error::Usage(format!("p must be at least 2, got {}", self.p)));
        }
        if let Mode::Sample { n: 0, .. } = self.mode {
            return Err(Error::Usage("sample mode needs a sample size of at least 1".into()));
        }
        let mut out: Vec<&'static str> = Vec::new();
        for s in self.suite.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let names: Vec<&'static str> = match s {
                "all" => SUITES.to_vec(),
                "mutations" => vec!["mutations"],
                _ => vec![SUITES.iter().copied().find(|n| *n == s).ok_or_else(|| {
                    Error::Usage(format!("unknown suite {s:?}; expected one of {}, mutations, all", SUITES.join(", ")))
                })?],
            };
            for n in names {
                if !out.contains(&n) {
                    out.push(n);
                }
            }
        }
        Ok(out)
    }
}

/// Runs every selected suite and collects the results, failing checks included.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let names = config.selection()?;
    let label = names.join(",");
    if names.is_empty() {
        return Ok(VerificationReport::new(config.p, label, Vec::new()));
    }
    let fx = Fixtures::new(config.p)?;
    let mut checks = Vec::new();
    for n in names {
        suite_checks(&fx, n, &config.mode, config.fail_fast, &mut checks)?;
        if config.fail_fast && checks.iter().any(CheckResult::failed) {
            break;
        }
    }
    Ok(VerificationReport::new(config.p, label, checks))
}

/// A known discrepancy, reported as a pass once the literal relation is seen to fail.
fn deviation(literal: CheckResult, what: &str) -> CheckResult {
    let name = format!("{}.deviation", literal.name);
    literal.expect_failure(name).with_note(what.to_string())
}

const LAMBDA_NOTE: &str = "λ^{4p} = −1 in H(B*), so λ^{4p} = 1 and the quotient by λ^{2p} − 1 fail as written; H_q sl(2) is built as S/(κ^{2p}#k^{2p} − 1)";

fn suite_checks(fx: &Fixtures, suite: &str, mode: &Mode, fail_fast: bool, out: &mut Vec<CheckResult>) -> Result<()> {
    let p = fx.p();
    let mut push = |r: CheckResult| -> bool {
        let failed = r.failed();
        out.push(r);
        fail_fast && failed
    };
    macro_rules! emit {
        ($e:expr) => {
            if push($e) {
                return Ok(());
            }
        };
    }
    match suite {
        "hopf-axioms" => {
            let t = &fx.t;
            emit!(check_hopf_axioms(t.b(), mode));
            emit!(check_hopf_axioms(t.b_star(), mode));
            let d = fx.d()?;
            emit!(check_hopf_axioms(&d.hopf, mode));
            emit!(check_quasitriangular(d, mode));
            let (u, cert) = fx.uq()?;
            emit!(cert.clone());
            emit!(check_projection_morphism(&u.dbar, mode));
            emit!(check_hopf_axioms(&u.hopf, mode));
        }
        "doubles" => {
            let (t, d, hd, parts, yd) = (&fx.t, fx.d()?, fx.hd()?, fx.parts()?, fx.yd()?);
            emit!(double_presentation_check(t, d));
            emit!(hd.algebra.check_algebra(mode));
            emit!(eta_twist_check(d, hd, EtaVariant::Standard, mode));
            let swapped = eta_twist_check(d, hd, EtaVariant::Swapped, mode);
            emit!(swapped.expect_failure(format!("eta-twist.swapped.{}.distinguished", hd.algebra.name)));
            emit!(check_closed_form_smash(t, hd, mode).0);
            emit!(check_action_formula(d, hd, parts, mode));
            emit!(check_to_show_action(d, hd, parts, mode));
            emit!(check_module_algebra(&yd.module(), mode));
            emit!(check_double_identity(d));
        }
        "yd" => {
            let yd = fx.yd()?;
            emit!(check_yd(yd, mode));
            emit!(check_braided_commutative(yd, mode));
            let (x, y) = fx.factors()?;
            for f in [x, y] {
                emit!(check_yd(f, mode));
                emit!(check_braided_commutative(f, mode));
            }
            emit!(check_braided_symmetric(x, y, mode)?);
            let xy = braided_product(x, y)?;
            let hd = fx.hd()?;
            let same = xy.yd.algebra.same_structure(&hd.algebra);
            emit!(CheckResult::fact(format!("braided-product.{}.{}.equals-heisenberg", x.name, y.name), same, same.to_string(), "true"));
            emit!(flip_isomorphism(x, y, mode)?.1);
        }
        "remarks" => {
            let (d, yd) = (fx.d()?, fx.yd()?);
            let (r1, r2) = check_quantum_comm_remarks(d, yd);
            emit!(r1);
            emit!(r2);
        }
        "chains" => {
            let (x, y) = fx.factors()?;
            emit!(check_locked_identity(x, y, mode)?);
            let d = fx.d()?;
            if p == 2 {
                for start in [ChainStart::Dual, ChainStart::Primal] {
                    let c = heisenberg_chain(d, 3, start)?;
                    emit!(heisenberg_chain_relations(d, &c, start, mode));
                    emit!(three_chain_not_braided_commutative(&c));
                }
            } else {
                emit!(CheckResult::skipped(format!("heisenberg-chain.n3.p{p}"), "the three-factor D(B) chain has dimension (16p⁴)³"));
            }
            let (a, r) = cqzd_check(&fx.t.ctx)?;
            emit!(r);
            let h = fx.hq()?;
            emit!(cqzd_in_hq(&a, h, mode)?.1);
            let f = fx.chain_factors()?;
            emit!(f.certificates.clone());
            let h2 = truly_heisenberg_chain(f, 2)?;
            emit!(h2_is_cqzd(&a, &h2)?);
            for n in 1..=MAX_CHAIN {
                emit!(chain_check(h, f, n, mode)?.1);
            }
        }
        "truncation" => {
            let (t, hd) = (&fx.t, fx.hd()?);
            let (_, bc) = basis_change(t, hd)?;
            emit!(bc.holds.clone());
            emit!(deviation(bc.literal.clone(), LAMBDA_NOTE));
            let h = fx.hq()?;
            let hs = hq_structure_check(t, h)?;
            emit!(hs.holds.clone());
            emit!(deviation(hs.literal.clone(), LAMBDA_NOTE));
        }
        "tables" => {
            let (t, (u, _), h) = (&fx.t, fx.uq()?, fx.hq()?);
            emit!(action_table_check(t, u, h));
            emit!(coaction_table_check(t, u, h, BinomialConvention::Balanced));
            emit!(hq_yd_check(h, mode));
        }
        "mutations" => {
            for m in run_mutations(fx, mode)? {
                emit!(m.result);
            }
        }
        other => return Err(Error::Usage(format!("unknown suite {other:?}"))),
    }
    Ok(())
}
