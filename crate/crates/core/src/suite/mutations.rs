//! Deliberately corrupted structures. Every fixture must fail, and its witness must replay.

use crate::doubles::{eta_twist_product, eta_twist_property, EtaVariant};
use crate::error::{Error, Result};
use crate::hopf::{hopf_axiom_properties, FiniteHopf};
use crate::linalg::{outer, split, Accumulator, Space, SparseBilinear, SparseLinear, Vect};
use crate::report::{CheckResult, Mode, Property, Status, Witness};
use crate::ydcat::{module_algebra_property, yd_property, ModuleAlgebra};

use super::Fixtures;

/// Fixture names with a one-line description of the corruption.
pub const MUTATIONS: &[(&str, &str)] = &[
    ("antipode.squared", "Taft antipode replaced by S∘S"),
    ("coaction.antipode-leg", "D(B) leg of the H(B*) coaction passed through S"),
    ("coaction.legs-swapped", "β′ and β″ exchanged in the H(B*) coaction"),
    ("action.primal-antipode-inverse", "B-action factor m″aS(m‴) replaced by m″aS⁻¹(m‴)"),
    ("action.dual-antipode", "B*-action factor S*⁻¹ replaced by S*"),
    ("action.factor-order", "D(B)-action composed as (ε⊗m)▷((μ⊗1)▷A)"),
    ("eta.swapped", "η evaluated with its arguments exchanged"),
    ("eta.counits-dropped", "η reduced to the pairing ⟨ν,m⟩ without ⟨μ,1⟩⟨ε,n⟩"),
];

/// Result of one fixture, with whether its witness re-evaluates to a failure.
#[derive(Clone, Debug)]
pub struct MutationOutcome {
    pub result: CheckResult,
    pub replayed: bool,
}

/// `S∘S` in place of `S`; the inverse of `S²` is `S⁻¹∘S⁻¹`.
fn squared_antipode(h: &FiniteHopf) -> Result<FiniteHopf> {
    let mut data = h.data();
    data.name = format!("{}[S²]", h.name());
    let n = h.dim();
    let sq = (0..n).map(|i| h.s(&h.s(&h.basis(i)))).collect();
    let inv = (0..n).map(|i| h.s_inv(&h.s_inv(&h.basis(i)))).collect();
    data.antipode = SparseLinear::from_table(h.space(), h.space(), sq)?;
    let inverse = SparseLinear::from_table(h.space(), h.space(), inv)?;
    FiniteHopf::with_antipode_inverse(data, inverse)
}

/// The B-action `(m′⇀α) # m″ a f(m‴)` for a chosen endomorphism `f` of `B`.
fn primal_action(fx: &Fixtures, f: impl Fn(&Vect) -> Vect + Send + Sync + 'static) -> Result<SparseBilinear> {
    let (pair, hd) = (fx.t.pair.clone(), fx.hd()?);
    let b = pair.primal.clone();
    let db = b.dim();
    let hs = hd.space().clone();
    let sid = hs.id();
    let bsp = b.space().clone();
    Ok(SparseBilinear::from_rule(&bsp, &hs, &hs, move |m, k| {
        let (alpha, a) = split(k, db);
        let mut acc = Accumulator::new(sid);
        for (m1, m2, m3, c) in b.coproduct2_terms(m) {
            let l = pair.lhd(&b.basis(m1), &pair.dual.basis(alpha));
            if l.is_zero() {
                continue;
            }
            let r = b.product_of(&[&b.basis(m2), &b.basis(a), &f(&b.basis(m3))]);
            acc.add_scaled(&outer(&l, &r, sid, db), &c);
        }
        acc.finish()
    })
    .materialize())
}

/// The B*-action `μ‴ α g(μ″) # (a ↼ g(μ′))` for a chosen endomorphism `g` of `B*`.
fn dual_action(fx: &Fixtures, g: impl Fn(&Vect) -> Vect + Send + Sync + 'static) -> Result<SparseBilinear> {
    let (pair, hd) = (fx.t.pair.clone(), fx.hd()?);
    let bs = pair.dual.clone();
    let db = pair.primal.dim();
    let hs = hd.space().clone();
    let sid = hs.id();
    let dsp = bs.space().clone();
    Ok(SparseBilinear::from_rule(&dsp, &hs, &hs, move |mu, k| {
        let (alpha, a) = split(k, db);
        let mut acc = Accumulator::new(sid);
        for (mu1, mu2, mu3, c) in bs.coproduct2_terms(mu) {
            let r = pair.dual_rhd(&pair.primal.basis(a), &g(&bs.basis(mu1)));
            if r.is_zero() {
                continue;
            }
            let l = bs.product_of(&[&bs.basis(mu3), &bs.basis(alpha), &g(&bs.basis(mu2))]);
            acc.add_scaled(&outer(&l, &r, sid, db), &c);
        }
        acc.finish()
    })
    .materialize())
}

/// Assembles a `D(B)`-action from its two factors; `primal_first` selects `(μ⊗1)▷((ε⊗m)▷A)`.
fn full_action(fx: &Fixtures, primal: SparseBilinear, dual: SparseBilinear, primal_first: bool) -> Result<SparseBilinear> {
    let (d, hd) = (fx.d()?, fx.hd()?);
    let db = d.b().dim();
    let o = d.order();
    let (ps, ds) = (d.b().space().id(), d.b_star().space().id());
    Ok(SparseBilinear::from_rule(d.space(), hd.space(), hd.space(), move |i, k| {
        let (mu, m) = split(i, db);
        let (mv, muv) = (Vect::basis_in(ps, m, o), Vect::basis_in(ds, mu, o));
        if primal_first {
            dual.apply(&muv, &primal.basis(m, k))
        } else {
            primal.apply(&mv, &dual.basis(mu, k))
        }
    }))
}

/// The canonical `H(B*)` coaction with its `D(B)` leg and `H(B*)` leg rebuilt from coproduct terms
/// by `f(β′, β″, b′, b″) = (D-leg index, H-leg index)`.
fn coaction_with(fx: &Fixtures, leg: impl Fn(usize, usize, usize, usize) -> (Vect, usize)) -> Result<SparseLinear> {
    let (d, hd) = (fx.d()?, fx.hd()?);
    let (b, bs) = (d.b(), d.b_star());
    let (db, nh) = (b.dim(), hd.dim());
    let cod = Space::tensor(d.space(), hd.space());
    let images = (0..nh)
        .map(|k| {
            let (beta, bb) = split(k, db);
            let mut acc = Accumulator::new(cod.id());
            for (b1, b2, c) in b.coproduct_terms(bb) {
                for (beta1, beta2, e) in bs.coproduct_terms(beta) {
                    let (dleg, hleg) = leg(beta1, beta2, b1, b2);
                    let hv = Vect::basis(hd.space(), hleg, d.order());
                    acc.add_scaled(&outer(&dleg, &hv, cod.id(), nh), &(&c * &e));
                }
            }
            acc.finish()
        })
        .collect();
    SparseLinear::from_table(hd.space(), &cod, images)
}

/// Builds the corrupted structure for `name` and hands its property to `f`.
pub fn with_mutation<R>(fx: &Fixtures, name: &str, f: impl FnOnce(&Property) -> R) -> Result<R> {
    let name = name.strip_prefix("mutation.").unwrap_or(name);
    match name {
        "antipode.squared" => {
            let h = squared_antipode(fx.t.b())?;
            let props = hopf_axiom_properties(&h);
            let p = props.iter().find(|p| p.name().ends_with(".antipode-left")).expect("antipode axiom present");
            Ok(f(p))
        }
        "coaction.antipode-leg" | "coaction.legs-swapped" => {
            let d = fx.d()?;
            let db = d.b().dim();
            let co = if name == "coaction.antipode-leg" {
                coaction_with(fx, |b1, b2, m1, m2| (d.hopf.s(&d.hopf.basis(b2 * db + m1)), b1 * db + m2))?
            } else {
                coaction_with(fx, |b1, b2, m1, m2| (d.hopf.basis(b1 * db + m1), b2 * db + m2))?
            };
            let y = fx.yd()?.with_coaction(co).renamed(format!("H(B*)[{name}]"));
            let prop = yd_property(&y);
            let out = f(&prop);
            Ok(out)
        }
        "action.primal-antipode-inverse" => {
            let b = fx.t.b().clone();
            let act = primal_action(fx, move |x| b.s_inv(x))?;
            let mut alg = fx.hd()?.algebra.clone();
            alg.name = format!("{}[{name}]", alg.name);
            let m = ModuleAlgebra::new(fx.t.b().clone(), alg, act)?;
            let prop = module_algebra_property(&m);
            let out = f(&prop);
            Ok(out)
        }
        "action.dual-antipode" | "action.factor-order" => {
            let (b, bs) = (fx.t.b().clone(), fx.t.b_star().clone());
            let primal = primal_action(fx, move |x| b.s(x))?;
            let full = if name == "action.dual-antipode" {
                let dual = dual_action(fx, move |x| bs.s(x))?;
                full_action(fx, primal, dual, true)?
            } else {
                let dual = dual_action(fx, move |x| bs.s_inv(x))?;
                full_action(fx, primal, dual, false)?
            };
            let y = fx.yd()?.with_action(full).renamed(format!("H(B*)[{name}]"));
            let prop = yd_property(&y);
            let out = f(&prop);
            Ok(out)
        }
        "eta.swapped" | "eta.counits-dropped" => {
            let (d, hd) = (fx.d()?, fx.hd()?);
            let v = if name == "eta.swapped" { EtaVariant::Swapped } else { EtaVariant::PairingOnly };
            let twist = eta_twist_product(d, hd, v);
            let prop = eta_twist_property(hd, &twist, v);
            let out = f(&prop);
            Ok(out)
        }
        other => Err(Error::Usage(format!("unknown mutation fixture {other:?}"))),
    }
}

/// Re-evaluates a recorded witness against the named fixture; true when it still fails.
pub fn replay_mutation(fx: &Fixtures, name: &str, w: &Witness) -> Result<bool> {
    with_mutation(fx, name, |p| p.replay(w))
}

/// Runs one fixture and replays its witness.
pub fn run_mutation(fx: &Fixtures, name: &str, mode: &Mode) -> Result<MutationOutcome> {
    let (result, replayed) = with_mutation(fx, name, |p| {
        let r = p.run(mode);
        let replayed = r.witness.as_ref().is_some_and(|w| p.replay(w));
        (r, replayed)
    })?;
    let bare = name.strip_prefix("mutation.").unwrap_or(name);
    let desc = MUTATIONS.iter().find(|(n, _)| *n == bare).map(|(_, d)| *d).unwrap_or("");
    let note = match (result.status, replayed) {
        (Status::Fail, true) => format!("{desc}; witness replays"),
        (Status::Fail, false) => format!("{desc}; witness does not replay"),
        _ => format!("{desc}; corruption not detected"),
    };
    let result = result.renamed(format!("mutation.{bare}")).with_note(note);
    Ok(MutationOutcome { result, replayed })
}

/// Every fixture in [`MUTATIONS`] order.
pub fn run_mutations(fx: &Fixtures, mode: &Mode) -> Result<Vec<MutationOutcome>> {
    MUTATIONS.iter().map(|(n, _)| run_mutation(fx, n, mode)).collect()
}
