//! Evaluation of element expressions in the Taft-family structures.

use hopf_core::error::{Error, Result};
use hopf_core::hopf::Algebra;
use hopf_core::linalg::{split, SpaceRef, SparseLinear, Space, Vect, outer};
use hopf_core::scalar::{render_q, Cyclotomic};
use hopf_core::suite::Fixtures;
use hopf_core::taft::{basis_change, heisenberg_generators};
use hopf_core::ydcat::{braiding, YDModuleAlgebra};

use crate::expr::{self, Expr, Tok};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Structure {
    Product,
    Action,
    Coaction,
    Braiding,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    /// `H(B*)`; acted on by `D(B)`.
    Hdouble,
    /// `D(B)`.
    Ddouble,
    /// `U_q sl(2)`.
    Uqsl2,
    /// `H_q sl(2)`; acted on by `U_q sl(2)`.
    Hqsl2,
}

/// An algebra with its named elements and a basis renderer.
struct Scope {
    algebra: Algebra,
    names: Vec<(&'static [&'static str], Vect)>,
    /// Coordinates used for display, with their labels.
    display: Option<(SparseLinear, SpaceRef)>,
}

fn canonical_name(n: &str) -> &str {
    match n {
        "∂" => "del",
        "λ" => "lam",
        "κ" => "kap",
        "kappa" => "kap",
        "lambda" => "lam",
        other => other,
    }
}

impl Scope {
    fn lookup(&self, n: &str) -> Option<&Vect> {
        let n = canonical_name(n);
        self.names.iter().find(|(ns, _)| ns.contains(&n)).map(|(_, v)| v)
    }

    fn label_space(&self) -> &SpaceRef {
        self.display.as_ref().map(|(_, s)| s).unwrap_or(&self.algebra.space)
    }

    fn to_display(&self, v: &Vect) -> Vect {
        match &self.display {
            Some((f, _)) => f.apply(v),
            None => v.clone(),
        }
    }
}

fn build_scope(fx: &Fixtures, target: Target) -> Result<Scope> {
    let t = &fx.t;
    let scope = match target {
        Target::Hdouble => {
            let hd = fx.hd()?;
            let (z, lam, del) = heisenberg_generators(t, hd);
            let (bc, _) = basis_change(t, hd)?;
            Scope {
                algebra: hd.algebra.clone(),
                names: vec![
                    (&["E"], hd.from_primal(&t.ek(1, 0))),
                    (&["k"], hd.from_primal(&t.ek(0, 1))),
                    (&["F"], hd.from_dual(&t.f)),
                    (&["kap"], hd.from_dual(&t.kappa)),
                    (&["z"], z),
                    (&["lam"], lam),
                    (&["del"], del),
                ],
                display: Some((bc.to_pbw.clone(), bc.pbw_space.clone())),
            }
        }
        Target::Ddouble => {
            let d = fx.d()?;
            Scope {
                algebra: d.hopf.algebra(),
                names: vec![
                    (&["E"], d.from_primal(&t.ek(1, 0))),
                    (&["k"], d.from_primal(&t.ek(0, 1))),
                    (&["F"], d.from_dual(&t.f)),
                    (&["kap"], d.from_dual(&t.kappa)),
                ],
                display: None,
            }
        }
        Target::Uqsl2 => {
            let u = &fx.uq()?.0;
            Scope { algebra: u.hopf.algebra(), names: vec![(&["E"], u.e()), (&["F"], u.f()), (&["K"], u.k())], display: None }
        }
        Target::Hqsl2 => {
            let h = fx.hq()?;
            Scope {
                algebra: h.yd.algebra.clone(),
                names: vec![(&["z"], h.z.clone()), (&["lam"], h.lam.clone()), (&["del"], h.del.clone())],
                display: None,
            }
        }
    };
    Ok(scope)
}

fn domain(pos: usize, msg: String) -> Error {
    Error::Parse { pos, msg }
}

/// `x^{-1}` for an `x` of finite multiplicative order.
fn inverse(a: &Algebra, x: &Vect, pos: usize) -> Result<Vect> {
    let one = a.one();
    if let Some((i, c)) = x.terms().first() {
        if x.terms().len() == 1 && a.basis(*i) == one {
            return Ok(one.scale(&c.inv()?));
        }
    }
    let mut acc = x.clone();
    let mut prev = one.clone();
    for _ in 0..4 * a.dim() {
        if acc == one {
            return Ok(prev);
        }
        prev = acc.clone();
        acc = a.mul(&acc, x);
    }
    Err(domain(pos, "negative exponent of an element that is not invertible".into()))
}

fn eval(e: &Expr, s: &Scope, fx: &Fixtures) -> Result<Vect> {
    let a = &s.algebra;
    let ctx = &fx.t.ctx;
    Ok(match e {
        Expr::Int(v) => a.one().scale(&ctx.int(*v)),
        Expr::Name { name, pos } => match name.as_str() {
            "q" => a.one().scale(&ctx.q),
            "qh" => a.one().scale(&ctx.q_half),
            n => s.lookup(n).cloned().ok_or_else(|| {
                let known: Vec<&str> = s.names.iter().map(|(n, _)| n[0]).collect();
                domain(*pos, format!("unknown name {n:?} here; known: {}, q, qh", known.join(", ")))
            })?,
        },
        Expr::Add(x, y) => eval(x, s, fx)?.add(&eval(y, s, fx)?),
        Expr::Sub(x, y) => eval(x, s, fx)?.sub(&eval(y, s, fx)?),
        Expr::Mul(x, y) => a.mul(&eval(x, s, fx)?, &eval(y, s, fx)?),
        Expr::Neg(x) => eval(x, s, fx)?.neg(),
        Expr::Pow { base, exp, pos } => {
            let b = eval(base, s, fx)?;
            let b = if *exp < 0 { inverse(a, &b, *pos)? } else { b };
            a.pow(&b, exp.unsigned_abs() as u32)
        }
    })
}

/// `g^1` → `g`, unicode generators → ascii aliases, factors joined by `·`.
pub fn ascii_label(label: &str) -> String {
    let mut parts = Vec::new();
    for tok in label.split_whitespace() {
        if tok == "1" || tok == "#" || tok == "⊗" || tok == "ε" {
            continue;
        }
        let (g, e) = tok.split_once('^').unwrap_or((tok, "1"));
        let g = match g {
            "∂" => "del",
            "λ" => "lam",
            "κ" => "kap",
            other => other,
        };
        parts.push(if e == "1" { g.to_string() } else { format!("{g}^{e}") });
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("·")
    }
}

/// Sign and magnitude of a coefficient; compound magnitudes are parenthesized.
fn coefficient(c: &Cyclotomic) -> (bool, String) {
    let r = render_q(c);
    let (neg, inner) = match r.strip_prefix('−') {
        Some(rest) => (true, rest.to_string()),
        None => (false, r),
    };
    if (inner.contains(" + ") || inner.contains(" − ")) && !inner.starts_with('(') {
        (neg, format!("({inner})"))
    } else {
        (neg, inner)
    }
}

/// `c·label` terms joined by `+` and `−`; `0` for the zero vector.
pub fn render_terms(terms: &[(usize, Cyclotomic)], label: impl Fn(usize) -> String) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (i, c)) in terms.iter().enumerate() {
        let l = label(*i);
        let (neg, mag) = coefficient(c);
        let body = if mag == "1" { l } else { format!("{mag}·{l}") };
        let t = if neg { format!("−{body}") } else { body };
        match (k, t.strip_prefix('−')) {
            (0, _) => out.push_str(&t),
            (_, Some(rest)) => {
                out.push_str(" − ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
    }
    out
}

fn render_in(s: &Scope, v: &Vect) -> String {
    let w = s.to_display(v);
    let sp = s.label_space();
    render_terms(w.terms(), |i| ascii_label(&sp.label(i)))
}

fn render_tensor(left: &Scope, right: &Scope, v: &Vect, right_dim: usize) -> String {
    let (lsp, rsp) = (left.label_space().clone(), right.label_space().clone());
    let dom = Space::tensor(&left.algebra.space, &right.algebra.space);
    let cod = Space::tensor(&lsp, &rsp);
    let id = |s: &Scope| s.display.as_ref().map(|(f, _)| f.clone()).unwrap_or_else(|| SparseLinear::identity(&s.algebra.space, s.algebra.order));
    let f = SparseLinear::tensor(&id(left), &id(right), &dom, &cod);
    let w = f.apply(&Vect::from_terms(dom.id(), v.terms().to_vec()));
    let rd = rsp.dim();
    debug_assert_eq!(rd, right_dim);
    render_terms(w.terms(), |k| {
        let (i, j) = split(k, rd);
        format!("{} ⊗ {}", ascii_label(&lsp.label(i)), ascii_label(&rsp.label(j)))
    })
}

fn yd_for(fx: &Fixtures, module: Target) -> Result<YDModuleAlgebra> {
    match module {
        Target::Hdouble => Ok(fx.yd()?.clone()),
        Target::Hqsl2 => Ok(fx.hq()?.yd.clone()),
        other => Err(Error::Usage(format!("{other:?} carries no action or coaction; use hdouble or hqsl2"))),
    }
}

fn acting(module: Target) -> Target {
    if module == Target::Hqsl2 {
        Target::Uqsl2
    } else {
        Target::Ddouble
    }
}

/// Picks `uqsl2`/`hqsl2` when `K` appears and no algebra is given.
fn choose(target: Option<Target>, exprs: &[&Expr], structure: Structure) -> Target {
    if let Some(t) = target {
        return t;
    }
    let mut ns = Vec::new();
    for e in exprs {
        expr::names(e, &mut ns);
    }
    let uses_k = ns.iter().any(|n| n == "K");
    match (structure, uses_k) {
        (Structure::Product, true) => Target::Uqsl2,
        (_, true) => Target::Hqsl2,
        _ => Target::Hdouble,
    }
}

/// Evaluates `src` under `structure` and renders the exact result.
pub fn evaluate(fx: &Fixtures, src: &str, structure: Structure, target: Option<Target>) -> Result<String> {
    match structure {
        Structure::Product => {
            let e = expr::parse(src)?;
            let t = choose(target, &[&e], structure);
            let s = build_scope(fx, t)?;
            Ok(render_in(&s, &eval(&e, &s, fx)?))
        }
        Structure::Action => {
            let (h, x) = expr::parse_pair(src, Tok::Act)?;
            let module = choose(target, &[&h, &x], structure);
            let y = yd_for(fx, module)?;
            let (hs, ms) = (build_scope(fx, acting(module))?, build_scope(fx, module)?);
            let (hv, xv) = (eval(&h, &hs, fx)?, eval(&x, &ms, fx)?);
            Ok(render_in(&ms, &y.act(&hv, &xv)))
        }
        Structure::Coaction => {
            let e = expr::parse(src)?;
            let module = choose(target, &[&e], structure);
            let y = yd_for(fx, module)?;
            let (hs, ms) = (build_scope(fx, acting(module))?, build_scope(fx, module)?);
            let v = y.coact(&eval(&e, &ms, fx)?);
            Ok(render_tensor(&hs, &ms, &v, y.dim()))
        }
        Structure::Braiding => {
            let (a, b) = expr::parse_pair(src, Tok::Tensor)?;
            let module = choose(target, &[&a, &b], structure);
            let y = yd_for(fx, module)?;
            let ms = build_scope(fx, module)?;
            let (av, bv) = (eval(&a, &ms, fx)?, eval(&b, &ms, fx)?);
            let c = braiding(&y, &y)?;
            let t = outer(&av, &bv, c.domain().id(), y.dim());
            Ok(render_tensor(&ms, &ms, &c.apply(&t), y.dim()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_become_ascii_products() {
        assert_eq!(ascii_label("z^1 ∂^1"), "z·del");
        assert_eq!(ascii_label("λ^2 κ^1"), "lam^2·kap");
        assert_eq!(ascii_label("1 ⊗ 1"), "1");
        assert_eq!(ascii_label("κ^1 # k^3"), "kap·k^3");
    }

    #[test]
    fn terms_join_with_signs() {
        let o = 8;
        let one = Cyclotomic::one(o);
        let terms = vec![(0, one.clone()), (1, -one.clone()), (2, Cyclotomic::from_int(o, 3))];
        assert_eq!(render_terms(&terms, |i| ["a", "b", "c"][i].to_string()), "a − b + 3·c");
        assert_eq!(render_terms(&[], |_| String::new()), "0");
    }

    #[test]
    fn k_with_negative_exponent_inverts() {
        let fx = Fixtures::new(2).unwrap();
        assert_eq!(evaluate(&fx, "K^-1 K", Structure::Product, None).unwrap(), "1");
        assert_eq!(evaluate(&fx, "F^-1", Structure::Product, Some(Target::Uqsl2)).map_err(|e| matches!(e, Error::Parse { .. })), Err(true));
    }
}
