use crate::error::{Error, Result};
use crate::hopf::Algebra;
use crate::linalg::{linear_map_inverse, outer, split, Accumulator, Space, SparseBilinear, SparseLinear, Vect};
use crate::report::{Axis, CheckResult, Mode, Property};

use super::{hopf_axis, YDModuleAlgebra};

/// Tables are built eagerly below this many entries; larger maps stay rule-based.
const TABLE_LIMIT: usize = 1 << 17;

/// A braided product `X₁ ⋈ … ⋈ X_N`, bracketed from the left.
#[derive(Clone, Debug)]
pub struct BraidedProductAlgebra {
    pub yd: YDModuleAlgebra,
    pub factors: Vec<YDModuleAlgebra>,
}

impl BraidedProductAlgebra {
    /// A one-factor product, the factor itself.
    pub fn single(x: &YDModuleAlgebra) -> Self {
        BraidedProductAlgebra { yd: x.clone(), factors: vec![x.clone()] }
    }

    pub fn dim(&self) -> usize {
        self.yd.dim()
    }

    fn strides(&self) -> Vec<usize> {
        let mut s = vec![1; self.factors.len()];
        for i in (0..self.factors.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * self.factors[i + 1].dim();
        }
        s
    }

    /// The element `w₁ ⋈ … ⋈ w_N`.
    pub fn pure(&self, parts: &[Vect]) -> Vect {
        let strides = self.strides();
        let mut terms: Vec<(usize, crate::scalar::Cyclotomic)> = vec![(0, crate::scalar::Cyclotomic::one(self.yd.order()))];
        for (k, w) in parts.iter().enumerate() {
            let mut next = Vec::with_capacity(terms.len() * w.len());
            for (i, c) in &terms {
                for (j, d) in w.terms() {
                    next.push((i + j * strides[k], c * d));
                }
            }
            terms = next;
        }
        Vect::from_terms(self.yd.space().id(), terms)
    }

    /// `v` placed in factor `i`, units elsewhere.
    pub fn embed(&self, i: usize, v: &Vect) -> Vect {
        let parts: Vec<Vect> = self.factors.iter().enumerate().map(|(k, f)| if k == i { v.clone() } else { f.algebra.one() }).collect();
        self.pure(&parts)
    }

    /// Restricting the product to each factor recovers that factor's multiplication.
    pub fn check_factor_restrictions(&self) -> CheckResult {
        let parts = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let o = f.order();
                Property::new(
                    format!("{}.factor{}", self.yd.name, i + 1),
                    vec![Axis::basis_of("a", f.space(), o), Axis::basis_of("b", f.space(), o)],
                    self.yd.space(),
                    move |v| (self.yd.mul(&self.embed(i, v[0]), &self.embed(i, v[1])), self.embed(i, &f.mul(v[0], v[1]))),
                )
                .run(&Mode::Exhaustive)
            })
            .collect();
        CheckResult::all(format!("factor-restriction.{}", self.yd.name), parts)
    }

    /// `x[i] y[j] = (x₍₋₁₎▷y)[j] x₍₀₎[i]` for the listed factor pairs `(i, j)`, zero-based.
    pub fn check_cross_relations(&self, name: &str, pairs: &[(usize, usize)], mode: &Mode) -> Result<CheckResult> {
        let mut parts = Vec::new();
        for &(i, j) in pairs {
            let (fi, fj) = (&self.factors[i], &self.factors[j]);
            if fi.hopf.space().id() != fj.hopf.space().id() {
                return Err(Error::Structural("factors over different Hopf algebras".into()));
            }
            let o = fi.order();
            let h = &fi.hopf;
            let r = Property::new(
                format!("{name}.{}-{}", i + 1, j + 1),
                vec![Axis::basis_of("x", fi.space(), o), Axis::basis_of("y", fj.space(), o)],
                self.yd.space(),
                move |v| {
                    let lhs = self.yd.mul(&self.embed(i, v[0]), &self.embed(j, v[1]));
                    let mut acc = Accumulator::new(self.yd.space().id());
                    for (g, x0, c) in fi.coact_vec_terms(v[0]) {
                        let gy = fj.act(&h.basis(g), v[1]);
                        let p = self.yd.mul(&self.embed(j, &gy), &self.embed(i, &fi.algebra.basis(x0)));
                        acc.add_scaled(&p, &c);
                    }
                    (lhs, acc.finish())
                },
            )
            .run(mode);
            parts.push(r);
        }
        Ok(CheckResult::all(name.to_string(), parts))
    }

    /// Pairs `(i, j)` with `i > j`.
    pub fn descending_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.factors.len();
        (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).collect()
    }
}

/// `(x⋈y)(v⋈u) = x(y₍₋₁₎▷v) ⋈ y₍₀₎u` with diagonal action and codiagonal coaction.
pub fn braided_product(x: &YDModuleAlgebra, y: &YDModuleAlgebra) -> Result<BraidedProductAlgebra> {
    build(x, y, vec![x.clone(), y.clone()])
}

fn build(x: &YDModuleAlgebra, y: &YDModuleAlgebra, factors: Vec<YDModuleAlgebra>) -> Result<BraidedProductAlgebra> {
    if x.hopf.space().id() != y.hopf.space().id() {
        return Err(Error::Structural(format!("{} and {} live over different Hopf algebras", x.name, y.name)));
    }
    let name = format!("{}⋈{}", x.name, y.name);
    let space = Space::tensor_with(x.space(), y.space(), "⋈");
    let dy = y.dim();
    let n = space.dim();
    let o = x.order();
    let h = x.hopf.clone();
    let sid = space.id();

    let (x2, y2) = (x.clone(), y.clone());
    let mult = SparseBilinear::from_rule(&space, &space, &space, move |i, j| {
        let (xi, yi) = split(i, dy);
        let (vj, uj) = split(j, dy);
        let mut acc = Accumulator::new(sid);
        for (g, y0, c) in y2.coact_terms(yi) {
            let gv = x2.action.basis(g, vj);
            if gv.is_zero() {
                continue;
            }
            let left = x2.algebra.mult.apply(&x2.algebra.basis(xi), &gv);
            let right = y2.algebra.mult.basis(y0, uj);
            acc.add_scaled(&outer(&left, &right, sid, dy), &c);
        }
        acc.finish()
    });
    let mult = if n * n <= TABLE_LIMIT { mult.materialize() } else { mult };
    let unit = outer(&x.algebra.one(), &y.algebra.one(), sid, dy);
    let algebra = Algebra::new(name.clone(), o, &space, mult, unit)?;

    let (x3, y3, h3) = (x.clone(), y.clone(), h.clone());
    let action = SparseBilinear::from_rule(h.space(), &space, &space, move |m, k| {
        let (xi, yi) = split(k, dy);
        let mut acc = Accumulator::new(sid);
        for (a, b, c) in h3.coproduct_terms(m) {
            let l = x3.action.basis(a, xi);
            if l.is_zero() {
                continue;
            }
            acc.add_scaled(&outer(&l, &y3.action.basis(b, yi), sid, dy), &c);
        }
        acc.finish()
    });
    let action = if h.dim() * n <= TABLE_LIMIT { action.materialize() } else { action };

    let hs = Space::tensor(h.space(), &space);
    let coaction = SparseLinear::from_table(
        &space,
        &hs,
        (0..n)
            .map(|k| {
                let (xi, yi) = split(k, dy);
                let mut acc = Accumulator::new(hs.id());
                for (g1, x0, c1) in x.coact_terms(xi) {
                    for (g2, y0, c2) in y.coact_terms(yi) {
                        let g = h.mul_basis(g1, g2);
                        for (gi, d) in g.terms() {
                            acc.push(gi * n + x0 * dy + y0, &(&c1 * &c2) * d);
                        }
                    }
                }
                acc.finish()
            })
            .collect(),
    )?;
    let yd = YDModuleAlgebra::new(name, h, algebra, action, coaction)?;
    Ok(BraidedProductAlgebra { yd, factors })
}

/// The left-nested product `((X₁ ⋈ X₂) ⋈ X₃) ⋈ …`.
pub fn chain_product(factors: &[YDModuleAlgebra]) -> Result<BraidedProductAlgebra> {
    let first = factors.first().ok_or_else(|| Error::Structural("empty chain".into()))?;
    let mut acc = BraidedProductAlgebra::single(first);
    for f in &factors[1..] {
        let mut fs = acc.factors.clone();
        fs.push(f.clone());
        acc = build(&acc.yd, f, fs)?;
    }
    Ok(acc)
}

/// `φ(x⋈y) = (x₍₋₁₎▷y) ⋈ x₍₀₎` from `X⋈Y` to `Y⋈X`, with its morphism certificates.
pub fn flip_isomorphism(x: &YDModuleAlgebra, y: &YDModuleAlgebra, mode: &Mode) -> Result<(SparseLinear, CheckResult)> {
    let xy = braided_product(x, y)?;
    let yx = braided_product(y, x)?;
    let phi = flip_map(x, y, &xy.yd, &yx.yd);
    let psi = flip_map(y, x, &yx.yd, &xy.yd);
    let o = x.order();
    let name = format!("flip.{}.{}", x.name, y.name);
    let (a, b) = (&xy.yd, &yx.yd);
    let h = &x.hopf;
    let bij = match linear_map_inverse(&phi, &name, o) {
        Ok(_) => CheckResult::fact(format!("{name}.bijective"), true, "invertible", "invertible"),
        Err(e) => CheckResult::fact(format!("{name}.bijective"), false, e.to_string(), "invertible"),
    };
    let alg = Property::new(format!("{name}.algebra"), vec![Axis::basis_of("w", a.space(), o), Axis::basis_of("w2", a.space(), o)], b.space(), |v| {
        (phi.apply(&a.mul(v[0], v[1])), b.mul(&phi.apply(v[0]), &phi.apply(v[1])))
    })
    .run(mode);
    let module = Property::new(format!("{name}.module"), vec![hopf_axis(h, "M"), Axis::basis_of("w", a.space(), o)], b.space(), |v| {
        (phi.apply(&a.act(v[0], v[1])), b.act(v[0], &phi.apply(v[1])))
    })
    .run(mode);
    let nb = b.dim();
    let comodule = Property::new(format!("{name}.comodule"), vec![Axis::basis_of("w", a.space(), o)], b.coaction_space(), |v| {
        let l = b.coact(&phi.apply(v[0]));
        let mut r = Accumulator::new(b.coaction_space().id());
        for (g, w0, c) in a.coact_vec_terms(v[0]) {
            r.add_scaled(&outer(&h.basis(g), &phi.image(w0), b.coaction_space().id(), nb), &c);
        }
        (l, r.finish())
    })
    .run(&Mode::Exhaustive);
    let round = Property::new(format!("{name}.round-trip"), vec![Axis::basis_of("w", a.space(), o)], a.space(), |v| {
        (psi.apply(&phi.apply(v[0])), v[0].clone())
    })
    .run(&Mode::Exhaustive);
    Ok((phi.clone(), CheckResult::all(name, vec![bij, alg, module, comodule, round])))
}

fn flip_map(x: &YDModuleAlgebra, y: &YDModuleAlgebra, from: &YDModuleAlgebra, to: &YDModuleAlgebra) -> SparseLinear {
    let (dx, dy) = (x.dim(), y.dim());
    let tid = to.space().id();
    let images = (0..dx * dy)
        .map(|k| {
            let (xi, yi) = split(k, dy);
            let mut acc = Accumulator::new(tid);
            for (g, x0, c) in x.coact_terms(xi) {
                let gy = y.action.basis(g, yi);
                for (j, d) in gy.terms() {
                    acc.push(j * dx + x0, &c * d);
                }
            }
            acc.finish()
        })
        .collect();
    SparseLinear::from_table(from.space(), to.space(), images).expect("shapes match")
}
