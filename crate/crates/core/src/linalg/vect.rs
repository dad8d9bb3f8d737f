use std::fmt;

use crate::scalar::{render_q, Cyclotomic};

use super::space::{Space, SpaceId};

/// A sparse vector: sorted `(basis index, coefficient)` pairs with no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vect {
    space: SpaceId,
    terms: Vec<(usize, Cyclotomic)>,
}

impl fmt::Debug for Vect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vect{{")?;
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}: {c}")?;
        }
        write!(f, "}}")
    }
}

impl Vect {
    pub fn zero(space: &Space) -> Self {
        Vect { space: space.id(), terms: Vec::new() }
    }

    pub fn zero_in(space: SpaceId) -> Self {
        Vect { space, terms: Vec::new() }
    }

    pub fn basis(space: &Space, i: usize, order: u32) -> Self {
        debug_assert!(i < space.dim());
        Vect { space: space.id(), terms: vec![(i, Cyclotomic::one(order))] }
    }

    pub fn basis_in(space: SpaceId, i: usize, order: u32) -> Self {
        Vect { space, terms: vec![(i, Cyclotomic::one(order))] }
    }

    pub fn monomial(space: SpaceId, i: usize, c: Cyclotomic) -> Self {
        if c.is_zero() {
            return Vect::zero_in(space);
        }
        Vect { space, terms: vec![(i, c)] }
    }

    /// Collects arbitrary terms, summing duplicates and dropping zeros.
    pub fn from_terms(space: SpaceId, mut terms: Vec<(usize, Cyclotomic)>) -> Self {
        if terms.len() > 1 {
            terms.sort_unstable_by_key(|t| t.0);
            let mut out: Vec<(usize, Cyclotomic)> = Vec::with_capacity(terms.len());
            for (i, c) in terms {
                match out.last_mut() {
                    Some((j, d)) if *j == i => *d += &c,
                    _ => out.push((i, c)),
                }
            }
            out.retain(|t| !t.1.is_zero());
            Vect { space, terms: out }
        } else {
            terms.retain(|t| !t.1.is_zero());
            Vect { space, terms }
        }
    }

    /// Terms that are already sorted, distinct and nonzero.
    pub(crate) fn from_sorted_unchecked(space: SpaceId, terms: Vec<(usize, Cyclotomic)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Vect { space, terms }
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    /// Reinterprets the coefficients in another space of the same dimension.
    pub fn relabel(mut self, space: SpaceId) -> Self {
        self.space = space;
        self
    }

    pub fn terms(&self) -> &[(usize, Cyclotomic)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(usize, Cyclotomic)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Option<&Cyclotomic> {
        self.terms.binary_search_by_key(&i, |t| t.0).ok().map(|k| &self.terms[k].1)
    }

    /// Largest basis index in the support.
    pub fn leading(&self) -> Option<(usize, &Cyclotomic)> {
        self.terms.last().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Vect {
        if c.is_zero() {
            return Vect::zero_in(self.space);
        }
        if c.is_one() {
            return self.clone();
        }
        Vect { space: self.space, terms: self.terms.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn neg(&self) -> Vect {
        Vect { space: self.space, terms: self.terms.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    fn check(&self, other: &Vect) {
        assert_eq!(self.space, other.space, "vectors from different spaces");
    }

    /// `self + c * other` by a sorted merge.
    pub fn add_scaled(&self, other: &Vect, c: &Cyclotomic) -> Vect {
        self.check(other);
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (0, 0);
        let (x, y) = (&self.terms, &other.terms);
        while a < x.len() || b < y.len() {
            if b >= y.len() || (a < x.len() && x[a].0 < y[b].0) {
                out.push(x[a].clone());
                a += 1;
            } else if a >= x.len() || y[b].0 < x[a].0 {
                out.push((y[b].0, &y[b].1 * c));
                b += 1;
            } else {
                let s = &x[a].1 + &(&y[b].1 * c);
                if !s.is_zero() {
                    out.push((x[a].0, s));
                }
                a += 1;
                b += 1;
            }
        }
        Vect { space: self.space, terms: out }
    }

    pub fn add(&self, other: &Vect) -> Vect {
        self.check(other);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (0, 0);
        let (x, y) = (&self.terms, &other.terms);
        while a < x.len() || b < y.len() {
            if b >= y.len() || (a < x.len() && x[a].0 < y[b].0) {
                out.push(x[a].clone());
                a += 1;
            } else if a >= x.len() || y[b].0 < x[a].0 {
                out.push(y[b].clone());
                b += 1;
            } else {
                let s = &x[a].1 + &y[b].1;
                if !s.is_zero() {
                    out.push((x[a].0, s));
                }
                a += 1;
                b += 1;
            }
        }
        Vect { space: self.space, terms: out }
    }

    pub fn sub(&self, other: &Vect) -> Vect {
        self.check(other);
        let minus_one = match other.terms.first() {
            Some((_, c)) => -Cyclotomic::one(c.order()),
            None => return self.clone(),
        };
        self.add_scaled(other, &minus_one)
    }

    /// Human-readable rendering against the labels of `space`.
    pub fn render(&self, space: &Space) -> String {
        render_terms(&self.terms, |i| space.label(i))
    }

    /// Rendering using a custom label function.
    pub fn render_with(&self, label: impl Fn(usize) -> String) -> String {
        render_terms(&self.terms, label)
    }
}

fn render_terms(terms: &[(usize, Cyclotomic)], label: impl Fn(usize) -> String) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (i, c)) in terms.iter().enumerate() {
        let s = render_q(c);
        let (neg, body) = match s.strip_prefix('−') {
            Some(rest) if !has_top_level_sum(rest) => (true, rest.to_string()),
            _ => (false, s),
        };
        let body = if has_top_level_sum(&body) { format!("({body})") } else { body };
        let lab = label(*i);
        let piece = if body == "1" { lab } else { format!("{body}·{lab}") };
        if k == 0 {
            if neg {
                out.push('−');
            }
        } else {
            out.push_str(if neg { " − " } else { " + " });
        }
        out.push_str(&piece);
    }
    out
}

fn has_top_level_sum(s: &str) -> bool {
    let mut depth = 0i32;
    let chars: Vec<char> = s.chars().collect();
    for (i, ch) in chars.iter().enumerate() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '−' if depth == 0 && i > 0 && chars[i - 1] == ' ' => return true,
            _ => {}
        }
    }
    false
}

/// Accumulates scaled terms and produces a normalized [`Vect`].
pub struct Accumulator {
    space: SpaceId,
    terms: Vec<(usize, Cyclotomic)>,
}

impl Accumulator {
    pub fn new(space: SpaceId) -> Self {
        Accumulator { space, terms: Vec::new() }
    }

    pub fn with_capacity(space: SpaceId, n: usize) -> Self {
        Accumulator { space, terms: Vec::with_capacity(n) }
    }

    pub fn push(&mut self, i: usize, c: Cyclotomic) {
        if !c.is_zero() {
            self.terms.push((i, c));
        }
    }

    /// Adds `c * v`.
    pub fn add_scaled(&mut self, v: &Vect, c: &Cyclotomic) {
        debug_assert_eq!(v.space, self.space);
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            self.terms.extend(v.terms.iter().cloned());
        } else {
            self.terms.extend(v.terms.iter().map(|(i, x)| (*i, x * c)));
        }
    }

    pub fn add(&mut self, v: &Vect) {
        debug_assert_eq!(v.space, self.space);
        self.terms.extend(v.terms.iter().cloned());
    }

    pub fn finish(self) -> Vect {
        Vect::from_terms(self.space, self.terms)
    }
}

/// Outer product `a ⊗ b` in the tensor space whose right factor has dimension `right_dim`.
pub fn outer(a: &Vect, b: &Vect, space: SpaceId, right_dim: usize) -> Vect {
    let mut terms = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a.terms() {
        for (j, y) in b.terms() {
            terms.push((i * right_dim + j, x * y));
        }
    }
    // Lexicographic (i, j) order is index order, so the result is already sorted.
    terms.retain(|t| !t.1.is_zero());
    Vect::from_sorted_unchecked(space, terms)
}

/// Splits a tensor-space index into its left and right factor indices.
#[inline]
pub fn split(index: usize, right_dim: usize) -> (usize, usize) {
    (index / right_dim, index % right_dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SpaceRef;

    fn sp() -> SpaceRef {
        Space::from_names("v", (0..5).map(|i| format!("e{i}")).collect())
    }

    #[test]
    fn merge_and_cancel() {
        let s = sp();
        let o = 8;
        let a = Vect::from_terms(s.id(), vec![(3, Cyclotomic::from_int(o, 2)), (1, Cyclotomic::one(o)), (3, Cyclotomic::from_int(o, -2))]);
        assert_eq!(a, Vect::basis(&s, 1, o));
        let b = Vect::basis(&s, 4, o);
        let c = a.add(&b).sub(&b);
        assert_eq!(c, a);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn render_uses_labels() {
        let s = sp();
        let o = 8;
        let q = Cyclotomic::zeta_pow(o, 2);
        let v = Vect::from_terms(s.id(), vec![(0, Cyclotomic::one(o)), (2, -q)]);
        assert_eq!(v.render(&s), "e0 + q^{-1}·e2");
    }

    #[test]
    fn outer_product_indices() {
        let a = Space::from_names("a", vec!["x".into(), "y".into()]);
        let b = Space::from_names("b", vec!["1".into(), "2".into()]);
        let t = Space::tensor(&a, &b);
        let v = outer(&Vect::basis(&a, 1, 8), &Vect::basis(&b, 0, 8), t.id(), 2);
        assert_eq!(v.render(&t), "y ⊗ 1");
    }
}
