use num_traits::{One, Signed, Zero};

use super::{Cyclotomic, Rational};

fn q_exp(twice: i64) -> String {
    match twice {
        0 => String::new(),
        2 => "q".into(),
        t if t % 2 == 0 => format!("q^{{{}}}", t / 2),
        t => format!("q^{{{t}/2}}"),
    }
}

// Representative of a zeta exponent in (-N/2, N/2].
fn centered(j: i64, order: i64) -> i64 {
    let r = j.rem_euclid(order);
    if r > order / 2 {
        r - order
    } else {
        r
    }
}

fn rational_str(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn term(c: &Rational, twice: i64, first: bool) -> String {
    let mono = q_exp(twice);
    let sign = if c.is_negative() { "−" } else { "+" };
    let a = c.abs();
    let body = if mono.is_empty() {
        rational_str(&a)
    } else if a.is_one() {
        mono
    } else {
        format!("{}{}", rational_str(&a), mono)
    };
    if first {
        if c.is_negative() {
            format!("−{body}")
        } else {
            body
        }
    } else {
        format!(" {sign} {body}")
    }
}

// Finds `s = c * zeta^j`, preferring the smallest |j|, then a positive coefficient.
fn monomial(s: &Cyclotomic) -> Option<(Rational, i64)> {
    let n = s.order() as i64;
    let mut best: Option<(Rational, i64)> = None;
    for j in 0..n {
        let t = s * &Cyclotomic::zeta_pow(s.order(), -j);
        if let Some(c) = t.as_rational() {
            let jc = centered(j, n);
            let better = match &best {
                None => true,
                Some((bc, b)) => {
                    let key = |c: &Rational, j: i64| (j.abs(), c.is_negative(), -j);
                    key(&c, jc) < key(bc, *b)
                }
            };
            if better {
                best = Some((c, jc));
            }
        }
    }
    best
}

fn two_terms(s: &Cyclotomic) -> Option<((Rational, i64), (Rational, i64))> {
    let order = s.order();
    let n = order as i64;
    let target = s.coeffs();
    let mut best: Option<((Rational, i64), (Rational, i64))> = None;
    let cost = |a: i64, b: i64| a.abs() + b.abs();
    for a in 0..n {
        for b in (a + 1)..n {
            let za = Cyclotomic::zeta_pow(order, a).coeffs();
            let zb = Cyclotomic::zeta_pow(order, b).coeffs();
            // Solve c1 za + c2 zb = target over Q using two independent coordinates.
            let mut sol = None;
            'outer: for i in 0..target.len() {
                for k in (i + 1)..target.len() {
                    let det = &za[i] * &zb[k] - &za[k] * &zb[i];
                    if det.is_zero() {
                        continue;
                    }
                    let c1 = (&target[i] * &zb[k] - &target[k] * &zb[i]) / &det;
                    let c2 = (&za[i] * &target[k] - &za[k] * &target[i]) / &det;
                    sol = Some((c1, c2));
                    break 'outer;
                }
            }
            let Some((c1, c2)) = sol else { continue };
            if c1.is_zero() || c2.is_zero() {
                continue;
            }
            let ok = (0..target.len()).all(|i| &c1 * &za[i] + &c2 * &zb[i] == target[i]);
            if !ok {
                continue;
            }
            let (ja, jb) = (centered(a, n), centered(b, n));
            let better = match &best {
                None => true,
                Some(((_, x), (_, y))) => cost(ja, jb) < cost(*x, *y),
            };
            if better {
                let (hi, lo) = if ja >= jb { ((c1, ja), (c2, jb)) } else { ((c2, jb), (c1, ja)) };
                best = Some((hi, lo));
            }
        }
    }
    best
}

/// Renders a scalar in terms of `q` and `q^{1/2}`, e.g. `q^{-2}`, `(q − q^{-1})`, `−q^{1/2}`.
///
/// Output is deterministic; the shortest of a few canonical shapes is chosen and the
/// power-basis expansion is the fallback.
pub fn render_q(s: &Cyclotomic) -> String {
    if s.is_zero() {
        return "0".into();
    }
    if let Some(c) = s.as_rational() {
        return term(&c, 0, true);
    }
    let order = s.order();
    let qmq = &Cyclotomic::zeta_pow(order, 2) - &Cyclotomic::zeta_pow(order, -2);
    if let Ok(inv) = qmq.inv() {
        if let Some(c) = (s * &inv).as_rational() {
            if c.abs().is_one() {
                let sign = if c.is_negative() { "−" } else { "" };
                return format!("{sign}(q − q^{{-1}})");
            }
        }
    }
    if let Some((c, j)) = monomial(s) {
        return term(&c, j, true);
    }
    if let Ok(inv) = qmq.inv() {
        if let Some((c, j)) = monomial(&(s * &inv)) {
            let head = term(&c, j, true);
            let head = if head == "1" { String::new() } else if head == "−1" { "−".into() } else { head };
            return format!("{head}(q − q^{{-1}})");
        }
    }
    if let Some(((c1, a), (c2, b))) = two_terms(s) {
        return format!("{}{}", term(&c1, a, true), term(&c2, b, false));
    }
    let mut out = String::new();
    for (i, c) in s.coeffs().iter().enumerate().rev() {
        if !c.is_zero() {
            out.push_str(&term(c, i as i64, out.is_empty()));
        }
    }
    format!("({out})")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QContext;

    #[test]
    fn shapes() {
        let c = QContext::new(3).unwrap();
        assert_eq!(render_q(&c.q_pow(-2)), "−q");
        assert_eq!(render_q(&c.q_pow(-1)), "q^{-1}");
        assert_eq!(render_q(&c.q), "q");
        assert_eq!(render_q(&-c.zeta_pow(1)), "−q^{1/2}");
        assert_eq!(render_q(&c.q_minus_q_inv), "(q − q^{-1})");
        assert_eq!(render_q(&c.int(-3)), "−3");
        assert_eq!(render_q(&c.q_int(2)), "1");
        let p5 = QContext::new(5).unwrap();
        assert_eq!(render_q(&p5.q_int(2)), "q + q^{-1}");
        let p2 = QContext::new(2).unwrap();
        assert_eq!(render_q(&p2.q_minus_q_inv), "(q − q^{-1})");
    }
}
