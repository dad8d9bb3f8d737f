use std::sync::OnceLock;

use num_bigint::BigInt;

use super::Cyclotomic;

/// Largest cyclotomic order with a cached field table.
pub const MAX_ORDER: usize = 1024;

/// Reduction data of `Q[x]/Phi_N`, computed once per order.
pub(crate) struct FieldData {
    pub(crate) phi: usize,
    /// Monic `Phi_N`, ascending coefficients, length `phi + 1`.
    pub(crate) modulus: Vec<i64>,
    pub(crate) modulus_big: Vec<BigInt>,
    /// `zeta^k` for `k` in `0..N`.
    pub(crate) zeta_pows: Vec<Cyclotomic>,
}

static FIELDS: [OnceLock<FieldData>; MAX_ORDER + 1] = [const { OnceLock::new() }; MAX_ORDER + 1];

pub(crate) fn field(order: u32) -> &'static FieldData {
    let n = order as usize;
    assert!(
        (1..=MAX_ORDER).contains(&n),
        "cyclotomic order {order} outside supported range 1..={MAX_ORDER}"
    );
    FIELDS[n].get_or_init(|| build(order))
}

fn build(order: u32) -> FieldData {
    let modulus = cyclotomic_polynomial(order);
    let phi = modulus.len() - 1;
    let modulus_big = modulus.iter().map(|&c| BigInt::from(c)).collect();
    let mut data = FieldData { phi, modulus, modulus_big, zeta_pows: Vec::new() };
    let mut pows = Vec::with_capacity(order as usize);
    // Powers are built from the raw monomial x^k reduced by the modulus.
    for k in 0..order as usize {
        let mut coeffs = vec![0i64; k + 1];
        coeffs[k] = 1;
        pows.push(Cyclotomic::reduce_int_poly(order, &data, coeffs));
    }
    data.zeta_pows = pows;
    data
}

/// Monic `Phi_N` with integer coefficients in ascending order.
///
/// Computed as `(x^N - 1) / prod_{d | N, d < N} Phi_d` by exact polynomial division.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic_polynomial requires N >= 1");
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_polynomial(d);
            num = exact_div(&num, &div);
        }
    }
    num
}

// Division by a monic integer polynomial; remainder must vanish.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Euler totient.
pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn small_orders() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=40u32 {
            let mut prod = vec![1i64];
            for d in 1..=n {
                if n % d == 0 {
                    prod = poly_mul(&prod, &cyclotomic_polynomial(d));
                }
            }
            let mut expect = vec![0i64; n as usize + 1];
            expect[0] = -1;
            expect[n as usize] = 1;
            assert_eq!(prod, expect, "N = {n}");
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n));
        }
    }
}
