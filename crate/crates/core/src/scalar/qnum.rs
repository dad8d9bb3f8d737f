use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Cyclotomic;
use crate::error::{Error, Result};

/// A half-integer `twice / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    pub twice: i64,
}

impl HalfInt {
    pub fn int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// The value `n / 2`.
    pub fn half(n: i64) -> Self {
        HalfInt { twice: n }
    }
}

/// Which q-binomial is meant by an unadorned `[n choose k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BinomialConvention {
    /// Built from symmetric q-integers `[n] = (q^n - q^-n)/(q - q^-1)`.
    Balanced,
    /// Gaussian binomial in `q^2`, i.e. built from `(1 - q^{2n})/(1 - q^2)`.
    OneSided,
}

/// The root-of-unity context `q = e^{i pi / p}` realized in `Q(zeta_{4p})`.
#[derive(Clone)]
pub struct QContext {
    p: u32,
    order: u32,
    pub q: Cyclotomic,
    pub q_half: Cyclotomic,
    /// `q - q^{-1}`.
    pub q_minus_q_inv: Cyclotomic,
    /// `(q - q^{-1})^{-1}`.
    pub q_minus_one_inverse_factor: Cyclotomic,
    tables: Arc<Tables>,
}

struct Tables {
    balanced: Vec<Vec<Cyclotomic>>,
    one_sided: Vec<Vec<Cyclotomic>>,
}

impl std::fmt::Debug for QContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QContext").field("p", &self.p).field("order", &self.order).finish()
    }
}

impl QContext {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 {
            return Err(Error::Usage(format!("p must be at least 2, got {p}")));
        }
        let order = 4 * p;
        if order as usize > super::MAX_ORDER {
            return Err(Error::Usage(format!("p = {p} exceeds the supported range")));
        }
        let q = Cyclotomic::zeta_pow(order, 2);
        let q_half = Cyclotomic::zeta_pow(order, 1);
        let q_minus_q_inv = &q - &Cyclotomic::zeta_pow(order, -2);
        let q_minus_one_inverse_factor = q_minus_q_inv.inv()?;
        let mut ctx = QContext {
            p,
            order,
            q,
            q_half,
            q_minus_q_inv,
            q_minus_one_inverse_factor,
            tables: Arc::new(Tables { balanced: Vec::new(), one_sided: Vec::new() }),
        };
        let rows = 4 * p as usize + 1;
        let balanced = ctx.pascal_rows(rows, BinomialConvention::Balanced);
        let one_sided = ctx.pascal_rows(rows, BinomialConvention::OneSided);
        ctx.tables = Arc::new(Tables { balanced, one_sided });
        Ok(ctx)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// The cyclotomic order `N = 4p`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(self.order)
    }

    pub fn one(&self) -> Cyclotomic {
        Cyclotomic::one(self.order)
    }

    pub fn int(&self, v: i64) -> Cyclotomic {
        Cyclotomic::from_int(self.order, v)
    }

    /// `zeta^k = q^{k/2}`.
    pub fn zeta_pow(&self, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.order, k)
    }

    pub fn q_pow(&self, k: i64) -> Cyclotomic {
        self.zeta_pow(2 * k)
    }

    /// `q^x` for a half-integer exponent.
    pub fn q_pow_half(&self, x: HalfInt) -> Cyclotomic {
        self.zeta_pow(x.twice)
    }

    /// `[x] = (q^x - q^{-x}) / (q - q^{-1})` for half-integer `x`.
    pub fn q_number(&self, x: HalfInt) -> Cyclotomic {
        let d = &self.zeta_pow(x.twice) - &self.zeta_pow(-x.twice);
        &d * &self.q_minus_one_inverse_factor
    }

    pub fn q_int(&self, n: i64) -> Cyclotomic {
        self.q_number(HalfInt::int(n))
    }

    /// `[n]! = [1][2]...[n]`.
    pub fn q_factorial(&self, n: u32) -> Cyclotomic {
        let mut acc = self.one();
        for i in 1..=n as i64 {
            acc = &acc * &self.q_int(i);
        }
        acc
    }

    /// Balanced q-binomial; zero outside `0 <= k <= n`.
    pub fn q_binomial(&self, n: i64, k: i64) -> Cyclotomic {
        self.binomial(BinomialConvention::Balanced, n, k)
    }

    /// One-sided Gaussian binomial in `q^2`; zero outside `0 <= k <= n`.
    pub fn gauss_binomial(&self, n: i64, k: i64) -> Cyclotomic {
        self.binomial(BinomialConvention::OneSided, n, k)
    }

    pub fn binomial(&self, conv: BinomialConvention, n: i64, k: i64) -> Cyclotomic {
        if k < 0 || n < 0 || k > n {
            return self.zero();
        }
        let table = match conv {
            BinomialConvention::Balanced => &self.tables.balanced,
            BinomialConvention::OneSided => &self.tables.one_sided,
        };
        if (n as usize) < table.len() {
            return table[n as usize][k as usize].clone();
        }
        self.pascal_rows(n as usize + 1, conv)[n as usize][k as usize].clone()
    }

    // Division-free Pascal recursions:
    //   balanced:  [n,k] = q^k [n-1,k] + q^{-(n-k)} [n-1,k-1]
    //   one-sided: G(n,k) = G(n-1,k-1) + q^{2k} G(n-1,k)
    fn pascal_rows(&self, rows: usize, conv: BinomialConvention) -> Vec<Vec<Cyclotomic>> {
        let mut out: Vec<Vec<Cyclotomic>> = Vec::with_capacity(rows);
        for n in 0..rows {
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                if k == 0 || k == n {
                    row.push(self.one());
                    continue;
                }
                let prev = &out[n - 1];
                let (ki, nk) = (k as i64, (n - k) as i64);
                let v = match conv {
                    BinomialConvention::Balanced => {
                        &(&self.q_pow(ki) * &prev[k]) + &(&self.q_pow(-nk) * &prev[k - 1])
                    }
                    BinomialConvention::OneSided => &prev[k - 1] + &(&self.q_pow(2 * ki) * &prev[k]),
                };
                row.push(v);
            }
            out.push(row);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_invariants() {
        for p in 2..=7 {
            let c = QContext::new(p).unwrap();
            assert_eq!(&c.q_half * &c.q_half, c.q);
            assert!(c.q.pow(2 * p).is_one());
            assert_eq!(c.q.pow(p), -c.one());
            assert!((&c.q_minus_q_inv * &c.q_minus_one_inverse_factor).is_one());
        }
    }

    #[test]
    fn p_below_two_rejected() {
        assert!(matches!(QContext::new(1), Err(Error::Usage(_))));
    }

    #[test]
    fn q_integers() {
        for p in 2..=5 {
            let c = QContext::new(p).unwrap();
            assert!(c.q_int(0).is_zero());
            assert!(c.q_int(1).is_one());
            assert!(c.q_int(p as i64).is_zero());
            let q_inv = c.q_pow(-1);
            assert_eq!(c.q_int(2), &c.q + &q_inv);
            for n in -8..8 {
                assert_eq!(c.q_int(-n), -c.q_int(n));
                assert_eq!(c.q_number(HalfInt::half(-n)), -c.q_number(HalfInt::half(n)));
            }
            assert_eq!(c.q_number(HalfInt::half(2)), c.q_int(1));
        }
    }

    #[test]
    fn factorial_p_minus_one_at_p3_is_invertible() {
        let c = QContext::new(3).unwrap();
        let f = c.q_factorial(2);
        assert_eq!(f, &c.q + &c.q_pow(-1));
        assert!((&f * &f.inv().unwrap()).is_one());
    }

    #[test]
    fn binomial_small_values() {
        let c = QContext::new(3).unwrap();
        for n in 0..10 {
            assert!(c.q_binomial(n, 0).is_one());
            assert!(c.q_binomial(n, n).is_one());
            assert!(c.q_binomial(n, n + 1).is_zero());
            assert!(c.q_binomial(n, -1).is_zero());
        }
        assert_eq!(c.q_binomial(2, 1), c.q_int(2));
        assert_eq!(c.gauss_binomial(2, 1), &c.one() + &c.q_pow(2));
    }

    #[test]
    fn pascal_matches_product_formula() {
        for p in 2..=5u32 {
            let c = QContext::new(p).unwrap();
            for n in 0..=2 * p as i64 {
                for k in 0..=n {
                    let fk = c.q_factorial(k as u32);
                    let fnk = c.q_factorial((n - k) as u32);
                    let den = &fk * &fnk;
                    if den.is_zero() {
                        continue;
                    }
                    let expect = &c.q_factorial(n as u32) * &den.inv().unwrap();
                    assert_eq!(c.q_binomial(n, k), expect, "p={p} n={n} k={k}");
                    let shift = c.q_pow(k * (n - k));
                    assert_eq!(&c.q_binomial(n, k) * &shift, c.gauss_binomial(n, k));
                }
            }
        }
    }

    #[test]
    fn binomials_beyond_cached_rows() {
        let c = QContext::new(2).unwrap();
        let n = 12;
        let direct = c.q_binomial(n, 5);
        let rec = &(&c.q_pow(5) * &c.q_binomial(n - 1, 5)) + &(&c.q_pow(-(n - 5)) * &c.q_binomial(n - 1, 4));
        assert_eq!(direct, rec);
    }
}
