//! Exact arithmetic in the cyclotomic field `Q(zeta_N)` and q-combinatorics at `q = zeta_N^2`.
//!
//! Elements are polynomials in `zeta_N` of degree below `phi(N)` with rational coefficients,
//! stored as an integer numerator vector over a common positive denominator. Values whose
//! numerators fit in machine words take an allocation-free path; anything larger falls back
//! to arbitrary precision transparently.

mod field;
mod qnum;
mod render;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use field::{cyclotomic_polynomial, euler_phi, MAX_ORDER};
pub use qnum::{BinomialConvention, HalfInt, QContext};
pub use render::render_q;

use crate::error::{Error, Result};
use field::{field, FieldData};

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = num_rational::BigRational;

const SMALL: usize = 8;

/// An exact element of `Q(zeta_N)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small { num: [i64; SMALL], den: i64 },
    Big(Box<BigRepr>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct BigRepr {
    num: Vec<BigInt>,
    den: BigInt,
}

fn fits(v: i128) -> bool {
    v > i64::MIN as i128 && v <= i64::MAX as i128
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        let fd = field(order);
        if fd.phi <= SMALL {
            Cyclotomic { order, repr: Repr::Small { num: [0; SMALL], den: 1 } }
        } else {
            Cyclotomic {
                order,
                repr: Repr::Big(Box::new(BigRepr { num: vec![BigInt::zero(); fd.phi], den: BigInt::one() })),
            }
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        let mut z = Self::zero(order);
        match &mut z.repr {
            Repr::Small { num, .. } if v != i64::MIN => num[0] = v,
            _ => {
                let mut num = vec![BigInt::zero(); field(order).phi];
                num[0] = BigInt::from(v);
                return Self::from_big(order, num, BigInt::one());
            }
        }
        z
    }

    pub fn from_rational(order: u32, r: &Rational) -> Self {
        let phi = field(order).phi;
        let mut num = vec![BigInt::zero(); phi];
        num[0] = r.numer().clone();
        Self::from_big(order, num, r.denom().clone())
    }

    /// Builds an element from its `phi(N)` coefficients in the power basis of `zeta_N`.
    pub fn from_coeffs(order: u32, coeffs: &[Rational]) -> Result<Self> {
        let phi = field(order).phi;
        if coeffs.len() != phi {
            return Err(Error::Structural(format!(
                "scalar of order {order} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Self::from_big(order, num, den))
    }

    /// `zeta_N^k` for any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let fd = field(order);
        fd.zeta_pows[k.rem_euclid(order as i64) as usize].clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn phi(&self) -> usize {
        field(self.order).phi
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Small { num, .. } => num.iter().all(|&c| c == 0),
            Repr::Big(b) => b.num.iter().all(|c| c.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Small { num, den } => *den == 1 && num[0] == 1 && num[1..].iter().all(|&c| c == 0),
            Repr::Big(b) => b.den.is_one() && b.num[0].is_one() && b.num[1..].iter().all(|c| c.is_zero()),
        }
    }

    /// Coefficients in the power basis `1, zeta, ..., zeta^{phi-1}`.
    pub fn coeffs(&self) -> Vec<Rational> {
        let phi = self.phi();
        match &self.repr {
            Repr::Small { num, den } => {
                (0..phi).map(|i| Rational::new(BigInt::from(num[i]), BigInt::from(*den))).collect()
            }
            Repr::Big(b) => b.num.iter().map(|c| Rational::new(c.clone(), b.den.clone())).collect(),
        }
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        let c = self.coeffs();
        if c[1..].iter().all(|x| x.is_zero()) {
            Some(c[0].clone())
        } else {
            None
        }
    }

    /// Index and coefficient when the element is `c * zeta^j` for a single `j < phi`.
    fn as_monomial(&self) -> Option<(usize, Rational)> {
        let c = self.coeffs();
        let mut found = None;
        for (i, x) in c.iter().enumerate() {
            if !x.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((i, x.clone()));
            }
        }
        found
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero scalar".into()));
        }
        if let Some((j, c)) = self.as_monomial() {
            let z = Self::zeta_pow(self.order, -(j as i64));
            return Ok(&z * &Self::from_rational(self.order, &c.recip()));
        }
        Ok(self.inv_euclid())
    }

    fn inv_euclid(&self) -> Self {
        let fd = field(self.order);
        let to_poly = |v: &[Rational]| -> Vec<Rational> { trim(v.to_vec()) };
        let mut r0: Vec<Rational> =
            fd.modulus.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect();
        let mut r1 = to_poly(&self.coeffs());
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        debug_assert_eq!(r0.len(), 1, "Phi_N is irreducible so the gcd is a unit");
        let c = r0[0].recip();
        let mut coeffs = vec![Rational::zero(); fd.phi];
        for (i, x) in s0.into_iter().enumerate() {
            coeffs[i] = x * &c;
        }
        Self::from_coeffs(self.order, &coeffs).expect("length matches phi")
    }

    /// Nonnegative integer power.
    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow((-e) as u32))
        }
    }

    // Construction from arbitrary-precision parts, normalized and demoted when possible.
    fn from_big(order: u32, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if num.iter().all(|c| c.is_zero()) {
            return Self::zero(order);
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if !c.is_zero() {
                    g = g.gcd(c);
                    if g.is_one() {
                        break;
                    }
                }
            }
            if !g.is_one() {
                den /= &g;
                for c in num.iter_mut() {
                    *c /= &g;
                }
            }
        }
        let fd = field(order);
        if fd.phi <= SMALL {
            let mut small = [0i64; SMALL];
            let mut ok = true;
            for (i, c) in num.iter().enumerate() {
                match c.to_i64() {
                    Some(v) if v != i64::MIN => small[i] = v,
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                if let Some(d) = den.to_i64() {
                    return Cyclotomic { order, repr: Repr::Small { num: small, den: d } };
                }
            }
        }
        Cyclotomic { order, repr: Repr::Big(Box::new(BigRepr { num, den })) }
    }

    fn big_parts(&self) -> (Vec<BigInt>, BigInt) {
        let phi = self.phi();
        match &self.repr {
            Repr::Small { num, den } => {
                (num[..phi].iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(*den))
            }
            Repr::Big(b) => (b.num.clone(), b.den.clone()),
        }
    }

    // Small-path normalization from i128 intermediates; `None` on overflow.
    fn normalize_small(order: u32, c: &[i128], den: i128) -> Option<Self> {
        let mut num = [0i64; SMALL];
        if den == 1 {
            for (i, &v) in c.iter().enumerate() {
                if !fits(v) {
                    return None;
                }
                num[i] = v as i64;
            }
            return Some(Cyclotomic { order, repr: Repr::Small { num, den: 1 } });
        }
        let mut g = den.unsigned_abs();
        let mut all_zero = true;
        for &v in c {
            if v != 0 {
                all_zero = false;
                g = gcd_u128(g, v.unsigned_abs());
                if g == 1 {
                    break;
                }
            }
        }
        if all_zero {
            return Some(Self::zero(order));
        }
        let g = g as i128;
        let d = den / g;
        if !fits(d) {
            return None;
        }
        for (i, &v) in c.iter().enumerate() {
            let w = v / g;
            if !fits(w) {
                return None;
            }
            num[i] = w as i64;
        }
        Some(Cyclotomic { order, repr: Repr::Small { num, den: d as i64 } })
    }

    pub(crate) fn reduce_int_poly(order: u32, fd: &FieldData, mut c: Vec<i64>) -> Self {
        let phi = fd.phi;
        if c.len() > phi {
            for d in (phi..c.len()).rev() {
                let t = c[d];
                if t != 0 {
                    c[d] = 0;
                    for i in 0..phi {
                        c[d - phi + i] -= t * fd.modulus[i];
                    }
                }
            }
        }
        c.resize(phi, 0);
        if phi <= SMALL {
            let mut num = [0i64; SMALL];
            num[..phi].copy_from_slice(&c);
            Cyclotomic { order, repr: Repr::Small { num, den: 1 } }
        } else {
            Cyclotomic {
                order,
                repr: Repr::Big(Box::new(BigRepr {
                    num: c.into_iter().map(BigInt::from).collect(),
                    den: BigInt::one(),
                })),
            }
        }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "scalars from different cyclotomic fields");
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        self.check_order(other);
        if let (Repr::Small { num: a, den: da }, Repr::Small { num: b, den: db }) = (&self.repr, &other.repr) {
            let phi = field(self.order).phi;
            let mut c = [0i128; SMALL];
            let den;
            if da == db {
                for i in 0..phi {
                    let bv = if negate { -(b[i] as i128) } else { b[i] as i128 };
                    c[i] = a[i] as i128 + bv;
                }
                den = *da as i128;
            } else {
                let (da, db) = (*da as i128, *db as i128);
                for i in 0..phi {
                    let x = (a[i] as i128).checked_mul(db);
                    let y = (b[i] as i128).checked_mul(da);
                    match (x, y) {
                        (Some(x), Some(y)) => {
                            let y = if negate { -y } else { y };
                            match x.checked_add(y) {
                                Some(v) => c[i] = v,
                                None => return self.add_big(other, negate),
                            }
                        }
                        _ => return self.add_big(other, negate),
                    }
                }
                den = da * db;
            }
            if let Some(r) = Self::normalize_small(self.order, &c[..phi], den) {
                return r;
            }
        }
        self.add_big(other, negate)
    }

    fn add_big(&self, other: &Self, negate: bool) -> Self {
        let (a, da) = self.big_parts();
        let (b, db) = other.big_parts();
        let num = a
            .iter()
            .zip(b.iter())
            .map(|(x, y)| {
                let y = y * &da;
                let x = x * &db;
                if negate {
                    x - y
                } else {
                    x + y
                }
            })
            .collect();
        Self::from_big(self.order, num, da * db)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.check_order(other);
        let fd = field(self.order);
        if let (Repr::Small { num: a, den: da }, Repr::Small { num: b, den: db }) = (&self.repr, &other.repr) {
            if let Some(r) = Self::mul_small(self.order, fd, a, *da, b, *db) {
                return r;
            }
        }
        self.mul_big(other, fd)
    }

    fn mul_small(order: u32, fd: &FieldData, a: &[i64; SMALL], da: i64, b: &[i64; SMALL], db: i64) -> Option<Self> {
        let phi = fd.phi;
        let mut c = [0i128; 2 * SMALL];
        for i in 0..phi {
            let x = a[i] as i128;
            if x == 0 {
                continue;
            }
            for j in 0..phi {
                let y = b[j] as i128;
                if y != 0 {
                    c[i + j] = c[i + j].checked_add(x * y)?;
                }
            }
        }
        for d in (phi..2 * phi - 1).rev() {
            let t = c[d];
            if t != 0 {
                c[d] = 0;
                for i in 0..phi {
                    let m = fd.modulus[i] as i128;
                    if m != 0 {
                        c[d - phi + i] = c[d - phi + i].checked_sub(t.checked_mul(m)?)?;
                    }
                }
            }
        }
        let den = (da as i128) * (db as i128);
        Self::normalize_small(order, &c[..phi], den)
    }

    fn mul_big(&self, other: &Self, fd: &FieldData) -> Self {
        let (a, da) = self.big_parts();
        let (b, db) = other.big_parts();
        let phi = fd.phi;
        let mut c = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        for d in (phi..2 * phi - 1).rev() {
            let t = std::mem::take(&mut c[d]);
            if !t.is_zero() {
                for i in 0..phi {
                    if !fd.modulus_big[i].is_zero() {
                        c[d - phi + i] -= &t * &fd.modulus_big[i];
                    }
                }
            }
        }
        c.truncate(phi);
        Self::from_big(self.order, c, da * db)
    }

    fn neg_impl(&self) -> Self {
        match &self.repr {
            Repr::Small { num, den } => {
                let mut n = [0i64; SMALL];
                for i in 0..SMALL {
                    n[i] = -num[i];
                }
                Cyclotomic { order: self.order, repr: Repr::Small { num: n, den: *den } }
            }
            Repr::Big(b) => Cyclotomic {
                order: self.order,
                repr: Repr::Big(Box::new(BigRepr { num: b.num.iter().map(|c| -c).collect(), den: b.den.clone() })),
            },
        }
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].recip();
    if rem.len() <= db {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead;
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                rem[i + j] -= &c * y;
            }
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    /// Power-basis rendering, e.g. `2*z^3 - 1/2*z + 1`, where `z` stands for `zeta_N`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.coeffs();
        let mut first = true;
        for (i, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "zeta".to_string(),
                _ => format!("zeta^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_impl(b, false));
binop!(Sub, sub, |a, b| a.add_impl(b, true));
binop!(Mul, mul, |a, b| a.mul_impl(b));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_impl()
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_impl()
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.mul_impl(rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn zeta_is_primitive() {
        for n in [4u32, 8, 12, 16, 20, 24, 28] {
            let z = Cyclotomic::zeta_pow(n, 1);
            let mut acc = Cyclotomic::one(n);
            for k in 1..n {
                acc = &acc * &z;
                assert!(!acc.is_one(), "zeta_{n}^{k} = 1");
            }
            acc = &acc * &z;
            assert!(acc.is_one());
        }
    }

    #[test]
    fn zeta8_times_zeta8_pow7() {
        let a = Cyclotomic::zeta_pow(8, 1);
        let b = Cyclotomic::zeta_pow(8, 7);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn q_plus_q_inverse_vanishes_at_p2() {
        let q = Cyclotomic::zeta_pow(8, 2);
        let qi = Cyclotomic::zeta_pow(8, -2);
        assert!((&q + &qi).is_zero());
    }

    #[test]
    fn inverse_of_q_minus_q_inverse() {
        for n in [8u32, 12, 28] {
            let a = Cyclotomic::zeta_pow(n, 2) - Cyclotomic::zeta_pow(n, -2);
            let ai = a.inv().unwrap();
            assert!((&a * &ai).is_one());
        }
    }

    #[test]
    fn inverse_of_zero_is_domain_error() {
        assert!(matches!(Cyclotomic::zero(8).inv(), Err(Error::Domain(_))));
    }

    #[test]
    fn coefficient_roundtrip() {
        let c = vec![rat(1, 2), rat(-3, 4), rat(0, 1), rat(5, 1)];
        let x = Cyclotomic::from_coeffs(8, &c).unwrap();
        assert_eq!(x.coeffs(), c);
    }

    #[test]
    fn overflow_falls_back_to_big_and_back() {
        let big = Cyclotomic::from_int(8, i64::MAX / 3);
        let sq = &big * &big;
        let back = &sq * &big.inv().unwrap();
        assert_eq!(back, big);
        let s = &(&sq - &sq) + &Cyclotomic::one(8);
        assert!(s.is_one());
        assert!(matches!(s.repr, Repr::Small { .. }));
    }

    #[test]
    fn big_orders_use_general_path() {
        let n = 44;
        let z = Cyclotomic::zeta_pow(n, 3);
        let w = (&z + &Cyclotomic::from_int(n, 2)).inv().unwrap();
        assert!((&w * &(&z + &Cyclotomic::from_int(n, 2))).is_one());
    }

    #[test]
    fn display_power_basis() {
        let x = Cyclotomic::from_coeffs(8, &[rat(1, 1), rat(-1, 2), rat(0, 1), rat(2, 1)]).unwrap();
        assert_eq!(x.to_string(), "2*zeta^3 - 1/2*zeta + 1");
        assert_eq!(Cyclotomic::zero(8).to_string(), "0");
    }
}
