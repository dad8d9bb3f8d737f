use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Vect;
use crate::scalar::{Cyclotomic, Rational};

use super::VerificationReport;

/// One rational coefficient as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

/// A scalar as its power-basis coefficients.
pub type ScalarJson = Vec<RationalJson>;

pub fn scalar_to_json(c: &Cyclotomic) -> ScalarJson {
    c.coeffs().iter().map(|r| RationalJson { num: r.numer().to_string(), den: r.denom().to_string() }).collect()
}

pub fn scalar_from_json(order: u32, s: &ScalarJson) -> Result<Cyclotomic> {
    let mut coeffs = Vec::with_capacity(s.len());
    for r in s {
        let num: BigInt = r.num.parse().map_err(|_| Error::Format(format!("bad numerator {:?}", r.num)))?;
        let den: BigInt = r.den.parse().map_err(|_| Error::Format(format!("bad denominator {:?}", r.den)))?;
        if den <= BigInt::from(0) {
            return Err(Error::Format(format!("denominator must be positive, got {den}")));
        }
        let q = Rational::new(num.clone(), den.clone());
        if *q.numer() != num || *q.denom() != den {
            return Err(Error::Format(format!("{num}/{den} is not in lowest terms")));
        }
        coeffs.push(q);
    }
    Cyclotomic::from_coeffs(order, &coeffs)
}

pub fn vect_terms_json(v: &Vect, label: impl Fn(usize) -> String) -> Vec<(String, ScalarJson)> {
    v.terms().iter().map(|(i, c)| (label(*i), scalar_to_json(c))).collect()
}

/// Sorted-key compact json with a trailing newline.
pub(crate) fn canonical(r: &VerificationReport) -> String {
    // serde_json's default map is ordered by key, so a round trip via Value sorts every object.
    let v = serde_json::to_value(r).expect("report serializes");
    let mut s = serde_json::to_string(&v).expect("value serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trip() {
        let o = 12;
        let x = &Cyclotomic::zeta_pow(o, 5) * &Cyclotomic::from_rational(o, &Rational::new(3.into(), 7.into()));
        let j = scalar_to_json(&x);
        assert_eq!(j.len(), 4);
        assert_eq!(scalar_from_json(o, &j).unwrap(), x);
    }

    #[test]
    fn rejects_unreduced() {
        let j = vec![RationalJson { num: "2".into(), den: "4".into() }; 4];
        assert!(scalar_from_json(8, &j).is_err());
    }
}
