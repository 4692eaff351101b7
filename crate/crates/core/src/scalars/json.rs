//! JSON form of scalars: `{"order": m, "num": [[exp, ["p/q", ...]], ...], "den": [...]}`.
//!
//! Each coefficient list holds the `φ(m)` rational coordinates of a cyclotomic
//! number in the basis `1, ζ_m, ..., ζ_m^{φ(m)-1}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CycloNum, LaurentPoly, Scalar, ScalarError};

pub fn rational_to_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let bad = || ScalarError::Parse(format!("bad rational {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    order: u32,
    num: Vec<(i32, Vec<String>)>,
    den: Vec<(i32, Vec<String>)>,
}

fn encode(p: &LaurentPoly, order: u32) -> Vec<(i32, Vec<String>)> {
    p.terms().map(|(k, c)| (k, c.lift(order).coeffs().iter().map(rational_to_string).collect())).collect()
}

fn decode(terms: &[(i32, Vec<String>)], order: u32) -> Result<LaurentPoly, ScalarError> {
    let mut out = LaurentPoly::zero();
    for (k, coeffs) in terms {
        if coeffs.len() != super::totient(order) {
            return Err(ScalarError::Parse(format!("expected {} coordinates, got {}", super::totient(order), coeffs.len())));
        }
        let raw = coeffs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
        out.add_term(*k, &CycloNum::from_raw(order, raw));
    }
    Ok(out)
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let order = self.coeff_order();
        ScalarRepr { order, num: encode(self.numerator(), order), den: encode(self.denominator(), order) }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        if repr.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let num = decode(&repr.num, repr.order).map_err(D::Error::custom)?;
        let den = decode(&repr.den, repr.order).map_err(D::Error::custom)?;
        Scalar::from_parts(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let x = Scalar::q_minus_qinv().div(&Scalar::from_int(2)).unwrap();
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v, serde_json::json!({"order": 1, "num": [[-1, ["-1/2"]], [1, ["1/2"]]], "den": [[0, ["1/1"]]]}));
    }

    #[test]
    fn json_roundtrip_with_cyclotomic_denominator() {
        let x = Scalar::one().div(&Scalar::q().sub(&Scalar::zeta_pow(3, 1))).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        let y: Scalar = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("-3/6").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("4").unwrap(), BigRational::from_integer(4.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
