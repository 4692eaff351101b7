//! Exact coefficient arithmetic.
//!
//! [`Scalar`] is the fraction field of `Q(ζ_r)[q, q^{-1}]`. Generic computations
//! keep `q` transcendental; [`Specialization`] maps a scalar to the cyclotomic
//! field obtained by sending `q` to a primitive root of unity.

mod cyclotomic;
mod json;
mod laurent;
mod scalar;

pub use cyclotomic::{cyclotomic_poly, lcm, totient, CycloNum};
pub use json::{parse_rational, rational_to_string};
pub use laurent::LaurentPoly;
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator {den} vanishes at q = primitive {e}-th root of unity")]
    Pole { den: String, e: u32 },
    #[error("a generic specialization has no cyclotomic image")]
    GenericSpecialization,
    #[error("malformed scalar: {0}")]
    Parse(String),
}

/// How `q` is interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Specialization {
    /// `q` stays an indeterminate.
    #[default]
    Generic,
    /// `q` is sent to `ζ_e`, a primitive `e`-th root of unity.
    RootOfUnity { e: u32 },
}

impl Specialization {
    pub fn root_of_unity(e: u32) -> Self {
        assert!(e >= 1, "root-of-unity order must be positive");
        Specialization::RootOfUnity { e }
    }

    /// Order of `q` in this mode (`None` for generic).
    pub fn e(&self) -> Option<u32> {
        match self {
            Specialization::Generic => None,
            Specialization::RootOfUnity { e } => Some(*e),
        }
    }

    /// Image of `a` in `Q(ζ_m)`, `m = lcm(order of a's coefficients, e)`.
    pub fn apply(&self, a: &Scalar) -> Result<CycloNum, ScalarError> {
        let Specialization::RootOfUnity { e } = *self else {
            return Err(ScalarError::GenericSpecialization);
        };
        let m = lcm(a.coeff_order(), e);
        let num = evaluate(a.numerator(), m, e);
        let den = evaluate(a.denominator(), m, e);
        let den_inv = den.inv().ok_or_else(|| ScalarError::Pole { den: a.denominator().to_string(), e })?;
        Ok(num.mul(&den_inv))
    }
}

/// Evaluates `p` at `q = ζ_e` inside `Q(ζ_m)`.
fn evaluate(p: &LaurentPoly, m: u32, e: u32) -> CycloNum {
    let step = (m / e) as i64;
    p.terms().fold(CycloNum::zero(), |acc, (k, c)| acc.add(&c.mul(&CycloNum::zeta_pow(m, step * k as i64))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(k, c)| (k, CycloNum::from_int(c))))
    }

    #[test]
    fn specialize_at_minus_one() {
        let a = Scalar::from_laurent(lp(&[(1, 1), (-1, 1)]));
        assert_eq!(Specialization::root_of_unity(2).apply(&a).unwrap(), CycloNum::from_int(-2));
    }

    #[test]
    fn specialize_at_one() {
        let a = Scalar::q_minus_qinv();
        assert!(Specialization::root_of_unity(1).apply(&a).unwrap().is_zero());
    }

    #[test]
    fn pole_is_an_error() {
        let a = Scalar::one().div(&Scalar::from_laurent(lp(&[(1, 1), (0, -1)]))).unwrap();
        let err = Specialization::root_of_unity(1).apply(&a).unwrap_err();
        assert!(matches!(err, ScalarError::Pole { e: 1, .. }));
        // the same function is fine at q = -1
        assert_eq!(Specialization::root_of_unity(2).apply(&a).unwrap(), CycloNum::from_ratio(-1, 2));
    }

    #[test]
    fn generic_mode_refuses() {
        assert_eq!(Specialization::Generic.apply(&Scalar::one()), Err(ScalarError::GenericSpecialization));
    }

    #[test]
    fn mixed_orders_land_in_lcm_field() {
        // ζ_2 · q at q = ζ_3 is -ζ_3, living in Q(ζ_6) = Q(ζ_3).
        let a = Scalar::zeta_pow(2, 1).mul(&Scalar::q());
        let v = Specialization::root_of_unity(3).apply(&a).unwrap();
        assert_eq!(v, CycloNum::zeta_pow(3, 1).neg());
        // ζ_4 · q at q = ζ_3 lives in Q(ζ_12)
        let b = Scalar::zeta_pow(4, 1).mul(&Scalar::q());
        let w = Specialization::root_of_unity(3).apply(&b).unwrap();
        assert_eq!(w.order(), 12);
        assert_eq!(w, CycloNum::zeta_pow(12, 3 + 4));
    }
}
