use std::fmt;

use super::cyclotomic::CycloNum;
use super::laurent::LaurentPoly;
use super::ScalarError;

/// Exact element of `Q(ζ)(q)`: a reduced quotient of Laurent polynomials.
///
/// The denominator has lowest exponent 0 and leading coefficient 1, and shares
/// no non-unit factor with the numerator, so structural equality is equality
/// of field elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_cyclo(CycloNum::from_int(c))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_cyclo(CycloNum::from_ratio(p, q))
    }

    pub fn from_cyclo(c: CycloNum) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Scalar { num: p, den: LaurentPoly::one() }
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Self::from_laurent(LaurentPoly::monomial(CycloNum::one(), k))
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q - q^{-1}`, the constant of the quadratic relation.
    pub fn q_minus_qinv() -> Self {
        Self::from_laurent(LaurentPoly::from_terms([(1, CycloNum::one()), (-1, CycloNum::from_int(-1))]))
    }

    /// `ζ_m^k`.
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        Self::from_cyclo(CycloNum::zeta_pow(m, k))
    }

    /// Builds `num/den` in canonical form.
    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `true` when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if num.is_zero() {
                return Self::zero();
            }
            if self.den.is_one() {
                return Scalar { num, den: self.den.clone() };
            }
            return normalize(num, self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        normalize(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar { num: self.num.mul(&other.num), den: LaurentPoly::one() };
        }
        normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Substitutes `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        normalize(self.num.bar(), self.den.bar())
    }

    /// lcm of the cyclotomic orders occurring in the coefficients.
    pub fn coeff_order(&self) -> u32 {
        super::cyclotomic::lcm(self.num.coeff_order(), self.den.coeff_order())
    }
}

fn normalize(num: LaurentPoly, den: LaurentPoly) -> Scalar {
    if num.is_zero() {
        return Scalar::zero();
    }
    if let Some((k, c)) = den.as_monomial() {
        let cinv = c.inv().expect("nonzero denominator");
        return Scalar { num: num.scale(&cinv).shift(-k), den: LaurentPoly::one() };
    }
    let (nlo, ndense) = num.to_dense();
    let (dlo, ddense) = den.to_dense();
    let g = poly_gcd(&ndense, &ddense);
    let (ndense, ddense) = if g.len() > 1 { (poly_exact_div(&ndense, &g), poly_exact_div(&ddense, &g)) } else { (ndense, ddense) };
    let lc_inv = ddense.last().unwrap().inv().expect("nonzero leading coefficient");
    let nd: Vec<CycloNum> = ndense.iter().map(|c| c.mul(&lc_inv)).collect();
    let dd: Vec<CycloNum> = ddense.iter().map(|c| c.mul(&lc_inv)).collect();
    // Both dense vectors start with nonzero constant terms, so the gcd does too.
    let num = LaurentPoly::from_dense(nlo - dlo, &nd);
    let den = LaurentPoly::from_dense(0, &dd);
    Scalar { num, den }
}

fn trim(p: &mut Vec<CycloNum>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &[CycloNum]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_rem(a: &[CycloNum], b: &[CycloNum]) -> Vec<CycloNum> {
    let db = degree(b).expect("division by zero polynomial");
    let lc_inv = b[db].inv().unwrap();
    let mut rem = a.to_vec();
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = rem[dr].mul(&lc_inv);
        let shift = dr - db;
        for j in 0..=db {
            rem[shift + j] = rem[shift + j].sub(&c.mul(&b[j]));
        }
        rem.truncate(dr);
    }
    trim(&mut rem);
    rem
}

fn make_monic(p: &[CycloNum]) -> Vec<CycloNum> {
    let d = degree(p).unwrap();
    let inv = p[d].inv().unwrap();
    p[..=d].iter().map(|c| c.mul(&inv)).collect()
}

/// Monic gcd by the Euclidean algorithm.
fn poly_gcd(a: &[CycloNum], b: &[CycloNum]) -> Vec<CycloNum> {
    let mut x = make_monic(a);
    let mut y = make_monic(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while degree(&y).is_some() {
        let r = poly_rem(&x, &y);
        x = y;
        y = if degree(&r).is_some() { make_monic(&r) } else { r };
    }
    x
}

fn poly_exact_div(a: &[CycloNum], b: &[CycloNum]) -> Vec<CycloNum> {
    let db = degree(b).unwrap();
    let lc_inv = b[db].inv().unwrap();
    let mut rem = a.to_vec();
    let da = degree(a).unwrap();
    let mut quot = vec![CycloNum::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = rem[k + db].mul(&lc_inv);
        if !c.is_zero() {
            for j in 0..=db {
                rem[k + j] = rem[k + j].sub(&c.mul(&b[j]));
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| {
            let s = p.to_string();
            if p.len() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
