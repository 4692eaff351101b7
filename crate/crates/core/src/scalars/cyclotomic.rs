//! Elements of the cyclotomic field `Q(ζ_m)`.
//!
//! An element of order `m` is stored as a polynomial in `ζ_m` of degree below
//! `φ(m)`, reduced modulo the `m`-th cyclotomic polynomial. Elements that are
//! rational are always stored with order 1, so most arithmetic in the algebra
//! engine (where coefficients live in `Z[1/r]`) stays on the single-rational
//! fast path.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

thread_local! {
    static CYCLOTOMIC_POLYS: RefCell<HashMap<u32, Rc<Vec<BigInt>>>> = RefCell::new(HashMap::new());
}

/// Integer coefficients (lowest degree first) of the `m`-th cyclotomic polynomial.
pub fn cyclotomic_poly(m: u32) -> Rc<Vec<BigInt>> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(p) = CYCLOTOMIC_POLYS.with(|c| c.borrow().get(&m).cloned()) {
        return p;
    }
    // x^m - 1 divided by every Φ_d with d | m, d < m.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let div = cyclotomic_poly(d);
            num = exact_int_div(&num, &div);
        }
    }
    let p = Rc::new(num);
    CYCLOTOMIC_POLYS.with(|c| c.borrow_mut().insert(m, p.clone()));
    p
}

fn exact_int_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dn] / &den[dn];
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Euler's totient.
pub fn totient(m: u32) -> usize {
    cyclotomic_poly(m).len() - 1
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[derive(Clone, Debug)]
pub struct CycloNum {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CycloNum {
    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(c: BigRational) -> Self {
        CycloNum { order: 1, coeffs: vec![c] }
    }

    pub fn from_int(c: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `ζ_m^k` for a primitive `m`-th root of unity `ζ_m = exp(2πi/m)`.
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        let k = k.rem_euclid(m as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        Self::from_raw(m, coeffs)
    }

    /// Builds an element of order `m` from an arbitrary-length coefficient
    /// vector in powers of `ζ_m`, reducing to canonical form.
    pub fn from_raw(m: u32, coeffs: Vec<BigRational>) -> Self {
        let phi = cyclotomic_poly(m);
        let reduced = reduce_mod(coeffs, &phi);
        let mut out = CycloNum { order: m, coeffs: reduced };
        out.canonicalize();
        out
    }

    /// Order `m` of the cyclotomic field this value is stored in.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    fn canonicalize(&mut self) {
        let phi = totient(self.order);
        self.coeffs.resize(phi, BigRational::zero());
        if self.order != 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            let c0 = std::mem::replace(&mut self.coeffs[0], BigRational::zero());
            self.order = 1;
            self.coeffs = vec![c0];
        }
    }

    /// Re-expresses the value in `Q(ζ_m)`; `m` must be a multiple of the order.
    pub fn lift(&self, m: u32) -> Self {
        assert!(m.is_multiple_of(self.order), "cannot lift order {} to {}", self.order, m);
        if self.order == m {
            return self.clone();
        }
        if self.order == 1 {
            return CycloNum { order: m, coeffs: self.padded(totient(m)) };
        }
        let step = (m / self.order) as usize;
        let mut raw = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        let phi = cyclotomic_poly(m);
        CycloNum { order: m, coeffs: reduce_mod(raw, &phi) }
    }

    fn padded(&self, len: usize) -> Vec<BigRational> {
        let mut v = self.coeffs.clone();
        v.resize(len, BigRational::zero());
        v
    }

    fn common(a: &Self, b: &Self) -> (u32, Self, Self) {
        let m = lcm(a.order, b.order);
        (m, a.lift(m), b.lift(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.order == 1 && other.order == 1 {
            return Self::rational(&self.coeffs[0] + &other.coeffs[0]);
        }
        let (m, a, b) = Self::common(self, other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        let mut out = CycloNum { order: m, coeffs };
        out.canonicalize();
        out
    }

    pub fn neg(&self) -> Self {
        CycloNum { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.order == 1 && other.order == 1 {
            return Self::rational(&self.coeffs[0] * &other.coeffs[0]);
        }
        if self.order == 1 || other.order == 1 {
            let (s, v) = if self.order == 1 { (&self.coeffs[0], other) } else { (&other.coeffs[0], self) };
            let mut out = CycloNum { order: v.order, coeffs: v.coeffs.iter().map(|c| c * s).collect() };
            out.canonicalize();
            return out;
        }
        let (m, a, b) = Self::common(self, other);
        let mut raw = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                raw[i + j] += x * y;
            }
        }
        Self::from_raw(m, raw)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        self.mul(&Self::rational(s.clone()))
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.order == 1 {
            return Some(Self::rational(self.coeffs[0].recip()));
        }
        let phi: Vec<BigRational> = cyclotomic_poly(self.order).iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let (g, s) = ext_gcd_inverse(&self.coeffs, &phi);
        debug_assert_eq!(g.len(), 1);
        let inv_lc = g[0].recip();
        Some(Self::from_raw(self.order, s.into_iter().map(|c| c * &inv_lc).collect()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNum {}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = match k {
                0 => String::new(),
                1 => format!("z{}", self.order),
                _ => format!("z{}^{}", self.order, k),
            };
            let term = if z.is_empty() {
                c.to_string()
            } else if c.is_one() {
                z
            } else if (-c).is_one() {
                format!("-{z}")
            } else {
                format!("{c}*{z}")
            };
            parts.push(term);
        }
        let mut s = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                s.push_str(p);
            } else if let Some(rest) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        write!(f, "{s}")
    }
}

/// Reduces a rational polynomial modulo a monic integer polynomial.
fn reduce_mod(mut coeffs: Vec<BigRational>, modulus: &[BigInt]) -> Vec<BigRational> {
    let d = modulus.len() - 1;
    while coeffs.len() > d {
        let top = coeffs.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = coeffs.len() - d;
        for (j, mj) in modulus.iter().enumerate().take(d) {
            if !mj.is_zero() {
                coeffs[shift + j] -= &top * BigRational::from_integer(mj.clone());
            }
        }
    }
    coeffs.resize(d, BigRational::zero());
    coeffs
}

fn trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = degree(b).expect("division by zero polynomial");
    let mut rem = a.to_vec();
    let mut quot = vec![BigRational::zero(); a.len().max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] / &b[db];
        let shift = dr - db;
        for j in 0..=db {
            rem[shift + j] -= &c * &b[j];
        }
        quot[shift] = c;
    }
    trim(&mut quot);
    trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Returns `(g, s)` with `s·a ≡ g (mod m)`, `g` the gcd of `a` and `m`.
fn ext_gcd_inverse(a: &[BigRational], m: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0 = vec![BigRational::zero()];
    let mut s1 = vec![BigRational::one()];
    while degree(&r1).is_some() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    trim(&mut r0);
    (r0, s0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), int_poly(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(2), int_poly(&[1, 1]));
        assert_eq!(*cyclotomic_poly(3), int_poly(&[1, 1, 1]));
        assert_eq!(*cyclotomic_poly(4), int_poly(&[1, 0, 1]));
        assert_eq!(*cyclotomic_poly(6), int_poly(&[1, -1, 1]));
        assert_eq!(*cyclotomic_poly(12), int_poly(&[1, 0, -1, 0, 1]));
        assert_eq!(totient(5), 4);
    }

    #[test]
    fn zeta_to_the_order_is_one() {
        for m in 1..=12u32 {
            let z = CycloNum::zeta_pow(m, 1);
            assert_eq!(z.pow(m), CycloNum::one(), "m = {m}");
            if m > 1 {
                assert_ne!(z.pow(m - 1), CycloNum::one());
            }
        }
    }

    #[test]
    fn prime_root_sums_vanish() {
        for p in [2u32, 3, 5, 7] {
            let mut s = CycloNum::zero();
            for k in 0..p {
                s = s.add(&CycloNum::zeta_pow(p, k as i64));
            }
            assert!(s.is_zero(), "p = {p}");
        }
        // prime divisors of a composite order
        let mut s = CycloNum::zero();
        for k in 0..3 {
            s = s.add(&CycloNum::zeta_pow(6, 2 * k));
        }
        assert!(s.is_zero());
    }

    #[test]
    fn order_two_is_rational() {
        let z = CycloNum::zeta_pow(2, 1);
        assert_eq!(z.order(), 1);
        assert_eq!(z, CycloNum::from_int(-1));
    }

    #[test]
    fn inverses_and_lifts() {
        let a = CycloNum::from_int(2).add(&CycloNum::zeta_pow(5, 2));
        let b = a.inv().unwrap();
        assert!(a.mul(&b).is_one());
        let z3 = CycloNum::zeta_pow(3, 1);
        assert_eq!(z3.lift(6), CycloNum::zeta_pow(6, 2));
        assert_eq!(z3, CycloNum::zeta_pow(6, 2));
        assert!(CycloNum::zero().inv().is_none());
    }
}
