use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::mult::mult;
use super::AyhError;
use crate::scalars::Scalar;
use crate::symgroup::Perm;

/// `X^α t^β g_w` with `β` reduced mod `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub alpha: Vec<i32>,
    pub beta: Vec<u8>,
    pub w: Perm,
}

impl PbwMonomial {
    pub fn identity(n: usize) -> Self {
        PbwMonomial { alpha: vec![0; n], beta: vec![0; n], w: Perm::identity(n) }
    }

    pub fn new(alpha: Vec<i32>, beta: Vec<u8>, w: Perm) -> Self {
        PbwMonomial { alpha, beta, w }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    /// `true` for elements of `P_n(T)`.
    pub fn is_torus(&self) -> bool {
        self.w.is_identity()
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, &a) in self.alpha.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(format!("X{}", j + 1)),
                _ => parts.push(format!("X{}^{}", j + 1, a)),
            }
        }
        for (j, &b) in self.beta.iter().enumerate() {
            match b {
                0 => {}
                1 => parts.push(format!("t{}", j + 1)),
                _ => parts.push(format!("t{}^{}", j + 1, b)),
            }
        }
        if !self.w.is_identity() {
            parts.push(format!("g{}", self.w));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// An element of the affine algebra with ranks `(r, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwElement {
    r: usize,
    n: usize,
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl PbwElement {
    pub fn zero(r: usize, n: usize) -> Self {
        assert!(r >= 1, "r must be positive");
        PbwElement { r, n, terms: BTreeMap::new() }
    }

    pub fn one(r: usize, n: usize) -> Self {
        Self::scalar(r, n, Scalar::one())
    }

    pub fn scalar(r: usize, n: usize, c: Scalar) -> Self {
        Self::monomial(r, PbwMonomial::identity(n), c)
    }

    pub fn monomial(r: usize, m: PbwMonomial, c: Scalar) -> Self {
        let mut out = Self::zero(r, m.n());
        out.add_term(m, c);
        out
    }

    /// `X^α t^β` (β taken mod `r`).
    pub fn torus(r: usize, alpha: Vec<i32>, beta: &[i64]) -> Self {
        let n = alpha.len();
        let beta = beta.iter().map(|&b| b.rem_euclid(r as i64) as u8).collect();
        Self::monomial(r, PbwMonomial::new(alpha, beta, Perm::identity(n)), Scalar::one())
    }

    pub fn t(r: usize, n: usize, j: usize) -> Self {
        let mut beta = vec![0; n];
        beta[j - 1] = 1;
        Self::torus(r, vec![0; n], &beta)
    }

    /// `X_j^k`.
    pub fn x_pow(r: usize, n: usize, j: usize, k: i32) -> Self {
        let mut alpha = vec![0; n];
        alpha[j - 1] = k;
        Self::torus(r, alpha, &vec![0; n])
    }

    pub fn g(r: usize, n: usize, i: usize) -> Self {
        Self::g_w(r, &Perm::simple(n, i).expect("generator index"))
    }

    pub fn g_w(r: usize, w: &Perm) -> Self {
        let n = w.n();
        Self::monomial(r, PbwMonomial::new(vec![0; n], vec![0; n], w.clone()), Scalar::one())
    }

    /// `g_i^{-1} = g_i − (q − q^{-1}) e_i`.
    pub fn g_inv(r: usize, n: usize, i: usize) -> Self {
        Self::g(r, n, i).sub(&Self::e(r, n, i).scale(&Scalar::q_minus_qinv()))
    }

    /// `e_{j,k} = (1/r) Σ_s t_j^s t_k^{-s}`.
    pub fn e_jk(r: usize, n: usize, j: usize, k: usize) -> Self {
        let mut out = Self::zero(r, n);
        let c = Scalar::from_ratio(1, r as i64);
        for s in 0..r as i64 {
            let mut beta = vec![0i64; n];
            beta[j - 1] += s;
            beta[k - 1] -= s;
            out = out.add(&Self::torus(r, vec![0; n], &beta).scale(&c));
        }
        out
    }

    pub fn e(r: usize, n: usize, i: usize) -> Self {
        Self::e_jk(r, n, i, i + 1)
    }

    /// `Θ_i = q g_i (1 − X_i X_{i+1}^{-1}) + (1 − q²) e_i`.
    pub fn theta(r: usize, n: usize, i: usize) -> Self {
        let mut alpha = vec![0; n];
        alpha[i - 1] = 1;
        alpha[i] = -1;
        let one = Self::one(r, n);
        let ratio = Self::torus(r, alpha, &vec![0; n]);
        let left = mult(&Self::g(r, n, i), &one.sub(&ratio)).scale(&Scalar::q());
        let right = Self::e(r, n, i).scale(&Scalar::one().sub(&Scalar::q_pow(2)));
        left.add(&right)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<PbwMonomial, Scalar> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `true` when every monomial has `w = 1`.
    pub fn is_torus(&self) -> bool {
        self.terms.keys().all(PbwMonomial::is_torus)
    }

    /// Largest length of a permutation in the support.
    pub fn max_length(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.w.length()).max()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        debug_assert_eq!(m.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn same_ranks(&self, other: &Self) -> Result<(), AyhError> {
        if self.r != other.r || self.n != other.n {
            return Err(AyhError::RankMismatch(self.r, self.n, other.r, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_ranks(other).unwrap();
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        PbwElement { r: self.r, n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.r, self.n);
        }
        PbwElement { r: self.r, n: self.n, terms: self.terms.iter().map(|(m, v)| (m.clone(), v.mul(c))).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        mult(self, other)
    }

    /// `^w f` for a torus element `f`: `X^α t^β ↦ X^{wα} t^{wβ}`.
    pub fn permute_torus(&self, w: &Perm) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for (m, c) in &self.terms {
            assert!(m.is_torus(), "permute_torus needs a torus element");
            out.add_term(PbwMonomial::new(w.act(&m.alpha), w.act(&m.beta), m.w.clone()), c.clone());
        }
        out
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms.iter().map(|(m, c)| TermJson { alpha: m.alpha.clone(), beta: m.beta.clone(), w: m.w.clone(), coeff: c.clone() }).collect()
    }

    pub fn from_json_terms(r: usize, n: usize, terms: &[TermJson]) -> Result<Self, AyhError> {
        let mut out = Self::zero(r, n);
        for t in terms {
            if t.alpha.len() != n || t.beta.len() != n || t.w.n() != n {
                return Err(AyhError::Invalid("term length does not match n".into()));
            }
            if t.beta.iter().any(|&b| b as usize >= r) {
                return Err(AyhError::Invalid("beta entry not reduced mod r".into()));
            }
            out.add_term(PbwMonomial::new(t.alpha.clone(), t.beta.clone(), t.w.clone()), t.coeff.clone());
        }
        Ok(out)
    }
}

/// One term of the JSON element format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub alpha: Vec<i32>,
    pub beta: Vec<u8>,
    pub w: Perm,
    pub coeff: Scalar,
}

impl Serialize for PbwElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(serializer)
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = m.to_string();
            if c.is_one() {
                write!(f, "{mono}")?;
            } else if mono == "1" {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}) {mono}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &PbwElement {
    type Output = PbwElement;
    fn add(self, rhs: Self) -> PbwElement {
        PbwElement::add(self, rhs)
    }
}

impl std::ops::Sub for &PbwElement {
    type Output = PbwElement;
    fn sub(self, rhs: Self) -> PbwElement {
        PbwElement::sub(self, rhs)
    }
}

impl std::ops::Mul for &PbwElement {
    type Output = PbwElement;
    fn mul(self, rhs: Self) -> PbwElement {
        mult(self, rhs)
    }
}

impl std::ops::Neg for &PbwElement {
    type Output = PbwElement;
    fn neg(self) -> PbwElement {
        PbwElement::neg(self)
    }
}
