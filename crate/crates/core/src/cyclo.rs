//! Cyclotomic quotients by `f_λ(X_1) = Π (X_1 − q^i)^{λ_i}`, with normal forms in
//! the window `0 ≤ α_j ≤ d − 1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ayh::{try_mult, AyhError, Guard, PbwElement, PbwMonomial};
use crate::linalg::Matrix;
use crate::rep::{FdModule, RepError};
use crate::scalars::Scalar;
use crate::symgroup::{Composition, Perm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("invalid weight datum: {0}")]
    InvalidWeight(String),
    #[error("result left the window basis at {0}")]
    Closure(String),
    #[error("dimension {dim} exceeds the limit {limit}")]
    TooLarge { dim: usize, limit: usize },
    #[error(transparent)]
    Algebra(#[from] AyhError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Multiplicities `λ_i` of the roots `q^i` of `f_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDatum {
    lambda: BTreeMap<i64, usize>,
}

impl WeightDatum {
    pub fn new(lambda: BTreeMap<i64, usize>) -> Result<Self, CycloError> {
        let lambda: BTreeMap<i64, usize> = lambda.into_iter().filter(|(_, m)| *m > 0).collect();
        if lambda.is_empty() {
            return Err(CycloError::InvalidWeight("|λ| must be at least 1".into()));
        }
        Ok(WeightDatum { lambda })
    }

    /// One root `q^i` per listed charge, with repetition.
    pub fn from_charges(charges: &[i64]) -> Self {
        let mut lambda = BTreeMap::new();
        for &c in charges {
            *lambda.entry(c).or_insert(0) += 1;
        }
        WeightDatum::new(lambda).expect("at least one charge")
    }

    pub fn from_json(s: &str) -> Result<Self, CycloError> {
        let raw: WeightDatum = serde_json::from_str(s).map_err(|e| CycloError::InvalidWeight(e.to_string()))?;
        WeightDatum::new(raw.lambda)
    }

    pub fn lambda(&self) -> &BTreeMap<i64, usize> {
        &self.lambda
    }

    pub fn d(&self) -> usize {
        self.lambda.values().sum()
    }

    /// The charges with multiplicity, ascending.
    pub fn charges(&self) -> Vec<i64> {
        self.lambda.iter().flat_map(|(&i, &m)| std::iter::repeat_n(i, m)).collect()
    }

    /// The single charge when `|λ| = 1`.
    pub fn single_charge(&self) -> Option<i64> {
        (self.d() == 1).then(|| *self.lambda.keys().next().unwrap())
    }

    /// `f_λ(Y)` for a square matrix `Y`.
    pub fn f_of_matrix(&self, y: &Matrix) -> Matrix {
        let mut out = Matrix::identity(y.rows());
        for &i in &self.charges() {
            out = out.mul(&y.sub(&Matrix::scalar(y.rows(), Scalar::q_pow(i as i32))));
        }
        out
    }
}

impl fmt::Display for WeightDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lambda.iter().map(|(i, m)| format!("{i}:{m}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Coefficients `c_0, ..., c_d` of the monic polynomial `f_λ`, lowest degree first.
pub fn f_lambda(lambda: &WeightDatum) -> Vec<Scalar> {
    let mut poly = vec![Scalar::one()];
    for &i in &lambda.charges() {
        let root = Scalar::q_pow(i as i32);
        let mut next = vec![Scalar::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(&root));
        }
        poly = next;
    }
    poly
}

/// `f_λ(X_1)` as an element of the affine algebra.
pub fn f_lambda_element(lambda: &WeightDatum, r: usize, n: usize) -> PbwElement {
    let mut out = PbwElement::zero(r, n);
    for (k, c) in f_lambda(lambda).into_iter().enumerate() {
        out = out.add(&PbwElement::x_pow(r, n, 1, k as i32).scale(&c));
    }
    out
}

/// A normal form in the quotient: every exponent lies in `[0, d − 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloElement {
    element: PbwElement,
    d: usize,
}

impl CycloElement {
    pub fn element(&self) -> &PbwElement {
        &self.element
    }

    pub fn into_element(self) -> PbwElement {
        self.element
    }

    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }

    pub fn d(&self) -> usize {
        self.d
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.element.fmt(f)
    }
}

fn in_window(m: &PbwMonomial, d: usize) -> bool {
    m.alpha.iter().all(|&a| a >= 0 && (a as usize) < d)
}

/// Left action of the affine algebra on the quotient, in the window basis.
struct Quotient<'a> {
    r: usize,
    n: usize,
    d: i32,
    f: Vec<Scalar>,
    c0_inv: Scalar,
    guard: &'a Guard,
}

impl<'a> Quotient<'a> {
    fn new(lambda: &WeightDatum, r: usize, n: usize, guard: &'a Guard) -> Self {
        let f = f_lambda(lambda);
        let c0_inv = f[0].inv().expect("nonzero constant term");
        Quotient { r, n, d: lambda.d() as i32, f, c0_inv, guard }
    }

    fn left(&self, a: &PbwElement, v: &PbwElement) -> Result<PbwElement, AyhError> {
        try_mult(a, v, self.guard)
    }

    fn x1(&self, v: &PbwElement, inverse: bool) -> PbwElement {
        let mut out = PbwElement::zero(self.r, self.n);
        for (m, c) in v.terms() {
            let mut shifted = m.clone();
            shifted.alpha[0] += if inverse { -1 } else { 1 };
            let a = shifted.alpha[0];
            if a >= 0 && a < self.d {
                out.add_term(shifted, c.clone());
                continue;
            }
            // X_1^d = −Σ_{k<d} c_k X_1^k and X_1^{-1} = −c_0^{-1} Σ_{k≥1} c_k X_1^{k-1}
            for k in 0..self.d as usize {
                let mut term = m.clone();
                term.alpha[0] = k as i32;
                let coeff = if inverse { self.f[k + 1].mul(&self.c0_inv) } else { self.f[k].clone() };
                out.add_term(term, c.mul(&coeff).neg());
            }
        }
        out
    }

    fn x(&self, j: usize, inverse: bool, v: &PbwElement) -> Result<PbwElement, AyhError> {
        if j == 1 {
            return Ok(self.x1(v, inverse));
        }
        let g = if inverse { PbwElement::g_inv(self.r, self.n, j - 1) } else { PbwElement::g(self.r, self.n, j - 1) };
        let inner = self.x(j - 1, inverse, &self.left(&g, v)?)?;
        self.left(&g, &inner)
    }

    fn x_pow(&self, j: usize, k: i32, v: &PbwElement) -> Result<PbwElement, AyhError> {
        let mut out = v.clone();
        for _ in 0..k.unsigned_abs() {
            out = self.x(j, k < 0, &out)?;
            self.guard.check_support(out.len())?;
        }
        Ok(out)
    }

    fn reduce(&self, a: &PbwElement) -> Result<PbwElement, AyhError> {
        let mut out = PbwElement::zero(self.r, self.n);
        for (m, c) in a.terms() {
            let base = PbwMonomial::new(vec![0; self.n], m.beta.clone(), m.w.clone());
            let mut v = PbwElement::monomial(self.r, base, c.clone());
            for j in (1..=self.n).rev() {
                v = self.x_pow(j, m.alpha[j - 1], &v)?;
            }
            out = out.add(&v);
        }
        Ok(out)
    }
}

/// The canonical representative of `a` modulo the two-sided ideal generated by `f_λ(X_1)`.
///
/// Computed as `a · 1` in the quotient regarded as a left module: `t` and `g` act
/// by ordinary multiplication (which preserves the window), `X_1^{±1}` by the
/// rewriting rules coming from `f_λ`, and `X_j^{±1} = g_{j-1}^{±1} X_{j-1}^{±1} g_{j-1}^{±1}`.
pub fn reduce(a: &PbwElement, lambda: &WeightDatum) -> Result<CycloElement, CycloError> {
    reduce_guarded(a, lambda, &Guard::default())
}

pub fn reduce_guarded(a: &PbwElement, lambda: &WeightDatum, guard: &Guard) -> Result<CycloElement, CycloError> {
    let quotient = Quotient::new(lambda, a.r(), a.n(), guard);
    let element = quotient.reduce(a)?;
    Ok(CycloElement { element, d: lambda.d() })
}

/// All window monomials, in increasing order.
pub fn window_basis(lambda: &WeightDatum, r: usize, n: usize) -> Vec<PbwMonomial> {
    let d = lambda.d();
    let mut alphas: Vec<Vec<i32>> = vec![Vec::new()];
    let mut betas: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..n {
        alphas = alphas.into_iter().flat_map(|a| (0..d as i32).map(move |k| [a.clone(), vec![k]].concat())).collect();
        betas = betas.into_iter().flat_map(|b| (0..r as u8).map(move |k| [b.clone(), vec![k]].concat())).collect();
    }
    let mut out = Vec::new();
    for a in &alphas {
        for b in &betas {
            for w in Perm::all(n) {
                out.push(PbwMonomial::new(a.clone(), b.clone(), w));
            }
        }
    }
    out.sort();
    out
}

/// Left regular representation of the quotient on the window basis.
pub fn regular_representation(lambda: &WeightDatum, r: usize, n: usize, max_dim: usize) -> Result<FdModule, CycloError> {
    let dim = lambda.d().pow(n as u32) * r.pow(n as u32) * (1..=n).product::<usize>();
    if dim > max_dim {
        return Err(CycloError::TooLarge { dim, limit: max_dim });
    }
    let guard = Guard::default();
    let quotient = Quotient::new(lambda, r, n, &guard);
    let basis = window_basis(lambda, r, n);
    let index: BTreeMap<&PbwMonomial, usize> = basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let vectors: Vec<PbwElement> = basis.iter().map(|m| PbwElement::monomial(r, m.clone(), Scalar::one())).collect();

    let matrix = |f: &dyn Fn(&PbwElement) -> Result<PbwElement, AyhError>| -> Result<Matrix, CycloError> {
        let mut out = Matrix::zeros(dim, dim);
        for (col, v) in vectors.iter().enumerate() {
            for (m, c) in f(v)?.terms() {
                let row = *index.get(m).filter(|_| in_window(m, lambda.d())).ok_or_else(|| CycloError::Closure(m.to_string()))?;
                out[(row, col)] = c.clone();
            }
        }
        Ok(out)
    };

    let mut t = Vec::new();
    let mut x = Vec::new();
    let mut x_inv = Vec::new();
    for j in 1..=n {
        let tj = PbwElement::t(r, n, j);
        t.push(matrix(&|v| quotient.left(&tj, v))?);
        x.push(matrix(&|v| quotient.x(j, false, v))?);
        x_inv.push(matrix(&|v| quotient.x(j, true, v))?);
    }
    let mut g = Vec::new();
    for i in 1..n {
        let gi = PbwElement::g(r, n, i);
        g.push(Some(matrix(&|v| quotient.left(&gi, v))?));
    }
    Ok(FdModule::new(r, dim, Composition::whole(n), t, x, x_inv, g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ayh::mult;

    fn weight(pairs: &[(i64, usize)]) -> WeightDatum {
        WeightDatum::new(pairs.iter().copied().collect()).unwrap()
    }

    #[test]
    fn f_lambda_examples() {
        assert_eq!(f_lambda(&weight(&[(0, 1)])), vec![Scalar::from_int(-1), Scalar::one()]);
        let f = f_lambda(&weight(&[(0, 1), (1, 1)]));
        assert_eq!(f, vec![Scalar::q(), Scalar::one().add(&Scalar::q()).neg(), Scalar::one()]);
        let f = f_lambda(&weight(&[(1, 2)]));
        assert_eq!(f, vec![Scalar::q_pow(2), Scalar::q().mul(&Scalar::from_int(-2)), Scalar::one()]);
        assert!(WeightDatum::new(BTreeMap::new()).is_err());
    }

    #[test]
    fn weight_json() {
        let w = WeightDatum::from_json(r#"{"lambda": {"0": 1, "1": 2}}"#).unwrap();
        assert_eq!(w.d(), 3);
        assert_eq!(w.charges(), vec![0, 1, 1]);
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"lambda":{"0":1,"1":2}}"#);
    }

    #[test]
    fn reduce_examples() {
        let l0 = weight(&[(0, 1)]);
        assert_eq!(reduce(&PbwElement::x_pow(1, 1, 1, 1), &l0).unwrap().into_element(), PbwElement::one(1, 1));
        let l01 = weight(&[(0, 1), (1, 1)]);
        let expected = PbwElement::x_pow(1, 1, 1, 1).scale(&Scalar::one().add(&Scalar::q())).sub(&PbwElement::scalar(1, 1, Scalar::q()));
        assert_eq!(reduce(&PbwElement::x_pow(1, 1, 1, 2), &l01).unwrap().into_element(), expected);
        let g = PbwElement::g(1, 2, 1);
        let expected = PbwElement::one(1, 2).add(&g.scale(&Scalar::q_minus_qinv()));
        assert_eq!(reduce(&PbwElement::x_pow(1, 2, 2, 1), &l0).unwrap().into_element(), expected);
        for r in 1..=2 {
            let f = f_lambda_element(&l01, r, 2);
            assert!(reduce(&f, &l01).unwrap().is_zero());
            let inv = reduce(&PbwElement::x_pow(r, 2, 1, -1), &l01).unwrap().into_element();
            let back = reduce(&mult(&PbwElement::x_pow(r, 2, 1, 1), &inv), &l01).unwrap();
            assert_eq!(back.into_element(), PbwElement::one(r, 2));
        }
    }

    #[test]
    fn reduce_is_idempotent_and_multiplicative() {
        let l = weight(&[(0, 1), (2, 1)]);
        let (r, n) = (2, 2);
        let samples = [
            PbwElement::x_pow(r, n, 2, 2),
            mult(&PbwElement::g(r, n, 1), &PbwElement::x_pow(r, n, 1, -1)),
            PbwElement::theta(r, n, 1),
            mult(&PbwElement::t(r, n, 2), &PbwElement::x_pow(r, n, 2, -2)),
        ];
        for a in &samples {
            let ra = reduce(a, &l).unwrap().into_element();
            assert_eq!(reduce(&ra, &l).unwrap().into_element(), ra);
            for b in &samples {
                let rb = reduce(b, &l).unwrap().into_element();
                let lhs = reduce(&mult(a, b), &l).unwrap();
                let rhs = reduce(&mult(&ra, &rb), &l).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn regular_representation_dims() {
        let l0 = weight(&[(0, 1)]);
        let m = regular_representation(&l0, 1, 2, 1000).unwrap();
        assert_eq!(m.dim(), 2);
        let m = regular_representation(&l0, 2, 2, 1000).unwrap();
        assert_eq!(m.dim(), 8);
        assert!(m.check_relations().all_passed());
        assert!(l0.f_of_matrix(m.x(1)).is_zero());
        assert!(matches!(regular_representation(&l0, 2, 2, 4), Err(CycloError::TooLarge { dim: 8, limit: 4 })));
    }
}
