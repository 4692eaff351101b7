use std::collections::BTreeMap;
use std::fmt;

use super::cyclotomic::CycloNum;

/// Laurent polynomial in `q` with cyclotomic coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, CycloNum>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(CycloNum::one())
    }

    pub fn constant(c: CycloNum) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·q^k`.
    pub fn monomial(c: CycloNum, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, CycloNum)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &CycloNum)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, k: i32) -> CycloNum {
        self.terms.get(&k).cloned().unwrap_or_else(CycloNum::zero)
    }

    /// Single-term polynomials `c·q^k`.
    pub fn as_monomial(&self) -> Option<(i32, &CycloNum)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, k: i32, c: &CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(existing) => {
                let s = existing.add(c);
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut acc, small) = if self.len() >= other.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (k, c) in small.terms() {
            acc.add_term(k, c);
        }
        acc
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                acc.add_term(a + b, &x.mul(y));
            }
        }
        acc
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(k, x)| (*k, x.mul(c))).collect() }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitutes `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Largest cyclotomic order among the coefficients' fields (lcm).
    pub fn coeff_order(&self) -> u32 {
        self.terms.values().fold(1, |m, c| super::cyclotomic::lcm(m, c.order()))
    }

    /// Dense coefficient vector starting at the lowest exponent, together with that exponent.
    pub(crate) fn to_dense(&self) -> (i32, Vec<CycloNum>) {
        let Some(lo) = self.min_exp() else {
            return (0, vec![]);
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![CycloNum::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.terms() {
            v[(k - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(lo: i32, v: &[CycloNum]) -> Self {
        LaurentPoly::from_terms(v.iter().enumerate().map(|(i, c)| (lo + i as i32, c.clone())))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let qpart = match *k {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            let cs = c.to_string();
            let compound = c.order() != 1;
            let (neg, body) = if !compound && cs.starts_with('-') { (true, cs[1..].to_string()) } else { (false, cs) };
            let body = if compound { format!("({body})") } else { body };
            let term = if qpart.is_empty() {
                body
            } else if body == "1" {
                qpart
            } else {
                format!("{body}*{qpart}")
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                write!(f, "{term}")?;
                first = false;
            } else if neg {
                write!(f, " - {term}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}
