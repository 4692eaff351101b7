use std::collections::BTreeMap;

use super::element::{PbwElement, PbwMonomial};
use super::{AyhError, Guard};
use crate::scalars::Scalar;
use crate::symgroup::Perm;

/// `Δ_i(X^α)`: the exact quotient `(X^α − X^{s_iα}) / (1 − X_i X_{i+1}^{-1})` as
/// a list of signed monomials.
pub(crate) fn delta_monomial(alpha: &[i32], i: usize) -> Vec<(Vec<i32>, i32)> {
    let (p, q) = (i - 1, i);
    let (a, b) = (alpha[p], alpha[q]);
    let mut out = Vec::new();
    let (lo, hi, sign) = match a.cmp(&b) {
        std::cmp::Ordering::Equal => return out,
        std::cmp::Ordering::Greater => (b, a, -1),
        std::cmp::Ordering::Less => (a, b, 1),
    };
    for k in 0..hi - lo {
        let mut m = alpha.to_vec();
        m[p] = lo + k;
        m[q] = hi - k;
        out.push((m, sign));
    }
    out
}

/// Divided difference of a torus element; `t`-factors ride along as coefficients.
pub fn divided_difference(f: &PbwElement, i: usize) -> Result<PbwElement, AyhError> {
    if i == 0 || i >= f.n() {
        return Err(AyhError::IndexOutOfRange { index: i, n: f.n() });
    }
    let mut out = PbwElement::zero(f.r(), f.n());
    for (m, c) in f.terms() {
        if !m.is_torus() {
            return Err(AyhError::Invalid("divided difference needs an element of P_n(T)".into()));
        }
        for (alpha, sign) in delta_monomial(&m.alpha, i) {
            let c = if sign < 0 { c.neg() } else { c.clone() };
            out.add_term(PbwMonomial::new(alpha, m.beta.clone(), m.w.clone()), c);
        }
    }
    Ok(out)
}

fn shift_e(beta: &[u8], i: usize, s: usize, r: usize) -> Vec<u8> {
    let mut out = beta.to_vec();
    out[i - 1] = ((out[i - 1] as usize + s) % r) as u8;
    out[i] = ((out[i] as usize + r - s) % r) as u8;
    out
}

fn add_into(acc: &mut BTreeMap<PbwMonomial, Scalar>, m: PbwMonomial, c: Scalar) {
    use std::collections::btree_map::Entry;
    match acc.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            *o.get_mut() = s;
        }
    }
}

/// `g_i · b`.
fn g_left(i: usize, b: &PbwElement) -> PbwElement {
    let (r, n) = (b.r(), b.n());
    let qq_r = Scalar::q_minus_qinv().div(&Scalar::from_int(r as i64)).unwrap();
    let mut acc: BTreeMap<PbwMonomial, Scalar> = BTreeMap::new();
    for (m, c) in b.terms() {
        let mut alpha = m.alpha.clone();
        alpha.swap(i - 1, i);
        let mut beta = m.beta.clone();
        beta.swap(i - 1, i);
        let siw = m.w.left_mul_simple(i).unwrap();
        let cq = c.mul(&qq_r);
        if m.w.has_left_descent(i) {
            for s in 0..r {
                add_into(&mut acc, PbwMonomial::new(alpha.clone(), shift_e(&beta, i, s, r), m.w.clone()), cq.clone());
            }
        }
        for (a2, sign) in delta_monomial(&m.alpha, i) {
            let cs = if sign < 0 { cq.neg() } else { cq.clone() };
            for s in 0..r {
                add_into(&mut acc, PbwMonomial::new(a2.clone(), shift_e(&m.beta, i, s, r), m.w.clone()), cs.clone());
            }
        }
        add_into(&mut acc, PbwMonomial::new(alpha, beta, siw), c.clone());
    }
    let mut out = PbwElement::zero(r, n);
    for (m, c) in acc {
        out.add_term(m, c);
    }
    out
}

/// `g_{i_1} ⋯ g_{i_k} · b`.
pub fn g_word_times(word: &[usize], b: &PbwElement, guard: &Guard) -> Result<PbwElement, AyhError> {
    let mut cur = b.clone();
    for &i in word.iter().rev() {
        if i == 0 || i >= b.n() {
            return Err(AyhError::IndexOutOfRange { index: i, n: b.n() });
        }
        cur = g_left(i, &cur);
        guard.check_support(cur.len())?;
    }
    Ok(cur)
}

/// Product in normal form, with resource limits.
///
/// The left factor is split by permutation; `g_w · b` is computed along the
/// canonical reduced word of `w` and the torus part of the left factor is then
/// merged commutatively.
pub fn try_mult(a: &PbwElement, b: &PbwElement, guard: &Guard) -> Result<PbwElement, AyhError> {
    a.same_ranks(b)?;
    guard.check_n(a.n())?;
    let r = a.r();
    let mut by_w: BTreeMap<&Perm, Vec<(&PbwMonomial, &Scalar)>> = BTreeMap::new();
    for (m, c) in a.terms() {
        by_w.entry(&m.w).or_default().push((m, c));
    }
    let mut acc: BTreeMap<PbwMonomial, Scalar> = BTreeMap::new();
    for (w, group) in by_w {
        let gb = g_word_times(&w.reduced_word(), b, guard)?;
        for (m, c) in group {
            for (m2, c2) in gb.terms() {
                let alpha = m.alpha.iter().zip(&m2.alpha).map(|(x, y)| x + y).collect();
                let beta = m.beta.iter().zip(&m2.beta).map(|(x, y)| ((*x as usize + *y as usize) % r) as u8).collect();
                add_into(&mut acc, PbwMonomial::new(alpha, beta, m2.w.clone()), c.mul(c2));
            }
        }
        guard.check_support(acc.len())?;
    }
    let mut out = PbwElement::zero(r, a.n());
    for (m, c) in acc {
        out.add_term(m, c);
    }
    Ok(out)
}

/// Product in normal form. Panics on rank mismatch.
pub fn mult(a: &PbwElement, b: &PbwElement) -> PbwElement {
    try_mult(a, b, &Guard::unlimited()).expect("mult")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ayh::Gen;

    fn qq() -> Scalar {
        Scalar::q_minus_qinv()
    }

    fn x(r: usize, n: usize, alpha: Vec<i32>) -> PbwElement {
        PbwElement::torus(r, alpha, &vec![0; n])
    }

    #[test]
    fn g_times_x1() {
        for r in 1..=3 {
            let (g1, x1) = (PbwElement::g(r, 2, 1), PbwElement::x_pow(r, 2, 1, 1));
            let x2 = PbwElement::x_pow(r, 2, 2, 1);
            let e1 = PbwElement::e(r, 2, 1);
            let expected = mult(&x2, &g1).sub(&mult(&e1, &x2).scale(&qq()));
            assert_eq!(mult(&g1, &x1), expected);
        }
    }

    #[test]
    fn quadratic_relation() {
        for r in 1..=3 {
            let g1 = PbwElement::g(r, 2, 1);
            let expected = PbwElement::one(r, 2).add(&mult(&PbwElement::e(r, 2, 1), &g1).scale(&qq()));
            assert_eq!(mult(&g1, &g1), expected);
        }
    }

    #[test]
    fn e_idempotent_and_shape() {
        let e1 = PbwElement::e(2, 2, 1);
        assert_eq!(mult(&e1, &e1), e1);
        // ½(1 + t_1 t_2)
        let half = Scalar::from_ratio(1, 2);
        let expected = PbwElement::one(2, 2).add(&PbwElement::torus(2, vec![0, 0], &[1, 1])).scale(&half);
        assert_eq!(e1, expected);
    }

    #[test]
    fn g_moves_t() {
        let (g1, t1, t2) = (PbwElement::g(3, 2, 1), PbwElement::t(3, 2, 1), PbwElement::t(3, 2, 2));
        assert_eq!(mult(&g1, &t1), mult(&t2, &g1));
    }

    #[test]
    fn inverse_generator() {
        for r in 1..=3 {
            let gi = crate::ayh::gen(r, 3, Gen::GInv, 2).unwrap();
            let g = PbwElement::g(r, 3, 2);
            assert_eq!(mult(&g, &gi), PbwElement::one(r, 3));
            assert_eq!(mult(&gi, &g), PbwElement::one(r, 3));
        }
    }

    #[test]
    fn divided_difference_examples() {
        let d = divided_difference(&x(1, 2, vec![1, 0]), 1).unwrap();
        assert_eq!(d, x(1, 2, vec![0, 1]).neg());
        assert!(divided_difference(&x(1, 2, vec![1, 1]), 1).unwrap().is_zero());
        let d = divided_difference(&x(1, 2, vec![2, 0]), 1).unwrap();
        assert_eq!(d, x(1, 2, vec![1, 1]).add(&x(1, 2, vec![0, 2])).neg());
    }

    #[test]
    fn divided_difference_multiplies_back() {
        let denom = PbwElement::one(1, 3).sub(&x(1, 3, vec![0, 1, -1]));
        for a in -3..=3 {
            for b in -3..=3 {
                let f = x(1, 3, vec![2, a, b]);
                let sf = f.permute_torus(&Perm::simple(3, 2).unwrap());
                let d = divided_difference(&f, 2).unwrap();
                assert_eq!(mult(&d, &denom), f.sub(&sf));
            }
        }
    }

    #[test]
    fn longest_element_words_agree() {
        let w = Perm::from_one_line(&[3, 2, 1]).unwrap();
        let a = PbwElement::x_pow(2, 3, 1, 1);
        let g = Guard::default();
        let ws = w.all_reduced_words();
        let first = g_word_times(&ws[0], &a, &g).unwrap();
        for word in &ws[1..] {
            assert_eq!(g_word_times(word, &a, &g).unwrap(), first);
        }
    }

    #[test]
    fn guard_trips() {
        let tight = Guard { max_support: 2, max_n: 6 };
        let a = PbwElement::g(3, 2, 1);
        let err = try_mult(&a, &a, &tight).unwrap_err();
        assert!(matches!(err, AyhError::SupportExceeded { .. }));
        let err = try_mult(&PbwElement::one(1, 3), &PbwElement::one(1, 2), &Guard::default()).unwrap_err();
        assert!(matches!(err, AyhError::RankMismatch(..)));
    }
}
