use std::collections::{BTreeMap, BTreeSet};

use super::element::{PbwElement, PbwMonomial};
use super::mult::mult;
use crate::scalars::Scalar;
use crate::symgroup::{coset_factorize, Composition, Perm};

/// `Σ X^{α'} t^{β'}` over the distinct pairs `(α', β')` in the `S_n`-orbit of `(α, β)`.
pub fn orbit_sum(r: usize, alpha: &[i32], beta: &[i64]) -> PbwElement {
    let n = alpha.len();
    let beta: Vec<u8> = beta.iter().map(|&b| b.rem_euclid(r as i64) as u8).collect();
    let orbit: BTreeSet<(Vec<i32>, Vec<u8>)> = Perm::all(n).iter().map(|w| (w.act(alpha), w.act(&beta))).collect();
    let mut out = PbwElement::zero(r, n);
    for (a, b) in orbit {
        out.add_term(PbwMonomial::new(a, b, Perm::identity(n)), Scalar::one());
    }
    out
}

/// `Σ_{w ∈ S_n} ^w f` for a torus element.
pub fn symmetrize(f: &PbwElement) -> PbwElement {
    Perm::all(f.n()).iter().fold(PbwElement::zero(f.r(), f.n()), |acc, w| acc.add(&f.permute_torus(w)))
}

/// Commutes with `t_1`, `X_1` and every `g_i`.
pub fn is_central(z: &PbwElement) -> bool {
    let (r, n) = (z.r(), z.n());
    let mut gens = vec![PbwElement::t(r, n, 1), PbwElement::x_pow(r, n, 1, 1)];
    gens.extend((1..n).map(|i| PbwElement::g(r, n, i)));
    gens.iter().all(|x| mult(x, z) == mult(z, x))
}

/// Writes `a = Σ_τ g_τ h_τ` with `τ ∈ O(μ)` and every `h_τ` in the subalgebra
/// generated by the torus and `g_u`, `u ∈ S_μ`.
///
/// Repeatedly peels off a monomial of maximal length: if `w = τu` then
/// `g_τ X^{τ^{-1}α} t^{τ^{-1}β} g_u` has leading term `X^α t^β g_w` and all
/// other terms are strictly shorter.
pub fn expand_left_cosets(a: &PbwElement, mu: &Composition) -> BTreeMap<Perm, PbwElement> {
    let (r, n) = (a.r(), a.n());
    assert_eq!(mu.n(), n, "composition size");
    let mut rest = a.clone();
    let mut out: BTreeMap<Perm, PbwElement> = BTreeMap::new();
    while !rest.is_zero() {
        let (m, c) = rest.terms().max_by_key(|(m, _)| m.w.length()).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let (tau, u) = coset_factorize(&m.w, mu);
        let tinv = tau.inverse();
        let h = PbwElement::monomial(r, PbwMonomial::new(tinv.act(&m.alpha), tinv.act(&m.beta), u), c);
        let correction = mult(&PbwElement::g_w(r, &tau), &h);
        debug_assert_eq!(correction.coeff(&m), rest.coeff(&m));
        rest = rest.sub(&correction);
        let slot = out.entry(tau).or_insert_with(|| PbwElement::zero(r, n));
        *slot = slot.add(&h);
    }
    out.retain(|_, h| !h.is_zero());
    out
}
