use super::element::{PbwElement, PbwMonomial};
use super::mult::{divided_difference, mult};
use super::AyhError;
use crate::report::RelationReport;
use crate::scalars::Scalar;
use crate::symgroup::{cycle_word, Composition, Perm};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `X_1, ..., X_n` built from `X_1` by `X_{i+1} = g_i X_i g_i`, and their inverses
/// from `X_{i+1}^{-1} = g_i^{-1} X_i^{-1} g_i^{-1}`.
pub fn derived_x(r: usize, n: usize) -> (Vec<PbwElement>, Vec<PbwElement>) {
    let mut xs = vec![PbwElement::x_pow(r, n, 1, 1)];
    let mut xis = vec![PbwElement::x_pow(r, n, 1, -1)];
    for i in 1..n {
        let (g, gi) = (PbwElement::g(r, n, i), PbwElement::g_inv(r, n, i));
        xs.push(mult(&mult(&g, &xs[i - 1]), &g));
        xis.push(mult(&mult(&gi, &xis[i - 1]), &gi));
    }
    (xs, xis)
}

/// Random Laurent polynomial in `X_1..X_n` with Laurent-in-`q` integer coefficients.
pub fn random_laurent(rng: &mut impl Rng, r: usize, n: usize, terms: usize, window: i32) -> PbwElement {
    let mut f = PbwElement::zero(r, n);
    for _ in 0..terms {
        let alpha: Vec<i32> = (0..n).map(|_| rng.gen_range(-window..=window)).collect();
        let c = Scalar::from_int(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }).mul(&Scalar::q_pow(rng.gen_range(-1..=1)));
        f.add_term(PbwMonomial::new(alpha, vec![0; n], Perm::identity(n)), c);
    }
    f
}

fn check(rep: &mut RelationReport, family: &str, label: impl FnOnce() -> String, lhs: &PbwElement, rhs: &PbwElement) {
    rep.record(family, label, lhs == rhs);
}

fn product(factors: &[&PbwElement]) -> PbwElement {
    let mut it = factors.iter();
    let first = (*it.next().unwrap()).clone();
    it.fold(first, |acc, x| mult(&acc, x))
}

/// Every defining relation and derived identity, evaluated in normal form.
pub fn check_relations(r: usize, n: usize, seed: u64) -> RelationReport {
    let mut rep = RelationReport::new(r, n);
    let qq = Scalar::q_minus_qinv();
    let one = PbwElement::one(r, n);
    let g: Vec<PbwElement> = (0..n).map(|i| if i == 0 { one.clone() } else { PbwElement::g(r, n, i) }).collect();
    let gi: Vec<PbwElement> = (0..n).map(|i| if i == 0 { one.clone() } else { PbwElement::g_inv(r, n, i) }).collect();
    let e: Vec<PbwElement> = (0..n).map(|i| if i == 0 { one.clone() } else { PbwElement::e(r, n, i) }).collect();
    let t: Vec<PbwElement> = (0..=n).map(|j| if j == 0 { one.clone() } else { PbwElement::t(r, n, j) }).collect();
    let (xs, xis) = derived_x(r, n);
    let x1 = &xs[0];
    let x1i = &xis[0];

    for i in 1..n {
        for j in i + 2..n {
            check(&mut rep, "far-commutation", || format!("g{i} g{j}"), &mult(&g[i], &g[j]), &mult(&g[j], &g[i]));
        }
    }
    for i in 1..n.saturating_sub(1) {
        let l = product(&[&g[i], &g[i + 1], &g[i]]);
        let rr = product(&[&g[i + 1], &g[i], &g[i + 1]]);
        check(&mut rep, "braid", || format!("g{i} g{} g{i}", i + 1), &l, &rr);
    }
    for i in 1..=n {
        for j in 1..=n {
            check(&mut rep, "torus-commutation", || format!("t{i} t{j}"), &mult(&t[i], &t[j]), &mult(&t[j], &t[i]));
        }
    }
    for i in 1..n {
        let s = Perm::simple(n, i).unwrap();
        for j in 1..=n {
            check(&mut rep, "g-t", || format!("g{i} t{j}"), &mult(&g[i], &t[j]), &mult(&t[s.apply(j)], &g[i]));
        }
    }
    for j in 1..=n {
        let pow = (0..r).fold(one.clone(), |acc, _| mult(&acc, &t[j]));
        check(&mut rep, "t-order", || format!("t{j}^{r}"), &pow, &one);
    }
    for i in 1..n {
        let rhs = one.add(&mult(&e[i], &g[i]).scale(&qq));
        check(&mut rep, "quadratic", || format!("g{i}^2"), &mult(&g[i], &g[i]), &rhs);
    }
    check(&mut rep, "x1-inverse", || "X1 X1^-1".into(), &mult(x1, x1i), &one);
    check(&mut rep, "x1-inverse", || "X1^-1 X1".into(), &mult(x1i, x1), &one);
    if n >= 2 {
        let l = product(&[&g[1], x1, &g[1], x1]);
        let rr = product(&[x1, &g[1], x1, &g[1]]);
        check(&mut rep, "affine-braid", || "g1 X1 g1 X1".into(), &l, &rr);
    }
    for i in 2..n {
        check(&mut rep, "g-x1", || format!("g{i} X1"), &mult(&g[i], x1), &mult(x1, &g[i]));
    }
    for j in 1..=n {
        check(&mut rep, "t-x1", || format!("t{j} X1"), &mult(&t[j], x1), &mult(x1, &t[j]));
    }
    for i in 1..n {
        let mono = PbwElement::x_pow(r, n, i + 1, 1);
        check(&mut rep, "x-recursion", || format!("g{i} X{i} g{i}"), &xs[i], &mono);
        let mono_inv = PbwElement::x_pow(r, n, i + 1, -1);
        check(&mut rep, "x-recursion", || format!("g{i}^-1 X{i}^-1 g{i}^-1"), &xis[i], &mono_inv);
    }
    for i in 1..n {
        check(&mut rep, "inverse", || format!("g{i} g{i}^-1"), &mult(&g[i], &gi[i]), &one);
        check(&mut rep, "inverse", || format!("g{i}^-1 g{i}"), &mult(&gi[i], &g[i]), &one);
    }
    for i in 1..n {
        check(&mut rep, "e-idempotent", || format!("e{i}^2"), &mult(&e[i], &e[i]), &e[i]);
    }
    for i in 1..n {
        let s = Perm::simple(n, i).unwrap();
        for j in 1..=n {
            for k in 1..=n {
                let l = mult(&PbwElement::e_jk(r, n, j, k), &g[i]);
                let rr = mult(&g[i], &PbwElement::e_jk(r, n, s.apply(j), s.apply(k)));
                check(&mut rep, "e-g", || format!("e({j},{k}) g{i}"), &l, &rr);
            }
        }
    }
    for i in 1..n {
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            check(&mut rep, "g-x-far", || format!("g{i} X{j}"), &mult(&g[i], &xs[j - 1]), &mult(&xs[j - 1], &g[i]));
        }
    }
    let mut commuting: Vec<(String, &PbwElement)> = (1..=n).map(|j| (format!("t{j}"), &t[j])).collect();
    commuting.extend((1..=n).map(|j| (format!("X{j}"), &xs[j - 1])));
    for (a, (na, xa)) in commuting.iter().enumerate() {
        for (nb, xb) in commuting.iter().skip(a + 1) {
            check(&mut rep, "torus-x-commutation", || format!("{na} {nb}"), &mult(xa, xb), &mult(xb, xa));
        }
    }
    for i in 1..n {
        let (xi, xi1, xii, xi1i) = (&xs[i - 1], &xs[i], &xis[i - 1], &xis[i]);
        let pairs = [
            (mult(&g[i], xi), mult(xi1, &g[i]).sub(&mult(&e[i], xi1).scale(&qq))),
            (mult(&g[i], xi1), mult(xi, &g[i]).add(&mult(&e[i], xi1).scale(&qq))),
            (mult(&g[i], xii), mult(xi1i, &g[i]).add(&mult(&e[i], xii).scale(&qq))),
            (mult(&g[i], xi1i), mult(xii, &g[i]).sub(&mult(&e[i], xii).scale(&qq))),
        ];
        for (k, (l, rr)) in pairs.iter().enumerate() {
            check(&mut rep, "g-x-exchange", || format!("i={i} identity {}", k + 1), l, rr);
        }
    }
    for k in 1..n {
        let s = Perm::simple(n, k).unwrap();
        for code in 0..r.pow(n as u32) {
            let beta: Vec<i64> = (0..n).map(|j| ((code / r.pow(j as u32)) % r) as i64).collect();
            let tb = PbwElement::torus(r, vec![0; n], &beta);
            let stb = PbwElement::torus(r, vec![0; n], &s.act(&beta));
            check(&mut rep, "e-t", || format!("e{k} t^{beta:?}"), &mult(&e[k], &tb), &mult(&stb, &e[k]));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let denom_cache: Vec<PbwElement> = (1..n)
        .map(|i| {
            let mut alpha = vec![0; n];
            alpha[i - 1] = 1;
            alpha[i] = -1;
            one.sub(&PbwElement::torus(r, alpha, &vec![0; n]))
        })
        .collect();
    for sample in 0..20 {
        let f = random_laurent(&mut rng, r, n, 3, 2);
        for i in 1..n {
            let s = Perm::simple(n, i).unwrap();
            let sf = f.permute_torus(&s);
            let d = divided_difference(&f, i).unwrap();
            let l = mult(&g[i], &f).sub(&mult(&sf, &g[i]));
            let rr = mult(&e[i], &d).scale(&qq);
            check(&mut rep, "commutator", || format!("sample {sample}, i={i}"), &l, &rr);
            check(&mut rep, "commutator", || format!("sample {sample}, i={i}, quotient"), &mult(&d, &denom_cache[i - 1]), &f.sub(&sf));
        }
    }
    for mu in Composition::all(r, n) {
        for k in 0..r {
            if mu.partial_sum(k) < n {
                let (l, rr) = xggx_sides(r, n, mu.partial_sum(k));
                check(&mut rep, "xggx", || format!("mu={mu} k={k}"), &l, &rr);
            }
        }
    }
    rep
}

/// Both sides of `X_1 g_w = g_w X_{m+1} − (q−q^{-1}) Σ_l (word with g_l replaced by X_{l+1}) e_{l,m+1}`
/// for `w = (1, m+1)`.
fn xggx_sides(r: usize, n: usize, m: usize) -> (PbwElement, PbwElement) {
    let word = cycle_word(m);
    let gw = word.iter().fold(PbwElement::one(r, n), |acc, &i| mult(&acc, &PbwElement::g(r, n, i)));
    let x1 = PbwElement::x_pow(r, n, 1, 1);
    let lhs = mult(&x1, &gw);
    let mut rhs = mult(&gw, &PbwElement::x_pow(r, n, m + 1, 1));
    for l in 1..=m {
        // g_1 sits at index m-1; the ascending g_l follows at m-2+l
        let pos = m + l - 2;
        let mut term = PbwElement::one(r, n);
        for (idx, &i) in word.iter().enumerate() {
            let factor = if idx == pos { PbwElement::x_pow(r, n, l + 1, 1) } else { PbwElement::g(r, n, i) };
            term = mult(&term, &factor);
        }
        term = mult(&term, &PbwElement::e_jk(r, n, l, m + 1));
        rhs = rhs.sub(&term.scale(&Scalar::q_minus_qinv()));
    }
    (lhs, rhs)
}

/// The identity for a single `(μ, k)`.
pub fn check_xggx(r: usize, n: usize, mu: &Composition, k: usize) -> Result<RelationReport, AyhError> {
    if k >= r || mu.r() != r || mu.n() != n {
        return Err(AyhError::Invalid(format!("need 0 <= k < r and mu in C_r(n), got k={k}, mu={mu}")));
    }
    let m = mu.partial_sum(k);
    if m >= n {
        return Err(AyhError::Invalid(format!("(1, {}) is not a permutation of 1..{n}", m + 1)));
    }
    let mut rep = RelationReport::new(r, n);
    let (l, rr) = xggx_sides(r, n, m);
    check(&mut rep, "xggx", || format!("mu={mu} k={k}"), &l, &rr);
    Ok(rep)
}

/// The two intertwiner identities for every `i`.
pub fn check_theta(r: usize, n: usize) -> RelationReport {
    let mut rep = RelationReport::new(r, n);
    let one = PbwElement::one(r, n);
    let q2 = Scalar::q_pow(2);
    let one_minus_q2 = Scalar::one().sub(&q2);
    let (xs, _) = derived_x(r, n);
    for i in 1..n {
        let th = PbwElement::theta(r, n, i);
        let mut a = vec![0; n];
        a[i - 1] = 1;
        a[i] = -1;
        let ratio = PbwElement::torus(r, a.clone(), &vec![0; n]);
        let inv_ratio = PbwElement::torus(r, a.iter().map(|v| -v).collect(), &vec![0; n]);
        let rhs = PbwElement::e(r, n, i)
            .sub(&one)
            .scale(&one_minus_q2.mul(&one_minus_q2))
            .add(&mult(&one.sub(&ratio.scale(&q2)), &one.sub(&inv_ratio.scale(&q2))));
        check(&mut rep, "theta-square", || format!("Theta{i}^2"), &mult(&th, &th), &rhs);
    }
    for i in 1..n {
        let th = PbwElement::theta(r, n, i);
        let s = Perm::simple(n, i).unwrap();
        for j in 1..=n {
            let l = mult(&th, &xs[j - 1]);
            let rr = mult(&xs[s.apply(j) - 1], &th);
            check(&mut rep, "theta-x", || format!("Theta{i} X{j}"), &l, &rr);
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_small() {
        let rep = check_relations(2, 2, 7);
        assert!(rep.all_passed(), "{rep}");
        let rep = check_relations(3, 3, 7);
        assert!(rep.all_passed(), "{rep}");
        assert!(rep.families.iter().any(|f| f.name == "braid" && f.instances == 1));
    }

    #[test]
    fn theta_small() {
        for (r, n) in [(1, 2), (2, 2), (2, 3)] {
            let rep = check_theta(r, n);
            assert!(rep.all_passed(), "{rep}");
        }
    }

    #[test]
    fn xggx_examples() {
        assert!(check_xggx(2, 3, &Composition::new(vec![2, 1]), 0).unwrap().all_passed());
        assert!(check_xggx(2, 3, &Composition::new(vec![2, 1]), 1).unwrap().all_passed());
        assert!(check_xggx(2, 2, &Composition::new(vec![1, 1]), 1).unwrap().all_passed());
        assert!(check_xggx(2, 2, &Composition::new(vec![2, 0]), 1).is_err());
    }

    #[test]
    fn derived_x_matches_monomials() {
        let (xs, xis) = derived_x(2, 3);
        for j in 0..3 {
            assert_eq!(xs[j], PbwElement::x_pow(2, 3, j + 1, 1));
            assert_eq!(xis[j], PbwElement::x_pow(2, 3, j + 1, -1));
        }
    }
}
