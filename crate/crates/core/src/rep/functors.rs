use std::collections::BTreeMap;

use super::module::FdModule;
use super::RepError;
use crate::ayh::{expand_left_cosets, mult, PbwElement};
use crate::cyclo::WeightDatum;
use crate::hecke::{seminormal_simple, TensorHeckeModule};
use crate::linalg::Matrix;
use crate::partition::Partition;
use crate::scalars::{Scalar, Specialization};
use crate::symgroup::{coset_reps, Composition, Perm};

/// Projector onto the `t`-weight space where `t_j` acts by `ζ_r^{ι_j}` with
/// `ι = (0^{μ_1}, 1^{μ_2}, ...)`.
pub fn isotypic_projector(m: &FdModule, mu: &Composition) -> Result<Matrix, RepError> {
    if mu.n() != m.n() || mu.r() != m.r() {
        return Err(RepError::Shape(format!("composition {mu} does not match rank ({}, {})", m.r(), m.n())));
    }
    let r = m.r();
    let mut proj = Matrix::identity(m.dim());
    for (j, &c) in mu.pattern().iter().enumerate() {
        let mut p = Matrix::zeros(m.dim(), m.dim());
        for s in 0..r as i64 {
            p = p.add(&m.t_pow(j + 1, s).scale(&Scalar::zeta_pow(r as u32, -(c as i64) * s)));
        }
        proj = proj.mul(&p.scale(&Scalar::from_ratio(1, r as i64)));
    }
    Ok(proj)
}

/// Basis of the `μ`-isotypic piece.
pub fn isotypic(m: &FdModule, mu: &Composition) -> Result<Matrix, RepError> {
    Ok(isotypic_projector(m, mu)?.column_space())
}

/// The `μ`-isotypic piece as a module over the subalgebra with blocks `μ`.
pub fn isotypic_module(m: &FdModule, mu: &Composition) -> Result<FdModule, RepError> {
    let basis = isotypic(m, mu)?;
    m.restrict_blocks(mu.clone())?.restrict(&basis)
}

/// `V(μ) ⊗ P`: the rank-`r` module with blocks `μ` where `t_j` acts by its
/// character and `g_i`, `X_j` act as on the Hecke module `P`.
pub fn with_characters(p: &FdModule, r: usize) -> Result<FdModule, RepError> {
    let mu = p.blocks();
    if mu.r() != r {
        return Err(RepError::Shape(format!("blocks {mu} have {} parts, expected {r}", mu.r())));
    }
    let n = p.n();
    let t = mu.pattern().iter().map(|&c| Matrix::scalar(p.dim(), Scalar::zeta_pow(r as u32, c as i64))).collect();
    let x = (1..=n).map(|j| p.x(j).clone()).collect();
    let x_inv = (1..=n).map(|j| p.x_inv(j).clone()).collect();
    let g = (1..n).map(|i| p.g(i).cloned()).collect();
    FdModule::new(r, p.dim(), mu.clone(), t, x, x_inv, g)
}

/// Forgets the torus characters of a module over the subalgebra with blocks `μ`
/// on which every internal `e_i` is the identity.
pub fn forget_characters(w: &FdModule) -> Result<FdModule, RepError> {
    let n = w.n();
    let id = Matrix::identity(w.dim());
    let x = (1..=n).map(|j| w.x(j).clone()).collect();
    let x_inv = (1..=n).map(|j| w.x_inv(j).clone()).collect();
    let g = (1..n).map(|i| w.g(i).cloned()).collect();
    FdModule::new(1, w.dim(), w.blocks().clone(), vec![id; n], x, x_inv, g)
}

/// Matrices of the given elements on `Ind_μ W`, basis `g_τ ⊗ w` with `τ` running
/// over the minimal coset representatives in order.
fn induced_matrices(w: &FdModule, elements: &[PbwElement]) -> Result<Vec<Matrix>, RepError> {
    let mu = w.blocks();
    let reps = coset_reps(mu);
    let pos: BTreeMap<&Perm, usize> = reps.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let d = w.dim();
    let big = reps.len() * d;
    let mut out = Vec::new();
    for x in elements {
        let mut m = Matrix::zeros(big, big);
        for (col, tau) in reps.iter().enumerate() {
            let prod = mult(x, &PbwElement::g_w(x.r(), tau));
            for (sigma, h) in expand_left_cosets(&prod, mu) {
                let row = pos[&sigma];
                let block = w.act(&h)?;
                for a in 0..d {
                    for b in 0..d {
                        m[(row * d + a, col * d + b)] = block[(a, b)].clone();
                    }
                }
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// `Ind_{Ŷ_{r,μ}}^{Ŷ_{r,n}} W` for a module `W` with blocks `μ`.
pub fn induce(w: &FdModule) -> Result<FdModule, RepError> {
    let (r, n) = (w.r(), w.n());
    let mut elements = Vec::new();
    for j in 1..=n {
        elements.push(PbwElement::t(r, n, j));
    }
    for j in 1..=n {
        elements.push(PbwElement::x_pow(r, n, j, 1));
    }
    for j in 1..=n {
        elements.push(PbwElement::x_pow(r, n, j, -1));
    }
    for i in 1..n {
        elements.push(PbwElement::g(r, n, i));
    }
    let mut mats = induced_matrices(w, &elements)?.into_iter();
    let dim = w.dim() * w.blocks().index();
    let t = mats.by_ref().take(n).collect();
    let x = mats.by_ref().take(n).collect();
    let x_inv = mats.by_ref().take(n).collect();
    let g = mats.map(Some).collect();
    FdModule::new(r, dim, Composition::whole(n), t, x, x_inv, g)
}

/// Matrices of `t_1..t_n` and `g_1..g_{n-1}` on the induced module, ignoring `X`.
pub(crate) fn induce_finite(w: &FdModule) -> Result<(Vec<Matrix>, Vec<Matrix>), RepError> {
    let (r, n) = (w.r(), w.n());
    let mut elements: Vec<PbwElement> = (1..=n).map(|j| PbwElement::t(r, n, j)).collect();
    elements.extend((1..n).map(|i| PbwElement::g(r, n, i)));
    let mut mats = induced_matrices(w, &elements)?;
    let g = mats.split_off(n);
    Ok((mats, g))
}

/// `F(N)`: for every `μ`, the `μ`-isotypic piece with `T_w = g_w` and `Y_j = X_j`.
pub fn morita_f(n_mod: &FdModule) -> Result<BTreeMap<Composition, TensorHeckeModule>, RepError> {
    let mut out = BTreeMap::new();
    for mu in Composition::all(n_mod.r(), n_mod.n()) {
        let piece = forget_characters(&isotypic_module(n_mod, &mu)?)?;
        out.insert(mu.clone(), TensorHeckeModule::from_module(&mu, piece)?);
    }
    Ok(out)
}

/// `G(P) = ⊕_μ Ind(V(μ) ⊗ P_μ)`.
pub fn morita_g(p: &BTreeMap<Composition, TensorHeckeModule>, r: usize, n: usize) -> Result<FdModule, RepError> {
    let mut out = FdModule::zero(r, Composition::whole(n));
    for (mu, piece) in p {
        if mu.n() != n || mu.r() != r {
            return Err(RepError::Shape(format!("component {mu} is not an {r}-composition of {n}")));
        }
        if piece.dim() == 0 {
            continue;
        }
        out = out.direct_sum(&induce(&with_characters(&piece.module, r)?)?)?;
    }
    Ok(out)
}

/// All labels `(μ, shapes)` of simple modules of the semisimple quotient with `|λ| = 1`.
pub fn simple_labels(r: usize, n: usize) -> Vec<(Composition, Vec<Partition>)> {
    let mut out = Vec::new();
    for mu in Composition::all(r, n) {
        let mut shapes: Vec<Vec<Partition>> = vec![Vec::new()];
        for &m in mu.parts() {
            shapes = shapes.into_iter().flat_map(|prefix| Partition::all(m).into_iter().map(move |p| [prefix.clone(), vec![p]].concat())).collect();
        }
        out.extend(shapes.into_iter().map(|s| (mu.clone(), s)));
    }
    out
}

/// `(n! / Π μ_k!) · Π #SYT(shape_k)`.
pub fn simple_dim(mu: &Composition, shapes: &[Partition]) -> usize {
    mu.index() * shapes.iter().map(Partition::hook_count).product::<usize>()
}

/// The simple module `S_μ(L.)` with `L_k` the seminormal module of `shapes[k]`
/// on which `Y_1` acts by `q^i`, `λ = {i: 1}`.
pub fn simple_module(mu: &Composition, shapes: &[Partition], lambda: &WeightDatum, spec: Specialization) -> Result<FdModule, RepError> {
    let charge = lambda.single_charge().ok_or_else(|| RepError::Unsupported("simple modules need |λ| = 1".into()))?;
    if shapes.len() != mu.r() || shapes.iter().zip(mu.parts()).any(|(s, &m)| s.size() != m) {
        return Err(RepError::Shape(format!("shapes do not match the composition {mu}")));
    }
    let factors = shapes.iter().map(|s| seminormal_simple(s, charge, spec)).collect::<Result<Vec<_>, _>>()?;
    let p = TensorHeckeModule::tensor(mu, factors)?;
    morita_g(&BTreeMap::from([(mu.clone(), p)]), mu.r(), mu.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::regular_representation;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn isotypic_of_regular_representation() {
        let l = WeightDatum::from_charges(&[0]);
        let m = regular_representation(&l, 2, 2, 100).unwrap();
        assert_eq!(isotypic(&m, &Composition::new(vec![2, 0])).unwrap().cols(), 2);
        let total: usize = Composition::all(2, 2).iter().map(|mu| isotypic(&m, mu).unwrap().cols() * mu.index()).sum();
        assert_eq!(total, 8);
        let piece = isotypic_module(&m, &Composition::new(vec![1, 1])).unwrap();
        assert!(piece.check_relations().all_passed());
    }

    #[test]
    fn induce_dimensions() {
        let l = WeightDatum::from_charges(&[0]);
        let mu = Composition::new(vec![1, 1]);
        let s = simple_module(&mu, &[p(&[1]), p(&[1])], &l, Specialization::Generic).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.check_relations().all_passed());
        assert!(l.f_of_matrix(s.x(1)).is_zero());
        let whole = Composition::new(vec![3]);
        let s = simple_module(&whole, &[p(&[2, 1])], &l, Specialization::Generic).unwrap();
        assert_eq!(s.dim(), 2);
        let seminormal = seminormal_simple(&p(&[2, 1]), 0, Specialization::Generic).unwrap();
        assert_eq!(s, seminormal);
    }

    #[test]
    fn sum_of_squares_small() {
        let l = WeightDatum::from_charges(&[0]);
        for (r, n) in [(2, 2), (3, 2), (2, 3)] {
            let mut total = 0;
            for (mu, shapes) in simple_labels(r, n) {
                let s = simple_module(&mu, &shapes, &l, Specialization::Generic).unwrap();
                assert_eq!(s.dim(), simple_dim(&mu, &shapes));
                let rep = s.check_relations();
                assert!(rep.all_passed(), "{mu} {shapes:?}\n{rep}");
                total += s.dim() * s.dim();
            }
            assert_eq!(total, r.pow(n as u32) * (1..=n).product::<usize>());
        }
    }

    #[test]
    fn f_then_g() {
        let l = WeightDatum::from_charges(&[1]);
        let mu = Composition::new(vec![2, 1]);
        let s = simple_module(&mu, &[p(&[1, 1]), p(&[1])], &l, Specialization::Generic).unwrap();
        let f = morita_f(&s).unwrap();
        let dims: Vec<usize> = f.values().map(TensorHeckeModule::dim).collect();
        assert_eq!(dims, vec![0, 0, 1, 0]);
        for piece in f.values() {
            assert!(piece.module.check_relations().all_passed());
        }
        let back = morita_g(&f, 2, 3).unwrap();
        assert_eq!(back.dim(), 3);
        assert_eq!(crate::rep::hom_dim(&back, &s).unwrap(), 1);
        let zero = FdModule::zero(2, Composition::whole(3));
        assert!(morita_f(&zero).unwrap().values().all(|p| p.dim() == 0));
        assert_eq!(morita_g(&morita_f(&zero).unwrap(), 2, 3).unwrap().dim(), 0);
    }
}
