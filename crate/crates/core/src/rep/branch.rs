use std::collections::BTreeMap;

use serde::Serialize;

use super::eigen::integral_eigenspaces;
use super::functors::induce_finite;
use super::module::{FdModule, Subspace};
use super::weights::{character_spaces, eigen_window, joint_weights};
use super::RepError;
use crate::cyclo::WeightDatum;
use crate::linalg::Matrix;
use crate::scalars::Scalar;
use crate::symgroup::Composition;

/// A summand of the restriction to `Ŷ_{r,n-1} ⊗ ⟨t_n, X_n⟩`: `t_n` acts by
/// `ζ_r^{k-1}` and `X_n` has the single generalized eigenvalue `q^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSummand {
    pub k: usize,
    pub a: i32,
    /// Module with blocks `(n-1, 1)`.
    pub module: FdModule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchJson {
    pub k: usize,
    pub a: i32,
    pub dim: usize,
    pub label: String,
}

impl BranchSummand {
    /// The `Ŷ_{r,n-1}`-module obtained by forgetting `t_n` and `X_n`.
    pub fn lower(&self) -> FdModule {
        self.module.drop_last_point()
    }

    pub fn to_json(&self) -> BranchJson {
        BranchJson { k: self.k, a: self.a, dim: self.module.dim(), label: format!("(k={}, a=q^{})", self.k, self.a) }
    }
}

/// Splits `Res M` by the joint eigenvalues of `t_n` and `X_n`, ordered by `(k, a)`.
pub fn restrict_branch(m: &FdModule) -> Result<Vec<BranchSummand>, RepError> {
    let n = m.n();
    if n == 0 {
        return Err(RepError::Shape("nothing to restrict at rank zero".into()));
    }
    if !m.is_full() {
        return Err(RepError::Unsupported("restriction needs a module over the full algebra".into()));
    }
    let coarse = m.restrict_blocks(Composition::new(vec![n - 1, 1]))?;
    let mut out = Vec::new();
    if m.dim() == 0 {
        return Ok(out);
    }
    for (c, tb) in character_spaces(m.t(n), m.r()) {
        let local = Subspace::new(&tb).restrict(m.x(n)).ok_or_else(|| RepError::NotInvariant(format!("X{n}")))?;
        for (a, xb) in integral_eigenspaces(&local, eigen_window(n))? {
            out.push(BranchSummand { k: c + 1, a, module: coarse.restrict(&tb.mul(&xb))? });
        }
    }
    Ok(out)
}

/// Multiset of eigenvalue exponents, `γ_j = #{k : X_k ↦ q^j}`.
pub fn content(exps: &[i32]) -> BTreeMap<i32, usize> {
    let mut out = BTreeMap::new();
    for &e in exps {
        *out.entry(e).or_insert(0) += 1;
    }
    out
}

/// `(μ, γ)`: the orbit of the torus character and the content of the `X`-eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BlockLabel {
    pub mu: Composition,
    pub gamma: BTreeMap<i32, usize>,
}

impl std::fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let g: Vec<String> = self.gamma.iter().map(|(j, m)| format!("{m}ε{j}")).collect();
        write!(f, "[{}, {}]", self.mu, g.join("+"))
    }
}

/// `M = ⊕ M[μ, γ]`, each slice checked to be a submodule.
pub fn blocks(m: &FdModule) -> Result<BTreeMap<BlockLabel, FdModule>, RepError> {
    let r = m.r();
    let mut grouped: BTreeMap<BlockLabel, Matrix> = BTreeMap::new();
    for (w, basis) in joint_weights(m)? {
        let mut parts = vec![0; r];
        for &c in &w.chars {
            parts[c] += 1;
        }
        let label = BlockLabel { mu: Composition::new(parts), gamma: content(&w.exps) };
        let entry = grouped.entry(label).or_insert_with(|| Matrix::zeros(m.dim(), 0));
        *entry = entry.hstack(&basis);
    }
    grouped.into_iter().map(|(label, basis)| Ok((label, m.restrict(&basis)?))).collect()
}

/// `e_{j,k} M`: the part of `Res M` where `t_n ↦ ζ_r^{k-1}` and `X_n ↦ q^j`, as a
/// module of rank `n − 1`.
pub fn functor_e(m: &FdModule, j: i32, k: usize) -> Result<FdModule, RepError> {
    let n = m.n();
    if n == 0 {
        return Ok(FdModule::zero(m.r(), Composition::whole(0)));
    }
    let found = restrict_branch(m)?.into_iter().find(|s| s.k == k && s.a == j);
    Ok(match found {
        Some(s) => s.lower(),
        None => FdModule::zero(m.r(), Composition::whole(n - 1)),
    })
}

/// `f_{j,k} M` for a module over the quotient with `|λ| = 1`: the `[μ_k^+, γ + ε_j]`
/// block of `Ind(M ⊠ V_k)` to rank `n + 1`, blockwise in `M`.
pub fn functor_f(m: &FdModule, j: i32, k: usize, lambda: &WeightDatum) -> Result<FdModule, RepError> {
    let charge = lambda.single_charge().ok_or_else(|| RepError::Unsupported("f is implemented for |λ| = 1".into()))?;
    let (r, n) = (m.r(), m.n());
    if k == 0 || k > r {
        return Err(RepError::Shape(format!("character index {k} outside 1..={r}")));
    }
    let mut out = FdModule::zero(r, Composition::whole(n + 1));
    if m.dim() == 0 {
        return Ok(out);
    }
    let induced = induce_to_next(m, k, charge)?;
    let pieces = blocks(&induced)?;
    for label in blocks(m)?.keys() {
        let mut gamma = label.gamma.clone();
        *gamma.entry(j).or_insert(0) += 1;
        let target = BlockLabel { mu: label.mu.plus(k - 1), gamma };
        if let Some(piece) = pieces.get(&target) {
            out = out.direct_sum(piece)?;
        }
    }
    Ok(out)
}

/// `Ind_{Y_{r,n} ⊗ ⟨t_{n+1}⟩}^{Y_{r,n+1}} (M ⊠ V_k)` with `X_1 = q^{charge}`.
fn induce_to_next(m: &FdModule, k: usize, charge: i64) -> Result<FdModule, RepError> {
    let (r, n, d) = (m.r(), m.n(), m.dim());
    let id = Matrix::identity(d);
    let blocks = Composition::new(vec![n, 1]);
    let mut t: Vec<Matrix> = (1..=n).map(|j| m.t(j).clone()).collect();
    t.push(Matrix::scalar(d, Scalar::zeta_pow(r as u32, k as i64 - 1)));
    let mut x: Vec<Matrix> = (1..=n).map(|j| m.x(j).clone()).collect();
    let mut x_inv: Vec<Matrix> = (1..=n).map(|j| m.x_inv(j).clone()).collect();
    x.push(id.clone());
    x_inv.push(id);
    let g = (1..=n).map(|i| (i < n).then(|| m.g(i).unwrap().clone())).collect();
    let w = FdModule::new(r, d, blocks, t, x, x_inv, g)?;
    let (t, g) = induce_finite(&w)?;
    let big = d * (n + 1);
    let qq = Scalar::q_minus_qinv();
    let x1 = Matrix::scalar(big, Scalar::q_pow(charge as i32));
    let mut x = vec![x1.clone()];
    let mut x_inv = vec![Matrix::scalar(big, Scalar::q_pow(-charge as i32))];
    for i in 1..=n {
        let e = idempotent(&t[i - 1], &t[i], r);
        let gi = &g[i - 1];
        let gi_inv = gi.sub(&e.scale(&qq));
        x.push(gi.mul(&x[i - 1]).mul(gi));
        x_inv.push(gi_inv.mul(&x_inv[i - 1]).mul(&gi_inv));
    }
    FdModule::new(r, big, Composition::whole(n + 1), t, x, x_inv, g.into_iter().map(Some).collect())
}

fn idempotent(a: &Matrix, b: &Matrix, r: usize) -> Matrix {
    let mut acc = Matrix::zeros(a.rows(), a.rows());
    for s in 0..r as u32 {
        acc = acc.add(&a.pow(s).mul(&b.pow((r as u32 - s) % r as u32)));
    }
    acc.scale(&Scalar::from_ratio(1, r as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::rep::{hom_dim, simple_module};
    use crate::scalars::Specialization;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn simple(parts: &[usize], shapes: &[&[usize]], charge: i64) -> FdModule {
        let shapes: Vec<Partition> = shapes.iter().map(|s| p(s)).collect();
        let l = WeightDatum::from_charges(&[charge]);
        simple_module(&Composition::new(parts.to_vec()), &shapes, &l, Specialization::Generic).unwrap()
    }

    #[test]
    fn branch_examples() {
        let m = simple(&[1, 1], &[&[1], &[1]], 0);
        let labels: Vec<(usize, i32, usize)> = restrict_branch(&m).unwrap().iter().map(|s| (s.k, s.a, s.module.dim())).collect();
        assert_eq!(labels, vec![(1, 0, 1), (2, 0, 1)]);
        let m = simple(&[2], &[&[2]], 0);
        let labels: Vec<(usize, i32)> = restrict_branch(&m).unwrap().iter().map(|s| (s.k, s.a)).collect();
        assert_eq!(labels, vec![(1, 2)]);
        let m = simple(&[0, 1], &[&[], &[1]], 0);
        let b = restrict_branch(&m).unwrap();
        assert_eq!((b.len(), b[0].k, b[0].module.dim()), (1, 2, 1));
    }

    #[test]
    fn content_and_blocks() {
        assert_eq!(content(&[0, 1, 0]), BTreeMap::from([(0, 2), (1, 1)]));
        let a = simple(&[2, 1], &[&[2], &[1]], 0);
        assert_eq!(blocks(&a).unwrap().len(), 1);
        let b = simple(&[2, 1], &[&[1, 1], &[1]], 0);
        let both = blocks(&a.direct_sum(&b).unwrap()).unwrap();
        assert_eq!(both.len(), 2);
        assert_eq!(both.values().map(FdModule::dim).sum::<usize>(), 6);
    }

    #[test]
    fn e_and_f_on_small_modules() {
        let l = WeightDatum::from_charges(&[0]);
        let vacuum = FdModule::vacuum(2);
        let one = functor_f(&vacuum, 0, 2, &l).unwrap();
        assert_eq!(one.dim(), 1);
        assert!(one.check_relations().all_passed());
        assert_eq!(hom_dim(&one, &simple(&[0, 1], &[&[], &[1]], 0)).unwrap(), 1);
        assert_eq!(functor_e(&one, 0, 2).unwrap().dim(), 1);
        assert_eq!(functor_e(&one, 0, 1).unwrap().dim(), 0);
        assert_eq!(functor_f(&vacuum, 1, 1, &l).unwrap().dim(), 0);
        let two = functor_f(&one, 2, 2, &l).unwrap();
        assert!(two.check_relations().all_passed());
        assert_eq!(hom_dim(&two, &simple(&[0, 2], &[&[], &[2]], 0)).unwrap(), 1);
        let mixed = functor_f(&one, 0, 1, &l).unwrap();
        assert_eq!(hom_dim(&mixed, &simple(&[1, 1], &[&[1], &[1]], 0)).unwrap(), 1);
    }
}
