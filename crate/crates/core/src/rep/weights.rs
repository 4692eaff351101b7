use std::collections::BTreeMap;

use serde::Serialize;

use super::eigen::{generalized_kernel, integral_eigenspaces};
use super::module::{FdModule, Subspace};
use super::RepError;
use crate::linalg::Matrix;
use crate::scalars::Scalar;

/// Joint eigenvalue of the torus: `t_j ↦ ζ_r^{chars_j}`, `X_j ↦ q^{exps_j}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Weight {
    pub chars: Vec<usize>,
    pub exps: Vec<i32>,
}

pub(crate) fn eigen_window(n: usize) -> i32 {
    2 * n as i32 + 12
}

/// Generalized eigenspaces of `t` for the eigenvalues `ζ_r^c`, `c = 0..r`.
pub fn character_spaces(t: &Matrix, r: usize) -> Vec<(usize, Matrix)> {
    (0..r).map(|c| (c, generalized_kernel(t, &Scalar::zeta_pow(r as u32, c as i64)))).filter(|(_, k)| k.cols() > 0).collect()
}

/// Splits `m` into simultaneous generalized eigenspaces of `t_1..t_n, X_1..X_n`.
pub fn joint_weights(m: &FdModule) -> Result<Vec<(Weight, Matrix)>, RepError> {
    if m.dim() == 0 {
        return Ok(Vec::new());
    }
    let (n, r) = (m.n(), m.r());
    let mut pieces = vec![(Weight { chars: Vec::new(), exps: Vec::new() }, Matrix::identity(m.dim()))];
    for j in 1..=n {
        let mut next = Vec::new();
        for (w, basis) in pieces {
            let local = Subspace::new(&basis).restrict(m.t(j)).ok_or_else(|| RepError::NotInvariant(format!("t{j}")))?;
            for (c, k) in character_spaces(&local, r) {
                let mut w = w.clone();
                w.chars.push(c);
                next.push((w, basis.mul(&k)));
            }
        }
        pieces = next;
    }
    for j in 1..=n {
        let mut next = Vec::new();
        for (w, basis) in pieces {
            let local = Subspace::new(&basis).restrict(m.x(j)).ok_or_else(|| RepError::NotInvariant(format!("X{j}")))?;
            for (e, k) in integral_eigenspaces(&local, eigen_window(n))? {
                let mut w = w.clone();
                w.exps.push(e);
                next.push((w, basis.mul(&k)));
            }
        }
        pieces = next;
    }
    pieces.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(pieces)
}

/// Isomorphism invariants of a semisimple module: dimension, trace of every
/// generator, and the multiplicity of each joint torus weight (equivalently the
/// traces of all torus monomials).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub dim: usize,
    pub generator_traces: Vec<(String, Scalar)>,
    pub weights: BTreeMap<Weight, usize>,
}

impl Invariants {
    pub fn of(m: &FdModule) -> Result<Self, RepError> {
        let mut weights = BTreeMap::new();
        for (w, basis) in joint_weights(m)? {
            *weights.entry(w).or_insert(0) += basis.cols();
        }
        Ok(Invariants { dim: m.dim(), generator_traces: generator_traces(m), weights })
    }

    /// `tr(t^β X^α)` computed from the weight multiplicities.
    pub fn torus_trace(&self, r: usize, beta: &[i64], alpha: &[i32]) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, &mult) in &self.weights {
            let ch: i64 = w.chars.iter().zip(beta).map(|(&c, &b)| c as i64 * b).sum();
            let ex: i32 = w.exps.iter().zip(alpha).map(|(&e, &a)| e * a).sum();
            let v = Scalar::zeta_pow(r as u32, ch).mul(&Scalar::q_pow(ex));
            acc = acc.add(&v.mul(&Scalar::from_int(mult as i64)));
        }
        acc
    }
}

pub fn generator_traces(m: &FdModule) -> Vec<(String, Scalar)> {
    m.generators().into_iter().map(|(name, a)| (name, a.trace())).collect()
}

/// `dim Hom(M, N)` over the algebra generated by the acting generators.
pub fn hom_dim(m: &FdModule, n: &FdModule) -> Result<usize, RepError> {
    if m.r() != n.r() || m.blocks() != n.blocks() {
        return Err(RepError::Shape("modules over different algebras".into()));
    }
    let (dm, dn) = (m.dim(), n.dim());
    let mut kernel = Matrix::identity(dm * dn);
    let gens_n = n.generators();
    for ((_, a), (_, b)) in m.generators().into_iter().zip(gens_n) {
        if kernel.cols() == 0 {
            break;
        }
        // Φ A = B Φ on the column-major vectorization of Φ (dn × dm)
        let op = a.transpose().kron(&Matrix::identity(dn)).sub(&Matrix::identity(dm).kron(b));
        let coeffs = op.mul(&kernel).nullspace();
        kernel = kernel.mul(&coeffs);
    }
    Ok(kernel.cols())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::seminormal_simple;
    use crate::partition::Partition;
    use crate::scalars::Specialization;

    #[test]
    fn seminormal_weights() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        let m = seminormal_simple(&shape, 0, Specialization::Generic).unwrap();
        let inv = Invariants::of(&m).unwrap();
        let exps: Vec<Vec<i32>> = inv.weights.keys().map(|w| w.exps.clone()).collect();
        assert_eq!(exps, vec![vec![0, -2, 2], vec![0, 2, -2]]);
        assert_eq!(inv.torus_trace(1, &[0, 0, 0], &[0, 1, 0]), m.x(2).trace());
        assert_eq!(hom_dim(&m, &m).unwrap(), 1);
        let other = seminormal_simple(&Partition::new(vec![3]).unwrap(), 0, Specialization::Generic).unwrap();
        assert_eq!(hom_dim(&m, &other).unwrap(), 0);
        assert_eq!(hom_dim(&m.direct_sum(&m).unwrap(), &m).unwrap(), 2);
    }
}
