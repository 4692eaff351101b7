use std::collections::BTreeMap;

use serde::Serialize;

use super::functors::{morita_f, morita_g};
use super::module::FdModule;
use super::weights::generator_traces;
use super::RepError;
use crate::cyclo::WeightDatum;
use crate::hecke::{e_a, seminormal_simple};
use crate::partition::Partition;
use crate::rep::integral_eigenspaces;
use crate::scalars::{Scalar, Specialization};
use crate::symgroup::Composition;

/// Round trip of `F` and `G` on one module, compared by dimension and generator traces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoritaCheck {
    pub dim: usize,
    /// `G(F(N)) ≅ N` on the invariants.
    pub gf: bool,
    /// `F(G(P)) ≅ P` on the invariants, slice by slice, for `P = F(N)`.
    pub fg: bool,
    /// `f_λ(X_1) = 0` on `N`.
    pub cyclotomic_y: bool,
    /// `f_λ(Y_{μ̄^k + 1}) = 0` on every nonzero slice `F(N)_μ` and every block `k`.
    pub cyclotomic_h: bool,
}

impl MoritaCheck {
    pub fn passed(&self) -> bool {
        self.gf && self.fg && self.cyclotomic_y == self.cyclotomic_h
    }
}

fn same_traces(a: &FdModule, b: &FdModule) -> bool {
    a.dim() == b.dim() && generator_traces(a) == generator_traces(b)
}

pub fn morita_check(n: &FdModule, lambda: &WeightDatum) -> Result<MoritaCheck, RepError> {
    let (r, rank) = (n.r(), n.n());
    let p = morita_f(n)?;
    let gp = morita_g(&p, r, rank)?;
    let fgp = morita_f(&gp)?;
    let fg = p.iter().all(|(mu, piece)| fgp.get(mu).is_some_and(|other| same_traces(&piece.module, &other.module)));
    let cyclotomic_y = rank == 0 || lambda.f_of_matrix(n.x(1)).is_zero();
    let mut cyclotomic_h = true;
    for (mu, piece) in &p {
        for (k, &m) in mu.parts().iter().enumerate() {
            if m > 0 && piece.dim() > 0 {
                let pos = mu.partial_sum(k) + 1;
                cyclotomic_h &= lambda.f_of_matrix(piece.module.x(pos)).is_zero();
            }
        }
    }
    Ok(MoritaCheck { dim: n.dim(), gf: same_traces(n, &gp), fg, cyclotomic_y, cyclotomic_h })
}

/// Dimensions of the restriction summands of `S_μ(L.)` predicted from the Hecke
/// side: `(k, a) ↦ [μ_k^- cosets] · dim e_{q^a} L_k · Π_{k' ≠ k} dim L_{k'}`.
pub fn predicted_branch_dims(mu: &Composition, shapes: &[Partition], charge: i64) -> Result<BTreeMap<(usize, i32), usize>, RepError> {
    let factors = shapes.iter().map(|s| seminormal_simple(s, charge, Specialization::Generic)).collect::<Result<Vec<_>, _>>()?;
    let mut out = BTreeMap::new();
    for (k, lk) in factors.iter().enumerate() {
        let Some(lower) = mu.minus(k) else { continue };
        let others: usize = factors.iter().enumerate().filter(|(o, _)| *o != k).map(|(_, f)| f.dim()).product();
        let window = 2 * mu.n() as i32 + 2 * charge.unsigned_abs() as i32 + 4;
        for (a, _) in integral_eigenspaces(lk.x(lk.n()), window)? {
            let slice = e_a(lk, &Scalar::q_pow(a))?;
            out.insert((k + 1, a), lower.index() * slice.dim() * others);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{restrict_branch, simple_module};

    #[test]
    fn round_trip_and_prediction() {
        let mu = Composition::new(vec![2, 1]);
        let shapes = vec![Partition::new(vec![1, 1]).unwrap(), Partition::new(vec![1]).unwrap()];
        let l = WeightDatum::from_charges(&[0]);
        let s = simple_module(&mu, &shapes, &l, Specialization::Generic).unwrap();
        let check = morita_check(&s, &l).unwrap();
        assert!(check.passed() && check.cyclotomic_y, "{check:?}");
        let other = WeightDatum::from_charges(&[1]);
        let check = morita_check(&s, &other).unwrap();
        assert!(check.passed() && !check.cyclotomic_y);
        let predicted = predicted_branch_dims(&mu, &shapes, 0).unwrap();
        let actual: BTreeMap<(usize, i32), usize> = restrict_branch(&s).unwrap().iter().map(|b| ((b.k, b.a), b.module.dim())).collect();
        assert_eq!(predicted, actual);
    }
}
