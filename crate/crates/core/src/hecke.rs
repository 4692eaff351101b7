//! Affine Hecke algebras of type A, identified with the `r = 1` case of the
//! affine Yokonuma–Hecke algebra (`T_i = g_i`, `Y_j = X_j`, `e_i = 1`), their
//! seminormal simple modules at generic `q`, and the eigenspace functors.

use std::fmt;

use crate::ayh::{mult, PbwElement};
use crate::cyclo::WeightDatum;
use crate::linalg::Matrix;
use crate::partition::{content, Partition};
use crate::rep::{generalized_kernel, FdModule, RepError};
use crate::scalars::{Scalar, Specialization};
use crate::symgroup::Composition;

/// Element of the affine Hecke algebra in the normal form `Y^γ T_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement(PbwElement);

impl HeckeElement {
    pub fn one(n: usize) -> Self {
        HeckeElement(PbwElement::one(1, n))
    }

    pub fn t(n: usize, i: usize) -> Self {
        HeckeElement(PbwElement::g(1, n, i))
    }

    /// `Y_j^k`.
    pub fn y_pow(n: usize, j: usize, k: i32) -> Self {
        HeckeElement(PbwElement::x_pow(1, n, j, k))
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        HeckeElement(PbwElement::scalar(1, n, c))
    }

    pub fn from_pbw(a: PbwElement) -> Option<Self> {
        (a.r() == 1).then_some(HeckeElement(a))
    }

    pub fn as_pbw(&self) -> &PbwElement {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        HeckeElement(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        HeckeElement(self.0.sub(&other.0))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        HeckeElement(self.0.scale(c))
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0.to_string().replace('X', "Y").replace('g', "T");
        write!(f, "{s}")
    }
}

pub fn hecke_mult(a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
    HeckeElement(mult(&a.0, &b.0))
}

/// The seminormal simple module of shape `shape` on which `Y_1` acts by `q^charge`.
///
/// Basis: standard tableaux in the order of [`Partition::standard_tableaux`].
/// `Y_j` is diagonal with eigenvalue `q^{charge + 2c}`, `c` the content of the box
/// holding `j`.
pub fn seminormal_simple(shape: &Partition, charge: i64, spec: Specialization) -> Result<FdModule, RepError> {
    if spec != Specialization::Generic {
        return Err(RepError::Unsupported("seminormal forms need generic q".into()));
    }
    let n = shape.size();
    if n == 0 {
        return Ok(FdModule::vacuum(1));
    }
    let tabs = shape.standard_tableaux();
    let dim = tabs.len();
    let index = |t: &Vec<(usize, usize)>| tabs.binary_search(t).expect("standard tableau");
    let y = |t: &Vec<(usize, usize)>, j: usize| Scalar::q_pow((charge + 2 * content(t[j - 1])) as i32);
    let qq = Scalar::q_minus_qinv();

    let mut x = Vec::new();
    let mut x_inv = Vec::new();
    for j in 1..=n {
        let d: Vec<Scalar> = tabs.iter().map(|t| y(t, j)).collect();
        x_inv.push(Matrix::diagonal(&d.iter().map(|v| v.inv().unwrap()).collect::<Vec<_>>()));
        x.push(Matrix::diagonal(&d));
    }
    let mut g = Vec::new();
    for j in 1..n {
        let mut m = Matrix::zeros(dim, dim);
        for (col, t) in tabs.iter().enumerate() {
            let (a_box, b_box) = (t[j - 1], t[j]);
            if a_box.0 == b_box.0 {
                m[(col, col)] = Scalar::q();
            } else if a_box.1 == b_box.1 {
                m[(col, col)] = Scalar::q_pow(-1).neg();
            } else {
                let (a, b) = (y(t, j), y(t, j + 1));
                let diag = qq.mul(&b).div(&b.sub(&a))?;
                m[(col, col)] = diag.clone();
                let mut swapped = t.clone();
                swapped.swap(j - 1, j);
                let row = index(&swapped);
                // j+1 strictly below j: coefficient 1; otherwise the complementary product
                m[(row, col)] = if b_box.0 > a_box.0 { Scalar::one() } else { Scalar::one().add(&qq.mul(&diag)).sub(&diag.mul(&diag)) };
            }
        }
        g.push(Some(m));
    }
    let t = vec![Matrix::identity(dim); n];
    FdModule::new(1, dim, Composition::whole(n), t, x, x_inv, g)
}

/// Regards a module of the cyclotomic Hecke algebra, given by the matrices of
/// `T_1..T_{n-1}` and `Y_1`, as a module of the affine Hecke algebra.
pub fn ev_pullback(t_mats: &[Matrix], y1: &Matrix, lambda: &WeightDatum) -> Result<FdModule, RepError> {
    let n = t_mats.len() + 1;
    let dim = y1.rows();
    let f = lambda.f_of_matrix(y1);
    if !f.is_zero() {
        return Err(RepError::RelationFailure("f_lambda(Y_1) does not vanish".into()));
    }
    let y1_inv = y1.inverse().ok_or_else(|| RepError::RelationFailure("Y_1 is not invertible".into()))?;
    let mut x = vec![y1.clone()];
    let mut x_inv = vec![y1_inv];
    for (i, ti) in t_mats.iter().enumerate() {
        let ti_inv = ti.inverse().ok_or_else(|| RepError::RelationFailure(format!("T{} is not invertible", i + 1)))?;
        x.push(ti.mul(&x[i]).mul(ti));
        x_inv.push(ti_inv.mul(&x_inv[i]).mul(&ti_inv));
    }
    let g = t_mats.iter().cloned().map(Some).collect();
    FdModule::new(1, dim, Composition::whole(n), vec![Matrix::identity(dim); n], x, x_inv, g)
}

/// `Δ_a(M)`: the generalized `a`-eigenspace of `Y_n`, a module over `Ĥ_{n-1} ⊗ Ĥ_1`.
pub fn delta_a(m: &FdModule, a: &Scalar) -> Result<FdModule, RepError> {
    let n = m.n();
    if n == 0 {
        return Err(RepError::Shape("no Y_n on a rank-zero module".into()));
    }
    let coarse = m.restrict_blocks(Composition::new(vec![n - 1, 1]))?;
    if m.dim() == 0 {
        return Ok(coarse);
    }
    let kernel = generalized_kernel(m.x(n), a);
    coarse.restrict(&kernel)
}

/// `e_a M`: `Δ_a(M)` restricted to `Ĥ_{n-1}`.
pub fn e_a(m: &FdModule, a: &Scalar) -> Result<FdModule, RepError> {
    Ok(delta_a(m, a)?.drop_last_point())
}

/// Modules of `Ĥ_{μ_1} ⊗ ⋯ ⊗ Ĥ_{μ_r}` as modules with blocks `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorHeckeModule {
    pub mu: Composition,
    pub module: FdModule,
    pub factors: Option<Vec<FdModule>>,
}

impl TensorHeckeModule {
    /// The outer tensor product of one module per block.
    pub fn tensor(mu: &Composition, factors: Vec<FdModule>) -> Result<Self, RepError> {
        if factors.len() != mu.r() {
            return Err(RepError::Shape(format!("{} factors for {} blocks", factors.len(), mu.r())));
        }
        for (k, f) in factors.iter().enumerate() {
            if f.r() != 1 || f.n() != mu.parts()[k] || !f.is_full() {
                return Err(RepError::Shape(format!("factor {} is not a module of the rank-{} Hecke algebra", k + 1, mu.parts()[k])));
            }
        }
        let dims: Vec<usize> = factors.iter().map(FdModule::dim).collect();
        let dim: usize = dims.iter().product();
        let embed = |k: usize, a: &Matrix| {
            let left: usize = dims[..k].iter().product();
            let right: usize = dims[k + 1..].iter().product();
            Matrix::identity(left).kron(a).kron(&Matrix::identity(right))
        };
        let n = mu.n();
        let mut x = Vec::new();
        let mut x_inv = Vec::new();
        let mut internal = Vec::new();
        for (k, f) in factors.iter().enumerate() {
            for j in 1..=f.n() {
                x.push(embed(k, f.x(j)));
                x_inv.push(embed(k, f.x_inv(j)));
            }
            internal.extend((1..f.n()).map(|i| embed(k, f.g(i).unwrap())));
        }
        let mut internal = internal.into_iter();
        let g = (1..n).map(|i| if mu.is_internal(i) { internal.next() } else { None }).collect();
        let module = FdModule::new(1, dim, mu.clone(), vec![Matrix::identity(dim); n], x, x_inv, g)?;
        Ok(TensorHeckeModule { mu: mu.clone(), module, factors: Some(factors) })
    }

    pub fn from_module(mu: &Composition, module: FdModule) -> Result<Self, RepError> {
        if module.r() != 1 || module.blocks() != mu {
            return Err(RepError::Shape("module is not over the tensor Hecke algebra of mu".into()));
        }
        Ok(TensorHeckeModule { mu: mu.clone(), module, factors: None })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hecke_products() {
        let t1 = HeckeElement::t(2, 1);
        let expected = HeckeElement::one(2).add(&t1.scale(&Scalar::q_minus_qinv()));
        assert_eq!(hecke_mult(&t1, &t1), expected);
        let y1 = HeckeElement::y_pow(2, 1, 1);
        let y2 = HeckeElement::y_pow(2, 2, 1);
        assert_eq!(hecke_mult(&hecke_mult(&t1, &y1), &t1), y2);
        assert!(hecke_mult(&y1, &y2).sub(&hecke_mult(&y2, &y1)).is_zero());
    }

    #[test]
    fn seminormal_small() {
        let m = seminormal_simple(&p(&[2]), 0, Specialization::Generic).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.g(1).unwrap()[(0, 0)], Scalar::q());
        let m = seminormal_simple(&p(&[1, 1]), 0, Specialization::Generic).unwrap();
        assert_eq!(m.g(1).unwrap()[(0, 0)], Scalar::q_pow(-1).neg());
        assert_eq!(seminormal_simple(&p(&[2, 1]), 0, Specialization::Generic).unwrap().dim(), 2);
        assert!(seminormal_simple(&p(&[2]), 0, Specialization::root_of_unity(3)).is_err());
    }

    #[test]
    fn seminormal_relations() {
        for n in 1..=4 {
            for shape in Partition::all(n) {
                for charge in [0, 1] {
                    let m = seminormal_simple(&shape, charge, Specialization::Generic).unwrap();
                    let rep = m.check_relations();
                    assert!(rep.all_passed(), "{shape} charge {charge}\n{rep}");
                }
            }
        }
    }

    #[test]
    fn pullback_matches_seminormal() {
        let lambda = WeightDatum::from_charges(&[0]);
        let m = seminormal_simple(&p(&[2]), 0, Specialization::Generic).unwrap();
        let pulled = ev_pullback(&[m.g(1).unwrap().clone()], m.x(1), &lambda).unwrap();
        assert_eq!(pulled.x(2)[(0, 0)], Scalar::q_pow(2));
        let m = seminormal_simple(&p(&[3, 1]), 0, Specialization::Generic).unwrap();
        let ts: Vec<Matrix> = (1..4).map(|i| m.g(i).unwrap().clone()).collect();
        assert_eq!(ev_pullback(&ts, m.x(1), &lambda).unwrap(), m);
        let wrong = WeightDatum::from_charges(&[1]);
        assert!(ev_pullback(&ts, m.x(1), &wrong).is_err());
    }

    #[test]
    fn eigenspace_slices() {
        let m = seminormal_simple(&p(&[2, 1]), 0, Specialization::Generic).unwrap();
        assert_eq!(e_a(&m, &Scalar::q_pow(2)).unwrap().dim(), 1);
        assert_eq!(e_a(&m, &Scalar::q_pow(-2)).unwrap().dim(), 1);
        assert_eq!(e_a(&m, &Scalar::q_pow(4)).unwrap().dim(), 0);
        let two = seminormal_simple(&p(&[2]), 0, Specialization::Generic).unwrap();
        let d = delta_a(&two, &Scalar::q_pow(2)).unwrap();
        assert_eq!(d.dim(), 1);
        assert_eq!(d.blocks(), &Composition::new(vec![1, 1]));
    }

    #[test]
    fn tensor_products() {
        let a = seminormal_simple(&p(&[2, 1]), 0, Specialization::Generic).unwrap();
        let b = seminormal_simple(&p(&[1, 1]), 0, Specialization::Generic).unwrap();
        let mu = Composition::new(vec![3, 0, 2]);
        let t = TensorHeckeModule::tensor(&mu, vec![a, FdModule::vacuum(1), b]).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(t.module.check_relations().all_passed());
        assert!(t.module.g(3).is_none());
    }
}
