use std::collections::BTreeMap;

use serde::Serialize;

use super::RepError;
use crate::ayh::PbwElement;
use crate::linalg::Matrix;
use crate::report::RelationReport;
use crate::scalars::Scalar;
use crate::symgroup::{Composition, Perm};

/// A finite-dimensional module over the affine algebra, or over the subalgebra
/// where only `g_i` with `i`, `i+1` in the same block of `blocks` act.
///
/// With `r = 1` this is a module over the affine Hecke algebra (or a tensor
/// product of them), with `g_i` playing `T_i` and `X_j` playing `Y_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdModule {
    r: usize,
    dim: usize,
    blocks: Composition,
    t: Vec<Matrix>,
    x: Vec<Matrix>,
    x_inv: Vec<Matrix>,
    g: Vec<Option<Matrix>>,
}

impl FdModule {
    pub fn new(
        r: usize,
        dim: usize,
        blocks: Composition,
        t: Vec<Matrix>,
        x: Vec<Matrix>,
        x_inv: Vec<Matrix>,
        g: Vec<Option<Matrix>>,
    ) -> Result<Self, RepError> {
        let n = blocks.n();
        if t.len() != n || x.len() != n || x_inv.len() != n || g.len() != n.saturating_sub(1) {
            return Err(RepError::Shape(format!("expected {n} torus generators and {} g's", n.saturating_sub(1))));
        }
        for m in t.iter().chain(&x).chain(&x_inv).chain(g.iter().flatten()) {
            if m.rows() != dim || m.cols() != dim {
                return Err(RepError::Shape(format!("generator is {}x{}, expected {dim}x{dim}", m.rows(), m.cols())));
            }
        }
        for (k, gi) in g.iter().enumerate() {
            if gi.is_some() != blocks.is_internal(k + 1) {
                return Err(RepError::Shape(format!("g{} presence does not match blocks {blocks}", k + 1)));
            }
        }
        Ok(FdModule { r, dim, blocks, t, x, x_inv, g })
    }

    /// The zero module.
    pub fn zero(r: usize, blocks: Composition) -> Self {
        Self::scalar_torus(r, blocks, 0)
    }

    /// The one-dimensional module of rank `n = 0`.
    pub fn vacuum(r: usize) -> Self {
        Self::scalar_torus(r, Composition::whole(0), 1)
    }

    fn scalar_torus(r: usize, blocks: Composition, dim: usize) -> Self {
        let n = blocks.n();
        let z = Matrix::identity(dim);
        let g = (1..n).map(|i| blocks.is_internal(i).then(|| z.clone())).collect();
        FdModule { r, dim, blocks, t: vec![z.clone(); n], x: vec![z.clone(); n], x_inv: vec![z; n], g }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.blocks.n()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn blocks(&self) -> &Composition {
        &self.blocks
    }

    /// `true` for modules over the full algebra.
    pub fn is_full(&self) -> bool {
        self.g.iter().all(Option::is_some)
    }

    pub fn t(&self, j: usize) -> &Matrix {
        &self.t[j - 1]
    }

    pub fn x(&self, j: usize) -> &Matrix {
        &self.x[j - 1]
    }

    pub fn x_inv(&self, j: usize) -> &Matrix {
        &self.x_inv[j - 1]
    }

    pub fn g(&self, i: usize) -> Option<&Matrix> {
        self.g.get(i.wrapping_sub(1)).and_then(Option::as_ref)
    }

    /// `t_j^s` for any integer `s`.
    pub fn t_pow(&self, j: usize, s: i64) -> Matrix {
        self.t(j).pow(s.rem_euclid(self.r as i64) as u32)
    }

    /// `X_j^k` for any integer `k`.
    pub fn x_pow(&self, j: usize, k: i32) -> Matrix {
        if k >= 0 {
            self.x(j).pow(k as u32)
        } else {
            self.x_inv(j).pow((-k) as u32)
        }
    }

    /// `e_{j,k}`.
    pub fn e_matrix(&self, j: usize, k: usize) -> Matrix {
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for s in 0..self.r as i64 {
            acc = acc.add(&self.t_pow(j, s).mul(&self.t_pow(k, -s)));
        }
        acc.scale(&Scalar::from_ratio(1, self.r as i64))
    }

    /// `g_w` along a reduced word; `None` if some letter does not act.
    pub fn g_w(&self, w: &Perm) -> Option<Matrix> {
        let mut acc = Matrix::identity(self.dim);
        for i in w.reduced_word() {
            acc = acc.mul(self.g(i)?);
        }
        Some(acc)
    }

    /// Matrix of an algebra element.
    pub fn act(&self, a: &PbwElement) -> Result<Matrix, RepError> {
        if a.r() != self.r || a.n() != self.n() {
            return Err(RepError::Shape(format!("element of rank ({}, {}) on a module of rank ({}, {})", a.r(), a.n(), self.r, self.n())));
        }
        let mut by_w: BTreeMap<&Perm, Vec<_>> = BTreeMap::new();
        for (m, c) in a.terms() {
            by_w.entry(&m.w).or_default().push((m, c));
        }
        let mut out = Matrix::zeros(self.dim, self.dim);
        let mut xcache: BTreeMap<(usize, i32), Matrix> = BTreeMap::new();
        for (w, terms) in by_w {
            let gw = self.g_w(w).ok_or_else(|| RepError::Unsupported(format!("g{w} does not act on a module over blocks {}", self.blocks)))?;
            let mut torus = Matrix::zeros(self.dim, self.dim);
            for (m, c) in terms {
                let mut acc = Matrix::scalar(self.dim, c.clone());
                for (j, &k) in m.alpha.iter().enumerate() {
                    if k != 0 {
                        let xm = xcache.entry((j + 1, k)).or_insert_with(|| self.x_pow(j + 1, k));
                        acc = acc.mul(xm);
                    }
                }
                for (j, &b) in m.beta.iter().enumerate() {
                    if b != 0 {
                        acc = acc.mul(&self.t_pow(j + 1, b as i64));
                    }
                }
                torus = torus.add(&acc);
            }
            out = out.add(&torus.mul(&gw));
        }
        Ok(out)
    }

    /// Named generators in a fixed order: `t_j`, `X_j`, `X_j^-1`, then the acting `g_i`.
    pub fn generators(&self) -> Vec<(String, &Matrix)> {
        let n = self.n();
        let mut out: Vec<(String, &Matrix)> = Vec::new();
        out.extend((1..=n).map(|j| (format!("t{j}"), self.t(j))));
        out.extend((1..=n).map(|j| (format!("X{j}"), self.x(j))));
        out.extend((1..=n).map(|j| (format!("X{j}^-1"), self.x_inv(j))));
        out.extend((1..n).filter_map(|i| self.g(i).map(|m| (format!("g{i}"), m))));
        out
    }

    /// Applies `f` to every generator matrix.
    pub fn map_matrices(&self, dim: usize, f: impl Fn(&Matrix) -> Matrix) -> FdModule {
        FdModule {
            r: self.r,
            dim,
            blocks: self.blocks.clone(),
            t: self.t.iter().map(&f).collect(),
            x: self.x.iter().map(&f).collect(),
            x_inv: self.x_inv.iter().map(&f).collect(),
            g: self.g.iter().map(|m| m.as_ref().map(&f)).collect(),
        }
    }

    /// The submodule spanned by the columns of `basis` (independent), if it is invariant.
    pub fn restrict(&self, basis: &Matrix) -> Result<FdModule, RepError> {
        if basis.cols() == 0 {
            return Ok(FdModule::zero(self.r, self.blocks.clone()));
        }
        let coords = Subspace::new(basis);
        let res = |name: String, m: &Matrix| coords.restrict(m).ok_or(RepError::NotInvariant(name));
        let n = self.n();
        let t = (1..=n).map(|j| res(format!("t{j}"), self.t(j))).collect::<Result<_, _>>()?;
        let x = (1..=n).map(|j| res(format!("X{j}"), self.x(j))).collect::<Result<_, _>>()?;
        let x_inv = (1..=n).map(|j| res(format!("X{j}^-1"), self.x_inv(j))).collect::<Result<_, _>>()?;
        let g = (1..n).map(|i| self.g(i).map(|m| res(format!("g{i}"), m)).transpose()).collect::<Result<_, _>>()?;
        Ok(FdModule { r: self.r, dim: basis.cols(), blocks: self.blocks.clone(), t, x, x_inv, g })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &FdModule) -> Result<FdModule, RepError> {
        if self.r != other.r || self.blocks != other.blocks {
            return Err(RepError::Shape("direct sum of modules over different algebras".into()));
        }
        let ds = |a: &Matrix, b: &Matrix| a.direct_sum(b);
        Ok(FdModule {
            r: self.r,
            dim: self.dim + other.dim,
            blocks: self.blocks.clone(),
            t: self.t.iter().zip(&other.t).map(|(a, b)| ds(a, b)).collect(),
            x: self.x.iter().zip(&other.x).map(|(a, b)| ds(a, b)).collect(),
            x_inv: self.x_inv.iter().zip(&other.x_inv).map(|(a, b)| ds(a, b)).collect(),
            g: self.g.iter().zip(&other.g).map(|(a, b)| a.as_ref().zip(b.as_ref()).map(|(a, b)| ds(a, b))).collect(),
        })
    }

    /// Same matrices regarded over a coarser set of blocks (fewer `g_i` act).
    pub fn restrict_blocks(&self, blocks: Composition) -> Result<FdModule, RepError> {
        if blocks.n() != self.n() {
            return Err(RepError::Shape("blocks of a different size".into()));
        }
        let mut g = Vec::new();
        for i in 1..self.n() {
            if blocks.is_internal(i) {
                g.push(Some(self.g(i).cloned().ok_or_else(|| RepError::Unsupported(format!("g{i} does not act")))?));
            } else {
                g.push(None);
            }
        }
        Ok(FdModule { g, blocks, ..self.clone() })
    }

    /// Forgets `t_n`, `X_n^{±1}` and `g_{n-1}`. The last block must be a single point.
    pub fn drop_last_point(&self) -> FdModule {
        let n = self.n();
        let mut parts = self.blocks.parts().to_vec();
        let last = parts.iter().rposition(|&p| p > 0).expect("nonempty blocks");
        parts[last] -= 1;
        let blocks = Composition::new(parts);
        let mut g = self.g.clone();
        g.truncate(n.saturating_sub(2));
        FdModule {
            r: self.r,
            dim: self.dim,
            t: self.t[..n - 1].to_vec(),
            x: self.x[..n - 1].to_vec(),
            x_inv: self.x_inv[..n - 1].to_vec(),
            g,
            blocks,
        }
    }

    /// Every defining relation as an exact matrix identity.
    pub fn check_relations(&self) -> RelationReport {
        let n = self.n();
        let mut rep = RelationReport::new(self.r, n);
        let id = Matrix::identity(self.dim);
        let qq = Scalar::q_minus_qinv();
        let acting: Vec<usize> = (1..n).filter(|&i| self.g(i).is_some()).collect();
        for &i in &acting {
            for &j in acting.iter().filter(|&&j| j >= i + 2) {
                let (a, b) = (self.g(i).unwrap(), self.g(j).unwrap());
                rep.record("far-commutation", || format!("g{i} g{j}"), a.mul(b) == b.mul(a));
            }
        }
        for &i in &acting {
            if let (Some(a), Some(b)) = (self.g(i), self.g(i + 1)) {
                rep.record("braid", || format!("g{i} g{}", i + 1), a.mul(b).mul(a) == b.mul(a).mul(b));
            }
        }
        let mut torus: Vec<(String, &Matrix)> = (1..=n).map(|j| (format!("t{j}"), self.t(j))).collect();
        torus.extend((1..=n).map(|j| (format!("X{j}"), self.x(j))));
        for (a, (na, ma)) in torus.iter().enumerate() {
            for (nb, mb) in torus.iter().skip(a + 1) {
                rep.record("torus-x-commutation", || format!("{na} {nb}"), ma.mul(mb) == mb.mul(ma));
            }
        }
        for j in 1..=n {
            rep.record("t-order", || format!("t{j}^{}", self.r), self.t(j).pow(self.r as u32) == id);
            rep.record("x-inverse", || format!("X{j} X{j}^-1"), self.x(j).mul(self.x_inv(j)) == id);
        }
        for &i in &acting {
            let gi = self.g(i).unwrap();
            let s = Perm::simple(n, i).unwrap();
            for j in 1..=n {
                rep.record("g-t", || format!("g{i} t{j}"), gi.mul(self.t(j)) == self.t(s.apply(j)).mul(gi));
            }
            let rhs = id.add(&self.e_matrix(i, i + 1).mul(gi).scale(&qq));
            rep.record("quadratic", || format!("g{i}^2"), gi.mul(gi) == rhs);
            rep.record("x-recursion", || format!("g{i} X{i} g{i}"), gi.mul(self.x(i)).mul(gi) == *self.x(i + 1));
            for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                rep.record("g-x-far", || format!("g{i} X{j}"), gi.mul(self.x(j)) == self.x(j).mul(gi));
            }
        }
        rep
    }

    pub fn to_json(&self) -> ModuleJson {
        let mut generators = BTreeMap::new();
        for (name, m) in self.generators() {
            generators.insert(name, m.clone());
        }
        ModuleJson { r: self.r, n: self.n(), blocks: self.blocks.parts().to_vec(), dim: self.dim, generators }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleJson {
    pub r: usize,
    pub n: usize,
    pub blocks: Vec<usize>,
    pub dim: usize,
    pub generators: BTreeMap<String, Matrix>,
}

/// Coordinates with respect to a basis of a subspace, via an invertible
/// square block of selected rows.
pub struct Subspace {
    basis: Matrix,
    rows: Vec<usize>,
    inv: Matrix,
}

impl Subspace {
    pub fn new(basis: &Matrix) -> Self {
        let (_, rows) = basis.transpose().rref();
        assert_eq!(rows.len(), basis.cols(), "basis columns must be independent");
        let all: Vec<usize> = (0..basis.cols()).collect();
        let inv = basis.submatrix(&rows, &all).inverse().expect("pivot block is invertible");
        Subspace { basis: basis.clone(), rows, inv }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Coordinates of the columns of `v`, if they lie in the subspace.
    pub fn coords(&self, v: &Matrix) -> Option<Matrix> {
        let all: Vec<usize> = (0..v.cols()).collect();
        let c = self.inv.mul(&v.submatrix(&self.rows, &all));
        (self.basis.mul(&c) == *v).then_some(c)
    }

    /// Matrix of `m` on the subspace, if it is invariant.
    pub fn restrict(&self, m: &Matrix) -> Option<Matrix> {
        self.coords(&m.mul(&self.basis))
    }
}
