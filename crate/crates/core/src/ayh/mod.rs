//! The affine Yokonuma–Hecke algebra in PBW normal form `X^α t^β g_w`.

mod center;
mod checks;
mod element;
mod mult;

pub use center::{expand_left_cosets, is_central, orbit_sum, symmetrize};
pub use checks::{check_relations, check_theta, check_xggx, derived_x, random_laurent};
pub use element::{PbwElement, PbwMonomial, TermJson};
pub use mult::{divided_difference, g_word_times, mult, try_mult};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AyhError {
    #[error("rank mismatch: ({0}, {1}) vs ({2}, {3})")]
    RankMismatch(usize, usize, usize, usize),
    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("support size {size} exceeds the limit {limit}")]
    SupportExceeded { size: usize, limit: usize },
    #[error("n = {n} exceeds the limit {limit}")]
    RankTooLarge { n: usize, limit: usize },
    #[error("{0}")]
    Invalid(String),
}

/// Limits on rewriting blowup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub max_support: usize,
    pub max_n: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { max_support: 200_000, max_n: 6 }
    }
}

impl Guard {
    pub fn unlimited() -> Self {
        Guard { max_support: usize::MAX, max_n: usize::MAX }
    }

    pub fn check_support(&self, size: usize) -> Result<(), AyhError> {
        if size > self.max_support {
            return Err(AyhError::SupportExceeded { size, limit: self.max_support });
        }
        Ok(())
    }

    pub fn check_n(&self, n: usize) -> Result<(), AyhError> {
        if n > self.max_n {
            return Err(AyhError::RankTooLarge { n, limit: self.max_n });
        }
        Ok(())
    }
}

/// Generator kinds accepted by [`gen`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    T,
    X,
    XInv,
    G,
    GInv,
    E,
    Theta,
}

/// A single generator in normal form.
pub fn gen(r: usize, n: usize, kind: Gen, index: usize) -> Result<PbwElement, AyhError> {
    let point = |j: usize| if j >= 1 && j <= n { Ok(()) } else { Err(AyhError::IndexOutOfRange { index: j, n }) };
    let simple = |i: usize| if i >= 1 && i < n { Ok(()) } else { Err(AyhError::IndexOutOfRange { index: i, n }) };
    match kind {
        Gen::T => point(index).map(|_| PbwElement::t(r, n, index)),
        Gen::X => point(index).map(|_| PbwElement::x_pow(r, n, index, 1)),
        Gen::XInv => point(index).map(|_| PbwElement::x_pow(r, n, index, -1)),
        Gen::G => simple(index).map(|_| PbwElement::g(r, n, index)),
        Gen::GInv => simple(index).map(|_| PbwElement::g_inv(r, n, index)),
        Gen::E => simple(index).map(|_| PbwElement::e(r, n, index)),
        Gen::Theta => simple(index).map(|_| PbwElement::theta(r, n, index)),
    }
}
